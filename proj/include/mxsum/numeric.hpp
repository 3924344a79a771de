#pragma once

#include "mxsum/bessel_k.hpp"
#include "mxsum/errors.hpp"
#include "mxsum/hurwitz_zeta.hpp"
#include "mxsum/hypergeometric.hpp"
#include "mxsum/quadrature.hpp"
#include "mxsum/special.hpp"
#include "mxsum/summation.hpp"
