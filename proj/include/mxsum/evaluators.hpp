#pragma once

#include "mxsum/algebraic.hpp"
#include "mxsum/bessel_tail.hpp"
#include "mxsum/branch_integrals.hpp"
#include "mxsum/direct_sum.hpp"
#include "mxsum/params.hpp"
#include "mxsum/representations.hpp"
