#pragma once

#include "mxsum/coefficients.hpp"
#include "mxsum/evaluators.hpp"
#include "mxsum/harness.hpp"
#include "mxsum/numeric.hpp"
