#pragma once

#include "mxsum/harness/checks.hpp"
#include "mxsum/harness/parallel.hpp"
#include "mxsum/harness/report.hpp"
#include "mxsum/harness/tables.hpp"
