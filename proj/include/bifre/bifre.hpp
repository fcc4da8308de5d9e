#pragma once

// Umbrella header for the exact bipolar max-product solver library.

#include "bifre/algebra.hpp"
#include "bifre/errors.hpp"
#include "bifre/fre.hpp"
#include "bifre/io.hpp"
#include "bifre/oracle.hpp"
#include "bifre/single.hpp"
#include "bifre/system.hpp"
#include "bifre/system_solver.hpp"
#include "bifre/unit_rational.hpp"
#include "bifre/verdict.hpp"
