#pragma once

// Umbrella header: exact reduction of Mordell-Tornheim zeta values to
// multiple zeta values, convergence certificates, exact truncation oracles,
// and certified floating-point evaluation.

#include "mtzeta/convergence.hpp"
#include "mtzeta/evaluate.hpp"
#include "mtzeta/format.hpp"
#include "mtzeta/indices.hpp"
#include "mtzeta/literal.hpp"
#include "mtzeta/partial_fraction.hpp"
#include "mtzeta/rational.hpp"
#include "mtzeta/reduce.hpp"
#include "mtzeta/term_map.hpp"
