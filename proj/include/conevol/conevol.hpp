#pragma once

// Umbrella header: exact cone volume measures of polytopes, subspace
// concentration audits, equality-case diagnosis, and the pyramid-lift
// bound chain, all in exact rational arithmetic.

#include "conevol/cone_measure.hpp"
#include "conevol/errors.hpp"
#include "conevol/generator.hpp"
#include "conevol/json_io.hpp"
#include "conevol/lifting.hpp"
#include "conevol/linalg.hpp"
#include "conevol/oracle.hpp"
#include "conevol/polytope.hpp"
#include "conevol/rational.hpp"
#include "conevol/splitmix64.hpp"
#include "conevol/subspace.hpp"
