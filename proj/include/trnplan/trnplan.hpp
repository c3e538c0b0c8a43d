#pragma once

// Reliability-aware trusted-repeater planning for QKD optical networks:
// topology handling, reliability-weighted graphs, centrality scoring,
// Monte Carlo ranking and shortest-path coverage evaluation.

#include "trnplan/centrality.hpp"
#include "trnplan/errors.hpp"
#include "trnplan/evaluation.hpp"
#include "trnplan/numeric.hpp"
#include "trnplan/placement.hpp"
#include "trnplan/report.hpp"
#include "trnplan/rng.hpp"
#include "trnplan/svg.hpp"
#include "trnplan/topology.hpp"
#include "trnplan/version.hpp"
#include "trnplan/weighting.hpp"
