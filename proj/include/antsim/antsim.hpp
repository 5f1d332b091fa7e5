#pragma once

// Umbrella header for the simulation library. The CLI front end lives in
// antsim/cli.hpp and is not pulled in here.

#include "antsim/common.hpp"
#include "antsim/diagnostics.hpp"
#include "antsim/fluxes.hpp"
#include "antsim/grid.hpp"
#include "antsim/model.hpp"
#include "antsim/output.hpp"
#include "antsim/reactions.hpp"
#include "antsim/runner.hpp"
#include "antsim/scenario.hpp"
#include "antsim/stepper.hpp"
#include "antsim/version.hpp"
