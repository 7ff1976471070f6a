// Umbrella header.
#pragma once

#include "spinsq/core.hpp"
#include "spinsq/dicke.hpp"
#include "spinsq/families.hpp"
#include "spinsq/oracle.hpp"
#include "spinsq/pairwise.hpp"
#include "spinsq/smallmat.hpp"
#include "spinsq/squeezing.hpp"
#include "spinsq/state_io.hpp"
#include "spinsq/sweep.hpp"
