#pragma once

#include "hyperslide/cell.hpp"
#include "hyperslide/configuration.hpp"
#include "hyperslide/error.hpp"
#include "hyperslide/generator.hpp"
#include "hyperslide/graph.hpp"
#include "hyperslide/io.hpp"
#include "hyperslide/kinematics.hpp"
#include "hyperslide/lattice.hpp"
#include "hyperslide/oracle.hpp"
#include "hyperslide/planner.hpp"
#include "hyperslide/stats.hpp"
