#pragma once

#include "gorenstein/base_polytope.hpp"
#include "gorenstein/canonical.hpp"
#include "gorenstein/census.hpp"
#include "gorenstein/connectivity.hpp"
#include "gorenstein/constructions.hpp"
#include "gorenstein/gorenstein_check.hpp"
#include "gorenstein/graphic_matroid.hpp"
#include "gorenstein/hull.hpp"
#include "gorenstein/json_io.hpp"
#include "gorenstein/lattice.hpp"
#include "gorenstein/multigraph.hpp"
#include "gorenstein/spanning_trees.hpp"
