#pragma once

#include "cfgeo/census.hpp"
#include "cfgeo/error.hpp"
#include "cfgeo/exact_cover.hpp"
#include "cfgeo/gadgets.hpp"
#include "cfgeo/generators.hpp"
#include "cfgeo/geometry.hpp"
#include "cfgeo/graph.hpp"
#include "cfgeo/io.hpp"
#include "cfgeo/rational.hpp"
#include "cfgeo/reduction.hpp"
#include "cfgeo/solver.hpp"
#include "cfgeo/strip_coloring.hpp"
#include "cfgeo/structure.hpp"
#include "cfgeo/svg.hpp"
