#pragma once

#include "sgeo/rational.hpp"
#include "sgeo/graph.hpp"
#include "sgeo/graph_json.hpp"
#include "sgeo/isomorphism.hpp"
#include "sgeo/planarity.hpp"
#include "sgeo/steiner.hpp"
#include "sgeo/walk.hpp"
#include "sgeo/shortcut_tree.hpp"
#include "sgeo/geodesic.hpp"
#include "sgeo/simplex.hpp"
#include "sgeo/topology.hpp"
#include "sgeo/shortcut_search.hpp"
#include "sgeo/cycle_shapes.hpp"
#include "sgeo/constructions.hpp"
#include "sgeo/cyclespace.hpp"
#include "sgeo/random_graphs.hpp"
#include "sgeo/paper_verify.hpp"
