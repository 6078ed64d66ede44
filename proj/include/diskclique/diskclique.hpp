#pragma once

#include "bipartite_mis.hpp"
#include "clique_oracle.hpp"
#include "co_cycles.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "parity_audit.hpp"
#include "rational.hpp"
#include "solver.hpp"
#include "svg.hpp"
#include "triangles.hpp"
