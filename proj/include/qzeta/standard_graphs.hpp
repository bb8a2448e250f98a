#pragma once

#include "qzeta/graph.hpp"

namespace qzeta {

// Unit-weight constructions of the small graphs used by the built-in
// verification suite and the documentation examples.

// Path on n vertices (n - 1 edges); n = 2 is the single edge.
Graph make_path(int n);

// Cycle C_n, n >= 3.
Graph make_cycle(int n);

// Complete graph K_n.
Graph make_complete(int n);

// Complete bipartite graph K_{a,b}.
Graph make_complete_bipartite(int a, int b);

// The Petersen graph (3-regular, 10 vertices, girth 5).
Graph make_petersen();

}  // namespace qzeta
