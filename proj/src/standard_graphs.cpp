#include "qzeta/standard_graphs.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qzeta {

Graph make_path(int n) {
    if (n < 2) throw std::invalid_argument("path needs at least two vertices");
    std::vector<Graph::EdgeSpec> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph::build(n, edges);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<Graph::EdgeSpec> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph::build(n, edges);
}

Graph make_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs at least two vertices");
    std::vector<Graph::EdgeSpec> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::build(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite parts must be nonempty");
    std::vector<Graph::EdgeSpec> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph::build(a + b, edges);
}

Graph make_petersen() {
    std::vector<Graph::EdgeSpec> edges;
    // Outer 5-cycle.
    for (int v = 0; v < 5; ++v) edges.push_back({v, (v + 1) % 5});
    // Spokes.
    for (int v = 0; v < 5; ++v) edges.push_back({v, v + 5});
    // Inner pentagram: 5 + i joined to 5 + ((i + 2) mod 5).
    for (int v = 0; v < 5; ++v) edges.push_back({5 + v, 5 + (v + 2) % 5});
    return Graph::build(10, edges);
}

}  // namespace qzeta
