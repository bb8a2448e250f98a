#pragma once

#include "qzeta/mat.hpp"
#include "qzeta/quaternion.hpp"
#include "qzeta/series_matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qzeta {

// One oriented edge. Every undirected edge contributes two mutually
// inverse arcs; weights on the two orientations are independent.
struct Arc {
    int origin = 0;
    int terminal = 0;
    int inverse = 0;  // index of the reversed arc
    int edge = 0;     // index of the undirected edge this arc orients
    Quaternion weight;
};

// Finite, simple (no loops, no multi-edges), connected undirected graph
// with quaternion-weighted arcs. Immutable after construction; arc indices
// are the letters of the cycle words, so the arc order is part of the
// value (and can be permuted, see with_arc_order).
class Graph {
public:
    struct EdgeSpec {
        int u = 0;
        int v = 0;
        Quaternion w_uv = Quaternion(1);
        Quaternion w_vu = Quaternion(1);
    };

    // Programmatic constructor over vertices 0..vertex_count-1. Arcs are
    // laid out as e_0..e_{m-1} (the u->v orientations) followed by their
    // inverses e_m..e_{2m-1}, so arc a and arc a+m are mutually inverse.
    // Validates simplicity and connectivity like the JSON loader.
    static Graph build(int vertex_count, const std::vector<EdgeSpec>& edges,
                       std::vector<std::string> labels = {});

    // Loads the JSON document {"vertices": [names...], "edges": [{"u", "v",
    // "w_uv", "w_vu"}...]} where each weight is an array of four rational
    // strings ("p" or "p/q") and defaults to ["1","0","0","0"] when absent.
    // Throws std::invalid_argument naming the offending field.
    static Graph from_json_text(std::string_view text);
    static Graph from_file(const std::string& path);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return edge_count_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    // First Betti number m - n + 1 of a connected graph.
    int betti() const { return edge_count_ - vertex_count() + 1; }

    const Arc& arc(int a) const { return arcs_.at(static_cast<size_t>(a)); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::string& vertex_label(int v) const { return labels_.at(static_cast<size_t>(v)); }
    // Out-arcs of v in increasing arc-index order.
    const std::vector<int>& arcs_from(int v) const { return out_.at(static_cast<size_t>(v)); }
    int degree(int v) const { return static_cast<int>(arcs_from(v).size()); }

    // Same topology, every arc weight replaced by 1.
    Graph with_unit_weights() const;
    // Same graph with arcs renumbered: new arc i is old arc order[i].
    // order must be a permutation of 0..2m-1.
    Graph with_arc_order(const std::vector<int>& order) const;

private:
    Graph() = default;
    void index_out_arcs();

    std::vector<std::string> labels_;
    int edge_count_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
};

// Arc-indexed transfer matrices for the arc-pencil determinant route:
// B(e,f) = w(e) when
// t(e) = o(f), and J(e,f) = w(e) when f is e's inverse; zero elsewhere.
// B - J is the quaternion-weighted edge matrix.
struct EdgeMatrices {
    Mat<Quaternion> B;
    Mat<Quaternion> J;
};
EdgeMatrices build_edge_matrices(const Graph& g);

// Vertex-indexed matrices: the classical adjacency and degree matrices,
// and the weighted series matrices for the vertex-pencil determinant route,
//   W(u,v) = (1 - w(e) w(e^{-1}) t^2)^{-1} w(e)        for e = (u,v),
//   D(u,u) = sum over o(e)=u of (1 - w(e) w(e^{-1}) t^2)^{-1} w(e) w(e^{-1}).
struct VertexMatrices {
    Mat<Rational> adjacency;
    Mat<Rational> degree;
    int betti = 0;
    SeriesMatrix<Quaternion> weighted_adjacency;
    SeriesMatrix<Quaternion> weighted_degree;
};
VertexMatrices build_vertex_matrices(const Graph& g, int order);

// A reduced cycle, stored as its canonical representative: the arc-index
// word that is Lyndon in the graph's arc order. Reduced means no step is
// followed by its inverse, including the wrap-around step; Lyndon words
// are aperiodic, so every cycle here is prime, and each rotation class of
// prime reduced cycles appears exactly once.
struct ReducedCycle {
    std::vector<int> arcs;
    int length() const { return static_cast<int>(arcs.size()); }
};

// All reduced cycles of length 1..max_len, one Lyndon representative per
// rotation class, in increasing lexicographic word order.
std::vector<ReducedCycle> enumerate_reduced_lyndon_cycles(const Graph& g, int max_len);

// Product of the arc weights along the cycle, in word order.
Quaternion cycle_weight(const Graph& g, const ReducedCycle& c);

}  // namespace qzeta
