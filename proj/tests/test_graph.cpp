#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "qzeta/graph.hpp"
#include "qzeta/lyndon.hpp"
#include "qzeta/sampling.hpp"
#include "qzeta/standard_graphs.hpp"

using qzeta::Arc;
using qzeta::Graph;
using qzeta::Quaternion;
using qzeta::Rational;
using qzeta::ReducedCycle;
using qzeta::Sampler;
using qzeta::TruncatedSeries;
using qzeta::Word;

namespace {

const char* kTriangleJson = R"({
  "vertices": ["a", "b", "c"],
  "edges": [
    {"u": "a", "v": "b", "w_uv": ["0", "1", "0", "0"], "w_vu": ["0", "-1", "0", "0"]},
    {"u": "b", "v": "c"},
    {"u": "c", "v": "a", "w_uv": ["1/2", "0", "-1/3", "0"]}
  ]
})";

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("json loading") {
    const Graph g = Graph::from_json_text(kTriangleJson);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.arc_count() == 6);
    CHECK(g.betti() == 1);
    CHECK(g.vertex_label(0) == "a");
    CHECK(g.vertex_label(2) == "c");

    // Arc layout: arcs 0..2 are the u->v orientations, 3..5 their inverses.
    CHECK(g.arc(0).origin == 0);
    CHECK(g.arc(0).terminal == 1);
    CHECK(g.arc(0).inverse == 3);
    CHECK(g.arc(3).origin == 1);
    CHECK(g.arc(3).terminal == 0);
    CHECK(g.arc(3).inverse == 0);
    CHECK(g.arc(0).edge == 0);
    CHECK(g.arc(3).edge == 0);

    // Weights: explicit, defaulted, and per-orientation.
    CHECK(g.arc(0).weight == Quaternion::unit_i());
    CHECK(g.arc(3).weight == -Quaternion::unit_i());
    CHECK(g.arc(1).weight == Quaternion(1));
    CHECK(g.arc(4).weight == Quaternion(1));
    CHECK(g.arc(2).weight == Quaternion(Rational(1, 2), Rational(0), Rational(-1, 3), Rational(0)));
    CHECK(g.arc(5).weight == Quaternion(1));

    CHECK(g.degree(0) == 2);
    CHECK(g.arcs_from(0) == std::vector<int>{0, 5});
}

TEST_CASE("loader rejects malformed documents") {
    using qzeta::Graph;
    CHECK_THROWS_WITH_AS(Graph::from_json_text("nope"),
                         doctest::Contains("input is not valid JSON"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_json_text("[1]"), "input must be a JSON object",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_json_text(R"({"edges": []})"), "missing field 'vertices'",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_json_text(R"({"vertices": "a"})"),
                         "field 'vertices' must be an array of strings", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_json_text(R"({"vertices": ["a", "a"], "edges": []})"),
                         "duplicate vertex label 'a'", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_json_text(R"({"vertices": ["a"]})"), "missing field 'edges'",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        Graph::from_json_text(R"({"vertices": ["a", "b"], "edges": [{"u": "a"}]})"),
        "edge 0: missing field 'v'", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        Graph::from_json_text(R"({"vertices": ["a", "b"], "edges": [{"u": "a", "v": "x"}]})"),
        "edge 0: unknown vertex 'x'", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        Graph::from_json_text(
            R"({"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "w_uv": ["1"]}]})"),
        doctest::Contains("must be an array of 4 rational strings"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        Graph::from_json_text(
            R"({"vertices": ["a", "b"],
                "edges": [{"u": "a", "v": "b", "w_uv": ["1", "0", "0", "1/0"]}]})"),
        doctest::Contains("malformed rational"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_file("/definitely/not/here.json"),
                         "cannot open input file '/definitely/not/here.json'", std::runtime_error);
}

TEST_CASE("builder validates the graph") {
    using ES = Graph::EdgeSpec;
    CHECK_THROWS_WITH_AS(Graph::build(0, {}), "graph must have at least one vertex",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::build(2, {ES{0, 0}}), "edge 0: loops not allowed",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::build(2, {ES{0, 1}, ES{1, 0}}),
                         "edge 1: multiple edges not allowed", std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::build(2, {ES{0, 5}}), "edge 0: vertex index out of range",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::build(4, {ES{0, 1}, ES{2, 3}}), "graph must be connected",
                         std::invalid_argument);
    // A single vertex with no edges is connected but has no cycles.
    const Graph trivial = Graph::build(1, {});
    CHECK(trivial.vertex_count() == 1);
    CHECK(qzeta::enumerate_reduced_lyndon_cycles(trivial, 5).empty());
}

TEST_CASE("standard graphs") {
    CHECK(qzeta::make_path(2).edge_count() == 1);
    CHECK(qzeta::make_cycle(5).betti() == 1);
    CHECK(qzeta::make_complete(4).edge_count() == 6);
    CHECK(qzeta::make_complete(4).betti() == 3);
    CHECK(qzeta::make_complete_bipartite(2, 3).edge_count() == 6);
    CHECK(qzeta::make_complete_bipartite(2, 3).betti() == 2);
    const Graph petersen = qzeta::make_petersen();
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(petersen.betti() == 6);
    for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
}

TEST_CASE("unit weights and arc reordering") {
    Sampler sampler(21);
    const Graph g = sampler.reweight(qzeta::make_complete(4));
    const Graph unit = g.with_unit_weights();
    for (const Arc& a : unit.arcs()) CHECK(a.weight == Quaternion(1));

    std::vector<int> identity(static_cast<size_t>(g.arc_count()));
    for (size_t k = 0; k < identity.size(); ++k) identity[k] = static_cast<int>(k);
    const Graph same = g.with_arc_order(identity);
    for (int a = 0; a < g.arc_count(); ++a) {
        CHECK(same.arc(a).origin == g.arc(a).origin);
        CHECK(same.arc(a).weight == g.arc(a).weight);
    }

    std::vector<int> bad = identity;
    bad[0] = 1;  // not a permutation
    CHECK_THROWS_WITH_AS(g.with_arc_order(bad), "arc order must list every arc exactly once",
                         std::invalid_argument);

    const Graph shuffled = sampler.shuffle_arcs(g);
    for (int a = 0; a < shuffled.arc_count(); ++a) {
        const Arc& arc = shuffled.arc(a);
        const Arc& inv = shuffled.arc(arc.inverse);
        CHECK(inv.inverse == a);
        CHECK(inv.origin == arc.terminal);
        CHECK(inv.terminal == arc.origin);
    }
}

TEST_CASE("triangle cycles are the two orientations") {
    const Graph g = qzeta::make_cycle(3);
    const auto cycles = qzeta::enumerate_reduced_lyndon_cycles(g, 9);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].arcs == Word{0, 1, 2});
    CHECK(cycles[1].arcs == Word{3, 5, 4});
    CHECK(cycles[0].length() == 3);
}

TEST_CASE("cycle weight multiplies along the word") {
    // Weight the triangle's forward arcs i, j, k: the cycle weight is ijk = -1.
    const Graph g = Graph::build(
        3, {{0, 1, Quaternion::unit_i(), Quaternion(1)},
            {1, 2, Quaternion::unit_j(), Quaternion(1)},
            {2, 0, Quaternion::unit_k(), Quaternion(1)}});
    const auto cycles = qzeta::enumerate_reduced_lyndon_cycles(g, 3);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].arcs == Word{0, 1, 2});
    CHECK(qzeta::cycle_weight(g, cycles[0]) == Quaternion(-1));
    // The reverse orientation picks up the unit weights.
    CHECK(qzeta::cycle_weight(g, cycles[1]) == Quaternion(1));
}

TEST_CASE("enumeration is lex-ordered, Lyndon, and non-backtracking") {
    for (const Graph& g : {qzeta::make_complete(4), qzeta::make_complete_bipartite(2, 3)}) {
        const auto cycles = qzeta::enumerate_reduced_lyndon_cycles(g, 8);
        Word prev;
        for (const ReducedCycle& c : cycles) {
            CHECK(qzeta::is_lyndon(c.arcs));
            CHECK(prev < c.arcs);
            for (size_t k = 0; k < c.arcs.size(); ++k) {
                const Arc& cur = g.arc(c.arcs[k]);
                const int next = c.arcs[(k + 1) % c.arcs.size()];
                CHECK(cur.terminal == g.arc(next).origin);
                CHECK(next != cur.inverse);
            }
            prev = c.arcs;
        }
    }
}

TEST_CASE("pinned cycle counts") {
    long k4_len3 = 0;
    for (const ReducedCycle& c : qzeta::enumerate_reduced_lyndon_cycles(qzeta::make_complete(4), 3))
        if (c.length() == 3) ++k4_len3;
    CHECK(k4_len3 == 8);

    CHECK(qzeta::enumerate_reduced_lyndon_cycles(qzeta::make_path(5), 10).empty());

    // The Petersen graph has girth 5 and exactly 12 pentagons (24 oriented).
    const Graph petersen = qzeta::make_petersen();
    CHECK(qzeta::enumerate_reduced_lyndon_cycles(petersen, 4).empty());
    CHECK(qzeta::enumerate_reduced_lyndon_cycles(petersen, 5).size() == 24);
}

TEST_CASE("edge matrices") {
    const Graph g = Graph::from_json_text(kTriangleJson);
    const qzeta::EdgeMatrices em = qzeta::build_edge_matrices(g);
    CHECK(em.B.rows() == 6);
    for (int e = 0; e < 6; ++e)
        for (int f = 0; f < 6; ++f) {
            const Arc& ae = g.arc(e);
            CHECK(em.B(e, f) ==
                  (ae.terminal == g.arc(f).origin ? ae.weight : Quaternion()));
            CHECK(em.J(e, f) == (f == ae.inverse ? ae.weight : Quaternion()));
        }
}

TEST_CASE("vertex matrices at unit weights") {
    const Graph g = qzeta::make_complete_bipartite(2, 3);
    const int order = 6;
    const qzeta::VertexMatrices vm = qzeta::build_vertex_matrices(g, order);
    CHECK(vm.betti == 2);
    // geo = (1 - t^2)^{-1} = 1 + t^2 + t^4 + ...
    auto geo = TruncatedSeries<Quaternion>::one(order);
    geo -= TruncatedSeries<Quaternion>::monomial(order, 2, Quaternion(1));
    geo = geo.inverse();
    for (int u = 0; u < g.vertex_count(); ++u) {
        CHECK(vm.degree(u, u) == Rational(g.degree(u)));
        CHECK(vm.weighted_degree(u, u) == geo * Quaternion(g.degree(u)));
        for (int v = 0; v < g.vertex_count(); ++v) {
            const bool adjacent = vm.adjacency(u, v) == Rational(1);
            CHECK(vm.weighted_adjacency(u, v) ==
                  (adjacent ? geo : TruncatedSeries<Quaternion>(order)));
            if (u != v) CHECK(vm.adjacency(u, v) == vm.adjacency(v, u));
        }
    }
}

}  // TEST_SUITE
