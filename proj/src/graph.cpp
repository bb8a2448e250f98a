#include "qzeta/graph.hpp"

#include "qzeta/lyndon.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qzeta {

namespace {

using nlohmann::json;

[[noreturn]] void bad_input(const std::string& msg) { throw std::invalid_argument(msg); }

Quaternion parse_weight(const json& value, const std::string& where) {
    if (!value.is_array() || value.size() != 4)
        bad_input(where + " must be an array of 4 rational strings");
    Rational parts[4];
    for (size_t k = 0; k < 4; ++k) {
        if (!value[k].is_string())
            bad_input(where + "[" + std::to_string(k) + "] must be a rational string");
        try {
            parts[k] = Rational::from_string(value[k].get<std::string>());
        } catch (const std::invalid_argument& e) {
            bad_input(where + "[" + std::to_string(k) + "]: " + e.what());
        }
    }
    return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace

Graph Graph::build(int vertex_count, const std::vector<EdgeSpec>& edges,
                   std::vector<std::string> labels) {
    if (vertex_count < 1) bad_input("graph must have at least one vertex");
    if (labels.empty()) {
        labels.reserve(static_cast<size_t>(vertex_count));
        for (int v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels.size()) != vertex_count)
        bad_input("vertex label count must match vertex count");

    Graph g;
    g.labels_ = std::move(labels);
    g.edge_count_ = static_cast<int>(edges.size());

    const int m = g.edge_count_;
    std::set<std::pair<int, int>> seen;
    g.arcs_.resize(static_cast<size_t>(2 * m));
    for (int i = 0; i < m; ++i) {
        const EdgeSpec& e = edges[static_cast<size_t>(i)];
        const std::string where = "edge " + std::to_string(i);
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            bad_input(where + ": vertex index out of range");
        if (e.u == e.v) bad_input(where + ": loops not allowed");
        if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
            bad_input(where + ": multiple edges not allowed");
        g.arcs_[static_cast<size_t>(i)] = {e.u, e.v, m + i, i, e.w_uv};
        g.arcs_[static_cast<size_t>(m + i)] = {e.v, e.u, i, i, e.w_vu};
    }

    // Connectivity over the undirected edge set.
    std::vector<char> reached(static_cast<size_t>(vertex_count), 0);
    std::vector<int> queue{0};
    reached[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (const Arc& a : g.arcs_)
            if (a.origin == v && !reached[static_cast<size_t>(a.terminal)]) {
                reached[static_cast<size_t>(a.terminal)] = 1;
                queue.push_back(a.terminal);
            }
    }
    if (static_cast<int>(queue.size()) != vertex_count) bad_input("graph must be connected");

    g.index_out_arcs();
    return g;
}

void Graph::index_out_arcs() {
    out_.assign(labels_.size(), {});
    for (int a = 0; a < arc_count(); ++a)
        out_[static_cast<size_t>(arcs_[static_cast<size_t>(a)].origin)].push_back(a);
}

Graph Graph::from_json_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad_input(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) bad_input("input must be a JSON object");

    if (!doc.contains("vertices")) bad_input("missing field 'vertices'");
    const json& jv = doc["vertices"];
    if (!jv.is_array()) bad_input("field 'vertices' must be an array of strings");
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    for (const json& item : jv) {
        if (!item.is_string()) bad_input("field 'vertices' must be an array of strings");
        std::string name = item.get<std::string>();
        if (!index.emplace(name, static_cast<int>(labels.size())).second)
            bad_input("duplicate vertex label '" + name + "'");
        labels.push_back(std::move(name));
    }
    if (labels.empty()) bad_input("graph must have at least one vertex");

    if (!doc.contains("edges")) bad_input("missing field 'edges'");
    const json& je = doc["edges"];
    if (!je.is_array()) bad_input("field 'edges' must be an array of objects");

    std::vector<EdgeSpec> edges;
    int i = 0;
    for (const json& item : je) {
        const std::string where = "edge " + std::to_string(i);
        if (!item.is_object()) bad_input(where + " must be an object");
        EdgeSpec es;
        for (const char* endpoint : {"u", "v"}) {
            if (!item.contains(endpoint))
                bad_input(where + ": missing field '" + endpoint + "'");
            const json& jval = item[endpoint];
            if (!jval.is_string())
                bad_input(where + ": field '" + endpoint + "' must be a vertex name string");
            auto it = index.find(jval.get<std::string>());
            if (it == index.end())
                bad_input(where + ": unknown vertex '" + jval.get<std::string>() + "'");
            (endpoint[0] == 'u' ? es.u : es.v) = it->second;
        }
        if (item.contains("w_uv"))
            es.w_uv = parse_weight(item["w_uv"], where + ": field 'w_uv'");
        if (item.contains("w_vu"))
            es.w_vu = parse_weight(item["w_vu"], where + ": field 'w_vu'");
        edges.push_back(std::move(es));
        ++i;
    }
    const int vertex_count = static_cast<int>(labels.size());
    return build(vertex_count, edges, std::move(labels));
}

Graph Graph::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

Graph Graph::with_unit_weights() const {
    Graph g = *this;
    for (Arc& a : g.arcs_) a.weight = Quaternion(1);
    return g;
}

Graph Graph::with_arc_order(const std::vector<int>& order) const {
    const int A = arc_count();
    if (static_cast<int>(order.size()) != A)
        throw std::invalid_argument("arc order must list every arc exactly once");
    std::vector<int> position(static_cast<size_t>(A), -1);
    for (int i = 0; i < A; ++i) {
        const int old = order[static_cast<size_t>(i)];
        if (old < 0 || old >= A || position[static_cast<size_t>(old)] != -1)
            throw std::invalid_argument("arc order must list every arc exactly once");
        position[static_cast<size_t>(old)] = i;
    }
    Graph g = *this;
    for (int i = 0; i < A; ++i) {
        Arc a = arcs_[static_cast<size_t>(order[static_cast<size_t>(i)])];
        a.inverse = position[static_cast<size_t>(a.inverse)];
        g.arcs_[static_cast<size_t>(i)] = std::move(a);
    }
    g.index_out_arcs();
    return g;
}

EdgeMatrices build_edge_matrices(const Graph& g) {
    const int A = g.arc_count();
    EdgeMatrices em{Mat<Quaternion>(A, A), Mat<Quaternion>(A, A)};
    for (int e = 0; e < A; ++e) {
        const Arc& ae = g.arc(e);
        for (int f = 0; f < A; ++f) {
            if (ae.terminal == g.arc(f).origin) em.B(e, f) = ae.weight;
            if (ae.inverse == f) em.J(e, f) = ae.weight;
        }
    }
    return em;
}

VertexMatrices build_vertex_matrices(const Graph& g, int order) {
    const int n = g.vertex_count();
    VertexMatrices vm{Mat<Rational>(n, n), Mat<Rational>(n, n), g.betti(),
                      SeriesMatrix<Quaternion>(n, n, order),
                      SeriesMatrix<Quaternion>(n, n, order)};
    for (int v = 0; v < n; ++v) vm.degree(v, v) = Rational(g.degree(v));
    for (int a = 0; a < g.arc_count(); ++a) {
        const Arc& arc = g.arc(a);
        vm.adjacency(arc.origin, arc.terminal) += Rational(1);

        // (1 - w(e) w(e^{-1}) t^2)^{-1} = sum_r (w(e) w(e^{-1}))^r t^{2r}.
        const Quaternion q = arc.weight * g.arc(arc.inverse).weight;
        TruncatedSeries<Quaternion> geo(order);
        Quaternion p(1);
        for (int r = 0; 2 * r <= order; ++r) {
            geo.set_coeff(2 * r, p);
            p = p * q;
        }
        vm.weighted_adjacency(arc.origin, arc.terminal) += geo * arc.weight;
        vm.weighted_degree(arc.origin, arc.origin) += geo * q;
    }
    return vm;
}

std::vector<ReducedCycle> enumerate_reduced_lyndon_cycles(const Graph& g, int max_len) {
    if (max_len < 0) throw std::invalid_argument("maximum length must be nonnegative");
    std::vector<ReducedCycle> out;
    std::vector<int> word;

    // Depth-first search over chained, non-backtracking arc words whose
    // letters never drop below the first letter (a Lyndon word starts with
    // its minimal letter; it may repeat it, so the bound is >=, not >).
    std::function<void()> extend = [&]() {
        const Arc& last = g.arc(word.back());
        const Arc& first = g.arc(word.front());
        if (last.terminal == first.origin && word.front() != last.inverse && is_lyndon(word))
            out.push_back(ReducedCycle{word});
        if (static_cast<int>(word.size()) == max_len) return;
        for (int next : g.arcs_from(last.terminal)) {
            if (next < word.front()) continue;  // cycle minimum is the first letter
            if (next == last.inverse) continue; // backtracking
            word.push_back(next);
            extend();
            word.pop_back();
        }
    };

    for (int start = 0; start < g.arc_count() && max_len >= 1; ++start) {
        word.assign(1, start);
        extend();
    }
    return out;
}

Quaternion cycle_weight(const Graph& g, const ReducedCycle& c) {
    Quaternion w(1);
    for (int a : c.arcs) w = w * g.arc(a).weight;
    return w;
}

}  // namespace qzeta
