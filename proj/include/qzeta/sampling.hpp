#pragma once

#include "qzeta/graph.hpp"
#include "qzeta/mat.hpp"
#include "qzeta/quaternion.hpp"
#include "qzeta/series.hpp"
#include "qzeta/series_matrix.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace qzeta {

// Deterministic random generation for the verification suite and tests.
// Draws map raw mt19937_64 output through plain modular arithmetic, so a
// given seed produces the same values on every platform and standard
// library. Rational components are p/q with |p| <= 4 and 1 <= q <= 3.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational() { return {uniform(-4, 4), uniform(1, 3)}; }

    Rational nonzero_rational() {
        while (true) {
            Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }

    GaussianRational gaussian() { return {rational(), rational()}; }

    Quaternion quaternion() { return {rational(), rational(), rational(), rational()}; }

    Quaternion nonzero_quaternion() {
        while (true) {
            Quaternion q = quaternion();
            if (!q.is_zero()) return q;
        }
    }

    // Quaternion confined to the complex subfield span(1, i).
    Quaternion complex_quaternion() {
        return {rational(), rational(), Rational(0), Rational(0)};
    }

    template <class C>
    C coefficient();

    template <class C>
    TruncatedSeries<C> series(int order) {
        TruncatedSeries<C> s(order);
        for (int k = 0; k <= order; ++k) s.set_coeff(k, coefficient<C>());
        return s;
    }

    // Invertible: nonzero constant term.
    template <class C>
    TruncatedSeries<C> invertible_series(int order) {
        TruncatedSeries<C> s = series<C>(order);
        while (s.coeff(0).is_zero()) s.set_coeff(0, coefficient<C>());
        return s;
    }

    // Constant term zero (valid exp argument).
    template <class C>
    TruncatedSeries<C> zero_constant_series(int order) {
        TruncatedSeries<C> s = series<C>(order);
        s.set_coeff(0, C());
        return s;
    }

    // Constant term one (valid log argument).
    template <class C>
    TruncatedSeries<C> unit_series(int order) {
        TruncatedSeries<C> s = series<C>(order);
        s.set_coeff(0, C(1));
        return s;
    }

    template <class C>
    Mat<C> matrix(int rows, int cols) {
        Mat<C> m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = coefficient<C>();
        return m;
    }

    template <class C>
    SeriesMatrix<C> series_matrix(int rows, int cols, int order) {
        SeriesMatrix<C> m(rows, cols, order);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = series<C>(order);
        return m;
    }

    // Same topology, freshly drawn quaternion weights on every arc.
    Graph reweight(const Graph& g) {
        std::vector<Graph::EdgeSpec> edges;
        std::vector<int> representative(static_cast<size_t>(g.edge_count()), -1);
        for (int a = 0; a < g.arc_count(); ++a) {
            const size_t e = static_cast<size_t>(g.arc(a).edge);
            if (representative[e] == -1) representative[e] = a;
        }
        for (int rep : representative) {
            const Arc& arc = g.arc(rep);
            edges.push_back({arc.origin, arc.terminal, quaternion(), quaternion()});
        }
        std::vector<std::string> labels;
        for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.vertex_label(v));
        return Graph::build(g.vertex_count(), edges, std::move(labels));
    }

    // Same topology and weights, arcs renumbered by a random permutation.
    Graph shuffle_arcs(const Graph& g) {
        std::vector<int> order(static_cast<size_t>(g.arc_count()));
        std::iota(order.begin(), order.end(), 0);
        for (size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[static_cast<size_t>(rng_() % i)]);
        return g.with_arc_order(order);
    }

private:
    std::mt19937_64 rng_;
};

template <>
inline Rational Sampler::coefficient<Rational>() {
    return rational();
}
template <>
inline GaussianRational Sampler::coefficient<GaussianRational>() {
    return gaussian();
}
template <>
inline Quaternion Sampler::coefficient<Quaternion>() {
    return quaternion();
}

}  // namespace qzeta
