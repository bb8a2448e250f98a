#pragma once

#include "qzeta/graph.hpp"
#include "qzeta/series.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qzeta {

// The independent computation routes. The first four compute the
// quaternionic weighted zeta function; `ihara` is the classical (unweighted)
// zeta used as an oracle — its square is what the others must match at unit
// weights.
enum class Method { euler, expgen, hashimoto, bass, ihara };

inline constexpr Method kAllMethods[] = {Method::euler, Method::expgen, Method::hashimoto,
                                         Method::bass, Method::ihara};

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct ZetaResult {
    Method method = Method::euler;
    TruncatedSeries<Rational> z{0};
    TruncatedSeries<Rational> z_inv{0};
    std::optional<long> cycle_count;  // only the cycle-product routes count cycles
    double millis = 0.0;
};

// Product over Lyndon-representative reduced cycles of the inverse of the
// real quadratic factor 1 - 2 Re(w(C)) t^|C| + |w(C)|^2 t^{2|C|}.
ZetaResult zeta_euler(const Graph& g, int order);

// exp of the generating function sum_{C} sum_{n>=1} 2 Re(w(C)^n)/n t^{n|C|}.
ZetaResult zeta_expgen(const Graph& g, int order);

// Study determinant of I - (B_w - J_w) t over the arcs.
ZetaResult zeta_hashimoto(const Graph& g, int order);

// Study determinant of I - t W + t^2 D over the vertices, times the edge
// factors (1 - w(e)w(e^{-1})t^2)(1 - w(e)w(e^{-1})t^2)^*. Requires order >= 2.
ZetaResult zeta_bass(const Graph& g, int order);

// Classical zeta reciprocal at unit weights, by both determinant formulas:
// the arc form det_t(I - t(B - J0)) and the vertex form
// (1 - t^2)^{betti-1} det_t(I - tA + t^2(D - I)). The two must be equal;
// their square is the quaternionic z_inv at unit weights. Requires order >= 2.
struct IharaZeta {
    TruncatedSeries<Rational> z_inv_edge{0};
    TruncatedSeries<Rational> z_inv_bass{0};
};
IharaZeta ihara_zeta(const Graph& g, int order);

// Runs one method (for `ihara`, the edge form, cross-checked against the
// vertex form) and packages the result with its reciprocal and timing.
ZetaResult run_method(Method m, const Graph& g, int order);

struct Discrepancy {
    int degree = 0;
    Method method_a = Method::euler;
    Method method_b = Method::euler;
    Rational value_a;
    Rational value_b;
};

struct ComparisonReport {
    int vertex_count = 0;
    int edge_count = 0;
    int order = 0;
    std::vector<ZetaResult> results;  // in canonical method order
    bool agreement = true;
    std::optional<Discrepancy> first_discrepancy;
};

// Runs the selected methods (at least two) concurrently and compares the
// z_inv series coefficient by coefficient; `ihara` participates through its
// square, which is what degenerates from the quaternionic zeta. threads = 0
// means use the environment variable QZETA_THREADS, or else all available
// cores.
ComparisonReport compare_methods(const Graph& g, int order, const std::vector<Method>& methods,
                                 int threads = 0);

// The series a method's agreement check is based on: z_inv, squared for ihara.
TruncatedSeries<Rational> comparable_series(const ZetaResult& r);

// Effective worker count: explicit > 0 wins, then QZETA_THREADS, then
// hardware concurrency.
int effective_thread_count(int requested);

}  // namespace qzeta
