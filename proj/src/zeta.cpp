#include "qzeta/zeta.hpp"

#include "qzeta/series_matrix.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>

namespace qzeta {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_order(int order, int minimum, const char* method) {
    if (order < minimum)
        throw std::invalid_argument(std::string(method) + " requires order >= " +
                                    std::to_string(minimum));
}

// 1 - 2 Re(q) t^len + |q|^2 t^{2 len}: the real form of
// (1 - q t^len)(1 - q t^len)^* for a quaternion q.
TruncatedSeries<Rational> real_quadratic_factor(const Quaternion& q, int len, int order) {
    TruncatedSeries<Rational> f = TruncatedSeries<Rational>::one(order);
    if (len <= order) f.set_coeff(len, f.coeff(len) - Rational(2) * q.re());
    if (2 * len <= order) f.set_coeff(2 * len, f.coeff(2 * len) + q.norm_sq());
    return f;
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::euler: return "euler";
        case Method::expgen: return "expgen";
        case Method::hashimoto: return "hashimoto";
        case Method::bass: return "bass";
        case Method::ihara: return "ihara";
    }
    throw std::logic_error("unknown method");
}

std::optional<Method> method_from_name(std::string_view name) {
    for (Method m : kAllMethods)
        if (method_name(m) == name) return m;
    return std::nullopt;
}

ZetaResult zeta_euler(const Graph& g, int order) {
    require_order(order, 1, "euler");
    const auto start = Clock::now();
    const auto cycles = enumerate_reduced_lyndon_cycles(g, order);

    TruncatedSeries<Rational> z = TruncatedSeries<Rational>::one(order);
    for (const ReducedCycle& c : cycles)
        z *= real_quadratic_factor(cycle_weight(g, c), c.length(), order).inverse();

    ZetaResult r;
    r.method = Method::euler;
    r.z = z;
    r.z_inv = z.inverse();
    r.cycle_count = static_cast<long>(cycles.size());
    r.millis = elapsed_ms(start);
    return r;
}

ZetaResult zeta_expgen(const Graph& g, int order) {
    require_order(order, 1, "expgen");
    const auto start = Clock::now();
    const auto cycles = enumerate_reduced_lyndon_cycles(g, order);

    // sum_C sum_{n >= 1, n|C| <= order} 2 Re(w(C)^n)/n t^{n|C|}
    TruncatedSeries<Rational> gen(order);
    for (const ReducedCycle& c : cycles) {
        const Quaternion w = cycle_weight(g, c);
        Quaternion p = w;
        for (int n = 1; n * c.length() <= order; ++n) {
            const int deg = n * c.length();
            gen.set_coeff(deg, gen.coeff(deg) + Rational(2) * p.re() * Rational(1, n));
            p = p * w;
        }
    }

    ZetaResult r;
    r.method = Method::expgen;
    r.z = gen.exp();
    r.z_inv = r.z.inverse();
    r.cycle_count = static_cast<long>(cycles.size());
    r.millis = elapsed_ms(start);
    return r;
}

ZetaResult zeta_hashimoto(const Graph& g, int order) {
    require_order(order, 1, "hashimoto");
    const auto start = Clock::now();

    const EdgeMatrices em = build_edge_matrices(g);
    SeriesMatrix<Quaternion> pencil =
        SeriesMatrix<Quaternion>::identity(g.arc_count(), order) -
        SeriesMatrix<Quaternion>::constant(em.B - em.J, order).shifted(1);

    ZetaResult r;
    r.method = Method::hashimoto;
    r.z_inv = sdet_t(pencil);
    r.z = r.z_inv.inverse();
    r.millis = elapsed_ms(start);
    return r;
}

ZetaResult zeta_bass(const Graph& g, int order) {
    require_order(order, 2, "bass");
    const auto start = Clock::now();

    const VertexMatrices vm = build_vertex_matrices(g, order);
    SeriesMatrix<Quaternion> pencil =
        SeriesMatrix<Quaternion>::identity(g.vertex_count(), order) -
        vm.weighted_adjacency.shifted(1) + vm.weighted_degree.shifted(2);

    TruncatedSeries<Rational> z_inv = sdet_t(pencil);
    // One factor per undirected edge, from either orientation: Re and |.|^2
    // of w(e)w(e^{-1}) do not depend on which representative is chosen.
    std::vector<int> representative(static_cast<size_t>(g.edge_count()), -1);
    for (int a = 0; a < g.arc_count(); ++a) {
        const size_t edge = static_cast<size_t>(g.arc(a).edge);
        if (representative[edge] == -1) representative[edge] = a;
    }
    for (int rep : representative) {
        const Arc& a = g.arc(rep);
        const Quaternion q = a.weight * g.arc(a.inverse).weight;
        z_inv *= real_quadratic_factor(q, 2, order);
    }

    ZetaResult r;
    r.method = Method::bass;
    r.z_inv = std::move(z_inv);
    r.z = r.z_inv.inverse();
    r.millis = elapsed_ms(start);
    return r;
}

IharaZeta ihara_zeta(const Graph& g, int order) {
    require_order(order, 2, "ihara");
    const Graph u = g.with_unit_weights();

    // Arc form: det_t(I - t (B - J0)) over rational series.
    const EdgeMatrices em = build_edge_matrices(u);
    const int A = u.arc_count();
    Mat<Rational> edge(A, A);
    for (int e = 0; e < A; ++e)
        for (int f = 0; f < A; ++f)
            edge(e, f) = (em.B(e, f) - em.J(e, f)).re();
    SeriesMatrix<Rational> pencil = SeriesMatrix<Rational>::identity(A, order) -
                                    SeriesMatrix<Rational>::constant(edge, order).shifted(1);

    IharaZeta result;
    result.z_inv_edge = det_t(pencil);

    // Vertex form: (1 - t^2)^{betti - 1} det_t(I - tA + t^2 (D - I)).
    const VertexMatrices vm = build_vertex_matrices(u, order);
    const int n = u.vertex_count();
    SeriesMatrix<Rational> vertex_pencil = SeriesMatrix<Rational>::identity(n, order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            TruncatedSeries<Rational>& s = vertex_pencil(i, j);
            if (1 <= order) s.set_coeff(1, s.coeff(1) - vm.adjacency(i, j));
            if (i == j && 2 <= order)
                s.set_coeff(2, s.coeff(2) + vm.degree(i, i) - Rational(1));
        }
    TruncatedSeries<Rational> vertex_det = det_t(vertex_pencil);

    TruncatedSeries<Rational> one_minus_t2 = TruncatedSeries<Rational>::one(order);
    one_minus_t2.set_coeff(2, Rational(-1));
    const int exponent = u.betti() - 1;
    const TruncatedSeries<Rational> prefactor =
        exponent >= 0 ? one_minus_t2.pow(static_cast<unsigned>(exponent))
                      : one_minus_t2.inverse().pow(static_cast<unsigned>(-exponent));
    result.z_inv_bass = prefactor * vertex_det;
    return result;
}

ZetaResult run_method(Method m, const Graph& g, int order) {
    switch (m) {
        case Method::euler: return zeta_euler(g, order);
        case Method::expgen: return zeta_expgen(g, order);
        case Method::hashimoto: return zeta_hashimoto(g, order);
        case Method::bass: return zeta_bass(g, order);
        case Method::ihara: {
            const auto start = Clock::now();
            const IharaZeta iz = ihara_zeta(g, order);
            if (iz.z_inv_edge != iz.z_inv_bass)
                throw std::logic_error("classical zeta determinant forms disagree");
            ZetaResult r;
            r.method = Method::ihara;
            r.z_inv = iz.z_inv_edge;
            r.z = r.z_inv.inverse();
            r.millis = elapsed_ms(start);
            return r;
        }
    }
    throw std::logic_error("unknown method");
}

TruncatedSeries<Rational> comparable_series(const ZetaResult& r) {
    // The classical zeta participates through its square: that is what the
    // quaternionic zeta degenerates to at unit weights.
    return r.method == Method::ihara ? r.z_inv * r.z_inv : r.z_inv;
}

int effective_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QZETA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ComparisonReport compare_methods(const Graph& g, int order, const std::vector<Method>& methods,
                                 int threads) {
    // Canonicalize: dedupe, keep enum order.
    std::vector<Method> selected;
    for (Method m : kAllMethods)
        for (Method chosen : methods)
            if (chosen == m) {
                if (selected.empty() || selected.back() != m) selected.push_back(m);
                break;
            }
    if (selected.size() < 2) throw std::invalid_argument("need at least two methods");

    ComparisonReport report;
    report.vertex_count = g.vertex_count();
    report.edge_count = g.edge_count();
    report.order = order;

    // Validate order preconditions up front so the error is immediate.
    for (Method m : selected) {
        const int minimum = (m == Method::bass || m == Method::ihara) ? 2 : 1;
        if (order < minimum)
            throw std::invalid_argument(std::string(method_name(m)) +
                                        " requires order >= " + std::to_string(minimum));
    }

    const int workers = effective_thread_count(threads);
    if (workers <= 1) {
        for (Method m : selected) report.results.push_back(run_method(m, g, order));
    } else {
        // Launch in bounded waves; results land in selection order either way.
        std::vector<std::future<ZetaResult>> futures(selected.size());
        size_t next = 0;
        while (next < selected.size()) {
            const size_t begin = next;
            const size_t end = std::min(selected.size(), begin + static_cast<size_t>(workers));
            for (size_t i = begin; i < end; ++i)
                futures[i] = std::async(std::launch::async,
                                        [&g, order, m = selected[i]] { return run_method(m, g, order); });
            for (size_t i = begin; i < end; ++i) report.results.push_back(futures[i].get());
            next = end;
        }
    }

    // First discrepancy by degree, then by method pair order.
    std::vector<TruncatedSeries<Rational>> comparable;
    comparable.reserve(report.results.size());
    for (const ZetaResult& r : report.results) comparable.push_back(comparable_series(r));
    for (int degree = 0; degree <= order && !report.first_discrepancy; ++degree)
        for (size_t x = 0; x < comparable.size() && !report.first_discrepancy; ++x)
            for (size_t y = x + 1; y < comparable.size(); ++y) {
                const Rational& va = comparable[x].coeff(degree);
                const Rational& vb = comparable[y].coeff(degree);
                if (va != vb) {
                    report.first_discrepancy = Discrepancy{degree, report.results[x].method,
                                                           report.results[y].method, va, vb};
                    break;
                }
            }
    report.agreement = !report.first_discrepancy.has_value();
    return report;
}

}  // namespace qzeta
