#include "qzeta/commands.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qzeta/json_io.hpp"
#include "qzeta/lyndon.hpp"
#include "qzeta/sampling.hpp"
#include "qzeta/series_matrix.hpp"
#include "qzeta/standard_graphs.hpp"
#include "qzeta/zeta.hpp"

namespace qzeta {
namespace {

using nlohmann::json;

using SdetFn = std::function<TruncatedSeries<Rational>(const SeriesMatrix<Quaternion>&)>;

struct CheckContext {
    Sampler& sampler;
    int trials;
    SdetFn sdet;  // the Study determinant under test (possibly corrupted)
};

struct Check {
    std::string name;
    // Returns true when the property held on every trial; on failure fills
    // `fail` with a minimal failing instance.
    std::function<bool(CheckContext&, json&)> run;
};

struct Suite {
    std::string name;
    std::vector<Check> checks;
};

// True iff f() throws an exception whose message contains `needle`.
template <class F>
bool throws_with(F&& f, std::string_view needle) {
    try {
        f();
    } catch (const std::exception& e) {
        return std::string_view(e.what()).find(needle) != std::string_view::npos;
    }
    return false;
}

// ---------------------------------------------------------------------------
// quaternion suite

Suite quaternion_suite() {
    Suite s{"quaternion", {}};
    const Quaternion qi = Quaternion::unit_i();
    const Quaternion qj = Quaternion::unit_j();
    const Quaternion qk = Quaternion::unit_k();

    s.checks.push_back({"defining relations", [qi, qj, qk](CheckContext&, json& fail) {
        const Quaternion minus_one = Quaternion(-1);
        const bool ok = qi * qi == minus_one && qj * qj == minus_one && qk * qk == minus_one &&
                        qi * qj == qk && qj * qk == qi && qk * qi == qj &&
                        qj * qi == -qk && qk * qj == -qi && qi * qk == -qj &&
                        (qi * qj) * qk == minus_one;
        if (!ok) fail = {{"i*j", qi * qj}, {"j*k", qj * qk}, {"k*i", qk * qi}};
        return ok;
    }});

    s.checks.push_back({"ring axioms on random triples", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const Quaternion a = ctx.sampler.quaternion();
            const Quaternion b = ctx.sampler.quaternion();
            const Quaternion c = ctx.sampler.quaternion();
            if (!((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                  (a + b) * c == a * c + b * c)) {
                fail = {{"a", a}, {"b", b}, {"c", c}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"conjugation anti-homomorphism", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const Quaternion a = ctx.sampler.quaternion();
            const Quaternion b = ctx.sampler.quaternion();
            if (!((a * b).conj() == b.conj() * a.conj() &&
                  (a + b).conj() == a.conj() + b.conj() && a.conj().conj() == a)) {
                fail = {{"a", a}, {"b", b}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"norm multiplicativity", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const Quaternion a = ctx.sampler.quaternion();
            const Quaternion b = ctx.sampler.quaternion();
            if (!((a * b).norm_sq() == a.norm_sq() * b.norm_sq())) {
                fail = {{"a", a}, {"b", b}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"conjugate product is the norm", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const Quaternion a = ctx.sampler.quaternion();
            const Quaternion n = Quaternion(a.norm_sq());
            if (!(a * a.conj() == n && a.conj() * a == n && (a * a.conj()).is_real())) {
                fail = {{"a", a}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"real part is cyclic", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const Quaternion a = ctx.sampler.quaternion();
            const Quaternion b = ctx.sampler.quaternion();
            const Quaternion c = ctx.sampler.quaternion();
            if (!((a * b).re() == (b * a).re() && (a * b * c).re() == (b * c * a).re() &&
                  (a * b * c).re() == (c * a * b).re())) {
                fail = {{"a", a}, {"b", b}, {"c", c}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"inverse round trip", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const Quaternion a = ctx.sampler.nonzero_quaternion();
            if (!(a * a.inverse() == Quaternion(1) && a.inverse() * a == Quaternion(1))) {
                fail = {{"a", a}};
                return false;
            }
        }
        return throws_with([] { Quaternion().inverse(); }, "quaternion not invertible");
    }});

    s.checks.push_back({"symplectic split and reassembly", [qj](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const Quaternion a = ctx.sampler.quaternion();
            const Quaternion rebuilt = Quaternion::from_symplectic(a.simplex(), a.perplex());
            const Quaternion sum =
                Quaternion::from_complex(a.simplex()) + qj * Quaternion::from_complex(a.perplex());
            if (!(rebuilt == a && sum == a)) {
                fail = {{"a", a}, {"rebuilt", rebuilt}, {"sum", sum}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"complex subfield embedding", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const GaussianRational z = ctx.sampler.gaussian();
            const GaussianRational w = ctx.sampler.gaussian();
            const Quaternion prod = Quaternion::from_complex(z) * Quaternion::from_complex(w);
            if (!(prod == Quaternion::from_complex(z * w) && prod.is_complex() &&
                  Quaternion::from_complex(z.conj()) == Quaternion::from_complex(z).conj())) {
                fail = {{"z", z}, {"w", w}};
                return false;
            }
        }
        return true;
    }});

    return s;
}

// ---------------------------------------------------------------------------
// series suite

Suite series_suite() {
    Suite s{"series", {}};

    s.checks.push_back({"inverse round trip", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int order = static_cast<int>(ctx.sampler.uniform(1, 8));
            const auto f = ctx.sampler.invertible_series<Quaternion>(order);
            const auto one = TruncatedSeries<Quaternion>::one(order);
            if (!(f * f.inverse() == one && f.inverse() * f == one)) {
                fail = {{"order", order}, {"f", f}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"product inverse reverses", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int order = static_cast<int>(ctx.sampler.uniform(1, 8));
            const auto f = ctx.sampler.invertible_series<Quaternion>(order);
            const auto g = ctx.sampler.invertible_series<Quaternion>(order);
            if (!((f * g).inverse() == g.inverse() * f.inverse())) {
                fail = {{"order", order}, {"f", f}, {"g", g}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"exp then log round trip", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int order = static_cast<int>(ctx.sampler.uniform(1, 8));
            const auto a = ctx.sampler.zero_constant_series<Quaternion>(order);
            if (!(a.exp().log() == a)) {
                fail = {{"order", order}, {"a", a}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"log then exp round trip", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int order = static_cast<int>(ctx.sampler.uniform(1, 8));
            const auto f = ctx.sampler.unit_series<Quaternion>(order);
            if (!(f.log().exp() == f)) {
                fail = {{"order", order}, {"f", f}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"exp splits over commuting summands", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int order = static_cast<int>(ctx.sampler.uniform(2, 8));
            // Two rational-coefficient polynomials in one series commute.
            const auto base = ctx.sampler.zero_constant_series<Quaternion>(order);
            const auto a = base * Quaternion(ctx.sampler.rational()) +
                           (base * base) * Quaternion(ctx.sampler.rational());
            const auto b = base * Quaternion(ctx.sampler.rational()) +
                           (base * base * base) * Quaternion(ctx.sampler.rational());
            if (!(a * b == b * a && (a + b).exp() == a.exp() * b.exp())) {
                fail = {{"order", order}, {"a", a}, {"b", b}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"log splits over commuting factors", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int order = static_cast<int>(ctx.sampler.uniform(1, 8));
            const auto u = ctx.sampler.unit_series<Quaternion>(order);
            const auto f = u * u;
            const auto g = u * u * u;
            if (!((f * g).log() == f.log() + g.log())) {
                fail = {{"order", order}, {"u", u}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"log of an inverse negates", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int order = static_cast<int>(ctx.sampler.uniform(1, 8));
            const auto f = ctx.sampler.unit_series<Quaternion>(order);
            if (!(f.inverse().log() == -f.log())) {
                fail = {{"order", order}, {"f", f}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"conjugate norm series is real and central",
                        [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int order = static_cast<int>(ctx.sampler.uniform(1, 6));
            const auto a = ctx.sampler.series<Quaternion>(order);
            const auto b = ctx.sampler.series<Quaternion>(order);
            const auto p = a * conjugate(a);
            const auto q = b * conjugate(b);
            bool real = true;
            for (int k = 0; k <= order; ++k) real = real && p.coeff(k).is_real();
            if (!(real && p == conjugate(a) * a && p * q == q * p && p * b == b * p)) {
                fail = {{"order", order}, {"a", a}, {"b", b}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"domain errors are reported", [](CheckContext&, json& fail) {
        using QS = TruncatedSeries<Quaternion>;
        const bool ok =
            throws_with([] { QS(3).inverse(); }, "series not invertible") &&
            throws_with([] { QS::one(3).exp(); }, "exp requires zero constant term") &&
            throws_with([] { QS(3).log(); }, "log requires constant term 1") &&
            throws_with([] { QS(3) + QS(4); }, "series order mismatch") &&
            throws_with([] { (void)(QS(3) == QS(4)); }, "series order mismatch") &&
            throws_with([] { first_mismatch(QS(3), QS(4)); }, "series order mismatch");
        if (!ok) fail = {{"detail", "an expected domain or usage error was not raised"}};
        return ok;
    }});

    return s;
}

// ---------------------------------------------------------------------------
// lyndon suite

// All words of length 1..max_len over {1..n}, in lexicographic order by
// length-then-content enumeration; the caller filters.
std::vector<Word> all_words(int n, int max_len) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (int a = 1; a <= n; ++a) {
                Word e = w;
                e.push_back(a);
                next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

bool less_than_all_proper_rotations(const Word& w) {
    for (size_t r = 1; r < w.size(); ++r) {
        Word rot(w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        if (!(w < rot)) return false;
    }
    return true;
}

// Counts the nonincreasing factorizations of w into Lyndon words; records
// the last one found.
void count_factorizations(const Word& w, size_t pos, std::vector<Word>& current, int& count,
                          std::vector<Word>& found) {
    if (pos == w.size()) {
        ++count;
        found = current;
        return;
    }
    for (size_t len = 1; pos + len <= w.size(); ++len) {
        Word f(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + len));
        if (!is_lyndon(f)) continue;
        if (!current.empty() && current.back() < f) continue;  // must be nonincreasing
        current.push_back(std::move(f));
        count_factorizations(w, pos + len, current, count, found);
        current.pop_back();
    }
}

json word_to_json(const Word& w) {
    return json(w);
}

Suite lyndon_suite() {
    Suite s{"lyndon", {}};

    s.checks.push_back({"generation matches rotation minimality", [](CheckContext&, json& fail) {
        for (int n = 1; n <= 3; ++n)
            for (int len = 1; len <= 5; ++len) {
                std::vector<Word> expected;
                for (const Word& w : all_words(n, len))
                    if (less_than_all_proper_rotations(w)) expected.push_back(w);
                std::sort(expected.begin(), expected.end());
                const std::vector<Word> got = lyndon_words(n, len);
                if (got != expected) {
                    fail = {{"alphabet", n}, {"max_len", len}};
                    return false;
                }
                for (const Word& w : got)
                    if (!is_lyndon(w)) {
                        fail = {{"word", word_to_json(w)}};
                        return false;
                    }
            }
        return true;
    }});

    s.checks.push_back({"factorization of random words", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int n = static_cast<int>(ctx.sampler.uniform(1, 3));
            const int len = static_cast<int>(ctx.sampler.uniform(1, 10));
            Word w(static_cast<size_t>(len));
            for (int k = 0; k < len; ++k)
                w[static_cast<size_t>(k)] = static_cast<int>(ctx.sampler.uniform(1, n));
            const std::vector<Word> f = lyndon_factorize(w);
            Word concat;
            bool ok = true;
            for (size_t k = 0; k < f.size(); ++k) {
                ok = ok && is_lyndon(f[k]);
                if (k > 0) ok = ok && !(f[k - 1] < f[k]);
                concat.insert(concat.end(), f[k].begin(), f[k].end());
            }
            if (!(ok && concat == w)) {
                fail = {{"word", word_to_json(w)}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"factorization is unique (exhaustive)", [](CheckContext&, json& fail) {
        const auto run = [&fail](int n, int max_len) {
            for (const Word& w : all_words(n, max_len)) {
                std::vector<Word> current, found;
                int count = 0;
                count_factorizations(w, 0, current, count, found);
                if (count != 1 || found != lyndon_factorize(w)) {
                    fail = {{"word", word_to_json(w)}, {"factorizations", count}};
                    return false;
                }
            }
            return true;
        };
        return run(2, 6) && run(3, 4);
    }});

    s.checks.push_back({"word-series factorization identities", [](CheckContext&, json& fail) {
        for (int n = 1; n <= 3; ++n)
            for (int len = 1; len <= 5; ++len) {
                std::string diag;
                if (!verify_word_identity(n, len, &diag)) {
                    fail = {{"alphabet", n}, {"max_len", len}, {"diag", diag}};
                    return false;
                }
            }
        return true;
    }});

    const auto telescoping = [](CheckContext& ctx, json& fail, auto tag) {
        using C = decltype(tag);
        for (int t = 0; t < ctx.trials; ++t) {
            const int n = static_cast<int>(ctx.sampler.uniform(1, 3));
            const int order = static_cast<int>(ctx.sampler.uniform(2, 6));
            const Mat<C> a = ctx.sampler.template matrix<C>(n, n);
            SeriesMatrix<C> expected = SeriesMatrix<C>::identity(n, order);
            expected -= SeriesMatrix<C>::constant(a, order).shifted(1);
            if (!(matrix_lyndon_product(a, order) == expected)) {
                fail = {{"n", n}, {"order", order}};
                return false;
            }
        }
        return true;
    };

    s.checks.push_back({"matrix product telescopes (rational)",
                        [telescoping](CheckContext& ctx, json& fail) {
                            return telescoping(ctx, fail, Rational());
                        }});
    s.checks.push_back({"matrix product telescopes (complex)",
                        [telescoping](CheckContext& ctx, json& fail) {
                            return telescoping(ctx, fail, GaussianRational());
                        }});
    s.checks.push_back({"matrix product telescopes (quaternion)",
                        [telescoping](CheckContext& ctx, json& fail) {
                            return telescoping(ctx, fail, Quaternion());
                        }});

    s.checks.push_back({"unchained factors are inert", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < std::min(ctx.trials, 10); ++t) {
            const int order = static_cast<int>(ctx.sampler.uniform(2, 4));
            const Mat<Quaternion> a = ctx.sampler.matrix<Quaternion>(2, 2);
            if (!(matrix_lyndon_product(a, order, true) ==
                  matrix_lyndon_product(a, order, false))) {
                fail = {{"order", order}};
                return false;
            }
        }
        return true;
    }});

    return s;
}

// ---------------------------------------------------------------------------
// study suite

TruncatedSeries<Rational> real_series(const TruncatedSeries<Quaternion>& p) {
    TruncatedSeries<Rational> out(p.order());
    for (int k = 0; k <= p.order(); ++k) {
        if (!p.coeff(k).is_real())
            throw std::logic_error("expected a real series");
        out.set_coeff(k, p.coeff(k).re());
    }
    return out;
}

Suite study_suite() {
    Suite s{"study", {}};

    s.checks.push_back({"Prop 4.8 (i) realness", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int n = static_cast<int>(ctx.sampler.uniform(1, 3));
            const int order = static_cast<int>(ctx.sampler.uniform(0, 5));
            const auto m = ctx.sampler.series_matrix<Quaternion>(n, n, order);
            const auto d = det_t(psi_t(m));
            for (int k = 0; k <= order; ++k)
                if (!d.coeff(k).is_real()) {
                    fail = {{"n", n}, {"order", order}, {"M", m}, {"det", d}};
                    return false;
                }
        }
        return true;
    }});

    s.checks.push_back({"Prop 4.8 (iii) multiplicativity", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int n = static_cast<int>(ctx.sampler.uniform(1, 3));
            const int order = static_cast<int>(ctx.sampler.uniform(0, 5));
            const auto m = ctx.sampler.series_matrix<Quaternion>(n, n, order);
            const auto nn = ctx.sampler.series_matrix<Quaternion>(n, n, order);
            const auto lhs = ctx.sdet(m * nn);
            const auto rhs = ctx.sdet(m) * ctx.sdet(nn);
            if (!(lhs == rhs)) {
                fail = {{"n", n},       {"order", order}, {"M", m},
                        {"N", nn},      {"sdet_MN", lhs}, {"sdet_M_times_sdet_N", rhs}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"Prop 4.8 (iv) shear invariance", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int n = static_cast<int>(ctx.sampler.uniform(2, 3));
            const int order = static_cast<int>(ctx.sampler.uniform(0, 5));
            const auto m = ctx.sampler.series_matrix<Quaternion>(n, n, order);
            const auto b = ctx.sampler.series<Quaternion>(order);
            const int r = static_cast<int>(ctx.sampler.uniform(0, n - 1));
            const int q = (r + 1 + static_cast<int>(ctx.sampler.uniform(0, n - 2))) % n;
            auto rows = m;  // row r += b * row q (left multiple)
            for (int j = 0; j < n; ++j) rows(r, j) += b * rows(q, j);
            auto cols = m;  // col r += col q * b (right multiple)
            for (int i = 0; i < n; ++i) cols(i, r) += cols(i, q) * b;
            const auto d = ctx.sdet(m);
            if (!(ctx.sdet(rows) == d && ctx.sdet(cols) == d)) {
                fail = {{"n", n}, {"order", order}, {"M", m}, {"b", b}, {"r", r}, {"q", q}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"Prop 4.8 (v) swap invariance", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int n = static_cast<int>(ctx.sampler.uniform(2, 3));
            const int order = static_cast<int>(ctx.sampler.uniform(0, 5));
            const auto m = ctx.sampler.series_matrix<Quaternion>(n, n, order);
            const int r = static_cast<int>(ctx.sampler.uniform(0, n - 1));
            const int q = (r + 1 + static_cast<int>(ctx.sampler.uniform(0, n - 2))) % n;
            auto rows = m;
            rows.swap_rows(r, q);
            auto cols = m;
            cols.swap_cols(r, q);
            const auto d = ctx.sdet(m);
            if (!(ctx.sdet(rows) == d && ctx.sdet(cols) == d)) {
                fail = {{"n", n}, {"order", order}, {"M", m}, {"r", r}, {"q", q}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"Prop 4.8 (vi) scalar factors", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int n = static_cast<int>(ctx.sampler.uniform(1, 3));
            const int order = static_cast<int>(ctx.sampler.uniform(0, 4));
            const auto m = ctx.sampler.series_matrix<Quaternion>(n, n, order);
            const auto alpha = ctx.sampler.series<Quaternion>(order);
            auto left = m;
            auto right = m;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    left(i, j) = alpha * left(i, j);
                    right(i, j) = right(i, j) * alpha;
                }
            const auto norm = real_series(alpha * conjugate(alpha));
            const auto expected = norm.pow(static_cast<unsigned>(n)) * ctx.sdet(m);
            if (!(ctx.sdet(left) == expected && ctx.sdet(right) == expected)) {
                fail = {{"n", n}, {"order", order}, {"M", m}, {"alpha", alpha}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"Prop 4.8 (vii) triangular determinants", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int n = static_cast<int>(ctx.sampler.uniform(1, 3));
            const int order = static_cast<int>(ctx.sampler.uniform(0, 5));
            auto upper = ctx.sampler.series_matrix<Quaternion>(n, n, order);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < i; ++j) upper(i, j) = TruncatedSeries<Quaternion>(order);
            auto expected = TruncatedSeries<Rational>::one(order);
            for (int i = 0; i < n; ++i)
                expected *= real_series(upper(i, i) * conjugate(upper(i, i)));
            const auto lower = upper.transpose();
            if (!(ctx.sdet(upper) == expected && ctx.sdet(lower) == expected)) {
                fail = {{"n", n}, {"order", order}, {"M", upper}, {"expected", expected}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"Prop 4.8 (viii) Sylvester identity", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int p = static_cast<int>(ctx.sampler.uniform(1, 3));
            const int q = static_cast<int>(ctx.sampler.uniform(1, 3));
            const int order = static_cast<int>(ctx.sampler.uniform(0, 4));
            const auto a = ctx.sampler.series_matrix<Quaternion>(p, q, order);
            const auto b = ctx.sampler.series_matrix<Quaternion>(q, p, order);
            const auto lhs = ctx.sdet(SeriesMatrix<Quaternion>::identity(p, order) - a * b);
            const auto rhs = ctx.sdet(SeriesMatrix<Quaternion>::identity(q, order) - b * a);
            if (!(lhs == rhs)) {
                fail = {{"p", p}, {"q", q}, {"order", order}, {"A", a}, {"B", b}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"symplectic image characterization", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int n = static_cast<int>(ctx.sampler.uniform(1, 3));
            const int order = static_cast<int>(ctx.sampler.uniform(0, 4));
            const auto m = ctx.sampler.series_matrix<Quaternion>(n, n, order);
            const auto image = psi_t(m);
            SeriesMatrix<GaussianRational> J(2 * n, 2 * n, order);
            for (int i = 0; i < n; ++i) {
                J(i, n + i) = TruncatedSeries<GaussianRational>(order, GaussianRational(-1));
                J(n + i, i) = TruncatedSeries<GaussianRational>::one(order);
            }
            if (!(J * image == conjugate(image) * J)) {
                fail = {{"n", n}, {"order", order}, {"M", m}};
                return false;
            }
            // Perturbing a single entry must break the relation.
            auto off = image;
            off(0, 0) += TruncatedSeries<GaussianRational>::one(order);
            if (J * off == conjugate(off) * J) {
                fail = {{"n", n}, {"order", order}, {"M", m}, {"detail", "perturbation not detected"}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"scalar determinant is the norm", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const int order = static_cast<int>(ctx.sampler.uniform(0, 5));
            const auto f = ctx.sampler.series<Quaternion>(order);
            SeriesMatrix<Quaternion> m(1, 1, order);
            m(0, 0) = f;
            if (!(ctx.sdet(m) == real_series(f * conjugate(f)))) {
                fail = {{"order", order}, {"f", f}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"transpose is not preserved", [](CheckContext& ctx, json& fail) {
        const int order = 2;
        SeriesMatrix<Quaternion> m(2, 2, order);
        m(0, 0) = TruncatedSeries<Quaternion>::one(order);
        m(0, 1) = TruncatedSeries<Quaternion>(order, Quaternion::unit_i());
        m(1, 0) = TruncatedSeries<Quaternion>(order, Quaternion::unit_j());
        m(1, 1) = TruncatedSeries<Quaternion>(order, Quaternion::unit_k());
        const auto d = ctx.sdet(m);
        const auto dt = ctx.sdet(m.transpose());
        const auto four = TruncatedSeries<Rational>(order, Rational(4));
        const auto zero = TruncatedSeries<Rational>(order);
        if (!(d == four && dt == zero)) {
            fail = {{"sdet", d}, {"sdet_transpose", dt}};
            return false;
        }
        return true;
    }});

    return s;
}

// ---------------------------------------------------------------------------
// graph suite

Word min_rotation(const Word& w) {
    Word best = w;
    for (size_t r = 1; r < w.size(); ++r) {
        Word rot(w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        if (rot < best) best = rot;
    }
    return best;
}

bool is_aperiodic(const Word& w) {
    const size_t r = w.size();
    for (size_t d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        bool periodic = true;
        for (size_t k = 0; k < r && periodic; ++k) periodic = w[k] == w[(k + d) % r];
        if (periodic) return false;
    }
    return true;
}

// Exhaustive enumeration: canonical (minimal-rotation) words of all prime
// reduced cycles of length 1..max_len, by plain DFS over arc sequences.
std::set<Word> brute_cycle_words(const Graph& g, int max_len) {
    std::set<Word> out;
    Word word;
    const std::function<void()> extend = [&] {
        const Arc& last = g.arc(word.back());
        if (g.arc(word.front()).origin == last.terminal &&
            word.front() != last.inverse && is_aperiodic(word))
            out.insert(min_rotation(word));
        if (static_cast<int>(word.size()) == max_len) return;
        for (int next : g.arcs_from(last.terminal)) {
            if (next == last.inverse) continue;
            word.push_back(next);
            extend();
            word.pop_back();
        }
    };
    for (int a = 0; a < g.arc_count(); ++a) {
        word.assign(1, a);
        extend();
    }
    return out;
}

json factor_multiset(const Graph& g, int max_len) {
    // Sorted list of (length, 2 Re w(C), |w(C)|^2) triples: exactly the data
    // entering the zeta's real quadratic factors.
    std::vector<std::array<std::string, 3>> rows;
    for (const ReducedCycle& c : enumerate_reduced_lyndon_cycles(g, max_len)) {
        const Quaternion w = cycle_weight(g, c);
        rows.push_back({std::to_string(c.length()), (w.re() + w.re()).str(), w.norm_sq().str()});
    }
    std::sort(rows.begin(), rows.end());
    json j = json::array();
    for (const auto& row : rows) j.push_back(json::array({row[0], row[1], row[2]}));
    return j;
}

Suite graph_suite() {
    Suite s{"graph", {}};

    s.checks.push_back({"malformed graphs are rejected", [](CheckContext&, json& fail) {
        using ES = Graph::EdgeSpec;
        const bool ok =
            throws_with([] { Graph::build(2, {ES{0, 0}}); }, "loops not allowed") &&
            throws_with([] { Graph::build(2, {ES{0, 1}, ES{1, 0}}); },
                        "multiple edges not allowed") &&
            throws_with([] { Graph::build(4, {ES{0, 1}, ES{2, 3}}); },
                        "graph must be connected") &&
            throws_with([] { Graph::build(2, {ES{0, 2}}); }, "vertex index out of range") &&
            throws_with([] { Graph::from_json_text("not json"); }, "input is not valid JSON") &&
            throws_with([] { Graph::from_json_text("[]"); }, "input must be a JSON object") &&
            throws_with([] { Graph::from_json_text(R"({"edges": []})"); },
                        "missing field 'vertices'") &&
            throws_with([] { Graph::from_json_text(R"({"vertices": ["a","a"], "edges": []})"); },
                        "duplicate vertex") &&
            throws_with(
                [] {
                    Graph::from_json_text(
                        R"({"vertices": ["a","b"], "edges": [{"u": "a", "v": "c"}]})");
                },
                "unknown vertex 'c'") &&
            throws_with(
                [] {
                    Graph::from_json_text(
                        R"({"vertices": ["a","b"],
                            "edges": [{"u": "a", "v": "b", "w_uv": ["1/x","0","0","0"]}]})");
                },
                "malformed rational");
        if (!ok) fail = {{"detail", "an expected loader error was not raised"}};
        return ok;
    }});

    s.checks.push_back({"cycle representatives are canonical", [](CheckContext&, json& fail) {
        const Graph graphs[] = {make_cycle(3), make_cycle(4), make_complete(4),
                                make_complete_bipartite(2, 3)};
        for (const Graph& g : graphs) {
            const auto cycles = enumerate_reduced_lyndon_cycles(g, 8);
            Word prev;
            for (const ReducedCycle& c : cycles) {
                bool ok = is_lyndon(c.arcs) && (prev.empty() || prev < c.arcs);
                for (size_t k = 0; ok && k < c.arcs.size(); ++k) {
                    const Arc& cur = g.arc(c.arcs[k]);
                    const Arc& nxt = g.arc(c.arcs[(k + 1) % c.arcs.size()]);
                    ok = cur.terminal == nxt.origin &&
                         c.arcs[(k + 1) % c.arcs.size()] != cur.inverse;
                }
                if (!ok) {
                    fail = {{"cycle", word_to_json(c.arcs)}};
                    return false;
                }
                prev = c.arcs;
            }
        }
        return true;
    }});

    s.checks.push_back({"enumeration matches exhaustive search", [](CheckContext&, json& fail) {
        const std::pair<Graph, int> cases[] = {
            {make_path(3), 8},           {make_cycle(3), 8}, {make_cycle(4), 8},
            {make_cycle(5), 8},          {make_complete(4), 7},
            {make_complete_bipartite(2, 3), 7},              {make_petersen(), 6}};
        for (const auto& [g, max_len] : cases) {
            const std::set<Word> expected = brute_cycle_words(g, max_len);
            std::set<Word> got;
            for (const ReducedCycle& c : enumerate_reduced_lyndon_cycles(g, max_len))
                got.insert(c.arcs);
            if (got != expected) {
                fail = {{"vertices", g.vertex_count()},
                        {"edges", g.edge_count()},
                        {"max_len", max_len},
                        {"enumerated", got.size()},
                        {"expected", expected.size()}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"pinned cycle counts", [](CheckContext&, json& fail) {
        const auto triangle = enumerate_reduced_lyndon_cycles(make_cycle(3), 3);
        long k4_len3 = 0;
        for (const ReducedCycle& c : enumerate_reduced_lyndon_cycles(make_complete(4), 3))
            if (c.length() == 3) ++k4_len3;
        const auto c4_long = enumerate_reduced_lyndon_cycles(make_cycle(4), 10);
        const auto tree = enumerate_reduced_lyndon_cycles(make_path(4), 10);
        const bool ok = triangle.size() == 2 && k4_len3 == 8 && c4_long.size() == 2 &&
                        tree.empty();
        if (!ok)
            fail = {{"triangle", triangle.size()},
                    {"k4_len3", k4_len3},
                    {"c4", c4_long.size()},
                    {"tree", tree.size()}};
        return ok;
    }});

    s.checks.push_back({"edge matrices implement the incidence rules",
                        [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < std::min(ctx.trials, 10); ++t) {
            const Graph g = ctx.sampler.reweight(make_complete(4));
            const EdgeMatrices em = build_edge_matrices(g);
            for (int e = 0; e < g.arc_count(); ++e)
                for (int f = 0; f < g.arc_count(); ++f) {
                    const Arc& ae = g.arc(e);
                    const Arc& af = g.arc(f);
                    const Quaternion b = ae.terminal == af.origin ? ae.weight : Quaternion();
                    const Quaternion j = f == ae.inverse ? ae.weight : Quaternion();
                    if (!(em.B(e, f) == b && em.J(e, f) == j)) {
                        fail = {{"e", e}, {"f", f}};
                        return false;
                    }
                }
        }
        return true;
    }});

    s.checks.push_back({"weighted vertex matrices match their definitions",
                        [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < std::min(ctx.trials, 10); ++t) {
            const Graph g = t % 2 == 0 ? ctx.sampler.reweight(make_cycle(3))
                                       : ctx.sampler.reweight(make_complete(4));
            const int order = 6;
            const VertexMatrices vm = build_vertex_matrices(g, order);
            const int n = g.vertex_count();
            SeriesMatrix<Quaternion> w(n, n, order);
            SeriesMatrix<Quaternion> d(n, n, order);
            const auto one = TruncatedSeries<Quaternion>::one(order);
            for (const Arc& arc : g.arcs()) {
                const Quaternion q = arc.weight * g.arc(arc.inverse).weight;
                const auto geo = (one - TruncatedSeries<Quaternion>::monomial(
                                            order, 2, q)).inverse();
                w(arc.origin, arc.terminal) += geo * arc.weight;
                d(arc.origin, arc.origin) += geo * q;
            }
            if (!(vm.weighted_adjacency == w && vm.weighted_degree == d)) {
                fail = {{"vertices", n}};
                return false;
            }
            for (int u = 0; u < n; ++u) {
                Rational deg(g.degree(u));
                if (!(vm.degree(u, u) == deg)) {
                    fail = {{"vertex", u}};
                    return false;
                }
            }
        }
        return true;
    }});

    s.checks.push_back({"factor data is arc-order invariant", [](CheckContext& ctx, json& fail) {
        const Graph g = ctx.sampler.reweight(make_complete(4));
        const json reference = factor_multiset(g, 6);
        for (int t = 0; t < std::min(ctx.trials, 10); ++t) {
            const Graph h = ctx.sampler.shuffle_arcs(g);
            const json shuffled = factor_multiset(h, 6);
            if (shuffled != reference) {
                fail = {{"trial", t}, {"reference", reference}, {"shuffled", shuffled}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"arc relabeling preserves structure", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < ctx.trials; ++t) {
            const Graph g = ctx.sampler.reweight(make_complete_bipartite(2, 3));
            const Graph h = ctx.sampler.shuffle_arcs(g);
            bool ok = h.vertex_count() == g.vertex_count() && h.edge_count() == g.edge_count();
            for (int a = 0; ok && a < h.arc_count(); ++a) {
                const Arc& arc = h.arc(a);
                const Arc& inv = h.arc(arc.inverse);
                ok = inv.inverse == a && inv.origin == arc.terminal &&
                     inv.terminal == arc.origin && inv.edge == arc.edge;
            }
            if (!ok) {
                fail = {{"trial", t}};
                return false;
            }
        }
        return true;
    }});

    return s;
}

// ---------------------------------------------------------------------------
// zeta suite

// Checks that the four quaternionic routes produce identical z and z_inv on
// g, and that z * z_inv = 1.
bool routes_agree(const Graph& g, int order, json& fail, const char* label) {
    const ZetaResult results[] = {zeta_euler(g, order), zeta_expgen(g, order),
                                  zeta_hashimoto(g, order), zeta_bass(g, order)};
    const auto one = TruncatedSeries<Rational>::one(order);
    for (const ZetaResult& r : results) {
        if (!(r.z * r.z_inv == one)) {
            fail = {{"graph", label}, {"method", std::string(method_name(r.method))}};
            return false;
        }
        if (!(r.z_inv == results[0].z_inv && r.z == results[0].z)) {
            fail = {{"graph", label},
                    {"method", std::string(method_name(r.method))},
                    {"z_inv", r.z_inv},
                    {"z_inv_euler", results[0].z_inv},
                    {"degree", first_mismatch(r.z_inv, results[0].z_inv)}};
            return false;
        }
    }
    return true;
}

Suite zeta_suite() {
    Suite s{"zeta", {}};

    s.checks.push_back({"routes agree at unit weights", [](CheckContext&, json& fail) {
        const std::pair<Graph, const char*> cases[] = {
            {make_path(3), "P3"},
            {make_cycle(3), "C3"}, {make_cycle(4), "C4"}, {make_cycle(5), "C5"},
            {make_complete(4), "K4"}, {make_complete_bipartite(2, 3), "K23"}};
        for (const auto& [g, label] : cases)
            if (!routes_agree(g, 8, fail, label)) return false;
        return true;
    }});

    s.checks.push_back({"routes agree on random weights", [](CheckContext& ctx, json& fail) {
        const Graph bases[] = {make_cycle(3), make_cycle(4), make_complete(4),
                               make_complete_bipartite(2, 3)};
        for (int t = 0; t < ctx.trials; ++t) {
            const Graph g = ctx.sampler.reweight(bases[static_cast<size_t>(t) % 4]);
            if (!routes_agree(g, 6, fail, "random")) {
                fail["trial"] = t;
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"classical square at unit weights", [](CheckContext&, json& fail) {
        const std::pair<Graph, const char*> cases[] = {
            {make_cycle(3), "C3"}, {make_cycle(4), "C4"}, {make_complete(4), "K4"},
            {make_complete_bipartite(2, 3), "K23"}, {make_path(4), "P4"}};
        for (const auto& [g, label] : cases) {
            const int order = 8;
            const IharaZeta ih = ihara_zeta(g, order);
            const ZetaResult hash = zeta_hashimoto(g, order);
            if (!(ih.z_inv_edge == ih.z_inv_bass &&
                  ih.z_inv_edge * ih.z_inv_edge == hash.z_inv)) {
                fail = {{"graph", label},
                        {"classical", ih.z_inv_edge},
                        {"quaternionic", hash.z_inv}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"cycle graphs in closed form", [](CheckContext&, json& fail) {
        for (int n = 3; n <= 6; ++n) {
            const int order = 10;
            const auto one = TruncatedSeries<Rational>::one(order);
            const auto expected =
                (one - TruncatedSeries<Rational>::monomial(order, n, Rational(1))).pow(4);
            const ZetaResult r = zeta_euler(make_cycle(n), order);
            if (!(r.z_inv == expected && r.z == expected.inverse())) {
                fail = {{"n", n}, {"z_inv", r.z_inv}, {"expected", expected}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"trees are trivial", [](CheckContext&, json& fail) {
        for (int n : {2, 3, 5}) {
            const Graph g = make_path(n);
            const int order = 6;
            const auto one = TruncatedSeries<Rational>::one(order);
            if (!routes_agree(g, order, fail, "path")) return false;
            if (!(zeta_euler(g, order).z == one)) {
                fail = {{"n", n}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"bipartite parity", [](CheckContext& ctx, json& fail) {
        for (int t = 0; t < std::min(ctx.trials, 6); ++t) {
            const Graph g = t == 0 ? make_complete_bipartite(2, 3)
                                   : ctx.sampler.reweight(make_complete_bipartite(2, 3));
            const int order = 9;
            const ZetaResult r = zeta_euler(g, order);
            for (int k = 1; k <= order; k += 2)
                if (!(r.z_inv.coeff(k).is_zero() && r.z.coeff(k).is_zero())) {
                    fail = {{"trial", t}, {"degree", k}, {"z_inv", r.z_inv}};
                    return false;
                }
        }
        return true;
    }});

    s.checks.push_back({"complex weights factor over the gaussians",
                        [](CheckContext& ctx, json& fail) {
        const Graph bases[] = {make_cycle(3), make_cycle(4), make_complete(4)};
        for (int t = 0; t < std::min(ctx.trials, 9); ++t) {
            // Reweight with weights confined to the complex subfield.
            const Graph& base = bases[static_cast<size_t>(t) % 3];
            std::vector<Graph::EdgeSpec> edges;
            std::vector<int> representative(static_cast<size_t>(base.edge_count()), -1);
            for (int a = 0; a < base.arc_count(); ++a)
                if (representative[static_cast<size_t>(base.arc(a).edge)] == -1)
                    representative[static_cast<size_t>(base.arc(a).edge)] = a;
            for (int rep : representative) {
                const Arc& arc = base.arc(rep);
                edges.push_back({arc.origin, arc.terminal, ctx.sampler.complex_quaternion(),
                                 ctx.sampler.complex_quaternion()});
            }
            const Graph g = Graph::build(base.vertex_count(), edges);

            const int order = 6;
            auto gs = TruncatedSeries<GaussianRational>::one(order);
            for (const ReducedCycle& c : enumerate_reduced_lyndon_cycles(g, order)) {
                const Quaternion w = cycle_weight(g, c);
                if (!w.is_complex()) {
                    fail = {{"trial", t}, {"detail", "cycle weight left the complex subfield"}};
                    return false;
                }
                gs *= (TruncatedSeries<GaussianRational>::one(order) -
                       TruncatedSeries<GaussianRational>::monomial(order, c.length(),
                                                                   w.simplex()))
                          .inverse();
            }
            const auto h = gs * conjugate(gs);
            const ZetaResult r = zeta_euler(g, order);
            for (int k = 0; k <= order; ++k)
                if (!(h.coeff(k).is_real() && h.coeff(k).re() == r.z.coeff(k))) {
                    fail = {{"trial", t}, {"degree", k}, {"z", r.z}};
                    return false;
                }
        }
        return true;
    }});

    s.checks.push_back({"arc order does not change the zeta", [](CheckContext& ctx, json& fail) {
        const Graph g = ctx.sampler.reweight(make_complete(4));
        const int order = 6;
        const auto reference_hash = zeta_hashimoto(g, order).z_inv;
        const auto reference_euler = zeta_euler(g, order).z_inv;
        if (!(reference_hash == reference_euler)) {
            fail = {{"detail", "routes disagree before relabeling"}};
            return false;
        }
        for (int t = 0; t < std::min(ctx.trials, 5); ++t) {
            const Graph h = ctx.sampler.shuffle_arcs(g);
            if (!(zeta_hashimoto(h, order).z_inv == reference_hash &&
                  zeta_euler(h, order).z_inv == reference_hash)) {
                fail = {{"trial", t}};
                return false;
            }
        }
        return true;
    }});

    s.checks.push_back({"comparison report is coherent", [](CheckContext&, json& fail) {
        const std::vector<Method> methods(std::begin(kAllMethods), std::end(kAllMethods));
        const ComparisonReport rep = compare_methods(make_cycle(3), 8, methods);
        bool ok = rep.agreement && !rep.first_discrepancy && rep.results.size() == 5 &&
                  rep.vertex_count == 3 && rep.edge_count == 3 && rep.order == 8;
        for (size_t i = 0; ok && i < rep.results.size(); ++i) {
            ok = rep.results[i].method == kAllMethods[i];
            if (rep.results[i].method == Method::ihara)
                ok = ok && comparable_series(rep.results[i]) ==
                               rep.results[i].z_inv * rep.results[i].z_inv;
        }
        if (!ok) fail = {{"agreement", rep.agreement}};
        return ok;
    }});

    return s;
}

std::vector<Suite> build_suites() {
    return {quaternion_suite(), series_suite(), lyndon_suite(),
            study_suite(),      graph_suite(),  zeta_suite()};
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"quaternion", "series", "lyndon", "study", "graph", "zeta"};
}

int run_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err) {
    if (config.trials < 1) {
        err << "error: trials must be at least 1\n";
        return 2;
    }
    const std::vector<std::string> names = verify_suite_names();
    if (config.suite != "all" &&
        std::find(names.begin(), names.end(), config.suite) == names.end()) {
        err << "error: unknown suite '" << config.suite << "' (expected all";
        for (const std::string& n : names) err << ", " << n;
        err << ")\n";
        return 2;
    }

    Sampler sampler(config.seed);
    SdetFn sdet = [](const SeriesMatrix<Quaternion>& m) { return sdet_t(m); };
    if (config.corrupt_sdet) {
        // Adds t to every Study determinant: the result stays real, so the
        // realness check passes, but multiplicativity must catch it.
        sdet = [](const SeriesMatrix<Quaternion>& m) {
            TruncatedSeries<Rational> d = sdet_t(m);
            if (d.order() >= 1) d.set_coeff(1, d.coeff(1) + Rational(1));
            return d;
        };
    }
    CheckContext ctx{sampler, config.trials, std::move(sdet)};

    int ran = 0;
    for (const Suite& suite : build_suites()) {
        if (config.suite != "all" && suite.name != config.suite) continue;
        for (const Check& check : suite.checks) {
            json fail;
            bool ok = false;
            try {
                ok = check.run(ctx, fail);
            } catch (const std::exception& e) {
                fail = {{"exception", e.what()}};
            }
            if (!ok) {
                out << "FAIL " << suite.name << ": " << check.name << "\n";
                if (!fail.is_null()) out << "  instance: " << fail.dump() << "\n";
                out << "verification failed: " << suite.name << ": " << check.name << " (seed "
                    << config.seed << ")\n";
                return 1;
            }
            out << "ok   " << suite.name << ": " << check.name << "\n";
            ++ran;
        }
    }
    out << "verification passed: " << ran << " checks (seed " << config.seed << ", trials "
        << config.trials << ")\n";
    return 0;
}

}  // namespace qzeta
