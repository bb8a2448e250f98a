#pragma once

#include "qzeta/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qzeta {

// Formal power series in one central indeterminate t over a (possibly
// noncommutative) coefficient ring C, truncated at a fixed order: every
// value carries coefficients of t^0 .. t^order and all arithmetic is exact
// modulo t^(order+1). Combining series of different orders is a usage error
// and throws; nothing silently re-truncates.
//
// C must provide: default construction (zero), construction from long and
// from Rational (the central embedding of scalars), +, -, unary -, *, ==,
// is_zero(), inverse(), and a free conjugate(const C&).
template <class C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(static_cast<size_t>(checked(order)) + 1) {}
    TruncatedSeries(int order, C constant) : TruncatedSeries(order) { c_[0] = std::move(constant); }

    static TruncatedSeries one(int order) { return {order, C(1)}; }

    // c * t^k. Exponents beyond the truncation order yield the zero series.
    static TruncatedSeries monomial(int order, int k, C c) {
        if (k < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
        TruncatedSeries s(order);
        if (k <= order) s.c_[static_cast<size_t>(k)] = std::move(c);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const C& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    void set_coeff(int k, C c) { c_.at(static_cast<size_t>(k)) = std::move(c); }

    bool is_zero() const {
        for (const C& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(order());
        for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_order(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_order(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries r(a.order());
        for (size_t k = 0; k < a.c_.size(); ++k) {
            if (a.c_[k].is_zero()) continue;
            for (size_t l = 0; k + l < b.c_.size(); ++l) {
                if (b.c_[l].is_zero()) continue;
                r.c_[k + l] += a.c_[k] * b.c_[l];
            }
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    // Scalar multiplication; left and right versions both provided because
    // C may be noncommutative.
    friend TruncatedSeries operator*(const C& c, const TruncatedSeries& s) {
        TruncatedSeries r(s.order());
        for (size_t k = 0; k < s.c_.size(); ++k) r.c_[k] = c * s.c_[k];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& s, const C& c) {
        TruncatedSeries r(s.order());
        for (size_t k = 0; k < s.c_.size(); ++k) r.c_[k] = s.c_[k] * c;
        return r;
    }

    // Multiplication by t^k (coefficients beyond the order fall away).
    TruncatedSeries shifted(int k) const {
        if (k < 0) throw std::invalid_argument("shift must be nonnegative");
        TruncatedSeries r(order());
        for (size_t l = 0; l + static_cast<size_t>(k) < c_.size(); ++l)
            r.c_[l + static_cast<size_t>(k)] = c_[l];
        return r;
    }

    TruncatedSeries pow(unsigned e) const {
        TruncatedSeries r = one(order());
        TruncatedSeries base = *this;
        while (e != 0) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    // Two-sided multiplicative inverse; requires an invertible constant term.
    TruncatedSeries inverse() const {
        if (c_[0].is_zero()) throw std::domain_error("series not invertible");
        const C c0inv = c_[0].inverse();
        TruncatedSeries r(order());
        r.c_[0] = c0inv;
        for (size_t m = 1; m < c_.size(); ++m) {
            C acc;
            for (size_t k = 1; k <= m; ++k) {
                if (c_[k].is_zero()) continue;
                acc += c_[k] * r.c_[m - k];
            }
            r.c_[m] = c0inv * (-acc);
        }
        return r;
    }

    // exp(f) = sum f^m / m!; f must have zero constant term so the sum is
    // finite in the truncated ring.
    TruncatedSeries exp() const {
        if (!c_[0].is_zero()) throw std::domain_error("exp requires zero constant term");
        TruncatedSeries r = one(order());
        TruncatedSeries term = one(order());
        for (int m = 1; m <= order(); ++m) {
            term *= *this;
            term = term * C(Rational(1, m));
            r += term;
        }
        return r;
    }

    // log(f) = sum (-1)^(n+1) (f-1)^n / n; f must have constant term 1.
    TruncatedSeries log() const {
        if (!(c_[0] == C(1))) throw std::domain_error("log requires constant term 1");
        TruncatedSeries beta = *this - one(order());
        TruncatedSeries r(order());
        TruncatedSeries pw = one(order());
        for (int n = 1; n <= order(); ++n) {
            pw *= beta;
            r += pw * C(Rational(n % 2 == 1 ? 1 : -1, n));
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    static int checked(int order) {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
        return order;
    }
    void require_same_order(const TruncatedSeries& o) const {
        if (order() != o.order()) throw std::invalid_argument("series order mismatch");
    }

    std::vector<C> c_;
};

// Coefficientwise conjugation.
template <class C>
TruncatedSeries<C> conjugate(const TruncatedSeries<C>& s) {
    TruncatedSeries<C> r(s.order());
    for (int k = 0; k <= s.order(); ++k) r.set_coeff(k, conjugate(s.coeff(k)));
    return r;
}

// Smallest degree at which two series differ, or -1 if they are equal.
template <class C>
int first_mismatch(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    for (int k = 0; k <= a.order(); ++k)
        if (!(a.coeff(k) == b.coeff(k))) return k;
    return -1;
}

}  // namespace qzeta
