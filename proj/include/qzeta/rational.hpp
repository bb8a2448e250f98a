#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qzeta {

// Arbitrary-precision rational number, always held in canonical form
// (lowest terms, positive denominator). Thin value wrapper over GMP's
// mpq_class; all operations are exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);

    // Parses "p" or "p/q" in base 10 with an optional leading '-'.
    // Throws std::invalid_argument on anything else (including "1/0").
    static Rational from_string(std::string_view s);

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    // Throws std::domain_error on zero.
    Rational inverse() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    // Total order; used for canonical sorting in diagnostics and tests.
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

// Conjugation is the identity on the real subfield; provided so generic
// series code can conjugate coefficients of any supported type.
inline Rational conjugate(const Rational& r) { return r; }

}  // namespace qzeta
