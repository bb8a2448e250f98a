#pragma once

#include "qzeta/rational.hpp"

#include <iosfwd>

namespace qzeta {

// Element of Q(i), the Gaussian rationals. Coefficient field for the
// complex image of quaternionic matrices under the symplectic embedding.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    // Throws std::domain_error on zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

private:
    Rational re_, im_;
};

inline GaussianRational conjugate(const GaussianRational& z) { return z.conj(); }

// Quaternion x0 + x1 i + x2 j + x3 k over the rationals, with the Hamilton
// relations i^2 = j^2 = k^2 = ijk = -1. The symplectic decomposition used
// throughout writes x = a + j b with complex a (simplex part) and b (perplex
// part); note that j sits on the *left* of b.
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(long n) : x0_(n) {}
    Quaternion(Rational x0) : x0_(std::move(x0)) {}
    Quaternion(Rational x0, Rational x1, Rational x2, Rational x3)
        : x0_(std::move(x0)), x1_(std::move(x1)), x2_(std::move(x2)), x3_(std::move(x3)) {}

    static Quaternion unit_i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
    static Quaternion unit_j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
    static Quaternion unit_k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

    // Embedding of Q(i) along the i-axis.
    static Quaternion from_complex(const GaussianRational& z) {
        return {z.re(), z.im(), Rational(0), Rational(0)};
    }
    // Reassembles x = a + j b from the symplectic parts.
    static Quaternion from_symplectic(const GaussianRational& a, const GaussianRational& b) {
        return {a.re(), a.im(), b.re(), -b.im()};
    }

    const Rational& x0() const { return x0_; }
    const Rational& x1() const { return x1_; }
    const Rational& x2() const { return x2_; }
    const Rational& x3() const { return x3_; }

    const Rational& re() const { return x0_; }

    bool is_zero() const {
        return x0_.is_zero() && x1_.is_zero() && x2_.is_zero() && x3_.is_zero();
    }
    bool is_real() const { return x1_.is_zero() && x2_.is_zero() && x3_.is_zero(); }
    // True iff x2 = x3 = 0, i.e. the value lies in the complex subfield span(1, i).
    bool is_complex() const { return x2_.is_zero() && x3_.is_zero(); }

    Quaternion conj() const { return {x0_, -x1_, -x2_, -x3_}; }
    Rational norm_sq() const { return x0_ * x0_ + x1_ * x1_ + x2_ * x2_ + x3_ * x3_; }

    GaussianRational simplex() const { return {x0_, x1_}; }
    GaussianRational perplex() const { return {x2_, -x3_}; }

    // Throws std::domain_error on zero.
    Quaternion inverse() const;

    Quaternion operator-() const { return {-x0_, -x1_, -x2_, -x3_}; }

    Quaternion& operator+=(const Quaternion& o) {
        x0_ += o.x0_;
        x1_ += o.x1_;
        x2_ += o.x2_;
        x3_ += o.x3_;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        x0_ -= o.x0_;
        x1_ -= o.x1_;
        x2_ -= o.x2_;
        x3_ -= o.x3_;
        return *this;
    }
    Quaternion& operator*=(const Quaternion& o) {
        *this = *this * o;
        return *this;
    }

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.x0_ * b.x0_ - a.x1_ * b.x1_ - a.x2_ * b.x2_ - a.x3_ * b.x3_,
                a.x0_ * b.x1_ + a.x1_ * b.x0_ + a.x2_ * b.x3_ - a.x3_ * b.x2_,
                a.x0_ * b.x2_ - a.x1_ * b.x3_ + a.x2_ * b.x0_ + a.x3_ * b.x1_,
                a.x0_ * b.x3_ + a.x1_ * b.x2_ - a.x2_ * b.x1_ + a.x3_ * b.x0_};
    }
    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.x0_ == b.x0_ && a.x1_ == b.x1_ && a.x2_ == b.x2_ && a.x3_ == b.x3_;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q);

private:
    Rational x0_, x1_, x2_, x3_;
};

inline Quaternion conjugate(const Quaternion& q) { return q.conj(); }

}  // namespace qzeta
