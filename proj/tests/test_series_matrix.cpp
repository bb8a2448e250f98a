#include <doctest.h>

#include <stdexcept>

#include "qzeta/quaternion.hpp"
#include "qzeta/sampling.hpp"
#include "qzeta/series_matrix.hpp"

using qzeta::GaussianRational;
using qzeta::Mat;
using qzeta::Quaternion;
using qzeta::Rational;
using qzeta::Sampler;
using qzeta::SeriesMatrix;
using qzeta::TruncatedSeries;

using QS = TruncatedSeries<Quaternion>;
using RS = TruncatedSeries<Rational>;
using GS = TruncatedSeries<GaussianRational>;

namespace {

SeriesMatrix<Quaternion> constant_matrix(std::initializer_list<std::initializer_list<Quaternion>> rows,
                                         int order) {
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.begin()->size());
    SeriesMatrix<Quaternion> m(r, c, order);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (const Quaternion& q : row) m(i, j++) = QS(order, q);
        ++i;
    }
    return m;
}

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();

}  // namespace

TEST_SUITE("series_matrix") {

TEST_CASE("identity, shapes, and errors") {
    const auto id = SeriesMatrix<Rational>::identity(2, 3);
    CHECK(id(0, 0) == RS::one(3));
    CHECK(id(0, 1) == RS(3));
    CHECK_THROWS_AS(id(2, 0), std::out_of_range);
    CHECK_THROWS_WITH_AS(SeriesMatrix<Rational>(2, 2, 3) + SeriesMatrix<Rational>(2, 2, 4),
                         "series order mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(SeriesMatrix<Rational>(2, 2, 3) + SeriesMatrix<Rational>(2, 3, 3),
                         "matrix shape mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(SeriesMatrix<Rational>(2, 3, 3) * SeriesMatrix<Rational>(2, 3, 3),
                         "matrix shape mismatch", std::invalid_argument);
    CHECK_THROWS_AS(det_t(SeriesMatrix<Rational>(2, 3, 3)), std::invalid_argument);
}

TEST_CASE("determinant by elimination") {
    // det [[1 - t, 2t], [3t, 1 + t]] = 1 - 7t^2 exactly.
    SeriesMatrix<Rational> m(2, 2, 4);
    m(0, 0) = RS::one(4) - RS::monomial(4, 1, Rational(1));
    m(0, 1) = RS::monomial(4, 1, Rational(2));
    m(1, 0) = RS::monomial(4, 1, Rational(3));
    m(1, 1) = RS::one(4) + RS::monomial(4, 1, Rational(1));
    const RS d = det_t(m);
    CHECK(d == RS::one(4) - RS::monomial(4, 2, Rational(7)));
}

TEST_CASE("determinant needing a row swap") {
    // det [[t, 1], [1, t]] = t^2 - 1.
    SeriesMatrix<Rational> m(2, 2, 3);
    m(0, 0) = RS::monomial(3, 1, Rational(1));
    m(0, 1) = RS::one(3);
    m(1, 0) = RS::one(3);
    m(1, 1) = RS::monomial(3, 1, Rational(1));
    CHECK(det_t(m) == RS::monomial(3, 2, Rational(1)) - RS::one(3));
}

TEST_CASE("determinant via the cofactor fallback") {
    // All constant terms vanish, so elimination cannot pivot:
    // det [[t, 2t], [3t, 4t]] = -2t^2.
    SeriesMatrix<Rational> m(2, 2, 3);
    m(0, 0) = RS::monomial(3, 1, Rational(1));
    m(0, 1) = RS::monomial(3, 1, Rational(2));
    m(1, 0) = RS::monomial(3, 1, Rational(3));
    m(1, 1) = RS::monomial(3, 1, Rational(4));
    CHECK(det_t(m) == RS::monomial(3, 2, Rational(-2)));
    // Singular matrix: det [[t, t], [t, t]] = 0.
    const RS t_monomial = RS::monomial(3, 1, Rational(1));
    m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = t_monomial;
    CHECK(det_t(m).is_zero());
}

TEST_CASE("determinant is multiplicative (commutative coefficients)") {
    Sampler sampler(5);
    for (int t = 0; t < 10; ++t) {
        const int n = static_cast<int>(sampler.uniform(1, 3));
        const int order = static_cast<int>(sampler.uniform(0, 4));
        const auto a = sampler.series_matrix<GaussianRational>(n, n, order);
        const auto b = sampler.series_matrix<GaussianRational>(n, n, order);
        CHECK(det_t(a * b) == det_t(a) * det_t(b));
    }
}

TEST_CASE("symplectic embedding of the units") {
    // psi(j) = [[0, -1], [1, 0]] on constants.
    const auto pj = psi_t(constant_matrix({{J}}, 0));
    CHECK(pj(0, 0) == GS(0));
    CHECK(pj(0, 1) == GS(0, GaussianRational(-1)));
    CHECK(pj(1, 0) == GS(0, GaussianRational(1)));
    CHECK(pj(1, 1) == GS(0));
    // psi(i) = diag(i, -i).
    const auto pi = psi_t(constant_matrix({{I}}, 0));
    CHECK(pi(0, 0) == GS(0, GaussianRational::i()));
    CHECK(pi(0, 1) == GS(0));
    CHECK(pi(1, 0) == GS(0));
    CHECK(pi(1, 1) == GS(0, GaussianRational::i().conj()));
}

TEST_CASE("symplectic embedding is multiplicative") {
    Sampler sampler(6);
    for (int t = 0; t < 10; ++t) {
        const int n = static_cast<int>(sampler.uniform(1, 3));
        const int order = static_cast<int>(sampler.uniform(0, 3));
        const auto a = sampler.series_matrix<Quaternion>(n, n, order);
        const auto b = sampler.series_matrix<Quaternion>(n, n, order);
        CHECK(psi_t(a * b) == psi_t(a) * psi_t(b));
        CHECK(psi_t(a + b) == psi_t(a) + psi_t(b));
    }
}

TEST_CASE("study determinant of scalars") {
    // sdet [q] = |q|^2.
    const Quaternion q(Rational(1), Rational(1), Rational(1), Rational(1));
    CHECK(sdet_t(constant_matrix({{q}}, 0)) == RS(0, Rational(4)));
    CHECK(sdet_t(constant_matrix({{Quaternion()}}, 2)) == RS(2));
}

TEST_CASE("study determinant worked 2x2 example") {
    // sdet [[1, i], [j, 1]] = 2, computed through the symplectic image;
    // the naive "ad - bc" has norm |1 - ij|^2 = |1 - k|^2 = 2 here too.
    CHECK(sdet_t(constant_matrix({{Quaternion(1), I}, {J, Quaternion(1)}}, 0)) ==
          RS(0, Rational(2)));
}

TEST_CASE("transpose counterexample") {
    // sdet is NOT invariant under transposition: M = [[1, i], [j, k]] has
    // sdet 4, its transpose has sdet 0.
    const auto m = constant_matrix({{Quaternion(1), I}, {J, K}}, 0);
    CHECK(sdet_t(m) == RS(0, Rational(4)));
    CHECK(sdet_t(m.transpose()) == RS(0));
}

TEST_CASE("study determinant is real on random input") {
    Sampler sampler(7);
    for (int t = 0; t < 10; ++t) {
        const int n = static_cast<int>(sampler.uniform(1, 3));
        const int order = static_cast<int>(sampler.uniform(0, 4));
        const auto m = sampler.series_matrix<Quaternion>(n, n, order);
        const auto d = det_t(psi_t(m));
        for (int k = 0; k <= order; ++k) CHECK(d.coeff(k).is_real());
        // And sdet_t agrees with the real part of that determinant.
        const auto sd = sdet_t(m);
        for (int k = 0; k <= order; ++k) CHECK(sd.coeff(k) == d.coeff(k).re());
    }
}

TEST_CASE("study determinant multiplicativity and sylvester") {
    Sampler sampler(8);
    for (int t = 0; t < 8; ++t) {
        const int n = static_cast<int>(sampler.uniform(1, 2));
        const int order = static_cast<int>(sampler.uniform(0, 3));
        const auto a = sampler.series_matrix<Quaternion>(n, n, order);
        const auto b = sampler.series_matrix<Quaternion>(n, n, order);
        CHECK(sdet_t(a * b) == sdet_t(a) * sdet_t(b));
        const int p = static_cast<int>(sampler.uniform(1, 2));
        const auto x = sampler.series_matrix<Quaternion>(n, p, order);
        const auto y = sampler.series_matrix<Quaternion>(p, n, order);
        CHECK(sdet_t(SeriesMatrix<Quaternion>::identity(n, order) - x * y) ==
              sdet_t(SeriesMatrix<Quaternion>::identity(p, order) - y * x));
    }
}

TEST_CASE("matrix transpose and swaps") {
    Sampler sampler(9);
    const auto m = sampler.series_matrix<Rational>(2, 3, 2);
    const auto mt = m.transpose();
    CHECK(mt.rows() == 3);
    CHECK(mt.cols() == 2);
    CHECK(mt(2, 1) == m(1, 2));
    auto sq = sampler.series_matrix<Rational>(3, 3, 2);
    auto swapped = sq;
    swapped.swap_rows(0, 2);
    CHECK(swapped(0, 1) == sq(2, 1));
    CHECK(swapped(2, 1) == sq(0, 1));
    swapped = sq;
    swapped.swap_cols(1, 2);
    CHECK(swapped(0, 1) == sq(0, 2));
}

}  // TEST_SUITE
