#include <doctest.h>

#include <stdexcept>

#include "qzeta/quaternion.hpp"
#include "qzeta/sampling.hpp"
#include "qzeta/series.hpp"

using qzeta::Quaternion;
using qzeta::Rational;
using qzeta::Sampler;
using qzeta::TruncatedSeries;

using QS = TruncatedSeries<Quaternion>;
using RS = TruncatedSeries<Rational>;

namespace {
const Quaternion J = Quaternion::unit_j();
const Quaternion K = Quaternion::unit_k();
}  // namespace

TEST_SUITE("series") {

TEST_CASE("construction and coefficient access") {
    RS s(3);
    CHECK(s.order() == 3);
    CHECK(s.is_zero());
    s.set_coeff(2, Rational(5));
    CHECK(s.coeff(2) == Rational(5));
    CHECK(s.coeff(0) == Rational());
    CHECK_FALSE(s.is_zero());
    CHECK(RS::one(2).coeff(0) == Rational(1));
    CHECK(RS::monomial(4, 2, Rational(7)).coeff(2) == Rational(7));
    CHECK(RS::monomial(4, 9, Rational(7)).is_zero());  // beyond the order
    CHECK_THROWS_AS(RS(-1), std::invalid_argument);
    CHECK_THROWS_AS(RS::monomial(4, -1, Rational(1)), std::invalid_argument);
}

TEST_CASE("geometric series of j") {
    // (1 - j t)^{-1} = 1 + j t - t^2 - j t^3 at order 3, since j^2 = -1.
    const QS f = QS::one(3) - QS::monomial(3, 1, J);
    const QS inv = f.inverse();
    CHECK(inv.coeff(0) == Quaternion(1));
    CHECK(inv.coeff(1) == J);
    CHECK(inv.coeff(2) == Quaternion(-1));
    CHECK(inv.coeff(3) == -J);
    CHECK(f * inv == QS::one(3));
    CHECK(inv * f == QS::one(3));
}

TEST_CASE("conjugate factor pair is real") {
    // (1 + j t)(1 + j t)* = 1 + t^2.
    const QS f = QS::one(2) + QS::monomial(2, 1, J);
    const QS p = f * qzeta::conjugate(f);
    CHECK(p == QS::one(2) + QS::monomial(2, 2, Quaternion(1)));
}

TEST_CASE("exp of a quaternion monomial") {
    // exp(k t) = 1 + k t - t^2/2 at order 2.
    const QS e = QS::monomial(2, 1, K).exp();
    CHECK(e.coeff(0) == Quaternion(1));
    CHECK(e.coeff(1) == K);
    CHECK(e.coeff(2) == Quaternion(Rational(-1, 2)));
}

TEST_CASE("log of 1 + t") {
    const RS f = RS::one(3) + RS::monomial(3, 1, Rational(1));
    const RS l = f.log();
    CHECK(l.coeff(0) == Rational());
    CHECK(l.coeff(1) == Rational(1));
    CHECK(l.coeff(2) == Rational(-1, 2));
    CHECK(l.coeff(3) == Rational(1, 3));
}

TEST_CASE("pow") {
    const RS f = RS::one(3) + RS::monomial(3, 1, Rational(1));
    const RS cube = f.pow(3);
    CHECK(cube.coeff(0) == Rational(1));
    CHECK(cube.coeff(1) == Rational(3));
    CHECK(cube.coeff(2) == Rational(3));
    CHECK(cube.coeff(3) == Rational(1));
    CHECK(f.pow(0) == RS::one(3));
}

TEST_CASE("shifted") {
    const RS f = RS::one(3) + RS::monomial(3, 1, Rational(2));
    const RS s = f.shifted(2);
    CHECK(s.coeff(0) == Rational());
    CHECK(s.coeff(1) == Rational());
    CHECK(s.coeff(2) == Rational(1));
    CHECK(s.coeff(3) == Rational(2));
    CHECK_THROWS_AS(f.shifted(-1), std::invalid_argument);
}

TEST_CASE("scalar multiplication sides differ over quaternions") {
    const QS f = QS::monomial(2, 1, J);
    CHECK((K * f).coeff(1) == K * J);
    CHECK((f * K).coeff(1) == J * K);
    CHECK((K * f).coeff(1) != (f * K).coeff(1));
}

TEST_CASE("inverse requires invertible constant term") {
    CHECK_THROWS_WITH_AS(QS(3).inverse(), "series not invertible", std::domain_error);
    CHECK_THROWS_WITH_AS(QS::monomial(3, 1, J).inverse(), "series not invertible",
                         std::domain_error);
}

TEST_CASE("exp and log domain checks") {
    CHECK_THROWS_WITH_AS(QS::one(3).exp(), "exp requires zero constant term", std::domain_error);
    CHECK_THROWS_WITH_AS(QS(3).log(), "log requires constant term 1", std::domain_error);
    CHECK_THROWS_WITH_AS((QS(3) + QS::one(3) + QS::one(3)).log(), "log requires constant term 1",
                         std::domain_error);
}

TEST_CASE("order mismatch always throws") {
    CHECK_THROWS_WITH_AS(RS(3) + RS(4), "series order mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(RS(3) - RS(4), "series order mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(RS(3) * RS(4), "series order mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)(RS(3) == RS(4)), "series order mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(qzeta::first_mismatch(RS(3), RS(4)), "series order mismatch",
                         std::invalid_argument);
}

TEST_CASE("first_mismatch") {
    RS a = RS::one(4);
    RS b = RS::one(4);
    CHECK(qzeta::first_mismatch(a, b) == -1);
    b.set_coeff(3, Rational(1));
    CHECK(qzeta::first_mismatch(a, b) == 3);
    a.set_coeff(0, Rational(2));
    CHECK(qzeta::first_mismatch(a, b) == 0);
}

TEST_CASE("randomized inverse and exp/log round trips") {
    Sampler sampler(2);
    for (int t = 0; t < 25; ++t) {
        const auto f = sampler.invertible_series<Quaternion>(6);
        CHECK(f * f.inverse() == QS::one(6));
        CHECK(f.inverse() * f == QS::one(6));
        const auto a = sampler.zero_constant_series<Quaternion>(6);
        CHECK(a.exp().log() == a);
        const auto u = sampler.unit_series<Quaternion>(6);
        CHECK(u.log().exp() == u);
    }
}

}  // TEST_SUITE
