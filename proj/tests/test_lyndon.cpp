#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qzeta/lyndon.hpp"
#include "qzeta/sampling.hpp"

using qzeta::GaussianRational;
using qzeta::Mat;
using qzeta::Quaternion;
using qzeta::Rational;
using qzeta::Sampler;
using qzeta::SeriesMatrix;
using qzeta::Word;
using qzeta::WordSeries;

TEST_SUITE("lyndon") {

TEST_CASE("generation over two letters") {
    const std::vector<Word> expected = {{1}, {1, 1, 2}, {1, 2}, {1, 2, 2}, {2}};
    CHECK(qzeta::lyndon_words(2, 3) == expected);
    CHECK(qzeta::lyndon_words(2, 5).size() == 14);
    CHECK(qzeta::lyndon_words(1, 4) == std::vector<Word>{{1}});
    CHECK(qzeta::lyndon_words(3, 1) == std::vector<Word>{{1}, {2}, {3}});
}

TEST_CASE("membership") {
    CHECK(qzeta::is_lyndon({1}));
    CHECK(qzeta::is_lyndon({1, 2}));
    CHECK(qzeta::is_lyndon({1, 1, 2}));
    CHECK(qzeta::is_lyndon({1, 2, 2}));
    CHECK_FALSE(qzeta::is_lyndon({2, 1}));
    CHECK_FALSE(qzeta::is_lyndon({1, 1}));       // periodic
    CHECK_FALSE(qzeta::is_lyndon({1, 2, 1, 2})); // periodic
    CHECK_FALSE(qzeta::is_lyndon({}));
}

TEST_CASE("factorization") {
    CHECK(qzeta::lyndon_factorize({2, 1}) == std::vector<Word>{{2}, {1}});
    CHECK(qzeta::lyndon_factorize({1, 1}) == std::vector<Word>{{1}, {1}});
    CHECK(qzeta::lyndon_factorize({1, 2, 1, 2}) == std::vector<Word>{{1, 2}, {1, 2}});
    CHECK(qzeta::lyndon_factorize({1, 2}) == std::vector<Word>{{1, 2}});
    CHECK(qzeta::lyndon_factorize({3, 2, 1}) == std::vector<Word>{{3}, {2}, {1}});
    CHECK(qzeta::lyndon_factorize({1, 3, 1, 2}) == std::vector<Word>{{1, 3}, {1, 2}});
    CHECK_THROWS_AS(qzeta::lyndon_factorize({}), std::invalid_argument);
}

TEST_CASE("word series arithmetic is noncommutative") {
    const int max_len = 4;
    const WordSeries x1 = WordSeries::monomial(max_len, {1});
    const WordSeries x2 = WordSeries::monomial(max_len, {2});
    CHECK(x1 * x2 == WordSeries::monomial(max_len, {1, 2}));
    CHECK(x2 * x1 == WordSeries::monomial(max_len, {2, 1}));
    CHECK(x1 * x2 != x2 * x1);
    CHECK((x1 + x2) * x1 == WordSeries::monomial(max_len, {1, 1}) +
                                WordSeries::monomial(max_len, {2, 1}));
}

TEST_CASE("word series inverse is the all-words sum") {
    const int max_len = 3;
    const WordSeries affine =
        WordSeries::one(max_len) - WordSeries::monomial(max_len, {1}) -
        WordSeries::monomial(max_len, {2});
    const WordSeries inv = affine.inverse();
    // Every word up to the grading bound has coefficient 1.
    CHECK(inv.coeff({}) == Rational(1));
    CHECK(inv.coeff({1}) == Rational(1));
    CHECK(inv.coeff({2, 1}) == Rational(1));
    CHECK(inv.coeff({1, 2, 2}) == Rational(1));
    CHECK(inv.coeff({2, 2, 2}) == Rational(1));
    CHECK(affine * inv == WordSeries::one(max_len));
    CHECK(inv * affine == WordSeries::one(max_len));
}

TEST_CASE("word series identities hold") {
    for (int n = 1; n <= 3; ++n)
        for (int len = 1; len <= 5; ++len) {
            CAPTURE(n);
            CAPTURE(len);
            std::string diag;
            CHECK_MESSAGE(qzeta::verify_word_identity(n, len, &diag), diag);
        }
}

TEST_CASE("first_difference finds the smallest differing word") {
    const int max_len = 3;
    WordSeries a = WordSeries::monomial(max_len, {1, 2});
    WordSeries b = WordSeries::monomial(max_len, {1, 2}, Rational(2));
    const auto diff = first_difference(a, b);
    REQUIRE(diff.has_value());
    CHECK(*diff == Word{1, 2});
    CHECK_FALSE(first_difference(a, a).has_value());
}

TEST_CASE("matrix factorization telescopes for a pinned matrix") {
    // 2x2 rational matrix handled at order 3; the Lyndon product over
    // pair-words must collapse to I - A t exactly.
    Mat<Rational> a(2, 2);
    a(0, 0) = Rational(1);
    a(0, 1) = Rational(2);
    a(1, 0) = Rational(-1, 2);
    a(1, 1) = Rational(1, 3);
    const int order = 3;
    SeriesMatrix<Rational> expected = SeriesMatrix<Rational>::identity(2, order);
    expected -= SeriesMatrix<Rational>::constant(a, order).shifted(1);
    CHECK(qzeta::matrix_lyndon_product(a, order) == expected);
    CHECK(qzeta::matrix_lyndon_product(a, order, false) == expected);
}

TEST_CASE("matrix factorization telescopes over all coefficient types") {
    Sampler sampler(3);
    for (int t = 0; t < 10; ++t) {
        const int n = static_cast<int>(sampler.uniform(1, 3));
        const int order = static_cast<int>(sampler.uniform(1, 5));
        {
            const Mat<Rational> a = sampler.matrix<Rational>(n, n);
            SeriesMatrix<Rational> expected = SeriesMatrix<Rational>::identity(n, order);
            expected -= SeriesMatrix<Rational>::constant(a, order).shifted(1);
            CHECK(qzeta::matrix_lyndon_product(a, order) == expected);
        }
        {
            const Mat<GaussianRational> a = sampler.matrix<GaussianRational>(n, n);
            SeriesMatrix<GaussianRational> expected =
                SeriesMatrix<GaussianRational>::identity(n, order);
            expected -= SeriesMatrix<GaussianRational>::constant(a, order).shifted(1);
            CHECK(qzeta::matrix_lyndon_product(a, order) == expected);
        }
        {
            const Mat<Quaternion> a = sampler.matrix<Quaternion>(n, n);
            SeriesMatrix<Quaternion> expected = SeriesMatrix<Quaternion>::identity(n, order);
            expected -= SeriesMatrix<Quaternion>::constant(a, order).shifted(1);
            CHECK(qzeta::matrix_lyndon_product(a, order) == expected);
        }
    }
}

TEST_CASE("skipping unchained pair-words changes nothing") {
    Sampler sampler(4);
    for (int t = 0; t < 5; ++t) {
        const Mat<Quaternion> a = sampler.matrix<Quaternion>(2, 2);
        const int order = static_cast<int>(sampler.uniform(1, 4));
        CHECK(qzeta::matrix_lyndon_product(a, order, true) ==
              qzeta::matrix_lyndon_product(a, order, false));
    }
}

TEST_CASE("non-square matrix is rejected") {
    CHECK_THROWS_AS(qzeta::matrix_lyndon_product(Mat<Rational>(2, 3), 2),
                    std::invalid_argument);
}

}  // TEST_SUITE
