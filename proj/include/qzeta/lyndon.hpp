#pragma once

#include "qzeta/mat.hpp"
#include "qzeta/rational.hpp"
#include "qzeta/series_matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

// A word over an integer alphabet, compared lexicographically by the letter
// order (std::vector's operator< is exactly lexicographic comparison).
using Word = std::vector<int>;

// All Lyndon words over the alphabet {1, ..., alphabet_size} of length
// 1..max_len, in increasing lexicographic order (Duval's generation).
std::vector<Word> lyndon_words(int alphabet_size, int max_len);

// True iff w is nonempty, aperiodic, and strictly smaller than every
// proper rotation of itself. O(|w|) via the factorization below.
bool is_lyndon(const Word& w);

// Chen-Fox-Lyndon factorization: the unique decomposition of w into a
// lexicographically nonincreasing concatenation of Lyndon words (Duval's
// algorithm). Throws std::invalid_argument for the empty word.
std::vector<Word> lyndon_factorize(const Word& w);

// Element of the rational free-monoid algebra, graded by word length and
// truncated beyond max_len: this models series over noncommuting letters
// x_1..x_N where the power of the central variable always matches the word
// length, so the length grading *is* the series grading.
class WordSeries {
public:
    explicit WordSeries(int max_len);

    static WordSeries one(int max_len);
    static WordSeries monomial(int max_len, Word w, Rational c = Rational(1));

    int max_len() const { return max_len_; }
    Rational coeff(const Word& w) const;

    WordSeries operator-() const;
    WordSeries& operator+=(const WordSeries& o);
    WordSeries& operator-=(const WordSeries& o);
    friend WordSeries operator+(WordSeries a, const WordSeries& b) { return a += b; }
    friend WordSeries operator-(WordSeries a, const WordSeries& b) { return a -= b; }

    // Concatenation product; monomials beyond the length bound fall away.
    friend WordSeries operator*(const WordSeries& a, const WordSeries& b);
    WordSeries& operator*=(const WordSeries& o) { return *this = *this * o; }

    // Requires a nonzero empty-word coefficient.
    WordSeries inverse() const;

    friend bool operator==(const WordSeries& a, const WordSeries& b);
    friend bool operator!=(const WordSeries& a, const WordSeries& b) { return !(a == b); }

    // Shortest, then lexicographically smallest, word whose coefficients
    // differ; nullopt when equal.
    friend std::optional<Word> first_difference(const WordSeries& a, const WordSeries& b);

private:
    void add_term(const Word& w, const Rational& c);

    int max_len_;
    std::map<Word, Rational> c_;  // zero coefficients are never stored
};

// Checks the two word-series factorization identities over the alphabet
// {1..alphabet_size} up to length max_len:
//   - the decreasing product of geometric series over Lyndon words equals
//     the full sum of all words (equivalently the inverse of
//     1 - (x_1 + ... + x_N) t), and
//   - the increasing product of (1 - l t^|l|) over Lyndon words equals
//     1 - (x_1 + ... + x_N) t.
// On failure, *diag (if given) receives a description of the first
// differing term.
bool verify_word_identity(int alphabet_size, int max_len, std::string* diag = nullptr);

namespace detail {

// Letters for pair-words over [n] x [n], encoded as i*n + j (0-based);
// the encoding is order-isomorphic to lexicographic order on pairs.
struct PairAlphabet {
    int n;
    int encode(int i, int j) const { return i * n + j; }
    int row(int code) const { return code / n; }
    int col(int code) const { return code % n; }
};

}  // namespace detail

// Evaluates the increasing-lex product over Lyndon pair-words l of
// (I - A_l t^{|l|}), where A_l is the product of the single-entry matrices
// a_{ij} E_{ij} along l. A_l vanishes unless l is chained (each pair's
// column index equals the next pair's row index), in which case it
// collapses to a_{i1 i2} a_{i2 i3} ... a_{i_r j_r} E_{i1 j_r}.
//
// With skip_unchained = true (the default) only chained words are
// enumerated and the collapsed form is used; with skip_unchained = false
// every Lyndon pair-word is evaluated literally by multiplying single-entry
// matrices, so unchained factors contribute the identity. Both variants
// compute the same product; the literal one exists as a cross-check and is
// only sensible for small n and order.
//
// The product telescopes to I - A t exactly; callers verify that identity.
template <class C>
SeriesMatrix<C> matrix_lyndon_product(const Mat<C>& a, int order, bool skip_unchained = true) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
    const int n = a.rows();
    const detail::PairAlphabet pa{n};

    // (word over pair codes, factor matrix data)
    struct Factor {
        Word word;
        int row = 0, col = 0;
        C entry;       // used when collapsed
        Mat<C> full;   // used when literal
        bool literal = false;
    };
    std::vector<Factor> factors;

    if (skip_unchained) {
        // Enumerate chained pair-words directly: vertex sequences
        // (i_1, ..., i_r, j_r) determine the word, so the enumeration is
        // n^(r+1) per length r instead of n^(2r).
        for (int r = 1; r <= order; ++r) {
            std::vector<int> v(static_cast<size_t>(r) + 1, 0);
            while (true) {
                Word w(static_cast<size_t>(r));
                for (int k = 0; k < r; ++k) w[static_cast<size_t>(k)] = pa.encode(v[k], v[k + 1]);
                if (is_lyndon(w)) {
                    C entry = a(v[0], v[1]);
                    for (int k = 1; k <= r - 1; ++k) entry = entry * a(v[k], v[k + 1]);
                    if (!entry.is_zero()) {
                        Factor f;
                        f.word = std::move(w);
                        f.row = v[0];
                        f.col = v[r];
                        f.entry = std::move(entry);
                        factors.push_back(std::move(f));
                    }
                }
                // odometer over [0, n)^(r+1)
                int pos = r;
                while (pos >= 0 && v[pos] == n - 1) v[pos--] = 0;
                if (pos < 0) break;
                ++v[pos];
            }
        }
    } else {
        for (const Word& w1 : lyndon_words(n * n, order)) {
            Word w(w1.size());
            for (size_t k = 0; k < w1.size(); ++k) w[k] = w1[k] - 1;  // to 0-based codes
            Mat<C> m(n, n);
            m(pa.row(w[0]), pa.col(w[0])) = a(pa.row(w[0]), pa.col(w[0]));
            for (size_t k = 1; k < w.size(); ++k) {
                Mat<C> e(n, n);
                e(pa.row(w[k]), pa.col(w[k])) = a(pa.row(w[k]), pa.col(w[k]));
                m = m * e;
            }
            Factor f;
            f.word = std::move(w);
            f.full = std::move(m);
            f.literal = true;
            factors.push_back(std::move(f));
        }
    }

    std::sort(factors.begin(), factors.end(),
              [](const Factor& x, const Factor& y) { return x.word < y.word; });

    SeriesMatrix<C> acc = SeriesMatrix<C>::identity(n, order);
    for (const Factor& f : factors) {
        const int r = static_cast<int>(f.word.size());
        if (f.literal) {
            SeriesMatrix<C> factor = SeriesMatrix<C>::identity(n, order);
            factor -= SeriesMatrix<C>::constant(f.full, order).shifted(r);
            acc = acc * factor;
        } else {
            // acc <- acc (I - c E_{pq} t^r): only column q changes.
            for (int x = 0; x < n; ++x) {
                if (acc(x, f.row).is_zero()) continue;
                acc(x, f.col) -= (acc(x, f.row) * f.entry).shifted(r);
            }
        }
    }
    return acc;
}

}  // namespace qzeta
