#include "qzeta/lyndon.hpp"

#include <sstream>
#include <stdexcept>

namespace qzeta {

std::vector<Word> lyndon_words(int alphabet_size, int max_len) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be positive");
    if (max_len < 0) throw std::invalid_argument("maximum length must be nonnegative");
    std::vector<Word> out;
    if (max_len == 0) return out;

    // Duval's generation: repeatedly extend the current word periodically to
    // the length bound, then strip maximal letters and increment.
    Word w = {1};
    while (true) {
        out.push_back(w);
        Word x;
        x.reserve(static_cast<size_t>(max_len));
        for (int k = 0; k < max_len; ++k) x.push_back(w[static_cast<size_t>(k) % w.size()]);
        while (!x.empty() && x.back() == alphabet_size) x.pop_back();
        if (x.empty()) break;
        ++x.back();
        w = std::move(x);
    }
    return out;
}

std::vector<Word> lyndon_factorize(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no factorization");
    std::vector<Word> factors;
    const size_t n = w.size();
    size_t i = 0;
    while (i < n) {
        size_t j = i + 1, k = i;
        while (j < n && w[k] <= w[j]) {
            if (w[k] < w[j])
                k = i;
            else
                ++k;
            ++j;
        }
        const size_t len = j - k;
        while (i <= k) {
            factors.emplace_back(w.begin() + static_cast<long>(i),
                                 w.begin() + static_cast<long>(i + len));
            i += len;
        }
    }
    return factors;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    return lyndon_factorize(w).size() == 1;
}

WordSeries::WordSeries(int max_len) : max_len_(max_len) {
    if (max_len < 0) throw std::invalid_argument("maximum length must be nonnegative");
}

WordSeries WordSeries::one(int max_len) {
    WordSeries s(max_len);
    s.c_.emplace(Word{}, Rational(1));
    return s;
}

WordSeries WordSeries::monomial(int max_len, Word w, Rational c) {
    WordSeries s(max_len);
    if (static_cast<int>(w.size()) <= max_len && !c.is_zero()) s.c_.emplace(std::move(w), std::move(c));
    return s;
}

Rational WordSeries::coeff(const Word& w) const {
    auto it = c_.find(w);
    return it == c_.end() ? Rational(0) : it->second;
}

void WordSeries::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

WordSeries WordSeries::operator-() const {
    WordSeries r(max_len_);
    for (const auto& [w, c] : c_) r.c_.emplace(w, -c);
    return r;
}

WordSeries& WordSeries::operator+=(const WordSeries& o) {
    if (max_len_ != o.max_len_) throw std::invalid_argument("word series length bound mismatch");
    for (const auto& [w, c] : o.c_) add_term(w, c);
    return *this;
}

WordSeries& WordSeries::operator-=(const WordSeries& o) {
    if (max_len_ != o.max_len_) throw std::invalid_argument("word series length bound mismatch");
    for (const auto& [w, c] : o.c_) add_term(w, -c);
    return *this;
}

WordSeries operator*(const WordSeries& a, const WordSeries& b) {
    if (a.max_len_ != b.max_len_) throw std::invalid_argument("word series length bound mismatch");
    WordSeries r(a.max_len_);
    for (const auto& [wa, ca] : a.c_)
        for (const auto& [wb, cb] : b.c_) {
            if (static_cast<int>(wa.size() + wb.size()) > r.max_len_) continue;
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

WordSeries WordSeries::inverse() const {
    const Rational c0 = coeff({});
    if (c0.is_zero()) throw std::domain_error("word series not invertible");
    const Rational c0inv = c0.inverse();

    // Group terms of *this by word length; invert degree by degree.
    std::vector<std::vector<std::pair<Word, Rational>>> by_len(static_cast<size_t>(max_len_) + 1);
    for (const auto& [w, c] : c_) by_len[w.size()].emplace_back(w, c);

    WordSeries inv(max_len_);
    inv.c_.emplace(Word{}, c0inv);
    std::vector<std::vector<std::pair<Word, Rational>>> inv_by_len(static_cast<size_t>(max_len_) + 1);
    inv_by_len[0].emplace_back(Word{}, c0inv);

    for (int n = 1; n <= max_len_; ++n) {
        // b_n = -c0^{-1} * sum_{k=1..n} a_k b_{n-k}
        std::map<Word, Rational> bn;
        for (int k = 1; k <= n; ++k)
            for (const auto& [wa, ca] : by_len[static_cast<size_t>(k)])
                for (const auto& [wb, cb] : inv_by_len[static_cast<size_t>(n - k)]) {
                    Word w;
                    w.reserve(wa.size() + wb.size());
                    w.insert(w.end(), wa.begin(), wa.end());
                    w.insert(w.end(), wb.begin(), wb.end());
                    auto [it, inserted] = bn.try_emplace(w, ca * cb);
                    if (!inserted) it->second += ca * cb;
                }
        for (auto& [w, c] : bn) {
            Rational v = -(c0inv * c);
            if (v.is_zero()) continue;
            inv.c_.emplace(w, v);
            inv_by_len[static_cast<size_t>(n)].emplace_back(w, std::move(v));
        }
    }
    return inv;
}

bool operator==(const WordSeries& a, const WordSeries& b) {
    if (a.max_len_ != b.max_len_) throw std::invalid_argument("word series length bound mismatch");
    return a.c_ == b.c_;
}

std::optional<Word> first_difference(const WordSeries& a, const WordSeries& b) {
    if (a.max_len_ != b.max_len_) throw std::invalid_argument("word series length bound mismatch");
    std::optional<Word> best;
    auto consider = [&](const Word& w) {
        if (a.coeff(w) == b.coeff(w)) return;
        if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best)) best = w;
    };
    for (const auto& [w, c] : a.c_) consider(w);
    for (const auto& [w, c] : b.c_) consider(w);
    return best;
}

namespace {

std::string word_str(const Word& w) {
    std::ostringstream os;
    for (size_t k = 0; k < w.size(); ++k) os << (k ? "." : "") << w[k];
    return os.str();
}

}  // namespace

bool verify_word_identity(int alphabet_size, int max_len, std::string* diag) {
    const int N = alphabet_size, T = max_len;

    // Sum of every word, one term per word of each length 0..T.
    WordSeries all = WordSeries::one(T);
    {
        Word w;
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(w.size()) >= 1) all += WordSeries::monomial(T, w);
            if (static_cast<int>(w.size()) == T) return;
            for (int a = 1; a <= N; ++a) {
                w.push_back(a);
                self(self);
                w.pop_back();
            }
        };
        rec(rec);
    }

    // 1 - (x_1 + ... + x_N), each letter in length degree 1.
    WordSeries affine = WordSeries::one(T);
    for (int a = 1; a <= N; ++a) affine -= WordSeries::monomial(T, Word{a});

    const std::vector<Word> lyndon = lyndon_words(N, T);

    // Decreasing product of geometric series (1 - l)^{-1} = sum_r l^r.
    WordSeries dec = WordSeries::one(T);
    for (auto it = lyndon.rbegin(); it != lyndon.rend(); ++it) {
        const Word& l = *it;
        WordSeries geo = WordSeries::one(T);
        Word p = l;
        while (static_cast<int>(p.size()) <= T) {
            geo += WordSeries::monomial(T, p);
            p.insert(p.end(), l.begin(), l.end());
        }
        dec *= geo;
    }

    // Increasing product of (1 - l).
    WordSeries inc = WordSeries::one(T);
    for (const Word& l : lyndon) {
        WordSeries factor = WordSeries::one(T);
        factor -= WordSeries::monomial(T, l);
        inc *= factor;
    }

    struct Check {
        const char* name;
        const WordSeries& lhs;
        const WordSeries& rhs;
    };
    const WordSeries affine_inv = affine.inverse();
    const Check checks[] = {
        {"decreasing geometric product = sum of all words", dec, all},
        {"sum of all words = inverse of 1 - (x_1 + ... + x_N)", all, affine_inv},
        {"increasing product of (1 - l) = 1 - (x_1 + ... + x_N)", inc, affine},
    };
    for (const Check& chk : checks) {
        if (chk.lhs == chk.rhs) continue;
        if (diag) {
            auto w = first_difference(chk.lhs, chk.rhs);
            std::ostringstream os;
            os << "identity failed: " << chk.name;
            if (w) {
                os << " at word '" << word_str(*w) << "' (" << chk.lhs.coeff(*w).str() << " vs "
                   << chk.rhs.coeff(*w).str() << ")";
            }
            *diag = os.str();
        }
        return false;
    }
    return true;
}

}  // namespace qzeta
