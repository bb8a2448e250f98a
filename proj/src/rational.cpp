#include "qzeta/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qzeta {

namespace {

[[noreturn]] void malformed(std::string_view s) {
    throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) malformed(s);

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) malformed(s);
    if (negative) n = -n;

    mpq_class v(n, d);
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("rational not invertible");
    mpq_class inv(v_.get_den(), v_.get_num());
    inv.canonicalize();
    return Rational(std::move(inv));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qzeta
