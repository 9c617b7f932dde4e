#include "pcf/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw MathError("rational with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (sgn(denominator) == 0) throw MathError("rational with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::string_view original = text;
    text = trim(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = slash == std::string_view::npos ? text : text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(original) + "'", 0);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(original) + "'", slash + 1);
    if (negative) n = -n;
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw MathError("division by zero rational");
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw MathError("inverse of zero");
    // already canonical, so skip the gcd
    Rational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class& n = q_.get_num();
    const mpz_class& d = q_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

std::string Rational::str() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::size_t decimal_digits(const mpz_class& n) {
    if (sgn(n) == 0) return 1;
    return mpz_class(abs(n)).get_str(10).size();
}

}  // namespace pcf
