#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pcf {

/// Exact rational number, always held in lowest terms with positive denominator.
///
/// A thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// so two equal values always compare equal coefficient-wise.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT: integers promote freely
    Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
    Rational(long numerator, long denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(const mpz_class& integer) : q_(integer) {}
    explicit Rational(mpq_class value);

    /// Parses "n", "-n", "p/q" (optionally signed). Whitespace around the token is ignored.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return q_ == 1; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const;
    Rational pow(long exponent) const;

    /// Exact square root when this is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

    std::string str() const;

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
        return r;
    }
    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept { return lhs.q_ == rhs.q_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
        const int c = cmp(lhs.q_, rhs.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

/// Number of decimal digits of |n| (0 has one digit).
std::size_t decimal_digits(const mpz_class& n);

}  // namespace pcf
