#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf {

/// Polynomial degree. The zero polynomial has degree minus infinity, which
/// compares below every finite degree; it is never represented as -1.
class Degree {
public:
    constexpr Degree(int value) : value_(value) {}  // NOLINT: finite degrees compare with ints
    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_minus_infinity() const noexcept { return !finite_; }
    /// Finite degree value; throws on minus infinity.
    int value() const;

    friend constexpr bool operator==(Degree lhs, Degree rhs) noexcept {
        return lhs.finite_ == rhs.finite_ && (!lhs.finite_ || lhs.value_ == rhs.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree lhs, Degree rhs) noexcept {
        if (!lhs.finite_ || !rhs.finite_) return lhs.finite_ <=> rhs.finite_;
        return lhs.value_ <=> rhs.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, Degree d);

private:
    constexpr Degree() : value_(0), finite_(false) {}
    int value_;
    bool finite_ = true;
};

/// Dense univariate polynomial over the rationals.
///
/// Coefficient i multiplies X^i. The representation is canonical: no trailing
/// zero coefficients, and the zero polynomial has no coefficients at all.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);  // NOLINT: constants embed into the ring
    Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT
    Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT
    /// Coefficients in ascending powers.
    explicit Poly(std::vector<Rational> coefficients);

    static Poly x();
    static Poly monomial(const Rational& c, std::size_t power);

    /// Parses the textual grammar described in poly_text (variable X only).
    static Poly parse(std::string_view text);

    Degree degree() const noexcept {
        return coeffs_.empty() ? Degree::minus_infinity() : Degree(static_cast<int>(coeffs_.size()) - 1);
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Coefficient of X^i; zero beyond the degree.
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
    /// Leading coefficient; zero for the zero polynomial.
    Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    Rational operator()(const Rational& x) const;
    Poly derivative() const;
    /// Divides by the leading coefficient; throws for the zero polynomial.
    Poly monic() const;

    std::string str() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& rhs);
    Poly& operator/=(const Rational& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
    friend Poly operator/(Poly lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division: num = quotient * den + remainder with deg remainder < deg den.
DivRem divrem(const Poly& num, const Poly& den);
Poly quo(const Poly& num, const Poly& den);
Poly rem(const Poly& num, const Poly& den);

/// Quotient when den divides num exactly, nullopt otherwise.
std::optional<Poly> exact_quotient(const Poly& num, const Poly& den);

Poly pow(const Poly& p, unsigned exponent);

/// Resultant Res(lhs, rhs) over the rationals.
Rational resultant(const Poly& lhs, const Poly& rhs);

/// Product of target(x) over all roots x of modulus, counted with multiplicity.
///
/// Computed as Res(modulus / lc(modulus), target), so no algebraic numbers are
/// ever formed. Throws MathError for a constant modulus.
Rational norm_over_roots(const Poly& target, const Poly& modulus);

/// D = A^2 + 4R with A the polynomial part of sqrt(D).
struct SqrtDecomposition {
    Poly A;
    Poly R;
    int genus;
};

/// Splits a monic D of even degree 2g+2 (g >= 1) into A (monic, degree g+1)
/// and R = (D - A^2)/4 with deg R <= g. R is zero exactly when D is a square.
SqrtDecomposition sqrt_decompose(const Poly& D);

}  // namespace pcf
