#include "pcf/poly.hpp"

#include <ostream>
#include <utility>

#include "pcf/errors.hpp"

namespace pcf {

int Degree::value() const {
    if (!finite_) throw MathError("degree of the zero polynomial is minus infinity");
    return value_;
}

std::ostream& operator<<(std::ostream& os, Degree d) {
    if (d.is_minus_infinity()) return os << "-inf";
    return os << d.value();
}

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Poly Poly::x() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
    // Horner; mpq arithmetic keeps every intermediate exact.
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) throw MathError("monic normalization of the zero polynomial");
    return *this / leading();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

namespace {

// Clears denominators: coefficients become integers over one common denominator.
std::vector<mpz_class> integer_coefficients(std::span<const Rational> coeffs, mpz_class& den) {
    den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
    std::vector<mpz_class> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const mpq_class& q = coeffs[i].value();
        out[i] = q.get_num() * (den / q.get_den());
    }
    return out;
}

}  // namespace

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    mpz_class dl, dr;
    const auto nl = integer_coefficients(lhs.coeffs_, dl);
    const auto nr = integer_coefficients(rhs.coeffs_, dr);
    std::vector<mpz_class> acc(nl.size() + nr.size() - 1);
    for (std::size_t i = 0; i < nl.size(); ++i) {
        if (sgn(nl[i]) == 0) continue;
        for (std::size_t j = 0; j < nr.size(); ++j) mpz_addmul(acc[i + j].get_mpz_t(), nl[i].get_mpz_t(), nr[j].get_mpz_t());
    }
    const mpz_class den = dl * dr;
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& a : acc) out.emplace_back(a, den);
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

Poly& Poly::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw MathError("polynomial divided by zero scalar");
    const Rational inv = rhs.inverse();
    for (auto& c : coeffs_) c *= inv;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

DivRem divrem(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw MathError("polynomial division by zero");
    const auto coeffs = num.coefficients();
    std::vector<Rational> r(coeffs.begin(), coeffs.end());
    const int dd = den.degree().value();
    const Rational lc_inv = den.leading().inverse();
    const auto dc = den.coefficients();
    if (num.degree() < dd) return {Poly(), num};
    const int nd = num.degree().value();
    std::vector<Rational> q(static_cast<std::size_t>(nd - dd + 1));
    for (int k = nd; k >= dd; --k) {
        const Rational c = r[static_cast<std::size_t>(k)] * lc_inv;
        if (c.is_zero()) continue;
        q[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k - dd + j)] -= c * dc[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly quo(const Poly& num, const Poly& den) { return divrem(num, den).quotient; }
Poly rem(const Poly& num, const Poly& den) { return divrem(num, den).remainder; }

std::optional<Poly> exact_quotient(const Poly& num, const Poly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) return std::nullopt;
    return std::move(q);
}

Poly pow(const Poly& p, unsigned exponent) {
    Poly result(1);
    Poly base = p;
    while (exponent != 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent != 0) base *= base;
    }
    return result;
}

namespace {

// Product of t over the roots of the monic polynomial m. Reduces t modulo m,
// then swaps roles: prod_{m(a)=0} r(a) = (-1)^{deg m deg r} lc(r)^{deg m} prod_{r(b)=0} m(b).
Rational monic_root_product(const Poly& t, const Poly& m) {
    const int dm = m.degree().value();
    const Poly r = rem(t, m);
    if (r.is_zero()) return Rational();
    if (r.is_constant()) return r.leading().pow(dm);
    const int dr = r.degree().value();
    Rational factor = r.leading().pow(dm);
    if ((static_cast<long>(dm) * dr) % 2 != 0) factor = -factor;
    return factor * monic_root_product(m, r.monic());
}

}  // namespace

Rational norm_over_roots(const Poly& target, const Poly& modulus) {
    if (modulus.is_constant()) throw MathError("norm over the roots of a constant polynomial");
    return monic_root_product(target, modulus.monic());
}

Rational resultant(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Rational();
    if (lhs.is_constant()) return lhs.leading().pow(rhs.degree().value());
    if (rhs.is_constant()) return rhs.leading().pow(lhs.degree().value());
    // Res(f, g) = lc(f)^{deg g} prod_{f(a)=0} g(a)
    return lhs.leading().pow(rhs.degree().value()) * norm_over_roots(rhs, lhs);
}

SqrtDecomposition sqrt_decompose(const Poly& D) {
    if (D.is_zero() || !D.is_monic()) throw MathError("square-root decomposition needs a monic polynomial");
    const int n = D.degree().value();
    if (n % 2 != 0) throw MathError("square-root decomposition needs even degree, got " + std::to_string(n));
    if (n < 4) throw MathError("square-root decomposition needs degree 2g+2 with g >= 1");
    const int half = n / 2;  // g + 1
    // Match the coefficients of X^{n-1}, ..., X^{half} from the top down; each
    // step is a single linear equation 2*a_i = D_{half+i} - (known part of A^2)_{half+i}.
    Poly A = Poly::monomial(Rational(1), static_cast<std::size_t>(half));
    for (int i = half - 1; i >= 0; --i) {
        const Rational known = (A * A).coeff(static_cast<std::size_t>(half + i));
        const Rational ai = (D.coeff(static_cast<std::size_t>(half + i)) - known) / Rational(2);
        A += Poly::monomial(ai, static_cast<std::size_t>(i));
    }
    Poly R = (D - A * A) / Rational(4);
    if (R.degree() >= half) throw MathError("internal: square-root remainder has too high degree");
    return {std::move(A), std::move(R), half - 1};
}

}  // namespace pcf
