#pragma once

#include <utility>

#include "pcf/poly.hpp"

namespace pcf {

/// The curve Z^2 - A Z - R = 0, equivalently Y^2 = D with D = A^2 + 4R and Z = (Y + A)/2.
///
/// Invariants: A monic of degree g+1, deg R <= g, R nonzero.
class Curve {
public:
    static Curve from_AR(Poly A, Poly R);
    /// Decomposes D first; rejects perfect squares (R = 0).
    static Curve from_D(const Poly& D);

    const Poly& A() const noexcept { return A_; }
    const Poly& R() const noexcept { return R_; }
    int genus() const noexcept { return genus_; }
    Poly D() const { return A_ * A_ + Rational(4) * R_; }

    /// -R + P(A + P), the norm of Z + P.
    Poly norm(const Poly& P) const { return P * (A_ + P) - R_; }

    friend bool operator==(const Curve&, const Curve&) = default;

private:
    Curve(Poly A, Poly R, int genus) : A_(std::move(A)), R_(std::move(R)), genus_(genus) {}
    Poly A_;
    Poly R_;
    int genus_;
};

}  // namespace pcf
