#pragma once

#include <optional>
#include <string>

#include "pcf/rational.hpp"

namespace pcf::ec {

/// Affine point or the point at infinity.
struct Point {
    bool infinity = false;
    Rational x;
    Rational y;

    static Point at_infinity() { return Point{true, {}, {}}; }
    static Point affine(Rational x, Rational y) { return Point{false, std::move(x), std::move(y)}; }

    std::string str() const;
    friend bool operator==(const Point& lhs, const Point& rhs) {
        if (lhs.infinity || rhs.infinity) return lhs.infinity == rhs.infinity;
        return lhs.x == rhs.x && lhs.y == rhs.y;
    }
};

/// Change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct Isomorphism {
    Rational u;
    Rational r;
    Rational s;
    Rational t;
};

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct CubicModel {
    Rational a1, a2, a3, a4, a6;

    Rational b2() const;
    Rational b4() const;
    Rational b6() const;
    Rational b8() const;
    Rational c4() const;
    Rational c6() const;
    Rational discriminant() const;
    /// Throws MathError for a singular model.
    Rational j_invariant() const;

    bool contains(const Point& p) const;
    Point negate(const Point& p) const;
    /// Chord-tangent addition; throws MathError for off-curve input.
    Point add(const Point& p, const Point& q) const;
    /// n p for any integer n.
    Point multiply(const Point& p, long n) const;

    /// The model in primed coordinates under iso.
    CubicModel transform(const Isomorphism& iso) const;
    /// Point in primed coordinates.
    Point to_primed(const Isomorphism& iso, const Point& p) const;

    std::string str() const;
    friend bool operator==(const CubicModel&, const CubicModel&) = default;
};

/// An isomorphism carrying from onto to, if one exists over the rationals.
std::optional<Isomorphism> find_isomorphism(const CubicModel& from, const CubicModel& to);

}  // namespace pcf::ec
