#include "pcf/weierstrass.hpp"

#include <vector>

#include "pcf/errors.hpp"

namespace pcf::ec {

std::string Point::str() const {
    if (infinity) return "infinity";
    return "(" + x.str() + ", " + y.str() + ")";
}

Rational CubicModel::b2() const { return a1 * a1 + Rational(4) * a2; }
Rational CubicModel::b4() const { return Rational(2) * a4 + a1 * a3; }
Rational CubicModel::b6() const { return a3 * a3 + Rational(4) * a6; }
Rational CubicModel::b8() const {
    return a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
Rational CubicModel::c4() const { return b2() * b2() - Rational(24) * b4(); }
Rational CubicModel::c6() const {
    const Rational B2 = b2();
    return -B2 * B2 * B2 + Rational(36) * B2 * b4() - Rational(216) * b6();
}
Rational CubicModel::discriminant() const {
    const Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - Rational(8) * B4 * B4 * B4 - Rational(27) * B6 * B6 + Rational(9) * B2 * B4 * B6;
}
Rational CubicModel::j_invariant() const {
    const Rational d = discriminant();
    if (d.is_zero()) throw MathError("singular model " + str());
    const Rational c = c4();
    return c * c * c / d;
}

bool CubicModel::contains(const Point& p) const {
    if (p.infinity) return true;
    const Rational& x = p.x;
    const Rational& y = p.y;
    return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
}

Point CubicModel::negate(const Point& p) const {
    if (p.infinity) return p;
    return Point::affine(p.x, -p.y - a1 * p.x - a3);
}

Point CubicModel::add(const Point& p, const Point& q) const {
    if (!contains(p)) throw MathError("point " + p.str() + " is not on " + str());
    if (!contains(q)) throw MathError("point " + q.str() + " is not on " + str());
    if (p.infinity) return q;
    if (q.infinity) return p;
    Rational lambda;
    if (p.x == q.x) {
        if (q == negate(p)) return Point::at_infinity();
        // tangent at p; p is not 2-torsion here
        lambda = (Rational(3) * p.x * p.x + Rational(2) * a2 * p.x + a4 - a1 * p.y) /
                 (Rational(2) * p.y + a1 * p.x + a3);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    const Rational nu = p.y - lambda * p.x;
    const Rational x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    const Rational y3 = -(lambda + a1) * x3 - nu - a3;
    return Point::affine(x3, y3);
}

Point CubicModel::multiply(const Point& p, long n) const {
    Point base = n < 0 ? negate(p) : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
    Point acc = Point::at_infinity();
    while (k != 0) {
        if (k & 1ul) acc = add(acc, base);
        k >>= 1ul;
        if (k != 0) base = add(base, base);
    }
    return acc;
}

CubicModel CubicModel::transform(const Isomorphism& iso) const {
    const Rational& u = iso.u;
    const Rational& r = iso.r;
    const Rational& s = iso.s;
    const Rational& t = iso.t;
    if (u.is_zero()) throw MathError("isomorphism with u = 0");
    const Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    CubicModel m;
    m.a1 = (a1 + Rational(2) * s) / u;
    m.a2 = (a2 - s * a1 + Rational(3) * r - s * s) / u2;
    m.a3 = (a3 + r * a1 + Rational(2) * t) / u3;
    m.a4 = (a4 - s * a3 + Rational(2) * r * a2 - (t + r * s) * a1 + Rational(3) * r * r - Rational(2) * s * t) / u4;
    m.a6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6;
    return m;
}

Point CubicModel::to_primed(const Isomorphism& iso, const Point& p) const {
    if (p.infinity) return p;
    const Rational u2 = iso.u * iso.u;
    const Rational x = (p.x - iso.r) / u2;
    const Rational y = (p.y - iso.s * u2 * x - iso.t) / (u2 * iso.u);
    return Point::affine(x, y);
}

std::string CubicModel::str() const {
    auto term = [](const Rational& c, const char* mono) -> std::string {
        if (c.is_zero()) return "";
        std::string out = c.sign() < 0 ? " - " : " + ";
        const Rational mag = c.abs();
        if (!mag.is_one() || *mono == '\0') out += mag.str();
        if (!mag.is_one() && *mono != '\0') out += '*';
        return out + mono;
    };
    return "V^2" + term(a1, "U*V") + term(a3, "V") + " = U^3" + term(a2, "U^2") + term(a4, "U") + term(a6, "");
}

namespace {

std::optional<Rational> exact_cube_root(const Rational& q) {
    auto root = [](const mpz_class& n) -> std::optional<mpz_class> {
        mpz_class r;
        if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
        return r;
    };
    auto n = root(q.numerator());
    auto d = root(q.denominator());
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace

std::optional<Isomorphism> find_isomorphism(const CubicModel& from, const CubicModel& to) {
    if (from.discriminant().is_zero() || to.discriminant().is_zero()) return std::nullopt;
    if (from.j_invariant() != to.j_invariant()) return std::nullopt;
    const Rational c4 = from.c4(), c6 = from.c6(), c4p = to.c4(), c6p = to.c6();
    std::optional<Rational> u2;
    if (!c4.is_zero() && !c6.is_zero())
        u2 = (c6 * c4p) / (c6p * c4);
    else if (c4.is_zero())
        u2 = exact_cube_root(c6 / c6p);
    else
        u2 = (c4 / c4p).exact_sqrt();
    if (!u2) return std::nullopt;
    const auto u_abs = u2->exact_sqrt();
    if (!u_abs) return std::nullopt;
    for (const Rational& u : {*u_abs, -*u_abs}) {
        Isomorphism iso;
        iso.u = u;
        iso.s = (u * to.a1 - from.a1) / Rational(2);
        iso.r = (u * u * to.a2 - from.a2 + iso.s * from.a1 + iso.s * iso.s) / Rational(3);
        iso.t = (u * u * u * to.a3 - from.a3 - iso.r * from.a1) / Rational(2);
        if (from.transform(iso) == to) return iso;
    }
    return std::nullopt;
}

}  // namespace pcf::ec
