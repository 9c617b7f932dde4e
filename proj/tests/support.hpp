#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pcf/cf.hpp"
#include "pcf/curve.hpp"
#include "pcf/poly.hpp"
#include "pcf/rational.hpp"

namespace pcf::testing {

inline Poly P(const char* text) { return Poly::parse(text); }
inline Rational Q(const char* text) { return Rational::parse(text); }

inline std::vector<Rational> rats(std::initializer_list<const char*> items) {
    std::vector<Rational> out;
    for (const char* s : items) out.push_back(Rational::parse(s));
    return out;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    long nonzero(long bound) {
        long v = 0;
        while (v == 0) v = integer(-bound, bound);
        return v;
    }

    Rational rational(long bound) {
        return Rational(integer(-bound, bound), integer(1, bound));
    }

    /// Coefficients in [-bound, bound]; exact degree when lead_nonzero.
    Poly poly(int degree, long bound, bool lead_nonzero = true) {
        std::vector<Rational> c;
        for (int i = 0; i < degree; ++i) c.emplace_back(integer(-bound, bound));
        c.emplace_back(lead_nonzero ? nonzero(bound) : integer(-bound, bound));
        return Poly(std::move(c));
    }

    Poly rational_poly(int degree, long bound) {
        std::vector<Rational> c;
        for (int i = 0; i <= degree; ++i) c.push_back(rational(bound));
        return Poly(std::move(c));
    }

    Poly monic(int degree, long bound) {
        std::vector<Rational> c;
        for (int i = 0; i < degree; ++i) c.emplace_back(integer(-bound, bound));
        c.emplace_back(1);
        return Poly(std::move(c));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

struct CurveStart {
    Curve curve;
    cf::State start;
};

/// A curve of genus g together with a valid reduced start (P0 of exact degree g-1,
/// Q0 of degree g). R is built as P0(A + P0) - Q0 * cofactor, so Q0 divides the norm.
/// With zero_top the X^g term of R vanishes (genus-2 u = 0 family).
inline CurveStart random_curve(Gen& gen, int g, bool zero_top = false) {
    for (;;) {
        const Poly A = gen.monic(g + 1, 3);
        const Poly P0 = gen.poly(g - 1, 3);
        const Poly Q0 = gen.poly(g, 2);
        const Poly prod = P0 * (A + P0);
        Poly cofactor = quo(prod, Q0);
        if (!zero_top) cofactor -= Poly(gen.integer(-2, 2));
        const Poly R = prod - Q0 * cofactor;
        if (R.is_zero() || R.degree() > g) continue;
        if (zero_top && R.degree() >= g) continue;
        Curve curve = Curve::from_AR(A, R);
        return {curve, cf::init(curve, P0, Q0)};
    }
}

/// As random_curve, but every line in [lo, hi] is normal and carries a nonzero
/// leading P coefficient.
inline CurveStart random_normal_curve(Gen& gen, int g, long lo, long hi, bool zero_top = false) {
    for (;;) {
        CurveStart cs = random_curve(gen, g, zero_top);
        bool ok = true;
        for (const auto& line : cf::expand(cs.curve, cs.start, lo, hi)) {
            if (!line.step.normal || line.state.P.degree() != g - 1 || line.state.Q.degree() != g) {
                ok = false;
                break;
            }
        }
        if (ok) return cs;
    }
}

}  // namespace pcf::testing
