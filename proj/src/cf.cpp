#include "pcf/cf.hpp"

#include <stdexcept>
#include <string>

#include "pcf/errors.hpp"

namespace pcf::cf {

namespace {

// The leading coefficient of Q_h grows much faster than Q_h / lc(Q_h), so the expansion
// carries the monic part along and only ever scales by the leading coefficient.
struct Cursor {
    State state;
    Poly monic;  // Q_h / lc(Q_h)
};

Cursor make_cursor(State s) {
    Poly m = s.Q.monic();
    return {std::move(s), std::move(m)};
}

Step make_step(const Curve& curve, const Cursor& c, const Poly& a_monic) {
    // a_h = a_monic / u
    Step st;
    st.h = c.state.h;
    st.u = c.state.Q.leading();
    st.normal = a_monic.degree() == 1;
    if (st.normal) st.nu = a_monic.coeff(0) / a_monic.coeff(1);
    st.a = a_monic / st.u;
    st.reduced = is_reduced(curve, c.state);
    return st;
}

Step describe_cursor(const Curve& curve, const Cursor& c) {
    return make_step(curve, c, quo(curve.A() + c.state.P, c.monic));
}

// Q with -Q_h Q = -R + P(A + P); the division is exact for every valid line.
Cursor next_Q(const Curve& curve, Poly P, const Cursor& c, long h) {
    auto q = exact_quotient(-curve.norm(P), c.monic);
    if (!q) throw std::logic_error("tableau norm not divisible at h = " + std::to_string(h) + " (corrupted state)");
    if (q->is_zero()) throw MathError("zero Q at h = " + std::to_string(h) + " (degenerate curve data)");
    const Rational lc = c.state.Q.leading();
    Poly m = q->monic();
    Poly Q = *q / lc;
    return {State{0, std::move(P), std::move(Q)}, std::move(m)};
}

std::pair<Step, Cursor> forward(const Curve& curve, const Cursor& c) {
    // a_h Q_h = (A + P_h) - r, so P_{h+1} = -r
    const Poly N = curve.A() + c.state.P;
    auto [a_monic, r] = divrem(N, c.monic);
    Step here = make_step(curve, c, a_monic);
    Cursor next = next_Q(curve, -r, c, c.state.h);
    next.state.h = c.state.h + 1;
    return {std::move(here), std::move(next)};
}

std::pair<Step, Cursor> backward(const Curve& curve, const Cursor& c) {
    // Q_{h-1} from the norm identity at h, then P_{h-1} = a_{h-1} Q_{h-1} - A - P_h = -r.
    // When deg Q_{h-1} exceeds deg(A + P_h) the quotient is 0 and P_{h-1} = -A - P_h.
    Cursor prev = next_Q(curve, c.state.P, c, c.state.h);
    prev.state.h = c.state.h - 1;
    auto [a_monic, r] = divrem(curve.A() + c.state.P, prev.monic);
    prev.state.P = -r;
    Step st = make_step(curve, prev, a_monic);
    return {std::move(st), std::move(prev)};
}

}  // namespace

State init(const Curve& curve, Poly P0, Poly Q0, StartMode mode) {
    const int g = curve.genus();
    if (Q0.is_zero()) throw MathError("Q0 must be nonzero");
    if (P0.degree() >= g) throw MathError("start needs deg P0 < " + std::to_string(g) + ", got " + P0.str());
    if (Q0.degree() > g) throw MathError("start needs deg Q0 <= " + std::to_string(g) + ", got " + Q0.str());
    const Poly norm = curve.norm(P0);
    const Poly r = rem(norm, Q0);
    if (!r.is_zero())
        throw MathError("Q0 = " + Q0.str() + " does not divide the norm " + norm.str() + " (remainder " + r.str() + ")");
    if (mode == StartMode::normal && Q0.is_constant())
        throw MathError("principal class (constant Q0) cannot start a normal expansion");
    return State{0, std::move(P0), std::move(Q0)};
}

State principal(const Curve& curve) { return init(curve, Poly(), Poly(1)); }

bool is_reduced(const Curve& curve, const State& s) {
    return s.P.degree() < curve.genus() && s.Q.degree() <= curve.genus();
}

Step describe(const Curve& curve, const State& s) { return describe_cursor(curve, make_cursor(s)); }

std::pair<Step, State> step_forward(const Curve& curve, const State& s) {
    auto [st, next] = forward(curve, make_cursor(s));
    return {std::move(st), std::move(next.state)};
}

std::pair<Step, State> step_backward(const Curve& curve, const State& s) {
    auto [st, prev] = backward(curve, make_cursor(s));
    return {std::move(st), std::move(prev.state)};
}

std::vector<Line> expand(const Curve& curve, const State& start, long lo, long hi) {
    if (lo > start.h || start.h > hi) throw MathError("expansion range must contain the start index");
    std::vector<Line> before;
    Cursor c = make_cursor(start);
    while (c.state.h > lo) {
        auto [st, prev] = backward(curve, c);
        before.push_back(Line{prev.state, std::move(st)});
        c = std::move(prev);
    }
    std::vector<Line> out(before.rbegin(), before.rend());
    c = make_cursor(start);
    for (;;) {
        if (c.state.h == hi) {
            Step st = describe_cursor(curve, c);
            out.push_back(Line{std::move(c.state), std::move(st)});
            break;
        }
        auto [st, next] = forward(curve, c);
        out.push_back(Line{std::move(c.state), std::move(st)});
        c = std::move(next);
    }
    return out;
}

Rational period_multiplier(const Rational& kappa, long m, long k) {
    if (m % 2 == 0) return kappa.pow(k);
    return k % 2 != 0 ? kappa : Rational(1);
}

PeriodReport detect_quasi_period(const Curve& curve, const State& start, long maxsteps) {
    PeriodReport report;
    report.multiplier = Rational(1);
    if (!is_reduced(curve, start)) throw MathError("quasi-period detection needs a reduced start");
    Cursor c = make_cursor(start);
    const Poly Q0_monic = c.monic;
    long degree_sum = 0;
    for (long h = 1; h <= maxsteps; ++h) {
        auto [st, next] = forward(curve, c);
        degree_sum += st.a.degree().is_minus_infinity() ? 0 : st.a.degree().value();
        c = std::move(next);
        if (c.state.P == start.P && c.monic == Q0_monic) {
            const Rational kappa = c.state.Q.leading() / start.Q.leading();
            report.quasi_period = h;
            report.multiplier = kappa;
            report.unit_degree = degree_sum;
            if (kappa.is_one())
                report.pure_period = h;
            else if (period_multiplier(kappa, h, 2).is_one())
                report.pure_period = 2 * h;
            return report;
        }
    }
    return report;
}

PeriodReport detect_quasi_period(const Curve& curve, long maxsteps) {
    return detect_quasi_period(curve, principal(curve), maxsteps);
}

std::vector<Convergent> continuants(const std::vector<Step>& steps) {
    std::vector<Convergent> out;
    out.reserve(steps.size());
    Poly p2(0), p1(1), q2(1), q1(0);
    for (const Step& st : steps) {
        Poly p = st.a * p1 + p2;
        Poly q = st.a * q1 + q2;
        p2 = std::exchange(p1, p);
        q2 = std::exchange(q1, q);
        out.push_back(Convergent{std::move(p), std::move(q)});
    }
    return out;
}

namespace {

Poly integrand(const Poly& D, const Poly& a, const Poly& b, const Rational& c) {
    const Poly num = a * b.derivative() * D + a * b * D.derivative() / Rational(2) - a.derivative() * b * D;
    return num / c;
}

}  // namespace

std::optional<Certificate> certificate(const Poly& D, long maxsteps) {
    const Curve curve = Curve::from_D(D);
    const State start = principal(curve);
    const PeriodReport period = detect_quasi_period(curve, start, maxsteps);
    if (!period.quasi_period) return std::nullopt;

    std::vector<Step> steps;
    State s = start;
    for (long h = 0; h < *period.quasi_period; ++h) {
        auto [st, next] = step_forward(curve, s);
        steps.push_back(std::move(st));
        s = std::move(next);
    }
    const Convergent last = continuants(steps).back();
    // p - qZ is a unit; with Z = (sqrt D + A)/2 it is proportional to (2p - qA) - q sqrt D.
    Poly a = Rational(2) * last.p - last.q * curve.A();
    Poly b = -last.q;
    const Rational scale = a.leading();
    a /= scale;
    b /= scale;
    const Poly c_poly = a * a - b * b * D;
    if (!c_poly.is_constant() || c_poly.is_zero())
        throw std::logic_error("unit norm is not a nonzero constant: " + c_poly.str());
    Certificate cert;
    cert.c = c_poly.leading();
    cert.f = integrand(D, a, b, cert.c);
    if (cert.f.leading().sign() < 0) {
        b = -b;
        cert.f = -cert.f;
    }
    cert.a = std::move(a);
    cert.b = std::move(b);
    cert.m = cert.a.degree().value();
    if (!verify_certificate(D, cert)) throw std::logic_error("certificate failed its own verification");
    return cert;
}

bool verify_certificate(const Poly& D, const Certificate& cert) {
    if (D.is_zero() || D.degree().value() % 2 != 0) return false;
    const int g = D.degree().value() / 2 - 1;
    const Poly c_poly = cert.a * cert.a - cert.b * cert.b * D;
    if (c_poly != Poly(cert.c) || cert.c.is_zero()) return false;
    const Poly lhs = cert.f * cert.c;
    const Poly rhs =
        cert.a * cert.b.derivative() * D + cert.a * cert.b * D.derivative() / Rational(2) - cert.a.derivative() * cert.b * D;
    if (lhs != rhs) return false;
    if (cert.a.degree() != cert.m || cert.b.degree() != cert.m - g - 1) return false;
    return cert.f.degree() == g && cert.f.leading() == Rational(cert.m);
}

}  // namespace pcf::cf
