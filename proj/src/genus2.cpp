#include "pcf/genus2.hpp"

#include <functional>
#include <stdexcept>

#include "pcf/errors.hpp"

namespace pcf::genus2 {

namespace {

void require_genus2(const Curve& curve) {
    if (curve.genus() != 2) throw MathError("genus-2 operation on a curve of genus " + std::to_string(curve.genus()));
}

void require_nonzero(const Rational& x, long h, const char* name) {
    if (x.is_zero()) throw SingularError(std::string("singular line: ") + name + " = 0 at h = " + std::to_string(h), h);
}

void require_consecutive(const std::vector<cf::Line>& lines) {
    for (std::size_t k = 1; k < lines.size(); ++k)
        if (lines[k].state.h != lines[k - 1].state.h + 1) throw MathError("lines are not consecutive");
}

}  // namespace

Remainder remainder(const Curve& curve) {
    require_genus2(curve);
    const Poly& R = curve.R();
    if (R.degree() < 1) throw MathError("genus-2 remainder must be nonconstant, got R = " + R.str());
    const Rational u = R.coeff(2);
    if (!u.is_zero()) return {u, -R.coeff(1) / u, R.coeff(0) / u};
    const Rational v = -R.coeff(1);
    return {u, v, R.coeff(0) / v};
}

Line extract(const Curve& curve, const cf::Line& line) {
    require_genus2(curve);
    const long h = line.state.h;
    if (line.state.P.degree() != 1) throw SingularError("singular line: d_h = 0 at h = " + std::to_string(h), h);
    Line out;
    out.h = h;
    out.d = line.state.P.coeff(1);
    out.e = line.state.P.coeff(0) / out.d;
    out.u = line.state.Q.leading();
    return out;
}

std::vector<Line> extract_all(const Curve& curve, const std::vector<cf::Line>& lines) {
    std::vector<Line> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(extract(curve, l));
    return out;
}

Poly c_poly(const Curve& curve, const cf::Line& prev, const cf::Line& current, const cf::Line& next) {
    require_genus2(curve);
    if (prev.state.h + 1 != current.state.h || current.state.h + 1 != next.state.h)
        throw MathError("C_h needs three consecutive lines");
    const Rational uh = current.state.Q.leading();
    const Poly ua = current.step.a * uh;
    const auto direct = exact_quotient(curve.R() + next.state.P * current.state.P, current.state.Q / uh);
    if (!direct) throw MathError("R + P_{h+1} P_h is not divisible by Q_h at h = " + std::to_string(current.state.h));
    const Poly via_next = next.state.Q * uh + next.state.P * ua;
    const Poly via_prev = prev.state.Q * uh + current.state.P * ua;
    if (*direct != via_next || *direct != via_prev)
        throw MathError("the three forms of C_h disagree at h = " + std::to_string(current.state.h));
    return *direct;
}

std::vector<IdentityResult> check_identities(const Curve& curve, const std::vector<cf::Line>& lines) {
    require_genus2(curve);
    if (lines.size() < 5) throw MathError("identity window needs at least 5 lines");
    require_consecutive(lines);
    const auto L = extract_all(curve, lines);
    const Remainder rem = remainder(curve);
    const Rational& u = rem.u;
    const Poly& R = curve.R();
    const std::size_t n = L.size();

    std::vector<IdentityResult> out;
    auto run = [&](std::string name, std::size_t first, std::size_t last_excl, const std::function<bool(std::size_t)>& holds) {
        IdentityResult r;
        r.name = std::move(name);
        for (std::size_t k = first; k < last_excl; ++k) {
            ++r.checked;
            if (!holds(k)) {
                r.ok = false;
                if (!r.failed_at) r.failed_at = L[k].h;
            }
        }
        out.push_back(std::move(r));
    };
    auto Qat = [&](std::size_t k, const Rational& x) { return lines[k].state.Q(x); };
    auto C = [&](std::size_t k) { return L[k].d * L[k + 1].d + u; };

    run("u_{h-1} u_h = -d_h", 1, n, [&](std::size_t k) { return L[k - 1].u * L[k].u == -L[k].d; });
    run("C_h three-way agreement, constant d_h d_{h+1} + u", 1, n - 1, [&](std::size_t k) {
        try {
            return c_poly(curve, lines[k - 1], lines[k], lines[k + 1]) == Poly(C(k));
        } catch (const MathError&) {
            return false;
        }
    });
    run("C_h(-e_h) = u_h R(-e_h) / Q_h(-e_h)", 0, n - 1, [&](std::size_t k) {
        const Rational x = -L[k].e;
        return C(k) * Qat(k, x) == L[k].u * R(x);
    });
    run("C_h(-e_h) = u_h Q_{h-1}(-e_h)", 1, n - 1, [&](std::size_t k) {
        return C(k) == L[k].u * Qat(k - 1, -L[k].e);
    });
    run("C_{h-1}(-e_h) = u_{h-1} R(-e_h) / Q_{h-1}(-e_h)", 1, n, [&](std::size_t k) {
        const Rational x = -L[k].e;
        return C(k - 1) * Qat(k - 1, x) == L[k - 1].u * R(x);
    });
    run("C_{h-1}(-e_h) = u_{h-1} Q_h(-e_h)", 1, n, [&](std::size_t k) {
        return C(k - 1) == L[k - 1].u * Qat(k, -L[k].e);
    });
    run("C_{h-1} C_h = u_{h-1} u_h R(-e_h)", 1, n - 1, [&](std::size_t k) {
        const Rational x = -L[k].e;
        const Rational lhs = C(k - 1) * C(k);
        if (lhs != L[k - 1].u * L[k].u * R(x)) return false;
        if (u.is_zero()) return true;
        return lhs == -u * L[k].d * (L[k].e * L[k].e + rem.v * L[k].e + rem.w);
    });
    if (u.is_zero()) {
        IdentityResult r;
        r.name = "norm of A + P_h over the roots of R";
        r.applicable = false;
        out.push_back(r);
    } else {
        run("norm of A + P_h over the roots of R", 2, n - 2, [&](std::size_t k) {
            const Rational lhs = u * u * u * norm_over_roots(curve.A() + lines[k].state.P, R);
            const Rational rhs = -L[k - 1].d * L[k].d * L[k].d * L[k].d * L[k + 1].d * C(k - 2) * C(k + 1);
            return lhs == rhs;
        });
    }
    return out;
}

std::string describe(const SignVector& s) {
    return std::string(s.v2 > 0 ? "+" : "-") + "v^2, " + (s.v3 > 0 ? "+" : "-") + "v^3 A(w)";
}

namespace {

struct Coefficients {
    Rational alpha;
    Rational beta;
};

Coefficients coefficients(const Curve& curve, const SignVector& s) {
    const Remainder rem = remainder(curve);
    if (!rem.u.is_zero()) throw MathError("the d relation needs R of degree 1 (u = 0)");
    const Rational v2 = rem.v * rem.v;
    const Rational v3A = v2 * rem.v * curve.A()(rem.w);
    return {s.v2 > 0 ? v2 : -v2, s.v3 > 0 ? v3A : -v3A};
}

bool d_instance(const Coefficients& c, const Rational& a, const Rational& b, const Rational& m, const Rational& p,
                const Rational& q) {
    const Rational lhs = a * b * b * m * m * m * p * p * q;
    return lhs == c.alpha * b * m * m * p + c.beta;
}

}  // namespace

bool check_d_relation(const Curve& curve, const std::vector<Rational>& d5, const SignVector& signs) {
    if (d5.size() != 5) throw MathError("the d relation takes five consecutive d");
    for (std::size_t i = 0; i < 5; ++i) require_nonzero(d5[i], static_cast<long>(i), "d_h");
    return d_instance(coefficients(curve, signs), d5[0], d5[1], d5[2], d5[3], d5[4]);
}

SignResolution resolve_d_relation(const Curve& curve, const Sequence& d) {
    if (d.size() < 7) throw MathError("sign resolution needs at least 7 consecutive d");
    for (long h = d.lo(); h <= d.hi(); ++h) require_nonzero(d.at(h), h, "d_h");
    auto instance = [&](const Coefficients& c, long h) {
        return d_instance(c, d.at(h - 2), d.at(h - 1), d.at(h), d.at(h + 1), d.at(h + 2));
    };
    SignResolution res;
    for (int s2 : {1, -1}) {
        for (int s3 : {1, -1}) {
            const SignVector s{s2, s3};
            const Coefficients c = coefficients(curve, s);
            bool early = true;
            for (long h = d.lo() + 2; h < d.lo() + 5; ++h) early = early && instance(c, h);
            if (!early) continue;
            // with A(w) = 0 both signs of the constant term give the same relation
            if (res.signs && c.alpha == res.alpha && c.beta == res.beta) continue;
            ++res.candidates_validating;
            if (!res.signs) {
                res.signs = s;
                res.alpha = c.alpha;
                res.beta = c.beta;
            }
        }
    }
    if (!res.signs) return res;
    const Coefficients c{res.alpha, res.beta};
    for (long h = d.lo() + 2; h + 2 <= d.hi(); ++h) {
        ++res.checked;
        if (!instance(c, h)) {
            res.failed_at = h;
            return res;
        }
    }
    res.ok = true;
    return res;
}

Sequence t_sequence(const Sequence& d, const Rational& T0, const Rational& T1) {
    if (d.empty() || d.lo() > 1 || d.hi() < 0) throw MathError("d window must overlap indices 0..1");
    require_nonzero(T0, 0, "T_0");
    require_nonzero(T1, 1, "T_1");
    for (long h = d.lo(); h <= d.hi(); ++h) require_nonzero(d.at(h), h, "d_h");
    const long lo = std::min(0L, d.lo() - 1);
    const long hi = std::max(1L, d.hi() + 1);
    std::vector<Rational> T(static_cast<std::size_t>(hi - lo + 1));
    auto at = [&](long h) -> Rational& { return T[static_cast<std::size_t>(h - lo)]; };
    at(0) = T0;
    at(1) = T1;
    for (long h = 1; h <= d.hi(); ++h) at(h + 1) = d.at(h) * at(h) * at(h) / at(h - 1);
    for (long h = 0; h >= d.lo(); --h) at(h - 1) = d.at(h) * at(h) * at(h) / at(h + 1);

    for (long h = d.lo() + 1; h + 1 <= d.hi(); ++h) {
        const Rational two = d.at(h - 1) * d.at(h) * d.at(h) * d.at(h + 1);
        if (at(h - 2) * at(h + 2) != two * at(h) * at(h))
            throw std::logic_error("two-step T ladder inconsistent at h = " + std::to_string(h));
    }
    for (long h = d.lo() + 2; h + 2 <= d.hi(); ++h) {
        const Rational dm1 = d.at(h - 1), dh = d.at(h), dp1 = d.at(h + 1);
        const Rational three = d.at(h - 2) * dm1 * dm1 * dh * dh * dh * dp1 * dp1 * d.at(h + 2);
        if (at(h - 3) * at(h + 3) != three * at(h) * at(h))
            throw std::logic_error("three-step T ladder inconsistent at h = " + std::to_string(h));
    }
    return Sequence(lo, std::move(T));
}

bool check_t_relation(const Sequence& T, const Rational& alpha, const Rational& beta) {
    if (T.size() < 7) throw MathError("the T relation needs at least 7 terms");
    for (long h = T.lo() + 3; h + 3 <= T.hi(); ++h) {
        if (T.at(h - 3) * T.at(h + 3) != alpha * T.at(h - 2) * T.at(h + 2) + beta * T.at(h) * T.at(h)) return false;
    }
    return true;
}

Sequence d_sequence(const std::vector<Line>& lines) {
    std::vector<Rational> d;
    for (const auto& l : lines) d.push_back(l.d);
    return Sequence(lines.empty() ? 0 : lines.front().h, std::move(d));
}

}  // namespace pcf::genus2
