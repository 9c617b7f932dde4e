#include "pcf/genus1.hpp"

#include <stdexcept>
#include <string>

#include "pcf/errors.hpp"

namespace pcf::genus1 {

namespace {

void require_genus1(const Curve& curve) {
    if (curve.genus() != 1) throw MathError("genus-1 operation on a curve of genus " + std::to_string(curve.genus()));
}

void require_nonzero(const Rational& x, long h, const char* name) {
    if (x.is_zero()) throw SingularError(std::string("singular line: ") + name + " = 0 at h = " + std::to_string(h), h);
}

}  // namespace

Remainder remainder(const Curve& curve) {
    require_genus1(curve);
    const Poly& R = curve.R();
    if (R.degree() != 1) throw MathError("genus-1 remainder must be linear, got R = " + R.str());
    const Rational v = R.leading();
    return {v, -R.coeff(0) / v};
}

Line extract(const Curve& curve, const cf::Line& line) {
    require_genus1(curve);
    const long h = line.state.h;
    if (!line.step.normal) throw MathError("non-normal step at h = " + std::to_string(h));
    if (line.state.Q.degree() != 1) throw MathError("Q_h is not linear at h = " + std::to_string(h));
    if (line.state.P.degree() > 0) throw MathError("P_h is not constant at h = " + std::to_string(h));
    Line out;
    out.h = h;
    out.e = line.state.P.coeff(0);
    require_nonzero(out.e, h, "e_h");
    out.v = line.state.Q.leading();
    // a_h = (X + A_1 + w) / v, cheaper than dividing the two large coefficients of Q_h
    out.w = *line.step.nu - curve.A().coeff(1);
    return out;
}

std::vector<Line> extract_all(const Curve& curve, const std::vector<cf::Line>& lines) {
    std::vector<Line> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(extract(curve, l));
    return out;
}

bool check_line_pair(const Curve& curve, const Line& current, const Line& next) {
    const Remainder rem = remainder(curve);
    return rem.v * (rem.w - current.w) == current.e * next.e && current.v * next.v == -next.e;
}

bool check_e_recurrence(const Curve& curve, const Rational& e_prev, const Rational& e, const Rational& e_next) {
    const Remainder rem = remainder(curve);
    if (e_prev.is_zero() || e.is_zero() || e_next.is_zero())
        throw SingularError("zero e in the recurrence window", 0);
    return e_prev * e * e * e_next == rem.v * rem.v * (e + curve.A()(rem.w));
}

bool check_e_pair_relation(const Curve& curve, const Sequence& e) {
    const Remainder rem = remainder(curve);
    const Rational v2 = rem.v * rem.v;
    const Rational Aw = curve.A()(rem.w);
    const Rational linear = -v2 * Aw;
    const Rational constant = v2 * v2 + v2 * rem.v * Aw * curve.A().derivative()(rem.w);
    for (long h = e.lo() + 1; h + 2 <= e.hi(); ++h) {
        const Rational& a = e.at(h - 1);
        const Rational& b = e.at(h);
        const Rational& c = e.at(h + 1);
        if (a * b * b * c * c * e.at(h + 2) != linear * b * c + constant) return false;
    }
    return true;
}

CubicMap cubic_model(const Curve& curve) {
    const Remainder rem = remainder(curve);
    const Rational p = curve.A().coeff(1);
    const Rational q = curve.A().coeff(0);
    ec::CubicModel m{p, -q, -rem.v, rem.v * (rem.w + p), Rational(0)};
    if (m.discriminant().is_zero()) throw MathError("singular cubic model " + m.str());
    return {m, rem.v};
}

TranslationReport verify_translation(const Curve& curve, const std::vector<Line>& lines) {
    TranslationReport report;
    if (lines.empty()) return report;
    const CubicMap map = cubic_model(curve);
    const ec::CubicModel& E = map.model;
    const ec::Point S = ec::Point::affine(Rational(0), Rational(0));

    std::vector<ec::Point> direct;
    for (const Line& l : lines) direct.push_back(map.image(l));
    for (const auto& p : direct)
        if (!E.contains(p)) return report;

    auto holds = [&](bool negated, const ec::Point& T, std::size_t k) {
        const ec::Point base = negated ? E.negate(direct[0]) : direct[0];
        const ec::Point img = negated ? E.negate(direct[k]) : direct[k];
        return img == E.add(base, E.multiply(T, static_cast<long>(k)));
    };

    for (bool negated : {false, true}) {
        for (bool minus : {false, true}) {
            const ec::Point T = minus ? E.negate(S) : S;
            bool early = true;
            for (std::size_t k = 0; k < lines.size() && k <= 2; ++k) early = early && holds(negated, T, k);
            if (!early) continue;
            report.negated_branch = negated;
            report.minus_S = minus;
            for (std::size_t k = 0; k < lines.size(); ++k) {
                if (!holds(negated, T, k)) {
                    report.failed_at = lines[k].h;
                    return report;
                }
            }
            report.ok = true;
            return report;
        }
    }
    return report;
}

Sequence denominators(const Sequence& e, const Rational& A0, const Rational& A1) {
    if (e.empty() || e.lo() > 1 || e.hi() < 0) throw MathError("e window must overlap indices 0..1");
    require_nonzero(A0, 0, "A_0");
    require_nonzero(A1, 1, "A_1");
    for (long h = e.lo(); h <= e.hi(); ++h) require_nonzero(e.at(h), h, "e_h");

    const long lo = std::min(0L, e.lo() - 1);
    const long hi = std::max(1L, e.hi() + 1);
    std::vector<Rational> A(static_cast<std::size_t>(hi - lo + 1));
    auto at = [&](long h) -> Rational& { return A[static_cast<std::size_t>(h - lo)]; };
    at(0) = A0;
    at(1) = A1;
    for (long h = 1; h <= e.hi(); ++h) {
        at(h + 1) = e.at(h) * at(h) * at(h) / at(h - 1);
        require_nonzero(at(h + 1), h + 1, "A_h");
    }
    for (long h = 0; h >= e.lo(); --h) {
        at(h - 1) = e.at(h) * at(h) * at(h) / at(h + 1);
        require_nonzero(at(h - 1), h - 1, "A_h");
    }
    // two steps of the ladder: A_{h-2} A_{h+2} = e_{h-1} e_h^2 e_{h+1} A_h^2
    for (long h = e.lo() + 1; h + 1 <= e.hi(); ++h) {
        const Rational lhs = at(h - 2) * at(h + 2);
        const Rational rhs = e.at(h - 1) * e.at(h) * e.at(h) * e.at(h + 1) * at(h) * at(h);
        if (lhs != rhs) throw std::logic_error("denominator ladder inconsistent at h = " + std::to_string(h));
    }
    return Sequence(lo, std::move(A));
}

bool check_somos4(const Sequence& A, const Rational& alpha, const Rational& beta) {
    if (A.size() < 5) throw MathError("Somos-4 check needs at least 5 terms");
    for (long h = A.lo(); h <= A.hi(); ++h) require_nonzero(A.at(h), h, "A_h");
    for (long h = A.lo() + 2; h + 2 <= A.hi(); ++h) {
        if (A.at(h - 2) * A.at(h + 2) != alpha * A.at(h - 1) * A.at(h + 1) + beta * A.at(h) * A.at(h)) return false;
    }
    return true;
}

std::vector<Rational> eds_seeds(const Curve& curve) {
    const Remainder rem = remainder(curve);
    const Rational& v = rem.v;
    const Rational Aw = curve.A()(rem.w);
    const Rational dAw = curve.A().derivative()(rem.w);
    const Rational v2 = v * v;
    const Rational v4 = v2 * v2;
    return {Rational(1), -v, -v2 * Aw, v4 * v + v4 * Aw * dAw};
}

Reconstruction somos4_to_curve(const Rational& alpha, const Rational& beta, const std::vector<Rational>& window) {
    if (alpha.is_zero()) throw MathError("Somos-4 reconstruction needs alpha != 0");
    if (window.size() < 4) throw MathError("Somos-4 reconstruction needs four consecutive terms");
    for (std::size_t i = 0; i < window.size(); ++i)
        require_nonzero(window[i], static_cast<long>(i), "A_h");
    if (window.size() >= 5 && !check_somos4(Sequence(0, window, Provenance::supplied), alpha, beta))
        throw MathError("window does not satisfy its own Somos-4 recursion");

    const Rational& A0 = window[0];
    const Rational& A1 = window[1];
    const Rational& A2 = window[2];
    const Rational& A3 = window[3];
    const Rational Am1 = (alpha * A0 * A2 + beta * A1 * A1) / A3;
    if (Am1.is_zero()) throw SingularError("A_{-1} = 0: the window starts next to a singular index", -1);

    const Rational lambda = alpha.exact_sqrt() ? Rational(1) : alpha;
    const auto v = (lambda * lambda * lambda * alpha).exact_sqrt();
    if (!v) throw std::logic_error("twist did not produce a rational v");
    const Rational e0 = lambda * Am1 * A1 / (A0 * A0);
    const Rational e1 = lambda * A0 * A2 / (A1 * A1);
    const Rational q = lambda * beta / alpha;
    const Rational w0 = -e0 * e1 / *v;
    const Rational p = (-e0 - e1 - q - w0 * w0) / w0;

    Curve curve = Curve::from_AR(Poly(std::vector<Rational>{q, p, Rational(1)}), Poly(std::vector<Rational>{Rational(0), *v}));
    cf::State start = cf::init(curve, Poly(e0), Poly(std::vector<Rational>{-w0, Rational(1)}));
    return Reconstruction{std::move(curve), std::move(start), lambda, *v};
}

bool verify_reconstruction(const Reconstruction& rec, const Rational& alpha, const Rational& beta,
                           const std::vector<Rational>& window, long steps) {
    if (window.size() < 4) throw MathError("reconstruction check needs four consecutive terms");
    // A over indices -1..steps+1
    std::vector<Rational> A;
    A.push_back((alpha * window[0] * window[2] + beta * window[1] * window[1]) / window[3]);
    for (const auto& x : window) A.push_back(x);
    while (static_cast<long>(A.size()) < steps + 3) {
        const std::size_t n = A.size();
        require_nonzero(A[n - 4], static_cast<long>(n) - 5, "A_h");
        A.push_back((alpha * A[n - 1] * A[n - 3] + beta * A[n - 2] * A[n - 2]) / A[n - 4]);
    }
    const auto lines = cf::expand(rec.curve, rec.start, 0, steps);
    for (long h = 0; h <= steps; ++h) {
        const Rational& Ah = A[static_cast<std::size_t>(h + 1)];
        require_nonzero(Ah, h, "A_h");
        const Rational expected = rec.twist * A[static_cast<std::size_t>(h)] * A[static_cast<std::size_t>(h + 2)] / (Ah * Ah);
        if (lines[static_cast<std::size_t>(h)].state.P != Poly(expected)) return false;
    }
    return true;
}

}  // namespace pcf::genus1
