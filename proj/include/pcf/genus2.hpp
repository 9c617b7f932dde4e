#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcf/cf.hpp"
#include "pcf/curve.hpp"
#include "pcf/sequence.hpp"

namespace pcf::genus2 {

/// R = u (X^2 - v X + w) when u != 0, otherwise R = -v (X - w) with v != 0.
struct Remainder {
    Rational u;
    Rational v;
    Rational w;
};

/// Throws MathError unless g = 2 and R is nonconstant.
Remainder remainder(const Curve& curve);

/// P_h = d (X + e); u is the leading coefficient of Q_h.
struct Line {
    long h = 0;
    Rational d;
    Rational e;
    Rational u;
};

/// Throws MathError for g != 2 and SingularError when P_h is not of exact degree 1.
Line extract(const Curve& curve, const cf::Line& line);
std::vector<Line> extract_all(const Curve& curve, const std::vector<cf::Line>& lines);

/// C_h = (R + P_{h+1} P_h) / (Q_h / u_h), cross-checked against u_h Q_{h+1} + P_{h+1} u_h a_h
/// and u_h Q_{h-1} + P_h u_h a_h. Throws MathError when the three disagree or a division is inexact.
Poly c_poly(const Curve& curve, const cf::Line& prev, const cf::Line& current, const cf::Line& next);

struct IdentityResult {
    std::string name;
    bool ok = true;
    bool applicable = true;
    long checked = 0;
    std::optional<long> failed_at;
};

/// Checks every parameter identity at each interior index of a window of consecutive lines
/// (at least 5). Throws SingularError for a zero d_h.
std::vector<IdentityResult> check_identities(const Curve& curve, const std::vector<cf::Line>& lines);

/// Signs in d_{h-2} d_{h-1}^2 d_h^3 d_{h+1}^2 d_{h+2} = s1 v^2 d_{h-1} d_h^2 d_{h+1} + s2 v^3 A(w).
struct SignVector {
    int v2 = 1;
    int v3 = -1;
    friend bool operator==(const SignVector&, const SignVector&) = default;
};

std::string describe(const SignVector& signs);

/// One instance on five consecutive d (u = 0 curves). Throws SingularError on a zero d.
bool check_d_relation(const Curve& curve, const std::vector<Rational>& d5, const SignVector& signs);

struct SignResolution {
    bool ok = false;
    std::optional<SignVector> signs;
    int candidates_validating = 0;  ///< distinct relations passing the first three indices
    Rational alpha;                 ///< resolved coefficient s1 v^2
    Rational beta;                  ///< resolved coefficient s2 v^3 A(w)
    long checked = 0;
    std::optional<long> failed_at;
};

/// Tries the four sign vectors on the first three interior indices of d, adopts the one
/// that validates, then enforces it at every index. Needs at least 7 terms and u = 0.
SignResolution resolve_d_relation(const Curve& curve, const Sequence& d);

/// T_{h+1} = d_h T_h^2 / T_{h-1} from T_0, T_1; d must overlap indices 0..1. Result covers
/// [d.lo - 1, d.hi + 1]. Also asserts the two- and three-step ladder relations.
Sequence t_sequence(const Sequence& d, const Rational& T0 = Rational(1), const Rational& T1 = Rational(1));

/// T_{h-3} T_{h+3} = alpha T_{h-2} T_{h+2} + beta T_h^2 at every interior index.
bool check_t_relation(const Sequence& T, const Rational& alpha, const Rational& beta);

/// d_h over the lines.
Sequence d_sequence(const std::vector<Line>& lines);

}  // namespace pcf::genus2
