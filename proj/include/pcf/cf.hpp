#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pcf/curve.hpp"
#include "pcf/poly.hpp"

namespace pcf::cf {

/// One line of the tableau: the complete quotient (Z + P) / Q at index h.
struct State {
    long h = 0;
    Poly P;
    Poly Q;

    friend bool operator==(const State&, const State&) = default;
};

/// Data extracted at a line: the partial quotient a_h and its shape.
struct Step {
    long h = 0;
    Poly a;
    Rational u;                 ///< leading coefficient of Q_h
    std::optional<Rational> nu; ///< a_h = (X + nu)/u when a_h is linear
    bool normal = false;        ///< deg a_h == 1
    bool reduced = false;       ///< deg P_h < g and deg Q_h <= g
};

struct Line {
    State state;
    Step step;
};

enum class StartMode {
    any,    ///< accept every valid (P0, Q0)
    normal, ///< additionally refuse the principal class (P0 = 0, Q0 constant)
};

/// Validates a start line: Q0 nonzero, deg P0 < g, deg Q0 <= g, and Q0 | -R + P0(A + P0).
State init(const Curve& curve, Poly P0, Poly Q0, StartMode mode = StartMode::any);

/// The principal class Z itself: P0 = 0, Q0 = 1.
State principal(const Curve& curve);

bool is_reduced(const Curve& curve, const State& state);

/// Describes the line at state.h without stepping.
Step describe(const Curve& curve, const State& state);

/// Advances one line: returns the step data of the input line and the state at h+1.
///
/// The partial quotient is quo(A + P_h, Q_h). Z differs from A by a function of
/// negative degree, so that remainder never reaches the polynomial part.
std::pair<Step, State> step_forward(const Curve& curve, const State& state);

/// Retreats one line: returns the state at h-1 with its step data.
///
/// Q_{h-1} comes from the norm identity at h; a_{h-1} = quo(A + P_h, Q_{h-1}).
std::pair<Step, State> step_backward(const Curve& curve, const State& state);

/// All lines with index in [lo, hi], ascending. state.h must lie in the range.
std::vector<Line> expand(const Curve& curve, const State& state, long lo, long hi);

struct PeriodReport {
    std::optional<long> quasi_period;  ///< smallest m with P_m = P_0, Q_m = kappa Q_0
    Rational multiplier;               ///< kappa (1 when no period found)
    std::optional<long> pure_period;   ///< smallest multiple of m with multiplier 1
    long unit_degree = 0;              ///< sum of deg a_h over one quasi-period
};

/// Multiplier accumulated after k quasi-periods of length m with multiplier kappa.
/// Q_{m+j} = kappa^{(-1)^j} Q_j, so odd m alternates kappa and 1/kappa.
Rational period_multiplier(const Rational& kappa, long m, long k);

/// Searches h = 1..maxsteps for a recurrence of (P, Q) up to a constant multiple of Q.
/// Absence means "not found within the budget", never "no torsion".
PeriodReport detect_quasi_period(const Curve& curve, const State& start, long maxsteps);
/// Uses the principal start.
PeriodReport detect_quasi_period(const Curve& curve, long maxsteps);

struct Convergent {
    Poly p;
    Poly q;
};

/// p_h = a_h p_{h-1} + p_{h-2} from p_{-1} = 1, p_{-2} = 0 (q from q_{-1} = 0, q_{-2} = 1).
std::vector<Convergent> continuants(const std::vector<Step>& steps);

/// Integral f dx / sqrt(D) = log(a + b sqrt(D)), witnessed by a^2 - b^2 D = c.
struct Certificate {
    Poly f;
    Poly a;
    Poly b;
    long m = 0;
    Rational c;
};

constexpr long kDefaultCertificateBudget = 64;

/// Looks for a unit of Q[X, sqrt D] by expanding Z from the principal class.
/// The returned a is monic and b is signed so that f has positive leading coefficient.
std::optional<Certificate> certificate(const Poly& D, long maxsteps = kDefaultCertificateBudget);

/// Exact check of a^2 - b^2 D = c and f c = a b' D + a b D'/2 - a' b D.
bool verify_certificate(const Poly& D, const Certificate& cert);

}  // namespace pcf::cf
