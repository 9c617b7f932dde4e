#pragma once

#include <optional>
#include <vector>

#include "pcf/cf.hpp"
#include "pcf/curve.hpp"
#include "pcf/sequence.hpp"
#include "pcf/weierstrass.hpp"

namespace pcf::genus1 {

/// R(X) = v (X - w), v nonzero.
struct Remainder {
    Rational v;
    Rational w;
};

/// Throws MathError unless g = 1 and R has degree exactly 1.
Remainder remainder(const Curve& curve);

/// P_h = e, Q_h = v (X - w).
struct Line {
    long h = 0;
    Rational e;
    Rational v;
    Rational w;
};

/// Throws MathError for a non-normal step or a constant Q_h, and SingularError for e_h = 0.
Line extract(const Curve& curve, const cf::Line& line);
std::vector<Line> extract_all(const Curve& curve, const std::vector<cf::Line>& lines);

/// v (w - w_h) = e_h e_{h+1} and v_h v_{h+1} = -e_{h+1}.
bool check_line_pair(const Curve& curve, const Line& current, const Line& next);

/// e_{h-1} e_h^2 e_{h+1} = v^2 (e_h + A(w)). Throws SingularError on a zero e.
bool check_e_recurrence(const Curve& curve, const Rational& e_prev, const Rational& e, const Rational& e_next);

/// e_{h-1} e_h^2 e_{h+1}^2 e_{h+2} = -v^2 A(w) e_h e_{h+1} + v^4 + v^3 A(w) A'(w) at every h with
/// h-1..h+2 in the window.
bool check_e_pair_relation(const Curve& curve, const Sequence& e);

/// Cubic model from U = Z, V = X Z + v, and the image of a point (X, Z) of the curve.
struct CubicMap {
    ec::CubicModel model;
    Rational v;

    ec::Point operator()(const Rational& X, const Rational& Z) const { return ec::Point::affine(Z, X * Z + v); }
    /// Image of M_{h+1} = (w_h, -e_h).
    ec::Point image(const Line& line) const { return (*this)(line.w, -line.e); }
};

/// Throws MathError unless g = 1, A has the form X^2 + pX + q, and the model is nonsingular.
CubicMap cubic_model(const Curve& curve);

struct TranslationReport {
    bool ok = false;
    bool negated_branch = false;  ///< point map composed with the model involution
    bool minus_S = false;         ///< translation by -S rather than S = (0, 0)
    std::optional<long> failed_at;
};

/// image(M_{h+1}) = image(M_1) + h T for all lines, where T = +-S and the branch
/// are fixed once from h <= 2 and then enforced across the whole window.
TranslationReport verify_translation(const Curve& curve, const std::vector<Line>& lines);

/// A_{h+1} = e_h A_h^2 / A_{h-1} from A at indices 0, 1; e must cover [lo, hi] with lo <= 1 <= hi
/// (lower indices extend backwards). Result covers [lo - 1, hi + 1].
/// Throws SingularError for zero e or a zero pivot.
Sequence denominators(const Sequence& e, const Rational& A0, const Rational& A1);

/// A_{h-2} A_{h+2} = alpha A_{h-1} A_{h+1} + beta A_h^2 on every interior index.
/// Throws MathError for windows shorter than 5 or containing zero.
bool check_somos4(const Sequence& A, const Rational& alpha, const Rational& beta);

/// First four terms W_1..W_4 of the elliptic divisibility sequence belonging to the curve.
std::vector<Rational> eds_seeds(const Curve& curve);

struct Reconstruction {
    Curve curve;
    cf::State start;
    Rational twist;  ///< lambda: the expansion carries e_h = lambda A_{h-1} A_{h+1} / A_h^2
    Rational v;
};

/// Curve and start whose expansion regenerates the Somos-4 window. Gauge: w = 0, and
/// v = sqrt(alpha) or, for non-square alpha, the representative twisted by alpha.
/// Throws MathError for alpha = 0, zeros in the window, fewer than four terms,
/// or a window that fails its own recursion.
Reconstruction somos4_to_curve(const Rational& alpha, const Rational& beta, const std::vector<Rational>& window);

/// Re-expands the reconstruction for steps lines and compares with the Somos-4 continuation.
/// Throws SingularError when the continuation reaches a zero term.
bool verify_reconstruction(const Reconstruction& rec, const Rational& alpha, const Rational& beta,
                           const std::vector<Rational>& window, long steps);

}  // namespace pcf::genus1
