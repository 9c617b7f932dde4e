#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcf/rational.hpp"
#include "pcf/sequence.hpp"

namespace pcf::somos {

/// One product term c * y_{h+gap} y_{h+k-gap}.
struct Term {
    Rational coeff;
    int gap = 1;
};

/// y_h y_{h+k} = sum of terms, seeds at indices 0..k-1.
struct SomosSpec {
    int width = 4;
    std::vector<Term> terms;
    std::vector<Rational> seeds;

    /// k-Somos pattern: gaps 1..floor(k/2), coefficient i on gap i (missing ones default to 1).
    static SomosSpec standard(int width, std::vector<Rational> seeds, const std::vector<Rational>& coeffs = {});
    /// Throws MathError for width < 4, wrong seed count, or gaps outside 1..k/2 or repeated.
    void validate() const;
    std::string str() const;
};

/// Where and why extension stopped in one direction.
struct Halt {
    long index = 0;  ///< index of the zero value that would have been the divisor
    std::string reason;
};

struct Generated {
    Sequence seq;
    std::optional<Halt> forward;
    std::optional<Halt> backward;
    bool complete() const { return !forward && !backward; }
};

/// Two-sided window [lo, hi]. A zero pivot stops extension in that direction only;
/// the returned window is then clipped. Throws MathError for lo > hi or an invalid spec.
Generated generate(const SomosSpec& spec, long lo, long hi);

/// First interior index h (the lower end of the relation) where the window fails, or none.
std::optional<long> first_violation(const SomosSpec& spec, const Sequence& seq);

/// First non-integral index scanning outward by |h|, h >= 0 before -h. None when all integral.
std::optional<long> integrality_scan(const Sequence& seq);

/// W_{h-2} W_{h+2} = W_2^2 W_{h-1} W_{h+1} - W_1 W_3 W_h^2.
struct EDSSpec {
    Rational W1{1}, W2{1}, W3{1}, W4{1};
};

/// Terms W_1..W_n. Generation stops at the first zero term (it would be a later pivot),
/// which is reported as the halt index and kept in the window. Throws MathError for
/// zero seeds or n < 1.
Generated eds_generate(const EDSSpec& spec, long n);

/// Extends W_1..W_n to [-n, n] with W_0 = 0, W_{-h} = -W_h. Throws MathError unless lo = 1.
Sequence antisymmetric(const Sequence& W);

/// Reads W_i, falling back on antisymmetry (and W_0 = 0) for indices missing from a
/// one-sided window. Throws MathError when neither i nor -i is present.
Rational eds_at(const Sequence& W, long i);

/// W_{h-m} W_{h+m} W_n^2 = W_{h-n} W_{h+n} W_m^2 - W_{m-n} W_{m+n} W_h^2 for h in [h_lo, h_hi].
bool ward_identity(const Sequence& W, long m, long n, long h_lo, long h_hi);

/// A_{h-m} A_{h+m} W_n^2 = W_m^2 A_{h-n} A_{h+n} - W_{m-n} W_{m+n} A_h^2 for h in [h_lo, h_hi].
bool ladder_identity(const Sequence& A, const Sequence& W, long m, long n, long h_lo, long h_hi);

/// W_1 W_2 A_{h-m} A_{h+m+1} = W_m W_{m+1} A_{h-1} A_{h+2} - W_{m-1} W_{m+2} A_h A_{h+1}.
bool odd_ladder_identity(const Sequence& A, const Sequence& W, long m, long h_lo, long h_hi);

struct HoneStep {
    Rational e_next;
    Rational J;  ///< invariant evaluated at (e_prev, e_cur)
};

/// e_{h+1} = (alpha + beta / e_h) / (e_{h-1} e_h). Throws SingularError for a zero input.
HoneStep hone_map(const Rational& alpha, const Rational& beta, const Rational& e_prev, const Rational& e_cur);

/// J(x, y) = x y + alpha (1/x + 1/y) + beta / (x y).
Rational hone_invariant(const Rational& alpha, const Rational& beta, const Rational& x, const Rational& y);

/// e_0 .. e_n of the orbit; stops early (shorter window) if an iterate is zero.
Sequence hone_orbit(const Rational& alpha, const Rational& beta, const Rational& e0, const Rational& e1, long n);

/// y_{h-2} y_{h+2} = alpha y_{h-1} y_{h+1} + beta y_h^2 fitted on one parity class.
struct Fit {
    Rational alpha;
    Rational beta;
    bool ok = false;
    long verified = 0;              ///< windows checked beyond the two used for fitting
    std::optional<long> failed_at;  ///< centre index (in the original numbering) of a failing window
};

struct Split {
    Sequence even;  ///< B_{2j}, indexed by j
    Sequence odd;   ///< B_{2j+1}, indexed by j
    Fit even_fit;
    Fit odd_fit;
    bool ok() const { return even_fit.ok && odd_fit.ok; }
};

/// Splits a width-5 window into its parity classes and fits a Somos-4 relation to each
/// by exact 2x2 solving, then verifies on the remaining windows. Throws MathError for
/// fewer than 14 terms or when every pair of windows gives a singular system.
Split somos5_split(const Sequence& B);

/// W_a | W_b for every pair. Throws MathError when a does not divide b, an index is outside
/// the window, or the preconditions fail: integral terms, W_1 = 1, W_2 | W_4, and the
/// EDS recurrence over the window.
bool eds_divisibility(const Sequence& W, const std::vector<std::pair<long, long>>& pairs);

}  // namespace pcf::somos
