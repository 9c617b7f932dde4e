#include "pcf/somos.hpp"

#include <map>
#include <set>
#include <sstream>

#include "pcf/errors.hpp"

namespace pcf::somos {

namespace {

long floor_div2(long h) { return h >= 0 ? h / 2 : -((-h + 1) / 2); }

Sequence from_map(const std::map<long, Rational>& m, long lo, long hi) {
    std::vector<Rational> out;
    long first = lo;
    bool started = false;
    for (long h = lo; h <= hi; ++h) {
        const auto it = m.find(h);
        if (it == m.end()) {
            if (started) break;
            continue;
        }
        if (!started) first = h;
        started = true;
        out.push_back(it->second);
    }
    return Sequence(started ? first : lo, std::move(out));
}

}  // namespace

SomosSpec SomosSpec::standard(int width, std::vector<Rational> seeds, const std::vector<Rational>& coeffs) {
    SomosSpec spec;
    spec.width = width;
    spec.seeds = std::move(seeds);
    const int gaps = width / 2;
    if (static_cast<int>(coeffs.size()) > gaps)
        throw MathError("width " + std::to_string(width) + " takes at most " + std::to_string(gaps) + " coefficients");
    for (int i = 1; i <= gaps; ++i)
        spec.terms.push_back({i <= static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(i - 1)] : Rational(1), i});
    spec.validate();
    return spec;
}

void SomosSpec::validate() const {
    if (width < 4) throw MathError("Somos width must be at least 4, got " + std::to_string(width));
    if (seeds.empty()) throw MathError("empty seed window");
    if (static_cast<int>(seeds.size()) != width)
        throw MathError("width " + std::to_string(width) + " needs " + std::to_string(width) + " seeds, got " +
                        std::to_string(seeds.size()));
    if (terms.empty()) throw MathError("relation has no terms");
    std::set<int> seen;
    for (const Term& t : terms) {
        if (t.gap < 1 || 2 * t.gap > width) throw MathError("gap " + std::to_string(t.gap) + " outside 1..k/2");
        if (!seen.insert(t.gap).second) throw MathError("gap " + std::to_string(t.gap) + " repeated");
    }
}

std::string SomosSpec::str() const {
    std::ostringstream os;
    os << "y_h y_{h+" << width << "} =";
    bool first = true;
    for (const Term& t : terms) {
        os << (first ? " " : " + ");
        first = false;
        if (!t.coeff.is_one()) os << t.coeff << " ";
        os << "y_{h+" << t.gap << "} y_{h+" << width - t.gap << "}";
    }
    return os.str();
}

Generated generate(const SomosSpec& spec, long lo, long hi) {
    spec.validate();
    if (lo > hi) throw MathError("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
    const long k = spec.width;
    std::map<long, Rational> y;
    for (long i = 0; i < k; ++i) y[i] = spec.seeds[static_cast<std::size_t>(i)];

    auto sum = [&](long h) {
        Rational s;
        for (const Term& t : spec.terms) s += t.coeff * y.at(h + t.gap) * y.at(h + k - t.gap);
        return s;
    };

    Generated out;
    for (long n = k; n <= hi; ++n) {
        const long h = n - k;
        if (y.at(h).is_zero()) {
            out.forward = Halt{h, "zero pivot y_" + std::to_string(h) + " blocks y_" + std::to_string(n)};
            break;
        }
        y[n] = sum(h) / y.at(h);
    }
    for (long h = -1; h >= lo; --h) {
        if (y.at(h + k).is_zero()) {
            out.backward = Halt{h + k, "zero pivot y_" + std::to_string(h + k) + " blocks y_" + std::to_string(h)};
            break;
        }
        y[h] = sum(h) / y.at(h + k);
    }
    out.seq = from_map(y, lo, hi);
    return out;
}

std::optional<long> first_violation(const SomosSpec& spec, const Sequence& seq) {
    spec.validate();
    const long k = spec.width;
    for (long h = seq.lo(); h + k <= seq.hi(); ++h) {
        Rational s;
        for (const Term& t : spec.terms) s += t.coeff * seq.at(h + t.gap) * seq.at(h + k - t.gap);
        if (seq.at(h) * seq.at(h + k) != s) return h;
    }
    return std::nullopt;
}

std::optional<long> integrality_scan(const Sequence& seq) {
    if (seq.empty()) return std::nullopt;
    const long reach = std::max(std::labs(seq.lo()), std::labs(seq.hi()));
    for (long r = 0; r <= reach; ++r) {
        for (long h : {r, -r}) {
            if (h == -r && r == 0) continue;
            if (seq.contains(h) && !seq.at(h).is_integer()) return h;
        }
    }
    return std::nullopt;
}

Generated eds_generate(const EDSSpec& spec, long n) {
    if (n < 1) throw MathError("EDS length must be positive");
    const std::vector<Rational> seeds{spec.W1, spec.W2, spec.W3, spec.W4};
    for (std::size_t i = 0; i < seeds.size(); ++i)
        if (seeds[i].is_zero()) throw MathError("EDS seed W_" + std::to_string(i + 1) + " is zero");
    std::vector<Rational> W(seeds.begin(), seeds.begin() + std::min<long>(n, 4));
    Generated out;
    const Rational c2 = spec.W2 * spec.W2;
    const Rational c3 = spec.W1 * spec.W3;
    // W[i] holds W_{i+1}
    for (long m = 5; m <= n; ++m) {
        const long h = m - 2;
        auto at = [&](long i) -> const Rational& { return W[static_cast<std::size_t>(i - 1)]; };
        const Rational next = (c2 * at(h - 1) * at(h + 1) - c3 * at(h) * at(h)) / at(h - 2);
        W.push_back(next);
        if (next.is_zero()) {
            out.forward = Halt{m, "W_" + std::to_string(m) + " = 0 would be the pivot for W_" + std::to_string(m + 4)};
            break;
        }
    }
    out.seq = Sequence(1, std::move(W));
    return out;
}

Sequence antisymmetric(const Sequence& W) {
    if (W.lo() != 1) throw MathError("antisymmetric extension needs a window starting at index 1");
    const long n = W.hi();
    std::vector<Rational> out;
    for (long h = -n; h <= n; ++h) out.push_back(h == 0 ? Rational(0) : (h > 0 ? W.at(h) : -W.at(-h)));
    return Sequence(-n, std::move(out));
}

Rational eds_at(const Sequence& W, long i) {
    if (W.contains(i)) return W.at(i);
    if (i == 0) return Rational(0);
    if (W.contains(-i)) return -W.at(-i);
    throw MathError("index " + std::to_string(i) + " outside the EDS window");
}

bool ward_identity(const Sequence& W, long m, long n, long h_lo, long h_hi) {
    auto w = [&](long i) { return eds_at(W, i); };
    const Rational wn2 = w(n) * w(n);
    const Rational wm2 = w(m) * w(m);
    const Rational cross = w(m - n) * w(m + n);
    for (long h = h_lo; h <= h_hi; ++h)
        if (w(h - m) * w(h + m) * wn2 != w(h - n) * w(h + n) * wm2 - cross * w(h) * w(h)) return false;
    return true;
}

bool ladder_identity(const Sequence& A, const Sequence& W, long m, long n, long h_lo, long h_hi) {
    auto w = [&](long i) { return eds_at(W, i); };
    const Rational wn2 = w(n) * w(n);
    const Rational wm2 = w(m) * w(m);
    const Rational cross = w(m - n) * w(m + n);
    for (long h = h_lo; h <= h_hi; ++h)
        if (A.at(h - m) * A.at(h + m) * wn2 != wm2 * A.at(h - n) * A.at(h + n) - cross * A.at(h) * A.at(h)) return false;
    return true;
}

bool odd_ladder_identity(const Sequence& A, const Sequence& W, long m, long h_lo, long h_hi) {
    auto w = [&](long i) { return eds_at(W, i); };
    const Rational left = w(1) * w(2);
    const Rational c1 = w(m) * w(m + 1);
    const Rational c2 = w(m - 1) * w(m + 2);
    for (long h = h_lo; h <= h_hi; ++h)
        if (left * A.at(h - m) * A.at(h + m + 1) != c1 * A.at(h - 1) * A.at(h + 2) - c2 * A.at(h) * A.at(h + 1))
            return false;
    return true;
}

Rational hone_invariant(const Rational& alpha, const Rational& beta, const Rational& x, const Rational& y) {
    if (x.is_zero() || y.is_zero()) throw SingularError("J needs nonzero arguments", 0);
    return x * y + alpha * (x.inverse() + y.inverse()) + beta / (x * y);
}

HoneStep hone_map(const Rational& alpha, const Rational& beta, const Rational& e_prev, const Rational& e_cur) {
    if (e_prev.is_zero()) throw SingularError("hone map: e_{h-1} = 0", -1);
    if (e_cur.is_zero()) throw SingularError("hone map: e_h = 0", 0);
    return {(alpha + beta / e_cur) / (e_prev * e_cur), hone_invariant(alpha, beta, e_prev, e_cur)};
}

Sequence hone_orbit(const Rational& alpha, const Rational& beta, const Rational& e0, const Rational& e1, long n) {
    std::vector<Rational> e{e0, e1};
    while (static_cast<long>(e.size()) <= n) {
        const std::size_t k = e.size();
        if (e[k - 1].is_zero() || e[k - 2].is_zero()) break;
        e.push_back(hone_map(alpha, beta, e[k - 2], e[k - 1]).e_next);
    }
    if (n < 1) e.resize(static_cast<std::size_t>(std::max(0L, n + 1)));
    return Sequence(0, std::move(e));
}

namespace {

Fit fit_class(const Sequence& y, int parity) {
    struct Row {
        Rational a, b, rhs;
        long centre;
    };
    std::vector<Row> rows;
    for (long c = y.lo() + 2; c + 2 <= y.hi(); ++c)
        rows.push_back({y.at(c - 1) * y.at(c + 1), y.at(c) * y.at(c), y.at(c - 2) * y.at(c + 2), 2 * c + parity});
    Fit fit;
    std::optional<std::pair<std::size_t, std::size_t>> used;
    for (std::size_t i = 0; i < rows.size() && !used; ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const Rational det = rows[i].a * rows[j].b - rows[j].a * rows[i].b;
            if (det.is_zero()) continue;
            fit.alpha = (rows[i].rhs * rows[j].b - rows[j].rhs * rows[i].b) / det;
            fit.beta = (rows[i].a * rows[j].rhs - rows[j].a * rows[i].rhs) / det;
            used = std::make_pair(i, j);
            break;
        }
    }
    if (!used) throw MathError("degenerate fitting system: every pair of windows is singular");
    fit.ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == used->first || i == used->second) continue;
        ++fit.verified;
        if (fit.alpha * rows[i].a + fit.beta * rows[i].b != rows[i].rhs) {
            fit.ok = false;
            if (!fit.failed_at) fit.failed_at = rows[i].centre;
        }
    }
    if (fit.verified == 0) fit.ok = false;
    return fit;
}

}  // namespace

Split somos5_split(const Sequence& B) {
    if (B.size() < 14) throw MathError("Somos-5 split needs at least 14 terms, got " + std::to_string(B.size()));
    std::vector<Rational> even, odd;
    long even_lo = 0, odd_lo = 0;
    for (long h = B.lo(); h <= B.hi(); ++h) {
        auto& bucket = (h % 2 == 0) ? even : odd;
        if (bucket.empty()) (h % 2 == 0 ? even_lo : odd_lo) = floor_div2(h);
        bucket.push_back(B.at(h));
    }
    Split s;
    s.even = Sequence(even_lo, std::move(even));
    s.odd = Sequence(odd_lo, std::move(odd));
    s.even_fit = fit_class(s.even, 0);
    s.odd_fit = fit_class(s.odd, 1);
    return s;
}

bool eds_divisibility(const Sequence& W, const std::vector<std::pair<long, long>>& pairs) {
    for (long i = 1; i <= 4; ++i)
        if (!W.contains(i)) throw MathError("EDS window must contain W_1..W_4");
    for (const auto& x : W.values())
        if (!x.is_integer()) throw MathError("divisibility needs an integral sequence");
    if (!W.at(1).is_one()) throw MathError("divisibility needs W_1 = 1");
    if (W.at(2).is_zero() || !(W.at(4) / W.at(2)).is_integer()) throw MathError("divisibility needs W_2 | W_4");
    const Rational c2 = W.at(2) * W.at(2);
    const Rational c3 = W.at(1) * W.at(3);
    for (long h = W.lo() + 2; h + 2 <= W.hi(); ++h) {
        auto w = [&](long i) { return eds_at(W, i); };
        if (w(h - 2) * w(h + 2) != c2 * w(h - 1) * w(h + 1) - c3 * w(h) * w(h))
            throw MathError("window fails the EDS recurrence at h = " + std::to_string(h));
    }
    for (const auto& [a, b] : pairs) {
        if (a == 0 || b % a != 0) throw MathError(std::to_string(a) + " does not divide " + std::to_string(b));
        const Rational wa = eds_at(W, a);
        const Rational wb = eds_at(W, b);
        if (wa.is_zero()) {
            if (!wb.is_zero()) return false;
            continue;
        }
        if (!(wb / wa).is_integer()) return false;
    }
    return true;
}

}  // namespace pcf::somos
