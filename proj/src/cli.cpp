#include "pcf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "pcf/cf.hpp"
#include "pcf/errors.hpp"
#include "pcf/genus1.hpp"
#include "pcf/genus2.hpp"
#include "pcf/json.hpp"
#include "pcf/somos.hpp"

namespace pcf::cli {

namespace {

/// Bad flags or inconsistent input; maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CurveFlags {
    std::string D, A, R, p0, q0;
};

void add_curve_flags(CLI::App* cmd, CurveFlags& f, bool with_start) {
    cmd->add_option("--D", f.D, "Y^2 = D, decomposed as A^2 + 4R");
    cmd->add_option("--A", f.A, "monic A of Z^2 - A Z - R = 0");
    cmd->add_option("--R", f.R, "remainder R");
    if (with_start) {
        cmd->add_option("--p0", f.p0, "P_0 of the start line")->required();
        cmd->add_option("--q0", f.q0, "Q_0 of the start line")->required();
    }
}

Curve build_curve(const CurveFlags& f) {
    const bool has_D = !f.D.empty();
    const bool has_AR = !f.A.empty() || !f.R.empty();
    if (has_D && has_AR) throw InputError("give either --D or --A/--R, not both");
    if (has_D) return Curve::from_D(Poly::parse(f.D));
    if (f.A.empty() || f.R.empty()) throw InputError("a curve needs --D or both --A and --R");
    return Curve::from_AR(Poly::parse(f.A), Poly::parse(f.R));
}

cf::State build_start(const Curve& c, const CurveFlags& f) {
    return cf::init(c, Poly::parse(f.p0), Poly::parse(f.q0));
}

std::string flags_of(const cf::Step& s) {
    std::string out;
    out += s.normal ? "normal" : "-";
    out += s.reduced ? " reduced" : " -";
    return out;
}

/// PASS/FAIL lines; the exit code is 0 iff nothing failed.
class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void check(const std::string& name, bool ok, const std::optional<long>& at = std::nullopt) {
        out_ << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && at) out_ << " (at h = " << at.value() << ")";
        out_ << '\n';
        failed_ = failed_ || !ok;
    }
    void skip(const std::string& name, const std::string& why) { out_ << "SKIP " << name << " (" << why << ")\n"; }
    void note(const std::string& text) { out_ << "# " << text << '\n'; }
    int code() const { return failed_ ? Exit::failed : Exit::ok; }

private:
    std::ostream& out_;
    bool failed_ = false;
};

// ---- expand ----

struct ExpandFlags {
    CurveFlags curve;
    long from = 0;
    long to = 10;
    bool json = false;
};

int cmd_expand(const ExpandFlags& f, std::ostream& out) {
    const Curve c = build_curve(f.curve);
    const cf::State start = build_start(c, f.curve);
    if (f.from > f.to) throw InputError("--from must not exceed --to");
    const long lo = std::min(f.from, 0L), hi = std::max(f.to, 0L);
    const auto lines = cf::expand(c, start, lo, hi);
    if (f.json) {
        out << json::json{{"A", c.A().str()}, {"R", c.R().str()}, {"g", c.genus()}}.dump() << '\n';
        for (const auto& l : lines)
            if (l.state.h >= f.from && l.state.h <= f.to) out << json::from_line(l).dump() << '\n';
        return Exit::ok;
    }
    out << "# A = " << c.A() << ", R = " << c.R() << '\n';
    out << "h\tP\tQ\ta\tflags\n";
    for (const auto& l : lines) {
        if (l.state.h < f.from || l.state.h > f.to) continue;
        out << l.state.h << '\t' << l.state.P << '\t' << l.state.Q << '\t' << l.step.a << '\t' << flags_of(l.step)
            << '\n';
    }
    return Exit::ok;
}

// ---- certify ----

struct CertifyFlags {
    std::string D;
    long max_steps = cf::kDefaultCertificateBudget;
    bool json = false;
};

int cmd_certify(const CertifyFlags& f, std::ostream& out) {
    if (f.max_steps < 1) throw InputError("--max-steps must be positive");
    const Poly D = Poly::parse(f.D);
    Curve::from_D(D);  // validates: monic, even degree, not a square
    const auto cert = cf::certificate(D, f.max_steps);
    if (!cert) {
        if (f.json)
            out << json::json{{"found", false}, {"max_steps", f.max_steps}}.dump() << '\n';
        else
            out << "no quasi-period within " << f.max_steps << " steps\n";
        return Exit::failed;
    }
    if (!cf::verify_certificate(D, *cert)) throw std::logic_error("certificate failed its own check");
    if (f.json) {
        out << json::from_certificate(*cert).dump() << '\n';
        return Exit::ok;
    }
    out << "f = " << cert->f << '\n'
        << "a = " << cert->a << '\n'
        << "b = " << cert->b << '\n'
        << "m = " << cert->m << '\n'
        << "c = " << cert->c << '\n';
    return Exit::ok;
}

// ---- somos / eds ----

struct SomosFlags {
    int width = 0;
    std::string coeffs;
    std::string seeds;
    long from = 0;
    std::optional<long> to;
    bool scan = false;
    bool json = false;
};

int print_sequence(const Sequence& s, bool scan, bool as_json, std::ostream& out) {
    std::optional<long> hit;
    if (scan) hit = somos::integrality_scan(s);
    if (as_json) {
        out << json::from_sequence(s).dump() << '\n';
        if (scan) {
            json::json r{{"first_fractional", nullptr}};
            if (hit) r = {{"first_fractional", hit.value()}, {"value", s.at(hit.value()).str()}};
            out << r.dump() << '\n';
        }
    } else {
        out << s.str() << '\n';
        if (scan) {
            if (hit)
                out << "first fractional index " << *hit << ": " << s.at(*hit) << '\n';
            else
                out << "all integral over " << s.lo() << ".." << s.hi() << '\n';
        }
    }
    return hit ? Exit::failed : Exit::ok;
}

void report_halts(const somos::Generated& g, std::ostream& err) {
    if (g.forward) err << "halted forward at index " << g.forward->index << ": " << g.forward->reason << '\n';
    if (g.backward) err << "halted backward at index " << g.backward->index << ": " << g.backward->reason << '\n';
}

int cmd_somos(const SomosFlags& f, std::ostream& out, std::ostream& err) {
    const auto seeds = parse_list(f.seeds);
    const int width = f.width > 0 ? f.width : static_cast<int>(seeds.size());
    const auto coeffs = f.coeffs.empty() ? std::vector<Rational>{} : parse_list(f.coeffs);
    const somos::SomosSpec spec = somos::SomosSpec::standard(width, seeds, coeffs);
    const long to = f.to.value_or(f.from + 20);
    if (f.from > to) throw InputError("--from must not exceed --to");
    const somos::Generated g = somos::generate(spec, f.from, to);
    report_halts(g, err);
    return print_sequence(g.seq, f.scan, f.json, out);
}

int cmd_eds(const SomosFlags& f, std::ostream& out, std::ostream& err) {
    const auto seeds = parse_list(f.seeds);
    if (seeds.size() != 4) throw InputError("--seeds takes W_1,W_2,W_3,W_4");
    const long to = f.to.value_or(10);
    const long from = f.from;
    if (from > to) throw InputError("--from must not exceed --to");
    if (to < 1) throw InputError("--to must be at least 1");
    const somos::Generated g = somos::eds_generate({seeds[0], seeds[1], seeds[2], seeds[3]}, to);
    report_halts(g, err);
    Sequence s = g.seq;
    if (from < 1) {
        if (-from > s.hi()) throw InputError("--from reaches past the mirrored window");
        s = somos::antisymmetric(s).slice(from, to);
    } else {
        s = s.slice(from, to);
    }
    return print_sequence(s, f.scan, f.json, out);
}

// ---- identify ----

struct IdentifyFlags {
    std::string alpha, beta, window;
    long steps = 20;
};

int cmd_identify(const IdentifyFlags& f, std::ostream& out) {
    const Rational alpha = Rational::parse(f.alpha);
    const Rational beta = Rational::parse(f.beta);
    const auto window = parse_list(f.window);
    const genus1::Reconstruction rec = genus1::somos4_to_curve(alpha, beta, window);
    out << "A = " << rec.curve.A() << '\n'
        << "R = " << rec.curve.R() << '\n'
        << "P0 = " << rec.start.P << '\n'
        << "Q0 = " << rec.start.Q << '\n'
        << "twist = " << rec.twist << '\n';
    bool ok = false;
    try {
        ok = genus1::verify_reconstruction(rec, alpha, beta, window, f.steps);
    } catch (const SingularError& e) {
        out << "round trip over " << f.steps << " steps: FAIL (" << e.what() << ")\n";
        return Exit::failed;
    }
    out << "round trip over " << f.steps << " steps: " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? Exit::ok : Exit::failed;
}

// ---- verify ----

struct VerifyFlags {
    std::string suite;
    CurveFlags curve;
    long steps = 20;
    std::string alpha = "1", beta = "1", e0 = "1", e1 = "1";
    std::string seeds, coeffs;
};

void suite_g1(const VerifyFlags& f, Report& rep) {
    const Curve c = build_curve(f.curve);
    if (c.genus() != 1) throw InputError("suite g1 needs a genus-1 curve");
    const cf::State start = build_start(c, f.curve);
    const auto lines = genus1::extract_all(c, cf::expand(c, start, 0, f.steps));
    const genus1::Remainder rem = genus1::remainder(c);
    const Rational Aw = c.A()(rem.w);
    rep.note("v = " + rem.v.str() + ", w = " + rem.w.str() + ", A(w) = " + Aw.str());

    std::optional<long> at;
    for (std::size_t k = 0; k + 1 < lines.size() && !at; ++k)
        if (!genus1::check_line_pair(c, lines[k], lines[k + 1])) at = lines[k].h;
    rep.check("line pairs: v (w - w_h) = e_h e_{h+1}, v_h v_{h+1} = -e_{h+1}", !at, at);

    std::vector<Rational> ev;
    for (const auto& l : lines) ev.push_back(l.e);
    const Sequence e(0, ev);
    at.reset();
    for (long h = 1; h + 1 <= e.hi() && !at; ++h)
        if (!genus1::check_e_recurrence(c, e.at(h - 1), e.at(h), e.at(h + 1))) at = h;
    rep.check("e_{h-1} e_h^2 e_{h+1} = v^2 (e_h + A(w))", !at, at);
    rep.check("e_{h-1} e_h^2 e_{h+1}^2 e_{h+2} = -v^2 A(w) e_h e_{h+1} + v^4 + v^3 A(w) A'(w)",
              genus1::check_e_pair_relation(c, e));

    std::optional<Sequence> A;
    try {
        A = genus1::denominators(e, Rational(1), Rational(1));
        rep.check("A_{h+1} A_{h-1} = e_h A_h^2 (two-step ladder)", true);
    } catch (const std::logic_error&) {
        rep.check("A_{h+1} A_{h-1} = e_h A_h^2 (two-step ladder)", false);
    }
    const Rational alpha = rem.v * rem.v;
    const Rational beta = alpha * Aw;
    if (A) rep.check("A_{h-2} A_{h+2} = v^2 A_{h-1} A_{h+1} + v^2 A(w) A_h^2", genus1::check_somos4(*A, alpha, beta));

    const genus1::TranslationReport tr = genus1::verify_translation(c, lines);
    rep.note(std::string("point map ") + (tr.negated_branch ? "composed with negation" : "direct") +
             ", translation by " + (tr.minus_S ? "-S" : "S"));
    rep.check("translation law: image(M_{h+1}) = image(M_1) + h T", tr.ok, tr.failed_at);

    const auto Ws = genus1::eds_seeds(c);
    const somos::Generated W = somos::eds_generate({Ws[0], Ws[1], Ws[2], Ws[3]}, 10);
    if (!A || !W.complete() || A->size() < 14) {
        rep.skip("EDS identities", "window too short or EDS halted");
        return;
    }
    bool ladder = true, fam = true;
    for (long m = 1; m <= 4; ++m) {
        fam = fam && somos::odd_ladder_identity(*A, W.seq, m, A->lo() + 5, A->hi() - 5);
        for (long n = 1; n <= 4; ++n) ladder = ladder && somos::ladder_identity(*A, W.seq, m, n, A->lo() + 4, A->hi() - 4);
    }
    rep.note("EDS of the curve: " + W.seq.slice(1, 4).str());
    rep.check("A_{h-m} A_{h+m} W_n^2 = W_m^2 A_{h-n} A_{h+n} - W_{m-n} W_{m+n} A_h^2, m, n <= 4", ladder);
    rep.check("W_1 W_2 A_{h-m} A_{h+m+1} = W_m W_{m+1} A_{h-1} A_{h+2} - W_{m-1} W_{m+2} A_h A_{h+1}, m <= 4", fam);
}

void suite_g2(const VerifyFlags& f, Report& rep) {
    const Curve c = build_curve(f.curve);
    if (c.genus() != 2) throw InputError("suite g2 needs a genus-2 curve");
    if (f.steps < 6) throw InputError("suite g2 needs --steps >= 6");
    const cf::State start = build_start(c, f.curve);
    const auto lines = cf::expand(c, start, 0, f.steps);
    for (const auto& r : genus2::check_identities(c, lines)) {
        if (!r.applicable)
            rep.skip(r.name, "needs deg R = 2");
        else
            rep.check(r.name, r.ok, r.failed_at);
    }
    const genus2::Remainder rem = genus2::remainder(c);
    if (!rem.u.is_zero()) {
        rep.skip("d relation and T sequence", "needs deg R = 1");
        return;
    }
    const Sequence d = genus2::d_sequence(genus2::extract_all(c, lines));
    const genus2::SignResolution res = genus2::resolve_d_relation(c, d);
    if (res.signs)
        rep.note("resolved signs: " + genus2::describe(*res.signs) + " (alpha = " + res.alpha.str() +
                 ", beta = " + res.beta.str() + ", " + std::to_string(res.candidates_validating) + " candidate)");
    rep.check("d_{h-2} d_{h-1}^2 d_h^3 d_{h+1}^2 d_{h+2} under one sign vector at every index",
              res.ok && res.candidates_validating == 1, res.failed_at);
    if (!res.signs) return;
    const Sequence T = genus2::t_sequence(d);
    bool integral = true;
    for (const auto& x : T.values()) integral = integral && x.is_integer();
    rep.note("T over " + std::to_string(T.lo()) + ".." + std::to_string(T.hi()) + (integral ? ", all integral" : ", not all integral"));
    rep.check("T_{h-3} T_{h+3} = alpha T_{h-2} T_{h+2} + beta T_h^2", genus2::check_t_relation(T, res.alpha, res.beta));
}

void suite_ward(const VerifyFlags& f, Report& rep) {
    const auto seeds = parse_list(f.seeds.empty() ? "1,1,-1,1" : f.seeds);
    if (seeds.size() != 4) throw InputError("--seeds takes W_1,W_2,W_3,W_4");
    if (f.steps < 9) throw InputError("suite ward needs --steps >= 9");
    const somos::Generated g = somos::eds_generate({seeds[0], seeds[1], seeds[2], seeds[3]}, f.steps);
    if (g.forward) rep.note("halted at index " + std::to_string(g.forward->index) + ": " + g.forward->reason);
    const Sequence& W = g.seq;
    if (W.hi() < 9) throw InputError("EDS window too short after halting");
    bool ok = true;
    for (long m = 1; m <= 4; ++m)
        for (long n = 1; n <= 4; ++n) ok = ok && somos::ward_identity(W, m, n, 1, W.hi() - 4);
    rep.check("W_{h-m} W_{h+m} W_n^2 = W_{h-n} W_{h+n} W_m^2 - W_{m-n} W_{m+n} W_h^2, m, n <= 4", ok);
    std::vector<std::pair<long, long>> pairs;
    for (long a = 1; a <= W.hi(); ++a)
        for (long b = a; b <= W.hi(); b += a) pairs.emplace_back(a, b);
    try {
        rep.check("a | b implies W_a | W_b", somos::eds_divisibility(W, pairs));
    } catch (const MathError& e) {
        rep.skip("a | b implies W_a | W_b", e.what());
    }
}

void suite_somos5(const VerifyFlags& f, Report& rep) {
    const auto seeds = parse_list(f.seeds.empty() ? "1x5" : f.seeds);
    const auto coeffs = f.coeffs.empty() ? std::vector<Rational>{} : parse_list(f.coeffs);
    const somos::SomosSpec spec = somos::SomosSpec::standard(5, seeds, coeffs);
    const somos::Generated g = somos::generate(spec, -f.steps, f.steps);
    if (!g.complete()) rep.note("generation halted; using " + std::to_string(g.seq.lo()) + ".." + std::to_string(g.seq.hi()));
    const auto bad = somos::first_violation(spec, g.seq);
    rep.check(spec.str(), !bad, bad);
    try {
        const somos::Split s = somos::somos5_split(g.seq);
        rep.note("even terms: alpha' = " + s.even_fit.alpha.str() + ", beta' = " + s.even_fit.beta.str());
        rep.note("odd terms: alpha' = " + s.odd_fit.alpha.str() + ", beta' = " + s.odd_fit.beta.str());
        rep.check("even terms satisfy a fitted Somos-4 relation", s.even_fit.ok, s.even_fit.failed_at);
        rep.check("odd terms satisfy a fitted Somos-4 relation", s.odd_fit.ok, s.odd_fit.failed_at);
    } catch (const MathError& e) {
        rep.check(std::string("parity split: ") + e.what(), false);
    }
}

void suite_hone(const VerifyFlags& f, Report& rep) {
    const Rational alpha = Rational::parse(f.alpha), beta = Rational::parse(f.beta);
    const Rational e0 = Rational::parse(f.e0), e1 = Rational::parse(f.e1);
    if (e0.is_zero() || e1.is_zero()) throw InputError("--e0 and --e1 must be nonzero");
    const Sequence orbit = somos::hone_orbit(alpha, beta, e0, e1, f.steps);
    const Rational J = somos::hone_invariant(alpha, beta, e0, e1);
    rep.note("J = " + J.str());
    std::optional<long> at;
    long h = 1;
    for (; h <= orbit.hi() && !orbit.at(h).is_zero() && !at; ++h)
        if (somos::hone_invariant(alpha, beta, orbit.at(h - 1), orbit.at(h)) != J) at = h;
    if (orbit.hi() < f.steps || (h <= orbit.hi() && orbit.at(h).is_zero()))
        rep.note("orbit reached zero at h = " + std::to_string(h));
    rep.check("J(e_{h-1}, e_h) constant over " + std::to_string(h - 1) + " iterates", !at, at);
}

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
    static const std::map<std::string, std::function<void(const VerifyFlags&, Report&)>> suites{
        {"g1", suite_g1}, {"g2", suite_g2}, {"ward", suite_ward}, {"somos5", suite_somos5}, {"hone", suite_hone}};
    const auto it = suites.find(f.suite);
    if (it == suites.end()) throw InputError("unknown suite '" + f.suite + "' (g1, g2, ward, somos5, hone)");
    if (f.steps < 1) throw InputError("--steps must be positive");
    // validation errors surface before any PASS line is printed
    std::ostringstream buffer;
    Report rep(buffer);
    it->second(f, rep);
    out << buffer.str();
    return rep.code();
}

}  // namespace

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const std::size_t x = item.find('x');
        if (x == std::string::npos) {
            try {
                out.push_back(Rational::parse(item));
            } catch (const ParseError& e) {
                throw ParseError("bad list item '" + item + "'", start + e.position());
            }
        } else {
            const std::string count = item.substr(x + 1);
            std::size_t used = 0;
            long n = 0;
            try {
                n = std::stol(count, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != count.size() || n < 1) throw ParseError("bad repeat count in '" + item + "'", start + x + 1);
            const Rational v = Rational::parse(item.substr(0, x));
            out.insert(out.end(), static_cast<std::size_t>(n), v);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Continued fractions of quadratic functions, Somos and elliptic divisibility sequences", "pcf-cf"};
    app.require_subcommand(1, 1);

    ExpandFlags ex;
    auto* expand = app.add_subcommand("expand", "tableau of lines h, P_h, Q_h, a_h");
    add_curve_flags(expand, ex.curve, true);
    expand->add_option("--from", ex.from, "first line");
    expand->add_option("--to", ex.to, "last line");
    expand->add_flag("--json", ex.json, "JSON-lines output");

    CertifyFlags ce;
    auto* certify = app.add_subcommand("certify", "f, a, b with integral f / sqrt(D) = log(a + b sqrt(D))");
    certify->add_option("--D", ce.D, "monic even-degree non-square D")->required();
    certify->add_option("--max-steps", ce.max_steps, "expansion budget");
    certify->add_flag("--json", ce.json, "JSON-lines output");

    SomosFlags so;
    auto* somos_cmd = app.add_subcommand("somos", "two-sided Somos-k window, seeds at indices 0..k-1");
    somos_cmd->add_option("--width", so.width, "k (defaults to the seed count)");
    somos_cmd->add_option("--coeffs", so.coeffs, "coefficients of gaps 1, 2, ... (default all 1)");
    somos_cmd->add_option("--seeds", so.seeds, "k seeds, e.g. 1,1,1,1 or 1x8")->required();
    somos_cmd->add_option("--from", so.from, "first index");
    somos_cmd->add_option("--to", so.to, "last index");
    somos_cmd->add_flag("--scan", so.scan, "report the first non-integral term");
    somos_cmd->add_flag("--json", so.json, "JSON-lines output");

    SomosFlags ed;
    ed.from = 1;
    auto* eds_cmd = app.add_subcommand("eds", "elliptic divisibility sequence from W_1..W_4");
    eds_cmd->add_option("--seeds", ed.seeds, "W_1,W_2,W_3,W_4")->required();
    eds_cmd->add_option("--from", ed.from, "first index (below 1 uses W_{-h} = -W_h)");
    eds_cmd->add_option("--to", ed.to, "last index");
    eds_cmd->add_flag("--scan", ed.scan, "report the first non-integral term");
    eds_cmd->add_flag("--json", ed.json, "JSON-lines output");

    IdentifyFlags id;
    auto* identify = app.add_subcommand("identify", "curve and start line regenerating a Somos-4 window");
    identify->add_option("--alpha", id.alpha, "alpha")->required();
    identify->add_option("--beta", id.beta, "beta")->required();
    identify->add_option("--window", id.window, "four or more consecutive terms")->required();
    identify->add_option("--steps", id.steps, "round-trip length");

    VerifyFlags ve;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("--suite", ve.suite, "g1, g2, ward, somos5 or hone")->required();
    add_curve_flags(verify, ve.curve, false);
    verify->add_option("--p0", ve.curve.p0, "P_0 of the start line");
    verify->add_option("--q0", ve.curve.q0, "Q_0 of the start line");
    verify->add_option("--steps", ve.steps, "window length");
    verify->add_option("--alpha", ve.alpha, "hone: alpha");
    verify->add_option("--beta", ve.beta, "hone: beta");
    verify->add_option("--e0", ve.e0, "hone: e_0");
    verify->add_option("--e1", ve.e1, "hone: e_1");
    verify->add_option("--seeds", ve.seeds, "ward: W_1..W_4; somos5: five seeds");
    verify->add_option("--coeffs", ve.coeffs, "somos5: coefficients");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Exit::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return Exit::input;
    }

    try {
        if (expand->parsed()) return cmd_expand(ex, out);
        if (certify->parsed()) return cmd_certify(ce, out);
        if (somos_cmd->parsed()) return cmd_somos(so, out, err);
        if (eds_cmd->parsed()) return cmd_eds(ed, out, err);
        if (identify->parsed()) return cmd_identify(id, out);
        if (verify->parsed()) {
            if ((ve.suite == "g1" || ve.suite == "g2") && (ve.curve.p0.empty() || ve.curve.q0.empty()))
                throw InputError("suite " + ve.suite + " needs --p0 and --q0");
            return cmd_verify(ve, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return Exit::input;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return Exit::input;
    } catch (const MathError& e) {
        err << "error: " << e.what() << '\n';
        return Exit::input;
    }
    return Exit::input;
}

}  // namespace pcf::cli
