#include <doctest.h>

#include <algorithm>
#include <optional>

#include "pcf/errors.hpp"
#include "pcf/genus1.hpp"
#include "pcf/json.hpp"
#include "pcf/somos.hpp"
#include "support.hpp"

using namespace pcf;
using namespace pcf::somos;
using pcf::testing::Gen;
using pcf::testing::P;
using pcf::testing::rats;

namespace {

std::vector<Rational> ones(int k) { return std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)); }

Sequence somos_k(int k, long lo, long hi) {
    const Generated g = generate(SomosSpec::standard(k, ones(k)), lo, hi);
    REQUIRE(g.complete());
    return g.seq;
}

Sequence eds(const EDSSpec& spec, long n) {
    const Generated g = eds_generate(spec, n);
    REQUIRE(g.complete());
    return g.seq;
}

const EDSSpec kSomos4Eds{1, -1, -1, 5};

struct CurveChain {
    Curve curve;
    Sequence e;
    Sequence A;
};

// e_h over [lo, hi] and the denominator chain built from A_0 = A_1 = 1
CurveChain chain(const Curve& c, const cf::State& start, long lo, long hi) {
    const auto lines = genus1::extract_all(c, cf::expand(c, start, lo, hi));
    std::vector<Rational> e;
    for (const auto& l : lines) e.push_back(l.e);
    Sequence es(lo, std::move(e));
    Sequence A = genus1::denominators(es, Rational(1), Rational(1));
    return {c, es, A};
}

CurveChain somos4_chain(long lo, long hi) {
    const Curve c = Curve::from_AR(P("X^2-3"), P("X-2"));
    return chain(c, cf::init(c, P("1"), P("X-1")), lo, hi);
}

CurveChain somos5_chain(long lo, long hi) {
    const Curve c = Curve::from_AR(P("X^2-29"), P("-48(X+5)"));
    return chain(c, cf::init(c, P("8"), P("X+3")), lo, hi);
}

EDSSpec eds_of(const Curve& c) {
    const auto W = genus1::eds_seeds(c);
    return {W[0], W[1], W[2], W[3]};
}

}  // namespace

TEST_CASE("k-Somos windows") {
    CHECK(somos_k(5, -2, 10).values() == rats({"3", "2", "1", "1", "1", "1", "1", "2", "3", "5", "11", "37", "83"}));
    CHECK(somos_k(4, 0, 11).values() == rats({"1", "1", "1", "1", "2", "3", "7", "23", "59", "314", "1529", "8209"}));
    CHECK(somos_k(4, -4, 3).values() == rats({"23", "7", "3", "2", "1", "1", "1", "1"}));
    CHECK(somos_k(6, 0, 12).values() ==
          rats({"1", "1", "1", "1", "1", "1", "3", "5", "9", "23", "75", "421", "1103"}));
    CHECK(somos_k(5, -2, 10).lo() == -2);
    CHECK(somos_k(5, 4, 6).values() == rats({"1", "2", "3"}));
}

TEST_CASE("Somos spec validation") {
    CHECK_THROWS_AS(SomosSpec::standard(3, ones(3)), MathError);
    CHECK_THROWS_AS(SomosSpec::standard(5, ones(4)), MathError);
    CHECK_THROWS_AS(SomosSpec::standard(5, {}), MathError);
    CHECK_THROWS_AS(SomosSpec::standard(5, ones(5), rats({"1", "2", "3"})), MathError);
    SomosSpec bad = SomosSpec::standard(6, ones(6));
    bad.terms.push_back({Rational(1), 3});
    CHECK_THROWS_AS(bad.validate(), MathError);
    bad.terms.back().gap = 4;
    CHECK_THROWS_AS(bad.validate(), MathError);
    CHECK_THROWS_AS(generate(SomosSpec::standard(4, ones(4)), 3, 2), MathError);

    const SomosSpec s = SomosSpec::standard(5, ones(5), rats({"2"}));
    CHECK(s.terms[0].coeff == Rational(2));
    CHECK(s.terms[1].coeff == Rational(1));
    CHECK(s.str() == "y_h y_{h+5} = 2 y_{h+1} y_{h+4} + y_{h+2} y_{h+3}");
}

TEST_CASE("zero pivots halt extension per direction") {
    // y_4 = (y_1 y_3 + y_2^2) / y_0 with y_0 = 0
    const Generated g = generate(SomosSpec::standard(4, rats({"0", "1", "1", "1"})), -5, 10);
    REQUIRE(g.forward.has_value());
    CHECK(g.forward->index == 0);
    // y_{-4} = (y_{-3} y_{-1} + y_{-2}^2) / y_0 hits the same zero
    REQUIRE(g.backward.has_value());
    CHECK(g.backward->index == 0);
    CHECK(g.seq.hi() == 3);
    CHECK(g.seq.lo() == -3);
    CHECK_FALSE(first_violation(SomosSpec::standard(4, rats({"0", "1", "1", "1"})), g.seq).has_value());

    // backwards the pivot is y_3
    const Generated b = generate(SomosSpec::standard(4, rats({"1", "1", "1", "0"})), -5, 6);
    REQUIRE(b.backward.has_value());
    CHECK(b.backward->index == 3);
    CHECK(b.seq.lo() == 0);
    CHECK_FALSE(b.forward.has_value());
    CHECK(b.seq.hi() == 6);
}

TEST_CASE("integrality scans") {
    CHECK_FALSE(integrality_scan(somos_k(4, -25, 25)).has_value());
    CHECK_FALSE(integrality_scan(somos_k(5, -15, 15)).has_value());
    CHECK_FALSE(integrality_scan(somos_k(6, 0, 30)).has_value());
    CHECK_FALSE(integrality_scan(somos_k(7, 0, 30)).has_value());

    const Sequence s8 = somos_k(8, 0, 30);
    const auto hit = integrality_scan(s8);
    REQUIRE(hit.has_value());
    for (long h = 0; h < *hit; ++h) CHECK(s8.at(h).is_integer());
    CHECK_FALSE(s8.at(*hit).is_integer());
    CHECK(*hit == 17);
    CHECK(s8.at(17) == Rational(420514, 7));

    // outward order: at equal distance the non-negative index wins
    const Sequence mixed(-2, rats({"1/2", "1", "1", "1", "1/3"}));
    CHECK(*integrality_scan(mixed) == 2);
    CHECK(*integrality_scan(Sequence(-1, rats({"1/2", "1", "1"}))) == -1);
    CHECK_FALSE(integrality_scan(Sequence()).has_value());
}

TEST_CASE("generated windows satisfy their relation") {
    Gen gen(81);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = static_cast<int>(gen.integer(4, 8));
        std::vector<Rational> seeds, coeffs;
        for (int i = 0; i < k; ++i) seeds.emplace_back(gen.nonzero(5));
        for (int i = 0; i < k / 2; ++i) coeffs.push_back(gen.rational(4));
        const SomosSpec spec = SomosSpec::standard(k, seeds, coeffs);
        const Generated g = generate(spec, -12, 12);
        INFO("trial " << trial << ": " << spec.str());
        CHECK_FALSE(first_violation(spec, g.seq).has_value());
        CHECK(g.seq.contains(0));
    }
}

TEST_CASE("backward and forward generation agree") {
    Gen gen(82);
    for (int trial = 0; trial < 30; ++trial) {
        const int k = static_cast<int>(gen.integer(4, 7));
        std::vector<Rational> seeds;
        for (int i = 0; i < k; ++i) seeds.emplace_back(gen.nonzero(4));
        const SomosSpec spec = SomosSpec::standard(k, seeds);
        const long n = 12;
        const Generated fwd = generate(spec, 0, n);
        if (!fwd.complete()) continue;
        const Generated both = generate(spec, -n, n);
        if (!both.complete()) continue;
        // reseed at -n and run forward over 2n
        std::vector<Rational> low;
        for (long h = -n; h < -n + k; ++h) low.push_back(both.seq.at(h));
        const Generated again = generate(SomosSpec::standard(k, low), 0, 2 * n);
        if (!again.complete()) continue;
        INFO("trial " << trial);
        for (long h = -n; h <= n; ++h) CHECK(again.seq.at(h + n) == both.seq.at(h));
        CHECK(both.seq.slice(0, n) == fwd.seq);
    }
}

TEST_CASE("elliptic divisibility sequences") {
    const Sequence W = eds({1, 1, -1, 1}, 9);
    CHECK(W.lo() == 1);
    CHECK(W.values() == rats({"1", "1", "-1", "1", "2", "-1", "-3", "-5", "7"}));

    const Generated halted = eds_generate({1, 1, 1, 1}, 12);
    REQUIRE(halted.forward.has_value());
    CHECK(halted.forward->index == 5);
    CHECK(halted.seq.hi() == 5);
    CHECK(halted.seq.at(5) == Rational(0));

    const Sequence two = antisymmetric(W);
    CHECK(two.lo() == -9);
    CHECK(two.at(0) == Rational(0));
    CHECK(two.at(-3) == -W.at(3));
    CHECK(eds_at(W, -3) == Rational(1));
    CHECK(eds_at(W, 0) == Rational(0));
    CHECK_THROWS_AS(eds_at(W, 10), MathError);
    CHECK_THROWS_AS(antisymmetric(two), MathError);
    CHECK_THROWS_AS(eds_generate({1, 0, 1, 1}, 5), MathError);
    CHECK_THROWS_AS(eds_generate({1, 1, 1, 1}, 0), MathError);
    CHECK(eds({1, 1, -1, 1}, 3).size() == 3);
}

TEST_CASE("Ward identity") {
    const Sequence W = eds({1, 1, -1, 1}, 20);
    CHECK(ward_identity(W, 2, 1, 3, 8));
    CHECK(ward_identity(W, 3, 3, 4, 10));
    for (long m = 1; m <= 4; ++m)
        for (long n = 1; n <= 4; ++n) CHECK(ward_identity(W, m, n, 1, 20 - std::max(m, n)));

    // W_h = h degenerately satisfies the identity, the primes do not
    CHECK(ward_identity(Sequence(1, rats({"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11"})), 2, 1, 3, 8));
    const Sequence junk(1, rats({"2", "3", "5", "7", "11", "13", "17", "19", "23", "29", "31"}));
    CHECK_FALSE(ward_identity(junk, 2, 1, 3, 8));
}

TEST_CASE("Ward identity on random EDS") {
    Gen gen(83);
    for (int trial = 0; trial < 25; ++trial) {
        const EDSSpec spec{1, Rational(gen.nonzero(3)), Rational(gen.nonzero(3)), Rational(gen.nonzero(4))};
        const Generated g = eds_generate(spec, 30);
        if (!g.complete()) continue;
        INFO("trial " << trial);
        for (long m = 1; m <= 4; ++m)
            for (long n = 1; n < m; ++n) CHECK(ward_identity(g.seq, m, n, -25 + m, 30 - m));
    }
}

TEST_CASE("A and W ladder identity") {
    const Sequence A = somos_k(4, -25, 25);
    const Sequence W = eds(kSomos4Eds, 12);
    CHECK(W.at(5) == Rational(-4));  // W_2^3 W_4 - W_3^3
    for (long m = 1; m <= 5; ++m)
        for (long n = 1; n <= 5; ++n) CHECK(ladder_identity(A, W, m, n, -18, 18));
    CHECK(ladder_identity(A, W, 2, 2, -10, 10));

    // (1, 1, -1, 1) is an EDS with W_2^2 = 1 and -W_1 W_3 = 1 but belongs to another curve
    const Sequence other = eds({1, 1, -1, 1}, 12);
    CHECK(ladder_identity(A, other, 2, 1, -10, 10));
    CHECK_FALSE(ladder_identity(A, other, 3, 1, -10, 10));

    // the 5-Somos curve and its own EDS
    const CurveChain c5 = somos5_chain(-12, 12);
    const Sequence W5 = eds(eds_of(c5.curve), 10);
    for (long m = 1; m <= 4; ++m)
        for (long n = 1; n <= 4; ++n) CHECK(ladder_identity(c5.A, W5, m, n, c5.A.lo() + 4, c5.A.hi() - 4));
}

TEST_CASE("Somos-5 identities from a Somos-4 chain") {
    const Sequence A = somos_k(4, -25, 25);
    const Sequence W = eds(kSomos4Eds, 12);
    for (long m = 1; m <= 4; ++m) CHECK(odd_ladder_identity(A, W, m, -18, 18));

    // m = 2 is a Somos-5 relation with coefficients W_2 W_3 and -W_1 W_4
    SomosSpec s5 = SomosSpec::standard(5, ones(5));
    s5.terms = {{W.at(2) * W.at(3) / (W.at(1) * W.at(2)), 1}, {-W.at(1) * W.at(4) / (W.at(1) * W.at(2)), 2}};
    CHECK_FALSE(first_violation(s5, A.slice(-20, 20)).has_value());

    const CurveChain c5 = somos5_chain(-12, 12);
    const Sequence W5 = eds(eds_of(c5.curve), 10);
    CHECK(W5.values().front() == Rational(1));
    CHECK(W5.at(2) == Rational(48));
    for (long m = 1; m <= 4; ++m) CHECK(odd_ladder_identity(c5.A, W5, m, c5.A.lo() + 5, c5.A.hi() - 5));

    std::vector<Rational> bumped = A.values();
    bumped[25] += Rational(1);
    CHECK_FALSE(odd_ladder_identity(Sequence(A.lo(), bumped), W, 2, -18, 18));
}

TEST_CASE("identity suite on random genus-1 chains") {
    Gen gen(84);
    int done = 0;
    for (int attempt = 0; done < 20 && attempt < 400; ++attempt) {
        // A = X^2 + pX + q, R = v(X - w), start P0 = e0, Q0 = X - w0 with Q0 | R - e0(A + e0)
        const Rational p(gen.integer(-3, 3)), v(gen.nonzero(3)), w(gen.integer(-3, 3)), e0(gen.nonzero(3));
        const Rational w0(gen.integer(-3, 3));
        // choose q so that X - w0 divides the norm of Z + e0
        const Rational q = (v * (w0 - w) - e0 * e0) / e0 - w0 * w0 - p * w0;
        const Poly A(std::vector<Rational>{q, p, Rational(1)});
        const Poly R(std::vector<Rational>{-v * w, v});
        const Curve c = Curve::from_AR(A, R);
        std::optional<CurveChain> chained;
        try {
            chained = chain(c, cf::init(c, Poly(e0), Poly(std::vector<Rational>{-w0, Rational(1)})), -15, 15);
        } catch (const MathError&) {
            continue;
        }
        const CurveChain& ch = *chained;
        const Rational Aw = A(w);
        if (Aw.is_zero()) continue;
        INFO("A = " << A << ", R = " << R);
        const EDSSpec spec = eds_of(c);
        const Generated W = eds_generate(spec, 10);
        if (!W.complete()) continue;
        // A_h satisfies Somos-4 with (v^2, v^2 A(w)) = (W_2^2, -W_1 W_3)
        CHECK(genus1::check_somos4(ch.A, spec.W2 * spec.W2, -spec.W1 * spec.W3));
        CHECK(genus1::check_e_pair_relation(c, ch.e));
        for (long m = 1; m <= 4; ++m) {
            CHECK(odd_ladder_identity(ch.A, W.seq, m, ch.A.lo() + 5, ch.A.hi() - 5));
            for (long n = 1; n <= 4; ++n) CHECK(ladder_identity(ch.A, W.seq, m, n, ch.A.lo() + 4, ch.A.hi() - 4));
        }
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("e recurrence times A_h^2 is the Somos-4 relation") {
    const CurveChain c = somos4_chain(-12, 12);
    const genus1::Remainder rem = genus1::remainder(c.curve);
    const Rational v2 = rem.v * rem.v;
    const Rational Aw = c.curve.A()(rem.w);
    for (long h = c.e.lo() + 1; h + 1 <= c.e.hi(); ++h) {
        const Rational Ah2 = c.A.at(h) * c.A.at(h);
        const Rational lhs = c.e.at(h - 1) * c.e.at(h) * c.e.at(h) * c.e.at(h + 1) * Ah2;
        const Rational rhs = v2 * (c.e.at(h) + Aw) * Ah2;
        CHECK(lhs == c.A.at(h - 2) * c.A.at(h + 2));
        CHECK(rhs == v2 * c.A.at(h - 1) * c.A.at(h + 1) + v2 * Aw * Ah2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("e-pair relation signs") {
    for (const CurveChain& c : {somos4_chain(-10, 10), somos5_chain(-10, 10)}) {
        CHECK(genus1::check_e_pair_relation(c.curve, c.e));
        const genus1::Remainder rem = genus1::remainder(c.curve);
        const Rational v2 = rem.v * rem.v;
        const Rational Aw = c.curve.A()(rem.w);
        const Rational K = v2 * v2 + v2 * rem.v * Aw * c.curve.A().derivative()(rem.w);
        int validating = 0;
        for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
                bool all = true;
                for (long h = c.e.lo() + 1; h + 2 <= c.e.hi(); ++h) {
                    const Rational lhs = c.e.at(h - 1) * c.e.at(h) * c.e.at(h) * c.e.at(h + 1) * c.e.at(h + 1) * c.e.at(h + 2);
                    all = all && lhs == Rational(s1) * v2 * Aw * c.e.at(h) * c.e.at(h + 1) + Rational(s2) * K;
                }
                if (all) {
                    ++validating;
                    CHECK(s1 == -1);
                    CHECK(s2 == 1);
                }
            }
        }
        CHECK(validating == 1);
    }
}

TEST_CASE("Hone map and its first integral") {
    const HoneStep a = hone_map(1, 1, 1, 1);
    CHECK(a.e_next == Rational(2));
    CHECK(a.J == Rational(4));
    const HoneStep b = hone_map(1, 1, 1, 2);
    CHECK(b.e_next == Rational(3, 4));
    CHECK(b.J == Rational(4));
    // beta = 0 and c^3 = alpha
    CHECK(hone_map(8, 0, 2, 2).e_next == Rational(2));
    CHECK_THROWS_AS(hone_map(1, 1, 0, 1), SingularError);
    CHECK_THROWS_AS(hone_map(1, 1, 1, 0), SingularError);

    const Sequence orbit = hone_orbit(1, 1, 1, 1, 7);
    CHECK(orbit.values() == rats({"1", "1", "2", "3/4", "14/9", "69/49", "413/529", "7222/3481"}));
}

TEST_CASE("J is constant along random orbits") {
    Gen gen(85);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational alpha = gen.rational(5), beta = gen.rational(5);
        const Rational e0(gen.nonzero(4)), e1(gen.nonzero(4));
        const Sequence orbit = hone_orbit(alpha, beta, e0, e1, 100);
        INFO("trial " << trial << " alpha " << alpha << " beta " << beta);
        const Rational J = hone_invariant(alpha, beta, e0, e1);
        for (long h = 1; h <= orbit.hi() && !orbit.at(h).is_zero(); ++h) CHECK(hone_invariant(alpha, beta, orbit.at(h - 1), orbit.at(h)) == J);
        if (orbit.hi() == 100) CHECK(orbit.size() == 101);
    }
}

TEST_CASE("cf e-chain equals the Hone orbit") {
    const CurveChain c = somos4_chain(0, 40);
    const Sequence orbit = hone_orbit(1, 1, c.e.at(0), c.e.at(1), 40);
    CHECK(orbit == Sequence(0, c.e.values()));
}

TEST_CASE("Somos-5 split") {
    const Sequence B = somos_k(5, -10, 10);
    const Split s = somos5_split(B);
    CHECK(s.ok());
    CHECK(s.even.lo() == -5);
    CHECK(s.odd.lo() == -5);
    CHECK(s.even.size() == 11);
    CHECK(s.odd.size() == 10);
    CHECK(s.even_fit.verified > 0);
    CHECK(s.odd_fit.verified > 0);
    CHECK(genus1::check_somos4(s.even, s.even_fit.alpha, s.even_fit.beta));
    CHECK(genus1::check_somos4(s.odd, s.odd_fit.alpha, s.odd_fit.beta));

    CHECK_THROWS_AS(somos5_split(Sequence(0, ones(20))), MathError);
    CHECK_THROWS_AS(somos5_split(B.slice(0, 12)), MathError);

    Gen gen(86);
    std::vector<Rational> junk;
    for (int i = 0; i < 20; ++i) junk.emplace_back(gen.nonzero(50));
    CHECK_FALSE(somos5_split(Sequence(0, junk)).ok());
}

TEST_CASE("Somos-5 split on random Somos-5 windows") {
    Gen gen(87);
    int done = 0;
    while (done < 20) {
        std::vector<Rational> seeds;
        for (int i = 0; i < 5; ++i) seeds.emplace_back(gen.nonzero(3));
        const SomosSpec spec = SomosSpec::standard(5, seeds, {gen.rational(3), gen.rational(3)});
        const Generated g = generate(spec, -8, 12);
        if (!g.complete() || g.seq.size() < 21) continue;
        INFO(spec.str());
        std::optional<Split> split;
        try {
            split = somos5_split(g.seq);
        } catch (const MathError&) {
            continue;
        }
        CHECK(split->ok());
        ++done;
    }
}

TEST_CASE("EDS divisibility") {
    const Sequence W = eds({1, 1, -1, 1}, 12);
    CHECK(eds_divisibility(W, {{2, 4}, {2, 6}, {3, 6}}));
    CHECK(eds_divisibility(W, {{1, 1}}));
    CHECK_THROWS_AS(eds_divisibility(W, {{2, 5}}), MathError);
    CHECK_THROWS_AS(eds_divisibility(W, {{2, 40}}), MathError);
    const Sequence fake(1, rats({"1", "2", "3", "4", "5", "6", "7", "9"}));
    CHECK_THROWS_AS(eds_divisibility(fake, {{2, 4}}), MathError);
    CHECK_THROWS_AS(eds_divisibility(Sequence(1, rats({"1", "2", "3", "5"})), {{1, 2}}), MathError);
    CHECK_THROWS_AS(eds_divisibility(Sequence(1, rats({"2", "2", "3", "4"})), {{1, 2}}), MathError);
}

TEST_CASE("EDS divisibility on random integral EDS") {
    Gen gen(88);
    int done = 0;
    while (done < 20) {
        const long W2 = gen.nonzero(3);
        const EDSSpec spec{1, Rational(W2), Rational(gen.nonzero(4)), Rational(W2 * gen.nonzero(3))};
        const Generated g = eds_generate(spec, 24);
        if (!g.complete()) continue;
        std::vector<std::pair<long, long>> pairs;
        for (long a = 1; a <= 24; ++a)
            for (long b = a; b <= 24; b += a) pairs.emplace_back(a, b);
        bool integral = true;
        for (const auto& x : g.seq.values()) integral = integral && x.is_integer();
        CHECK(integral);
        CHECK(eds_divisibility(g.seq, pairs));
        ++done;
    }
}

TEST_CASE("sequence JSON records") {
    const Sequence s(-2, rats({"3", "-1/2", "0", "7"}));
    const json::json j = json::from_sequence(s);
    CHECK(j.dump() == R"({"hi":1,"lo":-2,"values":["3","-1/2","0","7"]})");
    CHECK(json::to_sequence(j) == s);
    CHECK(json::to_sequence(json::json::parse(j.dump())) == s);
    CHECK(json::to_sequence(j).provenance() == Provenance::supplied);
    json::json bad = j;
    bad["hi"] = 5;
    CHECK_THROWS_AS(json::to_sequence(bad), MathError);
    bad = j;
    bad["values"][1] = "1/0x";
    CHECK_THROWS_AS(json::to_sequence(bad), ParseError);

    Gen gen(89);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> v;
        const long n = gen.integer(0, 12);
        for (long i = 0; i < n; ++i) v.push_back(gen.rational(1000));
        const Sequence r(gen.integer(-20, 20), v);
        CHECK(json::to_sequence(json::json::parse(json::from_sequence(r).dump())) == r);
    }
}
