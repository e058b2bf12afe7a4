#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "altkit/multipoly.hpp"
#include "altkit/ratfun.hpp"
#include "altkit/series.hpp"

using namespace altkit;

namespace {

Registry abc() { return make_registry({"u", "w", "s"}); }

// Small random polynomials for the ring-law properties. Deterministic seed.
MultiPoly random_poly(const Registry& reg, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3), num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    MultiPoly p(reg);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponents e(static_cast<std::size_t>(reg->size()), 0);
        for (auto& x : e) x = expo(rng);
        p.add_term(e, make_rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational: canonical form and text round-trip") {
    Rational q = make_rational(6, -4);
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(parse_rational("-3/2") == q);
    CHECK(to_string(Rational(0)) == "0");
    CHECK(denominator(Rational(0)) == 1);
    CHECK(to_string(parse_rational("42")) == "42");
    CHECK(gcd(Integer(abs(numerator(q))), Integer(denominator(q))) == 1);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    CHECK(rational_pow(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(factorial(6) == 720);
    CHECK(binomial(8, 3) == 56);
}

TEST_CASE("poly: construction, addition, canonical text") {
    const Registry& reg = default_registry();
    MultiPoly y2 = MultiPoly::variable(reg, "y2");
    MultiPoly turn = MultiPoly::parse(reg, "-2*beta*x");
    MultiPoly sum = y2 + turn;
    CHECK(sum.to_string() == "y2-2*beta*x");
    CHECK(sum == MultiPoly::parse(reg, "y2-2*beta*x"));

    MultiPoly a = MultiPoly::parse(reg, "1-B2*V2");
    MultiPoly b = MultiPoly::parse(reg, "1+B2*V2");
    CHECK((a * b) == MultiPoly::parse(reg, "1-B2^2*V2^2"));
}

TEST_CASE("poly: hand-expanded product oracle") {
    const Registry& reg = default_registry();
    MultiPoly lhs = MultiPoly::parse(reg, "V1+B1*V2^2") * MultiPoly::parse(reg, "1-B2*V2");
    // Term-by-term: V1*1, V1*(-B2*V2), B1*V2^2*1, B1*V2^2*(-B2*V2).
    MultiPoly expected = MultiPoly::parse(reg, "V1-B2*V1*V2+B1*V2^2-B1*B2*V2^3");
    CHECK(lhs == expected);
}

TEST_CASE("poly: registry mismatch is a structural error") {
    MultiPoly p = MultiPoly::variable(default_registry(), "x");
    MultiPoly q = MultiPoly::variable(abc(), "u");
    CHECK_THROWS_AS(p + q, std::invalid_argument);
    CHECK_THROWS_AS(p * q, std::invalid_argument);
}

TEST_CASE("poly: ring laws on random instances") {
    Registry reg = abc();
    std::mt19937 rng(20240811);
    for (int i = 0; i < 60; ++i) {
        MultiPoly a = random_poly(reg, rng);
        MultiPoly b = random_poly(reg, rng);
        MultiPoly c = random_poly(reg, rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (b + c) == (a + b) + c);
        CHECK(a - a == MultiPoly(reg));
    }
}

TEST_CASE("poly: serialize-parse identity on random instances") {
    Registry reg = abc();
    std::mt19937 rng(7);
    for (int i = 0; i < 80; ++i) {
        MultiPoly a = random_poly(reg, rng);
        CHECK(MultiPoly::parse(reg, a.to_string()) == a);
    }
    // Laurent exponents survive the round trip too.
    const Registry& dreg = default_registry();
    MultiPoly lp = MultiPoly::parse(dreg, "3/2*t^-2*r-t^-1+x");
    CHECK(MultiPoly::parse(dreg, lp.to_string()) == lp);
    CHECK(lp.has_negative_exponent());
}

TEST_CASE("poly: substitution, derivative, exact division") {
    const Registry& reg = default_registry();
    MultiPoly p = MultiPoly::parse(reg, "B1*V2^2+V1");
    CHECK(p.substituted("B1", MultiPoly(reg)) == MultiPoly::parse(reg, "V1"));
    CHECK(p.substituted("V2", MultiPoly::parse(reg, "1+beta")) ==
          MultiPoly::parse(reg, "V1+B1+2*B1*beta+B1*beta^2"));
    CHECK(p.derivative("V2") == MultiPoly::parse(reg, "2*B1*V2"));
    CHECK(MultiPoly::parse(reg, "eps^2*x+eps^3").divided_by_power("eps", 2) ==
          MultiPoly::parse(reg, "x+eps"));
    CHECK_THROWS_AS(p.divided_by_power("V2", 1), std::domain_error);
    CHECK(p.evaluated({{"B1", Rational(2)}, {"V2", make_rational(1, 2)}, {"V1", Rational(3)}}) ==
          make_rational(7, 2));
}

TEST_CASE("ratfun: canonical form and cross-multiplication equality") {
    const Registry& reg = default_registry();
    MultiPoly lam = MultiPoly::parse(reg, "1-B2*V2");
    RationalFunction f(MultiPoly::parse(reg, "2*V2"), lam * MultiPoly::constant(reg, Rational(2)));
    RationalFunction g(MultiPoly::parse(reg, "V2"), lam);
    CHECK(f == g);
    RationalFunction h(MultiPoly::parse(reg, "V2*V1"), lam * MultiPoly::parse(reg, "V1"));
    CHECK(h == g);  // equal despite the uncancelled common factor
    CHECK(f.to_string() == "(V2)/(1-B2*V2)");
    CHECK(RationalFunction::parse(reg, f.to_string()) == f);
    // Denominator sign convention: leading coefficient positive.
    RationalFunction s(MultiPoly::parse(reg, "V2"), -lam);
    CHECK(s.to_string() == "(-V2)/(1-B2*V2)");
    CHECK_THROWS_AS(RationalFunction(MultiPoly::parse(reg, "V2"), MultiPoly(reg)),
                    std::domain_error);
    CHECK((f - g).is_zero());
    CHECK(f * f.reciprocal() == RationalFunction::constant(reg, Rational(1)));
}

TEST_CASE("series: geometric inverse") {
    Registry reg = abc();
    MultiPoly one_minus_u = MultiPoly::parse(reg, "1-u");
    TruncatedSeries inv = series_expand_inverse(one_minus_u, 3);
    CHECK(inv.body() == MultiPoly::parse(reg, "1+u+u^2+u^3"));

    TruncatedSeries inv1 = series_expand_inverse(MultiPoly::constant(reg, Rational(1)), 5);
    CHECK(inv1.body().is_one());

    const Registry& dreg = default_registry();
    TruncatedSeries inv2 = series_expand_inverse(MultiPoly::parse(dreg, "1-B2*V2"), 2,
                                                 {"B2", "V2"});
    CHECK(inv2.body() == MultiPoly::parse(dreg, "1+B2*V2"));
    // Multiply back: residual only beyond the cap.
    TruncatedSeries back = inv2 * MultiPoly::parse(dreg, "1-B2*V2");
    CHECK(back.body().is_one());

    CHECK_THROWS_AS(series_expand_inverse(MultiPoly::parse(dreg, "2-B2*V2"), 3),
                    std::domain_error);
}

TEST_CASE("series: exponential") {
    const Registry& reg = default_registry();
    TruncatedSeries z(MultiPoly(reg), 4);
    CHECK(series_exp(z).body().is_one());

    TruncatedSeries v1(MultiPoly::variable(reg, "v1"), 3, {"v1", "v2"});
    CHECK(series_exp(v1).body() == MultiPoly::parse(reg, "1+v1+1/2*v1^2+1/6*v1^3"));

    // Brute-force oracle for sum s^k/k! up to k = 2 in the z-degrees.
    MultiPoly s = MultiPoly::parse(reg, "2*gamma*beta*z1") * MultiPoly::parse(reg, "1+beta*z2");
    TruncatedSeries es = series_exp(TruncatedSeries(s, 2, {"z1", "z2"}));
    MultiPoly oracle = MultiPoly::constant(reg, Rational(1));
    MultiPoly sk = MultiPoly::constant(reg, Rational(1));
    for (int k = 1; k <= 2; ++k) {
        sk = sk * s;
        MultiPoly capped(reg);
        for (const auto& [e, c] : sk.terms()) {
            int zdeg = e[static_cast<std::size_t>(reg->checked_index("z1"))] +
                       e[static_cast<std::size_t>(reg->checked_index("z2"))];
            if (zdeg <= 2) capped.add_term(e, c);
        }
        oracle += capped / Rational(factorial(static_cast<unsigned>(k)));
    }
    CHECK(es.body() == oracle);
    CHECK(es.body() ==
          MultiPoly::parse(reg,
                           "1+2*gamma*beta*z1+2*gamma*beta^2*z1*z2+2*gamma^2*beta^2*z1^2"));

    CHECK_THROWS_AS(series_exp(TruncatedSeries(MultiPoly::constant(reg, Rational(1)), 3)),
                    std::domain_error);
}

TEST_CASE("series: exp is a homomorphism up to the cap") {
    Registry reg = abc();
    std::mt19937 rng(99);
    for (int i = 0; i < 25; ++i) {
        MultiPoly a = random_poly(reg, rng);
        MultiPoly b = random_poly(reg, rng);
        // Strip degree-zero parts so exp applies.
        a -= MultiPoly::constant(reg, a.constant_term());
        b -= MultiPoly::constant(reg, b.constant_term());
        TruncatedSeries sa(a, 5), sb(b, 5), sab(a + b, 5);
        CHECK(series_exp(sab) == series_exp(sa) * series_exp(sb));
    }
}

TEST_CASE("series: inverse times original is one, randomized") {
    Registry reg = abc();
    std::mt19937 rng(123);
    for (int i = 0; i < 25; ++i) {
        MultiPoly p = random_poly(reg, rng);
        p -= MultiPoly::constant(reg, p.constant_term());
        p += MultiPoly::constant(reg, Rational(1));
        TruncatedSeries q = series_expand_inverse(p, 5);
        CHECK((q * p).body().is_one());
    }
}

TEST_CASE("series: coefficient extraction") {
    const Registry& reg = default_registry();
    TruncatedSeries s(MultiPoly::parse(reg, "1+v1+1/2*v1^2"), 2, {"v1", "v2"});
    CHECK(coefficient_of(s, {{"v1", 2}, {"v2", 0}}) ==
          MultiPoly::constant(reg, make_rational(1, 2)));

    MultiPoly base = MultiPoly::parse(reg, "y1-2*gamma*beta") * MultiPoly::variable(reg, "v1");
    TruncatedSeries es = series_exp(TruncatedSeries(base, 4, {"v1", "v2"}));
    // Binomial oracle: [v1^3] exp(c*v1) = c^3/6.
    MultiPoly c = MultiPoly::parse(reg, "y1-2*gamma*beta");
    CHECK(coefficient_of(es, {{"v1", 3}, {"v2", 0}}) == c.pow(3) / Rational(6));

    CHECK_THROWS_AS(coefficient_of(es, {{"v1", 5}}), std::out_of_range);
}

TEST_CASE("series: binomial power with symbolic exponent") {
    const Registry& reg = default_registry();
    // (1 + beta*v2)^(-2x), coefficient of v2^2 is x(2x+1)beta^2.
    TruncatedSeries u(MultiPoly::parse(reg, "beta*v2"), 2, {"v1", "v2"});
    MultiPoly mtwox = MultiPoly::parse(reg, "-2*x");
    TruncatedSeries p = binomial_power(u, mtwox);
    CHECK(coefficient_of(p, {{"v1", 0}, {"v2", 1}}) == MultiPoly::parse(reg, "-2*x*beta"));
    CHECK(coefficient_of(p, {{"v1", 0}, {"v2", 2}}) ==
          MultiPoly::parse(reg, "2*x^2*beta^2+x*beta^2"));
    // Integer exponent control: (1+u)^3.
    Registry r3 = abc();
    TruncatedSeries uu(MultiPoly::variable(r3, "u"), 5);
    TruncatedSeries cube = binomial_power(uu, MultiPoly::constant(r3, Rational(3)));
    CHECK(cube.body() == MultiPoly::parse(r3, "1+3*u+3*u^2+u^3"));
}
