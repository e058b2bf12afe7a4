#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "altkit/grouplaw.hpp"

using namespace altkit;

namespace {

RationalFunction rf(const Registry& reg, const std::string& s) {
    return RationalFunction::parse(reg, s);
}

}  // namespace

TEST_CASE("rep4: displayed matrices and the derived diagonal pair") {
    const Registry& reg = default_registry();
    GeneratorMatrixTable t = rep4(reg);
    MultiPoly v1 = MultiPoly::variable(reg, "V1");
    MultiPoly v2 = MultiPoly::variable(reg, "V2");
    Matrix4 upper = t.of("Y1") * v1 + t.of("X1") * v2;
    CHECK(upper.at(1, 1).is_zero());
    CHECK(upper.at(1, 2) == rf(reg, "V2"));
    CHECK(upper.at(1, 3).is_zero());
    CHECK(upper.at(1, 4) == rf(reg, "V1"));
    CHECK(upper.at(3, 4) == rf(reg, "V2"));

    // X0 = diag(-1,1,-1,1)/2, Y0 = (E24 - E13)/2
    const Matrix4& x0 = t.of("X0");
    CHECK(x0.at(1, 1) == rf(reg, "-1/2"));
    CHECK(x0.at(2, 2) == rf(reg, "1/2"));
    CHECK(x0.at(3, 3) == rf(reg, "-1/2"));
    CHECK(x0.at(4, 4) == rf(reg, "1/2"));
    const Matrix4& y0 = t.of("Y0");
    CHECK(y0.at(2, 4) == rf(reg, "1/2"));
    CHECK(y0.at(1, 3) == rf(reg, "-1/2"));
}

TEST_CASE("rep4 satisfies every alt commutator") {
    Rep4Report rep = verify_rep4(default_registry());
    CHECK(rep.pairs_checked == 15);
    CHECK(rep.ok());
}

TEST_CASE("nilpotent exponentials") {
    const Registry& reg = default_registry();
    GeneratorMatrixTable t = rep4(reg);
    CHECK(exp_nilpotent(Matrix4(reg)) == Matrix4::identity(reg));

    MultiPoly b1 = MultiPoly::variable(reg, "B1");
    MultiPoly b2 = MultiPoly::variable(reg, "B2");
    Matrix4 m = t.of("Y-1") * b1 + t.of("X-1") * b2;
    CHECK((m * m).is_zero());  // square oracle
    CHECK(exp_nilpotent(m) == Matrix4::identity(reg) + m);

    MultiPoly v1 = MultiPoly::variable(reg, "V1");
    MultiPoly v2 = MultiPoly::variable(reg, "V2");
    Matrix4 n = t.of("Y1") * v1 + t.of("X1") * v2;
    CHECK((n * n).is_zero());
    CHECK(exp_nilpotent(n) == Matrix4::identity(reg) + n);

    CHECK_THROWS_AS(exp_nilpotent(t.of("X0")), std::domain_error);
}

TEST_CASE("exp(M) exp(-M) = I on nilpotent combinations") {
    const Registry& reg = default_registry();
    GeneratorMatrixTable t = rep4(reg);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 12; ++trial) {
        // strictly-upper and strictly-lower families are each nilpotent
        Matrix4 m = t.of("Y1") * Rational(val(rng)) + t.of("X1") * Rational(val(rng));
        Matrix4 w = t.of("Y-1") * Rational(val(rng)) + t.of("X-1") * Rational(val(rng));
        CHECK(exp_nilpotent(m) * exp_nilpotent(m * Rational(-1)) == Matrix4::identity(reg));
        CHECK(exp_nilpotent(w) * exp_nilpotent(w * Rational(-1)) == Matrix4::identity(reg));
    }
}

TEST_CASE("partial product reproduces the displayed matrix entry by entry") {
    const Registry& reg = default_registry();
    Matrix4 g = partial_product(reg);
    const char* rows[4][4] = {
        {"1", "V2", "0", "V1"},
        {"-B2", "1-B2*V2", "-B1", "-B2*V1-B1*V2"},
        {"0", "0", "1", "V2"},
        {"0", "0", "-B2", "1-B2*V2"},
    };
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) {
            INFO("entry (" << r << "," << c << ")");
            CHECK(g.at(r, c) == rf(reg, rows[r - 1][c - 1]));
        }
    CHECK(g.det() == rf(reg, "1"));

    // Left factor at identity: only the raising part remains.
    Matrix4 right = g.substituted("B1", MultiPoly(reg)).substituted("B2", MultiPoly(reg));
    GeneratorMatrixTable t = rep4(reg);
    Matrix4 n = t.of("Y1") * MultiPoly::variable(reg, "V1") +
                t.of("X1") * MultiPoly::variable(reg, "V2");
    CHECK(right == Matrix4::identity(reg) + n);
}

TEST_CASE("second-kind factorization: closed forms") {
    const Registry& reg = default_registry();
    SecondKindCoords coords = factor_second_kind(partial_product(reg));

    CHECK(coords.a2 == rf(reg, "(V2)/(1-B2*V2)"));
    CHECK(coords.a6 == rf(reg, "(B2)/(1-B2*V2)"));
    CHECK(coords.lambda == rf(reg, "1-B2*V2"));
    CHECK(coords.a4_token() == "2*log(1-B2*V2)");
    CHECK(coords.a3 == RationalFunction(MultiPoly::parse(reg, "-2*B1*V2-2*B2*V1"),
                                        MultiPoly::parse(reg, "1-B2*V2")));
    // Squared denominators, from the oracle rather than the printed form.
    MultiPoly lam = MultiPoly::parse(reg, "1-B2*V2");
    CHECK(coords.a1 == RationalFunction(MultiPoly::parse(reg, "V1+B1*V2^2"), lam * lam));
    CHECK(coords.a5 == RationalFunction(MultiPoly::parse(reg, "B1+B2^2*V1"), lam * lam));
}

TEST_CASE("lower factor alone: coordinates collapse to (0,0,0,0,B1,B2)") {
    const Registry& reg = default_registry();
    Matrix4 g = partial_product(reg)
                    .substituted("V1", MultiPoly(reg))
                    .substituted("V2", MultiPoly(reg));
    SecondKindCoords coords = factor_second_kind(g);
    CHECK(coords.a1.is_zero());
    CHECK(coords.a2.is_zero());
    CHECK(coords.a3.is_zero());
    CHECK(coords.lambda == rf(reg, "1"));
    CHECK(coords.a5 == rf(reg, "B1"));
    CHECK(coords.a6 == rf(reg, "B2"));
}

TEST_CASE("re-exponentiation round trip, symbolic and at random points") {
    const Registry& reg = default_registry();
    Matrix4 g = partial_product(reg);
    SecondKindCoords coords = factor_second_kind(g);
    CHECK(re_exponentiate(coords, reg) == g);

    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    int done = 0;
    while (done < 10) {
        Rational b1 = make_rational(num(rng), den(rng));
        Rational b2 = make_rational(num(rng), den(rng));
        Rational v1 = make_rational(num(rng), den(rng));
        Rational v2 = make_rational(num(rng), den(rng));
        if (Rational(1) - b2 * v2 == 0) continue;
        Matrix4 gn = g.substituted("B1", MultiPoly::constant(reg, b1))
                         .substituted("B2", MultiPoly::constant(reg, b2))
                         .substituted("V1", MultiPoly::constant(reg, v1))
                         .substituted("V2", MultiPoly::constant(reg, v2));
        SecondKindCoords cn = factor_second_kind(gn);
        CHECK(re_exponentiate(cn, reg) == gn);

        // Injectivity: nudging any coordinate moves the matrix.
        SecondKindCoords bumped = cn;
        bumped.a3 = bumped.a3 + RationalFunction::constant(reg, Rational(1));
        CHECK(re_exponentiate(bumped, reg) != gn);
        bumped = cn;
        bumped.a5 = bumped.a5 + RationalFunction::constant(reg, make_rational(1, 3));
        CHECK(re_exponentiate(bumped, reg) != gn);
        ++done;
    }
}

TEST_CASE("chart pattern violations are rejected with the offending entry") {
    const Registry& reg = default_registry();
    Matrix4 bad = partial_product(reg);
    bad.at(3, 1) = RationalFunction::constant(reg, Rational(1));
    CHECK_THROWS_WITH_AS(factor_second_kind(bad),
                         "chart pattern mismatch: entry (3,1) must be zero", std::domain_error);

    Matrix4 zero22(reg);
    zero22 = Matrix4::identity(reg);
    zero22.at(2, 2) = RationalFunction(reg);
    zero22.at(4, 4) = RationalFunction(reg);
    CHECK_THROWS_AS(factor_second_kind(zero22), std::domain_error);
}

TEST_CASE("discrepancy report: verdicts and the generating-function specialization") {
    LeibnizReport rep = leibniz_discrepancy_report();
    CHECK(rep.roundtrip_ok);
    CHECK(rep.genfu_specialization_ok);
    REQUIRE(rep.coordinates.size() == 6);
    std::map<std::string, std::string> verdicts;
    for (const auto& c : rep.coordinates) verdicts[c.name] = c.verdict;
    CHECK(verdicts["A1"] == "typo-suspected");
    CHECK(verdicts["A2"] == "match");
    CHECK(verdicts["A3"] == "match");
    CHECK(verdicts["A4"] == "match");
    CHECK(verdicts["A5"] == "undecided");
    CHECK(verdicts["A6"] == "match");
    for (const auto& line : rep.genfu_factors) CHECK(line.find("MISMATCH") == std::string::npos);
}
