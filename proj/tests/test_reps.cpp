#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "altkit/contraction.hpp"
#include "altkit/density.hpp"
#include "altkit/diffop.hpp"

using namespace altkit;

namespace {

MultiPoly random_laurent(const Registry& reg, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), expo(-4, 4), num(-5, 5);
    MultiPoly p(reg);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int c = num(rng);
        if (c == 0) c = 1;
        p += MultiPoly::variable(reg, "z", expo(rng)) * Rational(c);
    }
    return p;
}

}  // namespace

TEST_CASE("density action basics") {
    const Registry& reg = default_registry();
    // weight 0, f = 1: plain derivation
    DensityElement u{MultiPoly::parse(reg, "z^3+2*z^-1"), Rational(0)};
    DensityElement du = density_action(MultiPoly::constant(reg, Rational(1)), u);
    CHECK(du.u == MultiPoly::parse(reg, "3*z^2-2*z^-2"));

    // L0 on z^0 (dz)^-1 gives u_{-1} back: (0-(-1)) u_{-1}
    DensityElement um1 = density_um(reg, -1);
    DensityElement res = density_action(circle_field(reg, 0), um1);
    CHECK(res == um1);
}

TEST_CASE("weight -1 densities carry the doubled-algebra action") {
    const Registry& reg = default_registry();
    for (long n = -10; n <= 10; ++n)
        for (long m = -10; m <= 10; ++m) {
            DensityElement lhs = density_action(circle_field(reg, n), density_um(reg, m));
            DensityElement rhs = density_um(reg, n + m);
            rhs.u = rhs.u * Rational(n - m);
            CHECK(lhs.u == rhs.u);
        }
}

TEST_CASE("density action is a Lie action, randomized") {
    const Registry& reg = default_registry();
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> wnum(-3, 3), wden(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly f = random_laurent(reg, rng);
        MultiPoly g = random_laurent(reg, rng);
        DensityElement u{random_laurent(reg, rng), make_rational(wnum(rng), wden(rng))};
        DensityElement lhs = density_action(vector_field_bracket(f, g), u);
        DensityElement rhs1 = density_action(f, density_action(g, u));
        DensityElement rhs2 = density_action(g, density_action(f, u));
        CHECK(lhs.u == rhs1.u - rhs2.u);
    }
}

TEST_CASE("operator calculus: heisenberg pair and canonical form") {
    const Registry& reg = default_registry();
    DiffOp dt = DiffOp::term(MultiPoly::constant(reg, Rational(1)), 1, 0);
    DiffOp t = DiffOp::term(MultiPoly::variable(reg, "t"));
    DiffOp c = commutator(dt, t);
    CHECK(c == DiffOp::term(MultiPoly::constant(reg, Rational(1))));
    CHECK(commutator(dt, dt).is_zero());
    // composition is associative
    DiffOp r = DiffOp::term(MultiPoly::variable(reg, "r"), 0, 1);
    CHECK((dt * t) * r == dt * (t * r));
}

TEST_CASE("operator commutator: the n=1, n=-1 pair closes onto 2 L0") {
    const Registry& reg = default_registry();
    DiffOp l1 = rep_L(reg, 1, RepMode::calibrated);
    DiffOp lm1 = rep_L(reg, -1, RepMode::calibrated);
    CHECK(lm1 == DiffOp::term(-MultiPoly::constant(reg, Rational(1)), 1, 0));
    DiffOp br = commutator(l1, lm1);
    CHECK(br == rep_L(reg, 0, RepMode::calibrated) * Rational(2));
    // spelled out: -2t dt - 2r dr - 2x
    CHECK(br.coeff(1, 0) == MultiPoly::parse(reg, "-2*t"));
    CHECK(br.coeff(0, 1) == MultiPoly::parse(reg, "-2*r"));
    CHECK(br.coeff(0, 0) == MultiPoly::parse(reg, "-2*x"));
}

TEST_CASE("the eps-family operators commute among themselves") {
    const Registry& reg = default_registry();
    for (long n = -3; n <= 3; ++n)
        for (long m = -3; m <= 3; ++m)
            CHECK(commutator(rep_Le(reg, n), rep_Le(reg, m)).is_zero());
}

TEST_CASE("operator jacobi identity on random degree-bounded operators") {
    const Registry& reg = default_registry();
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> tp(-2, 2), rp(0, 2), ord(0, 2), num(-3, 3);
    auto random_op = [&]() {
        DiffOp op(reg);
        for (int i = 0; i < 3; ++i) {
            MultiPoly c = MultiPoly::variable(reg, "t", tp(rng)) *
                          MultiPoly::variable(reg, "r", rp(rng)) * Rational(num(rng));
            op = op + DiffOp::term(c, ord(rng), ord(rng));
        }
        return op;
    };
    for (int trial = 0; trial < 15; ++trial) {
        DiffOp a = random_op(), b = random_op(), c = random_op();
        DiffOp jac = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                     commutator(commutator(c, a), b);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("printed operators fail with the documented witness") {
    RepCheckReport rep = verify_representation(2, RepMode::printed);
    CHECK_FALSE(rep.ok());
    bool found00 = false, found01 = false;
    for (const auto& r : rep.residuals) {
        if (r.a == "L0" && r.b == "Le0") {
            found00 = true;
            CHECK(r.residual == "2*t*dr");
        }
        if (r.a == "L0" && r.b == "Le1") {
            found01 = true;
            CHECK(r.residual == "2*t^2*dr");
        }
    }
    CHECK(found00);
    CHECK(found01);
}

TEST_CASE("calibrated operators satisfy all three bracket families") {
    RepCheckReport rep = verify_representation(5, RepMode::calibrated);
    CHECK(rep.pairs_checked == 231);  // C(22,2)
    CHECK(rep.ok());
}

TEST_CASE("calibration pins the r dr coefficient") {
    CalibrationResult res = calibrate_rep(3);
    CHECK(res.kind == CalibrationResult::Kind::singleton);
    CHECK(res.value == Rational(-1));
}

TEST_CASE("degenerate calibration control: zero operators against an abelian rule") {
    const Registry& reg = default_registry();
    GradedBracketRule abelian("abelian-family", {"A"}, {},
                              [](const GenId&, const GenId&) -> std::vector<GradedTerm> {
                                  return {};
                              });
    RepFn zero = [&reg](const GenId&) { return DiffOp(reg); };
    RepCheckReport rep = verify_rep_against_rule(zero, abelian, reg, 3);
    CHECK(rep.ok());
    CalibrationResult cal = calibrate_against(zero, abelian, reg, 3);
    CHECK(cal.kind == CalibrationResult::Kind::all);
}

TEST_CASE("2x2 block form reproduces the doubled brackets") {
    Matrix2Report rep = matrix2x2_check(5);
    CHECK(rep.ok());
    CHECK(rep.pairs_checked > 0);
}

TEST_CASE("contraction of two commuting copies") {
    ContractionReport rep = contraction_limit(6);
    CHECK(rep.ll_exact);
    CHECK(rep.lm_exact);
    CHECK(rep.mm_quadratic);
    CHECK(rep.no_linear_eps);
    CHECK(rep.limit_is_w);
    CHECK(rep.invertible_at_one);
    CHECK(rep.degenerate_at_zero);
    CHECK(rep.ok());
    CHECK(rep.central_terms.empty());

    // Carrying charges only adds central components; the family brackets
    // are untouched.
    ContractionReport charged = contraction_limit(3, {Rational(1), Rational(2)});
    CHECK(charged.ok());
    CHECK_FALSE(charged.central_terms.empty());
}
