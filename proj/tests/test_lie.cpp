#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "altkit/graded.hpp"
#include "altkit/lie.hpp"

using namespace altkit;

namespace {

std::vector<Rational> basis_vec(const FiniteLieAlgebra& g,
                                const std::map<std::string, Rational>& coeffs) {
    std::vector<Rational> v(static_cast<std::size_t>(g.dim()), Rational(0));
    for (const auto& [label, c] : coeffs) v[static_cast<std::size_t>(g.index_of(label))] = c;
    return v;
}

LieMorphism relabel_morphism(const FiniteLieAlgebra& src, const FiniteLieAlgebra& dst,
                             const std::map<std::string, std::string>& dict) {
    LieMorphism phi;
    phi.source = &src;
    phi.target = &dst;
    phi.matrix.assign(static_cast<std::size_t>(src.dim()),
                      std::vector<Rational>(static_cast<std::size_t>(dst.dim()), Rational(0)));
    for (const auto& [a, b] : dict)
        phi.matrix[static_cast<std::size_t>(src.index_of(a))]
                  [static_cast<std::size_t>(dst.index_of(b))] = 1;
    return phi;
}

}  // namespace

TEST_CASE("alt structure constants") {
    FiniteLieAlgebra alt = alt_algebra();
    CHECK(alt.dim() == 6);
    CHECK(alt.bracket(alt.index_of("X-1"), alt.index_of("X1")) ==
          basis_vec(alt, {{"X0", Rational(-2)}}));
    CHECK(alt.bracket(alt.index_of("X1"), alt.index_of("Y1")) == basis_vec(alt, {}));
    CHECK(alt.bracket(alt.index_of("X0"), alt.index_of("Y1")) ==
          basis_vec(alt, {{"Y1", Rational(-1)}}));
    CHECK(alt.bracket(alt.index_of("X1"), alt.index_of("Y-1")) ==
          basis_vec(alt, {{"Y0", Rational(2)}}));
}

TEST_CASE("turned-plane expansion pins the bracket convention") {
    // e^{beta ad_{X-1}} X1 must reproduce X1 - 2 beta X0 + beta^2 X-1,
    // which forces [X-1, X1] = -2 X0 and [X-1, X0] = -X-1.
    FiniteLieAlgebra alt = alt_algebra();
    const Registry& reg = default_registry();
    MultiPoly beta = MultiPoly::variable(reg, "beta");
    LieElement xm1 = LieElement::basis_element(&alt, reg, "X-1") * beta;
    LieElement x1 = LieElement::basis_element(&alt, reg, "X1");
    LieElement expanded = ad_exp(xm1, x1);

    LieElement expected = LieElement::basis_element(&alt, reg, "X1");
    expected.set_coeff("X0", MultiPoly::parse(reg, "-2*beta"));
    expected.set_coeff("X-1", MultiPoly::parse(reg, "beta^2"));
    CHECK(expanded == expected);

    CHECK(alt.bracket(alt.index_of("X-1"), alt.index_of("X0")) ==
          basis_vec(alt, {{"X-1", Rational(-1)}}));
}

TEST_CASE("bracket on elements: bilinear, antisymmetric") {
    FiniteLieAlgebra alt = alt_algebra();
    const Registry& reg = default_registry();
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coin(-3, 3);
    auto random_elem = [&]() {
        LieElement e(&alt, reg);
        for (int i = 0; i < alt.dim(); ++i) {
            MultiPoly c = MultiPoly::constant(reg, Rational(coin(rng)));
            if (coin(rng) > 0) c = c * MultiPoly::variable(reg, "beta");
            e.set_coeff(alt.label(i), c);
        }
        return e;
    };
    for (int trial = 0; trial < 20; ++trial) {
        LieElement x = random_elem(), y = random_elem(), z = random_elem();
        CHECK(bracket(x, x).is_zero());
        CHECK(bracket(x, y) == -bracket(y, x));
        CHECK(bracket(x + y, z) == bracket(x, z) + bracket(y, z));
        MultiPoly s = MultiPoly::parse(reg, "2*gamma");
        CHECK(bracket(x * s, y) == bracket(x, y) * s);
    }
}

TEST_CASE("jacobi: alt passes, tampering is caught") {
    FiniteLieAlgebra alt = alt_algebra();
    JacobiReport rep = jacobi_check(alt);
    CHECK(rep.triples_checked == 20);
    CHECK(rep.ok());

    FiniteLieAlgebra bad = alt.with_bracket("X1", "Y-1", {{"Y0", Rational(3)}});
    JacobiReport brep = jacobi_check(bad);
    CHECK_FALSE(brep.ok());
    CHECK(brep.failures.size() >= 1);
}

TEST_CASE("jacobi: every registered finite algebra passes") {
    for (const FiniteLieAlgebra& g :
         {alt_algebra(), sl2_algebra(), p3_algebra(), heis3_algebra(), abelian_algebra(4),
          conf_labeled_alt(), grassmann_double(sl2_algebra())}) {
        JacobiReport rep = jacobi_check(g);
        INFO(g.name());
        CHECK(rep.ok());
    }
}

TEST_CASE("grassmann doubling") {
    FiniteLieAlgebra gd = grassmann_double(sl2_algebra());
    CHECK(gd.dim() == 6);
    CHECK(jacobi_check(gd).ok());
    // [L1, L-1e] = 2 L0e ; [L1e, L-1e] = 0.
    CHECK(gd.bracket(gd.index_of("L1"), gd.index_of("L-1e")) ==
          basis_vec(gd, {{"L0e", Rational(2)}}));
    CHECK(gd.bracket(gd.index_of("L1e"), gd.index_of("L-1e")) == basis_vec(gd, {}));

    FiniteLieAlgebra ab = grassmann_double(abelian_algebra(3));
    CHECK(ab.dim() == 6);
    CHECK(ab.nonzero_pairs().empty());
}

TEST_CASE("alt is the grassmann double of sl2 up to relabeling") {
    FiniteLieAlgebra alt = alt_algebra();
    FiniteLieAlgebra gd = grassmann_double(sl2_algebra());
    LieMorphism phi = relabel_morphism(alt, gd,
                                       {{"X1", "L1"}, {"X0", "L0"}, {"X-1", "L-1"},
                                        {"Y1", "L1e"}, {"Y0", "L0e"}, {"Y-1", "L-1e"}});
    MorphismReport rep = check_morphism(phi);
    CHECK(rep.pairs_checked == 15);
    CHECK(rep.preserves_brackets());
    CHECK(rep.bijective);
}

TEST_CASE("alt is p3 up to relabeling") {
    FiniteLieAlgebra alt = alt_algebra();
    FiniteLieAlgebra p3 = p3_algebra();
    LieMorphism phi = relabel_morphism(alt, p3,
                                       {{"X1", "L1"}, {"X0", "L0"}, {"X-1", "L-1"},
                                        {"Y1", "P1"}, {"Y0", "P0"}, {"Y-1", "P-1"}});
    MorphismReport rep = check_morphism(phi);
    CHECK(rep.ok());
}

TEST_CASE("conformal-label isomorphism carries the 1/2 factor") {
    FiniteLieAlgebra src = conf_labeled_alt();
    FiniteLieAlgebra dst = grassmann_double(sl2_algebra());
    MorphismReport good = check_morphism(conf_alt_isomorphism(src, dst, false));
    CHECK(good.pairs_checked == 15);
    CHECK(good.preserves_brackets());
    CHECK(good.bijective);
    CHECK(good.rank == 6);

    MorphismReport bad = check_morphism(conf_alt_isomorphism(src, dst, true));
    CHECK_FALSE(bad.preserves_brackets());
}

TEST_CASE("identity on alt is a morphism") {
    FiniteLieAlgebra alt = alt_algebra();
    std::map<std::string, std::string> id;
    for (const auto& b : alt.basis()) id[b] = b;
    CHECK(check_morphism(relabel_morphism(alt, alt, id)).ok());
}

TEST_CASE("alt is perfect") {
    CHECK(derived_subalgebra_dim(alt_algebra()) == 6);
    CHECK(derived_subalgebra_dim(heis3_algebra()) == 1);
    CHECK(derived_subalgebra_dim(abelian_algebra(2)) == 0);
}

TEST_CASE("doubling preserves jacobi on randomized transported algebras") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::vector<FiniteLieAlgebra> seeds{sl2_algebra(), heis3_algebra(), alt_algebra()};
    int produced = 0;
    for (int trial = 0; trial < 40 && produced < 12; ++trial) {
        const FiniteLieAlgebra& seed = seeds[static_cast<std::size_t>(trial) % seeds.size()];
        int n = seed.dim();
        QMatrix t(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t.at(i, j) = Rational(entry(rng));
        if (!inverse(t)) continue;
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
        FiniteLieAlgebra mixed = transport(seed, t, labels, "mixed");
        REQUIRE(jacobi_check(mixed).ok());
        CHECK(jacobi_check(grassmann_double(mixed)).ok());
        ++produced;
    }
    CHECK(produced >= 8);
}

TEST_CASE("graded rules: brackets and window jacobi") {
    GradedBracketRule vir = vir_rule(Rational(1));
    const Registry& reg = default_registry();
    GradedElement l2 = GradedElement::generator(&vir, reg, {"L", 2});
    GradedElement lm2 = GradedElement::generator(&vir, reg, {"L", -2});
    GradedElement br = bracket(l2, lm2);
    CHECK(br.coeff({"L", 0}) == MultiPoly::constant(reg, Rational(4)));
    CHECK(br.coeff({"K", 0}) == MultiPoly::constant(reg, Rational(6)));

    // charge scales the central term: n(n^2-1) = 6 at n = 2.
    GradedBracketRule vir5 = vir_rule(Rational(5));
    GradedElement br5 = bracket(GradedElement::generator(&vir5, reg, {"L", 2}),
                                GradedElement::generator(&vir5, reg, {"L", -2}));
    CHECK(br5.coeff({"K", 0}) == MultiPoly::constant(reg, Rational(30)));

    GradedBracketRule w = w_rule();
    GradedElement l0e = GradedElement::generator(&w, reg, {"Le", 0});
    GradedElement l5e = GradedElement::generator(&w, reg, {"Le", 5});
    CHECK(bracket(l0e, l5e).is_zero());
    GradedElement l3 = GradedElement::generator(&w, reg, {"L", 3});
    CHECK(bracket(l3, l5e).coeff({"Le", 8}) == MultiPoly::constant(reg, Rational(-2)));

    GradedJacobiReport wrep = jacobi_window(w, 6);
    CHECK(wrep.triples_checked == 2600);  // C(26,3)
    CHECK(wrep.ok());

    CHECK(jacobi_window(vir, 5).ok());
    CHECK(jacobi_window(vir_plus_vir_rule(Rational(1), Rational(2)), 4).ok());
}

TEST_CASE("graded window jacobi catches a broken rule") {
    GradedBracketRule broken(
        "broken", {"L"}, {},
        [](const GenId& a, const GenId& b) -> std::vector<GradedTerm> {
            // wrong coefficient pattern (n - 2m) is not a Lie bracket
            return {{{"L", a.index + b.index}, Rational(a.index - 2 * b.index)}};
        });
    CHECK_FALSE(jacobi_window(broken, 2).ok());
}
