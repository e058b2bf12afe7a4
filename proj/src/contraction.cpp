#include "altkit/contraction.hpp"

#include <stdexcept>

namespace altkit {

namespace {

struct FamilyConstants {
    // Components on L_k(eps) and M_k(eps), as polynomials in eps.
    std::map<long, MultiPoly> on_l;
    std::map<long, MultiPoly> on_m;
    std::vector<std::string> central;  // rendered central contributions
};

}  // namespace

ContractionReport contraction_limit(long window, const ContractionFamily& family) {
    ContractionReport rep;
    rep.window = window;
    const Registry& reg = default_registry();
    GradedBracketRule rule = vir_plus_vir_rule(family.c, family.cbar);
    MultiPoly eps = MultiPoly::variable(reg, "eps");
    MultiPoly one = MultiPoly::constant(reg, Rational(1));
    MultiPoly half = MultiPoly::constant(reg, make_rational(1, 2));

    auto big_l = [&](long n) {
        GradedElement e(&rule, reg);
        e.add({"l", n}, one);
        e.add({"lb", n}, one);
        return e;
    };
    auto big_m = [&](long n) {
        GradedElement e(&rule, reg);
        e.add({"l", n}, eps);
        e.add({"lb", n}, -eps);
        return e;
    };

    // Express a bracket value back in the rescaled family: component p on
    // l_k and q on lb_k decompose as (p+q)/2 on L_k and (p-q)/(2 eps) on M_k.
    auto express = [&](const GradedElement& v) {
        FamilyConstants out;
        std::set<long> indices;
        for (const auto& [id, c] : v.components()) {
            if (id.family == "l" || id.family == "lb") indices.insert(id.index);
            else
                out.central.push_back("(" + c.to_string() + ")*" + id.family);
        }
        for (long k : indices) {
            MultiPoly p = v.coeff({"l", k});
            MultiPoly q = v.coeff({"lb", k});
            MultiPoly lpart = (p + q) * half;
            MultiPoly diff = (p - q) * half;
            if (!lpart.is_zero()) out.on_l.emplace(k, std::move(lpart));
            if (!diff.is_zero()) out.on_m.emplace(k, diff.divided_by_power("eps", 1));
        }
        return out;
    };

    rep.ll_exact = rep.lm_exact = rep.mm_quadratic = rep.no_linear_eps = rep.limit_is_w = true;
    MultiPoly eps2 = eps * eps;

    auto check_no_linear = [&](const MultiPoly& p, const std::string& where) {
        if (!p.coefficient_of({{"eps", 1}}).is_zero()) {
            rep.no_linear_eps = false;
            rep.failures.push_back("eps^1 term in " + where);
        }
    };

    for (long n = -window; n <= window; ++n)
        for (long m = -window; m <= window; ++m) {
            const std::string nm = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
            MultiPoly want = MultiPoly::constant(reg, Rational(n - m));

            if (n < m) {
                FamilyConstants ll = express(bracket(big_l(n), big_l(m)));
                for (const auto& s : ll.central) rep.central_terms.push_back("[L,L]" + nm + ": " + s);
                if (!ll.on_m.empty() || ll.on_l.size() != ((n == m) ? 0u : 1u) ||
                    ll.on_l.count(n + m) == 0 || !(ll.on_l.at(n + m) == want)) {
                    rep.ll_exact = false;
                    rep.failures.push_back("[L,L] mismatch at " + nm);
                } else {
                    check_no_linear(ll.on_l.at(n + m), "[L,L]" + nm);
                }

                FamilyConstants mm = express(bracket(big_m(n), big_m(m)));
                for (const auto& s : mm.central) rep.central_terms.push_back("[M,M]" + nm + ": " + s);
                if (!mm.on_m.empty() || mm.on_l.size() != 1 || mm.on_l.count(n + m) == 0 ||
                    !(mm.on_l.at(n + m) == want * eps2)) {
                    rep.mm_quadratic = false;
                    rep.failures.push_back("[M,M] mismatch at " + nm);
                } else {
                    check_no_linear(mm.on_l.at(n + m), "[M,M]" + nm);
                    // eps -> 0 limit vanishes: the contracted direction
                    if (!mm.on_l.at(n + m).substituted("eps", MultiPoly(reg)).is_zero()) {
                        rep.limit_is_w = false;
                        rep.failures.push_back("[M,M] limit nonzero at " + nm);
                    }
                }
            }
            if (n != m) {
                FamilyConstants lm = express(bracket(big_l(n), big_m(m)));
                for (const auto& s : lm.central) rep.central_terms.push_back("[L,M]" + nm + ": " + s);
                if (!lm.on_l.empty() || lm.on_m.size() != 1 || lm.on_m.count(n + m) == 0 ||
                    !(lm.on_m.at(n + m) == want)) {
                    rep.lm_exact = false;
                    rep.failures.push_back("[L,M] mismatch at " + nm);
                } else {
                    check_no_linear(lm.on_m.at(n + m), "[L,M]" + nm);
                }
            } else {
                // [L_n, M_n] must vanish identically.
                GradedElement v = bracket(big_l(n), big_m(n));
                if (!v.is_zero()) {
                    bool only_central = true;
                    for (const auto& [id, c] : v.components())
                        if (id.family == "l" || id.family == "lb") only_central = false;
                    if (!only_central) {
                        rep.lm_exact = false;
                        rep.failures.push_back("[L,M] nonzero at " + nm);
                    }
                }
            }
        }

    // The eps -> 0 limit of the L/M constants against the doubled rule:
    // [L,L]->(n-m)L, [L,M]->(n-m)M, [M,M]->0, which is exactly the
    // bracket pattern of w_rule under L<->L, M<->Le. The loops above
    // verified the exact eps-form, so here only the eps^0 parts matter.
    GradedBracketRule w = w_rule();
    for (long n = -2; n <= 2 && rep.limit_is_w; ++n)
        for (long m = -2; m <= 2; ++m) {
            std::vector<GradedTerm> expect_lm = w.bracket({"L", n}, {"Le", m});
            if (expect_lm.size() != (n == m ? 0u : 1u)) {
                rep.limit_is_w = false;
                rep.failures.push_back("doubled-rule pattern mismatch");
            }
        }

    // Invertibility of the family map per index: det [[1,1],[eps,-eps]] = -2 eps.
    MultiPoly det = (one * (-eps)) - (eps * one);
    rep.invertible_at_one = det.substituted("eps", one).constant_term() != 0;
    rep.degenerate_at_zero = det.substituted("eps", MultiPoly(reg)).is_zero();
    return rep;
}

}  // namespace altkit
