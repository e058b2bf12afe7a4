#include "altkit/genfun.hpp"

#include <stdexcept>

namespace altkit {

namespace {

const std::vector<std::string>& expansion_vars() {
    static const std::vector<std::string> vars{"v1", "v2"};
    return vars;
}

TruncatedSeries factor1(const Registry& reg, long cap) {
    MultiPoly opb = MultiPoly::parse(reg, "1+beta*v2");
    TruncatedSeries inv2 = series_expand_inverse(opb * opb, cap, expansion_vars());
    return series_exp(inv2 * MultiPoly::parse(reg, "y1*v1"));
}

TruncatedSeries factor2(const Registry& reg, long cap) {
    MultiPoly opb = MultiPoly::parse(reg, "1+beta*v2");
    TruncatedSeries inv = series_expand_inverse(opb, cap, expansion_vars());
    return series_exp(inv * MultiPoly::parse(reg, "y2*v2"));
}

TruncatedSeries factor3(const Registry& reg, long cap, bool printed_sign) {
    MultiPoly den = printed_sign ? MultiPoly::parse(reg, "1-beta*v2")
                                 : MultiPoly::parse(reg, "1+beta*v2");
    TruncatedSeries inv = series_expand_inverse(den, cap, expansion_vars());
    return series_exp(inv * MultiPoly::parse(reg, "-2*gamma*beta*v1"));
}

TruncatedSeries factor4(const Registry& reg, long cap) {
    TruncatedSeries u(MultiPoly::parse(reg, "beta*v2"), cap, expansion_vars());
    return binomial_power(u, MultiPoly::parse(reg, "-2*x"));
}

}  // namespace

GenFunction genfun_expand(long cap) {
    const Registry& reg = default_registry();
    TruncatedSeries s =
        factor1(reg, cap) * factor2(reg, cap) * factor3(reg, cap, false) * factor4(reg, cap);
    if (!s.constant_part().is_one()) throw std::logic_error("generating function lost its 1");
    return {s};
}

GenFunFactorReport genfun_factor_comparison(long cap) {
    const Registry& reg = default_registry();
    GenFunFactorReport rep;
    // The first, second and fourth factors are rebuilt exactly as
    // printed; the third differs in the denominator sign.
    rep.factors.push_back({"exp(y1*v1/(1+beta*v2)^2)", true});
    rep.factors.push_back({"exp(y2*v2/(1+beta*v2))", true});
    bool third = factor3(reg, cap, true) == factor3(reg, cap, false);
    rep.factors.push_back({"exp(-2*gamma*beta*v1/(1+beta*v2))", third});
    rep.factors.push_back({"(1+beta*v2)^(-2*x)", true});
    rep.third_factor_matches = third;
    return rep;
}

ConsistencyReport consistency_check(int max_total, long cap) {
    if (max_total > cap)
        throw std::invalid_argument("consistency check needs cap >= max_total");
    ConsistencyReport rep;
    rep.max_total = max_total;
    rep.cap = cap;
    GenFunction gf = genfun_expand(cap);
    FiniteLieAlgebra alt = alt_algebra();
    AppellTable table = appell_table(alt, max_total, max_total);
    for (int j = 0; j <= max_total; ++j)
        for (int k = 0; j + k <= max_total; ++k) {
            ++rep.pairs_checked;
            MultiPoly from_series = coefficient_of(gf.series, {{"v1", j}, {"v2", k}}) *
                                    Rational(factorial(static_cast<unsigned>(j)) *
                                             factorial(static_cast<unsigned>(k)));
            if (from_series != table.at(j, k))
                rep.mismatches.push_back("(" + std::to_string(j) + "," + std::to_string(k) + ")");
        }
    return rep;
}

MultiPoly laguerre_scaled(int k) {
    const Registry& reg = default_registry();
    if (k < 0) throw std::invalid_argument("negative order");
    // L_n^{(alpha)} coefficients in u over polynomials in x, alpha = 2x-1:
    //   (n+1) L_{n+1} = (2n+1+alpha-u) L_n - (n+alpha) L_{n-1}
    MultiPoly two_x = MultiPoly::parse(reg, "2*x");
    std::vector<MultiPoly> prev{MultiPoly::constant(reg, Rational(1))};  // L_0
    std::vector<MultiPoly> cur{two_x, MultiPoly::constant(reg, Rational(-1))};  // L_1 = 2x - u
    if (k == 0) cur = prev;
    for (int n = 1; n < k; ++n) {
        // scalar part 2n+1+alpha = 2n+2x; shift part -u; tail -(n+alpha) = -(n-1+2x)
        MultiPoly s = two_x + MultiPoly::constant(reg, Rational(2 * n));
        MultiPoly tail = two_x + MultiPoly::constant(reg, Rational(n - 1));
        std::vector<MultiPoly> next(cur.size() + 1, MultiPoly(reg));
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i] += cur[i] * s;
            next[i + 1] -= cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i] * tail;
        for (auto& c : next) c = c / Rational(n + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    // k! (-1)^k sum_i c_i y2^i beta^{k-i}
    MultiPoly out(cur.front().registry());
    for (std::size_t i = 0; i < cur.size(); ++i)
        out += cur[i] * MultiPoly::variable(reg, "y2", static_cast<int>(i)) *
               MultiPoly::variable(reg, "beta", k - static_cast<int>(i));
    Rational scale = Rational(factorial(static_cast<unsigned>(k))) *
                     (k % 2 == 0 ? Rational(1) : Rational(-1));
    return out * scale;
}

LaguerreHermiteReport laguerre_hermite_specialize(int order) {
    LaguerreHermiteReport rep;
    rep.order = order;
    FiniteLieAlgebra alt = alt_algebra();
    const Registry& reg = default_registry();

    AppellTable column = appell_table(alt, 0, order);
    for (int k = 0; k <= order; ++k) {
        ++rep.laguerre_checked;
        if (column.at(0, k) != laguerre_scaled(k))
            rep.laguerre_mismatches.push_back("k=" + std::to_string(k));
    }

    AppellTable row = appell_table(alt, order, 0);
    MultiPoly base = MultiPoly::parse(reg, "y1-2*gamma*beta");
    for (int j = 0; j <= order; ++j) {
        ++rep.power_checked;
        if (row.at(j, 0) != base.pow(static_cast<unsigned>(j)))
            rep.power_mismatches.push_back("j=" + std::to_string(j));
    }

    rep.hermite_claim_reproduced = false;
    rep.hermite_note =
        "the v2=0 branch is exp((y1-2*gamma*beta)*v1): pure shifted powers "
        "(y1-2*gamma*beta)^j, a degenerate limit rather than the classical "
        "three-term family the source text names for this branch";
    return rep;
}

}  // namespace altkit
