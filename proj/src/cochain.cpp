#include "altkit/cochain.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace altkit {

Rational OneCochain::apply(const std::vector<Rational>& vec) const {
    Rational acc(0);
    for (std::size_t i = 0; i < v_.size(); ++i) acc += v_[i] * vec[i];
    return acc;
}

void TwoCochain::set(int i, int j, const Rational& c) {
    if (i == j) {
        if (c != 0) throw std::invalid_argument("two-cochain diagonal must be zero");
        return;
    }
    int n = alg_.dim();
    m_.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)) = c;
    m_.at(static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)) = -c;
}

bool TwoCochain::is_zero() const {
    for (const auto& x : m_)
        if (x != 0) return false;
    return true;
}

TwoCochain d1(const OneCochain& lambda) {
    const FiniteLieAlgebra& g = lambda.algebra();
    TwoCochain out(g);
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) out.set(i, j, lambda.apply(g.bracket(i, j)));
    return out;
}

namespace {

// alpha(v, k) for a coefficient vector v.
Rational pair_with_vector(const TwoCochain& alpha, const std::vector<Rational>& v, int k) {
    Rational acc(0);
    for (int l = 0; l < alpha.algebra().dim(); ++l)
        if (v[static_cast<std::size_t>(l)] != 0)
            acc += v[static_cast<std::size_t>(l)] * alpha.at(l, k);
    return acc;
}

}  // namespace

std::vector<ThreeFormValue> d2_nonzero(const TwoCochain& alpha) {
    const FiniteLieAlgebra& g = alpha.algebra();
    std::vector<ThreeFormValue> out;
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Rational v = pair_with_vector(alpha, g.bracket(i, j), k) +
                             pair_with_vector(alpha, g.bracket(j, k), i) +
                             pair_with_vector(alpha, g.bracket(k, i), j);
                if (v != 0) out.push_back({g.label(i), g.label(j), g.label(k), v});
            }
    return out;
}

H2Result h2_dimension(const FiniteLieAlgebra& g) {
    int n = g.dim();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    auto pair_idx = [&](int i, int j) {
        // i < j assumed
        return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) -
                                pairs.begin());
    };
    int P = static_cast<int>(pairs.size());

    // D2 as a matrix from pair coordinates to triple coordinates.
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) triples.push_back({i, j, k});
    QMatrix d2mat(static_cast<int>(triples.size()), P);
    auto add_alpha = [&](int row, const std::vector<Rational>& v, int k) {
        // contribution of alpha(v, b_k) expressed in pair coordinates
        for (int l = 0; l < n; ++l) {
            const Rational& c = v[static_cast<std::size_t>(l)];
            if (c == 0 || l == k) continue;
            if (l < k)
                d2mat.at(row, pair_idx(l, k)) += c;
            else
                d2mat.at(row, pair_idx(k, l)) -= c;
        }
    };
    for (int row = 0; row < static_cast<int>(triples.size()); ++row) {
        auto [i, j, k] = triples[static_cast<std::size_t>(row)];
        add_alpha(row, g.bracket(i, j), k);
        add_alpha(row, g.bracket(j, k), i);
        add_alpha(row, g.bracket(k, i), j);
    }

    // D1 columns are the coboundaries of the dual basis.
    QMatrix d1mat(P, n);
    std::vector<std::vector<Rational>> d1cols(static_cast<std::size_t>(n),
                                              std::vector<Rational>(static_cast<std::size_t>(P)));
    for (int p = 0; p < P; ++p) {
        auto [i, j] = pairs[static_cast<std::size_t>(p)];
        std::vector<Rational> c = g.bracket(i, j);
        for (int l = 0; l < n; ++l) {
            d1mat.at(p, l) = c[static_cast<std::size_t>(l)];
            d1cols[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)] =
                c[static_cast<std::size_t>(l)];
        }
    }

    H2Result res;
    res.algebra = g.name();
    std::vector<std::vector<Rational>> z2 = kernel_basis(d2mat);
    res.dim_Z2 = static_cast<int>(z2.size());
    res.dim_B2 = rank(d1mat);
    res.dim_H2 = res.dim_Z2 - res.dim_B2;

    auto to_cochain = [&](const std::vector<Rational>& v) {
        TwoCochain c(g);
        for (int p = 0; p < P; ++p)
            c.set(pairs[static_cast<std::size_t>(p)].first, pairs[static_cast<std::size_t>(p)].second,
                  v[static_cast<std::size_t>(p)]);
        return c;
    };
    for (const auto& v : z2) res.cocycle_basis.push_back(to_cochain(v));
    for (int l : independent_subset(d1cols)) {
        OneCochain dual(g);
        dual.set(g.label(l), Rational(1));
        res.coboundary_basis.push_back(d1(dual));
    }
    return res;
}

FiniteLieAlgebra central_extend(const FiniteLieAlgebra& g, const TwoCochain& alpha,
                                const Rational& charge, const std::string& central_label) {
    if (alpha.algebra().basis() != g.basis())
        throw std::invalid_argument("cochain bound to a different algebra");
    std::vector<ThreeFormValue> bad = d2_nonzero(alpha);
    if (!bad.empty())
        throw std::domain_error("not a cocycle: D alpha != 0 at (" + bad.front().a + ", " +
                                bad.front().b + ", " + bad.front().c + ")");
    int n = g.dim();
    std::vector<std::string> basis = g.basis();
    basis.push_back(central_label);
    FiniteLieAlgebra ext(g.name() + "+" + central_label, std::move(basis));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rational> c = g.bracket(i, j);
            c.push_back(charge * alpha.at(i, j));
            ext.set_bracket(i, j, std::move(c));
        }
    JacobiReport rep = jacobi_check(ext);
    if (!rep.ok()) throw std::logic_error("central extension failed jacobi re-verification");
    return ext;
}

RestrictionReport restrict_cocycle(const TwoCochain& alpha,
                                   const std::vector<std::string>& sub_basis) {
    const FiniteLieAlgebra& g = alpha.algebra();
    RestrictionReport rep;
    std::vector<int> idx;
    for (const auto& l : sub_basis) idx.push_back(g.index_of(l));
    std::vector<bool> in_sub(static_cast<std::size_t>(g.dim()), false);
    for (int i : idx) in_sub[static_cast<std::size_t>(i)] = true;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            std::vector<Rational> c = g.bracket(idx[a], idx[b]);
            for (int l = 0; l < g.dim(); ++l)
                if (c[static_cast<std::size_t>(l)] != 0 && !in_sub[static_cast<std::size_t>(l)]) {
                    rep.closed = false;
                    rep.witness = "[" + g.label(idx[a]) + ", " + g.label(idx[b]) + "]";
                    return rep;
                }
        }
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            Rational v = alpha.at(idx[a], idx[b]);
            if (v != 0) {
                rep.identically_zero = false;
                rep.nonzero_values.emplace_back(g.label(idx[a]), g.label(idx[b]), v);
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Graded side.

namespace {

Rational nn21(long n) { return Rational(n) * (Rational(n) * Rational(n) - 1); }

}  // namespace

GradedTwoCochain virasoro_cocycle(const GradedBracketRule& rule) {
    return GradedTwoCochain(rule, "virasoro",
                            [](const GenId& a, const GenId& b) -> Rational {
                                if (a.family != "L" || b.family != "L") return 0;
                                if (a.index + b.index != 0) return 0;
                                return nn21(a.index);
                            });
}

GradedTwoCochain omega_cocycle(const GradedBracketRule& rule) {
    return GradedTwoCochain(rule, "omega",
                            [](const GenId& a, const GenId& b) -> Rational {
                                if (a.index + b.index != 0) return 0;
                                if (a.family == "L" && b.family == "Le") return nn21(a.index);
                                if (a.family == "Le" && b.family == "L") return -nn21(b.index);
                                return 0;
                            });
}

GradedTwoCochain d1_graded(const GradedOneCochain& lambda) {
    GradedBracketRule rule = lambda.rule();
    GradedOneCochain lam = lambda;  // captured by value
    return GradedTwoCochain(rule, "d1(lambda)",
                            [lam](const GenId& a, const GenId& b) -> Rational {
                                Rational acc(0);
                                for (const auto& t : lam.rule().bracket(a, b))
                                    acc += t.coeff * lam.at(t.gen);
                                return acc;
                            });
}

GradedThreeFormReport d2_window(const GradedTwoCochain& alpha, long window) {
    const GradedBracketRule& rule = alpha.rule();
    GradedThreeFormReport rep;
    rep.cochain = alpha.name();
    rep.window = window;
    std::vector<GenId> gens = rule.window_generators(window);
    auto alpha_bracket = [&](const GenId& x, const GenId& y, const GenId& z) {
        // alpha([x, y], z)
        Rational acc(0);
        for (const auto& t : rule.bracket(x, y)) acc += t.coeff * alpha.at(t.gen, z);
        return acc;
    };
    std::size_t n = gens.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                ++rep.triples_checked;
                Rational v = alpha_bracket(gens[i], gens[j], gens[k]) +
                             alpha_bracket(gens[j], gens[k], gens[i]) +
                             alpha_bracket(gens[k], gens[i], gens[j]);
                if (v != 0)
                    rep.nonzero.emplace_back(render_gen(rule, gens[i]), render_gen(rule, gens[j]),
                                             render_gen(rule, gens[k]), v);
            }
    return rep;
}

GradedBracketRule central_extend_graded(const GradedBracketRule& base,
                                        const GradedTwoCochain& alpha, const Rational& charge,
                                        const std::string& central_label) {
    for (const auto& f : base.families())
        if (f == central_label)
            throw std::invalid_argument("central label collides with a family name");
    std::vector<std::string> centrals = base.centrals();
    for (const auto& c : centrals)
        if (c == central_label)
            throw std::invalid_argument("central label already present");
    centrals.push_back(central_label);
    // Copy base and the evaluation function so the new rule is self-contained.
    GradedBracketRule base_copy = base;
    GradedTwoCochain alpha_copy = alpha;
    return GradedBracketRule(
        base.name() + "+" + central_label, base.families(), std::move(centrals),
        [base_copy, alpha_copy, charge, central_label](const GenId& a,
                                                       const GenId& b) -> std::vector<GradedTerm> {
            std::vector<GradedTerm> out = base_copy.bracket(a, b);
            Rational v = charge * alpha_copy.at(a, b);
            if (v != 0) out.push_back({{central_label, 0}, v});
            return out;
        });
}

RestrictionReport restrict_cocycle(const GradedTwoCochain& alpha, const std::vector<GenId>& sub) {
    const GradedBracketRule& rule = alpha.rule();
    RestrictionReport rep;
    auto in_sub = [&](const GenId& g) {
        return std::find(sub.begin(), sub.end(), g) != sub.end();
    };
    for (std::size_t a = 0; a < sub.size(); ++a)
        for (std::size_t b = a + 1; b < sub.size(); ++b) {
            for (const auto& t : rule.bracket(sub[a], sub[b]))
                if (!in_sub(t.gen)) {
                    rep.closed = false;
                    rep.witness = "[" + render_gen(rule, sub[a]) + ", " +
                                  render_gen(rule, sub[b]) + "] has component " +
                                  render_gen(rule, t.gen);
                    return rep;
                }
        }
    for (std::size_t a = 0; a < sub.size(); ++a)
        for (std::size_t b = a + 1; b < sub.size(); ++b) {
            Rational v = alpha.at(sub[a], sub[b]);
            if (v != 0) {
                rep.identically_zero = false;
                rep.nonzero_values.emplace_back(render_gen(rule, sub[a]),
                                                render_gen(rule, sub[b]), v);
            }
        }
    return rep;
}

RestrictionReport restrict_cocycle_family(const GradedTwoCochain& alpha,
                                          const std::string& family, long window) {
    const GradedBracketRule& rule = alpha.rule();
    RestrictionReport rep;
    for (long n = -window; n <= window; ++n)
        for (long m = n + 1; m <= window; ++m) {
            for (const auto& t : rule.bracket({family, n}, {family, m}))
                if (t.gen.family != family) {
                    rep.closed = false;
                    rep.witness = "[" + family + std::to_string(n) + ", " + family +
                                  std::to_string(m) + "] has component " +
                                  render_gen(rule, t.gen);
                    return rep;
                }
            Rational v = alpha.at({family, n}, {family, m});
            if (v != 0) {
                rep.identically_zero = false;
                rep.nonzero_values.emplace_back(family + std::to_string(n),
                                                family + std::to_string(m), v);
            }
        }
    return rep;
}

IndependenceReport cocycle_independence_window(const GradedBracketRule& rule,
                                               const GradedTwoCochain& alpha,
                                               const GradedTwoCochain& beta, long window) {
    IndependenceReport rep;
    rep.window = window;
    rep.lambda_support_bound = 2 * window;  // brackets of window pairs reach this far
    std::vector<GenId> gens = rule.window_generators(window);
    std::vector<GenId> support = rule.window_generators(rep.lambda_support_bound);
    auto support_idx = [&](const GenId& g) {
        auto it = std::find(support.begin(), support.end(), g);
        if (it == support.end()) throw std::logic_error("bracket escaped the lambda support");
        return static_cast<int>(it - support.begin());
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) pairs.emplace_back(i, j);
    rep.equations = static_cast<long>(pairs.size());

    // Unknowns: a, b, then lambda over the support.
    int cols = 2 + static_cast<int>(support.size());
    QMatrix m(static_cast<int>(pairs.size()), cols);
    for (int row = 0; row < static_cast<int>(pairs.size()); ++row) {
        const GenId& x = gens[pairs[static_cast<std::size_t>(row)].first];
        const GenId& y = gens[pairs[static_cast<std::size_t>(row)].second];
        m.at(row, 0) = alpha.at(x, y);
        m.at(row, 1) = beta.at(x, y);
        for (const auto& t : rule.bracket(x, y)) m.at(row, 2 + support_idx(t.gen)) -= t.coeff;
    }
    std::vector<std::vector<Rational>> kern = kernel_basis(m);
    rep.solution_dim = static_cast<int>(kern.size());
    rep.independent = true;
    for (const auto& v : kern)
        if (v[0] != 0 || v[1] != 0) rep.independent = false;
    return rep;
}

bool rules_agree_on_window(const GradedBracketRule& r1, const GradedBracketRule& r2,
                           long window) {
    if (r1.families() != r2.families() || r1.centrals() != r2.centrals()) return false;
    std::vector<GenId> gens = r1.window_generators(window);
    auto normalize = [](std::vector<GradedTerm> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const GradedTerm& a, const GradedTerm& b) { return a.gen < b.gen; });
        return terms;
    };
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            std::vector<GradedTerm> t1 = normalize(r1.bracket(gens[i], gens[j]));
            std::vector<GradedTerm> t2 = normalize(r2.bracket(gens[i], gens[j]));
            if (t1.size() != t2.size()) return false;
            for (std::size_t k = 0; k < t1.size(); ++k)
                if (t1[k].gen != t2[k].gen || t1[k].coeff != t2[k].coeff) return false;
        }
    return true;
}

}  // namespace altkit
