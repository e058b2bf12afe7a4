#include "altkit/diffop.hpp"

#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

namespace altkit {

DiffOp DiffOp::term(const MultiPoly& coeff, int dt_order, int dr_order) {
    if (dt_order < 0 || dr_order < 0) throw std::invalid_argument("negative derivative order");
    DiffOp d(coeff.registry());
    d.add_term({dt_order, dr_order}, coeff);
    return d;
}

MultiPoly DiffOp::coeff(int dt_order, int dr_order) const {
    auto it = terms_.find({dt_order, dr_order});
    return it == terms_.end() ? MultiPoly(reg_) : it->second;
}

void DiffOp::add_term(const std::pair<int, int>& key, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::operator-() const {
    DiffOp out(reg_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
    // (c dt^a dr^b)(d dt^p dr^q) = c sum_{i<=a, j<=b} C(a,i) C(b,j)
    //   (dt^i dr^j d) dt^{a-i+p} dr^{b-j+q}
    DiffOp out(reg_);
    for (const auto& [ka, c] : terms_) {
        auto [a, b] = ka;
        for (const auto& [kb, d] : o.terms_) {
            auto [p, q] = kb;
            MultiPoly dti = d;
            for (int i = 0; i <= a; ++i) {
                MultiPoly dtj = dti;
                for (int j = 0; j <= b; ++j) {
                    if (!dtj.is_zero()) {
                        Rational f(binomial(static_cast<unsigned>(a), static_cast<unsigned>(i)) *
                                   binomial(static_cast<unsigned>(b), static_cast<unsigned>(j)));
                        out.add_term({a - i + p, b - j + q}, c * dtj * f);
                    }
                    dtj = dtj.derivative("r");
                }
                dti = dti.derivative("t");
            }
        }
    }
    return out;
}

DiffOp DiffOp::operator*(const MultiPoly& s) const {
    DiffOp out(reg_);
    for (const auto& [k, c] : terms_) out.add_term(k, c * s);
    return out;
}

DiffOp DiffOp::operator*(const Rational& s) const {
    DiffOp out(reg_);
    for (const auto& [k, c] : terms_) out.add_term(k, c * s);
    return out;
}

bool DiffOp::operator==(const DiffOp& o) const {
    return same_registry(reg_, o.reg_) && terms_ == o.terms_;
}

DiffOp DiffOp::substituted(std::string_view name, const MultiPoly& value) const {
    DiffOp out(reg_);
    for (const auto& [k, c] : terms_) out.add_term(k, c.substituted(name, value));
    return out;
}

std::string DiffOp::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        auto [a, b] = k;
        bool pure = (a == 0 && b == 0);
        if (c.is_one() && !pure) {
            // bare derivative
        } else if (c.terms().size() == 1 && !pure) {
            os << c.to_string() << "*";
        } else if (pure) {
            os << c.to_string();
        } else {
            os << "(" << c.to_string() << ")*";
        }
        if (a > 0) {
            os << "dt";
            if (a > 1) os << "^" << a;
            if (b > 0) os << "*";
        }
        if (b > 0) {
            os << "dr";
            if (b > 1) os << "^" << b;
        }
    }
    return os.str();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

namespace {

MultiPoly tpow(const Registry& reg, long e) {
    return MultiPoly::variable(reg, "t", static_cast<int>(e));
}

DiffOp rep_L_with(const Registry& reg, long n, const MultiPoly& rdr_scale) {
    MultiPoly r = MultiPoly::variable(reg, "r");
    MultiPoly x = MultiPoly::variable(reg, "x");
    MultiPoly gamma = MultiPoly::variable(reg, "gamma");
    Rational np1(n + 1);
    DiffOp op = DiffOp::term(-tpow(reg, n + 1), 1, 0);
    op = op + DiffOp::term(rdr_scale * tpow(reg, n) * r * np1, 0, 1);
    op = op + DiffOp::term(-(x * tpow(reg, n) * np1));
    op = op + DiffOp::term(-(gamma * tpow(reg, n - 1) * r * (Rational(n) * np1)));
    return op;
}

}  // namespace

DiffOp rep_L(const Registry& reg, long n, RepMode mode) {
    Rational s = mode == RepMode::printed ? Rational(1) : Rational(-1);
    return rep_L_with(reg, n, MultiPoly::constant(reg, s));
}

DiffOp rep_L_ansatz(const Registry& reg, long n) {
    return rep_L_with(reg, n, MultiPoly::variable(reg, "a"));
}

DiffOp rep_Le(const Registry& reg, long n) {
    MultiPoly gamma = MultiPoly::variable(reg, "gamma");
    DiffOp op = DiffOp::term(-tpow(reg, n + 1), 0, 1);
    op = op + DiffOp::term(-(gamma * tpow(reg, n) * Rational(n + 1)));
    return op;
}

RepCheckReport verify_rep_against_rule(const RepFn& rep, const GradedBracketRule& rule,
                                       const Registry& reg, long window) {
    RepCheckReport report;
    report.rule = rule.name();
    report.window = window;
    std::vector<GenId> gens = rule.window_generators(window);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            ++report.pairs_checked;
            DiffOp lhs = commutator(rep(gens[i]), rep(gens[j]));
            DiffOp rhs(reg);
            for (const auto& t : rule.bracket(gens[i], gens[j])) rhs = rhs + rep(t.gen) * t.coeff;
            DiffOp res = lhs - rhs;
            if (!res.is_zero())
                report.residuals.push_back(
                    {render_gen(rule, gens[i]), render_gen(rule, gens[j]), res.to_string()});
        }
    return report;
}

RepCheckReport verify_representation(long window, RepMode mode) {
    const Registry& reg = default_registry();
    GradedBracketRule rule = w_rule();
    RepFn rep = [&reg, mode](const GenId& g) {
        if (g.family == "L") return rep_L(reg, g.index, mode);
        if (g.family == "Le") return rep_Le(reg, g.index);
        throw std::invalid_argument("no operator for family " + g.family);
    };
    RepCheckReport report = verify_rep_against_rule(rep, rule, reg, window);
    report.mode = mode == RepMode::printed ? "printed" : "calibrated";
    return report;
}

CalibrationResult calibrate_against(const RepFn& ansatz, const GradedBracketRule& rule,
                                    const Registry& reg, long window) {
    CalibrationResult res;
    res.window = window;
    int a_idx = reg->checked_index("a");

    // Collect, per residual monomial context, the univariate polynomial
    // in a that must vanish.
    std::map<std::pair<std::pair<int, int>, Exponents>, std::map<int, Rational>> equations;
    std::vector<GenId> gens = rule.window_generators(window);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            DiffOp lhs = commutator(ansatz(gens[i]), ansatz(gens[j]));
            DiffOp rhs(reg);
            for (const auto& t : rule.bracket(gens[i], gens[j]))
                rhs = rhs + ansatz(t.gen) * t.coeff;
            DiffOp resid = lhs - rhs;
            for (const auto& [key, poly] : resid.terms())
                for (const auto& [e, c] : poly.terms()) {
                    Exponents context = e;
                    int k = context[static_cast<std::size_t>(a_idx)];
                    context[static_cast<std::size_t>(a_idx)] = 0;
                    equations[{key, context}][k] += c;
                }
        }

    // Candidate roots come from the linear equations.
    std::set<Rational> candidates;
    bool any_nonzero_eq = false;
    for (auto& [ctx, eq] : equations) {
        for (auto it = eq.begin(); it != eq.end();) {
            if (it->second == 0)
                it = eq.erase(it);
            else
                ++it;
        }
        if (eq.empty()) continue;
        any_nonzero_eq = true;
        int deg = eq.rbegin()->first;
        if (deg == 0) {
            res.kind = CalibrationResult::Kind::empty;
            res.notes.push_back("constant residual cannot be cancelled by any a");
            return res;
        }
        if (deg == 1) {
            Rational c0 = eq.count(0) ? eq.at(0) : Rational(0);
            candidates.insert(-c0 / eq.at(1));
        } else {
            res.notes.push_back("residual of degree " + std::to_string(deg) + " in a");
        }
    }
    if (!any_nonzero_eq) {
        res.kind = CalibrationResult::Kind::all;
        return res;
    }

    // Verify each candidate against every equation.
    std::vector<Rational> good;
    for (const Rational& cand : candidates) {
        bool ok = true;
        for (const auto& [ctx, eq] : equations) {
            Rational v(0);
            for (const auto& [k, c] : eq) v += c * rational_pow(cand, k);
            if (v != 0) {
                ok = false;
                break;
            }
        }
        if (ok) good.push_back(cand);
    }
    if (good.size() == 1) {
        res.kind = CalibrationResult::Kind::singleton;
        res.value = good.front();
    } else {
        res.kind = CalibrationResult::Kind::empty;
        if (good.empty())
            res.notes.push_back("no value of a cancels every residual");
        else
            res.notes.push_back("multiple admissible values of a");
    }
    return res;
}

CalibrationResult calibrate_rep(long window) {
    const Registry& reg = default_registry();
    GradedBracketRule rule = w_rule();
    RepFn ansatz = [&reg](const GenId& g) {
        if (g.family == "L") return rep_L_ansatz(reg, g.index);
        if (g.family == "Le") return rep_Le(reg, g.index);
        throw std::invalid_argument("no operator for family " + g.family);
    };
    return calibrate_against(ansatz, rule, reg, window);
}

namespace {

// 2x2 matrices with circle-field entries; the bracket of matrices takes
// entrywise brackets through the matrix product pattern.
struct Matrix2 {
    std::array<GradedElement, 4> e;  // row major

    static Matrix2 zero(const GradedBracketRule* rule, const Registry& reg) {
        return {{GradedElement(rule, reg), GradedElement(rule, reg), GradedElement(rule, reg),
                 GradedElement(rule, reg)}};
    }
};

Matrix2 commutator2(const Matrix2& a, const Matrix2& b, const GradedBracketRule* rule,
                    const Registry& reg) {
    Matrix2 out = Matrix2::zero(rule, reg);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            GradedElement acc(rule, reg);
            for (int k = 0; k < 2; ++k) {
                acc = acc + bracket(a.e[static_cast<std::size_t>(2 * i + k)],
                                    b.e[static_cast<std::size_t>(2 * k + j)]);
            }
            out.e[static_cast<std::size_t>(2 * i + j)] = acc;
        }
    return out;
}

bool equal2(const Matrix2& a, const Matrix2& b) {
    for (int i = 0; i < 4; ++i)
        if (!(a.e[static_cast<std::size_t>(i)] == b.e[static_cast<std::size_t>(i)])) return false;
    return true;
}

}  // namespace

Matrix2Report matrix2x2_check(long window) {
    Matrix2Report rep;
    rep.window = window;
    const Registry& reg = default_registry();
    GradedBracketRule vect = vect_circle_rule();

    auto diag = [&](long n) {
        Matrix2 m = Matrix2::zero(&vect, reg);
        m.e[0] = GradedElement::generator(&vect, reg, {"L", n});
        m.e[3] = GradedElement::generator(&vect, reg, {"L", n});
        return m;
    };
    auto upper = [&](long n) {
        Matrix2 m = Matrix2::zero(&vect, reg);
        m.e[1] = GradedElement::generator(&vect, reg, {"L", n});
        return m;
    };
    auto scaled = [&](Matrix2 m, const Rational& c) {
        for (auto& x : m.e) x = x * c;
        return m;
    };

    for (long n = -window; n <= window; ++n)
        for (long m = -window; m <= window; ++m) {
            Rational c(n - m);
            // [L_n, L_m] block-diagonal
            if (n < m) {
                ++rep.pairs_checked;
                if (!equal2(commutator2(diag(n), diag(m), &vect, reg), scaled(diag(n + m), c)))
                    rep.failures.push_back("[L" + std::to_string(n) + ", L" + std::to_string(m) +
                                           "] diagonal block mismatch");
                ++rep.pairs_checked;
                if (!equal2(commutator2(upper(n), upper(m), &vect, reg),
                            Matrix2::zero(&vect, reg)))
                    rep.failures.push_back("[Le" + std::to_string(n) + ", Le" +
                                           std::to_string(m) + "] not zero");
            }
            // [L_n, Le_m] mixed, all ordered pairs
            ++rep.pairs_checked;
            if (!equal2(commutator2(diag(n), upper(m), &vect, reg), scaled(upper(n + m), c)))
                rep.failures.push_back("[L" + std::to_string(n) + ", Le" + std::to_string(m) +
                                       "] upper block mismatch");
        }
    return rep;
}

}  // namespace altkit
