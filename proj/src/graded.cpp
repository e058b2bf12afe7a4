#include "altkit/graded.hpp"

#include <sstream>
#include <stdexcept>

namespace altkit {

std::string render_gen(const GradedBracketRule& rule, const GenId& id) {
    if (rule.is_central(id.family)) return id.family;
    return id.family + std::to_string(id.index);
}

bool GradedBracketRule::is_central(const std::string& family) const {
    for (const auto& c : centrals_)
        if (c == family) return true;
    return false;
}

std::vector<GradedTerm> GradedBracketRule::bracket(const GenId& a, const GenId& b) const {
    if (is_central(a.family) || is_central(b.family)) return {};
    if (a == b) return {};
    std::vector<GradedTerm> out = rule_(a, b);
    // Normalize: drop zero coefficients.
    std::vector<GradedTerm> clean;
    for (auto& t : out)
        if (t.coeff != 0) clean.push_back(std::move(t));
    return clean;
}

std::vector<GenId> GradedBracketRule::window_generators(long window) const {
    std::vector<GenId> out;
    for (const auto& f : families_)
        for (long n = -window; n <= window; ++n) out.push_back({f, n});
    for (const auto& c : centrals_) out.push_back({c, 0});
    return out;
}

GradedElement::GradedElement(const GradedBracketRule* rule, Registry reg)
    : rule_(rule), reg_(std::move(reg)) {
    if (!rule_) throw std::invalid_argument("null bracket rule");
}

GradedElement GradedElement::generator(const GradedBracketRule* rule, const Registry& reg,
                                       const GenId& id) {
    GradedElement e(rule, reg);
    e.add(id, MultiPoly::constant(reg, Rational(1)));
    return e;
}

MultiPoly GradedElement::coeff(const GenId& id) const {
    auto it = comp_.find(id);
    return it == comp_.end() ? MultiPoly(reg_) : it->second;
}

void GradedElement::add(const GenId& id, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = comp_.emplace(id, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) comp_.erase(it);
    }
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
    if (rule_ != o.rule_) throw std::invalid_argument("bracket rule mismatch");
    GradedElement out = *this;
    for (const auto& [id, c] : o.comp_) out.add(id, c);
    return out;
}

GradedElement GradedElement::operator-(const GradedElement& o) const { return *this + (-o); }

GradedElement GradedElement::operator-() const {
    GradedElement out(rule_, reg_);
    for (const auto& [id, c] : comp_) out.comp_.emplace(id, -c);
    return out;
}

GradedElement GradedElement::operator*(const MultiPoly& s) const {
    GradedElement out(rule_, reg_);
    for (const auto& [id, c] : comp_) out.add(id, c * s);
    return out;
}

GradedElement GradedElement::operator*(const Rational& s) const {
    GradedElement out(rule_, reg_);
    for (const auto& [id, c] : comp_) out.add(id, c * s);
    return out;
}

bool GradedElement::operator==(const GradedElement& o) const {
    return rule_ == o.rule_ && comp_ == o.comp_;
}

std::string GradedElement::to_string() const {
    if (comp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, c] : comp_) {
        if (!first) os << " + ";
        first = false;
        if (c.is_one())
            os << render_gen(*rule_, id);
        else
            os << "(" << c.to_string() << ")*" << render_gen(*rule_, id);
    }
    return os.str();
}

GradedElement GradedElement::substituted(std::string_view name, const MultiPoly& value) const {
    GradedElement out(rule_, reg_);
    for (const auto& [id, c] : comp_) out.add(id, c.substituted(name, value));
    return out;
}

GradedElement bracket(const GradedElement& x, const GradedElement& y) {
    if (x.rule_ != y.rule_) throw std::invalid_argument("bracket rule mismatch");
    GradedElement out(x.rule_, x.reg_);
    for (const auto& [ida, ca] : x.comp_)
        for (const auto& [idb, cb] : y.comp_) {
            MultiPoly f = ca * cb;
            for (const auto& term : x.rule_->bracket(ida, idb))
                out.add(term.gen, f * term.coeff);
        }
    return out;
}

GradedJacobiReport jacobi_window(const GradedBracketRule& rule, long window) {
    GradedJacobiReport rep;
    rep.algebra = rule.name();
    rep.window = window;
    std::vector<GenId> gens = rule.window_generators(window);
    Registry reg = make_registry({"s"});  // coefficients stay rational here

    auto as_element = [&](const std::vector<GradedTerm>& terms) {
        GradedElement e(&rule, reg);
        for (const auto& t : terms) e.add(t.gen, MultiPoly::constant(reg, t.coeff));
        return e;
    };
    auto elem_bracket_gen = [&](const GradedElement& v, const GenId& g) {
        GradedElement out(&rule, reg);
        for (const auto& [id, c] : v.components())
            for (const auto& t : rule.bracket(id, g)) out.add(t.gen, c * t.coeff);
        return out;
    };

    std::size_t n = gens.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                ++rep.triples_checked;
                GradedElement jac = elem_bracket_gen(as_element(rule.bracket(gens[i], gens[j])), gens[k]) +
                                    elem_bracket_gen(as_element(rule.bracket(gens[j], gens[k])), gens[i]) +
                                    elem_bracket_gen(as_element(rule.bracket(gens[k], gens[i])), gens[j]);
                if (!jac.is_zero())
                    rep.failures.push_back({render_gen(rule, gens[i]), render_gen(rule, gens[j]),
                                            render_gen(rule, gens[k]), jac.to_string()});
            }
    return rep;
}

namespace {

Rational vir_cocycle_value(long n) {
    // n(n^2 - 1)
    return Rational(n) * (Rational(n) * Rational(n) - 1);
}

}  // namespace

GradedBracketRule vect_circle_rule() {
    return GradedBracketRule(
        "vect_circle", {"L"}, {},
        [](const GenId& a, const GenId& b) -> std::vector<GradedTerm> {
            return {{{"L", a.index + b.index}, Rational(a.index - b.index)}};
        });
}

GradedBracketRule w_rule() {
    return GradedBracketRule(
        "w", {"L", "Le"}, {},
        [](const GenId& a, const GenId& b) -> std::vector<GradedTerm> {
            if (a.family == "Le" && b.family == "Le") return {};
            const std::string result = (a.family == "Le" || b.family == "Le") ? "Le" : "L";
            return {{{result, a.index + b.index}, Rational(a.index - b.index)}};
        });
}

GradedBracketRule vir_rule(const Rational& c) {
    return GradedBracketRule(
        "vir", {"L"}, {"K"},
        [c](const GenId& a, const GenId& b) -> std::vector<GradedTerm> {
            std::vector<GradedTerm> out{
                {{"L", a.index + b.index}, Rational(a.index - b.index)}};
            if (a.index + b.index == 0)
                out.push_back({{"K", 0}, c * vir_cocycle_value(a.index)});
            return out;
        });
}

GradedBracketRule vir_plus_vir_rule(const Rational& c, const Rational& cbar) {
    return GradedBracketRule(
        "vir+vir", {"l", "lb"}, {"K", "Kb"},
        [c, cbar](const GenId& a, const GenId& b) -> std::vector<GradedTerm> {
            if (a.family != b.family) return {};
            std::vector<GradedTerm> out{
                {{a.family, a.index + b.index}, Rational(a.index - b.index)}};
            if (a.index + b.index == 0) {
                const Rational& charge = a.family == "l" ? c : cbar;
                const std::string central = a.family == "l" ? "K" : "Kb";
                out.push_back({{central, 0}, charge * vir_cocycle_value(a.index)});
            }
            return out;
        });
}

}  // namespace altkit
