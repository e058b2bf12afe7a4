#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "altkit/lie.hpp"
#include "altkit/multipoly.hpp"

namespace altkit {

/// Generator of a graded family ("L", 5) or a central element ("K", 0).
struct GenId {
    std::string family;
    long index = 0;
    auto operator<=>(const GenId&) const = default;
};

/// One summand of a bracket value.
struct GradedTerm {
    GenId gen;
    Rational coeff;
};

/// Integer-indexed generator families with a closed-form bracket rule.
/// The rule is total over all indices; windowed enumeration is only how
/// checks bound their work. Central families bracket to zero with
/// everything by construction.
class GradedBracketRule {
public:
    using RuleFn = std::function<std::vector<GradedTerm>(const GenId&, const GenId&)>;

    GradedBracketRule(std::string name, std::vector<std::string> families,
                      std::vector<std::string> centrals, RuleFn rule)
        : name_(std::move(name)), families_(std::move(families)),
          centrals_(std::move(centrals)), rule_(std::move(rule)) {}

    const std::string& name() const { return name_; }
    const std::vector<std::string>& families() const { return families_; }
    const std::vector<std::string>& centrals() const { return centrals_; }
    bool is_central(const std::string& family) const;

    std::vector<GradedTerm> bracket(const GenId& a, const GenId& b) const;

    /// All generators with |index| <= window, plus the centrals.
    std::vector<GenId> window_generators(long window) const;

private:
    std::string name_;
    std::vector<std::string> families_;
    std::vector<std::string> centrals_;
    RuleFn rule_;
};

/// "L-3", or the bare family name for centrals.
std::string render_gen(const GradedBracketRule& rule, const GenId& id);

/// Finitely supported element with polynomial coefficients.
class GradedElement {
public:
    GradedElement(const GradedBracketRule* rule, Registry reg);
    static GradedElement generator(const GradedBracketRule* rule, const Registry& reg,
                                   const GenId& id);

    const GradedBracketRule* rule() const { return rule_; }
    const Registry& registry() const { return reg_; }
    const std::map<GenId, MultiPoly>& components() const { return comp_; }
    MultiPoly coeff(const GenId& id) const;
    void add(const GenId& id, const MultiPoly& c);

    bool is_zero() const { return comp_.empty(); }
    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator-(const GradedElement& o) const;
    GradedElement operator-() const;
    GradedElement operator*(const MultiPoly& s) const;
    GradedElement operator*(const Rational& s) const;
    bool operator==(const GradedElement& o) const;
    std::string to_string() const;

    /// Substitute a value for one variable in every coefficient.
    GradedElement substituted(std::string_view name, const MultiPoly& value) const;

private:
    friend GradedElement bracket(const GradedElement&, const GradedElement&);
    const GradedBracketRule* rule_;
    Registry reg_;
    std::map<GenId, MultiPoly> comp_;
};

GradedElement bracket(const GradedElement& x, const GradedElement& y);

struct GradedJacobiFailure {
    std::string a, b, c;
    std::string residual;
};

struct GradedJacobiReport {
    std::string algebra;
    long window = 0;
    long triples_checked = 0;
    std::vector<GradedJacobiFailure> failures;
    bool ok() const { return failures.empty(); }
};

GradedJacobiReport jacobi_window(const GradedBracketRule& rule, long window);

// Registered rules.
GradedBracketRule vect_circle_rule();                  // family L, no center
GradedBracketRule w_rule();                            // families L, Le
/// Centrally extended circle vector fields with charge c on the
/// n(n^2-1) cocycle.
GradedBracketRule vir_rule(const Rational& c = Rational(1));
/// Two commuting copies (families l, lb; centrals K, Kb).
GradedBracketRule vir_plus_vir_rule(const Rational& c = Rational(0),
                                    const Rational& cbar = Rational(0));

}  // namespace altkit
