#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "altkit/graded.hpp"
#include "altkit/lie.hpp"

namespace altkit {

// ---------------------------------------------------------------------------
// Finite-dimensional cochains (degrees 1 and 2) and exact H^2.
// Cochains carry their own copy of the algebra: they are small value
// types and outlive any temporary they were built from.

class OneCochain {
public:
    explicit OneCochain(FiniteLieAlgebra alg)
        : alg_(std::move(alg)), v_(static_cast<std::size_t>(alg_.dim()), Rational(0)) {}

    const FiniteLieAlgebra& algebra() const { return alg_; }
    const Rational& at(int i) const { return v_.at(static_cast<std::size_t>(i)); }
    void set(std::string_view label, const Rational& c) {
        v_.at(static_cast<std::size_t>(alg_.index_of(label))) = c;
    }
    /// Pairing with a coefficient vector.
    Rational apply(const std::vector<Rational>& vec) const;

private:
    FiniteLieAlgebra alg_;
    std::vector<Rational> v_;
};

/// Antisymmetric two-form on the basis; the full matrix is stored and
/// kept antisymmetric by set().
class TwoCochain {
public:
    explicit TwoCochain(FiniteLieAlgebra alg)
        : alg_(std::move(alg)),
          m_(static_cast<std::size_t>(alg_.dim()) * static_cast<std::size_t>(alg_.dim()),
             Rational(0)) {}

    const FiniteLieAlgebra& algebra() const { return alg_; }
    const Rational& at(int i, int j) const {
        return m_.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(alg_.dim()) +
                     static_cast<std::size_t>(j));
    }
    Rational at(std::string_view a, std::string_view b) const {
        return at(alg_.index_of(a), alg_.index_of(b));
    }
    void set(int i, int j, const Rational& c);
    void set(std::string_view a, std::string_view b, const Rational& c) {
        set(alg_.index_of(a), alg_.index_of(b), c);
    }
    bool is_zero() const;

private:
    FiniteLieAlgebra alg_;
    std::vector<Rational> m_;  // row major, antisymmetric
};

/// (D lambda)(x, y) = lambda([x, y]).
TwoCochain d1(const OneCochain& lambda);

struct ThreeFormValue {
    std::string a, b, c;
    Rational value;
};

/// Nonzero values of (D alpha) over all basis triples; empty iff cocycle.
std::vector<ThreeFormValue> d2_nonzero(const TwoCochain& alpha);

struct H2Result {
    std::string algebra;
    int dim_Z2 = 0;
    int dim_B2 = 0;
    int dim_H2 = 0;
    std::vector<TwoCochain> cocycle_basis;
    std::vector<TwoCochain> coboundary_basis;
};

/// Exact linear algebra over the rationals: Z^2 = ker d2, B^2 = im d1.
H2Result h2_dimension(const FiniteLieAlgebra& g);

/// Adjoin a central element with bracket deformed by charge * alpha.
/// Rejects non-cocycles (witness triple in the message); the extension
/// is re-verified with jacobi_check before being returned.
FiniteLieAlgebra central_extend(const FiniteLieAlgebra& g, const TwoCochain& alpha,
                                const Rational& charge, const std::string& central_label = "K");

struct RestrictionReport {
    bool closed = true;
    std::string witness;  // offending pair when not closed
    bool identically_zero = true;
    std::vector<std::tuple<std::string, std::string, Rational>> nonzero_values;
};

/// Restriction to the span of the listed basis elements, verifying
/// closure under the bracket first.
RestrictionReport restrict_cocycle(const TwoCochain& alpha,
                                   const std::vector<std::string>& sub_basis);

// ---------------------------------------------------------------------------
// Graded (windowed) cochains. These own a copy of their rule as well.

class GradedOneCochain {
public:
    explicit GradedOneCochain(GradedBracketRule rule) : rule_(std::move(rule)) {}
    void set(const GenId& id, const Rational& c) { v_[id] = c; }
    Rational at(const GenId& id) const {
        auto it = v_.find(id);
        return it == v_.end() ? Rational(0) : it->second;
    }
    const GradedBracketRule& rule() const { return rule_; }
    const std::map<GenId, Rational>& support() const { return v_; }

private:
    GradedBracketRule rule_;
    std::map<GenId, Rational> v_;
};

/// Closed-form antisymmetric two-form on a graded algebra, evaluated
/// lazily through a rule function.
class GradedTwoCochain {
public:
    using Fn = std::function<Rational(const GenId&, const GenId&)>;
    GradedTwoCochain(GradedBracketRule rule, std::string name, Fn fn)
        : rule_(std::move(rule)), name_(std::move(name)), fn_(std::move(fn)) {}

    const GradedBracketRule& rule() const { return rule_; }
    const std::string& name() const { return name_; }
    Rational at(const GenId& a, const GenId& b) const { return fn_(a, b); }

private:
    GradedBracketRule rule_;
    std::string name_;
    Fn fn_;
};

/// delta_{n+m,0} n(n^2-1) on L-L pairs, zero elsewhere.
GradedTwoCochain virasoro_cocycle(const GradedBracketRule& rule);
/// delta_{n+m,0} n(n^2-1) on L-Le pairs, zero on L-L and Le-Le.
GradedTwoCochain omega_cocycle(const GradedBracketRule& rule);
/// (D lambda)(x, y) = lambda([x, y]) for finitely supported lambda.
GradedTwoCochain d1_graded(const GradedOneCochain& lambda);

struct GradedThreeFormReport {
    std::string cochain;
    long window = 0;
    long triples_checked = 0;
    std::vector<std::tuple<std::string, std::string, std::string, Rational>> nonzero;
    bool ok() const { return nonzero.empty(); }
};

/// Evaluates (D alpha) on every generator triple in the window.
/// Window evidence only: the rule itself is total, the enumeration is not.
GradedThreeFormReport d2_window(const GradedTwoCochain& alpha, long window);

/// New rule with an extra central element and the bracket deformed by
/// charge * alpha. Copies its inputs, so it owns everything it needs.
GradedBracketRule central_extend_graded(const GradedBracketRule& base,
                                        const GradedTwoCochain& alpha, const Rational& charge,
                                        const std::string& central_label = "K");

/// Restriction of a graded cocycle to explicitly listed generators,
/// with closure verified on the list.
RestrictionReport restrict_cocycle(const GradedTwoCochain& alpha, const std::vector<GenId>& sub);

/// Restriction to one whole family, verified on a window.
RestrictionReport restrict_cocycle_family(const GradedTwoCochain& alpha,
                                          const std::string& family, long window);

struct IndependenceReport {
    long window = 0;
    long lambda_support_bound = 0;  // index bound for the 1-form unknowns
    long equations = 0;
    int solution_dim = 0;       // kernel dimension of the full system
    bool independent = false;   // no nonzero (a, b) admits a coboundary match
};

/// Window-level independence of two cocycles modulo coboundaries:
/// solves a*alpha + b*beta = D lambda over window pairs and reports
/// whether every solution has a = b = 0. Window evidence only.
IndependenceReport cocycle_independence_window(const GradedBracketRule& rule,
                                               const GradedTwoCochain& alpha,
                                               const GradedTwoCochain& beta, long window);

/// Do two rules produce identical brackets on all window pairs?
bool rules_agree_on_window(const GradedBracketRule& r1, const GradedBracketRule& r2,
                           long window);

}  // namespace altkit
