#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "altkit/rational.hpp"
#include "altkit/registry.hpp"

namespace altkit {

/// Exponent vector, one entry per registry variable. Entries are
/// non-negative except on Laurent-flagged variables.
using Exponents = std::vector<int>;

/// Graded lexicographic order: first by total degree, then by the
/// exponent vector itself. Serialization iterates ascending, so the
/// constant term prints first.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Immutable in spirit: every operation returns a new value and the
/// term map never stores a zero coefficient.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit MultiPoly(Registry reg) : reg_(std::move(reg)) {}

    static MultiPoly constant(const Registry& reg, const Rational& c);
    static MultiPoly variable(const Registry& reg, std::string_view name, int exp = 1);

    const Registry& registry() const { return reg_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;

    Rational constant_term() const;
    /// Coefficient of one monomial (zero when absent).
    Rational coefficient(const Exponents& mono) const;

    /// Max/min total degree over all terms; 0 for the zero polynomial.
    long total_degree() const;
    long min_total_degree() const;
    /// Max summed degree over a subset of variables.
    long degree_in(const std::vector<std::string>& vars) const;
    bool has_negative_exponent() const;

    /// Greatest term in graded-lex order. Polynomial must be nonzero.
    const std::pair<const Exponents, Rational>& leading_term() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly operator/(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    /// Drops every term of total degree > cap.
    MultiPoly truncated(long cap) const;

    /// Replace a variable by a polynomial (non-negative exponents only).
    MultiPoly substituted(std::string_view name, const MultiPoly& value) const;
    /// Full evaluation; every variable occurring must be given a value.
    Rational evaluated(const std::map<std::string, Rational>& values) const;

    MultiPoly derivative(std::string_view name) const;

    /// Exact division by name^k; throws std::domain_error if some term
    /// lacks the factor (the quotient must stay in the same ring).
    MultiPoly divided_by_power(std::string_view name, int k) const;

    /// Collect the coefficient of an exact monomial in a variable subset:
    /// terms matching the given exponents on those variables, with the
    /// matched variables removed.
    MultiPoly coefficient_of(const std::map<std::string, int>& mono) const;

    /// gcd of coefficient numerators over lcm of denominators; positive.
    /// Zero polynomial has content 0.
    Rational content() const;

    std::string to_string() const;
    static MultiPoly parse(const Registry& reg, std::string_view text);

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Adds c * mono, dropping the term if it cancels.
    void add_term(const Exponents& mono, const Rational& c);

private:
    void check_same_registry(const MultiPoly& o) const;

    Registry reg_;
    TermMap terms_;
};

inline MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
inline MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

}  // namespace altkit
