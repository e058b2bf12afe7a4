#pragma once

#include <vector>

#include "altkit/multipoly.hpp"

namespace altkit {

/// Formal power series truncated at a degree cap (inclusive). The cap
/// counts degree in a designated set of expansion variables; an empty
/// set means every variable counts. Coefficients in the remaining
/// variables ride along untruncated, which is what generating-function
/// expansions in v1, v2 over symbolic parameters need.
class TruncatedSeries {
public:
    TruncatedSeries(MultiPoly body, long cap, std::vector<std::string> expansion_vars = {});

    const MultiPoly& body() const { return body_; }
    long cap() const { return cap_; }
    const std::vector<std::string>& expansion_vars() const { return vars_; }
    const Registry& registry() const { return body_.registry(); }

    static TruncatedSeries one(const Registry& reg, long cap,
                               std::vector<std::string> expansion_vars = {}) {
        return TruncatedSeries(MultiPoly::constant(reg, Rational(1)), cap,
                               std::move(expansion_vars));
    }

    /// Degree of a monomial counting only expansion variables.
    long xdegree(const Exponents& e) const;
    /// Terms of expansion degree zero (the "constant term" of the series).
    MultiPoly constant_part() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const MultiPoly& p) const;
    TruncatedSeries operator*(const Rational& c) const;

    bool operator==(const TruncatedSeries& o) const {
        return cap_ == o.cap_ && vars_ == o.vars_ && body_ == o.body_;
    }

private:
    void check_compatible(const TruncatedSeries& o) const;
    MultiPoly truncate(const MultiPoly& p) const;

    MultiPoly body_;
    long cap_;
    std::vector<std::string> vars_;  // sorted; empty = all
    std::vector<bool> counts_;       // per registry index
};

/// Multiplicative inverse of p modulo expansion degree > cap. The
/// degree-zero part of p must be exactly 1.
TruncatedSeries series_expand_inverse(const MultiPoly& p, long cap,
                                      std::vector<std::string> expansion_vars = {});

/// exp of a series with zero degree-zero part: sum of s^k / k!.
TruncatedSeries series_exp(const TruncatedSeries& s);

/// (1 + u)^s for a series u with zero degree-zero part and a polynomial
/// exponent s, via falling-factorial binomial coefficients
/// s(s-1)...(s-k+1)/k!.
TruncatedSeries binomial_power(const TruncatedSeries& u, const MultiPoly& exponent);

/// Coefficient of an exact monomial on expansion variables, as a
/// polynomial in the remaining variables. The monomial degree must not
/// exceed the cap.
MultiPoly coefficient_of(const TruncatedSeries& s, const std::map<std::string, int>& mono);

}  // namespace altkit
