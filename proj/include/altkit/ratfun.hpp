#pragma once

#include <string>

#include "altkit/multipoly.hpp"

namespace altkit {

/// Quotient of two polynomials, kept in a cheap canonical form: the
/// pair is divided by the gcd of the two contents and the denominator's
/// leading coefficient is forced positive. Equality is decided by
/// cross-multiplication, so no multivariate gcd is ever required.
class RationalFunction {
public:
    explicit RationalFunction(const Registry& reg)
        : num_(MultiPoly(reg)), den_(MultiPoly::constant(reg, Rational(1))) {}
    explicit RationalFunction(MultiPoly num);
    RationalFunction(MultiPoly num, MultiPoly den);

    static RationalFunction constant(const Registry& reg, const Rational& c) {
        return RationalFunction(MultiPoly::constant(reg, c));
    }
    static RationalFunction parse(const Registry& reg, std::string_view text);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const Registry& registry() const { return num_.registry(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// Numerator view of a polynomial value; throws otherwise.
    const MultiPoly& as_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator*(const Rational& c) const;
    RationalFunction reciprocal() const;
    RationalFunction pow(int e) const;

    RationalFunction substituted(std::string_view name, const MultiPoly& value) const;
    Rational evaluated(const std::map<std::string, Rational>& values) const;

    /// Cross-multiplication equality: a/b == c/d iff ad == cb.
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// "num" when the denominator is 1, "(num)/(den)" otherwise.
    std::string to_string() const;

private:
    void canonicalize();

    MultiPoly num_, den_;
};

inline RationalFunction operator*(const MultiPoly& p, const RationalFunction& f) {
    return RationalFunction(p) * f;
}

}  // namespace altkit
