#pragma once

#include <array>

#include "altkit/ratfun.hpp"

namespace altkit {

/// 4x4 matrix with rational-function entries, enough for the nilpotent
/// exponentials and the partial group product.
class Matrix4 {
public:
    explicit Matrix4(Registry reg);
    static Matrix4 identity(const Registry& reg);

    const Registry& registry() const { return reg_; }
    RationalFunction& at(int r, int c) { return e_.at(idx(r, c)); }
    const RationalFunction& at(int r, int c) const { return e_.at(idx(r, c)); }

    Matrix4 operator+(const Matrix4& o) const;
    Matrix4 operator-(const Matrix4& o) const;
    Matrix4 operator*(const Matrix4& o) const;
    Matrix4 operator*(const RationalFunction& s) const;
    Matrix4 operator*(const MultiPoly& s) const;
    Matrix4 operator*(const Rational& s) const;

    bool operator==(const Matrix4& o) const;
    bool operator!=(const Matrix4& o) const { return !(*this == o); }
    bool is_zero() const;

    RationalFunction det() const;

    /// Entry-wise substitution.
    Matrix4 substituted(std::string_view name, const MultiPoly& value) const;

    std::string to_string() const;

private:
    static std::size_t idx(int r, int c);
    Registry reg_;
    std::array<RationalFunction, 16> e_;
};

/// I + M + M^2/2 + M^3/6 after verifying M^4 = 0; rejects anything else.
Matrix4 exp_nilpotent(const Matrix4& m);

}  // namespace altkit
