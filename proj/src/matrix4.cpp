#include "altkit/matrix4.hpp"

#include <sstream>
#include <stdexcept>

namespace altkit {

std::size_t Matrix4::idx(int r, int c) {
    if (r < 1 || r > 4 || c < 1 || c > 4) throw std::out_of_range("matrix index");
    return static_cast<std::size_t>((r - 1) * 4 + (c - 1));
}

Matrix4::Matrix4(Registry reg)
    : reg_(std::move(reg)),
      e_{RationalFunction(reg_), RationalFunction(reg_), RationalFunction(reg_),
         RationalFunction(reg_), RationalFunction(reg_), RationalFunction(reg_),
         RationalFunction(reg_), RationalFunction(reg_), RationalFunction(reg_),
         RationalFunction(reg_), RationalFunction(reg_), RationalFunction(reg_),
         RationalFunction(reg_), RationalFunction(reg_), RationalFunction(reg_),
         RationalFunction(reg_)} {}

Matrix4 Matrix4::identity(const Registry& reg) {
    Matrix4 m(reg);
    for (int i = 1; i <= 4; ++i) m.at(i, i) = RationalFunction::constant(reg, Rational(1));
    return m;
}

Matrix4 Matrix4::operator+(const Matrix4& o) const {
    Matrix4 m(reg_);
    for (std::size_t i = 0; i < 16; ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

Matrix4 Matrix4::operator-(const Matrix4& o) const {
    Matrix4 m(reg_);
    for (std::size_t i = 0; i < 16; ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

Matrix4 Matrix4::operator*(const Matrix4& o) const {
    Matrix4 m(reg_);
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) {
            RationalFunction acc(reg_);
            for (int k = 1; k <= 4; ++k) {
                if (at(r, k).is_zero() || o.at(k, c).is_zero()) continue;
                acc = acc + at(r, k) * o.at(k, c);
            }
            m.at(r, c) = acc;
        }
    return m;
}

Matrix4 Matrix4::operator*(const RationalFunction& s) const {
    Matrix4 m(reg_);
    for (std::size_t i = 0; i < 16; ++i) m.e_[i] = e_[i] * s;
    return m;
}

Matrix4 Matrix4::operator*(const MultiPoly& s) const { return *this * RationalFunction(s); }

Matrix4 Matrix4::operator*(const Rational& s) const {
    return *this * RationalFunction::constant(reg_, s);
}

bool Matrix4::operator==(const Matrix4& o) const {
    for (std::size_t i = 0; i < 16; ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix4::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RationalFunction Matrix4::det() const {
    // Laplace expansion along the first row over 3x3 minors.
    auto det3 = [&](std::array<const RationalFunction*, 9> a) {
        RationalFunction acc(reg_);
        acc = (*a[0]) * ((*a[4]) * (*a[8]) - (*a[5]) * (*a[7]));
        acc = acc - (*a[1]) * ((*a[3]) * (*a[8]) - (*a[5]) * (*a[6]));
        acc = acc + (*a[2]) * ((*a[3]) * (*a[7]) - (*a[4]) * (*a[6]));
        return acc;
    };
    RationalFunction acc(reg_);
    for (int c = 1; c <= 4; ++c) {
        std::array<const RationalFunction*, 9> minor{};
        int pos = 0;
        for (int r = 2; r <= 4; ++r)
            for (int cc = 1; cc <= 4; ++cc) {
                if (cc == c) continue;
                minor[static_cast<std::size_t>(pos++)] = &at(r, cc);
            }
        RationalFunction term = at(1, c) * det3(minor);
        acc = (c % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

Matrix4 Matrix4::substituted(std::string_view name, const MultiPoly& value) const {
    Matrix4 m(reg_);
    for (std::size_t i = 0; i < 16; ++i) m.e_[i] = e_[i].substituted(name, value);
    return m;
}

std::string Matrix4::to_string() const {
    std::ostringstream os;
    for (int r = 1; r <= 4; ++r) {
        os << "[";
        for (int c = 1; c <= 4; ++c) {
            os << at(r, c).to_string();
            if (c < 4) os << ", ";
        }
        os << "]";
        if (r < 4) os << "\n";
    }
    return os.str();
}

Matrix4 exp_nilpotent(const Matrix4& m) {
    Matrix4 m2 = m * m;
    Matrix4 m3 = m2 * m;
    Matrix4 m4 = m3 * m;
    if (!m4.is_zero()) throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
    Matrix4 acc = Matrix4::identity(m.registry()) + m;
    acc = acc + m2 * make_rational(1, 2);
    acc = acc + m3 * make_rational(1, 6);
    return acc;
}

}  // namespace altkit
