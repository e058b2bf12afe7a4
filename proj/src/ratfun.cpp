#include "altkit/ratfun.hpp"

#include <stdexcept>

namespace altkit {

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.registry(), Rational(1))) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (!same_registry(num_.registry(), den_.registry()))
        throw std::invalid_argument("variable registry mismatch");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.registry(), Rational(1));
        return;
    }
    if (den_.is_constant()) {
        num_ = num_ / den_.constant_term();
        den_ = MultiPoly::constant(num_.registry(), Rational(1));
        return;
    }
    Rational cn = num_.content();
    Rational cd = den_.content();
    Rational g = make_rational(gcd(Integer(numerator(cn)), Integer(numerator(cd))),
                               lcm(Integer(denominator(cn)), Integer(denominator(cd))));
    if (g != 0 && g != 1) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    // Sign convention: first denominator coefficient (in term order) positive.
    if (den_.terms().begin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

const MultiPoly& RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("not a polynomial: " + to_string());
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(registry());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator*(const Rational& c) const {
    return RationalFunction(num_ * c, den_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
    RationalFunction base = e < 0 ? reciprocal() : *this;
    int n = e < 0 ? -e : e;
    RationalFunction acc = constant(registry(), Rational(1));
    for (int i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

RationalFunction RationalFunction::substituted(std::string_view name,
                                               const MultiPoly& value) const {
    return RationalFunction(num_.substituted(name, value), den_.substituted(name, value));
}

Rational RationalFunction::evaluated(const std::map<std::string, Rational>& values) const {
    Rational d = den_.evaluated(values);
    if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.evaluated(values) / d;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction RationalFunction::parse(const Registry& reg, std::string_view text) {
    // Either a bare polynomial or the "(num)/(den)" shape to_string emits.
    if (!text.empty() && text.front() == '(') {
        std::size_t depth = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') {
                --depth;
                if (depth == 0) {
                    std::string_view rest = text.substr(i + 1);
                    if (rest.size() >= 2 && rest[0] == '/' && rest[1] == '(' &&
                        rest.back() == ')') {
                        MultiPoly n = MultiPoly::parse(reg, text.substr(1, i - 1));
                        MultiPoly d = MultiPoly::parse(reg, rest.substr(2, rest.size() - 3));
                        return RationalFunction(std::move(n), std::move(d));
                    }
                    break;
                }
            }
        }
    }
    return RationalFunction(MultiPoly::parse(reg, text));
}

}  // namespace altkit
