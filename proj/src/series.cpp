#include "altkit/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace altkit {

TruncatedSeries::TruncatedSeries(MultiPoly body, long cap, std::vector<std::string> expansion_vars)
    : body_(std::move(body)), cap_(cap), vars_(std::move(expansion_vars)) {
    if (cap_ < 0) throw std::invalid_argument("negative series cap");
    if (body_.has_negative_exponent())
        throw std::domain_error("series body must be polynomial (no laurent terms)");
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    const Registry& reg = body_.registry();
    counts_.assign(static_cast<std::size_t>(reg->size()), vars_.empty());
    for (const auto& v : vars_) counts_[static_cast<std::size_t>(reg->checked_index(v))] = true;
    body_ = truncate(body_);
}

long TruncatedSeries::xdegree(const Exponents& e) const {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (counts_[i]) d += e[i];
    return d;
}

MultiPoly TruncatedSeries::truncate(const MultiPoly& p) const {
    MultiPoly out(p.registry());
    for (const auto& [e, c] : p.terms())
        if (xdegree(e) <= cap_) out.add_term(e, c);
    return out;
}

MultiPoly TruncatedSeries::constant_part() const {
    MultiPoly out(registry());
    for (const auto& [e, c] : body_.terms())
        if (xdegree(e) == 0) out.add_term(e, c);
    return out;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (!same_registry(registry(), o.registry()))
        throw std::invalid_argument("variable registry mismatch");
    if (vars_ != o.vars_)
        throw std::invalid_argument("series expansion-variable mismatch");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_compatible(o);
    return TruncatedSeries(body_ + o.body_, std::min(cap_, o.cap_), vars_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    check_compatible(o);
    return TruncatedSeries(body_ - o.body_, std::min(cap_, o.cap_), vars_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_compatible(o);
    return TruncatedSeries(body_ * o.body_, std::min(cap_, o.cap_), vars_);
}

TruncatedSeries TruncatedSeries::operator*(const MultiPoly& p) const {
    return TruncatedSeries(body_ * p, cap_, vars_);
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    return TruncatedSeries(body_ * c, cap_, vars_);
}

TruncatedSeries series_expand_inverse(const MultiPoly& p, long cap,
                                      std::vector<std::string> expansion_vars) {
    TruncatedSeries sp(p, cap, std::move(expansion_vars));
    if (!sp.constant_part().is_one())
        throw std::domain_error("series inverse requires constant term 1");
    TruncatedSeries u = TruncatedSeries::one(p.registry(), cap, sp.expansion_vars()) - sp;
    TruncatedSeries acc = TruncatedSeries::one(p.registry(), cap, sp.expansion_vars());
    TruncatedSeries power = acc;
    for (long k = 1; k <= cap && !power.body().is_zero(); ++k) {
        power = power * u;
        acc = acc + power;
    }
    return acc;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s.constant_part().is_zero())
        throw std::domain_error("series exp requires zero constant term");
    TruncatedSeries acc = TruncatedSeries::one(s.registry(), s.cap(), s.expansion_vars());
    TruncatedSeries power = acc;
    Rational inv_fact(1);
    for (long k = 1; k <= s.cap() && !power.body().is_zero(); ++k) {
        power = power * s;
        inv_fact /= Rational(k);
        acc = acc + power * inv_fact;
    }
    return acc;
}

TruncatedSeries binomial_power(const TruncatedSeries& u, const MultiPoly& exponent) {
    if (!u.constant_part().is_zero())
        throw std::domain_error("binomial power requires zero constant term");
    const Registry& reg = u.registry();
    TruncatedSeries acc = TruncatedSeries::one(reg, u.cap(), u.expansion_vars());
    TruncatedSeries power = acc;
    MultiPoly coeff = MultiPoly::constant(reg, Rational(1));  // s(s-1)...(s-k+1)/k!
    for (long k = 1; k <= u.cap() && !power.body().is_zero(); ++k) {
        power = power * u;
        coeff = coeff * (exponent - MultiPoly::constant(reg, Rational(k - 1))) / Rational(k);
        acc = acc + power * coeff;
    }
    return acc;
}

MultiPoly coefficient_of(const TruncatedSeries& s, const std::map<std::string, int>& mono) {
    long deg = 0;
    for (const auto& [n, k] : mono) {
        (void)n;
        if (k < 0) throw std::out_of_range("negative monomial degree");
        deg += k;
    }
    if (deg > s.cap()) throw std::out_of_range("monomial degree exceeds series cap");
    return s.body().coefficient_of(mono);
}

}  // namespace altkit
