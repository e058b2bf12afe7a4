#include "altkit/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace altkit {

namespace {

const Registry& require(const Registry& reg) {
    if (!reg) throw std::invalid_argument("null registry");
    return reg;
}

}  // namespace

MultiPoly MultiPoly::constant(const Registry& reg, const Rational& c) {
    MultiPoly p(require(reg));
    if (c != 0) p.terms_.emplace(Exponents(static_cast<std::size_t>(reg->size()), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const Registry& reg, std::string_view name, int exp) {
    MultiPoly p(require(reg));
    int i = reg->checked_index(name);
    if (exp < 0 && !reg->is_laurent(i))
        throw std::domain_error("negative exponent on non-laurent variable " + std::string(name));
    if (exp == 0) return constant(reg, Rational(1));
    Exponents mono(static_cast<std::size_t>(reg->size()), 0);
    mono[static_cast<std::size_t>(i)] = exp;
    p.terms_.emplace(std::move(mono), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool MultiPoly::is_one() const { return is_constant() && constant_term() == 1; }

Rational MultiPoly::constant_term() const {
    Exponents zero(static_cast<std::size_t>(reg_->size()), 0);
    return coefficient(zero);
}

Rational MultiPoly::coefficient(const Exponents& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

long MultiPoly::total_degree() const {
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int x : e) d += x;
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

long MultiPoly::min_total_degree() const {
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int x : e) d += x;
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

long MultiPoly::degree_in(const std::vector<std::string>& vars) const {
    std::vector<int> idx;
    idx.reserve(vars.size());
    for (const auto& v : vars) idx.push_back(reg_->checked_index(v));
    long best = 0;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int i : idx) d += e[static_cast<std::size_t>(i)];
        best = std::max(best, d);
    }
    return best;
}

bool MultiPoly::has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

const std::pair<const Exponents, Rational>& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void MultiPoly::check_same_registry(const MultiPoly& o) const {
    if (!same_registry(reg_, o.reg_))
        throw std::invalid_argument("variable registry mismatch");
}

void MultiPoly::add_term(const Exponents& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(reg_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_registry(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_registry(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_registry(o);
    MultiPoly p(reg_);
    Exponents sum(static_cast<std::size_t>(reg_->size()), 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
            p.add_term(sum, ca * cb);
        }
    }
    return p;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly p(reg_);
    if (c == 0) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

MultiPoly MultiPoly::operator/(const Rational& c) const {
    if (c == 0) throw std::domain_error("division by zero");
    return *this * (Rational(1) / c);
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(reg_, Rational(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::truncated(long cap) const {
    MultiPoly p(reg_);
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int x : e) d += x;
        if (d <= cap) p.terms_.emplace(e, c);
    }
    return p;
}

MultiPoly MultiPoly::substituted(std::string_view name, const MultiPoly& value) const {
    check_same_registry(value);
    int i = reg_->checked_index(name);
    MultiPoly out(reg_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<std::size_t>(i)];
        if (k < 0) throw std::domain_error("substitution into negative power of " + std::string(name));
        Exponents rest = e;
        rest[static_cast<std::size_t>(i)] = 0;
        MultiPoly term(reg_);
        term.terms_.emplace(std::move(rest), c);
        out += term * value.pow(static_cast<unsigned>(k));
    }
    return out;
}

Rational MultiPoly::evaluated(const std::map<std::string, Rational>& values) const {
    std::vector<bool> given(static_cast<std::size_t>(reg_->size()), false);
    std::vector<Rational> val(static_cast<std::size_t>(reg_->size()));
    for (const auto& [n, v] : values) {
        int i = reg_->checked_index(n);
        given[static_cast<std::size_t>(i)] = true;
        val[static_cast<std::size_t>(i)] = v;
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!given[i])
                throw std::invalid_argument("no value for variable " + reg_->name(static_cast<int>(i)));
            term *= rational_pow(val[i], e[i]);
        }
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(std::string_view name) const {
    int i = reg_->checked_index(name);
    MultiPoly out(reg_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<std::size_t>(i)];
        if (k == 0) continue;
        Exponents d = e;
        d[static_cast<std::size_t>(i)] = k - 1;
        out.add_term(d, c * Rational(k));
    }
    return out;
}

MultiPoly MultiPoly::divided_by_power(std::string_view name, int k) const {
    int i = reg_->checked_index(name);
    MultiPoly out(reg_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(i)] < k)
            throw std::domain_error("not divisible by " + std::string(name) + "^" + std::to_string(k));
        Exponents d = e;
        d[static_cast<std::size_t>(i)] -= k;
        out.terms_.emplace(std::move(d), c);
    }
    return out;
}

MultiPoly MultiPoly::coefficient_of(const std::map<std::string, int>& mono) const {
    std::vector<std::pair<std::size_t, int>> want;
    for (const auto& [n, k] : mono)
        want.emplace_back(static_cast<std::size_t>(reg_->checked_index(n)), k);
    MultiPoly out(reg_);
    for (const auto& [e, c] : terms_) {
        bool match = true;
        for (const auto& [i, k] : want)
            if (e[i] != k) { match = false; break; }
        if (!match) continue;
        Exponents rest = e;
        for (const auto& [i, k] : want) rest[i] = 0;
        out.add_term(rest, c);
    }
    return out;
}

Rational MultiPoly::content() const {
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, Integer(abs(numerator(c))));
        den_lcm = lcm(den_lcm, Integer(denominator(c)));
    }
    if (num_gcd == 0) return Rational(0);
    return make_rational(num_gcd, den_lcm);
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return same_registry(reg_, o.reg_) && terms_ == o.terms_;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        bool coef_shown = !any_var || mag != 1;
        if (coef_shown) os << altkit::to_string(mag);
        bool need_star = coef_shown;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << reg_->name(static_cast<int>(i));
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const Registry& reg;
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw std::invalid_argument("expected integer in polynomial text");
        return Integer(std::string(s.substr(start, pos - start)));
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw std::invalid_argument("expected variable name in polynomial text");
        return std::string(s.substr(start, pos - start));
    }

    // factor := integer [ '/' integer ] | name [ '^' int ]
    void factor(Rational& coef, Exponents& mono) {
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            Integer num = integer();
            if (accept('/')) {
                Integer den = integer();
                coef *= make_rational(num, den);
            } else {
                coef *= Rational(num);
            }
            return;
        }
        std::string name = identifier();
        int i = reg->checked_index(name);
        int e = 1;
        if (accept('^')) e = static_cast<int>(integer());
        if (e < 0 && !reg->is_laurent(i))
            throw std::domain_error("negative exponent on non-laurent variable " + name);
        mono[static_cast<std::size_t>(i)] += e;
    }

    MultiPoly parse() {
        MultiPoly out(reg);
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (accept('+')) {
                sign = 1;
            } else if (accept('-')) {
                sign = -1;
            } else if (!first) {
                throw std::invalid_argument("expected '+' or '-' between terms");
            }
            first = false;
            Rational coef(sign);
            Exponents mono(static_cast<std::size_t>(reg->size()), 0);
            factor(coef, mono);
            while (accept('*')) factor(coef, mono);
            out.add_term(mono, coef);
        }
        return out;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const Registry& reg, std::string_view text) {
    Parser p{require(reg), text};
    return p.parse();
}

}  // namespace altkit
