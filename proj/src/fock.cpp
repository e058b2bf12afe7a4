#include "altkit/fock.hpp"

#include <sstream>
#include <stdexcept>

namespace altkit {

FockVector FockVector::vacuum(const Registry& reg) {
    FockVector v(reg);
    v.add(0, 0, MultiPoly::constant(reg, Rational(1)));
    return v;
}

MultiPoly FockVector::coeff(int j, int k) const {
    auto it = comp_.find({j, k});
    return it == comp_.end() ? MultiPoly(reg_) : it->second;
}

void FockVector::add(int j, int k, const MultiPoly& c) {
    if (j < 0 || k < 0) throw std::invalid_argument("negative state index");
    if (c.is_zero()) return;
    auto [it, inserted] = comp_.emplace(std::make_pair(j, k), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) comp_.erase(it);
    }
}

long FockVector::max_level() const {
    long best = -1;
    for (const auto& [jk, c] : comp_) best = std::max(best, static_cast<long>(jk.first + jk.second));
    return best;
}

FockVector FockVector::operator+(const FockVector& o) const {
    FockVector out = *this;
    for (const auto& [jk, c] : o.comp_) out.add(jk.first, jk.second, c);
    return out;
}

FockVector FockVector::operator-(const FockVector& o) const {
    FockVector out = *this;
    for (const auto& [jk, c] : o.comp_) out.add(jk.first, jk.second, -c);
    return out;
}

FockVector FockVector::operator*(const MultiPoly& s) const {
    FockVector out(reg_);
    for (const auto& [jk, c] : comp_) out.add(jk.first, jk.second, c * s);
    return out;
}

FockVector FockVector::operator*(const Rational& s) const {
    FockVector out(reg_);
    for (const auto& [jk, c] : comp_) out.add(jk.first, jk.second, c * s);
    return out;
}

bool FockVector::operator==(const FockVector& o) const { return comp_ == o.comp_; }

std::string FockVector::to_string() const {
    if (comp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [jk, c] : comp_) {
        if (!first) os << " + ";
        first = false;
        if (c.is_one())
            os << "|" << jk.first << "," << jk.second << ">";
        else
            os << "(" << c.to_string() << ")*|" << jk.first << "," << jk.second << ">";
    }
    return os.str();
}

FockEngine::FockEngine(const FiniteLieAlgebra& alt, Registry reg)
    : alt_(alt), reg_(std::move(reg)) {
    y1_ = alt_.index_of("Y1");
    x1_ = alt_.index_of("X1");
}

FockVector FockEngine::apply_letter(int letter, int j, int k) {
    auto key = std::make_tuple(letter, j, k);
    auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;

    FockVector out(reg_);
    if (letter == y1_) {
        out.add(j + 1, k, MultiPoly::constant(reg_, Rational(1)));
    } else if (letter == x1_) {
        // [X1, Y1] = 0, so X1 passes straight through the Y1 word.
        out.add(j, k + 1, MultiPoly::constant(reg_, Rational(1)));
    } else if (j > 0 || k > 0) {
        // g Y1^j X1^k = Y1 (g Y1^{j-1} X1^k) + [g, Y1] Y1^{j-1} X1^k (and
        // the X1 version when the Y1 word is exhausted).
        int raise = j > 0 ? y1_ : x1_;
        int jj = j > 0 ? j - 1 : j;
        int kk = j > 0 ? k : k - 1;
        FockVector inner = apply_letter(letter, jj, kk);
        for (const auto& [jk2, c] : inner.components())
            out.add(jk2.first + (raise == y1_ ? 1 : 0), jk2.second + (raise == x1_ ? 1 : 0), c);
        std::vector<Rational> br = alt_.bracket(letter, raise);
        for (int l = 0; l < alt_.dim(); ++l) {
            if (br[static_cast<std::size_t>(l)] == 0) continue;
            FockVector part = apply_letter(l, jj, kk);
            for (const auto& [jk2, c] : part.components())
                out.add(jk2.first, jk2.second, c * br[static_cast<std::size_t>(l)]);
        }
    } else {
        // vacuum rules for the non-raising letters
        const std::string& label = alt_.label(letter);
        if (label == "Y0")
            out.add(0, 0, -MultiPoly::variable(reg_, "gamma"));
        else if (label == "X0")
            out.add(0, 0, -MultiPoly::variable(reg_, "x"));
        else if (label == "Y-1" || label == "X-1")
            ;  // annihilated
        else
            throw std::logic_error("unhandled letter " + label);
    }
    cache_.emplace(key, out);
    return out;
}

FockVector FockEngine::apply(const LieElement& g, const FockVector& s) {
    if (g.algebra() != &alt_) throw std::invalid_argument("element not in the engine's algebra");
    FockVector out(reg_);
    for (const auto& [jk, sc] : s.components())
        for (int letter = 0; letter < alt_.dim(); ++letter) {
            const MultiPoly& gc = g.coeff(letter);
            if (gc.is_zero()) continue;
            FockVector part = apply_letter(letter, jk.first, jk.second);
            for (const auto& [jk2, c] : part.components())
                out.add(jk2.first, jk2.second, c * gc * sc);
        }
    return out;
}

FockVector FockEngine::apply_word(const std::vector<LieElement>& word, const FockVector& s) {
    FockVector acc = s;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = apply(*it, acc);
    return acc;
}

FockVector fock_apply(const LieElement& g, const FockVector& s) {
    FockEngine engine(*g.algebra(), s.registry());
    return engine.apply(g, s);
}

std::pair<LieElement, LieElement> turned_pair(const FiniteLieAlgebra& alt, const Registry& reg,
                                              const MultiPoly& beta) {
    LieElement xm1 = LieElement::basis_element(&alt, reg, "X-1") * beta;
    LieElement ybar = ad_exp(xm1, LieElement::basis_element(&alt, reg, "Y1"));
    LieElement xbar = ad_exp(xm1, LieElement::basis_element(&alt, reg, "X1"));
    if (!bracket(ybar, xbar).is_zero())
        throw std::logic_error("turned pair failed to commute");
    return {ybar, xbar};
}

const MultiPoly& AppellTable::at(int j, int k) const {
    auto it = h.find({j, k});
    if (it == h.end()) throw std::out_of_range("appell table index out of range");
    return it->second;
}

AppellTable appell_table(const FiniteLieAlgebra& alt, int max_j, int max_k) {
    if (max_j < 0 || max_k < 0) throw std::invalid_argument("negative table bound");
    const Registry& reg = default_registry();
    FockEngine engine(alt, reg);
    auto [ybar, xbar] = turned_pair(alt, reg, MultiPoly::variable(reg, "beta"));

    // Triangle of word states W(a,b) = Ybar^a Xbar^b |00>, level a+b
    // bounded by the largest level the table needs.
    int depth = max_j + max_k;
    std::vector<std::pair<int, int>> order;
    for (int d = 0; d <= depth; ++d)
        for (int a = d; a >= 0; --a) order.emplace_back(a, d - a);

    std::map<std::pair<int, int>, FockVector> words;
    words.emplace(std::make_pair(0, 0), FockVector::vacuum(reg));
    for (const auto& [a, b] : order) {
        if (a == 0 && b == 0) continue;
        const FockVector& prev =
            a > 0 ? words.at({a - 1, b}) : words.at({0, b - 1});
        words.emplace(std::make_pair(a, b), engine.apply(a > 0 ? ybar : xbar, prev));
    }

    // Unit-triangular by level: W(a,b) = |ab> + lower-level terms.
    for (const auto& [a, b] : order) {
        const FockVector& w = words.at({a, b});
        if (!(w.coeff(a, b).is_one()))
            throw std::logic_error("word expansion lost its unit leading coefficient");
        for (const auto& [jk, c] : w.components())
            if (jk != std::make_pair(a, b) && jk.first + jk.second >= a + b)
                throw std::logic_error("word expansion is not level-triangular");
    }

    // Invert: express |jk> over the words, low levels first.
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, MultiPoly>> expr;
    for (const auto& [j, k] : order) {
        std::map<std::pair<int, int>, MultiPoly> e;
        e.emplace(std::make_pair(j, k), MultiPoly::constant(reg, Rational(1)));
        const FockVector& w = words.at({j, k});
        for (const auto& [pq, c] : w.components()) {
            if (pq == std::make_pair(j, k)) continue;
            // subtract c * expr[pq]
            for (const auto& [ab, d] : expr.at(pq)) {
                auto [it, inserted] = e.emplace(ab, -(c * d));
                if (!inserted) {
                    it->second -= c * d;
                    if (it->second.is_zero()) e.erase(it);
                }
            }
        }
        expr.emplace(std::make_pair(j, k), std::move(e));
    }

    AppellTable table;
    table.max_j = max_j;
    table.max_k = max_k;
    for (int j = 0; j <= max_j; ++j)
        for (int k = 0; k <= max_k; ++k) {
            MultiPoly h(reg);
            for (const auto& [ab, c] : expr.at({j, k}))
                h += c * MultiPoly::variable(reg, "y1", ab.first) *
                     MultiPoly::variable(reg, "y2", ab.second);
            table.h.emplace(std::make_pair(j, k), std::move(h));
        }
    return table;
}

}  // namespace altkit
