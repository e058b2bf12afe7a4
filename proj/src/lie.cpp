#include "altkit/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace altkit {

namespace {

std::string render_combination(const std::vector<Rational>& coeffs,
                               const std::vector<std::string>& labels) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        if (mag != 1) os << to_string(mag) << "*";
        os << labels[i];
    }
    if (first) return "0";
    return os.str();
}

}  // namespace

FiniteLieAlgebra::FiniteLieAlgebra(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (basis_[i] == basis_[j])
                throw std::invalid_argument("duplicate basis label: " + basis_[i]);
}

int FiniteLieAlgebra::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == label) return static_cast<int>(i);
    throw std::invalid_argument(name_ + ": unknown basis label " + std::string(label));
}

std::vector<Rational> FiniteLieAlgebra::bracket(int i, int j) const {
    std::vector<Rational> zero(static_cast<std::size_t>(dim()), Rational(0));
    if (i == j) return zero;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = c_.find({i, j});
    if (it == c_.end()) return zero;
    std::vector<Rational> v = it->second;
    if (flip)
        for (auto& x : v) x = -x;
    return v;
}

void FiniteLieAlgebra::set_bracket(int i, int j, std::vector<Rational> coeffs) {
    if (i == j) throw std::invalid_argument("bracket pair needs distinct indices");
    if (static_cast<int>(coeffs.size()) != dim())
        throw std::invalid_argument("coefficient vector length mismatch");
    if (i > j) {
        std::swap(i, j);
        for (auto& x : coeffs) x = -x;
    }
    bool all_zero = true;
    for (const auto& x : coeffs)
        if (x != 0) all_zero = false;
    if (all_zero)
        c_.erase({i, j});
    else
        c_[{i, j}] = std::move(coeffs);
}

void FiniteLieAlgebra::set_bracket(std::string_view bi, std::string_view bj,
                                   const std::map<std::string, Rational>& coeffs) {
    std::vector<Rational> v(static_cast<std::size_t>(dim()), Rational(0));
    for (const auto& [label, c] : coeffs) v[static_cast<std::size_t>(index_of(label))] = c;
    set_bracket(index_of(bi), index_of(bj), std::move(v));
}

FiniteLieAlgebra FiniteLieAlgebra::with_bracket(
    std::string_view bi, std::string_view bj,
    const std::map<std::string, Rational>& coeffs) const {
    FiniteLieAlgebra g = *this;
    g.name_ += "'";
    g.set_bracket(bi, bj, coeffs);
    return g;
}

std::vector<std::pair<int, int>> FiniteLieAlgebra::nonzero_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(c_.size());
    for (const auto& [key, v] : c_) out.push_back(key);
    return out;
}

JacobiReport jacobi_check(const FiniteLieAlgebra& g) {
    int n = g.dim();
    JacobiReport rep;
    rep.algebra = g.name();
    auto vec_bracket = [&](const std::vector<Rational>& v, int k) {
        std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
        for (int l = 0; l < n; ++l) {
            if (v[static_cast<std::size_t>(l)] == 0) continue;
            std::vector<Rational> b = g.bracket(l, k);
            for (int m = 0; m < n; ++m)
                out[static_cast<std::size_t>(m)] += v[static_cast<std::size_t>(l)] * b[static_cast<std::size_t>(m)];
        }
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                ++rep.triples_checked;
                std::vector<Rational> jac = vec_bracket(g.bracket(i, j), k);
                std::vector<Rational> t2 = vec_bracket(g.bracket(j, k), i);
                std::vector<Rational> t3 = vec_bracket(g.bracket(k, i), j);
                bool zero = true;
                for (int m = 0; m < n; ++m) {
                    jac[static_cast<std::size_t>(m)] +=
                        t2[static_cast<std::size_t>(m)] + t3[static_cast<std::size_t>(m)];
                    if (jac[static_cast<std::size_t>(m)] != 0) zero = false;
                }
                if (!zero)
                    rep.failures.push_back({g.label(i), g.label(j), g.label(k),
                                            render_combination(jac, g.basis())});
            }
    return rep;
}

FiniteLieAlgebra grassmann_double(const FiniteLieAlgebra& g, const std::string& suffix) {
    int n = g.dim();
    std::vector<std::string> basis = g.basis();
    for (int i = 0; i < n; ++i) basis.push_back(g.label(i) + suffix);
    FiniteLieAlgebra d(g.name() + "[" + suffix + "]", std::move(basis));
    auto embed = [&](const std::vector<Rational>& v, int shift) {
        std::vector<Rational> out(static_cast<std::size_t>(2 * n), Rational(0));
        for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k + shift)] = v[static_cast<std::size_t>(k)];
        return out;
    };
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            std::vector<Rational> c = g.bracket(p, q);
            d.set_bracket(p, q, embed(c, 0));
            d.set_bracket(p, n + q, embed(c, n));
            std::vector<Rational> neg = c;
            for (auto& x : neg) x = -x;
            d.set_bracket(q, n + p, embed(neg, n));
        }
    return d;
}

FiniteLieAlgebra transport(const FiniteLieAlgebra& g, const QMatrix& t,
                           std::vector<std::string> new_basis, std::string new_name) {
    int n = g.dim();
    if (t.rows() != n || t.cols() != n || static_cast<int>(new_basis.size()) != n)
        throw std::invalid_argument("transport dimension mismatch");
    std::optional<QMatrix> tinv = inverse(t);
    if (!tinv) throw std::invalid_argument("transport matrix is singular");
    FiniteLieAlgebra out(std::move(new_name), std::move(new_basis));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // v = [b'_i, b'_j] in old coordinates.
            std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
            for (int p = 0; p < n; ++p) {
                if (t.at(i, p) == 0) continue;
                for (int q = 0; q < n; ++q) {
                    if (t.at(j, q) == 0) continue;
                    std::vector<Rational> b = g.bracket(p, q);
                    Rational f = t.at(i, p) * t.at(j, q);
                    for (int m = 0; m < n; ++m)
                        v[static_cast<std::size_t>(m)] += f * b[static_cast<std::size_t>(m)];
                }
            }
            // w = v in new coordinates: w_k = sum_p tinv[p][k] v_p.
            std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p)
                    w[static_cast<std::size_t>(k)] += tinv->at(p, k) * v[static_cast<std::size_t>(p)];
            out.set_bracket(i, j, std::move(w));
        }
    return out;
}

LieElement::LieElement(const FiniteLieAlgebra* alg, Registry reg)
    : alg_(alg), reg_(std::move(reg)) {
    if (!alg_) throw std::invalid_argument("null algebra");
    coeff_.assign(static_cast<std::size_t>(alg_->dim()), MultiPoly(reg_));
}

LieElement LieElement::basis_element(const FiniteLieAlgebra* alg, const Registry& reg,
                                     std::string_view label) {
    LieElement e(alg, reg);
    e.coeff_[static_cast<std::size_t>(alg->index_of(label))] =
        MultiPoly::constant(reg, Rational(1));
    return e;
}

const MultiPoly& LieElement::coeff(std::string_view label) const {
    return coeff_.at(static_cast<std::size_t>(alg_->index_of(label)));
}

void LieElement::set_coeff(std::string_view label, MultiPoly c) {
    coeff_.at(static_cast<std::size_t>(alg_->index_of(label))) = std::move(c);
}

bool LieElement::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

LieElement LieElement::operator+(const LieElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("algebra mismatch");
    LieElement out = *this;
    for (std::size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] += o.coeff_[i];
    return out;
}

LieElement LieElement::operator-(const LieElement& o) const { return *this + (-o); }

LieElement LieElement::operator-() const {
    LieElement out = *this;
    for (auto& c : out.coeff_) c = -c;
    return out;
}

LieElement LieElement::operator*(const MultiPoly& s) const {
    LieElement out = *this;
    for (auto& c : out.coeff_) c = c * s;
    return out;
}

LieElement LieElement::operator*(const Rational& s) const {
    LieElement out = *this;
    for (auto& c : out.coeff_) c = c * s;
    return out;
}

bool LieElement::operator==(const LieElement& o) const {
    return alg_ == o.alg_ && coeff_ == o.coeff_;
}

std::string LieElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (coeff_[i].is_one())
            os << alg_->label(static_cast<int>(i));
        else
            os << "(" << coeff_[i].to_string() << ")*" << alg_->label(static_cast<int>(i));
    }
    if (first) return "0";
    return os.str();
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.alg_ != y.alg_) throw std::invalid_argument("algebra mismatch");
    int n = x.alg_->dim();
    LieElement out(x.alg_, x.reg_);
    for (int i = 0; i < n; ++i) {
        if (x.coeff_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y.coeff_[static_cast<std::size_t>(j)].is_zero()) continue;
            std::vector<Rational> c = x.alg_->bracket(i, j);
            MultiPoly f = x.coeff_[static_cast<std::size_t>(i)] * y.coeff_[static_cast<std::size_t>(j)];
            for (int k = 0; k < n; ++k)
                if (c[static_cast<std::size_t>(k)] != 0)
                    out.coeff_[static_cast<std::size_t>(k)] += f * c[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

LieElement ad_exp(const LieElement& x, const LieElement& y, int nilpotency_bound) {
    LieElement acc = y;
    LieElement term = y;
    for (int k = 1; k <= nilpotency_bound; ++k) {
        term = bracket(x, term) * make_rational(1, k);
        if (term.is_zero()) return acc;
        acc = acc + term;
    }
    throw std::domain_error("ad-series did not terminate within bound");
}

MorphismReport check_morphism(const LieMorphism& phi) {
    if (!phi.source || !phi.target) throw std::invalid_argument("null algebra in morphism");
    int ns = phi.source->dim(), nt = phi.target->dim();
    if (static_cast<int>(phi.matrix.size()) != ns)
        throw std::invalid_argument("morphism matrix row count mismatch");
    for (const auto& row : phi.matrix)
        if (static_cast<int>(row.size()) != nt)
            throw std::invalid_argument("morphism matrix column count mismatch");

    MorphismReport rep;
    auto image = [&](const std::vector<Rational>& src_vec) {
        std::vector<Rational> out(static_cast<std::size_t>(nt), Rational(0));
        for (int i = 0; i < ns; ++i)
            for (int k = 0; k < nt; ++k)
                out[static_cast<std::size_t>(k)] +=
                    src_vec[static_cast<std::size_t>(i)] * phi.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        return out;
    };
    for (int i = 0; i < ns; ++i)
        for (int j = i + 1; j < ns; ++j) {
            ++rep.pairs_checked;
            std::vector<Rational> lhs = image(phi.source->bracket(i, j));
            // [phi(b_i), phi(b_j)] in the target.
            std::vector<Rational> rhs(static_cast<std::size_t>(nt), Rational(0));
            for (int p = 0; p < nt; ++p) {
                const Rational& a = phi.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
                if (a == 0) continue;
                for (int q = 0; q < nt; ++q) {
                    const Rational& b = phi.matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(q)];
                    if (b == 0) continue;
                    std::vector<Rational> c = phi.target->bracket(p, q);
                    for (int k = 0; k < nt; ++k)
                        rhs[static_cast<std::size_t>(k)] += a * b * c[static_cast<std::size_t>(k)];
                }
            }
            if (lhs != rhs)
                rep.failures.push_back({phi.source->label(i), phi.source->label(j),
                                        render_combination(lhs, phi.target->basis()),
                                        render_combination(rhs, phi.target->basis())});
        }
    QMatrix m(ns, nt);
    for (int i = 0; i < ns; ++i)
        for (int k = 0; k < nt; ++k) m.at(i, k) = phi.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    rep.rank = rank(m);
    rep.bijective = (ns == nt && rep.rank == ns);
    return rep;
}

int derived_subalgebra_dim(const FiniteLieAlgebra& g) {
    int n = g.dim();
    std::vector<std::vector<Rational>> vecs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) vecs.push_back(g.bracket(i, j));
    QMatrix m(static_cast<int>(vecs.size()), n);
    for (int r = 0; r < static_cast<int>(vecs.size()); ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = vecs[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return rank(m);
}

namespace {

// Bracket pattern shared by sl2-type families: [A_n, A_m] = (n-m) A_{n+m}
// and the spin-1 action [A_n, B_m] = (n-m) B_{n+m}, indices in {-1,0,1}.
void fill_graded_pairs(FiniteLieAlgebra& g, const std::string& fam_a, const std::string& fam_b) {
    auto lab = [](const std::string& fam, int n) { return fam + std::to_string(n); };
    for (int n = 1; n >= -1; --n)
        for (int m = 1; m >= -1; --m) {
            if (fam_a == fam_b && n <= m) continue;
            int c = n - m;
            if (c == 0) continue;
            int k = n + m;
            if (k < -1 || k > 1) continue;  // cannot happen with c != 0
            g.set_bracket(lab(fam_a, n), lab(fam_b, m),
                          {{lab(fam_b, k), Rational(c)}});
        }
}

}  // namespace

FiniteLieAlgebra alt_algebra() {
    FiniteLieAlgebra g("alt", {"Y1", "X1", "Y0", "X0", "Y-1", "X-1"});
    fill_graded_pairs(g, "X", "X");
    fill_graded_pairs(g, "X", "Y");
    return g;
}

FiniteLieAlgebra sl2_algebra() {
    FiniteLieAlgebra g("sl2", {"L1", "L0", "L-1"});
    fill_graded_pairs(g, "L", "L");
    return g;
}

FiniteLieAlgebra p3_algebra() {
    FiniteLieAlgebra g("p3", {"L1", "L0", "L-1", "P1", "P0", "P-1"});
    fill_graded_pairs(g, "L", "L");
    fill_graded_pairs(g, "L", "P");
    return g;
}

FiniteLieAlgebra heis3_algebra() {
    FiniteLieAlgebra g("heis3", {"p", "q", "z"});
    g.set_bracket("p", "q", {{"z", Rational(1)}});
    return g;
}

FiniteLieAlgebra abelian_algebra(int n) {
    if (n < 1) throw std::invalid_argument("abelian algebra needs dimension >= 1");
    std::vector<std::string> basis;
    for (int i = 1; i <= n; ++i) basis.push_back("a" + std::to_string(i));
    return FiniteLieAlgebra("abelian" + std::to_string(n), std::move(basis));
}

FiniteLieAlgebra conf_labeled_alt() {
    FiniteLieAlgebra alt = alt_algebra();
    // Dictionary: V+ = X1, D = X0, Y-1/2 = X-1, X1(conf) = Y1/2(alt basis
    // coefficient 1/2 on Y1), Y1/2 = Y0, M0 = Y-1.
    QMatrix t(6, 6);
    t.at(0, 1) = 1;                  // V+    = X1
    t.at(1, 3) = 1;                  // D     = X0
    t.at(2, 5) = 1;                  // Y-1/2 = X-1
    t.at(3, 0) = make_rational(1, 2);  // X1    = (1/2) Y1
    t.at(4, 2) = 1;                  // Y1/2  = Y0
    t.at(5, 4) = 1;                  // M0    = Y-1
    return transport(alt, t, {"V+", "D", "Y-1/2", "X1", "Y1/2", "M0"}, "alt_conf");
}

LieMorphism conf_alt_isomorphism(const FiniteLieAlgebra& source, const FiniteLieAlgebra& target,
                                 bool drop_half) {
    LieMorphism phi;
    phi.source = &source;
    phi.target = &target;
    int nt = target.dim();
    auto row = [&](const std::string& label, const Rational& c) {
        std::vector<Rational> v(static_cast<std::size_t>(nt), Rational(0));
        v[static_cast<std::size_t>(target.index_of(label))] = c;
        return v;
    };
    phi.matrix = {
        row("L1", Rational(1)),    // V+
        row("L0", Rational(1)),    // D
        row("L-1", Rational(1)),   // Y-1/2
        row("L1e", drop_half ? Rational(1) : make_rational(1, 2)),  // X1
        row("L0e", Rational(1)),   // Y1/2
        row("L-1e", Rational(1)),  // M0
    };
    return phi;
}

}  // namespace altkit
