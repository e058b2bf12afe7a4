#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "altkit/linalg.hpp"
#include "altkit/multipoly.hpp"

namespace altkit {

/// Finite-dimensional Lie algebra given by structure constants on an
/// ordered basis. Only pairs i < j are stored; antisymmetry is implicit.
/// Nothing here assumes the Jacobi identity: jacobi_check verifies it.
class FiniteLieAlgebra {
public:
    FiniteLieAlgebra(std::string name, std::vector<std::string> basis);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::string& label(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
    int index_of(std::string_view label) const;

    /// [b_i, b_j] as a coefficient vector; any index order.
    std::vector<Rational> bracket(int i, int j) const;

    void set_bracket(int i, int j, std::vector<Rational> coeffs);
    void set_bracket(std::string_view bi, std::string_view bj,
                     const std::map<std::string, Rational>& coeffs);

    /// Copy with one structure constant replaced (for tamper tests).
    FiniteLieAlgebra with_bracket(std::string_view bi, std::string_view bj,
                                  const std::map<std::string, Rational>& coeffs) const;

    /// Stored nonzero pairs (i < j) in deterministic order.
    std::vector<std::pair<int, int>> nonzero_pairs() const;

private:
    std::string name_;
    std::vector<std::string> basis_;
    std::map<std::pair<int, int>, std::vector<Rational>> c_;  // keys i < j
};

struct JacobiFailure {
    std::string a, b, c;   // triple labels
    std::string residual;  // nonzero jacobiator, rendered
};

struct JacobiReport {
    std::string algebra;
    long triples_checked = 0;
    std::vector<JacobiFailure> failures;
    bool ok() const { return failures.empty(); }
};

JacobiReport jacobi_check(const FiniteLieAlgebra& g);

/// g ⊗ R[eps]/eps^2: doubled basis (b, b~e) with [a, b~e] = [a,b]~e and
/// [a~e, b~e] = 0.
FiniteLieAlgebra grassmann_double(const FiniteLieAlgebra& g, const std::string& suffix = "e");

/// Change of basis: rows of t are new basis vectors in old coordinates.
/// Throws when t is singular.
FiniteLieAlgebra transport(const FiniteLieAlgebra& g, const QMatrix& t,
                           std::vector<std::string> new_basis, std::string new_name);

/// Element with polynomial coefficients, so symbolic scalars like beta
/// can multiply basis vectors. The algebra must outlive the element.
class LieElement {
public:
    LieElement(const FiniteLieAlgebra* alg, Registry reg);
    static LieElement basis_element(const FiniteLieAlgebra* alg, const Registry& reg,
                                    std::string_view label);

    const FiniteLieAlgebra* algebra() const { return alg_; }
    const Registry& registry() const { return reg_; }
    const MultiPoly& coeff(int i) const { return coeff_.at(static_cast<std::size_t>(i)); }
    const MultiPoly& coeff(std::string_view label) const;
    void set_coeff(std::string_view label, MultiPoly c);

    bool is_zero() const;
    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator-() const;
    LieElement operator*(const MultiPoly& s) const;
    LieElement operator*(const Rational& s) const;
    bool operator==(const LieElement& o) const;

    std::string to_string() const;

private:
    friend LieElement bracket(const LieElement&, const LieElement&);
    const FiniteLieAlgebra* alg_;
    Registry reg_;
    std::vector<MultiPoly> coeff_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

/// e^{ad_x} y for ad-nilpotent x: sum of ad_x^k(y)/k!. Throws when the
/// series has not terminated within the given bound.
LieElement ad_exp(const LieElement& x, const LieElement& y, int nilpotency_bound = 8);

/// Linear map between algebras: row i is the image of source basis i
/// in target coordinates. Bracket preservation is checked, never assumed.
struct LieMorphism {
    const FiniteLieAlgebra* source = nullptr;
    const FiniteLieAlgebra* target = nullptr;
    std::vector<std::vector<Rational>> matrix;
};

struct MorphismFailure {
    std::string a, b;  // source pair labels
    std::string image_of_bracket, bracket_of_images;
};

struct MorphismReport {
    int pairs_checked = 0;
    std::vector<MorphismFailure> failures;
    int rank = 0;
    bool bijective = false;
    bool preserves_brackets() const { return failures.empty(); }
    bool ok() const { return preserves_brackets() && bijective; }
};

MorphismReport check_morphism(const LieMorphism& phi);

/// Dimension of the span of all [b_i, b_j]; equals dim for perfect algebras.
int derived_subalgebra_dim(const FiniteLieAlgebra& g);

// Registered constructions.
FiniteLieAlgebra alt_algebra();       // Y1 X1 Y0 X0 Y-1 X-1
FiniteLieAlgebra sl2_algebra();       // L1 L0 L-1
FiniteLieAlgebra p3_algebra();        // sl2 acting on its adjoint copy P
FiniteLieAlgebra heis3_algebra();     // [p, q] = z
FiniteLieAlgebra abelian_algebra(int n);
/// alt in conformal-embedding labels (V+, D, Y-1/2, X1c, Y1/2, M0),
/// obtained by transporting alt through the label dictionary.
FiniteLieAlgebra conf_labeled_alt();
/// The isomorphism from conf-labeled alt onto grassmann_double(sl2);
/// drop_half replaces the 1/2 factor on X1c by 1 (a broken control map).
LieMorphism conf_alt_isomorphism(const FiniteLieAlgebra& source, const FiniteLieAlgebra& target,
                                 bool drop_half = false);

}  // namespace altkit
