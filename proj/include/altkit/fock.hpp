#pragma once

#include <map>
#include <utility>

#include "altkit/lie.hpp"

namespace altkit {

/// Finitely supported combination of the states |jk> with polynomial
/// coefficients in beta, gamma, x.
class FockVector {
public:
    explicit FockVector(Registry reg) : reg_(std::move(reg)) {}
    static FockVector vacuum(const Registry& reg);

    const Registry& registry() const { return reg_; }
    const std::map<std::pair<int, int>, MultiPoly>& components() const { return comp_; }
    MultiPoly coeff(int j, int k) const;
    void add(int j, int k, const MultiPoly& c);

    bool is_zero() const { return comp_.empty(); }
    long max_level() const;  // largest j+k in the support

    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    FockVector operator*(const MultiPoly& s) const;
    FockVector operator*(const Rational& s) const;
    bool operator==(const FockVector& o) const;
    std::string to_string() const;

private:
    Registry reg_;
    std::map<std::pair<int, int>, MultiPoly> comp_;
};

/// Normal-ordering engine: applies alt elements to states by commuting
/// letters through the raising word until they reach the vacuum, where
/// the rules Y1*|00> = |10>, X1*|00> = |01>, Y0*|00> = -gamma|00>,
/// X0*|00> = -x|00>, Y-1*|00> = X-1*|00> = 0 apply. Memoizes per-letter
/// actions, so keep one engine per batch of work.
class FockEngine {
public:
    FockEngine(const FiniteLieAlgebra& alt, Registry reg);

    FockVector apply(const LieElement& g, const FockVector& s);
    /// Iterated application of a word, rightmost letter first.
    FockVector apply_word(const std::vector<LieElement>& word, const FockVector& s);

private:
    FockVector apply_letter(int letter, int j, int k);

    const FiniteLieAlgebra& alt_;
    Registry reg_;
    int y1_, x1_;  // raising letter indices
    std::map<std::tuple<int, int, int>, FockVector> cache_;
};

/// One-shot convenience wrapper around FockEngine.
FockVector fock_apply(const LieElement& g, const FockVector& s);

/// The commuting pair conjugated by exp(beta X-1):
///   Ybar1 = Y1 - 2 beta Y0 + beta^2 Y-1,
///   Xbar1 = X1 - 2 beta X0 + beta^2 X-1.
/// Computed by the ad-exponential series and checked to commute.
std::pair<LieElement, LieElement> turned_pair(const FiniteLieAlgebra& alt, const Registry& reg,
                                              const MultiPoly& beta);

struct AppellTable {
    int max_j = 0, max_k = 0;
    std::map<std::pair<int, int>, MultiPoly> h;

    const MultiPoly& at(int j, int k) const;
};

/// Canonical polynomials h_{jk}(y1, y2): expand the turned-pair words
/// over the states (unit-triangular by level), invert, and read each
/// |jk> in the realization y1^a y2^b <-> Ybar1^a Xbar1^b |00>.
AppellTable appell_table(const FiniteLieAlgebra& alt, int max_j, int max_k);

}  // namespace altkit
