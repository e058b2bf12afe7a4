#pragma once

#include <string>
#include <vector>

#include "altkit/fock.hpp"
#include "altkit/series.hpp"

namespace altkit {

/// Generating function for the canonical polynomials, expanded in v1, v2
/// with coefficients in y1, y2, beta, gamma, x. Rebuilt from the group
/// law (not transcribed): exp(y1 v1/(1+b v2)^2) exp(y2 v2/(1+b v2))
/// exp(-2 g b v1/(1+b v2)) (1+b v2)^(-2x).
struct GenFunction {
    TruncatedSeries series;
};

GenFunction genfun_expand(long cap);

struct GenFunFactor {
    std::string name;
    bool matches_printed = false;
};

struct GenFunFactorReport {
    std::vector<GenFunFactor> factors;
    bool third_factor_matches = false;  // printed has (1-beta*v2) in the third factor
};

/// Factor-by-factor comparison of the rebuilt generating function
/// against the published factorization.
GenFunFactorReport genfun_factor_comparison(long cap);

struct ConsistencyReport {
    int max_total = 0;
    long cap = 0;
    long pairs_checked = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Dual-route comparison: j! k! [v1^j v2^k] of the generating function
/// against the triangular-inversion table, for all j + k <= max_total.
ConsistencyReport consistency_check(int max_total, long cap);

/// k! (-beta)^k L_k^{(2x-1)}(y2/beta), homogenized into a polynomial.
/// L_k comes from the classical three-term recurrence and nothing else.
MultiPoly laguerre_scaled(int k);

struct LaguerreHermiteReport {
    int order = 0;
    long laguerre_checked = 0;
    std::vector<std::string> laguerre_mismatches;
    long power_checked = 0;
    std::vector<std::string> power_mismatches;
    bool hermite_claim_reproduced = false;
    std::string hermite_note;
    bool ok() const { return laguerre_mismatches.empty() && power_mismatches.empty(); }
};

/// v1 = 0 branch: h_{0k} against the Laguerre recurrence oracle.
/// v2 = 0 branch: h_{j0} against (y1 - 2 gamma beta)^j, with the
/// classical-family flag raised since pure shifted powers are all that
/// the computation produces.
LaguerreHermiteReport laguerre_hermite_specialize(int order);

}  // namespace altkit
