#pragma once

#include <string>
#include <vector>

#include "altkit/graded.hpp"

namespace altkit {

/// The rescaled family inside two commuting centrally-extendable copies:
///   L_n(eps) = l_n + lb_n,   M_n(eps) = eps (l_n - lb_n).
/// At eps = 1 this is an invertible change of basis; at eps = 0 the
/// family degenerates onto the doubled-circle brackets.
struct ContractionFamily {
    Rational c = 0;     // charge on the first copy
    Rational cbar = 0;  // charge on the second copy
};

struct ContractionReport {
    long window = 0;
    bool ll_exact = false;       // [L_n, L_m] = (n-m) L_{n+m} for all eps
    bool lm_exact = false;       // [L_n, M_m] = (n-m) M_{n+m} for all eps
    bool mm_quadratic = false;   // [M_n, M_m] = eps^2 (n-m) L_{n+m}
    bool no_linear_eps = false;  // structure constants have no eps^1 part
    bool limit_is_w = false;     // eps -> 0 reproduces the doubled brackets
    bool invertible_at_one = false;
    bool degenerate_at_zero = false;
    std::vector<std::string> central_terms;  // raw central components, when charged
    std::vector<std::string> failures;
    bool ok() const {
        return ll_exact && lm_exact && mm_quadratic && no_linear_eps && limit_is_w &&
               invertible_at_one && degenerate_at_zero && failures.empty();
    }
};

/// Symbolic structure constants of the rescaled family over |n|,|m| <= window,
/// their eps^2 form, and the eps -> 0 limit against the doubled brackets.
ContractionReport contraction_limit(long window, const ContractionFamily& family = {});

}  // namespace altkit
