#pragma once

#include <functional>
#include <map>
#include <utility>

#include "altkit/graded.hpp"
#include "altkit/multipoly.hpp"
#include "altkit/rational.hpp"

namespace altkit {

/// Differential operator in d/dt and d/dr with coefficients that are
/// Laurent in t and polynomial in r and the symbolic parameters.
/// Canonical form keeps coefficients to the left of the derivatives
/// with multi-indices merged, so equality is coefficient-wise.
class DiffOp {
public:
    explicit DiffOp(Registry reg) : reg_(std::move(reg)) {}
    static DiffOp term(const MultiPoly& coeff, int dt_order = 0, int dr_order = 0);

    const Registry& registry() const { return reg_; }
    const std::map<std::pair<int, int>, MultiPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    MultiPoly coeff(int dt_order, int dr_order) const;

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator-() const;
    /// Operator composition (this applied after... this first in writing:
    /// (A*B) means A then B acts first, i.e. A∘B).
    DiffOp operator*(const DiffOp& o) const;
    DiffOp operator*(const MultiPoly& s) const;  // scale coefficients
    DiffOp operator*(const Rational& s) const;

    bool operator==(const DiffOp& o) const;
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    DiffOp substituted(std::string_view name, const MultiPoly& value) const;

    std::string to_string() const;

private:
    void add_term(const std::pair<int, int>& key, const MultiPoly& c);

    Registry reg_;
    std::map<std::pair<int, int>, MultiPoly> terms_;
};

DiffOp commutator(const DiffOp& a, const DiffOp& b);

enum class RepMode { printed, calibrated };

/// The two operator families. The r d/dr coefficient carries +(n+1) in
/// printed mode and -(n+1) in calibrated mode.
DiffOp rep_L(const Registry& reg, long n, RepMode mode);
DiffOp rep_Le(const Registry& reg, long n);
/// rep_L with the r d/dr coefficient a*(n+1), a left symbolic.
DiffOp rep_L_ansatz(const Registry& reg, long n);

struct RepResidual {
    std::string a, b;  // generator names
    std::string residual;
};

struct RepCheckReport {
    std::string rule;
    std::string mode;
    long window = 0;
    long pairs_checked = 0;
    std::vector<RepResidual> residuals;
    bool ok() const { return residuals.empty(); }
};

/// Residuals [rep(x), rep(y)] - rep([x, y]) over all window pairs.
using RepFn = std::function<DiffOp(const GenId&)>;
RepCheckReport verify_rep_against_rule(const RepFn& rep, const GradedBracketRule& rule,
                                       const Registry& reg, long window);

/// The two families above against the doubled-circle brackets.
RepCheckReport verify_representation(long window, RepMode mode);

struct CalibrationResult {
    enum class Kind { empty, singleton, all };
    Kind kind = Kind::empty;
    Rational value;  // meaningful for singleton
    long window = 0;
    std::vector<std::string> notes;
};

/// Solves for the scalar a in the r d/dr ansatz so that every window
/// residual vanishes.
CalibrationResult calibrate_rep(long window);
/// Same solver against an arbitrary rule and an ansatz using the
/// symbol "a" in its coefficients.
CalibrationResult calibrate_against(const RepFn& ansatz, const GradedBracketRule& rule,
                                    const Registry& reg, long window);

struct Matrix2Report {
    long window = 0;
    long pairs_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// 2x2 block form: L_n on the diagonal, L_n~e strictly upper. Matrix
/// commutators with circle-bracket entries must reproduce the doubled
/// brackets.
Matrix2Report matrix2x2_check(long window);

}  // namespace altkit
