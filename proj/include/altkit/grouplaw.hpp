#pragma once

#include <string>
#include <vector>

#include "altkit/matrix4.hpp"

namespace altkit {

/// The six generator matrices in the basis order Y1, X1, Y0, X0, Y-1,
/// X-1. The degree-one matrices are fixed data; X0 and Y0 come from
/// bracket closure: X0 = [X1, X-1]/2 and Y0 = [X1, Y-1]/2.
struct GeneratorMatrixTable {
    std::vector<Matrix4> m;  // indexed like the alt basis

    const Matrix4& of(const std::string& label) const;
};

GeneratorMatrixTable rep4(const Registry& reg);

struct Rep4Report {
    int pairs_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// All 15 commutator pairs of rep4 against the alt structure constants.
Rep4Report verify_rep4(const Registry& reg);

/// exp(B1 Y-1 + B2 X-1) * exp(V1 Y1 + V2 X1) with symbolic entries.
Matrix4 partial_product(const Registry& reg);

/// Coordinates of the second kind. The fourth coordinate is carried as
/// lambda = e^{A4/2}; A4 itself is only ever displayed as 2*log(lambda).
struct SecondKindCoords {
    RationalFunction a1, a2, a3, lambda, a5, a6;

    std::string a4_token() const { return "2*log(" + lambda.to_string() + ")"; }
};

/// Solve the triangular entry system for the second-kind coordinates of
/// a chart matrix and verify by re-exponentiation. Rejects matrices
/// outside the chart pattern, naming the offending entry.
SecondKindCoords factor_second_kind(const Matrix4& g);

/// exp(A1 Y1) exp(A2 X1) exp(A3 Y0) exp(A4 X0) exp(A5 Y-1) exp(A6 X-1).
Matrix4 re_exponentiate(const SecondKindCoords& coords, const Registry& reg);

struct CoordinateVerdict {
    std::string name;     // A1..A6
    std::string printed;  // published closed form
    std::string oracle;   // machine-derived value
    std::string verdict;  // match | typo-suspected | undecided
    std::string note;
};

struct LeibnizReport {
    std::vector<CoordinateVerdict> coordinates;
    bool roundtrip_ok = false;           // re-exponentiation reproduces the product
    bool genfu_specialization_ok = false;  // B1=0, B2=beta factor comparison
    std::vector<std::string> genfu_factors;
    std::vector<std::string> notes;
};

/// Machine comparison of each published second-kind coordinate against
/// the re-exponentiation oracle, plus the B1=0, B2=beta specialization
/// used by the generating function.
LeibnizReport leibniz_discrepancy_report();

}  // namespace altkit
