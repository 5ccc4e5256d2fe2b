#pragma once

// Homotopy-category Hom between complexes of projectives, the truncated
// resolution E, and the model of the principal-block summand D.

#include <map>
#include <optional>
#include <string>

#include "dlcoh/complex.hpp"
#include "dlcoh/report.hpp"

namespace dlcoh {

// The first 2m-j+1 terms of the minimal resolution of S_1, in degrees [-(2m-j), 0].
ProjComplex truncated_E(const BrauerLine& line, int j);
Report truncated_E_report(const BrauerLine& line, int j);

struct HomDimTable {
    std::map<int, int> dims;  // shift a -> dim Hom_K(C, D[a]); only shifts with possible support
    int at(int a) const;
};

HomDimTable hom_k_dims(const ProjComplex& C, const ProjComplex& D);

struct TiltingVerdict {
    bool partial_tilting = false;
    HomDimTable table;
    std::optional<int> witness_shift;
    std::string witness;  // support of a non-null-homotopic chain map
};
TiltingVerdict is_partial_tilting(const ProjComplex& C);

// Chain maps E -> E[a]: cycles of the Hom complex, their adjacency pattern
// (for |a| > 1) and whether each is null-homotopic.
Report chain_map_shapes(const ProjComplex& E, int a);

struct DModel {
    ProjComplex complex;
    int j = 0;
    int printed_j = 0;  // m - n + d
    int alpha = 0;      // top degree 4n-2d-2
    int beta = 0;       // bottom degree 3n-d-1-m
    Report report;
};
DModel build_D_model(int n, int d, int m, int r, Matrix::Scalar p = 2, bool assume_torsion_free = false);

// Two cohomology degrees t < s: H^t must be Omega^{s-t+1} H^s after removing
// projective summands.
Report verify_two_term(const ProjComplex& C);

Report full_complex_model(int n, int d, int m, int r, Matrix::Scalar p = 2, bool assume_torsion_free = false);

}  // namespace dlcoh
