#pragma once

// Closed-form cohomology of the varieties X_{n,d} with unipotent coefficients.

#include <optional>
#include <string>
#include <vector>

#include "dlcoh/characters.hpp"
#include "dlcoh/report.hpp"

namespace dlcoh {

enum class Normalization { X, C };

struct RingTag {
    enum class Kind { CharZero, Integral, Modular } kind = Kind::CharZero;
    int m = 0;  // only for Modular
    std::string to_string() const;
};

// Shape of the single non-simple cohomology module of a modular table.
struct ModularStructure {
    int degree = 0;            // where the module sits (table normalization)
    int eigen_exp = 0;
    int omega_exponent = 0;    // the module is Omega^k of the trivial module
    int socle_edge = 0;        // edge of the Brauer line carrying the socle
    int other_edge = 0;
    Partition socle_label;     // label of the socle simple
    std::optional<Partition> other_label;  // unresolved when n > m
};

struct CohomologyTable {
    int n = 0;
    int d = 0;
    Partition mu;
    Normalization normalization = Normalization::X;
    RingTag ring;
    GradedChar table;
    Report cross_checks;  // consistency checks run while building the table
    std::optional<ModularStructure> modular_structure;
    bool unverified_override = false;
};

CohomologyTable cohomology_with_coeffs(int n, int d, const Partition& mu);
// Explicit beta-set size; must be at least mu.length() + d.
CohomologyTable cohomology_with_coeffs(int n, int d, const Partition& mu, int beta_size);

// Trivial coefficients; the grouped closed form must agree with the hook
// computation (Inconsistency otherwise). The zero-count claim is recorded in
// cross_checks.
CohomologyTable cohomology_trivial_table(int n, int d);

CohomologyTable to_C_normalization(const CohomologyTable& t);
CohomologyTable to_X_normalization(const CohomologyTable& t);

// Degrees in [lowest, top] without any entry.
std::vector<int> zero_degrees(const CohomologyTable& t);

enum class Gate { Guaranteed, RemarkException, NotGuaranteed };
Gate torsion_free_gate(int n, int d, int m);
std::string to_string(Gate g);

// C-degrees. Without assume_torsion_free a not-guaranteed gate throws
// PreconditionViolation; the closed forms themselves need m > d and m > n-d+1.
CohomologyTable cohomology_mod_ell(int n, int d, int m, bool assume_torsion_free = false);

CohomologyTable eigen_cut(const CohomologyTable& t, int m, int e);

// Euler-characteristic form of the restriction triangle, per eigenvalue exponent.
Report les_euler_check(int n, int d, const Partition& mu);

Report table_invariants(int n, int d);

}  // namespace dlcoh
