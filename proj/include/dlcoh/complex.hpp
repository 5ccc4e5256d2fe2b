#pragma once

// Bounded complexes of projective modules over a Brauer line.

#include <string>
#include <vector>

#include "dlcoh/brauer_line.hpp"

namespace dlcoh {

class ProjComplex {
public:
    ProjComplex() = default;
    // summands[k] lists the projectives in degree lo+k; diffs[k] maps degree
    // lo+k to lo+k+1. Verifies d o d = 0 and that every differential is a map.
    ProjComplex(BrauerLine line, int lo, std::vector<std::vector<int>> summands, std::vector<RepMap> diffs);

    const BrauerLine& line() const { return line_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
    int length() const { return static_cast<int>(terms_.size()); }
    bool has(int deg) const { return deg >= lo_ && deg <= hi(); }

    const Rep& term(int deg) const;
    const std::vector<int>& summands(int deg) const;
    // deg -> deg+1
    const RepMap& diff(int deg) const;

    // C[a]: degree i holds C^{i+a}; differentials pick up (-1)^a.
    ProjComplex shifted(int a) const;

    Rep cohomology(int deg) const;
    std::vector<int> cohomology_degrees() const;

    std::string describe() const;  // "P5 -> P5 -> P4 -> ... (degrees -5..0)"

private:
    BrauerLine line_;
    int lo_ = 0;
    std::vector<std::vector<int>> summands_;
    std::vector<Rep> terms_;
    std::vector<RepMap> diffs_;
};

// Minimal projective resolution of S_1, L terms, in degrees -(L-1)..0.
ProjComplex resolution_of_trivial(const BrauerLine& line, int L);

// True iff every differential lands in the radical of its target.
bool is_minimal(const ProjComplex& C);

}  // namespace dlcoh
