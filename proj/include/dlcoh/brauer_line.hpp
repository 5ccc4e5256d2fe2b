#pragma once

// Line-shaped Brauer tree algebra with m edges and exceptional multiplicity r,
// realised through its projective indecomposables as quiver representations.
//
//   (exc) --m-- o --(m-1)-- o ... o --2-- o --1-- (trivial)
//
// Edges are the simples S_1..S_m (1-based throughout this header). Vertex
// chi_1 is the trivial end, chi_{m+1} the exceptional one.

#include <map>
#include <string>
#include <vector>

#include "dlcoh/partition.hpp"
#include "dlcoh/quiver_rep.hpp"
#include "dlcoh/report.hpp"

namespace dlcoh {

struct ProjectiveData {
    Rep rep;
    std::vector<int> vertex;              // 0-based vertex of each basis element
    std::vector<int> local;               // index of the element inside its vertex space
    std::vector<std::vector<int>> paths;  // arrow path from the top generator
    std::vector<int> socle_path;
};

class BrauerLine {
public:
    int m() const { return m_; }
    int r() const { return r_; }
    Matrix::Scalar p() const { return p_; }
    const QuiverPtr& quiver() const { return q_; }

    const Rep& projective(int i) const { return data(i).rep; }
    const ProjectiveData& data(int i) const;
    Rep simple(int i) const;
    Rep trivial() const { return simple(1); }

    int arrow_up(int i) const { return 2 * (i - 1); }        // i -> i+1
    int arrow_down(int i) const { return 2 * (i - 1) + 1; }  // i+1 -> i
    int loop() const { return loop_; }                       // -1 when absent

    // The socle element of P_v acting on the v-component of M.
    Matrix socle_action(const Rep& M, int v) const;
    // The map P_v -> M sending the top generator to vec (a column in M_v).
    RepMap map_from_projective(int v, const Rep& M, const Matrix& vec) const;

    std::string picture() const;

private:
    friend BrauerLine build_line(int m, int r, Matrix::Scalar p);
    int m_ = 1, r_ = 1, loop_ = -1;
    Matrix::Scalar p_ = 2;
    QuiverPtr q_;
    std::vector<ProjectiveData> proj_;
};

// Throws ModelViolation if the End/Hom dimension table comes out wrong.
BrauerLine build_line(int m, int r, Matrix::Scalar p = 2);

// Hom dimension table between projectives, [t-1][s-1] = dim Hom(P_t, P_s).
std::vector<std::vector<int>> projective_hom_table(const BrauerLine& line);
Report line_invariants(const BrauerLine& line);

// Composition multiplicities, index i-1 for S_i.
std::vector<int> composition_factors(const Rep& M);

struct Cover {
    Rep P;
    RepMap map;
    std::vector<int> summands;  // projective indices, ascending
};
Cover projective_cover(const BrauerLine& line, const Rep& M);
Rep syzygy(const BrauerLine& line, const Rep& M);
// i = 0 strips projective summands.
Rep syzygy_power(const BrauerLine& line, const Rep& M, int i);
// Omega^{-1} via periodicity: Omega^{2m-1}.
Rep cosyzygy(const BrauerLine& line, const Rep& M);

std::vector<int> projective_multiplicities(const BrauerLine& line, const Rep& M);
Rep strip_projective(const BrauerLine& line, const Rep& M);

bool reps_isomorphic(const Rep& M, const Rep& N);

Report omega2_interior_shape(const BrauerLine& line, int i);

struct EdgeLabels {
    std::map<int, Partition> pinned;
    std::vector<int> unresolved;
};
// Needs m <= n < 2m.
EdgeLabels edge_partition_labels(int n, int m);

}  // namespace dlcoh
