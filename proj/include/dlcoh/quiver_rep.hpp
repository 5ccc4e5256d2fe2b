#pragma once

// Finite-dimensional quiver representations over F_p.
// Vertices are 0-based here; the Brauer line layer translates to 1..m.

#include <memory>
#include <string>
#include <vector>

#include "dlcoh/fp_matrix.hpp"

namespace dlcoh {

struct Arrow {
    int src = 0;
    int tgt = 0;
    std::string name;
};

struct Quiver {
    int vertices = 0;
    std::vector<Arrow> arrows;
    std::vector<int> arrows_out(int v) const;
    std::vector<int> arrows_in(int v) const;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

class Rep {
public:
    Rep() = default;
    Rep(QuiverPtr q, std::vector<int> dims, Matrix::Scalar p);  // zero arrow maps

    const QuiverPtr& quiver() const { return q_; }
    Matrix::Scalar prime() const { return p_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[static_cast<std::size_t>(v)]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    const Matrix& arrow(int a) const { return maps_[static_cast<std::size_t>(a)]; }
    void set_arrow(int a, Matrix m);
    void check() const;

    // Product of arrow matrices along a path (first arrow applied first).
    Matrix path_matrix(const std::vector<int>& path, int start) const;

    std::string describe() const;  // "dims [1,2,0]"

private:
    QuiverPtr q_;
    Matrix::Scalar p_ = 2;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

// Per-vertex linear maps M_v -> N_v.
struct RepMap {
    std::vector<Matrix> comps;

    bool is_zero() const;
    RepMap operator+(const RepMap& o) const;
    RepMap operator-(const RepMap& o) const;
    RepMap scaled(std::int64_t c) const;
    bool operator==(const RepMap& o) const = default;
};

RepMap zero_map(const Rep& M, const Rep& N);
RepMap identity_map(const Rep& M);
RepMap compose(const RepMap& g, const RepMap& f);  // g o f
bool is_homomorphism(const RepMap& f, const Rep& M, const Rep& N);
bool is_injective(const RepMap& f);
bool is_surjective(const RepMap& f, const Rep& N);

// Hom_Q(M, N) with coordinates: a map's coordinate vector is its list of
// entries at the free positions of the flattened solve.
struct HomSpace {
    std::vector<RepMap> basis;
    std::vector<std::size_t> free_positions;
    std::vector<int> src_dims, tgt_dims;

    std::size_t dim() const { return basis.size(); }
    std::vector<Matrix::Scalar> coords(const RepMap& f) const;
    RepMap combination(const std::vector<Matrix::Scalar>& c, Matrix::Scalar p) const;
};

HomSpace hom_space(const Rep& M, const Rep& N);
std::vector<RepMap> hom_basis(const Rep& M, const Rep& N);

// Per-vertex subspaces, given by basis columns.
using Spans = std::vector<Matrix>;

struct SubRep {
    Rep rep;
    RepMap inclusion;  // rep -> ambient
};

struct QuotientRep {
    Rep rep;
    RepMap projection;  // ambient -> rep
};

bool is_subrep(const Rep& M, const Spans& U);
SubRep subrep(const Rep& M, const Spans& U);
QuotientRep quotient(const Rep& M, const Spans& U);

Spans kernel_spans(const RepMap& f, const Rep& M);
Spans image_spans(const RepMap& f, const Rep& N);
Spans sum_spans(const Spans& a, const Spans& b);
std::vector<int> span_dims(const Spans& U);

Spans radical_spans(const Rep& M);
Spans socle_spans(const Rep& M);
std::vector<int> top_dims(const Rep& M);
std::vector<int> socle_dims(const Rep& M);

struct DirectSum {
    Rep rep;
    std::vector<RepMap> inclusions;
    std::vector<RepMap> projections;
};
DirectSum direct_sum(const std::vector<Rep>& parts, const QuiverPtr& q, Matrix::Scalar p);

}  // namespace dlcoh
