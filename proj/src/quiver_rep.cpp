#include "dlcoh/quiver_rep.hpp"

#include <numeric>

#include "dlcoh/errors.hpp"

namespace dlcoh {

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

Matrix row_block(const Matrix& a, std::size_t start, std::size_t count) {
    Matrix out(count, a.cols(), a.prime());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(start + i, j));
    return out;
}

}  // namespace

std::vector<int> Quiver::arrows_out(int v) const {
    std::vector<int> out;
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].src == v) out.push_back(static_cast<int>(a));
    return out;
}

std::vector<int> Quiver::arrows_in(int v) const {
    std::vector<int> out;
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].tgt == v) out.push_back(static_cast<int>(a));
    return out;
}

Rep::Rep(QuiverPtr q, std::vector<int> dims, Matrix::Scalar p) : q_(std::move(q)), p_(p), dims_(std::move(dims)) {
    if (static_cast<int>(dims_.size()) != q_->vertices) throw InvalidArgument("dimension vector has the wrong length");
    for (const auto& a : q_->arrows) maps_.emplace_back(uz(dims_[uz(a.tgt)]), uz(dims_[uz(a.src)]), p_);
}

int Rep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

void Rep::set_arrow(int a, Matrix m) {
    const auto& arr = q_->arrows[uz(a)];
    if (m.rows() != uz(dim(arr.tgt)) || m.cols() != uz(dim(arr.src)))
        throw ModelViolation("arrow matrix shape mismatch for " + arr.name);
    maps_[uz(a)] = std::move(m);
}

void Rep::check() const {
    for (std::size_t a = 0; a < maps_.size(); ++a) {
        const auto& arr = q_->arrows[a];
        if (maps_[a].rows() != uz(dim(arr.tgt)) || maps_[a].cols() != uz(dim(arr.src)))
            throw ModelViolation("arrow matrix shape mismatch for " + arr.name);
    }
}

Matrix Rep::path_matrix(const std::vector<int>& path, int start) const {
    Matrix m = Matrix::identity(uz(dim(start)), p_);
    int at = start;
    for (int a : path) {
        if (q_->arrows[uz(a)].src != at) throw InvalidArgument("path is not composable");
        m = maps_[uz(a)] * m;
        at = q_->arrows[uz(a)].tgt;
    }
    return m;
}

std::string Rep::describe() const {
    std::string s = "dims [";
    for (std::size_t i = 0; i < dims_.size(); ++i) s += (i ? "," : "") + std::to_string(dims_[i]);
    return s + "]";
}

bool RepMap::is_zero() const {
    for (const auto& c : comps)
        if (!c.is_zero()) return false;
    return true;
}

RepMap RepMap::operator+(const RepMap& o) const {
    RepMap out;
    for (std::size_t v = 0; v < comps.size(); ++v) out.comps.push_back(comps[v] + o.comps[v]);
    return out;
}

RepMap RepMap::operator-(const RepMap& o) const {
    RepMap out;
    for (std::size_t v = 0; v < comps.size(); ++v) out.comps.push_back(comps[v] - o.comps[v]);
    return out;
}

RepMap RepMap::scaled(std::int64_t c) const {
    RepMap out;
    for (const auto& m : comps) out.comps.push_back(m.scaled(c));
    return out;
}

RepMap zero_map(const Rep& M, const Rep& N) {
    RepMap f;
    for (int v = 0; v < M.quiver()->vertices; ++v) f.comps.emplace_back(uz(N.dim(v)), uz(M.dim(v)), M.prime());
    return f;
}

RepMap identity_map(const Rep& M) {
    RepMap f;
    for (int v = 0; v < M.quiver()->vertices; ++v) f.comps.push_back(Matrix::identity(uz(M.dim(v)), M.prime()));
    return f;
}

RepMap compose(const RepMap& g, const RepMap& f) {
    RepMap out;
    for (std::size_t v = 0; v < f.comps.size(); ++v) out.comps.push_back(g.comps[v] * f.comps[v]);
    return out;
}

bool is_homomorphism(const RepMap& f, const Rep& M, const Rep& N) {
    const auto& q = *M.quiver();
    for (int v = 0; v < q.vertices; ++v)
        if (f.comps[uz(v)].rows() != uz(N.dim(v)) || f.comps[uz(v)].cols() != uz(M.dim(v))) return false;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& arr = q.arrows[a];
        const int ai = static_cast<int>(a);
        if (!(N.arrow(ai) * f.comps[uz(arr.src)] == f.comps[uz(arr.tgt)] * M.arrow(ai))) return false;
    }
    return true;
}

bool is_injective(const RepMap& f) {
    for (const auto& c : f.comps)
        if (rank(c) != c.cols()) return false;
    return true;
}

bool is_surjective(const RepMap& f, const Rep& N) {
    for (std::size_t v = 0; v < f.comps.size(); ++v)
        if (rank(f.comps[v]) != uz(N.dim(static_cast<int>(v)))) return false;
    return true;
}

std::vector<Matrix::Scalar> HomSpace::coords(const RepMap& f) const {
    std::vector<Matrix::Scalar> flat;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        const auto& c = f.comps[v];
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) flat.push_back(c(i, j));
    }
    std::vector<Matrix::Scalar> out;
    for (auto pos : free_positions) out.push_back(flat[pos]);
    return out;
}

RepMap HomSpace::combination(const std::vector<Matrix::Scalar>& c, Matrix::Scalar p) const {
    RepMap out;
    for (std::size_t v = 0; v < src_dims.size(); ++v) out.comps.emplace_back(uz(tgt_dims[v]), uz(src_dims[v]), p);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (c[k] != 0) out = out + basis[k].scaled(c[k]);
    return out;
}

HomSpace hom_space(const Rep& M, const Rep& N) {
    const auto& q = *M.quiver();
    const auto p = M.prime();
    HomSpace hs;
    hs.src_dims = M.dims();
    hs.tgt_dims = N.dims();
    std::vector<std::size_t> offset(uz(q.vertices) + 1, 0);
    for (int v = 0; v < q.vertices; ++v) offset[uz(v) + 1] = offset[uz(v)] + uz(N.dim(v) * M.dim(v));
    const std::size_t nvars = offset.back();
    if (nvars == 0) return hs;
    auto var = [&](int v, int i, int j) { return offset[uz(v)] + uz(i * M.dim(v) + j); };

    std::size_t neq = 0;
    for (const auto& a : q.arrows) neq += uz(N.dim(a.tgt) * M.dim(a.src));
    Matrix A(neq, nvars, p);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        const Matrix& Na = N.arrow(static_cast<int>(ai));
        const Matrix& Ma = M.arrow(static_cast<int>(ai));
        // N_a f_s - f_t M_a = 0
        for (int i = 0; i < N.dim(a.tgt); ++i)
            for (int j = 0; j < M.dim(a.src); ++j, ++row) {
                for (int k = 0; k < N.dim(a.src); ++k) {
                    auto c = Na(uz(i), uz(k));
                    if (c) A.set(row, var(a.src, k, j), A(row, var(a.src, k, j)) + c);
                }
                for (int k = 0; k < M.dim(a.tgt); ++k) {
                    auto c = Ma(uz(k), uz(j));
                    if (c) A.set(row, var(a.tgt, i, k), static_cast<std::int64_t>(A(row, var(a.tgt, i, k))) - c);
                }
            }
    }
    Matrix ns = nullspace(A);
    auto e = A.rows() ? rref(A) : Echelon{A, {}};
    std::vector<bool> pivot(nvars, false);
    for (auto c : e.pivots) pivot[c] = true;
    for (std::size_t c = 0; c < nvars; ++c)
        if (!pivot[c]) hs.free_positions.push_back(c);
    for (std::size_t k = 0; k < ns.cols(); ++k) {
        RepMap f;
        for (int v = 0; v < q.vertices; ++v) {
            Matrix c(uz(N.dim(v)), uz(M.dim(v)), p);
            for (int i = 0; i < N.dim(v); ++i)
                for (int j = 0; j < M.dim(v); ++j) c.set(uz(i), uz(j), ns(var(v, i, j), k));
            f.comps.push_back(std::move(c));
        }
        hs.basis.push_back(std::move(f));
    }
    return hs;
}

std::vector<RepMap> hom_basis(const Rep& M, const Rep& N) { return hom_space(M, N).basis; }

bool is_subrep(const Rep& M, const Spans& U) {
    const auto& q = *M.quiver();
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        Matrix img = M.arrow(static_cast<int>(ai)) * U[uz(a.src)];
        if (!column_span_contains(U[uz(a.tgt)], img)) return false;
    }
    return true;
}

SubRep subrep(const Rep& M, const Spans& U) {
    const auto& q = *M.quiver();
    std::vector<int> d;
    for (const auto& u : U) d.push_back(static_cast<int>(u.cols()));
    SubRep s{Rep(M.quiver(), d, M.prime()), {}};
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        auto x = solve(U[uz(a.tgt)], M.arrow(static_cast<int>(ai)) * U[uz(a.src)]);
        if (!x) throw ModelViolation("subspace is not closed under arrow " + a.name);
        s.rep.set_arrow(static_cast<int>(ai), *x);
    }
    s.inclusion.comps = U;
    return s;
}

QuotientRep quotient(const Rep& M, const Spans& U) {
    const auto& q = *M.quiver();
    const auto p = M.prime();
    std::vector<Matrix> comp, proj;
    std::vector<int> d;
    for (int v = 0; v < q.vertices; ++v) {
        const std::size_t n = uz(M.dim(v));
        Matrix C = complement_basis(U[uz(v)], n, p);
        Matrix B = Matrix::hstack(U[uz(v)].cols() ? U[uz(v)] : Matrix(n, 0, p), C);
        auto Binv = inverse(B);
        if (!Binv) throw ModelViolation("quotient: subspace basis is not independent");
        proj.push_back(row_block(*Binv, U[uz(v)].cols(), C.cols()));
        comp.push_back(std::move(C));
        d.push_back(static_cast<int>(comp.back().cols()));
    }
    QuotientRep out{Rep(M.quiver(), d, p), {}};
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        out.rep.set_arrow(static_cast<int>(ai), proj[uz(a.tgt)] * M.arrow(static_cast<int>(ai)) * comp[uz(a.src)]);
    }
    if (!is_subrep(M, U)) throw ModelViolation("quotient by a subspace that is not a subrepresentation");
    out.projection.comps = std::move(proj);
    return out;
}

Spans kernel_spans(const RepMap& f, const Rep& M) {
    Spans out;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        const auto& c = f.comps[v];
        const std::size_t n = uz(M.dim(static_cast<int>(v)));
        if (n == 0) out.emplace_back(0, 0, M.prime());
        else if (c.rows() == 0) out.push_back(Matrix::identity(n, M.prime()));
        else out.push_back(nullspace(c));
    }
    return out;
}

Spans image_spans(const RepMap& f, const Rep& N) {
    Spans out;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        const auto& c = f.comps[v];
        if (c.cols() == 0) out.emplace_back(uz(N.dim(static_cast<int>(v))), 0, N.prime());
        else out.push_back(column_basis(c));
    }
    return out;
}

Spans sum_spans(const Spans& a, const Spans& b) {
    Spans out;
    for (std::size_t v = 0; v < a.size(); ++v) {
        Matrix h = Matrix::hstack(a[v], b[v]);
        out.push_back(h.cols() ? column_basis(h) : h);
    }
    return out;
}

std::vector<int> span_dims(const Spans& U) {
    std::vector<int> out;
    for (const auto& u : U) out.push_back(static_cast<int>(u.cols()));
    return out;
}

Spans radical_spans(const Rep& M) {
    const auto& q = *M.quiver();
    Spans out;
    for (int v = 0; v < q.vertices; ++v) {
        Matrix acc(uz(M.dim(v)), 0, M.prime());
        for (int a : q.arrows_in(v)) acc = Matrix::hstack(acc, M.arrow(a));
        out.push_back(acc.cols() ? column_basis(acc) : acc);
    }
    return out;
}

Spans socle_spans(const Rep& M) {
    const auto& q = *M.quiver();
    Spans out;
    for (int v = 0; v < q.vertices; ++v) {
        const std::size_t n = uz(M.dim(v));
        Matrix acc(0, n, M.prime());
        for (int a : q.arrows_out(v)) acc = Matrix::vstack(acc, M.arrow(a));
        if (n == 0) out.emplace_back(0, 0, M.prime());
        else if (acc.rows() == 0) out.push_back(Matrix::identity(n, M.prime()));
        else out.push_back(nullspace(acc));
    }
    return out;
}

std::vector<int> top_dims(const Rep& M) {
    auto rad = span_dims(radical_spans(M));
    std::vector<int> out;
    for (int v = 0; v < M.quiver()->vertices; ++v) out.push_back(M.dim(v) - rad[uz(v)]);
    return out;
}

std::vector<int> socle_dims(const Rep& M) { return span_dims(socle_spans(M)); }

DirectSum direct_sum(const std::vector<Rep>& parts, const QuiverPtr& q, Matrix::Scalar p) {
    std::vector<int> dims(uz(q->vertices), 0);
    std::vector<std::vector<int>> off;
    for (const auto& r : parts) {
        off.push_back(dims);
        for (int v = 0; v < q->vertices; ++v) dims[uz(v)] += r.dim(v);
    }
    DirectSum ds{Rep(q, dims, p), {}, {}};
    for (std::size_t ai = 0; ai < q->arrows.size(); ++ai) {
        const auto& a = q->arrows[ai];
        Matrix m(uz(dims[uz(a.tgt)]), uz(dims[uz(a.src)]), p);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const Matrix& pa = parts[k].arrow(static_cast<int>(ai));
            for (std::size_t i = 0; i < pa.rows(); ++i)
                for (std::size_t j = 0; j < pa.cols(); ++j)
                    m.set(uz(off[k][uz(a.tgt)]) + i, uz(off[k][uz(a.src)]) + j, pa(i, j));
        }
        ds.rep.set_arrow(static_cast<int>(ai), std::move(m));
    }
    for (std::size_t k = 0; k < parts.size(); ++k) {
        RepMap inc, pr;
        for (int v = 0; v < q->vertices; ++v) {
            Matrix i(uz(dims[uz(v)]), uz(parts[k].dim(v)), p);
            for (int t = 0; t < parts[k].dim(v); ++t) i.set(uz(off[k][uz(v)] + t), uz(t), 1);
            pr.comps.push_back(i.transpose());
            inc.comps.push_back(std::move(i));
        }
        ds.inclusions.push_back(std::move(inc));
        ds.projections.push_back(std::move(pr));
    }
    return ds;
}

}  // namespace dlcoh
