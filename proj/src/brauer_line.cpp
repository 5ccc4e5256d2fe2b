#include "dlcoh/brauer_line.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>

#include "dlcoh/errors.hpp"

namespace dlcoh {

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

struct Builder {
    std::vector<int> vertex;
    std::vector<std::vector<int>> paths;
    struct Act {
        int src, arrow, tgt;
    };
    std::vector<Act> acts;

    int add(int v, std::vector<int> path) {
        vertex.push_back(v);
        paths.push_back(std::move(path));
        return static_cast<int>(vertex.size()) - 1;
    }
    void act(int src, int arrow, int tgt) { acts.push_back({src, arrow, tgt}); }
    std::vector<int> extend(int e, int arrow) const {
        auto p = paths[uz(e)];
        p.push_back(arrow);
        return p;
    }

    ProjectiveData finish(const QuiverPtr& q, Matrix::Scalar p, std::vector<int> socle_path) const {
        ProjectiveData d;
        std::vector<int> dims(uz(q->vertices), 0);
        for (int v : vertex) d.local.push_back(dims[uz(v)]++);
        d.rep = Rep(q, dims, p);
        std::vector<Matrix> maps;
        for (const auto& a : q->arrows) maps.emplace_back(uz(dims[uz(a.tgt)]), uz(dims[uz(a.src)]), p);
        for (const auto& a : acts) {
            const auto& arr = q->arrows[uz(a.arrow)];
            if (arr.src != vertex[uz(a.src)] || arr.tgt != vertex[uz(a.tgt)])
                throw ModelViolation("projective action does not follow the quiver");
            maps[uz(a.arrow)].set(uz(d.local[uz(a.tgt)]), uz(d.local[uz(a.src)]), 1);
        }
        for (std::size_t a = 0; a < maps.size(); ++a) d.rep.set_arrow(static_cast<int>(a), maps[a]);
        d.vertex = vertex;
        d.paths = paths;
        d.socle_path = std::move(socle_path);
        return d;
    }
};

}  // namespace

const ProjectiveData& BrauerLine::data(int i) const {
    if (i < 1 || i > m_) throw InvalidArgument("projective index out of range");
    return proj_[uz(i - 1)];
}

Rep BrauerLine::simple(int i) const {
    if (i < 1 || i > m_) throw InvalidArgument("simple index out of range");
    std::vector<int> dims(uz(m_), 0);
    dims[uz(i - 1)] = 1;
    return Rep(q_, dims, p_);
}

Matrix BrauerLine::socle_action(const Rep& M, int v) const {
    return M.path_matrix(data(v).socle_path, v - 1);
}

RepMap BrauerLine::map_from_projective(int v, const Rep& M, const Matrix& vec) const {
    const auto& P = data(v);
    RepMap f = zero_map(P.rep, M);
    for (std::size_t e = 0; e < P.vertex.size(); ++e) {
        Matrix img = M.path_matrix(P.paths[e], v - 1) * vec;
        auto& c = f.comps[uz(P.vertex[e])];
        for (std::size_t row = 0; row < img.rows(); ++row) c.set(row, uz(P.local[e]), img(row, 0));
    }
    if (!is_homomorphism(f, P.rep, M))
        throw ModelViolation("module does not satisfy the relations of the algebra (map from P_" + std::to_string(v) +
                             ")");
    return f;
}

std::string BrauerLine::picture() const {
    std::string s = "(exc, r=" + std::to_string(r_) + ")";
    for (int i = m_; i >= 1; --i) s += " --S" + std::to_string(i) + "-- " + (i == 1 ? "(trivial)" : "o");
    return s;
}

BrauerLine build_line(int m, int r, Matrix::Scalar p) {
    if (m < 1 || r < 1) throw InvalidArgument("build_line needs m >= 1 and r >= 1");
    if (!is_prime(p)) throw InvalidArgument("build_line needs a prime field");
    BrauerLine L;
    L.m_ = m;
    L.r_ = r;
    L.p_ = p;
    auto q = std::make_shared<Quiver>();
    q->vertices = m;
    for (int i = 1; i < m; ++i) {
        q->arrows.push_back({i - 1, i, "a" + std::to_string(i)});
        q->arrows.push_back({i, i - 1, "b" + std::to_string(i)});
    }
    // k[x]/x^2 needs the loop even for r = 1
    if (r >= 2 || m == 1) {
        L.loop_ = static_cast<int>(q->arrows.size());
        q->arrows.push_back({m - 1, m - 1, "c"});
    }
    L.q_ = q;
    const int c = L.loop_;

    for (int i = 1; i <= m; ++i) {
        Builder b;
        const int v = i - 1;
        int t = b.add(v, {});
        std::vector<int> socle;
        if (m == 1) {
            int prev = t;
            for (int k = 1; k <= r; ++k) {
                int e = b.add(v, b.extend(prev, c));
                b.act(prev, c, e);
                prev = e;
            }
            socle.assign(uz(r), c);
        } else if (i == 1) {
            int up = b.add(1, {L.arrow_up(1)});
            int s = b.add(0, {L.arrow_up(1), L.arrow_down(1)});
            b.act(t, L.arrow_up(1), up);
            b.act(up, L.arrow_down(1), s);
            socle = {L.arrow_up(1), L.arrow_down(1)};
        } else {
            int down = b.add(v - 1, {L.arrow_down(i - 1)});
            int s = b.add(v, {L.arrow_down(i - 1), L.arrow_up(i - 1)});
            b.act(t, L.arrow_down(i - 1), down);
            b.act(down, L.arrow_up(i - 1), s);
            socle = {L.arrow_down(i - 1), L.arrow_up(i - 1)};
            if (i < m) {
                int up = b.add(v + 1, {L.arrow_up(i)});
                b.act(t, L.arrow_up(i), up);
                b.act(up, L.arrow_down(i), s);
            } else if (c >= 0) {
                int prev = t;
                for (int k = 1; k < r; ++k) {
                    int e = b.add(v, b.extend(prev, c));
                    b.act(prev, c, e);
                    prev = e;
                }
                b.act(prev, c, s);
            }
        }
        L.proj_.push_back(b.finish(q, p, socle));
    }

    auto table = projective_hom_table(L);
    for (int t = 1; t <= m; ++t)
        for (int s = 1; s <= m; ++s) {
            int want = t == s ? (t == m ? r + 1 : 2) : (std::abs(s - t) == 1 ? 1 : 0);
            if (table[uz(t - 1)][uz(s - 1)] != want)
                throw ModelViolation("dim Hom(P_" + std::to_string(t) + ", P_" + std::to_string(s) + ") = " +
                                     std::to_string(table[uz(t - 1)][uz(s - 1)]) + ", expected " +
                                     std::to_string(want));
        }
    return L;
}

std::vector<std::vector<int>> projective_hom_table(const BrauerLine& line) {
    const int m = line.m();
    std::vector<std::vector<int>> t(uz(m), std::vector<int>(uz(m), 0));
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            t[uz(a - 1)][uz(b - 1)] = static_cast<int>(hom_space(line.projective(a), line.projective(b)).dim());
    return t;
}

Report line_invariants(const BrauerLine& line) {
    Report rep;
    const int m = line.m(), r = line.r();
    rep.title = "Brauer line invariants (m=" + std::to_string(m) + ", r=" + std::to_string(r) +
                ", p=" + std::to_string(line.p()) + ")";
    auto t = projective_hom_table(line);
    bool end_ok = true, adj_ok = true, far_ok = true;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            int h = t[uz(a - 1)][uz(b - 1)];
            if (a == b) end_ok = end_ok && h == (a == m ? r + 1 : 2);
            else if (std::abs(a - b) == 1) adj_ok = adj_ok && h == 1;
            else far_ok = far_ok && h == 0;
        }
    rep.add("dim End(P_i) = 2 for i < m, r+1 for i = m", end_ok);
    rep.add("dim Hom(P_t, P_s) = 1 for |s-t| = 1", adj_ok);
    rep.add("dim Hom(P_t, P_s) = 0 for |s-t| > 1", far_ok);
    return rep;
}

std::vector<int> composition_factors(const Rep& M) { return M.dims(); }

Cover projective_cover(const BrauerLine& line, const Rep& M) {
    const auto p = line.p();
    auto rad = radical_spans(M);
    std::vector<Rep> parts;
    std::vector<RepMap> maps;
    Cover cov;
    for (int v = 1; v <= line.m(); ++v) {
        Matrix gens = complement_basis(rad[uz(v - 1)], uz(M.dim(v - 1)), p);
        for (std::size_t k = 0; k < gens.cols(); ++k) {
            parts.push_back(line.projective(v));
            maps.push_back(line.map_from_projective(v, M, gens.column(k)));
            cov.summands.push_back(v);
        }
    }
    auto ds = direct_sum(parts, line.quiver(), p);
    cov.P = ds.rep;
    cov.map = zero_map(ds.rep, M);
    for (std::size_t k = 0; k < maps.size(); ++k) cov.map = cov.map + compose(maps[k], ds.projections[k]);
    if (!is_surjective(cov.map, M)) throw ModelViolation("projective cover is not surjective");
    return cov;
}

Rep syzygy(const BrauerLine& line, const Rep& M) {
    auto cov = projective_cover(line, M);
    return subrep(cov.P, kernel_spans(cov.map, cov.P)).rep;
}

Rep syzygy_power(const BrauerLine& line, const Rep& M, int i) {
    if (i < 0) throw InvalidArgument("syzygy_power needs i >= 0");
    if (i == 0) return strip_projective(line, M);
    Rep cur = M;
    for (int k = 0; k < i; ++k) cur = syzygy(line, cur);
    return cur;
}

Rep cosyzygy(const BrauerLine& line, const Rep& M) { return syzygy_power(line, M, 2 * line.m() - 1); }

std::vector<int> projective_multiplicities(const BrauerLine& line, const Rep& M) {
    std::vector<int> out;
    for (int v = 1; v <= line.m(); ++v)
        out.push_back(M.dim(v - 1) ? static_cast<int>(rank(line.socle_action(M, v))) : 0);
    return out;
}

Rep strip_projective(const BrauerLine& line, const Rep& M) {
    const auto p = line.p();
    Spans img;
    for (int v = 0; v < line.m(); ++v) img.emplace_back(uz(M.dim(v)), 0, p);
    int removed = 0;
    for (int v = 1; v <= line.m(); ++v) {
        if (M.dim(v - 1) == 0) continue;
        Matrix w = line.socle_action(M, v);
        auto e = rref(w);
        for (auto col : e.pivots) {
            Matrix vec(uz(M.dim(v - 1)), 1, p);
            vec.set(col, 0, 1);
            auto f = line.map_from_projective(v, M, vec);
            img = sum_spans(img, image_spans(f, M));
            removed += line.projective(v).total_dim();
        }
    }
    if (removed == 0) return M;
    int got = 0;
    for (const auto& u : img) got += static_cast<int>(u.cols());
    if (got != removed) throw ModelViolation("projective summands do not split off");
    return quotient(M, img).rep;
}

bool reps_isomorphic(const Rep& M, const Rep& N) {
    if (M.dims() != N.dims()) return false;
    if (M.total_dim() == 0) return true;
    auto hs = hom_space(M, N);
    const std::size_t k = hs.dim();
    if (k == 0) return false;
    const auto p = M.prime();
    auto invertible = [&](const RepMap& f) {
        for (const auto& c : f.comps)
            if (rank(c) != c.rows()) return false;
        return true;
    };
    for (const auto& b : hs.basis)
        if (invertible(b)) return true;
    double total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= p;
    std::vector<Matrix::Scalar> c(k, 0);
    if (total <= 4096) {
        for (;;) {
            std::size_t i = 0;
            while (i < k && ++c[i] == p) c[i++] = 0;
            if (i == k) return false;
            if (invertible(hs.combination(c, p))) return true;
        }
    }
    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<Matrix::Scalar> dist(0, p - 1);
    for (int trial = 0; trial < 2000; ++trial) {
        for (auto& x : c) x = dist(rng);
        if (invertible(hs.combination(c, p))) return true;
    }
    return false;
}

Report omega2_interior_shape(const BrauerLine& line, int i) {
    const int m = line.m();
    if (m < 4) throw InvalidArgument("omega2_interior_shape needs m >= 4");
    if (i <= 1 || i >= m) throw InvalidArgument("omega2_interior_shape needs an interior edge 1 < i < m");
    Report rep;
    rep.title = "Omega^2 S_" + std::to_string(i) + " (m=" + std::to_string(m) + ", r=" + std::to_string(line.r()) + ")";
    Rep w = syzygy_power(line, line.simple(i), 2);
    Rep s = strip_projective(line, w);
    int total = s.total_dim();
    rep.add("at least three composition factors", total >= 3, std::to_string(total) + " factors");
    rep.add("not simple", total > 1);
    auto f = composition_factors(s);
    std::string d;
    for (int v = 1; v <= m; ++v)
        if (f[uz(v - 1)]) d += "S" + std::to_string(v) + ":" + std::to_string(f[uz(v - 1)]) + " ";
    rep.note("factors " + d);
    return rep;
}

EdgeLabels edge_partition_labels(int n, int m) {
    if (m < 1 || n < m || n >= 2 * m)
        throw UnsupportedRegime("edge labels need m <= n < 2m (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    EdgeLabels out;
    if (n == m) {
        for (int i = 1; i <= m; ++i) out.pinned[i] = Partition::hook(n - i + 1, i - 1);
        return out;
    }
    out.pinned[1] = Partition({n});
    for (int d = 1; d <= n; ++d) {
        if (!(m > d && m > n - d + 1)) continue;
        const auto X = beta_set(Partition({n - d}), d + 1);
        out.pinned[m + d - n + 1] = add_hook(X, n - m, d);
    }
    for (int i = 1; i <= m; ++i)
        if (!out.pinned.count(i)) out.unresolved.push_back(i);
    return out;
}

}  // namespace dlcoh
