#include "dlcoh/complex.hpp"

#include <algorithm>

#include "dlcoh/errors.hpp"

namespace dlcoh {

namespace {
std::size_t uz(int v) { return static_cast<std::size_t>(v); }
}  // namespace

ProjComplex::ProjComplex(BrauerLine line, int lo, std::vector<std::vector<int>> summands, std::vector<RepMap> diffs)
    : line_(std::move(line)), lo_(lo), summands_(std::move(summands)), diffs_(std::move(diffs)) {
    if (summands_.empty()) throw InvalidArgument("a complex needs at least one term");
    if (diffs_.size() + 1 != summands_.size()) throw InvalidArgument("need one differential between consecutive terms");
    for (const auto& s : summands_) {
        std::vector<Rep> parts;
        for (int i : s) parts.push_back(line_.projective(i));
        terms_.push_back(direct_sum(parts, line_.quiver(), line_.p()).rep);
    }
    for (std::size_t k = 0; k < diffs_.size(); ++k)
        if (!is_homomorphism(diffs_[k], terms_[k], terms_[k + 1]))
            throw ModelViolation("differential in degree " + std::to_string(lo_ + static_cast<int>(k)) +
                                 " is not a module map");
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
        if (!compose(diffs_[k + 1], diffs_[k]).is_zero())
            throw ModelViolation("d o d is nonzero in degree " + std::to_string(lo_ + static_cast<int>(k)));
}

const Rep& ProjComplex::term(int deg) const {
    if (!has(deg)) throw InvalidArgument("no term in degree " + std::to_string(deg));
    return terms_[uz(deg - lo_)];
}

const std::vector<int>& ProjComplex::summands(int deg) const {
    if (!has(deg)) throw InvalidArgument("no term in degree " + std::to_string(deg));
    return summands_[uz(deg - lo_)];
}

const RepMap& ProjComplex::diff(int deg) const {
    if (!has(deg) || !has(deg + 1)) throw InvalidArgument("no differential out of degree " + std::to_string(deg));
    return diffs_[uz(deg - lo_)];
}

ProjComplex ProjComplex::shifted(int a) const {
    std::vector<RepMap> d;
    for (const auto& f : diffs_) d.push_back(a % 2 ? f.scaled(-1) : f);
    return ProjComplex(line_, lo_ - a, summands_, d);
}

Rep ProjComplex::cohomology(int deg) const {
    if (!has(deg)) return Rep(line_.quiver(), std::vector<int>(uz(line_.m()), 0), line_.p());
    const Rep& T = term(deg);
    Spans Z;
    if (has(deg + 1)) Z = kernel_spans(diff(deg), T);
    else
        for (int v = 0; v < line_.m(); ++v) Z.push_back(Matrix::identity(uz(T.dim(v)), line_.p()));
    auto K = subrep(T, Z);
    if (!has(deg - 1)) return K.rep;
    Spans B = image_spans(diff(deg - 1), T);
    Spans coords;
    for (int v = 0; v < line_.m(); ++v) {
        auto x = solve(Z[uz(v)], B[uz(v)]);
        if (!x) throw ModelViolation("image not inside kernel");
        coords.push_back(*x);
    }
    return quotient(K.rep, coords).rep;
}

std::vector<int> ProjComplex::cohomology_degrees() const {
    std::vector<int> out;
    for (int deg = lo_; deg <= hi(); ++deg)
        if (!cohomology(deg).is_zero()) out.push_back(deg);
    return out;
}

std::string ProjComplex::describe() const {
    std::string s;
    for (std::size_t k = 0; k < summands_.size(); ++k) {
        if (k) s += " -> ";
        if (summands_[k].empty()) s += "0";
        for (std::size_t i = 0; i < summands_[k].size(); ++i)
            s += (i ? "+" : "") + std::string("P") + std::to_string(summands_[k][i]);
    }
    return s + "  (degrees " + std::to_string(lo_) + ".." + std::to_string(hi()) + ")";
}

ProjComplex resolution_of_trivial(const BrauerLine& line, int L) {
    if (L < 1) throw InvalidArgument("resolution length must be at least 1");
    // position i sits in degree -i
    std::vector<std::vector<int>> summands;
    std::vector<RepMap> into;  // into[i-1]: position i -> position i-1
    auto cov = projective_cover(line, line.trivial());
    summands.push_back(cov.summands);
    Rep prev_term = cov.P;
    Spans kernel = kernel_spans(cov.map, cov.P);
    for (int i = 1; i < L; ++i) {
        auto K = subrep(prev_term, kernel);
        auto c = projective_cover(line, K.rep);
        into.push_back(compose(K.inclusion, c.map));
        summands.push_back(c.summands);
        kernel = kernel_spans(c.map, c.P);
        prev_term = c.P;
    }
    std::reverse(summands.begin(), summands.end());
    std::reverse(into.begin(), into.end());
    return ProjComplex(line, -(L - 1), summands, into);
}

bool is_minimal(const ProjComplex& C) {
    for (int deg = C.lo(); deg < C.hi(); ++deg) {
        const Rep& T = C.term(deg + 1);
        auto rad = radical_spans(T);
        auto img = image_spans(C.diff(deg), T);
        for (int v = 0; v < C.line().m(); ++v)
            if (!column_span_contains(rad[uz(v)], img[uz(v)])) return false;
    }
    return true;
}

}  // namespace dlcoh
