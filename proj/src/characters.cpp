#include "dlcoh/characters.hpp"

#include <algorithm>
#include <functional>

#include "dlcoh/errors.hpp"

namespace dlcoh {

VirtualChar VirtualChar::basis(const Partition& lambda, long coeff) {
    VirtualChar v(lambda.size());
    v.add(lambda, coeff);
    return v;
}

long VirtualChar::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? 0 : it->second;
}

void VirtualChar::add(const Partition& lambda, long c) {
    if (lambda.size() != rank_)
        throw InvalidArgument("character label " + lambda.pretty() + " has the wrong size for rank " +
                              std::to_string(rank_));
    if (c == 0) return;
    auto& slot = coeffs_[lambda];
    slot += c;
    if (slot == 0) coeffs_.erase(lambda);
}

VirtualChar& VirtualChar::operator+=(const VirtualChar& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && rank_ != o.rank_) rank_ = o.rank_;
    for (const auto& [l, c] : o.coeffs_) add(l, c);
    return *this;
}

VirtualChar& VirtualChar::operator-=(const VirtualChar& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && rank_ != o.rank_) rank_ = o.rank_;
    for (const auto& [l, c] : o.coeffs_) add(l, -c);
    return *this;
}

VirtualChar VirtualChar::scaled(long c) const {
    VirtualChar out(rank_);
    for (const auto& [l, x] : coeffs_) out.add(l, x * c);
    return out;
}

std::string VirtualChar::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    // dominant labels first
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        long c = it->second;
        if (first) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        long a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a) + "*";
        std::string label = it->first.pretty();
        s += "[" + label.substr(1, label.size() - 2) + "]";
        first = false;
    }
    return s;
}

void GradedChar::add(int degree, int eigen_exp, const Partition& lambda, long c) {
    add(degree, eigen_exp, VirtualChar::basis(lambda, c));
}

void GradedChar::add(int degree, int eigen_exp, const VirtualChar& v) {
    if (v.is_zero()) return;
    if (v.rank() != rank_) throw InvalidArgument("graded character rank mismatch");
    Key k{degree, eigen_exp};
    auto it = entries_.find(k);
    if (it == entries_.end()) {
        entries_.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
}

std::vector<int> GradedChar::degrees() const {
    std::vector<int> out;
    for (const auto& [k, v] : entries_)
        if (out.empty() || out.back() != k.first) out.push_back(k.first);
    return out;
}

VirtualChar GradedChar::at_degree(int degree) const {
    VirtualChar out(rank_);
    for (const auto& [k, v] : entries_)
        if (k.first == degree) out += v;
    return out;
}

VirtualChar hc_restrict(const VirtualChar& v) {
    if (v.rank() < 1) throw InvalidArgument("hc_restrict: rank must be at least 1");
    VirtualChar out(v.rank() - 1);
    for (const auto& [l, c] : v.coeffs())
        for (const auto& mu : removable_corners(l)) out.add(mu, c);
    return out;
}

VirtualChar dl_induce(const Partition& mu, int d) {
    if (d < 1) throw InvalidArgument("dl_induce: d must be positive");
    auto X = beta_set(mu, mu.length() + d);
    VirtualChar out(mu.size() + d);
    for (const auto& h : addable_hooks(X, d)) out.add(add_hook(X, h.x, d), leg_count(X, h.x, d) % 2 ? -1 : 1);
    return out;
}

std::vector<PhiBlock> phi_d_blocks(int n, int d) {
    if (d < 1) throw InvalidArgument("phi_d_blocks: d must be positive");
    std::map<Partition, std::vector<Partition>> groups;
    for (const auto& l : partitions_of(n)) groups[m_core(l, d)].push_back(l);
    std::vector<PhiBlock> out;
    for (auto& [core, members] : groups) {
        bool dz = members.size() == 1 && core.size() == n;
        out.push_back({core, members, dz});
    }
    return out;
}

std::vector<Partition> principal_block_labels(int n, int m) {
    if (m < 1 || n < m || n >= 2 * m)
        throw UnsupportedRegime("principal_block_labels needs m <= n < 2m (got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
    Partition mu = n - m > 0 ? Partition({n - m}) : Partition();
    auto X = beta_set(mu, mu.length() + m);
    std::vector<Partition> out;
    for (const auto& h : addable_hooks(X, m)) out.push_back(add_hook(X, h.x, m));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace dlcoh
