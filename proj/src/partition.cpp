#include "dlcoh/partition.hpp"

#include <algorithm>
#include <functional>

#include "dlcoh/errors.hpp"

namespace dlcoh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be non-increasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            std::size_t used = 0;
            int v = std::stoi(cur, &used);
            if (used != cur.size()) throw InvalidArgument("bad partition token '" + cur + "'");
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw InvalidArgument("bad partition token '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == '+' || c == ',' || c == ' ' || c == '(' || c == ')') flush();
        else cur.push_back(c);
    }
    flush();
    if (parts.size() == 1 && parts[0] == 0) parts.clear();
    return Partition(parts);
}

Partition Partition::hook(int arm, int ones) {
    std::vector<int> p;
    if (arm > 0) p.push_back(arm);
    p.insert(p.end(), static_cast<std::size_t>(ones), 1);
    return Partition(p);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (empty()) return Partition();
    for (int j = 1; j <= parts_[0]; ++j) {
        int cnt = 0;
        for (int x : parts_)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return Partition(c);
}

bool Partition::is_rectangle() const {
    return !empty() && parts_.front() == parts_.back();
}

std::string Partition::to_string() const {
    if (empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "+" : "") + std::to_string(parts_[i]);
    return s;
}

std::string Partition::pretty() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
}

BetaSet::BetaSet(std::vector<int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end(), std::greater<>());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 0) throw InvalidArgument("beta-set elements must be non-negative");
        if (i > 0 && elems_[i] == elems_[i - 1]) throw InvalidArgument("beta-set elements must be distinct");
    }
}

bool BetaSet::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x, std::greater<>());
}

BetaSet BetaSet::shifted() const {
    std::vector<int> e;
    for (int x : elems_) e.push_back(x + 1);
    e.push_back(0);
    return BetaSet(e);
}

std::string BetaSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) s += (i ? "," : "") + std::to_string(elems_[i]);
    return s + "}";
}

BetaSet beta_set(const Partition& lambda, int s) {
    if (s < lambda.length()) throw InvalidArgument("beta_set: s smaller than the number of parts");
    std::vector<int> e;
    for (int i = 1; i <= s; ++i) e.push_back(lambda.part(i - 1) + s - i);
    return BetaSet(e);
}

Partition partition_of(const BetaSet& X) {
    const auto& e = X.elements();
    const int s = X.size();
    std::vector<int> parts;
    for (int i = 1; i <= s; ++i) parts.push_back(e[static_cast<std::size_t>(i - 1)] - (s - i));
    return Partition(parts);
}

bool is_addable(const BetaSet& X, int x, int d) {
    return d >= 1 && X.contains(x) && !X.contains(x + d);
}

std::vector<HookSite> addable_hooks(const BetaSet& X, int d) {
    std::vector<HookSite> out;
    for (int x : X.elements())
        if (!X.contains(x + d)) out.push_back({x, d});
    return out;
}

BetaSet move_bead(const BetaSet& X, int from, int to) {
    std::vector<int> e;
    for (int y : X.elements())
        if (y != from) e.push_back(y);
    e.push_back(to);
    return BetaSet(e);
}

Partition add_hook(const BetaSet& X, int x, int d) {
    if (!is_addable(X, x, d))
        throw InvalidHook("(" + std::to_string(x) + "," + std::to_string(x + d) + ") is not an addable hook of " +
                          X.to_string());
    return partition_of(move_bead(X, x, x + d));
}

int leg_count(const BetaSet& X, int x, int d) {
    if (!X.contains(x)) throw InvalidArgument("leg_count: x not in the beta-set");
    int c = 0;
    for (int y : X.elements())
        if (y > x && y < x + d) ++c;
    return c;
}

int pi_d(const BetaSet& X, int x, int n, int d) {
    if (!is_addable(X, x, d)) throw InvalidHook("pi_d: hook not addable");
    if (partition_of(X).size() + d != n) throw InvalidArgument("pi_d: |lambda(X)| + d must equal n");
    int below = 0;
    for (int y : X.elements())
        if (y < x) ++below;
    return 2 * (n - 1 + x - below) - leg_count(X, x, d);
}

int gamma_d(const BetaSet& X, int x, int n) {
    if (!X.contains(x)) throw InvalidArgument("gamma_d: x not in the beta-set");
    return n + x - X.size();
}

std::vector<int> hook_multiset(const Partition& lambda) {
    std::vector<int> h;
    auto conj = lambda.conjugate();
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) h.push_back(lambda.part(i) - j - 1 + conj.part(j) - i - 1 + 1);
    std::sort(h.begin(), h.end(), std::greater<>());
    return h;
}

int largest_hook(const Partition& lambda) {
    if (lambda.empty()) throw InvalidArgument("largest_hook of the empty partition");
    return lambda.part(0) + lambda.length() - 1;
}

bool is_m_core(const Partition& lambda, int m) {
    if (m < 1) throw InvalidArgument("is_m_core: m must be positive");
    auto h = hook_multiset(lambda);
    return std::find(h.begin(), h.end(), m) == h.end();
}

std::vector<Partition> remove_hooks(const Partition& lambda, int m) {
    if (m < 1) throw InvalidArgument("remove_hooks: m must be positive");
    auto X = beta_set(lambda, lambda.length());
    std::vector<Partition> out;
    for (int x : X.elements())
        if (x - m >= 0 && !X.contains(x - m)) out.push_back(partition_of(move_bead(X, x, x - m)));
    return out;
}

Partition m_core(const Partition& lambda, int m) {
    if (m < 1) throw InvalidArgument("m_core: m must be positive");
    auto X = beta_set(lambda, lambda.length());
    for (;;) {
        int bead = -1;
        for (int x : X.elements())
            if (x - m >= 0 && !X.contains(x - m)) {
                bead = x;
                break;
            }
        if (bead < 0) break;
        X = move_bead(X, bead, bead - m);
    }
    return partition_of(X);
}

std::vector<Partition> removable_corners(const Partition& lambda) {
    if (lambda.empty()) throw InvalidArgument("removable_corners of the empty partition");
    std::vector<Partition> out;
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda.part(i) > lambda.part(i + 1)) {
            auto p = lambda.parts();
            --p[static_cast<std::size_t>(i)];
            out.emplace_back(p);
        }
    return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw InvalidArgument("dominates: partitions of different sizes");
    int a = 0, b = 0;
    for (int i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

namespace {
void gen(int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, cap); k >= 1; --k) {
        cur.push_back(k);
        gen(remaining - k, k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InvalidArgument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, cur, out);
    return out;
}

std::optional<Partition> trivial_mu_star_closed_form(int n, int d, int x) {
    if (x == n) return Partition({n});
    if (x < n - d && x <= d - 1) {
        std::vector<int> p{n - d, x + 1};
        p.insert(p.end(), static_cast<std::size_t>(d - x - 1), 1);
        return Partition(p);
    }
    // x = n-d is never addable and the display would not give a partition there
    if (n - d < x && x < d - 1) {
        std::vector<int> p{x, n - d + 1};
        p.insert(p.end(), static_cast<std::size_t>(d - x - 1), 1);
        return Partition(p);
    }
    return std::nullopt;
}

}  // namespace dlcoh
