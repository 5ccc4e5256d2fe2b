#pragma once

// Partitions, beta-sets and d-hooks.

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace dlcoh {

class Partition {
public:
    Partition() = default;
    // Trailing zeros are dropped; anything else non-monotone or negative throws.
    explicit Partition(std::vector<int> parts);

    // "3+2", "3,2" or "3 2"; "0" and "" give the empty partition.
    static Partition parse(const std::string& text);
    // (a, 1^k)
    static Partition hook(int arm, int ones);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // i-th part, 0-based, zero past the end
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    Partition conjugate() const;
    bool is_rectangle() const;

    std::string to_string() const;  // "3+2", empty is "0"
    std::string pretty() const;     // "(3,2)", empty is "()"

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Strictly decreasing set of non-negative integers.
class BetaSet {
public:
    BetaSet() = default;
    explicit BetaSet(std::vector<int> elements);  // any order; duplicates or negatives throw

    const std::vector<int>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool contains(int x) const;
    // (X+1) u {0}
    BetaSet shifted() const;

    bool operator==(const BetaSet& o) const { return elems_ == o.elems_; }
    std::string to_string() const;

private:
    std::vector<int> elems_;
};

struct HookSite {
    int x = 0;
    int d = 1;
    bool operator==(const HookSite&) const = default;
};

BetaSet beta_set(const Partition& lambda, int s);
Partition partition_of(const BetaSet& X);

std::vector<HookSite> addable_hooks(const BetaSet& X, int d);
bool is_addable(const BetaSet& X, int x, int d);
BetaSet move_bead(const BetaSet& X, int from, int to);
Partition add_hook(const BetaSet& X, int x, int d);

int leg_count(const BetaSet& X, int x, int d);
int pi_d(const BetaSet& X, int x, int n, int d);
int gamma_d(const BetaSet& X, int x, int n);

std::vector<int> hook_multiset(const Partition& lambda);  // decreasing
int largest_hook(const Partition& lambda);
bool is_m_core(const Partition& lambda, int m);
Partition m_core(const Partition& lambda, int m);
// All partitions obtained by removing one m-hook.
std::vector<Partition> remove_hooks(const Partition& lambda, int m);

std::vector<Partition> removable_corners(const Partition& lambda);
bool dominates(const Partition& lambda, const Partition& mu);

// Reverse lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// Closed form for (n-d)*x when it applies; nullopt in the uncovered cases.
std::optional<Partition> trivial_mu_star_closed_form(int n, int d, int x);

}  // namespace dlcoh
