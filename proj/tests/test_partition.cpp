#include <doctest.h>

#include <functional>
#include <set>

#include "dlcoh/errors.hpp"
#include "dlcoh/partition.hpp"

using namespace dlcoh;

namespace {

const BetaSet X54({5, 3, 2, 1, 0});

// hook lengths read straight off the Young diagram
std::multiset<int> diagram_hooks(const Partition& l) {
    std::multiset<int> out;
    const auto c = l.conjugate();
    for (int i = 0; i < l.length(); ++i)
        for (int j = 0; j < l.part(i); ++j) out.insert((l.part(i) - j - 1) + (c.part(j) - i - 1) + 1);
    return out;
}

// every core reachable by removing m-hooks in any order
void all_cores(const Partition& l, int m, std::set<Partition>& out) {
    auto next = remove_hooks(l, m);
    if (next.empty()) out.insert(l);
    for (const auto& k : next) all_cores(k, m, out);
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(Partition::parse("3+2") == Partition({3, 2}));
    CHECK(Partition::parse("3,2") == Partition({3, 2}));
    CHECK(Partition::parse("(3,2)") == Partition({3, 2}));
    CHECK(Partition::parse("0").empty());
    CHECK(Partition({3, 2}).to_string() == "3+2");
    CHECK(Partition().pretty() == "()");
    CHECK_THROWS_AS(Partition({2, 3}), InvalidArgument);
    CHECK_THROWS_AS(Partition::parse("3+x"), InvalidArgument);
}

TEST_CASE("beta sets") {
    CHECK(beta_set(Partition({3, 2}), 2) == BetaSet({4, 2}));
    CHECK(beta_set(Partition({1}), 5) == X54);
    CHECK(beta_set(Partition(), 3) == BetaSet({2, 1, 0}));
    CHECK_THROWS_AS(beta_set(Partition({3, 2}), 1), InvalidArgument);
    CHECK(partition_of(BetaSet({4, 2})) == Partition({3, 2}));
    CHECK(partition_of(BetaSet({7, 5, 2, 1, 0})) == Partition({3, 2}));
    CHECK(partition_of(BetaSet({2, 1, 0})).empty());
    // round trips over all partitions up to 10 and several sizes
    for (int n = 0; n <= 10; ++n)
        for (const auto& l : partitions_of(n))
            for (int s = l.length(); s <= l.length() + 4; ++s) {
                CHECK(partition_of(beta_set(l, s)) == l);
                CHECK(beta_set(l, s + 1) == beta_set(l, s).shifted());
            }
}

TEST_CASE("addable hooks") {
    std::vector<int> xs;
    for (const auto& h : addable_hooks(X54, 4)) xs.push_back(h.x);
    CHECK(std::set<int>(xs.begin(), xs.end()) == std::set<int>{5, 3, 2, 0});
    // n-d >= d: every element is addable
    for (int n = 2; n <= 12; ++n)
        for (int d = 1; 2 * d <= n; ++d) {
            auto X = beta_set(Partition({n - d}), d + 1);
            CHECK(addable_hooks(X, d).size() == static_cast<std::size_t>(X.size()));
        }
    CHECK(addable_hooks(BetaSet({0}), 1).size() == 1);
}

TEST_CASE("add_hook on the (5,4) beta set") {
    CHECK(add_hook(X54, 2, 4) == Partition({2, 2, 1}));
    CHECK(add_hook(X54, 5, 4) == Partition({5}));
    CHECK(add_hook(X54, 3, 4) == Partition({3, 2}));
    CHECK(add_hook(X54, 0, 4) == Partition({1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(add_hook(X54, 1, 4), InvalidHook);  // 5 occupied
    CHECK_THROWS_AS(add_hook(X54, 4, 4), InvalidHook);  // 4 not a bead
}

TEST_CASE("leg, pi and gamma") {
    CHECK(leg_count(X54, 0, 4) == 3);
    CHECK(leg_count(X54, 5, 4) == 0);
    CHECK(leg_count(X54, 2, 4) == 2);
    CHECK(pi_d(X54, 5, 5, 4) == 10);
    CHECK(pi_d(X54, 0, 5, 4) == 5);
    CHECK(pi_d(X54, 2, 5, 4) == 6);
    CHECK(gamma_d(X54, 5, 5) == 5);
    CHECK(gamma_d(X54, 0, 5) == 0);
    CHECK_THROWS_AS(pi_d(X54, 1, 5, 4), InvalidHook);
    // appending a zero part changes nothing
    for (int n = 0; n <= 7; ++n)
        for (const auto& l : partitions_of(n))
            for (int d = 1; d <= 4; ++d) {
                auto X = beta_set(l, l.length() + d);
                auto Y = X.shifted();
                for (const auto& h : addable_hooks(X, d)) {
                    CHECK(add_hook(Y, h.x + 1, d) == add_hook(X, h.x, d));
                    CHECK(pi_d(Y, h.x + 1, n + d, d) == pi_d(X, h.x, n + d, d));
                    CHECK(gamma_d(Y, h.x + 1, n + d) == gamma_d(X, h.x, n + d));
                }
            }
}

TEST_CASE("hooks and cores") {
    CHECK(largest_hook(Partition({2, 2, 1})) == 4);
    CHECK(largest_hook(Partition({1, 1, 1, 1, 1})) == 5);
    CHECK(largest_hook(Partition({1})) == 1);
    CHECK_THROWS_AS(largest_hook(Partition()), InvalidArgument);
    CHECK(is_m_core(Partition({3, 2}), 5));
    for (int n = 1; n <= 10; ++n)
        for (const auto& l : partitions_of(n)) {
            auto hm = hook_multiset(l);
            CHECK(std::multiset<int>(hm.begin(), hm.end()) == diagram_hooks(l));
            for (int m = 1; m <= 6; ++m) {
                bool divisible = false;
                for (int h : hm) divisible = divisible || h % m == 0;
                CHECK(is_m_core(l, m) == !divisible);
                // the core does not depend on the removal order
                std::set<Partition> cores;
                all_cores(l, m, cores);
                REQUIRE(cores.size() == 1);
                CHECK(*cores.begin() == m_core(l, m));
            }
        }
    // rectangles: hook lengths are i+j-1
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            Partition rect(std::vector<int>(static_cast<std::size_t>(b), a));
            CHECK(rect.is_rectangle());
            std::multiset<int> want;
            for (int i = 1; i <= a; ++i)
                for (int j = 1; j <= b; ++j) want.insert(i + j - 1);
            auto hm = hook_multiset(rect);
            CHECK(std::multiset<int>(hm.begin(), hm.end()) == want);
            CHECK(removable_corners(rect).size() == 1);
        }
}

TEST_CASE("core labels of the (n,d) trivial table") {
    // (n-d, x+1, 1^(d-x-1)) with x = n-m is not an m-core; others in range are
    for (int n = 4; n <= 10; ++n)
        for (int d = 2; d < n; ++d)
            for (int m = std::max(d + 1, n - d + 2); m <= n; ++m) {
                const int x = n - m;
                if (x >= std::min(n - d, d)) continue;
                std::vector<int> parts{n - d, x + 1};
                for (int k = 0; k < d - x - 1; ++k) parts.push_back(1);
                CHECK_FALSE(is_m_core(Partition(parts), m));
            }
    for (int n = 4; n <= 10; ++n)
        for (int d = 2; d <= n; ++d)
            for (int x = n - d; x < d - 1; ++x) {
                std::vector<int> parts{x, n - d + 1};
                if (x < n - d + 1) continue;
                for (int k = 0; k < d - x - 1; ++k) parts.push_back(1);
                for (int m = d + 1; m <= d + 4; ++m) CHECK(is_m_core(Partition(parts), m));
            }
}

TEST_CASE("corners, dominance and enumeration") {
    auto c = removable_corners(Partition({2, 2, 1}));
    CHECK(std::set<Partition>(c.begin(), c.end()) == std::set<Partition>{Partition({2, 1, 1}), Partition({2, 2})});
    CHECK(removable_corners(Partition({3, 3})) == std::vector<Partition>{Partition({3, 2})});
    CHECK(removable_corners(Partition({6})) == std::vector<Partition>{Partition({5})});
    CHECK_THROWS_AS(removable_corners(Partition()), InvalidArgument);
    CHECK(dominates(Partition({3}), Partition({1, 1, 1})));
    CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
    CHECK(dominates(Partition({2, 2}), Partition({2, 2})));
    CHECK_THROWS_AS(dominates(Partition({2}), Partition({1})), InvalidArgument);
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
}
