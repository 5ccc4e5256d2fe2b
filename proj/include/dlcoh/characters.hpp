#pragma once

// Virtual unipotent characters of GL_n(q), labelled by partitions of n.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dlcoh/partition.hpp"

namespace dlcoh {

class VirtualChar {
public:
    VirtualChar() = default;
    explicit VirtualChar(int rank) : rank_(rank) {}
    static VirtualChar basis(const Partition& lambda, long coeff = 1);

    int rank() const { return rank_; }
    const std::map<Partition, long>& coeffs() const { return coeffs_; }
    long coeff(const Partition& lambda) const;
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t terms() const { return coeffs_.size(); }

    void add(const Partition& lambda, long c);
    VirtualChar& operator+=(const VirtualChar& o);
    VirtualChar& operator-=(const VirtualChar& o);
    VirtualChar operator+(const VirtualChar& o) const { return VirtualChar(*this) += o; }
    VirtualChar operator-(const VirtualChar& o) const { return VirtualChar(*this) -= o; }
    VirtualChar scaled(long c) const;
    bool operator==(const VirtualChar& o) const { return rank_ == o.rank_ && coeffs_ == o.coeffs_; }

    // "[5] - [3,2] + [2,2,1]", "0" when empty
    std::string to_string() const;

private:
    int rank_ = 0;
    std::map<Partition, long> coeffs_;
};

// (degree, eigenvalue exponent) -> virtual character
class GradedChar {
public:
    using Key = std::pair<int, int>;

    GradedChar() = default;
    explicit GradedChar(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    const std::map<Key, VirtualChar>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    void add(int degree, int eigen_exp, const Partition& lambda, long c);
    void add(int degree, int eigen_exp, const VirtualChar& v);

    std::vector<int> degrees() const;  // increasing, nonzero entries only
    VirtualChar at_degree(int degree) const;
    bool operator==(const GradedChar& o) const { return rank_ == o.rank_ && entries_ == o.entries_; }

private:
    int rank_ = 0;
    std::map<Key, VirtualChar> entries_;
};

struct EllParams {
    int m = 1;
    int r = 1;
};

VirtualChar hc_restrict(const VirtualChar& v);
// Sign of each summand is (-1)^(leg count).
VirtualChar dl_induce(const Partition& mu, int d);

struct PhiBlock {
    Partition core;
    std::vector<Partition> members;
    bool defect_zero = false;  // singleton whose member is itself a d-core
};
std::vector<PhiBlock> phi_d_blocks(int n, int d);

std::vector<Partition> principal_block_labels(int n, int m);

}  // namespace dlcoh
