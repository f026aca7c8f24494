#pragma once

#include <compare>
#include <vector>

#include "cokerdist/rational.hpp"

namespace coker {

// Weakly decreasing positive integers; the empty partition is the unique partition of 0.
class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const;                 // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int multiplicity(int part) const;

    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;

   private:
    std::vector<int> parts_;
};

// All partitions with |lambda| <= m, ordered by size then reverse-lexicographically.
std::vector<Partition> partitions_up_to(int m);

// w(q, lambda) = q^{sum_j (lambda'_j)^2} prod_{i>=1} prod_{k=1}^{m_i} (1 - q^{-k}),
// the automorphism count of the module of type lambda over a chain ring with residue size q.
Int aut_count(const Int& q, const Partition& lambda);

// Oracle for aut_count: realizes the module as F_q^{d|lambda|} under a block-companion
// matrix T for an irreducible point of degree d, solves XT = TX, and counts the
// invertible solutions exhaustively.
Int brute_force_aut_count(std::uint32_t q, const Partition& lambda, int point_degree);

}  // namespace coker
