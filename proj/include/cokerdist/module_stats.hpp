#pragma once

#include <optional>
#include <vector>

#include "cokerdist/matrix.hpp"

namespace coker {

// The partition mu_P(A) of the P-part of the module structure A puts on F_q^n:
// the number of parts >= k is (rank P(A)^{k-1} - rank P(A)^k) / deg P. P must be
// monic irreducible; the division is checked exact.
Partition p_part_partition(const FqMatrix& A, const FqPoly& P);

// Same, without revalidating P; for sweeps that validated the point up front.
Partition p_part_partition_unchecked(const FqMatrix& A, const FqPoly& P);

// Minimal N with m^N H = 0, i.e. the largest part (0 for the empty partition).
// The quotient level used downstream is N + 1.
int choose_truncation_level(const Partition& H);

struct PointReport {
    RPoly poly;
    Partition type;
    bool vanishes = false;
    std::optional<bool> matches_target;
};

struct TypeReport {
    int n = 0;
    RingCtx::Ptr ring;
    std::vector<PointReport> points;
};

// Exact cokernel types of the P_j(A) over a quotient ring, compared against optional
// targets. Requires the ring level to certify every target and the reductions of the
// points to be distinct irreducibles.
TypeReport coker_report(const RMatrix& A, const std::vector<RPoly>& points,
                        const std::vector<std::optional<Partition>>& targets);

}  // namespace coker
