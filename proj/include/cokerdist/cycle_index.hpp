#pragma once

#include <optional>
#include <vector>

#include "cokerdist/matrix.hpp"
#include "cokerdist/series.hpp"

namespace coker {

// Constrains the similarity-class data at one closed point: the allowed set lists the
// admissible partitions at that point (it must contain the empty partition); an absent
// allowed set leaves the point free.
struct PointConstraint {
    FqPoly point;                                     // monic irreducible
    std::optional<std::vector<Partition>> allowed;    // nullopt = free
};

// Specialized class-counting series: coefficient of u^n is
// (1/|GL_n|) |{A in Mat_n(F_q) : mu_P(A) in allowed(P) for every constrained P}|.
// Computed as the product of the finite constrained factors
//   sum_{nu in allowed} u^{|nu| deg P} / w(q^{deg P}, nu)
// with the closed-form unconstrained background over the remaining points.
TruncSeries constrained_series(const FieldCtx::Ptr& field, const std::vector<PointConstraint>& constraints,
                               int n_max);

// Probability that a uniform A in Mat_n(F_q) satisfies every constraint:
// coefficient of u^n times prod_{i=1}^{n} (1 - q^{-i}).
Rat finite_n_event_prob(const FieldCtx::Ptr& field, const std::vector<PointConstraint>& constraints, int n);

// Exact Prob(mu_P(A) = lambda) for uniform A in Mat_n(F_q); for nonempty lambda this is
// Prob(mu_P in {empty, lambda}) - Prob(mu_P = empty).
Rat exact_partition_prob(const FieldCtx::Ptr& field, const FqPoly& P, const Partition& lambda, int n);

}  // namespace coker
