#pragma once

#include <string>
#include <vector>

#include "cokerdist/partition.hpp"
#include "cokerdist/series.hpp"

namespace coker {

// Closed-form catalog. Every function returns an exact rational, an exact integer, or
// a rational interval enclosing an infinite-product limit. Each formula is addressable
// through a stable string id (see formula_ids) used by the CLI and the verifier.

// Joint limit target: points (degree d_j, partition nu_j) with distinct point markers.
struct LimitSpec {
    Int q;
    std::vector<std::pair<int, Partition>> points;
};

// id "prop-fw": Prob over Mat_n(R/m^{N+1}) that coker(A) has type lambda,
//   |Aut|^{-1} [prod_{i=1}^{n}(1-q^{-i})] [prod_{j=n-l+1}^{n}(1-q^{-j})],  l = #parts,
// and 0 when n < l.
Rat cokernel_type_prob(const Int& q, int n, const Partition& lambda);

// id "thm-main1": Prob over Mat_n(F_q) that the type at a degree-d point equals nu,
//   b_{n-h}(d)/w(q^d, nu) * prod_{i=1}^{n}(1-q^{-i}) with h = |nu| d, 0 when n < h.
Rat p_part_type_prob(const Int& q, int d, int n, const Partition& nu);

// id "conj-limit": prod_j  w(q^{d_j}, nu_j)^{-1} prod_{i>=1}(1 - q^{-i d_j}).
RationalInterval joint_type_limit(const LimitSpec& spec, const Rat& tol);

// id "thm-main3x": joint_type_limit with points (d_1, empty), ..., (d_{r-1}, empty),
// (1, lambda).
RationalInterval vanishing_then_type_limit(const Int& q, const std::vector<int>& degrees,
                                           const Partition& lambda, const Rat& tol);

// id "corank": number of matrices in Mat_n(F_q) with corank l,
//   q^{n^2 - l^2} prod_{i=l+1}^{n}(1-q^{-i})^2 / prod_{j=1}^{n-l}(1-q^{-j}).
Int corank_count(const Int& q, int n, int l);

// id "lemma-count": number of lifts A in Mat_n(R/m^{N+1}) of a fixed reduction with
// coker(P(A)) of type lambda, for deg P = 1:
//   q^{N n^2 + l^2} |Aut|^{-1} prod_{i=1}^{l}(1-q^{-i})^2 when the reduction has
// corank l = #parts(lambda), else 0. Requires N >= largest part.
Int cokernel_lift_count(const Int& q, int N, int n, const Partition& lambda, int corank);

// id "cl2": mass of {dim H/mH = l} under the aut-weighted limit distribution,
//   q^{-l^2} prod_{i>=1}(1-q^{-i}) / prod_{i=1}^{l}(1-q^{-i})^2.
RationalInterval cl_corank_prob(const Int& q, int l, const Rat& tol);

// id "boreico": the exact factor relating vanishing probabilities in dimension
// n - sum h_j to exact-type probabilities in dimension n,
//   prod_j w(q^{d_j}, nu_j) / prod_{i=n-h+1}^{n}(1-q^{-i}),  h = sum |nu_j| d_j <= n.
Rat vanishing_transfer_factor(const Int& q, int n, const std::vector<std::pair<int, Partition>>& modules);

// id "cl-finite": aut-weighted probability of lambda among all partitions of size <= m,
//   w(q,lambda)^{-1} / sum_{|nu| <= m} w(q,nu)^{-1}.
Rat aut_weighted_level_prob(const Int& q, int m, const Partition& lambda);

std::vector<std::string> formula_ids();

}  // namespace coker
