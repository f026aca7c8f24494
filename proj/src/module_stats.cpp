#include "cokerdist/module_stats.hpp"

#include <set>
#include <stdexcept>

namespace coker {

Partition p_part_partition(const FqMatrix& A, const FqPoly& P) {
    if (!P.ctx || !A.ctx || !P.ctx->matches(*A.ctx)) throw std::invalid_argument("point and matrix context mismatch");
    if (!is_irreducible(P)) throw std::invalid_argument("p-part extraction requires a monic irreducible point");
    return p_part_partition_unchecked(A, P);
}

Partition p_part_partition_unchecked(const FqMatrix& A, const FqPoly& P) {
    int d = P.degree();
    FqMatrix B = poly_eval_matrix(P, A);
    // number of parts >= k is (rank B^{k-1} - rank B^k) / d
    std::vector<int> parts_ge;
    FqMatrix power = B;
    int prev_rank = A.n;
    while (true) {
        int r = matrix_rank(power);
        if (r == prev_rank) break;
        int diff = prev_rank - r;
        if (diff % d != 0) throw std::domain_error("rank drop not divisible by the point degree");
        parts_ge.push_back(diff / d);
        prev_rank = r;
        if (r == 0) break;
        power = mat_mul(power, B);
    }
    // parts_ge is the conjugate partition of mu
    return Partition(std::move(parts_ge)).conjugate();
}

int choose_truncation_level(const Partition& H) { return H.largest(); }

TypeReport coker_report(const RMatrix& A, const std::vector<RPoly>& points,
                        const std::vector<std::optional<Partition>>& targets) {
    if (!targets.empty() && targets.size() != points.size())
        throw std::invalid_argument("targets must be empty or match the point list");
    const auto& R = *A.ctx;
    int needed = 1;
    for (const auto& t : targets)
        if (t) needed = std::max(needed, choose_truncation_level(*t) + 1);
    if (static_cast<int>(R.level()) < needed)
        throw std::invalid_argument("ring level too low for the requested targets");

    std::set<std::vector<Code>> reductions;
    for (const auto& P : points) {
        if (!P.ctx || !P.ctx->matches(R)) throw std::invalid_argument("point context mismatch");
        if (!P.is_monic()) throw std::invalid_argument("points must be monic");
        FqPoly red = reduce_poly(P);
        if (!is_irreducible(red)) throw std::invalid_argument("point reductions must be irreducible");
        if (!reductions.insert(red.coeffs).second) throw std::invalid_argument("point reductions must be distinct");
    }

    TypeReport report;
    report.n = A.n;
    report.ring = A.ctx;
    for (std::size_t j = 0; j < points.size(); ++j) {
        RMatrix B = poly_eval_matrix(points[j], A);
        PointReport pr;
        pr.poly = points[j];
        pr.type = cokernel_type(B, /*require_exact=*/true);
        pr.vanishes = pr.type.empty();
        if (!targets.empty() && targets[j]) pr.matches_target = (pr.type == *targets[j]);
        report.points.push_back(std::move(pr));
    }
    return report;
}

}  // namespace coker
