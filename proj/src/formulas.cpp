#include "cokerdist/formulas.hpp"

#include <set>
#include <stdexcept>

namespace coker {

Rat cokernel_type_prob(const Int& q, int n, const Partition& lambda) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    int l = lambda.length();  // dim H/mH
    if (n < l) return Rat(0);
    Rat w(aut_count(q, lambda));
    return (Rat(1) / w) * unit_fraction_product(q, 1, n) * unit_fraction_product(q, n - l + 1, n);
}

Rat p_part_type_prob(const Int& q, int d, int n, const Partition& nu) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    int h = nu.size() * d;
    if (n < h) return Rat(0);
    Rat b = bn_coeffs(q, d, n - h)[static_cast<std::size_t>(n - h)];
    Rat w(aut_count(int_pow(q, static_cast<unsigned long>(d)), nu));
    return b / w * unit_fraction_product(q, 1, n);
}

RationalInterval joint_type_limit(const LimitSpec& spec, const Rat& tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    RationalInterval acc{Rat(1), Rat(1)};
    if (spec.points.empty()) return acc;
    // Each point factor lies in (0, 1]; splitting the tolerance evenly keeps the
    // product width within tol.
    Rat per_point = tol / static_cast<int>(spec.points.size());
    for (const auto& [d, nu] : spec.points) {
        if (d < 1) throw std::invalid_argument("degree must be >= 1");
        Rat w(aut_count(int_pow(spec.q, static_cast<unsigned long>(d)), nu));
        RationalInterval factor = limit_product(spec.q, d, per_point).scaled(Rat(1) / w);
        acc = acc * factor;
    }
    return acc;
}

RationalInterval vanishing_then_type_limit(const Int& q, const std::vector<int>& degrees, const Partition& lambda,
                                           const Rat& tol) {
    LimitSpec spec;
    spec.q = q;
    for (int d : degrees) spec.points.emplace_back(d, Partition{});
    spec.points.emplace_back(1, lambda);
    return joint_type_limit(spec, tol);
}

Int corank_count(const Int& q, int n, int l) {
    if (l < 0 || l > n) throw std::invalid_argument("corank must satisfy 0 <= l <= n");
    Rat value(int_pow(q, static_cast<unsigned long>(n) * n - static_cast<unsigned long>(l) * l));
    Rat sq = unit_fraction_product(q, l + 1, n);
    value *= sq * sq;
    value /= unit_fraction_product(q, 1, n - l);
    return to_integer(value, "corank_count");
}

Int cokernel_lift_count(const Int& q, int N, int n, const Partition& lambda, int corank) {
    if (N < lambda.largest()) throw std::invalid_argument("N too small: m^N must annihilate the type");
    int l = lambda.length();
    if (corank != l) return 0;
    Rat value(int_pow(q, static_cast<unsigned long>(N) * n * n + static_cast<unsigned long>(l) * l));
    value /= Rat(aut_count(q, lambda));
    Rat sq = unit_fraction_product(q, 1, l);
    value *= sq * sq;
    return to_integer(value, "cokernel_lift_count");
}

RationalInterval cl_corank_prob(const Int& q, int l, const Rat& tol) {
    if (l < 0) throw std::invalid_argument("l must be >= 0");
    RationalInterval base = limit_product(q, 1, tol);
    Rat scale = inv_pow(q, static_cast<unsigned long>(l) * l);
    Rat den = unit_fraction_product(q, 1, l);
    scale /= den * den;
    return base.scaled(scale);
}

Rat vanishing_transfer_factor(const Int& q, int n, const std::vector<std::pair<int, Partition>>& modules) {
    int h = 0;
    Rat auts(1);
    for (const auto& [d, nu] : modules) {
        if (d < 1) throw std::invalid_argument("degree must be >= 1");
        h += nu.size() * d;
        auts *= Rat(aut_count(int_pow(q, static_cast<unsigned long>(d)), nu));
    }
    if (n < h) throw std::invalid_argument("n must be at least the total module dimension");
    return auts / unit_fraction_product(q, n - h + 1, n);
}

Rat aut_weighted_level_prob(const Int& q, int m, const Partition& lambda) {
    if (lambda.size() > m) throw std::invalid_argument("|lambda| must be <= m");
    Rat mass(0);
    for (const auto& nu : partitions_up_to(m)) mass += Rat(1) / Rat(aut_count(q, nu));
    return (Rat(1) / Rat(aut_count(q, lambda))) / mass;
}

std::vector<std::string> formula_ids() {
    return {"prop-fw", "thm-main1", "thm-main3x", "conj-limit", "corank", "lemma-count", "cl2", "boreico",
            "cl-finite"};
}

}  // namespace coker
