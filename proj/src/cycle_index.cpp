#include "cokerdist/cycle_index.hpp"

#include <set>
#include <stdexcept>

namespace coker {

namespace {

bool is_t_point(const FqPoly& P) { return P.degree() == 1 && P.coeff(0) == 0; }

void validate_constraints(const FieldCtx::Ptr& field, const std::vector<PointConstraint>& constraints, int n_max) {
    std::set<std::vector<Code>> seen;
    for (const auto& c : constraints) {
        if (!c.point.ctx || !c.point.ctx->matches(*field))
            throw std::invalid_argument("constraint point context mismatch");
        if (!is_irreducible(c.point)) throw std::invalid_argument("constraint points must be monic irreducible");
        if (!seen.insert(c.point.coeffs).second) throw std::invalid_argument("constraint points must be distinct");
        if (c.allowed) {
            bool has_empty = false;
            for (const auto& nu : *c.allowed) {
                has_empty = has_empty || nu.empty();
                if (nu.size() * c.point.degree() > n_max)
                    throw std::invalid_argument("allowed partition exceeds the truncation order");
            }
            if (!has_empty) throw std::invalid_argument("allowed sets must contain the empty partition");
        }
    }
}

}  // namespace

TruncSeries constrained_series(const FieldCtx::Ptr& field, const std::vector<PointConstraint>& constraints,
                               int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    validate_constraints(field, constraints, n_max);
    Int q(field->q());

    // Background of unconstrained points: 1/(1-u) covers everything away from t, the
    // t factor is restored when t is unconstrained, and each constrained point is
    // divided back out in closed form.
    TruncSeries s = TruncSeries::geometric(n_max);
    bool t_constrained = false;
    for (const auto& c : constraints)
        if (c.allowed && is_t_point(c.point)) t_constrained = true;
    if (!t_constrained) s = s * qpoch_expand(inv_pow(q, 1), inv_pow(q, 1), 1, PochForm::Reciprocal, n_max);

    for (const auto& c : constraints) {
        if (!c.allowed) continue;  // free point
        int d = c.point.degree();
        Rat qd = inv_pow(q, static_cast<unsigned long>(d));
        if (!is_t_point(c.point)) s = s * qpoch_expand(qd, qd, d, PochForm::Product, n_max);
        TruncSeries factor(n_max);
        std::set<Partition> dedup((*c.allowed).begin(), (*c.allowed).end());
        Int q_point = int_pow(q, static_cast<unsigned long>(d));
        for (const auto& nu : dedup) factor[nu.size() * d] += Rat(1) / Rat(aut_count(q_point, nu));
        s = s * factor;
    }
    return s;
}

Rat finite_n_event_prob(const FieldCtx::Ptr& field, const std::vector<PointConstraint>& constraints, int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    TruncSeries s = constrained_series(field, constraints, n);
    return s[n] * unit_fraction_product(Int(field->q()), 1, n);
}

Rat exact_partition_prob(const FieldCtx::Ptr& field, const FqPoly& P, const Partition& lambda, int n) {
    if (lambda.empty()) return finite_n_event_prob(field, {{P, {{Partition{}}}}}, n);
    if (lambda.size() * P.degree() > n) return Rat(0);
    Rat both = finite_n_event_prob(field, {{P, {{Partition{}, lambda}}}}, n);
    Rat none = finite_n_event_prob(field, {{P, {{Partition{}}}}}, n);
    return both - none;
}

}  // namespace coker
