#include "cokerdist/poly.hpp"

namespace coker {

bool is_irreducible(const FqPoly& P) {
    if (!P.is_monic()) throw std::invalid_argument("irreducibility test requires a monic polynomial");
    if (P.degree() < 1) throw std::invalid_argument("irreducibility test requires degree >= 1");
    // Trial division: a reducible monic polynomial has a monic factor of degree
    // between 1 and deg/2. Exhaustive and exact at the supported field sizes.
    for (int d = 1; d <= P.degree() / 2; ++d)
        for (const auto& f : monic_polys(P.ctx, d))
            if (poly_divides(f, P)) return false;
    return true;
}

std::vector<FqPoly> monic_polys(const FieldCtx::Ptr& field, int d) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= field->q();
    std::vector<FqPoly> out;
    out.reserve(count);
    for (std::uint64_t c = 0; c < count; ++c) {
        std::vector<Code> coeffs(static_cast<std::size_t>(d) + 1, 0);
        coeffs[static_cast<std::size_t>(d)] = field->one();
        std::uint64_t rest = c;
        for (int i = 0; i < d; ++i) {
            coeffs[static_cast<std::size_t>(i)] = static_cast<Code>(rest % field->q());
            rest /= field->q();
        }
        out.emplace_back(field, std::move(coeffs));
    }
    return out;
}

std::vector<FqPoly> irreducible_polys(const FieldCtx::Ptr& field, int d) {
    std::vector<FqPoly> out;
    for (auto& f : monic_polys(field, d))
        if (is_irreducible(f)) out.push_back(std::move(f));
    return out;
}

FqPoly reduce_poly(const RPoly& P) {
    std::vector<Code> c(P.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = P.ctx->reduce(P.coeffs[i]);
    return FqPoly(P.ctx->residue_field(), std::move(c));
}

RPoly lift_poly(const RingCtx::Ptr& ring, const FqPoly& P) {
    if (!ring->residue_field()->matches(*P.ctx)) throw std::invalid_argument("residue field mismatch");
    std::vector<Code> c(P.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring->lift(P.coeffs[i]);
    return RPoly(ring, std::move(c));
}

}  // namespace coker
