#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "cokerdist/field.hpp"
#include "cokerdist/ring.hpp"

namespace coker {

// Polynomial with little-endian coefficient codes over a FieldCtx or RingCtx.
// Coefficients are kept normalized (no leading zeros); the zero polynomial is {}.
template <class Ctx>
struct Poly {
    std::shared_ptr<const Ctx> ctx;
    std::vector<Code> coeffs;

    Poly() = default;
    Poly(std::shared_ptr<const Ctx> c, std::vector<Code> cs) : ctx(std::move(c)), coeffs(std::move(cs)) {
        normalize();
    }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == ctx->one(); }
    Code coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[static_cast<std::size_t>(i)] : 0;
    }

    bool operator==(const Poly& other) const { return coeffs == other.coeffs; }
};

using FqPoly = Poly<FieldCtx>;
using RPoly = Poly<RingCtx>;

template <class Ctx>
Poly<Ctx> poly_from_ints(std::shared_ptr<const Ctx> ctx, const std::vector<long>& coeffs) {
    std::vector<Code> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(ctx->from_int(v));
    return Poly<Ctx>(std::move(ctx), std::move(c));
}

template <class Ctx>
Poly<Ctx> poly_add(const Poly<Ctx>& a, const Poly<Ctx>& b) {
    const auto& R = *a.ctx;
    std::vector<Code> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = R.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly<Ctx>(a.ctx, std::move(c));
}

template <class Ctx>
Poly<Ctx> poly_mul(const Poly<Ctx>& a, const Poly<Ctx>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<Ctx>(a.ctx, {});
    const auto& R = *a.ctx;
    std::vector<Code> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = R.add(c[i + j], R.mul(a.coeffs[i], b.coeffs[j]));
    return Poly<Ctx>(a.ctx, std::move(c));
}

template <class Ctx>
Poly<Ctx> poly_pow(const Poly<Ctx>& a, int k) {
    Poly<Ctx> r(a.ctx, {a.ctx->one()});
    for (int i = 0; i < k; ++i) r = poly_mul(r, a);
    return r;
}

// Euclidean division by a polynomial with unit leading coefficient.
template <class Ctx>
void poly_divmod(const Poly<Ctx>& a, const Poly<Ctx>& b, Poly<Ctx>& quot, Poly<Ctx>& rem) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const auto& R = *a.ctx;
    if (!R.is_unit(b.coeffs.back())) throw std::invalid_argument("divisor leading coefficient must be a unit");
    Code lead_inv = R.inv(b.coeffs.back());
    std::vector<Code> r = a.coeffs;
    std::vector<Code> q(a.coeffs.size() > b.coeffs.size() ? a.coeffs.size() - b.coeffs.size() + 1 : 1, 0);
    int db = b.degree();
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        Code f = R.mul(r[static_cast<std::size_t>(i)], lead_inv);
        if (f == 0) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] =
                R.sub(r[static_cast<std::size_t>(i - db + j)], R.mul(f, b.coeffs[static_cast<std::size_t>(j)]));
    }
    quot = Poly<Ctx>(a.ctx, std::move(q));
    rem = Poly<Ctx>(a.ctx, std::move(r));
}

template <class Ctx>
bool poly_divides(const Poly<Ctx>& d, const Poly<Ctx>& a) {
    Poly<Ctx> q, r;
    poly_divmod(a, d, q, r);
    return r.is_zero();
}

// True iff P is irreducible over F_q; P must be monic of degree >= 1.
bool is_irreducible(const FqPoly& P);

// All monic polynomials of exact degree d, in code-lexicographic order.
std::vector<FqPoly> monic_polys(const FieldCtx::Ptr& field, int d);
// All monic irreducibles of exact degree d.
std::vector<FqPoly> irreducible_polys(const FieldCtx::Ptr& field, int d);

// Coefficientwise reduction R -> F_q and canonical lift F_q -> R.
FqPoly reduce_poly(const RPoly& P);
RPoly lift_poly(const RingCtx::Ptr& ring, const FqPoly& P);

}  // namespace coker
