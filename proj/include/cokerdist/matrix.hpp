#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "cokerdist/partition.hpp"
#include "cokerdist/poly.hpp"

namespace coker {

// Square matrix of element codes over a FieldCtx or RingCtx, row-major.
template <class Ctx>
struct Matrix {
    std::shared_ptr<const Ctx> ctx;
    int n = 0;
    std::vector<Code> a;

    Matrix() = default;
    Matrix(std::shared_ptr<const Ctx> c, int dim) : ctx(std::move(c)), n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}
    Matrix(std::shared_ptr<const Ctx> c, int dim, std::vector<Code> entries)
        : ctx(std::move(c)), n(dim), a(std::move(entries)) {
        if (a.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("matrix entry count mismatch");
    }

    Code& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    Code at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static Matrix identity(std::shared_ptr<const Ctx> c, int dim) {
        Matrix m(c, dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = c->one();
        return m;
    }

    bool operator==(const Matrix& other) const { return n == other.n && a == other.a; }
};

using FqMatrix = Matrix<FieldCtx>;
using RMatrix = Matrix<RingCtx>;

template <class Ctx>
Matrix<Ctx> mat_mul(const Matrix<Ctx>& x, const Matrix<Ctx>& y) {
    const auto& R = *x.ctx;
    Matrix<Ctx> z(x.ctx, x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            Code v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < x.n; ++j) z.at(i, j) = R.add(z.at(i, j), R.mul(v, y.at(k, j)));
        }
    return z;
}

template <class Ctx>
Matrix<Ctx> mat_add(const Matrix<Ctx>& x, const Matrix<Ctx>& y) {
    const auto& R = *x.ctx;
    Matrix<Ctx> z(x.ctx, x.n);
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = R.add(x.a[i], y.a[i]);
    return z;
}

template <class Ctx>
Matrix<Ctx> mat_scale(Code s, const Matrix<Ctx>& x) {
    const auto& R = *x.ctx;
    Matrix<Ctx> z(x.ctx, x.n);
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = R.mul(s, x.a[i]);
    return z;
}

// Horner evaluation; P(A) commutes with A. P and A must share their context.
template <class Ctx>
Matrix<Ctx> poly_eval_matrix(const Poly<Ctx>& P, const Matrix<Ctx>& A) {
    if (!P.ctx || !A.ctx || !P.ctx->matches(*A.ctx))
        throw std::invalid_argument("polynomial and matrix context mismatch");
    const auto& R = *A.ctx;
    Matrix<Ctx> acc(A.ctx, A.n);
    for (int i = P.degree(); i >= 0; --i) {
        acc = mat_mul(acc, A);
        Code c = P.coeff(i);
        if (c != 0)
            for (int k = 0; k < A.n; ++k) acc.at(k, k) = R.add(acc.at(k, k), c);
    }
    return acc;
}

// Row-echelon rank over F_q.
int matrix_rank(const FqMatrix& A);

bool is_invertible(const FqMatrix& A);
// Invertibility over a chain ring is detected on the residue field.
bool is_invertible(const RMatrix& A);

FqMatrix reduce_matrix(const RMatrix& A);
RMatrix lift_matrix(const RingCtx::Ptr& ring, const FqMatrix& A);

// Diagonal exponents e_1 <= ... <= e_n with g_1 A g_2 = diag(pi^{e_i}); the sentinel
// value level = N+1 marks a zero diagonal entry. Pivots take an entry of minimal
// pi-valuation, normalize it to pi^v by unit scaling, and clear its row and column.
std::vector<int> smith_exponents(const RMatrix& A);

// Partition of the nonzero Smith exponents (capped at level). With require_exact the
// result is certified as the true cokernel type, which needs every exponent <= N;
// an exponent equal to N+1 means the truncation level is too low for this cokernel.
Partition cokernel_type(const RMatrix& A, bool require_exact);

}  // namespace coker
