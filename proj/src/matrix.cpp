#include "cokerdist/matrix.hpp"

#include <algorithm>

namespace coker {

int matrix_rank(const FqMatrix& A) {
    const auto& F = *A.ctx;
    int n = A.n;
    std::vector<Code> m = A.a;
    auto at = [&](int i, int j) -> Code& { return m[static_cast<std::size_t>(i) * n + j]; };
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < n; ++j) std::swap(at(piv, j), at(rank, j));
        Code inv = F.inv(at(rank, col));
        for (int j = col; j < n; ++j) at(rank, j) = F.mul(inv, at(rank, j));
        for (int i = rank + 1; i < n; ++i) {
            Code f = at(i, col);
            if (f == 0) continue;
            for (int j = col; j < n; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

bool is_invertible(const FqMatrix& A) { return matrix_rank(A) == A.n; }

bool is_invertible(const RMatrix& A) { return matrix_rank(reduce_matrix(A)) == A.n; }

FqMatrix reduce_matrix(const RMatrix& A) {
    FqMatrix B(A.ctx->residue_field(), A.n);
    for (std::size_t i = 0; i < A.a.size(); ++i) B.a[i] = A.ctx->reduce(A.a[i]);
    return B;
}

RMatrix lift_matrix(const RingCtx::Ptr& ring, const FqMatrix& A) {
    if (!ring->residue_field()->matches(*A.ctx)) throw std::invalid_argument("residue field mismatch");
    RMatrix B(ring, A.n);
    for (std::size_t i = 0; i < A.a.size(); ++i) B.a[i] = ring->lift(A.a[i]);
    return B;
}

std::vector<int> smith_exponents(const RMatrix& A) {
    const auto& R = *A.ctx;
    int n = A.n;
    int level = static_cast<int>(R.level());
    std::vector<Code> m = A.a;
    auto at = [&](int i, int j) -> Code& { return m[static_cast<std::size_t>(i) * n + j]; };

    std::vector<int> exps;
    exps.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        int best_v = level + 1, bi = -1, bj = -1;
        for (int i = s; i < n; ++i)
            for (int j = s; j < n; ++j) {
                int v = R.valuation(at(i, j));
                if (v < best_v) {
                    best_v = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best_v >= level) {
            // remaining block is zero
            for (int k = s; k < n; ++k) exps.push_back(level);
            break;
        }
        if (bi != s)
            for (int j = s; j < n; ++j) std::swap(at(bi, j), at(s, j));
        if (bj != s)
            for (int i = s; i < n; ++i) std::swap(at(i, bj), at(i, s));
        // scale the pivot row by the unit that sends the pivot to pi^v
        Code u = R.normalizer(at(s, s));
        for (int j = s; j < n; ++j) at(s, j) = R.mul(u, at(s, j));
        // clear column and row; every entry is a ring multiple of pi^v
        for (int i = s + 1; i < n; ++i) {
            Code x = at(i, s);
            if (x == 0) continue;
            Code f = R.div_pi_pow(x, best_v);
            for (int j = s; j < n; ++j) at(i, j) = R.sub(at(i, j), R.mul(f, at(s, j)));
        }
        for (int j = s + 1; j < n; ++j) {
            Code x = at(s, j);
            if (x == 0) continue;
            Code f = R.div_pi_pow(x, best_v);
            for (int i = s; i < n; ++i) at(i, j) = R.sub(at(i, j), R.mul(f, at(i, s)));
        }
        exps.push_back(best_v);
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

Partition cokernel_type(const RMatrix& A, bool require_exact) {
    int level = static_cast<int>(A.ctx->level());
    std::vector<int> exps = smith_exponents(A);
    std::vector<int> parts;
    for (int i = static_cast<int>(exps.size()); i-- > 0;) {
        if (exps[i] == 0) continue;
        if (require_exact && exps[i] >= level)
            throw std::domain_error("truncation level too low: cokernel not annihilated by m^N");
        parts.push_back(exps[i]);
    }
    return Partition(std::move(parts));
}

}  // namespace coker
