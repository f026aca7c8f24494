#include "cokerdist/partition.hpp"

#include <map>
#include <stdexcept>

#include "cokerdist/matrix.hpp"

namespace coker {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::multiplicity(int part) const {
    int m = 0;
    for (int p : parts_) m += (p == part);
    return m;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    for (int k = 1; k <= largest(); ++k) {
        int c = 0;
        for (int p : parts_) c += (p >= k);
        conj.push_back(c);
    }
    return Partition(std::move(conj));
}

namespace {
void partitions_of(int k, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (k == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = std::min(k, max_part); first >= 1; --first) {
        prefix.push_back(first);
        partitions_of(k - first, first, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_up_to(int m) {
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    for (int k = 0; k <= m; ++k) partitions_of(k, k, prefix, out);
    return out;
}

Int aut_count(const Int& q, const Partition& lambda) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (q.fits_ulong_p()) {
        std::uint32_t p, e;
        factor_prime_power(q.get_ui(), p, e);
    }
    if (lambda.empty()) return 1;
    Partition conj = lambda.conjugate();
    unsigned long sq = 0;
    for (int c : conj.parts()) sq += static_cast<unsigned long>(c) * c;
    Rat w(int_pow(q, sq));
    for (int part = 1; part <= lambda.largest(); ++part) {
        int mult = lambda.multiplicity(part);
        for (int k = 1; k <= mult; ++k) w *= Rat(1) - inv_pow(q, static_cast<unsigned long>(k));
    }
    return to_integer(w, "aut_count");
}

namespace {

// Companion matrix of a monic polynomial, written into block (off, off).
void put_companion(FqMatrix& T, int off, const FqPoly& f) {
    const auto& F = *T.ctx;
    int d = f.degree();
    for (int i = 1; i < d; ++i) T.at(off + i, off + i - 1) = F.one();
    for (int i = 0; i < d; ++i) T.at(off + i, off + d - 1) = F.neg(f.coeff(i));
}

// Basis of {X : XT = TX} as vectors of length dim*dim over F_q.
std::vector<std::vector<Code>> commutant_basis(const FieldCtx::Ptr& field, const FqMatrix& T) {
    const auto& F = *field;
    int m = T.n;
    int vars = m * m;
    // rows: equations (i,j); columns: entries X[k][l]
    std::vector<std::vector<Code>> eq(static_cast<std::size_t>(vars), std::vector<Code>(static_cast<std::size_t>(vars), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto& row = eq[static_cast<std::size_t>(i * m + j)];
            // sum_k X[i][k] T[k][j] - T[i][k] X[k][j] = 0
            for (int k = 0; k < m; ++k) {
                row[static_cast<std::size_t>(i * m + k)] = F.add(row[static_cast<std::size_t>(i * m + k)], T.at(k, j));
                row[static_cast<std::size_t>(k * m + j)] =
                    F.sub(row[static_cast<std::size_t>(k * m + j)], T.at(i, k));
            }
        }
    // row reduce and read off the nullspace
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < vars && rank < vars; ++col) {
        int piv = -1;
        for (int r = rank; r < vars; ++r)
            if (eq[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(eq[static_cast<std::size_t>(piv)], eq[static_cast<std::size_t>(rank)]);
        Code inv = F.inv(eq[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)]);
        for (int c = 0; c < vars; ++c)
            eq[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] =
                F.mul(inv, eq[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]);
        for (int r = 0; r < vars; ++r) {
            if (r == rank) continue;
            Code f = eq[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < vars; ++c)
                eq[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = F.sub(
                    eq[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                    F.mul(f, eq[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(vars), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Code>> basis;
    for (int free = 0; free < vars; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Code> v(static_cast<std::size_t>(vars), 0);
        v[static_cast<std::size_t>(free)] = F.one();
        for (int r = 0; r < rank; ++r) {
            Code coef = eq[static_cast<std::size_t>(r)][static_cast<std::size_t>(free)];
            if (coef != 0) v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = F.neg(coef);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct CommutantCounter {
    const FieldCtx& F;
    int m;
    std::vector<std::vector<Code>> basis;
    std::vector<Code> X;
    std::vector<Code> scratch;
    Int count = 0;

    bool invertible_scratch() {
        int n = m;
        auto at = [&](int i, int j) -> Code& { return scratch[static_cast<std::size_t>(i) * n + j]; };
        scratch = X;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (at(i, col) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return false;
            if (piv != col)
                for (int j = col; j < n; ++j) std::swap(at(piv, j), at(col, j));
            Code inv = F.inv(at(col, col));
            for (int i = col + 1; i < n; ++i) {
                Code f = at(i, col);
                if (f == 0) continue;
                f = F.mul(f, inv);
                for (int j = col; j < n; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(col, j)));
            }
        }
        return true;
    }

    void add_scaled(const std::vector<Code>& v, Code s) {
        if (s == 0) return;
        for (std::size_t i = 0; i < X.size(); ++i) X[i] = F.add(X[i], F.mul(s, v[i]));
    }

    void dfs(std::size_t depth) {
        if (depth == basis.size()) {
            if (invertible_scratch()) ++count;
            return;
        }
        // walk the coefficient codes at this depth, updating X incrementally
        dfs(depth + 1);
        Code prev = 0;
        for (Code v = 1; v < F.q(); ++v) {
            add_scaled(basis[depth], F.sub(v, prev));
            prev = v;
            dfs(depth + 1);
        }
        add_scaled(basis[depth], F.neg(prev));
    }
};

}  // namespace

Int brute_force_aut_count(std::uint32_t q, const Partition& lambda, int point_degree) {
    if (point_degree < 1) throw std::invalid_argument("point degree must be >= 1");
    int dim = point_degree * lambda.size();
    if (dim > 6 || q > 4) throw std::invalid_argument("brute-force automorphism guard exceeded (need d*|lambda| <= 6, q <= 4)");
    if (lambda.empty()) return 1;

    std::uint32_t p, e;
    factor_prime_power(q, p, e);
    auto field = FieldCtx::make(p, e);
    auto irr = irreducible_polys(field, point_degree);
    const FqPoly& P = irr.front();

    FqMatrix T(field, dim);
    int off = 0;
    for (int part : lambda.parts()) {
        FqPoly f = poly_pow(P, part);
        put_companion(T, off, f);
        off += f.degree();
    }

    auto basis = commutant_basis(field, T);
    double combos = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) combos *= q;
    if (combos > static_cast<double>(1u << 27))
        throw std::invalid_argument("brute-force automorphism guard exceeded (commutant too large)");

    CommutantCounter counter{*field, dim, std::move(basis), std::vector<Code>(static_cast<std::size_t>(dim) * dim, 0),
                             {}};
    counter.dfs(0);
    return counter.count;
}

}  // namespace coker
