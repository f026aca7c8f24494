#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "cokerdist/matrix.hpp"
#include "cokerdist/module_stats.hpp"

using namespace coker;

namespace {

RMatrix ring_matrix(const RingCtx::Ptr& R, int n, std::vector<long> vals) {
    std::vector<Code> codes;
    for (long v : vals) codes.push_back(R->from_int(v));
    return RMatrix(R, n, std::move(codes));
}

// Independent cokernel-type oracle: measure |coker[pi^k]| by counting the vectors y
// with pi^k y in the column span, then read the conjugate partition off the ratios.
// Exhaustive in |R|^n, so only for tiny n.
Partition coker_type_by_counting(const RMatrix& A) {
    const auto& R = *A.ctx;
    int n = A.n;
    std::uint64_t space = 1;
    for (int i = 0; i < n; ++i) space *= R.size();

    auto encode = [&](const std::vector<Code>& v) {
        std::uint64_t c = 0;
        for (int i = n; i-- > 0;) c = c * R.size() + v[static_cast<std::size_t>(i)];
        return c;
    };
    std::set<std::uint64_t> image;
    std::vector<Code> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        std::uint64_t rest = idx;
        for (int i = 0; i < n; ++i) {
            x[static_cast<std::size_t>(i)] = static_cast<Code>(rest % R.size());
            rest /= R.size();
        }
        for (int i = 0; i < n; ++i) {
            Code acc = 0;
            for (int j = 0; j < n; ++j) acc = R.add(acc, R.mul(A.at(i, j), x[static_cast<std::size_t>(j)]));
            y[static_cast<std::size_t>(i)] = acc;
        }
        image.insert(encode(y));
    }

    std::vector<std::uint64_t> counts;  // counts[k] = |{y : pi^k y in image}|
    for (std::uint32_t k = 0; k <= R.level(); ++k) {
        Code pk = R.pi_pow(static_cast<int>(k));
        std::uint64_t cnt = 0;
        for (std::uint64_t idx = 0; idx < space; ++idx) {
            std::uint64_t rest = idx;
            for (int i = 0; i < n; ++i) {
                y[static_cast<std::size_t>(i)] = R.mul(pk, static_cast<Code>(rest % R.size()));
                rest /= R.size();
            }
            if (image.count(encode(y))) ++cnt;
        }
        counts.push_back(cnt);
    }
    // counts[k]/counts[k-1] = q^{#parts >= k}
    std::vector<int> conj;
    for (std::uint32_t k = 1; k <= R.level(); ++k) {
        REQUIRE(counts[k] % counts[k - 1] == 0);
        std::uint64_t ratio = counts[k] / counts[k - 1];
        int e = 0;
        while (ratio > 1) {
            REQUIRE(ratio % R.q() == 0);
            ratio /= R.q();
            ++e;
        }
        if (e == 0) break;
        conj.push_back(e);
    }
    return Partition(conj).conjugate();
}

RMatrix random_invertible(const RingCtx::Ptr& R, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<Code> dist(0, R->size() - 1);
    while (true) {
        RMatrix g(R, n);
        for (auto& c : g.a) c = dist(rng);
        if (is_invertible(g)) return g;
    }
}

}  // namespace

TEST_CASE("smallest irreducible modulus per field") {
    auto f21 = FieldCtx::make(2, 1);
    CHECK(f21->modulus() == std::vector<Code>{0, 1});  // t
    auto f22 = FieldCtx::make(2, 2);
    CHECK(f22->modulus() == std::vector<Code>{1, 1, 1});  // t^2 + t + 1
    auto f32 = FieldCtx::make(3, 2);
    CHECK(f32->modulus() == std::vector<Code>{1, 0, 1});  // t^2 + 1
    CHECK(f22->q() == 4);
    CHECK(f32->q() == 9);
    CHECK_THROWS_AS(FieldCtx::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx::make(2, 0), std::invalid_argument);
}

TEST_CASE("irreducibility by trial division") {
    auto f2 = FieldCtx::make(2, 1);
    CHECK(is_irreducible(poly_from_ints(f2, {1, 1, 1})));        // t^2+t+1
    CHECK_FALSE(is_irreducible(poly_from_ints(f2, {1, 0, 1})));  // (t+1)^2
    CHECK(is_irreducible(poly_from_ints(f2, {0, 1})));
    auto f4 = FieldCtx::make(2, 2);
    CHECK(is_irreducible(poly_from_ints(f4, {0, 1})));
    CHECK_THROWS_AS(is_irreducible(poly_from_ints(f2, {1, 0, 0})), std::invalid_argument);  // degree drops, not monic
    // counts of monic irreducible quadratics: (q^2 - q)/2
    CHECK(irreducible_polys(f2, 2).size() == 1);
    CHECK(irreducible_polys(FieldCtx::make(3, 1), 2).size() == 3);
    CHECK(irreducible_polys(f4, 2).size() == 6);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(42);
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        auto F = FieldCtx::make(p, e);
        std::uniform_int_distribution<Code> dist(0, F->q() - 1);
        for (int trial = 0; trial < 1000; ++trial) {
            Code a = dist(rng), b = dist(rng), c = dist(rng);
            CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->add(a, b) == F->add(b, a));
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a != 0) CHECK(F->mul(a, F->inv(a)) == F->one());
        }
    }
}

TEST_CASE("polynomial evaluation at matrices") {
    auto f2 = FieldCtx::make(2, 1);
    FqMatrix A(f2, 2, {0, 1, 1, 1});
    SUBCASE("identity evaluation") { CHECK(poly_eval_matrix(poly_from_ints(f2, {0, 1}), A) == A); }
    SUBCASE("t - 1 at the identity") {
        FqMatrix I = FqMatrix::identity(f2, 3);
        CHECK(poly_eval_matrix(poly_from_ints(f2, {-1, 1}), I) == FqMatrix(f2, 3));
    }
    SUBCASE("companion matrix of its own characteristic polynomial") {
        CHECK(poly_eval_matrix(poly_from_ints(f2, {1, 1, 1}), A) == FqMatrix(f2, 2));
    }
    SUBCASE("evaluation is a ring homomorphism into the commutant") {
        std::mt19937_64 rng(7);
        for (auto& F : {FieldCtx::make(2, 1), FieldCtx::make(2, 2)}) {
            std::uniform_int_distribution<Code> dist(0, F->q() - 1);
            for (int trial = 0; trial < 50; ++trial) {
                FqMatrix M(F, 3);
                for (auto& c : M.a) c = dist(rng);
                std::vector<Code> pc(4), qc(3);
                for (auto& c : pc) c = dist(rng);
                for (auto& c : qc) c = dist(rng);
                FqPoly P(F, pc), Q(F, qc);
                CHECK(poly_eval_matrix(poly_mul(P, Q), M) ==
                      mat_mul(poly_eval_matrix(P, M), poly_eval_matrix(Q, M)));
                FqMatrix pm = poly_eval_matrix(P, M);
                CHECK(mat_mul(pm, M) == mat_mul(M, pm));
            }
        }
    }
    SUBCASE("context mismatch is rejected") {
        auto f3 = FieldCtx::make(3, 1);
        CHECK_THROWS_AS(poly_eval_matrix(poly_from_ints(f3, {0, 1}), A), std::invalid_argument);
    }
}

TEST_CASE("rank by row echelon") {
    auto f2 = FieldCtx::make(2, 1);
    CHECK(matrix_rank(FqMatrix(f2, 3)) == 0);
    CHECK(matrix_rank(FqMatrix::identity(f2, 3)) == 3);
    CHECK(matrix_rank(FqMatrix(f2, 2, {1, 1, 1, 1})) == 1);
}

TEST_CASE("smith normal form over chain rings") {
    auto z8 = RingCtx::padic(2, 3);
    SUBCASE("identity") { CHECK(smith_exponents(RMatrix::identity(z8, 3)) == std::vector<int>{0, 0, 0}); }
    SUBCASE("already diagonal") { CHECK(smith_exponents(ring_matrix(z8, 2, {2, 0, 0, 4})) == std::vector<int>{1, 2}); }
    SUBCASE("pivoting case with counting oracle") {
        RMatrix A = ring_matrix(z8, 2, {2, 2, 2, 6});
        CHECK(smith_exponents(A) == std::vector<int>{1, 2});
        CHECK(cokernel_type(A, false) == coker_type_by_counting(A));
    }
    SUBCASE("zero matrix uses the sentinel") { CHECK(smith_exponents(RMatrix(z8, 2)) == std::vector<int>{3, 3}); }
}

TEST_CASE("smith exponents are invariant under invertible row/column action") {
    std::mt19937_64 rng(2024);
    SUBCASE("exhaustive 2x2 over Z/4") {
        auto z4 = RingCtx::padic(2, 2);
        for (std::uint32_t idx = 0; idx < 256; ++idx) {
            RMatrix A(z4, 2, {idx & 3, (idx >> 2) & 3, (idx >> 4) & 3, (idx >> 6) & 3});
            auto expected = smith_exponents(A);
            for (int trial = 0; trial < 3; ++trial) {
                RMatrix g1 = random_invertible(z4, 2, rng), g2 = random_invertible(z4, 2, rng);
                CHECK(smith_exponents(mat_mul(g1, mat_mul(A, g2))) == expected);
            }
        }
    }
    SUBCASE("random 3x3 over Z/9") {
        auto z9 = RingCtx::padic(3, 2);
        std::uniform_int_distribution<Code> dist(0, 8);
        for (int trial = 0; trial < 500; ++trial) {
            RMatrix A(z9, 3);
            for (auto& c : A.a) c = dist(rng);
            RMatrix g1 = random_invertible(z9, 3, rng), g2 = random_invertible(z9, 3, rng);
            CHECK(smith_exponents(mat_mul(g1, mat_mul(A, g2))) == smith_exponents(A));
        }
    }
}

TEST_CASE("cokernel type and the exactness contract") {
    auto z4 = RingCtx::padic(2, 2);
    CHECK(cokernel_type(RMatrix::identity(z4, 2), true) == Partition{});
    CHECK(cokernel_type(ring_matrix(z4, 2, {2, 0, 0, 1}), true) == Partition{{1}});
    CHECK(cokernel_type(ring_matrix(z4, 2, {2, 0, 0, 2}), true) == Partition{{1, 1}});
    // an entry 4 = 0 at level 2 cannot be told apart from zero, so exactness fails
    CHECK_THROWS_AS(cokernel_type(ring_matrix(z4, 2, {4, 0, 0, 2}), true), std::domain_error);
    CHECK(cokernel_type(ring_matrix(z4, 2, {4, 0, 0, 2}), false) == Partition{{2, 1}});
    CHECK(cokernel_type(RMatrix(z4, 1), false) == Partition{{2}});  // capped at the sentinel
    CHECK_THROWS_AS(cokernel_type(RMatrix(z4, 1), true), std::domain_error);
}

TEST_CASE("truncation-level independence of certified types") {
    auto z8 = RingCtx::padic(2, 3);
    auto z4 = RingCtx::padic(2, 2);
    for (std::uint32_t idx = 0; idx < 4096; ++idx) {
        RMatrix A(z8, 2, {idx & 7, (idx >> 3) & 7, (idx >> 6) & 7, (idx >> 9) & 7});
        Partition t3 = cokernel_type(A, false);
        if (t3.largest() <= 1) {
            RMatrix B(z4, 2, {A.a[0] % 4, A.a[1] % 4, A.a[2] % 4, A.a[3] % 4});
            CHECK(cokernel_type(B, false) == t3);
        }
    }
}

TEST_CASE("counting oracle agrees with the smith route across ring families") {
    std::mt19937_64 rng(99);
    std::vector<RingCtx::Ptr> rings = {RingCtx::padic(2, 2), RingCtx::padic(3, 2),
                                       RingCtx::equal_char(FieldCtx::make(2, 1), 3), RingCtx::galois(2, 2, 2)};
    for (const auto& R : rings) {
        std::uniform_int_distribution<Code> dist(0, R->size() - 1);
        for (int trial = 0; trial < 120; ++trial) {
            RMatrix A(R, 2);
            for (auto& c : A.a) c = dist(rng);
            CHECK(cokernel_type(A, false) == coker_type_by_counting(A));
        }
    }
}

TEST_CASE("chain ring structure across the three families") {
    std::mt19937_64 rng(5);
    for (const auto& R :
         {RingCtx::padic(3, 3), RingCtx::equal_char(FieldCtx::make(2, 2), 2), RingCtx::galois(2, 2, 2)}) {
        CHECK(R->valuation(R->pi()) == 1);
        CHECK(R->valuation(R->zero()) == static_cast<int>(R->level()));
        CHECK(R->valuation(R->one()) == 0);
        std::uniform_int_distribution<Code> dist(0, R->size() - 1);
        for (int trial = 0; trial < 500; ++trial) {
            Code a = dist(rng), b = dist(rng), c = dist(rng);
            CHECK(R->mul(a, R->mul(b, c)) == R->mul(R->mul(a, b), c));
            CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
            CHECK(R->mul(a, b) == R->mul(b, a));
            int va = R->valuation(a), vb = R->valuation(b);
            int vsum = std::min(va + vb, static_cast<int>(R->level()));
            CHECK(R->valuation(R->mul(a, b)) == vsum);
            if (a != 0) {
                Code u = R->normalizer(a);
                CHECK(R->is_unit(u));
                CHECK(R->mul(a, u) == R->pi_pow(va));
            }
        }
        // the residue map is a ring homomorphism onto F_q
        const auto& F = *R->residue_field();
        for (int trial = 0; trial < 200; ++trial) {
            Code a = dist(rng), b = dist(rng);
            CHECK(R->reduce(R->add(a, b)) == F.add(R->reduce(a), R->reduce(b)));
            CHECK(R->reduce(R->mul(a, b)) == F.mul(R->reduce(a), R->reduce(b)));
        }
        CHECK(R->reduce(R->pi()) == 0);
    }
    CHECK(RingCtx::galois(2, 2, 2)->size() == 16);
    CHECK(RingCtx::galois(2, 2, 2)->q() == 4);
    CHECK_THROWS_AS(RingCtx::padic(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(RingCtx::padic(6, 2), std::invalid_argument);
}
