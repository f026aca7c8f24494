#pragma once

#include <vector>

#include "cokerdist/rational.hpp"

namespace coker {

// Truncated formal power series with exact rational coefficients c[0..order].
class TruncSeries {
   public:
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1, Rat(0)) {}
    static TruncSeries constant(int order, const Rat& v) {
        TruncSeries s(order);
        s.c_[0] = v;
        return s;
    }
    // 1 + u + u^2 + ... = 1/(1-u)
    static TruncSeries geometric(int order) {
        TruncSeries s(order);
        for (auto& x : s.c_) x = 1;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Rat& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    TruncSeries inverse() const;  // requires nonzero constant term

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    bool operator==(const TruncSeries&) const = default;

   private:
    std::vector<Rat> c_;
};

enum class PochForm {
    Product,     // prod_{i>=0} (1 - a x^i u^d)
    Reciprocal,  // prod_{i>=0} 1/(1 - a x^i u^d)
};

// Exact truncation of the q-Pochhammer products above via Euler's identities:
//   Product:    sum_k (-1)^k a^k x^{k(k-1)/2} u^{dk} / prod_{j=1}^{k} (1 - x^j)
//   Reciprocal: sum_k a^k u^{dk} / prod_{j=1}^{k} (1 - x^j)
// Requires |x| < 1 and d >= 1.
TruncSeries qpoch_expand(const Rat& a, const Rat& x, int d, PochForm form, int order);

// Coefficients b_0(d), ..., b_{n_max}(d) of
//   prod_{i>=1} (1 - (q^{-i}u)^d) / (1 - q^{1-i}u).
std::vector<Rat> bn_coeffs(const Int& q, int d, int n_max);

// Increment sequence of the same family: coefficients of
//   prod_{i>=1} (1 - (q^{-i}u)^d) / (1 - q^{-i}u),
// whose partial sums recover bn_coeffs.
std::vector<Rat> bn_increments(const Int& q, int d, int n_max);

// Exact rational enclosure [lo, hi] with lo <= hi.
struct RationalInterval {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    RationalInterval scaled(const Rat& c) const;                    // c >= 0
    RationalInterval operator*(const RationalInterval& o) const;    // nonnegative intervals
};

// Encloses prod_{i>=1} (1 - q^{-id}) as [P_M (1 - T), P_M] where P_M is the exact
// partial product through i = M and T = q^{-(M+1)d} / (1 - q^{-d}) bounds the tail;
// M is minimal with width <= tol.
RationalInterval limit_product(const Int& q, int d, const Rat& tol);

}  // namespace coker
