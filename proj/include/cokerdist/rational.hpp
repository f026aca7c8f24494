#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coker {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// q^{-e} as an exact rational
inline Rat inv_pow(const Int& q, unsigned long e) {
    Rat r(1, int_pow(q, e));
    r.canonicalize();
    return r;
}

// prod_{i=from}^{to} (1 - q^{-i*d}); empty product when from > to
inline Rat unit_fraction_product(const Int& q, int from, int to, int d = 1) {
    Rat acc(1);
    for (int i = from; i <= to; ++i) acc *= Rat(1) - inv_pow(q, static_cast<unsigned long>(i) * d);
    return acc;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline Int to_integer(const Rat& r, const char* what) {
    if (!is_integral(r)) throw std::domain_error(std::string(what) + ": result is not an integer");
    return r.get_num();
}

inline std::string rat_string(const Rat& r) { return r.get_str(); }

// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)
inline Int gl_order(const Int& q, int n) {
    Int qn = int_pow(q, n), acc = 1;
    for (int i = 0; i < n; ++i) acc *= qn - int_pow(q, i);
    return acc;
}

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Writes q = p^e with p prime; throws if q is not a prime power.
inline void factor_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& e) {
    if (q < 2) throw std::invalid_argument("prime power expected, got " + std::to_string(q));
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            std::uint32_t k = 0;
            while (q > 1) {
                if (q % d != 0) throw std::invalid_argument("not a prime power: " + std::to_string(q));
                q /= d;
                ++k;
            }
            p = static_cast<std::uint32_t>(d);
            e = k;
            return;
        }
    }
    p = static_cast<std::uint32_t>(q);  // q itself prime
    e = 1;
}

}  // namespace coker
