#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cokerdist/field.hpp"

namespace coker {

enum class RingKind { PadicQuotient, EqualCharQuotient, GaloisRing };

// A finite chain ring R/m^level with residue field F_q and uniformizer pi:
//   PadicQuotient(p, level)        = Z/p^level,           pi = p
//   EqualCharQuotient(F_q, level)  = F_q[t]/(t^level),    pi = t
//   GaloisRing(p, level, e)        = Z_{p^level}[x]/(f),  pi = p, f a monic lift of an
//                                    irreducible of degree e over F_p
// Elements are codes in [0, size); arithmetic is table-driven. level = N + 1 where N is
// the largest truncation exponent the ring can certify exactly.
class RingCtx {
   public:
    using Ptr = std::shared_ptr<const RingCtx>;

    static Ptr padic(std::uint32_t p, std::uint32_t level);
    static Ptr equal_char(FieldCtx::Ptr residue, std::uint32_t level);
    static Ptr galois(std::uint32_t p, std::uint32_t level, std::uint32_t e);
    static Ptr galois_with_lift(std::uint32_t p, std::uint32_t level, std::vector<std::uint32_t> modulus_lift);

    RingKind kind() const { return kind_; }
    std::uint32_t level() const { return level_; }
    std::uint32_t size() const { return size_; }
    std::uint32_t q() const { return residue_->q(); }
    const FieldCtx::Ptr& residue_field() const { return residue_; }
    const std::vector<std::uint32_t>& modulus_lift() const { return modulus_lift_; }  // GaloisRing only

    Code zero() const { return 0; }
    Code one() const { return one_; }
    Code pi() const { return pi_; }
    Code pi_pow(int v) const;

    Code add(Code a, Code b) const { return add_[a * size_ + b]; }
    Code sub(Code a, Code b) const { return add_[a * size_ + neg_[b]]; }
    Code neg(Code a) const { return neg_[a]; }
    Code mul(Code a, Code b) const { return mul_[a * size_ + b]; }
    bool is_unit(Code a) const { return val_[a] == 0; }
    Code inv(Code a) const;  // units only

    // pi-adic valuation by divisibility; valuation(0) = level
    int valuation(Code a) const { return val_[a]; }
    // For a != 0, the unit u with a * u = pi^valuation(a).
    Code normalizer(Code a) const;
    // Exact division by pi^v; requires valuation(a) >= v.
    Code div_pi_pow(Code a, int v) const;

    Code reduce(Code a) const { return reduce_[a]; }     // image in the residue field
    Code lift(Code fq_code) const { return lift_[fq_code]; }
    Code from_int(long v) const;

    bool matches(const RingCtx& other) const;
    std::string describe() const;

   private:
    RingCtx() = default;
    void build_tables();
    Code raw_mul(Code a, Code b) const;
    Code raw_add(Code a, Code b) const;
    Code raw_neg(Code a) const;

    RingKind kind_ = RingKind::PadicQuotient;
    std::uint32_t level_ = 0, size_ = 0, one_ = 0, pi_ = 0;
    std::uint32_t p_ = 0, e_ = 1;   // PadicQuotient/GaloisRing data
    std::uint64_t p_level_ = 0;     // p^level, digit modulus for GaloisRing coords
    FieldCtx::Ptr residue_;
    std::vector<std::uint32_t> modulus_lift_;  // little-endian, length e+1, GaloisRing only
    std::vector<Code> add_, mul_, neg_, norm_, reduce_, lift_;
    std::vector<int> val_;
};

}  // namespace coker
