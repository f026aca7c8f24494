#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace coker {

using Code = std::uint32_t;

// F_q with q = p^e, elements encoded as codes in [0, q): the code's base-p digits are
// the coordinates in the power basis of F_p[t]/(modulus). Arithmetic is table-driven;
// contexts are immutable after construction and safe to share across threads.
class FieldCtx {
   public:
    using Ptr = std::shared_ptr<const FieldCtx>;

    // Modulus is the lexicographically smallest monic irreducible of degree e over F_p
    // (tuples compared constant term first), so element printing is reproducible.
    static Ptr make(std::uint32_t p, std::uint32_t e);
    static Ptr make_with_modulus(std::uint32_t p, std::vector<Code> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<Code>& modulus() const { return modulus_; }  // little-endian, length e+1

    Code zero() const { return 0; }
    Code one() const { return 1; }
    Code add(Code a, Code b) const { return add_[a * q_ + b]; }
    Code sub(Code a, Code b) const { return add_[a * q_ + neg_[b]]; }
    Code neg(Code a) const { return neg_[a]; }
    Code mul(Code a, Code b) const { return mul_[a * q_ + b]; }
    Code inv(Code a) const;
    Code pow(Code a, unsigned long k) const;
    bool is_unit(Code a) const { return a != 0; }

    std::vector<Code> coeffs(Code a) const;        // length-e residues in [0, p)
    Code from_coeffs(const std::vector<Code>& c) const;
    Code from_int(long v) const;                   // prime-subfield embedding

    bool matches(const FieldCtx& other) const;

   private:
    FieldCtx() = default;
    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<Code> modulus_;
    std::vector<Code> add_, mul_, neg_, inv_;
};

}  // namespace coker
