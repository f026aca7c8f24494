#include "cokerdist/ring.hpp"

#include <stdexcept>
#include <string>

#include "cokerdist/rational.hpp"

namespace coker {

namespace {
constexpr std::uint32_t kMaxTableSize = 1024;

std::uint64_t upow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}
}  // namespace

RingCtx::Ptr RingCtx::padic(std::uint32_t p, std::uint32_t level) {
    if (!is_prime_u32(p)) throw std::invalid_argument("p must be prime");
    if (level < 1) throw std::invalid_argument("quotient level must be >= 1");
    std::uint64_t size = upow(p, level);
    if (size > kMaxTableSize) throw std::invalid_argument("quotient ring too large for table-based arithmetic");
    auto ctx = std::shared_ptr<RingCtx>(new RingCtx());
    ctx->kind_ = RingKind::PadicQuotient;
    ctx->level_ = level;
    ctx->p_ = p;
    ctx->e_ = 1;
    ctx->p_level_ = size;
    ctx->size_ = static_cast<std::uint32_t>(size);
    ctx->residue_ = FieldCtx::make(p, 1);
    ctx->build_tables();
    return ctx;
}

RingCtx::Ptr RingCtx::equal_char(FieldCtx::Ptr residue, std::uint32_t level) {
    if (!residue) throw std::invalid_argument("residue field required");
    if (level < 1) throw std::invalid_argument("quotient level must be >= 1");
    std::uint64_t size = upow(residue->q(), level);
    if (size > kMaxTableSize) throw std::invalid_argument("quotient ring too large for table-based arithmetic");
    auto ctx = std::shared_ptr<RingCtx>(new RingCtx());
    ctx->kind_ = RingKind::EqualCharQuotient;
    ctx->level_ = level;
    ctx->p_ = residue->p();
    ctx->e_ = residue->e();
    ctx->size_ = static_cast<std::uint32_t>(size);
    ctx->residue_ = std::move(residue);
    ctx->build_tables();
    return ctx;
}

RingCtx::Ptr RingCtx::galois(std::uint32_t p, std::uint32_t level, std::uint32_t e) {
    auto fq = FieldCtx::make(p, e);
    std::vector<std::uint32_t> lift(fq->modulus().begin(), fq->modulus().end());
    return galois_with_lift(p, level, std::move(lift));
}

RingCtx::Ptr RingCtx::galois_with_lift(std::uint32_t p, std::uint32_t level, std::vector<std::uint32_t> modulus_lift) {
    if (!is_prime_u32(p)) throw std::invalid_argument("p must be prime");
    if (level < 1) throw std::invalid_argument("quotient level must be >= 1");
    if (modulus_lift.size() < 2 || modulus_lift.back() != 1)
        throw std::invalid_argument("modulus lift must be monic of degree >= 1");
    std::uint32_t e = static_cast<std::uint32_t>(modulus_lift.size()) - 1;
    std::uint64_t p_level = upow(p, level);
    for (auto& c : modulus_lift) {
        if (c >= p_level) throw std::invalid_argument("modulus lift coefficient out of range");
    }
    // The reduction mod p must be irreducible over F_p; FieldCtx validates that.
    std::vector<Code> red(modulus_lift.size());
    for (std::size_t i = 0; i < modulus_lift.size(); ++i) red[i] = static_cast<Code>(modulus_lift[i] % p);
    auto fq = FieldCtx::make_with_modulus(p, red);

    std::uint64_t size = upow(p_level, e);
    if (size > kMaxTableSize) throw std::invalid_argument("quotient ring too large for table-based arithmetic");
    auto ctx = std::shared_ptr<RingCtx>(new RingCtx());
    ctx->kind_ = RingKind::GaloisRing;
    ctx->level_ = level;
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->p_level_ = p_level;
    ctx->size_ = static_cast<std::uint32_t>(size);
    ctx->residue_ = std::move(fq);
    ctx->modulus_lift_ = std::move(modulus_lift);
    ctx->build_tables();
    return ctx;
}

// Structural arithmetic on codes, used once to fill the tables.
Code RingCtx::raw_add(Code a, Code b) const {
    switch (kind_) {
        case RingKind::PadicQuotient:
            return static_cast<Code>((static_cast<std::uint64_t>(a) + b) % size_);
        case RingKind::EqualCharQuotient: {
            const auto& F = *residue_;
            std::uint32_t q = F.q();
            Code r = 0, scale = 1;
            for (std::uint32_t i = 0; i < level_; ++i) {
                Code da = (a / scale) % q, db = (b / scale) % q;
                r += F.add(da, db) * scale;
                scale *= q;
            }
            return r;
        }
        case RingKind::GaloisRing: {
            Code r = 0;
            std::uint64_t scale = 1;
            for (std::uint32_t i = 0; i < e_; ++i) {
                std::uint64_t da = (a / scale) % p_level_, db = (b / scale) % p_level_;
                r += static_cast<Code>(((da + db) % p_level_) * scale);
                scale *= p_level_;
            }
            return r;
        }
    }
    return 0;
}

Code RingCtx::raw_neg(Code a) const {
    switch (kind_) {
        case RingKind::PadicQuotient:
            return static_cast<Code>((size_ - a) % size_);
        case RingKind::EqualCharQuotient: {
            const auto& F = *residue_;
            std::uint32_t q = F.q();
            Code r = 0, scale = 1;
            for (std::uint32_t i = 0; i < level_; ++i) {
                r += F.neg((a / scale) % q) * scale;
                scale *= q;
            }
            return r;
        }
        case RingKind::GaloisRing: {
            Code r = 0;
            std::uint64_t scale = 1;
            for (std::uint32_t i = 0; i < e_; ++i) {
                std::uint64_t da = (a / scale) % p_level_;
                r += static_cast<Code>(((p_level_ - da) % p_level_) * scale);
                scale *= p_level_;
            }
            return r;
        }
    }
    return 0;
}

Code RingCtx::raw_mul(Code a, Code b) const {
    switch (kind_) {
        case RingKind::PadicQuotient:
            return static_cast<Code>((static_cast<std::uint64_t>(a) * b) % size_);
        case RingKind::EqualCharQuotient: {
            const auto& F = *residue_;
            std::uint32_t q = F.q();
            std::vector<Code> da(level_), db(level_), dc(level_, 0);
            for (std::uint32_t i = 0; i < level_; ++i) {
                da[i] = a % q;
                a /= q;
                db[i] = b % q;
                b /= q;
            }
            for (std::uint32_t i = 0; i < level_; ++i)
                for (std::uint32_t j = 0; i + j < level_; ++j) dc[i + j] = F.add(dc[i + j], F.mul(da[i], db[j]));
            Code r = 0;
            for (std::uint32_t i = level_; i-- > 0;) r = r * q + dc[i];
            return r;
        }
        case RingKind::GaloisRing: {
            std::vector<std::uint64_t> da(e_), db(e_), prod(2 * e_ - 1, 0);
            std::uint64_t aa = a, bb = b;
            for (std::uint32_t i = 0; i < e_; ++i) {
                da[i] = aa % p_level_;
                aa /= p_level_;
                db[i] = bb % p_level_;
                bb /= p_level_;
            }
            for (std::uint32_t i = 0; i < e_; ++i)
                for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_level_;
            // reduce modulo the monic lift
            for (std::uint32_t i = 2 * e_ - 1; i-- > e_;) {
                std::uint64_t f = prod[i];
                if (f == 0) continue;
                prod[i] = 0;
                for (std::uint32_t j = 0; j < e_; ++j) {
                    std::uint64_t sub = (f * modulus_lift_[j]) % p_level_;
                    prod[i - e_ + j] = (prod[i - e_ + j] + p_level_ - sub) % p_level_;
                }
            }
            Code r = 0;
            for (std::uint32_t i = e_; i-- > 0;) r = static_cast<Code>(r * p_level_ + prod[i]);
            return r;
        }
    }
    return 0;
}

void RingCtx::build_tables() {
    one_ = 1;
    switch (kind_) {
        case RingKind::PadicQuotient:
            pi_ = p_ % size_;
            break;
        case RingKind::EqualCharQuotient:
            pi_ = (level_ > 1) ? residue_->q() : 0;  // the digit t; t = 0 at level 1
            break;
        case RingKind::GaloisRing:
            pi_ = static_cast<Code>(p_ % p_level_);
            break;
    }
    if (level_ == 1 && kind_ != RingKind::EqualCharQuotient) pi_ = pi_ % size_;

    add_.assign(static_cast<std::size_t>(size_) * size_, 0);
    mul_.assign(static_cast<std::size_t>(size_) * size_, 0);
    neg_.assign(size_, 0);
    for (Code a = 0; a < size_; ++a) {
        neg_[a] = raw_neg(a);
        for (Code b = 0; b < size_; ++b) {
            add_[static_cast<std::size_t>(a) * size_ + b] = raw_add(a, b);
            mul_[static_cast<std::size_t>(a) * size_ + b] = raw_mul(a, b);
        }
    }

    // valuations by divisibility: v(a) = max { v : a in pi^v R }, v(0) = level
    val_.assign(size_, 0);
    std::vector<bool> in_pow(size_, true);  // pi^0 R = R
    std::vector<bool> next(size_);
    for (std::uint32_t v = 1; v <= level_; ++v) {
        std::fill(next.begin(), next.end(), false);
        Code piv = pi_pow(static_cast<int>(v));
        for (Code x = 0; x < size_; ++x) next[mul_[static_cast<std::size_t>(piv) * size_ + x]] = true;
        for (Code a = 0; a < size_; ++a)
            if (in_pow[a] && next[a]) val_[a] = static_cast<int>(v);
        in_pow.swap(next);
    }
    val_[0] = static_cast<int>(level_);

    // normalizers: x * norm(x) = pi^{val(x)} with norm(x) a unit
    norm_.assign(size_, 0);
    for (Code a = 1; a < size_; ++a) {
        Code target = pi_pow(val_[a]);
        for (Code u = 0; u < size_; ++u) {
            if (val_[u] != 0) continue;
            if (mul_[static_cast<std::size_t>(a) * size_ + u] == target) {
                norm_[a] = u;
                break;
            }
        }
    }

    // residue map and canonical lift
    reduce_.assign(size_, 0);
    lift_.assign(residue_->q(), 0);
    for (Code a = 0; a < size_; ++a) {
        switch (kind_) {
            case RingKind::PadicQuotient:
                reduce_[a] = a % p_;
                break;
            case RingKind::EqualCharQuotient:
                reduce_[a] = a % residue_->q();
                break;
            case RingKind::GaloisRing: {
                // residue coordinates are the coefficients mod p, base-p encoded
                Code r = 0;
                std::uint64_t aa = a;
                std::vector<Code> digs(e_);
                for (std::uint32_t i = 0; i < e_; ++i) {
                    digs[i] = static_cast<Code>((aa % p_level_) % p_);
                    aa /= p_level_;
                }
                for (std::uint32_t i = e_; i-- > 0;) r = r * p_ + digs[i];
                reduce_[a] = r;
                break;
            }
        }
    }
    for (Code f = 0; f < residue_->q(); ++f) {
        switch (kind_) {
            case RingKind::PadicQuotient:
            case RingKind::EqualCharQuotient:
                lift_[f] = f;
                break;
            case RingKind::GaloisRing: {
                Code a = 0;
                std::vector<Code> digs = residue_->coeffs(f);
                for (std::uint32_t i = e_; i-- > 0;) a = static_cast<Code>(a * p_level_ + digs[i]);
                lift_[f] = a;
                break;
            }
        }
    }
}

Code RingCtx::pi_pow(int v) const {
    if (v < 0) throw std::invalid_argument("negative uniformizer power");
    Code r = one_;
    for (int i = 0; i < v; ++i) r = raw_mul(r, pi_);
    return r;
}

Code RingCtx::inv(Code a) const {
    if (val_[a] != 0) throw std::domain_error("inverse of a non-unit ring element");
    return norm_[a];
}

Code RingCtx::normalizer(Code a) const {
    if (a == 0) throw std::domain_error("normalizer of zero");
    return norm_[a];
}

Code RingCtx::div_pi_pow(Code a, int v) const {
    if (v == 0) return a;
    if (val_[a] < v) throw std::domain_error("element not divisible by pi^v");
    switch (kind_) {
        case RingKind::PadicQuotient: {
            std::uint64_t pv = upow(p_, static_cast<std::uint32_t>(v));
            return static_cast<Code>(a / pv);
        }
        case RingKind::EqualCharQuotient: {
            std::uint32_t q = residue_->q();
            std::uint64_t scale = upow(q, static_cast<std::uint32_t>(v));
            return static_cast<Code>(a / scale);
        }
        case RingKind::GaloisRing: {
            std::uint64_t pv = upow(p_, static_cast<std::uint32_t>(v));
            Code r = 0;
            std::uint64_t aa = a;
            std::vector<std::uint64_t> digs(e_);
            for (std::uint32_t i = 0; i < e_; ++i) {
                digs[i] = (aa % p_level_) / pv;
                aa /= p_level_;
            }
            for (std::uint32_t i = e_; i-- > 0;) r = static_cast<Code>(r * p_level_ + digs[i]);
            return r;
        }
    }
    return 0;
}

Code RingCtx::from_int(long v) const {
    switch (kind_) {
        case RingKind::PadicQuotient: {
            long r = v % static_cast<long>(size_);
            if (r < 0) r += size_;
            return static_cast<Code>(r);
        }
        case RingKind::EqualCharQuotient: {
            // integers land in the prime subfield of the constant digit
            return lift_[residue_->from_int(v)];
        }
        case RingKind::GaloisRing: {
            long r = v % static_cast<long>(p_level_);
            if (r < 0) r += static_cast<long>(p_level_);
            return static_cast<Code>(r);
        }
    }
    return 0;
}

bool RingCtx::matches(const RingCtx& other) const {
    return kind_ == other.kind_ && level_ == other.level_ && p_ == other.p_ && e_ == other.e_ &&
           modulus_lift_ == other.modulus_lift_ && residue_->matches(*other.residue_);
}

std::string RingCtx::describe() const {
    switch (kind_) {
        case RingKind::PadicQuotient:
            return "Z/" + std::to_string(size_);
        case RingKind::EqualCharQuotient:
            return "F" + std::to_string(q()) + "[t]/(t^" + std::to_string(level_) + ")";
        case RingKind::GaloisRing:
            return "GR(" + std::to_string(p_level_) + "," + std::to_string(e_) + ")";
    }
    return "?";
}

}  // namespace coker
