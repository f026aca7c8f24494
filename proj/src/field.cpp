#include "cokerdist/field.hpp"

#include <stdexcept>
#include <string>

#include "cokerdist/rational.hpp"

namespace coker {

namespace {

constexpr std::uint32_t kMaxTableQ = 1024;

// Prime-field polynomial helpers used only while constructing a context.
using PPoly = std::vector<Code>;  // little-endian over F_p, normalized

void pnormalize(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    pnormalize(c);
    return c;
}

// Remainder of a by monic b.
PPoly pmod(PPoly a, const PPoly& b, std::uint32_t p) {
    pnormalize(a);
    int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        Code f = a[static_cast<std::size_t>(i)];
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& x = a[static_cast<std::size_t>(i - db + j)];
            x = (x + p * f - (f * b[static_cast<std::size_t>(j)]) % p) % p;
        }
    }
    pnormalize(a);
    return a;
}

bool pdivides(const PPoly& d, const PPoly& a, std::uint32_t p) { return pmod(a, d, p).empty(); }

// Monic polynomials of exact degree deg over F_p, enumerated from an integer code.
PPoly pmonic_from_code(std::uint64_t code, int deg, std::uint32_t p) {
    PPoly f(static_cast<std::size_t>(deg) + 1, 0);
    f[static_cast<std::size_t>(deg)] = 1;
    for (int i = 0; i < deg; ++i) {
        f[static_cast<std::size_t>(i)] = static_cast<Code>(code % p);
        code /= p;
    }
    return f;
}

bool pirreducible(const PPoly& f, std::uint32_t p) {
    int deg = static_cast<int>(f.size()) - 1;
    for (int dd = 1; dd <= deg / 2; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c)
            if (pdivides(pmonic_from_code(c, dd, p), f, p)) return false;
    }
    return true;
}

}  // namespace

FieldCtx::Ptr FieldCtx::make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime_u32(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");

    // Lexicographically smallest coefficient tuple, constant term first: the tuple
    // (c_0, ..., c_{e-1}) is read off a counter with c_0 as the most significant digit.
    std::uint64_t qe = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        qe *= p;
        if (qe > (1u << 30)) throw std::invalid_argument("field too large");
    }
    for (std::uint64_t m = 0; m < qe; ++m) {
        std::vector<Code> mod(e + 1, 0);
        mod[e] = 1;
        std::uint64_t rest = m;
        for (std::uint32_t i = 0; i < e; ++i) {
            std::uint32_t digit_pos = e - 1 - i;  // c_0 is most significant in m
            std::uint64_t scale = 1;
            for (std::uint32_t k = 0; k < digit_pos; ++k) scale *= p;
            mod[i] = static_cast<Code>((rest / scale) % p);
        }
        (void)rest;
        PPoly f(mod.begin(), mod.end());
        if (pirreducible(f, p)) return make_with_modulus(p, mod);
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldCtx::Ptr FieldCtx::make_with_modulus(std::uint32_t p, std::vector<Code> modulus) {
    if (!is_prime_u32(p)) throw std::invalid_argument("p must be prime");
    if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    for (Code c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    PPoly f(modulus.begin(), modulus.end());
    if (!pirreducible(f, p)) throw std::invalid_argument("modulus is reducible over F_p");

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->e_ = static_cast<std::uint32_t>(modulus.size()) - 1;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < ctx->e_; ++i) q *= p;
    if (q > kMaxTableQ) throw std::invalid_argument("field too large for table-based arithmetic");
    ctx->q_ = static_cast<std::uint32_t>(q);
    ctx->modulus_ = std::move(modulus);

    std::uint32_t qq = ctx->q_;
    ctx->add_.assign(static_cast<std::size_t>(qq) * qq, 0);
    ctx->mul_.assign(static_cast<std::size_t>(qq) * qq, 0);
    ctx->neg_.assign(qq, 0);
    ctx->inv_.assign(qq, 0);

    auto decode = [&](Code a) {
        PPoly v(ctx->e_, 0);
        for (std::uint32_t i = 0; i < ctx->e_; ++i) {
            v[i] = a % p;
            a /= p;
        }
        return v;
    };
    auto encode = [&](const PPoly& v) {
        Code a = 0;
        for (std::uint32_t i = ctx->e_; i-- > 0;) a = a * p + (i < v.size() ? v[i] : 0);
        return a;
    };
    PPoly mod_poly(ctx->modulus_.begin(), ctx->modulus_.end());
    for (Code a = 0; a < qq; ++a) {
        PPoly va = decode(a);
        PPoly nv(ctx->e_, 0);
        for (std::uint32_t i = 0; i < ctx->e_; ++i) nv[i] = (p - va[i]) % p;
        ctx->neg_[a] = encode(nv);
        for (Code b = 0; b < qq; ++b) {
            PPoly vb = decode(b);
            PPoly s(ctx->e_, 0);
            for (std::uint32_t i = 0; i < ctx->e_; ++i) s[i] = (va[i] + vb[i]) % p;
            ctx->add_[static_cast<std::size_t>(a) * qq + b] = encode(s);
            ctx->mul_[static_cast<std::size_t>(a) * qq + b] = encode(pmod(pmul(va, vb, p), mod_poly, p));
        }
    }
    for (Code a = 1; a < qq; ++a)
        for (Code b = 1; b < qq; ++b)
            if (ctx->mul_[static_cast<std::size_t>(a) * qq + b] == 1) {
                ctx->inv_[a] = b;
                break;
            }
    return ctx;
}

Code FieldCtx::inv(Code a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    return inv_[a];
}

Code FieldCtx::pow(Code a, unsigned long k) const {
    Code r = one();
    for (unsigned long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

std::vector<Code> FieldCtx::coeffs(Code a) const {
    std::vector<Code> v(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        v[i] = a % p_;
        a /= p_;
    }
    return v;
}

Code FieldCtx::from_coeffs(const std::vector<Code>& c) const {
    if (c.size() != e_) throw std::invalid_argument("element coefficient vector must have length e");
    Code a = 0;
    for (std::uint32_t i = e_; i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("element coefficient out of range");
        a = a * p_ + c[i];
    }
    return a;
}

Code FieldCtx::from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Code>(r);
}

bool FieldCtx::matches(const FieldCtx& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

}  // namespace coker
