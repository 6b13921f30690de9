#include "qclrs/field.hpp"

#include <stdexcept>

namespace qclrs {

namespace {

// Primitive polynomials over GF(2), degree 1..16, low weight. Bit i is the
// coefficient of x^i; the top bit (degree) is always set.
constexpr std::uint32_t kModuli[17] = {
    0,
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

}  // namespace

std::uint32_t FieldContext::modulus_for(unsigned ell) {
    if (ell < 1 || ell > 16)
        throw std::invalid_argument("FieldContext: ell must be in [1, 16]");
    return kModuli[ell];
}

FieldContext::FieldContext(unsigned ell)
    : ell_(ell), q_(1u << ell), modulus_(modulus_for(ell)) {
    if (ell_ <= 8) {
        const std::uint32_t n = q_ - 1;
        exp_.resize(n == 1 ? 2 : 2 * n);
        log_.assign(q_, 0);
        std::uint32_t v = 1;
        for (std::uint32_t k = 0; k < n; ++k) {
            exp_[k] = static_cast<felem>(v);
            log_[v] = static_cast<std::uint16_t>(k);
            v <<= 1;
            if (v & q_) v ^= modulus_;
        }
        for (std::uint32_t k = n; k < exp_.size(); ++k) exp_[k] = exp_[k - n];
    }
}

felem FieldContext::mul_clmul(felem x, felem y) const {
    std::uint32_t acc = 0;
    std::uint32_t a = x;
    for (std::uint32_t b = y; b; b >>= 1) {
        if (b & 1) acc ^= a;
        a <<= 1;
    }
    // Reduce the (2*ell-1)-bit product.
    for (int bit = 2 * static_cast<int>(ell_) - 2; bit >= static_cast<int>(ell_); --bit)
        if (acc & (1u << bit)) acc ^= modulus_ << (bit - ell_);
    return static_cast<felem>(acc);
}

felem FieldContext::mul(felem x, felem y) const {
    if (x == 0 || y == 0) return 0;
    if (!exp_.empty()) return exp_[log_[x] + log_[y]];
    return mul_clmul(x, y);
}

felem FieldContext::inv(felem x) const {
    if (x == 0) throw std::domain_error("FieldContext::inv: zero has no inverse");
    if (!exp_.empty()) {
        const std::uint32_t n = q_ - 1;
        return exp_[(n - log_[x]) % n];
    }
    return pow(x, q_ - 2);
}

felem FieldContext::pow(felem x, std::uint64_t e) const {
    if (e == 0) return 1;
    if (x == 0) return 0;
    felem base = x;
    felem acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

felem FieldContext::eval_poly(std::span<const felem> coeffs, felem x) const {
    felem acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;)
        acc = add(mul(acc, x), coeffs[k]);
    return acc;
}

}  // namespace qclrs
