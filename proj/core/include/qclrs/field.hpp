#ifndef QCLRS_FIELD_HPP_
#define QCLRS_FIELD_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace qclrs {

using felem = std::uint16_t;

/* Arithmetic context for GF(2^ell), 1 <= ell <= 16. Elements are integers in
   [0, q-1]; bit i is the coefficient of x^i in the polynomial representation.
   The reduction modulus is a fixed primitive polynomial per ell, so outputs
   are bit-reproducible across builds.

   For ell <= 8 multiplication goes through log/antilog tables; above that it
   is a carry-less product followed by reduction. A FieldContext is immutable
   after construction and safe to share across threads. */
class FieldContext {
public:
    explicit FieldContext(unsigned ell);

    unsigned ell() const { return ell_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return modulus_; }

    felem add(felem x, felem y) const { return x ^ y; }
    felem mul(felem x, felem y) const;
    felem inv(felem x) const;   // throws std::domain_error on x == 0

    // x^e with the convention 0^0 = 1 (matching the evaluation map).
    felem pow(felem x, std::uint64_t e) const;

    // Horner evaluation of sum_i coeffs[i] * x^i.
    felem eval_poly(std::span<const felem> coeffs, felem x) const;

    // Modulus of the fixed irreducible (primitive) polynomial for a given ell.
    static std::uint32_t modulus_for(unsigned ell);

private:
    felem mul_clmul(felem x, felem y) const;

    unsigned ell_;
    std::uint32_t q_;
    std::uint32_t modulus_;
    std::vector<felem> exp_;    // exp_[k] = x^k, k in [0, 2(q-1)); empty for ell > 8
    std::vector<std::uint16_t> log_;
};

}  // namespace qclrs

#endif  // QCLRS_FIELD_HPP_
