#ifndef QCLRS_CODE_HPP_
#define QCLRS_CODE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qclrs/field.hpp"
#include "qclrs/monomial.hpp"

namespace qclrs {

enum class Family { QcLrs, Lrs };

std::string family_name(Family f);

// Code parameters: the family, the field exponent ell (q = 2^ell) and the
// degree bound d on every restriction; local redundancy r = q - d.
struct CodeSpec {
    Family family = Family::QcLrs;
    unsigned ell = 3;
    std::uint32_t d = 5;

    std::uint32_t q() const { return 1u << ell; }
    std::uint32_t r() const { return q() - d; }
};

// Evaluations of a bivariate function on F_q^2, column index = x*q + y.
using Codeword = std::vector<felem>;

// A built code: basis of good monomials in graded-lex order (by a+b, then a)
// and the k x q^2 generator matrix of their evaluation vectors.
class CodeInstance {
public:
    explicit CodeInstance(CodeSpec spec);

    const CodeSpec& spec() const { return spec_; }
    const FieldContext& ctx() const { return ctx_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    std::uint32_t k() const { return static_cast<std::uint32_t>(basis_.size()); }
    std::uint32_t n() const { return spec_.q() * spec_.q(); }
    const std::vector<felem>& generator_row(std::uint32_t row) const;

    Codeword encode(std::span<const felem> message) const;

private:
    CodeSpec spec_;
    FieldContext ctx_;
    std::vector<Monomial> basis_;
    std::vector<std::vector<felem>> generator_;
};

CodeInstance build_code(CodeSpec spec);

// Membership by interpolation: for every curve (QC-LRS) or line (LRS) in the
// family, interpolate the univariate restriction from its q points and check
// degree < d.
bool is_member(const CodeSpec& spec, const Codeword& word);

// (good-monomial count, generator rank); the two are equal for every spec.
std::pair<std::uint32_t, std::uint32_t> verify_dimension(const CodeSpec& spec);

// Evaluation word of prod_{alpha in A} (x - alpha) with A the first
// q - r - 1 field elements in integer order; Hamming weight is exactly
// qr + q, witnessing the distance upper bound. QC-LRS only.
Codeword distance_witness(const CodeSpec& spec);

std::uint64_t hamming_weight(const Codeword& word);

// Minimum weight over `trials` random nonzero messages.
std::uint64_t sample_min_weight(const CodeInstance& inst, std::uint64_t trials,
                                std::uint64_t seed);

// CSV serialization: header row records family, ell, d; then one row per
// matrix row of integer field-element values.
void write_matrix_csv(std::ostream& os, const CodeSpec& spec,
                      const std::vector<std::vector<felem>>& rows);
std::pair<CodeSpec, std::vector<std::vector<felem>>> read_matrix_csv(std::istream& is);

// Interpolation helper: coefficients (degree < #points) of the polynomial
// through the given (x, y) pairs; xs must be distinct.
std::vector<felem> lagrange_interpolate(const FieldContext& ctx,
                                        std::span<const felem> xs,
                                        std::span<const felem> ys);

}  // namespace qclrs

#endif  // QCLRS_CODE_HPP_
