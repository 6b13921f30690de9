#ifndef QCLRS_MONOMIAL_HPP_
#define QCLRS_MONOMIAL_HPP_

#include <cstdint>
#include <vector>

#include "qclrs/field.hpp"

namespace qclrs {

// Exponent pair (a, b) of the bivariate monomial x^a y^b, each in [0, q-1].
struct Monomial {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Coefficients of the quadratic curve y = alpha*x^2 + beta*x + gamma.
// Its point set {(x, alpha*x^2 + beta*x + gamma)} always has q points with
// distinct x-coordinates.
struct Curve {
    felem alpha = 0;
    felem beta = 0;
    felem gamma = 0;
};

// An affine line: y = alpha*x + beta, or the vertical line x = gamma.
struct Line {
    bool vertical = false;
    felem alpha = 0;  // slope (ignored if vertical)
    felem beta = 0;   // intercept (ignored if vertical)
    felem gamma = 0;  // x-coordinate of a vertical line
};

// Exponent folding consistent with x^q = x on F_q: returns a itself when
// a <= q-1, q-1 when a is a positive multiple of q-1, and a mod (q-1)
// otherwise.
std::uint32_t mod_star(std::uint64_t a, std::uint32_t q);

// True iff every binary digit of a is <= the corresponding digit of b,
// i.e. (a AND b) == a. When a <= b in this order, b - a == b XOR a.
inline bool in_shadow(std::uint64_t a, std::uint64_t b) { return (a & b) == a; }

// Good-monomial criterion for the quadratic-curve family: x^a y^b restricts
// to degree < d on every curve iff mod_star(2i + j + a) < d for every
// submask i of b and every submask j of b XOR i.
// Throws std::invalid_argument unless 1 <= d <= q-1.
bool is_qc_good(Monomial m, std::uint32_t q, std::uint32_t d);

// Same criterion for the family of all affine lines (including vertical):
// b < d and mod_star(a + i) < d for every submask i of b.
bool is_lrs_good(Monomial m, std::uint32_t q, std::uint32_t d);

// Symbolic restriction oracles. Both return the coefficient vector (length q,
// index = exponent) of the univariate restriction reduced mod x^q - x; the
// reduction folds exponent e >= q onto mod_star(e, q).
std::vector<felem> restrict_to_curve(const FieldContext& ctx, Monomial m, Curve c);
std::vector<felem> restrict_to_line(const FieldContext& ctx, Monomial m, Line l);

// Largest exponent with a nonzero coefficient; -1 for the zero polynomial.
int poly_degree(const std::vector<felem>& coeffs);

}  // namespace qclrs

#endif  // QCLRS_MONOMIAL_HPP_
