#ifndef QCLRS_COUNTING_HPP_
#define QCLRS_COUNTING_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace qclrs {

// Counts (|S_0(ell)|, |S_1(ell)|, |S_2(ell)|) of the bad-exponent sets at a
// given level and redundancy r. The sets are nested, so s2 <= s1 <= s0.
struct StateVector {
    std::uint64_t s0 = 0;
    std::uint64_t s1 = 0;
    std::uint64_t s2 = 0;
    unsigned ell = 0;
    std::uint32_t r = 0;
    friend bool operator==(const StateVector&, const StateVector&) = default;
};

// Real-valued bounds on |S*(ell)|. exact_power_of_two marks that the tight
// branch (r a power of 2) applied, in which case the bounds are non-strict.
struct BoundsResult {
    double lower = 0.0;
    double upper = 0.0;
    bool exact_power_of_two = false;
};

// Exact set S_t(ell): pairs (a, b) in Z_q^2 admitting i <=_2 b, j <=_2 b-i
// with 2i + j + a = q - r' + t*q for some r' in [r]. Sorted (a, b) pairs.
std::vector<std::pair<std::uint32_t, std::uint32_t>>
enumerate_S_t(unsigned ell, std::uint32_t r, unsigned t);

// Exact set S*(ell): same with offsets t*(q-1), t in {0, 1, 2}. Equals the
// complement of the good monomials at d = q - r.
std::vector<std::pair<std::uint32_t, std::uint32_t>>
enumerate_S_star(unsigned ell, std::uint32_t r);

std::uint64_t count_S_star(unsigned ell, std::uint32_t r);

// Initial state for the recursion: counts at the smallest level ell0 with
// 2^ell0 > 2r, computed by enumeration.
StateVector initial_state(std::uint32_t r);

// Applies the 3x3 integer recursion matrix [[3,1,0],[1,1,1],[0,0,1]]
// (target_ell - initial.ell) times. Requires r < 2^ell / 2 at every level
// in between and target_ell <= 32 (counts grow like (2+sqrt(2))^ell).
StateVector recurse_state(const StateVector& initial, unsigned target_ell);

// Closed-form |S_0(ell)| for r = 1 or r = 3, from the exact surd
// coefficients; rounds to the enumerated integer.
double closed_form_S0(unsigned ell, std::uint32_t r);

// One greedy reduction step: given i, j (with i AND j == 0, as submasks of
// some b and b-i) and 2i + j >= q = 2^ell, returns (i', j') with i' <=_2 i,
// j' <=_2 j and (2i+j) - (2i'+j') = q. Throws std::runtime_error if no
// reduction exists (precondition violated).
std::pair<std::uint32_t, std::uint32_t>
deduct_q(std::uint32_t i, std::uint32_t j, unsigned ell);

// Upper and lower bounds on |S*(ell)| for ell >= 2, 1 <= r <= q/4.
BoundsResult bounds_S_star(unsigned ell, std::uint32_t r);

// Least-squares slope of log2(count) versus ell. Converges to
// log2(2 + sqrt(2)) ~ 1.7716 on the recursion counts at fixed r.
double asymptotic_slope(const std::vector<std::pair<unsigned, std::uint64_t>>& samples);

}  // namespace qclrs

#endif  // QCLRS_COUNTING_HPP_
