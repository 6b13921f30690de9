#include "qclrs/counting.hpp"

#include <cmath>
#include <stdexcept>

namespace qclrs {

namespace {

void check_level(unsigned ell, std::uint32_t r) {
    if (ell < 1 || ell > 16)
        throw std::invalid_argument("counting: ell must be in [1, 16] for enumeration");
    const std::uint32_t q = 1u << ell;
    if (r < 1 || r > q - 1)
        throw std::invalid_argument("counting: r must be in [1, q-1]");
}

// Marks every (a, b) reachable as a = target - (2i+j) for targets in
// [q - r + off, q - 1 + off], over all submask pairs (i, j) of each b.
// Interval marking keeps this O(4^ell + q^2) per offset.
std::vector<std::pair<std::uint32_t, std::uint32_t>>
enumerate_marked(unsigned ell, std::uint32_t r, const std::vector<std::uint64_t>& offsets) {
    const std::uint32_t q = 1u << ell;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    std::vector<std::int32_t> diff(q + 1);
    for (std::uint32_t b = 0; b < q; ++b) {
        std::fill(diff.begin(), diff.end(), 0);
        for (std::uint32_t i = b;; i = (i - 1) & b) {
            const std::uint32_t rest = b ^ i;
            for (std::uint32_t j = rest;; j = (j - 1) & rest) {
                const std::uint64_t v = 2ull * i + j;
                for (const std::uint64_t off : offsets) {
                    // a in [q - r + off - v, q - 1 + off - v], clipped to [0, q-1]
                    const std::int64_t hi0 = static_cast<std::int64_t>(q) - 1 +
                                             static_cast<std::int64_t>(off) -
                                             static_cast<std::int64_t>(v);
                    const std::int64_t lo0 = hi0 - static_cast<std::int64_t>(r) + 1;
                    const std::int64_t lo = std::max<std::int64_t>(lo0, 0);
                    const std::int64_t hi = std::min<std::int64_t>(hi0, q - 1);
                    if (lo > hi) continue;
                    ++diff[lo];
                    --diff[hi + 1];
                }
                if (j == 0) break;
            }
            if (i == 0) break;
        }
        std::int32_t run = 0;
        for (std::uint32_t a = 0; a < q; ++a) {
            run += diff[a];
            if (run > 0) out.emplace_back(a, b);
        }
    }
    return out;
}

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kLambda1 = 2.0 + kSqrt2;
constexpr double kLambda2 = 2.0 - kSqrt2;

}  // namespace

std::vector<std::pair<std::uint32_t, std::uint32_t>>
enumerate_S_t(unsigned ell, std::uint32_t r, unsigned t) {
    check_level(ell, r);
    if (t > 2)
        return {};  // 2i + j + a <= 3(q-1) < q - r + t*q for t >= 3
    const std::uint64_t q = 1u << ell;
    return enumerate_marked(ell, r, {t * q});
}

std::vector<std::pair<std::uint32_t, std::uint32_t>>
enumerate_S_star(unsigned ell, std::uint32_t r) {
    check_level(ell, r);
    const std::uint64_t qm1 = (1u << ell) - 1;
    return enumerate_marked(ell, r, {0, qm1, 2 * qm1});
}

std::uint64_t count_S_star(unsigned ell, std::uint32_t r) {
    return enumerate_S_star(ell, r).size();
}

StateVector initial_state(std::uint32_t r) {
    unsigned ell0 = 1;
    while ((1u << ell0) <= 2 * r) ++ell0;
    StateVector v;
    v.ell = ell0;
    v.r = r;
    v.s0 = enumerate_S_t(ell0, r, 0).size();
    v.s1 = enumerate_S_t(ell0, r, 1).size();
    v.s2 = enumerate_S_t(ell0, r, 2).size();
    return v;
}

StateVector recurse_state(const StateVector& initial, unsigned target_ell) {
    if (target_ell < initial.ell)
        throw std::invalid_argument("recurse_state: target level below initial");
    if (target_ell > 32)
        throw std::invalid_argument("recurse_state: level capped at 32 (64-bit counts)");
    if (2ull * initial.r >= (1ull << initial.ell))
        throw std::invalid_argument("recurse_state: requires r < q/2 at every level");
    StateVector v = initial;
    while (v.ell < target_ell) {
        const std::uint64_t s0 = 3 * v.s0 + v.s1;
        const std::uint64_t s1 = v.s0 + v.s1 + v.s2;
        v.s0 = s0;
        v.s1 = s1;
        ++v.ell;
    }
    return v;
}

double closed_form_S0(unsigned ell, std::uint32_t r) {
    if (r == 1) {
        if (ell < 1) throw std::invalid_argument("closed_form_S0: need ell >= 1 for r = 1");
        const double c1 = (5.0 * kSqrt2 + 7.0) / (2.0 * (3.0 * kSqrt2 + 4.0));
        const double c2 = (5.0 * kSqrt2 - 7.0) / (2.0 * (3.0 * kSqrt2 - 4.0));
        return c1 * std::pow(kLambda1, ell) + c2 * std::pow(kLambda2, ell);
    }
    if (r == 3) {
        if (ell < 2) throw std::invalid_argument("closed_form_S0: need ell >= 2 for r = 3");
        const double c1 = (65.0 * kSqrt2 + 92.0) / (4.0 * (12.0 * kSqrt2 + 17.0));
        const double c2 = (65.0 * kSqrt2 - 92.0) / (4.0 * (12.0 * kSqrt2 - 17.0));
        return c1 * std::pow(kLambda1, ell) + c2 * std::pow(kLambda2, ell) - 1.0;
    }
    throw std::invalid_argument("closed_form_S0: closed forms exist only for r in {1, 3}");
}

std::pair<std::uint32_t, std::uint32_t>
deduct_q(std::uint32_t i, std::uint32_t j, unsigned ell) {
    const std::uint64_t q = 1ull << ell;
    std::uint32_t ip = i;
    std::uint32_t jp = j;
    // Greedy top-down removal of exactly q from 2i + j. At level h the bit
    // i_{h-1} and the bit j_h each contribute 2^h; delta is the remaining
    // deficit in units of 2^h.
    std::uint64_t delta_units = 1;
    for (unsigned h = ell; h > 0; --h) {
        const std::uint32_t bi = (ip >> (h - 1)) & 1u;
        const std::uint32_t bj = h < ell ? (jp >> h) & 1u : 0u;
        const std::int64_t delta =
            static_cast<std::int64_t>(delta_units) - bi - bj;
        if (delta > 0) {
            ip &= ~(1u << (h - 1));
            if (h < ell) jp &= ~(1u << h);
            delta_units = 2 * static_cast<std::uint64_t>(delta);
            continue;
        }
        if (delta_units == bi) {
            ip &= ~(1u << (h - 1));
        } else if (delta_units == bj) {
            jp &= ~(1u << h);
        } else {
            ip &= ~(1u << (h - 1));
            jp &= ~(1u << h);
        }
        return {ip, jp};
    }
    throw std::runtime_error("deduct_q: no reduction found; requires 2i + j >= q");
}

BoundsResult bounds_S_star(unsigned ell, std::uint32_t r) {
    const std::uint32_t q = 1u << ell;
    if (ell < 2) throw std::invalid_argument("bounds_S_star: need ell >= 2");
    if (r < 1 || r > q / 4)
        throw std::invalid_argument("bounds_S_star: need 1 <= r <= q/4");
    BoundsResult res;
    const double rd = static_cast<double>(r);
    if ((r & (r - 1)) == 0) {
        const unsigned s = static_cast<unsigned>(std::round(std::log2(rd)));
        res.lower = rd * rd * closed_form_S0(ell - s, 1);
        res.upper = rd * rd * closed_form_S0(ell - s, 3);
        res.exact_power_of_two = true;
    } else {
        const unsigned s_floor = static_cast<unsigned>(std::floor(std::log2(rd)));
        const unsigned s_ceil = s_floor + 1;
        res.lower = rd * rd / 4.0 * closed_form_S0(ell - s_floor, 1);
        res.upper = 4.0 * rd * rd * closed_form_S0(ell - s_ceil, 3);
    }
    return res;
}

double asymptotic_slope(const std::vector<std::pair<unsigned, std::uint64_t>>& samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("asymptotic_slope: need at least 2 samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(samples.size());
    for (const auto& [ell, count] : samples) {
        const double x = static_cast<double>(ell);
        const double y = std::log2(static_cast<double>(count));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace qclrs
