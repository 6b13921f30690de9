#ifndef QCLRS_RECOVERY_HPP_
#define QCLRS_RECOVERY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qclrs/code.hpp"

namespace qclrs {

struct Point {
    felem x = 0;
    felem y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

// One local recovery set of a target symbol: the q-1 other points on a curve
// or line through the target.
struct RecoverySet {
    bool vertical = false;       // LRS only: the line x = const
    Curve curve;                 // for LRS lines alpha is the slope, beta the
                                 // intercept (curve.alpha doubles as slope)
    std::vector<Point> others;   // q-1 points, target excluded
};

// All recovery sets of a target: q^2 curves for QC-LRS, q+1 lines for LRS.
std::vector<RecoverySet> recovery_sets(const CodeSpec& spec, Point target);

// Interpolation-based recovery of an erased symbol. Scans the target's
// recovery sets; the first set with at least d non-erased other points
// determines the value (interpolating from the d known points with smallest
// x-coordinate, or y-coordinate on a vertical line). Returns nullopt iff
// every set has at least r erased other points.
std::optional<felem> recover_symbol(const CodeInstance& inst, const Codeword& word,
                                    const std::vector<bool>& erased, Point target);

// Exact local-recovery failure probability of an LRS code on an iid erasure
// channel: (sum_{i=r}^{q-1} C(q-1, i) tau^i (1-tau)^(q-1-i))^(q+1).
double lrs_failure_closed_form(std::uint32_t q, std::uint32_t r, double tau);

struct SimConfig {
    CodeSpec spec;
    double tau = 0.5;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    Point target{0, 0};
    unsigned threads = 0;  // 0 = hardware concurrency; result is thread-count
                           // independent (per-trial streams, integer reduce)
};

struct SimEstimate {
    double failure_rate = 0.0;
    double half_width = 0.0;  // 95% Wilson-score half-width
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
};

// Monte-Carlo estimate of the local-recovery failure probability: the target
// is erased, every other position independently with probability tau, and a
// trial fails iff every recovery set of the target has >= r erased others.
// Bit-identical for a fixed (seed, trials) regardless of thread count.
SimEstimate simulate_failure(const SimConfig& config);

}  // namespace qclrs

#endif  // QCLRS_RECOVERY_HPP_
