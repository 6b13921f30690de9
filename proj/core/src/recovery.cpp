#include "qclrs/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qclrs/rng.hpp"

namespace qclrs {

namespace {

double binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double acc = 1.0;
    for (std::uint32_t i = 1; i <= k; ++i)
        acc = acc * static_cast<double>(n - k + i) / static_cast<double>(i);
    return acc;
}

// 95% Wilson score half-width; stays positive at 0 or n failures, where the
// plain normal approximation collapses to zero.
double wilson_half_width(std::uint64_t failures, std::uint64_t trials) {
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(failures) / n;
    const double z2 = z * z;
    return z / (1.0 + z2 / n) *
           std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
}

}  // namespace

std::vector<RecoverySet> recovery_sets(const CodeSpec& spec, Point target) {
    const std::uint32_t q = spec.q();
    if (target.x >= q || target.y >= q)
        throw std::invalid_argument("recovery_sets: target outside F_q^2");
    const FieldContext ctx(spec.ell);
    std::vector<RecoverySet> sets;

    if (spec.family == Family::QcLrs) {
        sets.reserve(static_cast<std::size_t>(q) * q);
        for (std::uint32_t al = 0; al < q; ++al)
            for (std::uint32_t be = 0; be < q; ++be) {
                RecoverySet rs;
                rs.curve.alpha = static_cast<felem>(al);
                rs.curve.beta = static_cast<felem>(be);
                // gamma pins the curve to the target
                rs.curve.gamma = ctx.add(
                    target.y, ctx.add(ctx.mul(rs.curve.alpha, ctx.mul(target.x, target.x)),
                                      ctx.mul(rs.curve.beta, target.x)));
                rs.others.reserve(q - 1);
                for (std::uint32_t x = 0; x < q; ++x) {
                    if (x == target.x) continue;
                    const felem fx = static_cast<felem>(x);
                    const felem y = ctx.add(ctx.mul(rs.curve.alpha, ctx.mul(fx, fx)),
                                            ctx.add(ctx.mul(rs.curve.beta, fx),
                                                    rs.curve.gamma));
                    rs.others.push_back({fx, y});
                }
                sets.push_back(std::move(rs));
            }
        return sets;
    }

    sets.reserve(q + 1);
    for (std::uint32_t al = 0; al < q; ++al) {
        RecoverySet rs;
        rs.curve.alpha = static_cast<felem>(al);
        rs.curve.beta = ctx.add(target.y, ctx.mul(rs.curve.alpha, target.x));
        rs.others.reserve(q - 1);
        for (std::uint32_t x = 0; x < q; ++x) {
            if (x == target.x) continue;
            const felem fx = static_cast<felem>(x);
            rs.others.push_back({fx, ctx.add(ctx.mul(rs.curve.alpha, fx), rs.curve.beta)});
        }
        sets.push_back(std::move(rs));
    }
    RecoverySet vert;
    vert.vertical = true;
    vert.curve.gamma = target.x;
    for (std::uint32_t y = 0; y < q; ++y) {
        if (y == target.y) continue;
        vert.others.push_back({target.x, static_cast<felem>(y)});
    }
    sets.push_back(std::move(vert));
    return sets;
}

std::optional<felem> recover_symbol(const CodeInstance& inst, const Codeword& word,
                                    const std::vector<bool>& erased, Point target) {
    const CodeSpec& spec = inst.spec();
    const std::uint32_t q = spec.q();
    const std::uint32_t d = spec.d;
    const FieldContext& ctx = inst.ctx();
    if (word.size() != inst.n() || erased.size() != inst.n())
        throw std::invalid_argument("recover_symbol: word/mask length must be q^2");
    if (!erased[target.x * q + target.y])
        throw std::invalid_argument("recover_symbol: target is not erased");

    std::vector<felem> xs, ys;
    for (const RecoverySet& rs : recovery_sets(spec, target)) {
        xs.clear();
        ys.clear();
        // Points come in increasing coordinate order; take the first d known.
        for (const Point& p : rs.others) {
            if (erased[p.x * q + p.y]) continue;
            xs.push_back(rs.vertical ? p.y : p.x);
            ys.push_back(word[p.x * q + p.y]);
            if (xs.size() == d) break;
        }
        if (xs.size() < d) continue;
        const std::vector<felem> coeffs = lagrange_interpolate(ctx, xs, ys);
        return ctx.eval_poly(coeffs, rs.vertical ? target.y : target.x);
    }
    return std::nullopt;
}

double lrs_failure_closed_form(std::uint32_t q, std::uint32_t r, double tau) {
    if (r < 1 || r > q - 1)
        throw std::invalid_argument("lrs_failure_closed_form: r must be in [1, q-1]");
    if (tau < 0.0 || tau > 1.0)
        throw std::invalid_argument("lrs_failure_closed_form: tau must be in [0, 1]");
    double inner = 0.0;
    for (std::uint32_t i = r; i <= q - 1; ++i)
        inner += binomial(q - 1, i) * std::pow(tau, i) *
                 std::pow(1.0 - tau, q - 1 - i);
    inner = std::clamp(inner, 0.0, 1.0);
    return std::pow(inner, q + 1);
}

SimEstimate simulate_failure(const SimConfig& config) {
    const CodeSpec& spec = config.spec;
    const std::uint32_t q = spec.q();
    const std::uint32_t n = q * q;
    const std::uint32_t r = spec.r();
    if (config.tau < 0.0 || config.tau > 1.0)
        throw std::invalid_argument("simulate_failure: tau must be in [0, 1]");
    if (config.trials < 1)
        throw std::invalid_argument("simulate_failure: trials >= 1");

    // Flatten recovery sets to position indices for the hot loop.
    const std::uint32_t target_pos = config.target.x * q + config.target.y;
    std::vector<std::vector<std::uint32_t>> sets;
    for (const RecoverySet& rs : recovery_sets(spec, config.target)) {
        std::vector<std::uint32_t> idx;
        idx.reserve(rs.others.size());
        for (const Point& p : rs.others) idx.push_back(p.x * q + p.y);
        sets.push_back(std::move(idx));
    }

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t failures = 0;
        std::vector<bool> erased(n);
        for (std::uint64_t t = begin; t < end; ++t) {
            SplitMix64 rng(config.seed, t);
            for (std::uint32_t p = 0; p < n; ++p)
                erased[p] = p == target_pos || rng.next_double() < config.tau;
            bool all_blocked = true;
            for (const auto& set : sets) {
                std::uint32_t miss = 0;
                for (const std::uint32_t p : set) miss += erased[p];
                if (miss < r) {
                    all_blocked = false;
                    break;
                }
            }
            failures += all_blocked;
        }
        return failures;
    };

    unsigned threads = config.threads ? config.threads
                                      : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, config.trials));

    std::uint64_t failures = 0;
    if (threads <= 1) {
        failures = run_range(0, config.trials);
    } else {
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (config.trials + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = std::min(config.trials, begin + chunk);
            pool.emplace_back([&, w, begin, end] { partial[w] = run_range(begin, end); });
        }
        for (std::thread& th : pool) th.join();
        for (const std::uint64_t f : partial) failures += f;
    }

    SimEstimate est;
    est.trials = config.trials;
    est.failures = failures;
    est.failure_rate = static_cast<double>(failures) / static_cast<double>(config.trials);
    est.half_width = wilson_half_width(failures, config.trials);
    return est;
}

}  // namespace qclrs
