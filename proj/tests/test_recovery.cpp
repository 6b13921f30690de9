#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "qclrs/recovery.hpp"
#include "qclrs/rng.hpp"

using namespace qclrs;

namespace {

std::vector<felem> random_message(const CodeInstance& inst, SplitMix64& rng) {
    std::vector<felem> msg(inst.k());
    for (felem& m : msg) m = static_cast<felem>(rng.next_below(inst.spec().q()));
    return msg;
}

}  // namespace

TEST_CASE("recovery set counts and geometry") {
    const Point target{2, 5};
    SUBCASE("QC-LRS: q^2 curves through the target") {
        const auto sets = recovery_sets({Family::QcLrs, 3, 5}, target);
        REQUIRE(sets.size() == 64);
        for (const auto& rs : sets) {
            CHECK(rs.others.size() == 7);
            std::set<std::pair<felem, felem>> distinct;
            for (const Point& p : rs.others) {
                CHECK(p.x != target.x);
                distinct.insert({p.x, p.y});
            }
            CHECK(distinct.size() == 7);
        }
    }
    SUBCASE("LRS: q+1 lines, pairwise disjoint away from the target") {
        const auto sets = recovery_sets({Family::Lrs, 3, 4}, target);
        REQUIRE(sets.size() == 9);
        std::set<std::pair<felem, felem>> seen;
        for (const auto& rs : sets) {
            CHECK(rs.others.size() == 7);
            for (const Point& p : rs.others) {
                CHECK(seen.insert({p.x, p.y}).second);  // disjointness
                CHECK(!(p.x == target.x && p.y == target.y));
            }
        }
    }
    CHECK_THROWS_AS(recovery_sets({Family::QcLrs, 3, 5}, Point{8, 0}),
                    std::invalid_argument);
}

TEST_CASE("recover_symbol") {
    const CodeSpec spec{Family::QcLrs, 3, 5};
    const CodeInstance inst = build_code(spec);
    SplitMix64 rng(31);
    const std::uint32_t q = 8;

    SUBCASE("single erasure is always recovered, both families") {
        for (Family f : {Family::QcLrs, Family::Lrs}) {
            const CodeInstance code = build_code({f, 3, 5});
            const Codeword word = code.encode(random_message(code, rng));
            for (const Point target : {Point{0, 0}, Point{3, 1}, Point{7, 7}}) {
                std::vector<bool> erased(word.size(), false);
                erased[target.x * q + target.y] = true;
                const auto got = recover_symbol(code, word, erased, target);
                REQUIRE(got.has_value());
                CHECK(*got == word[target.x * q + target.y]);
            }
        }
    }
    SUBCASE("everything erased fails") {
        const Codeword word = inst.encode(random_message(inst, rng));
        const std::vector<bool> erased(word.size(), true);
        CHECK_FALSE(recover_symbol(inst, word, erased, {0, 0}).has_value());
    }
    SUBCASE("target must be erased") {
        const Codeword word = inst.encode(random_message(inst, rng));
        const std::vector<bool> erased(word.size(), false);
        CHECK_THROWS_AS(recover_symbol(inst, word, erased, {0, 0}),
                        std::invalid_argument);
    }
}

TEST_CASE("failure criterion equals the combinatorial condition at q=4") {
    // recover_symbol fails iff every recovery set has >= r erased others, and
    // a recovered value is always the original; checked over all 2^15 masks.
    const CodeSpec spec{Family::QcLrs, 2, 2};
    const CodeInstance inst = build_code(spec);
    const std::uint32_t q = 4, r = spec.r();
    SplitMix64 rng(32);
    const Codeword word = inst.encode(random_message(inst, rng));
    const Point target{0, 0};
    const auto sets = recovery_sets(spec, target);

    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        std::vector<bool> erased(16, false);
        erased[0] = true;
        for (std::uint32_t p = 1; p < 16; ++p) erased[p] = (mask >> (p - 1)) & 1;

        bool blocked = true;
        for (const auto& rs : sets) {
            std::uint32_t miss = 0;
            for (const Point& pt : rs.others) miss += erased[pt.x * q + pt.y];
            if (miss < r) {
                blocked = false;
                break;
            }
        }
        const auto got = recover_symbol(inst, word, erased, target);
        REQUIRE(got.has_value() == !blocked);
        if (got) REQUIRE(*got == word[0]);
    }
}

TEST_CASE("LRS closed-form failure probability") {
    CHECK(lrs_failure_closed_form(8, 4, 0.0) == 0.0);
    CHECK(lrs_failure_closed_form(8, 4, 1.0) == doctest::Approx(1.0));
    // inner sum at tau = 1/2 is exactly 1/2, so the product is 2^-9
    CHECK(lrs_failure_closed_form(8, 4, 0.5) == doctest::Approx(0.001953125));
    CHECK_THROWS_AS(lrs_failure_closed_form(8, 0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(lrs_failure_closed_form(8, 4, 1.5), std::invalid_argument);
}

TEST_CASE("simulation basics") {
    SimConfig cfg;
    cfg.spec = {Family::Lrs, 3, 4};
    cfg.trials = 20000;
    cfg.seed = 5;

    SUBCASE("tau = 0 never fails") {
        cfg.tau = 0.0;
        CHECK(simulate_failure(cfg).failure_rate == 0.0);
    }
    SUBCASE("tau = 1 always fails") {
        cfg.tau = 1.0;
        CHECK(simulate_failure(cfg).failure_rate == 1.0);
    }
    SUBCASE("matches the closed form") {
        for (double tau : {0.5, 0.7}) {
            cfg.tau = tau;
            const SimEstimate est = simulate_failure(cfg);
            const double exact = lrs_failure_closed_form(8, 4, tau);
            CHECK(std::fabs(est.failure_rate - exact) <= 3.0 * est.half_width);
        }
    }
    SUBCASE("deterministic and thread-count independent") {
        cfg.tau = 0.6;
        cfg.threads = 1;
        const SimEstimate serial = simulate_failure(cfg);
        cfg.threads = 4;
        const SimEstimate parallel = simulate_failure(cfg);
        CHECK(serial.failures == parallel.failures);
        CHECK(serial.failure_rate == parallel.failure_rate);
    }
}

TEST_CASE("failure probability is target independent") {
    SimConfig a;
    a.spec = {Family::QcLrs, 3, 5};
    a.tau = 0.6;
    a.trials = 20000;
    a.seed = 6;
    SimConfig b = a;
    b.seed = 7;
    b.target = {3, 5};
    const SimEstimate ea = simulate_failure(a);
    const SimEstimate eb = simulate_failure(b);
    const double combined = std::sqrt(ea.half_width * ea.half_width +
                                      eb.half_width * eb.half_width);
    CHECK(std::fabs(ea.failure_rate - eb.failure_rate) <= 3.0 * combined);
}
