// Command-line front end: dimensions, counting bounds, the deduct-q step and
// erasure-channel simulations, emitted as CSV with a JSON manifest per file.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qclrs/code.hpp"
#include "qclrs/counting.hpp"
#include "qclrs/monomial.hpp"
#include "qclrs/recovery.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 123456789;

using json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// Writes `content` to `path` (or stdout when empty) and, for file output, a
// sibling <path>.manifest.json that captures the exact rerun parameters.
void emit(const std::string& path, const std::string& content,
          const std::string& command, const json& params, std::uint64_t seed) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file: " + path);
        os << content;
        if (!os) throw std::runtime_error("write failed: " + path);
    }
    json manifest;
    manifest["command"] = command;
    manifest["params"] = params;
    manifest["seed"] = seed;
    manifest["version"] = QCLRS_VERSION;
    manifest["output"] = path;
    std::ofstream ms(path + ".manifest.json", std::ios::binary);
    if (!ms) throw std::runtime_error("cannot open manifest for: " + path);
    ms << manifest.dump(2) << '\n';
}

qclrs::Family parse_family(const std::string& name) {
    if (name == "qclrs") return qclrs::Family::QcLrs;
    if (name == "lrs") return qclrs::Family::Lrs;
    throw CLI::ValidationError("--family must be 'qclrs' or 'lrs'");
}

std::uint32_t dimension_of(qclrs::Family family, unsigned ell, std::uint32_t d) {
    const std::uint32_t q = 1u << ell;
    std::uint32_t k = 0;
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            const qclrs::Monomial m{a, b};
            k += family == qclrs::Family::QcLrs ? qclrs::is_qc_good(m, q, d)
                                                : qclrs::is_lrs_good(m, q, d);
        }
    return k;
}

std::vector<double> tau_grid(double tau_min, double tau_max, double tau_step) {
    if (tau_step <= 0.0) throw CLI::ValidationError("--tau-step must be positive");
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double tau = tau_min + k * tau_step;
        if (tau > tau_max + 1e-9) break;
        grid.push_back(std::min(tau, 1.0));
    }
    return grid;
}

std::string bounds_csv(unsigned ell, std::uint32_t r_min, std::uint32_t r_max) {
    const double n = static_cast<double>(1u << ell) * (1u << ell);
    std::ostringstream os;
    os << "r,rate,rate_ub,rate_lb\n";
    for (std::uint32_t r = r_min; r <= r_max; ++r) {
        const double exact = 1.0 - static_cast<double>(qclrs::count_S_star(ell, r)) / n;
        const qclrs::BoundsResult b = qclrs::bounds_S_star(ell, r);
        os << r << ',' << fmt(exact) << ',' << fmt(1.0 - b.lower / n) << ','
           << fmt(1.0 - b.upper / n) << '\n';
    }
    return os.str();
}

std::string simulate_csv(qclrs::Family family, unsigned ell, std::uint32_t r,
                         const std::vector<double>& grid, std::uint64_t trials,
                         std::uint64_t seed) {
    const std::uint32_t q = 1u << ell;
    qclrs::SimConfig cfg;
    cfg.spec = {family, ell, q - r};
    cfg.trials = trials;
    cfg.seed = seed;
    const bool lrs = family == qclrs::Family::Lrs;
    std::ostringstream os;
    os << "tau,fail_rate,half_width,trials";
    if (lrs) os << ",closed_form";
    os << '\n';
    for (const double tau : grid) {
        cfg.tau = tau;
        const qclrs::SimEstimate est = qclrs::simulate_failure(cfg);
        os << fmt(tau) << ',' << fmt(est.failure_rate) << ',' << fmt(est.half_width)
           << ',' << est.trials;
        if (lrs) os << ',' << fmt(qclrs::lrs_failure_closed_form(q, r, tau));
        os << '\n';
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic-curve-lifted Reed-Solomon codes: dimensions, "
                 "counting bounds and local-recovery simulation"};
    app.require_subcommand(1);

    std::string family_name = "qclrs";
    unsigned ell = 3;
    std::int64_t d_opt = -1, r_opt = -1;
    std::uint32_t r_min = 1, r_max = 0;
    std::uint64_t iv = 0, jv = 0;
    double tau_min = 0.30, tau_max = 1.00, tau_step = 0.02;
    std::uint64_t trials = 100000;
    std::uint64_t seed = kDefaultSeed;
    std::string out;

    auto* dim = app.add_subcommand("dim", "Code dimension and rate");
    dim->add_option("--family", family_name, "qclrs or lrs");
    dim->add_option("--ell", ell, "field exponent, q = 2^ell")->required();
    dim->add_option("--d", d_opt, "degree bound");
    dim->add_option("--r", r_opt, "local redundancy r = q - d");
    dim->add_option("--out", out, "output CSV path (stdout if omitted)");

    auto* bounds = app.add_subcommand("bounds", "Exact rate with dimension bounds");
    bounds->add_option("--ell", ell)->required();
    bounds->add_option("--r-min", r_min);
    bounds->add_option("--r-max", r_max, "default q/4");
    bounds->add_option("--out", out);

    auto* count = app.add_subcommand("count", "Bad-monomial set sizes");
    count->add_option("--ell", ell)->required();
    count->add_option("--r", r_opt)->required();
    count->add_option("--out", out);

    auto* deduct = app.add_subcommand("deduct-q", "One greedy q-deduction step");
    deduct->add_option("--ell", ell)->required();
    deduct->add_option("--i", iv)->required();
    deduct->add_option("--j", jv)->required();
    deduct->add_option("--out", out);

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo local-recovery failure");
    sim->add_option("--family", family_name);
    sim->add_option("--ell", ell)->required();
    sim->add_option("--d", d_opt);
    sim->add_option("--r", r_opt);
    sim->add_option("--tau-min", tau_min);
    sim->add_option("--tau-max", tau_max);
    sim->add_option("--tau-step", tau_step);
    sim->add_option("--trials", trials);
    sim->add_option("--seed", seed);
    sim->add_option("--out", out);

    auto* figures = app.add_subcommand("figures", "Batch CSVs for the q=32 rate "
                                       "band and the q=8 recovery comparison");
    figures->add_option("--out", out, "output directory")->required();
    figures->add_option("--seed", seed);
    figures->add_option("--trials", trials);

    CLI11_PARSE(app, argc, argv);

    try {
        const std::uint32_t q = 1u << ell;
        auto resolve_d = [&]() -> std::uint32_t {
            if ((d_opt < 0) == (r_opt < 0))
                throw CLI::ValidationError("exactly one of --d or --r is required");
            const std::int64_t d = d_opt >= 0 ? d_opt : static_cast<std::int64_t>(q) - r_opt;
            if (d < 1 || d > static_cast<std::int64_t>(q) - 1)
                throw CLI::ValidationError("degree bound out of range [1, q-1]");
            return static_cast<std::uint32_t>(d);
        };

        if (*dim) {
            const qclrs::Family family = parse_family(family_name);
            const std::uint32_t d = resolve_d();
            const std::uint32_t k = dimension_of(family, ell, d);
            std::ostringstream os;
            os << "r,k,rate\n"
               << (q - d) << ',' << k << ','
               << fmt(static_cast<double>(k) / (static_cast<double>(q) * q)) << '\n';
            emit(out, os.str(), "dim",
                 {{"family", family_name}, {"ell", ell}, {"d", d}}, seed);
        } else if (*bounds) {
            if (r_max == 0) r_max = q / 4;
            emit(out, bounds_csv(ell, r_min, r_max), "bounds",
                 {{"ell", ell}, {"r_min", r_min}, {"r_max", r_max}}, seed);
        } else if (*count) {
            if (r_opt < 1) throw CLI::ValidationError("--r must be >= 1");
            const std::uint32_t r = static_cast<std::uint32_t>(r_opt);
            std::ostringstream os;
            os << "ell,r,s0,s1,s2,s_star\n";
            if (ell <= 8) {
                os << ell << ',' << r << ',' << qclrs::enumerate_S_t(ell, r, 0).size()
                   << ',' << qclrs::enumerate_S_t(ell, r, 1).size() << ','
                   << qclrs::enumerate_S_t(ell, r, 2).size() << ','
                   << qclrs::count_S_star(ell, r) << '\n';
            } else {
                const qclrs::StateVector v =
                    qclrs::recurse_state(qclrs::initial_state(r), ell);
                os << ell << ',' << r << ',' << v.s0 << ',' << v.s1 << ',' << v.s2
                   << ",\n";
            }
            emit(out, os.str(), "count", {{"ell", ell}, {"r", r}}, seed);
        } else if (*deduct) {
            const auto [io, jo] = qclrs::deduct_q(
                static_cast<std::uint32_t>(iv), static_cast<std::uint32_t>(jv), ell);
            std::ostringstream os;
            os << "i,j,i_out,j_out\n" << iv << ',' << jv << ',' << io << ',' << jo << '\n';
            emit(out, os.str(), "deduct-q", {{"ell", ell}, {"i", iv}, {"j", jv}}, seed);
        } else if (*sim) {
            const qclrs::Family family = parse_family(family_name);
            const std::uint32_t d = resolve_d();
            const std::vector<double> grid = tau_grid(tau_min, tau_max, tau_step);
            emit(out, simulate_csv(family, ell, q - d, grid, trials, seed), "simulate",
                 {{"family", family_name},
                  {"ell", ell},
                  {"d", d},
                  {"tau_min", tau_min},
                  {"tau_max", tau_max},
                  {"tau_step", tau_step},
                  {"trials", trials}},
                 seed);
        } else if (*figures) {
            std::filesystem::create_directories(out);
            const std::string fig1 = (std::filesystem::path(out) / "fig1_q32.csv").string();
            emit(fig1, bounds_csv(5, 1, 8), "figures",
                 {{"figure", "fig1_q32"}, {"ell", 5}, {"r_min", 1}, {"r_max", 8}}, seed);

            // Four series of the q = 8 comparison: equal-dimension LRS/QC-LRS
            // pairs at k = 10 and k = 6.
            const std::vector<double> grid = tau_grid(0.30, 1.00, 0.02);
            struct Series {
                qclrs::Family family;
                std::uint32_t r;
                const char* name;
            };
            const Series series[] = {
                {qclrs::Family::Lrs, 4, "lrs_dim10_r4"},
                {qclrs::Family::QcLrs, 3, "qclrs_dim10_r3"},
                {qclrs::Family::Lrs, 5, "lrs_dim6_r5"},
                {qclrs::Family::QcLrs, 4, "qclrs_dim6_r4"},
            };
            std::vector<std::vector<double>> rates(4);
            for (std::size_t s = 0; s < 4; ++s) {
                qclrs::SimConfig cfg;
                cfg.spec = {series[s].family, 3, 8 - series[s].r};
                cfg.trials = trials;
                cfg.seed = seed;
                for (const double tau : grid) {
                    cfg.tau = tau;
                    rates[s].push_back(qclrs::simulate_failure(cfg).failure_rate);
                }
            }
            std::ostringstream os;
            os << "tau";
            for (const Series& s : series) os << ',' << s.name;
            os << '\n';
            for (std::size_t g = 0; g < grid.size(); ++g) {
                os << fmt(grid[g]);
                for (std::size_t s = 0; s < 4; ++s) os << ',' << fmt(rates[s][g]);
                os << '\n';
            }
            const std::string fig2 = (std::filesystem::path(out) / "fig2_q8.csv").string();
            emit(fig2, os.str(), "figures",
                 {{"figure", "fig2_q8"}, {"ell", 3}, {"trials", trials}}, seed);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
