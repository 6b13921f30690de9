#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* p = std::getenv("QCLRS_CLI");
    REQUIRE_MESSAGE(p != nullptr, "QCLRS_CLI must point at the CLI binary");
    return p;
}

std::string slurp(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE_MESSAGE(is.good(), "missing file: " << path.string());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

int run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "qclrs_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("dim writes the q=8 dimension and rate") {
    const fs::path out = scratch_dir() / "dim.csv";
    REQUIRE(run("dim --family qclrs --ell 3 --d 5 --out " + out.string()) == 0);
    CHECK(slurp(out) == "r,k,rate\n3,10,0.15625\n");

    const fs::path out2 = scratch_dir() / "dim_lrs.csv";
    REQUIRE(run("dim --family lrs --ell 3 --r 4 --out " + out2.string()) == 0);
    CHECK(slurp(out2) == "r,k,rate\n4,10,0.15625\n");
}

TEST_CASE("manifest accompanies every file output") {
    const fs::path out = scratch_dir() / "dim_m.csv";
    REQUIRE(run("dim --family qclrs --ell 3 --d 5 --out " + out.string()) == 0);
    const auto manifest = nlohmann::json::parse(slurp(out.string() + ".manifest.json"));
    CHECK(manifest["command"] == "dim");
    CHECK(manifest["params"]["ell"] == 3);
    CHECK(manifest["params"]["d"] == 5);
    CHECK(manifest["output"] == out.string());
    CHECK(manifest.contains("seed"));
    CHECK(manifest.contains("version"));
}

TEST_CASE("deduct-q reproduces the worked example") {
    const fs::path out = scratch_dir() / "deduct.csv";
    REQUIRE(run("deduct-q --ell 4 --i 4 --j 10 --out " + out.string()) == 0);
    CHECK(slurp(out) == "i,j,i_out,j_out\n4,10,0,2\n");
}

TEST_CASE("count emits the q=8 set sizes") {
    const fs::path out = scratch_dir() / "count.csv";
    REQUIRE(run("count --ell 3 --r 3 --out " + out.string()) == 0);
    const auto lines = lines_of(slurp(out));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "ell,r,s0,s1,s2,s_star");
    CHECK(lines[1].substr(0, 4) == "3,3,");
    CHECK(lines[1].substr(lines[1].rfind(',') + 1) == "54");
}

TEST_CASE("bounds bracket the exact rate") {
    const fs::path out = scratch_dir() / "bounds.csv";
    REQUIRE(run("bounds --ell 5 --r-min 1 --r-max 8 --out " + out.string()) == 0);
    const auto lines = lines_of(slurp(out));
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "r,rate,rate_ub,rate_lb");
    for (std::size_t k = 1; k < lines.size(); ++k) {
        double rate = 0, ub = 0, lb = 0;
        int r = 0;
        char comma;
        std::istringstream is(lines[k]);
        is >> r >> comma >> rate >> comma >> ub >> comma >> lb;
        REQUIRE_FALSE(is.fail());
        CHECK(r == static_cast<int>(k));
        CHECK(lb <= rate);
        CHECK(rate <= ub);
        CHECK(ub < 1.0);
    }
}

TEST_CASE("simulate output is seed deterministic") {
    const fs::path a = scratch_dir() / "sim_a.csv";
    const fs::path b = scratch_dir() / "sim_b.csv";
    const std::string args =
        "simulate --family lrs --ell 3 --r 4 --tau-min 0.5 --tau-max 0.6 "
        "--tau-step 0.1 --trials 2000 --seed 42 --out ";
    REQUIRE(run(args + a.string()) == 0);
    REQUIRE(run(args + b.string()) == 0);
    const std::string text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(lines_of(text)[0] == "tau,fail_rate,half_width,trials,closed_form");
    REQUIRE(lines_of(text).size() == 3);
}

TEST_CASE("figures is deterministic and writes both CSVs") {
    const fs::path da = scratch_dir() / "fig_a";
    const fs::path db = scratch_dir() / "fig_b";
    const std::string args = "figures --trials 500 --seed 9 --out ";
    REQUIRE(run(args + da.string()) == 0);
    REQUIRE(run(args + db.string()) == 0);
    for (const char* name : {"fig1_q32.csv", "fig2_q8.csv"}) {
        CHECK(slurp(da / name) == slurp(db / name));
        CHECK(fs::exists(da / (std::string(name) + ".manifest.json")));
    }
    CHECK(lines_of(slurp(da / "fig2_q8.csv"))[0] ==
          "tau,lrs_dim10_r4,qclrs_dim10_r3,lrs_dim6_r5,qclrs_dim6_r4");
}

TEST_CASE("argument validation exit codes") {
    CHECK(run("dim --ell 3") != 0);                    // neither --d nor --r
    CHECK(run("dim --ell 3 --d 5 --r 3") != 0);        // both
    CHECK(run("dim --ell 3 --d 8") != 0);              // out of range
    CHECK(run("dim --family nope --ell 3 --d 5") != 0);
}
