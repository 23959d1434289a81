#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "cauchy/cli/commands.hpp"
#include "cauchy/cli/csv.hpp"
#include "cauchy/cli/run_config.hpp"

using namespace cauchy::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / "cauchy_cli_tests" / name;
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t count_lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-2.5) == "-2.5");
    CHECK(format_number(1e-20) == "9.9999999999999995e-21");
    CHECK(format_number(std::numbers::pi) == "3.1415926535897931");
    CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("csv tables") {
    CsvTable t({"a", "b"});
    t.add_row({"1", "2"});
    t.add_row({format_number(0.5), "x"});
    CHECK(t.str() == "a,b\n1,2\n0.5,x\n");
    CHECK(t.rows() == 2);
    CHECK_THROWS(t.add_row({"1"}));
}

TEST_CASE("config parsing") {
    const auto cfg = parse_config(
        "# desk example\n"
        "example = combo   # two terms\n"
        "terms = 1.0:cos:1, 0.5:sin:2\n"
        "a = 2*pi\n"
        "b = pi/8\n"
        "nx = 33\n"
        "ny = 5\n"
        "gain_method = tuned\n"
        "tol = 1e-9\n");
    CHECK(cfg.example == ExampleKind::combo);
    REQUIRE(cfg.terms.size() == 2);
    CHECK(cfg.terms[1].k == 2);
    CHECK(cfg.terms[1].parity == cauchy::Parity::sin);
    CHECK(cfg.terms[1].coeff == 0.5);
    CHECK(cfg.a == 2.0 * std::numbers::pi);
    CHECK(cfg.b == std::numbers::pi / 8.0);
    CHECK(cfg.nx == 33);
    CHECK(cfg.gain_method == GainMethod::tuned);
    REQUIRE(cfg.tol.has_value());
    CHECK(*cfg.tol == 1e-9);

    const auto d = parse_config("");
    CHECK(d.a == 2.0 * std::numbers::pi);
    CHECK(d.b == 0.5);
    CHECK(d.nx == 65);
    CHECK(d.ny == 9);
    CHECK(d.max_sweeps == 500);
    CHECK_FALSE(d.tol.has_value());

    const auto o = parse_config("nx = 33\n", {{"nx", "17"}, {"a", "pi"}});
    CHECK(o.nx == 17);
    CHECK(o.a == std::numbers::pi);
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("nx = 1\n"), ConfigError);
    try {
        parse_config("nx = 1\n");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("insufficient x nodes") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("colour = blue\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("nx 33\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("nx = 3.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("pole_max = 1.0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("pole_min = 0.9\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("example = combo\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("terms = 1:tan:1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("a = 2*e\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("max_sweeps = 0\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/cauchy.cfg"), ConfigError);
}

TEST_CASE("solve writes its artifacts and reports non-convergence") {
    const auto dir = scratch("solve");
    auto cfg = parse_config("nx = 65\nny = 3\nmax_sweeps = 1\ntol = 0\n");
    cfg.output_dir = dir.string();
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_solve(cfg, out, err) == kExitNotConverged);
    const auto history = slurp(dir / "history.csv");
    CHECK(history.rfind("sweep,top_residual,bottom_error\n", 0) == 0);
    CHECK(count_lines(history) == 2);
    const auto boundary = slurp(dir / "boundary.csv");
    CHECK(boundary.rfind("x,exact_bottom,estimated_bottom\n", 0) == 0);
    CHECK(count_lines(boundary) == 66);
    CHECK(boundary.find('\r') == std::string::npos);
    CHECK(slurp(dir / "gain.csv").rfind("method,spectral_radius,condition\nackermann,", 0) == 0);
    CHECK(slurp(dir / "plot.gp").find("boundary.csv") != std::string::npos);
}

TEST_CASE("solve exit codes for errors") {
    std::ostringstream out;
    std::ostringstream err;
    auto cfg = default_config();
    cfg.nx = 1;
    CHECK(cmd_solve(cfg, out, err) == kExitUsage);
    CHECK(err.str().find("insufficient x nodes") != std::string::npos);

    auto tall = parse_config("ny = 9\n");
    tall.output_dir = scratch("tall").string();
    std::ostringstream err2;
    CHECK(cmd_solve(tall, out, err2) == kExitRuntime);
    CHECK(err2.str().find("condition") != std::string::npos);

    auto diverging = parse_config("ny = 3\nmax_sweeps = 50\n");
    diverging.output_dir = scratch("diverging").string();
    std::ostringstream err3;
    CHECK(cmd_solve(diverging, out, err3) == kExitRuntime);
    CHECK(err3.str().find("divergence guard") != std::string::npos);
}

TEST_CASE("diagnose on the default mode set") {
    const auto dir = scratch("diagnose");
    auto cfg = default_config();
    cfg.output_dir = dir.string();
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_diagnose(cfg, out, err) == kExitOk);
    const auto spectral = slurp(dir / "spectral.csv");
    CHECK(spectral.rfind("n,lambda,rho,gram_err,eigen_residual\n", 0) == 0);
    CHECK(count_lines(spectral) == 18);
    std::istringstream obs(slurp(dir / "observability.csv"));
    std::string line;
    std::getline(obs, line);
    CHECK(line == "x,lower_bound");
    std::size_t rows = 0;
    while (std::getline(obs, line)) {
        ++rows;
        CHECK(std::stod(line.substr(line.find(',') + 1)) > 0.0);
    }
    CHECK(rows == 11);

    auto coarse = default_config();
    coarse.output_dir = dir.string();
    coarse.quadrature = 101;
    std::ostringstream err2;
    CHECK(cmd_diagnose(coarse, out, err2) == kExitRuntime);
}
