#include <doctest.h>

#include <qwave/cli.hpp>
#include <qwave/plot.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using namespace qwave;
namespace fs = std::filesystem;

namespace {

struct run_result {
    int code = 0;
    std::string out;
    std::string err;
};

run_result run(std::initializer_list<const char*> args)
{
    std::vector<const char*> argv{"qwave"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct scratch_dir {
    fs::path path;
    scratch_dir() : path(fs::temp_directory_path() / ("qwave_cli_" + std::to_string(std::rand())))
    {
        fs::create_directories(path);
    }
    ~scratch_dir() { fs::remove_all(path); }
    [[nodiscard]] std::string file(const char* name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const std::string& path, const std::string& text)
{
    std::ofstream(path, std::ios::binary) << text;
}

} // namespace

TEST_CASE("ratio writes CSV to stdout")
{
    const run_result r = run({"ratio", "--xmin", "-1e-12", "--xmax", "1e-12", "--points", "5"});
    REQUIRE(r.code == exit_ok);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "x,R");
    int rows = 0;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 5);
    CHECK(r.out.find("\n0,1\n") != std::string::npos);
}

TEST_CASE("ratio output is deterministic across worker counts")
{
    const auto once = [](const char* threads) {
        ::setenv("QWAVE_THREADS", threads, 1);
        return run({"ratio", "--xmin", "-1e-12", "--xmax", "1e-12", "--points", "301"}).out;
    };
    const std::string a = once("1");
    CHECK(a == once("1"));
    CHECK(a == once("4"));
    ::unsetenv("QWAVE_THREADS");
}

TEST_CASE("ratio JSON and gaussian mode")
{
    const run_result j = run({"ratio", "--gaussian", "--q-minus-1", "1e-3", "--points", "11", "--format", "json"});
    REQUIRE(j.code == exit_ok);
    const nlohmann::json doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.size() == 11);
    CHECK(doc.front()["x"] == -5.0);
    CHECK(doc.back()["x"] == 5.0);
    CHECK(doc[5]["ratio"] == 1.0);

    const run_result half = run({"ratio", "--gaussian", "--xmin", "0", "--points", "3"});
    REQUIRE(half.code == exit_ok);
    CHECK(half.out.rfind("x,ratio\n0,1\n2.5,", 0) == 0);
    CHECK(half.out.find("\n5,") != std::string::npos);
}

TEST_CASE("infeasible SI sweep reports a numeric failure")
{
    const run_result r = run({"ratio", "--points", "11"});
    CHECK(r.code == exit_numeric);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({}).code == exit_usage);
    CHECK(run({"ratio", "--species", "neutron"}).code == exit_usage);
    CHECK(run({"ratio", "--points", "1"}).code == exit_usage);
    CHECK(run({"ratio", "--energy-mev", "-1"}).code == exit_usage);
    CHECK(run({"ratio", "--xmin", "2", "--xmax", "1"}).code == exit_usage);
    CHECK(run({"ratio", "--plot", "svg"}).code == exit_usage);
    CHECK(run({"ratio", "--gaussian", "--q-minus-1", "-2"}).code == exit_usage);
    CHECK(run({"verify", "--suite", "nope"}).code == exit_usage);
    CHECK(run({"verify", "--tol", "bogus=1"}).code == exit_usage);
    CHECK(run({"verify", "--tol", "exact_residual=abc"}).code == exit_usage);
    CHECK(run({"plot"}).code == exit_usage);
    CHECK(run({"plot", "--csv", "/nonexistent/file.csv"}).code == exit_usage);
    CHECK(run({"ratio", "--config", "/nonexistent/qwave.ini"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("config files fill unset options")
{
    const scratch_dir dir;
    const std::string ini = dir.file("run.ini");
    write(ini, "xmin = -1e-12\nxmax = 1e-12\npoints = 7\n");
    const run_result from_file = run({"ratio", "--config", ini.c_str()});
    REQUIRE(from_file.code == exit_ok);
    CHECK(std::count(from_file.out.begin(), from_file.out.end(), '\n') == 8);

    const run_result explicit_wins = run({"ratio", "--config", ini.c_str(), "--points", "3"});
    REQUIRE(explicit_wins.code == exit_ok);
    CHECK(std::count(explicit_wins.out.begin(), explicit_wins.out.end(), '\n') == 4);

    write(ini, "colour = blue\n");
    CHECK(run({"ratio", "--config", ini.c_str()}).code == exit_usage);
    write(ini, "points = many\n");
    CHECK(run({"ratio", "--config", ini.c_str()}).code == exit_usage);
}

TEST_CASE("verify suites")
{
    const run_result kg = run({"verify", "--suite", "kleingordon"});
    CHECK(kg.code == exit_ok);
    CHECK(kg.out.find("checks passed") != std::string::npos);
    CHECK(kg.out.find("FAIL") == std::string::npos);

    const run_result trivial = run({"verify", "--q-minus-1", "0", "--json"});
    CHECK(trivial.code == exit_ok);
    const nlohmann::json doc = nlohmann::json::parse(trivial.out);
    CHECK(!doc.empty());
    for (const auto& row : doc)
        CHECK(row["pass"] == true);

    // an impossible tolerance must surface as a failed check
    const run_result strict = run({"verify", "--suite", "planewave", "--tol", "derivative_fd=1e-15"});
    CHECK(strict.code == exit_check_failed);
    CHECK(strict.out.find("FAIL") != std::string::npos);
}

TEST_CASE("plots from a CSV")
{
    const scratch_dir dir;
    const std::string csv = dir.file("r.csv");
    REQUIRE(run({"ratio", "--gaussian", "--points", "21", "--out", csv.c_str(), "--plot", "script"}).code == exit_ok);
    const std::string script = slurp(dir.file("r.py"));
    CHECK(script.find("matplotlib") != std::string::npos);
    CHECK(script.find("q-Gaussian ratio vs. x, q−1=1e−9, m=1, β=1") != std::string::npos);

    const std::string svg = dir.file("r.svg");
    REQUIRE(run({"plot", "--csv", csv.c_str(), "--kind", "svg", "--out", svg.c_str()}).code == exit_ok);
    const std::string text = slurp(svg);
    CHECK(text.rfind("<?xml", 0) == 0);
    CHECK(text.find("<polyline") != std::string::npos);

    const std::string empty = dir.file("empty.csv");
    write(empty, "");
    CHECK(run({"plot", "--csv", empty.c_str()}).code == exit_usage);
    write(empty, "x,R\n");
    CHECK_THROWS_AS((void)read_series_csv(empty), io_error);
    write(empty, "x,R\n1,abc\n");
    CHECK_THROWS_AS((void)read_series_csv(empty), io_error);

    const csv_series s = read_series_csv(csv);
    CHECK(s.x_name == "x");
    CHECK(s.y_name == "ratio");
    CHECK(s.x.size() == 21);
}

TEST_CASE("compact numbers")
{
    CHECK(compact_number(1e-9) == "1e−9");
    CHECK(compact_number(1e-3) == "1e−3");
    CHECK(compact_number(1.0) == "1");
    CHECK(compact_number(0.5) == "0.5");
    CHECK(compact_number(-2.0) == "−2");
}
