#include "cli/commands.hpp"
#include "cli/csv.hpp"
#include "cli/electron_gas.hpp"
#include "cli/run_config.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace casimir::cli;

namespace
{

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "casimir");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep = ',')
{
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, sep)) {
        fields.push_back(f);
    }
    return fields;
}

// Data rows (non-comment lines after the column header).
std::vector<std::vector<std::string>> rows(const std::string& csv)
{
    std::vector<std::vector<std::string>> out;
    std::stringstream ss(csv);
    std::string line;
    bool header = false;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header) {
            header = true;
            continue;
        }
        out.push_back(split(line));
    }
    return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content)
{
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

} // namespace

TEST_CASE("force on an ideal conductor reports the closed-form pressure")
{
    const auto r = invoke({"force", "--model", "ideal", "--d", "1e-6", "--A", "1e-4"});
    REQUIRE(r.code == exit_code::ok);
    CHECK(r.out.find("# constants=CODATA2018") != std::string::npos);
    CHECK(r.out.find("# command=force") != std::string::npos);
    const auto data = rows(r.out);
    REQUIRE(data.size() == 1);
    REQUIRE(data[0].size() == 14);
    CHECK(std::stod(data[0][5]) == doctest::Approx(-0.013).epsilon(0.01));
    CHECK(std::stod(data[0][7]) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(data[0][13] == "ok");
}

TEST_CASE("usage errors exit 2 with a machine-readable message")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"force", "--model", "plasma"},
             {"force", "--model", "table"},
             {"force", "--model", "copper"},
             {"force", "--model", "ideal", "--omega-p", "1e16"},
             {"sweep", "--d-min", "1e-5", "--d-max", "1e-6"},
             {"crossover", "--thickness", "0"},
             {"frobnicate"},
             {},
             {"force", "--d", "-1"},
             {"force", "--T", "-3"},
             {"force", "--model", "table", "--eps-file", "/nonexistent/eps.csv"},
         }) {
        const auto r = invoke(args);
        CHECK(r.code == exit_code::usage);
        CHECK(r.err.find("error kind=usage") != std::string::npos);
    }
}

TEST_CASE("help exits 0")
{
    const auto r = invoke({"--help"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("isotope-diff") != std::string::npos);
}

TEST_CASE("sweep emits log-spaced rows ending at d_max")
{
    const auto r = invoke({"sweep", "--model", "plasma", "--omega-p", "1.37e16", "--d-min", "1e-7",
                           "--d-max", "1e-5", "--points", "5"});
    REQUIRE(r.code == exit_code::ok);
    const auto data = rows(r.out);
    REQUIRE(data.size() == 5);
    CHECK(std::stod(data[0][0]) == doctest::Approx(1e-7));
    CHECK(std::stod(data[2][0]) == doctest::Approx(1e-6));
    CHECK(std::stod(data[4][0]) == doctest::Approx(1e-5));
    for (std::size_t i = 1; i < data.size(); ++i) {
        CHECK(std::abs(std::stod(data[i][3])) < std::abs(std::stod(data[i - 1][3])));
    }
}

TEST_CASE("non-convergence is reported per row with exit 1")
{
    const auto r = invoke({"sweep", "--model", "plasma", "--omega-p", "1.37e16", "--T", "300",
                           "--d-min", "1e-6", "--d-max", "2e-6", "--points", "2", "--rel-tol", "1e-18"});
    CHECK(r.code == exit_code::numerical);
    const auto data = rows(r.out);
    REQUIRE(data.size() == 2);
    CHECK(data[0][13].rfind("error:", 0) == 0);
    CHECK(r.err.find("error kind=") != std::string::npos);
}

TEST_CASE("config file supplies values and flags override it")
{
    const auto cfg = temp_file("casimir_test.cfg", "model=plasma\nomega-p=1.37e16\nd=2e-6\n");
    const auto a = invoke({"force", "--config", cfg.string()});
    REQUIRE(a.code == exit_code::ok);
    CHECK(std::stod(rows(a.out)[0][0]) == doctest::Approx(2e-6));
    CHECK(rows(a.out)[0][2] == "plasma(omega_p=1.37e+16)");

    const auto b = invoke({"force", "--config", cfg.string(), "--d", "3e-6"});
    REQUIRE(b.code == exit_code::ok);
    CHECK(std::stod(rows(b.out)[0][0]) == doctest::Approx(3e-6));
}

TEST_CASE("identical configs give byte-identical output and the same hash")
{
    const std::vector<std::string> args{"sweep", "--model", "plasma", "--omega-p", "1.37e16",
                                        "--T", "300", "--points", "4"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.out == b.out);
    auto with_workers = args;
    with_workers.insert(with_workers.end(), {"--workers", "2"});
    CHECK(invoke(with_workers).out == a.out);

    const auto c = invoke({"sweep", "--model", "plasma", "--omega-p", "1.38e16", "--T", "300",
                           "--points", "4"});
    CHECK(split(a.out, '\n')[2] != split(c.out, '\n')[2]);
}

TEST_CASE("--out writes the CSV to a file")
{
    const auto path = std::filesystem::temp_directory_path() / "casimir_test_out.csv";
    std::filesystem::remove(path);
    const auto r = invoke({"crossover", "--out", path.string()});
    REQUIRE(r.code == exit_code::ok);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("crossover_d_m") != std::string::npos);
}

TEST_CASE("crossover for copper slabs is near 14 um")
{
    const auto r = invoke({"crossover"});
    REQUIRE(r.code == exit_code::ok);
    const auto data = rows(r.out);
    REQUIRE(data.size() == 1);
    CHECK(std::stod(data[0][6]) == doctest::Approx(14e-6).epsilon(0.1));
    CHECK(data[0][8] == "true");
}

TEST_CASE("isotope-diff covers every table row")
{
    const auto r = invoke({"isotope-diff"});
    REQUIRE(r.code == exit_code::ok);
    const auto data = rows(r.out);
    REQUIRE(data.size() == 8);
    CHECK(data[0][0] == "Ni");
    CHECK(std::stod(data[0][5]) == doctest::Approx(-2.1e-4));

    double largest = 0.0;
    std::string largest_element;
    for (const auto& row : data) {
        REQUIRE(row.size() == 14);
        CHECK(row[13] == "ok");
        const double closed = std::stod(row[9]);
        const double full = std::stod(row[10]);
        CHECK(closed * full > 0.0);
        if (std::abs(closed) > largest) {
            largest = std::abs(closed);
            largest_element = row[0];
        }
    }
    CHECK(largest_element == "Ne");
    CHECK(r.out.find("below_resolution=true") != std::string::npos);
}

TEST_CASE("isotope-diff skips elements without a plasma frequency")
{
    const auto table = temp_file("casimir_iso_x.csv",
                                 "# schema=1\nelement,A1,A2,delta_a_over_a,T_K,source\n"
                                 "Xx,1,2,1e-4,300,nowhere\nNi,58,64,1.4e-4,78,Kogan\n");
    const auto r = invoke({"isotope-diff", "--isotope-table", table.string()});
    CHECK(r.code == exit_code::ok);
    CHECK(rows(r.out).size() == 1);
    CHECK(r.out.find("# skipped Xx") != std::string::npos);
    CHECK(r.err.find("Xx") != std::string::npos);
}

TEST_CASE("isotope-diff on an empty table is header-only")
{
    const auto table = temp_file("casimir_iso_empty.csv", "");
    const auto r = invoke({"isotope-diff", "--isotope-table", table.string()});
    CHECK(r.code == exit_code::ok);
    CHECK(rows(r.out).empty());
    CHECK(r.out.find("element,A1,A2") != std::string::npos);
}

TEST_CASE("missing data files exit 2")
{
    CHECK(invoke({"isotope-diff", "--isotope-table", "/nonexistent.csv"}).code == exit_code::usage);
    CHECK(invoke({"validate", "--isotope-table", "/nonexistent.csv"}).code == exit_code::usage);
}

TEST_CASE("validate passes on the shipped data")
{
    const auto r = invoke({"validate"});
    CHECK(r.code == exit_code::ok);
    const auto data = rows(r.out);
    CHECK(data.size() == 9);
    for (const auto& row : data) {
        CHECK_MESSAGE(row[1] == "pass", row[0]);
    }
}

TEST_CASE("numbers are formatted with nine significant digits")
{
    CHECK(format_number(1.0) == "1.00000000e+00");
    CHECK(format_number(-1.30012577244e-3) == "-1.30012577e-03");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(std::optional<double>{}) == "nan");
}

TEST_CASE("config hash ignores worker count and output path")
{
    RunConfig a;
    RunConfig b;
    b.workers = 4;
    b.out = "/tmp/x.csv";
    CHECK(a.hash() == b.hash());
    b.d = 2e-6;
    CHECK(a.hash() != b.hash());
    CHECK(a.hash().size() == 16);
}

TEST_CASE("electron gas table parses the shipped file")
{
    const auto table = load_electron_gas_table(std::filesystem::path(CASIMIR_DATA_DIR) / "electron_gas.csv");
    CHECK(table.count("Ni") == 1);
    CHECK(table.count("Cu") == 1);
    std::istringstream bad("element,lattice_constant_m,atoms_per_cell,valence_per_atom\nNi,abc,4,2\n");
    CHECK_THROWS(parse_electron_gas_table(bad));
}
