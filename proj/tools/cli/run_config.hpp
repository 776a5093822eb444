#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace casimir::cli
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int numerical = 1; // non-convergence or a failed check
inline constexpr int usage = 2;
} // namespace exit_code

enum class Command
{
    force,
    sweep,
    isotope_diff,
    crossover,
    validate,
};

std::string to_string(Command c);

/// Fully resolved settings for one run: flags over config file over defaults.
struct RunConfig
{
    Command command = Command::force;

    std::string model = "ideal"; // ideal | plasma | table
    std::optional<double> omega_p;
    std::optional<std::filesystem::path> eps_file;

    double d = 1e-6;
    double d_min = 1e-7;
    double d_max = 1e-5;
    int points = 21;
    double T = 0.0;
    double A = 1e-4;
    double rel_tol = 1e-10;
    unsigned workers = 1;

    std::optional<std::filesystem::path> isotope_table;
    std::optional<std::filesystem::path> electron_gas;

    double density = 8960.0;
    std::optional<double> density_2;
    double thickness = 1e-3;
    std::optional<double> thickness_2;
    double lateral = 1e-2;

    std::optional<std::filesystem::path> out;

    /// Throws UsageError on inconsistent settings.
    void validate() const;

    /// One `key=value` line per setting that affects results, in fixed order.
    std::string canonical() const;
    /// FNV-1a 64 of canonical(), as 16 hex digits.
    std::string hash() const;
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// CASIMIR_ISO_DATA_DIR if set, else the data directory compiled in.
std::filesystem::path data_directory();

std::filesystem::path isotope_table_path(const RunConfig& cfg);
std::filesystem::path electron_gas_path(const RunConfig& cfg);

} // namespace casimir::cli
