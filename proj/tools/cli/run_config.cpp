#include "cli/run_config.hpp"

#include <fmt/format.h>

#include <cmath>
#include <cstdlib>

namespace casimir::cli
{

std::string to_string(Command c)
{
    switch (c) {
    case Command::force: return "force";
    case Command::sweep: return "sweep";
    case Command::isotope_diff: return "isotope-diff";
    case Command::crossover: return "crossover";
    case Command::validate: return "validate";
    }
    return "unknown";
}

void RunConfig::validate() const
{
    if (model != "ideal" && model != "plasma" && model != "table") {
        throw UsageError(fmt::format("unknown model '{}'", model));
    }
    if (model == "plasma" && command != Command::isotope_diff && !omega_p) {
        throw UsageError("--model plasma requires --omega-p");
    }
    if (omega_p && !(*omega_p > 0.0)) {
        throw UsageError("--omega-p must be > 0");
    }
    if (model == "table" && !eps_file) {
        throw UsageError("--model table requires --eps-file");
    }
    if (model != "table" && eps_file) {
        throw UsageError("--eps-file only applies to --model table");
    }
    if (model == "ideal" && omega_p && command != Command::isotope_diff) {
        throw UsageError("--omega-p conflicts with --model ideal");
    }
    if (!(d > 0.0) || !(A > 0.0)) {
        throw UsageError("--d and --A must be > 0");
    }
    if (!(T >= 0.0) || !std::isfinite(T)) {
        throw UsageError("--T must be >= 0");
    }
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw UsageError("--rel-tol must lie in (0, 1)");
    }
    if (command == Command::sweep) {
        if (!(d_min > 0.0) || !(d_min < d_max)) {
            throw UsageError("sweep requires 0 < --d-min < --d-max");
        }
        if (points < 2) {
            throw UsageError("sweep requires --points >= 2");
        }
    }
    if (command == Command::crossover) {
        const double fields[] = {density, density_2.value_or(density), thickness,
                                 thickness_2.value_or(thickness), lateral};
        for (double f : fields) {
            if (!(f > 0.0)) {
                throw UsageError("densities, thicknesses and --lateral must be > 0");
            }
        }
    }
    if (workers < 1) {
        throw UsageError("--workers must be >= 1");
    }
}

std::string RunConfig::canonical() const
{
    auto opt = [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, std::filesystem::path>) {
            return v ? v->string() : std::string("-");
        } else {
            return v ? fmt::format("{:.17g}", *v) : std::string("-");
        }
    };
    return fmt::format("command={}\nmodel={}\nomega_p={}\neps_file={}\nd={:.17g}\nd_min={:.17g}\n"
                       "d_max={:.17g}\npoints={}\nT={:.17g}\nA={:.17g}\nrel_tol={:.17g}\n"
                       "isotope_table={}\nelectron_gas={}\ndensity={:.17g}\ndensity_2={}\n"
                       "thickness={:.17g}\nthickness_2={}\nlateral={:.17g}\n",
                       to_string(command), model, opt(omega_p), opt(eps_file), d, d_min, d_max,
                       points, T, A, rel_tol, opt(isotope_table), opt(electron_gas), density,
                       opt(density_2), thickness, opt(thickness_2), lateral);
}

std::string RunConfig::hash() const
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : canonical()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return fmt::format("{:016x}", h);
}

std::filesystem::path data_directory()
{
    if (const char* env = std::getenv("CASIMIR_ISO_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return CASIMIR_DEFAULT_DATA_DIR;
}

std::filesystem::path isotope_table_path(const RunConfig& cfg)
{
    return cfg.isotope_table.value_or(data_directory() / "isotope_lattice.csv");
}

std::filesystem::path electron_gas_path(const RunConfig& cfg)
{
    return cfg.electron_gas.value_or(data_directory() / "electron_gas.csv");
}

} // namespace casimir::cli
