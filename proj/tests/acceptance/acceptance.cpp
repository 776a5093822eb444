// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/dielectric.hpp"
#include "casimir/gravity.hpp"
#include "casimir/isotope.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/reference/simpson_oracle.hpp"

#include "cli/commands.hpp"
#include "cli/electron_gas.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace casimir;

namespace
{

constexpr double um = 1e-6;
constexpr double area = 1e-4;

struct Verdict
{
    bool pass;
    std::string detail;
};

double rel_dev(double a, double b) { return std::abs(a - b) / std::abs(b); }

QuadratureConfig quad(double rel = 1e-10)
{
    QuadratureConfig q;
    q.rel_tol = rel;
    return q;
}

MatsubaraConfig matsubara(double kelvin)
{
    MatsubaraConfig m;
    m.field_temperature = Temperature{kelvin};
    return m;
}

double zero_t(double d, const DielectricModel& model, double rel = 1e-10)
{
    return casimir_force_zero_temperature(PlateSystem(d, area, model), quad(rel)).force;
}

// Ideal-conductor pressure at 1 um and d^-4 scaling across [0.1, 10] um.
Verdict ac1()
{
    const double rel = 1e-10;
    const double p_dyn = units::pascal_to_dyn_per_cm2(zero_t(um, DielectricModel::ideal(), rel) / area);
    const double dev = rel_dev(p_dyn, -0.013);

    const double ref = zero_t(um, DielectricModel::ideal(), rel) * std::pow(um, 4);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double d = 0.1 * um * std::pow(100.0, i / 20.0);
        worst = std::max(worst, rel_dev(zero_t(d, DielectricModel::ideal(), rel) * std::pow(d, 4), ref));
    }
    const double scaling_tol = 10 * rel;
    return {dev <= 0.01 && worst <= scaling_tol,
            fmt::format("P(1um)={:.6e} dyn/cm2 dev={:.2e} (tol 1e-2); max |F d^4 - const|/const={:.2e} "
                        "over 21 points (tol {:.0e})",
                        p_dyn, dev, worst, scaling_tol)};
}

// Plasma force approaches the ideal one monotonically as omega_p grows.
Verdict ac2()
{
    const double ideal = ideal_pressure(um) * area;
    double previous = 0.0;
    bool monotone = true;
    double last_dev = 1.0;
    int n = 0;
    for (int i = 0; i <= 9; ++i) {
        const double wp = std::pow(10.0, 16.0 + i / 3.0);
        const double f = zero_t(um, DielectricModel::plasma(wp));
        if (i > 0 && !(std::abs(f) > std::abs(previous))) {
            monotone = false;
        }
        previous = f;
        last_dev = rel_dev(f, ideal);
        ++n;
    }
    return {monotone && last_dev <= 0.005,
            fmt::format("{} points omega_p 1e16..1e19: monotone={} final dev={:.2e} (tol 5e-3)", n,
                        monotone, last_dev)};
}

// Closed-form plasma correction vs the full T = 0 integral for skin ratio <= 0.02.
Verdict ac3()
{
    double worst = 0.0;
    std::string points;
    for (const double wp : {1.37e16, 2.41e16, 9.0e15}) {
        for (const double skin : {0.02, 0.01, 0.005}) {
            const double d = 2 * std::numbers::pi * constants::c / (wp * skin);
            const double full = zero_t(d, DielectricModel::plasma(wp));
            const double closed = plasma_corrected_force(d, area, wp).force;
            worst = std::max(worst, rel_dev(closed, full));
        }
    }
    return {worst <= 0.02,
            fmt::format("9 points (3 omega_p x skin 0.02/0.01/0.005): max dev={:.2e} (tol 2e-2)", worst)};
}

// Thermal correction <= 1% at lambda_T/20, exceeding 1% as d approaches lambda_T.
Verdict ac4()
{
    const Temperature T{300.0};
    const double lambda = *thermal_wavelength(T);
    bool pass = true;
    std::string detail;
    for (const auto& model : {DielectricModel::ideal(), DielectricModel::plasma(1.37e16)}) {
        auto deviation = [&](double d) {
            const PlateSystem sys(d, area, model);
            const double ft = casimir_force_finite_temperature(sys, matsubara(300.0), quad()).force;
            const double f0 = casimir_force_zero_temperature(sys, quad()).force;
            return std::abs(ft - f0) / std::abs(ft);
        };
        const double near = deviation(lambda / 20.0);
        double prev = near;
        bool growing = true;
        for (const double frac : {0.1, 0.25, 0.5, 0.75, 1.0}) {
            const double dev = deviation(frac * lambda);
            growing = growing && dev > prev;
            prev = dev;
        }
        const bool ok = near <= 0.01 && prev > 0.01 && growing;
        pass = pass && ok;
        detail += fmt::format("{}: dev(lambda/20={:.3g}um)={:.2e}, dev(lambda={:.3g}um)={:.2e}, growing={}; ",
                              model.descriptor(), lambda / 20 / um, near, lambda / um, prev, growing);
    }
    return {pass, detail + "(tol 1e-2)"};
}

Verdict ac5()
{
    const auto x = crossover_separation(copper_plates());
    const double dev = rel_dev(x.separation, 14e-6);
    return {dev <= 0.1, fmt::format("Cu 1 cm x 1 mm slabs: d={:.4e} m dev={:.2e} (tol 1e-1)", x.separation, dev)};
}

// Every isotope record at skin ratio 0.02 (8c/(omega_p d) ~ 0.025).
Verdict ac6()
{
    const auto records = load_isotope_table(std::filesystem::path(CASIMIR_DATA_DIR) / "isotope_lattice.csv");
    const auto gases = cli::load_electron_gas_table(std::filesystem::path(CASIMIR_DATA_DIR) / "electron_gas.csv");
    bool pass = !records.empty();
    double worst_mag = 0.0;
    double worst_agree = 0.0;
    double worst_param = 0.0;
    for (const auto& r : records) {
        const auto it = gases.find(r.element);
        if (it == gases.end()) {
            return {false, "no electron-gas parameters for " + r.element};
        }
        const double wp = plasma_frequency_from_density(it->second);
        const double d = 2 * std::numbers::pi * constants::c / (wp * 0.02);
        const double param = 8 * constants::c / (wp * d);
        const double closed = relative_force_difference(d, wp, r.delta_a_over_a).value;
        const auto full = force_difference_full(PlateSystem(d, area, DielectricModel::plasma(wp)),
                                                r.delta_a_over_a, quad(1e-12), matsubara(0.0));
        const double agree = rel_dev(closed, full.relative);
        worst_mag = std::max({worst_mag, std::abs(closed), std::abs(full.relative)});
        worst_agree = std::max(worst_agree, agree);
        worst_param = std::max(worst_param, param);
        pass = pass && param <= 0.3 && std::abs(closed) < 1e-4 && std::abs(full.relative) < 1e-4
               && agree <= 0.1;
    }
    return {pass, fmt::format("{} records, max 8c/(wp d)={:.3e} (<=0.3): max |dF/F|={:.2e} (tol 1e-4), "
                              "max closed-vs-full dev={:.2e} (tol 1e-1)",
                              records.size(), worst_param, worst_mag, worst_agree)};
}

// Algebraic identities over random inputs.
Verdict ac7()
{
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> log_wp(15.0, 17.5);
    std::uniform_real_distribution<double> log_d(-7.0, -4.0);
    std::uniform_real_distribution<double> shift(-2e-3, 2e-3);
    const int n = 100000;
    double worst_shift = 0.0;
    double worst_forms = 0.0;
    for (int i = 0; i < n; ++i) {
        const double wp = std::pow(10.0, log_wp(rng));
        const double d = std::pow(10.0, log_d(rng));
        const double x = shift(rng);
        const double dw = plasma_shift_from_lattice(wp, x).relative_shift;
        worst_shift = std::max(worst_shift, std::abs(dw + 1.5 * x) / std::abs(1.5 * x));
        const double a = relative_force_difference(d, wp, x).value;
        const double b = relative_force_difference_from_plasma_shift(d, wp, dw);
        worst_forms = std::max(worst_forms, std::abs(a - b) / std::abs(a));
    }
    const double tol = 4 * std::numeric_limits<double>::epsilon();
    return {worst_shift <= tol && worst_forms <= tol,
            fmt::format("{} samples: max rel err shift identity={:.2e}, force forms={:.2e} (tol {:.2e})", n,
                        worst_shift, worst_forms, tol)};
}

// Adaptive engine vs the fixed-grid Simpson oracle.
Verdict ac8()
{
    struct Point
    {
        double d;
        double T;
        DielectricModel model;
    };
    const std::vector<Point> matrix{
        {0.5 * um, 300.0, DielectricModel::plasma(1.37e16)},
        {1.0 * um, 300.0, DielectricModel::plasma(1.37e16)},
        {2.0 * um, 77.0, DielectricModel::plasma(2.41e16)},
        {1.0 * um, 300.0, DielectricModel::ideal()},
        {0.3 * um, 150.0, DielectricModel::plasma(9.0e15)},
    };
    bool pass = true;
    double worst_ratio = 0.0;
    for (const auto& p : matrix) {
        const PlateSystem sys(p.d, area, p.model);
        const auto q = quad(1e-10);
        const auto r = casimir_force_finite_temperature(sys, matsubara(p.T), q);
        const auto o = reference::simpson_force_finite_temperature(sys, Temperature{p.T});
        const double tol = 3.0 * (q.rel_tol * std::abs(r.force) + r.abs_error + o.error_estimate);
        const double ratio = std::abs(r.force - o.force) / tol;
        worst_ratio = std::max(worst_ratio, ratio);
        pass = pass && ratio <= 1.0;
    }
    return {pass, fmt::format("{} (d, T, model) points: max |adaptive - oracle| / (3x combined tol)={:.2e} "
                              "(tol 1)",
                              matrix.size(), worst_ratio)};
}

std::string run_cli(const std::vector<std::string>& args)
{
    std::vector<const char*> argv{"casimir"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return fmt::format("exit={}\n{}", code, out.str());
}

Verdict ac9()
{
    const std::vector<std::vector<std::string>> runs{
        {"sweep", "--model", "plasma", "--omega-p", "1.37e16", "--d-min", "2e-7", "--d-max", "5e-6",
         "--points", "8", "--T", "300"},
        {"sweep", "--model", "plasma", "--omega-p", "1.37e16", "--d-min", "2e-7", "--d-max", "5e-6",
         "--points", "8", "--T", "300", "--workers", "3"},
        {"isotope-diff"},
        {"crossover", "--model", "plasma", "--omega-p", "1.37e16"},
    };
    bool pass = true;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto first = run_cli(runs[i]);
        const auto second = run_cli(runs[i]);
        pass = pass && first == second && first.starts_with("exit=0");
    }
    // Worker count is excluded from results; output must not depend on it.
    pass = pass && run_cli(runs[0]) == run_cli(runs[1]);
    return {pass, fmt::format("{} configs run twice, plus 1 vs 3 workers: byte-identical={}", runs.size(), pass)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"AC1 ideal-conductor pressure and d^-4 scaling", ac1},
        {"AC2 plasma force converges to ideal as omega_p grows", ac2},
        {"AC3 asymptotic plasma correction vs full integral", ac3},
        {"AC4 temperature regime at 300 K", ac4},
        {"AC5 gravity crossover for copper slabs", ac5},
        {"AC6 isotope force difference bound", ac6},
        {"AC7 exact algebraic identities", ac7},
        {"AC8 adaptive engine vs Simpson oracle", ac8},
        {"AC9 CLI determinism", ac9},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        fmt::print("{} {}: {} [{:.2f} s]\n", v.pass ? "PASS" : "FAIL", name, v.detail, secs);
        failures += v.pass ? 0 : 1;
    }
    fmt::print("{}/{} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
