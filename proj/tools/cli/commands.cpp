#include "cli/commands.hpp"

#include "cli/csv.hpp"
#include "cli/electron_gas.hpp"

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/gravity.hpp"
#include "casimir/isotope.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/reference/simpson_oracle.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>

namespace casimir::cli
{

namespace
{

// Experimental force resolution the isotope shifts are compared against.
constexpr double experimental_resolution = 1e-2;

struct HelpRequested : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Failure
{
    std::string status; // machine-readable, e.g. "error:convergence"
    std::string message;
    int code;
};

Failure classify(const std::exception& e)
{
    if (dynamic_cast<const ConvergenceFailure*>(&e) != nullptr) {
        return {"error:convergence", e.what(), exit_code::numerical};
    }
    if (dynamic_cast<const TruncationFailure*>(&e) != nullptr) {
        return {"error:truncation", e.what(), exit_code::numerical};
    }
    if (dynamic_cast<const OutOfRange*>(&e) != nullptr) {
        return {"error:range", e.what(), exit_code::usage};
    }
    return {"error:input", e.what(), exit_code::usage};
}

void report(std::ostream& err, const Failure& f)
{
    err << "error kind=" << f.status.substr(6) << " message=\"" << f.message << "\"\n";
}

DielectricModel build_model(const RunConfig& cfg)
{
    if (cfg.model == "plasma") {
        return DielectricModel::plasma(*cfg.omega_p);
    }
    if (cfg.model == "table") {
        try {
            return load_tabulated_model(*cfg.eps_file);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    return DielectricModel::ideal();
}

QuadratureConfig quadrature_config(const RunConfig& cfg)
{
    QuadratureConfig q;
    q.rel_tol = cfg.rel_tol;
    return q;
}

MatsubaraConfig matsubara_config(const RunConfig& cfg)
{
    MatsubaraConfig m;
    m.field_temperature = Temperature{cfg.T};
    m.workers = cfg.workers;
    return m;
}

ForceResult lifshitz_force(const PlateSystem& sys, const RunConfig& cfg)
{
    if (cfg.T == 0.0) {
        return casimir_force_zero_temperature(sys, quadrature_config(cfg));
    }
    return casimir_force_finite_temperature(sys, matsubara_config(cfg), quadrature_config(cfg));
}

const std::vector<std::string_view> force_columns = {
    "d_m",          "T_K",           "model",         "force_N",     "pressure_Pa",
    "pressure_dyn_cm2", "abs_error_N", "ideal_ratio", "skin_ratio",  "thermal_ratio",
    "in_regime",    "thermal_regime", "extrapolated", "status"};

/// One force row; returns the exit code contribution (0 on success).
int force_row(CsvWriter& csv, const RunConfig& cfg, const DielectricModel& model, double d,
              std::ostream& err)
{
    const Temperature T{cfg.T};
    const auto lambda = thermal_wavelength(T);
    const double thermal_ratio = lambda ? d / *lambda : 0.0;
    std::optional<double> skin;
    bool in_regime = thermal_ratio < regime_threshold;
    if (model.is_plasma()) {
        const auto v = check_validity(d, model.plasma_frequency(), T);
        skin = v.skin_ratio;
        in_regime = v.in_regime;
    } else if (model.is_ideal()) {
        skin = 0.0;
    } else {
        in_regime = false;
    }
    const std::string thermal_regime = (lambda && d >= *lambda) ? "thermal" : "quantum";

    std::vector<std::string> fields{format_number(d), format_number(cfg.T), model.descriptor()};
    try {
        const PlateSystem sys(d, cfg.A, model);
        const auto r = lifshitz_force(sys, cfg);
        const double pressure = r.force / cfg.A;
        fields.insert(fields.end(),
                      {format_number(r.force), format_number(pressure),
                       format_number(units::pascal_to_dyn_per_cm2(pressure)),
                       format_number(r.abs_error), format_number(pressure / ideal_pressure(d)),
                       format_number(skin), format_number(thermal_ratio), format_bool(in_regime),
                       thermal_regime, format_bool(r.extrapolated), "ok"});
        csv.row(fields);
        return exit_code::ok;
    } catch (const Error& e) {
        const auto f = classify(e);
        report(err, f);
        const std::string nan = "nan";
        fields.insert(fields.end(), {nan, nan, nan, nan, nan, format_number(skin),
                                     format_number(thermal_ratio), format_bool(in_regime),
                                     thermal_regime, "false", f.status});
        csv.row(fields);
        return f.code;
    }
}

} // namespace

int cmd_force(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto model = build_model(cfg);
    CsvWriter csv(out, cfg, force_columns);
    return force_row(csv, cfg, model, cfg.d, err);
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto model = build_model(cfg);
    CsvWriter csv(out, cfg, force_columns);
    int code = exit_code::ok;
    const double ratio = cfg.d_max / cfg.d_min;
    for (int i = 0; i < cfg.points; ++i) {
        const double d = i == cfg.points - 1
                             ? cfg.d_max
                             : cfg.d_min * std::pow(ratio, static_cast<double>(i) / (cfg.points - 1));
        code = std::max(code, force_row(csv, cfg, model, d, err));
    }
    return code;
}

int cmd_isotope_diff(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<IsotopeRecord> records;
    try {
        records = load_isotope_table(isotope_table_path(cfg));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    ElectronGasTable gases;
    if (!cfg.omega_p) {
        try {
            gases = load_electron_gas_table(electron_gas_path(cfg));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }

    CsvWriter csv(out, cfg,
                  {"element", "A1", "A2", "record_T_K", "delta_a_over_a", "delta_omega_over_omega",
                   "omega_p", "d_m", "T_K", "dF_over_F_closed", "dF_over_F_full", "abs_dF_N",
                   "in_regime", "status"});

    QuadratureConfig q = quadrature_config(cfg);
    q.rel_tol = std::min(q.rel_tol, 1e-12); // differences of ~1e-7 need tight forces
    const auto m = matsubara_config(cfg);
    const Temperature T{cfg.T};

    int code = exit_code::ok;
    double worst = 0.0;
    std::size_t written = 0;
    for (const auto& rec : records) {
        double wp = 0.0;
        if (cfg.omega_p) {
            wp = *cfg.omega_p;
        } else if (auto it = gases.find(rec.element); it != gases.end()) {
            wp = plasma_frequency_from_density(it->second);
        } else {
            const auto msg = fmt::format("skipped {} {}/{} at {} K: no plasma frequency",
                                         rec.element, rec.mass_number_1, rec.mass_number_2,
                                         rec.temperature.kelvin());
            err << "warning: " << msg << '\n';
            csv.comment(msg);
            continue;
        }
        const auto shift = plasma_shift_from_lattice(wp, rec.delta_a_over_a);
        const auto closed = relative_force_difference(cfg.d, wp, rec.delta_a_over_a, T);
        std::vector<std::string> fields{rec.element,
                                        std::to_string(rec.mass_number_1),
                                        std::to_string(rec.mass_number_2),
                                        format_number(rec.temperature.kelvin()),
                                        format_number(rec.delta_a_over_a),
                                        format_number(shift.relative_shift),
                                        format_number(wp),
                                        format_number(cfg.d),
                                        format_number(cfg.T),
                                        format_number(closed.value)};
        try {
            const PlateSystem sys(cfg.d, cfg.A, DielectricModel::plasma(wp));
            const auto full = force_difference_full(sys, rec.delta_a_over_a, q, m);
            worst = std::max({worst, std::abs(closed.value), std::abs(full.relative)});
            fields.insert(fields.end(),
                          {format_number(full.relative), format_number(std::abs(full.delta_force)),
                           format_bool(closed.validity.in_regime), "ok"});
        } catch (const Error& e) {
            const auto f = classify(e);
            report(err, f);
            code = std::max(code, f.code);
            fields.insert(fields.end(),
                          {"nan", "nan", format_bool(closed.validity.in_regime), f.status});
        }
        csv.row(fields);
        ++written;
    }
    if (written > 0) {
        csv.comment(fmt::format("summary max_abs_dF_over_F={} experimental_resolution={} "
                                "below_resolution={}",
                                format_number(worst), format_number(experimental_resolution),
                                format_bool(worst < experimental_resolution)));
    }
    return code;
}

int cmd_crossover(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/)
{
    if (cfg.model == "table") {
        throw UsageError("crossover supports --model ideal or plasma");
    }
    const SlabPair slabs{cfg.density, cfg.density_2.value_or(cfg.density), cfg.thickness,
                         cfg.thickness_2.value_or(cfg.thickness), cfg.lateral};
    std::optional<double> wp;
    if (cfg.model == "plasma") {
        wp = cfg.omega_p;
    }
    Crossover x{};
    try {
        x = crossover_separation(slabs, wp);
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
    CsvWriter csv(out, cfg,
                  {"density_1_kg_m3", "density_2_kg_m3", "thickness_1_m", "thickness_2_m",
                   "casimir_model", "gravity_pressure_Pa", "crossover_d_m", "residual",
                   "near_field_valid"});
    csv.row({format_number(slabs.density_1), format_number(slabs.density_2),
             format_number(slabs.thickness_1), format_number(slabs.thickness_2),
             wp ? fmt::format("plasma(omega_p={:.6g})", *wp) : std::string("ideal"),
             format_number(newtonian_slab_pressure(slabs)), format_number(x.separation),
             format_number(x.residual), format_bool(x.near_field_valid)});
    return exit_code::ok;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto table_path = isotope_table_path(cfg);
    std::vector<IsotopeRecord> records;
    try {
        records = load_isotope_table(table_path);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }

    CsvWriter csv(out, cfg, {"check", "status", "value", "expected", "tolerance", "deviation"});
    const QuadratureConfig q = quadrature_config(cfg);
    constexpr double um = 1e-6;
    constexpr double area = 1e-4;
    const double wp = 1.37e16;
    bool all_pass = true;

    struct Outcome
    {
        Outcome(double v, double e, std::optional<double> t = std::nullopt)
            : value(v), expected(e), tolerance(t)
        {
        }
        double value;
        double expected;
        std::optional<double> tolerance; // overrides the nominal one
    };
    auto check = [&](std::string_view name, const std::function<Outcome()>& body,
                     double tolerance) {
        std::string status;
        double value = std::nan("");
        double expected = std::nan("");
        double deviation = std::nan("");
        try {
            const auto o = body();
            value = o.value;
            expected = o.expected;
            tolerance = o.tolerance.value_or(tolerance);
            deviation = expected != 0.0 ? std::abs(value - expected) / std::abs(expected)
                                        : std::abs(value);
            status = deviation <= tolerance ? "pass" : "fail";
        } catch (const Error& e) {
            const auto f = classify(e);
            report(err, f);
            status = f.status;
        }
        all_pass = all_pass && status == "pass";
        csv.row({std::string(name), status, format_number(value), format_number(expected),
                 format_number(tolerance), format_number(deviation)});
    };

    check("ideal_pressure_1um_dyn_cm2",
          [] { return Outcome{units::pascal_to_dyn_per_cm2(ideal_pressure(um)), -0.013}; },
          0.01);
    check("ideal_reduction_T0",
          [&] {
              const PlateSystem sys(um, area, DielectricModel::ideal());
              return Outcome{casimir_force_zero_temperature(sys, q).force,
                               ideal_pressure(um) * area};
          },
          1e-3);
    check("ideal_d4_scaling",
          [&] {
              const PlateSystem near(0.1 * um, area, DielectricModel::ideal());
              const PlateSystem far(10 * um, area, DielectricModel::ideal());
              return Outcome{casimir_force_zero_temperature(near, q).force
                                   / casimir_force_zero_temperature(far, q).force,
                               1e8};
          },
          std::max(10 * cfg.rel_tol, 1e-9));
    check("asymptotic_agreement_skin_0.02",
          [&] {
              const double d = 2 * std::numbers::pi * constants::c / (wp * 0.02);
              const PlateSystem sys(d, area, DielectricModel::plasma(wp));
              return Outcome{plasma_corrected_force(d, area, wp).force,
                               casimir_force_zero_temperature(sys, q).force};
          },
          0.02);
    check("temperature_continuity_300K",
          [&] {
              const double d = *thermal_wavelength(Temperature{300.0}) / 20.0;
              const PlateSystem sys(d, area, DielectricModel::plasma(wp));
              MatsubaraConfig m;
              m.field_temperature = Temperature{300.0};
              m.workers = cfg.workers;
              return Outcome{casimir_force_finite_temperature(sys, m, q).force,
                               casimir_force_zero_temperature(sys, q).force};
          },
          0.01);
    check("simpson_oracle_1um_300K",
          [&] {
              // 3x the combined error budget of both routes
              const PlateSystem sys(um, area, DielectricModel::plasma(wp));
              MatsubaraConfig m;
              m.field_temperature = Temperature{300.0};
              m.workers = cfg.workers;
              const auto r = casimir_force_finite_temperature(sys, m, q);
              const auto o = reference::simpson_force_finite_temperature(sys, Temperature{300.0});
              const double tol =
                  3.0 * (q.rel_tol * std::abs(r.force) + r.abs_error + o.error_estimate)
                  / std::abs(o.force);
              return Outcome{r.force, o.force, tol};
          },
          0.0);
    check("gravity_crossover_cu",
          [] { return Outcome{crossover_separation(copper_plates()).separation, 14e-6}; }, 0.1);
    check("plasma_shift_identity",
          [] {
              const double x = 1.4e-4;
              return Outcome{plasma_shift_from_lattice(1e16, x).relative_shift, -1.5 * x};
          },
          0.0);
    check("isotope_table_range",
          [&] {
              if (records.empty()) {
                  throw InvalidInput("isotope table is empty");
              }
              double outside = 0.0;
              for (const auto& r : records) {
                  const double m = std::abs(r.delta_a_over_a);
                  outside += (m < 1e-5 || m > 2e-3) ? 1.0 : 0.0;
              }
              return Outcome{outside, 0.0};
          },
          0.0);

    return all_pass ? exit_code::ok : exit_code::numerical;
}

RunConfig parse_command_line(int argc, const char* const* argv)
{
    RunConfig cfg;
    CLI::App app{"Casimir force between parallel plates: Lifshitz sums, plasma asymptotics, "
                 "isotopic shifts and the gravity crossover"};
    app.set_config("--config", "", "Flat key=value config file (flags take precedence)");
    app.require_subcommand(1);

    std::string model = cfg.model;
    double omega_p = 0.0;
    std::string eps_file;
    std::string isotope_table;
    std::string electron_gas;
    std::string out;
    double density_2 = 0.0;
    double thickness_2 = 0.0;

    app.add_option("--model", model, "ideal | plasma | table")
        ->check(CLI::IsMember({"ideal", "plasma", "table"}));
    auto* wp_opt = app.add_option("--omega-p", omega_p, "Plasma frequency (rad/s)");
    auto* eps_opt = app.add_option("--eps-file", eps_file, "Permittivity table `xi, eps`");
    app.add_option("--d", cfg.d, "Plate separation (m)");
    app.add_option("--d-min", cfg.d_min, "Sweep start (m)");
    app.add_option("--d-max", cfg.d_max, "Sweep end (m)");
    app.add_option("--points", cfg.points, "Sweep points, log-spaced");
    app.add_option("--T", cfg.T, "Field temperature (K); 0 selects the T = 0 integral");
    app.add_option("--A", cfg.A, "Plate area (m^2)");
    app.add_option("--rel-tol", cfg.rel_tol, "Relative quadrature tolerance");
    app.add_option("--workers", cfg.workers, "Threads for the Matsubara sum");
    auto* iso_opt = app.add_option("--isotope-table", isotope_table, "Isotope lattice CSV");
    auto* gas_opt = app.add_option("--electron-gas", electron_gas, "Electron-gas CSV");
    app.add_option("--density", cfg.density, "Slab density (kg/m^3), both plates");
    auto* rho2_opt = app.add_option("--density-2", density_2, "Second slab density (kg/m^3)");
    app.add_option("--thickness", cfg.thickness, "Slab thickness (m), both plates");
    auto* t2_opt = app.add_option("--thickness-2", thickness_2, "Second slab thickness (m)");
    app.add_option("--lateral", cfg.lateral, "Plate side length (m)");
    auto* out_opt = app.add_option("--out", out, "Write CSV here instead of stdout");

    const std::pair<const char*, Command> subcommands[] = {
        {"force", Command::force},
        {"sweep", Command::sweep},
        {"isotope-diff", Command::isotope_diff},
        {"crossover", Command::crossover},
        {"validate", Command::validate},
    };
    const char* help[] = {"Force at one separation", "Force over a log-spaced separation range",
                          "Isotopic force differences for each isotope-table record",
                          "Separation where Casimir pressure equals slab gravity",
                          "Run the built-in consistency checks"};
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < std::size(subcommands); ++i) {
        subs.push_back(app.add_subcommand(subcommands[i].first, help[i])->fallthrough());
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) {
            cfg.command = subcommands[i].second;
        }
    }
    cfg.model = model;
    if (wp_opt->count() > 0) cfg.omega_p = omega_p;
    if (eps_opt->count() > 0) cfg.eps_file = eps_file;
    if (iso_opt->count() > 0) cfg.isotope_table = isotope_table;
    if (gas_opt->count() > 0) cfg.electron_gas = electron_gas;
    if (rho2_opt->count() > 0) cfg.density_2 = density_2;
    if (t2_opt->count() > 0) cfg.thickness_2 = thickness_2;
    if (out_opt->count() > 0) cfg.out = out;
    cfg.validate();
    return cfg;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    try {
        cfg = parse_command_line(argc, argv);
    } catch (const HelpRequested& h) {
        out << h.what();
        return exit_code::ok;
    } catch (const UsageError& e) {
        err << "error kind=usage message=\"" << e.what() << "\"\n";
        return exit_code::usage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (cfg.out) {
        file.open(*cfg.out);
        if (!file) {
            err << "error kind=usage message=\"cannot write " << cfg.out->string() << "\"\n";
            return exit_code::usage;
        }
        sink = &file;
    }

    try {
        switch (cfg.command) {
        case Command::force: return cmd_force(cfg, *sink, err);
        case Command::sweep: return cmd_sweep(cfg, *sink, err);
        case Command::isotope_diff: return cmd_isotope_diff(cfg, *sink, err);
        case Command::crossover: return cmd_crossover(cfg, *sink, err);
        case Command::validate: return cmd_validate(cfg, *sink, err);
        }
    } catch (const UsageError& e) {
        err << "error kind=usage message=\"" << e.what() << "\"\n";
        return exit_code::usage;
    } catch (const Error& e) {
        const auto f = classify(e);
        report(err, f);
        return f.code;
    }
    return exit_code::usage;
}

} // namespace casimir::cli
