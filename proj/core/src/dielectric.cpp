#include "casimir/dielectric.hpp"

#include "casimir/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <string_view>

namespace casimir
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out)
{
    text = trim(text);
    if (text.empty()) {
        return false;
    }
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

} // namespace

Tabulated::Tabulated(std::vector<PermittivitySample> samples) : samples_(std::move(samples))
{
    if (samples_.size() < 2) {
        throw InvalidInput("tabulated permittivity needs at least 2 samples");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto& s = samples_[i];
        if (!(s.xi > 0.0) || !std::isfinite(s.xi)) {
            throw InvalidInput(fmt::format("sample {}: xi must be positive and finite", i));
        }
        if (!(s.eps >= 1.0) || !std::isfinite(s.eps)) {
            throw InvalidInput(fmt::format("sample {}: eps must be >= 1", i));
        }
        if (i > 0 && !(s.xi > samples_[i - 1].xi)) {
            throw InvalidInput(fmt::format("sample {}: xi not strictly increasing", i));
        }
    }
}

double Tabulated::interpolate(double xi) const
{
    if (!covers(xi)) {
        throw OutOfRange(fmt::format("xi = {:g} rad/s outside tabulated range [{:g}, {:g}]", xi,
                                     lower(), upper()),
                         lower(), upper());
    }
    // First sample with xi >= query.
    auto hi = std::lower_bound(samples_.begin(), samples_.end(), xi,
                               [](const PermittivitySample& s, double x) { return s.xi < x; });
    if (hi->xi == xi) {
        return hi->eps;
    }
    auto lo = hi - 1;
    const double t = std::log(xi / lo->xi) / std::log(hi->xi / lo->xi);
    return std::exp((1.0 - t) * std::log(lo->eps) + t * std::log(hi->eps));
}

DielectricModel DielectricModel::ideal(Temperature material_temperature)
{
    return DielectricModel(IdealConductor{}, material_temperature);
}

DielectricModel DielectricModel::plasma(double omega_p, Temperature material_temperature)
{
    if (!(omega_p > 0.0) || std::isnan(omega_p)) {
        throw InvalidInput("plasma frequency must be > 0");
    }
    return DielectricModel(Plasma{omega_p}, material_temperature);
}

DielectricModel DielectricModel::tabulated(std::vector<PermittivitySample> samples,
                                           Temperature material_temperature)
{
    return DielectricModel(Tabulated(std::move(samples)), material_temperature);
}

double DielectricModel::plasma_frequency() const
{
    if (const auto* p = std::get_if<Plasma>(&variant_)) {
        return p->omega_p;
    }
    throw InvalidInput("dielectric model is not a plasma model");
}

std::string DielectricModel::descriptor() const
{
    struct Visitor
    {
        std::string operator()(const IdealConductor&) const { return "ideal"; }
        std::string operator()(const Plasma& p) const
        {
            return fmt::format("plasma(omega_p={:.6g})", p.omega_p);
        }
        std::string operator()(const Tabulated& t) const
        {
            return fmt::format("table(n={} xi=[{:.6g};{:.6g}])", t.samples().size(), t.lower(),
                               t.upper());
        }
    };
    return std::visit(Visitor{}, variant_);
}

double epsilon_at(const DielectricModel& model, double xi)
{
    struct Visitor
    {
        double xi;

        double operator()(const IdealConductor&) const
        {
            return std::numeric_limits<double>::infinity();
        }
        double operator()(const Plasma& p) const
        {
            if (!(xi > 0.0)) {
                throw InvalidInput("plasma permittivity requires xi > 0");
            }
            const double ratio = p.omega_p / xi;
            return 1.0 + ratio * ratio;
        }
        double operator()(const Tabulated& t) const
        {
            if (!(xi > 0.0)) {
                throw InvalidInput("tabulated permittivity requires xi > 0");
            }
            return t.interpolate(xi);
        }
    };
    return std::visit(Visitor{xi}, model.variant());
}

Tabulated parse_permittivity_table(std::istream& in)
{
    std::vector<PermittivitySample> samples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view row = line;
        if (const auto hash = row.find('#'); hash != std::string_view::npos) {
            row = row.substr(0, hash);
        }
        row = trim(row);
        if (row.empty()) {
            continue;
        }
        const auto comma = row.find(',');
        PermittivitySample s{};
        if (comma == std::string_view::npos || !parse_double(row.substr(0, comma), s.xi)
            || !parse_double(row.substr(comma + 1), s.eps)) {
            throw ParseError(fmt::format("line {}: expected `xi, epsilon`", line_no), line_no);
        }
        if (!(s.xi > 0.0) || !(s.eps >= 1.0)) {
            throw ParseError(fmt::format("line {}: need xi > 0 and epsilon >= 1", line_no),
                             line_no);
        }
        if (!samples.empty() && !(s.xi > samples.back().xi)) {
            throw ParseError(fmt::format("line {}: rows must be sorted ascending in xi", line_no),
                             line_no);
        }
        samples.push_back(s);
    }
    if (samples.size() < 2) {
        throw ParseError("permittivity table needs at least 2 rows", line_no);
    }
    return Tabulated(std::move(samples));
}

DielectricModel load_tabulated_model(const std::filesystem::path& path,
                                     Temperature material_temperature)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput(fmt::format("cannot open permittivity table '{}'", path.string()));
    }
    auto table = parse_permittivity_table(in);
    return DielectricModel::tabulated(std::vector<PermittivitySample>(table.samples().begin(),
                                                                      table.samples().end()),
                                      material_temperature);
}

ElectronGasParams ElectronGasParams::from_lattice(double lattice_constant, double atoms_per_cell,
                                                  double valence_per_atom, double m_eff)
{
    ElectronGasParams p{valence_per_atom * atoms_per_cell
                            / (lattice_constant * lattice_constant * lattice_constant),
                        m_eff, lattice_constant, atoms_per_cell, valence_per_atom};
    p.validate();
    return p;
}

ElectronGasParams ElectronGasParams::from_density(double n_val, double m_eff)
{
    if (!(n_val > 0.0)) {
        throw InvalidInput("electron density must be > 0");
    }
    ElectronGasParams p{n_val, m_eff, std::cbrt(1.0 / n_val), 1.0, 1.0};
    p.validate();
    return p;
}

void ElectronGasParams::validate() const
{
    const double fields[] = {n_val, m_eff, lattice_constant, atoms_per_cell, valence_per_atom};
    for (double f : fields) {
        if (!(f > 0.0) || !std::isfinite(f)) {
            throw InvalidInput("electron gas parameters must be positive and finite");
        }
    }
    const double implied = valence_per_atom * atoms_per_cell
                           / (lattice_constant * lattice_constant * lattice_constant);
    if (std::abs(implied - n_val) > 1e-9 * n_val) {
        throw InvalidInput("n_val inconsistent with lattice constant and cell occupancy");
    }
}

double plasma_frequency_from_density(const ElectronGasParams& params)
{
    params.validate();
    const double e = constants::e_charge;
    return std::sqrt(params.n_val * e * e / (constants::vacuum_permittivity * params.m_eff));
}

PlasmaShift plasma_shift_from_lattice(double omega_p, double delta_a_over_a)
{
    if (!(std::abs(delta_a_over_a) < 0.1)) {
        throw InvalidInput("|delta a / a| must be < 0.1 for the first-order plasma shift");
    }
    const double rel = -1.5 * delta_a_over_a;
    return {omega_p * (1.0 + rel), rel};
}

} // namespace casimir
