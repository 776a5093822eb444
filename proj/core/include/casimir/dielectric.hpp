#pragma once

#include "casimir/constants.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace casimir
{

/// Perfect reflector; epsilon is infinite at every frequency.
struct IdealConductor
{
    friend bool operator==(const IdealConductor&, const IdealConductor&) = default;
};

/// Lossless free-electron gas, eps(i xi) = 1 + omega_p^2 / xi^2.
struct Plasma
{
    double omega_p; // rad/s

    friend bool operator==(const Plasma&, const Plasma&) = default;
};

struct PermittivitySample
{
    double xi;  // rad/s
    double eps;

    friend bool operator==(const PermittivitySample&, const PermittivitySample&) = default;
};

/// eps(i xi) sampled on the imaginary axis, interpolated linearly in
/// (ln xi, ln eps).
class Tabulated
{
public:
    /// Requires >= 2 samples, xi strictly increasing and positive, eps >= 1.
    explicit Tabulated(std::vector<PermittivitySample> samples);

    std::span<const PermittivitySample> samples() const noexcept { return samples_; }
    double lower() const noexcept { return samples_.front().xi; }
    double upper() const noexcept { return samples_.back().xi; }
    bool covers(double xi) const noexcept { return xi >= lower() && xi <= upper(); }

    /// Throws OutOfRange outside [lower(), upper()].
    double interpolate(double xi) const;

    friend bool operator==(const Tabulated&, const Tabulated&) = default;

private:
    std::vector<PermittivitySample> samples_;
};

/// A dielectric response on the imaginary frequency axis together with the
/// temperature at which its parameters were measured. The material
/// temperature is metadata: no correction is applied for a mismatch with the
/// field temperature.
class DielectricModel
{
public:
    using Variant = std::variant<IdealConductor, Plasma, Tabulated>;

    static DielectricModel ideal(Temperature material_temperature = Temperature::zero());
    static DielectricModel plasma(double omega_p,
                                  Temperature material_temperature = Temperature::zero());
    static DielectricModel tabulated(std::vector<PermittivitySample> samples,
                                     Temperature material_temperature = Temperature::zero());

    const Variant& variant() const noexcept { return variant_; }
    Temperature material_temperature() const noexcept { return material_temperature_; }

    bool is_ideal() const noexcept { return std::holds_alternative<IdealConductor>(variant_); }
    bool is_plasma() const noexcept { return std::holds_alternative<Plasma>(variant_); }
    bool is_tabulated() const noexcept { return std::holds_alternative<Tabulated>(variant_); }

    /// omega_p of a Plasma model; throws InvalidInput for the other variants.
    double plasma_frequency() const;

    /// Short comma-free label, e.g. "plasma(omega_p=1.37e+16)".
    std::string descriptor() const;

    friend bool operator==(const DielectricModel&, const DielectricModel&) = default;

private:
    DielectricModel(Variant v, Temperature t) : variant_(std::move(v)), material_temperature_(t) {}

    Variant variant_;
    Temperature material_temperature_;
};

/// eps(i xi). IdealConductor yields +infinity. Plasma and Tabulated require
/// xi > 0; Tabulated throws OutOfRange outside its samples.
double epsilon_at(const DielectricModel& model, double xi);

/// Parses `xi_rad_per_s, epsilon` rows; `#` starts a comment.
Tabulated parse_permittivity_table(std::istream& in);
DielectricModel load_tabulated_model(const std::filesystem::path& path,
                                     Temperature material_temperature = Temperature::zero());

/// Free-electron gas parameters. All fields strictly positive and
/// n_val = valence_per_atom * atoms_per_cell / lattice_constant^3.
struct ElectronGasParams
{
    double n_val;            // m^-3
    double m_eff;            // kg
    double lattice_constant; // m
    double atoms_per_cell;
    double valence_per_atom;

    static ElectronGasParams from_lattice(double lattice_constant, double atoms_per_cell,
                                          double valence_per_atom,
                                          double m_eff = constants::m_e);
    /// One electron per cubic cell of side n_val^(-1/3).
    static ElectronGasParams from_density(double n_val, double m_eff = constants::m_e);

    void validate() const;
};

/// sqrt(n_val e^2 / (eps0 m_eff)); the SI form of the Gaussian 4 pi N e^2 / (m V).
double plasma_frequency_from_density(const ElectronGasParams& params);

struct PlasmaShift
{
    double omega_p;        // shifted plasma frequency
    double relative_shift; // delta omega_p / omega_p
};

/// omega_p scales as V^(-1/2) = a^(-3/2), so to first order
/// delta omega_p / omega_p = -(3/2) delta a / a. Requires |delta a / a| < 0.1.
PlasmaShift plasma_shift_from_lattice(double omega_p, double delta_a_over_a);

} // namespace casimir
