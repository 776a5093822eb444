#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>

namespace casimir
{

/// CODATA 2018 values in SI units.
struct PhysicalConstants
{
    static constexpr double hbar = 1.054571817e-34;      // J s
    static constexpr double c = 299792458.0;             // m/s
    static constexpr double k_B = 1.380649e-23;          // J/K
    static constexpr double G = 6.67430e-11;             // m^3 kg^-1 s^-2
    static constexpr double e_charge = 1.602176634e-19;  // C
    static constexpr double m_e = 9.1093837015e-31;      // kg
    static constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m
    static constexpr double atomic_mass_unit = 1.66053906660e-27;   // kg
};

using constants = PhysicalConstants;

inline constexpr std::string_view constant_set_id = "CODATA2018";

static_assert(constants::hbar > 0 && constants::c > 0 && constants::k_B > 0);

namespace units
{
inline constexpr double micrometre = 1e-6;
inline constexpr double nanometre = 1e-9;
inline constexpr double square_centimetre = 1e-4;

/// 1 Pa = 10 dyn/cm^2.
constexpr double pascal_to_dyn_per_cm2(double pa) { return pa * 10.0; }
constexpr double dyn_per_cm2_to_pascal(double dyn) { return dyn / 10.0; }
} // namespace units

/// Absolute temperature. Construction rejects negative or NaN values.
class Temperature
{
public:
    explicit Temperature(double kelvin);

    static Temperature zero() { return Temperature{0.0}; }

    double kelvin() const noexcept { return kelvin_; }
    bool is_zero() const noexcept { return kelvin_ == 0.0; }

    friend bool operator==(const Temperature&, const Temperature&) = default;

private:
    double kelvin_;
};

/// hbar c / (2 k_B T). Empty at T = 0, where the thermal wavelength is
/// infinite.
std::optional<double> thermal_wavelength(Temperature T);

/// xi_l = 2 pi k_B T l / hbar in rad/s.
double matsubara_frequency(std::uint64_t l, Temperature T);

} // namespace casimir
