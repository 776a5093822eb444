#pragma once

#include "casimir/constants.hpp"

namespace casimir
{

/// Both ratios must fall below this for the leading plasma correction to
/// count as in-regime.
inline constexpr double regime_threshold = 0.1;

struct ValidityReport
{
    double skin_ratio;    // 2 pi c / (omega_p d)
    double thermal_ratio; // d / thermal_wavelength(T); 0 at T = 0
    bool in_regime;
};

/// Casimir pressure between perfect conductors at T = 0, -pi^2 hbar c / (240 d^4).
double ideal_pressure(double d);

struct AsymptoticForce
{
    double force;             // N
    double correction_factor; // 1 - (16/3) c / (omega_p d)
    ValidityReport validity;

    /// Evaluated outside the regime where the expansion holds.
    bool warning() const noexcept { return !validity.in_regime; }
};

/// Plasma-model force to first order in c / (omega_p d),
///   -(pi^2/240)(hbar c A / d^4)(1 - (16/3) c / (omega_p d)).
/// omega_p = +inf gives the ideal force. Out-of-regime inputs are evaluated
/// anyway and flagged.
AsymptoticForce plasma_corrected_force(double d, double area, double omega_p,
                                       Temperature T = Temperature::zero());

ValidityReport check_validity(double d, double omega_p, Temperature T);

} // namespace casimir
