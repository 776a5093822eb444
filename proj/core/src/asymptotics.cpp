#include "casimir/asymptotics.hpp"

#include "casimir/errors.hpp"

#include <cmath>
#include <numbers>

namespace casimir
{

double ideal_pressure(double d)
{
    if (!(d > 0.0)) {
        throw InvalidInput("separation must be > 0");
    }
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    return -pi2 * constants::hbar * constants::c / (240.0 * d * d * d * d);
}

ValidityReport check_validity(double d, double omega_p, Temperature T)
{
    if (!(d > 0.0) || !(omega_p > 0.0)) {
        throw InvalidInput("check_validity requires d > 0 and omega_p > 0");
    }
    const double skin = 2.0 * std::numbers::pi * constants::c / (omega_p * d);
    const auto lambda = thermal_wavelength(T);
    const double thermal = lambda ? d / *lambda : 0.0;
    return {skin, thermal, skin < regime_threshold && thermal < regime_threshold};
}

AsymptoticForce plasma_corrected_force(double d, double area, double omega_p, Temperature T)
{
    if (!(area > 0.0)) {
        throw InvalidInput("plate area must be > 0");
    }
    const auto validity = check_validity(d, omega_p, T);
    const double factor = 1.0 - (16.0 / 3.0) * constants::c / (omega_p * d);
    return {ideal_pressure(d) * area * factor, factor, validity};
}

} // namespace casimir
