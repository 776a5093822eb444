#include "casimir/constants.hpp"

#include "casimir/errors.hpp"

#include <cmath>

namespace casimir
{

Temperature::Temperature(double kelvin) : kelvin_(kelvin)
{
    if (!(kelvin >= 0.0) || !std::isfinite(kelvin)) {
        throw InvalidInput("temperature must be finite and >= 0 K");
    }
}

std::optional<double> thermal_wavelength(Temperature T)
{
    if (T.is_zero()) {
        return std::nullopt;
    }
    return constants::hbar * constants::c / (2.0 * constants::k_B * T.kelvin());
}

double matsubara_frequency(std::uint64_t l, Temperature T)
{
    return 2.0 * std::numbers::pi * constants::k_B * T.kelvin() * static_cast<double>(l)
           / constants::hbar;
}

} // namespace casimir
