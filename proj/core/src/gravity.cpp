#include "casimir/gravity.hpp"

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace casimir
{

void SlabPair::validate() const
{
    const double fields[] = {density_1, density_2, thickness_1, thickness_2, lateral_extent};
    for (double f : fields) {
        if (!(f > 0.0) || !std::isfinite(f)) {
            throw InvalidInput("slab densities, thicknesses and lateral extent must be > 0");
        }
    }
}

SlabPair copper_plates()
{
    return {8960.0, 8960.0, 1e-3, 1e-3, 1e-2};
}

double newtonian_slab_pressure(const SlabPair& slabs)
{
    slabs.validate();
    return 2.0 * std::numbers::pi * constants::G * slabs.density_1 * slabs.density_2
           * slabs.thickness_1 * slabs.thickness_2;
}

Crossover crossover_separation(const SlabPair& slabs, std::optional<double> omega_p)
{
    const double gravity = newtonian_slab_pressure(slabs);

    double lo = 1e-9;
    double hi = 1.0;
    double shift = 0.0; // (16/3) c / omega_p
    if (omega_p) {
        if (!(*omega_p > 0.0)) {
            throw InvalidInput("omega_p must be > 0");
        }
        shift = (16.0 / 3.0) * constants::c / *omega_p;
        // |P| is monotone decreasing for d > 5 shift / 4; start where the
        // correction factor is 1/2.
        lo = std::max(lo, 2.0 * shift);
    }
    auto excess = [&](double d) {
        return std::abs(ideal_pressure(d)) * (1.0 - shift / d) / gravity - 1.0;
    };

    double f_lo = excess(lo);
    const double f_hi = excess(hi);
    if (!(f_lo > 0.0 && f_hi < 0.0)) {
        throw InvalidInput("cannot bracket the Casimir-gravity crossover in [1 nm, 1 m]");
    }
    // Geometric bisection; |P| spans many decades across the bracket.
    while (hi / lo - 1.0 > 1e-13) {
        const double mid = std::sqrt(lo * hi);
        const double f_mid = excess(mid);
        if (f_mid > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    const double root = std::sqrt(lo * hi);
    return {root, excess(root), root < 0.1 * slabs.lateral_extent};
}

} // namespace casimir
