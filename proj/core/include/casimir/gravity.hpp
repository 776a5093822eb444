#pragma once

#include <optional>

namespace casimir
{

/// Two parallel slabs facing each other across a gap.
struct SlabPair
{
    double density_1;   // kg/m^3
    double density_2;   // kg/m^3
    double thickness_1; // m
    double thickness_2; // m
    double lateral_extent; // m, side of the (square) plates

    void validate() const;
};

/// Two 1 cm x 1 cm x 1 mm copper plates.
SlabPair copper_plates();

/// Near-field Newtonian pressure between infinite slabs, 2 pi G rho1 rho2 t1 t2.
/// Independent of the gap.
double newtonian_slab_pressure(const SlabPair& slabs);

struct Crossover
{
    double separation;     // m
    double residual;       // |P_casimir(d)| / P_gravity - 1
    bool near_field_valid; // separation < 0.1 * lateral_extent
};

/// Separation below which the Casimir pressure magnitude exceeds the slab
/// gravity. Uses the ideal-conductor pressure unless omega_p is given, in
/// which case the first-order plasma correction is applied. Throws
/// InvalidInput when the root cannot be bracketed.
Crossover crossover_separation(const SlabPair& slabs, std::optional<double> omega_p = std::nullopt);

} // namespace casimir
