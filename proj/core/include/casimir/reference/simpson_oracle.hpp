#pragma once

#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"

#include <cstddef>

namespace casimir::reference
{

struct SimpsonOptions
{
    /// Highest Matsubara index summed.
    std::size_t max_l = 2000;
    /// Simpson intervals per momentum integral (even).
    std::size_t intervals = 2000;
    /// The momentum grid ends where exp(-2 d xi (p - 1) / c) = exp(-decay_span).
    double decay_span = 27.7; // ~1e-12
};

struct SimpsonResult
{
    double force;          // N
    double error_estimate; // N, Richardson |S_N - S_N/2| / 15 summed over terms
};

/// Brute-force finite-temperature Lifshitz force: a plain sum over
/// l <= max_l of fixed-grid Simpson integrals in the original momentum
/// variable p, with the bracketed factors evaluated literally in long
/// double. The l = 0 term is taken at xi = 1e-6 xi_1 instead of an analytic
/// limit. Shares no integration code with the adaptive engine.
SimpsonResult simpson_force_finite_temperature(const PlateSystem& sys, Temperature T,
                                               const SimpsonOptions& options = {});

} // namespace casimir::reference
