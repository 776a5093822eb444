#pragma once

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace casimir
{

/// One-dimensional lattice with pair potential V(u) = k u^2 / 2 - b u^3 / 6,
/// u = x - x0. The expansions below are first order in b, so construction
/// requires |b| u_zp < k with u_zp = sqrt(hbar / (2 M omega)) the zero-point
/// amplitude.
class AnharmonicLattice
{
public:
    AnharmonicLattice(double x0, double k_spring, double b_anharm, double mass);

    double x0() const noexcept { return x0_; }
    double k_spring() const noexcept { return k_spring_; }
    double b_anharm() const noexcept { return b_anharm_; }
    double mass() const noexcept { return mass_; }

    /// Einstein frequency sqrt(k / M).
    double omega() const;
    double zero_point_amplitude() const;

    AnharmonicLattice with_mass(double mass) const { return {x0_, k_spring_, b_anharm_, mass}; }

private:
    double x0_;
    double k_spring_;
    double b_anharm_;
    double mass_;
};

/// Classical thermal average x0 + b k_B T / (2 k^2).
double lattice_constant_thermal(const AnharmonicLattice& lat, Temperature T);

/// Zero-point average x0 + b hbar omega / (4 k^2), i.e. the thermal form
/// with k_B T -> hbar omega / 2.
double lattice_constant_zero_point(const AnharmonicLattice& lat);

struct IsotopeShift
{
    double delta_a;        // a(M2) - a(M1), m
    double delta_a_over_a; // normalised by a(M1)
};

/// Zero-point lattice shift between masses M1 and M2 of the same lattice:
/// (b hbar sqrt(k) / (4 k^2)) (M2^-1/2 - M1^-1/2).
IsotopeShift delta_a_between_isotopes(const AnharmonicLattice& lat, double m1, double m2);

/// b hbar / (4 k^(3/2)): the zero-point shift per unit M^-1/2.
double zero_point_coefficient(const AnharmonicLattice& lat);

/// Fits b so that delta_a_between_isotopes(M1, M2) reproduces the target
/// (a(M2) - a(M1)) / a(M1). Returns the lattice at mass M1.
AnharmonicLattice calibrate_anharmonicity(double x0, double k_spring, double m1, double m2,
                                          double target_delta_a_over_a);

struct RelativeForceDifference
{
    double value; // Delta F_21 / F
    ValidityReport validity;

    bool warning() const noexcept { return !validity.in_regime; }
};

/// Leading-order isotopic force shift -(8 c / (omega_p d)) delta_a / a, with
/// omega_p taken for isotope 1.
RelativeForceDifference relative_force_difference(double d, double omega_p,
                                                  double delta_a_over_a,
                                                  Temperature T = Temperature::zero());

/// The same quantity written through the plasma shift,
/// (16/3)(c / (omega_p d)) delta_omega_p / omega_p.
double relative_force_difference_from_plasma_shift(double d, double omega_p,
                                                   double delta_omega_over_omega);

struct ForceDifference
{
    double delta_force; // F2 - F1, N
    double relative;    // (F2 - F1) / F1
    double force_1;
    double force_2;
    double abs_error; // N, sum of both engine estimates
};

/// Evaluates the full Lifshitz force at omega_p and at
/// omega_p (1 - 3/2 delta_a/a) and differences them. A field temperature of
/// 0 K uses the zero-temperature integral. Requires a plasma model.
ForceDifference force_difference_full(const PlateSystem& sys, double delta_a_over_a,
                                      const QuadratureConfig& qcfg, const MatsubaraConfig& mcfg);

struct IsotopeRecord
{
    std::string element;
    int mass_number_1;
    int mass_number_2;
    double delta_a_over_a;
    Temperature temperature;
    std::string source;

    void validate() const;
};

inline constexpr int isotope_table_schema = 1;

/// CSV with header `element,A1,A2,delta_a_over_a,T_K,source`, optionally
/// preceded by `# schema=1`. Blank and other `#` lines are skipped. Throws
/// ParseError on malformed or duplicate (element, A1, A2, T) rows.
std::vector<IsotopeRecord> parse_isotope_table(std::istream& in);
std::vector<IsotopeRecord> load_isotope_table(const std::filesystem::path& path);

} // namespace casimir
