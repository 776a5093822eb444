#pragma once

#include "casimir/constants.hpp"
#include "casimir/dielectric.hpp"

#include <cstddef>

namespace casimir
{

/// Two identical, infinitely thick parallel plates.
class PlateSystem
{
public:
    PlateSystem(double separation, double area, DielectricModel model);
    /// Throws InvalidInput unless model_1 == model_2.
    PlateSystem(double separation, double area, DielectricModel model_1,
                DielectricModel model_2);

    double separation() const noexcept { return separation_; }
    double area() const noexcept { return area_; }
    const DielectricModel& model() const noexcept { return model_; }

    PlateSystem with_separation(double d) const { return {d, area_, model_}; }
    PlateSystem with_area(double a) const { return {separation_, a, model_}; }
    PlateSystem with_model(DielectricModel m) const { return {separation_, area_, std::move(m)}; }

private:
    double separation_;
    double area_;
    DielectricModel model_;
};

struct QuadratureConfig
{
    double rel_tol = 1e-10;
    /// Absolute tolerance on the returned force, in newtons. 0 disables it.
    double abs_tol = 0.0;
    /// Subinterval budget per adaptive integral.
    int max_refinements = 2000;

    void validate() const;
};

struct MatsubaraConfig
{
    Temperature field_temperature = Temperature::zero();
    double term_rel_tol = 1e-12;
    /// Stop after this many consecutive terms below term_rel_tol * |total|.
    int consecutive_small = 3;
    std::size_t hard_cap = 1'000'000;
    /// Worker threads for evaluating Matsubara terms. The reduction order is
    /// fixed, so the result does not depend on this.
    unsigned workers = 1;

    void validate() const;
};

/// K = sqrt(p^2 - 1 + eps).
double k_function(double xi, double p, double eps);

/// The two inverse bracketed factors of the Lifshitz integrand,
/// [r^-2 exp(2 d xi p / c) - 1]^-1, for the eps-weighted (TM) and
/// unweighted (TE) reflection ratios. Both are >= 0.
struct ModeTerms
{
    double tm;
    double te;
};

/// Requires p >= 1, eps >= 1 finite, xi > 0. Throws NonFiniteValue for an
/// infinite eps; use mode_term_ideal for perfect reflectors.
ModeTerms mode_term(double xi, double p, double d, double eps);
/// Perfect-reflector limit: both terms are 1 / (exp(2 d xi p / c) - 1).
ModeTerms mode_term_ideal(double xi, double p, double d);

struct ForceResult
{
    double force;             // N, negative for attraction
    double abs_error;         // N, estimated
    std::size_t matsubara_terms = 0; // 0 for the T = 0 integral
    /// A tabulated model was evaluated outside its samples (edge value used).
    bool extrapolated = false;
};

/// Finite-temperature Lifshitz force,
///   F = -(k_B T A / pi c^3) sum'_l xi_l^3 int_1^inf p^2 {tm + te} dp,
/// evaluated in y = 2 d xi p / c as F = -(k_B T A / 8 pi d^3) sum'_l I(y_l).
/// The l = 0 term uses the xi -> 0 limit of the reflection ratios.
ForceResult casimir_force_finite_temperature(const PlateSystem& sys, const MatsubaraConfig& mcfg,
                                             const QuadratureConfig& qcfg);

/// Zero-temperature Lifshitz force, the continuous-frequency counterpart,
/// -(hbar c A / 32 pi^2 d^4) int_0^inf du I(u).
ForceResult casimir_force_zero_temperature(const PlateSystem& sys, const QuadratureConfig& qcfg);

namespace detail
{

/// Reflection data at one imaginary frequency in the scaled variable
/// y = 2 d xi p / c, valid for y >= y_min = 2 d xi / c.
struct FrequencyPoint
{
    double y_min;
    /// eps - 1; +inf for a perfect reflector or the plasma xi -> 0 limit.
    double eps_minus_one;
    /// (eps - 1) y_min^2, i.e. (K y_min)^2 - y^2; finite in the plasma xi -> 0 limit.
    double q_squared;
    /// TE ratio is 1 (perfect reflector).
    bool te_ideal;
};

struct ReflectionPair
{
    double r_tm;
    double one_minus_r_tm;
    double r_te;
    double one_minus_r_te;
};

ReflectionPair reflection(const FrequencyPoint& fp, double y);
/// y^2 {tm + te} at scaled momentum y.
double spectral_integrand(const FrequencyPoint& fp, double y);
FrequencyPoint frequency_point(const DielectricModel& model, double xi, double d,
                               bool* extrapolated = nullptr);
/// int_{y_min}^inf y^2 {tm + te} dy.
struct SpectralIntegral
{
    double value;
    double abs_error;
};
SpectralIntegral spectral_integral(const FrequencyPoint& fp, double rel_tol, double abs_tol,
                                   int max_refinements);

} // namespace detail

} // namespace casimir
