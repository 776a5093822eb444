#include "casimir/lifshitz.hpp"

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <vector>

namespace casimir
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();

// r^2 e^-y / (1 - r^2 e^-y), written so that neither a large exponential nor
// the cancellation in 1 - r^2 e^-y (r -> 1, y -> 0) appears.
double inverse_bracket(double r, double one_minus_r, double y)
{
    if (r == 0.0) {
        return 0.0;
    }
    const double decay = std::exp(-y);
    const double denom = -std::expm1(-y) + one_minus_r * (1.0 + r) * decay;
    return r * r * decay / denom;
}

// Bound on int_Y^inf y^2 e^-y / (1 - e^-Y) dy, per unit squared reflection.
double exponential_tail(double Y)
{
    return std::exp(-Y) * (Y * Y + 2.0 * Y + 2.0) / -std::expm1(-Y);
}

// Bound on int_U^inf exponential_tail(u) du, with both polarizations at r = 1.
double outer_tail(double U)
{
    return 2.0 * std::exp(-U) * (U * U + 4.0 * U + 6.0) / -std::expm1(-U);
}

void check_convergence(const quadrature::Estimate& e, double scale, const char* what)
{
    if (!e.converged) {
        throw ConvergenceFailure(
            fmt::format("{} did not converge; error estimate {:.3g} N", what,
                        e.abs_error * std::abs(scale)),
            e.abs_error * std::abs(scale));
    }
}

} // namespace

PlateSystem::PlateSystem(double separation, double area, DielectricModel model)
    : separation_(separation), area_(area), model_(std::move(model))
{
    if (!(separation > 0.0) || !std::isfinite(separation)) {
        throw InvalidInput("plate separation must be > 0");
    }
    if (!(area > 0.0) || !std::isfinite(area)) {
        throw InvalidInput("plate area must be > 0");
    }
}

PlateSystem::PlateSystem(double separation, double area, DielectricModel model_1,
                         DielectricModel model_2)
    : PlateSystem(separation, area, std::move(model_1))
{
    if (!(model_ == model_2)) {
        throw InvalidInput("plates must share one dielectric model");
    }
}

void QuadratureConfig::validate() const
{
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw InvalidInput("rel_tol must lie in (0, 1)");
    }
    if (!(abs_tol >= 0.0)) {
        throw InvalidInput("abs_tol must be >= 0");
    }
    if (max_refinements < 1) {
        throw InvalidInput("max_refinements must be >= 1");
    }
}

void MatsubaraConfig::validate() const
{
    if (!(term_rel_tol > 0.0)) {
        throw InvalidInput("term_rel_tol must be > 0");
    }
    if (consecutive_small < 2) {
        throw InvalidInput("consecutive_small must be >= 2");
    }
    if (hard_cap < 1) {
        throw InvalidInput("hard_cap must be >= 1");
    }
}

double k_function(double /*xi*/, double p, double eps)
{
    if (!(p >= 1.0) || !(eps >= 1.0)) {
        throw InvalidInput("k_function requires p >= 1 and eps >= 1");
    }
    return std::sqrt(p * p - 1.0 + eps);
}

namespace detail
{

ReflectionPair reflection(const FrequencyPoint& fp, double y)
{
    ReflectionPair r{1.0, 0.0, 1.0, 0.0};
    const bool tm_ideal = std::isinf(fp.eps_minus_one);
    if (fp.te_ideal && tm_ideal) {
        return r;
    }
    const double s = std::sqrt(y * y + fp.q_squared); // K * y_min
    if (!fp.te_ideal) {
        const double sum = s + y;
        r.r_te = fp.q_squared / (sum * sum);
        r.one_minus_r_te = 2.0 * y / sum;
    }
    if (!tm_ideal) {
        const double eps = 1.0 + fp.eps_minus_one;
        const double num = fp.eps_minus_one * y - fp.q_squared / (s + y); // eps y - s
        const double den = eps * y + s;
        r.r_tm = num / den;
        r.one_minus_r_tm = 2.0 * s / den;
    }
    return r;
}

double spectral_integrand(const FrequencyPoint& fp, double y)
{
    if (!(y > 0.0)) {
        return 0.0;
    }
    const auto r = reflection(fp, y);
    return y * y
           * (inverse_bracket(r.r_tm, r.one_minus_r_tm, y)
              + inverse_bracket(r.r_te, r.one_minus_r_te, y));
}

FrequencyPoint frequency_point(const DielectricModel& model, double xi, double d,
                               bool* extrapolated)
{
    const double y_min = 2.0 * d * xi / constants::c;
    struct Visitor
    {
        double xi;
        double y_min;
        double d;
        bool* extrapolated;

        FrequencyPoint operator()(const IdealConductor&) const { return {y_min, inf, 0.0, true}; }
        FrequencyPoint operator()(const Plasma& p) const
        {
            const double q = 2.0 * d * p.omega_p / constants::c;
            if (xi == 0.0) {
                return {0.0, inf, q * q, false};
            }
            const double ratio = p.omega_p / xi;
            return {y_min, ratio * ratio, q * q, false};
        }
        FrequencyPoint operator()(const Tabulated& t) const
        {
            const double clamped = std::clamp(xi, t.lower(), t.upper());
            if (clamped != xi && extrapolated != nullptr) {
                *extrapolated = true;
            }
            const double em1 = t.interpolate(clamped) - 1.0;
            return {y_min, em1, em1 * y_min * y_min, false};
        }
    };
    return std::visit(Visitor{xi, y_min, d, extrapolated}, model.variant());
}

SpectralIntegral spectral_integral(const FrequencyPoint& fp, double rel_tol, double abs_tol,
                                   int max_refinements)
{
    if (fp.eps_minus_one == 0.0 && !fp.te_ideal) {
        return {0.0, 0.0}; // vacuum: both reflection ratios vanish
    }
    const double tm_sup = std::isinf(fp.eps_minus_one)
                              ? 1.0
                              : fp.eps_minus_one / (fp.eps_minus_one + 2.0);
    auto tail = [&](double Y) {
        double te_sup = 1.0;
        if (!fp.te_ideal) {
            te_sup = reflection(fp, Y).r_te; // decreasing in y
        }
        return (tm_sup * tm_sup + te_sup * te_sup) * exponential_tail(Y);
    };
    auto f = [&](double y) { return spectral_integrand(fp, y); };
    const auto est =
        quadrature::integrate_to_infinity(f, fp.y_min, tail, rel_tol, abs_tol, max_refinements);
    if (!est.converged) {
        throw ConvergenceFailure(
            fmt::format("momentum integral at y_min = {:.6g} did not converge (error {:.3g})",
                        fp.y_min, est.abs_error),
            est.abs_error);
    }
    return {est.value, est.abs_error};
}

} // namespace detail

ModeTerms mode_term(double xi, double p, double d, double eps)
{
    if (std::isinf(eps)) {
        throw NonFiniteValue("mode_term: infinite permittivity; use mode_term_ideal");
    }
    if (!(p >= 1.0) || !(eps >= 1.0) || !(xi > 0.0) || !(d > 0.0)) {
        throw InvalidInput("mode_term requires p >= 1, eps >= 1, xi > 0, d > 0");
    }
    const double y_min = 2.0 * d * xi / constants::c;
    const double em1 = eps - 1.0;
    const detail::FrequencyPoint fp{y_min, em1, em1 * y_min * y_min, false};
    const double y = y_min * p;
    const auto r = detail::reflection(fp, y);
    return {inverse_bracket(r.r_tm, r.one_minus_r_tm, y),
            inverse_bracket(r.r_te, r.one_minus_r_te, y)};
}

ModeTerms mode_term_ideal(double xi, double p, double d)
{
    const double y = 2.0 * d * xi * p / constants::c;
    const double t = 1.0 / std::expm1(y);
    return {t, t};
}

ForceResult casimir_force_finite_temperature(const PlateSystem& sys, const MatsubaraConfig& mcfg,
                                             const QuadratureConfig& qcfg)
{
    mcfg.validate();
    qcfg.validate();
    const Temperature T = mcfg.field_temperature;
    if (T.is_zero()) {
        throw InvalidInput("finite-temperature force requires T > 0");
    }
    const double d = sys.separation();
    const double prefactor =
        -constants::k_B * T.kelvin() * sys.area() / (8.0 * std::numbers::pi * d * d * d);
    const double term_abs_tol = qcfg.abs_tol / std::abs(prefactor) / 64.0;

    bool extrapolated = false;
    auto evaluate = [&](std::size_t l, bool* flag) {
        const auto fp = detail::frequency_point(sys.model(), matsubara_frequency(l, T), d, flag);
        try {
            return detail::spectral_integral(fp, qcfg.rel_tol, term_abs_tol, qcfg.max_refinements);
        } catch (const ConvergenceFailure& e) {
            throw ConvergenceFailure(fmt::format("Matsubara term l = {}: {}", l, e.what()),
                                     e.error_estimate() * std::abs(prefactor));
        }
    };

    const std::size_t workers = std::max(1u, mcfg.workers);
    const std::size_t block = std::max<std::size_t>(16, 4 * workers);
    std::vector<detail::SpectralIntegral> values(block);
    std::vector<char> flags(block);

    double total = 0.0;
    double error = 0.0;
    int small_run = 0;
    double last_ratio = inf;
    std::size_t next = 0;
    while (next < mcfg.hard_cap) {
        const std::size_t count = std::min(block, mcfg.hard_cap - next);
        std::fill(flags.begin(), flags.end(), 0);
        if (workers == 1) {
            for (std::size_t i = 0; i < count; ++i) {
                bool f = false;
                values[i] = evaluate(next + i, &f);
                flags[i] = f;
            }
        } else {
            std::vector<std::future<void>> jobs;
            for (std::size_t w = 0; w < workers; ++w) {
                jobs.push_back(std::async(std::launch::async, [&, w] {
                    for (std::size_t i = w; i < count; i += workers) {
                        bool f = false;
                        values[i] = evaluate(next + i, &f);
                        flags[i] = f;
                    }
                }));
            }
            for (auto& j : jobs) {
                j.get();
            }
        }

        // Fixed-order reduction; the stopping point depends only on term values.
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t l = next + i;
            const double weight = l == 0 ? 0.5 : 1.0;
            const double term = weight * values[i].value;
            total += term;
            error += weight * values[i].abs_error;
            extrapolated = extrapolated || flags[i] != 0;
            last_ratio = total != 0.0 ? std::abs(term / total) : 0.0;
            small_run = std::abs(term) <= mcfg.term_rel_tol * std::abs(total) ? small_run + 1 : 0;
            if (small_run >= mcfg.consecutive_small) {
                // Remaining terms fall off at least geometrically with ratio e^-y_1.
                const double step = 2.0 * d * matsubara_frequency(1, T) / constants::c;
                error += std::abs(term) * std::exp(-step) / -std::expm1(-step);
                return {prefactor * total, std::abs(prefactor) * error, l + 1, extrapolated};
            }
        }
        next += count;
    }
    throw TruncationFailure(fmt::format("Matsubara sum did not terminate within {} terms "
                                        "(last term / total = {:.3g})",
                                        mcfg.hard_cap, last_ratio),
                            mcfg.hard_cap, last_ratio);
}

ForceResult casimir_force_zero_temperature(const PlateSystem& sys, const QuadratureConfig& qcfg)
{
    qcfg.validate();
    const double d = sys.separation();
    const double prefactor = -constants::hbar * constants::c * sys.area()
                             / (32.0 * std::numbers::pi * std::numbers::pi * d * d * d * d);
    const double inner_rel = std::max(0.1 * qcfg.rel_tol, 5e-14);
    const double outer_abs = qcfg.abs_tol / std::abs(prefactor);

    bool extrapolated = false;
    double inner_error = 0.0;
    auto g = [&](double u) {
        const double xi = u * constants::c / (2.0 * d);
        const auto fp = detail::frequency_point(sys.model(), xi, d, &extrapolated);
        const auto r = detail::spectral_integral(fp, inner_rel, 0.0, qcfg.max_refinements);
        inner_error = std::max(inner_error, r.abs_error / std::max(std::abs(r.value), 1e-300));
        return r.value;
    };
    const auto est = quadrature::integrate_to_infinity(g, 0.0, outer_tail, qcfg.rel_tol,
                                                       outer_abs, qcfg.max_refinements);
    check_convergence(est, prefactor, "frequency integral");
    const double error = est.abs_error + inner_error * std::abs(est.value);
    return {prefactor * est.value, std::abs(prefactor) * error, 0, extrapolated};
}

} // namespace casimir
