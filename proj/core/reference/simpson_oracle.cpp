#include "casimir/reference/simpson_oracle.hpp"

#include "casimir/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace casimir::reference
{

namespace
{

using real = long double;

// {[((K + eps p)/(K - eps p))^2 e^{y} - 1]^-1 + [((K + p)/(K - p))^2 e^{y} - 1]^-1}
// with y = 2 d xi p / c, exactly as written.
real brackets(real eps, real p, real y, bool ideal)
{
    const real growth = std::exp(y);
    if (ideal) {
        return 2.0L / (growth - 1.0L);
    }
    const real K = std::sqrt(p * p - 1.0L + eps);
    const real tm = (K + eps * p) / (K - eps * p);
    const real te = (K + p) / (K - p);
    return 1.0L / (tm * tm * growth - 1.0L) + 1.0L / (te * te * growth - 1.0L);
}

template <class F>
real simpson(F&& f, real a, real b, std::size_t n)
{
    const real h = (b - a) / static_cast<real>(n);
    real sum = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) {
        sum += f(a + h * static_cast<real>(i)) * (i % 2 == 1 ? 4.0L : 2.0L);
    }
    return sum * h / 3.0L;
}

struct Integral
{
    real value;
    real error;
};

template <class F>
Integral simpson_with_estimate(F&& f, real a, real b, std::size_t n)
{
    const real fine = simpson(f, a, b, n);
    const real coarse = simpson(f, a, b, n / 2);
    return {fine, std::abs(fine - coarse) / 15.0L};
}

} // namespace

SimpsonResult simpson_force_finite_temperature(const PlateSystem& sys, Temperature T,
                                               const SimpsonOptions& options)
{
    if (T.is_zero()) {
        throw InvalidInput("Simpson oracle needs T > 0");
    }
    if (options.intervals < 4 || options.intervals % 4 != 0) {
        throw InvalidInput("Simpson oracle needs a multiple of 4 intervals");
    }
    const auto& model = sys.model();
    const bool ideal = model.is_ideal();
    const real d = sys.separation();
    const real c = constants::c;
    const real xi_1 = 2.0L * std::numbers::pi_v<real> * constants::k_B * T.kelvin()
                      / constants::hbar;

    auto eps_of = [&](real xi) -> real {
        return ideal ? std::numeric_limits<real>::infinity()
                     : static_cast<real>(epsilon_at(model, static_cast<double>(xi)));
    };

    real sum = 0.0L;
    real err = 0.0L;

    // l = 0: xi^3 int_1^inf p^2 {..} dp evaluated at a tiny xi in y = 2 d xi p / c,
    // where it equals (c / 2d)^3 int y^2 {..} dy.
    {
        const real xi = 1e-6L * xi_1;
        const real y_min = 2.0L * d * xi / c;
        const real eps = eps_of(xi);
        auto f = [&](real y) {
            return y * y * brackets(eps, y / y_min, y, ideal);
        };
        // The integrand vanishes like y at the origin; start at y_min.
        const auto part = simpson_with_estimate(f, y_min, y_min + 40.0L, options.intervals);
        const real scale = std::pow(c / (2.0L * d), 3);
        sum += 0.5L * scale * part.value;
        err += 0.5L * scale * part.error;
    }

    for (std::size_t l = 1; l <= options.max_l; ++l) {
        const real xi = xi_1 * static_cast<real>(l);
        const real y_min = 2.0L * d * xi / c;
        const real eps = eps_of(xi);
        const real p_max = 1.0L + static_cast<real>(options.decay_span) / y_min;
        auto f = [&](real p) { return p * p * brackets(eps, p, y_min * p, ideal); };
        const auto part = simpson_with_estimate(f, 1.0L, p_max, options.intervals);
        const real xi3 = xi * xi * xi;
        sum += xi3 * part.value;
        err += xi3 * part.error;
    }

    const real prefactor =
        -static_cast<real>(constants::k_B) * T.kelvin() * sys.area() / (std::numbers::pi_v<real> * c * c * c);
    return {static_cast<double>(prefactor * sum), static_cast<double>(std::abs(prefactor) * err)};
}

} // namespace casimir::reference
