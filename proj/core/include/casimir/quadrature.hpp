#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace casimir::quadrature
{

struct Estimate
{
    double value = 0.0;
    double abs_error = 0.0;
    int subintervals = 0;
    bool converged = false;
};

namespace detail
{

// 15-point Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval
{
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Interval& other) const { return error < other.error; }
};

/// One G7K15 panel with the QUADPACK qk15 error heuristic.
template <class F>
Interval gauss_kronrod_15(F& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 7> lo{};
    std::array<double, 7> hi{};
    const double fc = f(center);
    double kronrod = fc * kronrod_weights[7];
    double gauss = fc * gauss_weights[3];
    double abs_sum = std::abs(kronrod);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        lo[j] = f(center - dx);
        hi[j] = f(center + dx);
        const double pair = lo[j] + hi[j];
        kronrod += kronrod_weights[j] * pair;
        abs_sum += kronrod_weights[j] * (std::abs(lo[j]) + std::abs(hi[j]));
        if (j % 2 == 1) {
            gauss += gauss_weights[j / 2] * pair;
        }
    }

    const double mean = 0.5 * kronrod;
    double asc = kronrod_weights[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        asc += kronrod_weights[j] * (std::abs(lo[j] - mean) + std::abs(hi[j] - mean));
    }

    const double result = kronrod * half;
    const double res_abs = abs_sum * std::abs(half);
    const double res_asc = asc * std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    if (res_asc != 0.0 && err != 0.0) {
        err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();
    if (res_abs > tiny / (50.0 * eps)) {
        err = std::max(50.0 * eps * res_abs, err);
    }
    return {a, b, result, err};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b]. Stops once
/// the summed error estimate is below max(abs_tol, rel_tol * |I|) or after
/// max_subintervals bisections, in which case converged is false.
template <class F>
Estimate integrate(F&& f, double a, double b, double rel_tol, double abs_tol,
                   int max_subintervals)
{
    std::priority_queue<detail::Interval> queue;
    queue.push(detail::gauss_kronrod_15(f, a, b));
    double total = queue.top().value;
    double error = queue.top().error;
    int count = 1;

    auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };

    while (error > target() && count < max_subintervals) {
        const detail::Interval worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            break; // interval at floating-point resolution
        }
        queue.pop();
        const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++count;
    }

    // Re-sum in left-to-right order so the result does not carry the
    // running-update rounding.
    std::vector<detail::Interval> parts;
    parts.reserve(queue.size());
    while (!queue.empty()) {
        parts.push_back(queue.top());
        queue.pop();
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& x, const auto& y) { return x.a < y.a; });
    Estimate out;
    for (const auto& p : parts) {
        out.value += p.value;
        out.abs_error += p.error;
    }
    out.subintervals = count;
    out.converged = out.abs_error <= std::max(abs_tol, rel_tol * std::abs(out.value));
    return out;
}

struct TailOptions
{
    double panel_width = 8.0;
    int max_panels = 200;
};

/// Integrates f over [a, inf) panel by panel. tail(Y) must bound
/// |integral of f over [Y, inf)|; integration stops once that bound falls
/// below a quarter of the tolerance target. The bound is folded into
/// abs_error.
template <class F, class Tail>
Estimate integrate_to_infinity(F&& f, double a, Tail&& tail, double rel_tol, double abs_tol,
                               int max_subintervals, TailOptions options = {})
{
    Estimate out;
    out.converged = true;
    double left = a;
    for (int panel = 0; panel < options.max_panels; ++panel) {
        const double right = left + options.panel_width;
        const double panel_abs = 0.25 * std::max(abs_tol, rel_tol * std::abs(out.value));
        const auto part = integrate(f, left, right, 0.5 * rel_tol, panel_abs, max_subintervals);
        out.value += part.value;
        out.abs_error += part.abs_error;
        out.subintervals += part.subintervals;
        out.converged = out.converged && part.converged;
        left = right;

        const double remainder = tail(left);
        if (remainder <= 0.25 * std::max(abs_tol, rel_tol * std::abs(out.value))) {
            out.abs_error += remainder;
            return out;
        }
    }
    out.abs_error += tail(left);
    out.converged = false;
    return out;
}

} // namespace casimir::quadrature
