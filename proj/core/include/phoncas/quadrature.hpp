#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "phoncas/errors.hpp"

namespace phoncas {

struct QuadResult {
    double value = 0;
    double error = 0; // absolute error estimate
    long evaluations = 0;
    bool converged = false;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double kK15Nodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};

inline constexpr double kK15Weights[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};

inline constexpr double kG7Weights[15] = {
    0.0, 0.129484966168870, 0.0, 0.279705391489277, 0.0, 0.381830050505119, 0.0,
    0.417959183673469,
    0.0, 0.381830050505119, 0.0, 0.279705391489277, 0.0, 0.129484966168870, 0.0};

template <class F>
void gk15_panel(F&& f, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double k15 = 0, g7 = 0, rough = 0;
    for (int i = 0; i < 15; ++i) {
        const double y = f(mid + half * kK15Nodes[i]);
        k15 += kK15Weights[i] * y;
        g7 += kG7Weights[i] * y;
        rough += kK15Weights[i] * std::fabs(y);
    }
    value = k15 * half;
    // Standard QUADPACK-style rescaled error estimate.
    const double scale = rough * std::fabs(half);
    double err = std::fabs((k15 - g7) * half);
    if (scale > 0 && err > 0) {
        const double r = std::pow(200.0 * err / scale, 1.5);
        if (r < 1.0) err = scale * r;
    }
    error = err;
}

template <class F>
void adapt_recurse(F&& f, double a, double b, double tol, int depth, int max_depth,
                   QuadResult& acc) {
    double v, e;
    gk15_panel(f, a, b, v, e);
    acc.evaluations += 15;
    if (e <= tol || depth >= max_depth) {
        acc.value += v;
        acc.error += e;
        if (e > tol) acc.converged = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt_recurse(f, a, mid, 0.5 * tol, depth + 1, max_depth, acc);
    adapt_recurse(f, mid, b, 0.5 * tol, depth + 1, max_depth, acc);
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. Deterministic:
// panels are visited depth-first in interval order.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                              double abs_tol = 0.0, int max_depth = 40) {
    QuadResult probe;
    probe.converged = true;
    double v0, e0;
    detail::gk15_panel(f, a, b, v0, e0);
    probe.evaluations = 15;
    const double tol = std::max(abs_tol, rel_tol * std::fabs(v0));
    if (e0 <= tol) {
        probe.value = v0;
        probe.error = e0;
        return probe;
    }
    QuadResult acc;
    acc.converged = true;
    acc.evaluations = probe.evaluations;
    const double mid = 0.5 * (a + b);
    detail::adapt_recurse(f, a, mid, 0.5 * std::max(tol, abs_tol), 1, max_depth, acc);
    detail::adapt_recurse(f, mid, b, 0.5 * std::max(tol, abs_tol), 1, max_depth, acc);
    // Re-derive convergence against the final value.
    const double final_tol = std::max(abs_tol, rel_tol * std::fabs(acc.value));
    acc.converged = acc.error <= std::max(final_tol, 1e-300);
    return acc;
}

// Wynn's epsilon algorithm on a sequence of partial sums. Returns the best
// even-column extrapolant and a crude error estimate from the last move.
struct AccelResult {
    double value = 0;
    double error = std::numeric_limits<double>::infinity();
    bool usable = false;
};

AccelResult wynn_epsilon(std::span<const double> partial_sums);

// Polynomial extrapolation of v(h) to h = 0 (Neville scheme). h must be
// strictly decreasing. Returns the limit and the size of the last correction.
struct ExtrapResult {
    double value = 0;
    double last_step = 0;
};
ExtrapResult neville_to_zero(std::span<const double> h, std::span<const double> v);

// Trig kernel selector for the semi-infinite oscillatory integrals.
enum class OscKernel { sine, cosine };

// Integrates  int_0^inf q^p * exp(-decay*q) * trig(omega*q) dq  for p >= 0,
// decay > 0. For strongly damped integrands this is plain adaptive
// quadrature on a truncated interval; in the oscillatory regime the
// integral is summed in half-period panels accelerated with Wynn's epsilon
// algorithm (the panels alternate in sign, so the acceleration converges
// long before the exponential envelope does).
QuadResult integrate_power_exp_trig(int p, double decay, double omega, OscKernel kernel,
                                    double rel_tol = 1e-10);

} // namespace phoncas
