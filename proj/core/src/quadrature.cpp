#include "phoncas/quadrature.hpp"

#include <algorithm>
#include <numbers>

namespace phoncas {

AccelResult wynn_epsilon(std::span<const double> s) {
    AccelResult out;
    const std::size_t n = s.size();
    if (n == 0) return out;
    if (n == 1) {
        out.value = s[0];
        out.usable = true;
        return out;
    }

    // eps[j] holds the current diagonal; rebuild column by column.
    std::vector<double> prev(s.begin(), s.end()); // column k
    std::vector<double> prev2(n + 1, 0.0);        // column k-1 (eps_{-1} = 0)
    double best = s.back();
    double best_err = std::numeric_limits<double>::infinity();

    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> cur(n - k);
        for (std::size_t j = 0; j + k < n; ++j) {
            const double diff = prev[j + 1] - prev[j];
            if (diff == 0.0) {
                // Exact convergence of the previous column.
                best = prev[j + 1];
                best_err = 0.0;
                out.value = best;
                out.error = best_err;
                out.usable = true;
                return out;
            }
            cur[j] = prev2[j + 1] + 1.0 / diff;
        }
        if (k % 2 == 0 && !cur.empty()) {
            const double cand = cur.back();
            const double err = std::fabs(cand - best);
            if (err < best_err || k == 2) {
                best_err = err;
                best = cand;
            }
        }
        prev2.assign(prev.begin(), prev.end());
        prev = std::move(cur);
    }
    out.value = best;
    out.error = best_err;
    out.usable = std::isfinite(best);
    return out;
}

ExtrapResult neville_to_zero(std::span<const double> h, std::span<const double> v) {
    if (h.size() != v.size() || h.empty())
        throw NumericalError("neville_to_zero: mismatched or empty input");
    const std::size_t n = h.size();
    std::vector<std::vector<double>> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = {v[i]};
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i + j < n; ++i)
            t[i].push_back(t[i + 1][j - 1] +
                           (t[i + 1][j - 1] - t[i][j - 1]) * h[i + j] / (h[i] - h[i + j]));
    ExtrapResult out;
    out.value = t[0][n - 1];
    out.last_step = n >= 2 ? std::fabs(t[0][n - 1] - t[0][n - 2]) : 0.0;
    return out;
}

QuadResult integrate_power_exp_trig(int p, double decay, double omega, OscKernel kernel,
                                    double rel_tol) {
    if (p < 0) throw NumericalError("integrate_power_exp_trig: p must be >= 0");
    if (!(decay > 0)) throw NumericalError("integrate_power_exp_trig: decay must be > 0");

    QuadResult total;
    total.converged = true;

    const double w = std::fabs(omega);
    if (kernel == OscKernel::sine && w == 0.0) return total; // sin(0) = 0 identically

    // Odd symmetry of the sine kernel in omega.
    const double sign = (kernel == OscKernel::sine && omega < 0) ? -1.0 : 1.0;

    auto integrand = [&](double q) {
        const double trig = kernel == OscKernel::sine ? std::sin(w * q) : std::cos(w * q);
        return std::pow(q, p) * std::exp(-decay * q) * trig;
    };

    // Upper cutoff where the envelope q^p e^{-decay q} is negligible
    // relative to its peak at q = p/decay.
    const double q_peak = std::max(static_cast<double>(p), 1.0) / decay;
    double q_max = q_peak;
    const double log_peak = p * std::log(std::max(q_peak, 1e-300)) - decay * q_peak;
    for (int i = 0; i < 200; ++i) {
        q_max *= 1.5;
        if (p * std::log(q_max) - decay * q_max < log_peak - 45.0) break;
    }

    if (w * q_max < 8.0 * std::numbers::pi) {
        // Damping dominates: few oscillations before cutoff.
        QuadResult r = integrate_adaptive(integrand, 0.0, q_max, rel_tol);
        r.value *= sign;
        return r;
    }

    // Oscillatory regime: half-period panels + epsilon acceleration.
    const double h = std::numbers::pi / w;
    const std::size_t max_panels = 512;
    std::vector<double> partials;
    partials.reserve(max_panels);
    double running = 0.0;
    double quad_err = 0.0;
    long evals = 0;

    AccelResult acc;
    double prev_est = std::numeric_limits<double>::quiet_NaN();
    std::size_t stable = 0;
    for (std::size_t k = 0; k < max_panels; ++k) {
        const double a = static_cast<double>(k) * h;
        const double b = a + h;
        QuadResult panel = integrate_adaptive(integrand, a, b, 1e-3 * rel_tol,
                                              1e-3 * rel_tol * std::fabs(running) + 1e-300, 18);
        running += panel.value;
        quad_err += panel.error;
        evals += panel.evaluations;
        partials.push_back(running);

        if (partials.size() >= 6) {
            acc = wynn_epsilon(partials);
            if (acc.usable && std::isfinite(prev_est)) {
                const double move = std::fabs(acc.value - prev_est);
                if (move <= rel_tol * std::fabs(acc.value) + 1e-300)
                    ++stable;
                else
                    stable = 0;
                if (stable >= 2) {
                    total.value = sign * acc.value;
                    total.error = std::max(acc.error, move) + quad_err;
                    total.evaluations = evals;
                    return total;
                }
            }
            prev_est = acc.usable ? acc.value : prev_est;
        }
        // The envelope may already have decayed to nothing.
        if (b > q_max && std::fabs(panel.value) <= 1e-3 * rel_tol * std::fabs(running)) {
            total.value = sign * running;
            total.error = quad_err + std::fabs(panel.value);
            total.evaluations = evals;
            return total;
        }
    }

    // Did not stabilize within the panel budget.
    total.value = sign * (acc.usable ? acc.value : running);
    total.error = (acc.usable ? acc.error : std::fabs(running)) + quad_err;
    total.evaluations = evals;
    total.converged = false;
    return total;
}

} // namespace phoncas
