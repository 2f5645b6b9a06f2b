#include "phoncas/freefield.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "phoncas/quadrature.hpp"

namespace phoncas {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kConeBand = 1e-12;

void check_finite(const Separation& sep) {
    for (double c : sep.dx)
        if (!std::isfinite(c)) throw ConfigError("separation has non-finite dx component");
    if (!std::isfinite(sep.dt)) throw ConfigError("separation has non-finite dt");
}
} // namespace

Separation Separation::between(const std::array<double, 3>& x1, double t1,
                               const std::array<double, 3>& x2, double t2) {
    return Separation{{x1[0] - x2[0], x1[1] - x2[1], x1[2] - x2[2]}, t1 - t2};
}

double Separation::distance() const {
    return std::sqrt(dx[0] * dx[0] + dx[1] * dx[1] + dx[2] * dx[2]);
}

double ModeSpec::q_mag() const {
    return std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
}

Causality classify(const FluidMedium& medium, const Separation& sep) {
    check_finite(sep);
    const double r = sep.distance();
    const double ct = medium.c_sound * std::fabs(sep.dt);
    const double scale = std::max(r, ct);
    if (scale == 0.0) return Causality::soundlike; // coincident events sit on the cone
    if (std::fabs(r - ct) <= kConeBand * scale) return Causality::soundlike;
    return r > ct ? Causality::spacelike : Causality::timelike;
}

double dispersion(const FluidMedium& medium, double q_mag) {
    if (!(q_mag >= 0)) throw ConfigError("dispersion: q_mag must be >= 0");
    return medium.c_sound * q_mag;
}

double mode_norm(const FluidMedium& medium, const ModeSpec& spec) {
    if (!(spec.volume > 0)) throw ConfigError("mode_norm: volume must be > 0");
    const double omega = dispersion(medium, spec.q_mag());
    return std::sqrt(codata2018.hbar * omega * medium.rho0 /
                     (2.0 * spec.volume * medium.c_sound * medium.c_sound));
}

CorrelationValue corr_closed(const FluidMedium& medium, const Separation& sep) {
    if (classify(medium, sep) == Causality::soundlike)
        throw SoundConeError("corr_closed: separation is on the sound cone (singular)");
    const double r = sep.distance();
    const double cs = medium.c_sound;
    const double dx2 = r * r;
    const double ct2 = cs * cs * sep.dt * sep.dt;
    const double num = dx2 + 3.0 * ct2;
    const double den = dx2 - ct2;
    const double value = -(codata2018.hbar * medium.rho0 / (2.0 * kPi * kPi * cs)) * num /
                         (den * den * den);
    return CorrelationValue{value, CorrelationMethod::closed_form, 0.0};
}

namespace {

// One rung of the regulated mode integral. After the angular integration,
//   <rho rho>_eps = hbar rho0 / (4 pi^2 c_S r) * J,    r > 0,
//   J = Int_0^inf q^2 sin(q r) cos(c_S dt q) e^{-eps c_S q} dq
//     = 1/2 [ I(r + c_S dt) + I(r - c_S dt) ],  I(w) = Int q^2 sin(w q) e^{-d q} dq,
// and for r = 0
//   <rho rho>_eps = hbar rho0 / (4 pi^2 c_S) * Int_0^inf q^3 cos(c_S dt q) e^{-d q} dq.
QuadResult regulated_rung(const FluidMedium& medium, const Separation& sep, double eps,
                          double rel_tol) {
    const double cs = medium.c_sound;
    const double r = sep.distance();
    const double decay = eps * cs;
    const double pref0 = codata2018.hbar * medium.rho0 / (4.0 * kPi * kPi * cs);

    QuadResult out;
    if (r == 0.0) {
        QuadResult i = integrate_power_exp_trig(3, decay, cs * sep.dt, OscKernel::cosine,
                                                rel_tol);
        out.value = pref0 * i.value;
        out.error = pref0 * i.error;
        out.evaluations = i.evaluations;
        out.converged = i.converged;
        return out;
    }
    const double w1 = r + cs * sep.dt;
    const double w2 = r - cs * sep.dt;
    QuadResult i1 = integrate_power_exp_trig(2, decay, w1, OscKernel::sine, rel_tol);
    QuadResult i2 = integrate_power_exp_trig(2, decay, w2, OscKernel::sine, rel_tol);
    const double pref = pref0 / r;
    out.value = pref * 0.5 * (i1.value + i2.value);
    out.error = pref * 0.5 * (i1.error + i2.error);
    out.evaluations = i1.evaluations + i2.evaluations;
    out.converged = i1.converged && i2.converged;
    return out;
}

} // namespace

double suggest_epsilon(const FluidMedium& medium, const Separation& sep) {
    const double cs = medium.c_sound;
    const double r = sep.distance();
    const double ct = cs * std::fabs(sep.dt);
    // Distance of the separation from the sound cone sets how small the
    // regulator must be before the epsilon^2 expansion is clean.
    double scale = std::fabs(r - ct);
    if (r + ct > 0) scale = std::min(scale > 0 ? scale : r + ct, r + ct);
    return 0.05 * scale / cs;
}

CorrelationValue corr_mode_integral(const FluidMedium& medium, const Separation& sep,
                                    double epsilon, const ModeIntegralOptions& opts) {
    if (!(epsilon > 0)) throw ConfigError("corr_mode_integral: epsilon must be > 0");
    if (classify(medium, sep) == Causality::soundlike)
        throw SoundConeError("corr_mode_integral: separation is on the sound cone");
    const int rungs = std::max(opts.rungs, 3);

    // The regulated value is even in epsilon, so the ladder eps, eps/2,
    // eps/4, ... admits Richardson extrapolation in eps^2.
    std::vector<double> v(rungs), quad_err(rungs);
    double eps = epsilon;
    bool all_converged = true;
    for (int i = 0; i < rungs; ++i, eps *= 0.5) {
        QuadResult r = regulated_rung(medium, sep, eps, opts.rel_tol);
        v[i] = r.value;
        quad_err[i] = r.error;
        all_converged = all_converged && r.converged;
    }

    std::vector<double> row = v;
    double prev_best = v.back();
    double resid = std::numeric_limits<double>::infinity();
    for (int level = 1; level < rungs; ++level) {
        const double factor = std::pow(4.0, level); // eps^2 ladder, halved eps
        std::vector<double> next(row.size() - 1);
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            next[i] = (factor * row[i + 1] - row[i]) / (factor - 1.0);
        resid = std::fabs(next.back() - prev_best);
        prev_best = next.back();
        row = std::move(next);
    }

    double qerr = 0;
    for (double e : quad_err) qerr = std::max(qerr, e);
    const double abs_error = resid + 3.0 * qerr;
    if (!all_converged)
        throw ToleranceError("corr_mode_integral: quadrature failed to meet tolerance",
                             prev_best, abs_error);
    return CorrelationValue{prev_best, CorrelationMethod::mode_integral, abs_error};
}

CorrelationValue scalar_analogy(double phi_dot_corr, const FluidMedium& medium) {
    return CorrelationValue{phi_dot_corr / medium.rho0, CorrelationMethod::closed_form, 0.0};
}

} // namespace phoncas
