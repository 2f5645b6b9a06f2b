#pragma once

#include <array>

#include "phoncas/medium.hpp"

namespace phoncas {

// Spacetime interval between two events in the fluid.
struct Separation {
    std::array<double, 3> dx{0, 0, 0}; // m
    double dt = 0;                     // s

    static Separation between(const std::array<double, 3>& x1, double t1,
                              const std::array<double, 3>& x2, double t2);
    double distance() const;
};

enum class Causality { spacelike, soundlike, timelike };

// Classification relative to the sound cone, with a relative 1e-12 guard
// band around |dx| = c_S |dt| treated as soundlike.
Causality classify(const FluidMedium& medium, const Separation& sep);

// One plane-wave phonon mode in a quantization volume.
struct ModeSpec {
    std::array<double, 3> q{0, 0, 0}; // wave vector, 1/m
    double volume = 0;                // quantization volume, m^3
    double q_mag() const;
};

enum class CorrelationMethod { closed_form, mode_integral };

struct CorrelationValue {
    double value = 0;     // kg^2 m^-6
    CorrelationMethod method = CorrelationMethod::closed_form;
    double abs_error = 0; // kg^2 m^-6; 0 for the closed form
};

// Linear dispersion Omega(q) = c_S q.
double dispersion(const FluidMedium& medium, double q_mag);

// Magnitude of the mode amplitude, sqrt(hbar Omega rho0 / (2 V c_S^2)).
double mode_norm(const FluidMedium& medium, const ModeSpec& spec);

// Equal-point-limit-free density correlator in closed form:
//   -(hbar rho0 / 2 pi^2 c_S) (dx^2 + 3 c_S^2 dt^2) / (dx^2 - c_S^2 dt^2)^3.
// Negative for spacelike separations, positive for timelike ones; refuses
// soundlike separations (SoundConeError).
CorrelationValue corr_closed(const FluidMedium& medium, const Separation& sep);

struct ModeIntegralOptions {
    double rel_tol = 1e-9; // per-rung quadrature tolerance
    int rungs = 3;         // epsilon ladder depth (geometric, factor 2)
};

// Independent route to the same correlator: the regulated mode integral
//   (hbar rho0 / 16 pi^3 c_S^2) Int d^3q Omega_q e^{i(q.dx - Omega dt)} e^{-eps Omega},
// reduced to 1-D oscillatory integrals after the angular integration and
// Richardson-extrapolated along a decreasing epsilon ladder. abs_error
// combines quadrature estimates with the extrapolation residual.
CorrelationValue corr_mode_integral(const FluidMedium& medium, const Separation& sep,
                                    double epsilon, const ModeIntegralOptions& opts = {});

// A reasonable coarsest regulator for the ladder, set by the distance of
// the separation from the sound cone.
double suggest_epsilon(const FluidMedium& medium, const Separation& sep);

// The massless-scalar dictionary: given a value of <phi_dot phi_dot>
// evaluated with the light speed replaced by c_S, the density correlator
// is that value divided by rho0.
CorrelationValue scalar_analogy(double phi_dot_corr, const FluidMedium& medium);

} // namespace phoncas
