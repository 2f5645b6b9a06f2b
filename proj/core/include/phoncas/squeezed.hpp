#pragma once

#include "phoncas/medium.hpp"

namespace phoncas {

// Squeeze parameter zeta = r e^{i delta}; delta is stored reduced to [0, 2pi).
struct SqueezeParams {
    double r = 0;
    double delta = 0;
    static SqueezeParams make(double r, double delta);
};

// Plane-wave mode along z with omega = c_S k (enforced to relative 1e-12).
struct SqueezedModeSpec {
    double k = 0;      // 1/m
    double omega = 0;  // rad/s
    double volume = 0; // m^3
};

SqueezedModeSpec make_squeezed_mode(const FluidMedium& medium, double k, double volume);
void validate_mode(const FluidMedium& medium, const SqueezedModeSpec& mode);

// Shift of the mean squared density fluctuation in a single-mode squeezed
// vacuum relative to the ground state:
//   (hbar omega rho0 / c_S^2 V) sinh r { sinh r - cosh r cos[2(k z - omega t) + delta] }.
double squeezed_variance(const FluidMedium& medium, const SqueezedModeSpec& mode,
                         const SqueezeParams& params, double z, double t);

// Spatial (or temporal) average of the above: (hbar omega rho0 / c_S^2 V) sinh^2 r.
double squeezed_variance_average(const FluidMedium& medium, const SqueezedModeSpec& mode,
                                 const SqueezeParams& params);

// Envelope at extremal phase: sinh r (sinh r -+ cosh r) times the prefactor.
double squeezed_variance_min(const FluidMedium& medium, const SqueezedModeSpec& mode,
                             const SqueezeParams& params);
double squeezed_variance_max(const FluidMedium& medium, const SqueezedModeSpec& mode,
                             const SqueezeParams& params);

} // namespace phoncas
