#pragma once

#include "phoncas/medium.hpp"

namespace phoncas {

// Inputs for the zero-point Brillouin cross section.
struct ScatteringQuery {
    FluidMedium medium;
    double omega = 0;       // incident light angular frequency, rad/s
    double theta = 0;       // scattering angle, rad, in [0, pi]
    double pol_dot = 1.0;   // polarization product e_k . e_k', in [-1, 1]
    double scat_volume = 0; // scattering volume, m^3
};

// How a quoted wavelength is converted to an angular frequency.
enum class OmegaConvention { vacuum, in_medium };

// vacuum:    omega = 2 pi c / lambda
// in_medium: omega = 2 pi c eta / lambda (lambda read as the in-medium
//            wavelength of the same line, i.e. the vacuum value times eta).
double omega_from_wavelength(double lambda_m, const FluidMedium& medium,
                             OmegaConvention convention);

// Differential cross section for light scattering off ground-state density
// fluctuations, m^2/sr:
//   sqrt(2(1-cos theta)) * hbar omega^5 V eta^4 / (32 pi^2 c^5 c_S rho0) * pol_dot^2.
// Valid when the light frequency is far above the typical phonon frequency;
// that regime condition is the caller's responsibility.
double cross_section_zp(const ScatteringQuery& q);

// Ratio of zero-point to thermal Brillouin scattering,
//   sqrt(2(1-cos theta)) * (hbar omega / 2 k_B T) * (c_S/c) * eta^4 / depsilon^2.
// Throws NumericalError at zero temperature (no thermal reference).
double ratio_zp_thermal(const FluidMedium& medium, double omega, double theta);

} // namespace phoncas
