#include "phoncas/scattering.hpp"

#include <cmath>
#include <numbers>

namespace phoncas {

namespace {
constexpr double kPi = std::numbers::pi;

double angular_factor(double theta) {
    if (!(theta >= 0.0 && theta <= kPi))
        throw ConfigError("scattering: theta must lie in [0, pi]");
    return std::sqrt(2.0 * (1.0 - std::cos(theta)));
}
} // namespace

double omega_from_wavelength(double lambda_m, const FluidMedium& medium,
                             OmegaConvention convention) {
    if (!(lambda_m > 0)) throw ConfigError("scattering: wavelength must be > 0");
    const double omega_vac = 2.0 * kPi * codata2018.c_light / lambda_m;
    return convention == OmegaConvention::vacuum ? omega_vac : omega_vac * medium.eta;
}

double cross_section_zp(const ScatteringQuery& q) {
    if (!(q.omega > 0)) throw ConfigError("scattering: omega must be > 0");
    if (!(q.pol_dot >= -1.0 && q.pol_dot <= 1.0))
        throw ConfigError("scattering: pol_dot must lie in [-1, 1]");
    if (!(q.scat_volume > 0)) throw ConfigError("scattering: scat_volume must be > 0");
    const double c = codata2018.c_light;
    const double w = q.omega;
    const double w5 = w * w * w * w * w;
    const double eta4 = std::pow(q.medium.eta, 4);
    const double c5 = c * c * c * c * c;
    return angular_factor(q.theta) * codata2018.hbar * w5 * q.scat_volume * eta4 /
           (32.0 * kPi * kPi * c5 * q.medium.c_sound * q.medium.rho0) * q.pol_dot *
           q.pol_dot;
}

double ratio_zp_thermal(const FluidMedium& medium, double omega, double theta) {
    if (!(omega > 0)) throw ConfigError("scattering: omega must be > 0");
    if (medium.temperature <= 0)
        throw NumericalError(
            "ratio_zp_thermal: thermal comparison undefined at zero temperature");
    const double eta4 = std::pow(medium.eta, 4);
    return angular_factor(theta) *
           (codata2018.hbar * omega / (2.0 * codata2018.k_B * medium.temperature)) *
           (medium.c_sound / codata2018.c_light) * eta4 /
           (medium.depsilon * medium.depsilon);
}

} // namespace phoncas
