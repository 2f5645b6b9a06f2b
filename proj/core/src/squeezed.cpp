#include "phoncas/squeezed.hpp"

#include <cmath>
#include <numbers>

namespace phoncas {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double prefactor(const FluidMedium& medium, const SqueezedModeSpec& mode) {
    return codata2018.hbar * mode.omega * medium.rho0 /
           (medium.c_sound * medium.c_sound * mode.volume);
}
} // namespace

SqueezeParams SqueezeParams::make(double r, double delta) {
    if (!(r >= 0)) throw ConfigError("squeeze parameter r must be >= 0");
    double d = std::fmod(delta, kTwoPi);
    if (d < 0) d += kTwoPi;
    return SqueezeParams{r, d};
}

SqueezedModeSpec make_squeezed_mode(const FluidMedium& medium, double k, double volume) {
    if (!(k > 0)) throw ConfigError("squeezed mode: k must be > 0");
    if (!(volume > 0)) throw ConfigError("squeezed mode: volume must be > 0");
    return SqueezedModeSpec{k, medium.c_sound * k, volume};
}

void validate_mode(const FluidMedium& medium, const SqueezedModeSpec& mode) {
    if (!(mode.volume > 0)) throw ConfigError("squeezed mode: volume must be > 0");
    if (!(mode.k > 0)) throw ConfigError("squeezed mode: k must be > 0");
    const double expect = medium.c_sound * mode.k;
    if (std::fabs(mode.omega - expect) > 1e-12 * expect)
        throw ConfigError("squeezed mode: omega must equal c_sound * k");
}

double squeezed_variance(const FluidMedium& medium, const SqueezedModeSpec& mode,
                         const SqueezeParams& params, double z, double t) {
    validate_mode(medium, mode);
    const double sh = std::sinh(params.r);
    const double ch = std::cosh(params.r);
    const double phase = 2.0 * (mode.k * z - mode.omega * t) + params.delta;
    return prefactor(medium, mode) * sh * (sh - ch * std::cos(phase));
}

double squeezed_variance_average(const FluidMedium& medium, const SqueezedModeSpec& mode,
                                 const SqueezeParams& params) {
    validate_mode(medium, mode);
    const double sh = std::sinh(params.r);
    return prefactor(medium, mode) * sh * sh;
}

double squeezed_variance_min(const FluidMedium& medium, const SqueezedModeSpec& mode,
                             const SqueezeParams& params) {
    validate_mode(medium, mode);
    const double sh = std::sinh(params.r);
    const double ch = std::cosh(params.r);
    return prefactor(medium, mode) * sh * (sh - ch);
}

double squeezed_variance_max(const FluidMedium& medium, const SqueezedModeSpec& mode,
                             const SqueezeParams& params) {
    validate_mode(medium, mode);
    const double sh = std::sinh(params.r);
    const double ch = std::cosh(params.r);
    return prefactor(medium, mode) * sh * (sh + ch);
}

} // namespace phoncas
