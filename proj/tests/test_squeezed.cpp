#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "phoncas/quadrature.hpp"
#include "phoncas/squeezed.hpp"

using namespace phoncas;

namespace {
const FluidMedium& water() {
    static const auto reg = MediumRegistry::with_builtins();
    return reg.at("water_293K");
}
constexpr double kPi = std::numbers::pi;
} // namespace

TEST_CASE("vacuum limit r = 0 vanishes identically") {
    const auto mode = make_squeezed_mode(water(), 1e6, 1e-18);
    const auto params = SqueezeParams::make(0.0, 1.3);
    for (double z : {0.0, 1e-7, 3e-6}) CHECK(squeezed_variance(water(), mode, params, z, 2e-9) == 0.0);
    CHECK(squeezed_variance_average(water(), mode, params) == 0.0);
}

TEST_CASE("extremal phases reach the sinh(sinh -+ cosh) envelope") {
    const auto mode = make_squeezed_mode(water(), 1e6, 1e-18);
    const auto params = SqueezeParams::make(0.8, 0.0);
    // cos = 1 at z = t = 0, delta = 0: the minimum.
    const double v_min = squeezed_variance(water(), mode, params, 0.0, 0.0);
    CHECK(v_min == doctest::Approx(squeezed_variance_min(water(), mode, params)));
    CHECK(v_min < 0.0);
    // sinh r - cosh r = -e^{-r}
    const double pref = v_min / (std::sinh(0.8) * (std::sinh(0.8) - std::cosh(0.8)));
    CHECK(std::sinh(0.8) - std::cosh(0.8) ==
          doctest::Approx(-std::exp(-0.8)).epsilon(1e-13));
    // cos = -1 half a modulation period later: the maximum.
    const double z_half = kPi / (2.0 * mode.k);
    const double v_max = squeezed_variance(water(), mode, params, z_half, 0.0);
    CHECK(v_max == doctest::Approx(squeezed_variance_max(water(), mode, params)));
    CHECK(v_max > 0.0);
    CHECK(pref > 0.0);
}

TEST_CASE("spatial average over one modulation period is sinh^2") {
    const auto mode = make_squeezed_mode(water(), 2.3e6, 5e-19);
    for (double r : {0.3, 1.0, 2.2}) {
        const auto params = SqueezeParams::make(r, 0.7);
        const double period = kPi / mode.k; // cos[2kz + ...] has period pi/k
        const auto q = integrate_adaptive(
            [&](double z) { return squeezed_variance(water(), mode, params, z, 1e-9); },
            0.0, period, 1e-13);
        const double avg = q.value / period;
        CHECK(avg ==
              doctest::Approx(squeezed_variance_average(water(), mode, params))
                  .epsilon(1e-10));
        CHECK(avg >= 0.0);
    }
}

TEST_CASE("dependence is on kz - omega t only") {
    const auto mode = make_squeezed_mode(water(), 1.7e6, 1e-18);
    const auto params = SqueezeParams::make(1.1, 2.0);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> zd(0.0, 1e-5), td(0.0, 1e-8), sh(-1e-8, 1e-8);
    for (int i = 0; i < 100; ++i) {
        const double z = zd(rng), t = td(rng), tau = sh(rng);
        // Shift z and t together along the traveling wave.
        const double v1 = squeezed_variance(water(), mode, params, z, t);
        const double v2 = squeezed_variance(water(), mode, params,
                                            z + water().c_sound * tau, t + tau);
        CHECK(v2 == doctest::Approx(v1).epsilon(1e-9));
    }
}

TEST_CASE("values stay within the extremal envelope") {
    const auto mode = make_squeezed_mode(water(), 1e6, 1e-18);
    const auto params = SqueezeParams::make(1.5, 0.9);
    const double lo = squeezed_variance_min(water(), mode, params);
    const double hi = squeezed_variance_max(water(), mode, params);
    for (int i = 0; i <= 200; ++i) {
        const double z = 1e-5 * i / 200.0;
        const double v = squeezed_variance(water(), mode, params, z, 3e-10);
        CHECK(v >= lo - 1e-12 * std::fabs(lo));
        CHECK(v <= hi + 1e-12 * std::fabs(hi));
    }
}

TEST_CASE("mode and parameter validation") {
    CHECK_THROWS_AS(SqueezeParams::make(-0.1, 0.0), ConfigError);
    const auto p = SqueezeParams::make(1.0, -kPi);
    CHECK(p.delta >= 0.0);
    CHECK(p.delta < 2.0 * kPi);

    CHECK_THROWS_AS(make_squeezed_mode(water(), 0.0, 1e-18), ConfigError);
    CHECK_THROWS_AS(make_squeezed_mode(water(), 1e6, 0.0), ConfigError);

    SqueezedModeSpec bad{1e6, 1.5e9, 1e-18}; // omega != c_S k
    CHECK_THROWS_AS(validate_mode(water(), bad), ConfigError);
    SqueezedModeSpec ok{1e6, 1.48e9, 1e-18};
    CHECK_NOTHROW(validate_mode(water(), ok));
}
