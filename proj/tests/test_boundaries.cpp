#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "phoncas/boundaries.hpp"

using namespace phoncas;

namespace {
const FluidMedium& water() {
    static const auto reg = MediumRegistry::with_builtins();
    return reg.at("water_293K");
}
constexpr double kPi = std::numbers::pi;
constexpr long double kPiL = 3.14159265358979323846264338328L;
constexpr long double kHbarL = 1.054571817e-34L;

// Frozen by the pre-build brute-force oracle (tests/oracles).
constexpr double kCubicLatticeS = 16.5323159593;
} // namespace

TEST_CASE("geometry validation") {
    CHECK_THROWS_AS(validate_geometry(HalfSpace{0.0}), ConfigError);
    CHECK_THROWS_AS(validate_geometry(ParallelSlab{1e-6, 1e-6}), ConfigError);
    CHECK_THROWS_AS(validate_geometry(ParallelSlab{1e-6, 0.0}), ConfigError);
    CHECK_THROWS_AS(validate_geometry(Torus3{1e-6, 0.0, 1e-6}), ConfigError);
    CHECK_THROWS_AS(validate_geometry(Wedge{2.0 * kPi, 1e-7, 1.0}), ConfigError);
    CHECK_THROWS_AS(validate_geometry(Wedge{1.0, 1e-7, 1.5}), ConfigError);
    CHECK_THROWS_AS(validate_geometry(ConicalSpace{2.0 * kPi + 0.1, 1e-7}), ConfigError);
    CHECK_NOTHROW(validate_geometry(ConicalSpace{2.0 * kPi, 1e-7}));
}

TEST_CASE("casimir pressure value and scalings") {
    const auto p1 = casimir_pressure(water(), 1e-6);
    CHECK(p1.attractive);
    // Independent long-double evaluation.
    const long double expect = kHbarL * 1480.0L * kPiL * kPiL / (480.0L * powl(1e-6L, 4));
    CHECK(p1.value == doctest::Approx(static_cast<double>(expect)).epsilon(1e-13));
    CHECK(p1.value == doctest::Approx(3.209197049284e-09).epsilon(1e-10));

    const auto p2 = casimir_pressure(water(), 2e-6);
    CHECK(p2.value == doctest::Approx(p1.value / 16.0).epsilon(1e-14));

    // Ratio to the electromagnetic perfect-plate result is c_S / 2c.
    const double ratio = p1.value / em_plate_pressure(1e-6);
    CHECK(ratio ==
          doctest::Approx(water().c_sound / (2.0 * codata2018.c_light)).epsilon(1e-14));
}

TEST_CASE("EM interface asymptotics") {
    const auto perfect = em_interface_asymptotics(1e-7, 0.0, InterfaceModel::perfect);
    CHECK(perfect.E2 == -perfect.B2);
    CHECK(perfect.E2 > 0.0);
    const auto perfect2 = em_interface_asymptotics(2e-7, 0.0, InterfaceModel::perfect);
    CHECK(perfect.E2 / perfect2.E2 == doctest::Approx(16.0).epsilon(1e-13));

    const double wp = 1e16;
    const auto pl1 = em_interface_asymptotics(1e-7, wp, InterfaceModel::plasma);
    const auto pl2 = em_interface_asymptotics(2e-7, wp, InterfaceModel::plasma);
    CHECK(pl1.E2 > 0.0);
    CHECK(pl1.B2 < 0.0);
    // z-exponents 3 and 2: the ratio of falloffs differs by one power of 2.
    const double e_fall = pl1.E2 / pl2.E2;
    const double b_fall = pl1.B2 / pl2.B2;
    CHECK(e_fall == doctest::Approx(8.0).epsilon(1e-13));
    CHECK(b_fall == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(e_fall / b_fall == doctest::Approx(2.0).epsilon(1e-13));

    CHECK_THROWS_AS(em_interface_asymptotics(1e-7, 0.0, InterfaceModel::plasma),
                    ConfigError);
}

TEST_CASE("half space: single image reproduces the closed form") {
    const HalfSpace hs{1e-9};
    const auto closed = variance_closed(water(), hs);
    const auto image = variance_image_sum(water(), hs);
    CHECK(closed.value < 0.0);
    CHECK(image.value ==
          doctest::Approx(closed.value).epsilon(1e-14)); // analytic, single image
    CHECK(closed.value == doctest::Approx(-4.931950325973e5).epsilon(1e-11));

    ImageSet set = build_image_set(hs);
    REQUIRE(set.distances.size() == 1);
    CHECK(set.distances[0] == 2e-9);
    CHECK(set.kind == ImageSet::Kind::reflection);
}

TEST_CASE("slab: corrected closed form equals the image lattice") {
    const double a = 1e-6;
    for (int i = 1; i <= 10; ++i) {
        const double z = a * i / 11.0;
        const double corrected = slab_closed_corrected_value(water(), a, z);
        const auto image = variance_image_sum(water(), ParallelSlab{a, z}, 1e-10);
        CHECK(image.value == doctest::Approx(corrected).epsilon(1e-10));
        CHECK(corrected == doctest::Approx(kPi * kPi *
                                           slab_closed_printed_value(water(), a, z)));
    }
}

TEST_CASE("slab: symmetric in z -> a - z") {
    const double a = 1e-6;
    for (double frac : {0.1, 0.23, 0.4}) {
        const auto v1 = variance_image_sum(water(), ParallelSlab{a, a * frac}, 1e-10);
        const auto v2 =
            variance_image_sum(water(), ParallelSlab{a, a * (1.0 - frac)}, 1e-10);
        CHECK(v1.value == doctest::Approx(v2.value).epsilon(1e-12));
    }
}

TEST_CASE("slab: wide gap limit approaches the single plane") {
    const double z = 1e-8;
    const auto slab = variance_image_sum(water(), ParallelSlab{100.0 * z, z}, 1e-10);
    const double plane = halfspace_closed_value(water(), z);
    CHECK(slab.value == doctest::Approx(plane).epsilon(1e-3));
    // The printed form misses the same limit by pi^2.
    const double printed = slab_closed_printed_value(water(), 100.0 * z, z);
    CHECK(plane / printed == doctest::Approx(kPi * kPi).epsilon(1e-3));
}

TEST_CASE("slab: primary value is the corrected form with the printed one noted") {
    const auto dv = variance_closed(water(), ParallelSlab{1e-6, 3e-7});
    CHECK(dv.method == VarianceMethod::closed_form_corrected);
    CHECK(dv.value ==
          doctest::Approx(slab_closed_corrected_value(water(), 1e-6, 3e-7)));
    REQUIRE(!dv.notes.empty());
    CHECK(dv.notes.front().find("as-printed") != std::string::npos);
}

TEST_CASE("torus: cubic lattice constant matches the brute-force oracle") {
    const double L = 1e-6;
    const auto dv = variance_closed(water(), Torus3{L, L, L}, 1e-8);
    const double pref = static_cast<double>(kHbarL) * 998.0 * 1480.0 / (2.0 * kPi * kPi);
    const double S = -dv.value * L * L * L * L / pref;
    CHECK(S == doctest::Approx(kCubicLatticeS).epsilon(5e-7)); // 6 significant figures
}

TEST_CASE("torus: isotropy under permutations is exact") {
    const Torus3 t1{1e-6, 2e-6, 3e-6};
    const Torus3 t2{3e-6, 1e-6, 2e-6};
    const Torus3 t3{2e-6, 3e-6, 1e-6};
    const double v1 = variance_closed(water(), t1, 1e-8).value;
    CHECK(variance_closed(water(), t2, 1e-8).value == v1);
    CHECK(variance_closed(water(), t3, 1e-8).value == v1);
}

TEST_CASE("torus: uniform rescaling is exactly s^-4") {
    const Torus3 t{1e-6, 1.5e-6, 2e-6};
    const Torus3 t2{2e-6, 3e-6, 4e-6}; // s = 2: exact in binary
    const double v1 = variance_closed(water(), t, 1e-8).value;
    const double v2 = variance_closed(water(), t2, 1e-8).value;
    CHECK(v1 == 16.0 * v2);

    const double s = 1.7;
    const Torus3 t3{t.L1 * s, t.L2 * s, t.L3 * s};
    const double v3 = variance_closed(water(), t3, 1e-8).value;
    CHECK(v3 * s * s * s * s == doctest::Approx(v1).epsilon(1e-12));
}

TEST_CASE("torus: shell-sum tail bounds are sound") {
    const Torus3 t{1e-6, 1e-6, 1e-6};
    for (int k : {8, 16, 32}) {
        const auto s1 = torus_shell_sum(t, k);
        const auto s2 = torus_shell_sum(t, 2 * k);
        CHECK(std::fabs(s2.sum - s1.sum) < s1.tail_bound);
        CHECK(s1.terms == (2 * k + 1) * (2 * k + 1) * (2 * k + 1) - 1);
    }
    // Same statement through the image-sum interface.
    ImageSet set1, set2;
    const auto v1 =
        variance_image_sum(water(), Geometry{t}, ImageSumOptions{1e-8, 8}, &set1);
    const auto v2 =
        variance_image_sum(water(), Geometry{t}, ImageSumOptions{1e-8, 16}, &set2);
    CHECK(std::fabs(v2.value - v1.value) < set1.tail_bound);
}

TEST_CASE("torus: image sum route agrees with the closed lattice sum") {
    const Torus3 t{1e-6, 1.3e-6, 0.8e-6};
    const auto closed = variance_closed(water(), t, 1e-8);
    const auto image = variance_image_sum(water(), t, 1e-8);
    CHECK(image.value == doctest::Approx(closed.value).epsilon(1e-7));
    const auto rep = discrepancy_report(water(), t, 1e-8);
    CHECK(rep.verdict == Verdict::consistent);
}

TEST_CASE("torus: unreachable tolerance raises with a best estimate") {
    CHECK_THROWS_AS(variance_closed(water(), Torus3{1e-6, 1e-6, 1e-6}, 1e-18),
                    ToleranceError);
}

TEST_CASE("cone: closed form equals the rotation-image sum for 2pi/n") {
    for (int n : {2, 3, 4, 6}) {
        const ConicalSpace c{2.0 * kPi / n, 1e-7};
        const double closed = cone_closed_value(water(), c);
        const auto image = variance_image_sum(water(), c, 1e-12);
        CHECK(image.value == doctest::Approx(closed).epsilon(1e-10));
        ImageSet set = build_image_set(c);
        CHECK(set.kind == ImageSet::Kind::rotation);
        CHECK(static_cast<int>(set.distances.size()) == n - 1);
        const auto rep = discrepancy_report(water(), c, 1e-10);
        CHECK(rep.verdict == Verdict::consistent);
    }
}

TEST_CASE("cone: no deficit means exactly zero") {
    const ConicalSpace c{2.0 * kPi, 1e-7};
    CHECK(cone_closed_value(water(), c) == 0.0);
    CHECK(variance_closed(water(), c).value == 0.0);
    CHECK(variance_image_sum(water(), c).value == 0.0); // empty cyclic family
}

TEST_CASE("cone: half-plane case matches the half-space at the chord distance") {
    // alpha = pi: one image at 2r, identical to a plane at z = r.
    const ConicalSpace c{kPi, 3e-8};
    CHECK(cone_closed_value(water(), c) ==
          doctest::Approx(halfspace_closed_value(water(), 3e-8)).epsilon(1e-13));
}

TEST_CASE("wedge: printed form at alpha = pi is pi^4 off the single image") {
    const Wedge w{kPi, 1e-7, 0.7};
    const double printed = wedge_closed_printed_value(water(), w);
    const auto image = variance_image_sum(water(), w, 1e-12);
    CHECK(printed / image.value == doctest::Approx(kPi * kPi * kPi * kPi).epsilon(1e-11));

    // The single image sits at 2 r sin(theta): the half-space at z = r sin(theta).
    CHECK(image.value ==
          doctest::Approx(halfspace_closed_value(water(), w.r * std::sin(w.theta)))
              .epsilon(1e-13));

    // variance_closed returns the printed value and must flag the mismatch.
    const auto dv = variance_closed(water(), w);
    CHECK(dv.value == printed);
    REQUIRE(!dv.notes.empty());
    CHECK(dv.notes.front().find("disagrees") != std::string::npos);

    const auto rep = discrepancy_report(water(), w, 1e-10);
    CHECK(rep.verdict == Verdict::constant_factor);
    CHECK(rep.ratio_min == doctest::Approx(kPi * kPi * kPi * kPi).epsilon(1e-9));
    CHECK(rep.ratio_max == doctest::Approx(kPi * kPi * kPi * kPi).epsilon(1e-9));
}

TEST_CASE("wedge: right-angle image family and ratio") {
    const double r = 1e-7, th = 0.5;
    const Wedge w{kPi / 2.0, r, th};
    ImageSet set = build_image_set(w);
    REQUIRE(set.distances.size() == 3); // dihedral group of order 4, minus identity

    // Hand-built family: reflections in the two faces and the rotation by pi.
    std::vector<double> expect{2.0 * r * std::sin(th), 2.0 * r * std::cos(th), 2.0 * r};
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i < 3; ++i)
        CHECK(set.distances[i] == doctest::Approx(expect[i]).epsilon(1e-14));

    // Independent closed form of the three-image sum via s = sin(2 theta).
    const double s = std::sin(2.0 * th);
    const double pref =
        static_cast<double>(kHbarL) * 998.0 * 1480.0 / (32.0 * kPi * kPi * r * r * r * r);
    const double hand = -pref * std::pow(4.0 - s * s, 2) / std::pow(s, 4);
    const auto image = variance_image_sum(water(), w, 1e-12);
    CHECK(image.value == doctest::Approx(hand).epsilon(1e-12));

    // The printed/image ratio is theta-independent here as well.
    const auto rep = discrepancy_report(water(), w, 1e-10);
    CHECK(rep.verdict == Verdict::constant_factor);
    CHECK(std::isfinite(rep.ratio_printed_over_image));
}

TEST_CASE("wedge: admissibility rule") {
    CHECK(!image_admissibility(Wedge{kPi / 3.0, 1e-7, 0.3}));
    const auto why = image_admissibility(Wedge{0.9, 1e-7, 0.3});
    REQUIRE(why.has_value());
    CHECK(why->find("pi/n") != std::string::npos);
    CHECK_THROWS_AS(variance_image_sum(water(), Wedge{0.9, 1e-7, 0.3}),
                    UnsupportedGeometryError);
    CHECK_THROWS_AS(discrepancy_report(water(), Wedge{0.9, 1e-7, 0.3}),
                    UnsupportedGeometryError);
    // The closed form itself needs no image construction.
    CHECK_NOTHROW(variance_closed(water(), Wedge{0.9, 1e-7, 0.3}));
}

TEST_CASE("every boundary geometry reduces the variance") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> len(1e-9, 1e-5), frac(0.05, 0.95);
    for (int i = 0; i < 60; ++i) {
        CHECK(variance_closed(water(), HalfSpace{len(rng)}).value < 0.0);
        const double a = len(rng);
        CHECK(variance_closed(water(), ParallelSlab{a, a * frac(rng)}).value < 0.0);
        CHECK(variance_closed(water(), Torus3{len(rng), len(rng), len(rng)}, 1e-6).value <
              0.0);
        const double alpha = 2.0 * kPi * frac(rng);
        CHECK(variance_closed(water(), Wedge{alpha, len(rng), alpha * frac(rng)}).value <
              0.0);
        CHECK(variance_closed(water(), ConicalSpace{alpha, len(rng)}).value < 0.0);
    }
}

TEST_CASE("discrepancy report: half space is consistent with ratio one") {
    const auto rep = discrepancy_report(water(), HalfSpace{1e-8}, 1e-10);
    CHECK(rep.verdict == Verdict::consistent);
    CHECK(rep.ratio_printed_over_image == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.sweep_points == 10);
    CHECK(rep.sweep_parameter == "z");
}

TEST_CASE("discrepancy report: slab is constant-factor pi^2") {
    const auto rep = discrepancy_report(water(), ParallelSlab{1e-6, 3e-7}, 1e-10);
    CHECK(rep.verdict == Verdict::constant_factor);
    CHECK(rep.ratio_printed_over_image ==
          doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-9));
    REQUIRE(rep.closed_corrected.has_value());
    REQUIRE(rep.ratio_corrected_over_image.has_value());
    CHECK(*rep.ratio_corrected_over_image == doctest::Approx(1.0).epsilon(1e-9));
}
