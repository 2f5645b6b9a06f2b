#include "phoncas/boundaries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "phoncas/quadrature.hpp"

namespace phoncas {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-9; // admissibility test for alpha = pi/n, 2pi/n

// Common image-sum prefactor: the boundary shift is -pref * sum_i d_i^-4.
double image_prefactor(const FluidMedium& medium) {
    return codata2018.hbar * medium.rho0 * medium.c_sound / (2.0 * kPi * kPi);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

// Integer n with angle ~= full/n, or 0 if there is none.
int divisor_of(double angle, double full) {
    if (!(angle > 0)) return 0;
    const double n_real = full / angle;
    const int n = static_cast<int>(std::llround(n_real));
    if (n < 1) return 0;
    return std::fabs(n * angle - full) <= kAngleTol * full ? n : 0;
}

} // namespace

void validate_geometry(const Geometry& g) {
    std::visit(
        [](const auto& geo) {
            using T = std::decay_t<decltype(geo)>;
            if constexpr (std::is_same_v<T, HalfSpace>) {
                if (!(geo.z > 0)) throw ConfigError("HalfSpace: z must be > 0");
            } else if constexpr (std::is_same_v<T, ParallelSlab>) {
                if (!(geo.a > 0)) throw ConfigError("ParallelSlab: a must be > 0");
                if (!(geo.z > 0 && geo.z < geo.a))
                    throw ConfigError("ParallelSlab: z must lie strictly between the plates");
            } else if constexpr (std::is_same_v<T, Torus3>) {
                if (!(geo.L1 > 0 && geo.L2 > 0 && geo.L3 > 0))
                    throw ConfigError("Torus3: all periodicity lengths must be > 0");
            } else if constexpr (std::is_same_v<T, Wedge>) {
                if (!(geo.alpha > 0 && geo.alpha < 2.0 * kPi))
                    throw ConfigError("Wedge: alpha must lie in (0, 2pi)");
                if (!(geo.r > 0)) throw ConfigError("Wedge: r must be > 0");
                if (!(geo.theta > 0 && geo.theta < geo.alpha))
                    throw ConfigError("Wedge: theta must lie strictly inside (0, alpha)");
            } else if constexpr (std::is_same_v<T, ConicalSpace>) {
                if (!(geo.alpha > 0 && geo.alpha <= 2.0 * kPi))
                    throw ConfigError("ConicalSpace: alpha must lie in (0, 2pi]");
                if (!(geo.r > 0)) throw ConfigError("ConicalSpace: r must be > 0");
            }
        },
        g);
}

std::string geometry_name(const Geometry& g) {
    return std::visit(
        [](const auto& geo) -> std::string {
            using T = std::decay_t<decltype(geo)>;
            if constexpr (std::is_same_v<T, HalfSpace>) return "halfspace";
            else if constexpr (std::is_same_v<T, ParallelSlab>) return "slab";
            else if constexpr (std::is_same_v<T, Torus3>) return "torus";
            else if constexpr (std::is_same_v<T, Wedge>) return "wedge";
            else return "cone";
        },
        g);
}

std::string to_string(VarianceMethod m) {
    switch (m) {
        case VarianceMethod::closed_form_as_printed: return "closed_form_as_printed";
        case VarianceMethod::closed_form_corrected: return "closed_form_corrected";
        case VarianceMethod::image_sum: return "image_sum";
        case VarianceMethod::geometric_optics: return "geometric_optics";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::constant_factor: return "constant-factor";
        case Verdict::disagrees: return "disagrees";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Simple closed forms.

CasimirPressure casimir_pressure(const FluidMedium& medium, double a) {
    if (!(a > 0)) throw ConfigError("casimir_pressure: a must be > 0");
    const double a4 = a * a * a * a;
    return CasimirPressure{codata2018.hbar * medium.c_sound * kPi * kPi / (480.0 * a4),
                           true};
}

double em_plate_pressure(double a) {
    if (!(a > 0)) throw ConfigError("em_plate_pressure: a must be > 0");
    const double a4 = a * a * a * a;
    return codata2018.hbar * codata2018.c_light * kPi * kPi / (240.0 * a4);
}

EmAsymptotics em_interface_asymptotics(double z, double omega_p, InterfaceModel model) {
    if (!(z > 0)) throw ConfigError("em_interface_asymptotics: z must be > 0");
    if (model == InterfaceModel::perfect) {
        const double v = 3.0 / (16.0 * kPi * kPi * z * z * z * z);
        return EmAsymptotics{v, -v};
    }
    if (!(omega_p > 0))
        throw ConfigError("em_interface_asymptotics: omega_p must be > 0 for the plasma model");
    return EmAsymptotics{std::numbers::sqrt2 * omega_p / (32.0 * kPi * z * z * z),
                         -5.0 * omega_p * omega_p / (96.0 * kPi * z * z)};
}

double halfspace_closed_value(const FluidMedium& medium, double z) {
    if (!(z > 0)) throw ConfigError("halfspace: z must be > 0");
    return -codata2018.hbar * medium.rho0 * medium.c_sound /
           (32.0 * kPi * kPi * z * z * z * z);
}

double slab_closed_printed_value(const FluidMedium& medium, double a, double z) {
    const double s = std::sin(kPi * z / a);
    const double s2 = s * s;
    const double bracket = 1.0 / 15.0 + (3.0 - 2.0 * s2) / (s2 * s2);
    return -codata2018.hbar * medium.rho0 * medium.c_sound / (96.0 * a * a * a * a) *
           bracket;
}

double slab_closed_corrected_value(const FluidMedium& medium, double a, double z) {
    return kPi * kPi * slab_closed_printed_value(medium, a, z);
}

double wedge_closed_printed_value(const FluidMedium& medium, const Wedge& w) {
    const double s = std::sin(kPi * w.theta / w.alpha);
    const double s2 = s * s;
    const double a2 = w.alpha * w.alpha;
    const double brace = (kPi - w.alpha) * (kPi + w.alpha) * s2 *
                             ((kPi * kPi + 11.0 * a2) * s2 - 30.0 * kPi * kPi) +
                         45.0 * kPi * kPi * kPi * kPi;
    const double r4 = w.r * w.r * w.r * w.r;
    return -codata2018.hbar * medium.rho0 * medium.c_sound /
           (1440.0 * kPi * kPi * r4 * s2 * s2) * brace;
}

double cone_closed_value(const FluidMedium& medium, const ConicalSpace& c) {
    const double a2 = c.alpha * c.alpha;
    const double r4 = c.r * c.r * c.r * c.r;
    const double v = -codata2018.hbar * medium.rho0 * medium.c_sound /
                     (1440.0 * kPi * kPi * a2 * a2 * r4) * (2.0 * kPi - c.alpha) *
                     (2.0 * kPi + c.alpha) * (11.0 * a2 + 4.0 * kPi * kPi);
    return v == 0.0 ? 0.0 : v; // no deficit, no boundary: exactly zero
}

// ---------------------------------------------------------------------------
// Lattice summation.

namespace {

// Tail of sum_{|y| >= R} |y|^-4 over a lattice with cell volume v and cell
// diagonal D, by comparison with the integral of (|x| - D/2)^-4 over
// |x| >= R - D/2. Valid for R > D.
double lattice_tail_bound_3d(double R, double D, double cell_volume) {
    const double u = R - D;
    if (!(u > 0)) return std::numeric_limits<double>::infinity();
    return 4.0 * kPi / cell_volume *
           (1.0 / u + D / (2.0 * u * u) + D * D / (12.0 * u * u * u));
}

} // namespace

namespace {

// One cubic shell max(|l|,|m|,|n|) == k, enumerated face by face in a fixed
// order: O(k^2) work instead of rescanning the whole cube.
double torus_shell_term(const Torus3& t, int k, long& terms) {
    const double L1 = t.L1, L2 = t.L2, L3 = t.L3;
    double shell = 0.0;
    auto add = [&](int l, int m, int n) {
        const double q =
            (l * L1) * (l * L1) + (m * L2) * (m * L2) + (n * L3) * (n * L3);
        shell += 1.0 / (q * q);
        ++terms;
    };
    for (int l = -k; l <= k; l += 2 * k)
        for (int m = -k; m <= k; ++m)
            for (int n = -k; n <= k; ++n) add(l, m, n);
    for (int m = -k; m <= k; m += 2 * k)
        for (int l = -k + 1; l <= k - 1; ++l)
            for (int n = -k; n <= k; ++n) add(l, m, n);
    for (int n = -k; n <= k; n += 2 * k)
        for (int l = -k + 1; l <= k - 1; ++l)
            for (int m = -k + 1; m <= k - 1; ++m) add(l, m, n);
    return shell;
}

} // namespace

LatticeSumResult torus_shell_sum(const Torus3& t, int max_shell) {
    LatticeSumResult out;
    double sum = 0.0;
    long terms = 0;
    for (int k = 1; k <= max_shell; ++k) sum += torus_shell_term(t, k, terms);
    const double Lmin = std::min({t.L1, t.L2, t.L3});
    const double D = std::sqrt(t.L1 * t.L1 + t.L2 * t.L2 + t.L3 * t.L3);
    out.sum = sum;
    out.terms = terms;
    out.shells = max_shell;
    out.tail_bound = lattice_tail_bound_3d((max_shell + 1) * Lmin, D, t.L1 * t.L2 * t.L3);
    return out;
}

namespace {

// Extrapolated torus lattice sum: raw box sums at shell cutoffs k0*2^j are a
// smooth series in h = 1/(k + 1/2) (leading term is the integral tail), so a
// short Neville ladder reaches tolerances the raw 1/k tail never would.
struct TorusSumOut {
    double sum = 0;       // 1/m^4
    double residual = 0;  // extrapolation movement, 1/m^4
    double raw_tail = 0;  // integral-comparison bound at the deepest cutoff
    double radius = 0;    // physical truncation radius of the deepest cutoff, m
    long terms = 0;
};

TorusSumOut torus_sum_extrapolated(const Torus3& t, double rel_tol, int base_shell) {
    // Sort the periods so permuted tori sum in the identical order.
    std::array<double, 3> L{t.L1, t.L2, t.L3};
    std::sort(L.begin(), L.end());
    const Torus3 ts{L[0], L[1], L[2]};

    const int k0 = base_shell > 0 ? base_shell : 8;
    const int k_budget = 512;
    const double D = std::sqrt(L[0] * L[0] + L[1] * L[1] + L[2] * L[2]);

    TorusSumOut out;
    std::vector<double> h, v;
    double cum = 0.0;
    int k_done = 0;
    ExtrapResult ex{};
    for (int rung = k0; rung <= k_budget; rung *= 2) {
        for (int k = k_done + 1; k <= rung; ++k) cum += torus_shell_term(ts, k, out.terms);
        k_done = rung;
        h.push_back(1.0 / (static_cast<double>(rung) + 0.5));
        v.push_back(cum);
        if (h.size() < 4) continue;
        ex = neville_to_zero(h, v);
        if (ex.last_step <= rel_tol * std::fabs(ex.value)) {
            out.sum = ex.value;
            out.residual = ex.last_step;
            out.raw_tail =
                lattice_tail_bound_3d((k_done + 1) * L[0], D, L[0] * L[1] * L[2]);
            out.radius = (static_cast<double>(k_done) + 1.0) * L[0];
            return out;
        }
    }
    throw ToleranceError("torus lattice sum: tolerance unreachable", ex.value,
                         ex.last_step);
}

// 1-D reflection lattice of the parallel slab. Distances from a point at z:
// 2z and 2|na -+ z|, plus the pure translations 2na. Summed in radius order.
struct SlabSumOut {
    double sum = 0;      // 1/m^4, in units of distance^-4
    double tail = 0;     // integral-comparison bound on the remainder
    double radius = 0;   // m
    long image_count = 0;
};

SlabSumOut slab_image_sum(double a, double z, double rel_tol) {
    const auto inv4 = [](double d) { return 1.0 / (d * d * d * d); };
    // Tail of the three n-indexed families beyond N falls like N^-3; pick N
    // from the requested tolerance against the guaranteed leading term.
    double N_real = std::cbrt(4.0 / (3.0 * std::max(rel_tol * 1e-2, 1e-15)));
    const long N = std::max<long>(64, static_cast<long>(N_real) + 1);

    SlabSumOut out;
    double sum = inv4(2.0 * z);
    out.image_count = 1;
    for (long n = 1; n <= N; ++n) {
        const double na = static_cast<double>(n) * a;
        sum += 2.0 * inv4(2.0 * na);        // translation pair +-n
        sum += inv4(2.0 * (na - z));        // reflection chain toward z = 0
        sum += inv4(2.0 * (na + z));        // reflection chain toward z = a
        out.image_count += 4;
    }
    const double Na = static_cast<double>(N) * a;
    out.sum = sum;
    // Integral comparison per family: translations pair to 1/(24 a (Na)^3),
    // each reflection chain to 1/(48 a (Na -+ z)^3).
    out.tail = 1.0 / (24.0 * a * Na * Na * Na) +
               1.0 / (48.0 * a * std::pow(Na - z, 3)) +
               1.0 / (48.0 * a * std::pow(Na + z, 3));
    out.radius = 2.0 * (Na + z);
    return out;
}

int wedge_order(const Wedge& w) { return divisor_of(w.alpha, kPi); }
int cone_order(const ConicalSpace& c) { return divisor_of(c.alpha, 2.0 * kPi); }

std::vector<double> wedge_image_distances(const Wedge& w) {
    const int n = wedge_order(w);
    std::vector<double> d;
    d.reserve(2 * n - 1);
    // Dihedral family: rotations by 2 alpha k and reflections at angles
    // 2 alpha k - theta; chord distance on the circle of radius r.
    for (int k = 1; k < n; ++k)
        d.push_back(2.0 * w.r * std::fabs(std::sin(w.alpha * k)));
    for (int k = 0; k < n; ++k)
        d.push_back(2.0 * w.r * std::fabs(std::sin(w.theta - w.alpha * k)));
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> cone_image_distances(const ConicalSpace& c) {
    const int n = cone_order(c);
    std::vector<double> d;
    d.reserve(n - 1);
    for (int k = 1; k < n; ++k)
        d.push_back(2.0 * c.r * std::sin(kPi * k / n));
    return d;
}

} // namespace

std::optional<std::string> image_admissibility(const Geometry& g) {
    validate_geometry(g);
    if (const auto* w = std::get_if<Wedge>(&g)) {
        if (wedge_order(*w) == 0)
            return "wedge admits an image construction only for alpha = pi/n "
                   "(dihedral group); alpha = " +
                   fmt(w->alpha) + " is not of that form";
    } else if (const auto* c = std::get_if<ConicalSpace>(&g)) {
        if (cone_order(*c) == 0)
            return "conical space admits an image construction only for alpha = 2pi/n "
                   "(cyclic group); alpha = " +
                   fmt(c->alpha) + " is not of that form";
    }
    return std::nullopt;
}

ImageSet build_image_set(const Geometry& g, double rel_tol) {
    if (auto reason = image_admissibility(g)) throw UnsupportedGeometryError(*reason);
    ImageSet set;
    if (const auto* hs = std::get_if<HalfSpace>(&g)) {
        set.kind = ImageSet::Kind::reflection;
        set.distances = {2.0 * hs->z};
        set.image_count = 1;
        set.truncation_radius = 2.0 * hs->z;
    } else if (const auto* sl = std::get_if<ParallelSlab>(&g)) {
        set.kind = ImageSet::Kind::reflection;
        SlabSumOut s = slab_image_sum(sl->a, sl->z, rel_tol);
        set.image_count = s.image_count;
        set.truncation_radius = s.radius;
        set.tail_bound = s.tail; // caller rescales by the physical prefactor
    } else if (std::get_if<Torus3>(&g)) {
        set.kind = ImageSet::Kind::translation_lattice;
        set.truncation_radius = 0; // filled in by the summation
    } else if (const auto* w = std::get_if<Wedge>(&g)) {
        set.kind = ImageSet::Kind::reflection;
        set.distances = wedge_image_distances(*w);
        set.image_count = static_cast<long>(set.distances.size());
        set.truncation_radius = set.distances.empty() ? 0 : set.distances.back();
    } else if (const auto* c = std::get_if<ConicalSpace>(&g)) {
        set.kind = ImageSet::Kind::rotation;
        set.distances = cone_image_distances(*c);
        set.image_count = static_cast<long>(set.distances.size());
        set.truncation_radius = set.distances.empty() ? 0 : set.distances.back();
    }
    return set;
}

DensityVariance variance_image_sum(const FluidMedium& medium, const Geometry& g,
                                   const ImageSumOptions& opts, ImageSet* out) {
    if (auto reason = image_admissibility(g)) throw UnsupportedGeometryError(*reason);
    const double pref = image_prefactor(medium);
    DensityVariance dv;
    dv.method = VarianceMethod::image_sum;

    if (const auto* t = std::get_if<Torus3>(&g)) {
        const int base = opts.base_shell > 0 ? opts.base_shell : 10;
        TorusSumOut s = torus_sum_extrapolated(*t, opts.rel_tol, base);
        dv.value = -pref * s.sum;
        dv.abs_error = pref * s.residual;
        if (out) {
            out->kind = ImageSet::Kind::translation_lattice;
            out->image_count = s.terms;
            out->truncation_radius = s.radius;
            out->tail_bound = pref * s.raw_tail;
        }
        return dv;
    }
    if (const auto* sl = std::get_if<ParallelSlab>(&g)) {
        SlabSumOut s = slab_image_sum(sl->a, sl->z, opts.rel_tol);
        dv.value = -pref * s.sum;
        dv.abs_error = pref * s.tail;
        if (out) {
            out->kind = ImageSet::Kind::reflection;
            out->image_count = s.image_count;
            out->truncation_radius = s.radius;
            out->tail_bound = pref * s.tail;
        }
        return dv;
    }

    ImageSet set = build_image_set(g, opts.rel_tol);
    double sum = 0.0;
    for (double d : set.distances) sum += 1.0 / (d * d * d * d);
    dv.value = sum == 0.0 ? 0.0 : -pref * sum;
    dv.abs_error = 0.0;
    if (set.distances.empty())
        dv.notes.push_back("image family is empty: no boundary shift");
    if (out) *out = std::move(set);
    return dv;
}

DensityVariance variance_image_sum(const FluidMedium& medium, const Geometry& g,
                                   double rel_tol) {
    return variance_image_sum(medium, g, ImageSumOptions{rel_tol, 0}, nullptr);
}

DensityVariance variance_closed(const FluidMedium& medium, const Geometry& g,
                                double rel_tol) {
    validate_geometry(g);
    DensityVariance dv;
    if (const auto* hs = std::get_if<HalfSpace>(&g)) {
        dv.value = halfspace_closed_value(medium, hs->z);
        dv.method = VarianceMethod::closed_form_as_printed;
    } else if (const auto* sl = std::get_if<ParallelSlab>(&g)) {
        const double printed = slab_closed_printed_value(medium, sl->a, sl->z);
        dv.value = kPi * kPi * printed;
        dv.method = VarianceMethod::closed_form_corrected;
        dv.notes.push_back("as-printed closed form: " + fmt(printed) +
                           " kg^2 m^-6; corrected value is pi^2 times that "
                           "(fixed by the image-lattice derivation and the "
                           "large-gap limit against the single plane)");
    } else if (const auto* t = std::get_if<Torus3>(&g)) {
        TorusSumOut s = torus_sum_extrapolated(*t, rel_tol, 16);
        dv.value = -image_prefactor(medium) * s.sum;
        dv.abs_error = image_prefactor(medium) * s.residual;
        dv.method = VarianceMethod::closed_form_as_printed;
    } else if (const auto* w = std::get_if<Wedge>(&g)) {
        dv.value = wedge_closed_printed_value(medium, *w);
        dv.method = VarianceMethod::closed_form_as_printed;
        // The printed wedge form is kept verbatim; when an image oracle
        // exists and disagrees, that is flagged rather than silently fixed.
        if (!image_admissibility(g)) {
            DensityVariance oracle = variance_image_sum(medium, g, rel_tol);
            if (oracle.value != 0.0) {
                const double ratio = dv.value / oracle.value;
                if (std::fabs(ratio - 1.0) > 1e-6)
                    dv.notes.push_back(
                        "image-sum oracle disagrees with the printed form: "
                        "printed/image = " +
                        fmt(ratio));
            }
        }
    } else if (const auto* c = std::get_if<ConicalSpace>(&g)) {
        dv.value = cone_closed_value(medium, *c);
        dv.method = VarianceMethod::closed_form_as_printed;
    }
    return dv;
}

DiscrepancyReport discrepancy_report(const FluidMedium& medium, const Geometry& g,
                                     double rel_tol) {
    if (auto reason = image_admissibility(g)) throw UnsupportedGeometryError(*reason);
    const double tol = std::min(rel_tol, 1e-8);

    DiscrepancyReport rep;
    // Closed-vs-image ratio at one geometry, evaluated from the printed form.
    auto printed_value = [&](const Geometry& gg) -> double {
        if (const auto* hs = std::get_if<HalfSpace>(&gg))
            return halfspace_closed_value(medium, hs->z);
        if (const auto* sl = std::get_if<ParallelSlab>(&gg))
            return slab_closed_printed_value(medium, sl->a, sl->z);
        if (std::get_if<Torus3>(&gg)) return variance_closed(medium, gg, tol).value;
        if (const auto* w = std::get_if<Wedge>(&gg))
            return wedge_closed_printed_value(medium, *w);
        const auto& c = std::get<ConicalSpace>(gg);
        return cone_closed_value(medium, c);
    };

    rep.closed_as_printed = printed_value(g);
    rep.image_sum = variance_image_sum(medium, g, tol).value;
    if (const auto* sl = std::get_if<ParallelSlab>(&g)) {
        rep.closed_corrected = slab_closed_corrected_value(medium, sl->a, sl->z);
        rep.notes.push_back("primary closed-form slab value is the corrected one");
    }
    if (rep.image_sum != 0.0) {
        rep.ratio_printed_over_image = rep.closed_as_printed / rep.image_sum;
        if (rep.closed_corrected)
            rep.ratio_corrected_over_image = *rep.closed_corrected / rep.image_sum;
    } else {
        rep.ratio_printed_over_image = rep.closed_as_printed == 0.0 ? 1.0 : 0.0;
        rep.notes.push_back("image sum is exactly zero (empty image family)");
    }

    // Sweep the shape parameter: a constant-factor verdict needs the ratio
    // to hold across the sweep, not just at one point.
    constexpr int kSweep = 10;
    std::vector<Geometry> sweep;
    if (const auto* hs = std::get_if<HalfSpace>(&g)) {
        rep.sweep_parameter = "z";
        for (int i = 0; i < kSweep; ++i)
            sweep.push_back(HalfSpace{hs->z * std::pow(2.0, -1.0 + 2.0 * i / (kSweep - 1))});
    } else if (const auto* sl = std::get_if<ParallelSlab>(&g)) {
        rep.sweep_parameter = "z";
        for (int i = 0; i < kSweep; ++i)
            sweep.push_back(ParallelSlab{sl->a, sl->a * (0.08 + 0.84 * i / (kSweep - 1))});
    } else if (const auto* t = std::get_if<Torus3>(&g)) {
        rep.sweep_parameter = "scale";
        for (int i = 0; i < kSweep; ++i) {
            const double s = std::pow(2.0, -1.0 + 2.0 * i / (kSweep - 1));
            sweep.push_back(Torus3{t->L1 * s, t->L2 * s, t->L3 * s});
        }
    } else if (const auto* w = std::get_if<Wedge>(&g)) {
        rep.sweep_parameter = "theta";
        for (int i = 0; i < kSweep; ++i)
            sweep.push_back(Wedge{w->alpha, w->r, w->alpha * (0.08 + 0.84 * i / (kSweep - 1))});
    } else if (const auto* c = std::get_if<ConicalSpace>(&g)) {
        rep.sweep_parameter = "r";
        for (int i = 0; i < kSweep; ++i)
            sweep.push_back(
                ConicalSpace{c->alpha, c->r * std::pow(2.0, -1.0 + 2.0 * i / (kSweep - 1))});
    }

    double rmin = std::numeric_limits<double>::infinity(), rmax = -rmin;
    bool degenerate = false;
    for (const auto& gg : sweep) {
        const double closed = printed_value(gg);
        const double image = variance_image_sum(medium, gg, tol).value;
        if (image == 0.0) {
            degenerate = true;
            continue;
        }
        const double ratio = closed / image;
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
    }
    rep.sweep_points = kSweep;
    rep.ratio_min = rmin;
    rep.ratio_max = rmax;

    if (degenerate && !(rmin <= rmax)) {
        rep.verdict = Verdict::consistent; // empty image families throughout
        return rep;
    }
    const double mean = 0.5 * (rmin + rmax);
    const double spread = std::fabs(rmax - rmin) / std::fabs(mean);
    if (std::fabs(rmin - 1.0) <= 1e-6 && std::fabs(rmax - 1.0) <= 1e-6)
        rep.verdict = Verdict::consistent;
    else if (spread <= 1e-6)
        rep.verdict = Verdict::constant_factor;
    else
        rep.verdict = Verdict::disagrees;
    return rep;
}

} // namespace phoncas
