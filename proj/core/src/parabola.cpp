#include "phoncas/parabola.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "phoncas/quadrature.hpp"
#include "phoncas/rootfind.hpp"

namespace phoncas {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHardGuardAoverB = 0.1; // beyond this the near-focus picture is gone
} // namespace

void validate(const MirrorSpec& m) {
    if (!(m.b > 0)) throw ConfigError("mirror: b must be > 0");
    if (!(m.aperture_half_angle > 0 && m.aperture_half_angle < kPi))
        throw ConfigError("mirror: aperture_half_angle must lie in (0, pi)");
}

void validate(const MirrorSpec& m, const FieldPoint& p) {
    validate(m);
    if (!(p.a > 0)) throw ConfigError("field point: a must be > 0");
    if (!std::isfinite(p.gamma)) throw ConfigError("field point: gamma must be finite");
    if (p.a / m.b >= kHardGuardAoverB)
        throw ConfigError("field point: a/b too large for the near-focus treatment");
}

double kappa_default() { return 4.0 / (5.0 * kPi * kPi * kPi); }

double delta_ell_analytic(const FieldPoint& p, double alpha, double beta) {
    const double ca = std::cos(alpha), cb = std::cos(beta);
    const double sa = std::sin(alpha), sb = std::sin(beta);
    return p.a * (std::cos(p.gamma) * (ca - cb + sa * sa - sb * sb) +
                  std::sin(p.gamma) * (sa - sb + sb * cb - sa * ca));
}

namespace {

struct Vec2 {
    double x = 0, y = 0;
};

// Mirror point at focus angle t: r(t) = b / (1 + cos t).
Vec2 mirror_point(double b, double t) {
    const double r = b / (1.0 + std::cos(t));
    return {r * std::cos(t), r * std::sin(t)};
}

// Reflect the incoming direction u = (cos theta, sin theta) about the local
// inward normal, which makes angle t/2 with the axis.
Vec2 reflected_direction(double t, double theta) {
    const double nx = std::cos(0.5 * t), ny = std::sin(0.5 * t);
    const double ux = std::cos(theta), uy = std::sin(theta);
    const double un = ux * nx + uy * ny;
    return {ux - 2.0 * un * nx, uy - 2.0 * un * ny};
}

} // namespace

double ray_miss(const MirrorSpec& m, const FieldPoint& p, double theta, double t) {
    const Vec2 M = mirror_point(m.b, t);
    const Vec2 v = reflected_direction(t, theta); // unit vector
    const double px = p.a * std::cos(p.gamma), py = p.a * std::sin(p.gamma);
    return (px - M.x) * v.y - (py - M.y) * v.x;
}

namespace {

// Optical path difference L(alpha) - L(beta) between the two reflected rays,
// L(t) = M(t).u + |P - M(t)|, written so every term carries a factor of
// sin((alpha-beta)/2): the two O(b) path lengths never meet head-on.
double delta_ell_exact(const MirrorSpec& m, const FieldPoint& p, double theta,
                       double alpha, double beta) {
    const double b = m.b;
    const double ca = std::cos(alpha), cb = std::cos(beta);
    const double oa = 1.0 + ca, ob = 1.0 + cb;
    const double half_sum = 0.5 * (alpha + beta);
    const double half_diff = 0.5 * (alpha - beta);
    const double shd = std::sin(half_diff);
    const double sd = std::sin(alpha - beta);

    // M.u difference.
    const double num_u = -2.0 * std::sin(half_sum - theta) * shd + std::sin(theta) * sd;
    const double d_mu = b * num_u / (oa * ob);

    // |P - M| difference via (x^2 - y^2)/(x + y).
    const double ra = b / oa, rb = b / ob;
    const double r2diff =
        b * b * (2.0 + ca + cb) * 2.0 * std::sin(half_sum) * shd / (oa * oa * ob * ob);
    const double num_g = -2.0 * std::sin(half_sum - p.gamma) * shd + std::sin(p.gamma) * sd;
    const double rcos_diff = b * num_g / (oa * ob);

    const double px = p.a * std::cos(p.gamma), py = p.a * std::sin(p.gamma);
    const auto dist = [&](double r, double c, double t) {
        const Vec2 M{r * c, r * std::sin(t)};
        return std::hypot(px - M.x, py - M.y);
    };
    const double Da = dist(ra, ca, alpha);
    const double Db = dist(rb, cb, beta);
    const double d_pm = (r2diff - 2.0 * p.a * rcos_diff) / (Da + Db);

    return d_mu + d_pm;
}

} // namespace

RayPair solve_ray_pair(const MirrorSpec& m, const FieldPoint& p, double theta) {
    validate(m, p);
    RayPair out;
    out.theta = theta;
    out.method = DeltaEllMethod::exact_trace;

    // Exactly axial configuration: the two rays coincide with the vertex ray
    // by symmetry, a measure-zero degenerate case with zero path difference.
    if (std::sin(theta) == 0.0 && std::fabs(std::sin(p.gamma)) < 1e-15) {
        out.outcome = RayOutcome::degenerate;
        out.alpha = out.beta = 0.0;
        out.delta_ell = out.delta_ell_signed = 0.0;
        out.root_count = 1;
        return out;
    }

    const double A = m.aperture_half_angle;
    const int n_scan = 512;
    const double f_tol = 1e-12 * p.a;

    std::vector<double> roots;
    double prev_t = -A;
    double prev_g = ray_miss(m, p, theta, prev_t);
    if (prev_g == 0.0) roots.push_back(prev_t);
    for (int i = 1; i <= n_scan; ++i) {
        const double t = -A + 2.0 * A * i / n_scan;
        const double gt = ray_miss(m, p, theta, t);
        if (gt == 0.0) {
            roots.push_back(t);
        } else if (prev_g != 0.0 && (prev_g > 0) != (gt > 0)) {
            const double root = brent_root(
                [&](double tt) { return ray_miss(m, p, theta, tt); }, prev_t, t, f_tol);
            roots.push_back(root);
        }
        prev_t = t;
        prev_g = gt;
    }

    // Keep forward intersections only (the point must lie ahead of the
    // reflection, not on the backward extension of the ray).
    std::vector<double> fwd;
    const double px = p.a * std::cos(p.gamma), py = p.a * std::sin(p.gamma);
    for (double t : roots) {
        const Vec2 M = mirror_point(m.b, t);
        const Vec2 v = reflected_direction(t, theta);
        if ((px - M.x) * v.x + (py - M.y) * v.y > 0.0) fwd.push_back(t);
    }
    out.root_count = static_cast<int>(fwd.size());

    if (fwd.size() < 2) {
        out.outcome = RayOutcome::no_pair;
        return out;
    }
    if (fwd.size() > 2) {
        // More than one interference pair (very wide apertures); outside the
        // two-ray model, reported as a failure rather than guessed at.
        out.outcome = RayOutcome::multi_root;
        return out;
    }

    const double alpha = std::max(fwd[0], fwd[1]);
    const double beta = std::min(fwd[0], fwd[1]);
    out.alpha = alpha;
    out.beta = beta;
    if (std::fabs(alpha - beta) < 1e-9) {
        out.outcome = RayOutcome::degenerate; // tangency: the pair has merged
        out.delta_ell = out.delta_ell_signed = 0.0;
        return out;
    }
    out.outcome = RayOutcome::pair;
    out.delta_ell_signed = delta_ell_exact(m, p, theta, alpha, beta);
    out.delta_ell = std::fabs(out.delta_ell_signed);
    return out;
}

namespace {

bool has_pair(const MirrorSpec& m, const FieldPoint& p, double theta) {
    const RayPair rp = solve_ray_pair(m, p, theta);
    return rp.outcome == RayOutcome::pair && rp.delta_ell > 0.0;
}

} // namespace

FocusResult variance_near_focus(const FluidMedium& medium, const MirrorSpec& m,
                                const FieldPoint& p, double kappa,
                                const FocusQuadrature& quad) {
    validate(m, p);
    if (!(kappa > 0)) throw ConfigError("variance_near_focus: kappa must be > 0");

    FocusResult res;
    const double theta_guard = 4.0 * p.a / m.b;
    const int n = std::max(quad.theta_probes, 32);

    // Discover the admissible set: runs of incoming directions with a ray
    // pair, endpoints refined by bisection.
    std::vector<std::pair<double, double>> intervals;
    double run_start = 0;
    bool in_run = false;
    double prev_theta = -theta_guard;
    if (has_pair(m, p, prev_theta)) {
        run_start = prev_theta;
        in_run = true;
    }
    auto refine = [&](double t_bad, double t_good) {
        for (int i = 0; i < 48; ++i) {
            const double mid = 0.5 * (t_bad + t_good);
            (has_pair(m, p, mid) ? t_good : t_bad) = mid;
        }
        return t_good;
    };
    for (int i = 1; i <= n; ++i) {
        const double t = -theta_guard + 2.0 * theta_guard * i / n;
        const bool ok = has_pair(m, p, t);
        if (ok && !in_run) {
            run_start = refine(prev_theta, t);
            in_run = true;
        } else if (!ok && in_run) {
            intervals.emplace_back(run_start, refine(t, prev_theta));
            in_run = false;
        }
        prev_theta = t;
    }
    if (in_run) intervals.emplace_back(run_start, prev_theta);

    if (intervals.empty())
        throw NumericalError("variance_near_focus: no incoming direction admits a ray pair "
                             "inside the aperture");

    double integral = 0.0, err = 0.0;
    int failures = 0;
    auto integrand = [&](double th) {
        const RayPair rp = solve_ray_pair(m, p, th);
        if (rp.outcome != RayOutcome::pair || rp.delta_ell <= 0.0) {
            ++failures;
            return 0.0;
        }
        const double d = rp.delta_ell;
        const double d2 = d * d;
        return 1.0 / (d2 * d2);
    };
    for (auto [lo, hi] : intervals) {
        const double w = hi - lo;
        const double lo_c = lo + quad.merge_margin_frac * w;
        const double hi_c = hi - quad.merge_margin_frac * w;
        if (!(hi_c > lo_c)) continue;
        QuadResult q = integrate_adaptive(integrand, lo_c, hi_c, quad.quad_rel_tol);
        if (!q.converged)
            throw ToleranceError("variance_near_focus: quadrature tolerance unreachable",
                                 q.value, q.error);
        integral += q.value;
        err += q.error;
        res.theta_intervals.emplace_back(lo_c, hi_c);
    }

    const double pref = 0.5 * kappa * codata2018.hbar * medium.rho0 * medium.c_sound;
    res.integral = integral;
    res.n_ray_failures = failures;
    res.variance.value = -pref * integral;
    res.variance.abs_error = pref * err;
    res.variance.method = VarianceMethod::geometric_optics;
    if (p.a / m.b >= 0.01)
        res.variance.notes.push_back("a/b above the 0.01 near-focus guard; leading-order "
                                     "scaling may be contaminated");
    return res;
}

ScalingFit extract_C(const FluidMedium& medium, double aperture_half_angle,
                     std::span<const double> b_values,
                     std::span<const double> a_over_b_values, double gamma, double kappa,
                     const FocusQuadrature& quad, std::vector<ScanPoint>* out_points) {
    if (b_values.size() < 2 || a_over_b_values.size() < 2)
        throw ConfigError("extract_C: need at least a 2x2 (b, a/b) grid");

    const double hrc = codata2018.hbar * medium.rho0 * medium.c_sound;
    std::vector<double> la, lb, lv, K;
    for (double b : b_values) {
        const MirrorSpec m{b, aperture_half_angle};
        for (double aob : a_over_b_values) {
            const double a = aob * b;
            const FieldPoint p{a, gamma};
            FocusResult r = variance_near_focus(medium, m, p, kappa, quad);
            const double v = std::fabs(r.variance.value);
            la.push_back(std::log(a));
            lb.push_back(std::log(b));
            lv.push_back(std::log(v));
            K.push_back(v * b * a * a * a / hrc);
            if (out_points)
                out_points->push_back(ScanPoint{a, b, gamma, r.variance.value,
                                                r.variance.abs_error, r.n_ray_failures});
        }
    }

    // Least squares for log v = c0 + pa log a + pb log b.
    const std::size_t n = lv.size();
    double S = static_cast<double>(n);
    double Sa = 0, Sb = 0, Saa = 0, Sbb = 0, Sab = 0, Sv = 0, Sav = 0, Sbv = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Sa += la[i];
        Sb += lb[i];
        Saa += la[i] * la[i];
        Sbb += lb[i] * lb[i];
        Sab += la[i] * lb[i];
        Sv += lv[i];
        Sav += la[i] * lv[i];
        Sbv += lb[i] * lv[i];
    }
    // Solve the 3x3 normal equations by Cramer's rule.
    const double A[3][3] = {{S, Sa, Sb}, {Sa, Saa, Sab}, {Sb, Sab, Sbb}};
    const double y[3] = {Sv, Sav, Sbv};
    auto det3 = [](const double M[3][3]) {
        return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
               M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
               M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    };
    const double d0 = det3(A);
    if (std::fabs(d0) < 1e-30) throw NumericalError("extract_C: singular fit system");
    double Ai[3][3];
    ScalingFit fit;
    double coef[3];
    for (int c = 0; c < 3; ++c) {
        std::copy(&A[0][0], &A[0][0] + 9, &Ai[0][0]);
        for (int r = 0; r < 3; ++r) Ai[r][c] = y[r];
        coef[c] = det3(Ai) / d0;
    }
    fit.slope_a = coef[1];
    fit.slope_b = coef[2];

    double mean = 0;
    for (double k : K) mean += k;
    mean /= static_cast<double>(K.size());
    double worst = 0;
    for (double k : K) worst = std::max(worst, std::fabs(k - mean) / mean);
    fit.C = mean;
    fit.residual = worst;
    fit.n_points = static_cast<int>(n);
    if (!(fit.C > 0)) throw NumericalError("extract_C: non-positive amplitude");
    if (worst > 0.05)
        throw NumericalError("extract_C: power-law fit residual " + std::to_string(worst) +
                             " exceeds 5% (slope_a=" + std::to_string(fit.slope_a) +
                             ", slope_b=" + std::to_string(fit.slope_b) + ")");
    return fit;
}

} // namespace phoncas
