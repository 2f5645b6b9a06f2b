// phoncas command line tool: geometry sweeps, closed-form vs image-sum
// cross checks, scattering ratios, squeezed-state profiles and the
// parabolic-mirror scaling scan, with CSV/JSON output.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phoncas/boundaries.hpp"
#include "phoncas/freefield.hpp"
#include "phoncas/medium.hpp"
#include "phoncas/parabola.hpp"
#include "phoncas/scattering.hpp"
#include "phoncas/squeezed.hpp"

using nlohmann::json;
using namespace phoncas;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitDisagrees = 4;

// 17 significant digits, always scientific: lossless binary64 round trip.
std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

struct GlobalOpts {
    std::string medium = "water_293K";
    std::string config;
    std::string format = "csv";
    std::string out;
    double tol = 1e-8;
    bool no_timestamp = false;
};

struct OutputSink {
    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &std::cout;

    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw ConfigError("cannot open output file '" + path + "'");
            os = file.get();
        }
    }
    std::ostream& stream() { return *os; }
};

std::string timestamp_line() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    return std::string("# generated: ") + buf;
}

MediumRegistry load_registry(const GlobalOpts& g) {
    if (g.config.empty()) return MediumRegistry::with_builtins();
    return load_media_config(g.config);
}

// ---------------------------------------------------------------------------
// Geometry flags shared by profile and oracle-check.

struct GeometryFlags {
    std::string kind;
    double z = 0, gap = 0;
    double L1 = 0, L2 = 0, L3 = 0;
    double alpha = 0, r = 0, theta = 0;

    void attach(CLI::App* cmd, bool require_kind = true) {
        auto* opt = cmd->add_option("--geometry", kind,
                                    "halfspace | slab | torus | wedge | cone");
        if (require_kind) opt->required();
        cmd->add_option("--z", z, "distance to the (nearer) plane, m");
        cmd->add_option("--gap", gap, "slab plate separation a, m");
        cmd->add_option("--L1", L1, "torus period, m");
        cmd->add_option("--L2", L2, "torus period, m");
        cmd->add_option("--L3", L3, "torus period, m");
        cmd->add_option("--alpha", alpha, "wedge/cone angle, rad");
        cmd->add_option("--r", r, "distance to edge/apex, m");
        cmd->add_option("--theta", theta, "wedge interior angle, rad");
    }

    Geometry build() const {
        if (kind == "halfspace") return HalfSpace{z};
        if (kind == "slab") return ParallelSlab{gap, z};
        if (kind == "torus") return Torus3{L1, L2, L3};
        if (kind == "wedge") return Wedge{alpha, r, theta};
        if (kind == "cone") return ConicalSpace{alpha, r};
        throw ConfigError("unknown geometry '" + kind + "'");
    }

    json to_json() const {
        json j{{"kind", kind}};
        if (kind == "halfspace") j["z"] = z;
        if (kind == "slab") {
            j["gap"] = gap;
            j["z"] = z;
        }
        if (kind == "torus") {
            j["L1"] = L1;
            j["L2"] = L2;
            j["L3"] = L3;
        }
        if (kind == "wedge") {
            j["alpha"] = alpha;
            j["r"] = r;
            j["theta"] = theta;
        }
        if (kind == "cone") {
            j["alpha"] = alpha;
            j["r"] = r;
        }
        return j;
    }

    // Rebuild with one named parameter replaced by v.
    Geometry with_param(const std::string& name, double v) const {
        GeometryFlags f = *this;
        if (name == "z") f.z = v;
        else if (name == "gap") f.gap = v;
        else if (name == "L1") f.L1 = v;
        else if (name == "L2") f.L2 = v;
        else if (name == "L3") f.L3 = v;
        else if (name == "L") f.L1 = f.L2 = f.L3 = v;
        else if (name == "alpha") f.alpha = v;
        else if (name == "r") f.r = v;
        else if (name == "theta") f.theta = v;
        else throw ConfigError("unknown sweep parameter '" + name + "'");
        return f.build();
    }

    bool sweepable(const std::string& name) const {
        if (kind == "halfspace") return name == "z";
        if (kind == "slab") return name == "z" || name == "gap";
        if (kind == "torus")
            return name == "L" || name == "L1" || name == "L2" || name == "L3";
        if (kind == "wedge") return name == "alpha" || name == "r" || name == "theta";
        if (kind == "cone") return name == "alpha" || name == "r";
        return false;
    }
};

json report_to_json(const DiscrepancyReport& rep) {
    json j;
    j["closed_as_printed"] = rep.closed_as_printed;
    j["closed_corrected"] =
        rep.closed_corrected ? json(*rep.closed_corrected) : json(nullptr);
    j["image_sum"] = rep.image_sum;
    j["methods"] = {"closed_form_as_printed", "image_sum"};
    j["ratio_printed_over_image"] = rep.ratio_printed_over_image;
    if (rep.ratio_corrected_over_image)
        j["ratio_corrected_over_image"] = *rep.ratio_corrected_over_image;
    j["verdict"] = to_string(rep.verdict);
    j["sweep"] = {{"parameter", rep.sweep_parameter},
                  {"points", rep.sweep_points},
                  {"ratio_min", rep.ratio_min},
                  {"ratio_max", rep.ratio_max}};
    j["notes"] = rep.notes;
    return j;
}

// ---------------------------------------------------------------------------
// profile

struct ProfileArgs {
    GeometryFlags geo;
    std::string sweep_param;
    double from = 0, to = 0;
    int points = 0;
    bool log_spacing = false;
    std::string method = "closed";
};

int run_profile(const GlobalOpts& g, const ProfileArgs& a) {
    const MediumRegistry reg = load_registry(g);
    const FluidMedium& medium = reg.at(g.medium);
    if (a.points < 2) throw ConfigError("profile: need at least 2 sweep points");
    if (!a.geo.sweepable(a.sweep_param))
        throw ConfigError("profile: '" + a.sweep_param + "' is not a parameter of geometry '" +
                          a.geo.kind + "'");
    if (a.method != "closed" && a.method != "image")
        throw ConfigError("profile: method must be 'closed' or 'image'");
    if (a.log_spacing && !(a.from > 0 && a.to > 0))
        throw ConfigError("profile: log spacing needs positive endpoints");

    std::vector<double> xs(a.points);
    for (int i = 0; i < a.points; ++i) {
        const double f = static_cast<double>(i) / (a.points - 1);
        xs[i] = a.log_spacing ? a.from * std::pow(a.to / a.from, f)
                              : a.from + (a.to - a.from) * f;
    }

    OutputSink sink(g.out);
    std::ostream& os = sink.stream();

    if (g.format == "json") {
        json doc;
        doc["command"] = "profile";
        doc["medium"] = g.medium;
        doc["geometry"] = a.geo.to_json();
        doc["sweep"] = {{"parameter", a.sweep_param}, {"points", a.points}};
        doc["method"] = a.method;
        json rows = json::array();
        try {
            for (double x : xs) {
                const Geometry gg = a.geo.with_param(a.sweep_param, x);
                const DensityVariance dv = a.method == "closed"
                                               ? variance_closed(medium, gg, g.tol)
                                               : variance_image_sum(medium, gg, g.tol);
                rows.push_back({{a.sweep_param, x},
                                {"value", dv.value},
                                {"method", to_string(dv.method)},
                                {"abs_error", dv.abs_error}});
            }
        } catch (const NumericalError& e) {
            doc["rows"] = rows;
            doc["error"] = {{"message", e.what()}};
            os << doc.dump(2) << "\n";
            return kExitNumerical;
        }
        doc["rows"] = rows;
        doc["error"] = nullptr;
        os << doc.dump(2) << "\n";
        return 0;
    }

    if (!g.no_timestamp) os << timestamp_line() << "\n";
    os << "# profile medium=" << g.medium << " geometry=" << a.geo.kind
       << " method=" << a.method << " tol=" << fmt17(g.tol) << "\n";
    os << a.sweep_param << ",value,method,abs_error\n";
    for (double x : xs) {
        try {
            const Geometry gg = a.geo.with_param(a.sweep_param, x);
            const DensityVariance dv = a.method == "closed"
                                           ? variance_closed(medium, gg, g.tol)
                                           : variance_image_sum(medium, gg, g.tol);
            os << fmt17(x) << "," << fmt17(dv.value) << "," << to_string(dv.method) << ","
               << fmt17(dv.abs_error) << "\n";
        } catch (const NumericalError& e) {
            os << "# error: " << e.what() << "\n";
            return kExitNumerical;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// oracle-check

struct OracleArgs {
    GeometryFlags geo;
    std::string target = "geometry"; // or "freefield"
};

int run_oracle_check(const GlobalOpts& g, const OracleArgs& a) {
    const MediumRegistry reg = load_registry(g);
    const FluidMedium& medium = reg.at(g.medium);
    OutputSink sink(g.out);
    std::ostream& os = sink.stream();

    if (a.target == "freefield") {
        // Mode-integral oracle against the closed-form correlator on a grid
        // spanning both sides of the sound cone.
        json points = json::array();
        bool all_ok = true;
        const double r0 = 1e-8;
        for (int i = 0; i < 20; ++i) {
            const bool timelike = i >= 10;
            const double r = (i % 10 == 9 && timelike) ? 0.0 : r0 * (1.0 + 0.35 * (i % 10));
            const double dt = timelike ? (r / medium.c_sound + 6e-12) * (1 + 0.2 * (i % 10))
                                       : (r / medium.c_sound) * 0.4;
            const Separation sep{{r, 0, 0}, dt};
            const CorrelationValue closed = corr_closed(medium, sep);
            const CorrelationValue oracle =
                corr_mode_integral(medium, sep, suggest_epsilon(medium, sep));
            const double tol = std::max(oracle.abs_error, 1e-3 * std::fabs(closed.value));
            const bool ok = std::fabs(oracle.value - closed.value) <= tol;
            all_ok = all_ok && ok;
            points.push_back({{"dx", r},
                              {"dt", dt},
                              {"closed", closed.value},
                              {"mode_integral", oracle.value},
                              {"abs_error", oracle.abs_error},
                              {"ok", ok}});
        }
        json doc{{"command", "oracle-check"},
                 {"target", "freefield"},
                 {"medium", g.medium},
                 {"points", points},
                 {"verdict", all_ok ? "consistent" : "disagrees"}};
        os << doc.dump(2) << "\n";
        return all_ok ? 0 : kExitDisagrees;
    }

    const Geometry gg = a.geo.build();
    const DiscrepancyReport rep = discrepancy_report(medium, gg, g.tol);
    json doc{{"command", "oracle-check"},
             {"medium", g.medium},
             {"geometry", a.geo.to_json()},
             {"report", report_to_json(rep)}};
    os << doc.dump(2) << "\n";
    return rep.verdict == Verdict::disagrees ? kExitDisagrees : 0;
}

// ---------------------------------------------------------------------------
// scattering

struct ScatteringArgs {
    double lambda = 0;
    double omega = 0;
    double theta = std::numbers::pi;
    double pol_dot = 1.0;
    double scat_volume = 1e-6;
    bool omega_in_medium = false;
};

int run_scattering(const GlobalOpts& g, const ScatteringArgs& a) {
    const MediumRegistry reg = load_registry(g);
    const FluidMedium& medium = reg.at(g.medium);
    if ((a.lambda > 0) == (a.omega > 0))
        throw ConfigError("scattering: give exactly one of --lambda or --omega");

    const OmegaConvention conv =
        a.omega_in_medium ? OmegaConvention::in_medium : OmegaConvention::vacuum;
    const double omega =
        a.omega > 0 ? a.omega : omega_from_wavelength(a.lambda, medium, conv);

    const double R = ratio_zp_thermal(medium, omega, a.theta);
    const double sigma = cross_section_zp(
        ScatteringQuery{medium, omega, a.theta, a.pol_dot, a.scat_volume});

    OutputSink sink(g.out);
    std::ostream& os = sink.stream();
    if (g.format == "json") {
        json doc{{"command", "scattering"},
                 {"medium", g.medium},
                 {"omega", omega},
                 {"omega_convention", a.omega_in_medium ? "in_medium" : "vacuum"},
                 {"theta", a.theta},
                 {"pol_dot", a.pol_dot},
                 {"scat_volume", a.scat_volume},
                 {"sigma_zp", sigma},
                 {"ratio_zp_thermal", R}};
        if (a.lambda > 0) doc["lambda"] = a.lambda;
        os << doc.dump(2) << "\n";
    } else {
        if (!g.no_timestamp) os << timestamp_line() << "\n";
        os << "# scattering medium=" << g.medium
           << " omega_convention=" << (a.omega_in_medium ? "in_medium" : "vacuum") << "\n";
        os << "omega,theta,pol_dot,scat_volume,sigma_zp,ratio_zp_thermal\n";
        os << fmt17(omega) << "," << fmt17(a.theta) << "," << fmt17(a.pol_dot) << ","
           << fmt17(a.scat_volume) << "," << fmt17(sigma) << "," << fmt17(R) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// squeezed-profile

struct SqueezedArgs {
    double r = 0;
    double delta = 0;
    double k = 0;
    double volume = 1e-18;
    double t = 0;
    double z_max = 0; // default: one mode wavelength
    int points = 64;
};

int run_squeezed(const GlobalOpts& g, const SqueezedArgs& a) {
    const MediumRegistry reg = load_registry(g);
    const FluidMedium& medium = reg.at(g.medium);
    const SqueezedModeSpec mode = make_squeezed_mode(medium, a.k, a.volume);
    const SqueezeParams params = SqueezeParams::make(a.r, a.delta);
    if (a.points < 2) throw ConfigError("squeezed-profile: need at least 2 points");
    const double z_max = a.z_max > 0 ? a.z_max : 2.0 * std::numbers::pi / a.k;

    OutputSink sink(g.out);
    std::ostream& os = sink.stream();
    const double avg = squeezed_variance_average(medium, mode, params);

    if (g.format == "json") {
        json rows = json::array();
        for (int i = 0; i < a.points; ++i) {
            const double z = z_max * i / (a.points - 1);
            rows.push_back({{"z", z},
                            {"value", squeezed_variance(medium, mode, params, z, a.t)}});
        }
        json doc{{"command", "squeezed-profile"},
                 {"medium", g.medium},
                 {"r", params.r},
                 {"delta", params.delta},
                 {"k", mode.k},
                 {"omega", mode.omega},
                 {"volume", mode.volume},
                 {"t", a.t},
                 {"spatial_average", avg},
                 {"rows", rows}};
        os << doc.dump(2) << "\n";
        return 0;
    }

    if (!g.no_timestamp) os << timestamp_line() << "\n";
    os << "# squeezed-profile medium=" << g.medium << " r=" << fmt17(params.r)
       << " delta=" << fmt17(params.delta) << " k=" << fmt17(mode.k)
       << " t=" << fmt17(a.t) << "\n";
    os << "# spatial_average=" << fmt17(avg) << "\n";
    os << "z,value\n";
    for (int i = 0; i < a.points; ++i) {
        const double z = z_max * i / (a.points - 1);
        os << fmt17(z) << "," << fmt17(squeezed_variance(medium, mode, params, z, a.t))
           << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// casimir-force

int run_casimir(const GlobalOpts& g, double gap) {
    const MediumRegistry reg = load_registry(g);
    const FluidMedium& medium = reg.at(g.medium);
    const CasimirPressure p = casimir_pressure(medium, gap);
    const double em = em_plate_pressure(gap);

    OutputSink sink(g.out);
    std::ostream& os = sink.stream();
    if (g.format == "json") {
        json doc{{"command", "casimir-force"},
                 {"medium", g.medium},
                 {"gap", gap},
                 {"pressure", p.value},
                 {"attractive", p.attractive},
                 {"em_perfect_plate_pressure", em},
                 {"ratio_to_em", p.value / em}};
        os << doc.dump(2) << "\n";
    } else {
        if (!g.no_timestamp) os << timestamp_line() << "\n";
        os << "# casimir-force medium=" << g.medium << "\n";
        os << "gap,pressure,attractive,ratio_to_em\n";
        os << fmt17(gap) << "," << fmt17(p.value) << "," << (p.attractive ? 1 : 0) << ","
           << fmt17(p.value / em) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// parabola-scan

struct ParabolaArgs {
    double aperture = 2.0;
    double gamma = std::numbers::pi / 2;
    double b_from = 1.0, b_to = 2.0;
    int b_points = 2;
    double a_rel_from = 1e-5, a_rel_to = 1e-3;
    int a_points = 6;
    double kappa = 0; // 0 = default
    double margin = 0.02;
    double quad_tol = 1e-7;
};

int run_parabola_scan(const GlobalOpts& g, const ParabolaArgs& a) {
    const MediumRegistry reg = load_registry(g);
    const FluidMedium& medium = reg.at(g.medium);
    if (a.b_points < 2 || a.a_points < 2)
        throw ConfigError("parabola-scan: need at least 2 points per axis");

    std::vector<double> bs(a.b_points), aobs(a.a_points);
    for (int i = 0; i < a.b_points; ++i)
        bs[i] = a.b_from * std::pow(a.b_to / a.b_from,
                                    static_cast<double>(i) / (a.b_points - 1));
    for (int i = 0; i < a.a_points; ++i)
        aobs[i] = a.a_rel_from * std::pow(a.a_rel_to / a.a_rel_from,
                                          static_cast<double>(i) / (a.a_points - 1));

    const double kappa = a.kappa > 0 ? a.kappa : kappa_default();
    FocusQuadrature quad;
    quad.quad_rel_tol = a.quad_tol;
    quad.merge_margin_frac = a.margin;

    OutputSink sink(g.out);
    std::ostream& os = sink.stream();
    if (!g.no_timestamp) os << timestamp_line() << "\n";
    os << "# parabola-scan medium=" << g.medium << " gamma=" << fmt17(a.gamma)
       << " aperture=" << fmt17(a.aperture) << " kappa=" << fmt17(kappa)
       << " margin=" << fmt17(a.margin) << "\n";
    os << "a,b,gamma,value,abs_error,n_ray_failures\n";

    std::vector<ScanPoint> points;
    ScalingFit fit;
    try {
        fit = extract_C(medium, a.aperture, bs, aobs, a.gamma, kappa, quad, &points);
        for (const ScanPoint& p : points)
            os << fmt17(p.a) << "," << fmt17(p.b) << "," << fmt17(p.gamma) << ","
               << fmt17(p.value) << "," << fmt17(p.abs_error) << "," << p.n_ray_failures
               << "\n";
    } catch (const NumericalError& e) {
        for (const ScanPoint& p : points)
            os << fmt17(p.a) << "," << fmt17(p.b) << "," << fmt17(p.gamma) << ","
               << fmt17(p.value) << "," << fmt17(p.abs_error) << "," << p.n_ray_failures
               << "\n";
        os << "# error: " << e.what() << "\n";
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return kExitNumerical;
    }

    json summary{{"slope_a", fit.slope_a},
                 {"slope_b", fit.slope_b},
                 {"C", fit.C},
                 {"residual", fit.residual},
                 {"n_points", fit.n_points}};
    // The summary goes to stdout; when the CSV is also on stdout it follows
    // the table as a single JSON line.
    std::cout << summary.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// media

int run_media(const GlobalOpts& g, const std::string& action) {
    const MediumRegistry reg = load_registry(g);
    OutputSink sink(g.out);
    std::ostream& os = sink.stream();

    if (action == "validate") {
        json warnings = json::array();
        for (const auto& name : reg.names())
            for (const auto& w : reg.warnings_for(name)) warnings.push_back(w);
        json doc{{"command", "media validate"},
                 {"config", g.config.empty() ? json(nullptr) : json(g.config)},
                 {"entries", reg.size()},
                 {"warnings", warnings},
                 {"ok", true}};
        os << doc.dump(2) << "\n";
        return 0;
    }

    if (g.format == "json") {
        json media = json::object();
        for (const auto& name : reg.names()) {
            const FluidMedium& m = reg.at(name);
            media[name] = {{"rho0", m.rho0},
                          {"c_sound", m.c_sound},
                          {"eta", m.eta},
                          {"depsilon", m.depsilon},
                          {"temperature", m.temperature},
                          {"builtin", reg.is_builtin(name)},
                          {"warnings", reg.warnings_for(name)}};
        }
        os << json{{"command", "media list"}, {"media", media}}.dump(2) << "\n";
    } else {
        if (!g.no_timestamp) os << timestamp_line() << "\n";
        os << "name,rho0,c_sound,eta,depsilon,temperature,builtin\n";
        for (const auto& name : reg.names()) {
            const FluidMedium& m = reg.at(name);
            os << name << "," << fmt17(m.rho0) << "," << fmt17(m.c_sound) << ","
               << fmt17(m.eta) << "," << fmt17(m.depsilon) << "," << fmt17(m.temperature)
               << "," << (reg.is_builtin(name) ? 1 : 0) << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum density-fluctuation observables of a linear-dispersion "
                 "phonon field"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--medium", g.medium, "medium name (default water_293K)");
    app.add_option("--config", g.config, "media config JSON file");
    app.add_option("--format", g.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--tol", g.tol, "relative tolerance for sums/quadrature")
        ->check(CLI::PositiveNumber);
    app.add_flag("--no-timestamp", g.no_timestamp, "suppress the timestamp comment line");

    ProfileArgs pa;
    auto* profile = app.add_subcommand("profile", "sweep a geometry parameter");
    pa.geo.attach(profile);
    profile->add_option("--sweep", pa.sweep_param, "geometry parameter to sweep")
        ->required();
    profile->add_option("--from", pa.from)->required();
    profile->add_option("--to", pa.to)->required();
    profile->add_option("--points", pa.points)->required();
    profile->add_flag("--log", pa.log_spacing, "geometric spacing");
    profile->add_option("--method", pa.method, "closed | image");

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle-check",
                                      "closed form vs independent oracle comparison");
    oa.geo.attach(oracle, false);
    oracle->add_option("--target", oa.target, "geometry | freefield");

    ScatteringArgs sa;
    auto* scat = app.add_subcommand("scattering", "zero-point Brillouin scattering");
    scat->add_option("--lambda", sa.lambda, "light wavelength, m");
    scat->add_option("--omega", sa.omega, "light angular frequency, rad/s");
    scat->add_option("--theta", sa.theta, "scattering angle, rad (default pi)");
    scat->add_option("--pol-dot", sa.pol_dot, "polarization product");
    scat->add_option("--scat-volume", sa.scat_volume, "scattering volume, m^3");
    scat->add_flag("--omega-in-medium", sa.omega_in_medium,
                   "interpret the wavelength with the in-medium convention");

    SqueezedArgs qa;
    auto* sq = app.add_subcommand("squeezed-profile",
                                  "squeezed-vacuum density variance along z");
    sq->add_option("--r", qa.r, "squeeze magnitude")->required();
    sq->add_option("--delta", qa.delta, "squeeze phase, rad");
    sq->add_option("--k", qa.k, "mode wave number, 1/m")->required();
    sq->add_option("--volume", qa.volume, "quantization volume, m^3");
    sq->add_option("--t", qa.t, "time, s");
    sq->add_option("--z-max", qa.z_max, "profile extent, m (default one wavelength)");
    sq->add_option("--points", qa.points, "sample count");

    double casimir_gap = 0;
    auto* cas = app.add_subcommand("casimir-force", "parallel-plate force per area");
    cas->add_option("--gap", casimir_gap, "plate separation, m")->required();

    ParabolaArgs ba;
    auto* pb = app.add_subcommand("parabola-scan",
                                  "near-focus scaling scan for a parabolic mirror");
    pb->add_option("--aperture", ba.aperture, "aperture half angle, rad");
    pb->add_option("--gamma", ba.gamma, "field point angle, rad");
    pb->add_option("--b-from", ba.b_from);
    pb->add_option("--b-to", ba.b_to);
    pb->add_option("--b-points", ba.b_points);
    pb->add_option("--a-rel-from", ba.a_rel_from, "a/b lower end");
    pb->add_option("--a-rel-to", ba.a_rel_to, "a/b upper end");
    pb->add_option("--a-points", ba.a_points);
    pb->add_option("--kappa", ba.kappa, "geometric-optics prefactor (default 4/5pi^3)");
    pb->add_option("--margin", ba.margin, "merge-point angular margin fraction");
    pb->add_option("--quad-tol", ba.quad_tol, "quadrature relative tolerance");

    std::string media_action = "list";
    auto* media = app.add_subcommand("media", "list or validate media definitions");
    media->add_option("action", media_action, "list | validate")
        ->check(CLI::IsMember({"list", "validate"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (profile->parsed()) return run_profile(g, pa);
        if (oracle->parsed()) {
            if (oa.target != "freefield" && oa.geo.kind.empty())
                throw ConfigError("oracle-check: --geometry required (or --target freefield)");
            return run_oracle_check(g, oa);
        }
        if (scat->parsed()) return run_scattering(g, sa);
        if (sq->parsed()) return run_squeezed(g, qa);
        if (cas->parsed()) return run_casimir(g, casimir_gap);
        if (pb->parsed()) return run_parabola_scan(g, ba);
        if (media->parsed()) return run_media(g, media_action);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
