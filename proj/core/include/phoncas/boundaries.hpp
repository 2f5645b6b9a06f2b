#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "phoncas/medium.hpp"

namespace phoncas {

// ---------------------------------------------------------------------------
// Geometries with Neumann (impenetrable) boundaries.

struct HalfSpace {
    double z = 0; // distance to the plane, m
};

struct ParallelSlab {
    double a = 0; // plate gap, m
    double z = 0; // distance to the nearer plate, 0 < z < a
};

struct Torus3 {
    double L1 = 0, L2 = 0, L3 = 0; // periodicity lengths, m
};

struct Wedge {
    double alpha = 0; // opening angle, rad, in (0, 2pi)
    double r = 0;     // distance to the edge, m
    double theta = 0; // polar angle inside the wedge, in (0, alpha)
};

struct ConicalSpace {
    double alpha = 0; // total angle, rad, in (0, 2pi]
    double r = 0;     // distance to the apex, m
};

using Geometry = std::variant<HalfSpace, ParallelSlab, Torus3, Wedge, ConicalSpace>;

void validate_geometry(const Geometry& g); // throws ConfigError on bad ranges
std::string geometry_name(const Geometry& g);

// ---------------------------------------------------------------------------
// Results.

enum class VarianceMethod {
    closed_form_as_printed,
    closed_form_corrected,
    image_sum,
    geometric_optics
};

std::string to_string(VarianceMethod m);

struct DensityVariance {
    double value = 0; // kg^2 m^-6, negative for every boundary geometry here
    VarianceMethod method = VarianceMethod::closed_form_as_printed;
    double abs_error = 0;
    std::vector<std::string> notes;
};

// Image points seen from the observation point. Finite families carry the
// explicit distances; lattice families are described by their truncation.
struct ImageSet {
    enum class Kind { reflection, rotation, translation_lattice };
    Kind kind = Kind::reflection;
    std::vector<double> distances; // finite families only; identity excluded
    double truncation_radius = 0;  // m, realized cutoff for lattice families
    double tail_bound = 0;         // kg^2 m^-6 bound on the omitted remainder
    long image_count = 0;          // images actually summed
};

// ---------------------------------------------------------------------------
// Operations.

// Attractive force per unit area between two parallel plates,
// hbar c_S pi^2 / (480 a^4).
struct CasimirPressure {
    double value = 0; // Pa, magnitude
    bool attractive = true;
};
CasimirPressure casimir_pressure(const FluidMedium& medium, double a);

// Electromagnetic perfect-plate reference, hbar c pi^2 / (240 a^4).
double em_plate_pressure(double a);

// Reference asymptotics of <E^2>, <B^2> near a plane interface,
// Lorentz-Heaviside units (context curves for comparison plots).
enum class InterfaceModel { perfect, plasma };
struct EmAsymptotics {
    double E2 = 0;
    double B2 = 0;
};
EmAsymptotics em_interface_asymptotics(double z, double omega_p, InterfaceModel model);

// Closed-form boundary shifts as printed, one per geometry (the slab
// additionally has the corrected form; see variance_closed).
double halfspace_closed_value(const FluidMedium& medium, double z);
double slab_closed_printed_value(const FluidMedium& medium, double a, double z);
double slab_closed_corrected_value(const FluidMedium& medium, double a, double z);
double wedge_closed_printed_value(const FluidMedium& medium, const Wedge& w);
double cone_closed_value(const FluidMedium& medium, const ConicalSpace& c);

// Direct expanding-shell evaluation of the torus lattice sum
// sum' (l^2 L1^2 + m^2 L2^2 + n^2 L3^2)^-2 with an integral-comparison tail
// bound. Exposed for convergence diagnostics; shells are summed in radius
// order with a fixed interior order, so results are reproducible.
struct LatticeSumResult {
    double sum = 0;        // 1/m^4
    double tail_bound = 0; // 1/m^4
    long terms = 0;
    int shells = 0;
};
LatticeSumResult torus_shell_sum(const Torus3& t, int max_shell);

// Closed-form (as printed) boundary shift for any geometry. For the slab the
// primary value is the corrected closed form (pi^2 times the printed one,
// fixed by the image-lattice derivation) and the printed value is kept in the
// notes. For the torus the printed form is itself a lattice sum evaluated by
// expanding shells with extrapolation to the quoted tolerance.
DensityVariance variance_closed(const FluidMedium& medium, const Geometry& g,
                                double rel_tol = 1e-8);

// Is there an image construction? Empty optional = yes; otherwise the reason.
std::optional<std::string> image_admissibility(const Geometry& g);

// Generic method-of-images evaluation: -(hbar rho0 c_S / 2 pi^2) sum_i d_i^-4
// over the image family (all Neumann, weight +1). Throws
// UnsupportedGeometryError if the geometry admits no image construction.
struct ImageSumOptions {
    double rel_tol = 1e-8;
    int base_shell = 0; // lattice families: 0 = choose from rel_tol
};
DensityVariance variance_image_sum(const FluidMedium& medium, const Geometry& g,
                                   const ImageSumOptions& opts, ImageSet* out = nullptr);
DensityVariance variance_image_sum(const FluidMedium& medium, const Geometry& g,
                                   double rel_tol = 1e-8);

ImageSet build_image_set(const Geometry& g, double rel_tol = 1e-8);

// ---------------------------------------------------------------------------
// Closed-form vs image-sum comparison.

enum class Verdict { consistent, constant_factor, disagrees };
std::string to_string(Verdict v);

struct DiscrepancyReport {
    double closed_as_printed = 0;
    std::optional<double> closed_corrected; // slab only
    double image_sum = 0;
    double ratio_printed_over_image = 0;
    std::optional<double> ratio_corrected_over_image;
    Verdict verdict = Verdict::consistent;
    // Ratio behaviour across a 10-point sweep of the geometry's shape
    // parameter; constant-factor requires spread <= 1e-6 relative.
    std::string sweep_parameter;
    int sweep_points = 0;
    double ratio_min = 0, ratio_max = 0;
    std::vector<std::string> notes;
};

DiscrepancyReport discrepancy_report(const FluidMedium& medium, const Geometry& g,
                                     double rel_tol = 1e-8);

} // namespace phoncas
