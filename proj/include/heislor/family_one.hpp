#pragma once

// The first family: future cone u1 >= |(u2, u3)|, metric -w1^2 + w2^2 + w3^2/eps^2.
// Normal extremals live on the hyperboloid sheet
//   h1 = -cosh(theta), h2 = sinh(theta) cos(phi), eps h3 = sinh(theta) sin(phi),
// and the attainable set from the identity is
//   D = { x >= |y|, |z| <= eps^2/2 (sinh tau + tau) },  tau = arcosh((x^2 - y^2)/(2 eps^2) + 1).

#include <array>
#include <optional>
#include <vector>

#include "heislor/group.hpp"

namespace heislor {

struct Covector {
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
};

struct ChartPoint1 {
  double theta = 0.0;
  double phi = 0.0;  ///< reduced to [0, 2 pi) on construction via make()
  double t = 0.0;

  static ChartPoint1 make(double theta, double phi, double t);
};

enum class RegionStatus { Interior, Boundary, Exterior };

const char* to_string(RegionStatus s) noexcept;

struct RegionVerdict {
  RegionStatus status = RegionStatus::Exterior;
  /// Positive outside: max(|y| - x, |z| - phi_eps(x, y)), whichever binds.
  double defect = 0.0;
  /// Boundary parameter tau when x >= |y|.
  std::optional<double> tau;
};

struct SurfaceSample {
  GroupElement point;
  double tau = 0.0;
  double alpha = 0.0;  ///< direction parameter of the lightlike covector
  /// Exterior normal of the sheet containing the point; absent at tau = 0.
  std::optional<std::array<double, 3>> normal;
};

struct SphereSpec {
  double radius = 1.0;
  double theta_min = 0.0;
  double theta_max = 2.0;
  int theta_count = 16;
  double phi_min = 0.0;
  double phi_max = 6.283185307179586;
  int phi_count = 32;
};

struct SphereSample {
  double theta = 0.0;
  double phi = 0.0;
  GroupElement point;
};

struct BoundaryHeight {
  double phi_eps = 0.0;
  double tau = 0.0;
};

enum class Direction { Future, Past };

/// Relative verdict tolerance; absolute tolerance is tol * max(1, |x|, |y|, |z|).
inline constexpr double kDefaultVerdictTol = 1e-9;

/// Point of the normal-covector hyperboloid {H = -1/2} for given chart angles.
Covector chart_covector1(Epsilon eps, double theta, double phi) noexcept;

GroupElement exp1(Epsilon eps, const ChartPoint1& p);

/// exp1 together with its exact Jacobian d(x,y,z)/d(theta, phi, t) (columns in that order).
struct Exp1WithJacobian {
  GroupElement point;
  std::array<std::array<double, 3>, 3> jacobian;  ///< jacobian[row][col]
};
Exp1WithJacobian exp1_with_jacobian(Epsilon eps, const ChartPoint1& p);

double hamiltonian1(Epsilon eps, const Covector& h) noexcept;

/// Closed-form vertical flow: hyperbolic rotation of (h1, h2) by tau = h3 t.
Covector vertical_flow1(Epsilon eps, const Covector& h0, double t) noexcept;

/// Closed-form determinant d(x,y,z)/d(tau, theta, phi) of the chart map.
/// Throws ChartSingular when sin(phi) sinh(theta) == 0.
double jacobian1_tau(Epsilon eps, const ChartPoint1& p);

/// Closed-form determinant d(x,y,z)/d(t, theta, phi) = h3 * jacobian1_tau.
double jacobian1(Epsilon eps, const ChartPoint1& p);

/// Readings of the printed tau-Jacobian bracket, kept for the discrepancy report.
enum class Jacobian1Reading {
  Printed,          ///< tau sin tau + (2 - cosh tau + tau sinh tau)/(...)
  HyperbolicOnly,   ///< tau sinh tau + (2 - cosh tau + tau sinh tau)/(...)
  Derived,          ///< tau sinh tau + (2 - 2 cosh tau + tau sinh tau)/(...)
};
double jacobian1_tau_reading(Epsilon eps, const ChartPoint1& p, Jacobian1Reading reading);

/// Throws OutsideCausalShadow when x < |y|.
BoundaryHeight boundary_height(Epsilon eps, double x, double y);

RegionVerdict attain_region1(Epsilon eps, const GroupElement& q, double tol = kDefaultVerdictTol);

RegionVerdict attain_translated(Epsilon eps, const GroupElement& q1, const GroupElement& q,
                                Direction direction, double tol = kDefaultVerdictTol);

/// Lorentzian distance from the identity; empty outside the attainable set.
/// Throws NoConvergence if the scalar root solve fails.
std::optional<double> distance1(Epsilon eps, const GroupElement& q, double tol = kDefaultVerdictTol);

/// Preimage in N = {theta > 0, phi in (0, pi), tau > 0} of an interior point with z > 0.
/// Throws InvalidArgument outside that set and NoConvergence on solver failure.
ChartPoint1 invert_exp1(Epsilon eps, const GroupElement& q, double tol = kDefaultVerdictTol);

/// Row-major (theta outer, phi inner) samples of exp1(theta, phi, r).
std::vector<SphereSample> sphere1(Epsilon eps, const SphereSpec& spec);

struct LightlikeGrid {
  double alpha_min = -2.0;
  double alpha_max = 2.0;
  int alpha_count = 21;
  double tau_max = 4.0;
  int tau_count = 21;
  bool both_sheets = false;  ///< also emit the z <= 0 mirror sheet
};

/// Samples of the boundary surface S swept by lightlike (abnormal) extremals.
/// Row-major in (alpha, tau); the mirror sheet, if requested, follows.
std::vector<SurfaceSample> lightlike_surface1(Epsilon eps, const LightlikeGrid& grid);

/// Single lightlike sample on the z >= 0 sheet.
SurfaceSample lightlike_point1(Epsilon eps, double alpha, double tau);

}  // namespace heislor
