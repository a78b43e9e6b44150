#pragma once

// The second family: future cone u3 >= |(u1, u2)|, metric w1^2 + w2^2 - w3^2/eps^2.
// The commutant is timelike here, so the system has closed causal loops, is
// globally controllable and admits no length maximizers. Normal extremals sit on
//   h1 = sinh(theta) cos(phi), h2 = sinh(theta) sin(phi), eps h3 = -cosh(theta).

#include <optional>
#include <vector>

#include "heislor/controls.hpp"
#include "heislor/family_one.hpp"
#include "heislor/group.hpp"

namespace heislor {

struct ChartPoint2 {
  double theta = 0.0;
  double phi = 0.0;
  double t = 0.0;
};

Covector chart_covector2(Epsilon eps, double theta, double phi) noexcept;

GroupElement exp2(Epsilon eps, const ChartPoint2& p);

/// Closed-form endpoint of the family-two Hamiltonian flow from any covector with
/// h3 != 0 or h3 == 0 (series branch); the z coefficient uses h1^2 + h2^2, so it
/// covers normal (H = -1/2) and abnormal (H = 0) extremals alike.
GroupElement extremal2_endpoint(Epsilon eps, const Covector& h0, double t);

/// Lightlike trajectory with initial direction (h1, h2) (normalized internally)
/// and h3 = -1/eps. Throws InvalidArgument on a zero direction.
GroupElement abnormal2(Epsilon eps, double h1, double h2, double t);

struct PmpSurfaceGrid {
  int phi_count = 33;
  double h3_min = -4.0;
  double h3_max = -1.0;
  int h3_count = 25;
};

enum class PmpZReading {
  Adopted,  ///< ... - eps^2 h3, i.e. -eps^2 tau at t = 1
  Printed,  ///< ... - eps^2 h3^2
};

struct PmpSample {
  Covector covector;  ///< generating covector, h1^2 + h2^2 - eps^2 h3^2 = -1
  GroupElement point;
};

/// Time-one endpoints of normal extremals, row-major in (h3, phi).
/// Throws InvalidArgument unless every h3 <= -1/eps.
std::vector<PmpSample> pmp_surface2(Epsilon eps, const PmpSurfaceGrid& grid,
                                    PmpZReading reading = PmpZReading::Adopted);

struct Jacobian2 {
  double jacobian = 0.0;  ///< d(x,y,z)/d(theta, phi, tau)
  double f = 0.0;
};

Jacobian2 jacobian2(Epsilon eps, double theta, double tau) noexcept;

/// 2 pi / |h3| = 2 pi eps / cosh(theta).
double first_conjugate_time2(Epsilon eps, double theta) noexcept;

struct ConjugateScanSpec {
  double theta_min = 0.0;
  double theta_max = 2.0;
  int theta_count = 8;
  double tau_min = 0.0;  ///< |tau|; the flow itself runs with tau = h3 t <= 0
  double tau_max = 7.0;
  int tau_count = 701;
  double phi = 0.0;
  double fd_step = 1e-5;
};

struct PredictedConjugate {
  int n = 0;
  double z = 0.0;  ///< 2 pi n eps^2
};

struct ConjugateReport {
  double theta = 0.0;
  /// |tau| at which the Cartesian finite-difference Jacobian vanishes.
  std::vector<double> tau_zeros;
  /// |tau| at which the printed f(theta, tau) vanishes.
  std::vector<double> f_zeros;
  std::vector<PredictedConjugate> predicted;
};

/// Throws InvalidArgument when either grid count is below 8.
std::vector<ConjugateReport> conjugate_scan(Epsilon eps, const ConjugateScanSpec& spec);

/// Zeros of a sampled function: sign changes (linearly interpolated) and
/// tangential zeros (local minima of |f| below rel_floor * max|f|).
std::vector<double> sampled_zeros(const std::vector<double>& xs, const std::vector<double>& fs,
                                  double rel_floor = 1e-5);

struct PeriodicPlan {
  double eps = 1.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  Control third_control;
  std::vector<GroupElement> waypoints;  ///< q(t1), q(t2), q(t3)
  double lorentz_length = 0.0;

  PiecewiseControl controls() const;
};

/// Three-segment loop through the origin: (1,0,1) on [0,t1], (0,-1,1) on (t1,t2],
/// then the constant control that closes the loop in unit time.
/// Throws NotAdmissible when q(t2) is not strictly inside z <= -eps |(x,y)|.
PeriodicPlan periodic_plan(Epsilon eps, double t1, double t2);

/// Plan at (6 eps, 15 eps).
PeriodicPlan default_periodic_plan(Epsilon eps);

/// Smallest t2 on a 1e-3 * eps grid beyond t1 (plus one grid step of margin)
/// for which the plan is admissible. Throws NotAdmissible if none below t2_max.
double find_admissible_t2(Epsilon eps, double t1, double t2_max = 1e4);

/// Point reached after the two lightlike segments.
GroupElement lightlike_excursion(Epsilon eps, double t1, double t2) noexcept;

/// Admissible piecewise-constant control steering the identity to q1.
/// Throws PlanFailure when the excursion search is exhausted.
PiecewiseControl reach_plan(Epsilon eps, const GroupElement& q1);

/// True iff q lies in { z >= eps |(x, y)| } (strict interior if `strict`).
bool in_chord_cone(Epsilon eps, const GroupElement& q, bool strict = false) noexcept;

}  // namespace heislor
