#pragma once

// The eps -> 0 limit: the sub-Lorentzian problem on x >= |y| with dz = 0 cone,
// its exponential map, and measured convergence of the eps-family towards it.

#include <vector>

#include "heislor/family_one.hpp"
#include "heislor/group.hpp"

namespace heislor {

struct ChartPoint0 {
  double psi = 0.0;
  double c = 0.0;
  double t = 0.0;
};

struct ConvergenceReport {
  std::vector<double> eps_values;
  std::vector<double> errors;
  /// exp_convergence: errors strictly decreasing; indicator_convergence:
  /// membership nonincreasing along decreasing eps.
  bool monotone = false;
  /// indicator_convergence only: membership in A_eps per entry.
  std::vector<bool> members;
};

struct TransferredAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// h1 = -cosh psi, h2 = sinh psi, h3 = c; closed form with series branch in ct.
GroupElement exp0(const ChartPoint0& p);

/// Chart angles with sinh(theta) cos(phi) = sinh(psi), sinh(theta) sin(phi) = eps c.
TransferredAngles transfer(Epsilon eps, double psi, double c) noexcept;

/// Tri-state test of x >= 0, 4|z| <= x^2 - y^2 (scale-relative tolerance).
RegionVerdict attain0(const GroupElement& q, double tol = kDefaultVerdictTol);

/// Throws InvalidArgument unless eps_list is strictly decreasing and positive.
ConvergenceReport indicator_convergence(const GroupElement& q, const std::vector<double>& eps_list);

ConvergenceReport exp_convergence(double psi, double c, double t, const std::vector<double>& eps_list);

struct LimitSphereGrid {
  double psi_min = -1.0;
  double psi_max = 1.0;
  int psi_count = 40;
  double c_min = -2.0;
  double c_max = 2.0;
  int c_count = 40;
};

/// max over sampled q in S_0(r) of min over sampled S_eps(r) of Euclidean distance.
double sphere_semicontinuity(double r, Epsilon eps, const LimitSphereGrid& grid = {});

/// The reverse one-sided deviation (max over S_eps of distance to S_0), reported as data only.
double sphere_upper_deviation(double r, Epsilon eps, const LimitSphereGrid& grid = {});

/// eps > 0: dx >= 0 and dx^2 >= dy^2 + dz^2/eps^2; eps == 0: dx >= |dy| and dz == 0.
/// Throws InvalidArgument on negative eps.
bool cone_indicator(const TangentVector& v, double eps);

}  // namespace heislor
