#pragma once

// Brute-force validators independent of the closed forms: fixed-step RK4 on the
// full Hamiltonian system, constant-control integration, central-difference
// Jacobians of the endpoint map and the Lorentzian length functional.

#include <array>
#include <vector>

#include "heislor/controls.hpp"
#include "heislor/family_one.hpp"
#include "heislor/group.hpp"

namespace heislor {

struct Trajectory {
  std::vector<double> times;
  std::vector<GroupElement> points;
  /// Either one control per node (extremals, continuous control) or one per
  /// step interval (piecewise-constant plans); length_functional handles both.
  std::vector<Control> controls;
  /// Covector history, aligned with `points`; empty for control integrations.
  std::vector<Covector> covectors;
};

/// Which z-equation the extremal integrator uses.
enum class ZTerm {
  Adopted,  ///< z' = ... + eps u3 with the PMP control (eps^2 h3 / -eps^2 h3)
  Printed,  ///< the printed alternatives: + eps h3^2 (family one), - eps^2 h3^2 (family two)
};

/// Fixed step density of the golden tests: 1000 steps per unit time, at least one.
int steps_for(double t_end) noexcept;

/// PMP control u(h): (-h1, h2, eps h3) for FamilyOne, (h1, h2, -eps h3) for FamilyTwo.
Control pmp_control(FamilyTag family, Epsilon eps, const Covector& h) noexcept;

/// H = (-h1^2 + h2^2 + eps^2 h3^2)/2 (one) or (h1^2 + h2^2 - eps^2 h3^2)/2 (two).
double hamiltonian(FamilyTag family, Epsilon eps, const Covector& h) noexcept;

/// Classical RK4 on the vertical and horizontal system from the identity.
/// Throws InvalidArgument when steps < 1 or t_end < 0.
Trajectory integrate_extremal(FamilyTag family, Epsilon eps, const Covector& h0, double t_end,
                              int steps, ZTerm zterm = ZTerm::Adopted);

/// Endpoint only (no history), same integrator.
GroupElement extremal_endpoint(FamilyTag family, Epsilon eps, const Covector& h0, double t_end,
                               int steps, ZTerm zterm = ZTerm::Adopted);

/// RK4 through every segment of the plan. Each segment's endpoint is also
/// compared with the exact chord start * (u1 s, u2 s, eps u3 s); a mismatch
/// beyond 1e-10 * scale throws NoConvergence.
Trajectory integrate_control(Epsilon eps, const GroupElement& start, const PiecewiseControl& plan,
                             int steps_per_segment);

/// Orthonormal basis (e1, e2) of the tangent plane of {H = const} at h, with
/// e1 x e2 along grad H.
std::array<std::array<double, 3>, 2> level_tangent_basis(FamilyTag family, Epsilon eps,
                                                         const Covector& h);

/// Central-difference determinant det[dE/ds1, dE/ds2, dE/dt] of the endpoint
/// map (s1, s2 along level_tangent_basis). Step-halving disagreement beyond
/// 1e-6 relative throws IllConditioned.
double fd_jacobian(FamilyTag family, Epsilon eps, const Covector& h0, double t, double h_step = 1e-5);

/// Same determinant without the conditioning check.
double fd_jacobian_raw(FamilyTag family, Epsilon eps, const Covector& h0, double t, double h_step);

/// Determinant sampled along one extremal at increasing times (one integration
/// of each perturbed trajectory; step density 1000 per unit time).
std::vector<double> fd_jacobian_along(FamilyTag family, Epsilon eps, const Covector& h0,
                                      const std::vector<double>& times, double h_step);

/// det of the 2x2 matrix (e_i . dh/dtheta, e_i . dh/dphi) mapping chart angles to
/// the basis coordinates, for the family-one chart.
double chart_correction1(Epsilon eps, double theta, double phi);

/// Trapezoidal integral of the pointwise speed. Throws NotCausal when any
/// control leaves the family cone by more than 1e-12 (relative), and
/// InvalidArgument when the trajectory carries no controls.
double length_functional(const Trajectory& traj, Epsilon eps, FamilyTag family);

}  // namespace heislor
