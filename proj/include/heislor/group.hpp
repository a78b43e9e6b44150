#pragma once

// Heisenberg group in the global chart (x, y, z), its left-invariant frame
// X1 = d/dx - y/2 d/dz, X2 = d/dy + x/2 d/dz, X3 = d/dz, the dual coframe,
// and the two diagonal Lorentzian structures built on it.

#include <algorithm>
#include <array>
#include <cmath>

namespace heislor {

struct GroupElement {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline constexpr GroupElement kIdentity{0.0, 0.0, 0.0};

struct TangentVector {
  double dx = 0.0;
  double dy = 0.0;
  double dz = 0.0;
  GroupElement base{};
};

struct Control {
  double u1 = 0.0;
  double u2 = 0.0;
  double u3 = 0.0;

  friend bool operator==(const Control&, const Control&) = default;
};

/// Strictly positive, finite scaling of the vertical direction.
class Epsilon {
 public:
  explicit Epsilon(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// FamilyOne: cone u1 >= |(u2,u3)|, form -w1^2 + w2^2 + w3^2/eps^2.
/// FamilyTwo: cone u3 >= |(u1,u2)|, form  w1^2 + w2^2 - w3^2/eps^2.
enum class FamilyTag { FamilyOne, FamilyTwo };

enum class CommutantRegime { MaximizersExist, PeriodicNoMaximizers };

GroupElement group_mul(const GroupElement& a, const GroupElement& b) noexcept;
GroupElement group_inverse(const GroupElement& a) noexcept;

/// Velocity u1 X1 + u2 X2 + eps u3 X3 at q.
TangentVector dynamics(const GroupElement& q, const Control& u, Epsilon eps) noexcept;

/// Push-forward of v by the differential of left multiplication by a.
TangentVector left_translate(const GroupElement& a, const TangentVector& v) noexcept;

/// Coframe (w1, w2, w3) evaluated on v at v.base.
std::array<double, 3> coframe(const TangentVector& v) noexcept;

/// Cone membership, boundary included.
bool cone_contains(const Control& u, FamilyTag family) noexcept;

double lorentz_form(const TangentVector& v, Epsilon eps, FamilyTag family) noexcept;

/// Square root of the (clamped) timelike part of the control norm:
/// sqrt(u1^2 - u2^2 - u3^2) for FamilyOne, sqrt(u3^2 - u1^2 - u2^2) for FamilyTwo.
double control_speed(const Control& u, FamilyTag family) noexcept;

/// Decides existence of maximizers from the position of the commutant R X3
/// with respect to the future/past cones of the given structure.
CommutantRegime classify_commutant(Epsilon eps, FamilyTag family);

/// Maximum-norm distance between two points of the chart.
inline double max_norm_distance(const GroupElement& a, const GroupElement& b) noexcept {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double max_abs(const GroupElement& a) noexcept {
  return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)});
}

}  // namespace heislor
