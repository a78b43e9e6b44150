#include "heislor/group.hpp"

#include <algorithm>
#include <string>

#include "heislor/errors.hpp"

namespace heislor {

Epsilon::Epsilon(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidArgument("epsilon must be a finite positive number, got " + std::to_string(value));
  }
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) noexcept {
  return {a.x + b.x, a.y + b.y, a.z + b.z + (a.x * b.y - b.x * a.y) / 2.0};
}

GroupElement group_inverse(const GroupElement& a) noexcept { return {-a.x, -a.y, -a.z}; }

TangentVector dynamics(const GroupElement& q, const Control& u, Epsilon eps) noexcept {
  return {u.u1, u.u2, -0.5 * q.y * u.u1 + 0.5 * q.x * u.u2 + eps.value() * u.u3, q};
}

TangentVector left_translate(const GroupElement& a, const TangentVector& v) noexcept {
  // d/ds (a * q(s)) = (dx, dy, dz + (a.x dy - a.y dx) / 2)
  return {v.dx, v.dy, v.dz + 0.5 * (a.x * v.dy - a.y * v.dx), group_mul(a, v.base)};
}

std::array<double, 3> coframe(const TangentVector& v) noexcept {
  const double w3 = 0.5 * v.base.y * v.dx - 0.5 * v.base.x * v.dy + v.dz;
  return {v.dx, v.dy, w3};
}

bool cone_contains(const Control& u, FamilyTag family) noexcept {
  switch (family) {
    case FamilyTag::FamilyOne:
      return u.u1 >= std::hypot(u.u2, u.u3);
    case FamilyTag::FamilyTwo:
      return u.u3 >= std::hypot(u.u1, u.u2);
  }
  return false;
}

double lorentz_form(const TangentVector& v, Epsilon eps, FamilyTag family) noexcept {
  const auto [w1, w2, w3] = coframe(v);
  const double e = eps.value();
  switch (family) {
    case FamilyTag::FamilyOne:
      return -w1 * w1 + w2 * w2 + (w3 / e) * (w3 / e);
    case FamilyTag::FamilyTwo:
      return w1 * w1 + w2 * w2 - (w3 / e) * (w3 / e);
  }
  return 0.0;
}

double control_speed(const Control& u, FamilyTag family) noexcept {
  double s = 0.0;
  switch (family) {
    case FamilyTag::FamilyOne:
      s = u.u1 * u.u1 - u.u2 * u.u2 - u.u3 * u.u3;
      break;
    case FamilyTag::FamilyTwo:
      s = u.u3 * u.u3 - u.u1 * u.u1 - u.u2 * u.u2;
      break;
  }
  return std::sqrt(std::max(0.0, s));
}

namespace {

bool cone_interior(const Control& u, FamilyTag family) noexcept {
  switch (family) {
    case FamilyTag::FamilyOne:
      return u.u1 > std::hypot(u.u2, u.u3);
    case FamilyTag::FamilyTwo:
      return u.u3 > std::hypot(u.u1, u.u2);
  }
  return false;
}

}  // namespace

CommutantRegime classify_commutant(Epsilon eps, FamilyTag family) {
  // X3(q0) = eps * (1/eps) X3, i.e. the control (0, 0, 1/eps).
  const Control up{0.0, 0.0, 1.0 / eps.value()};
  const Control down{0.0, 0.0, -1.0 / eps.value()};
  // C u -C contains +X3 iff one of +-X3 lies in C.
  const bool inside = (cone_interior(up, family) || cone_interior(down, family));
  if (inside) return CommutantRegime::PeriodicNoMaximizers;
  if (!cone_contains(up, family) && !cone_contains(down, family)) {
    return CommutantRegime::MaximizersExist;
  }
  throw InvalidArgument("commutant lies on the light cone; the classifier does not apply");
}

}  // namespace heislor
