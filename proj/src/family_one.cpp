#include "heislor/family_one.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <boost/math/tools/roots.hpp>

#include "heislor/detail/dual.hpp"
#include "heislor/detail/entire.hpp"
#include "heislor/errors.hpp"

namespace heislor {

namespace {

using detail::Dual;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Closed-form endpoint, generic over the scalar so duals give the Jacobian.
// x = t(-a S(tau) + b C(tau)), y = t(b S(tau) - a C(tau)),
// z = t^2 Z(tau)/2 + eps^2 (sinh tau + tau)/2 with S, C, Z the removable-singularity
// quotients sinh(tau)/tau, (cosh(tau)-1)/tau, (sinh(tau)-tau)/tau^2.
template <class T>
std::array<T, 3> endpoint(double eps, const T& a, const T& b, const T& tau, const T& t) {
  using std::sinh;
  const T s = detail::sinhc(tau);
  const T c = detail::coshm1c(tau);
  const T x = t * (b * c - a * s);
  const T y = t * (b * s - a * c);
  const T z = 0.5 * t * t * detail::sinhmc(tau) + 0.5 * eps * eps * (sinh(tau) + tau);
  return {x, y, z};
}

template <class T>
std::array<T, 3> exp1_eval(double eps, const T& theta, const T& phi, const T& t) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  const T sh = sinh(theta);
  const T a = -cosh(theta);
  const T b = sh * cos(phi);
  const T h3 = sh * sin(phi) / eps;
  return endpoint(eps, a, b, h3 * t, t);
}

// Same map in the (theta, phi, tau) coordinates of N; requires h3 != 0.
template <class T>
std::array<T, 3> exp1_tau_eval(double eps, const T& theta, const T& phi, const T& tau) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  const T sh = sinh(theta);
  const T a = -cosh(theta);
  const T b = sh * cos(phi);
  const T h3 = sh * sin(phi) / eps;
  return endpoint(eps, a, b, tau, tau / h3);
}

// 2 - 2 cosh(tau) + tau sinh(tau), which behaves like tau^4/12 at the origin.
double conjugate_bracket(double tau) {
  if (std::abs(tau) >= 1.0) {
    const double s = std::sinh(0.5 * tau);
    return tau * std::sinh(tau) - 4.0 * s * s;
  }
  // sum_{k>=2} (2k-2)/(2k)! tau^{2k}
  const double u = tau * tau;
  double power = u;  // tau^{2k}
  double fact = 2.0;  // (2k)!
  double sum = 0.0;
  for (int k = 2; k <= 14; ++k) {
    power *= u;
    fact *= static_cast<double>((2 * k - 1) * (2 * k));
    sum += static_cast<double>(2 * k - 2) / fact * power;
  }
  return sum;
}

double verdict_scale(const GroupElement& q) { return std::max(1.0, max_abs(q)); }

struct NewtonResult {
  double theta = 0.0;
  double phi = 0.0;
  double tau = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  bool converged = false;
};

bool inside_n(double theta, double phi, double tau) {
  return theta > 0.0 && phi > 0.0 && phi < std::numbers::pi && tau > 0.0 && std::isfinite(theta) &&
         std::isfinite(tau);
}

double residual_at(double eps, const GroupElement& q, double theta, double phi, double tau) {
  const auto p = exp1_tau_eval<double>(eps, theta, phi, tau);
  const double r = std::max({std::abs(p[0] - q.x), std::abs(p[1] - q.y), std::abs(p[2] - q.z)});
  return std::isfinite(r) ? r : std::numeric_limits<double>::infinity();
}

// Damped Newton on exp1(theta, phi, tau) = q inside N, halving the step until
// the residual decreases and the iterate stays in N.
NewtonResult newton_in_n(double eps, const GroupElement& q, double theta, double phi, double tau,
                         double abs_tol, int max_iter = 100) {
  NewtonResult best{theta, phi, tau, residual_at(eps, q, theta, phi, tau), false};
  for (int it = 0; it < max_iter && best.residual > abs_tol; ++it) {
    using D = Dual<3>;
    const auto f = exp1_tau_eval<D>(eps, D::variable(best.theta, 0), D::variable(best.phi, 1),
                                    D::variable(best.tau, 2));
    Eigen::Matrix3d jac;
    Eigen::Vector3d res;
    const double target[3] = {q.x, q.y, q.z};
    for (int i = 0; i < 3; ++i) {
      res(i) = f[i].v - target[i];
      for (int j = 0; j < 3; ++j) jac(i, j) = f[i].d[j];
    }
    const Eigen::Vector3d step = jac.fullPivLu().solve(-res);
    if (!step.allFinite()) break;
    double lambda = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 40; ++halving, lambda *= 0.5) {
      const double th = best.theta + lambda * step(0);
      const double ph = best.phi + lambda * step(1);
      const double ta = best.tau + lambda * step(2);
      if (!inside_n(th, ph, ta)) continue;
      const double r = residual_at(eps, q, th, ph, ta);
      if (r < best.residual) {
        best = {th, ph, ta, r, false};
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  best.converged = best.residual <= abs_tol;
  return best;
}

ChartPoint1 to_chart(double eps, double theta, double phi, double tau) {
  const double h3 = std::sinh(theta) * std::sin(phi) / eps;
  return ChartPoint1::make(theta, phi, tau / h3);
}

}  // namespace

ChartPoint1 ChartPoint1::make(double theta, double phi, double t) {
  if (!(t >= 0.0)) throw InvalidArgument("chart time must be nonnegative");
  return {theta, reduce_angle(phi), t};
}

const char* to_string(RegionStatus s) noexcept {
  switch (s) {
    case RegionStatus::Interior:
      return "interior";
    case RegionStatus::Boundary:
      return "boundary";
    case RegionStatus::Exterior:
      return "exterior";
  }
  return "?";
}

Covector chart_covector1(Epsilon eps, double theta, double phi) noexcept {
  const double sh = std::sinh(theta);
  return {-std::cosh(theta), sh * std::cos(phi), sh * std::sin(phi) / eps.value()};
}

GroupElement exp1(Epsilon eps, const ChartPoint1& p) {
  const auto r = exp1_eval<double>(eps.value(), p.theta, p.phi, p.t);
  return {r[0], r[1], r[2]};
}

Exp1WithJacobian exp1_with_jacobian(Epsilon eps, const ChartPoint1& p) {
  using D = Dual<3>;
  const auto r = exp1_eval<D>(eps.value(), D::variable(p.theta, 0), D::variable(p.phi, 1),
                              D::variable(p.t, 2));
  Exp1WithJacobian out{{r[0].v, r[1].v, r[2].v}, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.jacobian[i][j] = r[i].d[j];
  return out;
}

double hamiltonian1(Epsilon eps, const Covector& h) noexcept {
  const double e = eps.value();
  return 0.5 * (-h.h1 * h.h1 + h.h2 * h.h2 + e * e * h.h3 * h.h3);
}

Covector vertical_flow1(Epsilon, const Covector& h0, double t) noexcept {
  const double tau = h0.h3 * t;
  const double c = std::cosh(tau);
  const double s = std::sinh(tau);
  return {h0.h1 * c - h0.h2 * s, h0.h2 * c - h0.h1 * s, h0.h3};
}

double jacobian1_tau_reading(Epsilon eps, const ChartPoint1& p, Jacobian1Reading reading) {
  const double sp = std::sin(p.phi);
  const double sh = std::sinh(p.theta);
  if (sp * sh == 0.0) throw ChartSingular("jacobian1: chart is singular where sin(phi) sinh(theta) = 0");
  const double e = eps.value();
  const double tau = sh * sp / e * p.t;
  const double s2 = sp * sp * sh * sh;
  const double pref = e * e * e * e / (sp * sp * sp * sh * sh);
  switch (reading) {
    case Jacobian1Reading::Printed:
      return pref * (tau * std::sin(tau) + (2.0 - std::cosh(tau) + tau * std::sinh(tau)) / s2);
    case Jacobian1Reading::HyperbolicOnly:
      return pref * (tau * std::sinh(tau) + (2.0 - std::cosh(tau) + tau * std::sinh(tau)) / s2);
    case Jacobian1Reading::Derived:
      return pref * (tau * std::sinh(tau) + conjugate_bracket(tau) / s2);
  }
  return 0.0;
}

double jacobian1_tau(Epsilon eps, const ChartPoint1& p) {
  return jacobian1_tau_reading(eps, p, Jacobian1Reading::Derived);
}

double jacobian1(Epsilon eps, const ChartPoint1& p) {
  const double h3 = std::sinh(p.theta) * std::sin(p.phi) / eps.value();
  return h3 * jacobian1_tau(eps, p);
}

BoundaryHeight boundary_height(Epsilon eps, double x, double y) {
  if (x < std::abs(y)) throw OutsideCausalShadow("boundary_height: requires x >= |y|");
  const double e = eps.value();
  const double w = (x - std::abs(y)) * (x + std::abs(y));
  // cosh(tau) - 1 = 2 sinh^2(tau/2) = w / (2 eps^2)
  const double tau = 2.0 * std::asinh(std::sqrt(w) / (2.0 * e));
  return {0.5 * e * e * (std::sinh(tau) + tau), tau};
}

RegionVerdict attain_region1(Epsilon eps, const GroupElement& q, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("attain_region1: tol must be positive");
  const double atol = tol * verdict_scale(q);
  const double gap = q.x - std::abs(q.y);
  if (gap < -atol) return {RegionStatus::Exterior, -gap, std::nullopt};

  const double xs = std::max(q.x, std::abs(q.y));
  const BoundaryHeight bh = boundary_height(eps, xs, q.y);
  const double zdef = std::abs(q.z) - bh.phi_eps;
  RegionVerdict v{RegionStatus::Interior, std::max(-gap, zdef), bh.tau};
  if (zdef > atol) {
    v.status = RegionStatus::Exterior;
  } else if (std::abs(gap) <= atol || std::abs(zdef) <= atol) {
    v.status = RegionStatus::Boundary;
  }
  return v;
}

RegionVerdict attain_translated(Epsilon eps, const GroupElement& q1, const GroupElement& q,
                                Direction direction, double tol) {
  GroupElement p = group_mul(group_inverse(q1), q);
  // The causal past is the image of the future under q -> q^{-1}.
  if (direction == Direction::Past) p = group_inverse(p);
  return attain_region1(eps, p, tol);
}

std::optional<double> distance1(Epsilon eps, const GroupElement& q, double tol) {
  const RegionVerdict v = attain_region1(eps, q, tol);
  if (v.status == RegionStatus::Exterior) return std::nullopt;
  if (v.status == RegionStatus::Boundary) return 0.0;

  const double scale = verdict_scale(q);
  const double w = (q.x - std::abs(q.y)) * (q.x + std::abs(q.y));
  const double az = std::abs(q.z);
  if (az <= tol * scale) return std::sqrt(w);

  // On the normal extremal through q, with c = cosh(tau):
  //   x^2 - y^2 = 2 (c - 1)(1/h3^2 + eps^2)  and
  //   |z| = (w/4)(sinh tau - tau)/(c - 1) + eps^2 tau =: g(tau),
  // g increasing from 0 at tau = 0 to phi_eps at the boundary parameter.
  const double e = eps.value();
  const double e2 = e * e;
  const double tau_b = *v.tau;
  auto g = [&](double tau) {
    if (tau <= 0.0) return -az;
    return 0.25 * w * tau * detail::sinhmc(tau) / detail::coshm1c(tau) + e2 * tau - az;
  };
  std::uintmax_t max_iter = 300;
  const double g_hi = g(tau_b);
  if (!(g_hi > 0.0)) return 0.0;
  const auto bracket = boost::math::tools::toms748_solve(
      g, 0.0, tau_b, -az, g_hi, boost::math::tools::eps_tolerance<double>(52), max_iter);
  const double tau = 0.5 * (bracket.first + bracket.second);

  const double cm1 = tau * detail::coshm1c(tau);  // cosh(tau) - 1
  const double inv_h3_sq = std::max(0.0, w / (2.0 * cm1) - e2);
  const double t = tau * std::sqrt(inv_h3_sq);
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw NoConvergence("distance1: degenerate scalar root", std::abs(g(tau)));
  }

  // Reconstruct the chart point and verify the endpoint; polish if needed.
  const double h3 = tau / t;
  const double s = std::sinh(tau);
  const double det = -2.0 * cm1;  // (c - 1)^2 - s^2 = 2 - 2c
  const double b = h3 * (cm1 * q.x - s * std::abs(q.y)) / det;
  const double theta = std::asinh(std::hypot(b, e * h3));
  const double phi = std::atan2(e * h3, b);
  const double abs_tol = tol * scale;
  const GroupElement target{q.x, std::abs(q.y), az};
  double residual = residual_at(e, target, theta, phi, tau);
  if (residual <= abs_tol) return t;
  const NewtonResult polished = newton_in_n(e, target, theta, phi, tau, abs_tol, 20);
  if (!polished.converged) {
    throw NoConvergence("distance1: endpoint residual above tolerance", std::min(residual, polished.residual));
  }
  return to_chart(e, polished.theta, polished.phi, polished.tau).t;
}

ChartPoint1 invert_exp1(Epsilon eps, const GroupElement& q, double tol) {
  const RegionVerdict v = attain_region1(eps, q, tol);
  if (v.status != RegionStatus::Interior || !(q.z > 0.0)) {
    throw InvalidArgument("invert_exp1: target must be an interior point with z > 0");
  }
  const double e = eps.value();
  const double scale = verdict_scale(q);
  const double abs_tol = tol * scale;

  constexpr int kGrid = 32;
  const double theta_lo = 1e-3;
  const double theta_hi = 6.0;
  const double tau_lo = 1e-3;
  const double tau_hi = *v.tau + 1.0;
  struct Seed {
    double residual, theta, phi, tau;
  };
  std::vector<Seed> seeds;
  seeds.reserve(kGrid * kGrid * kGrid);
  for (int i = 0; i < kGrid; ++i) {
    const double theta = theta_lo * std::pow(theta_hi / theta_lo, i / (kGrid - 1.0));
    for (int j = 0; j < kGrid; ++j) {
      const double phi = std::numbers::pi * (j + 0.5) / kGrid;
      for (int k = 0; k < kGrid; ++k) {
        const double tau = tau_lo * std::pow(tau_hi / tau_lo, k / (kGrid - 1.0));
        seeds.push_back({residual_at(e, q, theta, phi, tau), theta, phi, tau});
      }
    }
  }
  constexpr std::size_t kTries = 8;
  std::partial_sort(seeds.begin(), seeds.begin() + kTries, seeds.end(),
                    [](const Seed& l, const Seed& r) { return l.residual < r.residual; });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < kTries; ++s) {
    const NewtonResult r = newton_in_n(e, q, seeds[s].theta, seeds[s].phi, seeds[s].tau, abs_tol);
    if (r.converged) return to_chart(e, r.theta, r.phi, r.tau);
    best = std::min(best, r.residual);
  }
  throw NoConvergence("invert_exp1: damped Newton did not reach the tolerance", best);
}

std::vector<SphereSample> sphere1(Epsilon eps, const SphereSpec& spec) {
  if (!(spec.radius > 0.0)) throw InvalidArgument("sphere1: radius must be positive");
  if (spec.theta_count < 2 || spec.phi_count < 2) throw InvalidArgument("sphere1: grid counts must be >= 2");
  std::vector<SphereSample> out;
  out.reserve(static_cast<std::size_t>(spec.theta_count) * spec.phi_count);
  for (int i = 0; i < spec.theta_count; ++i) {
    const double theta = spec.theta_min + (spec.theta_max - spec.theta_min) * i / (spec.theta_count - 1.0);
    for (int j = 0; j < spec.phi_count; ++j) {
      const double phi = spec.phi_min + (spec.phi_max - spec.phi_min) * j / (spec.phi_count - 1.0);
      const auto r = exp1_eval<double>(eps.value(), theta, phi, spec.radius);
      out.push_back({theta, phi, {r[0], r[1], r[2]}});
    }
  }
  return out;
}

SurfaceSample lightlike_point1(Epsilon eps, double alpha, double tau) {
  // Lightlike covector h = (-cosh alpha, sinh alpha, 1/eps), H = 0.
  const double e = eps.value();
  const double ca = std::cosh(alpha);
  const double sa = std::sinh(alpha);
  const double s = std::sinh(tau);
  const double s_half = std::sinh(0.5 * tau);
  const double cm1 = 2.0 * s_half * s_half;
  SurfaceSample out;
  out.point = {e * (ca * s + sa * cm1), e * (sa * s + ca * cm1), 0.5 * e * e * (s + tau)};
  out.tau = tau;
  out.alpha = alpha;
  if (tau > 0.0) {
    const double k = (cm1 + 2.0) / s;  // (cosh tau + 1)/sinh tau
    out.normal = std::array<double, 3>{-0.5 * out.point.x * k, 0.5 * out.point.y * k, 1.0};
  }
  return out;
}

std::vector<SurfaceSample> lightlike_surface1(Epsilon eps, const LightlikeGrid& grid) {
  if (grid.alpha_count < 2 || grid.tau_count < 2) throw InvalidArgument("lightlike_surface1: grid counts must be >= 2");
  if (!(grid.tau_max > 0.0)) throw InvalidArgument("lightlike_surface1: tau_max must be positive");
  std::vector<SurfaceSample> out;
  for (int i = 0; i < grid.alpha_count; ++i) {
    const double alpha = grid.alpha_min + (grid.alpha_max - grid.alpha_min) * i / (grid.alpha_count - 1.0);
    for (int j = 0; j < grid.tau_count; ++j) {
      out.push_back(lightlike_point1(eps, alpha, grid.tau_max * j / (grid.tau_count - 1.0)));
    }
  }
  if (grid.both_sheets) {
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) {
      SurfaceSample m = out[k];
      m.point.z = -m.point.z;
      if (m.normal) (*m.normal)[2] = -1.0;
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace heislor
