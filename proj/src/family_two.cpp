#include "heislor/family_two.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "heislor/detail/entire.hpp"
#include "heislor/errors.hpp"
#include "heislor/oracle.hpp"

namespace heislor {

namespace {

constexpr double kPi = std::numbers::pi;

// x = t(a sinc + b cosm1c), y = t(b sinc - a cosm1c) with tau = h3 t; the
// rotation (h1 + i h2)' = i h3 (h1 + i h2) integrated from the identity.
std::array<double, 2> horizontal2(double a, double b, double tau, double t) {
  const double s = detail::sinc(tau);
  const double c = detail::cosm1c(tau);
  return {t * (a * s + b * c), t * (b * s - a * c)};
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return v;
}

double f_printed(double theta, double tau) {
  const double ch = std::cosh(theta);
  const double th = std::tanh(theta);
  return 2.0 * (1.0 - std::cos(tau)) / (ch * ch) + tau * std::sin(tau) * th * th;
}

}  // namespace

Covector chart_covector2(Epsilon eps, double theta, double phi) noexcept {
  const double sh = std::sinh(theta);
  return {sh * std::cos(phi), sh * std::sin(phi), -std::cosh(theta) / eps.value()};
}

GroupElement exp2(Epsilon eps, const ChartPoint2& p) {
  if (!(p.t >= 0.0)) throw InvalidArgument("exp2: t must be nonnegative");
  const Covector h = chart_covector2(eps, p.theta, p.phi);
  const double e = eps.value();
  const double tau = h.h3 * p.t;
  const auto xy = horizontal2(h.h1, h.h2, tau, p.t);
  // z = (eps^2 h3^2 - 1)/(2 h3^2) (tau - sin tau) - eps^2 tau, with
  // (tau - sin tau)/h3^2 = t^2 sinmc(tau).
  const double z = 0.5 * (e * e * h.h3 * h.h3 - 1.0) * p.t * p.t * detail::sinmc(tau) - e * e * tau;
  return {xy[0], xy[1], z};
}

GroupElement extremal2_endpoint(Epsilon eps, const Covector& h0, double t) {
  const double e = eps.value();
  const double tau = h0.h3 * t;
  const auto xy = horizontal2(h0.h1, h0.h2, tau, t);
  const double r2 = h0.h1 * h0.h1 + h0.h2 * h0.h2;
  return {xy[0], xy[1], 0.5 * r2 * t * t * detail::sinmc(tau) - e * e * tau};
}

GroupElement abnormal2(Epsilon eps, double h1, double h2, double t) {
  const double r = std::hypot(h1, h2);
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("abnormal2: direction must be nonzero");
  const double e = eps.value();
  const double tau = -t / e;
  const auto xy = horizontal2(h1 / r, h2 / r, tau, t);
  return {xy[0], xy[1], -0.5 * e * e * (tau + std::sin(tau))};
}

std::vector<PmpSample> pmp_surface2(Epsilon eps, const PmpSurfaceGrid& grid, PmpZReading reading) {
  const double e = eps.value();
  if (grid.phi_count < 1 || grid.h3_count < 1) throw InvalidArgument("pmp_surface2: grid counts must be >= 1");
  if (!(grid.h3_min <= grid.h3_max) || !(grid.h3_max <= -1.0 / e) || !std::isfinite(grid.h3_min)) {
    throw InvalidArgument("pmp_surface2: need h3_min <= h3_max <= -1/eps");
  }
  std::vector<PmpSample> out;
  out.reserve(static_cast<std::size_t>(grid.phi_count) * grid.h3_count);
  const auto h3s = linspace(grid.h3_min, grid.h3_max, grid.h3_count);
  const double dphi = 2.0 * kPi / grid.phi_count;  // periodic direction: no duplicated seam
  for (double h3 : h3s) {
    const double radius = std::sqrt(std::max(0.0, e * e * h3 * h3 - 1.0));
    for (int j = 0; j < grid.phi_count; ++j) {
      const double phi = dphi * j;
      const Covector h{radius * std::cos(phi), radius * std::sin(phi), h3};
      const auto xy = horizontal2(h.h1, h.h2, h3, 1.0);
      const double lead = 0.5 * radius * radius * detail::sinmc(h3);
      const double tail = reading == PmpZReading::Adopted ? -e * e * h3 : -e * e * h3 * h3;
      out.push_back({h, {xy[0], xy[1], lead + tail}});
    }
  }
  return out;
}

Jacobian2 jacobian2(Epsilon eps, double theta, double tau) noexcept {
  const double e2 = eps.value() * eps.value();
  const double f = f_printed(theta, tau);
  const double ch = std::cosh(theta);
  return {-e2 * e2 * std::sinh(theta) / (ch * ch * ch) * f, f};
}

double first_conjugate_time2(Epsilon eps, double theta) noexcept {
  return 2.0 * kPi * eps.value() / std::cosh(theta);
}

std::vector<double> sampled_zeros(const std::vector<double>& xs, const std::vector<double>& fs,
                                  double rel_floor) {
  if (xs.size() != fs.size()) throw InvalidArgument("sampled_zeros: size mismatch");
  std::vector<double> zeros;
  const std::size_t n = xs.size();
  if (n < 3) return zeros;
  double fmax = 0.0;
  for (double v : fs) fmax = std::max(fmax, std::abs(v));
  if (!(fmax > 0.0)) return zeros;
  const double floor = rel_floor * fmax;
  // Interior samples only: the flow starts at the identity, where every
  // determinant vanishes trivially.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double a = fs[i], b = fs[i + 1];
    if ((a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0)) {
      zeros.push_back(xs[i] + (xs[i + 1] - xs[i]) * a / (a - b));
      continue;
    }
    const double m = std::abs(a);
    if (a == 0.0 || (m <= floor && m <= std::abs(fs[i - 1]) && m < std::abs(b))) {
      // Tangential zero: refine with the vertex of the parabola through |f|.
      const double y0 = std::abs(fs[i - 1]), y2 = std::abs(b);
      const double denom = y0 - 2.0 * m + y2;
      double x = xs[i];
      if (denom > 0.0) x += 0.5 * (xs[i + 1] - xs[i]) * (y0 - y2) / denom;
      zeros.push_back(x);
    }
  }
  return zeros;
}

std::vector<ConjugateReport> conjugate_scan(Epsilon eps, const ConjugateScanSpec& spec) {
  if (spec.theta_count < 8 || spec.tau_count < 8) throw InvalidArgument("conjugate_scan: grid counts must be >= 8");
  if (!(spec.tau_min >= 0.0) || !(spec.tau_max > spec.tau_min)) {
    throw InvalidArgument("conjugate_scan: need 0 <= tau_min < tau_max");
  }
  if (!(spec.theta_max >= spec.theta_min)) throw InvalidArgument("conjugate_scan: empty theta range");
  const double e = eps.value();
  const auto taus = linspace(spec.tau_min, spec.tau_max, spec.tau_count);
  std::vector<ConjugateReport> reports;
  for (double theta : linspace(spec.theta_min, spec.theta_max, spec.theta_count)) {
    const Covector h0 = chart_covector2(eps, theta, spec.phi);
    const double speed = std::abs(h0.h3);  // |tau| = |h3| t
    std::vector<double> times;
    std::vector<double> fd_taus;
    for (double tau : taus) {
      if (tau <= 0.0) continue;
      times.push_back(tau / speed);
      fd_taus.push_back(tau);
    }
    ConjugateReport r;
    r.theta = theta;
    const auto fd = fd_jacobian_along(FamilyTag::FamilyTwo, eps, h0, times, spec.fd_step);
    r.tau_zeros = sampled_zeros(fd_taus, fd);
    std::vector<double> fvals;
    fvals.reserve(fd_taus.size());
    for (double tau : fd_taus) fvals.push_back(f_printed(theta, tau));
    r.f_zeros = sampled_zeros(fd_taus, fvals);
    for (int n = 1; 2.0 * kPi * n <= spec.tau_max; ++n) {
      if (2.0 * kPi * n >= spec.tau_min) r.predicted.push_back({n, 2.0 * kPi * n * e * e});
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

PiecewiseControl PeriodicPlan::controls() const {
  PiecewiseControl p;
  p.segments = {{{1.0, 0.0, 1.0}, t1}, {{0.0, -1.0, 1.0}, t2 - t1}, {third_control, t3 - t2}};
  return p;
}

GroupElement lightlike_excursion(Epsilon eps, double t1, double t2) noexcept {
  const GroupElement q1 = chord({1.0, 0.0, 1.0}, t1, eps);
  return group_mul(q1, chord({0.0, -1.0, 1.0}, t2 - t1, eps));
}

bool in_chord_cone(Epsilon eps, const GroupElement& q, bool strict) noexcept {
  const double bound = eps.value() * std::hypot(q.x, q.y);
  return strict ? q.z > bound : q.z >= bound;
}

PeriodicPlan periodic_plan(Epsilon eps, double t1, double t2) {
  if (!(t1 > 0.0) || !(t2 > t1) || !std::isfinite(t2)) {
    throw InvalidArgument("periodic_plan: need 0 < t1 < t2");
  }
  const double e = eps.value();
  const GroupElement a = chord({1.0, 0.0, 1.0}, t1, eps);
  const GroupElement b = lightlike_excursion(eps, t1, t2);
  // The closing chord from b must reach the origin: it is b^{-1}, which is
  // admissible iff b lies strictly inside the past chord cone z <= -eps |(x, y)|.
  if (!(b.z < -e * std::hypot(b.x, b.y))) {
    throw NotAdmissible("periodic_plan: q(t2) = (" + std::to_string(b.x) + ", " + std::to_string(b.y) +
                        ", " + std::to_string(b.z) + ") is not strictly inside z <= -eps |(x, y)|");
  }
  const GroupElement back = group_inverse(b);
  PeriodicPlan p;
  p.eps = e;
  p.t1 = t1;
  p.t2 = t2;
  p.t3 = t2 + 1.0;
  p.third_control = {back.x, back.y, back.z / e};
  p.waypoints = {a, b, group_mul(b, chord(p.third_control, 1.0, eps))};
  p.lorentz_length = control_speed(p.third_control, FamilyTag::FamilyTwo);
  return p;
}

PeriodicPlan default_periodic_plan(Epsilon eps) {
  return periodic_plan(eps, 6.0 * eps.value(), 15.0 * eps.value());
}

double find_admissible_t2(Epsilon eps, double t1, double t2_max) {
  const double e = eps.value();
  const double step = 1e-3 * e;
  for (long k = 1;; ++k) {
    const double t2 = t1 + step * static_cast<double>(k);
    if (t2 > t2_max) break;
    const GroupElement b = lightlike_excursion(eps, t1, t2);
    if (b.z < -e * std::hypot(b.x, b.y)) return t2 + step;
  }
  throw NotAdmissible("find_admissible_t2: no admissible t2 below " + std::to_string(t2_max) +
                      " for t1 = " + std::to_string(t1));
}

PiecewiseControl reach_plan(Epsilon eps, const GroupElement& q1) {
  const double e = eps.value();
  PiecewiseControl plan;
  if (in_chord_cone(eps, q1)) {
    plan.segments.push_back({{q1.x, q1.y, q1.z / e}, 1.0});
    if (max_abs(q1) == 0.0) plan.segments.back().control = {0.0, 0.0, 0.0};
    return plan;
  }
  // Excursion p = (t1, -s, eps t1 + (eps - t1/2) s). For large s, the remainder
  // p^{-1} q1 has z growing like s (t1/2 - eps - x1/2) against eps s in the cone
  // bound, so t1 > 4 eps + x1 guarantees success; 6 eps + max(0, x1) leaves margin.
  const double t1 = 6.0 * e + std::max(0.0, q1.x);
  double s = e;
  for (int attempt = 0; attempt < 80; ++attempt, s *= 2.0) {
    const GroupElement p = lightlike_excursion(eps, t1, t1 + s);
    const GroupElement rest = group_mul(group_inverse(p), q1);
    if (in_chord_cone(eps, rest, true)) {
      plan.segments = {{{1.0, 0.0, 1.0}, t1}, {{0.0, -1.0, 1.0}, s}, {{rest.x, rest.y, rest.z / e}, 1.0}};
      return plan;
    }
  }
  throw PlanFailure("reach_plan: excursion search exhausted (80 doublings) for target (" +
                    std::to_string(q1.x) + ", " + std::to_string(q1.y) + ", " + std::to_string(q1.z) + ")");
}

}  // namespace heislor
