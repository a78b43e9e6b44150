#include "heislor/limit_zero.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "heislor/detail/entire.hpp"
#include "heislor/errors.hpp"

namespace heislor {

namespace {

void require_decreasing(const std::vector<double>& eps_list) {
  if (eps_list.empty()) throw InvalidArgument("eps_list must not be empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0) || !std::isfinite(eps_list[i])) throw InvalidArgument("eps_list entries must be positive");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) throw InvalidArgument("eps_list must be strictly decreasing");
  }
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return v;
}

struct SpherePair {
  std::vector<GroupElement> limit;
  std::vector<GroupElement> family;
};

SpherePair sample_spheres(double r, Epsilon eps, const LimitSphereGrid& g) {
  if (!(r > 0.0)) throw InvalidArgument("sphere radius must be positive");
  if (g.psi_count < 1 || g.c_count < 1) throw InvalidArgument("sphere grid counts must be >= 1");
  SpherePair s;
  for (double psi : linspace(g.psi_min, g.psi_max, g.psi_count)) {
    for (double c : linspace(g.c_min, g.c_max, g.c_count)) {
      s.limit.push_back(exp0({psi, c, r}));
      const auto a = transfer(eps, psi, c);
      s.family.push_back(exp1(eps, ChartPoint1::make(a.theta, a.phi, r)));
    }
  }
  return s;
}

double one_sided(const std::vector<GroupElement>& from, const std::vector<GroupElement>& to) {
  double worst = 0.0;
  for (const auto& p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : to) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y, p.z - q.z));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

GroupElement exp0(const ChartPoint0& p) {
  if (!(p.t >= 0.0)) throw InvalidArgument("exp0: t must be nonnegative");
  // sinh(psi + u) - sinh(psi) = sinh(psi)(cosh u - 1) + cosh(psi) sinh u, u = c t.
  const double u = p.c * p.t;
  const double s = detail::sinhc(u);
  const double cm = detail::coshm1c(u);
  const double sh = std::sinh(p.psi);
  const double ch = std::cosh(p.psi);
  return {p.t * (sh * cm + ch * s), p.t * (ch * cm + sh * s), 0.5 * p.t * p.t * detail::sinhmc(u)};
}

TransferredAngles transfer(Epsilon eps, double psi, double c) noexcept {
  const double b = std::sinh(psi);
  const double d = eps.value() * c;
  const double theta = std::asinh(std::hypot(b, d));
  double phi = std::atan2(d, b);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  return {theta, phi};
}

RegionVerdict attain0(const GroupElement& q, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("attain0: tol must be positive");
  const double scale = std::max(1.0, max_abs(q));
  const double atol = tol * scale;
  const double atol2 = tol * scale * scale;
  const double gap = q.x - std::abs(q.y);
  const double zdef = 4.0 * std::abs(q.z) - (q.x - std::abs(q.y)) * (q.x + std::abs(q.y));
  RegionVerdict v;
  v.defect = std::max(-gap, zdef);
  if (gap < -atol || zdef > atol2) {
    v.status = RegionStatus::Exterior;
  } else if (std::abs(gap) <= atol || std::abs(zdef) <= atol2) {
    v.status = RegionStatus::Boundary;
  } else {
    v.status = RegionStatus::Interior;
  }
  return v;
}

ConvergenceReport indicator_convergence(const GroupElement& q, const std::vector<double>& eps_list) {
  require_decreasing(eps_list);
  const bool in_limit = attain0(q).status != RegionStatus::Exterior;
  ConvergenceReport r;
  r.eps_values = eps_list;
  r.monotone = true;
  for (double e : eps_list) {
    const bool member = attain_region1(Epsilon(e), q).status != RegionStatus::Exterior;
    if (!r.members.empty() && member && !r.members.back()) r.monotone = false;
    r.members.push_back(member);
    r.errors.push_back(member == in_limit ? 0.0 : 1.0);
  }
  return r;
}

ConvergenceReport exp_convergence(double psi, double c, double t, const std::vector<double>& eps_list) {
  require_decreasing(eps_list);
  const GroupElement limit = exp0({psi, c, t});
  ConvergenceReport r;
  r.eps_values = eps_list;
  r.monotone = true;
  for (double e : eps_list) {
    const Epsilon eps(e);
    const auto a = transfer(eps, psi, c);
    const double err = max_norm_distance(exp1(eps, ChartPoint1::make(a.theta, a.phi, t)), limit);
    if (!r.errors.empty() && !(err < r.errors.back())) r.monotone = false;
    r.errors.push_back(err);
  }
  return r;
}

double sphere_semicontinuity(double r, Epsilon eps, const LimitSphereGrid& grid) {
  const auto s = sample_spheres(r, eps, grid);
  return one_sided(s.limit, s.family);
}

double sphere_upper_deviation(double r, Epsilon eps, const LimitSphereGrid& grid) {
  const auto s = sample_spheres(r, eps, grid);
  return one_sided(s.family, s.limit);
}

bool cone_indicator(const TangentVector& v, double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw InvalidArgument("cone_indicator: eps must be >= 0");
  if (eps == 0.0) return v.dx >= 0.0 && v.dx * v.dx >= v.dy * v.dy && v.dz == 0.0;
  const double w = v.dz / eps;
  return v.dx >= 0.0 && v.dx * v.dx >= v.dy * v.dy + w * w;
}

}  // namespace heislor
