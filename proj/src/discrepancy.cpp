#include "heislor/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include <boost/math/tools/roots.hpp>

#include "heislor/errors.hpp"
#include "heislor/family_one.hpp"
#include "heislor/family_two.hpp"
#include "heislor/limit_zero.hpp"
#include "heislor/oracle.hpp"

namespace heislor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

// An undefined reading (NaN) can never agree with an oracle.
double as_error(double e) { return std::isnan(e) ? kInf : e; }

DiscrepancyRecord finish(DiscrepancyRecord r) {
  r.printed_error = as_error(r.printed_error);
  r.adopted_error = as_error(r.adopted_error);
  r.adopted_wins = std::isfinite(r.adopted_error) && r.adopted_error < r.printed_error;
  return r;
}

DiscrepancyRecord dynamics_xdot() {
  const Epsilon eps(0.8);
  const GroupElement q{0.3, -0.7, 0.2};
  const Control u{1.2, 0.5, 0.4};
  const double h = 1e-6;
  const double xdot =
      (group_mul(q, chord(u, h, eps)).x - group_mul(q, chord(u, -h, eps)).x) / (2.0 * h);
  return finish({"dynamics-xdot", "lemma proof on the trajectory system", "x' = y_1", "x' = u_1",
                 "central difference of the exact left-translated chord q * (u1 s, u2 s, eps u3 s)",
                 std::abs(xdot - q.y), std::abs(xdot - u.u1), false,
                 "q = (0.3, -0.7, 0.2), u = (1.2, 0.5, 0.4), eps = 0.8"});
}

DiscrepancyRecord jacobian1_bracket() {
  const Epsilon eps(1.0);
  struct Sample {
    double theta, phi, tau;
  };
  const Sample samples[] = {{1.0, kPi / 2, 1.0}, {0.8, 1.0, 1.5}, {0.5, 2.0, 2.5}, {1.2, 0.7, 0.9}, {0.4, 1.3, 3.0}};
  double err_printed = 0.0, err_hyp = 0.0, err_derived = 0.0;
  for (const auto& s : samples) {
    const double h3 = chart_covector1(eps, s.theta, s.phi).h3;
    const auto p = ChartPoint1::make(s.theta, s.phi, s.tau / h3);
    const double fd = fd_jacobian(FamilyTag::FamilyOne, eps, chart_covector1(eps, s.theta, s.phi), p.t) *
                      chart_correction1(eps, s.theta, s.phi);
    auto rel = [&](Jacobian1Reading r) {
      return std::abs(h3 * jacobian1_tau_reading(eps, p, r) - fd) / std::abs(fd);
    };
    err_printed = std::max(err_printed, rel(Jacobian1Reading::Printed));
    err_hyp = std::max(err_hyp, rel(Jacobian1Reading::HyperbolicOnly));
    err_derived = std::max(err_derived, rel(Jacobian1Reading::Derived));
  }
  return finish({"jacobian1-bracket", "Jacobian of the first-family exponential map",
                 "tau sin tau + (2 - cosh tau + tau sinh tau)/(sin^2 phi sinh^2 theta)",
                 "tau sinh tau + (2 - 2 cosh tau + tau sinh tau)/(sin^2 phi sinh^2 theta)",
                 "fd_jacobian (RK4 endpoint, central differences) times the chart correction; max relative error over 5 samples",
                 err_printed, err_derived, false,
                 "the intermediate reading tau sinh tau + (2 - cosh tau + ...) has max relative error " +
                     std::to_string(err_hyp)});
}

DiscrepancyRecord sphere1_slice() {
  const Epsilon eps(1.0);
  double err_printed = 0.0, err_adopted = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    for (double y : {0.0, 0.3, -0.8}) {
      // Printed: x = sqrt(y^2 + z^2) with z = 0, i.e. x = |y|.
      const double dp = distance1(eps, {std::abs(y), y, 0.0}).value_or(kInf);
      const double da = distance1(eps, {std::hypot(y, r), y, 0.0}).value_or(kInf);
      err_printed = std::max(err_printed, std::abs(dp - r));
      err_adopted = std::max(err_adopted, std::abs(da - r));
    }
  }
  return finish({"sphere1-slice", "z = 0 slice of the first-family sphere", "x = sqrt(y^2 + z^2)",
                 "x = sqrt(y^2 + r^2)", "distance1 of the slice points must equal r (r in {0.5,1,2}, three y)",
                 err_printed, err_adopted, false, ""});
}

DiscrepancyRecord zdot_geometric() {
  const Epsilon eps(0.6);
  struct Sample {
    double theta, phi, t;
  };
  const Sample samples[] = {{0.7, 1.1, 1.3}, {1.2, 4.0, 0.8}, {0.4, 2.5, 2.0}};
  double err_printed = 0.0, err_adopted = 0.0;
  for (const auto& s : samples) {
    const Covector h = chart_covector1(eps, s.theta, s.phi);
    const GroupElement exact = exp1(eps, ChartPoint1::make(s.theta, s.phi, s.t));
    const int n = steps_for(s.t);
    err_printed = std::max(err_printed, max_norm_distance(exact, extremal_endpoint(FamilyTag::FamilyOne, eps, h, s.t, n, ZTerm::Printed)));
    err_adopted = std::max(err_adopted, max_norm_distance(exact, extremal_endpoint(FamilyTag::FamilyOne, eps, h, s.t, n, ZTerm::Adopted)));
  }
  return finish({"zdot-geometric", "geometric PMP z-equation, first family", "z' = h1 y/2 + h2 x/2 + eps h3^2",
                 "z' = h1 y/2 + h2 x/2 + eps^2 h3",
                 "RK4 endpoint of each z-equation against the closed-form exponential map (eps = 0.6)",
                 err_printed, err_adopted, false, ""});
}

DiscrepancyRecord length_integrand() {
  const Epsilon eps(1.0);
  const Control controls[] = {{-6.0, 9.0, 12.0}, {0.5, -0.2, 1.0}, {0.1, 0.3, 2.0}};
  double err_printed = 0.0, err_adopted = 0.0;
  for (const auto& u : controls) {
    const double oracle = std::sqrt(-lorentz_form(dynamics(kIdentity, u, eps), eps, FamilyTag::FamilyTwo));
    const double printed = std::sqrt(u.u3 * u.u3 - u.u1 * u.u1 - u.u3 * u.u3);
    const double adopted = std::sqrt(u.u3 * u.u3 - u.u1 * u.u1 - u.u2 * u.u2);
    err_printed = std::max(err_printed, as_error(std::abs(printed - oracle)));
    err_adopted = std::max(err_adopted, std::abs(adopted - oracle));
  }
  return finish({"length-integrand", "second-family length functional", "sqrt(u3^2 - u1^2 - u3^2)",
                 "sqrt(u3^2 - u1^2 - u2^2)", "sqrt(-g(q', q')) from the Lorentzian form of the velocity",
                 err_printed, err_adopted, false, "the printed radicand is -u1^2 < 0: the reading is undefined"});
}

DiscrepancyRecord pmp_level_set() {
  const Epsilon eps(0.7);
  const double e2 = 0.49;
  const Covector h0 = chart_covector2(eps, 0.9, 0.4);
  const auto traj = integrate_extremal(FamilyTag::FamilyTwo, eps, h0, 2.0, steps_for(2.0));
  auto printed = [&](const Covector& h) { return h.h2 + h.h2 * h.h2 - e2 * h.h3 * h.h3; };
  auto adopted = [&](const Covector& h) { return h.h1 * h.h1 + h.h2 * h.h2 - e2 * h.h3 * h.h3; };
  double err_printed = std::abs(printed(h0) + 1.0), err_adopted = std::abs(adopted(h0) + 1.0);
  for (const auto& h : traj.covectors) {
    err_printed = std::max(err_printed, std::abs(printed(h) - printed(h0)));
    err_adopted = std::max(err_adopted, std::abs(adopted(h) - adopted(h0)));
  }
  return finish({"pmp-level-set", "level condition of the second-family PMP surface",
                 "h2 + h2^2 - eps^2 h3^2 = -1", "h1^2 + h2^2 - eps^2 h3^2 = -1",
                 "value at a chart covector plus drift along the RK4 covector flow (first integral test)",
                 err_printed, err_adopted, false, ""});
}

DiscrepancyRecord pmp_z_tail() {
  const Epsilon eps(0.8);
  const PmpSurfaceGrid grid{6, -3.0, -1.25, 4};
  const auto adopted = pmp_surface2(eps, grid, PmpZReading::Adopted);
  const auto printed = pmp_surface2(eps, grid, PmpZReading::Printed);
  double err_printed = 0.0, err_adopted = 0.0;
  for (std::size_t i = 0; i < adopted.size(); ++i) {
    const GroupElement oracle = extremal_endpoint(FamilyTag::FamilyTwo, eps, adopted[i].covector, 1.0, steps_for(1.0));
    err_printed = std::max(err_printed, max_norm_distance(printed[i].point, oracle));
    err_adopted = std::max(err_adopted, max_norm_distance(adopted[i].point, oracle));
  }
  return finish({"pmp-z-tail", "z-formula of the second-family PMP surface", "... - eps^2 h3^2",
                 "... - eps^2 h3 (= -eps^2 tau at t = 1, as in the exponential-map formula)",
                 "RK4 time-one endpoint of the generating normal extremal (24 samples, eps = 0.8)",
                 err_printed, err_adopted, false, ""});
}

DiscrepancyRecord conjugate_locus() {
  const Epsilon eps(1.0);
  const double theta = 0.2;
  const Covector h0 = chart_covector2(eps, theta, 0.0);
  const double speed = std::abs(h0.h3);
  std::vector<double> taus, times;
  for (int i = 0; i <= 6500; ++i) {
    const double tau = 0.5 + 1e-3 * i;
    taus.push_back(tau);
    times.push_back(tau / speed);
  }
  const auto fd = fd_jacobian_along(FamilyTag::FamilyTwo, eps, h0, times, 1e-5);
  const auto zeros = sampled_zeros(taus, fd);
  const double first_fd = zeros.empty() ? kInf : zeros.front();
  // First root of the printed f in (pi, 2 pi): f(pi) > 0 and f < 0 just below 2 pi.
  auto f = [&](double tau) { return jacobian2(eps, theta, tau).f; };
  boost::uintmax_t iters = 100;
  const auto root = boost::math::tools::toms748_solve(f, kPi, 2.0 * kPi - 1e-3, boost::math::tools::eps_tolerance<double>(50), iters);
  const double first_f = 0.5 * (root.first + root.second);
  const double printed_tau = speed * first_conjugate_time2(eps, theta);  // = 2 pi
  return finish({"conjugate-locus", "conjugate points of the second family",
                 "J = 0 iff theta = 0, tau = 2 pi n; first conjugate time 2 pi / |h3|",
                 "J = 0 at the zeros of the printed f(theta, tau), including tau in (pi, 2 pi) for theta != 0",
                 "first sign change of the Cartesian-covector fd_jacobian along theta = 0.2 (grid 1e-3 in |tau|)",
                 std::abs(printed_tau - first_fd), std::abs(first_f - first_fd), false,
                 "fd first zero |tau| = " + std::to_string(first_fd) + ", f root = " + std::to_string(first_f)});
}

DiscrepancyRecord periodic_z_t2() {
  const Epsilon eps(1.0);
  const double t1 = 6.0, t2 = 15.0;
  PiecewiseControl lightlike;
  lightlike.segments = {{{1.0, 0.0, 1.0}, t1}, {{0.0, -1.0, 1.0}, t2 - t1}};
  const double z = integrate_control(eps, kIdentity, lightlike, 20000).points.back().z;
  const double e = eps.value();
  return finish({"periodic-z-t2", "second waypoint of the periodic construction",
                 "z(t2) = eps t2 + (eps - t1/2)(t2 - t1)", "z(t2) = eps t1 + (eps - t1/2)(t2 - t1)",
                 "RK4 integration of the two lightlike segments (eps = 1, t1 = 6, t2 = 15)",
                 std::abs(e * t2 + (e - t1 / 2) * (t2 - t1) - z), std::abs(e * t1 + (e - t1 / 2) * (t2 - t1) - z),
                 false, ""});
}

DiscrepancyRecord exp0_z() {
  const Epsilon eps(1e-4);
  double err_printed = 0.0, err_adopted = 0.0;
  for (const auto& [psi, c, t] : {std::array<double, 3>{0.5, 1.0, 1.5}, {-0.3, -0.8, 2.0}, {1.0, 0.4, 1.0}}) {
    const auto a = transfer(eps, psi, c);
    const double oracle = exp1(eps, ChartPoint1::make(a.theta, a.phi, t)).z;
    const double ct = c * t;
    err_printed = std::max(err_printed, std::abs((std::sinh(ct) + ct) / (2 * c * c) - oracle));
    err_adopted = std::max(err_adopted, std::abs((std::sinh(ct) - ct) / (2 * c * c) - oracle));
  }
  return finish({"exp0-z", "z-component of the limit exponential map", "z = (sinh ct = ct)/(2 c^2), read as +",
                 "z = (sinh ct - ct)/(2 c^2)", "first-family exponential map at eps = 1e-4 on transferred angles",
                 err_printed, err_adopted, false, ""});
}

DiscrepancyRecord limit_sphere() {
  const double r = 1.0;
  const Epsilon eps(1e-3);
  const LimitSphereGrid grid{-1.0, 1.0, 12, -2.0, 2.0, 12};
  // Printed reading {Exp_eps(psi, c, 0)} is the single point q0.
  double err_printed = 0.0;
  for (double psi : {-1.0, 0.0, 1.0}) {
    for (double c : {-2.0, 0.0, 2.0}) {
      const auto a = transfer(eps, psi, c);
      err_printed = std::max(err_printed, max_abs(exp1(eps, ChartPoint1::make(a.theta, a.phi, r))));
    }
  }
  const double err_adopted = sphere_upper_deviation(r, eps, grid);
  return finish({"limit-sphere", "limit sphere in the semicontinuity theorem", "S_eps(0) = {Exp_eps(psi, c, r)}",
                 "S_0(r) = {Exp_0(psi, c, r)}",
                 "distance from sampled S_eps(r), eps = 1e-3, to the set named by each reading",
                 err_printed, err_adopted, false, ""});
}

DiscrepancyRecord periodic_t1_threshold() {
  const Epsilon eps(1.0);
  int miss_printed = 0, miss_adopted = 0;
  for (double k : {2.5, 3.0, 3.5, 3.9, 4.1, 4.5, 5.0, 6.0}) {
    const double t1 = k * eps.value();
    bool admissible = true;
    try {
      (void)find_admissible_t2(eps, t1, 2000.0 * eps.value());
    } catch (const NotAdmissible&) {
      admissible = false;
    }
    if ((k > 2.0) != admissible) ++miss_printed;
    if ((k > 4.0) != admissible) ++miss_adopted;
  }
  return finish({"periodic-t1-threshold", "admissibility condition of the periodic construction", "t1 > 2 eps",
                 "t1 > 4 eps (asymptotic slope condition t1/2 - eps > eps)",
                 "exhaustive t2 search (step 1e-3 eps up to 2000 eps) for t1/eps in {2.5,...,6}; error = misclassified t1 count",
                 static_cast<double>(miss_printed), static_cast<double>(miss_adopted), false, ""});
}

}  // namespace

std::vector<DiscrepancyRecord> discrepancy_report() {
  return {dynamics_xdot(),  jacobian1_bracket(), sphere1_slice(), zdot_geometric(),
          length_integrand(), pmp_level_set(),   pmp_z_tail(),    conjugate_locus(),
          periodic_z_t2(),  exp0_z(),            limit_sphere(),  periodic_t1_threshold()};
}

std::vector<std::string> audit_discrepancies(const std::vector<DiscrepancyRecord>& report) {
  std::vector<std::string> problems;
  std::set<std::string> seen;
  for (const auto& r : report) {
    seen.insert(r.id);
    if (!std::isfinite(r.adopted_error)) problems.push_back(r.id + ": adopted reading has no finite oracle error");
    if (std::isnan(r.printed_error)) problems.push_back(r.id + ": printed reading not evaluated");
    if (!r.adopted_wins) problems.push_back(r.id + ": adopted reading does not beat the printed one");
    if (r.oracle.empty()) problems.push_back(r.id + ": no oracle recorded");
  }
  for (auto id : kDiscrepancyIds) {
    if (!seen.count(std::string(id))) problems.push_back(std::string(id) + ": missing record");
  }
  return problems;
}

}  // namespace heislor
