// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heislor/discrepancy.hpp"
#include "heislor/errors.hpp"
#include "heislor/family_one.hpp"
#include "heislor/family_two.hpp"
#include "heislor/limit_zero.hpp"
#include "heislor/oracle.hpp"

namespace {

using namespace heislor;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
};

std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

double scale_of(const GroupElement& q) { return std::max(1.0, max_abs(q)); }

// Criterion 1 and 2 share their sample: chart points over eps in [0.5, 2],
// theta in [0, 2], phi in [0, 2 pi), with |tau| capped (4 for family one,
// 8 for family two) so both the closed form and RK4 stay well conditioned.
struct OracleSample {
  FamilyTag family;
  double eps, theta, phi, t;
  GroupElement closed, rk4;
  double drift;
};

const std::vector<OracleSample>& oracle_samples() {
  static const std::vector<OracleSample> samples = [] {
    std::vector<OracleSample> out;
    Rng rng(1001);
    for (FamilyTag fam : {FamilyTag::FamilyOne, FamilyTag::FamilyTwo}) {
      for (int i = 0; i < 200; ++i) {
        OracleSample s{fam, rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0), rng.uniform(0.0, 2 * kPi), 0.0, {}, {}, 0.0};
        const Epsilon eps(s.eps);
        const Covector h0 = fam == FamilyTag::FamilyOne ? chart_covector1(eps, s.theta, s.phi)
                                                        : chart_covector2(eps, s.theta, s.phi);
        const double cap = fam == FamilyTag::FamilyOne ? 4.0 : 8.0;
        const double tmax = std::abs(h0.h3) > 0.0 ? std::min(3.0, cap / std::abs(h0.h3)) : 3.0;
        s.t = tmax * rng.uniform(0.02, 1.0);
        s.closed = fam == FamilyTag::FamilyOne ? exp1(eps, ChartPoint1::make(s.theta, s.phi, s.t))
                                               : exp2(eps, {s.theta, s.phi, s.t});
        const Trajectory traj = integrate_extremal(fam, eps, h0, s.t, steps_for(s.t));
        s.rk4 = traj.points.back();
        const double h_start = hamiltonian(fam, eps, h0);
        for (const auto& h : traj.covectors) s.drift = std::max(s.drift, std::abs(hamiltonian(fam, eps, h) - h_start));
        out.push_back(s);
      }
    }
    return out;
  }();
  return samples;
}

Outcome criterion1() {
  double worst = 0.0, absolute = 0.0;
  for (const auto& s : oracle_samples()) {
    worst = std::max(worst, max_norm_distance(s.closed, s.rk4) / scale_of(s.rk4));
    absolute = std::max(absolute, max_norm_distance(s.closed, s.rk4));
  }
  return {worst <= 1e-8, "400 points, max |Exp - RK4| / max(1, |q|) = " + fmt_num(worst) + " (unscaled " +
                             fmt_num(absolute) + ")"};
}

Outcome criterion2() {
  double worst = 0.0;
  for (const auto& s : oracle_samples()) worst = std::max(worst, s.drift);
  return {worst <= 1e-10, "max Hamiltonian drift = " + fmt_num(worst)};
}

Outcome criterion3() {
  Rng rng(1003);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Epsilon eps(rng.uniform(0.5, 2.0));
    const double theta = rng.uniform(0.05, 3.0), phi = rng.uniform(0.1, kPi - 0.1), tau = rng.uniform(0.05, 8.0);
    const double t = tau / chart_covector1(eps, theta, phi).h3;
    const auto d = distance1(eps, exp1(eps, ChartPoint1::make(theta, phi, t)));
    if (!d) return {false, "exp1 point reported outside the attainable set"};
    worst = std::max(worst, std::abs(*d - t));
  }
  double row = 0.0;
  for (double x : {0.5, 1.0, 2.0, 5.0}) row = std::max(row, std::abs(*distance1(Epsilon(1.0), {x, 0, 0}) - x));
  return {worst <= 1e-6 && row <= 1e-12,
          "max |d(q) - t| = " + fmt_num(worst) + ", analytic row error = " + fmt_num(row)};
}

Outcome criterion4() {
  int exterior = 0, family_one = 0;
  for (const auto& s : oracle_samples()) {
    if (s.family != FamilyTag::FamilyOne) continue;
    const Epsilon eps(s.eps);
    for (const auto& q : {s.closed, s.rk4}) {
      ++family_one;
      if (attain_region1(eps, q).status == RegionStatus::Exterior) ++exterior;
    }
  }
  Rng rng(1004);
  int boundary = 0, outside = 0;
  for (int i = 0; i < 100; ++i) {
    const Epsilon eps(rng.uniform(0.5, 2.0));
    const auto s = lightlike_point1(eps, rng.uniform(-2, 2), rng.uniform(0.05, 4));
    if (attain_region1(eps, s.point).status == RegionStatus::Boundary) ++boundary;
    const GroupElement inflated{s.point.x, s.point.y, 1.01 * s.point.z};
    if (attain_region1(eps, inflated).status == RegionStatus::Exterior) ++outside;
  }
  return {family_one == 400 && exterior == 0 && boundary == 100 && outside == 100,
          std::to_string(family_one - exterior) + "/" + std::to_string(family_one) + " not exterior, " +
              std::to_string(boundary) + "/100 boundary, " + std::to_string(outside) + "/100 inflated exterior"};
}

Outcome criterion5() {
  Rng rng(1005);
  double worst = -INFINITY;
  for (int i = 0; i < 100; ++i) {
    const Epsilon eps(rng.uniform(0.5, 2.0));
    const auto s = lightlike_point1(eps, rng.uniform(-2, 2), rng.uniform(0.05, 4));
    const auto& n = *s.normal;
    const double nn = std::hypot(n[0], n[1], n[2]);
    for (int j = 0; j < 50; ++j) {
      // Future cone boundary: u1 = |(u2, u3)| = 1.
      const double beta = 2 * kPi * j / 50.0;
      const TangentVector v = dynamics(s.point, {1.0, std::cos(beta), std::sin(beta)}, eps);
      const double vv = std::hypot(v.dx, v.dy, v.dz);
      worst = std::max(worst, (n[0] * v.dx + n[1] * v.dy + n[2] * v.dz) / (nn * vv));
    }
  }
  return {worst <= 1e-10, "max normalized n.q' = " + fmt_num(worst)};
}

Outcome criterion6() {
  Rng rng(1006);
  double worst = 0.0;
  int used = 0;
  while (used < 50) {
    const Epsilon eps(rng.uniform(0.5, 2.0));
    const double theta = rng.uniform(0.2, 1.5), phi = rng.uniform(0.3, kPi - 0.3), tau = rng.uniform(0.2, 3.0);
    const Covector h0 = chart_covector1(eps, theta, phi);
    const double t = tau / h0.h3;
    double fd = 0.0;
    try {
      fd = fd_jacobian(FamilyTag::FamilyOne, eps, h0, t) * chart_correction1(eps, theta, phi);
    } catch (const IllConditioned&) {
      continue;  // only well-conditioned samples count
    }
    worst = std::max(worst, std::abs(jacobian1(eps, ChartPoint1::make(theta, phi, t)) - fd) / std::abs(fd));
    ++used;
  }
  // Sign over N = {theta > 0, phi in (0, pi), tau > 0}, 20^3 interior grid.
  int positive = 0, negative = 0;
  const Epsilon eps(1.0);
  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      for (int k = 1; k <= 20; ++k) {
        const double theta = 3.0 * i / 20.0, phi = kPi * j / 21.0, tau = 8.0 * k / 20.0;
        const double h3 = chart_covector1(eps, theta, phi).h3;
        const double jt = jacobian1(eps, ChartPoint1::make(theta, phi, tau / h3));
        (jt > 0 ? positive : negative) += 1;
      }
    }
  }
  const bool constant = positive == 0 || negative == 0;
  return {worst <= 1e-5 && constant,
          "max relative error = " + fmt_num(worst) + " over 50 samples; grid signs +" + std::to_string(positive) +
              "/-" + std::to_string(negative)};
}

Outcome criterion7() {
  const Epsilon eps(1.0);
  const PeriodicPlan plan = periodic_plan(eps, 6.0, 15.0);
  const PiecewiseControl loop = plan.controls();
  const double chord_res = max_abs(compose_chords(kIdentity, loop, eps));
  const Trajectory traj = integrate_control(eps, kIdentity, loop, 1000);
  const double rk_res = max_abs(traj.points.back());
  const double len = length_functional(traj, eps, FamilyTag::FamilyTwo);
  const double target = std::sqrt(27.0);
  double k_err = 0.0;
  for (int k = 1; k <= 5; ++k) {
    const Trajectory tk = integrate_control(eps, kIdentity, repeat(loop, k), 1000);
    k_err = std::max(k_err, std::abs(length_functional(tk, eps, FamilyTag::FamilyTwo) - k * target));
  }
  const bool pass = chord_res <= 1e-9 && rk_res <= 1e-8 && std::abs(len - target) <= 1e-10 &&
                    std::abs(plan.lorentz_length - target) <= 1e-10 && k_err <= 1e-9;
  return {pass, "chord residual " + fmt_num(chord_res) + ", RK4 residual " + fmt_num(rk_res) + ", |L - sqrt 27| " +
                    fmt_num(std::abs(len - target)) + ", k-fold error " + fmt_num(k_err)};
}

Outcome criterion8() {
  double worst = 0.0;
  for (double e : {0.5, 1.0}) {
    const Epsilon eps(e);
    const double tc = 2 * kPi * e;
    std::vector<double> times;
    for (double t = tc - 0.2; t <= tc + 0.2; t += 1e-3) times.push_back(t);
    const auto det = fd_jacobian_along(FamilyTag::FamilyTwo, eps, chart_covector2(eps, 0.0, 0.0), times, 1e-5);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < det.size(); ++i) {
      if (std::abs(det[i]) < std::abs(det[arg])) arg = i;
    }
    worst = std::max(worst, std::abs(times[arg] - tc));
    if (arg == 0 || arg + 1 == det.size()) return {false, "minimum of |det| at the edge of the window"};
  }
  double image = 0.0;
  for (double e : {0.5, 1.0}) {
    for (double phi : {0.0, 1.0, 4.0}) {
      const GroupElement q = exp2(Epsilon(e), {0.0, phi, 2 * kPi * e});
      image = std::max(image, max_norm_distance(q, {0, 0, 2 * kPi * e * e}));
    }
  }
  return {worst <= 1e-3 && image <= 1e-10,
          "|t* - 2 pi eps| = " + fmt_num(worst) + ", conjugate image error " + fmt_num(image)};
}

Outcome criterion9() {
  const std::vector<double> eps_list{0.05, 0.2, 0.5, 1.0, 2.0};
  int violations = 0, total = 0;
  for (int i = 0; i < 20; ++i) {
    const double x = 0.25 + 4.75 * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double y = x * (-0.95 + 1.9 * j / 19.0);
      for (std::size_t k = 0; k + 1 < eps_list.size(); ++k) {
        ++total;
        if (!(boundary_height(Epsilon(eps_list[k]), x, y).phi_eps < boundary_height(Epsilon(eps_list[k + 1]), x, y).phi_eps)) {
          ++violations;
        }
      }
    }
  }
  double worst = 0.0;
  for (int i = 0; i <= 45; ++i) {
    const double x = 0.5 + 0.1 * i;
    const double quarter = x * x / 4.0;
    worst = std::max(worst, std::abs(boundary_height(Epsilon(1e-3), x, 0.0).phi_eps - quarter) / quarter);
  }
  return {violations == 0 && worst <= 1e-3, std::to_string(total - violations) + "/" + std::to_string(total) +
                                                " ordered pairs, max |phi_1e-3 - x^2/4|/(x^2/4) = " + fmt_num(worst)};
}

Outcome criterion10() {
  Rng rng(1010);
  int ok = 0;
  double worst_ratio = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto r = exp_convergence(rng.uniform(-1, 1), rng.uniform(-2, 2), rng.uniform(0.1, 2), {1.0, 0.1, 0.01});
    const double ratio = r.errors[2] / r.errors[0];
    worst_ratio = std::max(worst_ratio, ratio);
    if (r.monotone && ratio <= 1e-2) ++ok;
  }
  return {ok == 50, std::to_string(ok) + "/50 strictly decreasing, max err(0.01)/err(1) = " + fmt_num(worst_ratio)};
}

Outcome criterion11() {
  std::vector<double> d;
  for (double e : {1.0, 0.1, 0.01}) d.push_back(sphere_semicontinuity(1.0, Epsilon(e)));
  return {d[1] < d[0] && d[2] < d[1], "proxy " + fmt_num(d[0]) + " > " + fmt_num(d[1]) + " > " + fmt_num(d[2])};
}

Outcome criterion12() {
  const auto report = discrepancy_report();
  const auto problems = audit_discrepancies(report);
  std::string detail = std::to_string(report.size()) + " records, " + std::to_string(problems.size()) + " problems";
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden oracle agreement", criterion1},   {"energy conservation", criterion2},
      {"distance round-trip", criterion3},       {"attainable-set identity", criterion4},
      {"invariant-set inequality", criterion5},  {"Jacobian certification", criterion6},
      {"periodic closure", criterion7},          {"conjugate prediction", criterion8},
      {"monotone nesting and limit", criterion9}, {"exponential-map convergence", criterion10},
      {"sphere semicontinuity proxy", criterion11}, {"discrepancy ledger completeness", criterion12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first << "): " << o.detail
              << " [" << fmt_num(secs) << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
