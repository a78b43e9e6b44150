#include "heislor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "heislor/errors.hpp"

namespace heislor {

namespace {

using State = std::array<double, 6>;  // x, y, z, h1, h2, h3

struct ExtremalField {
  FamilyTag family;
  double eps;
  ZTerm zterm;

  State operator()(const State& s) const noexcept {
    const double x = s[0], y = s[1], h1 = s[3], h2 = s[4], h3 = s[5];
    double u1 = 0.0, u2 = 0.0, vertical = 0.0;
    if (family == FamilyTag::FamilyOne) {
      u1 = -h1;
      u2 = h2;
      vertical = zterm == ZTerm::Adopted ? eps * eps * h3 : eps * h3 * h3;
    } else {
      u1 = h1;
      u2 = h2;
      vertical = zterm == ZTerm::Adopted ? -eps * eps * h3 : -eps * eps * h3 * h3;
    }
    // Vertical part h1' = -u2 h3, h2' = u1 h3, h3' = 0 in both families.
    return {u1, u2, -0.5 * y * u1 + 0.5 * x * u2 + vertical, -u2 * h3, u1 * h3, 0.0};
  }
};

template <class Field>
State rk4_step(const Field& f, const State& s, double dt) {
  auto axpy = [](const State& a, double c, const State& b) {
    State r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] + c * b[i];
    return r;
  };
  const State k1 = f(s);
  const State k2 = f(axpy(s, 0.5 * dt, k1));
  const State k3 = f(axpy(s, 0.5 * dt, k2));
  const State k4 = f(axpy(s, dt, k3));
  State r;
  for (int i = 0; i < 6; ++i) r[i] = s[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return r;
}

State initial_state(const Covector& h0) { return {0.0, 0.0, 0.0, h0.h1, h0.h2, h0.h3}; }

GroupElement point_of(const State& s) { return {s[0], s[1], s[2]}; }
Covector covector_of(const State& s) { return {s[3], s[4], s[5]}; }

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> normalized(std::array<double, 3> v) {
  const double n = std::sqrt(dot(v, v));
  for (auto& c : v) c /= n;
  return v;
}

Covector shifted(const Covector& h, const std::array<double, 3>& e, double s) {
  return {h.h1 + s * e[0], h.h2 + s * e[1], h.h3 + s * e[2]};
}

double det3(const std::array<double, 3>& c1, const std::array<double, 3>& c2,
            const std::array<double, 3>& c3) {
  return dot(c1, cross(c2, c3));
}

std::array<double, 3> diff(const State& a, const State& b, double inv) {
  return {(a[0] - b[0]) * inv, (a[1] - b[1]) * inv, (a[2] - b[2]) * inv};
}

std::array<double, 3> velocity(FamilyTag family, Epsilon eps, const State& s) {
  const TangentVector v = dynamics(point_of(s), pmp_control(family, eps, covector_of(s)), eps);
  return {v.dx, v.dy, v.dz};
}

// Integrates several trajectories in lockstep on the fixed 1e-3 grid and
// samples each at the requested times by one partial step from the last node.
std::vector<std::vector<State>> sample_bundle(const ExtremalField& f, const std::vector<State>& init,
                                              const std::vector<double>& times) {
  constexpr double dt = 1e-3;
  std::vector<State> state = init;
  std::vector<std::vector<State>> out(times.size());
  double node = 0.0;
  long k = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double target = times[i];
    while (node + dt <= target) {
      for (auto& s : state) s = rk4_step(f, s, dt);
      ++k;
      node = static_cast<double>(k) * dt;
    }
    const double rest = target - node;
    out[i].reserve(state.size());
    for (const auto& s : state) out[i].push_back(rest > 0.0 ? rk4_step(f, s, rest) : s);
  }
  return out;
}

}  // namespace

int steps_for(double t_end) noexcept {
  return std::max(1, static_cast<int>(std::ceil(1000.0 * t_end - 1e-9)));
}

Control pmp_control(FamilyTag family, Epsilon eps, const Covector& h) noexcept {
  if (family == FamilyTag::FamilyOne) return {-h.h1, h.h2, eps.value() * h.h3};
  return {h.h1, h.h2, -eps.value() * h.h3};
}

double hamiltonian(FamilyTag family, Epsilon eps, const Covector& h) noexcept {
  const double e2 = eps.value() * eps.value();
  if (family == FamilyTag::FamilyOne) return 0.5 * (-h.h1 * h.h1 + h.h2 * h.h2 + e2 * h.h3 * h.h3);
  return 0.5 * (h.h1 * h.h1 + h.h2 * h.h2 - e2 * h.h3 * h.h3);
}

Trajectory integrate_extremal(FamilyTag family, Epsilon eps, const Covector& h0, double t_end,
                              int steps, ZTerm zterm) {
  if (steps < 1) throw InvalidArgument("integrate_extremal: steps must be >= 1");
  if (!(t_end >= 0.0)) throw InvalidArgument("integrate_extremal: t_end must be >= 0");
  const ExtremalField f{family, eps.value(), zterm};
  const double dt = t_end / steps;
  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.points.reserve(steps + 1);
  traj.covectors.reserve(steps + 1);
  traj.controls.reserve(steps + 1);
  State s = initial_state(h0);
  auto record = [&](double t) {
    traj.times.push_back(t);
    traj.points.push_back(point_of(s));
    traj.covectors.push_back(covector_of(s));
    traj.controls.push_back(pmp_control(family, eps, covector_of(s)));
  };
  record(0.0);
  for (int k = 1; k <= steps; ++k) {
    s = rk4_step(f, s, dt);
    record(k == steps ? t_end : dt * k);
  }
  return traj;
}

GroupElement extremal_endpoint(FamilyTag family, Epsilon eps, const Covector& h0, double t_end,
                               int steps, ZTerm zterm) {
  if (steps < 1) throw InvalidArgument("extremal_endpoint: steps must be >= 1");
  const ExtremalField f{family, eps.value(), zterm};
  const double dt = t_end / steps;
  State s = initial_state(h0);
  for (int k = 0; k < steps; ++k) s = rk4_step(f, s, dt);
  return point_of(s);
}

Trajectory integrate_control(Epsilon eps, const GroupElement& start, const PiecewiseControl& plan,
                             int steps_per_segment) {
  if (plan.segments.empty()) throw InvalidArgument("integrate_control: empty plan");
  if (steps_per_segment < 1) throw InvalidArgument("integrate_control: steps_per_segment must be >= 1");
  Trajectory traj;
  traj.times.push_back(0.0);
  traj.points.push_back(start);
  State s{start.x, start.y, start.z, 0.0, 0.0, 0.0};
  double t0 = 0.0;
  for (const auto& seg : plan.segments) {
    if (!(seg.duration > 0.0)) throw InvalidArgument("integrate_control: durations must be positive");
    const Control u = seg.control;
    const double e = eps.value();
    auto field = [&](const State& q) -> State {
      return {u.u1, u.u2, -0.5 * q[1] * u.u1 + 0.5 * q[0] * u.u2 + e * u.u3, 0.0, 0.0, 0.0};
    };
    const GroupElement seg_start = point_of(s);
    const double dt = seg.duration / steps_per_segment;
    for (int k = 1; k <= steps_per_segment; ++k) {
      s = rk4_step(field, s, dt);
      traj.times.push_back(k == steps_per_segment ? t0 + seg.duration : t0 + dt * k);
      traj.points.push_back(point_of(s));
      traj.controls.push_back(u);
    }
    t0 += seg.duration;
    const GroupElement exact = group_mul(seg_start, chord(u, seg.duration, eps));
    const double mismatch = max_norm_distance(exact, point_of(s));
    if (mismatch > 1e-10 * std::max(1.0, max_abs(exact))) {
      throw NoConvergence("integrate_control: RK4 segment endpoint disagrees with the exact chord",
                          mismatch);
    }
  }
  return traj;
}

std::array<std::array<double, 3>, 2> level_tangent_basis(FamilyTag family, Epsilon eps,
                                                         const Covector& h) {
  const double e2 = eps.value() * eps.value();
  const std::array<double, 3> grad = family == FamilyTag::FamilyOne
                                         ? std::array<double, 3>{-h.h1, h.h2, e2 * h.h3}
                                         : std::array<double, 3>{h.h1, h.h2, -e2 * h.h3};
  if (!(dot(grad, grad) > 0.0)) throw InvalidArgument("level_tangent_basis: grad H vanishes");
  const auto n = normalized(grad);
  // Pick the coordinate axis least aligned with n to seed Gram-Schmidt.
  int axis = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(n[i]) < std::abs(n[axis])) axis = i;
  std::array<double, 3> seed{0.0, 0.0, 0.0};
  seed[axis] = 1.0;
  const double proj = dot(seed, n);
  for (int i = 0; i < 3; ++i) seed[i] -= proj * n[i];
  const auto e1 = normalized(seed);
  const auto e2v = cross(n, e1);  // e1 x e2 = e1 x (n x e1) = n
  return {e1, e2v};
}

double fd_jacobian_raw(FamilyTag family, Epsilon eps, const Covector& h0, double t, double h_step) {
  if (!(h_step > 0.0)) throw InvalidArgument("fd_jacobian: h_step must be positive");
  if (!(t > 0.0)) throw InvalidArgument("fd_jacobian: t must be positive");
  const auto basis = level_tangent_basis(family, eps, h0);
  const ExtremalField f{family, eps.value(), ZTerm::Adopted};
  const int steps = steps_for(t);
  const double dt = t / steps;
  auto run = [&](const Covector& h) {
    State s = initial_state(h);
    for (int k = 0; k < steps; ++k) s = rk4_step(f, s, dt);
    return s;
  };
  const double inv = 1.0 / (2.0 * h_step);
  const auto c1 = diff(run(shifted(h0, basis[0], h_step)), run(shifted(h0, basis[0], -h_step)), inv);
  const auto c2 = diff(run(shifted(h0, basis[1], h_step)), run(shifted(h0, basis[1], -h_step)), inv);
  const auto c3 = velocity(family, eps, run(h0));
  return det3(c1, c2, c3);
}

double fd_jacobian(FamilyTag family, Epsilon eps, const Covector& h0, double t, double h_step) {
  const double full = fd_jacobian_raw(family, eps, h0, t, h_step);
  const double half = fd_jacobian_raw(family, eps, h0, t, 0.5 * h_step);
  const double scale = std::max(std::abs(full), std::abs(half));
  // Two central-difference estimates agreeing to fewer than six digits mean
  // truncation or cancellation dominates; that is ten times tighter than the
  // 1e-5 accuracy the estimate is used for.
  constexpr double tol = 1e-6;
  if (!std::isfinite(full) || !std::isfinite(half) || !(std::abs(full - half) <= tol * scale)) {
    throw IllConditioned(fmt::format("fd_jacobian: step-halving disagreement {:.3g} (relative) at determinant {:.17g}",
                                     (full - half) / scale, full));
  }
  return half;
}

std::vector<double> fd_jacobian_along(FamilyTag family, Epsilon eps, const Covector& h0,
                                      const std::vector<double>& times, double h_step) {
  if (!(h_step > 0.0)) throw InvalidArgument("fd_jacobian_along: h_step must be positive");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
      throw InvalidArgument("fd_jacobian_along: times must be nonnegative and increasing");
    }
  }
  const auto basis = level_tangent_basis(family, eps, h0);
  const ExtremalField f{family, eps.value(), ZTerm::Adopted};
  const std::vector<State> init{initial_state(h0),
                                initial_state(shifted(h0, basis[0], h_step)),
                                initial_state(shifted(h0, basis[0], -h_step)),
                                initial_state(shifted(h0, basis[1], h_step)),
                                initial_state(shifted(h0, basis[1], -h_step))};
  const auto bundle = sample_bundle(f, init, times);
  const double inv = 1.0 / (2.0 * h_step);
  std::vector<double> out;
  out.reserve(times.size());
  for (const auto& b : bundle) {
    out.push_back(det3(diff(b[1], b[2], inv), diff(b[3], b[4], inv), velocity(family, eps, b[0])));
  }
  return out;
}

double chart_correction1(Epsilon eps, double theta, double phi) {
  const Covector h = chart_covector1(eps, theta, phi);
  const auto basis = level_tangent_basis(FamilyTag::FamilyOne, eps, h);
  const double e = eps.value();
  const std::array<double, 3> d_theta{-std::sinh(theta), std::cosh(theta) * std::cos(phi),
                                      std::cosh(theta) * std::sin(phi) / e};
  const std::array<double, 3> d_phi{0.0, -std::sinh(theta) * std::sin(phi),
                                    std::sinh(theta) * std::cos(phi) / e};
  const double m11 = dot(basis[0], d_theta), m12 = dot(basis[0], d_phi);
  const double m21 = dot(basis[1], d_theta), m22 = dot(basis[1], d_phi);
  return m11 * m22 - m12 * m21;
}

double length_functional(const Trajectory& traj, Epsilon /*eps*/, FamilyTag family) {
  const std::size_t n = traj.points.size();
  if (traj.times.size() != n || n < 2) {
    throw InvalidArgument("length_functional: trajectory needs aligned times/points (>= 2 nodes)");
  }
  const bool per_node = traj.controls.size() == n;
  const bool per_interval = traj.controls.size() == n - 1;
  if (!per_node && !per_interval) throw InvalidArgument("length_functional: trajectory carries no controls");
  for (const auto& u : traj.controls) {
    const double slack = 1e-12 * std::max({1.0, std::abs(u.u1), std::abs(u.u2), std::abs(u.u3)});
    const bool ok = family == FamilyTag::FamilyOne ? u.u1 + slack >= std::hypot(u.u2, u.u3)
                                                   : u.u3 + slack >= std::hypot(u.u1, u.u2);
    if (!ok) throw NotCausal("length_functional: control leaves the future cone");
  }
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double dt = traj.times[k + 1] - traj.times[k];
    if (per_interval) {
      total += dt * control_speed(traj.controls[k], family);
    } else {
      total += 0.5 * dt * (control_speed(traj.controls[k], family) +
                           control_speed(traj.controls[k + 1], family));
    }
  }
  return total;
}

}  // namespace heislor
