#include "heislor/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "heislor/errors.hpp"
#include "heislor/family_one.hpp"
#include "heislor/family_two.hpp"
#include "heislor/io.hpp"
#include "heislor/limit_zero.hpp"
#include "heislor/oracle.hpp"

namespace heislor::cli {

namespace {

using io::Json;
using io::Table;

/// Domain failure detected by the CLI itself (e.g. an exterior dist target).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Bad flag combination detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct ObjMesh {
  std::vector<GroupElement> vertices;
  int rows = 0;
  int cols = 0;
  bool wrap_cols = false;
  int sheets = 1;
};

struct Result {
  Table table;
  Json json;
  std::optional<ObjMesh> mesh;
};

struct Common {
  std::string format = "csv";
  std::string output;
};

void add_common(CLI::App* sub, Common& c, bool allow_obj) {
  std::vector<std::string> formats{"csv", "json"};
  if (allow_obj) formats.emplace_back("obj");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  sub->add_option("--output", c.output, "Write results to this file instead of standard output");
}

Table::Cell num(double v) { return v; }

Json::Array json_points(const std::vector<GroupElement>& pts) {
  Json::Array a;
  a.reserve(pts.size());
  for (const auto& p : pts) a.push_back(Json::point(p));
  return a;
}

Json json_control(const Control& u) { return Json::Array{u.u1, u.u2, u.u3}; }

Json json_plan(const PiecewiseControl& plan) {
  Json::Array segs;
  for (const auto& s : plan.segments) {
    segs.push_back(Json::Object{{"control", json_control(s.control)}, {"duration", s.duration}});
  }
  return segs;
}

Table plan_table(const PiecewiseControl& plan, Epsilon eps) {
  Table t{{"segment", "u1", "u2", "u3", "duration", "t_end", "x", "y", "z"}, {}};
  GroupElement q = kIdentity;
  double time = 0.0;
  int idx = 0;
  for (const auto& s : plan.segments) {
    q = group_mul(q, chord(s.control, s.duration, eps));
    time += s.duration;
    t.rows.push_back({num(idx++), num(s.control.u1), num(s.control.u2), num(s.control.u3), num(s.duration),
                      num(time), num(q.x), num(q.y), num(q.z)});
  }
  return t;
}

void write_result(const Result& r, const Common& c, std::ostream& os) {
  if (c.format == "csv") {
    io::write_csv(os, r.table);
  } else if (c.format == "json") {
    r.json.dump(os);
    os << '\n';
  } else {
    if (!r.mesh) throw UsageError("--format obj is only available for sphere, surface and pmp-surface");
    io::write_obj(os, r.mesh->vertices, r.mesh->rows, r.mesh->cols, r.mesh->wrap_cols, r.mesh->sheets);
  }
}

FamilyTag family_of(int f) {
  if (f == 1) return FamilyTag::FamilyOne;
  if (f == 2) return FamilyTag::FamilyTwo;
  throw UsageError("--family must be 1 or 2");
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"heislor: extremals, attainable sets and distances of left-invariant Lorentzian structures on the Heisenberg group"};
  app.name("heislor");
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Common common;
  std::function<Result()> run;

  // --- exp ---------------------------------------------------------------
  struct {
    int family = 1;
    double eps = 1.0, theta = 0.0, phi = 0.0, t = 1.0, psi = 0.0, c = 0.0;
  } ex;
  auto* exp_cmd = app.add_subcommand("exp", "Exponential map: family 1 or 2 at (theta, phi, t); family 0 (limit) at (psi, c, t)");
  exp_cmd->add_option("--family", ex.family, "1, 2, or 0 for the eps -> 0 limit")->check(CLI::IsMember({0, 1, 2}))->capture_default_str();
  exp_cmd->add_option("--eps", ex.eps, "Vertical scaling eps > 0")->capture_default_str();
  exp_cmd->add_option("--theta", ex.theta, "Chart angle theta")->capture_default_str();
  exp_cmd->add_option("--phi", ex.phi, "Chart angle phi")->capture_default_str();
  exp_cmd->add_option("--t", ex.t, "Time t >= 0")->capture_default_str();
  exp_cmd->add_option("--psi", ex.psi, "Limit chart psi (family 0)")->capture_default_str();
  exp_cmd->add_option("--c", ex.c, "Limit chart c (family 0)")->capture_default_str();
  add_common(exp_cmd, common, false);
  exp_cmd->callback([&] {
    run = [&]() -> Result {
      Result r;
      if (ex.family == 0) {
        const GroupElement q = exp0({ex.psi, ex.c, ex.t});
        r.table = {{"psi", "c", "t", "x", "y", "z"}, {{num(ex.psi), num(ex.c), num(ex.t), num(q.x), num(q.y), num(q.z)}}};
        r.json = Json::Object{{"family", 0}, {"psi", ex.psi}, {"c", ex.c}, {"t", ex.t}, {"point", Json::point(q)}};
        return r;
      }
      const Epsilon eps(ex.eps);
      const GroupElement q = ex.family == 1 ? exp1(eps, ChartPoint1::make(ex.theta, ex.phi, ex.t))
                                            : exp2(eps, {ex.theta, ex.phi, ex.t});
      r.table = {{"theta", "phi", "t", "x", "y", "z"}, {{num(ex.theta), num(ex.phi), num(ex.t), num(q.x), num(q.y), num(q.z)}}};
      r.json = Json::Object{{"family", ex.family}, {"eps", ex.eps}, {"theta", ex.theta}, {"phi", ex.phi},
                            {"t", ex.t}, {"point", Json::point(q)}};
      return r;
    };
  });

  // --- dist --------------------------------------------------------------
  struct {
    double eps = 1.0, x = 0.0, y = 0.0, z = 0.0, tol = kDefaultVerdictTol;
  } di;
  auto* dist_cmd = app.add_subcommand("dist", "Lorentzian distance from the identity (family 1); exit 1 outside the attainable set");
  dist_cmd->add_option("--eps", di.eps, "Vertical scaling eps > 0")->capture_default_str();
  dist_cmd->add_option("--x", di.x, "Target x")->capture_default_str();
  dist_cmd->add_option("--y", di.y, "Target y")->capture_default_str();
  dist_cmd->add_option("--z", di.z, "Target z")->capture_default_str();
  dist_cmd->add_option("--tol", di.tol, "Relative verdict tolerance")->capture_default_str();
  add_common(dist_cmd, common, false);
  dist_cmd->callback([&] {
    run = [&]() -> Result {
      const Epsilon eps(di.eps);
      const GroupElement q{di.x, di.y, di.z};
      const auto d = distance1(eps, q, di.tol);
      if (!d) throw DomainError("target lies outside the attainable set; the distance is undefined");
      const auto v = attain_region1(eps, q, di.tol);
      Result r;
      r.table = {{"x", "y", "z", "distance", "status"}, {{num(q.x), num(q.y), num(q.z), num(*d), std::string(to_string(v.status))}}};
      r.json = Json::Object{{"eps", di.eps}, {"point", Json::point(q)}, {"distance", *d}, {"status", to_string(v.status)}};
      return r;
    };
  });

  // --- invert ------------------------------------------------------------
  struct {
    double eps = 1.0, x = 1.0, y = 0.0, z = 0.1, tol = kDefaultVerdictTol;
  } inv;
  auto* inv_cmd = app.add_subcommand("invert", "Preimage (theta, phi, t) of an interior family-1 point with z > 0");
  inv_cmd->add_option("--eps", inv.eps, "Vertical scaling eps > 0")->capture_default_str();
  inv_cmd->add_option("--x", inv.x, "Target x")->capture_default_str();
  inv_cmd->add_option("--y", inv.y, "Target y")->capture_default_str();
  inv_cmd->add_option("--z", inv.z, "Target z")->capture_default_str();
  inv_cmd->add_option("--tol", inv.tol, "Relative residual tolerance")->capture_default_str();
  add_common(inv_cmd, common, false);
  inv_cmd->callback([&] {
    run = [&]() -> Result {
      const Epsilon eps(inv.eps);
      const GroupElement q{inv.x, inv.y, inv.z};
      ChartPoint1 p;
      try {
        p = invert_exp1(eps, q, inv.tol);
      } catch (const InvalidArgument& e) {
        throw DomainError(e.what());  // the target, not the command line, is at fault
      }
      const double tau = chart_covector1(eps, p.theta, p.phi).h3 * p.t;
      const double residual = max_norm_distance(exp1(eps, p), q);
      Result r;
      r.table = {{"theta", "phi", "t", "tau", "residual"}, {{num(p.theta), num(p.phi), num(p.t), num(tau), num(residual)}}};
      r.json = Json::Object{{"eps", inv.eps}, {"point", Json::point(q)}, {"theta", p.theta}, {"phi", p.phi},
                            {"t", p.t}, {"tau", tau}, {"residual", residual}};
      return r;
    };
  });

  // --- attain ------------------------------------------------------------
  struct {
    int family = 1;
    double eps = 1.0, x = 0.0, y = 0.0, z = 0.0, tol = kDefaultVerdictTol;
    std::vector<double> from;
    std::string direction = "future";
  } at;
  auto* attain_cmd = app.add_subcommand("attain", "Attainable-set verdict (Interior / Boundary / Exterior)");
  attain_cmd->add_option("--family", at.family, "1, or 0 for the eps -> 0 limit set")->check(CLI::IsMember({0, 1}))->capture_default_str();
  attain_cmd->add_option("--eps", at.eps, "Vertical scaling eps > 0 (family 1)")->capture_default_str();
  attain_cmd->add_option("--x", at.x, "Point x")->capture_default_str();
  attain_cmd->add_option("--y", at.y, "Point y")->capture_default_str();
  attain_cmd->add_option("--z", at.z, "Point z")->capture_default_str();
  attain_cmd->add_option("--tol", at.tol, "Relative verdict tolerance")->capture_default_str();
  attain_cmd->add_option("--from", at.from, "Base point x,y,z (family 1; default: identity)")->delimiter(',')->expected(3);
  attain_cmd->add_option("--direction", at.direction, "future or past (with --from)")->check(CLI::IsMember({"future", "past"}))->capture_default_str();
  add_common(attain_cmd, common, false);
  attain_cmd->callback([&] {
    run = [&]() -> Result {
      const GroupElement q{at.x, at.y, at.z};
      RegionVerdict v;
      if (at.family == 0) {
        if (!at.from.empty()) throw UsageError("--from is only supported for --family 1");
        v = attain0(q, at.tol);
      } else {
        const Epsilon eps(at.eps);
        if (at.from.empty() && at.direction == "future") {
          v = attain_region1(eps, q, at.tol);
        } else {
          const GroupElement base = at.from.empty() ? kIdentity : GroupElement{at.from[0], at.from[1], at.from[2]};
          v = attain_translated(eps, base, q, at.direction == "past" ? Direction::Past : Direction::Future, at.tol);
        }
      }
      const double tau = v.tau.value_or(std::nan(""));
      Result r;
      r.table = {{"x", "y", "z", "status", "defect", "tau"},
                 {{num(q.x), num(q.y), num(q.z), std::string(to_string(v.status)), num(v.defect), num(tau)}}};
      r.json = Json::Object{{"point", Json::point(q)}, {"status", to_string(v.status)}, {"defect", v.defect},
                            {"tau", v.tau ? Json(*v.tau) : Json()}};
      return r;
    };
  });

  // --- sphere ------------------------------------------------------------
  double sphere_eps = 1.0;
  SphereSpec sp;
  auto* sphere_cmd = app.add_subcommand("sphere", "Samples of the family-1 sphere exp1(theta, phi, r)");
  sphere_cmd->add_option("--eps", sphere_eps, "Vertical scaling eps > 0")->capture_default_str();
  sphere_cmd->add_option("--r", sp.radius, "Radius r > 0")->capture_default_str();
  sphere_cmd->add_option("--theta-min", sp.theta_min)->capture_default_str();
  sphere_cmd->add_option("--theta-max", sp.theta_max)->capture_default_str();
  sphere_cmd->add_option("--theta-count", sp.theta_count)->capture_default_str();
  sphere_cmd->add_option("--phi-min", sp.phi_min)->capture_default_str();
  sphere_cmd->add_option("--phi-max", sp.phi_max)->capture_default_str();
  sphere_cmd->add_option("--phi-count", sp.phi_count)->capture_default_str();
  add_common(sphere_cmd, common, true);
  sphere_cmd->callback([&] {
    run = [&]() -> Result {
      const auto samples = sphere1(Epsilon(sphere_eps), sp);
      Result r;
      r.table.columns = {"theta", "phi", "x", "y", "z"};
      ObjMesh mesh{{}, sp.theta_count, sp.phi_count, false, 1};
      Json::Array pts;
      for (const auto& s : samples) {
        r.table.rows.push_back({num(s.theta), num(s.phi), num(s.point.x), num(s.point.y), num(s.point.z)});
        mesh.vertices.push_back(s.point);
        pts.push_back(Json::Object{{"theta", s.theta}, {"phi", s.phi}, {"point", Json::point(s.point)}});
      }
      r.json = Json::Object{{"eps", sphere_eps}, {"r", sp.radius}, {"theta_count", sp.theta_count},
                            {"phi_count", sp.phi_count}, {"samples", pts}};
      r.mesh = std::move(mesh);
      return r;
    };
  });

  // --- surface -----------------------------------------------------------
  double surface_eps = 1.0;
  LightlikeGrid lg;
  auto* surface_cmd = app.add_subcommand("surface", "Family-1 boundary surface swept by lightlike extremals, with normals");
  surface_cmd->add_option("--eps", surface_eps, "Vertical scaling eps > 0")->capture_default_str();
  surface_cmd->add_option("--alpha-min", lg.alpha_min)->capture_default_str();
  surface_cmd->add_option("--alpha-max", lg.alpha_max)->capture_default_str();
  surface_cmd->add_option("--alpha-count", lg.alpha_count)->capture_default_str();
  surface_cmd->add_option("--tau-max", lg.tau_max)->capture_default_str();
  surface_cmd->add_option("--tau-count", lg.tau_count)->capture_default_str();
  surface_cmd->add_flag("--both-sheets", lg.both_sheets, "Also emit the z <= 0 sheet");
  add_common(surface_cmd, common, true);
  surface_cmd->callback([&] {
    run = [&]() -> Result {
      const auto samples = lightlike_surface1(Epsilon(surface_eps), lg);
      Result r;
      r.table.columns = {"alpha", "tau", "x", "y", "z", "nx", "ny", "nz"};
      ObjMesh mesh{{}, lg.alpha_count, lg.tau_count, false, lg.both_sheets ? 2 : 1};
      Json::Array pts;
      for (const auto& s : samples) {
        const double nan = std::nan("");
        const auto n = s.normal.value_or(std::array<double, 3>{nan, nan, nan});
        r.table.rows.push_back({num(s.alpha), num(s.tau), num(s.point.x), num(s.point.y), num(s.point.z), num(n[0]),
                                num(n[1]), num(n[2])});
        mesh.vertices.push_back(s.point);
        pts.push_back(Json::Object{{"alpha", s.alpha}, {"tau", s.tau}, {"point", Json::point(s.point)},
                                   {"normal", s.normal ? Json(Json::Array{n[0], n[1], n[2]}) : Json()}});
      }
      r.json = Json::Object{{"eps", surface_eps}, {"samples", pts}};
      r.mesh = std::move(mesh);
      return r;
    };
  });

  // --- pmp-surface -------------------------------------------------------
  double pmp_eps = 1.0;
  PmpSurfaceGrid pg;
  std::optional<double> pmp_h3_min, pmp_h3_max;
  std::string pmp_reading = "adopted";
  auto* pmp_cmd = app.add_subcommand("pmp-surface", "Family-2 time-one PMP surface over h3 <= -1/eps");
  pmp_cmd->add_option("--eps", pmp_eps, "Vertical scaling eps > 0")->capture_default_str();
  pmp_cmd->add_option("--phi-count", pg.phi_count)->capture_default_str();
  pmp_cmd->add_option("--h3-min", pmp_h3_min, "Smallest h3 (default -4/eps)");
  pmp_cmd->add_option("--h3-max", pmp_h3_max, "Largest h3, at most -1/eps (default -1/eps)");
  pmp_cmd->add_option("--h3-count", pg.h3_count)->capture_default_str();
  pmp_cmd->add_option("--z-reading", pmp_reading, "adopted (- eps^2 h3) or printed (- eps^2 h3^2)")
      ->check(CLI::IsMember({"adopted", "printed"}))->capture_default_str();
  add_common(pmp_cmd, common, true);
  pmp_cmd->callback([&] {
    run = [&]() -> Result {
      const Epsilon eps(pmp_eps);
      pg.h3_min = pmp_h3_min.value_or(-4.0 / pmp_eps);
      pg.h3_max = pmp_h3_max.value_or(-1.0 / pmp_eps);
      const auto samples = pmp_surface2(eps, pg, pmp_reading == "printed" ? PmpZReading::Printed : PmpZReading::Adopted);
      Result r;
      r.table.columns = {"h1", "h2", "h3", "x", "y", "z"};
      ObjMesh mesh{{}, pg.h3_count, pg.phi_count, true, 1};
      Json::Array pts;
      for (const auto& s : samples) {
        const auto& h = s.covector;
        r.table.rows.push_back({num(h.h1), num(h.h2), num(h.h3), num(s.point.x), num(s.point.y), num(s.point.z)});
        mesh.vertices.push_back(s.point);
        pts.push_back(Json::Object{{"covector", Json::Array{h.h1, h.h2, h.h3}}, {"point", Json::point(s.point)}});
      }
      r.json = Json::Object{{"eps", pmp_eps}, {"z_reading", pmp_reading}, {"samples", pts}};
      r.mesh = std::move(mesh);
      return r;
    };
  });

  // --- conjugate-scan ----------------------------------------------------
  double conj_eps = 1.0;
  ConjugateScanSpec cs;
  auto* conj_cmd = app.add_subcommand("conjugate-scan", "Zeros of the finite-difference Jacobian and of the printed f along family-2 extremals");
  conj_cmd->add_option("--eps", conj_eps, "Vertical scaling eps > 0")->capture_default_str();
  conj_cmd->add_option("--theta-min", cs.theta_min)->capture_default_str();
  conj_cmd->add_option("--theta-max", cs.theta_max)->capture_default_str();
  conj_cmd->add_option("--theta-count", cs.theta_count, "At least 8")->capture_default_str();
  conj_cmd->add_option("--tau-min", cs.tau_min, "Smallest |tau|")->capture_default_str();
  conj_cmd->add_option("--tau-max", cs.tau_max, "Largest |tau|")->capture_default_str();
  conj_cmd->add_option("--tau-count", cs.tau_count, "At least 8")->capture_default_str();
  conj_cmd->add_option("--phi", cs.phi)->capture_default_str();
  conj_cmd->add_option("--fd-step", cs.fd_step)->capture_default_str();
  add_common(conj_cmd, common, false);
  conj_cmd->callback([&] {
    run = [&]() -> Result {
      const Epsilon eps(conj_eps);
      const auto reports = conjugate_scan(eps, cs);
      Result r;
      r.table.columns = {"theta", "kind", "tau", "time", "z"};
      Json::Array js;
      const double nan = std::nan("");
      for (const auto& rep : reports) {
        const double speed = std::cosh(rep.theta) / conj_eps;  // |h3|
        for (double tau : rep.tau_zeros) r.table.rows.push_back({num(rep.theta), std::string("fd"), num(tau), num(tau / speed), num(nan)});
        for (double tau : rep.f_zeros) r.table.rows.push_back({num(rep.theta), std::string("f"), num(tau), num(tau / speed), num(nan)});
        Json::Array pred;
        for (const auto& p : rep.predicted) {
          const double tau = 2.0 * std::numbers::pi * p.n;
          r.table.rows.push_back({num(rep.theta), std::string("predicted"), num(tau), num(tau / speed), num(p.z)});
          pred.push_back(Json::Object{{"n", p.n}, {"z", p.z}});
        }
        js.push_back(Json::Object{{"theta", rep.theta}, {"tau_zeros", Json::numbers(rep.tau_zeros)},
                                  {"f_zeros", Json::numbers(rep.f_zeros)}, {"predicted", pred}});
      }
      r.json = Json::Object{{"eps", conj_eps}, {"reports", js}};
      return r;
    };
  });

  // --- periodic ----------------------------------------------------------
  struct {
    double eps = 1.0;
    std::optional<double> t1, t2;
    int repeat = 1;
    int steps = 1000;
  } pe;
  auto* periodic_cmd = app.add_subcommand("periodic", "Closed causal loop through the identity (family 2)");
  periodic_cmd->add_option("--eps", pe.eps, "Vertical scaling eps > 0")->capture_default_str();
  periodic_cmd->add_option("--t1", pe.t1, "End of the first lightlike segment (default 6 eps)");
  periodic_cmd->add_option("--t2", pe.t2, "End of the second lightlike segment (default 15 eps)");
  periodic_cmd->add_option("--repeat", pe.repeat, "Number of concatenated loops")->check(CLI::PositiveNumber)->capture_default_str();
  periodic_cmd->add_option("--steps", pe.steps, "RK4 steps per segment for the closure check")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(periodic_cmd, common, false);
  periodic_cmd->callback([&] {
    run = [&]() -> Result {
      const Epsilon eps(pe.eps);
      const PeriodicPlan plan = periodic_plan(eps, pe.t1.value_or(6.0 * pe.eps), pe.t2.value_or(15.0 * pe.eps));
      const PiecewiseControl loop = repeat(plan.controls(), pe.repeat);
      const double chord_residual = max_abs(compose_chords(kIdentity, loop, eps));
      const Trajectory traj = integrate_control(eps, kIdentity, loop, pe.steps);
      const double rk4_residual = max_abs(traj.points.back());
      const double length = length_functional(traj, eps, FamilyTag::FamilyTwo);
      Result r;
      r.table = plan_table(loop, eps);
      r.json = Json::Object{{"eps", pe.eps},
                            {"t1", plan.t1},
                            {"t2", plan.t2},
                            {"t3", plan.t3},
                            {"third_control", json_control(plan.third_control)},
                            {"waypoints", json_points(plan.waypoints)},
                            {"lorentz_length", plan.lorentz_length},
                            {"repeat", pe.repeat},
                            {"total_length", length},
                            {"closure_residual", chord_residual},
                            {"rk4_closure_residual", rk4_residual},
                            {"segments", json_plan(loop)}};
      return r;
    };
  });

  // --- reach -------------------------------------------------------------
  struct {
    double eps = 1.0, x = 0.0, y = 0.0, z = 1.0;
    int steps = 1000;
  } re;
  auto* reach_cmd = app.add_subcommand("reach", "Admissible piecewise-constant control from the identity to a target (family 2)");
  reach_cmd->add_option("--eps", re.eps, "Vertical scaling eps > 0")->capture_default_str();
  reach_cmd->add_option("--x", re.x, "Target x")->capture_default_str();
  reach_cmd->add_option("--y", re.y, "Target y")->capture_default_str();
  reach_cmd->add_option("--z", re.z, "Target z")->capture_default_str();
  reach_cmd->add_option("--steps", re.steps, "RK4 steps per segment for the endpoint check")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(reach_cmd, common, false);
  reach_cmd->callback([&] {
    run = [&]() -> Result {
      const Epsilon eps(re.eps);
      const GroupElement target{re.x, re.y, re.z};
      const PiecewiseControl plan = reach_plan(eps, target);
      const GroupElement end = integrate_control(eps, kIdentity, plan, re.steps).points.back();
      Result r;
      r.table = plan_table(plan, eps);
      r.json = Json::Object{{"eps", re.eps}, {"target", Json::point(target)}, {"segments", json_plan(plan)},
                            {"rk4_endpoint", Json::point(end)}, {"residual", max_norm_distance(end, target)}};
      return r;
    };
  });

  // --- converge-exp / converge-attain / converge-sphere -------------------
  std::vector<double> eps_list{1.0, 0.1, 0.01};
  struct {
    double psi = 0.5, c = 1.0, t = 1.0;
  } ce;
  auto* cexp_cmd = app.add_subcommand("converge-exp", "Errors |exp1(eps, transfer(psi, c), t) - exp0(psi, c, t)| along decreasing eps");
  cexp_cmd->add_option("--psi", ce.psi)->capture_default_str();
  cexp_cmd->add_option("--c", ce.c)->capture_default_str();
  cexp_cmd->add_option("--t", ce.t)->capture_default_str();
  cexp_cmd->add_option("--eps-list", eps_list, "Strictly decreasing, comma separated")->delimiter(',')->capture_default_str();
  add_common(cexp_cmd, common, false);
  cexp_cmd->callback([&] {
    run = [&]() -> Result {
      const auto rep = exp_convergence(ce.psi, ce.c, ce.t, eps_list);
      Result r;
      r.table.columns = {"eps", "error"};
      for (std::size_t i = 0; i < rep.errors.size(); ++i) r.table.rows.push_back({num(rep.eps_values[i]), num(rep.errors[i])});
      r.json = Json::Object{{"psi", ce.psi}, {"c", ce.c}, {"t", ce.t}, {"eps_values", Json::numbers(rep.eps_values)},
                            {"errors", Json::numbers(rep.errors)}, {"monotone", rep.monotone}};
      return r;
    };
  });

  struct {
    double x = 1.0, y = 0.0, z = 0.3;
  } ca;
  auto* cattain_cmd = app.add_subcommand("converge-attain", "Membership of a point in A_eps along decreasing eps versus the limit set");
  cattain_cmd->add_option("--x", ca.x)->capture_default_str();
  cattain_cmd->add_option("--y", ca.y)->capture_default_str();
  cattain_cmd->add_option("--z", ca.z)->capture_default_str();
  cattain_cmd->add_option("--eps-list", eps_list, "Strictly decreasing, comma separated")->delimiter(',')->capture_default_str();
  add_common(cattain_cmd, common, false);
  cattain_cmd->callback([&] {
    run = [&]() -> Result {
      const GroupElement q{ca.x, ca.y, ca.z};
      const auto rep = indicator_convergence(q, eps_list);
      const bool limit_member = attain0(q).status != RegionStatus::Exterior;
      Result r;
      r.table.columns = {"eps", "member", "mismatch"};
      Json::Array members;
      for (std::size_t i = 0; i < rep.errors.size(); ++i) {
        r.table.rows.push_back({num(rep.eps_values[i]), num(rep.members[i] ? 1.0 : 0.0), num(rep.errors[i])});
        members.emplace_back(static_cast<bool>(rep.members[i]));
      }
      r.json = Json::Object{{"point", Json::point(q)}, {"eps_values", Json::numbers(rep.eps_values)},
                            {"members", members}, {"errors", Json::numbers(rep.errors)},
                            {"limit_member", limit_member}, {"monotone", rep.monotone}};
      return r;
    };
  });

  double cs_r = 1.0;
  LimitSphereGrid lsg;
  auto* csphere_cmd = app.add_subcommand("converge-sphere", "Grid proxy of the lower semicontinuity of spheres as eps -> 0");
  csphere_cmd->add_option("--r", cs_r, "Radius r > 0")->capture_default_str();
  csphere_cmd->add_option("--eps-list", eps_list, "Strictly decreasing, comma separated")->delimiter(',')->capture_default_str();
  csphere_cmd->add_option("--psi-min", lsg.psi_min)->capture_default_str();
  csphere_cmd->add_option("--psi-max", lsg.psi_max)->capture_default_str();
  csphere_cmd->add_option("--psi-count", lsg.psi_count)->capture_default_str();
  csphere_cmd->add_option("--c-min", lsg.c_min)->capture_default_str();
  csphere_cmd->add_option("--c-max", lsg.c_max)->capture_default_str();
  csphere_cmd->add_option("--c-count", lsg.c_count)->capture_default_str();
  add_common(csphere_cmd, common, false);
  csphere_cmd->callback([&] {
    run = [&]() -> Result {
      for (std::size_t i = 1; i < eps_list.size(); ++i) {
        if (!(eps_list[i] < eps_list[i - 1])) throw InvalidArgument("--eps-list must be strictly decreasing");
      }
      Result r;
      r.table.columns = {"eps", "lower_proxy", "upper_deviation"};
      std::vector<double> lower, upper;
      for (double e : eps_list) {
        const Epsilon eps(e);
        lower.push_back(sphere_semicontinuity(cs_r, eps, lsg));
        upper.push_back(sphere_upper_deviation(cs_r, eps, lsg));
        r.table.rows.push_back({num(e), num(lower.back()), num(upper.back())});
      }
      r.json = Json::Object{{"r", cs_r}, {"eps_values", Json::numbers(eps_list)}, {"lower_proxy", Json::numbers(lower)},
                            {"upper_deviation", Json::numbers(upper)}};
      return r;
    };
  });

  // --- oracle-check ------------------------------------------------------
  struct {
    int family = 1;
    double eps = 1.0, theta = 1.0, phi = 0.0, t = 1.0;
    int steps = 0;
  } oc;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Closed-form exponential map versus RK4 integration of the Hamiltonian system");
  oracle_cmd->add_option("--family", oc.family, "1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
  oracle_cmd->add_option("--eps", oc.eps, "Vertical scaling eps > 0")->capture_default_str();
  oracle_cmd->add_option("--theta", oc.theta)->capture_default_str();
  oracle_cmd->add_option("--phi", oc.phi)->capture_default_str();
  oracle_cmd->add_option("--t", oc.t, "Time t > 0")->capture_default_str();
  oracle_cmd->add_option("--steps", oc.steps, "RK4 steps (0: 1000 per unit time)")->check(CLI::NonNegativeNumber)->capture_default_str();
  add_common(oracle_cmd, common, false);
  oracle_cmd->callback([&] {
    run = [&]() -> Result {
      const Epsilon eps(oc.eps);
      const FamilyTag fam = family_of(oc.family);
      const Covector h0 = fam == FamilyTag::FamilyOne ? chart_covector1(eps, oc.theta, oc.phi) : chart_covector2(eps, oc.theta, oc.phi);
      const GroupElement closed = fam == FamilyTag::FamilyOne ? exp1(eps, ChartPoint1::make(oc.theta, oc.phi, oc.t))
                                                               : exp2(eps, {oc.theta, oc.phi, oc.t});
      const int steps = oc.steps > 0 ? oc.steps : steps_for(oc.t);
      const Trajectory traj = integrate_extremal(fam, eps, h0, oc.t, steps);
      const GroupElement rk4 = traj.points.back();
      const double drift = std::abs(hamiltonian(fam, eps, traj.covectors.back()) - hamiltonian(fam, eps, h0));
      const double error = max_norm_distance(closed, rk4);
      Result r;
      r.table = {{"x", "y", "z", "rk4_x", "rk4_y", "rk4_z", "max_error", "hamiltonian_drift"},
                 {{num(closed.x), num(closed.y), num(closed.z), num(rk4.x), num(rk4.y), num(rk4.z), num(error), num(drift)}}};
      r.json = Json::Object{{"family", oc.family}, {"eps", oc.eps}, {"theta", oc.theta}, {"phi", oc.phi}, {"t", oc.t},
                            {"steps", steps}, {"closed_form", Json::point(closed)}, {"rk4", Json::point(rk4)},
                            {"max_error", error}, {"hamiltonian_drift", drift}};
      return r;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  } catch (const InvalidArgument& e) {
    // Epsilon and similar value checks can fire inside callbacks.
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  if (!run) {
    err << "usage error: no subcommand given\n";
    return kUsageError;
  }

  try {
    const Result result = run();
    if (common.output.empty()) {
      write_result(result, common, out);
    } else {
      std::ofstream file(common.output);
      if (!file) {
        err << "usage error: cannot open output file " << common.output << '\n';
        return kUsageError;
      }
      write_result(result, common, file);
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << " (best residual " << io::format_number(e.best_residual()) << ")\n";
    return kDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace heislor::cli
