// Python bindings: points are (x, y, z) tuples, plans are lists of
// (control, duration) pairs, and library failures map onto a small
// exception hierarchy rooted at heislor.Error.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <tuple>

#include "heislor/cli.hpp"
#include "heislor/discrepancy.hpp"
#include "heislor/errors.hpp"
#include "heislor/family_one.hpp"
#include "heislor/family_two.hpp"
#include "heislor/limit_zero.hpp"
#include "heislor/oracle.hpp"

namespace py = pybind11;
using namespace heislor;

namespace {

using Point = std::tuple<double, double, double>;

Point to_tuple(const GroupElement& q) { return {q.x, q.y, q.z}; }
GroupElement from_tuple(const Point& p) { return {std::get<0>(p), std::get<1>(p), std::get<2>(p)}; }

std::vector<std::pair<Point, double>> plan_list(const PiecewiseControl& plan) {
  std::vector<std::pair<Point, double>> out;
  for (const auto& s : plan.segments) out.push_back({{s.control.u1, s.control.u2, s.control.u3}, s.duration});
  return out;
}

FamilyTag family_of(int f) {
  if (f == 1) return FamilyTag::FamilyOne;
  if (f == 2) return FamilyTag::FamilyTwo;
  throw InvalidArgument("family must be 1 or 2");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Left-invariant Lorentzian structures on the Heisenberg group";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ChartSingular>(m, "ChartSingular", base.ptr());
  py::register_exception<OutsideCausalShadow>(m, "OutsideCausalShadow", base.ptr());
  py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
  py::register_exception<NotAdmissible>(m, "NotAdmissible", base.ptr());
  py::register_exception<PlanFailure>(m, "PlanFailure", base.ptr());
  py::register_exception<NotCausal>(m, "NotCausal", base.ptr());
  py::register_exception<IllConditioned>(m, "IllConditioned", base.ptr());

  m.def("group_mul", [](const Point& a, const Point& b) { return to_tuple(group_mul(from_tuple(a), from_tuple(b))); },
        py::arg("a"), py::arg("b"));
  m.def("group_inverse", [](const Point& a) { return to_tuple(group_inverse(from_tuple(a))); }, py::arg("a"));

  m.def("exp1", [](double eps, double theta, double phi, double t) {
    return to_tuple(exp1(Epsilon(eps), ChartPoint1::make(theta, phi, t)));
  }, py::arg("eps"), py::arg("theta"), py::arg("phi"), py::arg("t"), "Family-one exponential map");
  m.def("exp2", [](double eps, double theta, double phi, double t) {
    return to_tuple(exp2(Epsilon(eps), {theta, phi, t}));
  }, py::arg("eps"), py::arg("theta"), py::arg("phi"), py::arg("t"), "Family-two exponential map");
  m.def("exp0", [](double psi, double c, double t) { return to_tuple(exp0({psi, c, t})); },
        py::arg("psi"), py::arg("c"), py::arg("t"), "Exponential map of the eps -> 0 limit");

  m.def("jacobian1", [](double eps, double theta, double phi, double t) {
    return jacobian1(Epsilon(eps), ChartPoint1::make(theta, phi, t));
  }, py::arg("eps"), py::arg("theta"), py::arg("phi"), py::arg("t"));

  m.def("distance1", [](double eps, const Point& q, double tol) {
    return distance1(Epsilon(eps), from_tuple(q), tol);
  }, py::arg("eps"), py::arg("q"), py::arg("tol") = kDefaultVerdictTol,
     "Lorentzian distance from the identity; None outside the attainable set");

  m.def("attain1", [](double eps, const Point& q, double tol) {
    return std::string(to_string(attain_region1(Epsilon(eps), from_tuple(q), tol).status));
  }, py::arg("eps"), py::arg("q"), py::arg("tol") = kDefaultVerdictTol);
  m.def("attain0", [](const Point& q, double tol) { return std::string(to_string(attain0(from_tuple(q), tol).status)); },
        py::arg("q"), py::arg("tol") = kDefaultVerdictTol);

  m.def("invert1", [](double eps, const Point& q, double tol) {
    const auto p = invert_exp1(Epsilon(eps), from_tuple(q), tol);
    return std::make_tuple(p.theta, p.phi, p.t);
  }, py::arg("eps"), py::arg("q"), py::arg("tol") = kDefaultVerdictTol, "Returns (theta, phi, t)");

  m.def("boundary_height", [](double eps, double x, double y) {
    const auto b = boundary_height(Epsilon(eps), x, y);
    return std::make_pair(b.phi_eps, b.tau);
  }, py::arg("eps"), py::arg("x"), py::arg("y"), "Returns (phi_eps, tau)");

  m.def("periodic_plan", [](double eps, double t1, double t2) {
    const auto p = periodic_plan(Epsilon(eps), t1, t2);
    py::dict d;
    d["t1"] = p.t1;
    d["t2"] = p.t2;
    d["t3"] = p.t3;
    d["third_control"] = Point{p.third_control.u1, p.third_control.u2, p.third_control.u3};
    std::vector<Point> w;
    for (const auto& q : p.waypoints) w.push_back(to_tuple(q));
    d["waypoints"] = w;
    d["lorentz_length"] = p.lorentz_length;
    d["segments"] = plan_list(p.controls());
    return d;
  }, py::arg("eps"), py::arg("t1"), py::arg("t2"));

  m.def("reach_plan", [](double eps, const Point& q) { return plan_list(reach_plan(Epsilon(eps), from_tuple(q))); },
        py::arg("eps"), py::arg("q"), "Admissible family-two plan as [(control, duration), ...]");

  m.def("oracle_endpoint", [](int family, double eps, double theta, double phi, double t, int steps) {
    const FamilyTag fam = family_of(family);
    const Epsilon e(eps);
    const Covector h = fam == FamilyTag::FamilyOne ? chart_covector1(e, theta, phi) : chart_covector2(e, theta, phi);
    return to_tuple(extremal_endpoint(fam, e, h, t, steps > 0 ? steps : steps_for(t)));
  }, py::arg("family"), py::arg("eps"), py::arg("theta"), py::arg("phi"), py::arg("t"), py::arg("steps") = 0,
     "RK4 endpoint of the Hamiltonian system (steps = 0: 1000 per unit time)");

  m.def("exp_convergence", [](double psi, double c, double t, const std::vector<double>& eps_list) {
    return exp_convergence(psi, c, t, eps_list).errors;
  }, py::arg("psi"), py::arg("c"), py::arg("t"), py::arg("eps_list"));

  m.def("discrepancy_report", [] {
    py::list out;
    for (const auto& r : discrepancy_report()) {
      py::dict d;
      d["id"] = r.id;
      d["location"] = r.location;
      d["printed_reading"] = r.printed_reading;
      d["adopted_reading"] = r.adopted_reading;
      d["oracle"] = r.oracle;
      d["printed_error"] = r.printed_error;
      d["adopted_error"] = r.adopted_error;
      d["adopted_wins"] = r.adopted_wins;
      d["note"] = r.note;
      out.append(d);
    }
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::execute(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line interface in process; returns (exit_code, stdout, stderr)");
}
