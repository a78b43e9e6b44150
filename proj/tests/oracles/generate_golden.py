"""Independent high-precision oracle for the frozen golden values.

Integrates the Hamiltonian systems with mpmath's arbitrary-precision Taylor
integrator (30 significant digits) and differentiates endpoints numerically at
that precision. Nothing here imports or mirrors the C++ closed forms; only the
system definitions are shared:

  dynamics   x' = u1, y' = u2, z' = -(y/2) u1 + (x/2) u2 + eps u3
  covector   h1' = -u2 h3, h2' = u1 h3, h3' = 0
  family 1   u = (-h1, h2, eps h3), chart h = (-cosh th, sinh th cos ph, sinh th sin ph / eps)
  family 2   u = ( h1, h2, -eps h3), chart h = (sinh th cos ph, sinh th sin ph, -cosh th / eps)
  limit      h = (-cosh(psi + c t), sinh(psi + c t)), u = (-h1, h2, 0)

Run:  python3 tests/oracles/generate_golden.py > tests/unit/golden_values.hpp
"""

import mpmath as mp

mp.mp.dps = 30


def chart(family, eps, th, ph):
    if family == 1:
        return (-mp.cosh(th), mp.sinh(th) * mp.cos(ph), mp.sinh(th) * mp.sin(ph) / eps)
    return (mp.sinh(th) * mp.cos(ph), mp.sinh(th) * mp.sin(ph), -mp.cosh(th) / eps)


def endpoint(family, eps, h0, t):
    eps = mp.mpf(eps)

    def rhs(_, s):
        x, y, z, h1, h2, h3 = s
        u = (-h1, h2, eps * h3) if family == 1 else (h1, h2, -eps * h3)
        return [u[0], u[1], -y / 2 * u[0] + x / 2 * u[1] + eps * u[2], -u[1] * h3, u[0] * h3, mp.mpf(0)]

    if t == 0:
        return (mp.mpf(0),) * 3
    sol = mp.odefun(rhs, 0, [0, 0, 0, h0[0], h0[1], h0[2]])
    s = sol(t)
    return (s[0], s[1], s[2])


def exp_chart(family, eps, th, ph, t):
    return endpoint(family, eps, chart(family, mp.mpf(eps), th, ph), t)


def limit_endpoint(psi, c, t):
    def rhs(s_, s):
        x, y, z = s
        a = psi + c * s_
        u1, u2 = mp.cosh(a), mp.sinh(a)
        return [u1, u2, -y / 2 * u1 + x / 2 * u2]

    sol = mp.odefun(rhs, 0, [0, 0, 0])
    return tuple(sol(t))


def jac_t_theta_phi(eps, th, ph, t):
    """det d(x,y,z)/d(t, theta, phi) of the family-one endpoint, via high-precision differences."""
    f = lambda a, b, c: exp_chart(1, eps, b, c, a)
    h = mp.mpf("1e-10")
    base = (mp.mpf(t), mp.mpf(th), mp.mpf(ph))
    cols = []
    for k in range(3):
        p = list(base); m = list(base)
        p[k] += h; m[k] -= h
        fp, fm = f(*p), f(*m)
        cols.append([(fp[i] - fm[i]) / (2 * h) for i in range(3)])
    mat = mp.matrix([[cols[j][i] for j in range(3)] for i in range(3)])
    return mp.det(mat)


def fmt(v):
    return mp.nstr(v, 20, min_fixed=-mp.inf, max_fixed=mp.inf) if False else mp.nstr(v, 20)


def emit_point_rows(name, rows):
    print(f"inline constexpr GoldenExp {name}[] = {{")
    for (eps, a, b, t), (x, y, z) in rows:
        print(f"    {{{fmt(eps)}, {fmt(a)}, {fmt(b)}, {fmt(t)}, {fmt(x)}, {fmt(y)}, {fmt(z)}}},")
    print("};")


def main():
    pi = mp.pi
    print("#pragma once")
    print("// GENERATED by tests/oracles/generate_golden.py (mpmath Taylor ODE integration,")
    print("// 30 significant digits). Do not edit by hand; values are frozen test oracles.")
    print()
    print("namespace heislor::golden {")
    print()
    print("struct GoldenExp {\n  double eps, a, b, t, x, y, z;\n};")
    print("struct GoldenJac {\n  double eps, theta, phi, t, det;\n};")
    print("struct GoldenLimit {\n  double psi, c, t, x, y, z;\n};")
    print()

    one = [(1, 1, pi / 2, 1 / mp.sinh(1)), (0.5, 0.7, 1.1, 1.3), (2, 1.5, 4.0, 0.8), (1, 0.3, 0.2, 2.5),
           (1, 1, 0, 1), (0.7, -0.5, 2.0, 1.0), (1, 2.0, 0.5, 1.5)]
    rows = []
    for eps, th, ph, t in one:
        rows.append(((eps, th, ph, t), exp_chart(1, eps, mp.mpf(th), mp.mpf(ph), mp.mpf(t))))
    print("// Family one: (eps, theta, phi, t) -> endpoint.")
    emit_point_rows("kExp1", rows)
    print()

    two = [(1, 1, 0, 1), (0.5, 0.4, 1.0, 2.0), (1.5, 2.0, 3.0, 0.7), (1, 0, 0, 2 * pi), (0.8, 1.2, 5.0, 3.0)]
    rows = []
    for eps, th, ph, t in two:
        rows.append(((eps, th, ph, t), exp_chart(2, eps, mp.mpf(th), mp.mpf(ph), mp.mpf(t))))
    print("// Family two: (eps, theta, phi, t) -> endpoint.")
    emit_point_rows("kExp2", rows)
    print()

    print("// Family-one Jacobian det d(x,y,z)/d(t,theta,phi).")
    print("inline constexpr GoldenJac kJac1[] = {")
    for eps, th, ph, t in [(1, 1, pi / 2, 1 / mp.sinh(1)), (0.5, 0.7, 1.1, 1.3), (1, 0.3, 0.9, 2.5)]:
        d = jac_t_theta_phi(eps, mp.mpf(th), mp.mpf(ph), mp.mpf(t))
        print(f"    {{{fmt(eps)}, {fmt(th)}, {fmt(ph)}, {fmt(t)}, {fmt(d)}}},")
    print("};")
    print()

    print("// Limit system: (psi, c, t) -> endpoint.")
    print("inline constexpr GoldenLimit kExp0[] = {")
    for psi, c, t in [(0, 1, 1), (0.5, -0.7, 2.0), (-1.0, 0.3, 1.5), (0.2, 1e-3, 2.0)]:
        x, y, z = limit_endpoint(mp.mpf(psi), mp.mpf(c), mp.mpf(t))
        print(f"    {{{fmt(psi)}, {fmt(c)}, {fmt(t)}, {fmt(x)}, {fmt(y)}, {fmt(z)}}},")
    print("};")
    print()

    # Boundary height: tau = arcosh((x^2 - y^2)/(2 eps^2) + 1), phi = eps^2/2 (sinh tau + tau).
    print("// Boundary height (eps, x, y) -> (phi_eps, tau), evaluated at 30 digits.")
    print("struct GoldenHeight {\n  double eps, x, y, phi, tau;\n};")
    print("inline constexpr GoldenHeight kHeight[] = {")
    for eps, x, y in [(1, mp.sqrt(2 * (mp.cosh(1) - 1)), 0), (0.3, 2, 1), (1e-3, 1, 0), (2, 5, -4.5)]:
        eps, x, y = mp.mpf(eps), mp.mpf(x), mp.mpf(y)
        tau = mp.acosh((x * x - y * y) / (2 * eps * eps) + 1)
        print(f"    {{{fmt(eps)}, {fmt(x)}, {fmt(y)}, {fmt(eps**2 / 2 * (mp.sinh(tau) + tau))}, {fmt(tau)}}},")
    print("};")
    print()
    print("}  // namespace heislor::golden")


if __name__ == "__main__":
    main()
