"""Zeta-function of a polynomial on a complete intersection.

Three small studies:

1. the power map z -> z^a, whose monodromy cyclically permutes the a
   points of a fiber (zeta = 1 - t^a);
2. the monomial z1*z2 on the 2-torus, whose fiber is a copy of C* with
   trivial zeta;
3. a coordinate function on a line in the plane.

Each direct computation is cross-checked through the cone construction:
trade the objective F for the extra constraint F - z_new and compute the
deformation zeta in z_new instead.  The two routes must agree exactly,
factor by factor.
"""

from newtonzeta import (
    SystemSpec,
    cone_system,
    newton_polytope,
    parse_polynomial,
    zeta_polynomial,
    zeta_polynomial_via_cone,
)

print("power maps on the line:")
for a in (1, 2, 3, 5):
    spec = SystemSpec(
        n=1, constraints=(), objective=parse_polynomial(f"z1^{a}", ["z1"])
    )
    direct, _ = zeta_polynomial(spec, scope="torus")
    via = zeta_polynomial_via_cone(spec)
    print(f"    z -> z^{a}:  direct {direct.pretty():10}  cone route {via.pretty():10}"
          f"  agree: {direct == via}")

print("\na monomial on the 2-torus:")
spec = SystemSpec(
    n=2, constraints=(), objective=parse_polynomial("z1*z2", ["z1", "z2"])
)
direct, _ = zeta_polynomial(spec, scope="affine")
print(f"    z1*z2:  zeta = {direct.pretty()}   (the fiber is a torus C*)")

print("\nthe cone construction, explicitly:")
lifted = cone_system(spec)
print("    new system has", lifted.n, "variables and",
      len(lifted.constraints), "constraint(s)")
print("    cone polytope vertices:",
      [v.coords for v in newton_polytope(lifted.constraints[-1]).vertices])

print("\na coordinate on the line z1 + z2 = 1:")
spec = SystemSpec(
    n=2,
    constraints=(parse_polynomial("z1 + z2 - 1", ["z1", "z2"]),),
    objective=parse_polynomial("z1", ["z1", "z2"]),
)
direct, traces = zeta_polynomial(spec, scope="torus")
print(f"    zeta = {direct.pretty()}, cone route {zeta_polynomial_via_cone(spec).pretty()}")

print("\nan objective whose support touches the origin:")
spec = SystemSpec(
    n=1, constraints=(), objective=parse_polynomial("z1 + z1^2", ["z1"])
)
direct, traces = zeta_polynomial(spec, scope="torus")
print(f"    z + z^2:  zeta = {direct.pretty()}")
for t in traces:
    kind = "covector " + str(t.alpha.comps) if t.alpha else "stratum boundary"
    print(f"        factor (1-t^{t.m})^{t.exponent} from {kind}")
print("    (two fiber points over a small circle, both fixed: (1-t)^2)")
