"""Walk through the invariant chain for one polynomial.

    python3 demos/walkthrough.py demos/data/example1.json
"""
import json
import sys
from pathlib import Path

from delsarte import hyperg, jacobi, linalg, mellin, mirror, monodromy
from delsarte import polynomial as poly
from delsarte.cli import parse_input
from delsarte.ehrhart import ehrhart, parallelepiped_points
from delsarte.lattice import build_structure

path = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent / "data" / "example1.json")
data = parse_input(path.read_text())
sm = build_structure(data)
print(f"# {data.name or path.stem}: n = {sm.n}, gamma = {sm.gamma}, B = {list(sm.B)}")

# the linear forms read off the inverse structure matrix
for q, f in enumerate(sm.columns, 1):
    print(f"L{q} = {f.describe()}")

# lattice points: Psi counts the fundamental parallelepiped by height
pair = ehrhart(sm)
print("psi =", pair.psi, " phi =", pair.phi, " parallelepiped points:", len(parallelepiped_points(sm)))

# monomial basis of the quotient ring, with weight defect r
print("\n  k  ell  I            lambda_bar                 r")
for r in jacobi.ring_basis(sm):
    lb = " ".join(str(x) for x in r.lambda_bar)
    print(f"{r.k:3d}  {r.ell:3d}  {str(r.I):12s} {lb:26s} {r.weight_defect}")

# Gamma-product of the period of the deformation monomial
gp = mellin.mellin_transform(sm, 1, sm.data.alpha_deform)
print("\nMellin transform of u x^alpha(n+2):", gp.describe())
print("pole order at s = 0:", mellin.pole_order_at_zero(sm, 1, sm.data.alpha_deform))

op = hyperg.operators(sm, 1, (0,) * sm.n)
loci = hyperg.singular_loci(sm.B)
print("\noperator order", op.gamma, "; singular locus:", loci.equation())
red = hyperg.reduced_operator(sm, 1, (0,) * sm.n)
print("reduced order (gamma-bar):", len(red.alphas_plus))

cp = monodromy.char_polys(sm.B)
print("\nXbar0    =", poly.to_str(cp.xbar0))
print("Xbar_inf =", poly.to_str(cp.xbar_inf))
form = monodromy.invariant_form(sm.B)
print("invariant form:", form.kind, "signature", form.signature, "Hodge numbers", monodromy.hodge_numbers(sm.B))

ps = mirror.poincare_series(sm.B, 12)
print("\nPoincare series of the weighted projective space:", ps.coefficients, ps.orientation, "sign", ps.sign)
