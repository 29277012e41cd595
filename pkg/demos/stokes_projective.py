"""Gram and Stokes matrices of P^n and their invariance under the reducible monodromy.

Shows both ways a bilinear form can be fixed by a matrix H: H X H^T = X holds,
H^T X H = X fails for H_inf.
"""
from delsarte import linalg, mirror, monodromy


def show(m):
    w = max(len(str(x)) for row in m for x in row)
    for row in m:
        print("   ", " ".join(str(x).rjust(w) for x in row))


for n in range(1, 5):
    B = (1,) * (n + 1)
    gd = mirror.gram_and_stokes(B)
    print(f"P^{n}")
    print("  G (Euler form on O, O(1), ...):")
    show(gd.G)
    print("  S:")
    show(gd.S)
    H_inf, H_0 = monodromy.reducible_pair(B)
    for name, H in (("H_0", H_0), ("H_inf", H_inf)):
        fwd = linalg.equal(linalg.matmul(linalg.matmul(H, gd.X), linalg.transpose(H)), gd.X)
        bwd = linalg.equal(linalg.matmul(linalg.matmul(linalg.transpose(H), gd.X), H), gd.X)
        print(f"  {name}: H X H^T = X {fwd},  H^T X H = X {bwd}")
    # what H^T X H = X actually allows
    space = monodromy.invariant_space_bruteforce([H_inf, H_0])
    print("  forms with H^T X H = X for both:", space)
    print()
