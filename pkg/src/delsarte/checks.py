"""Cross-module invariants, shared by the CLI self-test and the test-suite.

Each check yields ``(name, ok, detail)``.  Checks tagged ``reported`` record a
finding without counting as a failure (see README, "Stokes invariance").
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from . import ehrhart as eh
from . import hyperg, jacobi, linalg, mellin, mirror, monodromy
from . import polynomial as poly
from .lattice import StructureMatrix, gcd_condition, in_s_delta


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""
    reported: bool = False


def _c(name, ok, detail="", reported=False):
    return Check(name, bool(ok), str(detail), reported)


def structure_checks(sm: StructureMatrix) -> List[Check]:
    n, g = sm.n, sm.gamma
    cols = sm.columns
    total = [sum(c.v[i] for c in sm.forms) for i in range(n)]
    out = [
        _c("sum of forms is (0,-1,1)", not any(total) and sum(sm.B) == g and all(c.C == (g if q == n else 0) for q, c in enumerate(sm.forms))),
        _c("z form is z", cols[n + 1].v == (0,) * n and cols[n + 1].B == -g and cols[n + 1].C == 0),
    ]
    ok = True
    for q, f in enumerate(sm.forms):
        for j, a in enumerate(sm.data.alpha):
            want = -g if q == n else (g if q == j else 0)
            ok &= sum(x * y for x, y in zip(f.v, a)) == want
        dv = sum(x * y for x, y in zip(f.v, sm.data.alpha_deform))
        ok &= dv == (sm.B[q] - g if q == n else sm.B[q])
    out.append(_c("forms pair with exponents", ok))
    return out


def ehrhart_checks(sm: StructureMatrix) -> List[Check]:
    n = sm.n
    pair = eh.ehrhart(sm)
    recip = tuple(reversed(pair.psi + (0,) * (n + 2 - len(pair.psi))))
    pts = eh.parallelepiped_points(sm)
    poly_ok = all(
        eh.count_points(sm, k) == eh.ehrhart_polynomial_value(pair, n, k) for k in range(n + 1, n + 4)
    )
    return [
        _c("Ehrhart reciprocity", recip == pair.phi, f"psi={pair.psi} phi={pair.phi}"),
        _c("Psi(1) = gamma", sum(pair.psi) == sm.gamma),
        _c("Ehrhart polynomiality", poly_ok),
        _c("parallelepiped has gamma points", len(pts) == sm.gamma),
        _c("parallelepiped heights give psi", tuple(eh.height_histogram(pts).get(i, 0) for i in range(n + 1)) == pair.psi),
    ]


def ring_checks(sm: StructureMatrix, rng: random.Random, cone_samples: int = 50) -> List[Check]:
    n, g = sm.n, sm.gamma
    reps = jacobi.ring_basis(sm)
    pair = eh.ehrhart(sm)
    lbs = [r.lambda_bar for r in reps]
    hist = [sum(1 for r in reps if r.ell == i) for i in range(1, n + 1)]
    alt = all(jacobi.descend(sm, r.k, largest=True).lambda_bar == r.lambda_bar for r in reps)
    pts = set(eh.parallelepiped_points(sm))
    z0 = jacobi.z_gamma_zero(sm.B)
    nonvanishing = sum(1 for lb in lbs if all(lb))
    table = jacobi.hodge_weight_classification(sm)
    out = [
        _c("lambda-bar injective", len(set(lbs)) == g - 1 and (0,) * (n + 1) not in lbs),
        _c("lambda-bar image is kB/gamma", set(lbs) == {jacobi.class_vector(sm, k) for k in range(1, g)}),
        _c("degree histogram = psi", tuple(hist) == pair.psi[1:], f"{hist} vs {pair.psi[1:]}"),
        _c("reps are parallelepiped points", all((r.ell, r.I) in pts for r in reps)),
        _c("descent tie-break independent", alt),
        _c("pure part = #(Z/gamma)^0", table.pure_dim == len(z0) == nonvanishing),
        _c("pole order at 0 = weight defect", all(mellin.pole_order_at_zero(sm, r.ell, r.I) == r.weight_defect for r in reps)),
    ]
    # holomorphy at s = 0 for the pure classes
    hol = True
    for r in reps:
        gp = mellin.mellin_transform(sm, r.ell, r.I)
        if r.weight_defect == 0:
            hol &= min(mellin.positive_poles(gp, g)) > 0
        hol &= all(z.denominator == 1 for z, q in mellin.poles(gp, -3, 0) if q == n + 1)
    out.append(_c("pure reps holomorphic at s=0", hol))
    # transition identity on sampled cone points
    ok = True
    verts = sm.vertices()
    for _ in range(cone_samples):
        ell = rng.randint(0, n + 2)
        coeffs = [0] * (n + 1)
        for _ in range(ell):
            coeffs[rng.randrange(n + 1)] += 1
        I = [sum(c * v[i] for c, v in zip(coeffs, verts)) for i in range(n)]
        # also a random parallelepiped offset to leave the vertex lattice
        if ell < n + 2 and reps:
            r = reps[rng.randrange(len(reps))]
            ell, I = ell + r.ell, [a + b for a, b in zip(I, r.I)]
        try:
            jacobi.ds_transition_and_gradings(sm, ell, I)
        except AssertionError:
            ok = False
    out.append(_c("transition identity L(pi) + L~ = 0", ok))
    return out


def pk_checks(B) -> List[Check]:
    n = len(B) - 1
    g = sum(B)
    z0 = jacobi.z_gamma_zero(B)
    agree = all(mellin.p_from_poles(B, k) == mellin.p_closed(B, k) for k in z0)
    sym = all(mellin.p_closed(B, k) + mellin.p_closed(B, g - k) == n - 1 for k in z0)
    h = monodromy.hodge_numbers(B)
    return [
        _c("p(k) routes agree", agree),
        _c("p(k) + p(gamma-k) = n-1", sym),
        _c("Hodge numbers symmetric", all(h.get(l, 0) == h.get(n + 1 - l, 0) for l in h)),
    ]


def hodge_vs_ring(sm: StructureMatrix) -> List[Check]:
    table = jacobi.hodge_weight_classification(sm)
    return [_c("Hodge numbers = pure ring classes", monodromy.hodge_numbers(sm.B) == table.pure_ell_histogram)]


def operator_checks(sm: StructureMatrix, truncation_factor: int = 5, reps=None) -> List[Check]:
    g, n = sm.gamma, sm.n
    zero = (0,) * n
    base = hyperg.exponent_multisets(sm, 1, zero)
    gb = len(jacobi.z_gamma_zero(sm.B))
    cp = monodromy.char_polys(sm.B)
    out = [_c("gamma-bar three ways", base.gamma_bar == gb == cp.gamma_bar, f"{base.gamma_bar},{gb},{cp.gamma_bar}")]
    reps = jacobi.ring_basis(sm) if reps is None else reps
    same = True
    shift = True
    for r in reps:
        em = hyperg.exponent_multisets(sm, r.ell, r.I)
        same &= em.gamma_bar == base.gamma_bar
        moved = sorted((x + Fraction(r.k, g)) % 1 for x in base.c_minus)
        shift &= list(em.c_minus) == moved
    out.append(_c("gamma-bar constant over basis", same))
    out.append(_c("exponent shift by k/gamma", shift))
    op = hyperg.operators(sm, 1, zero)
    out.append(_c("indicial roots 0..gamma-1", all(poly.evaluate(op.P, j) == 0 for j in range(g)) and poly.degree(op.P) == g))
    N = truncation_factor * g
    ann = True
    for r in list(reps[:3]) + [None]:
        o = op if r is None else hyperg.operators(sm, r.ell, r.I)
        for rho in range(g):
            fs = hyperg.frobenius_series(o, rho, N)
            ann &= all(e > rho + N for e in hyperg.annihilation_residual(o, fs))
    out.append(_c(f"Frobenius annihilation through order {truncation_factor}*gamma", ann))
    ro = hyperg.reduced_operator(sm, 1, zero)
    out.append(_c("reduced exponents paired under x -> 1-x", hyperg.has_reflection_pairing(ro.alphas_plus)))
    qo = hyperg.quantum_ode(sm.B)
    q00 = hyperg.operators(sm, 0, zero).Q
    out.append(_c("quantum ODE matches Q(-theta) at the origin", poly.compose_linear(q00, -1, 0) == qo.theta_poly))
    return out


def monodromy_checks(B, invariant=True) -> List[Check]:
    n = len(B) - 1
    g = sum(B)
    cp = monodromy.char_polys(B)
    gb = cp.gamma_bar
    prodB = poly.product(poly.t_power_minus_one(b) for b in B)
    md = monodromy.global_generators(B)
    I = linalg.identity(gb)
    out = [
        _c("deg Xbar0 = deg Xbar_inf = #(Z/gamma)^0", gb == poly.degree(cp.xbar_inf) == len(jacobi.z_gamma_zero(B))),
        _c("Xbar0 * phi = t^gamma - 1", poly.mul(cp.xbar0, cp.phi) == poly.t_power_minus_one(g)),
        _c("Xbar_inf * phi = prod(t^B - 1)", poly.mul(cp.xbar_inf, cp.phi) == prodB),
        _c("(t-1)^n exactly divides Xbar_inf", monodromy.multiplicity_of_one(cp.xbar_inf) == n),
        _c("constant terms", cp.xbar_inf[0] == (-1) ** n and cp.xbar0[0] == 1),
        _c("h_0^gamma = I", md.h0_order_ok),
        _c("rank(h_1 - I) = 1", linalg.rank(linalg.sub(md.h_1, I)) == 1),
        _c("M_inf * prod M = I", md.product_ok),
        _c("char(h_inf) = Xbar_inf", tuple(linalg.charpoly(md.h_inf)) == cp.xbar_inf),
        _c("char(h_0^-1) = Xbar0", tuple(linalg.charpoly(linalg.inverse(md.h_0))) == cp.xbar0),
        _c("H_0^gamma = I", linalg.is_identity(linalg.mat_pow(md.H_0, g))),
        _c("char(H_inf) = prod(t^B - 1)", tuple(linalg.charpoly(md.H_inf)) == prodB),
    ]
    if n % 2 == 1:
        out.append(_c("h_1^2 = I (n odd)", linalg.is_identity(linalg.matmul(md.h_1, md.h_1))))
    if invariant:
        try:
            f = monodromy.invariant_form(B)
            out.append(_c("invariant form unique and nondegenerate", f.det != 0, f.kind))
            out.append(_c("|sigma+ - sigma-| = |alternating Hodge sum|", f.matches_hodge, f"{f.signature} vs {f.hodge_alternating}"))
        except Exception as exc:  # reported as a failed check
            out.append(_c("invariant form unique and nondegenerate", False, repr(exc)))
    return out


def mirror_checks(sm: StructureMatrix) -> List[Check]:
    B = sm.B
    g = sm.gamma
    wp = mirror.polar_and_flags(sm)
    tp = mirror.transpose_polynomial(sm)
    ps = mirror.poincare_series(B, 3 * g)
    h = mirror.hilbert_coefficients(B, 3 * g)
    den = poly.product(poly.trim([1] + [0] * (b - 1) + [-1]) for b in B)
    hilb_ok = list(poly.mul(h, den)[: 3 * g + 1]) == [1] + [0] * (3 * g)
    gd = mirror.gram_and_stokes(B)
    S = gd.S
    unit = all(S[i][i] == 1 for i in range(g)) and all(S[i][j] == 0 for i in range(g) for j in range(i))
    integral = all(isinstance(x, int) for row in S for x in row)
    return [
        _c("polar pairing relation", wp.pairing_ok),
        _c("barycenter relation", wp.barycenter_ok),
        _c("transposed polynomial weights", tp.weights_ok),
        _c("Poincare identity", ps.orientation != "none", f"{ps.orientation} sign {ps.sign}"),
        _c("Hilbert series identity", hilb_ok),
        _c("Stokes unit upper triangular integral", unit and integral and linalg.det(S) == 1),
        _c("X invariant, H X H^T = X", all(gd.invariance_transposed.values())),
        _c("X invariant, H^T X H = X", all(gd.invariance_literal.values()), str(gd.invariance_literal), reported=True),
    ]


def run_all(sm: StructureMatrix, seed: int = 0, truncation_factor: int = 5) -> List[Check]:
    rng = random.Random(seed)
    out = structure_checks(sm) + ehrhart_checks(sm)
    if gcd_condition(sm.B):
        out += ring_checks(sm, rng) + pk_checks(sm.B) + hodge_vs_ring(sm) + operator_checks(sm, truncation_factor)
    else:
        out.append(_c("gcd(B) = 1", False, "ring checks skipped", reported=True))
    out += monodromy_checks(sm.B) + mirror_checks(sm)
    return out


def failures(checks: List[Check]) -> List[Check]:
    return [c for c in checks if not c.ok and not c.reported]


def random_exponent_data(rng: random.Random, n_max: int = 3, gamma_max: int = 60, entry: int = 4, need_gcd: bool = True):
    """A random valid input: independent exponents, interior deformation, gamma <= gamma_max."""
    from itertools import product as iproduct

    from .lattice import ExponentData

    while True:
        n = rng.randint(1, n_max)
        alpha = [[rng.randint(-entry, entry) for _ in range(n)] for _ in range(n)]
        d = linalg.det(alpha)
        if d == 0 or abs(d) > gamma_max or abs(d) < 2:
            continue
        inv = linalg.inverse(linalg.transpose(alpha))
        lo = [min(0, *(a[i] for a in alpha)) for i in range(n)]
        hi = [max(0, *(a[i] for a in alpha)) for i in range(n)]
        cands = []
        for I in iproduct(*(range(a + 1, b) for a, b in zip(lo, hi))):
            t = linalg.matvec(inv, I)
            if all(x > 0 for x in t) and sum(t) < 1:
                B = [abs(d) * Fraction(x) for x in t] + [abs(d) * (1 - sum(Fraction(x) for x in t))]
                from math import gcd
                from functools import reduce

                if not need_gcd or reduce(gcd, (int(b) for b in B)) == 1:
                    cands.append(I)
        if cands:
            return ExponentData(n, alpha, rng.choice(cands))
