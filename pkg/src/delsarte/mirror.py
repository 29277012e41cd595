"""Mirror-side data: polar polytope, weighted projective space P_B, transposed
polynomial, Poincare series and the Gram/Stokes matrices of O, ..., O(gamma-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import linalg
from . import polynomial as poly
from .lattice import StructureMatrix
from .monodromy import char_polys, reducible_pair


@dataclass(frozen=True)
class WeightedProjectiveData:
    B: Tuple[int, ...]
    gamma: int
    fano: bool
    reflexive: bool
    polar_vertices: Tuple[Tuple[Fraction, ...], ...]
    pairing_ok: bool
    barycenter_ok: bool


def shifted_vertices(sm: StructureMatrix) -> List[Tuple[int, ...]]:
    """alpha_0(q) = alpha(q) - alpha(n+2), q = 1..n+1."""
    d = sm.data.alpha_deform
    return [tuple(a - b for a, b in zip(v, d)) for v in sm.vertices()]


def polar_and_flags(sm: StructureMatrix) -> WeightedProjectiveData:
    B = sm.B
    g = sm.gamma
    verts = tuple(tuple(Fraction(x, b) for x in f.v) for f, b in zip(sm.forms, B))
    a0 = shifted_vertices(sm)
    pairing_ok = all(
        sum(x * y for x, y in zip(a0[i], verts[j])) == -1 + (Fraction(g, B[j]) if i == j else 0)
        for i in range(len(B)) for j in range(len(B))
    )
    bary = [sum(b * v[i] for b, v in zip(B, a0)) for i in range(sm.n)]
    return WeightedProjectiveData(
        tuple(B), g,
        all(g % b == 0 for b in B),
        all(x.denominator == 1 for v in verts for x in v),
        verts, pairing_ok, not any(bary),
    )


@dataclass(frozen=True)
class TransposedPolynomial:
    frak_rows: Tuple[Tuple[int, ...], ...]  # b(i), i = 1..n
    monomials: Tuple[Tuple[int, ...], ...]  # exponents of f^T in y_1..y_{n+1}
    weights: Tuple[int, ...]
    degree: int
    weights_ok: bool


def transpose_polynomial(sm: StructureMatrix) -> TransposedPolynomial:
    a0 = shifted_vertices(sm)
    n = sm.n
    rows = tuple(tuple(a0[q][i] for q in range(n + 1)) for i in range(n))
    one = (1,) * (n + 1)
    mons = tuple(tuple(1 + x for x in r) for r in rows) + (one,)
    B = sm.B
    ok = all(sum(x * b for x, b in zip(r, B)) == 0 for r in rows)
    ok = ok and all(sum(x * b for x, b in zip(m, B)) == sm.gamma for m in mons)
    return TransposedPolynomial(rows, mons, tuple(B), sum(B), ok)


def series_divide(num, den, N: int) -> List[Fraction]:
    """First N+1 coefficients of num/den as a power series (den(0) != 0)."""
    out = []
    num = list(num) + [0] * (N + 1)
    d0 = Fraction(den[0])
    for k in range(N + 1):
        c = (num[k] - sum(den[j] * out[k - j] for j in range(1, min(k, len(den) - 1) + 1))) / d0
        out.append(c)
    return [int(c) if c.denominator == 1 else c for c in out]


@dataclass(frozen=True)
class PoincareData:
    numerator: tuple
    denominator: tuple
    coefficients: Tuple[int, ...]
    orientation: str  # which ratio equals P_Y
    sign: int


def poincare_series(B: Sequence[int], N: int) -> PoincareData:
    """P_Y(t) = (1 - t^gamma) / prod (1 - t^{B_q}), compared with the ratio X0/Xinf."""
    g = sum(B)
    num = poly.trim([1] + [0] * (g - 1) + [-1])
    den = poly.product(poly.trim([1] + [0] * (b - 1) + [-1]) for b in B)
    cp = char_polys(B)
    orientation, sign = "none", 0
    for s in (1, -1):
        if poly.mul(num, cp.xbar_inf) == poly.scale(s, poly.mul(den, cp.xbar0)):
            orientation, sign = "xbar0/xbar_inf", s
        elif poly.mul(num, cp.xbar0) == poly.scale(s, poly.mul(den, cp.xbar_inf)):
            orientation, sign = "xbar_inf/xbar0", s
    return PoincareData(num, den, tuple(series_divide(num, den, N)), orientation, sign)


def hilbert_coefficients(B: Sequence[int], N: int) -> List[int]:
    """hilb(k) = #{m >= 0 : sum m_q B_q = k}, k = 0..N."""
    h = [1] + [0] * N
    for b in B:
        for k in range(b, N + 1):
            h[k] += h[k - b]
    return h


def hilbert_bruteforce(B: Sequence[int], k: int) -> int:
    def count(i, rest):
        if i == len(B):
            return 1 if rest == 0 else 0
        return sum(count(i + 1, rest - m * B[i]) for m in range(rest // B[i] + 1))

    return count(0, k)


@dataclass(frozen=True)
class GramData:
    hilb: Tuple[int, ...]
    G: list
    S: list
    X: list
    invariance_literal: Dict[str, bool]  # H^T X H == X
    invariance_transposed: Dict[str, bool]  # H X H^T == X


def gram_and_stokes(B: Sequence[int]) -> GramData:
    g = sum(B)
    n = len(B) - 1
    h = hilbert_coefficients(B, g)
    G = [[h[j - i] if j >= i else 0 for j in range(g)] for i in range(g)]
    J = [[1 if i + j == g - 1 else 0 for j in range(g)] for i in range(g)]
    S = linalg.matmul(linalg.matmul(J, linalg.transpose(linalg.inverse(G))), J)
    X = linalg.add(S, linalg.scale((-1) ** (n - 1), linalg.transpose(S)))
    H_inf, H_0 = reducible_pair(B)
    lit, tr = {}, {}
    for name, H in (("H_0", H_0), ("H_inf", H_inf)):
        Ht = linalg.transpose(H)
        lit[name] = linalg.equal(linalg.matmul(linalg.matmul(Ht, X), H), X)
        tr[name] = linalg.equal(linalg.matmul(linalg.matmul(H, X), Ht), X)
    return GramData(tuple(h[:g]), G, S, X, lit, tr)
