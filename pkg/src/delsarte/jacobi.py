"""Monomial basis of the Jacobian-type ring, the lambda-bar map and Hodge bookkeeping.

A monomial u^ell x^I of the ring S_Delta is labelled by its barycentric
coordinates L_q(I, 0, ell).  Modulo the ring relations only their fractional
parts matter (the lambda-bar vector), and the classes are represented by the
lattice points of the half-open fundamental parallelepiped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from . import linalg
from .errors import DescentStuck, GcdViolation, NotInCone, NotInRing
from .lattice import StructureMatrix, gcd_condition, in_s_delta


@dataclass(frozen=True)
class MonomialRep:
    ell: int
    I: Tuple[int, ...]
    lambda_bar: Tuple[Fraction, ...]
    values: Tuple[Fraction, ...]  # L_q(I, 0, ell), q = 1..n+1
    k: int  # class index: lambda_bar = <k B / gamma>

    @property
    def hodge_level(self) -> int:
        return self.ell

    @property
    def weight_defect(self) -> int:
        return sum(1 for v in self.values if v == 0)


@dataclass(frozen=True)
class UnitClass:
    """The class of the constant monomial (lambda-bar identically zero)."""

    ell: int
    I: Tuple[int, ...]


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def lambda_bar(sm: StructureMatrix, ell: int, I: Sequence[int]) -> Tuple[Fraction, ...]:
    if not in_s_delta(sm, ell, I):
        raise NotInRing(f"u^{ell} x^{tuple(I)} is not in the ring")
    return tuple(_frac(v) for v in sm.barycentric(ell, I))


def class_vector(sm: StructureMatrix, k: int) -> Tuple[Fraction, ...]:
    """lambda-bar of u^k x^{k alpha(n+2)}, i.e. the fractional parts of k B_q / gamma."""
    return tuple(_frac(Fraction(k * b, sm.gamma)) for b in sm.B)


def descend(sm: StructureMatrix, k: int, largest: bool = False) -> MonomialRep:
    """Reduce u^k x^{k alpha(n+2)} to a parallelepiped representative.

    One step replaces (ell, I) by (ell - 1, I - alpha(i)) for an index i in
    1..n+1 (alpha(n+1) = 0) whose barycentric coordinate is at least 1.  Only
    that coordinate drops, by exactly one, so membership is preserved and the
    fractional parts never change.
    """
    if not gcd_condition(sm.B):
        raise GcdViolation(f"gcd of B = {list(sm.B)} is not 1")
    n = sm.n
    verts = sm.vertices()
    ell = k
    I = [k * a for a in sm.data.alpha_deform]
    budget = k * (n + 1) + 1
    while True:
        vals = sm.barycentric(ell, I)
        big = [i for i, v in enumerate(vals) if v >= 1]
        if not big:
            break
        budget -= 1
        if budget < 0:
            raise DescentStuck(f"descent from k={k} did not terminate")
        i = big[-1] if largest else big[0]
        ell -= 1
        I = [a - b for a, b in zip(I, verts[i])]
    vals = sm.barycentric(ell, I)
    return MonomialRep(ell, tuple(I), tuple(_frac(v) for v in vals), vals, k)


@lru_cache(maxsize=128)
def ring_basis(sm: StructureMatrix) -> Tuple[MonomialRep, ...]:
    """Representatives of the gamma - 1 nonconstant classes, ordered by k."""
    reps = tuple(descend(sm, k) for k in range(1, sm.gamma))
    if len({r.lambda_bar for r in reps}) != len(reps):
        raise GcdViolation("lambda-bar is not injective on the basis")
    return reps


def z_gamma_zero(B: Sequence[int], gamma: int | None = None) -> List[int]:
    """{k in [0, gamma-1] : gamma does not divide k B_q for any q}."""
    g = sum(B) if gamma is None else gamma
    return [k for k in range(g) if all((k * b) % g for b in B)]


@dataclass(frozen=True)
class HodgeWeightTable:
    table: Dict[Tuple[int, int], int]  # (p, w) -> dimension
    pure_dim: int  # number of reps with r = 0
    pure_ell_histogram: Dict[int, int]


def hodge_weight_classification(sm: StructureMatrix) -> HodgeWeightTable:
    n = sm.n
    table: Dict[Tuple[int, int], int] = {}
    hist: Dict[int, int] = {}
    for rep in ring_basis(sm):
        r = rep.weight_defect
        key = (n - rep.ell, n + 1 + r)
        table[key] = table.get(key, 0) + 1
        if r == 0:
            hist[rep.ell] = hist.get(rep.ell, 0) + 1
    return HodgeWeightTable(dict(sorted(table.items())), sum(hist.values()), dict(sorted(hist.items())))


def normal_form(sm: StructureMatrix, ell: int, I: Sequence[int]):
    """Basis representative with the same lambda-bar vector (constants dropped)."""
    lb = lambda_bar(sm, ell, I)
    if not any(lb):
        return UnitClass(ell, tuple(I))
    lookup = {r.lambda_bar: r for r in ring_basis(sm)}
    try:
        return lookup[lb]
    except KeyError:
        raise NotInRing(f"no basis class with lambda-bar {lb}") from None


@dataclass(frozen=True)
class Transition:
    pi: Tuple[int, Tuple[int, ...]]
    tilde: Tuple[Fraction, ...]  # (gamma / B_q) L_q(I, 0, k)
    ds: Tuple[Fraction, ...]  # centred gradings evaluated at pi(k, alpha)


def centred_gradings(sm: StructureMatrix) -> List[Tuple[Fraction, Tuple[Fraction, ...]]]:
    """Linear functions (a, c) with value a*k + <c, beta> on the recentred cone.

    The q-th one vanishes on the facet cone spanned by (1, alpha(j) - alpha(n+2)),
    j != q, and takes the value -1 at (1, 0).  Obtained by a linear solve so
    that the transition identity below is a genuine check.
    """
    n = sm.n
    d = sm.data.alpha_deform
    shifted = [tuple(a - b for a, b in zip(v, d)) for v in sm.vertices()]
    out = []
    for q in range(n + 1):
        rows = [list(shifted[j]) for j in range(n + 1) if j != q]
        c = linalg.solve(rows, [1] * n)
        out.append((Fraction(-1), tuple(Fraction(x) for x in c)))
    return out


def ds_transition_and_gradings(sm: StructureMatrix, ell: int, alpha: Sequence[int]) -> Transition:
    if not in_s_delta(sm, ell, alpha):
        raise NotInCone(f"({ell}, {tuple(alpha)}) is outside the cone")
    pi_I = tuple(a - ell * b for a, b in zip(alpha, sm.data.alpha_deform))
    tilde = tuple(Fraction(sm.gamma, b) * f(alpha, 0, ell) for f, b in zip(sm.forms, sm.B))
    ds = tuple(a * ell + sum(x * y for x, y in zip(c, pi_I)) for a, c in centred_gradings(sm))
    for x, y in zip(tilde, ds):
        if x + y != 0:
            raise AssertionError("transition identity violated")
    return Transition((ell, pi_I), tilde, ds)
