"""Gamma-product skeleton of the Mellin transforms of period integrals.

The transform of the period attached to u^ell x^I is, up to a periodic factor
that is never evaluated here, the product of Gamma(L_q(I, z, ell)) over
q = 1..n+2.  Each argument is an affine function c + a z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Dict, List, Sequence, Tuple

from .errors import NotInRing, NotInZGammaZero
from .jacobi import z_gamma_zero
from .lattice import StructureMatrix, in_s_delta


@dataclass(frozen=True)
class GammaProduct:
    ell: int
    I: Tuple[int, ...]
    args: Tuple[Tuple[Fraction, Fraction], ...]  # (constant, z-coefficient), q = 1..n+2
    prefactor_class: str = "periodic, undetermined"

    @property
    def degenerate(self) -> bool:
        return self.ell == 0 and not any(self.I)

    def describe(self) -> List[str]:
        out = []
        for c, a in self.args:
            if c == 0:
                out.append(f"{a}*z")
            else:
                out.append(f"{c} + {a}*z".replace("+ -", "- "))
        return out


def mellin_transform(sm: StructureMatrix, ell: int, I: Sequence[int]) -> GammaProduct:
    if not in_s_delta(sm, ell, I):
        raise NotInRing(f"u^{ell} x^{tuple(I)} is not in the ring")
    args = []
    for f in sm.columns:
        c = f(I, 0, ell)
        a = Fraction(-f.B, f.denom)
        args.append((c, a))
    return GammaProduct(ell, tuple(I), tuple(args))


def poles(gp: GammaProduct, lo, hi) -> List[Tuple[Fraction, int]]:
    """Poles of the Gamma product in [lo, hi] as (z, q) pairs, simple per factor.

    Gamma(c + a z) has poles where c + a z = -m, m >= 0.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    out = []
    for q, (c, a) in enumerate(gp.args):
        if a == 0:
            continue
        # z = (-m - c) / a ; collect m in the range mapping into [lo, hi]
        m1, m2 = sorted(((-c - a * lo), (-c - a * hi)))
        for m in range(max(0, ceil(m1)), floor(m2) + 1):
            z = (-m - c) / a
            if lo <= z <= hi:
                out.append((z, q))
    return sorted(out)


def positive_poles(gp: GammaProduct, bound) -> List[Fraction]:
    """Multiset union over q <= n+1 of (gamma/B_q)(L_q(I,0,ell) + Z_{>=0}), clipped at bound."""
    out = []
    bound = Fraction(bound)
    for c, a in gp.args[:-1]:
        if a >= 0:
            continue
        step = -1 / a
        m = 0
        while (c + m) * step <= bound:
            out.append((c + m) * step)
            m += 1
    return sorted(out)


def pole_order_at_zero(sm: StructureMatrix, ell: int, I: Sequence[int]) -> int:
    if not in_s_delta(sm, ell, I):
        raise NotInRing(f"u^{ell} x^{tuple(I)} is not in the ring")
    return sum(1 for f in sm.forms if f.numerator(I, 0, ell) == 0)


@dataclass(frozen=True)
class BetaData:
    beta: Tuple[Fraction, ...]  # one per rep
    r_table: Dict[Fraction, int]  # beta -> r(beta)


def _tilde(sm: StructureMatrix, ell, I) -> List[Fraction]:
    return [Fraction(sm.gamma, b) * f(I, 0, ell) for f, b in zip(sm.forms, sm.B)]


def r_of(sm: StructureMatrix, reps, beta: Fraction) -> int:
    """max over reps of #{q : (gamma/B_q) L_q = beta mod Z}."""
    best = 0
    for rep in reps:
        cnt = sum(1 for t in _tilde(sm, rep.ell, rep.I) if (t - beta).denominator == 1)
        best = max(best, cnt)
    return best


def beta_and_rbeta(sm: StructureMatrix, reps) -> BetaData:
    betas = tuple(min(_tilde(sm, r.ell, r.I)) for r in reps)
    values = sorted({t for r in reps for t in _tilde(sm, r.ell, r.I)})
    table = {}
    for b in values:
        rb = r_of(sm, reps, b)
        for m in (1, 2):
            if r_of(sm, reps, b - m) != rb:
                raise AssertionError("r(beta) is not invariant under integer shifts")
        table[b] = rb
    return BetaData(betas, table)


def p_closed(B: Sequence[int], k: int) -> int:
    """n - sum <k B_q / gamma>."""
    g = sum(B)
    s = sum(Fraction((k * b) % g, g) for b in B)
    return len(B) - 1 - int(s)


def p_from_poles(B: Sequence[int], k: int) -> int:
    """Signed pole count of prod Gamma(B_q(1-w)/gamma) / Gamma(1-w) over w in [1, k+1]."""
    g = sum(B)
    count = 0
    for b in B:
        # poles at w = 1 + m g / b
        m = 0
        while 1 + Fraction(m * g, b) <= k + 1:
            count += 1
            m += 1
    count -= k + 1  # Gamma(1 - w) has poles at w = 1, 2, ..., k+1
    return count


def pk_residue(B: Sequence[int], k: int) -> int:
    if k not in z_gamma_zero(B):
        raise NotInZGammaZero(f"k={k} is not in (Z/{sum(B)})^0")
    a, b = p_from_poles(B, k), p_closed(B, k)
    if a != b:
        raise AssertionError(f"p({k}) disagrees: {a} != {b}")
    return b
