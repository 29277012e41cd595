"""Pochhammer-type hypergeometric operators annihilating the period integrals.

Operators are written as P(theta) - s^gamma Q(theta) with theta = s d/ds and
P, Q kept as ascending coefficient tuples in theta.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import polynomial as poly
from .errors import IndicialMismatch, NotInRing, ResonanceFailure
from .lattice import StructureMatrix, in_s_delta


def _integral_form(p):
    """(integer coefficients, common denominator) so evaluation stays in ints."""
    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    return tuple(int(c * den) for c in p), den


def _eval_integral(form, x) -> Fraction:
    coeffs, den = form
    if isinstance(x, Fraction) and x.denominator != 1:
        return poly.evaluate(coeffs, x) / den
    x = int(x)
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return Fraction(acc, den)


def pochhammer(c, a, length: int) -> tuple:
    """(c + a*theta)_length = prod_{j<length} (c + j + a*theta)."""
    return poly.product((c + j, a) for j in range(length))


@dataclass(frozen=True)
class ThetaOperator:
    gamma: int
    P: tuple
    Q: tuple
    ell: int = 0
    I: Tuple[int, ...] = ()

    @cached_property
    def _integral(self):
        return _integral_form(self.P), _integral_form(self.Q)

    def eval_P(self, x) -> Fraction:
        return _eval_integral(self._integral[0], x)

    def eval_Q(self, x) -> Fraction:
        return _eval_integral(self._integral[1], x)

    def apply_to_series(self, coeffs: Dict[Fraction, Fraction]) -> Dict[Fraction, Fraction]:
        """(P(theta) - s^gamma Q(theta)) applied to sum c_e s^e."""
        out: Dict[Fraction, Fraction] = {}
        for e, c in coeffs.items():
            out[e] = out.get(e, 0) + self.eval_P(e) * c
            out[e + self.gamma] = out.get(e + self.gamma, 0) - self.eval_Q(e) * c
        return {e: c for e, c in out.items() if c != 0}


def operators(sm: StructureMatrix, ell: int, I: Sequence[int]) -> ThetaOperator:
    """P = (-theta)_gamma, Q = prod_q (L_q(I, -theta, ell))_{B_q}."""
    if not in_s_delta(sm, ell, I):
        raise NotInRing(f"u^{ell} x^{tuple(I)} is not in the ring")
    g = sm.gamma
    P = pochhammer(0, -1, g)
    Q = (1,)
    for f in sm.forms:
        Q = poly.mul(Q, pochhammer(f(I, 0, ell), Fraction(f.B, g), f.B))
    return ThetaOperator(g, P, Q, ell, tuple(I))


@dataclass(frozen=True)
class SingularLoci:
    gamma: int
    sign: int  # s^gamma = sign * radius_power
    radius_power: Fraction  # gamma^gamma / prod B_q^B_q
    arguments: Tuple[Fraction, ...]  # arg(s) / (2 pi) for the gamma finite singular points

    def equation(self) -> str:
        lhs = f"s^{self.gamma}"
        rhs = str(self.radius_power) if self.sign > 0 else f"-{self.radius_power}"
        return f"{lhs} = {rhs}"


def singular_loci(B: Sequence[int]) -> SingularLoci:
    """Zeros of the leading theta-coefficient (-1)^gamma - s^gamma prod (B_q/gamma)^B_q, plus 0 and infinity."""
    g = sum(B)
    denom = 1
    for b in B:
        denom *= b ** b
    rp = Fraction(g ** g, denom)
    sign = (-1) ** g
    offset = Fraction(0) if sign > 0 else Fraction(1, 2 * g)
    args = tuple(offset + Fraction(j, g) for j in range(g))
    return SingularLoci(g, sign, rp, args)


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def multiset_intersection(a, b) -> List[Fraction]:
    ca, cb = Counter(a), Counter(b)
    return sorted((ca & cb).elements())


def multiset_difference(a, b) -> List[Fraction]:
    ca, cb = Counter(a), Counter(b)
    return sorted((ca - cb).elements())


@dataclass(frozen=True)
class ExponentMultisets:
    c_plus: Tuple[Fraction, ...]
    c_minus: Tuple[Fraction, ...]
    c_zero: Tuple[Fraction, ...]
    gamma_bar: int


def exponent_multisets(sm: StructureMatrix, ell: int, I: Sequence[int]) -> ExponentMultisets:
    if not in_s_delta(sm, ell, I):
        raise NotInRing(f"u^{ell} x^{tuple(I)} is not in the ring")
    g = sm.gamma
    cp = [Fraction(j, g) for j in range(g)]
    cm = []
    for f in sm.forms:
        val = f(I, 0, ell)
        cm.extend(_frac((j + 1 + val) / f.B) for j in range(f.B))
    cm.sort()
    c0 = multiset_intersection(cp, cm)
    return ExponentMultisets(tuple(cp), tuple(cm), tuple(c0), len(cp) - len(c0))


@dataclass(frozen=True)
class ReducedOperator:
    alphas_plus: Tuple[Fraction, ...]
    alphas_minus: Tuple[Fraction, ...]

    def polynomials(self) -> Tuple[tuple, tuple]:
        """prod (theta_t + a+) and prod (theta_t + a- + 1), so the operator is first - t*second."""
        first = poly.product((a, 1) for a in self.alphas_plus)
        second = poly.product((a + 1, 1) for a in self.alphas_minus)
        return first, second


def reduced_operator(sm: StructureMatrix, ell: int, I: Sequence[int]) -> ReducedOperator:
    em = exponent_multisets(sm, ell, I)
    ap = multiset_difference(em.c_plus, em.c_zero)
    am = multiset_difference(em.c_minus, em.c_zero)
    return ReducedOperator(tuple(ap), tuple(am))


def has_reflection_pairing(alphas: Sequence[Fraction]) -> bool:
    """The nonzero exponents other than 1/2 are closed under x -> 1 - x (with multiplicity)."""
    rest = [a for a in alphas if a not in (0, Fraction(1, 2))]
    return Counter(rest) == Counter(1 - a for a in rest)


@dataclass(frozen=True)
class FrobeniusSeries:
    rho: int
    coefficients: Tuple[Fraction, ...]  # c_0 .. c_N, coefficient of s^{rho + m}
    truncation: int

    def as_dict(self) -> Dict[Fraction, Fraction]:
        return {Fraction(self.rho + m): c for m, c in enumerate(self.coefficients) if c != 0}


def frobenius_series(op: ThetaOperator, rho: int, N: int) -> FrobeniusSeries:
    if op.eval_P(rho) != 0:
        raise IndicialMismatch(f"{rho} is not a root of the indicial polynomial")
    g = op.gamma
    c = [Fraction(0)] * (N + 1)
    c[0] = Fraction(1)
    for m in range(0, N + 1 - g):
        if c[m] == 0:
            continue
        den = op.eval_P(rho + m + g)
        if den == 0:
            raise ResonanceFailure(f"resonance at exponent {rho + m + g}")
        c[m + g] = op.eval_Q(rho + m) * c[m] / den
    return FrobeniusSeries(rho, tuple(c), N)


def annihilation_residual(op: ThetaOperator, fs: FrobeniusSeries) -> Dict[Fraction, Fraction]:
    """Terms of op applied to the truncated series that survive; all lie above rho + N."""
    return op.apply_to_series(fs.as_dict())


@dataclass(frozen=True)
class QuantumODE:
    gamma: int
    theta_poly: tuple  # prod_q (-B_q theta_u / gamma)_{B_q}; equation u^gamma - theta_poly(theta_u)
    d_poly: tuple  # prod_q (-B_q D)_{B_q}, D = d/dt_1; equation e^{t_1} - z^gamma d_poly(D)


def quantum_ode(B: Sequence[int]) -> QuantumODE:
    g = sum(B)
    tp = poly.product(pochhammer(0, Fraction(-b, g), b) for b in B)
    dp = poly.product(pochhammer(0, -b, b) for b in B)
    return QuantumODE(g, tp, dp)
