"""Structure matrix, weight vector and linear forms of a deformed Delsarte polynomial.

The input is the Laurent polynomial

    f(x) = sum_{j=1}^{n} x^{alpha(j)} + 1 + s x^{alpha(n+2)}

with alpha(n+1) = 0 implicit.  Everything here is exact; the linear forms are
stored with integer numerators over the common denominator gamma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Optional, Sequence, Tuple

from . import linalg
from .errors import NotInterior, ParseError, SingularMatrix


@dataclass(frozen=True)
class ExponentData:
    n: int
    alpha: Tuple[Tuple[int, ...], ...]
    alpha_deform: Tuple[int, ...]
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(tuple(int(x) for x in row) for row in self.alpha))
        object.__setattr__(self, "alpha_deform", tuple(int(x) for x in self.alpha_deform))
        if self.n < 1:
            raise ParseError("n must be a positive integer")
        if len(self.alpha) != self.n or any(len(r) != self.n for r in self.alpha):
            raise ParseError(f"alpha must be {self.n} integer vectors of length {self.n}")
        if len(self.alpha_deform) != self.n:
            raise ParseError(f"alpha_deform must have length {self.n}")

    @classmethod
    def from_dict(cls, d: dict) -> "ExponentData":
        try:
            alpha = d["alpha"]
            deform = d["alpha_deform"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"missing field {exc}") from None
        n = d.get("n", len(alpha))
        for v in list(alpha) + [deform]:
            if not isinstance(v, (list, tuple)) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
                raise ParseError("exponents must be integer vectors")
        if not isinstance(n, int):
            raise ParseError("n must be an integer")
        return cls(n, alpha, deform, d.get("name"))

    def to_dict(self) -> dict:
        out = {"n": self.n, "alpha": [list(r) for r in self.alpha], "alpha_deform": list(self.alpha_deform)}
        if self.name:
            out["name"] = self.name
        return out


@dataclass(frozen=True)
class LinearForm:
    """L(I, z, k) = (<v, I> - B z + C k) / denom."""

    v: Tuple[int, ...]
    B: int
    C: int
    denom: int

    def numerator(self, I: Sequence[int], z=0, k=0):
        return sum(a * b for a, b in zip(self.v, I)) - self.B * z + self.C * k

    def __call__(self, I: Sequence[int], z=0, k=0) -> Fraction:
        return Fraction(self.numerator(I, z, k), self.denom)

    def describe(self, var: str = "i") -> str:
        terms = [f"{c}*{var}{j + 1}" for j, c in enumerate(self.v) if c]
        if self.B:
            terms.append(f"{-self.B}*z")
        if self.C:
            terms.append(f"{self.C}*k")
        body = " + ".join(terms) if terms else "0"
        return f"({body.replace('+ -', '- ')})/{self.denom}"


@dataclass(frozen=True)
class StructureMatrix:
    data: ExponentData
    L: Tuple[Tuple[int, ...], ...]
    det: int
    gamma: int
    columns: Tuple[LinearForm, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.data.n

    @property
    def B(self) -> Tuple[int, ...]:
        return tuple(c.B for c in self.columns[: self.n + 1])

    @property
    def forms(self) -> Tuple[LinearForm, ...]:
        """The n+1 barycentric forms (z-form excluded)."""
        return self.columns[: self.n + 1]

    def vertices(self) -> Tuple[Tuple[int, ...], ...]:
        """alpha(1..n+1), with alpha(n+1) = 0."""
        return self.data.alpha + ((0,) * self.n,)

    def barycentric(self, ell: int, I: Sequence[int]) -> Tuple[Fraction, ...]:
        return tuple(f(I, 0, ell) for f in self.forms)


def structure_rows(data: ExponentData) -> list:
    n = data.n
    rows = [list(a) + [0, 1] for a in data.alpha]
    rows.append([0] * n + [0, 1])
    rows.append(list(data.alpha_deform) + [1, 1])
    return rows


def build_structure(data: ExponentData) -> StructureMatrix:
    n = data.n
    L = structure_rows(data)
    d = linalg.det(L)
    if d == 0:
        raise SingularMatrix("exponent vectors alpha(1..n) are linearly dependent")
    d = int(d)
    gamma = abs(d)
    inv = linalg.inverse(L)
    cols = []
    for q in range(n + 2):
        col = [Fraction(inv[r][q]) * gamma for r in range(n + 2)]
        if any(c.denominator != 1 for c in col):
            raise SingularMatrix("gamma * L^{-1} is not integral")  # cannot happen
        col = [int(c) for c in col]
        cols.append(LinearForm(tuple(col[:n]), -col[n], col[n + 1], gamma))
    sm = StructureMatrix(data, tuple(tuple(r) for r in L), d, gamma, tuple(cols))
    weight_vector(sm)
    return sm


def weight_vector(sm: StructureMatrix) -> Tuple[int, ...]:
    B = sm.B
    if any(b <= 0 for b in B):
        raise NotInterior(f"deformation exponent is not interior to the simplex (B = {list(B)})")
    return B


def gcd_condition(B) -> bool:
    return reduce(gcd, (int(b) for b in B), 0) == 1


def in_s_delta(sm: StructureMatrix, ell: int, I: Sequence[int]) -> bool:
    """I lies in ell * Delta(f): all n+1 barycentric forms nonnegative."""
    if ell < 0:
        return False
    return all(f.numerator(I, 0, ell) >= 0 for f in sm.forms)


def in_s_delta_bruteforce(data: ExponentData, ell: int, I: Sequence[int]) -> bool:
    """Independent check: solve I = sum t_j alpha(j) and test t >= 0, sum t <= ell."""
    A = linalg.transpose([list(a) for a in data.alpha])
    t = linalg.solve(A, list(I))
    return all(x >= 0 for x in t) and sum(t) <= ell
