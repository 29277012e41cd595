"""Local characteristic polynomials, Levelt generators and the invariant form.

Conventions: a monic polynomial t^m + a_{m-1} t^{m-1} + ... + a_0 has the
companion matrix with ones on the subdiagonal and last column -(a_0, ..., a_{m-1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from functools import reduce
from typing import Dict, List, Sequence, Tuple

from . import linalg
from . import polynomial as poly
from .errors import InvariantDimension, InvariantViolation
from .jacobi import z_gamma_zero
from .mellin import pk_residue


@dataclass(frozen=True)
class CharPolys:
    xbar0: tuple
    xbar_inf: tuple
    phi: tuple

    @property
    def gamma_bar(self) -> int:
        return poly.degree(self.xbar0)


def _prod_tb(B) -> tuple:
    return poly.product(poly.t_power_minus_one(b) for b in B)


def phi_euclid(B: Sequence[int]) -> tuple:
    g = sum(B)
    return poly.gcd(_prod_tb(B), poly.t_power_minus_one(g))


def phi_cyclotomic(B: Sequence[int]) -> tuple:
    """Product of Phi_d over divisors d of gamma dividing at least one B_q."""
    g = sum(B)
    return poly.product(poly.cyclotomic(d) for d in poly.divisors(g) if any(b % d == 0 for b in B))


def phi_inclusion_exclusion(B: Sequence[int]) -> tuple:
    """(t-1) prod_{K nonempty} ((t^{gcd C_K} - 1)/(t - 1))^{(-1)^{|K|-1}}, C_q = gcd(B_q, gamma)."""
    g = sum(B)
    C = [gcd(b, g) for b in B]
    num, den = [(1, )], []
    base = poly.t_power_minus_one(1)
    for r in range(1, len(C) + 1):
        for K in combinations(C, r):
            c = reduce(gcd, K)
            f = poly.exact_div(poly.t_power_minus_one(c), base)
            (num if r % 2 else den).append(f)
    return poly.exact_div(poly.mul(base, poly.product(num)), poly.product(den))


def char_polys(B: Sequence[int]) -> CharPolys:
    phi = phi_euclid(B)
    for other in (phi_cyclotomic(B), phi_inclusion_exclusion(B)):
        if poly.trim(other) != poly.trim(phi):
            raise InvariantViolation("gcd routes disagree")
    g = sum(B)
    x0 = poly.exact_div(poly.t_power_minus_one(g), phi)
    xi = poly.exact_div(_prod_tb(B), phi)
    return CharPolys(x0, xi, phi)


def companion(p) -> list:
    p = poly.monic(p)
    m = len(p) - 1
    M = linalg.zeros(m, m)
    for i in range(1, m):
        M[i][i - 1] = 1
    for i in range(m):
        M[i][m - 1] = -p[i]
    return linalg.as_matrix(M)


@dataclass(frozen=True)
class LeveltPair:
    h_inf: list
    h_0: list
    h_1: list


def companion_pair(B: Sequence[int]) -> LeveltPair:
    cp = char_polys(B)
    h_inf = companion(cp.xbar_inf)
    h0_inv = companion(cp.xbar0)
    h_0 = linalg.inverse(h0_inv)
    h_1 = linalg.inverse(linalg.matmul(h_0, h_inf))
    return LeveltPair(h_inf, h_0, h_1)


@dataclass(frozen=True)
class MonodromyData:
    h_inf: list
    h_0: list
    h_1: list
    generators: Tuple[list, ...]  # M_{omega^i}, i = 0..gamma-1
    M_inf: list
    H_inf: list
    H_0: list
    h0_order_ok: bool
    product_ok: bool


def global_generators(B: Sequence[int]) -> MonodromyData:
    g = sum(B)
    lp = companion_pair(B)
    hinv = linalg.inverse(lp.h_inf)
    gens = [lp.h_1]
    for _ in range(1, g):
        gens.append(linalg.matmul(linalg.matmul(hinv, gens[-1]), lp.h_inf))
    m_inf = linalg.mat_pow(lp.h_inf, g)
    prod = m_inf
    for M in reversed(gens):
        prod = linalg.matmul(prod, M)
    H_inf, H_0 = reducible_pair(B)
    return MonodromyData(
        lp.h_inf, lp.h_0, lp.h_1, tuple(gens), m_inf, H_inf, H_0,
        linalg.is_identity(linalg.mat_pow(lp.h_0, g)), linalg.is_identity(prod),
    )


def frak_b(B: Sequence[int]) -> tuple:
    """Coefficients (b_1, ..., b_{gamma-1}) of prod (t^{B_q} - 1) below the leading term."""
    p = _prod_tb(B)
    g = sum(B)
    return tuple(p[g - i] for i in range(1, g))


def reducible_pair(B: Sequence[int]) -> Tuple[list, list]:
    """H_inf = companion of prod (t^{B_q} - 1); H_0 is the inverse of the cyclic shift."""
    H_inf = companion(_prod_tb(B))
    shift = companion(poly.t_power_minus_one(sum(B)))
    return H_inf, linalg.inverse(shift)


def _pair_equations(h, m: int) -> List[Dict[int, Fraction]]:
    """Linear equations (h^T X h - X)_{ij} = 0 on a Toeplitz X_{ij} = c_{j-i}.

    Unknown c_d is indexed by d + m - 1.  Entries with i, j < m - 1 reduce to
    X_{i+1, j+1} - X_{ij} and vanish identically, so only the last row and
    column are generated.
    """
    cols = [[(r, h[r][j]) for r in range(m) if h[r][j]] for j in range(m)]
    eqs = []
    for i in range(m):
        for j in range(m):
            if i < m - 1 and j < m - 1:
                continue
            e: Dict[int, Fraction] = {}
            for k, a in cols[i]:
                for l, b in cols[j]:
                    idx = l - k + m - 1
                    e[idx] = e.get(idx, 0) + a * b
            idx = j - i + m - 1
            e[idx] = e.get(idx, 0) - 1
            eqs.append(e)
    return eqs


def _toeplitz(c, m: int) -> list:
    return linalg.as_matrix([[c[j - i + m - 1] for j in range(m)] for i in range(m)])


def invariant_space(h_a, h_b) -> List[list]:
    """All X with h^T X h = X for both companion-type generators (Toeplitz-reduced solve)."""
    m = len(h_a)
    rows = []
    for h in (h_a, h_b):
        for e in _pair_equations(h, m):
            row = [0] * (2 * m - 1)
            for k, v in e.items():
                row[k] += v
            if any(row):
                rows.append(row)
    if not rows:
        rows = [[0] * (2 * m - 1)]
    return [_toeplitz(v, m) for v in linalg.nullspace(rows)]


def invariant_space_bruteforce(gens) -> List[list]:
    """Same space from the full m^2-unknown system, for cross-checking at small size."""
    m = len(gens[0])
    rows = []
    for h in gens:
        for i in range(m):
            for j in range(m):
                row = [0] * (m * m)
                for k in range(m):
                    for l in range(m):
                        row[k * m + l] += h[k][i] * h[l][j]
                row[i * m + j] -= 1
                rows.append(row)
    return [linalg.as_matrix([v[i * m:(i + 1) * m] for i in range(m)]) for v in linalg.nullspace(rows)]


def _primitive(X) -> list:
    """Scale a rational matrix to coprime integers with a positive first nonzero entry."""
    from math import lcm

    flat = [Fraction(x) for row in X for x in row]
    den = reduce(lcm, (f.denominator for f in flat), 1)
    ints = [int(f * den) for f in flat]
    g = reduce(gcd, ints, 0) or 1
    lead = next((x for x in ints if x), 1)
    sgn = 1 if lead > 0 else -1
    m = len(X)
    return [[sgn * ints[i * m + j] // g for j in range(m)] for i in range(m)]


@dataclass(frozen=True)
class InvariantForm:
    X: list
    kind: str  # "symmetric" or "antisymmetric"
    signature: Tuple[int, int]  # (sigma+, sigma-); balanced halves of the rank when antisymmetric
    rank: int
    det: int
    hodge_alternating: int
    matches_hodge: bool


def hodge_numbers(B: Sequence[int]) -> Dict[int, int]:
    """ell -> #{k in (Z/gamma)^0 : p(k) = n - ell}."""
    n = len(B) - 1
    out: Dict[int, int] = {}
    for k in z_gamma_zero(B):
        ell = n - pk_residue(B, k)
        out[ell] = out.get(ell, 0) + 1
    return dict(sorted(out.items()))


def invariant_form(B: Sequence[int], pair: LeveltPair | None = None) -> InvariantForm:
    lp = pair or companion_pair(B)
    space = invariant_space(lp.h_inf, linalg.inverse(lp.h_0))
    if len(space) != 1:
        raise InvariantDimension(f"invariant space has dimension {len(space)}")
    X = _primitive(space[0])
    for h in (lp.h_inf, lp.h_0, lp.h_1):
        if not linalg.equal(linalg.matmul(linalg.matmul(linalg.transpose(h), X), h), X):
            raise InvariantViolation("solved form is not invariant")
    r = linalg.rank(X)
    d = int(linalg.det(X))
    alt = sum((-1) ** ell * c for ell, c in hodge_numbers(B).items())
    if linalg.is_symmetric(X):
        kind = "symmetric"
        pos, neg, _ = linalg.signature(X)
    elif linalg.is_antisymmetric(X):
        kind = "antisymmetric"
        pos = neg = r // 2
    else:
        raise InvariantViolation("invariant form is neither symmetric nor antisymmetric")
    return InvariantForm(X, kind, (pos, neg), r, d, alt, abs(pos - neg) == abs(alt))


def multiplicity_of_one(p) -> int:
    """Order of vanishing of p at t = 1."""
    k = 0
    p = poly.trim(p)
    while p and poly.evaluate(p, 1) == 0:
        p = poly.exact_div(p, (-1, 1))
        k += 1
    return k
