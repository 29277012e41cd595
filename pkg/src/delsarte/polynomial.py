"""Univariate polynomials over Q as ascending coefficient tuples.

``(1, 0, -1)`` is ``1 - t^2``.  Trailing zeros are always stripped, the zero
polynomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def trim(p) -> tuple:
    p = [_norm(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p) -> int:
    return len(trim(p)) - 1


def add(p, q) -> tuple:
    m = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(m)])


def sub(p, q) -> tuple:
    return add(p, [-c for c in q])


def mul(p, q) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p, e: int) -> tuple:
    out = (1,)
    for _ in range(e):
        out = mul(out, p)
    return out


def product(polys) -> tuple:
    out = (1,)
    for p in polys:
        out = mul(out, p)
    return out


def scale(c, p) -> tuple:
    return trim([c * x for x in p])


def divmod_poly(p, q):
    p = [Fraction(c) for c in trim(p)]
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(q[-1])
    dq = len(q) - 1
    quot = [Fraction(0)] * max(len(p) - dq, 1)
    while len(p) - 1 >= dq and any(p):
        shift = len(p) - 1 - dq
        c = p[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p.pop()
        while p and p[-1] == 0:
            p.pop()
    return trim(quot), trim(p)


def exact_div(p, q) -> tuple:
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError("polynomial division is not exact")
    return quot


def monic(p) -> tuple:
    p = trim(p)
    if not p:
        return ()
    lead = Fraction(p[-1])
    return trim([Fraction(c) / lead for c in p])


def gcd(p, q) -> tuple:
    """Monic greatest common divisor by the Euclidean algorithm over Q."""
    a, b = trim(p), trim(q)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def lcm(p, q) -> tuple:
    return monic(exact_div(mul(p, q), gcd(p, q)))


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def reciprocal(p) -> tuple:
    """``t^deg p * p(1/t)``."""
    return trim(list(reversed(trim(p))))


def t_power_minus_one(k: int) -> tuple:
    return trim([-1] + [0] * (k - 1) + [1])


def divisors(n: int) -> list:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple:
    """The d-th cyclotomic polynomial, via t^d - 1 = prod_{e | d} Phi_e."""
    p = t_power_minus_one(d)
    for e in divisors(d):
        if e < d:
            p = exact_div(p, cyclotomic(e))
    return p


def rising(shift, length: int) -> tuple:
    """Coefficients in theta of ``(theta + shift)_length``."""
    out = (1,)
    for j in range(length):
        out = mul(out, (shift + j, 1))
    return out


def compose_linear(p, a, b) -> tuple:
    """``p(a*x + b)``."""
    out = ()
    lin = (b, a)
    for c in reversed(trim(p)):
        out = add(mul(out, lin), (c,))
    return out


def content_gcd(values) -> int:
    g = 0
    for v in values:
        g = igcd(g, int(v))
    return g


def to_str(p, var: str = "t") -> str:
    p = trim(p)
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mon = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(mon)
            elif c == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{c}*{mon}")
    return " + ".join(terms).replace("+ -", "- ")
