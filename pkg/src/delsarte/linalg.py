"""Exact linear algebra over Q on plain nested lists.

Entries are ``int`` or :class:`fractions.Fraction`.  Results are normalised so
that integral entries come back as ``int``; that keeps integer matrices cheap
to multiply and makes equality tests on monodromy matrices trivial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence

Matrix = List[list]


def _norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[_norm(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    # row combinations, skipping zeros: cheap for the sparse companion matrices
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * ncols
        for k, x in enumerate(row):
            if x:
                acc = [s + x * y for s, y in zip(acc, b[k])]
        out.append(acc if all(type(v) is int for v in acc) else [_norm(v) for v in acc])
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [_norm(sum(x * y for x, y in zip(row, v))) for row in a]


def add(a, b) -> Matrix:
    return [[_norm(x + y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a, b) -> Matrix:
    return [[_norm(x - y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a) -> Matrix:
    return [[_norm(c * x) for x in row] for row in a]


def equal(a, b) -> bool:
    return len(a) == len(b) and all(list(ra) == list(rb) for ra, rb in zip(a, b))


def is_identity(a) -> bool:
    return equal(a, identity(len(a)))


def mat_pow(m, e: int) -> Matrix:
    if e < 0:
        return mat_pow(inverse(m), -e)
    result = identity(len(m))
    base = [list(r) for r in m]
    while e:
        if e & 1:
            result = matmul(result, base)
        e >>= 1
        if e:
            base = matmul(base, base)
    return result


def _rref_int(m):
    """Fraction-free reduction of an integer matrix; rows are kept primitive."""
    a = [list(row) for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                row = [pv * x - f * y for x, y in zip(a[i], pr)]
                g = 0
                for x in row:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                a[i] = [x // g for x in row] if g > 1 else row
        pivots.append(c)
        r += 1
    out = []
    for i, row in enumerate(a):
        if i < len(pivots):
            pv = row[pivots[i]]
            out.append([Fraction(x, pv) for x in row])
        else:
            out.append([Fraction(x) for x in row])
    return out, pivots


def rref(m: Sequence[Sequence]):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    if all(isinstance(x, int) for row in m for x in row):
        return _rref_int(m)
    a = [[Fraction(x) for x in row] for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        pr = a[r]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def nullspace(m) -> List[list]:
    """Basis of ``{x : m x = 0}`` with one free variable set to 1 per vector."""
    ncols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append([_norm(v) for v in x])
    return basis


def _det_bareiss(m) -> int:
    a = [list(row) for row in m]
    n = len(a)
    sign, prev = 1, 1
    for c in range(n - 1):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        pv = a[c][c]
        for i in range(c + 1, n):
            ai = a[i]
            f = ai[c]
            a[i] = [(pv * x - f * y) // prev for x, y in zip(ai, a[c])]
        prev = pv
    return sign * a[n - 1][n - 1] if n else 1


def det(m) -> Fraction | int:
    if all(type(x) is int for row in m for x in row):
        return _det_bareiss(m)
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return _norm(d)


def inverse(m) -> Matrix:
    n = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is not invertible")
    return [[_norm(x) for x in row[n:]] for row in red]


def solve(m, b) -> list:
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    red, pivots = rref(aug)
    n = len(m[0])
    if n in pivots or pivots != list(range(n)):
        raise ValueError("system is singular or inconsistent")
    return [_norm(red[i][n]) for i in range(n)]


def charpoly(m) -> list:
    """Characteristic polynomial ``det(t I - m)``, ascending coefficients.

    Similarity reduction to upper Hessenberg form followed by the standard
    three-term recurrence; O(n^3) field operations.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    for c in range(n - 2):
        p = next((i for i in range(c + 1, n) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != c + 1:
            a[p], a[c + 1] = a[c + 1], a[p]
            for row in a:
                row[p], row[c + 1] = row[c + 1], row[p]
        piv = a[c + 1][c]
        for i in range(c + 2, n):
            if a[i][c] != 0:
                f = a[i][c] / piv
                a[i] = [x - f * y for x, y in zip(a[i], a[c + 1])]
                for row in a:
                    row[c + 1] += f * row[i]
    # p_k = det(t I - H_k) for the leading k x k block
    polys = [[Fraction(1)]]
    for k in range(1, n + 1):
        hk = a[k - 1][k - 1]
        prev = polys[k - 1]
        cur = [Fraction(0)] + prev  # t * p_{k-1}
        for i, c in enumerate(prev):
            cur[i] -= hk * c
        prod = Fraction(1)
        for i in range(1, k):
            prod *= a[k - i][k - i - 1]
            coef = prod * a[k - i - 1][k - 1]
            if coef:
                for j, c in enumerate(polys[k - i - 1]):
                    cur[j] -= coef * c
        polys.append(cur)
    return [_norm(c) for c in polys[n]]


def is_symmetric(m) -> bool:
    return equal(m, transpose(m))


def is_antisymmetric(m) -> bool:
    return equal(m, scale(-1, transpose(m)))


def signature(m) -> tuple:
    """Inertia ``(positive, negative, zero)`` of a symmetric rational matrix.

    Congruence diagonalisation with symmetric pivoting: when no usable
    diagonal pivot is left, an off-diagonal pair is folded onto the diagonal.
    """
    if not is_symmetric(m):
        raise ValueError("signature needs a symmetric matrix")
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row_i += row_j ; col_i += col_j
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        d = a[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        col = {i: a[i][p] for i in active}
        for i in active:
            if col[i] != 0:
                f = col[i] / d
                for k in active:
                    a[i][k] -= f * col[k]
    return pos, neg, n - pos - neg
