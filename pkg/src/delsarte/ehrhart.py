"""Lattice points in dilates of the Newton simplex, Ehrhart data, parallelepiped points."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor
from typing import Iterator, List, Tuple

import numpy as np

from .lattice import ExponentData, StructureMatrix, build_structure

_CHUNK = 1 << 20


def _structure(x) -> StructureMatrix:
    return build_structure(x) if isinstance(x, ExponentData) else x


@dataclass(frozen=True)
class EhrhartPair:
    psi: Tuple[int, ...]  # psi_0 .. psi_n
    phi: Tuple[int, ...]  # phi_0 .. phi_{n+1}

    def psi_at(self, t):
        return sum(c * t ** i for i, c in enumerate(self.psi))

    def phi_at(self, t):
        return sum(c * t ** i for i, c in enumerate(self.phi))


def _box(sm: StructureMatrix, k: int):
    verts = np.array(sm.vertices(), dtype=np.int64) * k
    return verts.min(axis=0), verts.max(axis=0)


def _box_chunks(lo, hi) -> Iterator[np.ndarray]:
    """All integer points of the box [lo, hi], in lexicographic order, chunked along axis 0."""
    n = len(lo)
    rest = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo[1:], hi[1:])]
    if rest:
        tail = np.stack(np.meshgrid(*rest, indexing="ij"), axis=-1).reshape(-1, n - 1)
    else:
        tail = np.zeros((1, 0), dtype=np.int64)
    per = max(1, _CHUNK // max(len(tail), 1))
    for start in range(int(lo[0]), int(hi[0]) + 1, per):
        heads = np.arange(start, min(start + per, int(hi[0]) + 1), dtype=np.int64)
        block = np.empty((len(heads) * len(tail), n), dtype=np.int64)
        block[:, 0] = np.repeat(heads, len(tail))
        block[:, 1:] = np.tile(tail, (len(heads), 1))
        yield block


def _form_arrays(sm: StructureMatrix):
    V = np.array([f.v for f in sm.forms], dtype=np.int64)
    C = np.array([f.C for f in sm.forms], dtype=np.int64)
    return V, C


def dilate_points(x, k: int, interior: bool = False) -> np.ndarray:
    """Lattice points of k*Delta (or of its interior), lexicographically sorted."""
    sm = _structure(x)
    if k < 0:
        return np.zeros((0, sm.n), dtype=np.int64)
    V, C = _form_arrays(sm)
    lo, hi = _box(sm, k)
    found = []
    for block in _box_chunks(lo, hi):
        vals = block @ V.T + C * k
        mask = (vals > 0).all(axis=1) if interior else (vals >= 0).all(axis=1)
        found.append(block[mask])
    return np.concatenate(found) if found else np.zeros((0, sm.n), dtype=np.int64)


def count_points(x, k: int, interior: bool = False) -> int:
    """Number of lattice points in k*Delta (closed) or its relative interior."""
    sm = _structure(x)
    if k < 0:
        return 0
    V, C = _form_arrays(sm)
    lo, hi = _box(sm, k)
    total = 0
    for block in _box_chunks(lo, hi):
        vals = block @ V.T + C * k
        total += int(((vals > 0) if interior else (vals >= 0)).all(axis=1).sum())
    return total


def ehrhart(x) -> EhrhartPair:
    """psi and phi from point counts by finite differences against (1-t)^(n+1)."""
    sm = _structure(x)
    n = sm.n
    closed = [count_points(sm, k) for k in range(n + 1)]
    inner = [count_points(sm, k, interior=True) for k in range(n + 2)]

    def diff(counts, i):
        return sum((-1) ** j * comb(n + 1, j) * counts[i - j] for j in range(i + 1))

    psi = tuple(diff(closed, i) for i in range(n + 1))
    phi = tuple(diff(inner, i) for i in range(n + 2))
    return EhrhartPair(psi, phi)


def ehrhart_polynomial_value(pair: EhrhartPair, n: int, k: int) -> int:
    """ell(k Delta) = sum_i psi_i C(k - i + n, n)."""
    return sum(c * comb(k - i + n, n) for i, c in enumerate(pair.psi) if k - i >= 0)


def _reduce(sm: StructureMatrix, point):
    """Move (ell, I) into the half-open parallelepiped by dropping integer parts of t."""
    ell, I = point[0], point[1:]
    ts = [f(I, 0, ell) for f in sm.forms]
    shift = [floor(t) for t in ts]
    verts = sm.vertices()
    out_ell = ell - sum(shift)
    out_I = [I[i] - sum(s * v[i] for s, v in zip(shift, verts)) for i in range(sm.n)]
    return (out_ell, *out_I)


def parallelepiped_points(x) -> List[Tuple[int, Tuple[int, ...]]]:
    """The gamma lattice points (ell, I) = sum t_j (1, alpha(j)), 0 <= t_j < 1.

    They are coset representatives of Z^{n+1} modulo the cone generators, so
    they are found by closing {0} under the unit vectors and reducing.
    """
    sm = _structure(x)
    n = sm.n
    start = (0,) * (n + 1)
    seen = {start}
    frontier = [start]
    units = [tuple(1 if i == j else 0 for i in range(n + 1)) for j in range(n + 1)]
    while frontier:
        nxt = []
        for p in frontier:
            for u in units:
                q = _reduce(sm, tuple(a + b for a, b in zip(p, u)))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted((p[0], tuple(p[1:])) for p in seen)


def parallelepiped_points_bruteforce(x) -> List[Tuple[int, Tuple[int, ...]]]:
    """Same set by scanning ell*Delta for ell <= n and keeping points with every t_j < 1."""
    sm = _structure(x)
    out = []
    for ell in range(sm.n + 1):
        for I in dilate_points(sm, ell):
            I = tuple(int(v) for v in I)
            if all(f.numerator(I, 0, ell) < f.denom for f in sm.forms):
                out.append((ell, I))
    return sorted(out)


def height_histogram(points) -> dict:
    hist = {}
    for ell, _ in points:
        hist[ell] = hist.get(ell, 0) + 1
    return hist


def barycentric_t(sm: StructureMatrix, ell: int, I) -> Tuple[Fraction, ...]:
    return sm.barycentric(ell, I)
