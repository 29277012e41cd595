from fractions import Fraction
from math import comb

import pytest

from delsarte import linalg, mirror
from delsarte import polynomial as poly


def test_polar_flags(ex1, ex2):
    w2 = mirror.polar_and_flags(ex2)
    assert w2.fano and w2.reflexive and w2.pairing_ok and w2.barycenter_ok
    w1 = mirror.polar_and_flags(ex1)
    assert not w1.fano and not w1.reflexive and w1.pairing_ok and w1.barycenter_ok


def test_transpose(ex2, quad, small_cases):
    t2 = mirror.transpose_polynomial(ex2)
    assert t2.degree == 4 and t2.weights == (1, 1, 1, 1) and t2.weights_ok
    tq = mirror.transpose_polynomial(quad)
    assert tq.frak_rows == ((1, -1),) and tq.monomials == ((2, 0), (1, 1))
    assert all(mirror.transpose_polynomial(sm).weights_ok for sm in small_cases)


def test_poincare(ex1, small_cases):
    p2 = mirror.poincare_series((1, 1, 1, 1), 5)
    assert p2.coefficients[:4] == (1, 4, 10, 20)
    p1 = mirror.poincare_series(ex1.B, 10)
    assert p1.orientation == "xbar0/xbar_inf" and p1.sign == 1
    pq = mirror.poincare_series((1, 1), 4)
    assert pq.coefficients == (1, 2, 2, 2, 2)  # (1 + t)/(1 - t)
    for sm in small_cases:
        ps = mirror.poincare_series(sm.B, 3)
        assert ps.orientation == "xbar0/xbar_inf" and ps.sign == (-1) ** sm.n


def test_hilbert(small_cases):
    for B in [(1, 1, 1), (1, 2, 3), (5, 3, 4), (2, 3)]:
        h = mirror.hilbert_coefficients(B, 3 * sum(B))
        assert all(h[k] == mirror.hilbert_bruteforce(B, k) for k in range(len(h)))
        assert h[0] == 1 and all(h[k] == 0 for k in range(1, min(B)))
        den = poly.product(poly.trim([1] + [0] * (b - 1) + [-1]) for b in B)
        assert list(poly.mul(h, den)[: 3 * sum(B) + 1]) == [1] + [0] * (3 * sum(B))


def test_p2_stokes():
    gd = mirror.gram_and_stokes((1, 1, 1))
    assert gd.G == [[1, 3, 6], [0, 1, 3], [0, 0, 1]]
    assert gd.S == [[1, -3, 3], [0, 1, -3], [0, 0, 1]]


def test_stokes_shape(small_cases):
    for sm in small_cases[:20]:
        gd = mirror.gram_and_stokes(sm.B)
        g = sm.gamma
        S = gd.S
        assert all(S[i][i] == 1 for i in range(g))
        assert all(S[i][j] == 0 for i in range(g) for j in range(i))
        assert all(isinstance(x, int) for r in S for x in r)
        assert linalg.det(S) == 1


@pytest.mark.parametrize("B", [(1, 1), (1, 1, 1), (1, 1, 1, 1), (1, 1, 2), (1, 2, 3), (5, 3, 4), (1, 1, 1, 1, 1)])
def test_stokes_invariance_transposed_action(B):
    """X is fixed by H X H^T = X for both generators of the reducible pair."""
    gd = mirror.gram_and_stokes(B)
    assert gd.invariance_transposed == {"H_0": True, "H_inf": True}
    assert gd.invariance_literal["H_0"]
