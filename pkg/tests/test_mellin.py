from fractions import Fraction

import pytest

from delsarte import jacobi, mellin
from delsarte.errors import NotInRing, NotInZGammaZero
from delsarte.monodromy import hodge_numbers

F = Fraction


def test_gamma_arguments(ex1, ex2):
    gp = mellin.mellin_transform(ex1, 1, (0, 0))
    assert gp.args == ((0, F(-5, 12)), (0, F(-3, 12)), (1, F(-4, 12)), (0, 1))
    gp2 = mellin.mellin_transform(ex2, 1, (1, 1, 1))
    assert gp2.args == ((F(1, 4), F(-1, 4)),) * 4 + ((0, 1),)
    assert mellin.mellin_transform(ex1, 0, (0, 0)).degenerate
    with pytest.raises(NotInRing):
        mellin.mellin_transform(ex1, 1, (4, 0))


def test_z_coefficients_sum(small_cases):
    for sm in small_cases:
        gp = mellin.mellin_transform(sm, 1, (0,) * sm.n)
        assert sum(a for _, a in gp.args[:-1]) == -1
        assert gp.args[-1] == (0, 1)


def test_positive_poles(ex1, ex2):
    gp = mellin.mellin_transform(ex1, 1, (0, 0))
    assert mellin.positive_poles(gp, 6) == [0, 0, F(12, 5), 3, 4, F(24, 5), 6]
    gp2 = mellin.mellin_transform(ex2, 1, (1, 1, 1))
    assert mellin.positive_poles(gp2, 1) == [1, 1, 1, 1]


def test_pole_order(ex1):
    assert mellin.pole_order_at_zero(ex1, 1, (0, 0)) == 2
    assert mellin.pole_order_at_zero(ex1, 1, (1, 0)) == 0  # forms 1/12, 3/12, 8/12
    assert mellin.pole_order_at_zero(ex1, 1, (3, 0)) == 1


def test_beta(ex1, ex2):
    r1 = jacobi.descend(ex1, 1)
    assert mellin.beta_and_rbeta(ex1, [r1]).beta == (1,)
    r2 = jacobi.descend(ex2, 1)
    bd = mellin.beta_and_rbeta(ex2, [r2])
    assert bd.beta == (1,) and bd.r_table[F(1)] == 4


def test_pk_examples():
    assert [mellin.pk_residue((5, 3, 4), k) for k in (1, 2, 5, 7, 10, 11)] == [1, 0, 1, 0, 1, 0]
    assert [mellin.pk_residue((1, 1, 1, 1), k) for k in (1, 2, 3)] == [2, 1, 0]
    with pytest.raises(NotInZGammaZero):
        mellin.pk_residue((5, 3, 4), 3)


def test_pk_properties(small_cases):
    for sm in small_cases:
        B, n, g = sm.B, sm.n, sm.gamma
        for k in jacobi.z_gamma_zero(B):
            assert mellin.p_from_poles(B, k) == mellin.p_closed(B, k)
            assert mellin.p_closed(B, k) + mellin.p_closed(B, g - k) == n - 1
        assert hodge_numbers(B) == jacobi.hodge_weight_classification(sm).pure_ell_histogram


def test_basis_poles(small_cases):
    for sm in small_cases:
        for r in jacobi.ring_basis(sm):
            assert mellin.pole_order_at_zero(sm, r.ell, r.I) == r.weight_defect
            gp = mellin.mellin_transform(sm, r.ell, r.I)
            if r.weight_defect == 0:
                assert min(mellin.positive_poles(gp, sm.gamma)) > 0
            neg = [z for z, q in mellin.poles(gp, -5, 0) if q == sm.n + 1]
            assert neg == [-5, -4, -3, -2, -1, 0]
