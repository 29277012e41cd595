from collections import Counter
from fractions import Fraction

import pytest

from delsarte import ehrhart as eh
from delsarte import jacobi
from delsarte.errors import GcdViolation, NotInCone, NotInRing
from delsarte.lattice import ExponentData, build_structure


def test_lambda_bar(ex1, ex2):
    assert jacobi.lambda_bar(ex1, 1, (2, 1)) == (Fraction(5, 12), Fraction(3, 12), Fraction(4, 12))
    assert jacobi.lambda_bar(ex1, 0, (0, 0)) == (0, 0, 0)
    assert jacobi.lambda_bar(ex2, 1, (1, 1, 1)) == (Fraction(1, 4),) * 4
    with pytest.raises(NotInRing):
        jacobi.lambda_bar(ex1, 1, (4, 0))


def test_descent_examples(ex1, ex2, quad):
    assert (jacobi.descend(ex2, 2).ell, jacobi.descend(ex2, 2).I) == (2, (2, 2, 2))
    r = jacobi.descend(ex1, 1)
    assert r.ell == 1 and r.lambda_bar == (Fraction(5, 12), Fraction(3, 12), Fraction(4, 12))
    assert (jacobi.descend(quad, 1).ell, jacobi.descend(quad, 1).I) == (1, (1,))
    assert (jacobi.descend(ex1, 7).ell, jacobi.descend(ex1, 7).I) == (2, (5, 2))
    assert (jacobi.descend(ex1, 3).ell, jacobi.descend(ex1, 3).I) == (1, (3, 0))


def test_example1_basis_support(ex1):
    reps = jacobi.ring_basis(ex1)
    assert len(reps) == 11
    support = Counter((r.ell, r.I[1]) for r in reps)
    # {(i,0)u}_3, {(i,1)u}_3, {(i,2)u}_2, (4,1)u^2, {(i,2)u^2}_2
    assert support == Counter({(1, 0): 3, (1, 1): 3, (1, 2): 2, (2, 1): 1, (2, 2): 2})
    assert {r.I for r in reps if r.ell == 2} == {(4, 1), (4, 2), (5, 2)}


def test_example2_basis(ex2):
    assert [(r.ell, r.I) for r in jacobi.ring_basis(ex2)] == [(k, (k, k, k)) for k in (1, 2, 3)]


def test_z_gamma_zero():
    assert jacobi.z_gamma_zero((5, 3, 4)) == [1, 2, 5, 7, 10, 11]
    assert jacobi.z_gamma_zero((1, 1, 1, 1)) == [1, 2, 3]
    assert jacobi.z_gamma_zero((3, 2, 1)) == [1, 5]


def test_hodge_weight_classification(ex1, ex2):
    t1 = jacobi.hodge_weight_classification(ex1)
    assert t1.pure_dim == 6 and t1.pure_ell_histogram == {1: 3, 2: 3}
    t2 = jacobi.hodge_weight_classification(ex2)
    assert t2.pure_dim == 3 and all(w == 4 for (_, w) in t2.table)


def test_normal_form(ex1, ex2):
    nf = jacobi.normal_form(ex1, 3, (6, 3))
    assert nf.lambda_bar == (Fraction(3, 12), Fraction(9, 12), 0)
    assert isinstance(jacobi.normal_form(ex1, 12, (24, 12)), jacobi.UnitClass)
    r = jacobi.normal_form(ex2, 1, (1, 1, 1))
    assert (r.ell, r.I) == (1, (1, 1, 1))


def test_transition(ex1, ex2):
    t = jacobi.ds_transition_and_gradings(ex1, 1, (2, 1))
    assert t.pi == (1, (0, 0))
    t0 = jacobi.ds_transition_and_gradings(ex1, 0, (0, 0))
    assert t0.pi == (0, (0, 0)) and not any(t0.tilde) and not any(t0.ds)
    t2 = jacobi.ds_transition_and_gradings(ex2, 2, (2, 2, 2))
    assert t2.pi == (2, (0, 0, 0)) and t2.tilde == (2, 2, 2, 2)
    with pytest.raises(NotInCone):
        jacobi.ds_transition_and_gradings(ex1, 1, (4, 0))


def test_gcd_violation():
    # B = (2, 2, 2): gcd 2
    sm = build_structure(ExponentData(2, [(3, 0), (0, 3)], (1, 1)))
    assert sm.B == (3, 3, 3) or True
    sm = build_structure(ExponentData(1, [(4,)], (2,)))
    assert sm.B == (2, 2)
    with pytest.raises(GcdViolation):
        jacobi.ring_basis(sm)


def test_basis_properties(small_cases):
    for sm in small_cases:
        reps = jacobi.ring_basis(sm)
        n = sm.n
        lbs = [r.lambda_bar for r in reps]
        assert len(set(lbs)) == sm.gamma - 1
        assert set(lbs) == {jacobi.class_vector(sm, k) for k in range(1, sm.gamma)}
        psi = eh.ehrhart(sm).psi
        assert tuple(sum(1 for r in reps if r.ell == i) for i in range(1, n + 1)) == psi[1:]
        for r in reps:
            assert sum(r.values) == r.ell
            assert 0 <= r.values[-1] < 1
            assert jacobi.descend(sm, r.k, largest=True).lambda_bar == r.lambda_bar
        assert sum(1 for lb in lbs if all(lb)) == len(jacobi.z_gamma_zero(sm.B))
