import pytest
import sympy

from delsarte import linalg, monodromy
from delsarte import polynomial as poly
from delsarte.jacobi import z_gamma_zero

EX1_B = (5, 3, 4)
EX2_B = (1, 1, 1, 1)


def test_char_polys_examples():
    c1 = monodromy.char_polys(EX1_B)
    assert c1.xbar0 == (1, -1, 0, 1, 0, -1, 1)
    assert c1.xbar_inf == (1, -1, 0, 0, 0, -1, 1)
    assert poly.degree(c1.phi) == 6
    c2 = monodromy.char_polys(EX2_B)
    assert c2.xbar0 == (1, 1, 1, 1) and c2.xbar_inf == (-1, 3, -3, 1) and c2.phi == (-1, 1)


def test_gcd_routes_against_sympy(small_cases):
    t = sympy.symbols("t")
    for sm in small_cases:
        B = sm.B
        a = sympy.prod([t ** b - 1 for b in B])
        g = sympy.Poly(sympy.gcd(a, t ** sum(B) - 1), t).monic()
        want = tuple(int(c) for c in g.all_coeffs()[::-1])
        assert monodromy.phi_euclid(B) == monodromy.phi_cyclotomic(B) == monodromy.phi_inclusion_exclusion(B) == want


def test_char_poly_identities(small_cases):
    for sm in small_cases:
        B, n = sm.B, sm.n
        cp = monodromy.char_polys(B)
        assert cp.gamma_bar == poly.degree(cp.xbar_inf) == len(z_gamma_zero(B))
        assert poly.mul(cp.xbar0, cp.phi) == poly.t_power_minus_one(sum(B))
        assert monodromy.multiplicity_of_one(cp.xbar_inf) == n
        assert cp.xbar_inf[0] == (-1) ** n and cp.xbar0[0] == 1


def test_companion_example2():
    lp = monodromy.companion_pair(EX2_B)
    assert [row[-1] for row in lp.h_inf] == [1, -3, 3]
    I = linalg.identity(3)
    assert linalg.rank(linalg.sub(lp.h_1, I)) == 1
    assert linalg.is_identity(linalg.matmul(lp.h_1, lp.h_1))
    lp1 = monodromy.companion_pair(EX1_B)
    assert linalg.rank(linalg.sub(lp1.h_1, linalg.identity(6))) == 1
    assert linalg.det(lp1.h_1) == 1  # (-1)^n


def test_global_generators():
    for B in (EX1_B, EX2_B, (1, 1)):
        md = monodromy.global_generators(B)
        assert md.h0_order_ok and md.product_ok
        assert len(md.generators) == sum(B)
        for M in md.generators:
            assert linalg.rank(linalg.sub(M, linalg.identity(len(M)))) == 1
    md = monodromy.global_generators((1, 1))
    assert md.h_inf == [[1]] and md.h_0 == [[-1]]


def test_reducible_pair():
    H_inf, H_0 = monodromy.reducible_pair(EX2_B)
    assert monodromy.frak_b(EX2_B) == (-4, 6, -4)
    assert H_inf[0][-1] == -1
    assert monodromy.frak_b((1, 1, 1)) == (-3, 3)
    assert linalg.charpoly(H_inf) == [1, -4, 6, -4, 1]
    assert linalg.det(H_0) in (1, -1)
    for B in (EX1_B, EX2_B, (1, 2, 3)):
        _, H_0 = monodromy.reducible_pair(B)
        assert linalg.is_identity(linalg.mat_pow(H_0, sum(B)))


def test_invariant_form_examples():
    f1 = monodromy.invariant_form(EX1_B)
    assert f1.kind == "antisymmetric" and f1.signature[0] == f1.signature[1] and f1.det != 0
    f2 = monodromy.invariant_form(EX2_B)
    assert f2.kind == "symmetric" and f2.det != 0
    assert abs(f2.signature[0] - f2.signature[1]) == 1 == abs(f2.hodge_alternating)


def test_hodge_numbers():
    assert monodromy.hodge_numbers(EX1_B) == {1: 3, 2: 3}
    assert monodromy.hodge_numbers(EX2_B) == {1: 1, 2: 1, 3: 1}


def test_invariant_space_matches_bruteforce(small_cases):
    for sm in small_cases:
        lp = monodromy.companion_pair(sm.B)
        if len(lp.h_inf) > 8:
            continue
        fast = monodromy.invariant_space(lp.h_inf, linalg.inverse(lp.h_0))
        slow = monodromy.invariant_space_bruteforce([lp.h_inf, lp.h_0])
        assert len(fast) == len(slow) == 1
        a, b = fast[0], slow[0]
        i, j = next((i, j) for i in range(len(a)) for j in range(len(a)) if b[i][j])
        assert linalg.equal(linalg.scale(sympy.Rational(1), a), linalg.scale(sympy.Rational(a[i][j]) / b[i][j], b))


def test_invariant_form_properties(small_cases):
    for sm in small_cases:
        f = monodromy.invariant_form(sm.B)
        assert f.det != 0 and f.matches_hodge
        assert f.kind == ("symmetric" if sm.n % 2 else "antisymmetric")
