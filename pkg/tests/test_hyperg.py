from collections import Counter
from fractions import Fraction

import pytest
import sympy

from delsarte import hyperg, jacobi, monodromy
from delsarte import polynomial as poly
from delsarte.errors import IndicialMismatch, NotInRing
from delsarte.lattice import ExponentData, build_structure

F = Fraction


def _sym(p, th):
    return sum(sympy.Rational(c.numerator, c.denominator) * th ** i if isinstance(c, Fraction) else c * th ** i
               for i, c in enumerate(p))


@pytest.mark.parametrize("a,d", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)])
def test_operator_annihilates_residue_period(a, d):
    """x^I / (x f'(x)) at a root of f = x^a + s x^d + 1 is a period of u x^I."""
    sm = build_structure(ExponentData(1, [(a,)], (d,)))
    x, s = sympy.symbols("x s")
    f = x ** a + s * x ** d + 1
    fx = sympy.diff(f, x)
    dxds = -x ** d / fx

    def theta(e):
        return sympy.together(s * (sympy.diff(e, s) + sympy.diff(e, x) * dxds))

    for I in range(1, a):
        op = hyperg.operators(sm, 1, (I,))
        y = x ** I / (x * fx)
        powers = [y]
        for _ in range(a):
            powers.append(theta(powers[-1]))
        th = sympy.symbols("th")
        P = sympy.Poly(_sym(op.P, th), th).all_coeffs()[::-1]
        Q = sympy.Poly(_sym(op.Q, th), th).all_coeffs()[::-1]
        expr = sum(c * powers[i] for i, c in enumerate(P)) - s ** a * sum(c * powers[i] for i, c in enumerate(Q))
        num = sympy.numer(sympy.together(expr))
        assert sympy.rem(sympy.expand(num), f, x) == 0


def test_operator_shapes(ex2, quad):
    op = hyperg.operators(ex2, 1, (0, 0, 0))
    assert op.P == hyperg.pochhammer(0, -1, 4)
    # Q = (theta/4)^3 (theta/4 + 1)
    assert op.Q == poly.mul(poly.power((0, F(1, 4)), 3), (1, F(1, 4)))
    oq = hyperg.operators(quad, 1, (0,))
    assert oq.P == (0, -1, 1)
    with pytest.raises(NotInRing):
        hyperg.operators(ex2, 1, (5, 0, 0))


def test_singular_loci(ex1):
    sl = hyperg.singular_loci((1, 1, 1, 1))
    assert sl.sign == 1 and sl.radius_power == 256 and sl.arguments == (0, F(1, 4), F(1, 2), F(3, 4))
    assert hyperg.singular_loci((1, 1)).radius_power == 4
    assert hyperg.singular_loci(ex1.B).radius_power == F(12 ** 12, 5 ** 5 * 3 ** 3 * 4 ** 4)
    # x^3 + s x + 1 has discriminant -4 s^3 - 27
    sl3 = hyperg.singular_loci((1, 2))
    assert sl3.sign == -1 and sl3.radius_power == F(27, 4)
    assert sl3.arguments[0] == F(1, 6)


def test_exponent_multisets(ex1, ex2):
    em = hyperg.exponent_multisets(ex1, 1, (0, 0))
    assert list(em.c_zero) == [0, F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4)]
    assert em.gamma_bar == 6 and len(em.c_plus) == len(em.c_minus) == 12
    ro = hyperg.reduced_operator(ex1, 1, (0, 0))
    assert len(ro.alphas_plus) == len(ro.alphas_minus) == 6
    assert Counter(ro.alphas_minus)[0] == 2
    ro2 = hyperg.reduced_operator(ex2, 1, (0, 0, 0))
    assert ro2.alphas_plus == (F(1, 4), F(1, 2), F(3, 4)) and ro2.alphas_minus == (0, 0, 0)
    assert hyperg.exponent_multisets(ex2, 1, (0, 0, 0)).gamma_bar == 3


def test_reduced_exponents_match_char_polys(small_cases):
    """exp(2 pi i a) over the reduced exponents are the roots of Xbar0 / Xbar_inf."""
    for sm in small_cases:
        ro = hyperg.reduced_operator(sm, 1, (0,) * sm.n)
        cp = monodromy.char_polys(sm.B)
        by_den = Counter(a.denominator for a in ro.alphas_plus)
        want = poly.product(poly.cyclotomic(d) for d in by_den)
        assert poly.trim(want) == cp.xbar0 and all(by_den[d] == sympy.totient(d) for d in by_den)
        assert hyperg.has_reflection_pairing(ro.alphas_plus)


def test_gamma_bar_three_ways(small_cases):
    for sm in small_cases:
        gb = {hyperg.exponent_multisets(sm, r.ell, r.I).gamma_bar for r in jacobi.ring_basis(sm)}
        assert gb == {len(jacobi.z_gamma_zero(sm.B))} == {monodromy.char_polys(sm.B).gamma_bar}


def test_shift_property(small_cases):
    for sm in small_cases[:10]:
        base = hyperg.exponent_multisets(sm, 1, (0,) * sm.n).c_minus
        for r in jacobi.ring_basis(sm):
            cm = hyperg.exponent_multisets(sm, r.ell, r.I).c_minus
            assert list(cm) == sorted((x + F(r.k, sm.gamma)) % 1 for x in base)


def test_frobenius(ex2, quad):
    op = hyperg.operators(ex2, 1, (0, 0, 0))
    fs = hyperg.frobenius_series(op, 0, 8)
    assert fs.coefficients[0] == 1
    assert not hyperg.annihilation_residual(op, fs) or min(hyperg.annihilation_residual(op, fs)) > 8
    last = hyperg.frobenius_series(op, 3, 4)
    assert [m for m, c in enumerate(last.coefficients) if c] == [0, 4]
    with pytest.raises(IndicialMismatch):
        hyperg.frobenius_series(op, 7, 8)
    # quadratic, u x: 1/sqrt(4 - s^2) up to normalisation
    oq = hyperg.operators(quad, 1, (1,))
    fq = hyperg.frobenius_series(oq, 0, 10)
    s = sympy.symbols("s")
    ref = sympy.series(2 / sympy.sqrt(4 - s ** 2), s, 0, 11).removeO()
    assert [sympy.Rational(c.numerator, c.denominator) for c in fq.coefficients] == [ref.coeff(s, m) for m in range(11)]


def test_frobenius_support_and_residual(small_cases):
    for sm in small_cases[:15]:
        g = sm.gamma
        op = hyperg.operators(sm, 1, (0,) * sm.n)
        for rho in range(g):
            fs = hyperg.frobenius_series(op, rho, 5 * g)
            assert all(c == 0 for m, c in enumerate(fs.coefficients) if m % g)
            assert all(e > rho + 5 * g for e in hyperg.annihilation_residual(op, fs))


def test_quantum_ode(ex2, quad):
    qo = hyperg.quantum_ode((1, 1, 1, 1))
    assert qo.theta_poly == poly.power((0, F(-1, 4)), 4)
    assert hyperg.quantum_ode((1, 1)).d_poly == (0, 0, 1)
    q00 = hyperg.operators(ex2, 0, (0, 0, 0)).Q
    assert poly.compose_linear(q00, -1, 0) == qo.theta_poly
