"""Tests for exact arithmetic: integers, prime fields, polynomials.

Expected values come from independent elementary computations (brute-force
scans, product formulas, identity checks), never from the code under test.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from starpoints.exact import (
    FieldGF,
    Poly,
    QQ,
    bad_primes_of_model,
    crt_pair,
    factorize,
    int_poly_discriminant,
    int_poly_resultant,
    is_perfect_square,
    is_prime,
    isqrt_exact,
    legendre,
    rational_reconstruct,
    rational_valuation,
    sqrt_mod_p,
    strip_primes,
    valuation,
)


# ---------------------------------------------------------------------------
# integer utilities


@given(st.integers(min_value=0, max_value=10**30))
def test_isqrt_roundtrip(n):
    assert is_perfect_square(n * n)
    assert isqrt_exact(n * n) == n


@given(st.integers(min_value=2, max_value=10**15))
def test_non_squares_detected(n):
    # n^2 + n sits strictly between n^2 and (n+1)^2
    assert not is_perfect_square(n * n + n)
    assert not is_perfect_square(-4)


def test_valuation_basics():
    assert valuation(360, 2) == 3
    assert valuation(360, 3) == 2
    assert valuation(360, 5) == 1
    assert rational_valuation(Fraction(9, 50), 5) == -2
    with pytest.raises(ValueError):
        valuation(0, 5)


def test_crt_pair():
    r, m = crt_pair(2, 3, 3, 5)
    assert m == 15
    assert r % 3 == 2 and r % 5 == 3
    with pytest.raises(ValueError):
        crt_pair(1, 6, 2, 9)


@given(
    st.integers(min_value=-500, max_value=500),
    st.integers(min_value=1, max_value=500),
)
def test_rational_reconstruction(num, den):
    m = 2 * 501 * 501 + 1  # > 2 * bound^2
    from math import gcd

    g = gcd(num, den)
    num, den = num // (g or 1), den // (g or 1)
    if gcd(den, m) != 1:
        return
    a = num * pow(den, -1, m) % m
    rec = rational_reconstruct(a, m, bound=501)
    assert rec == Fraction(num, den)


def test_legendre_vs_bruteforce():
    for p in (3, 5, 7, 11, 13):
        squares = {a * a % p for a in range(1, p)}
        for a in range(1, p):
            expected = 1 if a in squares else -1
            assert legendre(a, p) == expected
        assert legendre(0, p) == 0


def test_sqrt_mod_p_all_cases():
    # covers p = 3 mod 4, p = 5 mod 8, p = 1 mod 8 (Tonelli-Shanks)
    for p in (7, 13, 17, 29, 41, 97):
        for a in range(p):
            if a == 0:
                assert sqrt_mod_p(0, p) == 0
                continue
            if legendre(a, p) == 1:
                r = sqrt_mod_p(a, p)
                assert r * r % p == a
                assert r <= p - r  # canonical branch: smaller root
            else:
                with pytest.raises(ValueError):
                    sqrt_mod_p(a, p)


def test_factorize_and_strip():
    assert factorize(2**3 * 3 * 49) == {2: 3, 3: 1, 7: 2}
    assert strip_primes(2**5 * 3**2 * 35, [2, 5]) == 9 * 7
    assert strip_primes(0, [2]) == 0


# ---------------------------------------------------------------------------
# prime fields

gf7 = FieldGF(7)


@given(st.integers(), st.integers(), st.integers())
def test_gf_ring_axioms(a, b, c):
    F = gf7
    a, b, c = F.from_int(a), F.from_int(b), F.from_int(c)
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0


@given(st.integers(min_value=1, max_value=6))
def test_gf_inverses(a):
    assert gf7.mul(a, gf7.inv(a)) == 1


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        FieldGF(6)
    assert is_prime(101) and not is_prime(1)


# ---------------------------------------------------------------------------
# polynomials

coeff_lists = st.lists(st.integers(min_value=-9, max_value=9), min_size=0, max_size=7)


def _mkpoly(field, ints):
    return Poly.from_ints(field, ints)


@settings(max_examples=120)
@given(coeff_lists, coeff_lists)
def test_poly_divmod_identity_gf(a, b):
    A, B = _mkpoly(gf7, a), _mkpoly(gf7, b)
    if B.is_zero():
        with pytest.raises(ZeroDivisionError):
            divmod(A, B)
        return
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.degree < B.degree


@settings(max_examples=120)
@given(coeff_lists, coeff_lists)
def test_poly_divmod_identity_qq(a, b):
    A, B = _mkpoly(QQ, a), _mkpoly(QQ, b)
    if B.is_zero():
        return
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.degree < B.degree


@settings(max_examples=120)
@given(coeff_lists, coeff_lists)
def test_poly_xgcd_bezout(a, b):
    A, B = _mkpoly(gf7, a), _mkpoly(gf7, b)
    g, s, t = A.xgcd(B)
    assert s * A + t * B == g
    if not g.is_zero():
        assert (A % g).is_zero() and (B % g).is_zero()
        assert g.leading() == 1


@given(coeff_lists, st.integers(min_value=-5, max_value=5), st.integers(min_value=-5, max_value=5))
def test_poly_compose_linear(coeffs, a, b):
    P = _mkpoly(QQ, coeffs)
    comp = P.compose_linear(Fraction(a), Fraction(b))
    for x in (Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 3)):
        assert comp.evaluate(x) == P.evaluate(a * x + b)


def test_poly_roots_rational():
    # (2x - 1)(x + 3)(x - 5) expanded
    P = Poly(QQ, [Fraction(15), Fraction(-7, 1), Fraction(-9, 1), Fraction(2)])
    # expand to double check: (2x-1)(x+3)(x-5) = (2x-1)(x^2-2x-15) = 2x^3-5x^2-28x+15
    P = Poly.from_ints(QQ, [15, -28, -5, 2])
    assert P.roots() == [Fraction(-3), Fraction(1, 2), Fraction(5)]


def test_poly_roots_gf():
    # x^2 + 1 over GF(5): roots 2, 3 (since 4 = -1)
    P = Poly.from_ints(FieldGF(5), [1, 0, 1])
    assert P.roots() == [2, 3]


def test_resultant_product_formula():
    # res(prod(x - a_i), prod(x - b_j)) = prod (a_i - b_j) for monic inputs
    avals, bvals = [1, -2, 4], [0, 3]
    A = Poly.one(QQ)
    for a in avals:
        A = A * Poly.from_ints(QQ, [-a, 1])
    B = Poly.one(QQ)
    for b in bvals:
        B = B * Poly.from_ints(QQ, [-b, 1])
    expected = 1
    for a in avals:
        for b in bvals:
            expected *= a - b
    got = int_poly_resultant([int(c) for c in A.coeffs], [int(c) for c in B.coeffs])
    assert got == expected


def test_discriminant_quadratic():
    # disc(ax^2 + bx + c) = b^2 - 4ac
    for a, b, c in [(1, 3, 1), (2, -1, 5), (3, 7, -2)]:
        assert int_poly_discriminant([c, b, a]) == b * b - 4 * a * c


def test_bad_primes():
    # y^2 = x(x-1)(x+1): disc of x^3 - x is 4; bad primes {2}
    assert bad_primes_of_model([0, -1, 0, 1]) == {2}
    with pytest.raises(ValueError):
        bad_primes_of_model([0, 0, 1])  # x^2, not squarefree


def test_poly_reverse():
    P = Poly.from_ints(QQ, [1, 2, 3])
    assert P.reverse() == Poly.from_ints(QQ, [3, 2, 1])
    assert P.reverse(4) == Poly.from_ints(QQ, [0, 0, 3, 2, 1])


def test_poly_derivative_and_eval():
    P = Poly.from_ints(QQ, [5, 0, -3, 2])  # 2x^3 - 3x^2 + 5
    assert P.derivative() == Poly.from_ints(QQ, [0, -6, 6])
    assert P.evaluate(Fraction(2)) == 2 * 8 - 3 * 4 + 5


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def test_smith_normal_form_random_matrices():
    # oracle: sympy's Smith normal form for the diagonal, plus the defining
    # identity U*A*V = D checked directly
    from sympy import Matrix
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    from starpoints.exact import smith_normal_form

    rng = random.Random(20260818)
    for _ in range(120):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        D, U, V = smith_normal_form(A)
        assert _matmul(_matmul(U, A), V) == D
        assert abs(Matrix(U).det()) == 1
        assert abs(Matrix(V).det()) == 1
        diag = [D[i][i] for i in range(min(m, n))]
        for a, b in zip(diag, diag[1:]):
            assert (b % a == 0) if a != 0 else (b == 0)
        assert all(d >= 0 for d in diag)
        expected = [abs(int(x)) for x in sympy_snf(Matrix(A)).diagonal()]
        expected += [0] * (min(m, n) - len(expected))
        assert diag == expected


def test_smith_normal_form_known_triangular():
    # relations 2g1 = 0, 2g2 = g1 present Z/4: factors 1, 4
    from starpoints.exact import smith_normal_form

    D, U, V = smith_normal_form([[2, 0], [-1, 2]])
    assert [D[0][0], D[1][1]] == [1, 4]
    assert _matmul(_matmul(U, [[2, 0], [-1, 2]]), V) == D


def test_unimodular_inverse():
    from starpoints.exact import unimodular_inverse

    rng = random.Random(7)
    for _ in range(60):
        k = rng.randint(1, 5)
        # build a unimodular matrix from random elementary operations
        M = [[int(i == j) for j in range(k)] for i in range(k)]
        for _ in range(12):
            i, j = rng.randrange(k), rng.randrange(k)
            if i != j:
                c = rng.randint(-3, 3)
                M[i] = [a + c * b for a, b in zip(M[i], M[j])]
        W = unimodular_inverse(M)
        ident = [[int(i == j) for j in range(k)] for i in range(k)]
        assert _matmul(M, W) == ident
        assert _matmul(W, M) == ident
    with pytest.raises(AssertionError):
        unimodular_inverse([[2, 0], [0, 1]])


# ---------------------------------------------------------------------------
# rational functions


def _rq(*coeffs):
    from starpoints.exact import RationalFunction

    return RationalFunction(Poly(QQ, [Fraction(c) for c in coeffs]), Poly.one(QQ))


def test_rational_function_reduces_to_lowest_terms():
    from starpoints.exact import RationalFunction

    # (x^2 - 1)/(x - 1) = x + 1, with a monic denominator
    num = Poly(QQ, [Fraction(-1), Fraction(0), Fraction(1)])
    den = Poly(QQ, [Fraction(-1), Fraction(1)])
    r = RationalFunction(num, den)
    assert r.is_polynomial()
    assert r.num.coeffs == (Fraction(1), Fraction(1))
    # scaling numerator and denominator together changes nothing
    r2 = RationalFunction(num.scale(Fraction(3)), den.scale(Fraction(3)))
    assert r == r2


def test_rational_function_arithmetic():
    from starpoints.exact import RationalFunction

    x = RationalFunction.x(QQ)
    one = RationalFunction.constant(QQ, Fraction(1))
    inv_x = one / x
    # x + 1/x = (x^2 + 1)/x
    s = x + inv_x
    assert s.num.coeffs == (Fraction(1), Fraction(0), Fraction(1))
    assert s.den.coeffs == (Fraction(0), Fraction(1))
    assert s - x == inv_x
    assert x * inv_x == one
    assert (s * x - x * x).num.coeffs == (Fraction(1),)
    assert (-s + s).is_zero()


def test_rational_function_evaluate_and_poles():
    from starpoints.exact import RationalFunction

    r = RationalFunction(Poly.one(QQ), Poly(QQ, [Fraction(0), Fraction(1)]))
    assert r.evaluate(Fraction(4)) == Fraction(1, 4)
    with pytest.raises(ZeroDivisionError):
        r.evaluate(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        RationalFunction(Poly.one(QQ), Poly.zero(QQ))
    with pytest.raises(ZeroDivisionError):
        r / RationalFunction.from_poly(Poly.zero(QQ))


def test_rational_function_compose():
    from starpoints.exact import RationalFunction

    # substitute x -> 1/x into x^2 + 3: (1 + 3x^2)/x^2
    r = _rq(3, 0, 1)
    c = r.compose(Poly.one(QQ), Poly(QQ, [Fraction(0), Fraction(1)]))
    assert c.num.coeffs == (Fraction(1), Fraction(0), Fraction(3))
    assert c.den.coeffs == (Fraction(0), Fraction(0), Fraction(1))
    # evaluate both ways at a sample point
    assert c.evaluate(Fraction(2)) == r.evaluate(Fraction(1, 2))


def test_rational_function_derivative_quotient_rule():
    from starpoints.exact import RationalFunction

    # d/dx (x^2/(x + 1)) = (x^2 + 2x)/(x + 1)^2
    r = RationalFunction(
        Poly(QQ, [Fraction(0), Fraction(0), Fraction(1)]),
        Poly(QQ, [Fraction(1), Fraction(1)]),
    )
    d = r.derivative()
    assert d.num.coeffs == (Fraction(0), Fraction(2), Fraction(1))
    assert d.den.coeffs == (Fraction(1), Fraction(2), Fraction(1))


@given(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=4),
    st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=4),
)
@settings(max_examples=80)
def test_rational_function_mul_div_round_trip(a, b):
    from starpoints.exact import RationalFunction

    pa = Poly(QQ, [Fraction(c) for c in a])
    pb = Poly(QQ, [Fraction(c) for c in b])
    if pa.is_zero() or pb.is_zero():
        return
    ra = RationalFunction.from_poly(pa)
    rb = RationalFunction.from_poly(pb)
    q = ra / rb
    assert q * rb == ra
    assert q.evaluate is not None
