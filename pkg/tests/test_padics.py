"""Tests for capped-precision p-adic arithmetic and truncated series.

Oracles: exact rational arithmetic (compare p-adic results against Fraction
computations reduced mod powers of p), brute-force residue scans, and
algebraic identities that the implementation does not use internally.
"""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from starpoints.exact import legendre, rational_valuation
from starpoints.padics import (
    DEFAULT_PRECISION,
    PadicNumber,
    QpField,
    QuadExtField,
    TruncatedSeries,
    hensel_lift_coprime_factors,
    hensel_lift_root,
    padic_quadratic_roots,
    poly_series,
)

rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=60
)


def test_one_third_mod_125():
    x = PadicNumber.from_rational(Fraction(1, 3), 5, 3)
    assert x.lift_integer() == 42
    assert (3 * x).lift_integer() == 1


def test_precision_rules():
    p = 5
    a = PadicNumber.from_int(5, p, 10)  # val 1
    b = PadicNumber.from_int(50, p, 6)  # val 2
    assert (a + b).prec == 6
    assert (a - b).prec == 6
    # product: min(10 + 2, 6 + 1) = 7
    assert (a * b).prec == 7
    # inverse of valuation v costs 2v digits
    inv = a.inverse()
    assert inv.prec == 8 and inv.valuation() == -1
    # division combines both rules
    q = b / a
    assert q.valuation() == 1
    # exact-scalar division costs exactly v
    assert a.div_exact(5).prec == 9
    assert a.mul_exact(25).prec == 12


def test_apparent_zero():
    p = 7
    z = PadicNumber.from_int(7**5, p, 5)
    assert z.is_zero()
    assert z.valuation() == 5
    with pytest.raises(ZeroDivisionError):
        z.inverse()


@settings(max_examples=150)
@given(rationals, rationals, rationals)
def test_field_axioms_vs_exact(x, y, z):
    p = 7
    for q in (x, y, z):
        if q != 0 and rational_valuation(q, p) < -4:
            return
    N = 12
    X, Y, Z = (PadicNumber.from_rational(q, p, N) for q in (x, y, z))
    assert (X + Y) * Z == PadicNumber.from_rational((x + y) * z, p, N)
    assert X * Y - Y * X == PadicNumber.zero(p, N)
    if y != 0:
        assert X / Y == PadicNumber.from_rational(x / y, p, N)


@settings(max_examples=80)
@given(rationals)
def test_sqrt_of_squares(x):
    p = 13
    if x == 0:
        return
    sq = x * x
    X = PadicNumber.from_rational(sq, p, 14)
    r = X.sqrt()
    assert r * r == X
    # canonical branch: the residue of the unit part is the smaller root
    v = r.valuation()
    unit = r.mul_exact(Fraction(1, p**v) if v >= 0 else Fraction(p ** (-v)))
    res = unit.residue()
    assert res <= p - res


def test_sqrt_precision_and_errors():
    p = 7
    x = PadicNumber.from_int(2 * 49, p, 9)  # val 2, unit 2 (QR mod 7)
    r = x.sqrt()
    assert r.valuation() == 1
    assert r.prec == 9 - 1
    with pytest.raises(ValueError):
        PadicNumber.from_int(7, p, 9).sqrt()  # odd valuation
    with pytest.raises(ValueError):
        PadicNumber.from_int(3, p, 9).sqrt()  # non-residue (3 is not a QR mod 7)
    assert PadicNumber.from_int(2, p, 9).is_square()
    assert not PadicNumber.from_int(3, p, 9).is_square()


def test_expansion_digits():
    x = PadicNumber.from_int(2 + 3 * 5 + 4 * 25, 5, 4)
    assert x.expansion() == [2, 3, 4, 0]


# ---------------------------------------------------------------------------
# quadratic extensions


def test_quad_ext_arithmetic():
    K = QuadExtField(5, 2, 12)  # 2 is a non-residue mod 5
    w = K.gen()
    a = K.embed(3) + w
    b = K.embed(1) - w
    prod = a * b
    # (3 + w)(1 - w) = 3 - 3w + w - w^2 = 1 - 2w
    assert prod.a == PadicNumber.from_int(1, 5, 12)
    assert prod.b == PadicNumber.from_int(-2, 5, 12)
    assert (a * a.inverse()) == K.one
    assert a.norm() == PadicNumber.from_int(9 - 2, 5, 12)
    assert a.trace() == PadicNumber.from_int(6, 5, 12)
    assert a.conjugate().conjugate() == a


def test_quad_ext_valuations():
    # unramified: w^2 = 2, v(w) = 0
    K = QuadExtField(5, 2, 10)
    assert not K.ramified
    assert K.gen().valuation() == 0
    # ramified: w^2 = 5, v(w) = 1/2
    L = QuadExtField(5, 5, 10)
    assert L.ramified
    assert L.gen().valuation() == Fraction(1, 2)
    x = L.embed(5) + L.gen()
    assert x.valuation() == Fraction(1, 2)


def test_quad_ext_rejects_squares():
    with pytest.raises(ValueError):
        QuadExtField(7, 2, 10)  # 2 = 3^2 - 7 is a QR mod 7


# ---------------------------------------------------------------------------
# Hensel lifting


def test_hensel_root():
    r = hensel_lift_root([-2, 0, 1], 7, 3, 12)
    assert (r * r).lift_integer() == 2
    assert r.residue() == 3
    with pytest.raises(ValueError):
        hensel_lift_root([-2, 0, 1], 7, 1, 12)  # 1 is not a root mod 7
    with pytest.raises(ValueError):
        hensel_lift_root([0, 0, 1], 7, 0, 12)  # double root


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=4), min_size=2, max_size=3),
    st.lists(st.integers(min_value=0, max_value=4), min_size=2, max_size=3),
    st.lists(st.integers(min_value=-20, max_value=20), min_size=0, max_size=4),
)
def test_hensel_factor_lift(g0, h0, noise):
    """Lift factorizations of f = g0*h0 + 5*noise when g0, h0 stay coprime."""
    from starpoints.exact import FieldGF, Poly

    p, prec = 5, 9
    F = FieldGF(p)
    G = Poly.from_ints(F, g0 + [1])  # monic
    H = Poly.from_ints(F, h0 + [1])
    if G.gcd(H).degree != 0:
        return
    prod = G * H
    f = [int(c) for c in prod.coeffs]
    # perturb below the residue level, keeping degree and leading coefficient
    for i, n in enumerate(noise):
        if i < len(f) - 1:
            f[i] += p * n
    g, h = hensel_lift_coprime_factors(f, p, [int(c) for c in G.coeffs], [int(c) for c in H.coeffs], prec)
    m = p**prec
    out = [0] * (len(g) + len(h) - 1)
    for i, gi in enumerate(g):
        for j, hj in enumerate(h):
            out[i + j] = (out[i + j] + gi * hj) % m
    assert [c % m for c in f] == out
    assert [c % p for c in g] == [int(c) for c in G.coeffs]
    assert [c % p for c in h] == [int(c) for c in H.coeffs]


def test_padic_quadratic_roots_split():
    p = 7
    # (x - 2)(x - 3) = x^2 - 5x + 6
    kind, roots = padic_quadratic_roots(
        PadicNumber.from_int(-5, p, 10), PadicNumber.from_int(6, p, 10)
    )
    assert kind == "rational"
    residues = sorted(r.residue() for r in roots)
    assert residues == [2, 3]


def test_padic_quadratic_roots_extension():
    p = 5
    kind, K, roots = padic_quadratic_roots(
        PadicNumber.zero(p, 10), PadicNumber.from_int(-2, p, 10)
    )
    assert kind == "quadratic"
    r = roots[0]
    sq = r * r
    assert sq.a == PadicNumber.from_int(2, p, 10)
    assert sq.b.is_zero()
    assert roots[1] == r.conjugate()


def test_padic_quadratic_roots_double():
    p = 7
    kind, roots = padic_quadratic_roots(
        PadicNumber.from_int(-2, p, 8), PadicNumber.from_int(1, p, 8)
    )
    assert kind == "double"
    assert roots[0].residue() == 1


# ---------------------------------------------------------------------------
# truncated series

frac_coeffs = st.lists(
    st.fractions(min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12),
    min_size=1,
    max_size=8,
)


@settings(max_examples=100)
@given(frac_coeffs, frac_coeffs)
def test_series_ring_axioms(a, b):
    A, B = TruncatedSeries(a), TruncatedSeries(b)
    assert (A + B).coeffs == (B + A).coeffs
    AB, BA = A * B, B * A
    assert AB.order == BA.order and AB.coeffs == BA.coeffs
    # distributivity at the common order
    n = min(A.order, B.order)
    lhs = A * (B + B)
    rhs = A * B + A * B
    k = min(lhs.order, rhs.order)
    assert lhs.coeffs[: k + 1] == rhs.coeffs[: k + 1]


def test_series_mul_precision_rule():
    # orders: A has order 2 (known mod t^3), B = t * unit has order 3
    A = TruncatedSeries([Fraction(1), Fraction(1), Fraction(1)])
    B = TruncatedSeries([Fraction(0), Fraction(1), Fraction(0), Fraction(2)])
    prod = A * B
    # min(3 + 1, 4 + 0) - 1 = 3
    assert prod.order == 3
    assert prod.coeffs == (Fraction(0), Fraction(1), Fraction(1), Fraction(3))
    # exact monomial shifts raise the order by construction
    assert A.shift(2).order == 4
    assert A.shift(2).coeffs == (0, 0, Fraction(1), Fraction(1), Fraction(1))


@settings(max_examples=60)
@given(frac_coeffs)
def test_series_antiderivative_derivative_roundtrip(a):
    A = TruncatedSeries(a)
    B = A.antiderivative()
    assert B.order == A.order + 1
    assert B.coeffs[0] == 0
    C = B.derivative()
    assert C.coeffs == A.coeffs


def test_series_antiderivative_padic_digit_loss():
    p = 5
    coeffs = [PadicNumber.from_int(1, p, 10)] * 6
    integ = TruncatedSeries(coeffs).antiderivative()
    # index k+1 of the integral has precision 10 - v_p(k+1)
    assert [c.prec for c in integ.coeffs[1:]] == [10, 10, 10, 10, 9, 10]


def test_series_inverse_and_sqrt():
    A = TruncatedSeries([Fraction(1), Fraction(2), Fraction(-1), Fraction(5)])
    inv = A.inverse()
    prod = A * inv
    assert prod.coeffs[0] == 1 and all(c == 0 for c in prod.coeffs[1:])
    sq = A * A
    root = sq.sqrt(Fraction(1))
    assert root.coeffs == A.coeffs[: root.order + 1]
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([Fraction(0), Fraction(1)]).inverse()


def test_series_sqrt_padic():
    p = 7
    F = QpField(p, 12)
    A = TruncatedSeries([F.from_int(4), F.from_int(1), F.from_int(3)])
    root = A.sqrt(F.from_int(4).sqrt())
    sq = root * root
    for got, want in zip(sq.coeffs, A.coeffs):
        assert got == want


def test_series_compose_and_evaluate():
    # f(u) = 1 + u + u^2, g(t) = t + 2t^2: f(g) = 1 + t + 3t^2 + O(t^3)
    f = TruncatedSeries([Fraction(1), Fraction(1), Fraction(1)])
    g = TruncatedSeries([Fraction(0), Fraction(1), Fraction(2)])
    comp = f.compose(g)
    assert comp.coeffs[0] == 1 and comp.coeffs[1] == 1 and comp.coeffs[2] == 3
    val = f.evaluate(Fraction(1, 10))
    assert val == 1 + Fraction(1, 10) + Fraction(1, 100)
    with pytest.raises(ValueError):
        f.compose(TruncatedSeries([Fraction(1), Fraction(1)]))


def test_poly_series_evaluation():
    # evaluate x^2 + 1 at the series t + 1? polynomial arguments must keep
    # the same truncation; use g = 2 + t: (2+t)^2 + 1 = 5 + 4t + t^2
    g = TruncatedSeries([Fraction(2), Fraction(1), Fraction(0)])
    out = poly_series([Fraction(1), Fraction(0), Fraction(1)], g)
    assert out.coeffs == (Fraction(5), Fraction(4), Fraction(1))


def test_series_evaluate_padic_endpoint():
    # integral-style evaluation: sum t^k / k at t = 5, p = 5
    p = 5
    F = QpField(p, 12)
    coeffs = [F.zero] + [F.one.div_exact(k) for k in range(1, 8)]
    S = TruncatedSeries(coeffs)
    t0 = F.from_int(5)
    val = S.evaluate(t0)
    # compare against the exact rational partial sum reduced p-adically
    exact = sum(Fraction(5**k, k) for k in range(1, 8))
    assert val == PadicNumber.from_rational(exact, p, val.prec)
    assert val.valuation() >= 1
