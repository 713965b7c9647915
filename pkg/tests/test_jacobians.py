"""Jacobian arithmetic tests.

Ground truth comes from three independent routes: full enumeration of
reduced Mumford data compared with L(1), exact rational Cantor compared
with p-adic Cantor, and the divisor relations div(x - c), div(y - v).
"""

import itertools
import random
from fractions import Fraction

import pytest

from starpoints.curves import CurvePoint, HyperellipticCurve
from starpoints.exact import FieldGF, Poly
from starpoints.jacobians import (
    JacobianArithmetic,
    class_mod_p_of_point_sum,
    enumerate_subgroup,
    group_structure_small,
    jacobian_over_gf,
    jacobian_over_qq,
)
from starpoints.padics import QpField

EVEN2 = HyperellipticCurve.from_ints([1, 0, -4, 10, -4, 0, 1])  # genus 2, lc = 1
ODD2 = HyperellipticCurve.from_ints([1, 3, 0, 0, 0, 1])  # genus 2, degree 5
EVEN3 = HyperellipticCurve.from_ints([3, 1, 0, 0, 0, 0, 0, 0, 1])  # genus 3
FLYNN5 = HyperellipticCurve.from_ints([0, 60, -112, 65, -14, 1])  # five rational branch points


@pytest.mark.parametrize(
    "curve,p",
    [(EVEN2, 3), (EVEN2, 7), (EVEN2, 11), (ODD2, 3), (ODD2, 7), (EVEN3, 5)],
)
def test_enumeration_matches_group_order(curve, p):
    jac = jacobian_over_gf(curve, p)
    pts = jac.enumerate_points()
    keys = {P.key() for P in pts}
    assert len(keys) == len(pts)
    assert len(pts) == curve.jacobian_order_mod_p(p)


@pytest.mark.parametrize("curve,p", [(EVEN2, 3), (EVEN2, 7), (ODD2, 7), (EVEN3, 5)])
def test_group_axioms_on_enumerated_elements(curve, p):
    rng = random.Random(20260818)
    jac = jacobian_over_gf(curve, p)
    pts = jac.enumerate_points()
    keys = {P.key() for P in pts}
    N = len(pts)
    e = jac.identity()
    assert e.key() in keys

    pairs = list(itertools.product(range(N), repeat=2))
    if len(pairs) > 3000:
        pairs = rng.sample(pairs, 3000)
    for i, j in pairs:
        assert (pts[i] + pts[j]).key() in keys

    for a in pts:
        assert (a + e) == a
        assert (a + (-a)).is_identity()
        assert (N * a).is_identity()

    for _ in range(50):
        a, b, c = (rng.choice(pts) for _ in range(3))
        assert ((a + b) + c) == (a + (b + c))
        assert (a + b) == (b + a)


def test_element_orders_brute_force():
    jac = jacobian_over_gf(EVEN2, 3)
    pts = jac.enumerate_points()
    N = len(pts)
    for a in pts[::3]:
        order = jac.element_order(a, N)
        acc = jac.identity()
        seen = 0
        while True:
            acc = acc + a
            seen += 1
            if acc.is_identity():
                break
        assert order == seen


def test_conjugate_pair_relation_is_trivial():
    jac = jacobian_over_qq(EVEN2)
    P = CurvePoint(Fraction(0), Fraction(1))
    tauP = CurvePoint(Fraction(0), Fraction(-1))
    cls = jac.class_of_point_sum(
        [(P, 1), (tauP, 1), (CurvePoint(branch="+"), -1), (CurvePoint(branch="-"), -1)]
    )
    assert cls.is_identity()


def test_exact_point_class_arithmetic():
    jac = jacobian_over_qq(EVEN2)
    P = CurvePoint(Fraction(0), Fraction(1))
    Q = CurvePoint(Fraction(1), Fraction(2))
    inf_p = CurvePoint(branch="+")
    D = jac.class_of_point_sum([(P, 1), (inf_p, -1)])
    assert D.u == Poly(jac.F, [Fraction(0), Fraction(1)])
    assert D.v == Poly(jac.F, [Fraction(1)])
    assert D.n == 0
    assert (D - D).is_identity()
    E = jac.class_of_point_sum([(Q, 1), (P, -1)])
    S = D + E
    # S = [Q - oo+]: x-coordinate support {1}
    assert S.u == Poly(jac.F, [Fraction(-1), Fraction(1)])
    assert S.v == Poly(jac.F, [Fraction(2)])


def test_infinity_difference_and_negation_ranges():
    jac = jacobian_over_qq(EVEN2)
    W = jac.class_of_point_sum([(CurvePoint(branch="-"), 1), (CurvePoint(branch="+"), -1)])
    assert not W.is_identity()
    assert W.u.degree == 0 and 0 <= W.n <= jac.g
    # negation stays reduced and doubles back
    assert (W + (-W)).is_identity()
    assert (-(-W)) == W


@pytest.mark.parametrize("p", [3, 7, 11])
def test_embedding_commutes_with_reduction(p):
    jac = jacobian_over_gf(EVEN2, p)
    Q = CurvePoint(Fraction(1), Fraction(2))
    inf_p = CurvePoint(branch="+")
    lhs = class_mod_p_of_point_sum(EVEN2, p, [(Q, 1), (inf_p, -1)])
    rhs = jac.embed_point((1 % p, 2 % p))
    assert lhs == rhs


@pytest.mark.parametrize("p", [3, 7, 11])
def test_reduction_of_sum_is_sum_of_reductions(p):
    jac = jacobian_over_gf(EVEN2, p)
    P = CurvePoint(Fraction(0), Fraction(1))
    Q = CurvePoint(Fraction(1), Fraction(2))
    terms = [(Q, 2), (P, -1), (CurvePoint(branch="-"), -1)]
    red_sum = class_mod_p_of_point_sum(EVEN2, p, terms)
    acc = jac.identity()
    for point, c in terms:
        label = EVEN2.reduce_point(point, p)
        image = CurvePoint(branch=label[1]) if label[0] == "inf" else (label[1], label[2])
        acc = acc + jac.scalar_mul(c, jac.embed_point(image))
    assert acc == red_sum


def test_exact_and_padic_scalar_multiples_agree():
    jac = jacobian_over_qq(EVEN2)
    Q = CurvePoint(Fraction(1), Fraction(2))
    inf_p = CurvePoint(branch="+")
    D = jac.class_of_point_sum([(Q, 1), (inf_p, -1)])
    D5 = jac.scalar_mul(5, D)

    p = 3
    F = QpField(p, 16)
    jacp = JacobianArithmetic(
        F, [F.from_rational(c) for c in EVEN2.f], sqrt_lc=F.from_int(1)
    )
    Dp = jacp.class_of_point_sum([(Q, 1), (inf_p, -1)])
    K = jacp.scalar_mul(5, Dp)

    assert D5.n == K.n
    assert D5.u.degree == K.u.degree and D5.v.degree == K.v.degree
    for exact_c, padic_c in zip(D5.u.coeffs, K.u.coeffs):
        assert F.from_rational(exact_c) == padic_c
    for exact_c, padic_c in zip(D5.v.coeffs, K.v.coeffs):
        assert F.from_rational(exact_c) == padic_c


def test_kernel_of_reduction_multiple_lands_in_one_disc():
    # order of [Q - oo+] mod 3 is 5; 5*D over Q_3 must be supported in a
    # single residue disc, so u picks up a double root mod 3
    p = 3
    jac3 = jacobian_over_gf(EVEN2, p)
    Q = CurvePoint(Fraction(1), Fraction(2))
    inf_p = CurvePoint(branch="+")
    Dbar = class_mod_p_of_point_sum(EVEN2, p, [(Q, 1), (inf_p, -1)])
    s = jac3.element_order(Dbar, EVEN2.jacobian_order_mod_p(p))
    assert s == 5

    F = QpField(p, 16)
    jacp = JacobianArithmetic(
        F, [F.from_rational(c) for c in EVEN2.f], sqrt_lc=F.from_int(1)
    )
    K = jacp.scalar_mul(s, jacp.class_of_point_sum([(Q, 1), (inf_p, -1)]))
    assert not K.is_identity()
    assert K.u.degree == 2
    b, c = K.u.coeff(1), K.u.coeff(0)
    disc = b * b - F.from_int(4) * c
    assert disc.valuation() >= 1
    # interpolation of two points in one disc: v denominators at worst 1/p
    for coeff in K.v.coeffs:
        assert coeff.valuation() >= -1


def test_from_uv_validation():
    jac = jacobian_over_qq(EVEN2)
    F = jac.F
    x_minus_1 = Poly(F, [Fraction(-1), Fraction(1)])
    good_v = Poly(F, [Fraction(2)])
    cls = jac.from_uv(x_minus_1, good_v, 0)
    assert cls == jac.embed_point((Fraction(1), Fraction(2)))
    with pytest.raises(ValueError):
        jac.from_uv(x_minus_1, Poly(F, [Fraction(3)]), 0)  # not on curve
    with pytest.raises(ValueError):
        jac.from_uv(x_minus_1, good_v, 5)  # n out of range
    with pytest.raises(ValueError):
        jac.from_uv(x_minus_1, good_v, None)  # tag required
    with pytest.raises(ValueError):
        jac.from_uv(Poly(F, [Fraction(2)]), Poly.zero(F), 1)  # not monic
    with pytest.raises(ValueError):
        jac.embed_point((Fraction(2), Fraction(1)))  # f(2) != 1


def test_sqrt_approximation_invariant():
    for curve in (EVEN2, EVEN3):
        jac = jacobian_over_qq(curve)
        R = jac.f - jac.v_plus * jac.v_plus
        assert jac.v_plus.degree == jac.g + 1
        assert jac.v_plus.leading() == jac.s
        assert R.degree <= jac.g


def test_subgroup_enumeration_vectors():
    p = 7
    jac = jacobian_over_gf(EVEN2, p)
    pts_gf = []
    for x in range(p):
        fx = jac.f.evaluate(jac.F.from_int(x))
        if jac.F.is_zero(fx):
            pts_gf.append((x, 0))
        elif jac.F.is_square(fx):
            y = jac.F.sqrt(fx)
            pts_gf.append((x, y))
    gens = [jac.embed_point(P) for P in pts_gf[:2]]
    table = enumerate_subgroup(jac, gens)
    N = EVEN2.jacobian_order_mod_p(p)
    assert N % len(table) == 0
    for _, (elem, vec) in list(table.items())[:25]:
        acc = jac.identity()
        for gen, k in zip(gens, vec):
            acc = acc + jac.scalar_mul(k, gen)
        assert acc == elem


def test_leading_coefficient_must_be_square():
    # degree 6 with leading coefficient 2: no balanced arithmetic over Q
    with pytest.raises(ValueError):
        JacobianArithmetic(jacobian_over_qq(EVEN2).F, [1, 0, 0, 0, 0, 0, 2])


@pytest.mark.parametrize(
    "curve,p",
    [(EVEN2, 3), (EVEN2, 5), (EVEN2, 7), (EVEN2, 13), (ODD2, 3), (ODD2, 7), (FLYNN5, 7), (FLYNN5, 11)],
)
def test_group_structure_exhaustive(curve, p):
    # every reduced class must decompose, recombine, and get distinct
    # coordinates; the factor chain must multiply to L(1)
    st = group_structure_small(curve, p)
    jac = jacobian_over_gf(curve, p)
    pts = jac.enumerate_points()
    n = curve.jacobian_order_mod_p(p)
    assert st.order == n == len(pts)
    prod = 1
    for s in st.orders:
        prod *= s
    assert prod == n
    for a, b in zip(st.orders, st.orders[1:]):
        assert b % a == 0
    assert all(s > 1 for s in st.orders)
    for h, s in zip(st.generators, st.orders):
        assert jac.element_order(h, n) == s
    seen = set()
    for a in pts:
        v = st.decompose(a)
        assert st.contains(a)
        seen.add(v)
        acc = jac.identity()
        for c, h in zip(v, st.generators):
            acc = acc + jac.scalar_mul(c, h)
        assert acc == a
    assert len(seen) == n


def test_group_structure_cap():
    with pytest.raises(ValueError):
        group_structure_small(EVEN2, 13, cap=100)


def test_group_structure_foreign_element_rejected():
    st = group_structure_small(EVEN2, 7)
    other = jacobian_over_gf(ODD2, 7)
    pt = next(P for P in other.enumerate_points() if not P.is_identity())
    with pytest.raises(ValueError):
        st.decompose(pt)
    assert not st.contains(pt)


def test_group_structure_lagrange():
    # order of every element divides the largest invariant factor
    st = group_structure_small(ODD2, 11)
    jac = st.jac
    n = st.order
    exponent = st.orders[-1]
    rng = random.Random(3)
    pts = jac.enumerate_points()
    for a in rng.sample(pts, 20):
        assert jac.scalar_mul(exponent, a).is_identity()
