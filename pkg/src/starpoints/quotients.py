"""Quotients of hyperelliptic curves by Moebius involutions.

A curve y^2 = f(x) with an extra involution sigma maps 2-to-1 onto a
quotient curve; when the quotient has genus 1 its rational points are a
torsion translate computation away (for rank zero), and pulling fibers
back determines the rational points upstairs.  This module builds the
quotient map exactly, reduces the genus-1 model to a Weierstrass cubic,
computes torsion of rational elliptic curves, pulls points back through
degree-2 fibers, assembles twist covering collections, and recovers
hyperelliptic models from q-expansions of weight-2 forms.

All arithmetic is exact over the rationals; every constructed map is
verified as an identity of rational functions before it is returned.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Sequence

from .curves import CurvePoint, HyperellipticCurve
from .exact import (
    QQ,
    Poly,
    RationalFunction,
    factorize,
    int_poly_resultant,
    is_rational_square,
    legendre,
    rational_sqrt,
)

__all__ = [
    "InvolutionSpec",
    "EllipticCurve",
    "QuotientMap",
    "quotient_by_involution",
    "elliptic_torsion",
    "pullback_points",
    "twist_covering_collection",
    "recover_covered_points",
    "fit_hyperelliptic_from_q_expansions",
    "parse_q_expansion",
]


def _rf(num, den=None) -> RationalFunction:
    if isinstance(num, Poly):
        npoly = num
    elif isinstance(num, (list, tuple)):
        npoly = Poly(QQ, [Fraction(c) for c in num])
    else:
        npoly = Poly.constant(QQ, Fraction(num))
    if den is None:
        dpoly = Poly.one(QQ)
    elif isinstance(den, Poly):
        dpoly = den
    elif isinstance(den, (list, tuple)):
        dpoly = Poly(QQ, [Fraction(c) for c in den])
    else:
        dpoly = Poly.constant(QQ, Fraction(den))
    return RationalFunction(npoly, dpoly)


_X = Poly(QQ, [Fraction(0), Fraction(1)])


# ---------------------------------------------------------------------------
# involutions of hyperelliptic models


class InvolutionSpec:
    """An involution (x, y) -> ((a x + b)/(c x + d), e y/(c x + d)^(n/2)).

    The matrix has integer entries with nonzero determinant and n is the
    degree of the model the involution acts on.  validate() checks, as
    exact identities of rational functions, that the map squares to the
    identity on the function field and preserves y^2 = f(x).
    """

    __slots__ = ("a", "b", "c", "d", "e")

    def __init__(self, matrix: Sequence[Sequence[int]], scalar: int):
        (a, b), (c, d) = matrix
        for entry in (a, b, c, d, scalar):
            if int(entry) != entry:
                raise ValueError("involution data must be integral")
        self.a, self.b, self.c, self.d = int(a), int(b), int(c), int(d)
        self.e = int(scalar)
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError("involution matrix must have nonzero determinant")
        if self.e == 0:
            raise ValueError("involution scalar must be nonzero")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def moebius_num(self) -> Poly:
        return Poly(QQ, [Fraction(self.b), Fraction(self.a)])

    def moebius_den(self) -> Poly:
        return Poly(QQ, [Fraction(self.d), Fraction(self.c)])

    def apply_x(self, x0: Fraction) -> Fraction | None:
        """Image of an x-coordinate; None means the point at infinity."""
        den = self.c * Fraction(x0) + self.d
        if den == 0:
            return None
        return (self.a * Fraction(x0) + self.b) / den

    def apply_affine(self, curve: HyperellipticCurve, P: CurvePoint) -> CurvePoint:
        """Image of an affine point whose image is again affine."""
        assert not P.is_infinite
        x1 = self.apply_x(P.x)
        if x1 is None:
            raise ValueError("image lies at infinity")
        k = curve.degree // 2
        y1 = Fraction(self.e) * P.y / (self.c * P.x + self.d) ** k
        assert y1 * y1 == curve.f_eval(x1)
        return CurvePoint(x1, y1)

    def validate(self, curve: HyperellipticCurve) -> None:
        """Check sigma^2 = id and covariance of f, raising on failure."""
        n = curve.degree
        if n % 2 != 0:
            raise ValueError("involutions act on even-degree models only")
        k = n // 2
        a, b, c, d, e = self.a, self.b, self.c, self.d, self.e
        # the Moebius square must be a nonzero scalar matrix
        m2 = (a * a + b * c, b * (a + d), c * (a + d), d * d + b * c)
        if m2[1] != 0 or m2[2] != 0 or m2[0] != m2[3]:
            raise ValueError("the x-map does not square to the identity")
        # B(x) * B(xi(x)) is the constant governing the square of the y-part
        bpoly = self.moebius_den()
        nu = _rf(bpoly) * _rf(bpoly).compose(self.moebius_num(), self.moebius_den())
        if not nu.is_polynomial() or nu.num.degree > 0:
            raise ValueError("the y-part of the involution does not close up")
        nu_const = nu.num.coeff(0)
        if Fraction(e * e) != nu_const**k:
            raise ValueError("the involution does not square to the identity on y")
        # covariance: e^2 f(x) = (c x + d)^n f((a x + b)/(c x + d))
        f = curve.f_poly()
        rhs = Poly.zero(QQ)
        spow = Poly.one(QQ)
        dpows = [Poly.one(QQ)]
        for _ in range(n):
            dpows.append(dpows[-1] * bpoly)
        snum = self.moebius_num()
        for i in range(n + 1):
            coeff = f.coeff(i)
            if coeff != 0:
                rhs = rhs + (spow * dpows[n - i]).scale(coeff)
            if i < n:
                spow = spow * snum
        if f.scale(Fraction(e * e)) != rhs:
            raise ValueError("the involution does not preserve y^2 = f(x)")

    def to_json(self) -> dict:
        return {"matrix": [[self.a, self.b], [self.c, self.d]], "scalar": self.e}

    @classmethod
    def from_json(cls, data: dict) -> "InvolutionSpec":
        return cls(data["matrix"], data["scalar"])

    def __repr__(self):
        return f"InvolutionSpec([[{self.a},{self.b}],[{self.c},{self.d}]], e={self.e})"


# ---------------------------------------------------------------------------
# function-field pairs a(x) + y b(x) modulo y^2 = M(x)


class _FPair:
    """Element a + y*b of the double cover y^2 = M(x), coefficients in Q(x)."""

    __slots__ = ("a", "b", "mod")

    def __init__(self, a: RationalFunction, b: RationalFunction, mod: Poly):
        self.a = a
        self.b = b
        self.mod = mod

    @classmethod
    def of(cls, a, mod: Poly) -> "_FPair":
        return cls(a if isinstance(a, RationalFunction) else _rf(a), _rf(0), mod)

    @classmethod
    def y(cls, mod: Poly) -> "_FPair":
        return cls(_rf(0), _rf(1), mod)

    def __add__(self, other: "_FPair") -> "_FPair":
        return _FPair(self.a + other.a, self.b + other.b, self.mod)

    def __sub__(self, other: "_FPair") -> "_FPair":
        return _FPair(self.a - other.a, self.b - other.b, self.mod)

    def __mul__(self, other: "_FPair") -> "_FPair":
        mrf = _rf(self.mod)
        return _FPair(
            self.a * other.a + self.b * other.b * mrf,
            self.a * other.b + self.b * other.a,
            self.mod,
        )

    def scale(self, c) -> "_FPair":
        cf = Fraction(c)
        return _FPair(self.a.scale(cf), self.b.scale(cf), self.mod)

    def inv(self) -> "_FPair":
        norm = self.a * self.a - self.b * self.b * _rf(self.mod)
        if norm.is_zero():
            raise ZeroDivisionError("inverting a zero divisor on the cover")
        return _FPair(self.a / norm, -(self.b / norm), self.mod)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __eq__(self, other):
        if not isinstance(other, _FPair):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __repr__(self):
        return f"_FPair({self.a!r} + y*({self.b!r}))"


# ---------------------------------------------------------------------------
# exact evaluation of a + y b at a curve point, with local series fallback


class _Pole(Exception):
    """The function has a pole at the requested point."""


def _ser_mul(a: list, b: list, L: int) -> list:
    out = [Fraction(0)] * L
    for i, ai in enumerate(a):
        if ai == 0 or i >= L:
            continue
        for j, bj in enumerate(b):
            if i + j >= L:
                break
            if bj != 0:
                out[i + j] += ai * bj
    return out


def _ser_inv(a: list, L: int) -> list:
    assert a[0] != 0
    out = [Fraction(1) / a[0]] + [Fraction(0)] * (L - 1)
    for n in range(1, L):
        acc = Fraction(0)
        for i in range(1, min(n, len(a) - 1) + 1):
            acc += a[i] * out[n - i]
        out[n] = -acc / a[0]
    return out


def _ser_sqrt(a: list, y0: Fraction, L: int) -> list:
    """Square root of a power series with a[0] = y0^2 != 0, starting at y0."""
    assert y0 != 0 and a[0] == y0 * y0
    s = [y0] + [Fraction(0)] * (L - 1)
    for n in range(1, L):
        acc = a[n] if n < len(a) else Fraction(0)
        for i in range(1, n):
            acc -= s[i] * s[n - i]
        s[n] = acc / (2 * y0)
    return s


def _poly_series(p: Poly, xs: list, L: int) -> list:
    out = [Fraction(0)] * L
    for c in reversed(p.coeffs):
        out = _ser_mul(out, xs, L)
        out[0] += c
    return out


def _branch_x_series(g: Poly, x0: Fraction, L: int) -> list:
    """x(t) with g(x(t)) = t^2 and x(0) = x0, at a simple root x0 of g."""
    gp = g.derivative()
    assert g.evaluate(x0) == 0 and gp.evaluate(x0) != 0
    xs = [x0] + [Fraction(0)] * (L - 1)
    t2 = [Fraction(0), Fraction(0)] + [Fraction(0)] * (L - 2)
    if L > 2:
        t2[2] = Fraction(1)
    steps = max(3, L.bit_length() + 1)
    for _ in range(steps):
        gx = _poly_series(g, xs, L)
        res = [gx[i] - t2[i] for i in range(L)]
        if all(r == 0 for r in res):
            break
        dgx = _poly_series(gp, xs, L)
        corr = _ser_mul(res, _ser_inv(dgx, L), L)
        xs = [xs[i] - corr[i] for i in range(L)]
    return xs


def _valuation(ser: list) -> int | None:
    for i, c in enumerate(ser):
        if c != 0:
            return i
    return None


def _eval_pair_on_curve(A: RationalFunction, B: RationalFunction, g: Poly, x0, y0):
    """Exact value of A(x) + y B(x) at the point (x0, y0) of y^2 = g(x).

    Raises _Pole when the function has a pole there.  Points where the
    naive evaluation reads 0/0 are resolved with exact local power series
    along the curve branch through the point.
    """
    x0 = Fraction(x0)
    y0 = Fraction(y0)
    assert y0 * y0 == g.evaluate(x0)
    if A.den.evaluate(x0) != 0 and B.den.evaluate(x0) != 0:
        return A.evaluate(x0) + y0 * B.evaluate(x0)
    if A.is_zero() and B.is_zero():
        return Fraction(0)
    for L in (32, 96, 288):
        got = _eval_pair_series(A, B, g, x0, y0, L)
        if got is not None:
            return got
    raise ArithmeticError("local series window exhausted during evaluation")


def _eval_pair_series(A, B, g, x0, y0, L):
    if y0 != 0:
        xs = [x0, Fraction(1)] + [Fraction(0)] * (L - 2)
        ys = _ser_sqrt(_poly_series(g, xs, L), y0, L)
    else:
        xs = _branch_x_series(g, x0, L)
        ys = [Fraction(0), Fraction(1)] + [Fraction(0)] * (L - 2)

    def rf_series(rf: RationalFunction):
        if rf.is_zero():
            return (0, [Fraction(0)] * L)
        num = _poly_series(rf.num, xs, L)
        den = _poly_series(rf.den, xs, L)
        vn = _valuation(num)
        vd = _valuation(den)
        if vd is None or vn is None:
            return None
        keep = L - max(vn, vd)
        quo = _ser_mul(num[vn:], _ser_inv(den[vd:], keep), keep)
        return (vn - vd, quo)

    pa = rf_series(A)
    pb = rf_series(B)
    if pa is None or pb is None:
        return None
    off_b, ser_b = pb
    yb = _ser_mul(ys, [Fraction(0)] * 0 + ser_b, min(L, len(ser_b)))
    terms = [pa, (off_b, yb)]
    lo = min(off for off, _ in terms)
    hi = min(off + len(ser) for off, ser in terms)
    if hi <= 0:
        return None
    total = [Fraction(0)] * (hi - lo)
    for off, ser in terms:
        for i, cval in enumerate(ser):
            if lo <= off + i < hi:
                total[off + i - lo] += cval
    for j in range(min(0, hi) - lo if lo < 0 else 0):
        if total[j] != 0:
            raise _Pole()
    if lo > 0:
        return Fraction(0)
    return total[-lo] if -lo < len(total) else None


def _eval_pair_at_infinity(A, B, g: Poly, branch: str):
    """Value of A(x) + y B(x) at an infinity branch of y^2 = g(x)."""
    n = g.degree
    assert n % 2 == 0
    k = n // 2
    lc = g.leading()
    if not is_rational_square(lc):
        raise ValueError("no rational infinity branch on this model")
    s = rational_sqrt(lc)
    y0 = s if branch == "+" else -s
    one = Poly.one(QQ)
    az = A.compose(one, _X)
    bz = B.compose(one, _X) / _rf(_X.shift_degree(k - 1))
    return _eval_pair_on_curve(az, bz, g.reverse(n), Fraction(0), y0)


# ---------------------------------------------------------------------------
# exact linear solving over the rationals


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve rows * x = rhs exactly; raises on inconsistent/underdetermined."""
    m = len(rows)
    cols = len(rows[0]) if rows else 0
    aug = [[Fraction(v) for v in rows[i]] + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    r = 0
    for ccol in range(cols):
        piv = next((i for i in range(r, m) if aug[i][ccol] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = Fraction(1) / aug[r][ccol]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][ccol] != 0:
                fac = aug[i][ccol]
                aug[i] = [a - fac * b for a, b in zip(aug[i], aug[r])]
        pivots.append(ccol)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][cols] != 0:
            raise ValueError("inconsistent linear system")
    if len(pivots) < cols:
        raise ValueError("underdetermined linear system")
    sol = [Fraction(0)] * cols
    for i, ccol in enumerate(pivots):
        sol[ccol] = aug[i][cols]
    return sol


# ---------------------------------------------------------------------------
# elliptic curves y^2 = x^3 + a2 x^2 + a4 x + a6 over Q


class EllipticCurve:
    """Integral model y^2 = x^3 + a2 x^2 + a4 x + a6 with nonzero discriminant.

    Points are None (the origin) or (x, y) pairs of Fractions.
    """

    __slots__ = ("a2", "a4", "a6", "disc")

    def __init__(self, a2: int, a4: int, a6: int):
        for v in (a2, a4, a6):
            if int(v) != v:
                raise ValueError("elliptic model must be integral")
        self.a2, self.a4, self.a6 = int(a2), int(a4), int(a6)
        b, c, d = self.a2, self.a4, self.a6
        self.disc = (
            18 * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * c**3 - 27 * d * d
        )
        if self.disc == 0:
            raise ValueError("elliptic model is singular")

    def rhs(self, x):
        x = Fraction(x)
        return x**3 + self.a2 * x * x + self.a4 * x + self.a6

    def on_curve(self, P) -> bool:
        if P is None:
            return True
        x, y = P
        return Fraction(y) ** 2 == self.rhs(x)

    def add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 + y2 == 0:
                return None
            lam = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4) / (2 * y1)
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam - self.a2 - x1 - x2
        y3 = lam * (x1 - x3) - y1
        return (x3, y3)

    def neg(self, P):
        return None if P is None else (P[0], -P[1])

    def mul(self, n: int, P):
        if n < 0:
            return self.mul(-n, self.neg(P))
        acc = None
        base = P
        while n:
            if n & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            n >>= 1
        return acc

    def count_points_mod(self, ell: int) -> int:
        """Number of points of the reduction at a good odd prime."""
        assert ell % 2 == 1 and self.disc % ell != 0
        total = ell + 1
        for x in range(ell):
            v = (x * x * x + self.a2 * x * x + self.a4 * x + self.a6) % ell
            total += legendre(v, ell) if v else 0
        return total

    def to_json(self) -> dict:
        return {"a2": self.a2, "a4": self.a4, "a6": self.a6, "disc": self.disc}

    def __eq__(self, other):
        return (
            isinstance(other, EllipticCurve)
            and (self.a2, self.a4, self.a6) == (other.a2, other.a4, other.a6)
        )

    def __repr__(self):
        return f"EllipticCurve(y^2 = x^3 + {self.a2}x^2 + {self.a4}x + {self.a6})"


def _square_divisors(n: int) -> list[int]:
    """0 together with all t > 0 such that t^2 divides |n|, for n != 0."""
    fac = factorize(abs(n))
    out = [1]
    for p, e in fac.items():
        half = e // 2
        out = [t * p**i for t in out for i in range(half + 1)]
    return [0] + sorted(set(out))


def elliptic_torsion(E: EllipticCurve) -> dict:
    """Torsion subgroup of E(Q): order, invariant factors, points, generators.

    Finds a multiplicative bound from point counts at good odd primes and
    then enumerates integral candidates on a short Weierstrass rescaling,
    keeping the points of finite order.
    """
    from sympy import isprime

    ells = []
    ell = 3
    while len(ells) < 3:
        if isprime(ell) and E.disc % ell != 0:
            ells.append(ell)
        ell += 2
    bound = 0
    for ell in ells:
        bound = math.gcd(bound, E.count_points_mod(ell))
    # short model X = 9x + 3a2, Y = 27y: Y^2 = X^3 + A X + B
    A = 81 * E.a4 - 27 * E.a2 * E.a2
    B = 729 * E.a6 - 243 * E.a2 * E.a4 + 54 * E.a2**3
    D = -16 * (4 * A**3 + 27 * B * B)
    assert D != 0
    points = [None]
    for t in _square_divisors(D):
        cubic = Poly(QQ, [Fraction(B - t * t), Fraction(A), Fraction(0), Fraction(1)])
        for root in cubic.roots():
            if root.denominator != 1:
                continue
            for Y in {t, -t}:
                P = ((root - 3 * E.a2) / 9, Fraction(Y) / 27)
                if not E.on_curve(P):
                    continue
                # keep only points of finite order (order at most 12)
                acc = P
                order = 1
                while acc is not None and order <= 12:
                    acc = E.add(acc, P)
                    order += 1
                if acc is None and P not in points:
                    points.append(P)
    n = len(points)
    assert bound % n == 0, "torsion candidates exceed the reduction bound"
    orders = {}
    for P in points:
        if P is None:
            orders[P] = 1
            continue
        acc = P
        o = 1
        while acc is not None:
            acc = E.add(acc, P)
            o += 1
        orders[P] = o
    mx = max(orders.values())
    affine_sorted = sorted((P for P in points if P is not None), key=lambda P: (P[0], P[1]))
    if n == 1:
        invariants, generators = [], []
    elif mx == n:
        invariants = [n]
        generators = [next(P for P in affine_sorted if orders[P] == mx)]
    else:
        assert 2 * mx == n, "rational torsion must be Z/m or Z/2 x Z/2m"
        g = next(P for P in affine_sorted if orders[P] == mx)
        cyc = {None}
        acc = None
        for _ in range(mx):
            acc = E.add(acc, g)
            cyc.add(acc)
        h = next(P for P in affine_sorted if orders[P] == 2 and P not in cyc)
        invariants = [2, mx]
        generators = [h, g]
    return {
        "order": n,
        "invariants": invariants,
        "points": [None] + affine_sorted,
        "generators": generators,
        "reduction_bound": bound,
        "reduction_primes": ells,
    }


# ---------------------------------------------------------------------------
# quotient construction


def _quotient_invariants(curve: HyperellipticCurve, sigma: InvolutionSpec):
    """Invariant coordinates (u, w) with w^2 = T(u) for the quotient.

    Returns (U, h, T): u = U(x) of degree 2, w = y h(x), and the exact
    polynomial T with (y h(x))^2 = T(U(x)) on the curve.
    """
    n = curve.degree
    k = n // 2
    f = curve.f_poly()
    a, b, c, d, e = sigma.a, sigma.b, sigma.c, sigma.d, sigma.e
    if c == 0 and b == 0 and a == d:
        if Fraction(e, d**k) == 1:
            raise ValueError(
                f"quotient by the identity is the curve itself, genus {curve.genus}"
            )
        raise ValueError("quotient by the hyperelliptic involution has genus 0")
    if c == 0:
        # x -> -x + b/d after centering; the model becomes even
        s = Fraction(b, 2 * d)
        fc = f.compose_linear(Fraction(1), s)
        assert all(fc.coeff(i) == 0 for i in range(1, n + 1, 2)), "centered model must be even"
        esign = Fraction(e, d**k)
        assert esign in (1, -1)
        shifted = Poly(QQ, [-s, Fraction(1)])
        U = RationalFunction(shifted * shifted, Poly.one(QQ))
        evens = Poly(QQ, [fc.coeff(2 * i) for i in range(k + 1)])
        if esign == 1:
            h = _rf(1)
            T = evens
        else:
            h = RationalFunction(shifted, Poly.one(QQ))
            T = evens.shift_degree(1)
        return _verified_invariants(f, U, h, T)
    # c != 0: u = x + sigma(x), and x, sigma(x) are the roots of
    # c t^2 - c u t + (b - u d); the norm of (c x + d) is the constant -det
    nu = -sigma.det
    if k % 2 != 0:
        raise ValueError("this involution needs deg f divisible by 4")
    if e == nu ** (k // 2):
        anti = False
    elif e == -(nu ** (k // 2)):
        anti = True
    else:
        raise AssertionError("scalar inconsistent with a validated involution")
    U = RationalFunction(
        Poly(QQ, [Fraction(b), Fraction(0), Fraction(c)]),
        Poly(QQ, [Fraction(d), Fraction(c)]),
    )
    # arithmetic in Q[u][x] modulo x^2 = beta(u) x + alpha(u)
    beta = Poly(QQ, [Fraction(0), Fraction(1)])
    alpha = Poly(QQ, [Fraction(-b, c), Fraction(d, c)])

    def pair_mul(p1, p2):
        a1, b1 = p1
        a2, b2 = p2
        cross = b1 * b2
        return (a1 * a2 + cross * alpha, a1 * b2 + b1 * a2 + cross * beta)

    xpow = (Poly.one(QQ), Poly.zero(QQ))
    acc = (Poly.zero(QQ), Poly.zero(QQ))
    for i in range(n + 1):
        coeff = f.coeff(i)
        if coeff != 0:
            acc = (acc[0] + xpow[0].scale(coeff), acc[1] + xpow[1].scale(coeff))
        if i < n:
            xpow = pair_mul(xpow, (Poly.zero(QQ), Poly.one(QQ)))
    conj = (Poly(QQ, [Fraction(d), Fraction(c)]), Poly.constant(QQ, Fraction(-c)))
    cpow = (Poly.one(QQ), Poly.zero(QQ))
    for _ in range(k):
        cpow = pair_mul(cpow, conj)
    prod = pair_mul(acc, cpow)
    assert prod[1].is_zero(), "the norm reduction must produce an invariant"
    T = prod[0].scale(Fraction(1, nu**k))
    bden = Poly(QQ, [Fraction(d), Fraction(c)])
    bpow = Poly.one(QQ)
    for _ in range(k // 2):
        bpow = bpow * bden
    if not anti:
        h = RationalFunction(Poly.one(QQ), bpow)
    else:
        h = RationalFunction(
            Poly(QQ, [Fraction(-b), Fraction(2 * d), Fraction(c)]), bpow * bden
        )
        delta = Poly(
            QQ,
            [Fraction(-4 * b, c), Fraction(4 * d, c), Fraction(1)],
        )
        T = T * delta
    return _verified_invariants(f, U, h, T)


def _verified_invariants(f: Poly, U, h, T):
    """Assert the exact identity f(x) h(x)^2 = T(U(x)) before returning."""
    lhs = _rf(f) * h * h
    rhs = _rf(T).compose(U.num, U.den)
    assert lhs == rhs, "invariant coordinates fail the quotient identity"
    return U, h, T


def _genus_of_even_model(T: Poly) -> int:
    sf = T.exact_div(T.gcd(T.derivative())) if T.degree > 0 else T
    return max((sf.degree - 1) // 2, 0) if sf.degree >= 1 else 0


def _image_hints(curve, U, h, T, source_points):
    """Quotient-curve points under known source points, plus an infinity flag."""
    f = curve.f_poly()
    hints = []
    saw_infinity = False
    for P in source_points:
        if P.is_infinite:
            saw_infinity = True
            continue
        if U.den.evaluate(P.x) == 0:
            saw_infinity = True
            continue
        u0 = U.evaluate(P.x)
        try:
            w0 = _eval_pair_on_curve(_rf(0), h, f, P.x, P.y)
        except _Pole:
            saw_infinity = True
            continue
        assert w0 * w0 == T.evaluate(u0)
        if (u0, w0) not in hints:
            hints.append((u0, w0))
    return hints, saw_infinity


def _search_quartic_point(T: Poly):
    for height in range(0, 25):
        for denom in range(1, 5):
            for num in range(-height * denom, height * denom + 1):
                u0 = Fraction(num, denom)
                v = T.evaluate(u0)
                if is_rational_square(v):
                    return (u0, rational_sqrt(v))
    return None


def _quartic_chain(T: Poly, point) -> tuple[list, Poly]:
    """Transform steps bringing w^2 = T(u) to a cubic or based quartic.

    point is ("affine", u0, w0) or ("inf",).  Returns (steps, T_final)
    where steps is a list of primitive transforms consumed by _apply_chain.
    """
    steps = []
    cur = T
    if point[0] == "inf":
        assert is_rational_square(cur.leading())
        steps.append(("invert",))
        cur = cur.reverse(4)
        point = ("affine", Fraction(0), rational_sqrt(cur.evaluate(Fraction(0))))
    _, u0, w0 = point
    if u0 != 0:
        steps.append(("translate", u0))
        cur = cur.compose_linear(Fraction(1), u0)
    assert w0 * w0 == cur.evaluate(Fraction(0))
    if cur.degree <= 3:
        return steps, cur
    if w0 == 0:
        # base point is a root: inverting produces a cubic model
        steps.append(("invert",))
        cur = cur.reverse(4)
        assert cur.degree == 3, "root of a squarefree quartic must be simple"
        return steps, cur
    steps.append(("based", w0, tuple(cur.coeff(i) for i in range(5))))
    return steps, cur


def _apply_chain(steps, Uq: _FPair, Wq: _FPair) -> tuple[_FPair, _FPair]:
    """Push the running coordinate pair through the transform steps."""
    for step in steps:
        if step[0] == "translate":
            Uq = Uq - _FPair.of(step[1], Uq.mod)
        elif step[0] == "invert":
            inv = Uq.inv()
            Uq, Wq = inv, Wq * inv * inv
        elif step[0] == "scale_cubic":
            t3 = step[1]
            Uq, Wq = Uq.scale(t3), Wq.scale(t3)
        elif step[0] == "based":
            # with w(0)^2 = q^2 != 0 the double cover w^2 = sum a_i u^i maps to
            # Y^2 = X^3 + a2 X^2 + (a1 a3 - 4 q^2 a4) X + (q^2 a3^2 + a1^2 a4 - 4 q^2 a2 a4)
            # via X = (2q(w + q) + a1 u)/u^2 and
            # Y = ((4q^2 + a1 u) w + 4q^3 + 3 a1 q u + 2 a2 q u^2 + a3 q u^3)/u^3,
            # obtained by eliminating w and taking the square root of the
            # discriminant of the resulting quadratic in u.
            q, (a0, a1, a2, a3, a4) = step[1], step[2]
            assert a0 == q * q
            qc = _FPair.of(q, Uq.mod)
            inv_u = Uq.inv()
            inv_u2 = inv_u * inv_u
            U2 = Uq * Uq
            xnum = (Wq + qc).scale(2 * q) + Uq.scale(a1)
            Xn = xnum * inv_u2
            ynum = (
                (_FPair.of(4 * q * q, Uq.mod) + Uq.scale(a1)) * Wq
                + _FPair.of(4 * q**3, Uq.mod)
                + Uq.scale(3 * a1 * q)
                + U2.scale(2 * a2 * q)
                + (U2 * Uq).scale(a3 * q)
            )
            Yn = ynum * inv_u2 * inv_u
            Uq, Wq = Xn, Yn
        elif step[0] == "integralize":
            lam = step[1]
            Uq, Wq = Uq.scale(lam * lam), Wq.scale(lam**3)
        else:
            raise AssertionError(f"unknown transform {step[0]}")
    return Uq, Wq


def _cubic_coefficients(steps, T_final: Poly) -> tuple[Fraction, Fraction, Fraction, list]:
    """Weierstrass coefficients for the chain, appending the final scaling."""
    if T_final.degree <= 3:
        t3 = T_final.coeff(3)
        assert t3 != 0, "quotient cubic degenerated"
        steps = steps + [("scale_cubic", t3)]
        c2 = T_final.coeff(2)
        c1 = T_final.coeff(1) * t3
        c0 = T_final.coeff(0) * t3 * t3
        return c2, c1, c0, steps
    assert steps and steps[-1][0] == "based"
    q, (a0, a1, a2, a3, a4) = steps[-1][1], steps[-1][2]
    c2 = a2
    c1 = a1 * a3 - 4 * q * q * a4
    c0 = q * q * a3 * a3 + a1 * a1 * a4 - 4 * q * q * a2 * a4
    return c2, c1, c0, steps


def _integralizing_scale(c2: Fraction, c1: Fraction, c0: Fraction) -> int:
    lam_primes = {}
    for value, weight in ((c2, 2), (c1, 4), (c0, 6)):
        den = Fraction(value).denominator
        if den == 1:
            continue
        for p, exp in factorize(den).items():
            need = -(-exp // weight)
            lam_primes[p] = max(lam_primes.get(p, 0), need)
    lam = 1
    for p, exp in lam_primes.items():
        lam *= p**exp
    return lam


class QuotientMap:
    """A verified degree-2 map from a hyperelliptic curve to an elliptic one.

    The map factors as invariant coordinates (u, w) = (U(x), y h(x)) with
    w^2 = T(u), followed by a rational equivalence of the genus-1 model
    w^2 = T(u) with the Weierstrass target.  The composite coordinates are
    stored as pairs X = X0(x) + y X1(x), Y = Y0(x) + y Y1(x) and the
    target equation is verified exactly on the source function field.
    """

    def __init__(self, source, sigma, target, U, h, T, x_pair, y_pair):
        self.source = source
        self.sigma = sigma
        self.target = target
        self.U = U
        self.h = h
        self.T = T
        self.x_pair = x_pair
        self.y_pair = y_pair
        self._verify()

    def _verify(self):
        f = self.source.f_poly()
        X = _FPair(self.x_pair[0], self.x_pair[1], f)
        Y = _FPair(self.y_pair[0], self.y_pair[1], f)
        E = self.target
        X2 = X * X
        lhs = Y * Y
        rhs = (
            X2 * X
            + X2.scale(E.a2)
            + X.scale(E.a4)
            + _FPair.of(Fraction(E.a6), f)
        )
        assert lhs == rhs, "quotient map fails the target equation identity"
        # invariance: both composite coordinates commute with the involution
        sn, sd = self.sigma.moebius_num(), self.sigma.moebius_den()
        k = self.source.degree // 2
        efac = RationalFunction(
            Poly.constant(QQ, Fraction(self.sigma.e)),
            Poly.one(QQ),
        )
        bpow = _rf(1)
        for _ in range(k):
            bpow = bpow * _rf(sd)
        for (r0, r1) in (self.x_pair, self.y_pair):
            t0 = r0.compose(sn, sd)
            t1 = r1.compose(sn, sd) * efac / bpow
            assert t0 == r0 and t1 == r1, "quotient map does not commute with the involution"

    # -- evaluation

    def map_point(self, P: CurvePoint):
        """Image on the target; None is the origin of the elliptic curve."""
        f = self.source.f_poly()
        coords = []
        for (r0, r1) in (self.x_pair, self.y_pair):
            try:
                if P.is_infinite:
                    coords.append(_eval_pair_at_infinity(r0, r1, f, P.branch))
                else:
                    coords.append(_eval_pair_on_curve(r0, r1, f, P.x, P.y))
            except _Pole:
                coords.append(None)
        x_pole, y_pole = (coords[0] is None), (coords[1] is None)
        assert x_pole == y_pole, "coordinates disagree about the point at infinity"
        if x_pole:
            return None
        assert self.target.on_curve((coords[0], coords[1]))
        return (coords[0], coords[1])

    def map_point_mod(self, P, p: int):
        """Image of an affine F_p point (x, y) of the reduced source.

        Returns (X, Y) mod p, or None when the image is the origin or the
        evaluation meets a denominator divisible by p.
        """
        x0, y0 = P

        def frac_mod(v: Fraction):
            if v.denominator % p == 0:
                return None
            return v.numerator * pow(v.denominator, -1, p) % p

        vals = []
        for (r0, r1) in (self.x_pair, self.y_pair):
            parts = []
            for rf in (r0, r1):
                nv = frac_mod(rf.num.evaluate(Fraction(x0)))
                dv = frac_mod(rf.den.evaluate(Fraction(x0)))
                if nv is None or dv is None or dv == 0:
                    return None
                parts.append(nv * pow(dv, -1, p) % p)
            vals.append((parts[0] + y0 * parts[1]) % p)
        return tuple(vals)

    def to_json(self) -> dict:
        return {
            "source": [str(c) for c in self.source.f],
            "involution": self.sigma.to_json(),
            "target": self.target.to_json(),
            "invariant_x": {
                "num": [str(c) for c in self.U.num.coeffs],
                "den": [str(c) for c in self.U.den.coeffs],
            },
            "invariant_y_factor": {
                "num": [str(c) for c in self.h.num.coeffs],
                "den": [str(c) for c in self.h.den.coeffs],
            },
            "quotient_model": [str(c) for c in self.T.coeffs],
            "assumption": "pullback completeness requires the target list to exhaust the elliptic rational points",
        }

    def __repr__(self):
        return f"QuotientMap({self.source!r} -> {self.target!r})"


def quotient_by_involution(
    curve: HyperellipticCurve,
    sigma: InvolutionSpec,
    source_points: Sequence[CurvePoint] = (),
) -> QuotientMap:
    """Quotient of the curve by a validated involution, as a verified map.

    The quotient must have genus 1; the Weierstrass reduction uses a
    rational point of the genus-1 model, preferably the image of a known
    rational point of the source (pass source_points), falling back to the
    rational infinity branch, a rational root, and a small height search.
    """
    sigma.validate(curve)
    U, h, T = _quotient_invariants(curve, sigma)
    genus = _genus_of_even_model(T)
    if genus != 1:
        raise ValueError(f"quotient curve has genus {genus}, expected 1")
    if not T.squarefree():
        raise NotImplementedError("square factors in the quotient model are not supported")

    if T.degree <= 3:
        steps, T_final = [], T
    else:
        hints, _ = _image_hints(curve, U, h, T, source_points)
        point = None
        if hints:
            point = ("affine",) + hints[0]
        elif is_rational_square(T.leading()):
            point = ("inf",)
        if point is None:
            roots = T.roots()
            if roots:
                point = ("affine", roots[0], Fraction(0))
        if point is None:
            found = _search_quartic_point(T)
            if found is None:
                raise ValueError(
                    "no rational point found on the genus-1 quotient; supply source points"
                )
            point = ("affine",) + found
        steps, T_final = _quartic_chain(T, point)

    c2, c1, c0, steps = _cubic_coefficients(steps, T_final)
    Uq = _FPair(_rf(_X), _rf(0), T)
    Wq = _FPair(_rf(0), _rf(1), T)
    Xq, Yq = _apply_chain(steps, Uq, Wq)
    lam = _integralizing_scale(c2, c1, c0)
    if lam != 1:
        Xq, Yq = _apply_chain([("integralize", lam)], Xq, Yq)
        c2, c1, c0 = c2 * lam**2, c1 * lam**4, c0 * lam**6
    target = EllipticCurve(int(c2), int(c1), int(c0))

    # substitute the invariant coordinates to land on the source field
    def to_source(pair: _FPair) -> tuple[RationalFunction, RationalFunction]:
        a = pair.a.compose(U.num, U.den)
        b = pair.b.compose(U.num, U.den)
        return (a, b * h)

    return QuotientMap(curve, sigma, target, U, h, T, to_source(Xq), to_source(Yq))


# ---------------------------------------------------------------------------
# pullback of rational points through the quotient


def pullback_points(qmap: QuotientMap, targets: Sequence) -> list[CurvePoint]:
    """All rational source points mapping into the listed target points.

    Targets are elliptic points (None for the origin).  When the list
    exhausts the rational points of the target (rank zero and complete
    torsion, which is an input assumption recorded by the caller), the
    result is the complete list of rational points of the source curve.
    """
    curve = qmap.source
    f = curve.f_poly()
    X0_rf, X1_rf = qmap.x_pair
    seen = {}
    targets = list(targets)
    branch_points = curve.points_at_infinity()
    for t in targets:
        if t is not None and not qmap.target.on_curve(t):
            raise ValueError(f"target point {t} is not on the target curve")
        xcands = set()
        for rf in (X0_rf, X1_rf):
            if rf.den.degree >= 1:
                xcands.update(rf.den.roots())
        if t is not None:
            X0 = Fraction(t[0])
            expr = (_rf(X0) - X0_rf) * (_rf(X0) - X0_rf) - X1_rf * X1_rf * _rf(f)
            assert not expr.is_zero()
            if expr.num.degree >= 1:
                xcands.update(expr.num.roots())
        for x0 in sorted(xcands):
            fx = f.evaluate(x0)
            ys = []
            if fx == 0:
                ys = [Fraction(0)]
            elif is_rational_square(fx):
                r = rational_sqrt(fx)
                ys = [r, -r]
            for y0 in ys:
                P = CurvePoint(x0, y0)
                if P.key() not in seen and qmap.map_point(P) == t:
                    seen[P.key()] = P
        for P in branch_points:
            if P.key() not in seen and qmap.map_point(P) == t:
                seen[P.key()] = P
    return sorted(seen.values(), key=lambda P: P.key())


# ---------------------------------------------------------------------------
# twist covering collections


def _squarefree_int(d: int) -> bool:
    if d == 0:
        return False
    return all(e == 1 for e in factorize(abs(d)).values())


def twist_covering_collection(
    curve: HyperellipticCurve,
    f1: Sequence[int],
    f2: Sequence[int],
    twists: Sequence[int],
) -> dict:
    """Covering collection data for a factorization f = f1 f2.

    For each squarefree twist d the pair y^2 = d f1(x), y^2 = d f2(x)
    covers the source: a rational x-coordinate of the source makes both
    d f1(x) and d f2(x) squares for exactly one squarefree d supported on
    the resultant primes.
    """
    P1 = Poly(QQ, [Fraction(c) for c in f1])
    P2 = Poly(QQ, [Fraction(c) for c in f2])
    if P1 * P2 != curve.f_poly():
        raise ValueError("f1 * f2 does not equal the curve polynomial")
    if curve.degree % 2 != 0 or P1.degree % 2 != 0 or P2.degree % 2 != 0:
        raise NotImplementedError("twist coverings are implemented for even-degree factors")
    seen = []
    for d in twists:
        if not _squarefree_int(int(d)):
            raise ValueError(f"twist {d} is not a squarefree nonzero integer")
        if d in seen:
            raise ValueError(f"duplicate twist {d}")
        seen.append(int(d))
    res = int_poly_resultant([int(c) for c in f1], [int(c) for c in f2])
    assert res != 0, "factors must be coprime"
    components = []
    for d in seen:
        components.append(
            {
                "d": d,
                "first": [d * int(c) for c in f1],
                "second": [d * int(c) for c in f2],
                "genus_first": (P1.degree - 2) // 2,
                "genus_second": (P2.degree - 2) // 2,
            }
        )
    return {"resultant": res, "components": components}


def recover_covered_points(
    curve: HyperellipticCurve,
    f1: Sequence[int],
    f2: Sequence[int],
    points_by_twist: dict,
) -> list[CurvePoint]:
    """Source points recovered from rational points of the twisted factors.

    points_by_twist maps each twist d to the rational points found on
    y^2 = d f2(x); a point survives when d f1 at the same x-coordinate is
    also a square, and the two square roots premultiply to a source point.
    """
    P1 = Poly(QQ, [Fraction(c) for c in f1])
    P2 = Poly(QQ, [Fraction(c) for c in f2])
    if P1 * P2 != curve.f_poly():
        raise ValueError("f1 * f2 does not equal the curve polynomial")
    out = {}
    for d, pts in sorted(points_by_twist.items()):
        dq = Fraction(d)
        for pt in pts:
            if pt.is_infinite:
                if is_rational_square(dq * P1.leading()) and is_rational_square(
                    dq * P2.leading()
                ):
                    for P in curve.points_at_infinity():
                        out[P.key()] = P
                continue
            x0 = Fraction(pt.x)
            v1 = dq * P1.evaluate(x0)
            if not is_rational_square(v1):
                continue
            y1 = rational_sqrt(v1)
            y = y1 * Fraction(pt.y) / dq
            for cand in {CurvePoint(x0, y), CurvePoint(x0, -y)}:
                assert curve.is_on_curve(cand)
                out[cand.key()] = cand
    return sorted(out.values(), key=lambda P: P.key())


# ---------------------------------------------------------------------------
# q-expansions and model fitting


class _Laurent:
    """Truncated Laurent series: coeffs[i] is the q^(offset+i) term.

    prec is the absolute exponent the series is known below, so the data
    always satisfies prec == offset + len(coeffs).
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, offset: int, coeffs: Sequence):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            offset += 1
        self.offset = offset
        self.coeffs = coeffs

    @property
    def prec(self) -> int:
        return self.offset + len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, expo: int) -> Fraction:
        i = expo - self.offset
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "_Laurent") -> "_Laurent":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        off = min(self.offset, other.offset)
        prec = min(self.prec, other.prec)
        out = [
            self.coeff(off + i) + other.coeff(off + i) for i in range(max(prec - off, 0))
        ]
        return _Laurent(off, out)

    def __sub__(self, other: "_Laurent") -> "_Laurent":
        return self + other.scale(-1)

    def scale(self, c) -> "_Laurent":
        return _Laurent(self.offset, [Fraction(c) * v for v in self.coeffs])

    def __mul__(self, other: "_Laurent") -> "_Laurent":
        if self.is_zero() or other.is_zero():
            # truncation of the zero factor still limits what is known
            return _Laurent(min(self.prec, other.prec), [])
        off = self.offset + other.offset
        prec = min(self.prec + other.offset, other.prec + self.offset)
        out = [Fraction(0)] * (prec - off)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= len(out):
                    break
                out[i + j] += a * b
        return _Laurent(off, out)

    def inverse(self) -> "_Laurent":
        if self.is_zero():
            raise ZeroDivisionError("inverting a series with no known nonzero term")
        rel = len(self.coeffs)
        inv = [Fraction(1) / self.coeffs[0]] + [Fraction(0)] * (rel - 1)
        for nn in range(1, rel):
            acc = Fraction(0)
            for i in range(1, nn + 1):
                acc += self.coeffs[i] * inv[nn - i] if i < rel else 0
            inv[nn] = -acc / self.coeffs[0]
        return _Laurent(-self.offset, inv)

    def __truediv__(self, other: "_Laurent") -> "_Laurent":
        return self * other.inverse()

    def q_derivative(self) -> "_Laurent":
        """q * d/dq of the series (the weight-friendly derivative)."""
        return _Laurent(
            self.offset,
            [(self.offset + i) * c for i, c in enumerate(self.coeffs)],
        )

    def __repr__(self):
        return f"_Laurent(q^{self.offset} * {self.coeffs[:6]}..., prec={self.prec})"


def parse_q_expansion(text: str) -> dict:
    """Parse the one-integer-per-line q-expansion format.

    The first nonblank line is a header '# q0=<e> level=<N> label=<label>';
    the remaining nonblank lines are the integer coefficients of
    q^q0, q^(q0+1), ... in order.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty q-expansion data")
    m = re.fullmatch(r"#\s*q0=(-?\d+)\s+level=(\d+)\s+label=(\S+)", lines[0])
    if not m:
        raise ValueError(f"bad q-expansion header: {lines[0]!r}")
    coeffs = []
    for ln in lines[1:]:
        try:
            coeffs.append(int(ln))
        except ValueError:
            raise ValueError(f"bad coefficient line: {ln!r}") from None
    if not coeffs:
        raise ValueError("q-expansion has no coefficients")
    return {
        "q0": int(m.group(1)),
        "level": int(m.group(2)),
        "label": m.group(3),
        "coeffs": coeffs,
    }


def fit_hyperelliptic_from_q_expansions(
    g1: tuple[int, Sequence],
    g2: tuple[int, Sequence],
    genus: int,
    order: int,
) -> dict:
    """Recover y^2 = f(x) from two q-expansions with x = g2/g1, y = q x'/g1.

    g1 and g2 are (q0, coefficients) pairs.  The coefficients of f (degree
    at most 2 genus + 2) are solved from the exact linear system given by
    the q-expansion of y^2 - f(x) through `order` coefficients, and the
    identity is then verified through the full window the inputs support.
    """
    q1, c1 = g1
    q2, c2 = g2
    if not c1 or Fraction(c1[0]) == 0:
        raise ValueError("g1 must have a nonzero leading coefficient")
    if not c2 or Fraction(c2[0]) == 0:
        raise ValueError("g2 must have a nonzero leading coefficient")
    if order < 1:
        raise ValueError("order must be positive")
    s1 = _Laurent(int(q1), c1)
    s2 = _Laurent(int(q2), c2)
    x = s2 / s1
    if x.is_zero() or (x.offset == 0 and len(x.coeffs) == 1):
        raise ValueError("x = g2/g1 is constant; the forms cannot cut out a curve")
    y = x.q_derivative() / s1
    deg = 2 * genus + 2
    xpows = [None, x]
    for _ in range(deg - 1):
        xpows.append(xpows[-1] * x)
    y2 = y * y

    def col(i: int, expo: int) -> Fraction:
        # column i is the q-expansion of x^i; x^0 = 1 is exact everywhere
        if i == 0:
            return Fraction(1) if expo == 0 else Fraction(0)
        return xpows[i].coeff(expo)

    lo = min([y2.offset, 0] + [s.offset for s in xpows[1:]])
    hi = min([y2.prec] + [s.prec for s in xpows[1:]])
    avail = hi - lo
    if avail < order:
        raise ValueError(
            f"q-expansions support only {avail} identity coefficients, below order={order}"
        )
    rows = [[col(i, lo + r) for i in range(deg + 1)] for r in range(order)]
    rhs = [y2.coeff(lo + r) for r in range(order)]
    try:
        sol = _solve_linear(rows, rhs)
    except ValueError as err:
        if "underdetermined" in str(err):
            raise ValueError(
                "underdetermined model fit; increase the requested order"
            ) from None
        raise ValueError(
            "q-expansions are inconsistent with a hyperelliptic relation of this genus"
        ) from None
    # verify through everything the input precision supports
    for r in range(avail):
        expo = lo + r
        residual = y2.coeff(expo) - sum(sol[i] * col(i, expo) for i in range(deg + 1))
        if residual != 0:
            raise ValueError(
                "q-expansions are inconsistent with a hyperelliptic relation of this genus"
            )
    fpoly = Poly(QQ, sol)
    if fpoly.degree < 3:
        raise ValueError("fitted polynomial has degree below 3")
    return {
        "coefficients": sol,
        "degree": fpoly.degree,
        "verified_through": hi,
        "checked_coefficients": avail,
    }
