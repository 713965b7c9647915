"""p-adic numbers with capped absolute precision, and truncated power series.

A PadicNumber models a coset x + O(p^N): the integer N is the absolute
precision and every operation propagates it pessimistically:

  add/sub:  N = min(N1, N2)
  mul:      N = min(N1 + v2, N2 + v1)        (vi = valuation of factor i)
  div:      via multiplication by the inverse; inverting an element of
            valuation v costs 2v digits of absolute precision
  sqrt:     an element of valuation 2k known to O(p^N) has square root
            known to O(p^(N-k))

Internally the approximation is a Fraction whose denominator is a power of
p, reduced into canonical range, so negative-valuation elements work too.

TruncatedSeries models f(t) = sum c_i t^i + O(t^(K+1)) with coefficients in
any ring whose elements support +, -, * (Fraction, PadicNumber, quadratic
extension elements). The stored upper index K is the series order.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import (
    is_prime,
    legendre,
    rational_valuation,
    sqrt_mod_p,
    valuation,
)

DEFAULT_PRECISION = 16


def _canonical_approx(q: Fraction, p: int, prec: int) -> Fraction:
    """Reduce q into canonical form a/p^k with a in [0, p^(prec+k))."""
    if q == 0:
        return Fraction(0)
    den = q.denominator
    k = 0
    while den % p == 0:
        den //= p
        k += 1
    if den != 1:
        # clear the prime-to-p part of the denominator by inverting mod p^(prec+k)
        mod = p ** (prec + k)
        num = q.numerator * pow(den, -1, mod)
    else:
        num = q.numerator
    mod = p ** (prec + k)
    num %= mod
    if num == 0:
        return Fraction(0)
    while k > 0 and num % p == 0:
        num //= p
        k -= 1
        num %= p ** (prec + k)
        if num == 0:
            return Fraction(0)
    return Fraction(num, p**k)


class PadicNumber:
    """An element of Q_p known modulo p^prec."""

    __slots__ = ("p", "prec", "approx")

    def __init__(self, p: int, prec: int, value, _canonical: bool = False):
        self.p = p
        self.prec = prec
        q = value if isinstance(value, Fraction) else Fraction(value)
        self.approx = q if _canonical else _canonical_approx(q, p, prec)

    # -- constructors

    @classmethod
    def from_int(cls, n: int, p: int, prec: int = DEFAULT_PRECISION) -> "PadicNumber":
        return cls(p, prec, Fraction(n))

    @classmethod
    def from_rational(cls, q, p: int, prec: int = DEFAULT_PRECISION) -> "PadicNumber":
        return cls(p, prec, Fraction(q))

    @classmethod
    def zero(cls, p: int, prec: int = DEFAULT_PRECISION) -> "PadicNumber":
        return cls(p, prec, Fraction(0), _canonical=True)

    @classmethod
    def one(cls, p: int, prec: int = DEFAULT_PRECISION) -> "PadicNumber":
        return cls(p, prec, Fraction(1), _canonical=True)

    # -- queries

    def is_zero(self) -> bool:
        """True when indistinguishable from zero at this precision."""
        return self.approx == 0

    def __bool__(self) -> bool:
        return self.approx != 0

    def valuation(self):
        """v_p of the approximation; equals prec for an apparent zero."""
        if self.approx == 0:
            return self.prec
        return rational_valuation(self.approx, self.p)

    def precision_relative(self) -> int:
        return self.prec - self.valuation() if self.approx != 0 else 0

    def is_unit(self) -> bool:
        return self.approx != 0 and self.valuation() == 0

    def residue(self) -> int:
        """Image in GF(p); requires valuation >= 0."""
        if self.approx.denominator != 1:
            raise ValueError("negative valuation has no residue")
        return self.approx.numerator % self.p

    def lift_integer(self) -> int:
        """The canonical integer lift in [0, p^prec); requires val >= 0."""
        if self.approx.denominator != 1:
            raise ValueError("negative valuation has no integer lift")
        return self.approx.numerator % self.p**self.prec

    def rational_approx(self) -> Fraction:
        return self.approx

    # -- arithmetic

    def _check(self, other: "PadicNumber"):
        if self.p != other.p:
            raise ValueError("mixed primes")

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return PadicNumber(self.p, self.prec, Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        prec = min(self.prec, other.prec)
        return PadicNumber(self.p, prec, self.approx + other.approx)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        prec = min(self.prec, other.prec)
        return PadicNumber(self.p, prec, self.approx - other.approx)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PadicNumber(self.p, self.prec, -self.approx)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        v1 = self.prec if self.approx == 0 else rational_valuation(self.approx, self.p)
        v2 = other.prec if other.approx == 0 else rational_valuation(other.approx, other.p)
        prec = min(self.prec + v2, other.prec + v1)
        return PadicNumber(self.p, prec, self.approx * other.approx)

    __rmul__ = __mul__

    def inverse(self) -> "PadicNumber":
        if self.approx == 0:
            raise ZeroDivisionError("inverting an apparent zero")
        v = rational_valuation(self.approx, self.p)
        prec = self.prec - 2 * v
        if prec < 1:
            raise ValueError("inverse below working precision")
        return PadicNumber(self.p, prec, 1 / self.approx)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = PadicNumber(self.p, self.prec + max(0, n - 1) * self.prec, Fraction(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def mul_exact(self, q) -> "PadicNumber":
        """Multiply by an exact rational: precision shifts by v_p(q)."""
        q = Fraction(q)
        if q == 0:
            return PadicNumber.zero(self.p, self.prec)
        v = rational_valuation(q, self.p)
        return PadicNumber(self.p, self.prec + v, self.approx * q)

    def div_exact(self, q) -> "PadicNumber":
        """Divide by an exact rational: costs exactly v_p(q) digits."""
        return self.mul_exact(1 / Fraction(q))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        diff = self.approx - other.approx
        if diff == 0:
            return True
        return rational_valuation(diff, self.p) >= prec

    def __hash__(self):
        raise TypeError("inexact p-adic numbers are unhashable")

    def sqrt(self) -> "PadicNumber":
        """Canonical square root: residue is the smaller of the two mod p.

        Requires p odd, even valuation and a unit part that is a quadratic
        residue; raises ValueError otherwise.
        """
        p = self.p
        if p == 2:
            raise NotImplementedError("square roots over Q_2 are not supported")
        if self.approx == 0:
            raise ValueError("square root of an apparent zero is undetermined")
        v = rational_valuation(self.approx, p)
        if v % 2 != 0:
            raise ValueError("odd valuation: not a square")
        unit = self.approx / Fraction(p) ** v
        rel = self.prec - v
        if rel < 1:
            raise ValueError("no significant digits for square root")
        mod = p**rel
        u = int(unit.numerator * pow(unit.denominator, -1, mod) % mod)
        if legendre(u, p) != 1:
            raise ValueError("unit part is not a quadratic residue")
        r = sqrt_mod_p(u, p)
        k, cur = 1, r
        while k < rel:
            k = min(2 * k, rel)
            m = p**k
            cur = (cur + u * pow(cur, -1, m)) * pow(2, -1, m) % m
        if min(cur % p, (p - cur) % p) != cur % p:
            cur = p**rel - cur
        root = Fraction(cur) * Fraction(p) ** (v // 2)
        return PadicNumber(p, self.prec - v // 2, root)

    def is_square(self) -> bool:
        if self.approx == 0:
            raise ValueError("squareness of an apparent zero is undetermined")
        v = rational_valuation(self.approx, self.p)
        if v % 2 != 0:
            return False
        unit = self.approx / Fraction(self.p) ** v
        mod = self.p
        u = int(unit.numerator * pow(unit.denominator, -1, mod) % mod)
        return legendre(u, self.p) == 1

    # -- presentation

    def expansion(self, digits: int | None = None) -> list[int]:
        """Base-p digits of the integer lift (valuation >= 0 only)."""
        n = self.lift_integer()
        out = []
        for _ in range(digits if digits is not None else self.prec):
            out.append(n % self.p)
            n //= self.p
        return out

    def __repr__(self):
        if self.approx == 0:
            return f"O({self.p}^{self.prec})"
        return f"{self.approx} + O({self.p}^{self.prec})"


class QpField:
    """Coefficient-field adapter so Poly can work over Q_p."""

    def __init__(self, p: int, prec: int = DEFAULT_PRECISION):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.prec = prec
        self.name = f"Q_{p} (prec {prec})"
        self.zero = PadicNumber.zero(p, prec)
        self.one = PadicNumber.one(p, prec)

    def from_int(self, n: int) -> PadicNumber:
        return PadicNumber.from_int(n, self.p, self.prec)

    def from_rational(self, q) -> PadicNumber:
        return PadicNumber.from_rational(q, self.p, self.prec)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def inv(self, a):
        return a.inverse()

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def eq(self, a, b) -> bool:
        return a == b

    def canonical(self, a):
        if isinstance(a, PadicNumber):
            return a
        return PadicNumber(self.p, self.prec, Fraction(a))

    def __repr__(self):
        return self.name


# ---------------------------------------------------------------------------
# quadratic extensions K = Q_p(w), w^2 = d


class QuadExtField:
    """Q_p(w) with w^2 = d, for d a non-square integer in Q_p.

    Elements are pairs (a, b) of PadicNumber meaning a + b*w. The extension
    is unramified when v(d) is even (with non-residue unit part) and
    ramified when v(d) is odd; valuations are Fractions with denominator
    dividing 2.
    """

    def __init__(self, p: int, d: int, prec: int = DEFAULT_PRECISION):
        if p == 2:
            raise NotImplementedError("quadratic extensions of Q_2 are not supported")
        self.p = p
        self.prec = prec
        self.d = Fraction(d)
        v = rational_valuation(self.d, p)
        if v % 2 == 0:
            unit = self.d / Fraction(p) ** v
            u = int(unit.numerator * pow(unit.denominator, -1, p) % p)
            if legendre(u, p) == 1:
                raise ValueError("d is a square in Q_p; extension is trivial")
            self.ramified = False
        else:
            self.ramified = True
        self.w_valuation = Fraction(v, 2)
        self.zero = QuadExtNumber(self, PadicNumber.zero(p, prec), PadicNumber.zero(p, prec))
        self.one = QuadExtNumber(self, PadicNumber.one(p, prec), PadicNumber.zero(p, prec))

    def embed(self, a) -> "QuadExtNumber":
        if isinstance(a, QuadExtNumber):
            return a
        if isinstance(a, PadicNumber):
            return QuadExtNumber(self, a, PadicNumber.zero(self.p, a.prec))
        return QuadExtNumber(
            self,
            PadicNumber.from_rational(Fraction(a), self.p, self.prec),
            PadicNumber.zero(self.p, self.prec),
        )

    def gen(self) -> "QuadExtNumber":
        return QuadExtNumber(
            self,
            PadicNumber.zero(self.p, self.prec),
            PadicNumber.one(self.p, self.prec),
        )

    def __repr__(self):
        return f"Q_{self.p}(sqrt({self.d}))"


class QuadExtNumber:
    __slots__ = ("field", "a", "b")

    def __init__(self, field: QuadExtField, a: PadicNumber, b: PadicNumber):
        self.field = field
        self.a = a
        self.b = b

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def valuation(self) -> Fraction:
        va = Fraction(self.a.valuation())
        vb = Fraction(self.b.valuation()) + self.field.w_valuation
        return min(va, vb)

    def conjugate(self) -> "QuadExtNumber":
        return QuadExtNumber(self.field, self.a, -self.b)

    def trace(self) -> PadicNumber:
        return self.a + self.a

    def norm(self) -> PadicNumber:
        d = PadicNumber.from_rational(self.field.d, self.field.p, max(self.a.prec, self.b.prec))
        return self.a * self.a - self.b * self.b * d

    def _coerce(self, other):
        if isinstance(other, QuadExtNumber):
            return other
        if isinstance(other, (PadicNumber, int, Fraction)):
            return self.field.embed(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExtNumber(self.field, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExtNumber(self.field, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadExtNumber(self.field, -self.a, -self.b)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = PadicNumber.from_rational(
            self.field.d, self.field.p, max(self.a.prec, self.b.prec, other.a.prec, other.b.prec)
        )
        return QuadExtNumber(
            self.field,
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExtNumber":
        n = self.norm()
        ninv = n.inverse()
        return QuadExtNumber(self.field, self.a * ninv, -self.b * ninv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def mul_exact(self, q) -> "QuadExtNumber":
        return QuadExtNumber(self.field, self.a.mul_exact(q), self.b.mul_exact(q))

    def div_exact(self, q) -> "QuadExtNumber":
        return QuadExtNumber(self.field, self.a.div_exact(q), self.b.div_exact(q))

    def __hash__(self):
        raise TypeError("inexact extension elements are unhashable")

    def __repr__(self):
        return f"({self.a}) + ({self.b})*w  [w^2 = {self.field.d}]"


# ---------------------------------------------------------------------------
# truncated power series


def _coeff_is_zero(c) -> bool:
    if isinstance(c, (PadicNumber, QuadExtNumber)):
        return c.is_zero()
    return c == 0


class TruncatedSeries:
    """f(t) = sum_{i<=order} coeffs[i] t^i + O(t^(order+1)).

    Coefficient zero-tests treat apparent zeros (p-adic zeros at working
    precision) as structural zeros when computing t-adic valuations for the
    product rule; any slack this introduces is below coefficient precision.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(coeffs) < order + 1:
            raise ValueError("missing coefficients below the stated order")
        self.coeffs = tuple(coeffs[: order + 1])
        self.order = order

    @classmethod
    def zero_series(cls, zero_coeff, order: int) -> "TruncatedSeries":
        return cls([zero_coeff] * (order + 1), order)

    def coeff(self, i: int):
        if i > self.order:
            raise IndexError(f"coefficient {i} is beyond O(t^{self.order + 1})")
        return self.coeffs[i]

    def t_valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if not _coeff_is_zero(c):
                return i
        return self.order + 1

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot gain precision by truncation")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def _zero(self):
        c = self.coeffs[0]
        if isinstance(c, PadicNumber):
            return PadicNumber.zero(c.p, c.prec)
        if isinstance(c, QuadExtNumber):
            return c.field.zero
        return c - c

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(order + 1)], order
        )

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries([c * a for a in self.coeffs], self.order)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by the exact monomial t^k."""
        if k == 0:
            return self
        z = self._zero()
        return TruncatedSeries([z] * k + list(self.coeffs), self.order + k)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        va, vb = self.t_valuation(), other.t_valuation()
        order = min(self.order + 1 + vb, other.order + 1 + va) - 1
        z = self._zero()
        out = [z] * (order + 1)
        for i, a in enumerate(self.coeffs):
            if _coeff_is_zero(a):
                continue
            jmax = min(other.order, order - i)
            for j in range(jmax + 1):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncatedSeries(out, order)

    def inverse(self) -> "TruncatedSeries":
        """1/f for f with invertible constant term."""
        c0 = self.coeffs[0]
        if _coeff_is_zero(c0):
            raise ZeroDivisionError("series has no invertible constant term")
        inv0 = c0.inverse() if hasattr(c0, "inverse") else 1 / c0
        out = [inv0]
        for n in range(1, self.order + 1):
            s = None
            for i in range(1, n + 1):
                term = self.coeffs[i] * out[n - i]
                s = term if s is None else s + term
            out.append(-(inv0 * s))
        return TruncatedSeries(out, self.order)

    def sqrt(self, const_sqrt) -> "TruncatedSeries":
        """Square root with prescribed constant term (const_sqrt^2 = c0)."""
        z0 = const_sqrt
        two_z0_inv = (z0 + z0).inverse() if hasattr(z0, "inverse") else 1 / (z0 + z0)
        out = [z0]
        for n in range(1, self.order + 1):
            s = self.coeffs[n]
            for i in range(1, n):
                s = s - out[i] * out[n - i]
            out.append(two_z0_inv * s)
        return TruncatedSeries(out, self.order)

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            raise ValueError("derivative needs order >= 1")
        out = []
        for i in range(1, self.order + 1):
            c = self.coeffs[i]
            acc = c
            for _ in range(i - 1):
                acc = acc + c
            out.append(acc)
        return TruncatedSeries(out, self.order - 1)

    def antiderivative(self) -> "TruncatedSeries":
        """Termwise integral with constant term 0; order rises by one.

        Over Q_p the division by k+1 costs v_p(k+1) digits on that
        coefficient, which the coefficient arithmetic tracks by itself.
        """
        z = self._zero()
        out = [z]
        for i, c in enumerate(self.coeffs):
            if isinstance(c, (PadicNumber, QuadExtNumber)):
                out.append(c.div_exact(i + 1))
            else:
                out.append(c / (i + 1) if not isinstance(c, int) else Fraction(c, i + 1))
        return TruncatedSeries(out, self.order + 1)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(t)) for inner with t-valuation >= 1."""
        v = inner.t_valuation()
        if v < 1:
            raise ValueError("inner series must vanish at t = 0")
        order = min((self.order + 1) * v, inner.order + 1) - 1
        z = inner._zero()
        acc = TruncatedSeries([z] * (order + 1), order)
        for c in reversed(self.coeffs):
            acc = acc * inner
            if acc.order > order:
                acc = acc.truncate(order)
            const = TruncatedSeries([c] + [z] * order, order)
            acc = acc + const
        return acc

    def evaluate(self, t0):
        """Horner evaluation; the caller owns the O(t0^(order+1)) tail."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * t0 + c
        return acc

    def __repr__(self):
        shown = []
        for i, c in enumerate(self.coeffs):
            if not _coeff_is_zero(c):
                shown.append(f"({c})*t^{i}")
            if len(shown) >= 6:
                shown.append("...")
                break
        body = " + ".join(shown) if shown else "0"
        return f"{body} + O(t^{self.order + 1})"


def poly_series(poly_coeffs, series: TruncatedSeries) -> TruncatedSeries:
    """Evaluate an exact polynomial (coefficient list) at a series argument."""
    z = series._zero()
    acc = TruncatedSeries([z] * (series.order + 1), series.order)
    for c in reversed(list(poly_coeffs)):
        acc = acc * series
        if acc.order > series.order:
            acc = acc.truncate(series.order)
        acc = acc + TruncatedSeries([z + c] + [z] * series.order, series.order)
    return acc


# ---------------------------------------------------------------------------
# Hensel lifting


def hensel_lift_root(f_coeffs: list, p: int, root_mod_p: int, prec: int = DEFAULT_PRECISION) -> PadicNumber:
    """Lift a simple root of f mod p to precision p^prec by Newton iteration.

    f_coeffs are exact integers or Fractions (little-endian); the root must
    satisfy f(r) = 0 mod p and f'(r) != 0 mod p.
    """
    coeffs = [Fraction(c) for c in f_coeffs]

    def f(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    dcoeffs = [i * coeffs[i] for i in range(1, len(coeffs))]

    def df(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(dcoeffs):
            acc = acc * x + c
        return acc

    r = Fraction(root_mod_p % p)
    fr = f(r)
    if fr != 0 and rational_valuation(fr, p) < 1:
        raise ValueError("not a root mod p")
    dfr = df(r)
    if dfr == 0 or rational_valuation(dfr, p) > 0:
        raise ValueError("root is not simple mod p")
    known = 1
    while known < prec:
        r = r - f(r) / df(r)
        known = min(2 * known, prec)
        mod = p**known
        r = Fraction(r.numerator * pow(r.denominator, -1, mod) % mod)
    return PadicNumber(p, prec, r)


def _zmod_poly_mul(a: list[int], b: list[int], m: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % m
    return out


def _zmod_poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zmod_poly_add(a: list[int], b: list[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)]
    return _zmod_poly_trim(out)


def _zmod_poly_divmod(a: list[int], b: list[int], m: int) -> tuple[list[int], list[int]]:
    """Division where b has invertible leading coefficient mod m."""
    a = [x % m for x in a]
    b = [x % m for x in b]
    _zmod_poly_trim(b)
    lead_inv = pow(b[-1], -1, m)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        top = a[i + len(b) - 1] % m
        if top == 0:
            continue
        c = top * lead_inv % m
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] = (a[i + j] - c * y) % m
    return q, _zmod_poly_trim(a[: len(b) - 1])


def hensel_lift_coprime_factors(
    f_coeffs: list[int], p: int, gbar: list[int], hbar: list[int], prec: int
) -> tuple[list[int], list[int]]:
    """Lift f = g*h mod p (g, h coprime mod p) to f = g*h mod p^prec.

    All polynomials are little-endian integer lists; gbar must be monic mod
    p and the returned g is monic. Quadratic Hensel iteration.
    """
    from .exact import FieldGF, Poly

    F = FieldGF(p)
    pg = Poly.from_ints(F, gbar).monic()
    ph = Poly.from_ints(F, hbar)
    d, s, t = pg.xgcd(ph)
    if d.degree != 0:
        raise ValueError("factors are not coprime mod p")
    # s*g + t*h = 1 mod p
    s_l = [int(c) for c in s.coeffs]
    t_l = [int(c) for c in t.coeffs]
    g = [int(c) for c in pg.coeffs]
    h = [int(c) for c in ph.coeffs]
    known = 1
    while known < prec:
        known = min(2 * known, prec)
        m = p**known
        f_m = [c % m for c in f_coeffs]
        gh = [-c % m for c in _zmod_poly_mul(g, h, m)]
        e = _zmod_poly_add(f_m, gh, m)
        # g += (e*t mod g); h += e*s + q*h with q = (e*t) div g, so that
        # g*h = f holds at the new level (the cross terms are O(e^2))
        et = _zmod_poly_mul(e, t_l, m)
        q, dg = _zmod_poly_divmod(et, g, m)
        es = _zmod_poly_mul(e, s_l, m)
        qh = _zmod_poly_mul(q, h, m)
        dh = _zmod_poly_add(es, qh, m)
        g = _zmod_poly_add(g, dg, m)
        h = _zmod_poly_add(h, dh, m)
        # refresh the Bezout pair: with b = s*g + t*h - 1 (O(p^k)), the pair
        # (s - b*s, t - b*t) works mod p^(2k); reduce the s side mod h and
        # push the quotient onto the t side against g
        sg = _zmod_poly_mul(s_l, g, m)
        th = _zmod_poly_mul(t_l, h, m)
        b = _zmod_poly_add(sg, th, m)
        if b:
            b[0] = (b[0] - 1) % m
        _zmod_poly_trim(b)
        nb = [-x % m for x in b]
        ds_full = _zmod_poly_mul(s_l, nb, m)
        qs, ds = _zmod_poly_divmod(ds_full, h, m) if h else ([], ds_full)
        dt = _zmod_poly_add(_zmod_poly_mul(t_l, nb, m), _zmod_poly_mul(qs, g, m), m)
        s_l = _zmod_poly_add(s_l, ds, m)
        t_l = _zmod_poly_add(t_l, dt, m)
    m = p**prec
    return [c % m for c in g], [c % m for c in h]


def padic_quadratic_roots(b: PadicNumber, c: PadicNumber):
    """Roots of x^2 + b x + c over Q_p or its quadratic extension.

    Returns ("rational", [r1, r2]) for split discriminant, ("quadratic",
    field, [r, conj r]) when the roots generate a quadratic extension, or
    ("double", [r]) when the discriminant is indistinguishable from zero.
    """
    p = b.p
    disc = b * b - PadicNumber.from_int(4, p, min(b.prec, c.prec)) * c
    two_inv = PadicNumber.from_int(2, p, min(b.prec, c.prec)).inverse()
    if disc.is_zero():
        return ("double", [(-b) * two_inv])
    if disc.is_square():
        w = disc.sqrt()
        r1 = (-b + w) * two_inv
        r2 = (-b - w) * two_inv
        return ("rational", [r1, r2])
    # build the extension with an exact integer representative of disc
    v = disc.valuation()
    unit = disc.rational_approx() / Fraction(p) ** v
    u_mod = int(unit.numerator * pow(unit.denominator, -1, p) % p)
    d_rep = u_mod if v % 2 == 0 else u_mod * p
    if v % 2 == 0 and legendre(d_rep, p) == 1:
        raise ValueError("inconsistent squareness test")
    K = QuadExtField(p, d_rep, min(b.prec, c.prec))
    # w_K^2 = d_rep; need sqrt(disc) = w_K * sqrt(disc/d_rep), the latter a
    # square in Q_p by construction
    ratio = disc / PadicNumber.from_int(d_rep, p, disc.prec)
    scal = ratio.sqrt()
    wdisc = K.gen() * K.embed(scal)
    bK = K.embed(b)
    half = K.embed(two_inv)
    r1 = (-bK + wdisc) * half
    r2 = (-bK - wdisc) * half
    return ("quadratic", K, [r1, r2])
