"""Exact arithmetic building blocks: rationals, prime fields, polynomials.

Everything here is exact. Fractions carry rational numbers (always reduced,
positive denominator), prime-field elements are plain ints carried by a
field object, and polynomials are dense coefficient lists over a pluggable
coefficient field. The p-adic types build on these in padics.py.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2

BigRational = Fraction


# ---------------------------------------------------------------------------
# integer utilities


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    return gmpy2.is_square(gmpy2.mpz(n))


def isqrt_exact(n: int) -> int:
    """Integer square root of a perfect square; raises if n is not one."""
    if not is_perfect_square(n):
        raise ValueError(f"{n} is not a perfect square")
    return int(gmpy2.isqrt(gmpy2.mpz(n)))


def is_prime(n: int) -> bool:
    return bool(gmpy2.is_prime(gmpy2.mpz(n))) if n >= 2 else False


def rational_sqrt(q: Fraction) -> Fraction:
    """Exact square root of a rational, or ValueError."""
    if q < 0:
        raise ValueError("negative rational has no rational square root")
    return Fraction(isqrt_exact(q.numerator), isqrt_exact(q.denominator))


def is_rational_square(q: Fraction) -> bool:
    return q >= 0 and is_perfect_square(q.numerator) and is_perfect_square(q.denominator)


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def rational_valuation(q: Fraction, p: int) -> int:
    if q == 0:
        raise ValueError("valuation of 0 is infinite")
    return valuation(q.numerator, p) - valuation(q.denominator, p)


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine r mod m1, r mod m2 for coprime moduli; returns (r, m1*m2)."""
    g, s, _ = gmpy2.gcdext(gmpy2.mpz(m1), gmpy2.mpz(m2))
    if g != 1:
        raise ValueError("moduli not coprime")
    m = m1 * m2
    r = (r1 + (r2 - r1) * int(s) % m2 * m1) % m
    return r, m


def rational_reconstruct(a: int, m: int, bound: int | None = None) -> Fraction | None:
    """Recover n/d = a mod m with |n|, d <= bound, or None.

    Half-extended Euclid; standard lattice-free rational reconstruction.
    """
    if bound is None:
        bound = isqrt_like(m // 2)
    a %= m
    if a == 0:
        return Fraction(0)
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if r1 == 0 or abs(t1) > bound:
        return None
    if gmpy2.gcd(gmpy2.mpz(r1), gmpy2.mpz(t1)) != 1:
        return None
    num, den = (r1, t1) if t1 > 0 else (-r1, -t1)
    if den == 0:
        return None
    if (num - a * den) % m != 0:
        return None
    return Fraction(num, den)


def isqrt_like(n: int) -> int:
    return int(gmpy2.isqrt(gmpy2.mpz(max(n, 0))))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p, in {-1, 0, 1}."""
    return int(gmpy2.legendre(gmpy2.mpz(a), gmpy2.mpz(p)))


def sqrt_mod_p(a: int, p: int) -> int:
    """A square root of a mod p (odd prime); raises if a is a non-residue.

    Returns the smaller of the two roots (canonical branch).
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    elif p % 8 == 5:
        r = pow(a, (p + 3) // 8, p)
        if r * r % p != a:
            r = r * pow(2, (p - 1) // 4, p) % p
    else:
        # Tonelli-Shanks
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while legendre(z, p) != -1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return min(r, p - r)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization via sympy (imported lazily; it is heavy)."""
    from sympy import factorint

    return {int(p): int(e) for p, e in factorint(int(n)).items()}


def strip_primes(n: int, primes: Iterable[int]) -> int:
    """Remove all factors of the given primes from |n|."""
    n = abs(n)
    for p in primes:
        if n == 0:
            break
        while n % p == 0:
            n //= p
    return n


def smith_normal_form(
    rows: Sequence[Sequence[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form of a small integer matrix.

    Returns (D, U, V) with U*A*V = D, where U and V are unimodular and D is
    diagonal with d_1 | d_2 | ... and nonnegative entries. Classical row and
    column reduction; fine for the handful-of-generators matrices that show
    up in finite abelian group computations.
    """
    A = [[int(x) for x in row] for row in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    assert all(len(row) == n for row in A)
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, c):  # row_i -= c * row_j
        A[i] = [a - c * b for a, b in zip(A[i], A[j])]
        U[i] = [a - c * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, c):  # col_i -= c * col_j
        for row in A:
            row[i] -= c * row[j]
        for row in V:
            row[i] -= c * row[j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    for t in range(min(m, n)):
        while True:
            # move a smallest nonzero entry of the trailing block to (t, t)
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot != (t, t):
                if pivot[0] != t:
                    swap_rows(t, pivot[0])
                if pivot[1] != t:
                    swap_cols(t, pivot[1])
            if A[t][t] < 0:
                negate_row(t)
            dirty = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    row_op(i, t, A[i][t] // A[t][t])
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    col_op(j, t, A[t][j] // A[t][t])
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            # pivot must divide every remaining entry for the chain d_t | d_{t+1}
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)
    D = [[A[i][j] if i == j else 0 for j in range(n)] for i in range(m)]
    assert all(A[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    return D, U, V


def unimodular_inverse(M: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exact inverse of an integer matrix with determinant +-1."""
    k = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(M)]
    assert all(len(row) == 2 * k for row in aug)
    for c in range(k):
        pivot = next(r for r in range(c, k) if aug[r][c] != 0)
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(k):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    out = [[x for x in row[k:]] for row in aug]
    assert all(x.denominator == 1 for row in out for x in row), "matrix is not unimodular"
    return [[int(x) for x in row] for row in out]


# ---------------------------------------------------------------------------
# coefficient fields
#
# A "field" here is a small stateless object with the operations polynomials
# and matrices need. Elements of QQ are Fraction, elements of GF(p) are ints
# in [0, p); the p-adic fields wrap their own element classes.


class FieldQQ:
    name = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n: int) -> Fraction:
        return Fraction(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    @staticmethod
    def eq(a, b) -> bool:
        return a == b

    @staticmethod
    def canonical(a):
        return a


QQ = FieldQQ()


class FieldGF:
    """The field with p elements; elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return a * pow(b, -1, self.p) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def eq(self, a, b) -> bool:
        return (a - b) % self.p == 0

    def canonical(self, a):
        return a % self.p

    def sqrt(self, a) -> int:
        return sqrt_mod_p(a, self.p)

    def is_square(self, a) -> bool:
        return a % self.p == 0 or legendre(a, self.p) == 1

    def __eq__(self, other):
        return isinstance(other, FieldGF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


# ---------------------------------------------------------------------------
# dense polynomials over a coefficient field


class Poly:
    """Dense univariate polynomial over a coefficient field object.

    Coefficients are stored little-endian (coeffs[i] is the x^i term) with
    no trailing zeros; the zero polynomial has an empty tuple and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Sequence):
        self.field = field
        trimmed = list(coeffs)
        while trimmed and field.is_zero(trimmed[-1]):
            trimmed.pop()
        self.coeffs = tuple(field.canonical(c) for c in trimmed)

    # -- constructors

    @classmethod
    def from_ints(cls, field, ints: Sequence[int]) -> "Poly":
        return cls(field, [field.from_int(n) for n in ints])

    @classmethod
    def zero(cls, field) -> "Poly":
        return cls(field, [])

    @classmethod
    def one(cls, field) -> "Poly":
        return cls(field, [field.one])

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, [field.zero, field.one])

    @classmethod
    def constant(cls, field, c) -> "Poly":
        return cls(field, [c])

    # -- basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.field.eq(self.coeffs[0], self.field.one)

    def leading(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(self.field.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((len(self.coeffs), tuple(str(c) for c in self.coeffs)))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        parts = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if self.field.is_zero(c):
                continue
            parts.append(f"({c})*x^{i}" if i else f"({c})")
        return "Poly(" + " + ".join(parts) + ")"

    # -- ring operations

    def __add__(self, other: "Poly") -> "Poly":
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.sub(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def scale(self, c) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly(self.field, [self.field.zero] * k + list(self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_inv = F.inv(other.leading())
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(F), self
        quo = [F.zero] * (dq + 1)
        for i in range(dq, -1, -1):
            top = rem[i + other.degree]
            if F.is_zero(top):
                continue
            q = F.mul(top, lead_inv)
            quo[i] = q
            for j, b in enumerate(other.coeffs):
                rem[i + j] = F.sub(rem[i + j], F.mul(q, b))
        return Poly(F, quo), Poly(F, rem[: other.degree])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading()))

    # -- calculus and evaluation

    def derivative(self) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(F.from_int(i), self.coeffs[i]) for i in range(1, len(self.coeffs))])

    def evaluate(self, x0):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x0), c)
        return acc

    def compose_linear(self, a, b) -> "Poly":
        """self(a*x + b)."""
        F = self.field
        lin = Poly(F, [b, a])
        acc = Poly.zero(F)
        for c in reversed(self.coeffs):
            acc = acc * lin + Poly.constant(F, c)
        return acc

    def reverse(self, degree: int | None = None) -> "Poly":
        """x^d * self(1/x) for d = degree (defaults to deg self)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        out = [self.field.zero] * (d + 1)
        for i, c in enumerate(self.coeffs):
            out[d - i] = c
        return Poly(self.field, out)

    # -- gcd machinery

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        """(g, s, t) with s*self + t*other = g, g monic (or zero)."""
        F = self.field
        r0, r1 = self, other
        s0, s1 = Poly.one(F), Poly.zero(F)
        t0, t1 = Poly.zero(F), Poly.one(F)
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        lc_inv = F.inv(r0.leading())
        return r0.scale(lc_inv), s0.scale(lc_inv), t0.scale(lc_inv)

    def squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree <= 0

    def roots(self) -> list:
        """Roots in the coefficient field.

        Over GF(p) this scans the field (fields used here are small); over
        the rationals it uses the rational root theorem on the primitive
        integer form.
        """
        F = self.field
        if self.is_zero():
            raise ValueError("zero polynomial")
        if isinstance(F, FieldGF):
            return [a for a in range(F.p) if F.is_zero(self.evaluate(a))]
        if isinstance(F, FieldQQ):
            return _rational_roots(self)
        raise NotImplementedError(f"roots over {F.name}")


def _rational_roots(poly: Poly) -> list[Fraction]:
    den = 1
    for c in poly.coeffs:
        den = den * c.denominator // int(gmpy2.gcd(gmpy2.mpz(den), gmpy2.mpz(c.denominator)))
    ints = [int(c * den) for c in poly.coeffs]
    while ints and ints[0] == 0:
        ints = ints[1:]
    if not ints:
        return [Fraction(0)]
    roots = set()
    if poly.coeff(0) == 0:
        roots.add(Fraction(0))
    a0, an = abs(ints[0]), abs(ints[-1])
    for num in _divisors_signed(a0):
        for d in _divisors(an):
            cand = Fraction(num, d)
            if poly.evaluate(cand) == 0:
                roots.add(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _divisors_signed(n: int) -> list[int]:
    ds = _divisors(n)
    return [d for pair in ((d, -d) for d in ds) for d in pair]


# ---------------------------------------------------------------------------
# rational functions (quotients of polynomials over a field)


class RationalFunction:
    """Reduced quotient num/den of two Polys over a common coefficient field.

    The denominator is kept monic and coprime to the numerator, so equality
    of rational functions is literal equality of the stored pairs.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        assert num.field is den.field or num.field == den.field
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Poly.one(num.field)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lc_inv = num.field.inv(den.leading())
            num = num.scale(lc_inv)
            den = den.scale(lc_inv)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFunction":
        return cls(p, Poly.one(p.field))

    @classmethod
    def constant(cls, field, c) -> "RationalFunction":
        return cls(Poly.constant(field, c), Poly.one(field))

    @classmethod
    def x(cls, field) -> "RationalFunction":
        return cls(Poly.x(field), Poly.one(field))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def scale(self, c) -> "RationalFunction":
        return RationalFunction(self.num.scale(c), self.den)

    def evaluate(self, x0):
        """Value at x0; raises ZeroDivisionError at a pole."""
        dv = self.den.evaluate(x0)
        if self.num.field.is_zero(dv):
            raise ZeroDivisionError(f"pole at {x0}")
        return self.num.field.mul(self.num.evaluate(x0), self.num.field.inv(dv))

    def compose(self, snum: Poly, sden: Poly) -> "RationalFunction":
        """Substitute x -> snum/sden (sden nonzero)."""
        m = max(self.num.degree, self.den.degree, 0)
        top = _homogeneous_eval(self.num, snum, sden, m)
        bot = _homogeneous_eval(self.den, snum, sden, m)
        return RationalFunction(top, bot)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"


def _homogeneous_eval(p: Poly, snum: Poly, sden: Poly, m: int) -> Poly:
    """sden^m * p(snum/sden) for m >= deg p, as an exact polynomial."""
    F = p.field
    assert m >= p.degree
    if p.is_zero():
        return Poly.zero(F)
    acc = Poly.zero(F)
    spow = Poly.one(F)
    dpows = [Poly.one(F)]
    for _ in range(m):
        dpows.append(dpows[-1] * sden)
    for i in range(p.degree + 1):
        c = p.coeff(i)
        if not F.is_zero(c):
            acc = acc + (spow * dpows[m - i]).scale(c)
        if i < p.degree:
            spow = spow * snum
    return acc


# ---------------------------------------------------------------------------
# integer polynomial helpers (resultants, discriminants)


def int_poly_resultant(a: Sequence[int], b: Sequence[int]) -> int:
    """Resultant of two integer polynomials (little-endian coefficients)."""
    from sympy import Poly as SymPoly, resultant, symbols

    x = symbols("x")
    pa = SymPoly(list(reversed([int(c) for c in a])), x)
    pb = SymPoly(list(reversed([int(c) for c in b])), x)
    return int(resultant(pa, pb))


def int_poly_discriminant(coeffs: Sequence[int]) -> int:
    """Discriminant of an integer polynomial (little-endian coefficients)."""
    from sympy import Poly as SymPoly, symbols

    x = symbols("x")
    p = SymPoly(list(reversed([int(c) for c in coeffs])), x)
    return int(p.discriminant())


def bad_primes_of_model(coeffs: Sequence[int]) -> set[int]:
    """Odd primes dividing disc(f), plus 2: where y^2 = f(x) can degenerate."""
    disc = int_poly_discriminant(coeffs)
    if disc == 0:
        raise ValueError("polynomial is not squarefree")
    return {2} | set(factorize(abs(disc)).keys())


# ---------------------------------------------------------------------------
# factorization of monic polynomials over small prime fields


def gf_factor_monic(poly: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicity, over GF(p).

    Trial division by all monic polynomials of ascending degree; meant for
    the small degrees and primes of local computations. The budget guard
    trips before the search becomes expensive.
    """
    F = poly.field
    if not isinstance(F, FieldGF):
        raise ValueError("factorization needs a finite coefficient field")
    if poly.is_zero():
        raise ValueError("zero polynomial")
    import itertools

    p = F.p
    rem = poly.monic()
    out: list[tuple[Poly, int]] = []
    deg_try = 1
    while rem.degree >= 2 * deg_try:
        if p**deg_try > 10**6:
            raise ValueError("factorization budget exceeded")
        for tail in itertools.product(range(p), repeat=deg_try):
            cand = Poly.from_ints(F, list(tail) + [1])
            mult = 0
            while True:
                q, r = divmod(rem, cand)
                if not r.is_zero():
                    break
                rem = q
                mult += 1
            if mult:
                out.append((cand, mult))
            if rem.degree < 2 * deg_try:
                break
        deg_try += 1
    if rem.degree > 0:
        out.append((rem, 1))
    # factors found by ascending-degree trial division are irreducible
    return out
