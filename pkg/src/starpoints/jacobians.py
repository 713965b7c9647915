"""Jacobian arithmetic in Mumford representation, for odd and even models.

Odd degree (one point at infinity): classical Cantor pairs (u, v) with
u monic, deg v < deg u <= g, v^2 = f mod u.

Even degree 2g+2 with square leading coefficient s^2: balanced triples
(u, v, n) encoding the class of

    D(u, v) + n oo+ + (g - deg u - n) oo-  -  B,
    B = ceil(g/2) oo+ + floor(g/2) oo-,

reduced when deg u <= g and 0 <= n <= g - deg u; every class has exactly
one reduced triple, so equality is componentwise. oo+ is the branch where
y / x^(g+1) tends to +s.

Composition is classical Cantor on (u, v) with the infinity tag following
n1 + n2 + deg(d0) - ceil(g/2); reduction steps use div(y - v'') downsteps,
with v'' built from the degree-(g+1) square-root approximations V+- of f
to push n back into range.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import CurvePoint, HyperellipticCurve
from .exact import FieldGF, FieldQQ, Poly, QQ, crt_pair, is_rational_square, rational_sqrt, sqrt_mod_p


class MumfordClass:
    """A reduced divisor class on the Jacobian; construct via JacobianArithmetic."""

    __slots__ = ("jac", "u", "v", "n")

    def __init__(self, jac: "JacobianArithmetic", u: Poly, v: Poly, n: int | None):
        self.jac = jac
        self.u = u
        self.v = v
        self.n = n

    def __add__(self, other: "MumfordClass") -> "MumfordClass":
        return self.jac.add(self, other)

    def __neg__(self) -> "MumfordClass":
        return self.jac.neg(self)

    def __sub__(self, other: "MumfordClass") -> "MumfordClass":
        return self.jac.add(self, self.jac.neg(other))

    def __rmul__(self, k: int) -> "MumfordClass":
        return self.jac.scalar_mul(k, self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MumfordClass):
            return NotImplemented
        return self.u == other.u and self.v == other.v and self.n == other.n

    def is_identity(self) -> bool:
        return self.u.degree == 0 and self.v.is_zero() and (
            self.n is None or self.n == self.jac.base_plus
        )

    def key(self):
        """Hashable canonical form; exact coefficient fields only."""
        F = self.jac.F
        return (
            tuple(str(F.canonical(c)) for c in self.u.coeffs),
            tuple(str(F.canonical(c)) for c in self.v.coeffs),
            self.n,
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        tag = "" if self.n is None else f", n={self.n}"
        return f"[u={self.u!r}, v={self.v!r}{tag}]"


class JacobianArithmetic:
    """Cantor arithmetic over a pluggable coefficient field.

    For even-degree models the leading coefficient must be a square in the
    field; pass sqrt_lc to pin the branch naming (it defaults to the
    field's canonical square root, or to the positive rational root over
    the rationals).
    """

    def __init__(self, field, f_coeffs, sqrt_lc=None):
        self.F = field
        self.f = Poly(field, list(f_coeffs))
        self.degree = self.f.degree
        if self.degree < 3:
            raise ValueError("degree must be at least 3")
        self.g = (self.degree + 1) // 2 - 1
        self.even = self.degree % 2 == 0
        if self.even:
            self.s = self._sqrt_leading(sqrt_lc)
            self.base_plus = (self.g + 1) // 2  # ceil(g/2) copies of oo+
            self.v_plus = self._sqrt_approximation()
            self.v_minus = -self.v_plus
        else:
            self.s = None
            self.base_plus = None
            self.v_plus = None
            self.v_minus = None

    # -- setup helpers

    def _sqrt_leading(self, sqrt_lc):
        F = self.F
        lc = self.f.leading()
        if sqrt_lc is not None:
            if not F.eq(F.mul(sqrt_lc, sqrt_lc), lc):
                raise ValueError("sqrt_lc^2 does not match the leading coefficient")
            return sqrt_lc
        if isinstance(F, FieldQQ):
            if not is_rational_square(lc):
                raise ValueError("leading coefficient is not a rational square")
            return rational_sqrt(lc)
        if isinstance(F, FieldGF):
            return F.sqrt(lc)
        if hasattr(lc, "sqrt"):
            return lc.sqrt()
        raise ValueError("cannot take a square root in this field")

    def _sqrt_approximation(self) -> Poly:
        """V with deg V = g+1, leading coefficient s, deg(f - V^2) <= g."""
        F = self.F
        g = self.g
        coeffs = [F.zero] * (g + 2)
        coeffs[g + 1] = self.s
        V = Poly(F, coeffs)
        two_s_inv = F.inv(F.add(self.s, self.s))
        for k in range(1, g + 2):
            R = self.f - V * V
            target = 2 * g + 2 - k
            c = R.coeff(target)
            if F.is_zero(c):
                continue
            mono = [F.zero] * (g + 1 - k) + [F.mul(c, two_s_inv)]
            V = V + Poly(F, mono)
        if (self.f - V * V).degree > g:
            raise ArithmeticError("square-root approximation failed")
        return V

    # -- constructors

    def identity(self) -> MumfordClass:
        return MumfordClass(self, Poly.one(self.F), Poly.zero(self.F), self.base_plus)

    def from_uv(self, u: Poly, v: Poly, n: int | None = None) -> MumfordClass:
        """Validated reduced class from given data."""
        self._check_semi_reduced(u, v)
        if self.even:
            if n is None:
                raise ValueError("even-degree models need the infinity tag n")
            if not 0 <= n <= self.g - u.degree:
                raise ValueError("infinity tag out of reduced range")
        else:
            n = None
        if u.degree > self.g:
            raise ValueError("u degree exceeds the genus")
        return MumfordClass(self, u, v, n)

    def _check_semi_reduced(self, u: Poly, v: Poly):
        if u.is_zero() or not self.F.eq(u.leading(), self.F.one):
            raise ValueError("u must be monic")
        if u.degree == 0:
            if not v.is_zero():
                raise ValueError("v must vanish when u is constant")
            return
        if not v.is_zero() and v.degree >= u.degree:
            raise ValueError("v must have degree below deg u")
        if not ((v * v - self.f) % u).is_zero():
            raise ValueError("v^2 = f (mod u) fails")

    def embed_point(self, P) -> MumfordClass:
        """[P - oo_ref] with oo_ref = oo+ (even) or the ramified point (odd).

        P is a CurvePoint or an (x, y) pair of field elements.
        """
        F = self.F
        if isinstance(P, CurvePoint):
            if P.branch == "ram":
                return self.identity()
            if P.branch == "+":
                return self.identity()
            if P.branch == "-":
                return MumfordClass(self, Poly.one(F), Poly.zero(F), self.base_plus - 1)
            x = self._coerce(P.x)
            y = self._coerce(P.y)
        else:
            x, y = P
            x = self._coerce(x)
            y = self._coerce(y)
        if not F.eq(F.mul(y, y), self.f.evaluate(x)):
            raise ValueError("point does not satisfy y^2 = f(x)")
        u = Poly(F, [F.neg(x), F.one])
        v = Poly(F, [y])
        n = self.base_plus - 1 if self.even else None
        return MumfordClass(self, u, v, n)

    def _coerce(self, c):
        F = self.F
        if isinstance(c, Fraction):
            if isinstance(F, FieldQQ):
                return c
            if isinstance(F, FieldGF):
                return c.numerator * pow(c.denominator, -1, F.p) % F.p
            if hasattr(F, "from_rational"):
                return F.from_rational(c)
        if isinstance(c, int):
            return F.from_int(c)
        return F.canonical(c)

    def class_of_point_sum(self, terms) -> MumfordClass:
        """Class of sum c_i [P_i] for terms [(P_i, c_i)] with sum c_i = 0."""
        if sum(c for _, c in terms) != 0:
            raise ValueError("divisor degree must be zero")
        acc = self.identity()
        for P, c in terms:
            acc = self.add(acc, self.scalar_mul(c, self.embed_point(P)))
        return acc

    # -- group law

    def neg(self, a: MumfordClass) -> MumfordClass:
        v2 = (-a.v) % a.u if a.u.degree > 0 else Poly.zero(self.F)
        if not self.even:
            return MumfordClass(self, a.u, v2, None)
        n2 = 2 * self.base_plus - a.u.degree - a.n
        return self._reduce(a.u, v2, n2)

    def add(self, a: MumfordClass, b: MumfordClass) -> MumfordClass:
        u3, v3, delta = self._compose(a, b)
        if self.even:
            n3 = a.n + b.n + delta - self.base_plus
        else:
            n3 = None
        return self._reduce(u3, v3, n3)

    def scalar_mul(self, k: int, a: MumfordClass) -> MumfordClass:
        if k < 0:
            return self.scalar_mul(-k, self.neg(a))
        out = self.identity()
        base = a
        while k:
            if k & 1:
                out = self.add(out, base)
            k >>= 1
            if k:
                base = self.add(base, base)
        return out

    def _compose(self, a: MumfordClass, b: MumfordClass):
        """Cantor composition; returns semi-reduced (u3, v3) and deg d0."""
        u1, v1, u2, v2 = a.u, a.v, b.u, b.v
        g1, s1, t1 = u1.xgcd(u2)
        vsum = v1 + v2
        d0, s2, t2 = g1.xgcd(vsum)
        e1 = s2 * s1
        e2 = s2 * t1
        e3 = t2
        u3 = (u1 * u2).exact_div(d0 * d0)
        num = e1 * u1 * v2 + e2 * u2 * v1 + e3 * (v1 * v2 + self.f)
        v3 = num.exact_div(d0) % u3 if u3.degree > 0 else Poly.zero(self.F)
        return u3, v3, d0.degree

    def _reduce(self, u: Poly, v: Poly, n: int | None) -> MumfordClass:
        g = self.g
        guard = 0
        while True:
            guard += 1
            if guard > 6 * g + 40 + (abs(n) if n is not None else 0):
                raise ArithmeticError("reduction failed to terminate")
            d = u.degree
            if not self.even:
                if d <= g:
                    return MumfordClass(self, u, v, None)
                u, v, n = self._downstep(u, v, None, v)
                continue
            if d <= g and 0 <= n <= g - d:
                return MumfordClass(self, u, v, n)
            if d > g + 1:
                u, v, n = self._downstep(u, v, n, v)
            elif n is not None and n < 0:
                u, v, n = self._vstep(u, v, n, self.v_minus)
            else:
                u, v, n = self._vstep(u, v, n, self.v_plus)

    def _vstep(self, u: Poly, v: Poly, n: int, V: Poly):
        vpp = V - ((V - v) % u) if u.degree > 0 else V
        return self._downstep(u, v, n, vpp)

    def _downstep(self, u: Poly, v: Poly, n: int | None, vpp: Poly):
        """One div(y - v'') step; vpp must be congruent to v mod u."""
        F = self.F
        num = self.f - vpp * vpp
        u2_raw = num.exact_div(u)
        lead = u2_raw.leading() if not u2_raw.is_zero() else F.one
        u2 = u2_raw.scale(F.inv(lead)) if not u2_raw.is_zero() else Poly.one(F)
        v2 = (-vpp) % u2 if u2.degree > 0 else Poly.zero(F)
        if n is None:
            return u2, v2, None
        g = self.g
        dv = vpp.degree if not vpp.is_zero() else -1
        if dv <= g:
            a_plus = g + 1
        elif dv == g + 1:
            lcv = vpp.leading()
            if F.eq(lcv, self.s):
                a_plus = u.degree + u2.degree - (g + 1)
            else:
                a_plus = g + 1
        else:
            a_plus = dv
        return u2, v2, n + a_plus - u2.degree

    # -- element orders and enumeration

    def element_order(self, a: MumfordClass, group_order: int) -> int:
        from .exact import factorize

        if not (group_order * a).is_identity():
            raise ValueError("group order does not annihilate the element")
        order = group_order
        for q, e in factorize(group_order).items():
            while order % q == 0 and (order // q * a).is_identity():
                order //= q
        return order

    def enumerate_points(self) -> list[MumfordClass]:
        """All reduced classes, by scanning (u, v, n); finite fields only.

        Intended as a ground-truth oracle for small primes: the count must
        equal L(1) of the curve.
        """
        F = self.F
        if not isinstance(F, FieldGF):
            raise ValueError("enumeration needs a finite coefficient field")
        p = F.p
        g = self.g
        out = []
        import itertools

        for du in range(0, g + 1):
            for tail in itertools.product(range(p), repeat=du):
                u = Poly.from_ints(F, list(tail) + [1])
                if u.degree != du:
                    continue
                for vt in itertools.product(range(p), repeat=du):
                    v = Poly.from_ints(F, list(vt))
                    if not ((v * v - self.f) % u).is_zero():
                        continue
                    if self.even:
                        for n in range(0, g - du + 1):
                            out.append(MumfordClass(self, u, v, n))
                    else:
                        out.append(MumfordClass(self, u, v, None))
        return out


def enumerate_subgroup(jac: JacobianArithmetic, gens, cap: int = 200000):
    """Closure of the subgroup generated by gens, with exponent vectors.

    Returns {key: (element, vector)} where vector gives one expression of
    the element as an integer combination of the generators. Raises if the
    closure exceeds cap elements.
    """
    ident = jac.identity()
    zero = (0,) * len(gens)
    table = {ident.key(): (ident, zero)}
    frontier = [(ident, zero)]
    while frontier:
        elem, vec = frontier.pop()
        for i, gsub in enumerate(gens):
            nxt = elem + gsub
            k = nxt.key()
            if k in table:
                continue
            nvec = tuple(v + (1 if j == i else 0) for j, v in enumerate(vec))
            table[k] = (nxt, nvec)
            frontier.append((nxt, nvec))
            if len(table) > cap:
                raise ArithmeticError("subgroup exceeds enumeration cap")
    return table


def _iter_curve_classes(jac: JacobianArithmetic):
    """Images [Q - oo_ref] of the rational points of y^2 = f over GF(p)."""
    from .exact import legendre

    F = jac.F
    p = F.p
    for x in range(p):
        t = jac.f.evaluate(x)
        if t == 0:
            yield jac.embed_point((x, 0))
        elif legendre(t, p) == 1:
            y = sqrt_mod_p(t, p)
            yield jac.embed_point((x, y))
            yield jac.embed_point((x, p - y))
    if jac.even:
        yield jac.embed_point(CurvePoint(branch="-"))


def _iter_all_classes(jac: JacobianArithmetic):
    """Lazy scan of every reduced class over a finite field."""
    import itertools

    F = jac.F
    p = F.p
    g = jac.g
    for du in range(0, g + 1):
        for tail in itertools.product(range(p), repeat=du):
            u = Poly.from_ints(F, list(tail) + [1])
            for vt in itertools.product(range(p), repeat=du):
                v = Poly.from_ints(F, list(vt))
                if not ((v * v - jac.f) % u).is_zero():
                    continue
                if jac.even:
                    for n in range(0, g - du + 1):
                        yield MumfordClass(jac, u, v, n)
                else:
                    yield MumfordClass(jac, u, v, None)


class JacobianStructure:
    """Invariant-factor presentation of J(F_p) with full decomposition.

    orders is the chain s_1 | s_2 | ... (every factor > 1) and generators[j]
    is a reduced class of exact order orders[j]; the group is the internal
    direct sum of the cyclic pieces. Decomposition works per Sylow
    component: each component is enumerated into a lookup table, and the
    coordinates of an arbitrary element are assembled by CRT from its
    projections, so no table of the full group order is ever built.
    """

    def __init__(self, jac, order, orders, generators, sylows):
        self.jac = jac
        self.order = order
        self.orders = orders
        self.generators = generators
        self._sylows = sylows  # (cofactor, table, component orders, global slots)

    def contains(self, a: MumfordClass) -> bool:
        try:
            self.decompose(a)
            return True
        except ValueError:
            return False

    def decompose(self, a: MumfordClass) -> tuple[int, ...]:
        """Coordinates (c_1, ..., c_k) with a = sum c_j * generators[j]."""
        width = len(self.orders)
        res = [0] * width
        mod = [1] * width
        for cof, table, torders, slots in self._sylows:
            proj = cof * a
            try:
                coords = table[proj.key()]
            except KeyError:
                raise ValueError("element is not in the enumerated group") from None
            for c, t, j in zip(coords, torders, slots):
                r = c * pow(cof, -1, t) % t
                res[j], mod[j] = crt_pair(res[j], mod[j], r, t)
        assert mod == list(self.orders)
        return tuple(res)


def _sylow_structure(jac: JacobianArithmetic, n: int, q: int, e: int):
    """Cyclic decomposition of the q-Sylow subgroup of a group of order n.

    Adjoins projections (n / q^e) * candidate until the subgroup is full,
    recording the relation d_i * g_i = sum of earlier generators that the
    closure discovers; Smith normal form turns the triangular relation
    lattice into cyclic factors. Returns [(generator, order)] with orders
    an ascending divisibility chain of q-powers.
    """
    import itertools

    from .exact import smith_normal_form, unimodular_inverse

    target = q**e
    cof = n // target
    ident = jac.identity()
    table = {ident.key(): ()}
    members = [(ident, ())]  # retained only while the subgroup is incomplete
    gens: list[MumfordClass] = []
    rels: list[tuple[tuple[int, ...], int]] = []
    for cand in itertools.chain(_iter_curve_classes(jac), _iter_all_classes(jac)):
        if len(table) == target:
            break
        g = cof * cand
        if g.key() in table:
            continue
        d = 1
        acc = g
        while acc.key() not in table:
            acc = acc + g
            d += 1
        w = table[acc.key()]
        k = len(gens)
        gens.append(g)
        rels.append((w, d))
        complete = len(table) * d == target
        shift = ident
        snapshot = members
        grown = list(members) if not complete else None
        for m in range(1, d):
            shift = shift + g
            for e0, v0 in snapshot:
                e1 = e0 + shift
                v1 = tuple(v0) + (0,) * (k - len(v0)) + (m,)
                table[e1.key()] = v1
                if not complete:
                    grown.append((e1, v1))
        if complete:
            members = []
            break
        members = grown
    assert len(table) == target, "candidate sources failed to generate the subgroup"

    K = len(gens)
    rows = []
    for i, (w, d) in enumerate(rels):
        row = [-(w[j] if j < len(w) else 0) for j in range(K)]
        row[i] += d
        rows.append(row)
    D, _, V = smith_normal_form(rows)
    # with relations U*R*V = D, the group in the new coordinates y = V^-1 x
    # is the direct sum of Z/D[j][j]; generator j is row j of V^-1 applied
    # to the old generators
    W = unimodular_inverse(V)
    out = []
    for j in range(K):
        s = D[j][j]
        h = ident
        for i in range(K):
            m = W[j][i] % target
            if m:
                h = h + m * gens[i]
        if s == 1:
            assert h.is_identity()
            continue
        assert jac.element_order(h, n) == s
        out.append((h, s))
    total = 1
    for _, s in out:
        total *= s
    assert total == target
    return out


def group_structure_small(curve: HyperellipticCurve, p: int, cap: int = 10**6) -> JacobianStructure:
    """Invariant factors, generators, and a decomposition table for J(F_p).

    Works Sylow subgroup by Sylow subgroup, then merges the coprime cyclic
    chains into the invariant-factor chain d_1 | d_2 | ... with product
    #J(F_p). The full group is enumerated once into the decomposition
    table, so the group order must stay below the cap; for larger primes
    the caller should pick another prime.
    """
    from .exact import factorize

    jac = jacobian_over_gf(curve, p)
    n = curve.jacobian_order_mod_p(p)
    if n > cap:
        raise ValueError(f"group order {n} at p={p} exceeds the cap {cap}; choose another prime")
    ident = jac.identity()
    if n == 1:
        return JacobianStructure(jac, 1, [], [], [])

    chains = [_sylow_structure(jac, n, q, e) for q, e in sorted(factorize(n).items())]
    width = max(len(c) for c in chains)
    orders = []
    generators = []
    for j in range(width):
        s = 1
        h = ident
        for chain in chains:
            i = j - (width - len(chain))  # align the largest factors
            if i >= 0:
                h = h + chain[i][0]
                s *= chain[i][1]
        assert s > 1
        orders.append(s)
        generators.append(h)
    for a, b in zip(orders, orders[1:]):
        assert b % a == 0
    total = 1
    for s in orders:
        total *= s
    assert total == n

    sylows = []
    for (q, e), chain in zip(sorted(factorize(n).items()), chains):
        torders = [t for _, t in chain]
        slots = list(range(width - len(chain), width))
        table = {}
        coords = [0] * len(chain)
        cur = ident
        size = q**e
        for step in range(size):
            table[cur.key()] = tuple(coords)
            if step == size - 1:
                break
            j = 0
            while True:
                coords[j] += 1
                cur = cur + chain[j][0]
                if coords[j] < torders[j]:
                    break
                coords[j] = 0
                j += 1
        assert len(table) == size
        sylows.append((n // size, table, torders, slots))

    st = JacobianStructure(jac, n, orders, generators, sylows)
    for j, h in enumerate(generators):
        expect = tuple(int(i == j) for i in range(width))
        assert st.decompose(h) == expect
    assert st.decompose(ident) == (0,) * width
    return st


def jacobian_over_gf(curve: HyperellipticCurve, p: int) -> JacobianArithmetic:
    """The reduced curve's Jacobian arithmetic over GF(p).

    For even degree, the branch naming follows the curve's infinity disc
    convention so that point reduction and embedding commute.
    """
    F = FieldGF(p)
    coeffs = curve.reduced_coeffs(p)
    if curve.degree % 2 == 0:
        s = curve._infinity_branch_plus_wbar(p)
        return JacobianArithmetic(F, coeffs, sqrt_lc=s)
    return JacobianArithmetic(F, coeffs)


def jacobian_over_qq(curve: HyperellipticCurve) -> JacobianArithmetic:
    return JacobianArithmetic(QQ, list(curve.f))


def reduce_point_to_gf(curve: HyperellipticCurve, jac_gf: JacobianArithmetic, P: CurvePoint, p: int):
    """Image of a rational point in C(F_p), as data embed_point accepts."""
    label = curve.reduce_point(P, p)
    if label[0] == "inf":
        return CurvePoint(branch=label[1]) if label[1] != "ram" else CurvePoint(branch="ram")
    _, xbar, ybar = label
    return (xbar, ybar)


def class_mod_p_of_point_sum(curve: HyperellipticCurve, p: int, terms) -> MumfordClass:
    """Reduce a formal sum of rational points (sum of coefficients 0) mod p
    and return its class in J(F_p)."""
    jac = jacobian_over_gf(curve, p)
    reduced_terms = [(reduce_point_to_gf(curve, jac, P, p), c) for P, c in terms]
    return jac.class_of_point_sum(reduced_terms)
