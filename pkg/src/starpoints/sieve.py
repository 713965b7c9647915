"""Mordell-Weil sieve and Weierstrass-disc parity exclusion.

A candidate coset of J(Q)/M J(Q) that is supposed to contain the class of
a rational point must, at every auxiliary prime l of good reduction, land
on the image of C(F_l) under the Abel-Jacobi map. Candidates are explicit
coordinate vectors over the given generators; local images go through the
invariant-factor structure of J(F_l), so each local test is an integer
tuple lookup. Constraints at several primes combine exactly over the
joint lift group, which stays small enough to enumerate.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .curves import CurvePoint, HyperellipticCurve
from .exact import QQ, Poly, _rational_roots, is_prime, legendre, rational_valuation, valuation
from .jacobians import (
    class_mod_p_of_point_sum,
    group_structure_small,
    jacobian_over_gf,
    reduce_point_to_gf,
)

DEFAULT_STRUCTURE_CAP = 10**6
DEFAULT_CANDIDATE_CAP = 500_000
DEFAULT_JOINT_CAP = 10**5
MPRIME_CANDIDATES = tuple(range(1, 25))


def _terms_to_json(terms):
    return [[P.to_json(), int(c)] for P, c in terms]


def _terms_from_json(data):
    return [(CurvePoint.from_json(P), int(c)) for P, c in data]


class SieveProblem:
    """Inputs of one sieve run.

    generators: free-part generators of a finite-index subgroup of J(Q),
    each a formal sum [(point, coeff)] of total degree zero. torsion:
    [(formal sum, order)] for the torsion generators. targets: dicts,
    either {"coset": [c_1, ..., c_n]} giving exact coordinates over the
    free and torsion generators, or {"disc": key, "prime": p} naming a
    residue disc at an odd good prime p that no known rational point hits.
    chabauty_primes are the primes whose disc information is folded into
    the run; auxiliary primes must avoid them.
    """

    def __init__(
        self,
        curve: HyperellipticCurve,
        generators,
        torsion,
        base_point: CurvePoint,
        modulus: int,
        primes,
        targets,
        chabauty_primes=None,
    ):
        self.curve = curve
        self.generators = [list(g) for g in generators]
        self.torsion = [(list(t), int(order)) for t, order in torsion]
        self.base_point = base_point
        self.modulus = int(modulus)
        self.primes = sorted(int(l) for l in primes)
        self.targets = list(targets)
        if chabauty_primes is None:
            chabauty_primes = sorted({int(t["prime"]) for t in self.targets if "disc" in t})
        self.chabauty_primes = sorted(int(p) for p in chabauty_primes)
        self._validate()

    def _validate(self):
        if self.modulus <= 1:
            raise ValueError("the modulus must exceed 1")
        if len(set(self.primes)) != len(self.primes):
            raise ValueError("auxiliary primes must be distinct")
        for l in self.primes:
            if l == 2 or not is_prime(l):
                raise ValueError(f"auxiliary prime {l} must be an odd prime")
            if not self.curve.has_good_reduction(l):
                raise ValueError(f"auxiliary prime {l} is a prime of bad reduction")
            if l in self.chabauty_primes:
                raise ValueError(f"auxiliary prime {l} already contributes disc information")
        for terms in self.generators:
            if sum(c for _, c in terms) != 0:
                raise ValueError("generator formal sums must have degree zero")
        for terms, order in self.torsion:
            if sum(c for _, c in terms) != 0:
                raise ValueError("torsion formal sums must have degree zero")
            if order <= 1:
                raise ValueError("torsion orders must exceed 1")
        width = len(self.generators) + len(self.torsion)
        for t in self.targets:
            if "coset" in t:
                if len(t["coset"]) != width:
                    raise ValueError("coset coordinates must cover every generator")
            elif "disc" in t:
                p = int(t["prime"])
                if p == 2 or not is_prime(p) or not self.curve.has_good_reduction(p):
                    raise ValueError(f"disc target prime {p} must be an odd prime of good reduction")
            else:
                raise ValueError("each target needs either 'coset' or 'disc'")

    def to_json(self):
        return {
            "curve": [str(c) for c in self.curve.f],
            "generators": [_terms_to_json(g) for g in self.generators],
            "torsion": [[_terms_to_json(t), order] for t, order in self.torsion],
            "base_point": self.base_point.to_json(),
            "modulus": self.modulus,
            "primes": list(self.primes),
            "targets": [
                {"coset": list(t["coset"])} if "coset" in t else {"disc": list(t["disc"]), "prime": int(t["prime"])}
                for t in self.targets
            ],
            "chabauty_primes": list(self.chabauty_primes),
        }

    @classmethod
    def from_json(cls, data) -> "SieveProblem":
        curve = HyperellipticCurve([Fraction(c) for c in data["curve"]])
        return cls(
            curve,
            [_terms_from_json(g) for g in data["generators"]],
            [(_terms_from_json(t), order) for t, order in data["torsion"]],
            CurvePoint.from_json(data["base_point"]),
            data["modulus"],
            data["primes"],
            data["targets"],
            data.get("chabauty_primes"),
        )


class SieveOutcome:
    """Per-target verdicts plus the run's bookkeeping."""

    def __init__(self, modulus, primes, skipped, targets):
        self.modulus = modulus
        self.primes = primes
        self.skipped = skipped
        self.targets = targets
        self.all_eliminated = all(t["verdict"] == "eliminated" for t in targets)
        self.survivors = [t for t in targets if t["verdict"] != "eliminated"]

    def to_json(self):
        return {
            "modulus": self.modulus,
            "primes": list(self.primes),
            "skipped": list(self.skipped),
            "targets": list(self.targets),
            "all_eliminated": self.all_eliminated,
        }


class _Constraint:
    """Reduction data at one prime: coordinates of the generator images,
    the allowed coordinate set, and the lift subgroup of the candidate
    coset's ambiguity."""

    def __init__(self, prime, orders, sigma, scales, allowed, lift_group):
        self.prime = prime
        self.orders = orders
        self.sigma = sigma  # per generator: coordinate tuple
        self.scales = scales  # per generator: lift step (M or gcd(M, order))
        self.allowed = allowed  # set of coordinate tuples
        self.lift = lift_group  # list of coordinate tuples, includes zero
        # allowed set widened by every admissible lift, for O(1) tests
        widened = set()
        for w in allowed:
            for h in lift_group:
                widened.add(tuple((wi - hi) % s for wi, hi, s in zip(w, h, orders)))
        self.test_set = widened

    def image(self, cand):
        if not self.sigma:
            return ()
        return tuple(
            sum(ci * sij for ci, sij in zip(cand, col)) % s
            for col, s in zip(zip(*self.sigma), self.orders)
        )

    def admits(self, cand) -> bool:
        return self.image(cand) in self.test_set


def _tuple_add(a, b, orders):
    return tuple((x + y) % s for x, y, s in zip(a, b, orders))


def _span(vectors, orders, cap):
    """All sums of the given coordinate vectors modulo the orders."""
    zero = tuple(0 for _ in orders)
    seen = {zero}
    frontier = [zero]
    while frontier:
        cur = frontier.pop()
        for v in vectors:
            nxt = _tuple_add(cur, v, orders)
            if nxt not in seen:
                if len(seen) >= cap:
                    raise ArithmeticError("lift group exceeds the enumeration cap")
                seen.add(nxt)
                frontier.append(nxt)
    return sorted(seen)


def _generator_scales(problem: SieveProblem):
    M = problem.modulus
    return [M] * len(problem.generators) + [math.gcd(M, order) for _, order in problem.torsion]


def _constraint_at(
    problem: SieveProblem,
    prime: int,
    structure_cap: int,
    joint_cap: int,
    disc_key=None,
    prep_cache=None,
) -> _Constraint:
    """Reduction constraint at one odd good prime.

    With disc_key the allowed set is the single class of the disc's
    center; otherwise it is the whole Abel-Jacobi image of C(F_p). The
    cache shares the group structure and generator images between several
    constraints at one prime.
    """
    curve = problem.curve
    if prep_cache is not None and prime in prep_cache:
        st, sigma, base, scales, lift = prep_cache[prime]
    else:
        st = group_structure_small(curve, prime, cap=structure_cap)
        orders = tuple(st.orders)
        sigma = []
        for terms in problem.generators:
            sigma.append(st.decompose(class_mod_p_of_point_sum(curve, prime, terms)))
        for terms, _ in problem.torsion:
            sigma.append(st.decompose(class_mod_p_of_point_sum(curve, prime, terms)))
        base = st.jac.embed_point(reduce_point_to_gf(curve, st.jac, problem.base_point, prime))
        scales = _generator_scales(problem)
        lift_vecs = [
            tuple(scale * x % s for x, s in zip(row, orders)) for scale, row in zip(scales, sigma)
        ]
        lift = _span(lift_vecs, orders, joint_cap)
        if prep_cache is not None:
            prep_cache[prime] = (st, sigma, base, scales, lift)
    orders = tuple(st.orders)
    jac = st.jac
    if disc_key is None:
        from .jacobians import _iter_curve_classes

        allowed = {st.decompose(img - base) for img in _iter_curve_classes(jac)}
    else:
        allowed = {st.decompose(jac.embed_point(_disc_point(disc_key)) - base)}
    return _Constraint(prime, orders, sigma, scales, allowed, lift)


def _disc_point(disc_key):
    key = tuple(disc_key)
    if key[0] == "inf":
        return CurvePoint(branch=key[1])
    return (int(key[1]), int(key[2]))


def _joint_admits(cand, constraints, joint_cap: int) -> bool:
    """Exact test whether one lift satisfies every constraint at once.

    The joint lift group is the span of the concatenated per-prime lift
    vectors of each generator; a candidate passes when some joint lift
    lands every component in its allowed set.
    """
    n = len(constraints[0].sigma)
    scales = constraints[0].scales
    orders = tuple(itertools.chain.from_iterable(c.orders for c in constraints))
    vectors = []
    for i in range(n):
        vec = []
        for c in constraints:
            vec.extend(scales[i] * x % s for x, s in zip(c.sigma[i], c.orders))
        vectors.append(tuple(vec))
    joint = _span(vectors, orders, joint_cap)
    images = [c.image(cand) for c in constraints]
    widths = [len(c.orders) for c in constraints]
    for h in joint:
        pos = 0
        ok = True
        for c, img, wdt in zip(constraints, images, widths):
            part = h[pos : pos + wdt]
            pos += wdt
            shifted = tuple((x + y) % s for x, y, s in zip(img, part, c.orders))
            if shifted not in c.allowed:
                ok = False
                break
        if ok:
            return True
    return False


def mw_sieve(
    problem: SieveProblem,
    structure_cap: int = DEFAULT_STRUCTURE_CAP,
    candidate_cap: int = DEFAULT_CANDIDATE_CAP,
    joint_cap: int = DEFAULT_JOINT_CAP,
) -> SieveOutcome:
    """Try to eliminate every target coset by reduction at the given primes.

    Per target: enumerate its candidate coordinate vectors (exact
    coordinates for coset targets; the box of all vectors compatible with
    the disc's reduction class for disc targets), then intersect with the
    admissible set at each auxiliary prime, then try exact two- and
    three-prime combinations on whatever survives. A target with no
    remaining candidate is eliminated. Primes whose structure exceeds the
    cap are skipped and recorded, never fatal.
    """
    M = problem.modulus
    skipped = []
    constraints = []
    prep_cache = {}
    for l in problem.primes:
        try:
            c = _constraint_at(problem, l, structure_cap, joint_cap, prep_cache=prep_cache)
        except (ValueError, ArithmeticError) as exc:
            skipped.append({"prime": l, "reason": str(exc)})
            continue
        if len(c.test_set) >= _group_size(c.orders):
            skipped.append({"prime": l, "reason": "no information at this modulus"})
            continue
        constraints.append(c)

    disc_cache = {}
    n_free = len(problem.generators)
    tors_orders = [order for _, order in problem.torsion]
    box_sizes = [M] * n_free + [math.gcd(M, t) for t in tors_orders]
    box_total = 1
    for b in box_sizes:
        box_total *= b

    results = []
    for target in problem.targets:
        label = {"coset": list(target["coset"])} if "coset" in target else {
            "disc": list(target["disc"]),
            "prime": int(target["prime"]),
        }
        if "coset" in target:
            cands = [tuple(int(x) % b for x, b in zip(target["coset"], box_sizes))]
            local = list(constraints)
        else:
            if box_total > candidate_cap:
                results.append(
                    {
                        "target": label,
                        "verdict": "survives",
                        "primes_used": [],
                        "note": f"candidate box of size {box_total} exceeds the cap {candidate_cap}",
                    }
                )
                continue
            p = int(target["prime"])
            key = (p, tuple(target["disc"]))
            if key not in disc_cache:
                try:
                    disc_cache[key] = _constraint_at(
                        problem, p, structure_cap, joint_cap, disc_key=target["disc"], prep_cache=prep_cache
                    )
                except (ValueError, ArithmeticError) as exc:
                    disc_cache[key] = str(exc)
            dc = disc_cache[key]
            if isinstance(dc, str):
                results.append(
                    {
                        "target": label,
                        "verdict": "survives",
                        "primes_used": [],
                        "note": f"disc constraint unavailable: {dc}",
                    }
                )
                continue
            cands = [
                cand
                for cand in itertools.product(*[range(b) for b in box_sizes])
                if dc.admits(cand)
            ]
            local = [dc] + list(constraints)
        used = []
        for c in constraints:
            before = len(cands)
            cands = [cand for cand in cands if c.admits(cand)]
            if len(cands) < before:
                used.append(c.prime)
            if not cands:
                break
        if cands:
            for size in (2, 3):
                combos = itertools.combinations(local, size)
                for combo in combos:
                    before = len(cands)
                    try:
                        cands = [cand for cand in cands if _joint_admits(cand, combo, joint_cap)]
                    except ArithmeticError:
                        continue
                    if len(cands) < before:
                        used.append([c.prime for c in combo])
                    if not cands:
                        break
                if not cands:
                    break
        entry = {"target": label, "verdict": "eliminated" if not cands else "survives", "primes_used": used}
        if cands:
            entry["survivor_count"] = len(cands)
            entry["survivor_sample"] = [list(c) for c in cands[:10]]
        results.append(entry)
    return SieveOutcome(M, [c.prime for c in constraints], skipped, results)


def _group_size(orders):
    total = 1
    for s in orders:
        total *= s
    return total


def select_sieve_parameters(curve: HyperellipticCurve, generators, M_seed: int, prime_cap: int):
    """Pick auxiliary primes and a modulus extension for a sieve run.

    Scores every odd good prime l <= prime_cap by the information its
    reduction can carry against the modulus: the part of #J(F_l) sharing
    prime factors with M bounds the local quotient, and the Abel-Jacobi
    image covers about l+1 classes of it, so the score is the log excess.
    The modulus multiplier M' ranges over small integers; each extra
    factor enlarges the candidate box, so the best M' maximizes total
    information minus the box growth. Deterministic; may return no primes
    when nothing helps.
    """
    if M_seed < 2:
        raise ValueError("the modulus seed must be at least 2")
    rank = max(1, len(generators))
    g = curve.genus
    even = curve.degree % 2 == 0
    primes = []
    l = 3
    while l <= prime_cap:
        if is_prime(l) and curve.has_good_reduction(l):
            ok = True
            if even:
                lc = curve.leading
                lcbar = lc.numerator * pow(lc.denominator, -1, l) % l
                ok = legendre(lcbar, l) == 1
            if ok:
                primes.append(l)
        l += 2
    from .exact import factorize

    orders = {l: curve.jacobian_order_mod_p(l) for l in primes}
    best = None
    for mp in MPRIME_CANDIDATES:
        M = M_seed * mp
        fac = factorize(M)
        scored = []
        for l in primes:
            n_l = orders[l]
            if n_l > DEFAULT_STRUCTURE_CAP:
                continue
            q_bits = 0.0
            for q, e in fac.items():
                q_bits += min(valuation(n_l, q), e * 2 * g) * math.log2(q)
            cover = math.log2(min(l + 1 + 2 * g, 2.0**q_bits if q_bits < 64 else l + 1 + 2 * g))
            info = q_bits - cover
            if info > 0:
                scored.append((info, l))
        scored.sort(key=lambda t: (-t[0], t[1]))
        chosen = scored[:8]
        total = sum(i for i, _ in chosen) - rank * math.log2(mp)
        if best is None or total > best[0] + 1e-9:
            best = (total, mp, [l for _, l in chosen])
    _, mp, S = best
    if not S:
        return [], M_seed
    return sorted(S), M_seed * mp


def exclude_weierstrass_disc(curve: HyperellipticCurve, p: int, disc_key, report) -> dict:
    """Rule out rational points in a Weierstrass residue disc by parity.

    The hyperelliptic involution fixes the disc and fixes only its
    Weierstrass center, so when that center is not rational the rational
    points of the disc come in pairs; a certified bound of at most 1 then
    forces zero. Needs the disc's bound from a prior report and an exact
    check that f has no rational root reducing to the center.
    """
    if p == 2 or not is_prime(p) or not curve.has_good_reduction(p):
        raise ValueError("need an odd prime of good reduction")
    if report.get("prime") != p:
        raise ValueError("the report belongs to a different prime")
    key = tuple(disc_key)
    if key[0] == "inf":
        if key[1] == "ram":
            raise ValueError("the ramified point at infinity is rational; the disc is not excludable")
        raise ValueError("not a Weierstrass disc")
    _, xbar, ybar = key
    xbar, ybar = int(xbar), int(ybar)
    fbar = [c.numerator * pow(c.denominator, -1, p) % p for c in curve.f]
    value = sum(c * pow(xbar, i, p) for i, c in enumerate(fbar)) % p
    if ybar % p != 0 or value != 0:
        raise ValueError("not a Weierstrass disc")
    entry = next((d for d in report.get("discs", []) if tuple(d["disc"]) == key), None)
    if entry is None:
        raise ValueError("the report does not cover this disc")
    if entry["bound"] > 1:
        raise ValueError("inapplicable: the disc bound exceeds 1")
    for root in _rational_roots(Poly(QQ, list(curve.f))):
        if root == 0 or rational_valuation(root, p) >= 0:
            rbar = root.numerator * pow(root.denominator, -1, p) % p
            if rbar == xbar:
                raise ValueError(
                    "the Weierstrass point in this disc is rational; it is itself a rational point"
                )
    return {
        "verdict": "zero rational points in disc",
        "prime": p,
        "disc": list(key),
        "bound": int(entry["bound"]),
        "reason": "the involution pairs the disc's rational points and the only fixed point is irrational",
    }
