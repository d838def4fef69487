"""Division algorithm, S-polynomials, Buchberger's algorithm and criterion.

All reductions are exact over Q. Division is deterministic: the first
divisor (by list position) whose leading monomial divides the current
leading monomial is always used. Internally Buchberger runs on primitive
integer representatives (every basis element may be rescaled freely), with
the exact rational division kept for the public remainder contract.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, NamedTuple, Optional, Sequence

from .rings import Monomial, MonomialOrder, Polynomial, Ring, Term


class BudgetExceeded(RuntimeError):
    """A pair-count or wall-clock budget ran out mid-computation."""


class Budget:
    """Shared resource budget: S-pair count cap plus optional deadline."""

    DEFAULT_MAX_PAIRS = 1_000_000

    __slots__ = ("max_pairs", "timeout_secs", "pairs", "_deadline")

    def __init__(self, max_pairs: Optional[int] = None,
                 timeout_secs: Optional[float] = None):
        self.max_pairs = self.DEFAULT_MAX_PAIRS if max_pairs is None else max_pairs
        self.timeout_secs = timeout_secs
        self.pairs = 0
        self._deadline = (time.monotonic() + timeout_secs
                          if timeout_secs is not None else None)

    def tick(self) -> None:
        self.pairs += 1
        if self.pairs > self.max_pairs:
            raise BudgetExceeded(f"pair budget of {self.max_pairs} exhausted")
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExceeded(f"timeout of {self.timeout_secs}s exhausted")


@dataclass
class GBStats:
    pairs_pushed: int = 0
    pairs_processed: int = 0
    discarded_coprime: int = 0
    discarded_chain: int = 0
    zero_reductions: int = 0
    basis_added: int = 0
    final_size: int = 0
    elapsed_ms: float = 0.0


class DivisionResult(NamedTuple):
    quotients: tuple[Polynomial, ...]
    remainder: Polynomial


class GBCertificate(NamedTuple):
    """Outcome of Buchberger's criterion; witness indices are 1-based."""

    ok: bool
    witness: Optional[tuple[int, int]]
    remainder: Optional[Polynomial]

    def __bool__(self) -> bool:
        return self.ok


# -- exact rational division (public contract) ------------------------------


class _Reducer:
    """Reusable exact division context over a fixed (growing) divisor list."""

    __slots__ = ("order", "divs")

    def __init__(self, divisors: Sequence[Polynomial], order: MonomialOrder):
        self.order = order
        self.divs = []
        for f in divisors:
            self.append(f)

    def append(self, f: Polynomial) -> None:
        if not f:
            raise ValueError("zero divisor")
        lc, lm = f.terms[0]
        self.divs.append((lm, lc, f.terms))

    def reduce(self, p: dict, quotients: Optional[list] = None) -> dict:
        """Full remainder of the dict-form polynomial; mutates its argument."""
        key = self.order.key
        divs = self.divs
        rem: dict[Monomial, Fraction] = {}
        while p:
            m = max(p, key=key)
            c = p.pop(m)
            for idx, (lm, lc, terms) in enumerate(divs):
                if lm.divides(m):
                    u = m.div(lm)
                    q = c / lc
                    if quotients is not None:
                        qd = quotients[idx]
                        qd[u] = qd.get(u, 0) + q
                    for tc, tm in terms[1:]:
                        mm = u.mul(tm)
                        nc = p.get(mm, 0) - q * tc
                        if nc:
                            p[mm] = nc
                        elif mm in p:
                            del p[mm]
                    break
            else:
                rem[m] = c
        return rem


def _as_dict(f: Polynomial) -> dict:
    return {m: c for c, m in f.terms}


def divide(h: Polynomial, divisors: Sequence[Polynomial],
           order: Optional[MonomialOrder] = None) -> DivisionResult:
    """Multivariate division h = remainder + sum(quotients[i] * divisors[i]).

    The remainder contains no monomial divisible by any divisor's leading
    monomial, and in(h) >= in(quotients[i] * divisors[i]) whenever the
    quotient is nonzero.
    """
    ring = h.ring
    order = order or ring.order
    reducer = _Reducer(divisors, order)
    quotients = [dict() for _ in divisors]
    rem = reducer.reduce(_as_dict(h), quotients)
    return DivisionResult(tuple(ring._from_dict(q) for q in quotients),
                          ring._from_dict(rem))


def _spoly_dict(f: Polynomial, g: Polynomial) -> dict:
    """S(f, g) = (in(g)/gcd)*f - (in(f)/gcd)*g in dict form."""
    cf, mf = f.terms[0]
    cg, mg = g.terms[0]
    gcd = mf.gcd(mg)
    uf, ug = mg.div(gcd), mf.div(gcd)
    d: dict[Monomial, Fraction] = {}
    for c, m in f.terms:
        mm = m.mul(uf)
        nc = d.get(mm, 0) + cg * c
        if nc:
            d[mm] = nc
        elif mm in d:
            del d[mm]
    for c, m in g.terms:
        mm = m.mul(ug)
        nc = d.get(mm, 0) - cf * c
        if nc:
            d[mm] = nc
        elif mm in d:
            del d[mm]
    return d


def s_polynomial(f: Polynomial, g: Polynomial,
                 order: Optional[MonomialOrder] = None) -> Polynomial:
    """The cancellation combination of f and g (gcd taken with coefficient 1)."""
    if not f or not g:
        raise ValueError("S-polynomial of zero")
    f._check_ring(g)
    return f.ring._from_dict(_spoly_dict(f, g))


# -- primitive integer layer (Buchberger internals) --------------------------
# A "prim" polynomial is a tuple of (Monomial, int) pairs, descending in the
# active order, integer content 1 and positive leading coefficient. Basis
# elements may be rescaled freely, so all S-pair reductions run here.


def _prim_from_poly(f: Polynomial):
    den = 1
    for c, _ in f.terms:
        d = c.denominator
        den = den * d // _igcd(den, d)
    vals = [c.numerator * (den // c.denominator) for c, _ in f.terms]
    g = 0
    for v in vals:
        g = _igcd(g, v)
    if vals[0] < 0:
        g = -g
    return tuple((m, v // g) for v, (_, m) in zip(vals, f.terms))


def _prim_from_dict(d: dict, key):
    g = 0
    for v in d.values():
        g = _igcd(g, v)
    items = sorted(d.items(), key=lambda mv: key(mv[0]), reverse=True)
    if items[0][1] < 0:
        g = -g
    return tuple((m, v // g) for m, v in items)


def _poly_from_prim(prim, ring: Ring) -> Polynomial:
    return Polynomial(ring, tuple(Term(Fraction(c), m) for m, c in prim))


def _spoly_int(a, b) -> dict:
    ma, ca = a[0]
    mb, cb = b[0]
    g = ma.gcd(mb)
    ua, ub = mb.div(g), ma.div(g)
    d: dict[Monomial, int] = {}
    for m, c in a:
        mm = m.mul(ua)
        nc = d.get(mm, 0) + cb * c
        if nc:
            d[mm] = nc
        elif mm in d:
            del d[mm]
    for m, c in b:
        mm = m.mul(ub)
        nc = d.get(mm, 0) - ca * c
        if nc:
            d[mm] = nc
        elif mm in d:
            del d[mm]
    return d


def _content_reduce(p: dict, rem: dict) -> None:
    g = 0
    for v in p.values():
        g = _igcd(g, v)
    for v in rem.values():
        g = _igcd(g, v)
    if g > 1:
        for k in p:
            p[k] //= g
        for k in rem:
            rem[k] //= g


class _IntReducer:
    """Fraction-free division: remainders are correct up to a scalar."""

    __slots__ = ("order", "divs")

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.divs = []

    def append(self, prim) -> None:
        lm, lc = prim[0]
        self.divs.append((lm, lc, prim[1:]))

    def reduce(self, p: dict) -> dict:
        """Remainder of some positive rational multiple of p; mutates p."""
        key = self.order.key
        divs = self.divs
        rem: dict[Monomial, int] = {}
        steps = 0
        while p:
            m = max(p, key=key)
            c = p.pop(m)
            for lm, lc, tail in divs:
                if lm.divides(m):
                    g = _igcd(c, lc)
                    mult = lc // g
                    q = c // g
                    if mult != 1:
                        for k in p:
                            p[k] *= mult
                        for k in rem:
                            rem[k] *= mult
                    u = m.div(lm)
                    for tm, tc in tail:
                        mm = u.mul(tm)
                        nc = p.get(mm, 0) - q * tc
                        if nc:
                            p[mm] = nc
                        elif mm in p:
                            del p[mm]
                    steps += 1
                    if not steps & 31:
                        _content_reduce(p, rem)
                    break
            else:
                rem[m] = c
        return rem


def reduced_groebner_basis(polys: Iterable[Polynomial],
                           order: Optional[MonomialOrder] = None,
                           budget: Optional[Budget] = None,
                           criteria: bool = True,
                           stats: Optional[GBStats] = None) -> tuple[Polynomial, ...]:
    """Buchberger's algorithm with normal pair selection.

    Pairs are processed by ascending lcm in the active order; the coprime
    and chain discard criteria are applied unless criteria=False. Returns
    THE reduced Groebner basis (monic, interreduced, sorted by descending
    leading monomial), which is unique for the order.
    """
    t0 = time.perf_counter()
    polys = [f for f in polys if f]
    if not polys:
        return ()
    ring = polys[0].ring
    order = order or ring.order
    budget = budget or Budget()
    stats = stats if stats is not None else GBStats()
    key = order.key

    G = []
    lms: list[Monomial] = []
    seen = set()
    for f in polys:
        prim = _prim_from_poly(f)
        if prim in seen:
            continue
        seen.add(prim)
        G.append(prim)
        lms.append(prim[0][0])
    reducer = _IntReducer(order)
    for prim in G:
        reducer.append(prim)

    heap: list[tuple] = []
    pending: set[tuple[int, int]] = set()

    def push_pairs(j: int) -> None:
        lmj = lms[j]
        for i in range(j):
            heapq.heappush(heap, (key(lms[i].lcm(lmj)), i, j))
            pending.add((i, j))
            stats.pairs_pushed += 1

    for j in range(len(G)):
        push_pairs(j)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        budget.tick()
        stats.pairs_processed += 1
        lmi, lmj = lms[i], lms[j]
        if criteria:
            if lmi.is_coprime(lmj):
                stats.discarded_coprime += 1
                continue
            lcm = lmi.lcm(lmj)
            skip = False
            for k, lmk in enumerate(lms):
                if k == i or k == j:
                    continue
                if (lmk.divides(lcm)
                        and (min(i, k), max(i, k)) not in pending
                        and (min(j, k), max(j, k)) not in pending):
                    skip = True
                    break
            if skip:
                stats.discarded_chain += 1
                continue
        rem = reducer.reduce(_spoly_int(G[i], G[j]))
        if not rem:
            stats.zero_reductions += 1
            continue
        prim = _prim_from_dict(rem, key)
        G.append(prim)
        lms.append(prim[0][0])
        reducer.append(prim)
        stats.basis_added += 1
        push_pairs(len(G) - 1)

    basis = interreduce([_poly_from_prim(p, ring) for p in G], order)
    stats.final_size = len(basis)
    stats.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return basis


def interreduce(basis: Sequence[Polynomial],
                order: Optional[MonomialOrder] = None) -> tuple[Polynomial, ...]:
    """Monic minimal tail-reduced form of a Groebner basis.

    Applied to any Groebner basis of an ideal this yields THE reduced
    basis: elements whose leading monomial is divisible by another's are
    dropped, the rest are tail-reduced against each other.
    """
    polys = [f.monic() for f in basis if f]
    if not polys:
        return ()
    ring = polys[0].ring
    order = order or ring.order
    key = order.key
    polys.sort(key=lambda f: key(f.terms[0].mono))
    kept: list[Polynomial] = []
    kept_lms: list[Monomial] = []
    for f in polys:
        lm = f.terms[0].mono
        if any(other.divides(lm) for other in kept_lms):
            continue
        kept.append(f)
        kept_lms.append(lm)
    for idx in range(len(kept)):
        others = kept[:idx] + kept[idx + 1:]
        if not others:
            continue
        reducer = _Reducer(others, order)
        kept[idx] = ring._from_dict(reducer.reduce(_as_dict(kept[idx])))
    kept.sort(key=lambda f: key(f.terms[0].mono), reverse=True)
    return tuple(kept)


def is_groebner_basis(polys: Sequence[Polynomial],
                      order: Optional[MonomialOrder] = None,
                      budget: Optional[Budget] = None) -> GBCertificate:
    """Buchberger's criterion: every S-pair must reduce to 0 against polys.

    Pairs of monomials have S-polynomial 0 and pairs with coprime leading
    monomials always reduce to 0; both are skipped. On failure the result
    carries the offending (1-based) pair and its exact nonzero remainder.
    """
    polys = list(polys)
    if not polys or any(not f for f in polys):
        raise ValueError("is_groebner_basis needs nonzero polynomials")
    ring = polys[0].ring
    order = order or ring.order
    budget = budget or Budget()
    key = order.key
    prims = [_prim_from_poly(f) for f in polys]
    lms = [p[0][0] for p in prims]
    pairs = sorted(
        ((key(lms[i].lcm(lms[j])), i, j)
         for i in range(len(polys)) for j in range(i + 1, len(polys))),
        key=lambda t: t[0])
    reducer = _IntReducer(order)
    for prim in prims:
        reducer.append(prim)
    for _, i, j in pairs:
        budget.tick()
        if len(prims[i]) == 1 and len(prims[j]) == 1:
            continue
        if lms[i].is_coprime(lms[j]):
            continue
        if reducer.reduce(_spoly_int(prims[i], prims[j])):
            exact = divide(s_polynomial(polys[i], polys[j]), polys, order)
            return GBCertificate(False, (i + 1, j + 1), exact.remainder)
    return GBCertificate(True, None, None)


class Ideal:
    """Generator list with an optional cached reduced Groebner basis.

    The cache is write-once and tagged by the ring's order; generators are
    stored as given (zeroes dropped).
    """

    __slots__ = ("ring", "gens", "_basis")

    def __init__(self, ring: Ring, gens: Iterable[Polynomial] = ()):
        gens = tuple(g for g in gens if g)
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self.ring = ring
        self.gens = gens
        self._basis: Optional[tuple[Polynomial, ...]] = None

    @classmethod
    def with_basis(cls, ring: Ring, gens: Iterable[Polynomial],
                   basis: tuple[Polynomial, ...]) -> "Ideal":
        ideal = cls(ring, gens)
        ideal._basis = basis
        return ideal

    def groebner(self, budget: Optional[Budget] = None) -> tuple[Polynomial, ...]:
        if self._basis is None:
            self._basis = reduced_groebner_basis(self.gens, self.ring.order,
                                                 budget=budget)
        return self._basis

    def has_cached_basis(self) -> bool:
        return self._basis is not None

    def __repr__(self) -> str:
        inner = ", ".join(self.ring.format(g) for g in self.gens)
        return f"Ideal({inner})"


def buchberger(I: Ideal, budget: Optional[Budget] = None,
               criteria: bool = True, stats: Optional[GBStats] = None) -> Ideal:
    """Ideal with the reduced Groebner basis attached (and same generators)."""
    basis = reduced_groebner_basis(I.gens, I.ring.order, budget=budget,
                                   criteria=criteria, stats=stats)
    return Ideal.with_basis(I.ring, I.gens, basis)


def normal_form(f: Polynomial, I: Ideal,
                budget: Optional[Budget] = None) -> Polynomial:
    """Remainder of f against the reduced Groebner basis of I."""
    basis = I.groebner(budget)
    if not basis:
        return f
    reducer = _Reducer(basis, I.ring.order)
    return I.ring._from_dict(reducer.reduce(_as_dict(f)))


def _int_dict(f: Polynomial) -> dict:
    """Integer-scaled dict form of f (common denominator cleared)."""
    den = 1
    for c, _ in f.terms:
        d = c.denominator
        den = den * d // _igcd(den, d)
    return {m: c.numerator * (den // c.denominator) for c, m in f.terms}


def member(f: Polynomial, I: Ideal, budget: Optional[Budget] = None) -> bool:
    """Ideal membership: the normal form of f against I vanishes."""
    if not f:
        return True
    basis = I.groebner(budget)
    if not basis:
        return False
    reducer = _IntReducer(I.ring.order)
    for g in basis:
        reducer.append(_prim_from_poly(g))
    return not reducer.reduce(_int_dict(f))


def ideal_equal(I: Ideal, J: Ideal, budget: Optional[Budget] = None) -> bool:
    """Mutual membership of generators."""
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    return (all(member(g, J, budget) for g in I.gens)
            and all(member(g, I, budget) for g in J.gens))


def initial_ideal(I: Ideal, budget: Optional[Budget] = None) -> Ideal:
    """Ideal of leading monomials of the reduced Groebner basis."""
    ring = I.ring
    gens = tuple(ring.from_monomial(f.terms[0].mono) for f in I.groebner(budget))
    return Ideal.with_basis(ring, gens, gens)


def is_squarefree_monomial_ideal(I: Ideal, budget: Optional[Budget] = None) -> bool:
    basis = I.groebner(budget)
    return all(len(f.terms) == 1 and f.terms[0].mono.is_squarefree()
               for f in basis)


def minimal_generators(I: Ideal, budget: Optional[Budget] = None) -> tuple[Polynomial, ...]:
    """Trim a homogeneous generating set to a minimal one.

    A generator is dropped iff it lies in the ideal of the remaining ones;
    the size and degree multiset of the result are invariants of I.
    """
    for g in I.gens:
        if not g.is_homogeneous():
            raise ValueError("minimal_generators needs homogeneous generators")
    ring = I.ring
    key = ring.order.key
    gens = sorted((g.monic() for g in I.gens),
                  key=lambda g: (g.total_degree(), key(g.terms[0].mono)))
    deduped: list[Polynomial] = []
    for g in gens:
        if g not in deduped:
            deduped.append(g)
    kept: list[Polynomial] = []
    for g in deduped:
        # Ascending degree order: only generators of degree <= deg(g) can
        # witness g's redundancy, and those are exactly the kept ones.
        if kept and member(g, Ideal(ring, kept), budget):
            continue
        kept.append(g)
    return tuple(kept)
