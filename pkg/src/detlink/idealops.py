"""Ideal-level operations: intersection and colon via elimination,
dimension and height through initial ideals, minimal primes of squarefree
monomial ideals.

Intersections use the one-variable trick: eliminate t from t*I + (1-t)*J
under the block elimination order. The t-free part of the reduced
elimination basis is the reduced grevlex basis of the intersection, so
results carry their Groebner basis for free.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .groebner import Budget, Ideal, divide, interreduce, reduced_groebner_basis
from .rings import ELIM_BLOCK, Monomial, Polynomial, Ring


def _elim_ring(ring: Ring) -> Ring:
    """Fresh ring with one extra elimination variable above everything."""
    return Ring(ring.space.n, ring.space.elim_count + 1, ELIM_BLOCK)


def _embed(f: Polynomial, ering: Ring) -> Polynomial:
    terms = tuple((m.exps, c) for c, m in f.terms)
    return ering._from_dict({Monomial((0,) + exps): c for exps, c in terms})


def _strip_t(f: Polynomial, ring: Ring) -> Polynomial:
    return ring._from_dict({Monomial(m.exps[1:]): c for c, m in f.terms})


def intersect(I: Ideal, J: Ideal, budget: Optional[Budget] = None) -> Ideal:
    """Generators of the intersection of I and J, via elimination of t."""
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal(ring, ())
    ering = _elim_ring(ring)
    t = ering.t(1)
    one_minus_t = ering.one - t
    gens = [t * _embed(f, ering) for f in I.gens]
    gens += [one_minus_t * _embed(g, ering) for g in J.gens]
    basis = reduced_groebner_basis(gens, ering.order, budget=budget)
    kept = []
    for f in basis:
        if f.terms[0].mono.exps[0]:
            continue
        # With extra symbolic head variables the block order may fail to
        # rank every t-containing monomial above the t-free ones; a kept
        # element must then be checked t-free throughout to keep the
        # elimination sound.
        if any(m.exps[0] for _, m in f.terms):
            raise ArithmeticError(
                "elimination is inconclusive over this extended ring")
        kept.append(_strip_t(f, ring))
    kept = tuple(kept)
    return Ideal.with_basis(ring, kept, kept)


def _exact_div(g: Polynomial, f: Polynomial) -> Polynomial:
    q, r = divide(g, [f])
    if r:
        raise ArithmeticError("non-exact division in colon computation")
    return q[0]


def quotient_by_poly(I: Ideal, f: Polynomial,
                     budget: Optional[Budget] = None) -> Ideal:
    """Colon ideal I : (f), computed as intersect(I, (f)) divided by f."""
    if not f:
        raise ValueError("colon by the zero polynomial")
    ring = I.ring
    W = intersect(I, Ideal(ring, (f,)), budget)
    quots = [_exact_div(g, f) for g in W.groebner(budget)]
    basis = interreduce(quots, ring.order)
    return Ideal.with_basis(ring, basis, basis)


def quotient(I: Ideal, J: Ideal, budget: Optional[Budget] = None) -> Ideal:
    """Colon ideal I : J as the intersection of I : (g) over generators of J."""
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    if not J.gens:
        raise ValueError("colon by the zero ideal")
    parts = [quotient_by_poly(I, g, budget) for g in J.gens]
    out = parts[0]
    for part in parts[1:]:
        out = intersect(out, part, budget)
    return out


def sum_ideals(*ideals: Ideal) -> Ideal:
    """Generator concatenation, deduplicated."""
    if not ideals:
        raise ValueError("sum of no ideals")
    ring = ideals[0].ring
    gens: list[Polynomial] = []
    for I in ideals:
        if I.ring != ring:
            raise ValueError("ideals from different rings")
        for g in I.gens:
            if g and g not in gens:
                gens.append(g)
    return Ideal(ring, gens)


def product_ideals(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    gens: list[Polynomial] = []
    for f in I.gens:
        for g in J.gens:
            fg = f * g
            if fg and fg not in gens:
                gens.append(fg)
    return Ideal(I.ring, gens)


# -- dimension of monomial ideals and minimal primes ------------------------


def _support_edges(supports: Iterable[tuple[int, ...]]) -> list[frozenset[int]]:
    """Inclusion-minimal supports; any cover of these covers all."""
    edges = sorted({frozenset(s) for s in supports}, key=lambda e: (len(e), sorted(e)))
    kept: list[frozenset[int]] = []
    for e in edges:
        if not any(k <= e for k in kept):
            kept.append(e)
    return kept


def _min_cover_size(edges: list[frozenset[int]]) -> int:
    """Minimum vertex cover of a hypergraph, by branch and bound."""
    best = [sum(len(e) for e in edges)]

    def walk(remaining: list[frozenset[int]], size: int) -> None:
        if size >= best[0]:
            return
        if not remaining:
            best[0] = size
            return
        edge = min(remaining, key=len)
        for v in sorted(edge):
            rest = [e for e in remaining if v not in e]
            walk(rest, size + 1)

    walk(edges, 0)
    return best[0]


def _minimal_covers(edges: list[frozenset[int]]) -> list[frozenset[int]]:
    """All inclusion-minimal vertex covers of a hypergraph."""
    found: set[frozenset[int]] = set()

    def walk(remaining: list[frozenset[int]], chosen: frozenset[int]) -> None:
        if not remaining:
            found.add(chosen)
            return
        edge = min(remaining, key=len)
        for v in sorted(edge):
            rest = [e for e in remaining if v not in e]
            walk(rest, chosen | {v})

    walk(edges, frozenset())
    return [c for c in found
            if not any(other < c for other in found)]


def dimension(I: Ideal, budget: Optional[Budget] = None) -> int:
    """Krull dimension of R/I, via the initial ideal.

    Groebner deformation preserves dimension; for a monomial ideal the
    dimension is the size of the largest variable subset containing no
    generator's support, i.e. nvars minus the minimum vertex cover of the
    support hypergraph.
    """
    nvars = I.ring.space.nvars
    basis = I.groebner(budget)
    if not basis:
        return nvars
    if any(f.terms[0].mono.deg == 0 for f in basis):
        raise ValueError("improper ideal")
    edges = _support_edges(f.terms[0].mono.support() for f in basis)
    return nvars - _min_cover_size(edges)


def height(I: Ideal, budget: Optional[Budget] = None) -> int:
    """Codimension: total variable count minus dimension."""
    return I.ring.space.nvars - dimension(I, budget)


def minimal_primes_squarefree(I: Ideal,
                              budget: Optional[Budget] = None) -> tuple[frozenset[str], ...]:
    """Minimal primes of a squarefree monomial ideal, as variable-name sets.

    These are exactly the minimal vertex covers of the generator-support
    hypergraph.
    """
    basis = I.groebner(budget)
    if not all(len(f.terms) == 1 and f.terms[0].mono.is_squarefree() for f in basis):
        raise ValueError("not a squarefree monomial ideal")
    names = I.ring.names
    if not basis:
        return (frozenset(),)
    edges = _support_edges(f.terms[0].mono.support() for f in basis)
    covers = _minimal_covers(edges)
    named = [frozenset(names[v] for v in c) for c in covers]
    return tuple(sorted(named, key=lambda s: (len(s), sorted(s))))
