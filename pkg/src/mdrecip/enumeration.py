"""Brute-force matching enumeration: the ground-truth oracle.

Everything here walks explicit matchings of an explicit :class:`SignedGraph`;
nothing uses transfer matrices or recurrences.

Two walkers exist. :func:`enumerate_matchings` is the literal stream of every
matching (edge inclusion/exclusion, lexicographic by edge-id set). The
weighted sums use :func:`nonzero_matchings`, a vertex-driven walk that visits
empty vertices first and never leaves one uncovered, so weight-zero branches
are cut before they grow. The two agree on the nonzero matchings; the test
suite checks that directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, SizeGuardError, ZeroWeightError
from .exactmath import MultiPoly, VarKey, X, Y, Z, xv, yv, zv
from .signed_graph import BaseGraph, EdgeKind, SignedGraph, VertexKind, build_rectangle, path

# raw stream visits every matching, weight zero included
STREAM_MAX_EDGES = 30
# weighted walkers only visit nonzero matchings
WEIGHTED_MAX_EDGES = 64


@dataclass(frozen=True)
class Matching:
    edges: frozenset[int]
    uncovered: frozenset[int]


@dataclass(frozen=True)
class Census:
    positive: int
    negative: int

    @property
    def signed(self) -> int:
        return self.positive - self.negative

    @property
    def total(self) -> int:
        return self.positive + self.negative


def _guard(H: SignedGraph, limit: int) -> None:
    if len(H.edges) > limit:
        raise SizeGuardError(
            f"graph has {len(H.edges)} edges; brute-force oracle refuses more than {limit}",
            guard=f"max_edges={limit}",
        )


def enumerate_matchings(H: SignedGraph, max_edges: int = STREAM_MAX_EDGES) -> Iterator[Matching]:
    """Yield every matching of ``H`` once, the empty one first, in lexicographic order."""
    _guard(H, max_edges)
    ends = [(e.u, e.v) for e in H.edges]
    nv = len(H.vertices)
    used = [False] * nv
    chosen: list[int] = []

    def emit() -> Matching:
        return Matching(frozenset(chosen), frozenset(v for v in range(nv) if not used[v]))

    def rec(start: int) -> Iterator[Matching]:
        yield emit()
        for eid in range(start, len(ends)):
            u, v = ends[eid]
            if used[u] or used[v]:
                continue
            used[u] = used[v] = True
            chosen.append(eid)
            yield from rec(eid + 1)
            chosen.pop()
            used[u] = used[v] = False

    yield from rec(0)


def nonzero_matchings(
    H: SignedGraph, max_edges: int = WEIGHTED_MAX_EDGES
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield ``(edge ids, uncovered vertex ids)`` for every matching of nonzero weight."""
    _guard(H, max_edges)
    nv = len(H.vertices)
    order = sorted(range(nv), key=lambda v: (H.vertices[v].kind is not VertexKind.EMPTY, v))
    can_skip = [H.vertices[v].kind is not VertexKind.EMPTY for v in range(nv)]
    adj = H.neighbors()
    done = [False] * nv
    chosen: list[int] = []
    alone: list[int] = []

    def rec(pos: int):
        while pos < nv and done[order[pos]]:
            pos += 1
        if pos == nv:
            yield tuple(sorted(chosen)), tuple(sorted(alone))
            return
        v = order[pos]
        done[v] = True
        if can_skip[v]:
            alone.append(v)
            yield from rec(pos + 1)
            alone.pop()
        for eid, w in adj[v]:
            if done[w]:
                continue
            done[w] = True
            chosen.append(eid)
            yield from rec(pos + 1)
            chosen.pop()
            done[w] = False
        done[v] = False

    yield from rec(0)


def scalar_weight(H: SignedGraph, mu: Matching) -> int:
    """Product of edge weights over chosen edges times vertex weights over uncovered vertices."""
    w = 1
    for eid in mu.edges:
        w *= H.edges[eid].kind.weight
    for v in mu.uncovered:
        w *= H.vertices[v].kind.weight
    return w


def _sign(H: SignedGraph, edges, uncovered) -> int:
    s = 1
    for eid in edges:
        if H.edges[eid].kind is EdgeKind.ANTI_VEDGE:
            s = -s
    for v in uncovered:
        if H.vertices[v].kind is VertexKind.ANTI:
            s = -s
    return s


def signed_count(H: SignedGraph, max_edges: int = WEIGHTED_MAX_EDGES) -> int:
    """Sum of the weights of all matchings of ``H``."""
    return sum(_sign(H, es, un) for es, un in nonzero_matchings(H, max_edges))


def signed_census(H: SignedGraph, max_edges: int = WEIGHTED_MAX_EDGES) -> Census:
    pos = neg = 0
    for es, un in nonzero_matchings(H, max_edges):
        if _sign(H, es, un) > 0:
            pos += 1
        else:
            neg += 1
    return Census(pos, neg)


def _sgn(j: int) -> int:
    return 1 if j > 0 else -1


def _denominator(H: SignedGraph) -> dict[VarKey, int]:
    den: dict[VarKey, int] = {}
    for e in H.edges:
        if e.kind is EdgeKind.HEDGE and not e.boundary and e.label[1] <= 0:
            k = xv(e.label[0] + 1, e.label[1])
            den[k] = den.get(k, 0) - 1
    return den


def _formal_term(H: SignedGraph, edges, uncovered, den: dict[VarKey, int]) -> tuple[tuple, int]:
    exps = dict(den)
    sign = 1
    for eid in edges:
        e = H.edges[eid]
        if e.kind is EdgeKind.HEDGE:
            if e.boundary:
                continue
            k = xv(e.label[0] + 1, e.label[1])
        else:
            k = yv(e.label[0] + 1, e.label[1])
            sign *= _sgn(e.label[1])
        exps[k] = exps.get(k, 0) + 1
    for v in uncovered:
        vx = H.vertices[v]
        k = zv(vx.row + 1, vx.col)
        sign *= _sgn(vx.col)
        exps[k] = exps.get(k, 0) + 1
    return tuple(sorted((k, e) for k, e in exps.items() if e)), sign


def _require_rectangle(H: SignedGraph) -> None:
    if not H.is_rectangle:
        raise DomainError("formal weights are defined for graphs from build_rectangle only")


def matching_weight_formal(H: SignedGraph, mu: Matching) -> MultiPoly:
    """The Laurent monomial weight of ``mu`` with indexed variables.

    Indices are 1-based rows and the column labels of the layout; a vedge of
    base edge ``e`` uses row ``e + 1`` (for a path base this is the upper of
    its two endpoints).
    """
    _require_rectangle(H)
    if scalar_weight(H, mu) == 0:
        raise ZeroWeightError("matching leaves an empty vertex uncovered")
    mono, sign = _formal_term(H, mu.edges, mu.uncovered, _denominator(H))
    return MultiPoly({mono: sign})


def matching_poly_of(H: SignedGraph, max_edges: int = WEIGHTED_MAX_EDGES) -> MultiPoly:
    """Sum of formal weights over all nonzero matchings of the rectangle ``H``."""
    _require_rectangle(H)
    den = _denominator(H)
    acc: dict[tuple, int] = {}
    for es, un in nonzero_matchings(H, max_edges):
        mono, sign = _formal_term(H, es, un, den)
        acc[mono] = acc.get(mono, 0) + sign
    return MultiPoly(acc)


def matching_poly_formal(m: int, n: int, max_edges: int = WEIGHTED_MAX_EDGES) -> MultiPoly:
    """The matching polynomial of the grid ``G(m, n)`` with indexed variables."""
    return matching_poly_of(build_rectangle(path(m), n), max_edges)


def matching_poly_scalar(G: BaseGraph, n: int, max_edges: int = WEIGHTED_MAX_EDGES) -> MultiPoly:
    """Matching polynomial of ``G x P_n`` with all indexed variables collapsed to x, y, z.

    Accumulates exponent counts directly instead of building indexed
    monomials; equal to ``matching_poly_of(...).collapse_uniform()``.
    """
    H = build_rectangle(G, n)
    den = -sum(_denominator(H).values())
    acc: dict[tuple[int, int, int], int] = {}
    for es, un in nonzero_matchings(H, max_edges):
        hx = vy = 0
        sign = 1
        for eid in es:
            e = H.edges[eid]
            if e.kind is EdgeKind.HEDGE:
                hx += not e.boundary
            else:
                vy += 1
                sign *= _sgn(e.label[1])
        for v in un:
            sign *= _sgn(H.vertices[v].col)
        key = (hx - den, vy, len(un))
        acc[key] = acc.get(key, 0) + sign
    return MultiPoly({((X, a), (Y, b), (Z, c)): k for (a, b, c), k in acc.items()})


def x_power(k: int) -> MultiPoly:
    return MultiPoly.var(X, k) if k else MultiPoly.const(1)
