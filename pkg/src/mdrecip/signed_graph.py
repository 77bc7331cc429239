"""Signed graphs: base graphs, generalized rectangles G x P_n for every integer
n, conjugation, adjunction and the empty-path contraction.

Layout convention. Every vertex carries ``(row, col)`` where ``row`` is the id
of the base-graph vertex it copies and ``col`` is a horizontal coordinate.

* ``n > 0``: plain columns ``1..n``.
* ``n < 0``: empty column at ``n``, anti columns ``n+1..0`` (left to right),
  empty column at ``1``. Anti-column coordinates double as the formal column
  labels ``j`` (top-right anti-vertex is ``z[1,0]``).
* ``n = 0``: empty columns at ``0`` and ``1`` joined row by row.

A hedge is labelled ``(row, col of its left endpoint)``; a vedge or anti-vedge
is labelled ``(base edge index, col)``. Hedges touching an empty vertex are
boundary hedges and carry no formal variable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from itertools import combinations
from pathlib import Path

from .errors import DomainError, PreconditionError, ShapeError


class VertexKind(enum.Enum):
    PLAIN = "plain"
    ANTI = "anti"
    EMPTY = "empty"

    @property
    def weight(self) -> int:
        return _VERTEX_WEIGHT[self]

    def conjugate(self) -> "VertexKind":
        return {VertexKind.PLAIN: VertexKind.ANTI, VertexKind.ANTI: VertexKind.PLAIN}.get(self, self)


class EdgeKind(enum.Enum):
    HEDGE = "hedge"
    VEDGE = "vedge"
    ANTI_VEDGE = "anti-vedge"

    @property
    def weight(self) -> int:
        return -1 if self is EdgeKind.ANTI_VEDGE else 1

    def conjugate(self) -> "EdgeKind":
        return {EdgeKind.VEDGE: EdgeKind.ANTI_VEDGE, EdgeKind.ANTI_VEDGE: EdgeKind.VEDGE}.get(self, self)


_VERTEX_WEIGHT = {VertexKind.PLAIN: 1, VertexKind.ANTI: -1, VertexKind.EMPTY: 0}


@dataclass(frozen=True)
class BaseGraph:
    """A finite simple graph on vertices ``0..m-1``."""

    m: int
    edges: tuple[tuple[int, int], ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("base graph needs at least one vertex")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < self.m and 0 <= v < self.m):
                raise DomainError(f"edge ({u}, {v}) out of range for m={self.m}")
            norm.append((min(u, v), max(u, v)))
        if len(set(norm)) != len(norm):
            raise DomainError("multi-edge in base graph")
        object.__setattr__(self, "edges", tuple(norm))

    def __str__(self) -> str:
        return self.name or f"graph(m={self.m}, edges={list(self.edges)})"


def path(m: int) -> BaseGraph:
    return BaseGraph(m, tuple((i, i + 1) for i in range(m - 1)), name=f"path:{m}")


def cycle(m: int) -> BaseGraph:
    if m < 3:
        raise DomainError("cycle:m needs m >= 3 (smaller cycles are not simple)")
    return BaseGraph(m, tuple((i, (i + 1) % m) for i in range(m)), name=f"cycle:{m}")


def complete(m: int) -> BaseGraph:
    return BaseGraph(m, tuple(combinations(range(m), 2)), name=f"complete:{m}")


def parse_base_text(text: str, name: str = "") -> BaseGraph:
    """Parse ``vertices <m>`` followed by ``edge <u> <v>`` lines; ``#`` starts a comment."""
    m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "vertices" and len(parts) == 2 and m is None:
                m = int(parts[1])
            elif parts[0] == "edge" and len(parts) == 3 and m is not None:
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise DomainError(f"line {lineno}: cannot parse {raw!r}") from None
    if m is None:
        raise DomainError("missing 'vertices <m>' line")
    return BaseGraph(m, tuple(edges), name=name)


def parse_base_spec(spec: str) -> BaseGraph:
    """``path:m``, ``cycle:m``, ``complete:m`` or ``file:<path>``."""
    kind, _, arg = spec.partition(":")
    if kind == "file":
        return parse_base_text(Path(arg).read_text(), name=spec)
    builders = {"path": path, "cycle": cycle, "complete": complete}
    if kind not in builders or not arg:
        raise DomainError(f"unknown base graph spec {spec!r}")
    try:
        m = int(arg)
    except ValueError:
        raise DomainError(f"bad vertex count in {spec!r}") from None
    return builders[kind](m)


@dataclass(frozen=True)
class Vertex:
    kind: VertexKind
    row: int
    col: int


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    kind: EdgeKind
    label: tuple[int, int]
    boundary: bool = False


@dataclass(frozen=True)
class SignedGraph:
    """An explicit signed graph together with how it was assembled.

    ``pieces`` lists the indices of the rectangles adjoined to make it (a
    single entry for :func:`build_rectangle`); ``left``/``right`` hold the
    vertex ids of the outer boundary, one per base vertex.
    """

    base: BaseGraph
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    pieces: tuple[int, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]
    conjugated: bool = False

    @property
    def n(self) -> int:
        return sum(self.pieces)

    @property
    def is_rectangle(self) -> bool:
        return len(self.pieces) == 1 and not self.conjugated

    def neighbors(self) -> list[list[tuple[int, int]]]:
        """Adjacency lists of ``(edge id, other endpoint)``."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for eid, e in enumerate(self.edges):
            adj[e.u].append((eid, e.v))
            adj[e.v].append((eid, e.u))
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in (e.u, e.v))

    def census(self) -> dict[str, int]:
        """Counts of each component kind, with hedges split by boundary flag."""
        out = {k.value: 0 for k in VertexKind}
        out.update({k.value: 0 for k in EdgeKind})
        out["boundary-hedge"] = 0
        for v in self.vertices:
            out[v.kind.value] += 1
        for e in self.edges:
            if e.kind is EdgeKind.HEDGE and e.boundary:
                out["boundary-hedge"] += 1
            else:
                out[e.kind.value] += 1
        return out

    def labeled(self) -> tuple[frozenset, frozenset]:
        """Label-level view used for isomorphism-by-label comparisons."""
        vs = frozenset((v.kind, v.row, v.col) for v in self.vertices)
        es = frozenset(
            (e.kind, frozenset({(self.vertices[e.u].row, self.vertices[e.u].col),
                                (self.vertices[e.v].row, self.vertices[e.v].col)}))
            for e in self.edges
        )
        return vs, es

    def to_json_dict(self) -> dict:
        return {
            "base": {"m": self.base.m, "edges": [list(e) for e in self.base.edges]},
            "pieces": list(self.pieces),
            "conjugated": self.conjugated,
            "vertices": [
                {"id": i, "kind": v.kind.value, "label": [v.row + 1, v.col]}
                for i, v in enumerate(self.vertices)
            ],
            "edges": [
                {
                    "u": e.u,
                    "v": e.v,
                    "kind": e.kind.value,
                    "label": "boundary" if e.boundary else [e.label[0] + 1, e.label[1]],
                }
                for e in self.edges
            ],
        }

    def to_dot(self) -> str:
        shape = {VertexKind.PLAIN: "circle", VertexKind.ANTI: "doublecircle", VertexKind.EMPTY: "point"}
        style = {EdgeKind.HEDGE: "solid", EdgeKind.VEDGE: "bold", EdgeKind.ANTI_VEDGE: "dashed"}
        lines = ["graph G {", "  node [label=\"\"];"]
        for i, v in enumerate(self.vertices):
            lines.append(
                f'  v{i} [shape={shape[v.kind]}, xlabel="{v.row + 1},{v.col}", '
                f'pos="{v.col},{-v.row}!"];'
            )
        for e in self.edges:
            lines.append(f"  v{e.u} -- v{e.v} [style={style[e.kind]}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_rectangle(G: BaseGraph, n: int) -> SignedGraph:
    """The generalized rectangle ``G x P_n`` for any integer ``n``."""
    m = G.m
    vertices: list[Vertex] = []
    edges: list[Edge] = []
    ids: dict[tuple[int, int], int] = {}

    def add_vertex(kind, row, col):
        ids[row, col] = len(vertices)
        vertices.append(Vertex(kind, row, col))

    if n > 0:
        cols = range(1, n + 1)
        kind, vkind = VertexKind.PLAIN, EdgeKind.VEDGE
    else:
        cols = range(n + 1, 1)
        kind, vkind = VertexKind.ANTI, EdgeKind.ANTI_VEDGE
        for i in range(m):
            add_vertex(VertexKind.EMPTY, i, n)
    for j in cols:
        for i in range(m):
            add_vertex(kind, i, j)
    if n <= 0:
        for i in range(m):
            add_vertex(VertexKind.EMPTY, i, 1)

    lo = n if n <= 0 else 1
    hi = 1 if n <= 0 else n
    for j in range(lo, hi + 1):
        if j in cols:
            for e, (a, b) in enumerate(G.edges):
                edges.append(Edge(ids[a, j], ids[b, j], vkind, (e, j)))
        if j < hi:
            for i in range(m):
                u, v = ids[i, j], ids[i, j + 1]
                boundary = vertices[u].kind is VertexKind.EMPTY or vertices[v].kind is VertexKind.EMPTY
                edges.append(Edge(u, v, EdgeKind.HEDGE, (i, j), boundary))

    left = tuple(ids[i, lo] for i in range(m))
    right = tuple(ids[i, hi] for i in range(m))
    return SignedGraph(G, tuple(vertices), tuple(edges), (n,), left, right)


def conjugate(H: SignedGraph) -> SignedGraph:
    """Swap plain and anti components; hedges and empty vertices are unchanged."""
    return replace(
        H,
        vertices=tuple(replace(v, kind=v.kind.conjugate()) for v in H.vertices),
        edges=tuple(replace(e, kind=e.kind.conjugate()) for e in H.edges),
        conjugated=not H.conjugated,
    )


def _span(H: SignedGraph) -> tuple[int, int]:
    cols = [v.col for v in H.vertices]
    return min(cols), max(cols)


def adjoin(H1: SignedGraph, H2: SignedGraph) -> SignedGraph:
    """Join ``H1`` on the left to ``H2`` on the right with one hedge per base vertex.

    Depending on the boundary kinds this realizes the three cases: a direct
    hedge, a hedge into the neighbour's empty vertex, or a hedge between two
    empty vertices.
    """
    if H1.base != H2.base:
        raise ShapeError("adjoin needs both graphs over the same base graph")
    shift = _span(H1)[1] - _span(H2)[0] + 1
    off = len(H1.vertices)
    vertices = list(H1.vertices) + [replace(v, col=v.col + shift) for v in H2.vertices]
    edges = list(H1.edges) + [
        replace(e, u=e.u + off, v=e.v + off, label=(e.label[0], e.label[1] + shift)) for e in H2.edges
    ]
    for i in range(H1.base.m):
        u, v = H1.right[i], H2.left[i] + off
        boundary = VertexKind.EMPTY in (vertices[u].kind, vertices[v].kind)
        edges.append(Edge(u, v, EdgeKind.HEDGE, (i, vertices[u].col), boundary))
    return SignedGraph(
        H1.base,
        tuple(vertices),
        tuple(edges),
        H1.pieces + H2.pieces,
        H1.left,
        tuple(r + off for r in H2.right),
        H1.conjugated and H2.conjugated,
    )


def adjoin_all(G: BaseGraph, ns) -> SignedGraph:
    """Left-associated adjunction of ``G x P_n`` for each ``n`` in ``ns``."""
    ns = list(ns)
    if not ns:
        raise DomainError("need at least one index")
    H = build_rectangle(G, ns[0])
    for n in ns[1:]:
        H = adjoin(H, build_rectangle(G, n))
    return H


def find_empty_path(H: SignedGraph, a: int, b: int) -> tuple[int, int, tuple[int, int, int]] | None:
    """Locate ``a -hedge- E1 -hedge- E2 -hedge- b`` with both E's empty and of degree 2."""
    adj = H.neighbors()

    def hedges(v):
        return [(eid, w) for eid, w in adj[v] if H.edges[eid].kind is EdgeKind.HEDGE]

    for e1, w1 in hedges(a):
        if H.vertices[w1].kind is not VertexKind.EMPTY or len(adj[w1]) != 2:
            continue
        for e2, w2 in hedges(w1):
            if w2 == a or H.vertices[w2].kind is not VertexKind.EMPTY or len(adj[w2]) != 2:
                continue
            for e3, w3 in hedges(w2):
                if w3 == b and e3 != e2:
                    return w1, w2, (e1, e2, e3)
    return None


def contract_empty_path(H: SignedGraph, a: int, b: int) -> SignedGraph:
    """Replace the path hedge-empty-hedge-empty-hedge between ``a`` and ``b`` by one hedge."""
    found = find_empty_path(H, a, b)
    if found is None:
        raise PreconditionError(f"no hedge-empty-hedge-empty-hedge path between {a} and {b}")
    w1, w2, eids = found
    if {w1, w2} & set(H.left + H.right):
        raise PreconditionError("path runs through an outer boundary vertex")
    keep = [v for v in range(len(H.vertices)) if v not in (w1, w2)]
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        replace(e, u=remap[e.u], v=remap[e.v]) for eid, e in enumerate(H.edges) if eid not in eids
    ]
    va, vb = H.vertices[a], H.vertices[b]
    edges.append(Edge(remap[a], remap[b], EdgeKind.HEDGE, (va.row, min(va.col, vb.col))))
    return replace(
        H,
        vertices=tuple(H.vertices[v] for v in keep),
        edges=tuple(edges),
        left=tuple(remap[v] for v in H.left),
        right=tuple(remap[v] for v in H.right),
    )
