"""Transfer-matrix counting over subsets of the base graph's vertices.

State of a column boundary = bitmask of base vertices whose hedge crosses to
the next column. ``T[A][B]`` weights one column that receives hedges on ``A``
and emits hedges on ``B``; the emitted hedges pay the factor ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, SizeGuardError
from .exactmath import MultiPoly, RationalFunction, X, Y, Z, char_poly, poly_in_t
from .recurrence import Recurrence, SeqWindow, extend_backward, extend_forward, minimal_recurrence
from .signed_graph import BaseGraph

MAX_TRANSFER_M = 20
MAX_GENFUNC_M = 6


@dataclass(frozen=True)
class TransferMatrix:
    m: int
    entries: tuple[tuple[MultiPoly, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def specialize(self, x=1, y=1, z=1) -> list[list[Fraction]]:
        return [[e.at(x, y, z) for e in row] for row in self.entries]

    def integer_matrix(self) -> list[list[int]]:
        """Entries at ``x = y = z = 1`` as Python ints."""
        out = []
        for row in self.entries:
            out.append([sum(e.terms.values()) for e in row])
        return out


def _vertex_sums(G: BaseGraph) -> list[MultiPoly]:
    """``S[U]``: sum of y^|mu| z^isolated over matchings of G with vertices ``U`` removed."""
    m = G.m
    nbr = [0] * m
    for a, b in G.edges:
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a
    y = MultiPoly.var(Y)
    z = MultiPoly.var(Z)

    @lru_cache(maxsize=None)
    def S(avail: int) -> MultiPoly:
        if not avail:
            return MultiPoly.const(1)
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        total = z * S(rest)
        cand = nbr[v] & rest
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            total = total + y * S(rest & ~(1 << w))
        return total

    full = (1 << m) - 1
    return [S(full & ~U) for U in range(1 << m)]


def build_transfer(G: BaseGraph) -> TransferMatrix:
    if G.m > MAX_TRANSFER_M:
        raise SizeGuardError(f"transfer matrix for m={G.m} is too large", guard=f"m<={MAX_TRANSFER_M}")
    size = 1 << G.m
    sums = _vertex_sums(G)
    xpow = [MultiPoly.var(X, k) if k else MultiPoly.const(1) for k in range(G.m + 1)]
    zero = MultiPoly()
    rows = []
    for A in range(size):
        row = []
        for B in range(size):
            if A & B:
                row.append(zero)
            else:
                row.append(xpow[bin(B).count("1")] * sums[A | B])
        rows.append(tuple(row))
    return TransferMatrix(G.m, tuple(rows))


def _matmul(P, Q):
    n = len(P)
    cols = list(zip(*Q))
    return [[sum(a * b for a, b in zip(P[i], cols[j]) if a and b) for j in range(n)] for i in range(n)]


def count_fast(G: BaseGraph, n: int) -> int:
    """``M(G x P_n)`` for ``n >= 0`` as ``(T^n)[0][0]`` at x = y = z = 1."""
    if n < 0:
        raise DomainError("count_fast needs n >= 0; extend the recurrence for negative n")
    T = build_transfer(G).integer_matrix()
    size = len(T)
    result = [[int(i == j) for j in range(size)] for i in range(size)]
    base = T
    while n:
        if n & 1:
            result = _matmul(result, base)
        n >>= 1
        if n:
            base = _matmul(base, base)
    return result[0][0]


def count_sequence(G: BaseGraph, lo: int, hi: int) -> list[int]:
    """``[M(G x P_n) for n in lo..hi]`` with ``0 <= lo``, by row-vector iteration."""
    if lo < 0:
        raise DomainError("count_sequence needs lo >= 0")
    T = build_transfer(G).integer_matrix()
    size = len(T)
    vec = [1] + [0] * (size - 1)
    out = []
    for k in range(hi + 1):
        if k >= lo:
            out.append(vec[0])
        vec = [sum(vec[a] * T[a][b] for a in range(size) if vec[a]) for b in range(size)]
    return out


def series_scalar(G: BaseGraph, count: int) -> list[MultiPoly]:
    """``[f_0, ..., f_{count-1}]`` in the uniform variables x, y, z."""
    T = build_transfer(G).entries
    size = len(T)
    vec = [MultiPoly.const(1)] + [MultiPoly()] * (size - 1)
    out = []
    for _ in range(count):
        out.append(vec[0])
        new = []
        for b in range(size):
            acc = MultiPoly()
            for a in range(size):
                if not vec[a].is_zero() and not T[a][b].is_zero():
                    acc = acc + vec[a] * T[a][b]
            new.append(acc)
        vec = new
    return out


def genfunc(G: BaseGraph) -> RationalFunction:
    """``F(t) = sum_{n>=0} f_n t^n`` as cofactor / ``det(I - tT)``."""
    if G.m > MAX_GENFUNC_M:
        raise SizeGuardError(f"symbolic determinant for m={G.m} is too costly", guard=f"m<={MAX_GENFUNC_M}")
    T = [list(r) for r in build_transfer(G).entries]
    minor = [row[1:] for row in T[1:]]
    # det(I - tA) is the reversed characteristic polynomial of A
    denom = poly_in_t(char_poly(T))
    numer = poly_in_t(char_poly(minor)) if minor else MultiPoly.const(1)
    return RationalFunction(numer, denom)


def recurrence_from_charpoly(T: TransferMatrix, specialize: tuple | None = None) -> Recurrence:
    """Cayley-Hamilton recurrence ``a_n = c_1 a_{n-1} + ... + c_k a_{n-k}``.

    With ``specialize=(x, y, z)`` the coefficients are Fractions; otherwise they
    are polynomials in x, y, z. Valid but not necessarily minimal.
    """
    if specialize is not None:
        M = T.specialize(*specialize)
    else:
        M = [list(r) for r in T.entries]
    p = char_poly(M)
    return Recurrence(tuple(-c for c in p[1:]))


def default_term_count(G: BaseGraph) -> int:
    """Enough terms to pin down any recurrence of order up to ``2^m``."""
    return 2 * (1 << G.m) + 2


def bi_infinite_counts(G: BaseGraph, lo: int, hi: int, terms: int | None = None) -> tuple[Recurrence, SeqWindow]:
    """``M(G x P_n)`` for ``lo <= n <= hi``, any signs, via the minimal recurrence.

    Terms ``n = 1..terms`` come from the transfer matrix; the rest is exact
    extension in both directions.
    """
    terms = default_term_count(G) if terms is None else terms
    seq = count_sequence(G, 1, terms)
    rec = minimal_recurrence(seq)
    w = SeqWindow(1, tuple(seq))
    if lo < w.lo:
        w = extend_backward(rec, w, lo)
    if hi > w.hi:
        w = extend_forward(rec, w, hi)
    return rec, w.slice(lo, hi)
