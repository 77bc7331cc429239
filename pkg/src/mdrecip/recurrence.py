"""Constant-coefficient linear recurrences over the rationals.

Discovery is Berlekamp-Massey over ``Fraction``; extension runs the recurrence
forward or solves it for the term of smallest index to go backward.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateSequenceError,
    InconsistentRecurrenceError,
    InsufficientDataError,
)


def _is_zero(c) -> bool:
    return c == 0


@dataclass(frozen=True)
class Recurrence:
    """``a_n = c_1 a_{n-1} + ... + c_k a_{n-k}`` with ``c_k != 0``.

    Coefficients are normally Fractions; polynomial coefficients (from a
    symbolic characteristic polynomial) are accepted too but cannot drive
    backward extension.
    """

    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        if not cs:
            raise DegenerateSequenceError("all coefficients vanish; the sequence is eventually zero")
        cs = [Fraction(c) if isinstance(c, int) else c for c in cs]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def next_term(self, previous: Sequence):
        """Term following ``previous`` (which must end with the ``k`` latest terms)."""
        k = self.order
        tail = previous[-k:]
        return sum((c * tail[k - 1 - i] for i, c in enumerate(self.coeffs)), Fraction(0))

    def previous_term(self, following: Sequence):
        """Term preceding ``following`` (which must start with the ``k`` earliest terms)."""
        k = self.order
        head = following[:k]
        # a_{n-k} = (a_n - c_1 a_{n-1} - ... - c_{k-1} a_{n-k+1}) / c_k
        acc = head[k - 1]
        for i in range(1, k):
            acc -= self.coeffs[i - 1] * head[k - 1 - i]
        return acc / self.coeffs[-1]

    def holds_on(self, values: Sequence, start: int | None = None) -> bool:
        k = self.order
        first = k if start is None else max(start, k)
        return all(values[n] == self.next_term(values[n - k:n]) for n in range(first, len(values)))

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


@dataclass(frozen=True)
class SeqWindow:
    """Values ``a_lo, ..., a_hi`` of a bi-infinite sequence."""

    lo: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if not self.values:
            raise InsufficientDataError("window must contain at least one value")

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not self.lo <= n <= self.hi:
            raise IndexError(f"index {n} outside {self.lo}..{self.hi}")
        return self.values[n - self.lo]

    def items(self):
        return zip(range(self.lo, self.hi + 1), self.values)

    def slice(self, lo: int, hi: int) -> "SeqWindow":
        return SeqWindow(lo, tuple(self[n] for n in range(lo, hi + 1)))


def berlekamp_massey(values: Sequence) -> list[Fraction]:
    """Connection polynomial ``[1, C_1, ..., C_L]`` of the shortest recurrence.

    The recurrence is ``a_n + C_1 a_{n-1} + ... + C_L a_{n-L} = 0``.
    """
    s = [Fraction(v) for v in values]
    C = [Fraction(1)]
    B = [Fraction(1)]
    L, shift, b = 0, 1, Fraction(1)
    for n in range(len(s)):
        d = s[n]
        for i in range(1, L + 1):
            if i < len(C):
                d += C[i] * s[n - i]
        if d == 0:
            shift += 1
            continue
        coef = d / b
        newC = C + [Fraction(0)] * max(0, len(B) + shift - len(C))
        for i, bi in enumerate(B):
            newC[i + shift] -= coef * bi
        if 2 * L <= n:
            B, L, b, shift = C, n + 1 - L, d, 1
        else:
            shift += 1
        C = newC
    C = C + [Fraction(0)] * max(0, L + 1 - len(C))
    return C[: L + 1]


def minimal_recurrence(values: Sequence, max_order: int | None = None) -> Recurrence:
    """Shortest recurrence consistent with every supplied term.

    Raises if the terms are all zero, if fewer than twice the order were
    supplied (the answer would not be determined), if the order exceeds
    ``max_order``, or if the recurrence would need a vanishing trailing
    coefficient to fit.
    """
    vals = [Fraction(v) for v in values]
    if all(v == 0 for v in vals):
        raise DegenerateSequenceError("sequence is identically zero")
    conn = berlekamp_massey(vals)
    L = len(conn) - 1
    if len(vals) < 2 * L:
        raise InsufficientDataError(f"{len(vals)} terms cannot pin down a recurrence of order {L}")
    if max_order is not None and L > max_order:
        raise InconsistentRecurrenceError(f"no recurrence of order <= {max_order} fits")
    rec = Recurrence(tuple(-c for c in conn[1:]))
    if not rec.holds_on(vals):
        if rec.order < L:
            # stripping a zero trailing coefficient made the transient visible
            raise InconsistentRecurrenceError(
                "minimal recurrence has a zero trailing coefficient; the sequence is not reversible"
            )
        raise InconsistentRecurrenceError("recurrence failed verification on the supplied terms")
    return rec


def extend_forward(rec: Recurrence, w: SeqWindow, hi2: int) -> SeqWindow:
    if len(w.values) < rec.order:
        raise InsufficientDataError(f"window of {len(w.values)} terms is shorter than order {rec.order}")
    if hi2 < w.hi:
        raise ValueError("hi2 must be >= w.hi")
    vals = list(w.values)
    for _ in range(hi2 - w.hi):
        vals.append(rec.next_term(vals))
    return SeqWindow(w.lo, tuple(vals))


def extend_backward(rec: Recurrence, w: SeqWindow, lo2: int) -> SeqWindow:
    if len(w.values) < rec.order:
        raise InsufficientDataError(f"window of {len(w.values)} terms is shorter than order {rec.order}")
    if lo2 > w.lo:
        raise ValueError("lo2 must be <= w.lo")
    vals = deque(w.values)
    for _ in range(w.lo - lo2):
        vals.appendleft(rec.previous_term([vals[i] for i in range(rec.order)]))
    return SeqWindow(lo2, tuple(vals))


def is_integral(w: SeqWindow) -> tuple[bool, int | None]:
    """``(True, None)`` if every value is an integer, else ``(False, largest bad index)``."""
    bad = [n for n, v in w.items() if v.denominator != 1]
    if bad:
        return False, max(bad)
    return True, None
