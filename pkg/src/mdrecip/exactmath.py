"""Exact arithmetic: sparse Laurent polynomials, characteristic polynomials,
and rational functions in ``t``.

Integers are Python ints and rationals are :class:`fractions.Fraction`; the
only types defined here are the polynomial ones. Nothing in this module ever
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import NotPowerSeriesError, ShapeError, SubstitutionError

__all__ = [
    "VarKey",
    "MultiPoly",
    "RationalFunction",
    "X",
    "Y",
    "Z",
    "T",
    "xv",
    "yv",
    "zv",
    "poly_substitute",
    "char_poly",
    "det",
    "poly_in_t",
    "t_coeffs",
    "ratfun_equal",
    "series_coeffs",
]


class VarKey(NamedTuple):
    """A variable symbol. ``indexed=False`` means the uniform x, y, z (or t)."""

    kind: str  # one of "x", "y", "z", "t"
    row: int = 0
    col: int = 0
    indexed: bool = False

    def __str__(self) -> str:
        if self.indexed:
            return f"{self.kind}[{self.row},{self.col}]"
        return self.kind

    def uniform(self) -> "VarKey":
        return VarKey(self.kind)


X = VarKey("x")
Y = VarKey("y")
Z = VarKey("z")
T = VarKey("t")

_KINDS = ("x", "y", "z", "t")


def xv(i: int, j: int) -> VarKey:
    return VarKey("x", i, j, True)


def yv(i: int, j: int) -> VarKey:
    return VarKey("y", i, j, True)


def zv(i: int, j: int) -> VarKey:
    return VarKey("z", i, j, True)


Monomial = tuple  # sorted tuple of (VarKey, nonzero int exponent)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for k, e in b:
        s = d.get(k, 0) + e
        if s:
            d[k] = s
        else:
            del d[k]
    return tuple(sorted(d.items()))


def _check_mono(mono: Monomial) -> None:
    for k, e in mono:
        if k.kind not in _KINDS:
            raise ValueError(f"unknown variable kind {k.kind!r}")
        if e < 0 and k.kind != "x":
            raise ValueError(f"negative exponent on {k}: only x-variables may be Laurent")


class MultiPoly:
    """Sparse multivariate Laurent polynomial with integer coefficients.

    Stored as ``{monomial: coefficient}`` where a monomial is a sorted tuple of
    ``(VarKey, exponent)`` pairs. Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None, *, _trusted: bool = False):
        if _trusted:
            self.terms = terms
            return
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted((k, e) for k, e in mono if e))
            _check_mono(mono)
            c = clean.get(mono, 0) + int(c)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.terms = clean

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(): c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, key: VarKey, exp: int = 1) -> "MultiPoly":
        return cls({((key, exp),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[VarKey, int], coeff: int = 1) -> "MultiPoly":
        return cls({tuple(exps.items()): coeff})

    @staticmethod
    def coerce(other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        if isinstance(other, Fraction) and other.denominator == 1:
            return MultiPoly.const(other.numerator)
        raise TypeError(f"cannot coerce {type(other).__name__} to MultiPoly")

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def variables(self) -> set[VarKey]:
        return {k for mono in self.terms for k, _ in mono}

    # -- ring operations ------------------------------------------------
    def __add__(self, other) -> "MultiPoly":
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                del out[mono]
        return MultiPoly(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return MultiPoly.coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            if other == 0:
                return MultiPoly()
            return MultiPoly({m: c * other for m, c in self.terms.items()}, _trusted=True)
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MultiPoly(out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            return self.inverse_monomial() ** (-k)
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse_monomial(self) -> "MultiPoly":
        """Inverse of ``±monomial``; anything else is not invertible here."""
        if not self.is_monomial():
            raise SubstitutionError(f"{self} is not a single monomial")
        (mono, c), = self.terms.items()
        if c not in (1, -1):
            raise SubstitutionError(f"{self} has non-unit coefficient")
        inv = tuple((k, -e) for k, e in mono)
        _check_mono(inv)
        return MultiPoly({inv: c}, _trusted=True)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other) -> bool:
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- evaluation and views -------------------------------------------
    def evaluate(self, assign: Mapping[VarKey, Fraction | int]) -> Fraction:
        """Evaluate at rational values; every variable present must be assigned."""
        total = Fraction(0)
        for mono, c in self.terms.items():
            v = Fraction(c)
            for k, e in mono:
                v *= Fraction(assign[k]) ** e
            total += v
        return total

    def at(self, x=1, y=1, z=1, t=None) -> Fraction:
        """Evaluate with uniform values; indexed variables take the value of their kind."""
        vals = {"x": x, "y": y, "z": z, "t": t}
        total = Fraction(0)
        for mono, c in self.terms.items():
            v = Fraction(c)
            for k, e in mono:
                if vals[k.kind] is None:
                    raise KeyError(f"no value for {k}")
                v *= Fraction(vals[k.kind]) ** e
            total += v
        return total

    def collapse_uniform(self) -> "MultiPoly":
        """Replace every indexed x[i,j], y[i,j], z[i,j] by the uniform x, y, z."""
        out: dict[Monomial, int] = {}
        for mono, c in self.terms.items():
            d: dict[VarKey, int] = {}
            for k, e in mono:
                u = k.uniform()
                d[u] = d.get(u, 0) + e
            m = tuple(sorted((k, e) for k, e in d.items() if e))
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return MultiPoly(out, _trusted=True)

    def degree(self, key: VarKey) -> int:
        """Highest exponent of ``key``; 0 for the zero polynomial."""
        return max((dict(m).get(key, 0) for m in self.terms), default=0)

    def min_degree(self, key: VarKey) -> int:
        return min((dict(m).get(key, 0) for m in self.terms), default=0)

    def coeffs_in(self, key: VarKey) -> dict[int, "MultiPoly"]:
        """Split into ``{exponent of key: coefficient polynomial}``."""
        parts: dict[int, dict[Monomial, int]] = {}
        for mono, c in self.terms.items():
            e = 0
            rest = []
            for k, ex in mono:
                if k == key:
                    e = ex
                else:
                    rest.append((k, ex))
            parts.setdefault(e, {})[tuple(rest)] = c
        return {e: MultiPoly(d, _trusted=True) for e, d in parts.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in sorted(self.terms.items(), key=_term_sort_key):
            body = "*".join(str(k) if e == 1 else f"{k}^{e}" for k, e in mono)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append("-" + body)
            else:
                pieces.append(f"{c}*{body}")
        s = " + ".join(pieces)
        return s.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _term_sort_key(item):
    mono, _ = item
    total = sum(e for _, e in mono)
    return (-total, [(str(k), -e) for k, e in mono])


def poly_substitute(p: MultiPoly, mapping: Mapping[VarKey, MultiPoly | int]) -> MultiPoly:
    """Replace variables by polynomials and expand.

    Variables absent from ``mapping`` are left alone. A variable carrying a
    negative exponent must map to a ``±monomial`` so the inverse exists.
    """
    images = {k: MultiPoly.coerce(v) for k, v in mapping.items()}
    powers: dict[tuple[VarKey, int], MultiPoly] = {}
    total = MultiPoly()
    for mono, c in p.terms.items():
        term = MultiPoly.const(c)
        for k, e in mono:
            img = images.get(k)
            if img is None:
                term = term * MultiPoly({((k, e),): 1}, _trusted=True)
                continue
            key = (k, e)
            if key not in powers:
                if e < 0 and not img.is_monomial():
                    raise SubstitutionError(
                        f"{k} appears with exponent {e} but its image {img} is not a monomial"
                    )
                powers[key] = img**e
            term = term * powers[key]
        total = total + term
    return total


def char_poly(M: Sequence[Sequence]) -> list:
    """Coefficients ``[1, a1, ..., aN]`` of ``det(lambda*I - M)``, highest degree first.

    Berkowitz's algorithm: division-free, so it is exact over any commutative
    ring (ints, Fractions, MultiPoly).
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ShapeError("char_poly needs a square matrix")
    vect: list = [1]
    for k in range(n):
        # leading (k+1)x(k+1) block: [[A, C], [R, a]]
        a = M[k][k]
        R = [M[k][j] for j in range(k)]
        C = [M[i][k] for i in range(k)]
        q = [1, -a]
        cur = C
        for _ in range(k):
            q.append(-_dot(R, cur))
            cur = [_dot(M[i][:k], cur) for i in range(k)]
        new = []
        for i in range(k + 2):
            s = 0
            for j in range(max(0, i - len(q) + 1), min(i, k) + 1):
                s = s + q[i - j] * vect[j]
            new.append(s)
        vect = new
    return vect


def _dot(u: Sequence, v: Sequence):
    s = 0
    for a, b in zip(u, v):
        s = s + a * b
    return s


def det(M: Sequence[Sequence]):
    n = len(M)
    c = char_poly(M)[n]
    return c if n % 2 == 0 else -c


def poly_in_t(coeffs: Iterable) -> MultiPoly:
    """``sum(c_k * t**k)`` for ascending coefficients."""
    out = MultiPoly()
    for k, c in enumerate(coeffs):
        term = MultiPoly.coerce(c)
        if k:
            term = term * MultiPoly.var(T, k)
        out = out + term
    return out


def t_coeffs(p: MultiPoly) -> list[MultiPoly]:
    """Ascending coefficients of ``p`` as a polynomial in ``t``."""
    parts = p.coeffs_in(T)
    if any(e < 0 for e in parts):
        raise ValueError("negative power of t")
    deg = max(parts, default=0)
    return [parts.get(e, MultiPoly()) for e in range(deg + 1)]


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """``numer / denom`` with both sides polynomials in t over Z[x^±1, y, z]."""

    numer: MultiPoly
    denom: MultiPoly

    def __post_init__(self):
        object.__setattr__(self, "numer", MultiPoly.coerce(self.numer))
        object.__setattr__(self, "denom", MultiPoly.coerce(self.denom))
        if self.denom.is_zero():
            raise ZeroDivisionError("zero denominator")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return ratfun_equal(self, other)

    __hash__ = None

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return RationalFunction(self.numer * other.numer, self.denom * other.denom)
        return RationalFunction(self.numer * MultiPoly.coerce(other), self.denom)

    __rmul__ = __mul__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numer, self.denom)

    def substitute(self, mapping: Mapping[VarKey, MultiPoly | int]) -> "RationalFunction":
        return RationalFunction(poly_substitute(self.numer, mapping), poly_substitute(self.denom, mapping))

    def at(self, x=1, y=1, z=1, t=0) -> Fraction:
        return self.numer.at(x, y, z, t) / self.denom.at(x, y, z, t)

    def __str__(self) -> str:
        return f"({self.numer}) / ({self.denom})"


def ratfun_equal(a: RationalFunction, b: RationalFunction) -> bool:
    return a.numer * b.denom == b.numer * a.denom


def series_coeffs(f: RationalFunction, count: int) -> list[MultiPoly]:
    """First ``count`` Taylor coefficients of ``f`` around ``t = 0``."""
    if count < 0:
        raise ValueError("count must be >= 0")
    num = t_coeffs(f.numer)
    den = t_coeffs(f.denom)
    d0 = den[0]
    if d0.is_zero():
        raise NotPowerSeriesError("denominator vanishes at t = 0")
    try:
        inv = d0.inverse_monomial()
    except SubstitutionError as exc:
        raise NotPowerSeriesError(f"constant term {d0} is not invertible") from exc
    out: list[MultiPoly] = []
    for n in range(count):
        acc = num[n] if n < len(num) else MultiPoly()
        for k in range(1, min(n, len(den) - 1) + 1):
            acc = acc - den[k] * out[n - k]
        out.append(acc * inv)
    return out
