"""Acceptance criteria 1-11, all exact.

Run standalone (``python tests/test_acceptance.py``) for one line per
criterion, or under pytest where the same lines appear in the summary.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from mdrecip.enumeration import signed_census, signed_count
from mdrecip.exactmath import MultiPoly, RationalFunction, T, X, Z, ratfun_equal
from mdrecip.recurrence import SeqWindow, extend_backward, extend_forward, is_integral, minimal_recurrence
from mdrecip.reciprocity import (
    check_adjunction,
    check_eq1,
    check_mod2,
    check_reciprocity_I,
    check_reciprocity_II,
    check_stanley_sign,
)
from mdrecip.signed_graph import build_rectangle, cycle, path
from mdrecip.transfer import count_fast, count_sequence, genfunc, series_scalar

RESULTS: dict[int, tuple[bool, str]] = {}

FIB_WINDOW = [-8, 5, -3, 2, -1, 1, 0, 1]
M2_BACK = [1, 0, 1, 0, 3, 2, 11, 14]


def c1_fibonacci():
    fwd = [count_fast(path(1), n) for n in range(1, 7)]
    rec = minimal_recurrence(fwd)
    w = extend_backward(rec, SeqWindow(1, tuple(fwd)), -7)
    back = [w[n] for n in range(-7, 1)]
    return fwd == [1, 2, 3, 5, 8, 13] and back == FIB_WINDOW, f"forward {fwd}, a_-7..a_0 {[int(v) for v in back]}"


def c2_m2_sequence():
    seq = [2, 7, 22, 71, 228, 733, 2356]
    rec = minimal_recurrence(seq)
    w = extend_forward(rec, extend_backward(rec, SeqWindow(1, tuple(seq)), -8), 8)
    back = [w[n] for n in range(0, -8, -1)]
    ok_int, _ = is_integral(w.slice(-8, 8))
    ok = rec.as_strings() == ["3", "1", "-1"] and back == M2_BACK and ok_int
    return ok, f"coeffs {rec.as_strings()}, a_0..a_-7 {[int(v) for v in back]}, integral {ok_int}"


def c3_oracle_equivalence():
    bad = []
    for m in (1, 2, 3):
        seq = count_sequence(path(m), 1, 2 * (1 << m) + 2)
        w = extend_backward(minimal_recurrence(seq), SeqWindow(1, tuple(seq)), -5)
        for n in range(-5, 0):
            if signed_count(build_rectangle(path(m), n)) != w[n]:
                bad.append((m, n))
    return not bad, f"mismatches {bad}"


def c4_census():
    want = [(1, 1), (5, 2), (12, 10), (41, 30), (121, 107)]
    got = []
    pairing = True
    for n in range(-3, -8, -1):
        c = signed_census(build_rectangle(path(2), n))
        got.append((c.positive, c.negative))
        # pos + neg counts the conjugate grid, which reciprocity ties to M(2, -n-2)
        pairing &= c.total == count_fast(path(2), -n - 2)
    return got == want and pairing, f"census {got}, pairing {pairing}"


def c5_reciprocity_I():
    bad = [(str(G), n) for G in (path(1), path(2), path(3), cycle(3)) for n in range(5)
           if not check_reciprocity_I(G, n).passed]
    return not bad, f"failures {bad}"


def c6_adjunction():
    bad = [(str(G), a, b) for G in (path(1), path(2)) for a in range(-3, 4) for b in range(-3, 4)
           if not check_adjunction(G, [a, b]).passed]
    triple = check_adjunction(path(1), [2, -3, 1]).passed
    return not bad and triple, f"pair failures {bad}, triple {triple}"


def c7_eq1():
    bad = [(m, n) for m in (1, 2) for n in range(5) if not check_eq1(m, n).passed]
    counts = {1: [1, 1, 2, 3, 5], 2: [1, 2, 7, 22, 71]}
    spec_ok = all(
        [f.at(1, 1, 1) for f in series_scalar(path(m), 5)] == counts[m] for m in (1, 2)
    )
    return not bad and spec_ok, f"failures {bad}, f_n(1,1,1) {spec_ok}"


def c8_reciprocity_II():
    ok1 = check_reciprocity_II(path(1)).passed
    ok2 = check_reciprocity_II(path(2)).passed
    x, z, t = (MultiPoly.var(k) for k in (X, Z, T))
    closed = ratfun_equal(genfunc(path(1)), RationalFunction(MultiPoly.const(1), 1 - z * t - x * t**2))
    return ok1 and ok2 and closed, f"P1 {ok1}, P2 {ok2}, P1 closed form {closed}"


def c9_stanley():
    verdicts = [check_stanley_sign(m, n) for m in (1, 2, 3, 4) for n in range(5)]
    bad = [(v.params["m"], v.params["n"]) for v in verdicts if not v.passed]
    flips = [v for v in verdicts if v.params["epsilon"] == -1]
    flip_ok = bool(flips) and all(v.passed and v.lhs != "0" for v in flips)
    return not bad and flip_ok, f"failures {bad}, sign-flip cases {len(flips)}"


def c10_negative_control():
    rec = minimal_recurrence([2, 4, 8, 16])
    w = extend_backward(rec, SeqWindow(1, (2, 4, 8, 16)), -1)
    ok, bad = is_integral(w)
    passed = w[0] == 1 and w[-1] == Fraction(1, 2) and not ok and bad == -1
    return passed, f"a_0 {w[0]}, a_-1 {w[-1]}, integral {ok} at {bad}"


def c11_mod2():
    bad = [m for m in (1, 2, 3) if not check_mod2(m, 5).passed]
    return not bad, f"failures {bad}"


CRITERIA = [
    (1, "Fibonacci reproduction", c1_fibonacci),
    (2, "M(2, n) reproduction", c2_m2_sequence),
    (3, "oracle equivalence", c3_oracle_equivalence),
    (4, "census reproduction", c4_census),
    (5, "reciprocity I sweep", c5_reciprocity_I),
    (6, "adjunction sweep", c6_adjunction),
    (7, "polynomial reciprocity", c7_eq1),
    (8, "generating-function reciprocity", c8_reciprocity_II),
    (9, "Stanley specialization", c9_stanley),
    (10, "non-integral control", c10_negative_control),
    (11, "mod-2 congruence", c11_mod2),
]


def report_line(num: int, name: str, ok: bool, detail: str) -> str:
    return f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {name}: {detail}"


@pytest.mark.parametrize("num, name, fn", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn):
    ok, detail = fn()
    RESULTS[num] = (ok, report_line(num, name, ok, detail))
    print(RESULTS[num][1])
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for num, name, fn in CRITERIA:
        ok, detail = fn()
        failed += not ok
        print(report_line(num, name, ok, detail))
    raise SystemExit(1 if failed else 0)
