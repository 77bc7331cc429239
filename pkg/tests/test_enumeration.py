from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdrecip.enumeration import (
    Matching,
    enumerate_matchings,
    matching_poly_formal,
    matching_poly_of,
    matching_poly_scalar,
    matching_weight_formal,
    nonzero_matchings,
    scalar_weight,
    signed_census,
    signed_count,
)
from mdrecip.errors import DomainError, SizeGuardError, ZeroWeightError
from mdrecip.exactmath import MultiPoly, X, Y, Z, xv, yv, zv
from mdrecip.signed_graph import (
    EdgeKind,
    adjoin,
    adjoin_all,
    build_rectangle,
    conjugate,
    cycle,
    path,
)

x, y, z = (MultiPoly.var(k) for k in (X, Y, Z))


def subset_matchings(H):
    """Independent oracle: filter every edge subset."""
    out = []
    for k in range(len(H.edges) + 1):
        for es in combinations(range(len(H.edges)), k):
            ends = [v for e in es for v in (H.edges[e].u, H.edges[e].v)]
            if len(ends) == len(set(ends)):
                out.append(frozenset(es))
    return out


def test_single_vertex_one_matching():
    assert len(list(enumerate_matchings(build_rectangle(path(1), 1)))) == 1


def test_g12_two_matchings():
    assert len(list(enumerate_matchings(build_rectangle(path(1), 2)))) == 2


def test_g22_seven_matchings():
    assert len(list(enumerate_matchings(build_rectangle(path(2), 2)))) == 7


@pytest.mark.parametrize("G", [path(1), path(2), cycle(3)])
@pytest.mark.parametrize("n", [-3, -2, -1, 0, 1, 2, 3])
def test_stream_matches_subset_oracle(G, n):
    H = build_rectangle(G, n)
    got = [mu.edges for mu in enumerate_matchings(H)]
    assert len(got) == len(set(got))
    assert set(got) == set(subset_matchings(H))
    keys = [tuple(sorted(es)) for es in got]
    assert keys == sorted(keys)


@pytest.mark.parametrize("G", [path(1), path(2), path(3), cycle(3)])
@pytest.mark.parametrize("n", [-4, -2, -1, 0, 2, 3])
def test_pruned_walker_agrees_with_stream(G, n):
    H = build_rectangle(G, n)
    if len(H.edges) > 30:
        pytest.skip("beyond the stream guard")
    stream = {mu.edges for mu in enumerate_matchings(H) if scalar_weight(H, mu) != 0}
    walked = [frozenset(es) for es, _ in nonzero_matchings(H)]
    assert len(walked) == len(set(walked))
    assert set(walked) == stream


def test_scalar_weight_examples():
    H = build_rectangle(path(2), 2)
    empty = Matching(frozenset(), frozenset(range(4)))
    assert scalar_weight(H, empty) == 1
    C = conjugate(H)
    assert scalar_weight(C, empty) == 1
    av = next(i for i, e in enumerate(C.edges) if e.kind is EdgeKind.ANTI_VEDGE)
    e = C.edges[av]
    mu = Matching(frozenset({av}), frozenset(range(4)) - {e.u, e.v})
    assert scalar_weight(C, mu) == -1


FIB_BI = {-7: -8, -6: 5, -5: -3, -4: 2, -3: -1, -2: 1, -1: 0, 0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 8}
M2_BI = {-7: 14, -6: 11, -5: 2, -4: 3, -3: 0, -2: 1, -1: 0, 0: 1, 1: 2, 2: 7, 3: 22, 4: 71, 5: 228}


@pytest.mark.parametrize("n", range(-7, 6))
def test_signed_count_fibonacci(n):
    assert signed_count(build_rectangle(path(1), n)) == FIB_BI[n]


def test_signed_count_small_examples():
    assert signed_count(build_rectangle(path(1), -3)) == -1
    assert signed_count(build_rectangle(path(2), -4)) == 3
    assert signed_count(build_rectangle(path(2), 0)) == 1


@pytest.mark.parametrize("n", range(-7, 6))
def test_signed_count_m2(n):
    assert signed_count(build_rectangle(path(2), n)) == M2_BI[n]


@pytest.mark.parametrize(
    "n, census", [(-4, (5, 2)), (-5, (12, 10)), (2, (7, 0))]
)
def test_census_examples(n, census):
    c = signed_census(build_rectangle(path(2), n))
    assert (c.positive, c.negative) == census


@pytest.mark.parametrize("G", [path(1), path(2), path(3), cycle(3), cycle(4)])
@pytest.mark.parametrize("n", [-4, -3, -1, 0, 1, 2, 3])
def test_census_consistent_with_count(G, n):
    H = build_rectangle(G, n)
    c = signed_census(H)
    assert c.signed == signed_count(H)
    if n > 0:
        assert c.negative == 0
    if len(H.edges) <= 14:
        assert c.total == sum(1 for mu in enumerate_matchings(H) if scalar_weight(H, mu))


def test_figure_weight_positive():
    H = build_rectangle(path(2), 3)
    # hedge x[1,2], vedge y[1,1]; z[2,2], z[2,3] uncovered; everything else covered
    want = {("h", 0, 2), ("v", 0, 1)}
    es = set()
    for i, e in enumerate(H.edges):
        tag = ("h" if e.kind is EdgeKind.HEDGE else "v", e.label[0], e.label[1])
        if tag in want:
            es.add(i)
    covered = {v for i in es for v in (H.edges[i].u, H.edges[i].v)}
    mu = Matching(frozenset(es), frozenset(range(len(H.vertices))) - covered)
    expected = MultiPoly.var(xv(1, 2)) * MultiPoly.var(yv(1, 1)) * MultiPoly.var(zv(2, 2)) * MultiPoly.var(zv(2, 3))
    assert matching_weight_formal(H, mu) == expected


def test_figure_weight_negative():
    H = build_rectangle(path(2), -5)
    boundary = {i for i, e in enumerate(H.edges) if e.boundary}
    picks = set(boundary)
    for i, e in enumerate(H.edges):
        if e.kind is EdgeKind.ANTI_VEDGE and e.label == (0, -1):
            picks.add(i)
        if e.kind is EdgeKind.HEDGE and not e.boundary and e.label == (0, -3):
            picks.add(i)
    covered = {v for i in picks for v in (H.edges[i].u, H.edges[i].v)}
    mu = Matching(frozenset(picks), frozenset(range(len(H.vertices))) - covered)
    num = MultiPoly.var(yv(1, -1)) * MultiPoly.var(zv(2, -2)) * MultiPoly.var(zv(2, -3))
    den = MultiPoly.const(1)
    for k in (xv(1, -1), xv(1, -2), xv(1, -4), xv(2, -1), xv(2, -2), xv(2, -3), xv(2, -4)):
        den = den * MultiPoly.var(k)
    # three sgn(j) = -1 factors: one vedge and two vertices
    assert matching_weight_formal(H, mu) == -num * den.inverse_monomial()


def test_forced_weight_g1_minus2():
    H = build_rectangle(path(1), -2)
    (es, un), = list(nonzero_matchings(H))
    mu = Matching(frozenset(es), frozenset(un))
    assert matching_weight_formal(H, mu) == MultiPoly.var(xv(1, -1), -1)


def test_zero_weight_flagged():
    H = build_rectangle(path(1), -2)
    empty = Matching(frozenset(), frozenset(range(len(H.vertices))))
    with pytest.raises(ZeroWeightError):
        matching_weight_formal(H, empty)


def test_formal_requires_rectangle():
    H = adjoin(build_rectangle(path(1), 1), build_rectangle(path(1), 1))
    with pytest.raises(DomainError):
        matching_poly_of(H)


def test_formal_polys_m1():
    z11, z12, z13 = (MultiPoly.var(zv(1, j)) for j in (1, 2, 3))
    x11, x12 = MultiPoly.var(xv(1, 1)), MultiPoly.var(xv(1, 2))
    assert matching_poly_formal(1, 1) == z11
    assert matching_poly_formal(1, 2) == z11 * z12 + x11
    assert matching_poly_formal(1, 3) == z13 * (z11 * z12 + x11) + x12 * z11


@pytest.mark.parametrize("n", range(2, 7))
def test_m1_polynomial_recurrence(n):
    f = {k: matching_poly_formal(1, k) for k in (n - 2, n - 1, n)}
    assert f[n] == MultiPoly.var(zv(1, n)) * f[n - 1] + MultiPoly.var(xv(1, n - 1)) * f[n - 2]


def test_scalar_examples():
    assert matching_poly_scalar(path(1), 2) == z**2 + x
    assert matching_poly_scalar(path(1), -3) == -z * x**-2
    # a hedge and a vedge of the 2 x 2 grid always share a vertex: no x*y term
    f2 = matching_poly_scalar(path(2), 2)
    assert f2 == z**4 + 2 * x * z**2 + 2 * y * z**2 + x**2 + y**2
    assert f2.at(1, 1, 1) == 7


@pytest.mark.parametrize("G", [path(1), path(2), path(3), cycle(3)])
@pytest.mark.parametrize("n", [-4, -2, -1, 0, 1, 3])
def test_scalar_is_collapse_and_specializes(G, n):
    H = build_rectangle(G, n)
    p = matching_poly_scalar(G, n)
    assert p == matching_poly_of(H).collapse_uniform()
    assert p.at(1, 1, 1) == signed_count(H)
    perfect = sum(
        1 if not un else 0 for es, un in nonzero_matchings(H)
    )
    signed_perfect = sum(
        (-1) ** sum(H.edges[e].kind is EdgeKind.ANTI_VEDGE for e in es) for es, un in nonzero_matchings(H) if not un
    )
    assert p.at(1, 1, 0) == signed_perfect
    if n > 0:
        assert all(c > 0 for c in p.terms.values())
        assert p.at(1, 1, 0) == perfect


def test_guards():
    with pytest.raises(SizeGuardError):
        list(enumerate_matchings(build_rectangle(path(3), 8)))
    with pytest.raises(SizeGuardError):
        signed_count(build_rectangle(path(5), -9))
    assert signed_count(build_rectangle(path(3), 8), max_edges=40) > 0


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([path(1), path(2)]), st.integers(-3, 3), st.integers(-3, 3))
def test_adjunction_oracle_scale(G, n1, n2):
    assert signed_count(adjoin_all(G, [n1, n2])) == signed_count(build_rectangle(G, n1 + n2))


@pytest.mark.parametrize("G", [path(1), path(2)])
@pytest.mark.parametrize("n1, n2", [(1, -1), (2, -1), (1, -3), (3, -2), (2, -4)])
def test_adjoin_shift_invariance(G, n1, n2):
    a = signed_count(adjoin_all(G, [n1, n2]))
    if n1 - 1 > 0 and n2 + 1 < 0:
        assert a == signed_count(adjoin_all(G, [n1 - 1, n2 + 1]))
    assert a == signed_count(build_rectangle(G, n1 + n2))
