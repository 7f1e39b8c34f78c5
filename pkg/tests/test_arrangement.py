from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mckaygit.arrangement import (
    Chamber,
    OnWall,
    build_arrangement,
    chamber_facets,
    chamber_touches_delta_wall,
    count_chambers_formula,
    count_chambers_total,
    enumerate_chambers_in_F,
    locate,
    reference_chamber_minus,
    reference_chamber_plus,
    slice_polygons,
    stability_from_affine,
    stability_from_framed,
)
from mckaygit.errors import ResourceCapError, ValidationError
from mckaygit.framed import framed_lattice

COUNT_SUITE = [
    ("A", 1, 1, 1), ("A", 1, 2, 2), ("A", 1, 3, 3),
    ("A", 1, 4, 4), ("A", 1, 5, 5), ("A", 1, 6, 6),
    ("A", 2, 1, 1), ("A", 2, 2, 5), ("A", 2, 3, 12), ("A", 2, 4, 22),
    ("A", 3, 1, 1), ("A", 3, 2, 14), ("A", 3, 3, 55),
    ("D", 4, 1, 1), ("D", 4, 2, 50),
]


def test_stability_normalisation():
    L = framed_lattice("A", 2, 4)
    theta = stability_from_affine(L, [Fraction(1, 8) - 2, 1, 1])
    assert theta(L.v) == 0
    # primitive integers, scale-invariant signs
    from math import gcd
    g = 0
    for x in theta.values:
        g = gcd(g, abs(x))
    assert g == 1


@given(
    vals=st.lists(st.integers(-20, 20), min_size=3, max_size=3),
    num=st.integers(1, 9),
    den=st.integers(1, 9),
)
@settings(max_examples=80, deadline=None)
def test_stability_scaling_invariance(vals, num, den):
    L = framed_lattice("A", 2, 2)
    theta = stability_from_affine(L, vals)
    scale = Fraction(num, den)
    scaled = stability_from_affine(L, [scale * x for x in vals])
    assert scaled.values == theta.values


def test_stability_framed_validation():
    L = framed_lattice("A", 1, 1)
    with pytest.raises(ValidationError):
        stability_from_framed(L, (1, 1, 1))
    theta = stability_from_framed(L, (-2, 1, 1))
    assert theta(L.v) == 0


@pytest.mark.parametrize(
    "kind,rank,n,size",
    [("A", 1, 1, 2), ("A", 1, 2, 4), ("A", 2, 4, 22), ("A", 3, 2, 19), ("D", 4, 2, 37)],
)
def test_arrangement_size(kind, rank, n, size):
    L = framed_lattice(kind, rank, n)
    arr = build_arrangement(L)
    assert len(arr) == size
    assert len(arr) == 1 + len(L.root_data.positive_roots) * (2 * n - 1)
    assert len({h.normal for h in arr}) == size
    # sign normalisation: first non-zero coordinate positive
    for h in arr:
        lead = next(x for x in h.normal if x != 0)
        assert lead > 0


def test_locate_reference_chambers():
    L = framed_lattice("A", 2, 4)
    cm = locate(L, reference_chamber_minus(L))
    cp = locate(L, reference_chamber_plus(L))
    assert isinstance(cm, Chamber) and cm.in_F
    assert isinstance(cp, Chamber) and cp.in_F
    assert all(s > 0 for s in cp.signs)
    # C- is negative exactly on the internal hyperplanes (m*delta - alpha, m > 0)
    arr = build_arrangement(L)
    for h, s in zip(arr, cm.signs):
        expected = -1 if (h.tag == "mdelta-alpha" and h.m > 0) else 1
        assert s == expected
    assert cm.signs != cp.signs


def test_locate_zero_on_all_walls():
    L = framed_lattice("A", 2, 2)
    res = locate(L, stability_from_affine(L, [0, 0, 0]))
    assert isinstance(res, OnWall)
    assert len(res.hyperplanes) == len(build_arrangement(L))


def test_locate_on_single_wall():
    L = framed_lattice("A", 1, 2)
    # theta(delta) = 0 only: theta_0 = -1, theta_1 = 1
    res = locate(L, stability_from_affine(L, [-1, 1]))
    assert isinstance(res, OnWall)
    assert [h.tag for h in res.hyperplanes] == ["delta"]


def test_locate_constant_on_chamber():
    L = framed_lattice("A", 2, 3)
    arr = build_arrangement(L)
    bound = max(max(abs(x) for x in h.normal) for h in arr)
    for chamber in enumerate_chambers_in_F(L):
        w = chamber.witness
        for j in range(1, L.rank + 2):
            vals = [(bound + 1) * x for x in w.affine_values]
            vals[j - 1] += 1
            perturbed = stability_from_affine(L, vals)
            again = locate(L, perturbed, arr)
            assert isinstance(again, Chamber)
            assert again.signs == chamber.signs


@pytest.mark.parametrize("kind,rank,n,expected", COUNT_SUITE)
def test_chamber_count_formula_vs_enumeration(kind, rank, n, expected):
    L = framed_lattice(kind, rank, n)
    assert count_chambers_formula(L) == expected
    assert len(enumerate_chambers_in_F(L)) == expected


def test_total_chamber_count():
    L = framed_lattice("A", 2, 4)
    assert count_chambers_total(L) == 2 * 6 * 22 == 264


def test_witnesses_strictly_inside_F():
    L = framed_lattice("A", 2, 3)
    arr = build_arrangement(L)
    for chamber in enumerate_chambers_in_F(L):
        theta = chamber.witness
        assert theta(L.delta) > 0
        for i in range(1, L.rank + 1):
            assert theta(L.rho(i)) > 0
        # only internal hyperplanes may separate chambers of F
        for h, s in zip(arr, chamber.signs):
            assert theta(h.normal) * s > 0
            if not (h.tag == "mdelta-alpha" and h.m > 0):
                assert s > 0


def test_chambers_in_F_distinct_and_sorted():
    L = framed_lattice("A", 2, 4)
    chambers = enumerate_chambers_in_F(L)
    signs = [c.signs for c in chambers]
    assert signs == sorted(signs)
    assert len(set(signs)) == len(signs)


def test_adjacency_graph_connected():
    L = framed_lattice("A", 2, 4)
    arr = build_arrangement(L)
    chambers = enumerate_chambers_in_F(L)
    facet_sets = [
        {h.normal for h in chamber_facets(L, c, arr)} for c in chambers
    ]
    edges = {i: set() for i in range(len(chambers))}
    for i in range(len(chambers)):
        for j in range(i + 1, len(chambers)):
            diff = [
                k for k in range(len(arr))
                if chambers[i].signs[k] != chambers[j].signs[k]
            ]
            if len(diff) == 1:
                normal = arr[diff[0]].normal
                if normal in facet_sets[i] and normal in facet_sets[j]:
                    edges[i].add(j)
                    edges[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in edges[i] - seen:
            seen.add(j)
            stack.append(j)
    assert len(seen) == len(chambers)


def test_resource_cap_fails_loudly():
    L = framed_lattice("A", 2, 4)
    with pytest.raises(ResourceCapError):
        enumerate_chambers_in_F(L, max_regions=5)


def test_jobs_parallel_enumeration_deterministic():
    L = framed_lattice("A", 2, 3)
    assert [c.signs for c in enumerate_chambers_in_F(L, jobs=4)] == [
        c.signs for c in enumerate_chambers_in_F(L, jobs=1)
    ]


def test_trivial_kind_short_circuit():
    L = framed_lattice("TRIVIAL", 0, 3)
    chambers = enumerate_chambers_in_F(L)
    assert len(chambers) == 1
    assert chambers[0].in_F
    assert count_chambers_total(L) == 2
    with pytest.raises(ValidationError):
        count_chambers_formula(L)


def test_figure_slice_structure():
    L = framed_lattice("A", 2, 4)
    regions = slice_polygons(L)
    assert len(regions) == 22
    assert sum(1 for r in regions if r["unbounded"]) == 7
    labels = {r["label"] for r in regions if r["label"]}
    assert labels == {"C-", "C+"}
    minus = next(r for r in regions if r["label"] == "C-")
    plus = next(r for r in regions if r["label"] == "C+")
    assert minus["unbounded"] and not plus["unbounded"]
    # C+ is the triangle x,y>0, x+y<1
    assert sorted(plus["vertices"]) == [(0, 0), (0, 1), (1, 0)]


def test_slice_polygons_rank_guard():
    with pytest.raises(ValidationError):
        slice_polygons(framed_lattice("A", 3, 2))


def test_touches_delta_wall_counts():
    L = framed_lattice("A", 2, 4)
    chambers = enumerate_chambers_in_F(L)
    assert sum(chamber_touches_delta_wall(L, c) for c in chambers) == 7
