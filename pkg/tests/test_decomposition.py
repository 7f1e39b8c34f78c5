import itertools

import pytest

from mckaygit.arrangement import (
    build_arrangement,
    enumerate_chambers_in_F,
    reference_chamber_minus,
    stability_from_affine,
)
from mckaygit.decomposition import (
    GENERIC_SMOOTH,
    NON_GENERIC,
    SMOOTH_NOT_GENERIC,
    canonical_decomposition,
    classify_parameter,
    r_theta_plus,
    representation_types,
    sigma_theta,
    sigma_theta_contains,
)
from mckaygit.errors import NotEffectiveError, ValidationError
from mckaygit.framed import enumerate_positive_roots_below, framed_lattice, p_form
from mckaygit.walls import pick_generic_wall_point
from oracles import brute_canonical, brute_sigma_contains


def delta_wall_point(lattice):
    return pick_generic_wall_point(lattice, build_arrangement(lattice)[0])


def test_v_always_in_r_theta_plus():
    L = framed_lattice("A", 2, 2)
    for theta in [reference_chamber_minus(L), delta_wall_point(L)]:
        assert tuple(L.v) in set(r_theta_plus(L, theta, L.v))


def test_r_theta_plus_on_delta_wall():
    L = framed_lattice("A", 2, 3)
    theta = delta_wall_point(L)
    found = set(r_theta_plus(L, theta, L.v))
    expected = set()
    for m in range(1, L.n + 1):
        expected.add(tuple(m * d for d in L.delta))
    for m in range(0, L.n + 1):
        expected.add(tuple(x + m * d for x, d in zip(L.rho("inf"), L.delta)))
    assert found == expected


def test_sigma_on_delta_wall():
    L = framed_lattice("A", 1, 3)
    theta = delta_wall_point(L)
    assert sigma_theta_contains(L, L.delta, theta)
    two_delta = tuple(2 * d for d in L.delta)
    assert not sigma_theta_contains(L, two_delta, theta)
    rho_inf_delta = tuple(x + d for x, d in zip(L.rho("inf"), L.delta))
    assert not sigma_theta_contains(L, rho_inf_delta, theta)
    assert sigma_theta_contains(L, L.rho("inf"), theta)
    assert set(sigma_theta(L, theta, L.v)) == {L.delta, L.rho("inf")}


def test_sigma_real_root_vacuous():
    L = framed_lattice("A", 2, 2)
    theta = pick_generic_wall_point(
        L, next(h for h in build_arrangement(L) if h.tag == "mdelta-alpha")
    )
    gamma = next(
        g for g in r_theta_plus(L, theta, L.v) if p_form(L, g) == 0 and g[0] == 0
    )
    assert sigma_theta_contains(L, gamma, theta)


def test_sigma_requires_membership():
    L = framed_lattice("A", 1, 2)
    theta = reference_chamber_minus(L)
    with pytest.raises(ValidationError):
        sigma_theta_contains(L, L.delta, theta)  # theta(delta) != 0


@pytest.mark.parametrize("kind,rank,n", [("A", 1, 2), ("A", 1, 3), ("A", 2, 2)])
def test_sigma_matches_brute_force(kind, rank, n):
    L = framed_lattice(kind, rank, n)
    thetas = [delta_wall_point(L), stability_from_affine(L, [0] * (rank + 1))]
    for theta in thetas:
        for g in r_theta_plus(L, theta, L.v):
            assert sigma_theta_contains(L, g, theta) == brute_sigma_contains(L, g, theta)


def test_canonical_fast_path_chamber():
    L = framed_lattice("A", 2, 3)
    theta = reference_chamber_minus(L)
    cd = canonical_decomposition(L, L.v, theta)
    assert cd.summands == (L.v,)
    assert cd.p_total == L.n


def test_canonical_fast_path_delta_wall():
    L = framed_lattice("A", 2, 3)
    theta = delta_wall_point(L)
    cd = canonical_decomposition(L, L.v, theta)
    assert sorted(cd.summands) == sorted([L.rho("inf")] + [L.delta] * 3)
    assert cd.p_total == 3


@pytest.mark.parametrize("kind,rank,n", [("A", 1, 2), ("A", 1, 3), ("A", 2, 2)])
def test_canonical_fast_path_vs_brute_maximiser(kind, rank, n):
    L = framed_lattice(kind, rank, n)
    samples = [c.witness for c in enumerate_chambers_in_F(L)]
    samples += [pick_generic_wall_point(L, h) for h in build_arrangement(L)]
    samples.append(stability_from_affine(L, [0] * (rank + 1)))
    for theta in samples:
        fast = canonical_decomposition(L, L.v, theta)
        best = brute_canonical(L, L.v, theta)
        assert best is not None
        assert fast.p_total == best[0]
        assert tuple(sorted(fast.summands)) == best[1]


def test_canonical_general_vector():
    L = framed_lattice("A", 1, 2)
    theta = delta_wall_point(L)
    w = tuple(x + d for x, d in zip(L.rho("inf"), L.delta))  # rho_inf + delta
    cd = canonical_decomposition(L, w, theta)
    assert sorted(cd.summands) == sorted([L.rho("inf"), L.delta])


def test_canonical_not_effective():
    L = framed_lattice("A", 1, 2)
    theta = reference_chamber_minus(L)  # generic: only v pairs to zero
    with pytest.raises(NotEffectiveError):
        canonical_decomposition(L, L.delta, theta)


def test_representation_types_partitions_on_delta_wall():
    L = framed_lattice("A", 1, 3)
    theta = delta_wall_point(L)
    types = representation_types(L, L.v, theta)
    partitions = sorted(
        tuple(m for m, g in t.parts[1:]) for t in types
    )
    assert partitions == [(1, 1, 1), (2, 1), (3,)]
    for t in types:
        mults = [m for m, _ in t.parts[1:]]
        assert t.parts[0] == (1, L.rho("inf"))
        assert t.stratum_dim == 2 * len(mults)


def test_representation_types_real_wall_strata():
    # theta generic in (m*delta - alpha)^perp has N+1 strata, N = max k(k+m) <= n
    L = framed_lattice("A", 1, 4)
    h = next(
        x for x in build_arrangement(L) if x.tag == "mdelta-alpha" and x.m == 1
    )
    theta = pick_generic_wall_point(L, h)
    types = representation_types(L, L.v, theta)
    # N = 1 since 2*(2+1) = 6 > 4
    assert len(types) == 2
    gamma = h.normal
    for t in types:
        mults = dict(
            (tuple(g), m) for m, g in t.parts
        )
        k = mults.get(tuple(gamma), 0)
        assert t.stratum_dim == 2 * (L.n - k * (k + 1))


def test_representation_types_chamber_single():
    L = framed_lattice("A", 2, 2)
    types = representation_types(L, L.v, reference_chamber_minus(L))
    assert len(types) == 1
    assert types[0].parts == ((1, L.v),)
    assert types[0].stratum_dim == 2 * L.n


def test_stratum_dims_bounded_by_open_stratum():
    L = framed_lattice("A", 2, 2)
    theta = delta_wall_point(L)
    types = representation_types(L, L.v, theta)
    dims = sorted(t.stratum_dim for t in types)
    # open stratum (partition 1^n) has full dimension 2n, the rest less
    assert dims[-1] == 2 * L.n
    assert all(d < 2 * L.n for d in dims[:-1])
    theta_gen = reference_chamber_minus(L)
    assert representation_types(L, L.v, theta_gen)[0].stratum_dim == 2 * L.n


def test_classify_parameter():
    L = framed_lattice("A", 2, 2)
    assert classify_parameter(L, reference_chamber_minus(L)).status == GENERIC_SMOOTH
    on_delta = delta_wall_point(L)
    got = classify_parameter(L, on_delta)
    assert got.status == NON_GENERIC
    assert [h.tag for h in got.hyperplanes] == ["delta"]


def test_classify_parameter_n1_refinement():
    L = framed_lattice("A", 2, 1)
    on_delta = delta_wall_point(L)
    assert classify_parameter(L, on_delta).status == SMOOTH_NOT_GENERIC
    alpha_wall = next(h for h in build_arrangement(L) if h.alpha is not None)
    on_alpha = pick_generic_wall_point(L, alpha_wall)
    assert classify_parameter(L, on_alpha).status == NON_GENERIC
    assert classify_parameter(L, reference_chamber_minus(L)).status == GENERIC_SMOOTH
