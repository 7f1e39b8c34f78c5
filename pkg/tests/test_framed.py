import itertools

import pytest

from mckaygit.errors import ValidationError
from oracles import kac_oracle

from mckaygit.framed import (
    cartan_pairing,
    enumerate_positive_roots_below,
    framed_lattice,
    p_form,
)


@pytest.fixture(scope="module")
def a1n2():
    return framed_lattice("A", 1, 2)


def test_cartan_pairing_examples(a1n2):
    L = a1n2
    for i in ["inf", 0, 1]:
        assert cartan_pairing(L, L.rho(i), L.rho(i)) == 2
    assert cartan_pairing(L, L.rho(0), L.rho("inf")) == -1
    assert cartan_pairing(L, L.delta, L.delta) == 0
    assert cartan_pairing(L, L.rho("inf"), L.v) == 2 - L.n


def test_p_form_examples():
    for kind, rank, n in [("A", 1, 1), ("A", 2, 3), ("D", 4, 2), ("TRIVIAL", 0, 4)]:
        L = framed_lattice(kind, rank, n)
        assert p_form(L, L.delta) == 1
        assert p_form(L, L.v) == n
        for alpha in L.root_data.positive_roots:
            assert p_form(L, L.finite_root_framed(alpha)) == 0


def test_pairing_dimension_mismatch(a1n2):
    with pytest.raises(ValidationError):
        cartan_pairing(a1n2, (1, 0), (0, 1, 0))


@pytest.mark.parametrize(
    "kind,rank,n",
    [(k, r, n) for (k, r) in [("A", 1), ("A", 2), ("A", 3)] for n in (1, 2, 3)],
)
def test_enumeration_matches_kac_oracle(kind, rank, n):
    L = framed_lattice(kind, rank, n)
    fast = set(enumerate_positive_roots_below(L, L.v))
    brute = set()
    for g in itertools.product(*[range(b + 1) for b in L.v]):
        if any(g) and kac_oracle(L.cartan, g):
            brute.add(g)
    assert fast == brute


def test_a1_n1_root_list_frozen():
    L = framed_lattice("A", 1, 1)
    roots = enumerate_positive_roots_below(L, L.v)
    assert sorted(roots) == [
        (0, 0, 1),  # rho_1
        (0, 1, 0),  # rho_0 = delta - rho_1
        (0, 1, 1),  # delta
        (1, 0, 0),  # rho_inf
        (1, 1, 0),  # rho_inf + delta - rho_1
        (1, 1, 1),  # rho_inf + delta
    ]


@pytest.mark.parametrize("kind,rank,n", [("A", 1, 3), ("A", 2, 2), ("D", 4, 2)])
def test_rho_inf_and_v_are_roots(kind, rank, n):
    L = framed_lattice(kind, rank, n)
    roots = set(enumerate_positive_roots_below(L, L.v))
    assert L.rho("inf") in roots
    assert L.v in roots


@pytest.mark.parametrize("kind,rank,n", [("A", 2, 2), ("A", 3, 2), ("D", 4, 2)])
def test_p_nonnegative_and_frenkel_kac_parameter(kind, rank, n):
    L = framed_lattice(kind, rank, n)
    delta = L.root_data.delta
    for g in enumerate_positive_roots_below(L, L.v):
        p = p_form(L, g)
        assert p >= 0
        if g[0] == 1:
            # p recovers the delta-multiple of the Frenkel-Kac form
            nu = [g[1] * delta[1 + i] - g[2 + i] for i in range(rank)]
            c = L.root_data.cartan_finite
            q2 = sum(nu[i] * c[i][j] * nu[j] for i in range(rank) for j in range(rank))
            assert g[1] == p + q2 // 2


def test_finite_pairing_positive_definite():
    L = framed_lattice("A", 3, 2)
    c = L.root_data.cartan_finite
    for nu in itertools.product(range(-2, 3), repeat=3):
        q = sum(nu[i] * c[i][j] * nu[j] for i in range(3) for j in range(3))
        if any(nu):
            assert q > 0


def test_bound_with_framing_two_rejected():
    L = framed_lattice("A", 1, 2)
    with pytest.raises(ValidationError):
        enumerate_positive_roots_below(L, (2, 2, 2))


def test_negative_bound_gives_nothing():
    L = framed_lattice("A", 1, 2)
    assert enumerate_positive_roots_below(L, (1, -1, 0)) == ()


def test_trivial_lattice_roots():
    L = framed_lattice("TRIVIAL", 0, 3)
    roots = enumerate_positive_roots_below(L, L.v)
    assert set(roots) == {(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3)}
    assert p_form(L, (1, 3)) == 3


def test_n_zero_rejected():
    with pytest.raises(ValidationError):
        framed_lattice("A", 1, 0)
