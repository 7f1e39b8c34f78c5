import itertools
import json

import pytest

from mckaygit.errors import ValidationError
from mckaygit.root_data import apply_iota_affine, build_root_system, involution_iota

ALL_KINDS = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 5),
    ("D", 4), ("D", 5), ("D", 6),
    ("E", 6), ("E", 7), ("E", 8),
]


def brute_positive_roots(cartan, box):
    """Independent oracle: all non-negative norm-2 vectors inside a box."""
    r = len(cartan)
    out = []
    for v in itertools.product(*[range(b + 1) for b in box]):
        if not any(v):
            continue
        q = sum(v[i] * cartan[i][j] * v[j] for i in range(r) for j in range(r))
        if q == 2:
            out.append(v)
    return sorted(out, key=lambda a: (sum(a), a))


@pytest.mark.parametrize("kind,rank", ALL_KINDS)
def test_root_count_and_coxeter(kind, rank):
    data = build_root_system(kind, rank)
    assert 2 * len(data.positive_roots) == rank * data.coxeter_number
    assert data.coxeter_number == sum(data.delta)


@pytest.mark.parametrize("kind,rank", [("A", 1), ("A", 2), ("A", 3), ("D", 4), ("D", 5)])
def test_positive_roots_against_box_oracle(kind, rank):
    data = build_root_system(kind, rank)
    box = tuple(x + 1 for x in data.highest_root)
    assert list(data.positive_roots) == brute_positive_roots(data.cartan_finite, box)


def test_a2_by_hand():
    data = build_root_system("A", 2)
    assert len(data.positive_roots) == 3
    assert data.coxeter_number == 3
    assert data.degrees == (2, 3)
    assert data.highest_root == (1, 1)


def test_d4_derived_values():
    data = build_root_system("D", 4)
    assert len(data.positive_roots) == 12
    assert data.coxeter_number == 2 * 12 // 4
    assert data.degrees == (2, 4, 4, 6)


@pytest.mark.parametrize("kind,rank", ALL_KINDS)
def test_all_roots_have_norm_two(kind, rank):
    data = build_root_system(kind, rank)
    c = data.cartan_finite
    r = rank
    for a in data.positive_roots:
        q = sum(a[i] * c[i][j] * a[j] for i in range(r) for j in range(r))
        assert q == 2


@pytest.mark.parametrize("kind,rank", ALL_KINDS)
def test_degrees_exponents_relation(kind, rank):
    data = build_root_system(kind, rank)
    assert all(d == e + 1 for d, e in zip(data.degrees, data.exponents))
    # exponents pair up to the Coxeter number
    exps = sorted(data.exponents)
    assert all(exps[i] + exps[-1 - i] == data.coxeter_number for i in range(len(exps)))


@pytest.mark.parametrize("kind,rank", ALL_KINDS)
def test_delta_in_affine_radical(kind, rank):
    data = build_root_system(kind, rank)
    ca = data.cartan_affine
    n = rank + 1
    for j in range(n):
        assert sum(data.delta[i] * ca[i][j] for i in range(n)) == 0
    assert data.delta[0] == 1
    assert data.delta[1:] == data.highest_root


def test_iota_tables():
    assert involution_iota(build_root_system("A", 3)) == (0, 3, 2, 1)
    assert involution_iota(build_root_system("A", 1)) == (0, 1)
    assert involution_iota(build_root_system("E", 7)) == tuple(range(8))
    assert involution_iota(build_root_system("E", 8)) == tuple(range(9))
    assert involution_iota(build_root_system("D", 4)) == (0, 1, 2, 3, 4)
    assert involution_iota(build_root_system("D", 5)) == (0, 1, 2, 3, 5, 4)
    assert involution_iota(build_root_system("E", 6)) == (0, 6, 2, 5, 4, 3, 1)


@pytest.mark.parametrize("kind,rank", ALL_KINDS)
def test_iota_preserves_affine_diagram_and_roots(kind, rank):
    data = build_root_system(kind, rank)
    it = data.iota
    n = rank + 1
    ca = data.cartan_affine
    for i in range(n):
        for j in range(n):
            assert ca[it[i]][it[j]] == ca[i][j]
    # iota maps positive roots to positive roots, coordinate-wise on vertices 1..r
    roots = set(data.positive_roots)
    for a in roots:
        image = apply_iota_affine(data, (0,) + a)
        assert image[0] == 0
        assert image[1:] in roots


def test_trivial_kind():
    data = build_root_system("TRIVIAL", 0)
    assert data.positive_roots == ()
    assert data.delta == (1,)
    assert data.coxeter_number == 1
    assert data.cartan_affine == ((0,),)
    assert data.degrees == ()


@pytest.mark.parametrize("kind,rank", [("A", 0), ("D", 3), ("E", 5), ("E", 9), ("B", 2), ("TRIVIAL", 1)])
def test_illegal_pairs_rejected(kind, rank):
    with pytest.raises(ValidationError):
        build_root_system(kind, rank)


def test_json_round_trip_stable():
    data = build_root_system("A", 2)
    blob = json.dumps(data.to_json())
    parsed = json.loads(blob)
    assert list(parsed) == ["kind", "rank", "cartan", "positive_roots", "delta", "h", "degrees", "iota"]
    assert parsed["h"] == 3
    assert json.dumps(build_root_system("A", 2).to_json()) == blob
