"""The Namikawa Weyl group acting on the stability space.

The group W = <s_delta, s_1, ..., s_r> is isomorphic to S_2 x W_Gamma and
acts on the coordinates (theta_0, ..., theta_r); the framing value
theta_inf is recomputed from theta(v) = 0 after every move.  The cone
F = <delta, rho_1..rho_r>^dual is a fundamental domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arrangement import StabilityParameter, stability_from_affine
from .errors import ValidationError
from .framed import FramedLattice
from .linalg import identity_matrix, mat_mul, mat_vec
from .root_data import RootSystemData

S_DELTA = "s_delta"


@dataclass(frozen=True)
class WeylElement:
    """A group element: a word in the generators and its matrix on (theta_0..theta_r)."""

    word: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]

    def to_json(self) -> list:
        return list(self.word)


def _generator_matrix(data: RootSystemData, label: str) -> tuple[tuple[int, ...], ...]:
    r = data.rank
    if label == S_DELTA:
        rows = [list(row) for row in identity_matrix(r + 1)]
        for j in range(r + 1):
            rows[0][j] -= 2 * data.delta[j]
        return tuple(tuple(row) for row in rows)
    i = int(label.split("_")[1])
    if not 1 <= i <= r:
        raise ValidationError("unknown generator %r" % label)
    rows = [list(row) for row in identity_matrix(r + 1)]
    for j in range(r + 1):
        rows[j][i] -= data.cartan_affine[i][j]
    return tuple(tuple(row) for row in rows)


def generator_labels(data: RootSystemData) -> tuple[str, ...]:
    return (S_DELTA,) + tuple("s_%d" % i for i in range(1, data.rank + 1))


def generator(data: RootSystemData, label: str) -> WeylElement:
    return WeylElement(word=(label,), matrix=_generator_matrix(data, label))


def identity_element(data: RootSystemData) -> WeylElement:
    return WeylElement(word=(), matrix=identity_matrix(data.rank + 1))


def compose(data: RootSystemData, w1: WeylElement, w2: WeylElement) -> WeylElement:
    """The element acting as w1 after w2."""
    return WeylElement(word=w1.word + w2.word, matrix=mat_mul(w1.matrix, w2.matrix))


def inverse(data: RootSystemData, w: WeylElement) -> WeylElement:
    """Generators are involutions, so the inverse word is the reverse."""
    out = identity_element(data)
    for label in reversed(w.word):
        out = compose(data, out, generator(data, label))
    return out


def element_from_word(data: RootSystemData, word) -> WeylElement:
    out = identity_element(data)
    for label in word:
        out = compose(data, out, generator(data, label))
    return out


def apply(lattice: FramedLattice, w: WeylElement, theta: StabilityParameter) -> StabilityParameter:
    """The dual action of w on a stability parameter."""
    new_affine = mat_vec(w.matrix, theta.affine_values)
    return stability_from_affine(lattice, new_affine)


def coweight_coordinates(lattice: FramedLattice, theta: StabilityParameter):
    """(theta(delta), theta(rho_1), ..., theta(rho_r)): the F-defining values."""
    vals = [theta(lattice.delta)]
    for i in range(1, lattice.rank + 1):
        vals.append(theta(lattice.rho(i)))
    return tuple(vals)


def reduce_to_F(
    lattice: FramedLattice, theta: StabilityParameter
) -> tuple[WeylElement, StabilityParameter]:
    """Greedy reduction into the fundamental domain.

    While an inequality defining F fails strictly, the corresponding
    generator is applied (s_delta for theta(delta) < 0, s_i for
    theta(rho_i) < 0, lowest label first).  For generic theta the returned
    element is the unique one moving the chamber of theta into F; on the
    boundary of F one valid representative is returned.
    """
    data = lattice.root_data
    w = identity_element(data)
    current = theta
    cap = 8 * data.weyl_order + 8
    for _ in range(cap):
        coords = coweight_coordinates(lattice, current)
        if coords[0] < 0:
            label = S_DELTA
        else:
            bad = next((i for i in range(1, lattice.rank + 1) if coords[i] < 0), None)
            if bad is None:
                return w, current
            label = "s_%d" % bad
        g = generator(data, label)
        current = apply(lattice, g, current)
        w = compose(data, g, w)
    raise AssertionError("fundamental-domain reduction failed to terminate")


@lru_cache(maxsize=None)
def weyl_group(kind: str, rank: int) -> tuple[WeylElement, ...]:
    """All elements of W, found by breadth-first closure over the generators."""
    from .root_data import build_root_system

    data = build_root_system(kind, rank)
    gens = [generator(data, lbl) for lbl in generator_labels(data)]
    ident = identity_element(data)
    seen = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                cand = compose(data, g, w)
                if cand.matrix not in seen:
                    seen[cand.matrix] = cand
                    new.append(cand)
        frontier = new
    return tuple(sorted(seen.values(), key=lambda w: (len(w.word), w.word)))


def longest_element(lattice: FramedLattice) -> WeylElement:
    """The longest element w_0 of W_Gamma, as a word in s_1..s_r.

    Computed by reducing a strictly antidominant parameter with positive
    pairing against delta; only finite reflections fire, and the resulting
    element is the unique one carrying the antidominant chamber to the
    dominant one.
    """
    data = lattice.root_data
    if data.kind == "TRIVIAL":
        return identity_element(data)
    theta0 = 1 + sum(data.delta[1:])
    theta = stability_from_affine(lattice, [theta0] + [-1] * lattice.rank)
    w, reduced = reduce_to_F(lattice, theta)
    assert S_DELTA not in w.word
    assert all(reduced(lattice.rho(i)) > 0 for i in range(1, lattice.rank + 1))
    return w


def minus_iota_element(lattice: FramedLattice) -> WeylElement:
    """The element s_delta * w_0, acting on Theta_v as minus the diagram involution."""
    data = lattice.root_data
    w0 = longest_element(lattice)
    elem = compose(data, generator(data, S_DELTA), w0)
    expected = minus_iota_matrix(data)
    if elem.matrix != expected:
        raise AssertionError("s_delta * w_0 does not act as minus iota")
    return elem


def minus_iota_matrix(data: RootSystemData) -> tuple[tuple[int, ...], ...]:
    r = data.rank
    return tuple(
        tuple(-1 if k == data.iota[j] else 0 for k in range(r + 1)) for j in range(r + 1)
    )


def apply_minus_iota(lattice: FramedLattice, theta: StabilityParameter) -> StabilityParameter:
    """Directly negate-and-permute the affine coordinates by iota."""
    data = lattice.root_data
    vals = theta.affine_values
    return stability_from_affine(
        lattice, [-vals[data.iota[j]] for j in range(lattice.rank + 1)]
    )
