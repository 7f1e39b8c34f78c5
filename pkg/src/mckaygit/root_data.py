"""Finite and affine ADE root data attached to a finite subgroup of SL(2,C).

Vertex conventions
------------------
Finite vertices are numbered 1..r in Bourbaki order:

* A_r: the chain 1 - 2 - ... - r;
* D_r: the chain 1 - 2 - ... - (r-2) with both r-1 and r attached to r-2;
* E_r: the chain 1 - 3 - 4 - ... - r with vertex 2 attached to vertex 4.

Vertex 0 is the affine vertex, attached where the extended Dynkin diagram
dictates (A_r: to 1 and r, with a doubled bond 0 = 1 when r = 1; D_r: to 2;
E6: to 2; E7: to 1; E8: to 8).  The TRIVIAL kind models the trivial group:
a single vertex carrying the doubled loop of the Jordan quiver, so its
"affine Cartan matrix" is the 1x1 zero matrix and delta = (1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ValidationError

KIND_A = "A"
KIND_D = "D"
KIND_E = "E"
KIND_TRIVIAL = "TRIVIAL"

_LEGAL = {
    KIND_A: lambda r: r >= 1,
    KIND_D: lambda r: r >= 4,
    KIND_E: lambda r: r in (6, 7, 8),
    KIND_TRIVIAL: lambda r: r == 0,
}


@dataclass(frozen=True)
class RootSystemData:
    kind: str
    rank: int
    cartan_finite: tuple[tuple[int, ...], ...]
    cartan_affine: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    highest_root: tuple[int, ...]
    coxeter_number: int
    degrees: tuple[int, ...]
    exponents: tuple[int, ...]
    delta: tuple[int, ...]
    iota: tuple[int, ...]

    @property
    def weyl_order(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan_affine],
            "positive_roots": [list(a) for a in self.positive_roots],
            "delta": list(self.delta),
            "h": self.coxeter_number,
            "degrees": list(self.degrees),
            "iota": list(self.iota),
        }


def _finite_edges(kind: str, r: int) -> list[tuple[int, int]]:
    if kind == KIND_A:
        return [(i, i + 1) for i in range(1, r)]
    if kind == KIND_D:
        return [(i, i + 1) for i in range(1, r - 1)] + [(r - 2, r)]
    edges = [(1, 3)] + [(i, i + 1) for i in range(3, r)] + [(2, 4)]
    return edges


def _affine_attachments(kind: str, r: int) -> list[tuple[int, int]]:
    """Edges joining the affine vertex 0 into the finite diagram (with multiplicity)."""
    if kind == KIND_A:
        if r == 1:
            return [(0, 1), (0, 1)]
        return [(0, 1), (0, r)]
    if kind == KIND_D:
        return [(0, 2)]
    return {6: [(0, 2)], 7: [(0, 1)], 8: [(0, 8)]}[r]


def _positive_root_closure(cartan: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    """Breadth-first closure of the simple roots under root addition.

    A candidate alpha + e_i is kept whenever its norm under the Cartan form
    is 2; in a simply-laced finite system this reaches every positive root.
    """
    r = len(cartan)

    def norm(v):
        return sum(v[i] * cartan[i][j] * v[j] for i in range(r) for j in range(r))

    simple = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for alpha in frontier:
            for i in range(r):
                cand = tuple(alpha[j] + (1 if j == i else 0) for j in range(r))
                if cand not in found and norm(cand) == 2:
                    found.add(cand)
                    new.append(cand)
        frontier = new
    return sorted(found, key=lambda a: (sum(a), a))


def _exponents_from_heights(roots: list[tuple[int, ...]], rank: int) -> tuple[int, ...]:
    """Exponents as the dual partition of the root-height histogram."""
    heights = {}
    for a in roots:
        h = sum(a)
        heights[h] = heights.get(h, 0) + 1
    exps = []
    for j in range(1, rank + 1):
        exps.append(sum(1 for k, c in heights.items() if c >= j))
    return tuple(sorted(exps))


def _iota_permutation(kind: str, r: int) -> tuple[int, ...]:
    iota = list(range(r + 1))
    if kind == KIND_A and r >= 2:
        for i in range(1, r + 1):
            iota[i] = r + 1 - i
    elif kind == KIND_D and r % 2 == 1:
        iota[r - 1], iota[r] = r, r - 1
    elif kind == KIND_E and r == 6:
        iota[1], iota[6] = 6, 1
        iota[3], iota[5] = 5, 3
    return tuple(iota)


@lru_cache(maxsize=None)
def build_root_system(kind: str, rank: int) -> RootSystemData:
    """Construct the ADE root data for the pair (kind, rank)."""
    if kind not in _LEGAL or not _LEGAL[kind](rank):
        raise ValidationError("illegal root system (%r, %r)" % (kind, rank))

    if kind == KIND_TRIVIAL:
        return RootSystemData(
            kind=kind, rank=0,
            cartan_finite=(), cartan_affine=((0,),),
            positive_roots=(), highest_root=(),
            coxeter_number=1, degrees=(), exponents=(),
            delta=(1,), iota=(0,),
        )

    r = rank
    adj = [[0] * (r + 1) for _ in range(r + 1)]
    for i, j in _finite_edges(kind, r) + _affine_attachments(kind, r):
        adj[i][j] += 1
        adj[j][i] += 1
    cartan_affine = tuple(
        tuple((2 if i == j else 0) - adj[i][j] for j in range(r + 1)) for i in range(r + 1)
    )
    cartan_finite = tuple(tuple(row[1:]) for row in cartan_affine[1:])

    roots = _positive_root_closure(cartan_finite)
    highest = max(roots, key=lambda a: (sum(a), a))
    delta = (1,) + highest
    h = sum(delta)
    exponents = _exponents_from_heights(roots, r)
    degrees = tuple(e + 1 for e in exponents)
    iota = _iota_permutation(kind, r)

    data = RootSystemData(
        kind=kind, rank=r,
        cartan_finite=cartan_finite, cartan_affine=cartan_affine,
        positive_roots=tuple(roots), highest_root=highest,
        coxeter_number=h, degrees=degrees, exponents=exponents,
        delta=delta, iota=iota,
    )
    _check_invariants(data)
    return data


def _check_invariants(data: RootSystemData) -> None:
    r = data.rank
    if 2 * len(data.positive_roots) != r * data.coxeter_number:
        raise AssertionError("|Phi+| != r*h/2 for %s_%d" % (data.kind, r))
    ca = data.cartan_affine
    for j in range(r + 1):
        if sum(data.delta[i] * ca[i][j] for i in range(r + 1)) != 0:
            raise AssertionError("delta is not in the radical of the affine form")
    it = data.iota
    if tuple(it[it[i]] for i in range(r + 1)) != tuple(range(r + 1)) or it[0] != 0:
        raise AssertionError("iota is not an involution fixing the affine vertex")


def involution_iota(data: RootSystemData) -> tuple[int, ...]:
    """The diagram involution induced by dualising irreducible representations."""
    return data.iota


def apply_iota_affine(data: RootSystemData, vec) -> tuple[int, ...]:
    """Permute the coordinates of an affine lattice vector by iota."""
    return tuple(vec[data.iota[i]] for i in range(data.rank + 1))
