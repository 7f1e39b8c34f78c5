"""Linearisation maps onto the movable cone and the Mori chamber report.

Coordinates on the target space are taken in the determinant basis
det(R_0), ..., det(R_r) of the tautological summands, normalised so that
the framing summand is trivial.  In these coordinates the per-chamber
linearisation is the projection theta -> (theta_0, ..., theta_r), which is
a linear isomorphism for n > 1; all the non-trivial content sits in the
reduction to the fundamental domain, making the glued map piecewise linear
and invariant under the Namikawa Weyl group.  For n = 1 the projection
acquires the one-dimensional kernel spanned by (-1, 1, 0, ..., 0) and the
reported coordinates drop to (theta_1, ..., theta_r).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .arrangement import (
    Chamber,
    Hyperplane,
    StabilityParameter,
    build_arrangement,
    chamber_facets,
    enumerate_chambers_in_F,
    locate,
    reference_chamber_minus,
    reference_chamber_plus,
)
from .errors import ValidationError
from .framed import FramedLattice
from .linalg import matrix_rank, nullspace, primitive_vector
from .walls import DIVISORIAL, FLOP, REAL_INTERNAL, wall_class_of_hyperplane
from .weyl import WeylElement, compose, inverse, reduce_to_F

HILB_SCHEME = "HILB_SCHEME"
N_GAMMA_HILB = "N_GAMMA_HILB"
OTHER = "OTHER"

ISOMORPHIC = "ISOMORPHIC"
DISTINCT = "DISTINCT"


def basis_legend(lattice: FramedLattice) -> tuple[str, ...]:
    if lattice.n == 1:
        return tuple("det(R_%d)" % i for i in range(1, lattice.rank + 1))
    return tuple("det(R_%d)" % i for i in range(0, lattice.rank + 1))


def linearisation_LF(lattice: FramedLattice, theta: StabilityParameter) -> tuple:
    """Coordinates of the glued-on-F linearisation of theta in the det basis."""
    vals = tuple(Fraction(x) for x in theta.affine_values)
    if lattice.n == 1:
        return vals[1:]
    return vals


def linearisation_L(lattice: FramedLattice, theta: StabilityParameter) -> tuple:
    """The global piecewise-linear map: reduce to F, then apply the linear map."""
    _, theta_f = reduce_to_F(lattice, theta)
    return linearisation_LF(lattice, theta_f)


def movable_cone_facets(lattice: FramedLattice) -> tuple[tuple[int, ...], ...]:
    """Functionals cutting out the movable-cone model in the det basis."""
    data = lattice.root_data
    r = lattice.rank
    if lattice.n == 1:
        return tuple(
            tuple(1 if j == i else 0 for j in range(r)) for i in range(r)
        )
    facets = [tuple(data.delta)]
    for i in range(1, r + 1):
        facets.append(tuple(1 if j == i else 0 for j in range(r + 1)))
    return tuple(facets)


def chamber_extremal_rays(
    lattice: FramedLattice,
    chamber: Chamber,
    arrangement: Sequence[Hyperplane] | None = None,
    facets: Sequence[Hyperplane] | None = None,
) -> list[tuple[int, ...]]:
    """Primitive generators of the chamber closure in (theta_0..theta_r) coordinates.

    Rays arise as one-dimensional intersections of dim-1 facet hyperplanes
    that satisfy every defining inequality and whose active facet normals
    have corank one.
    """
    arrangement = build_arrangement(lattice) if arrangement is None else arrangement
    if facets is None:
        facets = chamber_facets(lattice, chamber, arrangement)
    d = lattice.rank + 1
    sign_by_normal = dict(zip((h.normal for h in arrangement), chamber.signs))
    ineqs = [
        tuple(s * x for x in h.normal[1:])
        for h, s in zip(arrangement, chamber.signs)
    ]
    facet_rows = [h.normal[1:] for h in facets]
    rays = set()
    if d == 1:
        cand = (1,) if all(g[0] >= 0 for g in ineqs) else (-1,)
        return [cand]
    for subset in combinations(range(len(facet_rows)), d - 1):
        rows = [facet_rows[i] for i in subset]
        kernel = nullspace(rows)
        if len(kernel) != 1:
            continue
        u = kernel[0]
        for cand in (u, tuple(-x for x in u)):
            if all(sum(g * x for g, x in zip(ineq, cand)) >= 0 for ineq in ineqs):
                active = [
                    row for row in facet_rows
                    if sum(a * x for a, x in zip(row, cand)) == 0
                ]
                if matrix_rank(active) == d - 1:
                    rays.add(primitive_vector(cand))
                break
    return sorted(rays)


@dataclass(frozen=True)
class WallRecord:
    hyperplane: Hyperplane
    contraction: str

    def to_json(self) -> dict:
        return {"normal": list(self.hyperplane.normal), "contraction": self.contraction}


@dataclass(frozen=True)
class NefConeModel:
    """The nef cone of one birational model, in det-basis coordinates."""

    basis_legend: tuple[str, ...]
    chamber: Chamber
    generators: tuple[tuple, ...]
    ample_model_tag: str
    walls: tuple[WallRecord, ...]
    touches_delta_wall: bool

    def to_json(self) -> dict:
        return {
            "generators": [[_q2j(x) for x in g] for g in self.generators],
            "ample_model_tag": self.ample_model_tag,
            "walls": [w.to_json() for w in self.walls],
            "touches_delta_wall": self.touches_delta_wall,
        }


@dataclass(frozen=True)
class MoriReport:
    basis_legend: tuple[str, ...]
    movable_facets: tuple[tuple[int, ...], ...]
    models: tuple[NefConeModel, ...]

    def to_json(self) -> dict:
        return {
            "basis_legend": list(self.basis_legend),
            "movable_cone": {"facets": [list(f) for f in self.movable_facets]},
            "chambers": [m.to_json() for m in self.models],
        }


def _q2j(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _project_ray(lattice: FramedLattice, ray: tuple) -> tuple:
    if lattice.n == 1:
        return tuple(ray[1:])
    return tuple(ray)


def mori_chamber_report(
    lattice: FramedLattice,
    max_regions: int | None = None,
    jobs: int = 1,
) -> MoriReport:
    """One nef-cone model per chamber in F, with wall contraction tags."""
    from .arrangement import DEFAULT_MAX_REGIONS, chamber_touches_delta_wall

    max_regions = DEFAULT_MAX_REGIONS if max_regions is None else max_regions
    arrangement = build_arrangement(lattice)
    chambers = enumerate_chambers_in_F(lattice, max_regions=max_regions, jobs=jobs)
    legend = basis_legend(lattice)
    minus_signs, plus_signs = _reference_signs(lattice, arrangement)
    models = []
    for chamber in chambers:
        facets = chamber_facets(lattice, chamber, arrangement)
        rays = chamber_extremal_rays(lattice, chamber, arrangement, facets)
        generators = tuple(
            sorted(
                {p for p in (_project_ray(lattice, ray) for ray in rays)
                 if any(x != 0 for x in p)}
            )
        )
        if chamber.signs == minus_signs:
            tag = HILB_SCHEME
        elif chamber.signs == plus_signs:
            tag = N_GAMMA_HILB
        else:
            tag = OTHER
        walls = tuple(
            WallRecord(hyperplane=h, contraction=wall_class_contr(h)) for h in facets
        )
        models.append(
            NefConeModel(
                basis_legend=legend,
                chamber=chamber,
                generators=generators,
                ample_model_tag=tag,
                walls=walls,
                touches_delta_wall=chamber_touches_delta_wall(lattice, chamber),
            )
        )
    return MoriReport(
        basis_legend=legend,
        movable_facets=movable_cone_facets(lattice),
        models=tuple(models),
    )


def wall_class_contr(h: Hyperplane) -> str:
    return FLOP if wall_class_of_hyperplane(h) == REAL_INTERNAL else DIVISORIAL


def _reference_signs(lattice: FramedLattice, arrangement):
    minus = locate(lattice, reference_chamber_minus(lattice), arrangement)
    plus = locate(lattice, reference_chamber_plus(lattice), arrangement)
    if isinstance(minus, Chamber) and isinstance(plus, Chamber):
        return minus.signs, plus.signs
    raise AssertionError("reference parameters must be generic")


def ample_model_tag(
    lattice: FramedLattice,
    chamber: Chamber,
    arrangement: Sequence[Hyperplane] | None = None,
) -> str:
    """HILB_SCHEME for the chamber of C-, N_GAMMA_HILB for C+, OTHER otherwise."""
    arrangement = build_arrangement(lattice) if arrangement is None else arrangement
    minus_signs, plus_signs = _reference_signs(lattice, arrangement)
    if chamber.signs == minus_signs:
        return HILB_SCHEME
    if chamber.signs == plus_signs:
        return N_GAMMA_HILB
    return OTHER


@dataclass(frozen=True)
class IsomorphismResult:
    status: str
    witness: WeylElement | None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def models_isomorphic(
    lattice: FramedLattice, theta: StabilityParameter, theta_prime: StabilityParameter
) -> IsomorphismResult:
    """Whether two generic parameters define isomorphic models over the quotient.

    Both parameters reduce into F; the models agree exactly when the
    reductions land in the same chamber, and the witness carries the first
    chamber onto the second.
    """
    arrangement = build_arrangement(lattice)
    for t in (theta, theta_prime):
        if not isinstance(locate(lattice, t, arrangement), Chamber):
            raise ValidationError("models_isomorphic needs generic parameters")
    w1, t1 = reduce_to_F(lattice, theta)
    w2, t2 = reduce_to_F(lattice, theta_prime)
    c1 = locate(lattice, t1, arrangement)
    c2 = locate(lattice, t2, arrangement)
    if c1.signs == c2.signs:
        data = lattice.root_data
        return IsomorphismResult(
            status=ISOMORPHIC, witness=compose(data, inverse(data, w2), w1)
        )
    return IsomorphismResult(status=DISTINCT, witness=None)


# ---------------------------------------------------------------------------
# The n = 2, type A cross-check coordinates.


def aw_transform(lattice: FramedLattice, vec) -> tuple[int, ...]:
    """The lattice map rho_inf -> -2e_0, rho_0 -> e_0 - sum e_i, rho_i -> e_i.

    Defined for n = 2 in type A; its kernel is spanned by v, so stability
    parameters descend through it.
    """
    _require_aw(lattice)
    r = lattice.rank
    if len(vec) != lattice.size:
        raise ValidationError("framed vector expected")
    e0 = -2 * vec[0] + vec[1]
    rest = [vec[2 + i] - vec[1] for i in range(r)]
    return (e0,) + tuple(rest)


def aw_coordinates(lattice: FramedLattice, theta: StabilityParameter) -> tuple:
    """Coordinates of theta in the basis dual to e_0..e_r; exact rationals."""
    _require_aw(lattice)
    vals = theta.values
    phi0 = Fraction(-vals[0], 2)
    return (phi0,) + tuple(Fraction(x) for x in vals[2:])


def _require_aw(lattice: FramedLattice) -> None:
    if lattice.root_data.kind != "A" or lattice.n != 2:
        raise ValidationError("these coordinates require type A with n = 2")
