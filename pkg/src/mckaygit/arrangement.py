"""The stability space, the wall hyperplane arrangement, and chamber enumeration.

A stability parameter pairs to zero with v = rho_inf + n*delta, so it is
determined by its values (theta_0, ..., theta_r) on the affine vertices;
the framing value theta_inf = -n*theta(delta) is stored alongside for
convenience.  Parameters are normalised to primitive integer vectors,
which is harmless everywhere since only signs of pairings and rays of
cones matter.

Chambers inside the fundamental cone F are enumerated on the affine slice
{theta(delta) = 1}: in the slice coordinates x_i = theta(rho_i) for
i = 1..r, the cone F becomes the positive orthant and the only wall
hyperplanes crossing it are {<beta, x> = m} for beta a positive root and
0 < m < n.  Regions are grown by incremental hyperplane insertion with an
exact rational LP providing interior witnesses.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import ResourceCapError, ValidationError
from .framed import FramedLattice
from .linalg import (
    cone_interior_witness,
    interior_witness,
    primitive_vector,
    region_is_unbounded,
)

DEFAULT_MAX_REGIONS = 10**6

TAG_DELTA = "delta"
TAG_PLUS = "mdelta+alpha"
TAG_MINUS = "mdelta-alpha"


@dataclass(frozen=True)
class Hyperplane:
    """A wall hyperplane, identified by its primitive framed normal."""

    normal: tuple[int, ...]
    tag: str
    m: int
    alpha: tuple[int, ...] | None

    def label(self) -> str:
        if self.tag == TAG_DELTA:
            return "delta"
        sign = "+" if self.tag == TAG_PLUS else "-"
        return "%d*delta%s%s" % (self.m, sign, "a" + str(list(self.alpha)))

    def to_json(self) -> dict:
        return {
            "normal": list(self.normal),
            "tag": self.tag,
            "m": self.m,
            "alpha": None if self.alpha is None else list(self.alpha),
        }


@dataclass(frozen=True)
class StabilityParameter:
    """A rational point of Theta_v, stored as a primitive integer vector."""

    values: tuple[int, ...]  # framed order (inf, 0, 1, ..., r)

    def __call__(self, vec) -> int:
        if len(vec) != len(self.values):
            raise ValidationError("pairing dimension mismatch")
        return sum(t * x for t, x in zip(self.values, vec))

    @property
    def affine_values(self) -> tuple[int, ...]:
        return self.values[1:]

    def to_json(self) -> list:
        return list(self.values)


def stability_from_affine(lattice: FramedLattice, affine_values: Sequence) -> StabilityParameter:
    """Build a parameter from (theta_0..theta_r); theta_inf is forced by theta(v)=0."""
    if len(affine_values) != lattice.rank + 1:
        raise ValidationError("expected %d affine values" % (lattice.rank + 1))
    vals = [Fraction(x) for x in affine_values]
    tdelta = sum(d * t for d, t in zip(lattice.root_data.delta, vals))
    full = [-lattice.n * tdelta] + vals
    return StabilityParameter(values=primitive_vector(full))


def stability_from_framed(lattice: FramedLattice, values: Sequence) -> StabilityParameter:
    theta = StabilityParameter(values=primitive_vector([Fraction(x) for x in values]))
    if theta(lattice.v) != 0:
        raise ValidationError("stability parameter must pair to zero with v")
    return theta


@dataclass(frozen=True)
class Chamber:
    signs: tuple[int, ...]
    witness: StabilityParameter
    in_F: bool

    def to_json(self) -> dict:
        return {
            "signs": ["+" if s > 0 else "-" for s in self.signs],
            "witness": self.witness.to_json(),
            "in_F": self.in_F,
        }


@dataclass(frozen=True)
class OnWall:
    """Returned by locate() for non-generic parameters."""

    hyperplanes: tuple[Hyperplane, ...]

    def to_json(self) -> dict:
        return {"on_walls": [h.to_json() for h in self.hyperplanes]}


@lru_cache(maxsize=None)
def build_arrangement(lattice: FramedLattice) -> tuple[Hyperplane, ...]:
    """The deduplicated, deterministically ordered wall hyperplane list.

    Size is 1 + |Phi+|*(2n-1): the delta wall, then (m*delta+alpha) for
    0 <= m < n, then (m*delta-alpha) for 0 < m < n, each class sorted by
    (m, graded-lex alpha).  The m = 0 pair collapses to alpha itself.
    """
    data = lattice.root_data
    n = lattice.n
    grlex = sorted(data.positive_roots, key=lambda a: (sum(a), a))
    out = [Hyperplane(normal=lattice.delta, tag=TAG_DELTA, m=0, alpha=None)]
    for m in range(0, n):
        for alpha in grlex:
            normal = tuple(
                m * d + a
                for d, a in zip(lattice.delta, (0, 0) + tuple(alpha))
            )
            out.append(Hyperplane(normal=normal, tag=TAG_PLUS, m=m, alpha=alpha))
    for m in range(1, n):
        for alpha in grlex:
            normal = tuple(
                m * d - a
                for d, a in zip(lattice.delta, (0, 0) + tuple(alpha))
            )
            out.append(Hyperplane(normal=normal, tag=TAG_MINUS, m=m, alpha=alpha))
    seen = set()
    for h in out:
        if h.normal in seen:
            raise AssertionError("duplicate hyperplane %r" % (h,))
        seen.add(h.normal)
    return tuple(out)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def in_fundamental_cone(lattice: FramedLattice, theta: StabilityParameter) -> bool:
    """Strict interior test for F = <delta, rho_1..rho_r>^dual."""
    if theta(lattice.delta) <= 0:
        return False
    return all(theta(lattice.rho(i)) > 0 for i in range(1, lattice.rank + 1))


def locate(
    lattice: FramedLattice,
    theta: StabilityParameter,
    arrangement: Sequence[Hyperplane] | None = None,
) -> Union[Chamber, OnWall]:
    """Chamber sign vector of theta, or the exact list of walls containing it."""
    arrangement = build_arrangement(lattice) if arrangement is None else arrangement
    values = [theta(h.normal) for h in arrangement]
    zeros = tuple(h for h, val in zip(arrangement, values) if val == 0)
    if zeros:
        return OnWall(hyperplanes=zeros)
    return Chamber(
        signs=tuple(_sign(v) for v in values),
        witness=theta,
        in_F=in_fundamental_cone(lattice, theta),
    )


# ---------------------------------------------------------------------------
# Chamber enumeration inside F via the theta(delta)=1 slice.


def slice_hyperplanes(lattice: FramedLattice) -> tuple[tuple[tuple[int, ...], int], ...]:
    """(beta, m) pairs describing {<beta,x> = m} inside the slice orthant."""
    data = lattice.root_data
    grlex = sorted(data.positive_roots, key=lambda a: (sum(a), a))
    return tuple((alpha, m) for m in range(1, lattice.n) for alpha in grlex)


def _slice_region_constraints(planes, signs) -> list[tuple]:
    return [
        (beta, m) if s > 0 else (tuple(-x for x in beta), -m)
        for (beta, m), s in zip(planes, signs)
    ]


def slice_point_to_parameter(lattice: FramedLattice, x: Sequence) -> StabilityParameter:
    """Lift slice coordinates to Theta_v: theta_i = x_i, theta(delta) = 1."""
    data = lattice.root_data
    x = [Fraction(v) for v in x]
    theta0 = 1 - sum(d * xi for d, xi in zip(data.delta[1:], x))
    return stability_from_affine(lattice, [theta0] + x)


def _slice_regions(lattice: FramedLattice, max_regions: int, jobs: int):
    """Sign-vector regions of the slice arrangement inside the open orthant."""
    r = lattice.rank
    planes = slice_hyperplanes(lattice)
    regions = [((), tuple(Fraction(1) for _ in range(r)))]
    executor = None
    if jobs > 1:
        executor = concurrent.futures.ThreadPoolExecutor(max_workers=jobs)
    try:
        for k, (beta, m) in enumerate(planes):
            prior = planes[:k]

            def refine(region):
                signs, w = region
                val = sum(b * xi for b, xi in zip(beta, w)) - m
                out = []
                base = _slice_region_constraints(prior, signs)
                sides = (1, -1) if val == 0 else (_sign(val), -_sign(val))
                for side in sides:
                    if side == _sign(val) and val != 0:
                        out.append((signs + (side,), w))
                        continue
                    extra = (beta, m) if side > 0 else (tuple(-x for x in beta), -m)
                    witness = interior_witness(base + [extra], r)
                    if witness is not None:
                        out.append((signs + (side,), witness))
                return out

            if executor is not None:
                chunks = list(executor.map(refine, regions))
            else:
                chunks = [refine(region) for region in regions]
            regions = [reg for chunk in chunks for reg in chunk]
            if len(regions) > max_regions:
                raise ResourceCapError(
                    "region count exceeded the cap (%d); instance too large" % max_regions
                )
    finally:
        if executor is not None:
            executor.shutdown()
    return planes, sorted(regions, key=lambda reg: reg[0])


def enumerate_chambers_in_F(
    lattice: FramedLattice,
    max_regions: int = DEFAULT_MAX_REGIONS,
    jobs: int = 1,
) -> list[Chamber]:
    """Exactly the chambers whose closure lies in F, each with an interior witness."""
    arrangement = build_arrangement(lattice)
    if lattice.root_data.kind == "TRIVIAL":
        # Single wall delta^perp; F is the non-negative half line (Remark on
        # the trivial group: Theta_v has exactly two chambers, one inside F).
        theta = stability_from_affine(lattice, [1])
        chamber = locate(lattice, theta, arrangement)
        assert isinstance(chamber, Chamber)
        return [chamber]
    _, regions = _slice_regions(lattice, max_regions, jobs)
    chambers = []
    for _, x in regions:
        theta = slice_point_to_parameter(lattice, x)
        located = locate(lattice, theta, arrangement)
        if not isinstance(located, Chamber) or not located.in_F:
            raise AssertionError("slice witness failed to land in a chamber of F")
        chambers.append(located)
    return sorted(chambers, key=lambda c: c.signs)


def count_chambers_formula(lattice: FramedLattice) -> int:
    """prod_i ((n-1)h + d_i)/d_i, evaluated exactly."""
    data = lattice.root_data
    if data.kind == "TRIVIAL":
        raise ValidationError("the counting formula needs a non-trivial Gamma")
    prod = Fraction(1)
    for d in data.degrees:
        prod *= Fraction((lattice.n - 1) * data.coxeter_number + d, d)
    if prod.denominator != 1:
        raise AssertionError("chamber-count product must be an integer")
    return int(prod)


def count_chambers_total(lattice: FramedLattice) -> int:
    """Total chamber count of Theta_v: 2|W_Gamma| times the count in F."""
    data = lattice.root_data
    if data.kind == "TRIVIAL":
        return 2
    return 2 * data.weyl_order * count_chambers_formula(lattice)


# ---------------------------------------------------------------------------
# Facet analysis of chamber cones.


def chamber_cone_inequalities(
    lattice: FramedLattice, chamber: Chamber, arrangement: Sequence[Hyperplane] | None = None
) -> list[tuple[int, ...]]:
    """Affine-coordinate functionals g with g.theta >= 0 cutting out the closure."""
    arrangement = build_arrangement(lattice) if arrangement is None else arrangement
    out = []
    for h, s in zip(arrangement, chamber.signs):
        g = h.normal[1:]  # normals have zero framing coordinate
        out.append(tuple(s * x for x in g))
    return out


def is_facet(
    lattice: FramedLattice,
    chamber: Chamber,
    hyperplane: Hyperplane,
    arrangement: Sequence[Hyperplane] | None = None,
) -> bool:
    """Whether the hyperplane supports a codimension-one face of the chamber."""
    arrangement = build_arrangement(lattice) if arrangement is None else arrangement
    strict = []
    on = [hyperplane.normal[1:]]
    for h, s in zip(arrangement, chamber.signs):
        if h.normal == hyperplane.normal:
            continue
        strict.append(tuple(s * x for x in h.normal[1:]))
    return cone_interior_witness(strict, on) is not None


def chamber_facets(
    lattice: FramedLattice, chamber: Chamber, arrangement: Sequence[Hyperplane] | None = None
) -> list[Hyperplane]:
    arrangement = build_arrangement(lattice) if arrangement is None else arrangement
    return [h for h in arrangement if is_facet(lattice, chamber, h, arrangement)]


def chamber_touches_delta_wall(lattice: FramedLattice, chamber: Chamber) -> bool:
    """Whether the chamber closure meets delta^perp outside the origin.

    Equivalent to unboundedness of the corresponding region on the
    theta(delta)=1 slice.
    """
    if not chamber.in_F:
        raise ValidationError("implemented for chambers of F only")
    if lattice.root_data.kind == "TRIVIAL":
        return True
    planes = slice_hyperplanes(lattice)
    arrangement = build_arrangement(lattice)
    sign_by_normal = dict(zip((h.normal for h in arrangement), chamber.signs))
    constraints = []
    for beta, m in planes:
        normal = tuple(
            m * d - a for d, a in zip(lattice.delta, (0, 0) + tuple(beta))
        )
        # theta(m*delta - alpha) = m - <beta, x> on the slice, so the
        # arrangement sign flips relative to the slice-local value.
        s = -sign_by_normal[normal]
        constraints.append((beta, m) if s > 0 else (tuple(-x for x in beta), -m))
    return region_is_unbounded(constraints, lattice.rank)


# ---------------------------------------------------------------------------
# Rank-2 slice polygons (plot data).


def _clip_polygon(poly, a, rhs):
    """Sutherland-Hodgman clip of a convex polygon by {a.x >= rhs}."""
    out = []
    k = len(poly)
    for i in range(k):
        p, q = poly[i], poly[(i + 1) % k]
        vp = sum(ai * xi for ai, xi in zip(a, p)) - rhs
        vq = sum(ai * xi for ai, xi in zip(a, q)) - rhs
        if vp >= 0:
            out.append(p)
        if (vp > 0 and vq < 0) or (vp < 0 and vq > 0):
            t = vp / (vp - vq)
            out.append(tuple(pi + t * (qi - pi) for pi, qi in zip(p, q)))
    dedup = []
    for pt in out:
        if not dedup or pt != dedup[-1]:
            dedup.append(pt)
    if dedup and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def slice_polygons(lattice: FramedLattice, box: int | None = None) -> list[dict]:
    """Polygon chains for the slice regions of F; rank-2 finite types only.

    Unbounded regions are clipped to [0, box]^2 with box defaulting to n;
    a region is unbounded exactly when the clipped polygon touches the
    artificial box edges.
    """
    if lattice.rank != 2:
        raise ValidationError("slice polygons are defined for rank-2 types only")
    box = lattice.n if box is None else box
    planes, regions = _slice_regions(lattice, DEFAULT_MAX_REGIONS, 1)
    b = Fraction(box)
    base = [(Fraction(0), Fraction(0)), (b, Fraction(0)), (b, b), (Fraction(0), b)]
    labels = _label_points(lattice)
    out = []
    for signs, witness in regions:
        poly = base
        for (beta, m), s in zip(planes, signs):
            a, rhs = (beta, Fraction(m)) if s > 0 else (tuple(-x for x in beta), Fraction(-m))
            poly = _clip_polygon(poly, a, rhs)
        unbounded = any(x == b or y == b for x, y in poly)
        label = None
        for name, point in labels.items():
            if _point_signs(planes, point) == signs:
                label = name
        out.append(
            {
                "signs": signs,
                "vertices": poly,
                "unbounded": unbounded,
                "label": label,
            }
        )
    return out


def _point_signs(planes, x):
    return tuple(
        _sign(sum(b * xi for b, xi in zip(beta, x)) - m) for beta, m in planes
    )


def _label_points(lattice: FramedLattice) -> dict:
    """Slice coordinates of the rays of the reference chambers C- and C+."""
    data = lattice.root_data
    h = data.coxeter_number
    n = lattice.n
    c_minus = tuple(Fraction(2 * n) for _ in range(lattice.rank))
    c_plus = tuple(Fraction(1, h) for _ in range(lattice.rank))
    return {"C-": c_minus, "C+": c_plus}


def reference_chamber_minus(lattice: FramedLattice) -> StabilityParameter:
    """The explicit interior point of C- (Hilbert scheme chamber)."""
    data = lattice.root_data
    n, h = lattice.n, data.coxeter_number
    values = [Fraction(1, 2 * n) - h + 1] + [Fraction(1)] * lattice.rank
    return stability_from_affine(lattice, values)


def reference_chamber_plus(lattice: FramedLattice) -> StabilityParameter:
    """The explicit interior point of C+ (orbifold Hilbert scheme chamber)."""
    return stability_from_affine(lattice, [Fraction(1)] * (lattice.rank + 1))
