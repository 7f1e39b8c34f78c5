"""Wall classification, generic wall points, local models and the semismall audit.

Walls fall into three classes: the imaginary boundary wall in delta^perp,
real boundary walls in alpha^perp for a positive root alpha, and real
internal walls in (m*delta - alpha)^perp for 0 < m < n.  A generic point
of a wall determines a stratification whose local geometry is captured by
a small doubled quiver (the Ext-graph): crossing the imaginary wall is a
product of Hilbert-Chow contractions over a partition, while the strata of
a real wall carry cotangent-Grassmannian models T*Gr(k, m+2k) over a
nilpotent orbit closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arrangement import (
    Chamber,
    Hyperplane,
    StabilityParameter,
    build_arrangement,
    is_facet,
    stability_from_affine,
)
from .decomposition import RepresentationType, representation_types
from .errors import ValidationError, WallPointError
from .framed import FramedLattice, cartan_pairing, enumerate_positive_roots_below, p_form
from .linalg import matrix_rank, nullspace, primitive_vector

IMAGINARY_BOUNDARY = "IMAGINARY_BOUNDARY"
REAL_BOUNDARY = "REAL_BOUNDARY"
REAL_INTERNAL = "REAL_INTERNAL"

DIVISORIAL = "DIVISORIAL"
FLOP = "FLOP"

LABEL_STABLE = "stable_point"
LABEL_HILBERT_CHOW = "hilbert_chow_product"
LABEL_GRASSMANNIAN = "tstar_grassmannian"


@dataclass(frozen=True)
class WallInfo:
    hyperplane: Hyperplane
    wall_class: str
    m: int | None
    alpha: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "hyperplane": self.hyperplane.to_json(),
            "class": self.wall_class,
            "m": self.m,
            "alpha": None if self.alpha is None else list(self.alpha),
        }


def wall_class_of_hyperplane(h: Hyperplane) -> str:
    if h.tag == "delta":
        return IMAGINARY_BOUNDARY
    if h.m == 0:
        return REAL_BOUNDARY
    return REAL_INTERNAL


def classify_wall(lattice: FramedLattice, theta0: StabilityParameter) -> WallInfo:
    """Classify the single wall containing theta0; reject non-wall points."""
    zeros = [h for h in build_arrangement(lattice) if theta0(h.normal) == 0]
    if len(zeros) != 1:
        raise WallPointError(
            "expected a generic point of exactly one wall, found %d" % len(zeros),
            hyperplanes=zeros,
        )
    h = zeros[0]
    cls = wall_class_of_hyperplane(h)
    return WallInfo(
        hyperplane=h,
        wall_class=cls,
        m=None if cls == IMAGINARY_BOUNDARY else h.m,
        alpha=h.alpha,
    )


def _root_zeros_outside_span(lattice: FramedLattice, theta0: StabilityParameter):
    """Roots <= v killed by theta0 but outside span(wall normal candidates, v).

    A wall point is generic (for stratification purposes) when every root
    it kills lies in the plane spanned by v and the wall normal; those are
    forced by theta0 being in the wall and in Theta_v.
    """
    killed = [
        g for g in enumerate_positive_roots_below(lattice, lattice.v) if theta0(g) == 0
    ]
    zeros = [h for h in build_arrangement(lattice) if theta0(h.normal) == 0]
    span_rows = [lattice.v] + [h.normal for h in zeros]
    base_rank = matrix_rank(span_rows)
    stray = [g for g in killed if matrix_rank(span_rows + [g]) > base_rank]
    return stray


def is_generic_wall_point(lattice: FramedLattice, theta0: StabilityParameter) -> bool:
    zeros = [h for h in build_arrangement(lattice) if theta0(h.normal) == 0]
    if len(zeros) != 1:
        return False
    return not _root_zeros_outside_span(lattice, theta0)


def pick_generic_wall_point(lattice: FramedLattice, h: Hyperplane) -> StabilityParameter:
    """A deterministic exact rational point generic on the given wall.

    The point pairs to zero with the wall normal and with no other root
    below v (up to the span forced by Theta_v).  The explicit
    height-based construction theta_i = 1, theta_0 = ht(alpha)/m - ht(beta)
    is tried first for internal walls; otherwise points sum_k t^(k-1) u_k
    over a kernel basis u_* are scanned for t = 1, 2, ... until every
    stray pairing is non-zero.
    """

    def candidates():
        if h.tag == "mdelta-alpha" and h.m > 0:
            ht_alpha = sum(h.alpha)
            ht_beta = lattice.root_data.coxeter_number - 1
            theta0 = Fraction(ht_alpha, h.m) - ht_beta
            yield stability_from_affine(lattice, [theta0] + [1] * lattice.rank)
        kernel = nullspace([h.normal[1:]])
        for t in range(1, 200):
            coeffs = [t**k for k in range(len(kernel))]
            yield stability_from_affine(
                lattice,
                [
                    sum(c * u[j] for c, u in zip(coeffs, kernel))
                    for j in range(lattice.rank + 1)
                ],
            )

    for cand in candidates():
        if cand(h.normal) == 0 and is_generic_wall_point(lattice, cand):
            return cand
    raise AssertionError("no generic wall point found; arrangement data inconsistent")


@dataclass(frozen=True)
class ModelLabel:
    kind: str
    params: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": list(self.params)}


@dataclass(frozen=True)
class ExtGraphModel:
    """Numerical data of the etale-local model at a polystable point.

    Vertices index the non-framing parts of the representation type;
    the framing part contributes the framing vector n_vec and the
    transverse factor dimension ell = p(beta_inf).
    """

    vertex_count: int
    loops: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]
    m_vec: tuple[int, ...]
    n_vec: tuple[int, ...]
    rho: tuple  # stability values (rho_0..rho_k) on the Ext-graph vertices
    rho_infinity: int
    ell: int
    model_label: ModelLabel

    def to_json(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "loops": list(self.loops),
            "edges": [list(row) for row in self.edges],
            "m_vec": list(self.m_vec),
            "n_vec": list(self.n_vec),
            "rho": list(self.rho),
            "rho_infinity": self.rho_infinity,
            "ell": self.ell,
            "model_label": self.model_label.to_json(),
        }


def ext_graph_model(
    lattice: FramedLattice,
    tau: RepresentationType,
    theta: StabilityParameter,
    theta0: StabilityParameter,
) -> ExtGraphModel:
    """Ext-graph data of the stratum labelled tau, for theta degenerating to theta0.

    Requires theta0 to pair to zero with every part of tau and to lie in
    the closure of the chamber of theta.
    """
    v = lattice.v
    total = [0] * lattice.size
    for mult, g in tau.parts:
        if theta0(g) != 0:
            raise ValidationError("representation type is inconsistent with theta0")
        for i, x in enumerate(g):
            total[i] += mult * x
    if tuple(total) != v:
        raise ValidationError("representation type does not sum to v")
    for h in build_arrangement(lattice):
        if theta(h.normal) * theta0(h.normal) < 0:
            raise ValidationError("theta0 is not in the closure of theta's chamber")

    framing = tau.parts[0][1]
    others = [g for _, g in tau.parts[1:]]
    mults = [m for m, _ in tau.parts[1:]]
    k1 = len(others)
    loops = tuple(p_form(lattice, g) for g in others)
    edges = tuple(
        tuple(
            0 if i == j else -cartan_pairing(lattice, others[i], others[j])
            for j in range(k1)
        )
        for i in range(k1)
    )
    n_vec = tuple(-cartan_pairing(lattice, framing, g) for g in others)
    if any(x < 0 for x in n_vec):
        raise AssertionError("framing pairings must be non-negative")
    rho = tuple(theta(g) for g in others)
    ell = p_form(lattice, framing)
    label = _model_label(lattice, tau, theta0, k1, mults)
    return ExtGraphModel(
        vertex_count=k1,
        loops=loops,
        edges=edges,
        m_vec=tuple(mults),
        n_vec=n_vec,
        rho=rho,
        rho_infinity=theta(framing),
        ell=ell,
        model_label=label,
    )


def _model_label(lattice, tau, theta0, k1, mults) -> ModelLabel:
    if k1 == 0:
        return ModelLabel(kind=LABEL_STABLE, params=())
    wall = classify_wall(lattice, theta0)
    if wall.wall_class == IMAGINARY_BOUNDARY:
        return ModelLabel(kind=LABEL_HILBERT_CHOW, params=tuple(sorted(mults, reverse=True)))
    k = mults[0]
    m = wall.m
    return ModelLabel(
        kind=LABEL_GRASSMANNIAN,
        params=(k, m + 2 * k, lattice.n - k * (m + k)),
    )


def contraction_type(
    lattice: FramedLattice,
    chamber: Chamber,
    h: Hyperplane,
    arrangement: Sequence[Hyperplane] | None = None,
) -> str:
    """DIVISORIAL for boundary walls, FLOP for internal walls of the chamber."""
    arrangement = build_arrangement(lattice) if arrangement is None else arrangement
    if not is_facet(lattice, chamber, h, arrangement):
        raise ValidationError("hyperplane does not support a wall of the chamber")
    cls = wall_class_of_hyperplane(h)
    return FLOP if cls == REAL_INTERNAL else DIVISORIAL


@dataclass(frozen=True)
class StratumAudit:
    rep_type: RepresentationType
    stratum_dim: int
    codim: int
    fibre_dim: int
    semismall_ok: bool
    equality: bool
    unstable_codim: int | None

    def to_json(self) -> dict:
        return {
            "rep_type": self.rep_type.to_json(),
            "codim": self.codim,
            "fibre_dim": self.fibre_dim,
            "passes": self.semismall_ok,
            "equality": self.equality,
            "unstable_codim": self.unstable_codim,
        }


@dataclass(frozen=True)
class SemismallReport:
    wall: WallInfo
    strata: tuple[StratumAudit, ...]
    passes: bool

    def to_json(self) -> dict:
        return {
            "wall": self.wall.to_json(),
            "strata": [s.to_json() for s in self.strata],
            "passes": self.passes,
        }


def semismall_audit(lattice: FramedLattice, theta0: StabilityParameter) -> SemismallReport:
    """Check 2 * fibre dim <= stratum codim for every stratum on a wall.

    Fibre dimensions come from the closed-form local models: punctual
    Hilbert scheme fibres sum(n_i - 1) on the imaginary wall and
    Grassmannian fibres k(m+k) on real walls.  On real internal walls the
    unstable-locus codimension codim - fibre = k(k+m) is checked against
    the m+1 lower bound.
    """
    wall = classify_wall(lattice, theta0)
    stray = _root_zeros_outside_span(lattice, theta0)
    if stray:
        raise WallPointError(
            "theta0 kills roots outside the wall span; not a generic wall point",
            hyperplanes=[wall.hyperplane],
        )
    n = lattice.n
    audits = []
    for tau in representation_types(lattice, lattice.v, theta0):
        dim = tau.stratum_dim
        codim = 2 * n - dim
        non_framing = tau.parts[1:]
        if not non_framing:
            fibre = 0
        elif wall.wall_class == IMAGINARY_BOUNDARY:
            fibre = sum(m - 1 for m, _ in non_framing)
        else:
            (k, _gamma), = non_framing
            fibre = k * (wall.m + k)
        ok = 2 * fibre <= codim
        unstable = None
        if wall.wall_class == REAL_INTERNAL and non_framing:
            unstable = codim - fibre
            ok = ok and unstable >= wall.m + 1
        audits.append(
            StratumAudit(
                rep_type=tau,
                stratum_dim=dim,
                codim=codim,
                fibre_dim=fibre,
                semismall_ok=ok,
                equality=(2 * fibre == codim),
                unstable_codim=unstable,
            )
        )
    return SemismallReport(
        wall=wall, strata=tuple(audits), passes=all(a.semismall_ok for a in audits)
    )


def adjacent_chamber_parameters(
    lattice: FramedLattice, theta0: StabilityParameter
) -> tuple[StabilityParameter, StabilityParameter]:
    """Deterministic parameters in the two chambers separated by the wall of theta0.

    Built as (G+1)*theta0 +/- e_j for the first coordinate j where the wall
    normal is non-zero; G bounds the coordinates of all wall normals, so
    every other sign is preserved.
    """
    wall = classify_wall(lattice, theta0)
    normal = wall.hyperplane.normal
    arrangement = build_arrangement(lattice)
    scale = 1 + max(max(abs(x) for x in h.normal) for h in arrangement)
    j = next(i for i in range(1, lattice.rank + 2) if normal[i] != 0)
    base = [scale * x for x in theta0.affine_values]
    plus = list(base)
    plus[j - 1] += 1
    minus = list(base)
    minus[j - 1] -= 1
    tplus = stability_from_affine(lattice, plus)
    tminus = stability_from_affine(lattice, minus)
    if tplus(normal) < 0:
        tplus, tminus = tminus, tplus
    return tplus, tminus
