"""Root filtering, Sigma_theta membership, canonical decompositions and strata.

The canonical decomposition of a dimension vector w with respect to theta
is the unique decomposition into Sigma_theta elements maximising the total
of the quadratic form p; for the distinguished vector v = rho_inf + n*delta
there is a closed-form fast path: [v] when theta_inf != 0, and
[rho_inf, delta x n] when theta_inf = 0.

Sigma_theta membership is decided by exhaustive multiset-decomposition
search with memoisation, which is practical at desk scale only; larger
instances fail loudly via the resource cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arrangement import Hyperplane, StabilityParameter, build_arrangement
from .errors import NotEffectiveError, ResourceCapError, ValidationError
from .framed import FramedLattice, enumerate_positive_roots_below, p_form

DEFAULT_STATE_CAP = 2 * 10**6

GENERIC_SMOOTH = "GENERIC_SMOOTH"
SMOOTH_NOT_GENERIC = "SMOOTH_NOT_GENERIC"
NON_GENERIC = "NON_GENERIC"


def r_theta_plus(lattice: FramedLattice, theta: StabilityParameter, bound) -> list[tuple]:
    """Positive roots gamma <= bound with theta(gamma) = 0, graded-lex order."""
    return [g for g in enumerate_positive_roots_below(lattice, bound) if theta(g) == 0]


def _vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _leq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


class _DecompositionSearch:
    """Maximise the p-sum over multiset decompositions into a fixed root list.

    Parts are chosen with non-decreasing list index, so states are keyed by
    (remaining vector, minimal admissible index).  The memo size is capped.
    """

    def __init__(self, roots: Sequence[tuple], pvals: Sequence[int], cap: int):
        self.roots = list(roots)
        self.pvals = list(pvals)
        self.cap = cap
        self.memo: dict = {}

    def best(self, remaining: tuple, min_idx: int):
        """(max p-sum, parts) over decompositions into >= 1 part, or None."""
        if all(x == 0 for x in remaining):
            return (0, ())
        key = (remaining, min_idx)
        if key in self.memo:
            return self.memo[key]
        if len(self.memo) > self.cap:
            raise ResourceCapError("decomposition search exceeded its state cap")
        out = None
        for idx in range(min_idx, len(self.roots)):
            g = self.roots[idx]
            if not _leq(g, remaining):
                continue
            rest = self.best(_vec_sub(remaining, g), idx)
            if rest is None:
                continue
            cand = (self.pvals[idx] + rest[0], ((idx,) + rest[1]))
            if out is None or cand[0] > out[0]:
                out = cand
        self.memo[key] = out
        return out


def is_effective(lattice: FramedLattice, w, roots: Sequence[tuple]) -> bool:
    """Whether w is an N-combination of the given roots."""
    roots = [g for g in roots if _leq(g, w)]
    search = _DecompositionSearch(roots, [0] * len(roots), DEFAULT_STATE_CAP)
    return search.best(tuple(w), 0) is not None


def sigma_theta_contains(
    lattice: FramedLattice,
    alpha,
    theta: StabilityParameter,
    state_cap: int = DEFAULT_STATE_CAP,
) -> bool:
    """Membership of alpha in Sigma_theta.

    True iff every proper decomposition of alpha into R_theta^+ parts has
    strictly smaller p-sum than p(alpha); equivalently the best p-sum over
    decompositions with at least two parts stays below p(alpha).
    """
    roots = r_theta_plus(lattice, theta, alpha)
    if tuple(alpha) not in [tuple(g) for g in roots]:
        raise ValidationError("alpha must lie in R_theta^+")
    pvals = [p_form(lattice, g) for g in roots]
    search = _DecompositionSearch(roots, pvals, state_cap)
    target = p_form(lattice, tuple(alpha))
    best_proper = None
    for idx, g in enumerate(roots):
        if tuple(g) == tuple(alpha) or not _leq(g, alpha):
            continue
        rest = search.best(_vec_sub(tuple(alpha), g), idx)
        if rest is None:
            continue
        total = pvals[idx] + rest[0]
        if best_proper is None or total > best_proper:
            best_proper = total
    if best_proper is None:
        return True
    return best_proper < target


def sigma_theta(
    lattice: FramedLattice,
    theta: StabilityParameter,
    bound,
    state_cap: int = DEFAULT_STATE_CAP,
) -> list[tuple]:
    """All elements of Sigma_theta below the bound."""
    return [
        g
        for g in r_theta_plus(lattice, theta, bound)
        if sigma_theta_contains(lattice, g, theta, state_cap)
    ]


@dataclass(frozen=True)
class CanonicalDecomposition:
    summands: tuple[tuple[int, ...], ...]
    p_total: int

    def to_json(self) -> dict:
        return {"summands": [list(s) for s in self.summands], "p_total": self.p_total}


def canonical_decomposition(
    lattice: FramedLattice,
    w,
    theta: StabilityParameter,
    state_cap: int = DEFAULT_STATE_CAP,
) -> CanonicalDecomposition:
    """The canonical decomposition of w with respect to theta.

    For w = rho_inf + n*delta the closed form applies: trivial
    decomposition when theta_inf != 0, and rho_inf plus n copies of delta
    when theta_inf = 0.  Other effective vectors go through the exhaustive
    p-sum maximiser over Sigma_theta.
    """
    w = tuple(w)
    if w == lattice.v:
        if theta.values[0] != 0:
            return CanonicalDecomposition(summands=(w,), p_total=lattice.n)
        summands = tuple(sorted([lattice.rho("inf")] + [lattice.delta] * lattice.n))
        return CanonicalDecomposition(summands=summands, p_total=lattice.n)
    return _canonical_by_search(lattice, w, theta, state_cap)


def _canonical_by_search(lattice, w, theta, state_cap) -> CanonicalDecomposition:
    roots = r_theta_plus(lattice, theta, w)
    if not is_effective(lattice, w, roots):
        raise NotEffectiveError("vector is not an N-combination of R_theta^+")
    sig = [g for g in roots if sigma_theta_contains(lattice, g, theta, state_cap)]
    pvals = [p_form(lattice, g) for g in sig]
    search = _DecompositionSearch(sig, pvals, state_cap)
    best = search.best(w, 0)
    if best is None:
        raise NotEffectiveError("vector admits no Sigma_theta decomposition")
    summands = tuple(sorted(sig[idx] for idx in best[1]))
    return CanonicalDecomposition(summands=summands, p_total=best[0])


@dataclass(frozen=True)
class RepresentationType:
    """A stratum label: multiplicities paired with Sigma_theta roots.

    The unique part with framing coordinate 1 comes first; repeated roots
    across distinct parts are necessarily imaginary.
    """

    parts: tuple[tuple[int, tuple[int, ...]], ...]
    stratum_dim: int

    def to_json(self) -> dict:
        return {
            "parts": [{"mult": m, "root": list(g)} for m, g in self.parts],
            "stratum_dim": self.stratum_dim,
        }


def _partitions(k: int):
    """Partitions of k as non-increasing tuples."""
    if k == 0:
        yield ()
        return

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    yield from rec(k, k)


def _grouped_decompositions(w, roots, cap):
    """Multisets {root: multiplicity} summing to w, parts from the given list."""
    out = []

    def rec(remaining, idx, acc):
        if len(out) > cap:
            raise ResourceCapError("stratum enumeration exceeded its cap")
        if all(x == 0 for x in remaining):
            out.append(dict(acc))
            return
        if idx >= len(roots):
            return
        g = roots[idx]
        max_mult = 0
        probe = remaining
        while _leq(g, probe):
            probe = _vec_sub(probe, g)
            max_mult += 1
        for mult in range(max_mult, -1, -1):
            if mult:
                acc[g] = mult
            rec(
                tuple(x - mult * y for x, y in zip(remaining, g)),
                idx + 1,
                acc,
            )
            acc.pop(g, None)

    rec(tuple(w), 0, {})
    return out


def representation_types(
    lattice: FramedLattice,
    w,
    theta: StabilityParameter,
    state_cap: int = DEFAULT_STATE_CAP,
) -> list[RepresentationType]:
    """All representation types of w at theta, with stratum dimensions.

    A type assigns the full multiplicity of each real root to a single
    part, while an imaginary root used with total multiplicity M
    contributes one family of parts per partition of M.
    """
    w = tuple(w)
    if w[0] != 1:
        raise ValidationError("representation types need a framing multiplicity of 1")
    sig = sigma_theta(lattice, theta, w, state_cap)
    pcache = {g: p_form(lattice, g) for g in sig}
    types = []
    for grouped in _grouped_decompositions(w, sig, cap=state_cap):
        expansions = [[]]
        for g in sorted(grouped):
            mult = grouped[g]
            if pcache[g] == 0:
                for e in expansions:
                    e.append((mult, g))
            else:
                new = []
                for lam in _partitions(mult):
                    for e in expansions:
                        new.append(e + [(part, g) for part in lam])
                expansions = new
        for parts in expansions:
            framing = [pg for pg in parts if pg[1][0] == 1]
            others = sorted(
                (pg for pg in parts if pg[1][0] != 1),
                key=lambda pg: ((sum(pg[1]), pg[1]), -pg[0]),
            )
            if len(framing) != 1 or framing[0][0] != 1:
                raise AssertionError("expected exactly one framing part of multiplicity 1")
            ordered = tuple(framing + others)
            dim = 2 * sum(pcache[g] for _, g in ordered)
            types.append(RepresentationType(parts=ordered, stratum_dim=dim))
    return sorted(types, key=lambda t: (-t.stratum_dim, t.parts))


@dataclass(frozen=True)
class ParameterClassification:
    status: str
    hyperplanes: tuple[Hyperplane, ...]

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "hyperplanes": [h.to_json() for h in self.hyperplanes],
        }


def classify_parameter(lattice: FramedLattice, theta: StabilityParameter) -> ParameterClassification:
    """Genericity/smoothness classification of a stability parameter.

    For n > 1 the moduli space is smooth iff theta avoids every wall
    hyperplane.  For n = 1 smoothness only requires avoiding the real-root
    walls; a parameter generic in delta^perp alone gives a smooth but
    strictly polystable moduli space and is flagged separately.
    """
    zeros = tuple(
        h for h in build_arrangement(lattice) if theta(h.normal) == 0
    )
    if not zeros:
        return ParameterClassification(status=GENERIC_SMOOTH, hyperplanes=())
    if lattice.n == 1 and all(h.tag == "delta" for h in zeros):
        return ParameterClassification(status=SMOOTH_NOT_GENERIC, hyperplanes=zeros)
    return ParameterClassification(status=NON_GENERIC, hyperplanes=zeros)
