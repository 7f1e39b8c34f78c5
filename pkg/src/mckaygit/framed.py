"""The framed McKay quiver lattice, its Cartan form, and exact root enumeration.

Index convention: framed vectors are integer tuples of length r+2 ordered
(infinity, 0, 1, ..., r), i.e. position 0 is the framing vertex and
position 1+i is vertex i of the affine diagram.  Affine vectors (length
r+1) are indexed by the affine diagram directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ValidationError
from .linalg import lattice_points_of_norm_at_most
from .root_data import RootSystemData, build_root_system

INF = 0  # position of the framing vertex in framed tuples


@dataclass(frozen=True)
class FramedLattice:
    root_data: RootSystemData
    n: int
    cartan: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.root_data.rank

    @property
    def size(self) -> int:
        return self.rank + 2

    @property
    def delta(self) -> tuple[int, ...]:
        """The minimal imaginary root as a framed vector."""
        return (0,) + self.root_data.delta

    @property
    def v(self) -> tuple[int, ...]:
        """The framed dimension vector rho_inf + n*delta."""
        return (1,) + tuple(self.n * d for d in self.root_data.delta)

    def rho(self, i) -> tuple[int, ...]:
        """Coordinate vector of a vertex; i is "inf" or an affine vertex index."""
        pos = INF if i == "inf" else 1 + i
        return tuple(1 if k == pos else 0 for k in range(self.size))

    def framed(self, affine_vec, inf: int = 0) -> tuple[int, ...]:
        if len(affine_vec) != self.rank + 1:
            raise ValidationError("affine vector must have length r+1")
        return (inf,) + tuple(affine_vec)

    def affine_part(self, vec) -> tuple[int, ...]:
        return tuple(vec[1:])

    def finite_root_framed(self, alpha) -> tuple[int, ...]:
        """Lift a finite root (length r) to a framed vector."""
        return (0, 0) + tuple(alpha)


@lru_cache(maxsize=None)
def framed_lattice(kind: str, rank: int, n: int) -> FramedLattice:
    """Build the framed lattice for Gamma of the given type and n >= 1."""
    if n < 1:
        raise ValidationError("n must be >= 1, got %r" % (n,))
    data = build_root_system(kind, rank)
    r = data.rank
    size = r + 2
    adj = [[0] * size for _ in range(size)]
    affine_adj = [
        [(2 if i == j else 0) - data.cartan_affine[i][j] for j in range(r + 1)]
        for i in range(r + 1)
    ]
    for i in range(r + 1):
        for j in range(r + 1):
            adj[1 + i][1 + j] = affine_adj[i][j]
    adj[INF][1] = adj[1][INF] = 1  # framing edge inf - 0
    cartan = tuple(
        tuple((2 if i == j else 0) - adj[i][j] for j in range(size)) for i in range(size)
    )
    return FramedLattice(root_data=data, n=n, cartan=cartan)


def cartan_pairing(lattice: FramedLattice, a, b) -> int:
    """The symmetric bilinear form a^T C b on the framed lattice."""
    c = lattice.cartan
    size = lattice.size
    if len(a) != size or len(b) != size:
        raise ValidationError("framed vectors must have length %d" % size)
    return sum(a[i] * c[i][j] * b[j] for i in range(size) for j in range(size))


def p_form(lattice: FramedLattice, a) -> int:
    """The quadratic form p(a) = 1 - (a,a)/2; integer on this even lattice."""
    q = cartan_pairing(lattice, a, a)
    if q % 2 != 0:
        raise AssertionError("lattice is not even")
    return 1 - q // 2


def finite_gram(lattice: FramedLattice) -> tuple[tuple[int, ...], ...]:
    """Gram matrix of the Cartan form restricted to vertices 1..r (positive definite)."""
    return lattice.root_data.cartan_finite


def _affine_positive_roots_below(lattice: FramedLattice, bound_affine) -> list[tuple[int, ...]]:
    data = lattice.root_data
    r = data.rank
    delta = data.delta
    if any(b < 0 for b in bound_affine):
        return []
    candidates = set()
    m_cap = max(bound_affine) + 1
    for m in range(0, m_cap + 1):
        base = tuple(m * d for d in delta)
        if m >= 1:
            candidates.add(base)
        for alpha in data.positive_roots:
            plus = tuple(base[0:1] + tuple(base[1 + i] + alpha[i] for i in range(r)))
            candidates.add(plus)
            if m >= 1:
                minus = tuple(base[0:1] + tuple(base[1 + i] - alpha[i] for i in range(r)))
                candidates.add(minus)
    out = [
        g for g in candidates
        if any(x > 0 for x in g) and all(0 <= x <= b for x, b in zip(g, bound_affine))
    ]
    return out


def _frenkel_kac_roots_below(lattice: FramedLattice, bound) -> list[tuple[int, ...]]:
    """Roots with infinity-coordinate 1 below the bound.

    These are exactly rho_inf + m*delta + (nu,nu)/2 * delta - nu for m >= 0
    and nu in the finite root lattice (vertices 1..r); the affine coordinate
    is carried entirely by the delta multiple.
    """
    data = lattice.root_data
    r = data.rank
    delta = data.delta
    b0 = bound[1]
    if b0 < 0:
        return []
    out = []
    for nu in lattice_points_of_norm_at_most(finite_gram(lattice), 2 * b0):
        qq = sum(
            nu[i] * data.cartan_finite[i][j] * nu[j] for i in range(r) for j in range(r)
        )
        assert qq % 2 == 0
        q = qq // 2
        for m in range(0, b0 - q + 1):
            coeff = m + q
            gamma = [1, coeff * delta[0]]
            ok = True
            for i in range(r):
                x = coeff * delta[1 + i] - nu[i]
                if x < 0 or x > bound[2 + i]:
                    ok = False
                    break
                gamma.append(x)
            if ok and gamma[1] <= bound[1]:
                out.append(tuple(gamma))
    return out


def enumerate_positive_roots_below(lattice: FramedLattice, bound) -> tuple[tuple[int, ...], ...]:
    """All positive roots gamma of the framed root system with 0 < gamma <= bound.

    The bound must have infinity-coordinate 0 or 1; larger framing
    multiplicities never occur for the moduli considered here and are
    rejected.  Output is deduplicated and sorted in graded-lex order.
    """
    if len(bound) != lattice.size:
        raise ValidationError("bound must be a framed vector")
    if bound[INF] >= 2:
        raise ValidationError("bounds with infinity-coordinate >= 2 are out of scope")
    return _enumerate_cached(lattice, tuple(bound))


@lru_cache(maxsize=65536)
def _enumerate_cached(lattice: FramedLattice, bound: tuple) -> tuple[tuple[int, ...], ...]:
    roots = set()
    affine_bound = lattice.affine_part(bound)
    for g in _affine_positive_roots_below(lattice, affine_bound):
        roots.add((0,) + g)
    if bound[INF] == 1:
        roots.update(_frenkel_kac_roots_below(lattice, bound))
    return tuple(sorted(roots, key=lambda g: (sum(g), g)))


def is_positive_root(lattice: FramedLattice, gamma) -> bool:
    """Brute-force Kac criterion: reflect towards the fundamental region.

    Independent of the Frenkel-Kac enumeration; valid whenever the framed
    quiver is loop-free (every non-trivial Gamma).  A nonzero non-negative
    vector is a positive root iff repeated reflection at vertices pairing
    positively either reaches a simple root or lands in the fundamental
    region {(gamma, rho_i) <= 0 for all i} with connected support.
    """
    if lattice.root_data.kind == "TRIVIAL":
        raise ValidationError("Kac reflection criterion needs a loop-free quiver")
    size = lattice.size
    c = lattice.cartan
    g = list(gamma)
    if len(g) != size:
        raise ValidationError("framed vector expected")
    if all(x == 0 for x in g) or any(x < 0 for x in g):
        return False
    while True:
        if sum(g) == 1:
            return True  # a simple root
        pairings = [sum(c[i][j] * g[j] for j in range(size)) for i in range(size)]
        pos = [i for i in range(size) if pairings[i] > 0]
        if not pos:
            return _support_connected(lattice, g)
        i = pos[0]
        g[i] -= pairings[i]
        if g[i] < 0:
            return False


def _support_connected(lattice: FramedLattice, g) -> bool:
    size = lattice.size
    adj = [
        [2 - lattice.cartan[i][j] if i == j else -lattice.cartan[i][j] for j in range(size)]
        for i in range(size)
    ]
    support = [i for i in range(size) if g[i] != 0]
    if not support:
        return False
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        i = stack.pop()
        for j in support:
            if j not in seen and adj[i][j] > 0:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(support)
