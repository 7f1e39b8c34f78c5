"""Exact rational linear algebra and a small two-phase simplex solver.

Everything here works over `fractions.Fraction`; no floating point is used
anywhere in the package.  Vectors are tuples, matrices are tuples/lists of
row tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

Vec = tuple
Q = Fraction

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise ValueError("dimension mismatch: %d vs %d" % (len(a), len(b)))
    return sum(x * y for x, y in zip(a, b))


def vec_add(a: Sequence, b: Sequence) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence, b: Sequence) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a: Sequence) -> Vec:
    return tuple(c * x for x in a)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Vec:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def identity_matrix(d: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def primitive_vector(v: Sequence) -> Vec:
    """Clear denominators and divide by the gcd, preserving direction.

    The zero vector is returned unchanged.
    """
    fracs = [Q(x) for x in v]
    if all(x == 0 for x in fracs):
        return tuple(0 for _ in fracs)
    den = 1
    for x in fracs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def row_reduce(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rref rows, pivot column indices)."""
    m = [[Q(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def matrix_rank(rows: Iterable[Sequence]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Iterable[Sequence]) -> list[Vec]:
    """Basis of the right nullspace, one primitive integer vector per free column."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * ncols
        v[f] = Q(1)
        for r, c in enumerate(pivots):
            v[c] = -rref[r][f]
        basis.append(primitive_vector(v))
    return basis


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> Vec | None:
    """One exact solution of A x = b, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    rref, pivots = row_reduce(aug)
    for r in range(len(rref)):
        if all(rref[r][c] == 0 for c in range(ncols)) and rref[r][ncols] != 0:
            return None
    x = [Q(0)] * ncols
    for r, c in enumerate(pivots):
        if c == ncols:
            return None
        x[c] = rref[r][ncols]
    return tuple(x)


class _Dictionary:
    """Simplex dictionary: basic[i] = row constant + sum of coeffs * nonbasic vars."""

    def __init__(self, nonbasic, basic, rows, obj):
        self.nonbasic = nonbasic          # list of variable ids
        self.basic = basic                # list of variable ids
        self.rows = rows                  # rows[i] = [const, coeff per nonbasic]
        self.obj = obj                    # [const, coeff per nonbasic]

    def pivot(self, enter_pos: int, leave_pos: int) -> None:
        row = self.rows[leave_pos]
        coef = row[enter_pos + 1]
        # Solve the leaving row for the entering variable.
        new_row = [Q(0)] * len(row)
        new_row[0] = -row[0] / coef
        for k in range(1, len(row)):
            if k == enter_pos + 1:
                new_row[k] = Q(1) / coef
            else:
                new_row[k] = -row[k] / coef
        evar = self.nonbasic[enter_pos]
        lvar = self.basic[leave_pos]
        self.nonbasic[enter_pos] = lvar
        self.basic[leave_pos] = evar
        self.rows[leave_pos] = new_row

        def substitute(target):
            c = target[enter_pos + 1]
            if c == 0:
                return target
            out = list(target)
            out[enter_pos + 1] = Q(0)
            for k in range(len(target)):
                out[k] += c * new_row[k]
            return out

        for i in range(len(self.rows)):
            if i != leave_pos:
                self.rows[i] = substitute(self.rows[i])
        self.obj = substitute(self.obj)

    def run(self) -> str:
        """Bland's rule simplex loop; dictionary must be primal feasible."""
        while True:
            enter_pos = None
            best_var = None
            for j in range(len(self.nonbasic)):
                if self.obj[j + 1] > 0 and (best_var is None or self.nonbasic[j] < best_var):
                    best_var = self.nonbasic[j]
                    enter_pos = j
            if enter_pos is None:
                return OPTIMAL
            leave_pos = None
            best_ratio = None
            best_leave_var = None
            for i in range(len(self.rows)):
                c = self.rows[i][enter_pos + 1]
                if c < 0:
                    ratio = -self.rows[i][0] / c
                    key = (ratio, self.basic[i])
                    if best_ratio is None or key < (best_ratio, best_leave_var):
                        best_ratio, best_leave_var, leave_pos = ratio, self.basic[i], i
            if leave_pos is None:
                return UNBOUNDED
            self.pivot(enter_pos, leave_pos)


def simplex_maximize(A: Sequence[Sequence], b: Sequence, c: Sequence):
    """Maximize c.x subject to A x <= b and x >= 0, exactly.

    Returns (status, x, value); x and value are None unless status is
    "optimal".  Bland's rule is used throughout, so the method terminates.
    """
    m = len(A)
    n = len(c)
    A = [[Q(v) for v in row] for row in A]
    b = [Q(v) for v in b]
    c = [Q(v) for v in c]

    # Dictionary with slack variables n..n+m-1 basic: w_i = b_i - A_i x.
    nonbasic = list(range(n))
    basic = list(range(n, n + m))
    rows = [[b[i]] + [-A[i][j] for j in range(n)] for i in range(m)]

    if any(b[i] < 0 for i in range(m)):
        # Phase one: maximize -x0 with x0 added to every row.
        x0 = n + m
        nonbasic.append(x0)
        for i in range(m):
            rows[i].append(Q(1))
        d = _Dictionary(nonbasic, basic, rows, [Q(0)] + [Q(0)] * n + [Q(-1)])
        # Special first pivot makes the dictionary feasible.
        leave = min(range(m), key=lambda i: (rows[i][0], basic[i]))
        d.pivot(n, leave)
        status = d.run()
        assert status == OPTIMAL
        if d.obj[0] != 0:
            return INFEASIBLE, None, None
        if x0 in d.basic:
            i = d.basic.index(x0)
            j = next((j for j in range(len(d.nonbasic)) if d.rows[i][j + 1] != 0), None)
            if j is None:
                del d.basic[i]
                del d.rows[i]
            else:
                d.pivot(j, i)
        col = d.nonbasic.index(x0)
        del d.nonbasic[col]
        for i in range(len(d.rows)):
            del d.rows[i][col + 1]
        # Rebuild the phase-two objective in terms of the current nonbasics.
        obj = [Q(0)] * (len(d.nonbasic) + 1)
        for j, var in enumerate(d.nonbasic):
            if var < n:
                obj[j + 1] += c[var]
        for i, var in enumerate(d.basic):
            if var < n and c[var] != 0:
                for k in range(len(obj)):
                    obj[k] += c[var] * d.rows[i][k]
        d.obj = obj
    else:
        d = _Dictionary(nonbasic, basic, rows, [Q(0)] + list(c))

    status = d.run()
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [Q(0)] * n
    for i, var in enumerate(d.basic):
        if var < n:
            x[var] = d.rows[i][0]
    return OPTIMAL, tuple(x), d.obj[0]


def interior_witness(constraints: Sequence[tuple], dim: int, include_orthant: bool = True):
    """Point satisfying every constraint strictly, with x >= 0, or None.

    Each constraint is a pair (a, rhs) read as a.x > rhs; the witness
    maximises a shared slack margin capped at 1, so a positive optimum
    certifies a full-dimensional region.
    """
    # Variables (x_0..x_{dim-1}, t); maximise t.
    A = []
    b = []
    for a, rhs in constraints:
        A.append([-Q(v) for v in a] + [Q(1)])
        b.append(-Q(rhs))
    if include_orthant:
        for i in range(dim):
            row = [Q(0)] * (dim + 1)
            row[i] = Q(-1)
            row[dim] = Q(1)
            A.append(row)
            b.append(Q(0))
    A.append([Q(0)] * dim + [Q(1)])
    b.append(Q(1))
    status, x, value = simplex_maximize(A, b, [Q(0)] * dim + [Q(1)])
    if status != OPTIMAL or value <= 0:
        return None
    return tuple(x[:dim])


def cone_interior_witness(strict: Sequence[Sequence], on: Sequence[Sequence] = ()):
    """Witness with g.x > 0 for every g in `strict` and h.x = 0 for h in `on`.

    Variables are sign-free (handled by an x = u - w split).  Returns None
    when no such point exists.
    """
    if not strict and not on:
        return None
    dim = len(strict[0]) if strict else len(on[0])
    # Variables u (dim), w (dim), t; x = u - w; maximise t <= 1.
    nvars = 2 * dim + 1
    A = []
    b = []
    for g in strict:
        row = [-Q(v) for v in g] + [Q(v) for v in g] + [Q(1)]
        A.append(row)
        b.append(Q(0))
    for h in on:
        A.append([Q(v) for v in h] + [-Q(v) for v in h] + [Q(0)])
        b.append(Q(0))
        A.append([-Q(v) for v in h] + [Q(v) for v in h] + [Q(0)])
        b.append(Q(0))
    row = [Q(0)] * nvars
    row[-1] = Q(1)
    A.append(row)
    b.append(Q(1))
    c = [Q(0)] * nvars
    c[-1] = Q(1)
    status, x, value = simplex_maximize(A, b, c)
    if status != OPTIMAL or value <= 0:
        return None
    return tuple(x[i] - x[dim + i] for i in range(dim))


def region_is_unbounded(constraints: Sequence[tuple], dim: int) -> bool:
    """Whether {x >= 0 : a.x > rhs for all constraints} is unbounded.

    The region is assumed non-empty with non-empty interior.
    """
    A = []
    b = []
    for a, rhs in constraints:
        A.append([-Q(v) for v in a])
        b.append(-Q(rhs))
    status, _, _ = simplex_maximize(A, b, [Q(1)] * dim)
    return status == UNBOUNDED


def floor_sqrt(x: Fraction) -> int:
    """floor(sqrt(x)) for a non-negative rational, exactly."""
    if x < 0:
        raise ValueError("negative radicand")
    return isqrt(x.numerator * x.denominator) // x.denominator


def frac_floor(x) -> int:
    x = Q(x)
    return x.numerator // x.denominator


def frac_ceil(x) -> int:
    return -frac_floor(-Q(x))


def lattice_points_of_norm_at_most(gram: Sequence[Sequence[int]], bound) -> list[Vec]:
    """All integer vectors v with v^T G v <= bound, G positive definite.

    Classic recursive enumeration from the rational Cholesky decomposition
    Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.
    """
    r = len(gram)
    if r == 0:
        return [()] if bound >= 0 else []
    a = [[Q(x) for x in row] for row in gram]
    d = [Q(0)] * r
    u = [[Q(0)] * r for _ in range(r)]
    for i in range(r):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, r):
            u[i][j] = a[i][j] / d[i]
        for k in range(i + 1, r):
            for l in range(i + 1, r):
                a[k][l] -= a[k][i] * a[i][l] / d[i]
    out: list[Vec] = []
    x = [0] * r

    def rec(i: int, remaining: Fraction) -> None:
        if i < 0:
            out.append(tuple(x))
            return
        centre = sum(u[i][j] * x[j] for j in range(i + 1, r))
        lim = floor_sqrt(remaining / d[i])
        # |x_i + centre| <= sqrt(remaining/d_i) < lim + 1.
        for xi in range(frac_floor(-centre) - lim - 1, frac_ceil(-centre) + lim + 2):
            val = d[i] * (xi + centre) ** 2
            if val <= remaining:
                x[i] = xi
                rec(i - 1, remaining - val)
        x[i] = 0

    rec(r - 1, Q(bound))
    return sorted(out)
