"""Extended pseudometrics as exact matrices, and the metric-side constructions.

The quotient distance of a gluing is an all-pairs shortest path over the
(min, saturating-plus) semiring: metric hops cost their distance and jumps
inside a glued class cost nothing.  Closures run over integers after an
exact common-denominator rescale, with ``float('inf')`` as a pure sentinel
for the infinite element, so results stay exact.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CapExceeded, DomainError
from .foundations import ExtValue, FinMap, INFINITY, Partition, UnionFind, ZERO, minimum
from .verdicts import Verdict

INF = float("inf")


@dataclass(frozen=True, slots=True)
class ExtPseudoMetric:
    """A square matrix of extended values; axioms checked by the validator."""

    n_points: int
    rows: tuple[tuple[ExtValue, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n_points or any(len(r) != self.n_points for r in self.rows):
            raise DomainError("distance matrix is not square of the declared size")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[ExtValue]]) -> "ExtPseudoMetric":
        return ExtPseudoMetric(len(rows), tuple(tuple(r) for r in rows))

    @staticmethod
    def zero(n: int) -> "ExtPseudoMetric":
        return uniform_discrete(n, ZERO)

    def d(self, x: int, y: int) -> ExtValue:
        return self.rows[x][y]


def uniform_discrete(n: int, value: ExtValue) -> "ExtPseudoMetric":
    """Zero on the diagonal, ``value`` everywhere else."""
    rows = tuple(tuple(ZERO if x == y else value for y in range(n)) for x in range(n))
    return ExtPseudoMetric(n, rows)


def infinity_discrete(n: int) -> ExtPseudoMetric:
    return uniform_discrete(n, INFINITY)


def validate_pseudometric(m: ExtPseudoMetric) -> Verdict:
    """First violated axiom with a witness; triangle witnesses read (x, via, y)."""
    for x in range(m.n_points):
        if m.rows[x][x] != ZERO:
            return Verdict.failed("nonzero diagonal entry", witness=(x,))
    for x in range(m.n_points):
        for y in range(x + 1, m.n_points):
            if m.rows[x][y] != m.rows[y][x]:
                return Verdict.failed("asymmetric entry", witness=(x, y))
    for x in range(m.n_points):
        for y in range(m.n_points):
            for z in range(m.n_points):
                if m.rows[x][y] > m.rows[x][z] + m.rows[z][y]:
                    return Verdict.failed("triangle inequality fails", witness=(x, z, y))
    return Verdict.passed()


def is_extended_metric(m: ExtPseudoMetric) -> bool:
    """Zero exactly on the diagonal."""
    v = validate_pseudometric(m)
    if not v:
        raise DomainError(f"invalid pseudometric: {v.detail}")
    return all(m.rows[x][y] != ZERO
               for x in range(m.n_points) for y in range(m.n_points) if x != y)


def scaled_int_matrix(m: ExtPseudoMetric) -> tuple[int, list[list]]:
    """Exact rescale to integers; infinity becomes the float sentinel."""
    scale = 1
    for row in m.rows:
        for v in row:
            if v.frac is not None:
                scale = scale * v.frac.denominator // math.gcd(scale, v.frac.denominator)
    grid = [[INF if v.frac is None else int(v.frac * scale) for v in row] for row in m.rows]
    return scale, grid


def value_from_scaled(value, scale: int) -> ExtValue:
    if value == INF:
        return INFINITY
    return ExtValue(Fraction(int(value), scale))


def _closure_in_place(grid: list[list]) -> None:
    """Floyd-Warshall over (min, +) with saturation at the sentinel."""
    n = len(grid)
    for k in range(n):
        row_k = grid[k]
        for i in range(n):
            d_ik = grid[i][k]
            if d_ik == INF:
                continue
            row_i = grid[i]
            for j in range(n):
                alt = d_ik + row_k[j]
                if alt < row_i[j]:
                    row_i[j] = alt


def triangle_closure(m: ExtPseudoMetric) -> ExtPseudoMetric:
    """Shortest-path closure; enforces the triangle inequality exactly."""
    scale, grid = scaled_int_matrix(m)
    _closure_in_place(grid)
    rows = tuple(tuple(value_from_scaled(v, scale) for v in row) for row in grid)
    return ExtPseudoMetric(m.n_points, rows)


def glued_closure(m: ExtPseudoMetric, p: Partition) -> ExtPseudoMetric:
    """Pointwise chain infimum with zero-cost jumps inside each class.

    Entry (x, y) is the infimum over chains of metric hops whose consecutive
    endpoints may teleport within a class for free; it is constant on classes
    and is the largest pseudometric below ``m`` vanishing on class pairs.
    """
    if p.n_points != m.n_points:
        raise DomainError("partition is over a different index range")
    scale, grid = scaled_int_matrix(m)
    for cls in p.classes:
        for a in cls:
            row = grid[a]
            for b in cls:
                if row[b]:
                    row[b] = 0
    _closure_in_place(grid)
    rows = tuple(tuple(value_from_scaled(v, scale) for v in row) for row in grid)
    return ExtPseudoMetric(m.n_points, rows)


def chain_quotient_metric(m: ExtPseudoMetric, p: Partition) -> ExtPseudoMetric:
    """Quotient distance on the classes, read off class representatives."""
    v = validate_pseudometric(m)
    if not v:
        raise DomainError(f"invalid pseudometric: {v.detail}")
    glued = glued_closure(m, p)
    reps = [cls[0] for cls in p.classes]
    rows = tuple(tuple(glued.rows[a][b] for b in reps) for a in reps)
    return ExtPseudoMetric(len(reps), rows)


def chain_infimum_bruteforce(m: ExtPseudoMetric, p: Partition, x: int, y: int) -> ExtValue:
    """Exhaustive chain enumeration, independent of the closure code path.

    Chains alternate metric hops and free class jumps, starting exactly at
    ``x`` and ending exactly at ``y``.  Hop sources can be taken pairwise
    distinct: repeating one lets the chain be shortened without increasing
    its value, so the search is depth-bounded by the point count.  Partial
    sums at or above the incumbent are pruned.
    """
    n = m.n_points
    if not (0 <= x < n and 0 <= y < n):
        raise DomainError("endpoints outside the range")
    scale, grid = scaled_int_matrix(m)
    members = [tuple(cls) for cls in p.classes]
    class_of = p.class_of
    best = grid[x][y]

    def extend(endpoint: int, used: int, partial) -> None:
        nonlocal best
        for z in members[class_of[endpoint]]:
            bit = 1 << z
            if used & bit:
                continue
            row = grid[z]
            for w in range(n):
                value = partial + row[w]
                if value >= best:
                    continue
                if w == y:
                    best = value
                extend(w, used | bit, value)

    row_x = grid[x]
    for w in range(n):
        value = row_x[w]
        if value >= best:
            continue
        if w == y:
            best = value
        extend(w, 1 << x, value)
    return value_from_scaled(best, scale)


def metric_product_sup(ms: Sequence[ExtPseudoMetric], cap: int | None = None) -> ExtPseudoMetric:
    """Supremum metric on the lexicographically-indexed product."""
    total = 1
    for m in ms:
        total *= m.n_points
    if cap is not None and total > cap:
        raise CapExceeded(f"product of {total} points exceeds cap {cap}")
    tuples = list(itertools.product(*(range(m.n_points) for m in ms)))
    rows = []
    for a in tuples:
        row = []
        for b in tuples:
            value = ZERO
            for i, m in enumerate(ms):
                entry = m.rows[a[i]][b[i]]
                if entry > value:
                    value = entry
            row.append(value)
        rows.append(tuple(row))
    return ExtPseudoMetric(len(tuples), tuple(rows))


def metric_disjoint_union(ms: Sequence[ExtPseudoMetric]) -> ExtPseudoMetric:
    """Block-diagonal matrix with infinity across blocks."""
    total = sum(m.n_points for m in ms)
    rows = [[INFINITY] * total for _ in range(total)]
    offset = 0
    for m in ms:
        for i in range(m.n_points):
            for j in range(m.n_points):
                rows[offset + i][offset + j] = m.rows[i][j]
        offset += m.n_points
    return ExtPseudoMetric(total, tuple(tuple(r) for r in rows))


def truncate_metric(m: ExtPseudoMetric, lam: ExtValue) -> ExtPseudoMetric:
    """Entrywise minimum with a finite positive bound off the diagonal."""
    if not lam.is_finite or lam <= ZERO:
        raise DomainError("truncation level must be finite and positive")
    rows = tuple(tuple(v if x == y else minimum(v, lam)
                       for y, v in enumerate(row)) for x, row in enumerate(m.rows))
    return ExtPseudoMetric(m.n_points, rows)


def finiteness_components(m: ExtPseudoMetric) -> Partition:
    """Classes of pairwise-finite distance; transitive by the triangle inequality."""
    v = validate_pseudometric(m)
    if not v:
        raise DomainError(f"invalid pseudometric: {v.detail}")
    uf = UnionFind(m.n_points)
    for x in range(m.n_points):
        for y in range(x + 1, m.n_points):
            if m.rows[x][y].is_finite:
                uf.union(x, y)
    return Partition.from_class_of([uf.find(x) for x in range(m.n_points)])


def completion_finite(m: ExtPseudoMetric) -> tuple[ExtPseudoMetric, FinMap]:
    """Completion at finite scale: every finite extended metric space is complete.

    Returns the space unchanged together with the identity embedding, the
    finite instance of the dense isometric-embedding universal property.
    """
    if not is_extended_metric(m):
        raise DomainError("completion needs an extended metric")
    return m, FinMap.identity(m.n_points)


def length_distance_finite(m: ExtPseudoMetric, topology_is_discrete: bool) -> ExtPseudoMetric:
    """Length distance for finite discrete carriers: infinite off the diagonal.

    Continuous curves from the connected interval [0,1] into a finite
    discrete space are constant, so no rectifiable curve joins distinct
    points.
    """
    if not topology_is_discrete:
        raise DomainError(
            "length distance not computable for non-discrete finite topologies at finite scale")
    return infinity_discrete(m.n_points)


def distance_preserving(f: FinMap, m_src: ExtPseudoMetric, m_dst: ExtPseudoMetric) -> bool:
    for x in range(f.source_size):
        for y in range(x + 1, f.source_size):
            if m_src.rows[x][y] != m_dst.rows[f.image[x]][f.image[y]]:
                return False
    return True


def diameter(m: ExtPseudoMetric) -> ExtValue:
    out = ZERO
    for row in m.rows:
        for v in row:
            if v > out:
                out = v
    return out


def zero_partition(m: ExtPseudoMetric) -> Partition:
    """Classes of the relation d(x, y) = 0 (closed up transitively)."""
    uf = UnionFind(m.n_points)
    for x in range(m.n_points):
        for y in range(x + 1, m.n_points):
            if m.rows[x][y] == ZERO:
                uf.union(x, y)
    return Partition.from_class_of([uf.find(x) for x in range(m.n_points)])


def metric_subspace(m: ExtPseudoMetric, points: Sequence[int]) -> ExtPseudoMetric:
    points = sorted(set(points))
    rows = tuple(tuple(m.rows[a][b] for b in points) for a in points)
    return ExtPseudoMetric(len(points), rows)
