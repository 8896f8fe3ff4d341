"""Finite topologies stored as minimal neighborhoods.

A finite topology is determined by the smallest open set around each point,
and that vector is the canonical representation here: it is polynomial-size
even for product spaces whose full open family would be astronomically
large.  The family of opens is exactly the set of unions of minimal
neighborhoods and can be materialized on demand under a cap.  Subsets are
bitmasks over point indices throughout.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .caps import Caps, effective_caps
from .errors import CapExceeded, DomainError
from .foundations import FinMap, Partition, UnionFind
from .verdicts import Verdict


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(points: Iterable[int]) -> int:
    out = 0
    for p in points:
        out |= 1 << p
    return out


@dataclass(frozen=True, slots=True)
class FiniteTopology:
    """A topology on points 0..n-1, as the vector of minimal neighborhoods.

    ``min_nbhds[x]`` is the bitmask of the smallest open set containing
    ``x``.  Coherence (reflexivity and transitivity of the induced
    specialization relation) is what makes such a vector a topology; the
    canonical constructors guarantee it, :func:`validate_topology` checks it.
    """

    n_points: int
    min_nbhds: tuple[int, ...]

    @staticmethod
    def discrete(n: int) -> "FiniteTopology":
        return FiniteTopology(n, tuple(1 << x for x in range(n)))

    @staticmethod
    def indiscrete(n: int) -> "FiniteTopology":
        full = (1 << n) - 1
        return FiniteTopology(n, (full,) * n)

    @staticmethod
    def from_opens(n: int, opens: Iterable[int]) -> "FiniteTopology":
        family = tuple(sorted(set(opens)))
        verdict = validate_opens(n, family)
        if not verdict:
            raise DomainError(f"not a topology: {verdict.detail}")
        nbhds = []
        for x in range(n):
            u = (1 << n) - 1
            for o in family:
                if o >> x & 1:
                    u &= o
            nbhds.append(u)
        return FiniteTopology(n, tuple(nbhds))

    @staticmethod
    def from_preorder(leq_rows: Sequence[int]) -> "FiniteTopology":
        """Build from the relation rows ``leq_rows[y] = mask of {x : x <= y}``."""
        t = FiniteTopology(len(leq_rows), tuple(leq_rows))
        v = validate_topology(t)
        if not v:
            raise DomainError(f"not a preorder: {v.detail}")
        return t

    def is_open(self, mask: int) -> bool:
        return all(self.min_nbhds[x] | mask == mask for x in _bits(mask))

    def opens(self, cap: int | None = None) -> tuple[int, ...]:
        """All open sets (unions of minimal neighborhoods), sorted."""
        if cap is None:
            cap = effective_caps().opens
        base = sorted(set(self.min_nbhds))
        family = {0}
        frontier = [0]
        while frontier:
            current = frontier.pop()
            for b in base:
                u = current | b
                if u not in family:
                    if len(family) >= cap:
                        raise CapExceeded(f"open family exceeds cap {cap}")
                    family.add(u)
                    frontier.append(u)
        return tuple(sorted(family))


def validate_opens(n: int, opens: Sequence[int]) -> Verdict:
    """Check the open-set axioms on an explicit family of bitmasks."""
    full = (1 << n) - 1
    family = set(opens)
    if any(o < 0 or o > full for o in family):
        return Verdict.failed("a member is not a subset of the point range")
    if 0 not in family:
        return Verdict.failed("missing the empty set")
    if full not in family:
        return Verdict.failed("missing the full set")
    ordered = sorted(family)
    for a, b in itertools.combinations(ordered, 2):
        if a | b not in family:
            return Verdict.failed("family is not closed under union",
                                  witness=(sorted(_bits(a)), sorted(_bits(b))))
        if a & b not in family:
            return Verdict.failed("family is not closed under intersection",
                                  witness=(sorted(_bits(a)), sorted(_bits(b))))
    return Verdict.passed()


def validate_topology(t: FiniteTopology) -> Verdict:
    """Check coherence of the minimal-neighborhood vector."""
    if len(t.min_nbhds) != t.n_points:
        return Verdict.failed("neighborhood vector length differs from point count")
    full = (1 << t.n_points) - 1
    for x, u in enumerate(t.min_nbhds):
        if u < 0 or u > full:
            return Verdict.failed("neighborhood is not a subset of the point range", witness=(x,))
        if not u >> x & 1:
            return Verdict.failed("minimal neighborhood misses its own point", witness=(x,))
        for y in _bits(u):
            if t.min_nbhds[y] | u != u:
                return Verdict.failed("neighborhoods are not transitively closed", witness=(x, y))
    return Verdict.passed()


def minimal_neighborhoods(t: FiniteTopology) -> tuple[int, ...]:
    """The smallest open set around each point; contained in every open containing it."""
    v = validate_topology(t)
    if not v:
        raise DomainError(f"invalid topology: {v.detail}")
    return t.min_nbhds


@dataclass(frozen=True, slots=True)
class SpecializationPreorder:
    """The relation ``x <= y iff x lies in the minimal neighborhood of y``.

    Finite topologies and preorders are two encodings of the same data;
    ``rows[y]`` is the bitmask of points below ``y``.
    """

    rows: tuple[int, ...]

    @staticmethod
    def of(t: FiniteTopology) -> "SpecializationPreorder":
        return SpecializationPreorder(minimal_neighborhoods(t))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.rows[y] >> x & 1)

    def matrix(self) -> tuple[tuple[bool, ...], ...]:
        n = len(self.rows)
        return tuple(tuple(self.leq(x, y) for y in range(n)) for x in range(n))

    def topology(self) -> FiniteTopology:
        return FiniteTopology.from_preorder(self.rows)


@functools.lru_cache(maxsize=65536)
def continuity_partition(t: FiniteTopology) -> Partition:
    """Components of the relation ``y in min_nbhd(x)``.

    A real-valued function is continuous from ``t`` exactly when it is
    constant on each class: continuity into a discrete codomain forces
    constancy along minimal neighborhoods, and conversely class-indicators
    have open preimages.
    """
    v = validate_topology(t)
    if not v:
        raise DomainError(f"invalid topology: {v.detail}")
    uf = UnionFind(t.n_points)
    for x, u in enumerate(t.min_nbhds):
        for y in _bits(u):
            uf.union(x, y)
    return Partition.from_class_of([uf.find(x) for x in range(t.n_points)])


def partition_topology(p: Partition) -> FiniteTopology:
    """The topology whose opens are exactly the unions of classes."""
    masks = [mask_of(cls) for cls in p.classes]
    return FiniteTopology(p.n_points, tuple(masks[p.class_of[x]] for x in range(p.n_points)))


def is_continuous(f: FinMap, t_src: FiniteTopology, t_dst: FiniteTopology) -> bool:
    """Preimages of opens are open; equivalently f(U_x) lands inside U_f(x)."""
    if f.source_size != t_src.n_points or f.target_size != t_dst.n_points:
        raise DomainError("map sizes do not match the topologies")
    image = f.image
    dst = t_dst.min_nbhds
    for x, u in enumerate(t_src.min_nbhds):
        target = dst[image[x]]
        for y in _bits(u):
            if not target >> image[y] & 1:
                return False
    return True


def is_continuous_by_preimages(f: FinMap, t_src: FiniteTopology, t_dst: FiniteTopology,
                               cap: int | None = None) -> bool:
    """The direct route: every open of the target pulls back to an open."""
    if f.source_size != t_src.n_points or f.target_size != t_dst.n_points:
        raise DomainError("map sizes do not match the topologies")
    for o in t_dst.opens(cap):
        preimage = mask_of(x for x in range(f.source_size) if o >> f.image[x] & 1)
        if not t_src.is_open(preimage):
            return False
    return True


def product_index(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    """Lexicographic indexing of the product of 0..size-1 ranges."""
    return list(itertools.product(*(range(n) for n in sizes)))


def topology_product(ts: Sequence[FiniteTopology], caps: Caps | None = None) -> FiniteTopology:
    """Product topology; the minimal neighborhood of a tuple is the product of factors'."""
    caps = effective_caps(caps)
    total = 1
    for t in ts:
        total *= t.n_points
    if total > caps.product:
        raise CapExceeded(f"product of {total} points exceeds cap {caps.product}")
    tuples = product_index([t.n_points for t in ts])
    nbhds = []
    for point in tuples:
        mask = 0
        for j, other in enumerate(tuples):
            if all(ts[i].min_nbhds[point[i]] >> other[i] & 1 for i in range(len(ts))):
                mask |= 1 << j
        nbhds.append(mask)
    return FiniteTopology(len(tuples), tuple(nbhds))


def topology_subspace(t: FiniteTopology, points: Sequence[int]) -> FiniteTopology:
    """Relative topology on the given points, reindexed in increasing order."""
    points = sorted(set(points))
    if points and (points[0] < 0 or points[-1] >= t.n_points):
        raise DomainError("subspace points outside the range")
    position = {p: i for i, p in enumerate(points)}
    nbhds = []
    for p in points:
        mask = 0
        for q in _bits(t.min_nbhds[p]):
            if q in position:
                mask |= 1 << position[q]
        nbhds.append(mask)
    return FiniteTopology(len(points), tuple(nbhds))


def topology_quotient(t: FiniteTopology, p: Partition) -> FiniteTopology:
    """Final topology on the classes: a class-set is open iff its preimage is.

    The minimal open class-set around a class is computed by closure: keep
    adding every class touched by the minimal neighborhood of a covered
    point until stable.
    """
    if p.n_points != t.n_points:
        raise DomainError("partition is over a different index range")
    class_masks = [mask_of(cls) for cls in p.classes]
    nbhds = []
    for c in range(p.n_classes):
        tset = 1 << c
        while True:
            preimage = 0
            for d in _bits(tset):
                preimage |= class_masks[d]
            grown = tset
            for z in _bits(preimage):
                for w in _bits(t.min_nbhds[z]):
                    grown |= 1 << p.class_of[w]
            if grown == tset:
                break
            tset = grown
        nbhds.append(tset)
    return FiniteTopology(p.n_classes, tuple(nbhds))


def topology_disjoint_union(ts: Sequence[FiniteTopology]) -> FiniteTopology:
    """Coproduct topology: neighborhoods unchanged within shifted blocks."""
    nbhds: list[int] = []
    offset = 0
    for t in ts:
        nbhds.extend(u << offset for u in t.min_nbhds)
        offset += t.n_points
    return FiniteTopology(offset, tuple(nbhds))


def is_homeomorphism(f: FinMap, t_src: FiniteTopology, t_dst: FiniteTopology) -> bool:
    """Bijective with matching minimal neighborhoods on both sides."""
    if not f.is_bijective:
        return False
    for x, u in enumerate(t_src.min_nbhds):
        image_nbhd = 0
        for y in _bits(u):
            image_nbhd |= 1 << f.image[y]
        if image_nbhd != t_dst.min_nbhds[f.image[x]]:
            return False
    return True


def is_hausdorff(t: FiniteTopology) -> bool:
    """Distinct points have disjoint opens; finite case: minimal neighborhoods disjoint."""
    v = validate_topology(t)
    if not v:
        raise DomainError(f"invalid topology: {v.detail}")
    for x in range(t.n_points):
        for y in range(x + 1, t.n_points):
            if t.min_nbhds[x] & t.min_nbhds[y]:
                return False
    return True


def is_discrete(t: FiniteTopology) -> bool:
    return all(u == 1 << x for x, u in enumerate(t.min_nbhds))


def all_topologies(n: int) -> Iterator[FiniteTopology]:
    """Every topology on 0..n-1, enumerated through transitive reflexive relations."""
    if n == 0:
        yield FiniteTopology(0, ())
        return
    offdiag = [(x, y) for x in range(n) for y in range(n) if x != y]

    def candidates(bits: int) -> FiniteTopology:
        rows = [1 << y for y in range(n)]
        for k, (x, y) in enumerate(offdiag):
            if bits >> k & 1:
                rows[y] |= 1 << x
        return FiniteTopology(n, tuple(rows))

    for bits in range(1 << len(offdiag)):
        t = candidates(bits)
        if all(all(t.min_nbhds[y] | u == u for y in _bits(u)) for u in t.min_nbhds):
            yield t
