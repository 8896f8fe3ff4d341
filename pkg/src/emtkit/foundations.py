"""Exact value domain, partitions, and finite maps under every construction.

Distances take values in the nonnegative rationals extended with +infinity.
All arithmetic is exact, which is what lets the whole test surface assert
equalities with zero tolerance: the suprema and infima appearing in the
constructions are achieved on finite instances.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DomainError


@functools.total_ordering
@dataclass(frozen=True, slots=True)
class ExtValue:
    """A nonnegative rational or +infinity; ``frac is None`` encodes infinity.

    Ordered with infinity as the top element.  Addition saturates at
    infinity; subtraction is defined only when the result stays in the
    domain.
    """

    frac: Fraction | None

    def __post_init__(self):
        if self.frac is not None:
            f = self.frac if isinstance(self.frac, Fraction) else Fraction(self.frac)
            if f < 0:
                raise DomainError(f"negative value {f} is outside the domain")
            object.__setattr__(self, "frac", f)

    @staticmethod
    def of(numerator, denominator=1) -> "ExtValue":
        return ExtValue(Fraction(numerator, denominator))

    @staticmethod
    def infinity() -> "ExtValue":
        return INFINITY

    @property
    def is_finite(self) -> bool:
        return self.frac is not None

    def __add__(self, other: "ExtValue") -> "ExtValue":
        if self.frac is None or other.frac is None:
            return INFINITY
        return ExtValue(self.frac + other.frac)

    def __sub__(self, other: "ExtValue") -> "ExtValue":
        if other.frac is None:
            raise DomainError("cannot subtract infinity")
        if self.frac is None:
            return INFINITY
        if self.frac < other.frac:
            raise DomainError(f"{self} - {other} would be negative")
        return ExtValue(self.frac - other.frac)

    def __lt__(self, other: "ExtValue") -> bool:
        if self.frac is None:
            return False
        if other.frac is None:
            return True
        return self.frac < other.frac

    def __str__(self) -> str:
        if self.frac is None:
            return "inf"
        if self.frac.denominator == 1:
            return str(self.frac.numerator)
        return f"{self.frac.numerator}/{self.frac.denominator}"

    def __repr__(self) -> str:
        return f"ExtValue({self})"


ZERO = ExtValue(Fraction(0))
ONE = ExtValue(Fraction(1))
INFINITY = ExtValue(None)


def parse_value(text: str) -> ExtValue:
    """Parse ``"p/q"``, ``"p"`` or ``"inf"``; negatives and zero denominators rejected."""
    text = text.strip()
    if text == "inf":
        return INFINITY
    num, slash, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if slash else 1
    except ValueError:
        raise DomainError(f"unparseable value {text!r}") from None
    if d == 0:
        raise DomainError(f"zero denominator in {text!r}")
    if n < 0 or d < 0:
        raise DomainError(f"negative value {text!r} is outside the domain")
    return ExtValue(Fraction(n, d))


def saturating_sum(a: ExtValue, b: ExtValue) -> ExtValue:
    """Exact rational sum; anything involving infinity is infinity."""
    return a + b


def minimum(a: ExtValue, b: ExtValue) -> ExtValue:
    """Order-theoretic minimum with infinity as top."""
    return a if a <= b else b


def abs_diff(a: ExtValue, b: ExtValue) -> ExtValue:
    """|a - b| for finite operands."""
    if a.frac is None or b.frac is None:
        raise DomainError("abs_diff needs finite operands")
    return ExtValue(abs(a.frac - b.frac))


class UnionFind:
    """Plain union-find over 0..n-1."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if rx > ry:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return [groups[r] for r in sorted(groups)]


@dataclass(frozen=True, slots=True)
class Partition:
    """A partition of 0..n-1 into classes numbered by smallest member.

    ``class_of[x]`` is the class index of point ``x``; ``classes[c]`` lists
    the members of class ``c`` in increasing order.  Classes are indexed in
    order of their smallest member, which makes every quotient construction
    deterministic.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        mins = [cls[0] for cls in self.classes]
        if mins != sorted(mins) or any(list(c) != sorted(c) for c in self.classes):
            raise DomainError("partition classes are not canonically ordered")
        seen = sorted(x for cls in self.classes for x in cls)
        if seen != list(range(len(self.class_of))):
            raise DomainError("partition classes do not cover the index range")
        for c, cls in enumerate(self.classes):
            for x in cls:
                if self.class_of[x] != c:
                    raise DomainError("class_of disagrees with classes")

    @property
    def n_points(self) -> int:
        return len(self.class_of)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @staticmethod
    def from_class_of(assignment: Sequence[int]) -> "Partition":
        """Canonicalize an arbitrary class assignment."""
        relabel: dict[int, int] = {}
        for old in assignment:
            if old not in relabel:
                relabel[old] = len(relabel)
        class_of = tuple(relabel[old] for old in assignment)
        groups: list[list[int]] = [[] for _ in range(len(relabel))]
        for x, c in enumerate(class_of):
            groups[c].append(x)
        return Partition(class_of, tuple(tuple(g) for g in groups))

    @staticmethod
    def from_classes(n: int, groups: Iterable[Iterable[int]]) -> "Partition":
        class_of = [-1] * n
        for i, group in enumerate(groups):
            for x in group:
                if not 0 <= x < n or class_of[x] != -1:
                    raise DomainError("classes must disjointly cover 0..n-1")
                class_of[x] = i
        if -1 in class_of:
            raise DomainError("classes must disjointly cover 0..n-1")
        return Partition.from_class_of(class_of)

    @staticmethod
    def singletons(n: int) -> "Partition":
        return Partition(tuple(range(n)), tuple((x,) for x in range(n)))

    @staticmethod
    def single_class(n: int) -> "Partition":
        if n == 0:
            return Partition((), ())
        return Partition((0,) * n, (tuple(range(n)),))

    @staticmethod
    def from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> "Partition":
        """Finest partition merging every given pair."""
        uf = UnionFind(n)
        for x, y in pairs:
            uf.union(x, y)
        return Partition.from_class_of([uf.find(x) for x in range(n)])

    def same(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]


def join_partitions(p: Partition, q: Partition) -> Partition:
    """Finest partition coarser than both (components of the union relation)."""
    if p.n_points != q.n_points:
        raise DomainError("partitions are over different index ranges")
    uf = UnionFind(p.n_points)
    for part in (p, q):
        for cls in part.classes:
            for x in cls[1:]:
                uf.union(cls[0], x)
    return Partition.from_class_of([uf.find(x) for x in range(p.n_points)])


def all_partitions(n: int) -> Iterator[Partition]:
    """All partitions of 0..n-1 via restricted-growth strings."""
    if n == 0:
        yield Partition((), ())
        return
    assignment = [0] * n

    def rec(i: int, maxc: int):
        if i == n:
            yield Partition.from_class_of(assignment)
            return
        for c in range(maxc + 2):
            assignment[i] = c
            yield from rec(i + 1, max(maxc, c))

    yield from rec(1, 0)


@dataclass(frozen=True, slots=True)
class FinMap:
    """A function between indexed finite sets, stored as its image tuple."""

    source_size: int
    target_size: int
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.source_size:
            raise DomainError("image length differs from source size")
        if any(not 0 <= y < self.target_size for y in self.image):
            raise DomainError("image entry outside the target range")

    @staticmethod
    def identity(n: int) -> "FinMap":
        return FinMap(n, n, tuple(range(n)))

    @staticmethod
    def constant(source_size: int, target_size: int, value: int) -> "FinMap":
        return FinMap(source_size, target_size, (value,) * source_size)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def after(self, other: "FinMap") -> "FinMap":
        """Composition self(other(x)): apply ``other`` first."""
        if other.target_size != self.source_size:
            raise DomainError("maps are not composable")
        return FinMap(other.source_size, self.target_size,
                      tuple(self.image[y] for y in other.image))

    @property
    def is_injective(self) -> bool:
        return len(set(self.image)) == self.source_size

    @property
    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target_size

    @property
    def is_bijective(self) -> bool:
        return self.source_size == self.target_size and self.is_injective

    def inverse(self) -> "FinMap":
        if not self.is_bijective:
            raise DomainError("only bijections invert")
        inv = [0] * self.target_size
        for x, y in enumerate(self.image):
            inv[y] = x
        return FinMap(self.target_size, self.source_size, tuple(inv))

    def image_set(self) -> frozenset[int]:
        return frozenset(self.image)
