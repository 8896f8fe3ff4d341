"""Seeded random instances: spaces, diagrams, and corpus helpers.

Topologies are generated as random preorders (valid by construction),
metrics by sampling a value grid, symmetrizing, zeroing the diagonal and
taking the shortest-path closure to force the triangle inequality.  Every
sample is driven by a local ``random.Random`` so identical seeds give
byte-identical instances.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .foundations import ExtValue, FinMap, INFINITY, Partition, ZERO
from .metric import ExtPseudoMetric, triangle_closure, truncate_metric
from .spaces import Space, validate_space
from .topology import FiniteTopology, partition_topology
from .category import Arrow, Diagram, EMT, map_valid_in

TOPOLOGY_MODES = ("random-preorder", "discrete", "partition")

DEFAULT_GRID = (ZERO, ExtValue.of(1, 2), ExtValue.of(1), ExtValue.of(2))
POSITIVE_GRID = (ExtValue.of(1, 2), ExtValue.of(1), ExtValue.of(2))


@dataclass(frozen=True)
class GenConfig:
    seed: int
    max_points: int
    value_grid: tuple[ExtValue, ...] = DEFAULT_GRID
    infinity_probability: Fraction = Fraction(1, 8)
    topology_mode: str = "random-preorder"

    def __post_init__(self):
        if self.max_points < 0:
            raise DomainError("max_points must be nonnegative")
        if not 0 <= self.infinity_probability <= 1:
            raise DomainError("infinity_probability must lie in [0, 1]")
        if self.topology_mode not in TOPOLOGY_MODES:
            raise DomainError(f"unknown topology mode {self.topology_mode!r}")


def random_instance(cfg: GenConfig) -> Space:
    """Deterministic in the seed; always passes validation."""
    rng = random.Random(cfg.seed)
    s = random_space(rng, cfg.max_points, cfg.value_grid,
                     cfg.infinity_probability, cfg.topology_mode)
    v = validate_space(s)
    if not v:
        raise DomainError(f"generator produced an invalid space: {v.detail}")
    return s


def random_topology(rng: random.Random, n: int, mode: str = "random-preorder") -> FiniteTopology:
    if mode == "discrete":
        return FiniteTopology.discrete(n)
    if mode == "partition":
        assignment = [rng.randrange(max(1, n)) for _ in range(n)]
        return partition_topology(Partition.from_class_of(assignment))
    rows = [1 << y for y in range(n)]
    for x in range(n):
        for y in range(n):
            if x != y and rng.random() < 0.3:
                rows[y] |= 1 << x
    changed = True
    while changed:
        changed = False
        for y in range(n):
            grown = rows[y]
            mask = rows[y]
            while mask:
                low = mask & -mask
                grown |= rows[low.bit_length() - 1]
                mask ^= low
            if grown != rows[y]:
                rows[y] = grown
                changed = True
    return FiniteTopology(n, tuple(rows))


def random_metric(rng: random.Random, n: int, grid=DEFAULT_GRID,
                  infinity_probability: Fraction = Fraction(1, 8)) -> ExtPseudoMetric:
    p = Fraction(infinity_probability)
    rows = [[ZERO] * n for _ in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            if p > 0 and rng.randrange(p.denominator) < p.numerator:
                value = INFINITY
            else:
                value = rng.choice(grid)
            rows[x][y] = rows[y][x] = value
    return triangle_closure(ExtPseudoMetric(n, tuple(tuple(r) for r in rows)))


def random_space(rng: random.Random, n: int, grid=DEFAULT_GRID,
                 infinity_probability: Fraction = Fraction(1, 8),
                 mode: str = "random-preorder") -> Space:
    names = tuple(f"p{i}" for i in range(n))
    return Space(names, random_topology(rng, n, mode),
                 random_metric(rng, n, grid, infinity_probability))


def random_emt_space(rng: random.Random, n: int, grid=POSITIVE_GRID,
                     infinity_probability: Fraction = Fraction(1, 8)) -> Space:
    """Discrete topology plus a closed positive-grid metric: always compatible."""
    return random_space(rng, n, grid, infinity_probability, mode="discrete")


def random_bounded_emt_space(rng: random.Random, n: int, lam: ExtValue) -> Space:
    s = random_emt_space(rng, n)
    if n == 0:
        return s
    return Space(s.names, s.topology, truncate_metric(s.metric, lam))


def random_object(rng: random.Random, tag: str, n: int) -> Space:
    if tag == EMT:
        return random_emt_space(rng, n)
    return random_space(rng, n, mode=rng.choice(TOPOLOGY_MODES))


def random_diagram(rng: random.Random, tag: str, max_objects: int = 3,
                   max_points: int = 3, max_arrows: int = 4) -> Diagram:
    """Objects valid in the tag, arrows filtered to tag morphisms.

    Arrow maps are rejection-sampled; a constant map (always a morphism
    onto a nonempty target) is the fallback.
    """
    objects = tuple(random_object(rng, tag, rng.randint(1, max_points))
                    for _ in range(rng.randint(1, max_objects)))
    arrows = []
    for k in range(rng.randint(0, max_arrows)):
        src = rng.randrange(len(objects))
        dst = rng.randrange(len(objects))
        n_src, n_dst = objects[src].n_points, objects[dst].n_points
        chosen = None
        for _ in range(8):
            image = tuple(rng.randrange(n_dst) for _ in range(n_src))
            f = FinMap(n_src, n_dst, image)
            if map_valid_in(tag, f, objects[src], objects[dst]):
                chosen = f
                break
        if chosen is None:
            chosen = FinMap.constant(n_src, n_dst, rng.randrange(n_dst))
            if not map_valid_in(tag, chosen, objects[src], objects[dst]):
                continue
        arrows.append(Arrow(f"a{k}", src, dst, chosen))
    return Diagram(tag, objects, tuple(arrows))
