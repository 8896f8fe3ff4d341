"""Topology-plus-distance spaces, their morphisms, and the compatibility predicates.

The key computation is the recovered distance: the supremum, over bounded
1-Lipschitz continuous real functions, of the increment between two points.
On a finite carrier, continuous real functions are exactly the functions
constant on the continuity-partition classes, so an admissible function is a
class-constant vector with increments bounded by the distance.  Linear
programming duality over that constraint set collapses to a shortest-path
problem: the supremum equals the chain infimum with free jumps inside
classes, and for finite optima it is attained by the explicit witness
f = min(rho(., y), rho(x, y)).  The library computes the recovered distance
by exact matrix closure and cross-checks it against an independent
chain-enumeration oracle.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .caps import Caps, effective_caps
from .errors import CapExceeded, CoherenceError, DomainError
from .foundations import ExtValue, FinMap, abs_diff, minimum
from .metric import (ExtPseudoMetric, chain_infimum_bruteforce, distance_preserving,
                     glued_closure, is_extended_metric, validate_pseudometric, zero_partition)
from .topology import (FiniteTopology, continuity_partition, is_continuous, is_discrete,
                       is_hausdorff, is_homeomorphism, partition_topology, topology_subspace,
                       validate_topology)
from .verdicts import Verdict, worst


@dataclass(frozen=True)
class Space:
    """A named point set carrying a topology and an extended pseudometric."""

    names: tuple[str, ...]
    topology: FiniteTopology
    metric: ExtPseudoMetric

    @property
    def n_points(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


def space(names: Sequence[str], topology: FiniteTopology, metric: ExtPseudoMetric) -> Space:
    return Space(tuple(names), topology, metric)


def validate_space(s: Space) -> Verdict:
    """Aggregate the topology and metric verdicts plus shape coherence."""
    if len(set(s.names)) != len(s.names):
        return Verdict.failed("duplicate point names")
    if s.topology.n_points != len(s.names) or s.metric.n_points != len(s.names):
        return Verdict.failed("topology, metric and names disagree on the point count")
    vt = validate_topology(s.topology)
    if not vt:
        return Verdict.failed(f"topology: {vt.detail}", vt.witness)
    vm = validate_pseudometric(s.metric)
    if not vm:
        return Verdict.failed(f"metric: {vm.detail}", vm.witness)
    return Verdict.passed()


def _require_valid(s: Space) -> None:
    v = validate_space(s)
    if not v:
        raise DomainError(f"invalid space: {v.detail}")


@dataclass(frozen=True)
class CSMorphism:
    """A point map between spaces, intended to be continuous and short."""

    source: Space
    target: Space
    map: FinMap


def identity_morphism(s: Space) -> CSMorphism:
    return CSMorphism(s, s, FinMap.identity(s.n_points))


def compose(g: CSMorphism, f: CSMorphism) -> CSMorphism:
    if f.target != g.source:
        raise DomainError("morphisms are not composable")
    return CSMorphism(f.source, g.target, g.map.after(f.map))


def is_short(f: FinMap, m_src: ExtPseudoMetric, m_dst: ExtPseudoMetric) -> bool:
    image = f.image
    for x in range(f.source_size):
        row_src = m_src.rows[x]
        row_dst = m_dst.rows[image[x]]
        for y in range(x + 1, f.source_size):
            if row_dst[image[y]] > row_src[y]:
                return False
    return True


def validate_morphism(phi: CSMorphism) -> Verdict:
    """Continuity and shortness, each with a witness pair on failure."""
    vs = validate_space(phi.source)
    vt = validate_space(phi.target)
    if not vs or not vt:
        return worst([vs, vt])
    f = phi.map
    if f.source_size != phi.source.n_points or f.target_size != phi.target.n_points:
        return Verdict.failed("map sizes do not match the spaces")
    if not is_continuous(f, phi.source.topology, phi.target.topology):
        for x in range(f.source_size):
            for y in _nbhd_points(phi.source.topology, x):
                if not phi.target.topology.min_nbhds[f.image[x]] >> f.image[y] & 1:
                    return Verdict.failed("not continuous", witness=(x, y))
    for x in range(f.source_size):
        for y in range(x + 1, f.source_size):
            if phi.target.metric.rows[f.image[x]][f.image[y]] > phi.source.metric.rows[x][y]:
                return Verdict.failed(
                    "not short",
                    witness=(x, y, str(phi.source.metric.rows[x][y]),
                             str(phi.target.metric.rows[f.image[x]][f.image[y]])))
    return Verdict.passed()


def _nbhd_points(t: FiniteTopology, x: int) -> Iterator[int]:
    u = t.min_nbhds[x]
    while u:
        low = u & -u
        yield low.bit_length() - 1
        u ^= low


def is_cs_map(f: FinMap, src: Space, dst: Space) -> bool:
    return is_continuous(f, src.topology, dst.topology) and is_short(f, src.metric, dst.metric)


def is_lsc(s: Space) -> bool:
    """Lower semicontinuity of the distance on the product topology.

    Finite form: for all pairs, the distance does not increase when both
    arguments move inside their minimal neighborhoods.
    """
    _require_valid(s)
    nbhds = s.topology.min_nbhds
    rows = s.metric.rows
    for x in range(s.n_points):
        for y in range(s.n_points):
            bound = rows[x][y]
            for xp in _nbhd_points(s.topology, x):
                row_xp = rows[xp]
                for yp in _nbhd_points(s.topology, y):
                    if bound > row_xp[yp]:
                        return False
    return True


@functools.lru_cache(maxsize=16384)
def recovered_distance(s: Space) -> ExtPseudoMetric:
    """The supremum of increments of bounded 1-Lipschitz continuous functions.

    Computed as the exact chain-infimum closure of the metric with free
    jumps inside continuity classes; see the module docstring for why the
    two coincide on finite carriers.
    """
    _require_valid(s)
    return glued_closure(s.metric, continuity_partition(s.topology))


def lip_sup_oracle(s: Space, x: int, y: int, caps: Caps | None = None) -> ExtValue:
    """Independent oracle for the recovered distance at one pair.

    Exhaustive chain enumeration (no shared shortest-path code); infinite
    exactly when no finite chain connects the two points.
    """
    caps = effective_caps(caps)
    if s.n_points > caps.oracle:
        raise CapExceeded(f"{s.n_points} points exceed the oracle cap {caps.oracle}")
    _require_valid(s)
    return chain_infimum_bruteforce(s.metric, continuity_partition(s.topology), x, y)


def recovery_witness(s: Space, x: int, y: int) -> tuple[ExtValue, ...]:
    """A function attaining the recovered distance of a finite-distance pair.

    Returns f = min(rho(., y), rho(x, y)) as a vector: class-constant,
    1-Lipschitz, with f(x) - f(y) equal to the recovered distance.
    """
    rho = recovered_distance(s)
    bound = rho.rows[x][y]
    if not bound.is_finite:
        raise DomainError("no single bounded function attains an infinite distance")
    return tuple(minimum(rho.rows[z][y], bound) for z in range(s.n_points))


def is_admissible_function(s: Space, f: Sequence[ExtValue]) -> bool:
    """Constant on continuity classes and 1-Lipschitz for the metric."""
    glued = continuity_partition(s.topology)
    for cls in glued.classes:
        if any(f[x] != f[cls[0]] for x in cls):
            return False
    for x in range(s.n_points):
        for y in range(x + 1, s.n_points):
            if abs_diff(f[x], f[y]) > s.metric.rows[x][y]:
                return False
    return True


def is_recovered(s: Space) -> bool:
    return recovered_distance(s) == s.metric


def is_emt(s: Space) -> bool:
    """Compatibility of topology and distance, checked on two routes.

    Definitional route: the metric is an extended metric, equals its
    recovered distance, and the topology is the partition topology of the
    recovered zero classes.  Derived finite-scale shortcut: Hausdorff
    topology plus extended metric.  Disagreement is a build-stopping bug,
    not a result.
    """
    _require_valid(s)
    extended = is_extended_metric(s.metric)
    rho = recovered_distance(s)
    definitional = (extended and rho == s.metric
                    and partition_topology(zero_partition(rho)) == s.topology)
    shortcut = extended and is_hausdorff(s.topology)
    if definitional != shortcut:
        raise CoherenceError(
            f"definitional and Hausdorff routes disagree on {s.names}")
    return definitional


def enumerate_cs_morphisms(src: Space, dst: Space,
                           caps: Caps | None = None) -> list[CSMorphism]:
    """All continuous-short maps, in lexicographic order of image tuples."""
    caps = effective_caps(caps)
    total = dst.n_points ** src.n_points
    if total > caps.enum:
        raise CapExceeded(f"{total} candidate maps exceed cap {caps.enum}")
    out = []
    for image in itertools.product(range(dst.n_points), repeat=src.n_points):
        f = FinMap(src.n_points, dst.n_points, image)
        if is_cs_map(f, src, dst):
            out.append(CSMorphism(src, dst, f))
    return out


def is_isomorphism(phi: CSMorphism) -> bool:
    """Bijective, open, and distance preserving."""
    v = validate_morphism(phi)
    if not v:
        raise DomainError(f"invalid morphism: {v.detail}")
    return (is_homeomorphism(phi.map, phi.source.topology, phi.target.topology)
            and distance_preserving(phi.map, phi.source.metric, phi.target.metric))


def is_embedding(phi: CSMorphism) -> bool:
    """Injective, distance preserving, and a homeomorphism onto the image subspace."""
    v = validate_morphism(phi)
    if not v:
        raise DomainError(f"invalid morphism: {v.detail}")
    f = phi.map
    if not f.is_injective:
        return False
    if not distance_preserving(f, phi.source.metric, phi.target.metric):
        return False
    image_points = sorted(f.image_set())
    sub = topology_subspace(phi.target.topology, image_points)
    position = {p: i for i, p in enumerate(image_points)}
    src_t = phi.source.topology
    for x in range(f.source_size):
        image_nbhd = 0
        for y in _nbhd_points(src_t, x):
            image_nbhd |= 1 << position[f.image[y]]
        if image_nbhd != sub.min_nbhds[position[f.image[x]]]:
            return False
    return True


def space_is_discrete(s: Space) -> bool:
    return is_discrete(s.topology)
