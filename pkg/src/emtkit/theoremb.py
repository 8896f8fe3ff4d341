"""Eight independently-computed characterizations of a compatible space.

For a carrier with an extended metric and (in strict mode) a Hausdorff
topology, the eight conditions below are equivalent; the checker computes
each one on its own route and reports the vector together with an
all-equal flag.  In relaxed mode the Hausdorff requirement is dropped; the
conditions built from the reflection unit and the compactification
embedding (i, vi, vii, viii) must still agree with each other on falsity.

  i     the compatibility predicate itself
  ii    probe-bounded: maps whose composites with every admissible function
        are admissible are themselves continuous-short
  iii   closed sets are separated from outside points by admissible
        functions, and admissible functions on any subset extend
  iv    the separating function can prescribe any value up to the distance
        from the point to the set
  v     a family of bounded pseudodistances generates both the topology and
        (as a supremum) the distance
  vi    the compatibilization unit is an isomorphism
  vii   the composite compactification unit is an embedding
  viii  the space embeds into some compact compatible space
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .caps import Caps, effective_caps
from .errors import CapExceeded, DomainError
from .foundations import ExtValue, FinMap, Partition, ZERO, abs_diff, minimum
from .metric import (ExtPseudoMetric, finiteness_components, is_extended_metric,
                     metric_subspace, uniform_discrete)
from .spaces import (CSMorphism, Space, is_cs_map, is_embedding, is_emt, is_isomorphism,
                     recovered_distance, validate_space)
from .topology import (FiniteTopology, continuity_partition, is_hausdorff,
                       partition_topology, topology_subspace)
from .functors import emt_fication, gamma_bar, metric_topology_attach
from .verdicts import Verdict

CONDITION_LABELS = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")


@dataclass(frozen=True)
class TheoremBReport:
    conditions: tuple[bool, ...]
    all_equal: bool
    relaxed: bool

    def to_doc(self) -> dict:
        return {"conditions": dict(zip(CONDITION_LABELS, self.conditions)),
                "all_equal": self.all_equal, "relaxed": self.relaxed}

    def verdict(self) -> Verdict:
        """Strict mode demands full agreement; relaxed mode agreement of i, vi, vii, viii."""
        if not self.relaxed:
            if self.all_equal:
                return Verdict.passed("all eight conditions agree")
            return Verdict.failed("conditions disagree", witness=list(self.conditions))
        quartet = [self.conditions[0], self.conditions[5],
                   self.conditions[6], self.conditions[7]]
        if len(set(quartet)) == 1:
            return Verdict.passed("unit/embedding conditions agree")
        return Verdict.failed("unit/embedding conditions disagree", witness=quartet)


def theoremb_check(s: Space, relaxed: bool = False, caps: Caps | None = None) -> TheoremBReport:
    caps = effective_caps(caps)
    v = validate_space(s)
    if not v:
        raise DomainError(f"invalid space: {v.detail}")
    if not is_extended_metric(s.metric):
        raise DomainError("the eight-way checker needs an extended metric")
    if not relaxed and not is_hausdorff(s.topology):
        raise DomainError("strict mode needs a Hausdorff topology; pass relaxed")
    if s.n_points > caps.theoremb:
        raise CapExceeded(f"{s.n_points} points exceed the checker cap {caps.theoremb}")
    rho = recovered_distance(s)
    conditions = (
        is_emt(s),
        _condition_ii(s, rho),
        _condition_iii(s, rho),
        _condition_iv(s, rho),
        _condition_v(s, rho),
        is_isomorphism(emt_fication(s).unit),
        is_embedding(gamma_bar(s).unit),
        _condition_viii(s),
    )
    return TheoremBReport(conditions, len(set(conditions)) == 1, relaxed)


def _derived_values(s: Space, rho: ExtPseudoMetric) -> list[ExtValue]:
    values = {ZERO}
    for row in rho.rows:
        for v in row:
            if v.is_finite:
                values.add(v)
    out = sorted(values)
    out.append(ExtValue(None))
    return out


def _two_point_topologies() -> tuple[FiniteTopology, ...]:
    return (FiniteTopology.discrete(2), FiniteTopology.indiscrete(2),
            FiniteTopology(2, (0b11, 0b10)), FiniteTopology(2, (0b01, 0b11)))


def _condition_ii(s: Space, rho: ExtPseudoMetric) -> bool:
    """Probe maps whose admissible composites are admissible must be morphisms.

    The hypothesis quantifies over all admissible functions, which reduces
    to two recovered-distance conditions on the probe: increments bounded by
    the probe distance everywhere, and zero on topologically glued probe
    pairs.
    """
    probes = [Space(("q0",), FiniteTopology.discrete(1), ExtPseudoMetric.zero(1))]
    probes += [Space(("q0", "q1"), t, uniform_discrete(2, v))
               for t in _two_point_topologies() for v in _derived_values(s, rho)]
    for probe in probes:
        glued = continuity_partition(probe.topology)
        for image in itertools.product(range(s.n_points), repeat=probe.n_points):
            f = FinMap(probe.n_points, s.n_points, image)
            hypothesis = all(
                rho.rows[image[x]][image[y]] <= probe.metric.rows[x][y]
                for x in range(probe.n_points) for y in range(probe.n_points)) and all(
                rho.rows[image[x]][image[y]] == ZERO
                for x in range(probe.n_points) for y in range(probe.n_points)
                if glued.same(x, y))
            if hypothesis and not is_cs_map(f, probe, s):
                return False
    return True


def _closed_point_pairs(s: Space):
    full = (1 << s.n_points) - 1
    for o in s.topology.opens():
        closed = full ^ o
        if closed == 0:
            continue
        members = [y for y in range(s.n_points) if closed >> y & 1]
        for xbar in range(s.n_points):
            if o >> xbar & 1:
                yield members, xbar


def _set_distance(m: ExtPseudoMetric, x: int, members) -> ExtValue:
    out = None
    for y in members:
        v = m.rows[x][y]
        out = v if out is None or v < out else out
    return out


def _admissible(s: Space, f: tuple[ExtValue, ...]) -> bool:
    """Class-constant on continuity classes and 1-Lipschitz for the metric."""
    glued = continuity_partition(s.topology)
    for cls in glued.classes:
        if any(f[x] != f[cls[0]] for x in cls):
            return False
    for x in range(s.n_points):
        for y in range(x + 1, s.n_points):
            if abs_diff(f[x], f[y]) > s.metric.rows[x][y]:
                return False
    return True


def _condition_iii(s: Space, rho: ExtPseudoMetric) -> bool:
    """Separation by an explicit witness, plus extension over every subset.

    Extension reduces to the recovered distance computed inside a subset
    agreeing with the restriction of the ambient recovered distance: the
    two suprema range over the same admissible increments exactly when each
    inner admissible function extends.
    """
    for members, xbar in _closed_point_pairs(s):
        bound = _set_distance(rho, xbar, members)
        cap_value = bound if bound.is_finite else ExtValue.of(1)
        f = tuple(minimum(_set_distance(rho, z, members), cap_value)
                  for z in range(s.n_points))
        if not (_admissible(s, f) and all(f[y] == ZERO for y in members) and f[xbar] > ZERO):
            return False
    for mask in range(1 << s.n_points):
        points = [x for x in range(s.n_points) if mask >> x & 1]
        sub = Space(tuple(s.names[x] for x in points),
                    topology_subspace(s.topology, points),
                    metric_subspace(s.metric, points))
        if recovered_distance(sub) != metric_subspace(rho, points):
            return False
    return True


def _condition_iv(s: Space, rho: ExtPseudoMetric) -> bool:
    """A separating function can attain any value up to the set distance.

    The best attainable value at the point is its recovered distance to the
    set, so the condition is that the recovered distance dominates the
    original one (and stays positive).
    """
    for members, xbar in _closed_point_pairs(s):
        reach = _set_distance(rho, xbar, members)
        if reach == ZERO or reach < _set_distance(s.metric, xbar, members):
            return False
    return True


def _condition_v(s: Space, rho: ExtPseudoMetric) -> bool:
    """A concrete family of bounded pseudodistances generating both structures.

    Witness functions realize all finite distances; the family of scaled
    indicator pseudodistances of the finiteness components covers infinite
    pairs (its supremum over scales is unbounded exactly on cross-component
    pairs).  The topology generated by the family is the partition topology
    of the common fibers.
    """
    n = s.n_points
    witnesses = set()
    for a in range(n):
        for b in range(n):
            if rho.rows[a][b].is_finite:
                witnesses.add(tuple(minimum(rho.rows[z][b], rho.rows[a][b]) for z in range(n)))
    witnesses = sorted(witnesses)
    if any(not _admissible(s, f) for f in witnesses):
        return False
    components = finiteness_components(rho)
    keys = [tuple(f[z] for f in witnesses) + (components.class_of[z],) for z in range(n)]
    fibers = Partition.from_class_of([keys.index(k) for k in keys])
    if partition_topology(fibers) != s.topology:
        return False
    for x in range(n):
        for y in range(n):
            d = s.metric.rows[x][y]
            if d.is_finite:
                best = ZERO
                for f in witnesses:
                    inc = abs_diff(f[x], f[y])
                    if inc > best:
                        best = inc
                if best != d:
                    return False
            elif components.same(x, y):
                return False
    return True


def _condition_viii(s: Space) -> bool:
    """Embeddability into a compact compatible space, by bounded search."""
    unit = gamma_bar(s).unit
    if is_embedding(unit):
        return True
    candidates = [gamma_bar(s).object]
    if is_extended_metric(s.metric):
        candidates.append(metric_topology_attach(s.metric, names=s.names).object)
    for target in candidates:
        if target.n_points < s.n_points:
            continue
        for choice in itertools.permutations(range(target.n_points), s.n_points):
            f = FinMap(s.n_points, target.n_points, choice)
            if not is_cs_map(f, s, target):
                continue
            if is_embedding(CSMorphism(s, target, f)):
                return True
    return False
