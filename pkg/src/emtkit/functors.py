"""Object-and-morphism transformers with materialized structural maps.

Each construction returns the output space together with the canonical
comparison morphism, because every adjunction check consumes those maps.
The compatibilization reflector quotients by the zero classes of the
recovered distance; the compactification factors through the finite-scale
Stone-Cech quotient; truncation, metric completion and geodesification act
on the metric side only.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import CoherenceError, DomainError
from .foundations import ExtValue, FinMap, ZERO
from .metric import (ExtPseudoMetric, diameter, is_extended_metric,
                     length_distance_finite, metric_subspace, truncate_metric,
                     uniform_discrete, zero_partition)
from .spaces import (CSMorphism, Space, compose, identity_morphism, is_embedding,
                     is_isomorphism, recovered_distance, space_is_discrete,
                     validate_morphism, validate_space)
from .topology import (FiniteTopology, continuity_partition, is_discrete,
                       partition_topology, topology_quotient, topology_subspace)


@dataclass(frozen=True)
class FunctorResult:
    """Output object plus the structural map from the input to it."""

    object: Space
    unit: CSMorphism
    tag: str
    notes: tuple[str, ...] = ()


def _require_emt(s: Space, what: str) -> None:
    from .spaces import is_emt
    if not is_emt(s):
        raise DomainError(f"{what} needs a compatible (e.m.t.) input space")


@functools.lru_cache(maxsize=8192)
def emt_fication(s: Space) -> FunctorResult:
    """Reflect a space onto its compatible quotient.

    Quotient by the zero classes of the recovered distance, carry the
    recovered distance down, and take the quotient topology.  The quotient
    topology is recomputed honestly and then asserted discrete, equal to the
    partition topology of the quotient's own recovered zero classes.
    """
    v = validate_space(s)
    if not v:
        raise DomainError(f"invalid space: {v.detail}")
    rho = recovered_distance(s)
    p = zero_partition(rho)
    reps = [cls[0] for cls in p.classes]
    names = tuple(s.names[r] for r in reps)
    qmetric = ExtPseudoMetric(len(reps),
                              tuple(tuple(rho.rows[a][b] for b in reps) for a in reps))
    qtop = topology_quotient(s.topology, p)
    out = Space(names, qtop, qmetric)
    rho_q = recovered_distance(out)
    if rho_q != qmetric or not is_discrete(qtop) \
            or partition_topology(zero_partition(rho_q)) != qtop:
        raise CoherenceError("reflected space failed to be compatible")
    unit = CSMorphism(s, out, FinMap(s.n_points, len(reps), p.class_of))
    if not validate_morphism(unit) or not unit.map.is_surjective:
        raise CoherenceError("reflection unit is not a surjective morphism")
    return FunctorResult(out, unit, "emt")


def emt_fication_morphism(phi: CSMorphism) -> CSMorphism:
    """The unique map on quotients commuting with the units."""
    v = validate_morphism(phi)
    if not v:
        raise DomainError(f"invalid morphism: {v.detail}")
    src = emt_fication(phi.source)
    dst = emt_fication(phi.target)
    image = [-1] * src.object.n_points
    for x in range(phi.source.n_points):
        c = src.unit.map.image[x]
        value = dst.unit.map.image[phi.map.image[x]]
        if image[c] == -1:
            image[c] = value
        elif image[c] != value:
            raise CoherenceError("morphism does not descend to the quotients")
    out = CSMorphism(src.object, dst.object, FinMap(src.object.n_points,
                                                    dst.object.n_points, tuple(image)))
    vv = validate_morphism(out)
    if not vv:
        raise CoherenceError(f"descended morphism invalid: {vv.detail}")
    return out


def stone_cech_finite(t: FiniteTopology) -> tuple[FiniteTopology, FinMap]:
    """Finite-scale compact-Hausdorff reflection of a topology.

    Compact Hausdorff finite spaces are the discrete ones, and a continuous
    map into a discrete space is exactly a map constant on continuity
    classes, so the reflection is the discrete topology on those classes
    with the class projection as the unit.
    """
    p = continuity_partition(t)
    return FiniteTopology.discrete(p.n_classes), FinMap(t.n_points, p.n_classes, p.class_of)


def compactify(s: Space) -> FunctorResult:
    """Compactification of a compatible space.

    Build the finite Stone-Cech quotient of the topology, push the
    recovered distance onto its classes, reflect, and compose the units.
    At finite scale every compatible space is already compact, so the unit
    is asserted to be an isomorphism with dense (= surjective) image.
    """
    _require_emt(s, "compactification")
    btop, proj = stone_cech_finite(s.topology)
    p = continuity_partition(s.topology)
    reps = [cls[0] for cls in p.classes]
    rho = recovered_distance(s)
    bmetric = ExtPseudoMetric(len(reps),
                              tuple(tuple(rho.rows[a][b] for b in reps) for a in reps))
    bspace = Space(tuple(s.names[r] for r in reps), btop, bmetric)
    inner = emt_fication(bspace)
    unit = compose(inner.unit, CSMorphism(s, bspace, proj))
    if not is_isomorphism(unit) or not is_embedding(unit) or not unit.map.is_surjective:
        raise CoherenceError("finite compactification unit must be an isomorphism")
    return FunctorResult(inner.object, unit, "gamma")


def gamma_bar(s: Space) -> FunctorResult:
    """Compactification of an arbitrary input: reflect first, then compactify."""
    reflected = emt_fication(s)
    compact = compactify(reflected.object)
    return FunctorResult(compact.object, compose(compact.unit, reflected.unit), "gammabar")


def discretize(t: FiniteTopology, lam: ExtValue, hausdorff_required: bool = True,
               names: tuple[str, ...] | None = None) -> FunctorResult:
    """Pair a topology with the uniform distance at level ``lam``."""
    if lam <= ZERO:
        raise DomainError("discretization level must be positive")
    if hausdorff_required and not is_discrete(t):
        raise DomainError("discretization needs a Tychonoff input, "
                          "which at finite scale means a discrete topology")
    if names is None:
        names = tuple(f"x{i}" for i in range(t.n_points))
    out = Space(names, t, uniform_discrete(t.n_points, lam))
    return FunctorResult(out, identity_morphism(out), f"disc:{lam}")


def metric_topology_attach(m: ExtPseudoMetric,
                           names: tuple[str, ...] | None = None) -> FunctorResult:
    """Pair an extended metric with the topology it induces (finite: discrete)."""
    if not is_extended_metric(m):
        raise DomainError("only extended metrics induce a compatible topology")
    if names is None:
        names = tuple(f"x{i}" for i in range(m.n_points))
    top = partition_topology(zero_partition(m))
    if not is_discrete(top):
        raise CoherenceError("induced topology of an extended metric must be discrete")
    out = Space(names, top, m)
    return FunctorResult(out, identity_morphism(out), "T")


def truncate_functor(s: Space, lam: ExtValue) -> FunctorResult:
    """Cap the metric at a finite positive level; topology unchanged."""
    _require_emt(s, "truncation")
    out = Space(s.names, s.topology, truncate_metric(s.metric, lam))
    unit = CSMorphism(s, out, FinMap.identity(s.n_points))
    if not validate_morphism(unit):
        raise CoherenceError("truncation unit must be a morphism")
    if diameter(out.metric) > lam:
        raise CoherenceError("truncated diameter exceeds the level")
    return FunctorResult(out, unit, f"trunc:{lam}")


def metric_completion(s: Space) -> FunctorResult:
    """Metric completion: close the compactification unit's image.

    At finite scale the closure is everything and the result is an
    isomorphic copy; the construction still computes the closure honestly.
    """
    _require_emt(s, "metric completion")
    compact = compactify(s)
    g = compact.object
    image = sorted(compact.unit.map.image_set())
    closure = sorted(set(image) | {
        q for q in range(g.n_points)
        if any(g.metric.rows[q][p] == ZERO for p in image)})
    sub = Space(tuple(g.names[i] for i in closure),
                topology_subspace(g.topology, closure),
                metric_subspace(g.metric, closure))
    position = {p: i for i, p in enumerate(closure)}
    unit = CSMorphism(s, sub, FinMap(s.n_points, len(closure),
                                     tuple(position[q] for q in compact.unit.map.image)))
    if not is_isomorphism(unit):
        raise CoherenceError("finite metric completion must be an isomorphic copy")
    return FunctorResult(sub, unit, "mc")


def geodesify(s: Space) -> FunctorResult:
    """Replace the metric by the length distance (degenerate at finite scale).

    On finite carriers the length distance is infinite off the diagonal, so
    the output is always geodesic for the trivial reason that only diagonal
    pairs are at finite distance.  The canonical comparison map runs from
    the output to the input (the length distance dominates the metric), so
    the recorded unit is the identity of the output; see
    :func:`geodesify_counit`.
    """
    _require_emt(s, "geodesification")
    ell = length_distance_finite(s.metric, space_is_discrete(s))
    out = Space(s.names, s.topology, ell)
    if not is_geodesic_finite(out):
        raise CoherenceError("geodesification output must be geodesic")
    return FunctorResult(out, identity_morphism(out), "geo",
                         notes=("degenerate-at-finite-scale",))


def geodesify_counit(s: Space) -> CSMorphism:
    """The comparison morphism geo(s) -> s; short because lengths dominate."""
    out = geodesify(s).object
    counit = CSMorphism(out, s, FinMap.identity(s.n_points))
    v = validate_morphism(counit)
    if not v:
        raise CoherenceError(f"geodesification counit invalid: {v.detail}")
    return counit


def is_geodesic_finite(s: Space) -> bool:
    """Every finite-distance pair is joined by a geodesic.

    Continuous curves in a finite carrier are constant, so this holds
    exactly when distinct points sit at infinite distance.
    """
    return all(not s.metric.rows[x][y].is_finite
               for x in range(s.n_points) for y in range(s.n_points) if x != y)


def apply_functor(name: str, s: Space) -> FunctorResult:
    """Dispatch used by the command line: emt|gamma|gammabar|mc|geo|trunc:<v>|disc:<v|inf>|T."""
    from .foundations import parse_value
    if name == "emt":
        return emt_fication(s)
    if name == "gamma":
        return compactify(s)
    if name == "gammabar":
        return gamma_bar(s)
    if name == "mc":
        return metric_completion(s)
    if name == "geo":
        return geodesify(s)
    if name.startswith("trunc:"):
        return truncate_functor(s, parse_value(name.split(":", 1)[1]))
    if name.startswith("disc:"):
        return discretize(s.topology, parse_value(name.split(":", 1)[1]), names=s.names)
    if name == "T":
        return metric_topology_attach(s.metric, names=s.names)
    raise DomainError(f"unknown functor {name!r}")
