"""Hom-set transposition checks for the named adjunctions.

Each check enumerates both hom-sets on a concrete pair of inputs, applies
the transposition map, and asserts that it is a bijection and that every
transpose factors through the structural unit (or counit) uniquely.

Supported names: ``emt``, ``gamma``, ``mc``, ``trunc:<v>`` (reflections,
unit on the left input), ``disc:<v|inf>``, ``T``, ``geo`` (coreflections,
counit on the right input).  The geodesification pair deserves a remark:
the reflection-style transposition fails on a two-point example because the
length distance dominates the original one, so the identity carrier is
expansive, not short.  The executable adjunction runs the other way: maps
out of a geodesic space into a space and into its geodesification are the
same maps, and they factor through the counit from the geodesification.
"""
from __future__ import annotations

import itertools
from .caps import Caps, effective_caps
from .errors import DomainError
from .foundations import FinMap, parse_value
from .metric import diameter, is_extended_metric
from .spaces import (CSMorphism, Space, enumerate_cs_morphisms, is_emt, is_short,
                     validate_morphism)
from .topology import is_continuous, is_discrete
from .functors import (FunctorResult, discretize, emt_fication, geodesify, geodesify_counit,
                       is_geodesic_finite, metric_completion, metric_topology_attach,
                       compactify, truncate_functor)
from .verdicts import Verdict

ADJUNCTION_NAMES = ("emt", "gamma", "mc", "trunc:<v>", "disc:<v|inf>", "T", "geo")


def check_adjunction(name: str, left: Space, right: Space,
                     caps: Caps | None = None) -> Verdict:
    caps = effective_caps(caps)
    if name == "emt":
        _need(is_emt(right), "right input must be a compatible space")
        return _check_reflection(left, right, emt_fication(left), caps)
    if name == "gamma":
        _need(is_emt(left), "left input must be a compatible space")
        _need(is_emt(right), "right input must be a compatible space")
        return _check_reflection(left, right, compactify(left), caps)
    if name == "mc":
        _need(is_emt(left), "left input must be a compatible space")
        _need(is_emt(right), "right input must be a compatible space")
        return _check_reflection(left, right, metric_completion(left), caps)
    if name.startswith("trunc:"):
        lam = parse_value(name.split(":", 1)[1])
        _need(is_emt(left), "left input must be a compatible space")
        _need(is_emt(right) and diameter(right.metric) <= lam,
              "right input must be compatible with diameter at most the level")
        return _check_reflection(left, right, truncate_functor(left, lam), caps)
    if name.startswith("disc:"):
        lam = parse_value(name.split(":", 1)[1])
        _need(is_discrete(left.topology),
              "left input must be Tychonoff, i.e. discrete at finite scale")
        _need(is_emt(right), "right input must be a compatible space")
        _need(diameter(right.metric) <= lam,
              "right input must have diameter at most the level")
        lifted = discretize(left.topology, lam, names=left.names).object
        plain = {f.image for f in _all_maps(left.n_points, right.n_points)
                 if is_continuous(f, left.topology, right.topology)}
        counit_source = discretize(right.topology, lam, names=right.names).object
        return _check_coreflection(lifted, right, plain, counit_source, caps)
    if name == "T":
        _need(is_extended_metric(left.metric), "left input must carry an extended metric")
        _need(is_emt(right), "right input must be a compatible space")
        lifted = metric_topology_attach(left.metric, names=left.names).object
        plain = {f.image for f in _all_maps(left.n_points, right.n_points)
                 if is_short(f, left.metric, right.metric)}
        counit_source = metric_topology_attach(right.metric, names=right.names).object
        return _check_coreflection(lifted, right, plain, counit_source, caps)
    if name == "geo":
        _need(is_emt(left) and is_geodesic_finite(left),
              "left input must be a compatible geodesic space")
        _need(is_emt(right), "right input must be a compatible space")
        geo_right = geodesify(right).object
        plain = {phi.map.image for phi in enumerate_cs_morphisms(left, geo_right, caps)}
        return _check_coreflection(left, right, plain, geo_right, caps,
                                   counit=geodesify_counit(right))
    raise DomainError(f"unknown adjunction {name!r}")


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def _all_maps(n_src: int, n_dst: int):
    for image in itertools.product(range(n_dst), repeat=n_src):
        yield FinMap(n_src, n_dst, image)


def _check_reflection(left: Space, right: Space, reflected: FunctorResult,
                      caps: Caps) -> Verdict:
    """Hom(left, right) must biject with Hom(reflected, right) through the unit."""
    unit = reflected.unit.map
    before = enumerate_cs_morphisms(left, right, caps)
    after = enumerate_cs_morphisms(reflected.object, right, caps)
    after_images = {phi.map.image for phi in after}
    transposed = []
    for phi in before:
        image = [-1] * reflected.object.n_points
        for x in range(left.n_points):
            c = unit.image[x]
            if image[c] == -1:
                image[c] = phi.map.image[x]
            elif image[c] != phi.map.image[x]:
                return Verdict.failed("a morphism does not descend along the unit",
                                      witness=list(phi.map.image))
        if -1 in image:
            return Verdict.failed("unit is not surjective")
        if tuple(image) not in after_images:
            return Verdict.failed("a transpose is not a morphism on the reflection",
                                  witness=image)
        transposed.append(tuple(image))
    if len(set(transposed)) != len(before):
        return Verdict.failed("transposition is not injective")
    if set(transposed) != after_images:
        missing = sorted(after_images - set(transposed))
        return Verdict.failed("transposition is not surjective", witness=missing[:1])
    for phi in before:
        factors = [psi for psi in after if psi.map.after(unit) == phi.map]
        if len(factors) != 1:
            return Verdict.failed("factorization through the unit is not unique",
                                  witness=list(phi.map.image))
    return Verdict.passed(f"{len(before)} morphisms transpose bijectively")


def _check_coreflection(source: Space, right: Space, plain_images: set[tuple[int, ...]],
                        counit_source: Space, caps: Caps,
                        counit: CSMorphism | None = None) -> Verdict:
    """Morphisms from ``source`` into the right input against their transposes.

    The transposition is the identity on carriers: the hom-set into the
    right input must coincide with ``plain_images`` (the hom-set on the
    other side of the adjunction), and each morphism must factor through
    the counit from ``counit_source`` by exactly one morphism of
    CS(source, counit_source).
    """
    if counit is None:
        counit = CSMorphism(counit_source, right, FinMap.identity(right.n_points))
    cv = validate_morphism(counit)
    if not cv:
        return Verdict.failed(f"counit is not a morphism: {cv.detail}", cv.witness)
    direct = enumerate_cs_morphisms(source, right, caps)
    direct_images = {phi.map.image for phi in direct}
    if plain_images != direct_images:
        odd = sorted(plain_images.symmetric_difference(direct_images))
        return Verdict.failed("hom-sets disagree under the identity transposition",
                              witness=[list(o) for o in odd[:2]])
    lifted = enumerate_cs_morphisms(source, counit_source, caps)
    for phi in direct:
        factors = [psi for psi in lifted if counit.map.after(psi.map) == phi.map]
        if len(factors) != 1:
            return Verdict.failed("factorization through the counit is not unique",
                                  witness=list(phi.map.image))
    return Verdict.passed(f"{len(direct_images)} morphisms transpose bijectively")
