import random

import pytest

from emtkit.errors import CapExceeded, DomainError
from emtkit.caps import Caps
from emtkit.foundations import ExtValue, FinMap, INFINITY, ZERO, abs_diff
from emtkit.generate import random_emt_space, random_space
from emtkit.metric import (ExtPseudoMetric, metric_disjoint_union, uniform_discrete)
from emtkit.spaces import (CSMorphism, Space, enumerate_cs_morphisms, identity_morphism,
                           is_admissible_function, is_embedding, is_emt, is_isomorphism,
                           is_lsc, is_recovered, lip_sup_oracle, recovered_distance,
                           recovery_witness, validate_morphism, validate_space)
from emtkit.topology import FiniteTopology, topology_subspace

V = ExtValue.of
SIERP = FiniteTopology(2, (0b11, 0b10))


def mk(rows):
    return ExtPseudoMetric(len(rows), tuple(tuple(r) for r in rows))


def discrete_space(names, value):
    n = len(names)
    return Space(tuple(names), FiniteTopology.discrete(n), uniform_discrete(n, value))


def test_validate_space_examples():
    assert validate_space(Space(("a", "b"), SIERP, ExtPseudoMetric.zero(2)))
    assert validate_space(discrete_space("ab", V(1)))
    bad = Space(("a", "b"), FiniteTopology.discrete(2), ExtPseudoMetric.zero(3))
    v = validate_space(bad)
    assert not v and "point count" in v.detail


def test_validate_morphism_examples():
    s = discrete_space("ab", V(1))
    assert validate_morphism(identity_morphism(s))
    t = discrete_space("xyz", V(2))
    assert validate_morphism(CSMorphism(s, t, FinMap.constant(2, 3, 1)))
    wide = discrete_space("ab", V(2))
    narrow = discrete_space("xy", V(3))
    v = validate_morphism(CSMorphism(wide, narrow, FinMap(2, 2, (0, 1))))
    assert not v and v.detail == "not short" and v.witness[:2] == (0, 1)


def test_is_lsc_examples():
    assert is_lsc(discrete_space("abc", V(1)))
    assert not is_lsc(Space(("a", "b"), SIERP, uniform_discrete(2, V(1))))
    assert is_lsc(Space(("a", "b"), FiniteTopology.indiscrete(2), ExtPseudoMetric.zero(2)))


def test_recovered_distance_examples():
    s = discrete_space("abc", V(1))
    assert recovered_distance(s) == s.metric and is_recovered(s)

    collapsed = Space(("a", "b"), SIERP, uniform_discrete(2, V(1)))
    assert recovered_distance(collapsed) == ExtPseudoMetric.zero(2)
    assert not is_recovered(collapsed)

    # two topologically-glued pairs bridged by one short edge
    rows = [[V(0), V(4), V(5), V(5)],
            [V(4), V(0), V(1), V(5)],
            [V(5), V(1), V(0), V(4)],
            [V(5), V(5), V(4), V(0)]]
    from emtkit.topology import partition_topology
    from emtkit.foundations import Partition
    top = partition_topology(Partition.from_classes(4, [[0, 1], [2, 3]]))
    s = Space(("a", "b", "c", "d"), top, mk(rows))
    rho = recovered_distance(s)
    for x, y in ((0, 2), (0, 3), (1, 2), (1, 3)):
        assert rho.rows[x][y] == V(1)
        assert lip_sup_oracle(s, x, y) == V(1)


def test_lip_sup_oracle_examples():
    assert lip_sup_oracle(discrete_space("ab", V(1)), 0, 1) == V(1)
    assert lip_sup_oracle(Space(("a", "b"), SIERP, uniform_discrete(2, V(1))), 0, 1) == ZERO
    blocks = Space(("a", "b"), FiniteTopology.discrete(2),
                   metric_disjoint_union([ExtPseudoMetric.zero(1)] * 2))
    assert lip_sup_oracle(blocks, 0, 1) == INFINITY


def test_lip_sup_oracle_cap():
    s = discrete_space("abcdefg", V(1))
    with pytest.raises(CapExceeded):
        lip_sup_oracle(s, 0, 1, Caps(oracle=6))


def test_recovered_never_exceeds_metric():
    rng = random.Random(23)
    for k in range(200):
        s = random_space(rng, 1 + k % 5)
        rho = recovered_distance(s)
        for x in range(s.n_points):
            for y in range(s.n_points):
                assert rho.rows[x][y] <= s.metric.rows[x][y]
        assert is_recovered(s) == (rho == s.metric)


def test_is_emt_examples():
    assert is_emt(discrete_space("ab", V(1)))
    assert not is_emt(Space(("a", "b"), SIERP, uniform_discrete(2, V(1))))
    assert not is_emt(Space(("a", "b"), FiniteTopology.discrete(2), ExtPseudoMetric.zero(2)))


def test_enumerate_cs_morphisms_examples():
    point = discrete_space("p", V(1))
    assert len(enumerate_cs_morphisms(point, point)) == 1

    a = discrete_space("ab", V(1))
    assert len(enumerate_cs_morphisms(a, a)) == 4

    wide = discrete_space("ab", V(3))
    assert len(enumerate_cs_morphisms(wide, a)) == 4
    assert len(enumerate_cs_morphisms(a, wide)) == 2  # constants only

    assert [phi.map.image for phi in enumerate_cs_morphisms(a, a)] == [
        (0, 0), (0, 1), (1, 0), (1, 1)]


def test_enumerate_cap():
    a = discrete_space("abcd", V(1))
    with pytest.raises(CapExceeded):
        enumerate_cs_morphisms(a, a, Caps(enum=100))


def test_is_isomorphism_examples():
    s = discrete_space("ab", V(1))
    assert is_isomorphism(identity_morphism(s))
    halved = discrete_space("xy", V(1, 2))
    assert not is_isomorphism(CSMorphism(s, halved, FinMap.identity(2)))
    relabeled = discrete_space("yx", V(1))
    assert is_isomorphism(CSMorphism(s, relabeled, FinMap(2, 2, (1, 0))))


def test_is_embedding_examples():
    big = discrete_space("abc", V(1))
    small = Space(("a", "b"), topology_subspace(big.topology, [0, 1]),
                  uniform_discrete(2, V(1)))
    assert is_embedding(CSMorphism(small, big, FinMap(2, 3, (0, 1))))
    assert not is_embedding(CSMorphism(small, big, FinMap.constant(2, 3, 0)))
    shrunk = discrete_space("ab", V(2))
    assert not is_embedding(CSMorphism(shrunk, big, FinMap(2, 3, (0, 1))))


def test_triple_equivalence_includes_lsc_implies_hausdorff():
    from emtkit.metric import is_extended_metric
    from emtkit.topology import is_hausdorff
    rng = random.Random(29)
    for k in range(300):
        s = random_space(rng, k % 5, infinity_probability=0)
        if is_lsc(s) and is_extended_metric(s.metric):
            assert is_hausdorff(s.topology)


def test_witness_achieves_on_emt_spaces():
    rng = random.Random(31)
    for k in range(60):
        s = random_emt_space(rng, 1 + k % 5)
        rho = recovered_distance(s)
        for x in range(s.n_points):
            for y in range(s.n_points):
                if rho.rows[x][y].is_finite:
                    f = recovery_witness(s, x, y)
                    assert is_admissible_function(s, f)
                    assert abs_diff(f[x], f[y]) == rho.rows[x][y] == s.metric.rows[x][y]


def test_witness_requires_finite_distance():
    blocks = Space(("a", "b"), FiniteTopology.discrete(2), uniform_discrete(2, INFINITY))
    with pytest.raises(DomainError):
        recovery_witness(blocks, 0, 1)


def _mono_by_cancellation(phi, probes):
    for p in probes:
        seen = {}
        for psi in enumerate_cs_morphisms(p, phi.source):
            composite = phi.map.after(psi.map)
            if composite in seen and seen[composite] != psi.map:
                return False
            seen[composite] = psi.map
    return True


def _epi_by_cancellation(phi, probes):
    for p in probes:
        seen = {}
        for psi in enumerate_cs_morphisms(phi.target, p):
            composite = psi.map.after(phi.map)
            if composite in seen and seen[composite] != psi.map:
                return False
            seen[composite] = psi.map
    return True


def test_mono_epi_characterizations():
    """Monomorphisms are the injections and epimorphisms the dense (= onto)
    maps; cancellation against all probes of at most three points agrees."""
    rng = random.Random(37)
    probes = [discrete_space(tuple(f"q{i}" for i in range(n)), V(1)) for n in (1, 2, 3)]
    probes += [discrete_space(("q0", "q1"), INFINITY), discrete_space(("q0", "q1"), V(1, 2))]
    for _ in range(40):
        src = random_emt_space(rng, rng.randint(1, 3))
        dst = random_emt_space(rng, rng.randint(1, 3))
        for phi in enumerate_cs_morphisms(src, dst):
            assert _mono_by_cancellation(phi, probes) == phi.map.is_injective
            assert _epi_by_cancellation(phi, probes) == phi.map.is_surjective
