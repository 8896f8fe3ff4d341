import itertools
import random

import pytest

from emtkit.errors import CapExceeded, DomainError
from emtkit.foundations import FinMap, Partition
from emtkit.topology import (FiniteTopology, SpecializationPreorder, all_topologies,
                             continuity_partition, is_continuous,
                             is_continuous_by_preimages, is_discrete, is_hausdorff,
                             is_homeomorphism, mask_of, minimal_neighborhoods,
                             partition_topology, topology_disjoint_union, topology_product,
                             topology_quotient, topology_subspace, validate_opens,
                             validate_topology)

SIERP = FiniteTopology(2, (0b11, 0b10))  # opens {}, {1}, {0,1}


def opens_named(t):
    return set(t.opens())


def test_validate_opens_examples():
    assert validate_opens(2, (0b00, 0b10, 0b11))            # Sierpinski
    v = validate_opens(2, (0b00, 0b01, 0b10))               # missing full set
    assert not v and "full" in v.detail
    full_power = tuple(range(8))
    assert validate_opens(3, full_power)                    # discrete on 3 points


def test_validate_opens_union_witness():
    v = validate_opens(3, (0b000, 0b001, 0b010, 0b111))
    assert not v and v.witness == ([0], [1])


def test_from_opens_roundtrip():
    t = FiniteTopology.from_opens(2, (0b00, 0b10, 0b11))
    assert t == SIERP
    assert opens_named(t) == {0b00, 0b10, 0b11}
    with pytest.raises(DomainError):
        FiniteTopology.from_opens(2, (0b00, 0b01, 0b10))


def test_minimal_neighborhoods_examples():
    assert minimal_neighborhoods(SIERP) == (0b11, 0b10)
    assert minimal_neighborhoods(FiniteTopology.discrete(3)) == (0b001, 0b010, 0b100)
    assert minimal_neighborhoods(FiniteTopology.indiscrete(2)) == (0b11, 0b11)


def test_minimal_neighborhood_is_smallest_open():
    for t in all_topologies(3):
        for x in range(3):
            u = t.min_nbhds[x]
            for o in t.opens():
                if o >> x & 1:
                    assert u & o == u


def test_continuity_partition_examples():
    assert continuity_partition(SIERP) == Partition.single_class(2)
    assert continuity_partition(FiniteTopology.discrete(4)) == Partition.singletons(4)
    disjoint = topology_disjoint_union([SIERP, FiniteTopology.discrete(1)])
    assert continuity_partition(disjoint) == Partition.from_classes(3, [[0, 1], [2]])


def test_continuity_partition_function_oracle():
    """Constancy on classes must coincide with preimage-openness continuity
    for every function into a three-point discrete space; exhaustive on
    every topology with at most four points."""
    codomain = FiniteTopology.discrete(3)
    for n in range(5):
        for t in all_topologies(n):
            p = continuity_partition(t)
            for image in itertools.product(range(3), repeat=n):
                f = FinMap(n, 3, image)
                constant = all(image[x] == image[cls[0]] for cls in p.classes for x in cls)
                assert constant == is_continuous_by_preimages(f, t, codomain)
                assert constant == is_continuous(f, t, codomain)


def test_partition_topology_examples():
    p = Partition.from_classes(3, [[0, 1], [2]])
    t = partition_topology(p)
    assert opens_named(t) == {0b000, 0b011, 0b100, 0b111}
    assert continuity_partition(t) == p
    assert partition_topology(Partition.singletons(3)) == FiniteTopology.discrete(3)
    assert partition_topology(Partition.single_class(3)) == FiniteTopology.indiscrete(3)


def test_is_continuous_examples():
    assert is_continuous(FinMap.identity(2), SIERP, SIERP)
    assert is_continuous(FinMap.constant(2, 2, 0), SIERP, FiniteTopology.discrete(2))
    swap = FinMap(2, 2, (1, 0))
    assert not is_continuous(swap, SIERP, FiniteTopology.discrete(2))


def test_continuity_size_mismatch():
    with pytest.raises(DomainError):
        is_continuous(FinMap.identity(2), SIERP, FiniteTopology.discrete(3))


def test_product_examples():
    assert topology_product([FiniteTopology.discrete(2)] * 2) == FiniteTopology.discrete(4)
    point = FiniteTopology.discrete(1)
    assert topology_product([SIERP, point]) == SIERP
    assert topology_product([]) == FiniteTopology.discrete(1)


def test_product_cap():
    with pytest.raises(CapExceeded):
        topology_product([FiniteTopology.discrete(9)] * 3)


def test_subspace_examples():
    assert topology_subspace(SIERP, [1]) == FiniteTopology.discrete(1)
    assert topology_subspace(FiniteTopology.discrete(3), [0, 2]) == FiniteTopology.discrete(2)
    assert topology_subspace(FiniteTopology.indiscrete(3), [0, 1]) == FiniteTopology.indiscrete(2)


def test_quotient_examples():
    p = Partition.from_classes(3, [[0, 1], [2]])
    assert topology_quotient(FiniteTopology.discrete(3), p) == FiniteTopology.discrete(2)
    assert topology_quotient(SIERP, Partition.single_class(2)) == FiniteTopology.discrete(1)
    assert topology_quotient(FiniteTopology.indiscrete(2),
                             Partition.singletons(2)) == FiniteTopology.indiscrete(2)


def test_disjoint_union_examples():
    point = FiniteTopology.discrete(1)
    assert topology_disjoint_union([point, point]) == FiniteTopology.discrete(2)
    t = topology_disjoint_union([SIERP, point])
    assert validate_topology(t)
    assert opens_named(t) == {0b000, 0b010, 0b100, 0b110, 0b011, 0b111}
    assert topology_disjoint_union([]) == FiniteTopology(0, ())


def test_hausdorff_examples():
    assert is_hausdorff(FiniteTopology.discrete(3))
    assert not is_hausdorff(SIERP)
    assert is_hausdorff(FiniteTopology(0, ()))


def test_hausdorff_iff_discrete():
    for n in range(5):
        for t in all_topologies(n):
            assert is_hausdorff(t) == is_discrete(t)


def test_quotient_subspace_commute_on_saturated_subsets():
    rng = random.Random(7)
    for t in (t for n in range(2, 5) for t in all_topologies(n)):
        n = t.n_points
        assignment = [rng.randrange(2) for _ in range(n)]
        p = Partition.from_class_of(assignment)
        keep = [c for c in range(p.n_classes) if rng.random() < 0.7] or [0]
        saturated = sorted(x for x in range(n) if p.class_of[x] in keep)
        if not saturated:
            continue
        sub_first = topology_subspace(t, saturated)
        p_sub = Partition.from_class_of([p.class_of[x] for x in saturated])
        route_a = topology_quotient(sub_first, p_sub)
        quotient_first = topology_quotient(t, p)
        route_b = topology_subspace(quotient_first, sorted(set(keep)))
        assert route_a == route_b


def test_complete_regularity_equivalence():
    """The topology is a partition topology exactly when every closed set and
    outside point are separated by a continuous function (checked by
    enumerating class-indicator functions)."""
    for n in range(1, 5):
        for t in all_topologies(n):
            p = continuity_partition(t)
            is_partition_top = t == partition_topology(p)
            separated = True
            full = (1 << n) - 1
            for o in t.opens():
                closed = full ^ o
                for x in range(n):
                    if not (o >> x & 1) or closed == 0:
                        continue
                    # a continuous separator exists iff x's class avoids the closed set
                    cls = mask_of(p.classes[p.class_of[x]])
                    if cls & closed:
                        separated = False
            assert is_partition_top == separated


def test_specialization_preorder_round_trip():
    for t in all_topologies(3):
        pre = SpecializationPreorder.of(t)
        assert pre.topology() == t
        assert pre.leq(0, 1) == bool(t.min_nbhds[1] & 1)


def test_topology_counts():
    assert [sum(1 for _ in all_topologies(n)) for n in range(5)] == [1, 1, 4, 29, 355]


def test_is_homeomorphism():
    swap = FinMap(2, 2, (1, 0))
    assert is_homeomorphism(swap, FiniteTopology.discrete(2), FiniteTopology.discrete(2))
    mirrored = FiniteTopology(2, (0b01, 0b11))
    assert is_homeomorphism(swap, SIERP, mirrored)
    assert not is_homeomorphism(swap, SIERP, SIERP)
