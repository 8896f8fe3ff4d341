import random

import pytest

from emtkit.adjunctions import check_adjunction
from emtkit.category import (Arrow, ConeCert, Diagram, EMT, PRE, TAGS,
                             colimit, cones_isomorphic, cross_check_formulas,
                             default_probe_pool, formula_coequalizer, formula_coproduct,
                             formula_equalizer, formula_product, limit, validate_diagram,
                             verify_universal)
from emtkit.errors import DomainError
from emtkit.foundations import ExtValue, FinMap, INFINITY, ZERO
from emtkit.functors import discretize, emt_fication, geodesify
from emtkit.generate import random_diagram, random_emt_space, random_space
from emtkit.metric import ExtPseudoMetric, uniform_discrete
from emtkit.spaces import CSMorphism, Space, enumerate_cs_morphisms, is_emt
from emtkit.theoremb import theoremb_check
from emtkit.topology import FiniteTopology

V = ExtValue.of
SIERP = FiniteTopology(2, (0b11, 0b10))


def discrete_space(names, value):
    n = len(names)
    return Space(tuple(names), FiniteTopology.discrete(n), uniform_discrete(n, value))


def test_validate_diagram():
    a = discrete_space("ab", V(1))
    ok = Diagram(EMT, (a,), (Arrow("id", 0, 0, FinMap.identity(2)),))
    assert validate_diagram(ok)
    not_emt = Space(("a", "b"), SIERP, uniform_discrete(2, V(1)))
    assert not validate_diagram(Diagram(EMT, (not_emt,), ()))
    assert validate_diagram(Diagram(PRE, (not_emt,), ()))
    stretch = Diagram(EMT, (discrete_space("ab", V(1)), discrete_space("xy", V(3))),
                      (Arrow("f", 0, 1, FinMap(2, 2, (0, 1))),))
    assert not validate_diagram(stretch)


def test_limit_product_example():
    a = discrete_space("ab", V(1))
    b = discrete_space("xy", V(2))
    d = Diagram(EMT, (a, b), ())
    cert = limit(d)
    assert cert.apex.n_points == 4
    assert max(v for row in cert.apex.metric.rows for v in row) == V(2)
    assert verify_universal(d, cert)


def test_limit_equalizer_of_equal_maps_is_whole_source():
    a = discrete_space("ab", V(1))
    b = discrete_space("xy", V(1))
    f = FinMap(2, 2, (0, 1))
    d = Diagram(EMT, (a, b), (Arrow("f", 0, 1, f), Arrow("g", 0, 1, f)))
    cert = limit(d)
    assert cert.apex.n_points == a.n_points
    assert verify_universal(d, cert)


def test_limit_empty_diagram_is_terminal():
    for tag in TAGS:
        d = Diagram(tag, (), ())
        cert = limit(d)
        assert cert.apex.n_points == 1
        assert verify_universal(d, cert)


def test_colimit_empty_diagram_is_initial():
    for tag in TAGS:
        d = Diagram(tag, (), ())
        cert = colimit(d)
        assert cert.apex.n_points == 0
        assert verify_universal(d, cert)


def test_colimit_coequalizer_example():
    rows = [[V(0), V(1), V(2)], [V(1), V(0), V(1)], [V(2), V(1), V(0)]]
    y = Space(("a", "b", "c"), FiniteTopology.discrete(3),
              ExtPseudoMetric(3, tuple(map(tuple, rows))))
    pt = discrete_space("p", V(1))
    d = Diagram(EMT, (pt, y), (Arrow("f", 0, 1, FinMap(1, 3, (0,))),
                               Arrow("g", 0, 1, FinMap(1, 3, (2,)))))
    cert = colimit(d)
    assert cert.apex.n_points == 2
    assert cert.apex.metric == uniform_discrete(2, V(1))
    assert verify_universal(d, cert)


def test_colimit_coproduct_example():
    pt = discrete_space("p", V(1))
    qt = discrete_space("q", V(1))
    d = Diagram(EMT, (pt, qt), ())
    cert = colimit(d)
    assert cert.apex.metric == uniform_discrete(2, INFINITY)
    assert verify_universal(d, cert)


def test_emt_colimit_applies_reflector():
    glued = Space(("a", "b"), FiniteTopology.discrete(2), ExtPseudoMetric.zero(2))
    d_pre = Diagram(PRE, (glued,), ())
    assert colimit(d_pre).apex.n_points == 2
    d_emt = Diagram(PRE, (glued,), ())
    reflected = emt_fication(colimit(d_emt).apex)
    assert reflected.object.n_points == 1


def test_verify_detects_fattened_apex():
    a = discrete_space("ab", V(1))
    d = Diagram(EMT, (a,), ())
    cert = limit(d)
    # duplicate the first apex point: legs stop being jointly injective
    fat_names = cert.apex.names + ("extra",)
    n = cert.apex.n_points
    fat_top = FiniteTopology.discrete(n + 1)
    rows = [list(row) + [row[0]] for row in cert.apex.metric.rows]
    rows.append(list(rows[0][:n]) + [ZERO])
    rows[n][n] = ZERO
    rows[0][n] = rows[n][0] = ZERO
    fat_metric = ExtPseudoMetric(n + 1, tuple(tuple(r) for r in rows))
    fat_apex = Space(fat_names, fat_top, fat_metric)
    fat_legs = tuple(CSMorphism(fat_apex, leg.target, FinMap(
        n + 1, leg.map.target_size, leg.map.image + (leg.map.image[0],)))
        for leg in cert.legs)
    fat = ConeCert(fat_apex, fat_legs, cert.side)
    v = verify_universal(Diagram(PRE, d.objects, d.arrows), fat)
    assert not v and "uniqueness" in v.detail


def test_verify_detects_starved_apex():
    a = discrete_space("ab", V(1))
    b = discrete_space("xy", V(1))
    d = Diagram(EMT, (a, b), ())
    pt = discrete_space("p", V(1))
    legs = tuple(CSMorphism(pt, obj, FinMap.constant(1, 2, 0)) for obj in d.objects)
    v = verify_universal(d, ConeCert(pt, legs, "cone"))
    assert not v and "existence" in v.detail


def test_cross_check_formula_routes():
    rng = random.Random(61)
    corpus = []
    for tag in TAGS:
        corpus.append(random_diagram(rng, tag, max_arrows=0))
        x = random_space(rng, 2) if tag != EMT else random_emt_space(rng, 2)
        y = random_space(rng, 2) if tag != EMT else random_emt_space(rng, 2)
        maps = [f.map for f in enumerate_cs_morphisms(x, y)] or [FinMap.constant(2, 2, 0)]
        f = maps[0]
        g = maps[-1]
        corpus.append(Diagram(tag, (x, y), (Arrow("f", 0, 1, f), Arrow("g", 0, 1, g))))
    assert cross_check_formulas(corpus)


def test_formula_constructions_match_generic():
    a = discrete_space("ab", V(2))
    b = discrete_space("xy", V(1))
    d = Diagram(EMT, (a, b), ())
    assert cones_isomorphic(formula_product([a, b], EMT), limit(d), EMT)
    assert cones_isomorphic(formula_coproduct([a, b], EMT), colimit(d), EMT)
    f = FinMap(2, 2, (0, 1))
    g = FinMap(2, 2, (0, 0))
    dd = Diagram(EMT, (a, b), (Arrow("f", 0, 1, f), Arrow("g", 0, 1, g)))
    assert cones_isomorphic(formula_equalizer(a, b, f, g, EMT), limit(dd), EMT)
    assert cones_isomorphic(formula_coequalizer(a, b, f, g, EMT), colimit(dd), EMT)


def test_cones_isomorphic_rejects_wrong_metric():
    a = discrete_space("ab", V(1))
    d = Diagram(EMT, (a,), ())
    cert = limit(d)
    shrunk = Space(cert.apex.names, cert.apex.topology, uniform_discrete(2, V(1, 2)))
    other = ConeCert(shrunk, tuple(CSMorphism(shrunk, leg.target, leg.map)
                                   for leg in cert.legs), cert.side)
    assert not cones_isomorphic(other, cert, EMT)


def test_check_adjunction_examples():
    collapsed = Space(("a", "b"), SIERP, uniform_discrete(2, V(1)))
    target = discrete_space("xy", V(1))
    assert check_adjunction("emt", collapsed, target)
    # hom-set sizes agree across the unit
    reflected = emt_fication(collapsed)
    assert len(enumerate_cs_morphisms(collapsed, target)) == \
        len(enumerate_cs_morphisms(reflected.object, target))

    tych = Space(("a", "b"), FiniteTopology.discrete(2), uniform_discrete(2, ZERO))
    bounded = discrete_space("xy", V(1))
    assert check_adjunction("disc:1", tych, bounded)
    lifted = discretize(tych.topology, V(1), names=tych.names).object
    assert len(enumerate_cs_morphisms(lifted, bounded)) == 4  # all maps: continuity is free

    assert check_adjunction("trunc:1", discrete_space("ab", V(3)), bounded)


def test_check_adjunction_domain_errors():
    bad_target = Space(("a", "b"), SIERP, uniform_discrete(2, V(1)))
    with pytest.raises(DomainError):
        check_adjunction("emt", discrete_space("ab", V(1)), bad_target)
    with pytest.raises(DomainError):
        check_adjunction("disc:1", bad_target, discrete_space("xy", V(1)))
    with pytest.raises(DomainError):
        check_adjunction("trunc:1", discrete_space("ab", V(1)), discrete_space("xy", V(2)))


def test_geodesification_reflective_direction_fails():
    """The transposition claimed for a reflection-style geodesification
    adjunction is not a bijection: maps out of the lengthened space are
    strictly more numerous.  This is why the checker runs the coreflection."""
    b = discrete_space("ab", V(1))
    a = discrete_space("xy", INFINITY)      # geodesic at finite scale
    geo_b = geodesify(b).object
    out_of_geo = enumerate_cs_morphisms(geo_b, a)
    out_of_b = enumerate_cs_morphisms(b, a)
    assert len(out_of_geo) == 4 and len(out_of_b) == 2
    # the coreflection direction is a genuine bijection
    assert check_adjunction("geo", a, b)


def test_theoremb_examples():
    rng = random.Random(67)
    for k in range(10):
        s = random_emt_space(rng, 1 + k % 4)
        report = theoremb_check(s)
        assert report.all_equal and all(report.conditions)

    relaxed = theoremb_check(Space(("a", "b"), SIERP, uniform_discrete(2, V(1))),
                             relaxed=True)
    assert not any(relaxed.conditions)
    assert relaxed.verdict()

    with pytest.raises(DomainError):
        theoremb_check(Space(("a", "b"), SIERP, uniform_discrete(2, V(1))))
    with pytest.raises(DomainError):
        theoremb_check(discrete_space("ab", ZERO))


def test_probe_pools_are_tag_valid():
    for tag in TAGS:
        pool = default_probe_pool(tag)
        assert len(pool) >= 3
        if tag == EMT:
            assert all(is_emt(p) for p in pool)
