"""Acceptance criteria, run at full scale with exact (zero-tolerance) equality.

Each test prints one pass/fail line; run with ``pytest -s`` to see them.
The same checks back the ``emtkit suite`` command.
"""
import pytest

from emtkit import suite


def _report(number, result):
    status = result.verdict.status.upper()
    print(f"ACCEPTANCE {number} {result.name}: {status} "
          f"({result.verdict.detail or result.verdict.witness})")
    assert result.verdict.status == "pass", (result.verdict.detail, result.verdict.witness)


def test_acceptance_01_recovered_oracle_equivalence():
    """Recovered distance equals the chain-enumeration oracle entrywise:
    exhaustive topologies on at most 4 points with >= 10000 sampled grid
    metrics, plus 500 seeded instances on up to 6 points."""
    _report(1, suite.check_recovered_oracle(seed=1, metric_samples=10000, seeded_extra=500))


def test_acceptance_02_triple_equivalence():
    """Definitional, Hausdorff-metric, and lower-semicontinuity routes to the
    compatibility predicate agree on every generated instance."""
    _report(2, suite.check_triple_equivalence(seed=2, instances=2000))


def test_acceptance_03_reflection_universal_property():
    """Every morphism from a small source factors uniquely through the
    reflection unit and the transposition is a hom-set bijection."""
    _report(3, suite.check_emtfication_universal(seed=3))


def test_acceptance_04_bicompleteness_smoke():
    """200 seeded diagrams per category tag: every limit and colimit passes
    universal verification against the two-point probe pool, with zero
    failures and zero inconclusives at default caps."""
    _report(4, suite.check_bicompleteness(seed=4, diagrams_per_tag=200))


def test_acceptance_05_formula_cross_check():
    """Direct product/equalizer/coproduct/coequalizer formulas are isomorphic
    to the generic route; structure pairing and reflected colimits hold."""
    _report(5, suite.check_formula_crosscheck(seed=5, diagrams_per_tag=200))


def test_acceptance_06_adjunction_suite():
    """Each named adjunction verifies as a hom-set bijection with unique
    unit (or counit) factorization over 50 corpus pairs."""
    _report(6, suite.check_adjunctions(seed=6, pairs_per_name=50))


def test_acceptance_07_compactification_properties():
    """Compactification units are distance-preserving homeomorphisms and the
    composite compactification decomposes through the reflection."""
    _report(7, suite.check_compactification(seed=7, instances=100))


def test_acceptance_08_theorem_b_coherence():
    """The eight-condition vector is internally constant in domain; relaxed
    non-Hausdorff instances keep conditions i, vi, vii, viii consistently
    false."""
    _report(8, suite.check_theoremb(seed=8, strict_instances=60, relaxed_instances=60))


def test_acceptance_09_degenerate_functor_facts():
    """Geodesification yields the infinity-discrete metric; completion and
    compactification yield isomorphic copies; discretization factors
    through truncation at levels 1/2, 1, 3."""
    _report(9, suite.check_degenerate_functors(seed=9, instances=50))


def test_acceptance_10_witness_achievement():
    """For every compatible instance and finite-distance pair, the emitted
    witness function attains the recovered distance exactly."""
    _report(10, suite.check_witness_achievement(seed=10, instances=100))
