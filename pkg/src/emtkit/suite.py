"""The acceptance battery: ten seeded, deterministic checks.

Each check returns a :class:`CheckResult` whose verdict is three-valued and
carries counters, so the command line and the test suite share one
implementation.  All expected values are exact; there are no tolerances.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .caps import Caps, effective_caps
from .errors import CapExceeded
from .foundations import ExtValue, FinMap, INFINITY, ZERO, abs_diff
from .metric import is_extended_metric, uniform_discrete, zero_partition
from .spaces import (Space, is_admissible_function, is_lsc, lip_sup_oracle,
                     recovered_distance, recovery_witness, validate_space)
from .topology import (FiniteTopology, all_topologies, is_discrete, is_hausdorff,
                       partition_topology)
from .functors import (compactify, discretize, emt_fication, gamma_bar, geodesify,
                       is_geodesic_finite, metric_completion, metric_topology_attach,
                       truncate_functor)
from .spaces import CSMorphism, is_cs_map, is_embedding, is_emt, is_isomorphism
from .category import (Arrow, Diagram, EMT, TAGS, colimit, cross_check_formulas,
                       default_probe_pool, limit, map_valid_in, verify_universal)
from .adjunctions import check_adjunction
from .theoremb import theoremb_check
from .generate import (DEFAULT_GRID, POSITIVE_GRID, random_bounded_emt_space, random_diagram,
                       random_emt_space, random_metric, random_space, random_topology)
from .verdicts import Verdict

GRID_WITH_INF_PROBABILITY = Fraction(1, 5)


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: Verdict
    stats: dict

    def to_doc(self) -> dict:
        return {"name": self.name, "verdict": self.verdict.to_doc(), "stats": self.stats}


def check_recovered_oracle(seed: int = 1, metric_samples: int = 10000,
                           seeded_extra: int = 500, caps: Caps | None = None) -> CheckResult:
    """Recovered distance equals the chain-enumeration oracle entrywise.

    Exhaustive over every topology on at most four points (via preorders)
    with sampled grid metrics, plus seeded instances up to six points.
    """
    caps = effective_caps(caps)
    rng = random.Random(seed)
    topologies = [t for n in range(5) for t in all_topologies(n)]
    per_topology = -(-metric_samples // len(topologies))
    instances = 0
    pairs = 0
    for t in topologies:
        names = tuple(f"p{i}" for i in range(t.n_points))
        for _ in range(per_topology):
            m = random_metric(rng, t.n_points, DEFAULT_GRID, GRID_WITH_INF_PROBABILITY)
            s = Space(names, t, m)
            instances += 1
            bad = _oracle_mismatch(s, caps)
            if bad is not None:
                return CheckResult("recovered_oracle", bad,
                                   {"instances": instances, "pairs": pairs})
            pairs += s.n_points * (s.n_points + 1) // 2
    for k in range(seeded_extra):
        n = 1 + k % 6
        mode = ("random-preorder", "discrete", "partition")[k % 3]
        s = random_space(rng, n, DEFAULT_GRID, GRID_WITH_INF_PROBABILITY, mode)
        instances += 1
        bad = _oracle_mismatch(s, caps)
        if bad is not None:
            return CheckResult("recovered_oracle", bad,
                               {"instances": instances, "pairs": pairs})
        pairs += n * (n + 1) // 2
    return CheckResult("recovered_oracle", Verdict.passed(f"{pairs} pairs matched exactly"),
                       {"instances": instances, "pairs": pairs})


def _oracle_mismatch(s: Space, caps: Caps) -> Verdict | None:
    rho = recovered_distance(s)
    for x in range(s.n_points):
        for y in range(x, s.n_points):
            oracle = lip_sup_oracle(s, x, y, caps)
            if oracle != rho.rows[x][y]:
                return Verdict.failed(
                    "recovered distance disagrees with the oracle",
                    witness={"names": list(s.names), "pair": (x, y),
                             "closure": str(rho.rows[x][y]), "oracle": str(oracle)})
    return None


def check_triple_equivalence(seed: int = 2, instances: int = 2000,
                             caps: Caps | None = None) -> CheckResult:
    """Definitional, Hausdorff, and lower-semicontinuity routes agree everywhere."""
    rng = random.Random(seed)
    checked = 0
    for k in range(instances):
        n = k % 5
        mode = ("random-preorder", "discrete", "partition")[k % 3]
        s = random_space(rng, n, DEFAULT_GRID, GRID_WITH_INF_PROBABILITY, mode)
        extended = is_extended_metric(s.metric)
        rho = recovered_distance(s)
        definitional = (extended and rho == s.metric
                        and partition_topology(zero_partition(rho)) == s.topology)
        hausdorff_route = extended and is_hausdorff(s.topology)
        lsc_route = extended and is_lsc(s)
        if not definitional == hausdorff_route == lsc_route:
            return CheckResult("emt_triple_equivalence", Verdict.failed(
                "the three compatibility routes disagree",
                witness={"names": list(s.names),
                         "routes": [definitional, hausdorff_route, lsc_route]}),
                {"instances": checked})
        checked += 1
    return CheckResult("emt_triple_equivalence",
                       Verdict.passed(f"{checked} instances, zero disagreements"),
                       {"instances": checked})


def _emt_target_pool(rng: random.Random, max_points: int = 3) -> list[Space]:
    pool = [Space((), FiniteTopology.discrete(0), uniform_discrete(0, ZERO))]
    for n in range(1, max_points + 1):
        pool.append(Space(tuple(f"t{i}" for i in range(n)), FiniteTopology.discrete(n),
                          uniform_discrete(n, INFINITY)))
        for _ in range(2):
            pool.append(random_emt_space(rng, n))
    return pool


def check_emtfication_universal(seed: int = 3, metrics_per_topology: int = 2,
                                caps: Caps | None = None) -> CheckResult:
    """Every morphism factors uniquely through the reflection unit; hom-sets biject."""
    caps = effective_caps(caps)
    rng = random.Random(seed)
    sources = []
    for n in range(4):
        for t in all_topologies(n):
            names = tuple(f"s{i}" for i in range(n))
            for _ in range(metrics_per_topology):
                sources.append(Space(names, t, random_metric(
                    rng, n, DEFAULT_GRID, GRID_WITH_INF_PROBABILITY)))
    targets = _emt_target_pool(rng)
    checked = 0
    for src in sources:
        for dst in targets:
            v = check_adjunction("emt", src, dst, caps)
            if not v:
                return CheckResult("emtfication_universal", Verdict.failed(
                    f"universal property failed: {v.detail}",
                    witness={"source": list(src.names), "target": list(dst.names),
                             "inner": v.witness}), {"pairs": checked})
            checked += 1
    return CheckResult("emtfication_universal",
                       Verdict.passed(f"{checked} source/target pairs verified"),
                       {"pairs": checked})


def check_bicompleteness(seed: int = 4, diagrams_per_tag: int = 200,
                         caps: Caps | None = None) -> CheckResult:
    """Limits and colimits of seeded diagrams verify against the two-point probe pool."""
    caps = effective_caps(caps)
    rng = random.Random(seed)
    verified = 0
    for tag in TAGS:
        pool_cache: dict[tuple, tuple] = {}
        for _ in range(diagrams_per_tag):
            d = random_diagram(rng, tag)
            for cert_fn, label in ((limit, "limit"), (colimit, "colimit")):
                try:
                    cert = cert_fn(d, caps)
                    probes = default_probe_pool(tag)
                    v = verify_universal(d, cert, probes, caps)
                except CapExceeded as exc:
                    v = Verdict.undecided(str(exc))
                if v.status != "pass":
                    return CheckResult("bicompleteness", Verdict(
                        v.status, f"{label} in {tag}: {v.detail}", v.witness),
                        {"verified": verified})
                verified += 1
    return CheckResult("bicompleteness",
                       Verdict.passed(f"{verified} universal certificates verified"),
                       {"verified": verified})


def check_formula_crosscheck(seed: int = 5, diagrams_per_tag: int = 200,
                             shaped_per_tag: int = 20,
                             caps: Caps | None = None) -> CheckResult:
    """Direct formulas agree with the generic route; structures pair correctly."""
    caps = effective_caps(caps)
    rng = random.Random(seed)
    corpus: list[Diagram] = []
    for tag in TAGS:
        for _ in range(diagrams_per_tag):
            corpus.append(random_diagram(rng, tag))
        for _ in range(shaped_per_tag):
            d = random_diagram(rng, tag, max_arrows=0)
            corpus.append(d)
            if len(d.objects) >= 2:
                x, y = d.objects[0], d.objects[1]
                arrows = []
                for k in range(2):
                    image = tuple(rng.randrange(y.n_points) for _ in range(x.n_points))
                    f = FinMap(x.n_points, y.n_points, image)
                    if not map_valid_in(tag, f, x, y):
                        f = FinMap.constant(x.n_points, y.n_points, 0)
                    arrows.append(Arrow(f"a{k}", 0, 1, f))
                corpus.append(Diagram(tag, (x, y), tuple(arrows)))
    v = cross_check_formulas(corpus, caps)
    return CheckResult("formula_crosscheck", v, {"diagrams": len(corpus)})


ADJUNCTIONS = ("emt", "gamma", "disc:1", "disc:inf", "T", "trunc:1", "mc", "geo")


def _adjunction_pair(rng: random.Random, name: str) -> tuple[Space, Space]:
    n_left = rng.randint(0, 3)
    n_right = rng.randint(0, 3)
    if name == "emt":
        return (random_space(rng, n_left, DEFAULT_GRID, GRID_WITH_INF_PROBABILITY,
                             rng.choice(("random-preorder", "discrete", "partition"))),
                random_emt_space(rng, n_right))
    if name in ("gamma", "mc"):
        return random_emt_space(rng, n_left), random_emt_space(rng, n_right)
    if name.startswith("trunc:") or name.startswith("disc:"):
        level = name.split(":", 1)[1]
        lam = INFINITY if level == "inf" else ExtValue.of(int(level))
        right = (random_emt_space(rng, n_right) if not lam.is_finite
                 else random_bounded_emt_space(rng, n_right, lam))
        if name.startswith("disc:"):
            left = Space(tuple(f"l{i}" for i in range(n_left)),
                         FiniteTopology.discrete(n_left), uniform_discrete(n_left, ZERO))
            return left, right
        return random_emt_space(rng, n_left), right
    if name == "T":
        return random_emt_space(rng, n_left), random_emt_space(rng, n_right)
    if name == "geo":
        left = Space(tuple(f"l{i}" for i in range(n_left)),
                     FiniteTopology.discrete(n_left), uniform_discrete(n_left, INFINITY))
        return left, random_emt_space(rng, n_right)
    raise ValueError(name)


def check_adjunctions(seed: int = 6, pairs_per_name: int = 50,
                      caps: Caps | None = None) -> CheckResult:
    """Hom-set bijections with unique unit factorization for each named adjunction.

    The geodesification pair is verified in its sound direction, as the
    coreflection; see the adjunction module docstring.
    """
    caps = effective_caps(caps)
    rng = random.Random(seed)
    checked = 0
    for name in ADJUNCTIONS:
        for _ in range(pairs_per_name):
            left, right = _adjunction_pair(rng, name)
            v = check_adjunction(name, left, right, caps)
            if not v:
                return CheckResult("adjunctions", Verdict.failed(
                    f"{name}: {v.detail}",
                    witness={"left": list(left.names), "right": list(right.names),
                             "inner": v.witness}), {"checked": checked})
            checked += 1
    return CheckResult("adjunctions", Verdict.passed(f"{checked} pairs verified"),
                       {"checked": checked})


def check_compactification(seed: int = 7, instances: int = 100,
                           caps: Caps | None = None) -> CheckResult:
    """Compactification units are isomorphisms; the composite functor decomposes."""
    rng = random.Random(seed)
    checked = 0
    for k in range(instances):
        s = random_emt_space(rng, k % 5)
        res = compactify(s)
        if not (is_isomorphism(res.unit) and is_embedding(res.unit)
                and res.unit.map.is_surjective):
            return CheckResult("compactification", Verdict.failed(
                "compactification unit is not an isomorphic dense embedding",
                witness=list(s.names)), {"instances": checked})
        pre = random_space(rng, k % 5, DEFAULT_GRID, GRID_WITH_INF_PROBABILITY,
                           ("random-preorder", "discrete", "partition")[k % 3])
        composed_obj = compactify(emt_fication(pre).object)
        bar = gamma_bar(pre)
        reflected = emt_fication(pre)
        expected_unit = composed_obj.unit.map.after(reflected.unit.map)
        if bar.object != composed_obj.object or bar.unit.map != expected_unit:
            return CheckResult("compactification", Verdict.failed(
                "composite compactification differs from the two-stage composition",
                witness=list(pre.names)), {"instances": checked})
        checked += 1
    return CheckResult("compactification", Verdict.passed(f"{checked} instances verified"),
                       {"instances": checked})


def check_theoremb(seed: int = 8, strict_instances: int = 60, relaxed_instances: int = 60,
                   caps: Caps | None = None) -> CheckResult:
    """The eight-condition vector is constant in domain and falsity-consistent relaxed."""
    caps = effective_caps(caps)
    rng = random.Random(seed)
    checked = 0
    for k in range(strict_instances):
        s = random_emt_space(rng, k % 5)
        report = theoremb_check(s, relaxed=False, caps=caps)
        if not report.verdict() or not all(report.conditions):
            return CheckResult("theorem_b", Verdict.failed(
                "strict-mode vector is not constantly true",
                witness={"names": list(s.names), "conditions": list(report.conditions)}),
                {"instances": checked})
        checked += 1
    produced = 0
    while produced < relaxed_instances:
        s = random_space(rng, 2 + produced % 3, POSITIVE_GRID, Fraction(1, 8),
                         ("random-preorder", "partition")[produced % 2])
        if is_hausdorff(s.topology) or not is_extended_metric(s.metric):
            s = Space(s.names, FiniteTopology.indiscrete(s.n_points), s.metric)
            if not is_extended_metric(s.metric):
                produced += 1
                continue
        report = theoremb_check(s, relaxed=True, caps=caps)
        quartet = [report.conditions[0], report.conditions[5],
                   report.conditions[6], report.conditions[7]]
        if not report.verdict() or any(quartet):
            return CheckResult("theorem_b", Verdict.failed(
                "relaxed-mode unit/embedding conditions are not consistently false",
                witness={"names": list(s.names), "conditions": list(report.conditions)}),
                {"instances": checked})
        produced += 1
        checked += 1
    return CheckResult("theorem_b", Verdict.passed(f"{checked} instances coherent"),
                       {"instances": checked})


def check_degenerate_functors(seed: int = 9, instances: int = 50,
                              caps: Caps | None = None) -> CheckResult:
    """Length distances degenerate, completions are copies, discretization factors."""
    rng = random.Random(seed)
    checked = 0
    for k in range(instances):
        s = random_emt_space(rng, 2 + k % 3)
        geo = geodesify(s)
        if not is_geodesic_finite(geo.object) or geo.object.metric != uniform_discrete(
                s.n_points, INFINITY):
            return CheckResult("degenerate_functors", Verdict.failed(
                "geodesification is not the infinity-discrete metric",
                witness=list(s.names)), {"instances": checked})
        if "degenerate-at-finite-scale" not in geo.notes:
            return CheckResult("degenerate_functors", Verdict.failed(
                "geodesification must flag its degeneracy"), {"instances": checked})
        if not is_isomorphism(metric_completion(s).unit):
            return CheckResult("degenerate_functors", Verdict.failed(
                "metric completion is not an isomorphic copy",
                witness=list(s.names)), {"instances": checked})
        if not is_isomorphism(compactify(s).unit):
            return CheckResult("degenerate_functors", Verdict.failed(
                "compactification is not an isomorphic copy",
                witness=list(s.names)), {"instances": checked})
        t = random_topology(rng, k % 4, "discrete")
        for lam in (ExtValue.of(1, 2), ExtValue.of(1), ExtValue.of(3)):
            direct = discretize(t, lam).object
            factored = (truncate_functor(discretize(t, INFINITY).object, lam).object
                        if t.n_points else direct)
            if direct != factored:
                return CheckResult("degenerate_functors", Verdict.failed(
                    "discretization does not factor through truncation",
                    witness=str(lam)), {"instances": checked})
        checked += 1
    return CheckResult("degenerate_functors", Verdict.passed(f"{checked} instances verified"),
                       {"instances": checked})


def check_witness_achievement(seed: int = 10, instances: int = 100,
                              caps: Caps | None = None) -> CheckResult:
    """The emitted witness attains the recovered distance on finite pairs."""
    rng = random.Random(seed)
    checked_pairs = 0
    for k in range(instances):
        s = random_emt_space(rng, k % 6)
        rho = recovered_distance(s)
        for x in range(s.n_points):
            for y in range(s.n_points):
                if not rho.rows[x][y].is_finite:
                    continue
                f = recovery_witness(s, x, y)
                if not is_admissible_function(s, f) or abs_diff(f[x], f[y]) != rho.rows[x][y]:
                    return CheckResult("witness_achievement", Verdict.failed(
                        "witness does not attain the recovered distance",
                        witness={"names": list(s.names), "pair": (x, y),
                                 "witness": [str(v) for v in f]}),
                        {"pairs": checked_pairs})
                checked_pairs += 1
    return CheckResult("witness_achievement",
                       Verdict.passed(f"{checked_pairs} finite pairs attained"),
                       {"pairs": checked_pairs})


def run_suite(seed: int = 0, count: int = 200, caps: Caps | None = None) -> list[CheckResult]:
    """Run all ten checks; ``count`` scales the corpus sizes proportionally.

    The default count of 200 reproduces the acceptance-scale corpus:
    50 * count sampled metrics for the oracle check, count diagrams per tag,
    count // 4 pairs per adjunction, and so on.
    """
    caps = effective_caps(caps)
    return [
        check_recovered_oracle(seed + 1, metric_samples=50 * count,
                               seeded_extra=max(1, 5 * count // 2), caps=caps),
        check_triple_equivalence(seed + 2, instances=10 * count, caps=caps),
        check_emtfication_universal(seed + 3, caps=caps),
        check_bicompleteness(seed + 4, diagrams_per_tag=count, caps=caps),
        check_formula_crosscheck(seed + 5, diagrams_per_tag=count, caps=caps),
        check_adjunctions(seed + 6, pairs_per_name=max(1, count // 4), caps=caps),
        check_compactification(seed + 7, instances=max(1, count // 2), caps=caps),
        check_theoremb(seed + 8, strict_instances=max(1, count // 4),
                       relaxed_instances=max(1, count // 4), caps=caps),
        check_degenerate_functors(seed + 9, instances=max(1, count // 4), caps=caps),
        check_witness_achievement(seed + 10, instances=max(1, count // 2), caps=caps),
    ]
