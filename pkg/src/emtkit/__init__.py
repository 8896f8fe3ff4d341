"""Exact finite-scale toolkit for topologies paired with extended pseudodistances."""

from .foundations import (ExtValue, FinMap, INFINITY, ONE, Partition, ZERO, abs_diff,
                          join_partitions, minimum, parse_value, saturating_sum)
from .topology import (FiniteTopology, SpecializationPreorder, continuity_partition,
                       is_continuous, is_discrete, is_hausdorff, minimal_neighborhoods,
                       partition_topology, topology_disjoint_union, topology_product,
                       topology_quotient, topology_subspace, validate_opens,
                       validate_topology)
from .metric import (ExtPseudoMetric, chain_quotient_metric, completion_finite, diameter,
                     finiteness_components, infinity_discrete, is_extended_metric,
                     length_distance_finite, metric_disjoint_union, metric_product_sup,
                     truncate_metric, uniform_discrete, validate_pseudometric)
from .spaces import (CSMorphism, Space, enumerate_cs_morphisms, is_embedding, is_emt,
                     is_isomorphism, is_lsc, is_recovered, lip_sup_oracle,
                     recovered_distance, recovery_witness, validate_morphism,
                     validate_space)
from .functors import (FunctorResult, apply_functor, compactify, discretize, emt_fication,
                       emt_fication_morphism, gamma_bar, geodesify, geodesify_counit,
                       metric_completion, metric_topology_attach, stone_cech_finite,
                       truncate_functor)
from .category import (Arrow, ConeCert, Diagram, TAGS, colimit, cross_check_formulas,
                       default_probe_pool, limit, verify_universal)
from .adjunctions import check_adjunction
from .theoremb import TheoremBReport, theoremb_check
from .generate import GenConfig, random_instance
from .verdicts import Verdict

__all__ = [name for name in dir() if not name.startswith("_")]
