"""Finite monoids, their right acts, and decision procedures for flatness,
purity, colimits and covers of acts."""

from .act import FiniteAct, ActMap, make_act, make_map, regular_act, theta_act
from .bicyclic import BicyclicElement, bicyclic_left_divisors, bicyclic_mul
from .colimit import colimit, directed_colimit, make_system
from .congruence import Congruence, all_congruences, generated_congruence, quotient_act
from .corpus import CorpusSpec, generate_corpus
from .cover import build_precover, build_skeleton, find_cover, is_cover, is_precover
from .errors import ActkitError
from .flatness import ClassId, in_class, solve_P_system
from .homs import find_iso, homs
from .monoid import FiniteMonoid, make_monoid, standard_monoid
from .purity import is_n_pure, is_pure_congruence, is_pure_epi
from .suites import run_suite

__all__ = [
    "ActMap", "ActkitError", "BicyclicElement", "ClassId", "Congruence", "CorpusSpec",
    "FiniteAct", "FiniteMonoid", "all_congruences", "bicyclic_left_divisors",
    "bicyclic_mul", "build_precover", "build_skeleton", "colimit", "directed_colimit",
    "find_cover", "find_iso", "generate_corpus", "generated_congruence", "homs",
    "in_class", "is_cover", "is_n_pure", "is_precover", "is_pure_congruence",
    "is_pure_epi", "make_act", "make_map", "make_monoid", "make_system", "quotient_act",
    "regular_act", "run_suite", "solve_P_system", "standard_monoid", "theta_act",
]
