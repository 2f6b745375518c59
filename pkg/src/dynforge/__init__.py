"""Genetic search for extreme examples in the arithmetic dynamics of P^1 over Q."""
from .config import GAConfig, parse_config
from .dynamics import DynSystem, ProjPoint, parse_map, point
from .fitness import FitnessScore, Scorer
from .ga import run
from .heights import canonical_height, naive_height
from .interpolation import Orbit, map_from_entries, validate_orbit
from .invariants import moduli_height, sigma_invariants
from .preperiodic import classify_orbit, preperiodic_census

__version__ = "0.1.0"
__all__ = [
    "DynSystem", "FitnessScore", "GAConfig", "Orbit", "ProjPoint", "Scorer",
    "canonical_height", "classify_orbit", "map_from_entries", "moduli_height", "naive_height",
    "parse_config", "parse_map", "point", "preperiodic_census", "run", "sigma_invariants", "validate_orbit",
]
