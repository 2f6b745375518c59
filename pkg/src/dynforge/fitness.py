"""Scores for orbits under the four search targets.  Lower is better.

Every scorer interpolates the orbit to a map.  An orbit that cannot be
interpolated scores ``WORST``.  Otherwise a wandering 0 scores the height of
an iterate past the interpolated range, while a preperiodic 0 gets a
target-specific negative score.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Any

from .dynamics import DegenerateMap, DynSystem, ProjPoint, iterate
from .heights import IterationCapExceeded as HeightCapExceeded
from .heights import canonical_height, naive_height
from .interpolation import Orbit, OrbitError, orbit_to_map
from .invariants import moduli_height
from .preperiodic import CensusParams, IterationCapExceeded, classify_orbit, preperiodic_census

TARGETS = ("height_ratio", "preperiodic", "cycle", "tail")
DEFAULT_WEIGHTS = {"cycle": (5, 1), "tail": (1, 5)}
WORST = math.inf
ORIGIN = ProjPoint(0, 1)


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class FitnessScore:
    """A score ordered by ``value`` alone; ``WORST`` sorts after every finite value."""

    value: float
    detail: dict = field(default_factory=dict)

    @property
    def is_worst(self) -> bool:
        return self.value == WORST

    def __eq__(self, other) -> bool:
        if not isinstance(other, FitnessScore):
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other) -> bool:
        if not isinstance(other, FitnessScore):
            return NotImplemented
        return self.value < other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def to_json(self) -> dict:
        return {"value": "WORST" if self.is_worst else self.value, "detail": dict(self.detail)}

    @classmethod
    def from_json(cls, data: dict) -> "FitnessScore":
        v = data["value"]
        return cls(WORST if v == "WORST" else float(v), dict(data.get("detail", {})))

    @classmethod
    def worst(cls, reason: str, **detail: Any) -> "FitnessScore":
        return cls(WORST, {"reason": reason, **detail})


def escape_index(degree: int, flavor: str) -> int:
    """First iterate of 0 not pinned down by the interpolation data."""
    return degree + 2 if flavor == "polynomial" else 2 * degree + 3


def _interpolate(orbit: Orbit) -> DynSystem | FitnessScore:
    try:
        return orbit_to_map(orbit)
    except (OrbitError, DegenerateMap) as exc:
        return FitnessScore.worst(getattr(exc, "reason", "degenerate_map"))


def _classify(f: DynSystem):
    try:
        return classify_orbit(f, ORIGIN)
    except IterationCapExceeded:
        return None


def _wandering_score(f: DynSystem, orbit: Orbit) -> FitnessScore:
    k = escape_index(orbit.degree, orbit.flavor)
    h = naive_height(iterate(f, ORIGIN, k)[-1])
    return FitnessScore(h, {"status": "wandering", "k": k})


def score_height_ratio(orbit: Orbit, rel_eps: float = 1e-3) -> FitnessScore:
    """ĥ_f(0) / h_M(f), with ĥ to relative accuracy ``rel_eps``."""
    f = _interpolate(orbit)
    if isinstance(f, FitnessScore):
        return f
    cls = _classify(f)
    if cls is None:
        return FitnessScore.worst("iteration_cap")
    if cls.is_preperiodic:
        return FitnessScore.worst("preperiodic", tail_m=cls.tail_m, period_n=cls.period_n)
    hm = moduli_height(f)
    if hm == 0:
        return FitnessScore.worst("zero_moduli_height")
    try:
        h = canonical_height(f, ORIGIN, rel_eps=rel_eps, max_iterations=512)
    except HeightCapExceeded:
        return FitnessScore.worst("height_precision")
    detail = {
        "status": "wandering",
        "canonical_height": h.value,
        "canonical_height_error": h.error_bound,
        "moduli_height": hm,
    }
    return FitnessScore(h.value / hm, detail)


def score_preperiodic_count(orbit: Orbit, census: CensusParams | None = None) -> FitnessScore:
    """Minus the number of rational preperiodic points, or h(f^k(0)) if 0 wanders."""
    f = _interpolate(orbit)
    if isinstance(f, FitnessScore):
        return f
    cls = _classify(f)
    if cls is None:
        return FitnessScore.worst("iteration_cap")
    if not cls.is_preperiodic:
        return _wandering_score(f, orbit)
    res = preperiodic_census(f, census)
    detail = {
        "status": "preperiodic",
        "tail_m": cls.tail_m,
        "period_n": cls.period_n,
        "count": res.count,
        "census_complete": res.complete,
        "census_certified": res.certified,
    }
    return FitnessScore(-res.count, detail)


def score_weighted(orbit: Orbit, weights: tuple[int, int]) -> FitnessScore:
    """-(w_n n + w_m m) for the preperiod (m, n) of 0, or h(f^k(0)) if 0 wanders."""
    f = _interpolate(orbit)
    if isinstance(f, FitnessScore):
        return f
    cls = _classify(f)
    if cls is None:
        return FitnessScore.worst("iteration_cap")
    if not cls.is_preperiodic:
        return _wandering_score(f, orbit)
    w_n, w_m = weights
    value = -(w_n * cls.period_n + w_m * cls.tail_m)
    return FitnessScore(value, {"status": "preperiodic", "tail_m": cls.tail_m, "period_n": cls.period_n})


def score_cycle(orbit: Orbit, weights: tuple[int, int] = DEFAULT_WEIGHTS["cycle"]) -> FitnessScore:
    return score_weighted(orbit, weights)


def score_tail(orbit: Orbit, weights: tuple[int, int] = DEFAULT_WEIGHTS["tail"]) -> FitnessScore:
    return score_weighted(orbit, weights)


@dataclass(frozen=True)
class Scorer:
    """Picklable scoring function for one target."""

    target: str
    weights: tuple | None = None
    rel_eps: float = 1e-3
    census: CensusParams | None = None

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}")

    def __call__(self, orbit: Orbit) -> FitnessScore:
        if self.target == "height_ratio":
            return score_height_ratio(orbit, self.rel_eps)
        if self.target == "preperiodic":
            return score_preperiodic_count(orbit, self.census)
        w = tuple(self.weights) if self.weights else DEFAULT_WEIGHTS[self.target]
        return score_weighted(orbit, w)
