"""Genetic search over integer orbits of 0.

Each generation is sorted by (score, orbit) and its top fraction survives
unchanged.  The rest of the next generation is bred from uniformly
chosen survivor pairs by crossover or permutation mixing, followed by
mutation.  Every ``reset_interval`` generations all but the very best are
replaced by fresh random orbits.
"""
from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .config import GAConfig
from .dynamics import DegenerateMap, ProjPoint
from .fitness import FitnessScore, Scorer
from .interpolation import Orbit, OrbitError, orbit_length, orbit_to_map
from .invariants import conjugacy_fingerprint
from .preperiodic import classify_orbit, detect_dynamical_compression, preperiodic_census

RNG_NAME = "python-random-mt19937"


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class Individual:
    orbit: Orbit
    score: FitnessScore
    fingerprint: str | None = None

    def key(self):
        return (self.score.value, self.orbit.entries)


@dataclass
class GenerationRecord:
    generation: int
    score: FitnessScore
    orbit: Orbit
    evaluations: int

    def to_json(self) -> dict:
        return {
            "generation": self.generation,
            "best_score": self.score.to_json()["value"],
            "best_orbit": list(self.orbit.entries),
            "evaluations": self.evaluations,
        }


class HallOfFame:
    """Best individuals, at most one per conjugacy fingerprint."""

    def __init__(self, capacity: int = 20):
        self.capacity = capacity
        self._by_fp: dict[str, Individual] = {}

    def __len__(self) -> int:
        return len(self._by_fp)

    def __iter__(self):
        return iter(self.entries())

    def offer(self, ind: Individual) -> bool:
        if ind.fingerprint is None or ind.score.is_worst:
            return False
        cur = self._by_fp.get(ind.fingerprint)
        if cur is not None and cur.key() <= ind.key():
            return False
        if cur is None and len(self._by_fp) >= self.capacity:
            worst = max(self._by_fp.values(), key=Individual.key)
            if worst.key() <= ind.key():
                return False
            del self._by_fp[worst.fingerprint]
        self._by_fp[ind.fingerprint] = ind
        return True

    def entries(self) -> list[Individual]:
        return sorted(self._by_fp.values(), key=Individual.key)


class Evaluator:
    """Memoized scoring; optionally fans uncached orbits out to worker processes."""

    def __init__(self, scorer: Callable[[Orbit], FitnessScore], threads: int = 1, cache: dict | None = None):
        self.scorer = scorer
        self.threads = threads
        self.cache: dict = {} if cache is None else cache
        self.requests = 0
        self._pool = ProcessPoolExecutor(threads) if threads > 1 else None

    def __call__(self, orbits: Sequence[Orbit]) -> list[FitnessScore]:
        self.requests += len(orbits)
        todo = list(dict.fromkeys(o for o in orbits if o not in self.cache))
        if todo:
            if self._pool is not None:
                results = self._pool.map(self.scorer, todo, chunksize=max(1, len(todo) // (4 * self.threads)))
            else:
                results = map(self.scorer, todo)
            for o, s in zip(todo, results):
                self.cache[o] = s
        return [self.cache[o] for o in orbits]

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None


def _check(config: GAConfig) -> None:
    config.validate()
    L = orbit_length(config.degree, config.map_type)
    if config.normalize_orbit and L - 1 > 2 * config.bound + 1:
        raise ConfigurationError(f"bound {config.bound} is too small for {L - 1} distinct source points")


def _normalize(genes: list[int], bound: int, rng: random.Random) -> list[int]:
    # redraw repeated source points; the final entry (an image only) is free
    seen = {0}
    out = list(genes)
    for i in range(len(out) - 1):
        while out[i] in seen:
            out[i] = rng.randint(-bound, bound)
        seen.add(out[i])
    return out


def _orbit(genes: Iterable[int], config: GAConfig) -> Orbit:
    return Orbit((0, *genes), config.degree, config.map_type)


def random_orbit(config: GAConfig, rng: random.Random) -> Orbit:
    L = orbit_length(config.degree, config.map_type)
    genes = [rng.randint(-config.bound, config.bound) for _ in range(L - 1)]
    if config.normalize_orbit:
        genes = _normalize(genes, config.bound, rng)
    return _orbit(genes, config)


def _same_shape(o1: Orbit, o2: Orbit) -> None:
    if (o1.degree, o1.flavor, len(o1)) != (o2.degree, o2.flavor, len(o2)):
        raise ValueError("parents differ in degree or flavor")


def crossover(o1: Orbit, o2: Orbit, rng: random.Random | None = None) -> tuple[Orbit, Orbit]:
    """Swap the second halves of the two tails."""
    _same_shape(o1, o2)
    t1, t2 = o1.entries[1:], o2.entries[1:]
    h = len(t1) // 2
    mk = lambda t: Orbit((0, *t), o1.degree, o1.flavor)  # noqa: E731
    return mk(t1[:h] + t2[h:]), mk(t2[:h] + t1[h:])


def permutation_mix(o1: Orbit, o2: Orbit, rng: random.Random) -> tuple[Orbit, Orbit]:
    """Shuffle the pooled tails and deal them back out."""
    _same_shape(o1, o2)
    pool = list(o1.entries[1:] + o2.entries[1:])
    rng.shuffle(pool)
    L = len(o1) - 1
    mk = lambda t: Orbit((0, *t), o1.degree, o1.flavor)  # noqa: E731
    return mk(pool[:L]), mk(pool[L:])


MIXERS = {"crossover": crossover, "permutation": permutation_mix}


def mutate(orbit: Orbit, config: GAConfig, rng: random.Random) -> Orbit:
    genes = list(orbit.entries[1:])
    B = config.bound
    if config.mutation_method == "all":
        for i in range(len(genes)):
            if rng.random() < config.mutation_rate:
                genes[i] = rng.randint(-B, B)
    elif rng.random() < config.mutation_rate:
        genes[rng.randrange(len(genes))] = rng.randint(-B, B)
    return Orbit((0, *genes), orbit.degree, orbit.flavor)


def _score_all(orbits: Sequence[Orbit], evaluate: Evaluator) -> list[Individual]:
    return [Individual(o, s) for o, s in zip(orbits, evaluate(orbits))]


def _sorted(pop: Iterable[Individual]) -> list[Individual]:
    return sorted(pop, key=Individual.key)


def step_generation(
    pop: Sequence[Individual], config: GAConfig, rng: random.Random, evaluate: Evaluator
) -> list[Individual]:
    pop = _sorted(pop)
    n = len(pop)
    keep = min(n, math.ceil(config.survival * n))
    survivors = pop[:keep]
    mix = MIXERS[config.mixing_method]
    children: list[Orbit] = []
    while len(children) < n - keep:
        a = rng.choice(survivors).orbit
        b = rng.choice(survivors).orbit
        for child in mix(a, b, rng):
            child = mutate(child, config, rng)
            if config.normalize_orbit:
                child = _orbit(_normalize(list(child.entries[1:]), config.bound, rng), config)
            children.append(child)
    children = children[: n - keep]
    return _sorted(survivors + _score_all(children, evaluate))


def reset_population(
    pop: Sequence[Individual], config: GAConfig, rng: random.Random, evaluate: Evaluator
) -> list[Individual]:
    pop = _sorted(pop)
    keep = min(len(pop), math.ceil(config.reset_survival * len(pop)))
    fresh = [random_orbit(config, rng) for _ in range(len(pop) - keep)]
    return _sorted(list(pop[:keep]) + _score_all(fresh, evaluate))


@dataclass
class RunReport:
    config: dict
    seed: int
    rng: str
    status: str
    history: list[GenerationRecord]
    hall_of_fame: list[dict]
    evaluations: int
    unique_evaluations: int
    wall_time: float = 0.0

    @property
    def best(self) -> GenerationRecord:
        return self.history[-1]

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "config": self.config,
            "seed": self.seed,
            "rng": self.rng,
            "status": self.status,
            "history": [r.to_json() for r in self.history],
            "hall_of_fame": self.hall_of_fame,
            "evaluations": self.evaluations,
            "unique_evaluations": self.unique_evaluations,
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out


def make_scorer(config: GAConfig, rel_eps: float | None = None) -> Scorer:
    return Scorer(config.target, config.orbit_weights, rel_eps or config.rel_eps)


def _fingerprint(orbit: Orbit, cache: dict) -> str | None:
    if orbit not in cache:
        try:
            cache[orbit] = conjugacy_fingerprint(orbit_to_map(orbit))
        except (OrbitError, DegenerateMap):
            cache[orbit] = None
    return cache[orbit]


def finalize_entry(ind: Individual, config: GAConfig) -> dict:
    """Re-score a finalist at the tighter precision and attach its census."""
    scorer = make_scorer(config, config.final_rel_eps)
    score = scorer(ind.orbit)
    f = orbit_to_map(ind.orbit)
    meta = dict(score.detail)
    cls = classify_orbit(f, ProjPoint(0, 1))
    if cls.is_preperiodic:
        census = preperiodic_census(f)
        meta.update(count=census.count, census_complete=census.complete, census_certified=census.certified)
    return {
        "orbit": list(ind.orbit.entries),
        "score": score.to_json()["value"],
        "fingerprint": ind.fingerprint,
        "map": str(f),
        "map_forms": f.to_json(),
        "metadata": meta,
        "dynamical_compression": detect_dynamical_compression(ind.orbit),
    }


def run(
    config: GAConfig,
    callbacks: Sequence[Callable[[GenerationRecord], None]] = (),
    threads: int = 1,
    cache: dict | None = None,
) -> RunReport:
    """One seeded search.  ``cache`` may be shared between runs with the same target."""
    try:
        _check(config)
    except ValueError as exc:
        raise ConfigurationError(str(exc)) from None
    t0 = time.perf_counter()
    rng = random.Random(config.seed)
    evaluate = Evaluator(make_scorer(config), threads, cache)
    fp_cache: dict = {}
    hof = HallOfFame(config.hall_of_fame_size)
    history: list[GenerationRecord] = []

    def record(gen: int, pop: list[Individual]) -> None:
        best = pop[0]
        rec = GenerationRecord(gen, best.score, best.orbit, evaluate.requests)
        history.append(rec)
        for ind in pop[: config.hall_of_fame_size]:
            hof.offer(Individual(ind.orbit, ind.score, _fingerprint(ind.orbit, fp_cache)))
        for cb in callbacks:
            cb(rec)

    def reached() -> bool:
        return config.orbit_target is not None and history[-1].score.value <= config.orbit_target

    try:
        pop = _sorted(_score_all([random_orbit(config, rng) for _ in range(config.population)], evaluate))
        record(0, pop)
        status = "target_reached" if reached() else "completed"
        for gen in range(1, config.generations + 1):
            if status == "target_reached":
                break
            pop = step_generation(pop, config, rng, evaluate)
            if config.reset_interval and gen % config.reset_interval == 0 and gen < config.generations:
                pop = reset_population(pop, config, rng, evaluate)
            record(gen, pop)
            if reached():
                status = "target_reached"
    finally:
        evaluate.close()
    finalists = [finalize_entry(ind, config) for ind in hof.entries()]
    finalists.sort(key=lambda e: (math.inf if e["score"] == "WORST" else e["score"], e["orbit"]))
    return RunReport(
        config=config.to_json(),
        seed=config.seed,
        rng=RNG_NAME,
        status=status,
        history=history,
        hall_of_fame=finalists,
        evaluations=evaluate.requests,
        unique_evaluations=len(evaluate.cache),
        wall_time=time.perf_counter() - t0,
    )


def random_baseline(
    config: GAConfig, budget: int | None = None, cache: dict | None = None, seed: int | None = None
) -> list[tuple[int, FitnessScore]]:
    """Best-so-far over ``budget`` uniformly random orbits (default population * generations).

    Returns (evaluations, best) at every improvement and at the final evaluation.
    """
    _check(config)
    budget = config.population * config.generations if budget is None else budget
    rng = random.Random(f"{config.seed if seed is None else seed}:baseline")
    evaluate = Evaluator(make_scorer(config), 1, cache)
    series: list[tuple[int, FitnessScore]] = []
    best: FitnessScore | None = None
    for i in range(1, budget + 1):
        (s,) = evaluate([random_orbit(config, rng)])
        if best is None or s < best:
            best = s
            series.append((i, s))
        elif i == budget:
            series.append((i, best))
    return series


def best_at(series: Sequence[tuple[int, FitnessScore]], evaluations: int) -> FitnessScore | None:
    """Best-so-far of a baseline series after ``evaluations`` draws."""
    out = None
    for n, s in series:
        if n > evaluations:
            break
        out = s
    return out
