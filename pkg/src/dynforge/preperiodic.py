"""Orbit classification and the census of rational preperiodic points.

Everything rests on one fact: a preperiodic point has canonical height 0, so
its naive height is at most C/(d-1), where C is the certified height gap
constant.  An orbit that climbs above that bound is wandering, and the search
for preperiodic points can be confined below it.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from . import arith
from .dynamics import INFINITY, DynSystem, ProjPoint, compose_iterate, evaluate, proj
from .heights import canonical_gap, naive_height
from .interpolation import Orbit

WANDERING = "wandering"
PREPERIODIC = "preperiodic"

DEFAULT_ITERATION_CAP = 10_000


class IterationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OrbitClassification:
    status: str
    tail_m: int = 0
    period_n: int = 0
    witness: tuple = ()

    @property
    def is_preperiodic(self) -> bool:
        return self.status == PREPERIODIC

    @property
    def cycle(self) -> tuple:
        if not self.is_preperiodic:
            return ()
        return self.witness[self.tail_m : self.tail_m + self.period_n]


@dataclass(frozen=True)
class CensusParams:
    n_max: int = 12
    period_degree_cap: int = 64
    h_scan: int = 100
    size_cap: int = 10_000
    iteration_cap: int = DEFAULT_ITERATION_CAP


@dataclass
class CensusResult:
    points: set
    edges: list
    complete: bool
    certified: bool
    flags: list = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        pts = sorted(self.points, key=_point_key)
        return {
            "count": self.count,
            "points": [str(p) for p in pts],
            "edges": [[str(p), str(q)] for p, q in sorted(self.edges, key=lambda e: _point_key(e[0]))],
            "complete": self.complete,
            "certified": self.certified,
            "flags": list(self.flags),
        }


def _point_key(P: ProjPoint):
    return (P.b == 0, Fraction(P.a, P.b) if P.b else 0)


def classify_orbit(f: DynSystem, P: ProjPoint, iteration_cap: int = DEFAULT_ITERATION_CAP) -> OrbitClassification:
    """Preperiodic with minimal (m, n), or wandering.

    Wandering is declared once an iterate's height exceeds C/(d-1) + log 2.
    """
    bound = canonical_gap(f) + math.log(2)
    seen: dict[ProjPoint, int] = {}
    orbit = []
    Q = P
    for k in range(iteration_cap + 1):
        if Q in seen:
            m = seen[Q]
            return OrbitClassification(PREPERIODIC, m, k - m, tuple(orbit))
        if naive_height(Q) > bound:
            orbit.append(Q)
            return OrbitClassification(WANDERING, witness=tuple(orbit))
        seen[Q] = k
        orbit.append(Q)
        Q = evaluate(f, Q)
    raise IterationCapExceeded(f"no verdict after {iteration_cap} iterations")


def rational_preimages(f: DynSystem, Q: ProjPoint) -> set[ProjPoint]:
    a, b = Q
    d = f.degree
    # b F0 - a F1 as a form of degree d; its roots in P^1 are the preimages
    form = [b * u - a * v for u, v in zip(f.F0, f.F1)]
    out = set()
    if form[d] == 0:
        out.add(INFINITY)
    poly = arith.normalize(form)
    if poly:
        for r in arith.rational_roots(poly):
            out.add(ProjPoint(r.numerator, r.denominator))
    return out


def rational_periodic_points(f: DynSystem, n_max: int, degree_cap: int = 4096) -> set[tuple[ProjPoint, int]]:
    """(point, minimal period) for rational periodic points of period <= n_max.

    Periods n with d^n above ``degree_cap`` are skipped.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    d = f.degree
    candidates: set[ProjPoint] = set()
    for n in range(1, n_max + 1):
        if d**n > degree_cap:
            break
        H0, H1 = compose_iterate(f, n)
        phi = arith.sub(arith.normalize(H0), arith.mul((0, 1), arith.normalize(H1)))
        if phi:
            for r in arith.rational_roots(phi):
                candidates.add(ProjPoint(r.numerator, r.denominator))
        # infinity: period dividing n iff the top coefficient of H1 vanishes
        if H1[-1] == 0:
            candidates.add(INFINITY)
    out = set()
    for P in candidates:
        per = _minimal_period(f, P, n_max)
        if per:
            out.add((P, per))
    return out


def _minimal_period(f: DynSystem, P: ProjPoint, n_max: int) -> int:
    Q = P
    for n in range(1, n_max + 1):
        Q = evaluate(f, Q)
        if Q == P:
            return n
    return 0


def _points_up_to_height(H: int):
    yield INFINITY
    yield ProjPoint(0, 1)
    for b in range(1, H + 1):
        for a in range(1, H + 1):
            if math.gcd(a, b) == 1:
                yield ProjPoint(a, b)
                yield ProjPoint(-a, b)


def preperiodic_census(f: DynSystem, params: CensusParams | None = None) -> CensusResult:
    """Rational preperiodic points of f, as a certified lower bound.

    Seeds are the rational periodic points and the orbit of 0, plus whatever
    turns up in a scan of all points of height at most log(h_scan) (the scan is capped at the height
    bound C/(d-1), above which nothing is preperiodic).  Seeds are closed
    under rational preimages.  ``certified`` is set when the scan reached the
    height bound, in which case the census is provably the full set.
    ``complete`` is false if any cap fired.
    """
    params = params or CensusParams()
    flags: list[str] = []
    gap = canonical_gap(f)
    seeds: set[ProjPoint] = set()

    def add_orbit(cls: OrbitClassification) -> None:
        seeds.update(cls.witness)

    for P, _ in rational_periodic_points(f, params.n_max, params.period_degree_cap):
        seeds.add(P)
    c0 = classify_orbit(f, ProjPoint(0, 1), params.iteration_cap)
    if c0.is_preperiodic:
        add_orbit(c0)

    limit = math.exp(gap) if gap < 700 else math.inf
    scan_bound = min(params.h_scan, int(limit))
    certified = limit < params.h_scan + 1
    for P in _points_up_to_height(scan_bound):
        if P in seeds:
            continue
        c = classify_orbit(f, P, params.iteration_cap)
        if c.is_preperiodic:
            add_orbit(c)

    points = set(seeds)
    queue = deque(points)
    if len(points) > params.size_cap:
        flags.append("size_cap")
        queue.clear()
    while queue:
        Q = queue.popleft()
        for R in rational_preimages(f, Q):
            if R not in points:
                if len(points) >= params.size_cap:
                    flags.append("size_cap")
                    queue.clear()
                    break
                points.add(R)
                queue.append(R)

    for P in list(points):
        if not classify_orbit(f, P, params.iteration_cap).is_preperiodic:
            points.discard(P)
            flags.append(f"not_preperiodic:{P}")
    edges = [(P, evaluate(f, P)) for P in points]
    return CensusResult(points, edges, complete=not flags, certified=certified and not flags, flags=flags)


def detect_dynamical_compression(orbit: Orbit) -> bool:
    """True when the orbit entries are exactly a run of consecutive integers."""
    vals = set(orbit.entries)
    return len(vals) == len(orbit.entries) and max(vals) - min(vals) == len(vals) - 1
