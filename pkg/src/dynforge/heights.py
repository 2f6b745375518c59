"""Naive and canonical heights on P^1(Q), natural log scale."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dynamics import DynSystem, ProjPoint, form_value, proj
from .linalg import solve_rational

MAX_ITERATIONS = 64


class IterationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class HeightValue:
    value: float
    error_bound: float
    iterations: int = 0

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class HeightGapConstant:
    """|h(f(P)) - d h(P)| <= C for every P in P^1(Q).

    ``upper`` bounds h(f(P)) - d h(P) and ``lower`` bounds d h(P) - h(f(P)).
    """

    C: float
    upper: float
    lower: float


def log_abs(n: int) -> float:
    return math.log(abs(n)) if n else float("-inf")


def naive_height(P: ProjPoint) -> float:
    m = max(abs(P[0]), abs(P[1]))
    return math.log(m) if m > 1 else 0.0


def rational_height(x) -> float:
    x = Fraction(x)
    return naive_height(ProjPoint(x.numerator, x.denominator))


def _cofactor_system(f: DynSystem) -> list[list[int]]:
    # columns: coefficients of G_a (deg d-1) then G_b (deg d-1);
    # rows: coefficient of x^k in G_a F0 + G_b F1, k = 0..2d-1
    d = f.degree
    n = 2 * d
    rows = [[0] * n for _ in range(n)]
    for j in range(d):
        for i, c in enumerate(f.F0):
            rows[i + j][j] += c
        for i, c in enumerate(f.F1):
            rows[i + j][d + j] += c
    return rows


@lru_cache(maxsize=4096)
def height_gap_constant(f: DynSystem) -> HeightGapConstant:
    """A certified C with |h(f(P)) - d h(P)| <= C on all of P^1(Q).

    The upper side is the triangle inequality.  The lower side comes from the
    elimination identities G_a F0 + G_b F1 = D x^(2d-1) and
    G_c F0 + G_e F1 = D y^(2d-1) with integer forms G of degree d-1 and a
    common integer D.  For coprime (a, b) the gcd of F0(a, b), F1(a, b) divides
    D, and evaluating the identities gives
    max|F_i(a, b)| >= D max(|a|, |b|)^d / (2d |G|), so the gcd-reduced image
    has height at least d h(P) - log(2d |G|).
    """
    d = f.degree
    hF = math.log(max(abs(c) for c in f.F0 + f.F1))
    upper = hF + math.log(d + 1)
    n = 2 * d
    rhs = [[0, 0] for _ in range(n)]
    rhs[n - 1][0] = 1  # x^(2d-1)
    rhs[0][1] = 1  # y^(2d-1)
    sols = solve_rational(_cofactor_system(f), rhs)
    den = 1
    for col in sols:
        for v in col:
            den = math.lcm(den, v.denominator)
    g_max = max(abs(v * den) for col in sols for v in col)
    lower = math.log(2 * d) + math.log(g_max)
    # C is used as a strict bound; pad by a relative float margin
    C = max(upper, lower, 0.0) * (1 + 1e-12) + 1e-12
    return HeightGapConstant(C, upper, lower)


def canonical_gap(f: DynSystem) -> float:
    """Bound on |ĥ_f(P) - h(P)|."""
    return height_gap_constant(f).C / (f.degree - 1)


def canonical_height(
    f: DynSystem,
    P: ProjPoint,
    eps: float | None = None,
    rel_eps: float | None = None,
    max_iterations: int = MAX_ITERATIONS,
) -> HeightValue:
    """ĥ_f(P) to within ``eps`` and/or to relative accuracy ``rel_eps``.

    Uses h(f^N P)/d^N, whose distance to ĥ is at most C d^-N/(d-1) by
    summing the telescoping series.  N grows until the bound drops below
    ``eps``, or below ``rel_eps`` times the certified lower estimate when a
    relative tolerance is given.  With neither tolerance, eps = 1e-6.
    Repeats in the orbit short-circuit to 0, and the iteration continues
    past the requested precision until the orbit closes up or climbs above
    the height bound for preperiodic points.
    """
    if eps is None and rel_eps is None:
        eps = 1e-6
    if (eps is not None and eps <= 0) or (rel_eps is not None and rel_eps <= 0):
        raise ValueError("tolerances must be positive")
    eps = -1.0 if eps is None else eps
    d = f.degree
    C = height_gap_constant(f).C
    tail = C / (d - 1)
    threshold = tail + math.log(2)
    seen = {P}
    Q = P
    n = 0
    scale = 1
    while True:
        err = tail / scale
        hq = naive_height(Q)
        value = hq / scale
        precise = err <= eps or (rel_eps and value - err > 0 and err <= rel_eps * (value - err))
        # while the orbit stays low it may still close up, so settle that first
        if precise and (hq > threshold or n >= max_iterations):
            return HeightValue(value, err, n)
        if n >= max_iterations:
            raise IterationCapExceeded(f"canonical height needs more than {max_iterations} iterations")
        Q = proj(form_value(f.F0, Q[0], Q[1]), form_value(f.F1, Q[0], Q[1]))
        n += 1
        scale *= d
        # preperiodic orbits never leave the points of height <= tail
        if hq <= threshold:
            if Q in seen:
                return HeightValue(0.0, 0.0, n)
            seen.add(Q)
