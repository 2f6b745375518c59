import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynforge.dynamics import DegenerateMap, DynSystem, ProjPoint, evaluate, point, proj
from dynforge.heights import (
    canonical_gap,
    canonical_height,
    height_gap_constant,
    naive_height,
    rational_height,
)
from dynforge.interpolation import map_from_entries

SQUARE = DynSystem.from_forms([0, 0, 1], [1, 0, 0])
forms = st.lists(st.integers(-12, 12), min_size=3, max_size=4)


def test_naive_height():
    assert naive_height(point("-3/4")) == math.log(4)
    assert naive_height(point(0)) == 0.0
    assert rational_height("100/7") == math.log(100)


def test_squaring_map_heights():
    h = canonical_height(SQUARE, point(2), eps=1e-5)
    assert h.value == pytest.approx(math.log(2), abs=h.error_bound)
    assert canonical_height(SQUARE, point(-1)).value == 0.0
    assert canonical_height(SQUARE, point("inf")).value == 0.0


def test_preperiodic_point_has_zero_height():
    f = map_from_entries([0, 1, -1, 2], 2, "polynomial")
    assert canonical_height(f, ProjPoint(0, 1)).value == 0.0


def test_degree_two_fixture():
    f = map_from_entries([0, -2, 1, -3], 2, "polynomial")
    h = canonical_height(f, ProjPoint(0, 1), rel_eps=1e-4)
    assert h.value == pytest.approx(0.0343318, abs=h.error_bound + 1e-7)
    assert h.error_bound <= 1e-4 * h.value


def test_tolerance_arguments():
    with pytest.raises(ValueError):
        canonical_height(SQUARE, point(2), eps=0)
    with pytest.raises(ValueError):
        canonical_height(SQUARE, point(2), rel_eps=-1.0)


def _maybe_map(F0, F1):
    d = max(len(F0), len(F1)) - 1
    try:
        return DynSystem.from_forms(F0, F1, d)
    except DegenerateMap:
        return None


@given(forms, forms, st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_gap_bound_holds(F0, F1, a, b):
    F1 = F1[: len(F0)] + [0] * (len(F0) - len(F1))
    f = _maybe_map(F0, F1)
    if f is None:
        return
    P = proj(a, b)
    C = height_gap_constant(f).C
    assert abs(naive_height(evaluate(f, P)) - f.degree * naive_height(P)) <= C


def test_gap_bound_on_many_points():
    rng = random.Random(7)
    maps = [map_from_entries(o, d, fl) for o, d, fl in [
        ([0, -2, 1, -3], 2, "polynomial"),
        ([0, -1, -16, 4, 8, 2], 2, "rational"),
        ([0, 3, 4, 5, 1, -1], 4, "polynomial"),
        ([0, 1, -6, -1, -4, -3, 6, 3], 3, "rational"),
    ]]
    for f in maps:
        C = height_gap_constant(f).C
        worst = 0.0
        for _ in range(250):
            P = proj(rng.randint(-10**4, 10**4), rng.randint(1, 10**4))
            worst = max(worst, abs(naive_height(evaluate(f, P)) - f.degree * naive_height(P)))
        assert worst <= C


@settings(max_examples=40)
@given(st.integers(-50, 50), st.integers(1, 50))
def test_functional_equation(a, b):
    f = map_from_entries([0, -1, -16, 4, 8, 2], 2, "rational")
    P = proj(a, b)
    hP = canonical_height(f, P, eps=1e-2)
    hQ = canonical_height(f, evaluate(f, P), eps=1e-2)
    assert abs(hQ.value - 2 * hP.value) <= hQ.error_bound + 2 * hP.error_bound + 1e-12
    assert abs(hP.value - naive_height(P)) <= canonical_gap(f) + 1e-9


def test_long_tail_is_exactly_zero():
    # 0 has preperiod (8, 1); the default precision is met before the orbit closes
    f = map_from_entries([0, 6, 1, 7, -1, 4, 8, -2, 5], 7, "polynomial")
    assert canonical_height(f, ProjPoint(0, 1)).value == 0.0
