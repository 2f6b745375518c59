"""Integer orbits of 0 and the maps they determine by interpolation.

A polynomial of degree d is pinned down by d+1 images, so its orbit has
length d+2; a rational map of degree d has 2d+2 coefficients up to scaling and
needs 2d+1 images, an orbit of length 2d+2.  Each image f(z_i) = z_{i+1} is a
linear condition F0(z_i) - z_{i+1} F1(z_i) = 0 on the coefficients, and the map
is the (unique up to scale) kernel vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dynamics import DegenerateMap, DynSystem
from .linalg import integer_kernel

FLAVORS = ("polynomial", "rational")


class OrbitError(ValueError):
    """Base class for orbits that do not define a valid map."""

    reason = "invalid"


class WrongLength(OrbitError):
    reason = "wrong_length"


class NonzeroStart(OrbitError):
    reason = "leading_entry_nonzero"


class DuplicateSourcePoint(OrbitError):
    reason = "duplicate_source_point"


class DegenerateDegree(OrbitError):
    reason = "degree_drop"


class InconsistentSystem(OrbitError):
    reason = "inconsistent_system"


class KernelDimensionNotOne(OrbitError):
    reason = "kernel_dimension"


class DegenerateOrbitMap(OrbitError):
    reason = "degenerate_map"


def orbit_length(degree: int, flavor: str) -> int:
    return degree + 2 if flavor == "polynomial" else 2 * degree + 2


@dataclass(frozen=True)
class Orbit:
    entries: tuple
    degree: int
    flavor: str

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def sources(self) -> tuple:
        return self.entries[:-1]

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.entries) + "]"


def validate_orbit(entries: Sequence[int], degree: int, flavor: str) -> Orbit:
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    if degree < 2:
        raise ValueError("degree must be at least 2")
    entries = tuple(int(e) for e in entries)
    need = orbit_length(degree, flavor)
    if len(entries) != need:
        raise WrongLength(f"orbit has length {len(entries)}, need {need}")
    if entries[0] != 0:
        raise NonzeroStart("orbit must start with 0")
    if flavor == "polynomial" and len(set(entries[:-1])) != len(entries) - 1:
        raise DuplicateSourcePoint(f"source points {entries[:-1]} are not distinct")
    return Orbit(entries, degree, flavor)


def orbit_to_map_polynomial(orbit: Orbit) -> DynSystem:
    d = orbit.degree
    z = orbit.entries
    if len(set(z[:-1])) != len(z) - 1:
        raise DuplicateSourcePoint(str(z))
    # unknowns c_0..c_d and s, with sum c_j z_i^j - s z_{i+1} = 0
    rows = [[zi**j for j in range(d + 1)] + [-z[i + 1]] for i, zi in enumerate(z[:-1])]
    ker = integer_kernel(rows, d + 2)
    if len(ker) != 1 or ker[0][-1] == 0:
        raise InconsistentSystem(str(z))
    *c, s = ker[0]
    if c[d] == 0:
        raise DegenerateDegree(f"interpolant of {list(z)} has degree < {d}")
    return DynSystem.from_forms(c, [s] + [0] * d, d, check=False)


def orbit_to_map_rational(orbit: Orbit) -> DynSystem:
    d = orbit.degree
    z = orbit.entries
    rows = []
    for i in range(2 * d + 1):
        powers = [z[i] ** j for j in range(d + 1)]
        rows.append(powers + [-z[i + 1] * p for p in powers])
    ker = integer_kernel(rows, 2 * d + 2)
    if len(ker) != 1:
        raise KernelDimensionNotOne(f"kernel dimension {len(ker)} for {list(z)}")
    v = ker[0]
    try:
        f = DynSystem.from_forms(v[: d + 1], v[d + 1 :], d)
    except DegenerateMap as exc:
        raise DegenerateOrbitMap(f"{list(z)}: {exc}") from None
    return f


def orbit_to_map(orbit: Orbit) -> DynSystem:
    if orbit.flavor == "polynomial":
        return orbit_to_map_polynomial(orbit)
    return orbit_to_map_rational(orbit)


def map_from_entries(entries: Sequence[int], degree: int, flavor: str) -> DynSystem:
    return orbit_to_map(validate_orbit(entries, degree, flavor))
