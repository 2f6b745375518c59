"""Symmetric functions of fixed-point multipliers and the moduli height built from them."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import arith
from .dynamics import DynSystem, Mobius, conjugate, evaluate, point
from .heights import rational_height


@dataclass(frozen=True)
class SigmaInvariants:
    sigma: tuple  # (sigma_1, ..., sigma_{d+1}) as Fractions

    def __iter__(self):
        return iter(self.sigma)

    def __len__(self) -> int:
        return len(self.sigma)

    def __getitem__(self, k):
        return self.sigma[k]

    def as_strings(self) -> list[str]:
        return [str(s) for s in self.sigma]


def fixed_point_polynomial(f: DynSystem) -> tuple:
    """Primitive part of F0(z, 1) - z F1(z, 1).

    Its degree falls short of d+1 by the multiplicity of infinity as a fixed
    point.
    """
    phi = arith.sub(arith.normalize(f.F0), arith.mul((0, 1), arith.normalize(f.F1)))
    return arith.primitive_part(phi)


def _base_point(f: DynSystem) -> int:
    t = 0
    while evaluate(f, point(t)) == point(t):
        t += 1
    return t


def multiplier_polynomial(f: DynSystem) -> tuple:
    """Monic polynomial in w whose roots are the d+1 fixed-point multipliers.

    Conjugating by z -> t + 1/z moves infinity to a non-fixed point t, so every
    fixed point of the conjugate g = G0/G1 is a root of the degree-(d+1)
    polynomial Phi_g.  At such a root N(z, w) = w G1^2 - (G0' G1 - G0 G1')
    equals G1^2 (w - g'(z)), hence Res_z(Phi_g, N) is a constant times the
    product of (w - multiplier), multiplicities included.  The resultant is
    evaluated at d+2 integer values of w and interpolated.
    """
    d = f.degree
    t = _base_point(f)
    g = conjugate(f, Mobius(t, 1, 1, 0))
    G0, G1 = g.dehomogenize()
    phi = arith.sub(G0, arith.mul((0, 1), G1))
    if len(phi) != d + 2:
        raise AssertionError("infinity is still fixed after conjugation")
    G1sq = arith.mul(G1, G1)
    wronsk = arith.sub(arith.mul(arith.derivative(G0), G1), arith.mul(G0, arith.derivative(G1)))
    ws = list(range(d + 2))
    vals = []
    for w in ws:
        N = arith.sub(arith.scale(G1sq, w), wronsk)
        vals.append(arith.resultant(phi, N, deg_q=2 * d) if N else 0)
    P = arith.interpolate(ws, vals)
    lead = P[-1]
    return tuple(c / lead for c in P)


@lru_cache(maxsize=4096)
def sigma_invariants(f: DynSystem) -> SigmaInvariants:
    P = multiplier_polynomial(f)
    n = len(P) - 1
    return SigmaInvariants(tuple((-1) ** k * P[n - k] for k in range(1, n + 1)))


def moduli_height(f: DynSystem) -> float:
    return max(rational_height(s) for s in sigma_invariants(f))


def conjugacy_fingerprint(f: DynSystem) -> str:
    """SHA-256 of the canonical JSON of the sigma invariants.

    Conjugate maps always collide.  Distinct fingerprints mean non-conjugate,
    but equal fingerprints only say "same multiplier spectrum".
    """
    payload = json.dumps({"degree": f.degree, "sigma": sigma_invariants(f).as_strings()}, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()
