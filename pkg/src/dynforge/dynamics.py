"""Points of P^1(Q) and morphisms of P^1 given by pairs of integer binary forms.

A binary form of degree ``d`` is stored as its coefficient tuple in ascending
powers of ``x``: ``(c_0, ..., c_d)`` is ``sum c_j x^j y^(d-j)``, so it doubles
as the dehomogenized polynomial in ``z = x/y``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import NamedTuple, Sequence

from . import arith


class DegenerateMap(ValueError):
    """The pair of forms shares a root, or the degree dropped."""


class PoleAt(ZeroDivisionError):
    pass


class ProjPoint(NamedTuple):
    """(a : b) with gcd(a, b) = 1 and b > 0, or (1 : 0) for infinity.

    Build through :func:`proj` or :func:`point`; the raw constructor does not
    normalize.
    """

    a: int
    b: int

    @property
    def is_infinity(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b == 0:
            raise PoleAt("point at infinity")
        return Fraction(self.a, self.b)

    def __str__(self) -> str:
        if self.b == 0:
            return "inf"
        if self.b == 1:
            return str(self.a)
        return f"{self.a}/{self.b}"


INFINITY = ProjPoint(1, 0)


def proj(a: int, b: int) -> ProjPoint:
    g = math.gcd(a, b)
    if g == 0:
        raise ValueError("(0 : 0) is not a point")
    a //= g
    b //= g
    if b < 0 or (b == 0 and a < 0):
        a, b = -a, -b
    return ProjPoint(a, b)


def point(x) -> ProjPoint:
    """Point from an int, Fraction, ``"inf"``, or a string like ``"-3/4"``."""
    if isinstance(x, ProjPoint):
        return x
    if isinstance(x, str):
        if x.strip().lower() in ("inf", "infinity", "oo"):
            return INFINITY
        x = Fraction(x)
    x = Fraction(x)
    return ProjPoint(x.numerator, x.denominator)


def form_value(coeffs: Sequence[int], a: int, b: int) -> int:
    """sum c_j a^j b^(d-j) by Horner in a with precomputed powers of b."""
    d = len(coeffs) - 1
    acc = coeffs[d]
    bp = 1
    for j in range(d - 1, -1, -1):
        bp *= b
        acc = acc * a + coeffs[j] * bp
    return acc


def form_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def form_substitute(coeffs: Sequence[int], h0: Sequence[int], h1: Sequence[int]) -> list[int]:
    """F(H0, H1) for a form F of degree d and forms H0, H1 of equal degree e."""
    d = len(coeffs) - 1
    e = len(h0) - 1
    p0 = [[1]]
    p1 = [[1]]
    for _ in range(d):
        p0.append(form_mul(p0[-1], h0))
        p1.append(form_mul(p1[-1], h1))
    out = [0] * (d * e + 1)
    for j, c in enumerate(coeffs):
        if c:
            term = form_mul(p0[j], p1[d - j])
            for k, v in enumerate(term):
                out[k] += c * v
    return out


@dataclass(frozen=True)
class DynSystem:
    """A degree-d endomorphism (F0 : F1) of P^1 over Q in canonical form.

    Canonical form: the 2d+2 coefficients have gcd 1 and the top nonzero
    coefficient of F1 (highest power of x) is positive.  Construct with
    :meth:`from_forms`, which normalizes and checks nondegeneracy.
    """

    degree: int
    F0: tuple
    F1: tuple

    @classmethod
    def from_forms(cls, F0: Sequence[int], F1: Sequence[int], degree: int | None = None, check: bool = True) -> "DynSystem":
        if degree is None:
            degree = max(len(F0), len(F1)) - 1
        F0 = list(F0) + [0] * (degree + 1 - len(F0))
        F1 = list(F1) + [0] * (degree + 1 - len(F1))
        if len(F0) != degree + 1 or len(F1) != degree + 1:
            raise ValueError("form longer than stated degree")
        g = reduce(math.gcd, F0 + F1, 0)
        if g == 0:
            raise DegenerateMap("zero map")
        top = next((c for c in reversed(F1) if c), None)
        if top is not None and top < 0:
            g = -g
        f = cls(degree, tuple(c // g for c in F0), tuple(c // g for c in F1))
        if check:
            if degree < 1:
                raise DegenerateMap("degree must be at least 1")
            if f.homogeneous_resultant() == 0:
                raise DegenerateMap("forms share a common root")
        return f

    @classmethod
    def from_polynomial(cls, coeffs: Sequence) -> "DynSystem":
        """Polynomial map from ascending (possibly rational) coefficients."""
        coeffs = [Fraction(c) for c in coeffs]
        den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
        d = len(coeffs) - 1
        return cls.from_forms([int(c * den) for c in coeffs], [den] + [0] * d, d)

    @property
    def flavor(self) -> str:
        return "polynomial" if not any(self.F1[1:]) else "rational"

    def homogeneous_resultant(self) -> int:
        p, q = arith.normalize(self.F0), arith.normalize(self.F1)
        if not p or not q:
            return 0
        return arith.resultant(p, q, self.degree, self.degree)

    def __call__(self, P: ProjPoint) -> ProjPoint:
        return evaluate(self, P)

    def dehomogenize(self) -> tuple[tuple, tuple]:
        return arith.normalize(self.F0), arith.normalize(self.F1)

    def polynomial_coefficients(self) -> tuple[Fraction, ...]:
        """Ascending rational coefficients of f(z) for polynomial flavor."""
        if self.flavor != "polynomial":
            raise ValueError("not a polynomial map")
        c = self.F1[0]
        return tuple(Fraction(x, c) for x in self.F0)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "F0": [str(c) for c in self.F0],
            "F1": [str(c) for c in self.F1],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DynSystem":
        return cls.from_forms([int(c) for c in data["F0"]], [int(c) for c in data["F1"]], int(data["degree"]))

    def __str__(self) -> str:
        if self.flavor == "polynomial":
            return format_poly(self.polynomial_coefficients())
        num, den = self.dehomogenize()
        return f"({format_poly(num)})/({format_poly(den)})"


def format_poly(coeffs: Sequence, var: str = "z") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def evaluate(f: DynSystem, P: ProjPoint) -> ProjPoint:
    a, b = P
    return proj(form_value(f.F0, a, b), form_value(f.F1, a, b))


def iterate(f: DynSystem, P: ProjPoint, n: int) -> list[ProjPoint]:
    out = [P]
    for _ in range(n):
        P = evaluate(f, P)
        out.append(P)
    return out


def derivative_value(f: DynSystem, z) -> Fraction:
    z = Fraction(z)
    num, den = f.dehomogenize()
    d_val = arith.evaluate(den, z) if den else Fraction(0)
    if d_val == 0:
        raise PoleAt(z)
    n_val = arith.evaluate(num, z) if num else Fraction(0)
    dn = arith.evaluate(arith.derivative(num), z) if len(num) > 1 else 0
    dd = arith.evaluate(arith.derivative(den), z) if len(den) > 1 else 0
    return Fraction(dn * d_val - n_val * dd) / (d_val * d_val)


class Mobius(NamedTuple):
    """z -> (a z + b) / (c z + d), acting on (x : y) by the matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: "Mobius") -> "Mobius":
        a, b, c, d = self
        e, f, g, h = other
        return Mobius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def apply(self, P: ProjPoint) -> ProjPoint:
        x, y = P
        return proj(self.a * x + self.b * y, self.c * x + self.d * y)


def conjugate(f: DynSystem, alpha: Mobius) -> DynSystem:
    """alpha^-1 o f o alpha, renormalized."""
    if alpha.det == 0:
        raise ValueError("singular Mobius transformation")
    a, b, c, d = alpha
    lin0, lin1 = (b, a), (d, c)
    G0 = form_substitute(f.F0, lin0, lin1)
    G1 = form_substitute(f.F1, lin0, lin1)
    inv = alpha.adjugate()
    H0 = [inv.a * u + inv.b * v for u, v in zip(G0, G1)]
    H1 = [inv.c * u + inv.d * v for u, v in zip(G0, G1)]
    return DynSystem.from_forms(H0, H1, f.degree, check=False)


def compose_iterate(f: DynSystem, n: int) -> tuple[list[int], list[int]]:
    """Forms of f^n (degree d^n), content removed."""
    H0, H1 = [0, 1], [1, 0]
    for _ in range(n):
        H0, H1 = form_substitute(f.F0, H0, H1), form_substitute(f.F1, H0, H1)
        g = reduce(math.gcd, H0 + H1, 0)
        H0 = [v // g for v in H0]
        H1 = [v // g for v in H1]
    return H0, H1


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*(?:([a-z])(?:\s*\^\s*(\d+))?)?")


def parse_poly(text: str) -> tuple:
    """Ascending Fraction coefficients of a one-variable polynomial like ``1/6z^2 - 7/6z - 2``.

    Any single lowercase letter serves as the variable.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        k = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * c
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
    deg = max(coeffs)
    return tuple(coeffs.get(k, Fraction(0)) for k in range(deg + 1))


def parse_map(text: str, degree: int | None = None) -> DynSystem:
    """Map from ``p`` or ``(p)/(q)`` in one variable, e.g. ``z^2`` or ``(z^2+1)/(2z)``."""
    s = text.strip()
    depth = 0
    split = None
    for i, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "/" and depth == 0 and s[:i].endswith(")"):
            split = i
            break
    if split is None:
        num, den = parse_poly(s.strip("()")), (Fraction(1),)
    else:
        num, den = parse_poly(s[:split].strip().strip("()")), parse_poly(s[split + 1 :].strip().strip("()"))
    if degree is None:
        degree = max(len(num), len(den)) - 1
    scale = reduce(math.lcm, (c.denominator for c in num + den), 1)
    F0 = [int(c * scale) for c in num]
    F1 = [int(c * scale) for c in den]
    return DynSystem.from_forms(F0, F1, degree)
