"""Exact integer/rational arithmetic and dense univariate polynomials.

A polynomial is a tuple of coefficients in ascending degree, so
``(1, 0, -3)`` is ``1 - 3z^2``.  Trailing zeros are stripped by
:func:`normalize`; the zero polynomial is the empty tuple.  Coefficients are
Python ints (or Fractions where noted), so nothing ever overflows.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Sequence

Poly = tuple


class ZeroDenominator(ZeroDivisionError):
    pass


class ZeroPolynomial(ValueError):
    pass


def rat_normalize(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDenominator(f"{num}/0")
    return Fraction(num, den)


def normalize(p: Sequence) -> Poly:
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return tuple(p[:n])


def degree(p: Poly) -> int:
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(normalize(p)) - 1


def lc(p: Poly):
    p = normalize(p)
    return p[-1] if p else 0


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return normalize(out)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, tuple(-c for c in q))


def scale(p: Poly, c) -> Poly:
    return normalize([c * x for x in p])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def power(p: Poly, n: int) -> Poly:
    result: Poly = (1,)
    while n:
        if n & 1:
            result = mul(result, p)
        n >>= 1
        if n:
            p = mul(p, p)
    return result


def derivative(p: Poly) -> Poly:
    return normalize([i * c for i, c in enumerate(p)][1:])


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose(p: Poly, q: Poly) -> Poly:
    """p(q(z))."""
    acc: Poly = ()
    for c in reversed(p):
        acc = add(mul(acc, q), (c,))
    return acc


def content(p: Poly) -> int:
    return reduce(math.gcd, p, 0)


def primitive_part(p: Poly) -> Poly:
    """``p`` divided by its content, with positive leading coefficient."""
    p = normalize(p)
    if not p:
        return p
    g = content(p)
    if p[-1] < 0:
        g = -g
    return tuple(c // g for c in p)


def clear_denominators(p: Sequence[Fraction]) -> Poly:
    """Primitive integer polynomial proportional to a rational one."""
    den = reduce(math.lcm, (Fraction(c).denominator for c in p), 1)
    return primitive_part([int(Fraction(c) * den) for c in p])


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Division with remainder over the rationals."""
    q = normalize(q)
    if not q:
        raise ZeroPolynomial("division by zero polynomial")
    r = [Fraction(c) for c in normalize(p)]
    dq = len(q) - 1
    quot = [Fraction(0)] * max(len(r) - dq, 0)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq] / q[-1]
        quot[k] = c
        if c:
            for j, b in enumerate(q):
                r[k + j] -= c * b
    return normalize(quot), normalize(r[:dq])


def divexact(p: Poly, q: Poly) -> Poly:
    """Exact quotient of integer polynomials; raises if q does not divide p."""
    quot, rem = divmod_poly(p, q)
    if rem or any(c.denominator != 1 for c in quot):
        raise ArithmeticError("inexact polynomial division")
    return tuple(int(c) for c in quot)


def prem(p: Poly, q: Poly) -> Poly:
    """Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p mod q, over the integers."""
    r = list(normalize(p))
    q = normalize(q)
    dq = len(q) - 1
    if len(r) - 1 < dq:
        return tuple(r)
    b = q[-1]
    e = len(r) - 1 - dq + 1
    while r and len(r) - 1 >= dq:
        c = r[-1]
        shift = len(r) - 1 - dq
        r = [b * x for x in r]
        for j, y in enumerate(q):
            r[shift + j] -= c * y
        r = list(normalize(r))
        e -= 1
    return normalize([x * b**e for x in r])


def gcd_poly(p: Poly, q: Poly) -> Poly:
    """Primitive gcd of two integer polynomials (primitive PRS)."""
    p, q = primitive_part(p), primitive_part(q)
    if not p:
        return q
    if not q:
        return p
    g = math.gcd(content(p), content(q))
    if len(p) < len(q):
        p, q = q, p
    while q:
        p, q = q, primitive_part(prem(p, q))
    return primitive_part(scale(p, g))


def squarefree_part(p: Poly) -> Poly:
    p = primitive_part(p)
    if len(p) <= 2:
        return p
    g = gcd_poly(p, derivative(p))
    if len(g) == 1:
        return p
    return primitive_part(divexact(p, g))


# --------------------------------------------------------------------------
# resultants


def resultant(p: Poly, q: Poly, deg_p: int | None = None, deg_q: int | None = None) -> int:
    """Res(p, q), the Sylvester determinant with ``p``'s rows first.

    ``deg_p``/``deg_q`` give formal degrees (for dehomogenized forms whose top
    coefficient vanishes); they default to the actual degrees.  Computed by the
    subresultant PRS.
    """
    p, q = normalize(p), normalize(q)
    if not p or not q:
        raise ZeroPolynomial("resultant of the zero polynomial")
    m, n = len(p) - 1, len(q) - 1
    fm = m if deg_p is None else deg_p
    fn = n if deg_q is None else deg_q
    if fm < m or fn < n:
        raise ValueError("formal degree below actual degree")
    if fm > m and fn > n:
        return 0
    if fn > n:
        # Res = lc(p)^(fn - n) * Res(p, q) with p of exact degree
        return p[-1] ** (fn - n) * _subresultant(p, q)
    if fm > m:
        return (-1) ** (fm * fn) * q[-1] ** (fm - m) * _subresultant(q, p)
    return _subresultant(p, q)


def _subresultant(a: Poly, b: Poly) -> int:
    da, db = len(a) - 1, len(b) - 1
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -1
    if db == 0:
        return s * b[0] ** da
    ca, cb = content(a), content(b)
    a = tuple(c // ca for c in a)
    b = tuple(c // cb for c in b)
    t = ca**db * cb**da
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = prem(a, b)
        a = b
        div = g * h**delta
        b = tuple(c // div for c in r)
        g = a[-1]
        if delta:
            h = g**delta // h ** (delta - 1)
        if not b:
            return 0
        if len(b) == 1:
            break
    da = len(a) - 1
    h = b[0] ** da // h ** (da - 1) if da else 1
    return s * t * h


def sylvester_matrix(p: Poly, q: Poly, deg_p: int | None = None, deg_q: int | None = None) -> list[list[int]]:
    m = len(normalize(p)) - 1 if deg_p is None else deg_p
    n = len(normalize(q)) - 1 if deg_q is None else deg_q
    size = m + n
    pc = list(p) + [0] * (m + 1 - len(p))
    qc = list(q) + [0] * (n + 1 - len(q))
    rows = []
    for i in range(n):
        row = [0] * size
        for j in range(m + 1):
            row[i + j] = pc[m - j]
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j in range(n + 1):
            row[i + j] = qc[n - j]
        rows.append(row)
    return rows


def det_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# --------------------------------------------------------------------------
# rational roots


def _primes(start: int = 3):
    n = start
    while True:
        if n > 1 and all(n % f for f in range(2, math.isqrt(n) + 1)):
            yield n
        n += 1


def _mod_poly(p: Poly, m: int) -> list[int]:
    out = [c % m for c in p]
    while out and not out[-1]:
        out.pop()
    return out


def _gcd_mod(a: list[int], b: list[int], q: int) -> list[int]:
    while b:
        a = list(a)
        inv = pow(b[-1], -1, q)
        while len(a) >= len(b):
            c = a[-1] * inv % q
            shift = len(a) - len(b)
            for j, y in enumerate(b):
                a[shift + j] = (a[shift + j] - c * y) % q
            while a and not a[-1]:
                a.pop()
        a, b = b, a
    return a


def _eval_mod(p: Sequence[int], x: int, m: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = (acc * x + c) % m
    return acc


def _reconstruct(r: int, m: int, nbound: int, dbound: int) -> Fraction | None:
    # extended Euclid on (m, r), stopping once the remainder drops to nbound
    r0, r1 = m, r % m
    t0, t1 = 0, 1
    while r1 > nbound:
        qt = r0 // r1
        r0, r1 = r1, r0 - qt * r1
        t0, t1 = t1, t0 - qt * t1
    if t1 == 0 or abs(t1) > dbound or math.gcd(r1, abs(t1)) != 1:
        return None
    return Fraction(r1, t1)


def rational_roots(p: Poly) -> set[Fraction]:
    """All rational roots of a nonzero integer polynomial, each once.

    Squarefree part, then a prime of good reduction, roots modulo that prime,
    Hensel lifting past the size bound on numerator and denominator, and
    rational reconstruction.  Every candidate is checked by exact evaluation,
    and the method is complete: every rational root reduces to a simple root
    modulo a good prime.
    """
    p = normalize(p)
    if not p:
        raise ZeroPolynomial("rational roots of the zero polynomial")
    roots: set[Fraction] = set()
    k = 0
    while p[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        p = p[k:]
    g = squarefree_part(p)
    if len(g) <= 1:
        return roots
    if len(g) == 2:
        roots.add(Fraction(-g[0], g[1]))
        return roots
    nbound, dbound = abs(g[0]), abs(g[-1])
    dg = derivative(g)
    for q in _primes(3):
        if g[-1] % q == 0:
            continue
        gq, dq = _mod_poly(g, q), _mod_poly(dg, q)
        if len(_gcd_mod(gq, dq, q)) > 1:
            continue
        break
    modulus_needed = 2 * nbound * dbound + 1
    for r in range(q):
        if _eval_mod(gq, r, q):
            continue
        m = q
        while m <= modulus_needed:
            m *= m
            r = (r - evaluate(g, r) * pow(evaluate(dg, r), -1, m)) % m
        cand = _reconstruct(r, m, nbound, dbound)
        if cand is not None and is_root(g, cand):
            roots.add(cand)
    return roots


def is_root(p: Poly, r: Fraction) -> bool:
    """Exact test p(r) = 0, evaluated homogeneously to stay in the integers."""
    return _homogeneous_value(p, r.numerator, r.denominator) == 0


def _homogeneous_value(p: Poly, a: int, b: int) -> int:
    n = len(p) - 1
    acc = 0
    bpow = 1
    powers = [1]
    for _ in range(n):
        bpow *= b
        powers.append(bpow)
    for i in range(n, -1, -1):
        acc = acc * a + p[i] * powers[n - i]
    return acc


def root_multiplicity(p: Poly, r: Fraction) -> int:
    lin = (-r.numerator, r.denominator)
    k = 0
    p = normalize(p)
    while p:
        quot, rem = divmod_poly(p, lin)
        if rem:
            break
        k += 1
        p = quot
    return k


def interpolate(xs: Sequence, ys: Sequence) -> Poly:
    """Ascending Fraction coefficients of the interpolating polynomial (Newton form)."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out: Poly = (coef[-1],)
    for i in range(n - 2, -1, -1):
        out = add(mul(out, (-xs[i], 1)), (coef[i],))
    return out
