"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored lowest degree first with trailing zeros trimmed, so
the zero polynomial is the empty tuple and its degree is ``NEG_INF``.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from numbers import Integral
from typing import Iterable, Sequence

from .errors import DegreeBoundError, InexactDivisionError

log = logging.getLogger(__name__)

NEG_INF = float("-inf")


class Polynomial:
    """Immutable polynomial in ``x`` over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        if isinstance(coeffs, Integral):
            coeffs = (coeffs,)
        c = []
        for a in coeffs:
            if not isinstance(a, Integral) or isinstance(a, bool):
                raise TypeError(f"coefficient {a!r} is not an integer")
            c.append(int(a))
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Integral):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return scale(self, -1)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, scale(other, -1))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(other, scale(self, -1))

    def __mul__(self, other):
        if isinstance(other, Integral):
            return scale(self, int(other))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def __call__(self, value):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Polynomial":
        return cls(data)


def _coerce(p):
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, Integral):
        return Polynomial((int(p),))
    return None


ZERO = Polynomial()
ONE = Polynomial([1])
X = Polynomial([0, 1])


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Polynomial(out)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, e in enumerate(b):
                out[i + j] += c * e
    return Polynomial(out)


def scale(p: Polynomial, c: int) -> Polynomial:
    return Polynomial([c * a for a in p.coeffs])


def reflect(p: Polynomial, d: int) -> Polynomial:
    """Return ``x^d p(1/x)``."""
    if p.degree > d:
        raise DegreeBoundError(f"degree {p.degree} exceeds bound {d}")
    return Polynomial([p[d - i] for i in range(d + 1)])


def divmod_exact(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Integer long division; raises if a quotient coefficient is not integral."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lead = q.coeffs[-1]
    if len(rem) - 1 < dq:
        return ZERO, p
    quot = [0] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq]
        if c == 0:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise InexactDivisionError(f"{p} is not divisible by {q} over the integers")
        quot[k] = qc
        for j, b in enumerate(q.coeffs):
            rem[k + j] -= qc * b
    return Polynomial(quot), Polynomial(rem)


def exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return ``r`` with ``r * q == p``; raises ``InexactDivisionError`` otherwise."""
    quot, rem = divmod_exact(p, q)
    if rem:
        raise InexactDivisionError(f"{p} divided by {q} leaves remainder {rem}")
    return quot


def rational_substitute(p: Polynomial, num: Polynomial, den: Polynomial, m: int) -> Polynomial:
    """Return ``den^m * p(num/den)`` as a polynomial."""
    if p.degree > m:
        raise DegreeBoundError(f"degree {p.degree} exceeds bound {m}")
    total = ZERO
    for i, a in enumerate(p.coeffs):
        if a:
            total = total + a * (num ** i) * (den ** (m - i))
    return total


def is_palindromic(p: Polynomial, d: int) -> bool:
    if p.degree > d:
        log.debug("is_palindromic: degree %s exceeds %s", p.degree, d)
        return False
    return reflect(p, d) == p


def is_nonnegative(p: Polynomial) -> bool:
    return all(a >= 0 for a in p.coeffs)


def is_unimodal(p: Polynomial) -> bool:
    """True if the coefficient sequence (from degree 0) weakly rises then weakly falls."""
    c = p.coeffs
    i = 1
    while i < len(c) and c[i] >= c[i - 1]:
        i += 1
    while i < len(c) and c[i] <= c[i - 1]:
        i += 1
    return i >= len(c)


@lru_cache(maxsize=None)
def x_minus_one_pow(n: int) -> Polynomial:
    return Polynomial([-1, 1]) ** n


@lru_cache(maxsize=None)
def one_minus_x_pow(n: int) -> Polynomial:
    return Polynomial([1, -1]) ** n


@lru_cache(maxsize=None)
def face_term(i: int, d: int, base: int = 1) -> Polynomial:
    """``(base*x)^i (1-x)^(d-i)``: the summand shared by every h-polynomial."""
    if i > d:
        raise DegreeBoundError(f"face dimension {i} exceeds {d}")
    return Polynomial.monomial(i, base ** i) * one_minus_x_pow(d - i)


def geometric(n: int, start: int = 0) -> Polynomial:
    """``x^start + ... + x^(n-1)``."""
    return Polynomial([0] * start + [1] * max(n - start, 0))
