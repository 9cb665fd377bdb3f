"""Exact polynomials in one variable ``q`` with integer coefficients.

All distributions in this package are :class:`QPoly` values.  Coefficients are
Python ints, so arithmetic is arbitrary precision and cannot wrap around.
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence


class QPoly:
    """Dense polynomial ``c0 + c1 q + c2 q^2 + ...`` in canonical form.

    The coefficient tuple never carries trailing zeros; the zero polynomial
    has an empty tuple.  Instances are immutable and hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> QPoly:
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent}")
        return cls([0] * exponent + [coeff])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPoly:
        """Generating function ``sum q^e`` over an iterable of exponents."""
        counts: list[int] = []
        for e in exponents:
            if e >= len(counts):
                counts.extend([0] * (e + 1 - len(counts)))
            counts[e] += 1
        return cls(counts)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self._c):
            return self._c[exponent]
        return 0

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == QPoly([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __add__(self, other: QPoly | int) -> QPoly:
        other = _coerce(other)
        if len(self._c) < len(other._c):
            a, b = other._c, self._c
        else:
            a, b = self._c, other._c
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-x for x in self._c)

    def __sub__(self, other: QPoly | int) -> QPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> QPoly:
        return _coerce(other) - self

    def __mul__(self, other: QPoly | int) -> QPoly:
        other = _coerce(other)
        if not self._c or not other._c:
            return ZERO
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(other._c):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> QPoly:
        if exponent < 0:
            raise ValueError("QPoly powers must be nonnegative")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, d: int) -> QPoly:
        """Multiply by ``q^d``."""
        if d < 0:
            raise ValueError("shift must be nonnegative")
        if not self._c:
            return self
        return QPoly((0,) * d + self._c)

    def eval_at_one(self) -> int:
        return sum(self._c)

    def __call__(self, q: int) -> int:
        total = 0
        for x in reversed(self._c):
            total = total * q + x
        return total

    def substitute_power(self, r: int) -> QPoly:
        """Return the polynomial with ``q`` replaced by ``q^r``."""
        if r < 1:
            raise ValueError(f"substitution power must be positive, got {r}")
        out = [0] * (r * (len(self._c) - 1) + 1) if self._c else []
        for d, x in enumerate(self._c):
            out[r * d] = x
        return QPoly(out)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self._c)

    # -- serialization -------------------------------------------------

    def to_json(self) -> list[str]:
        """JSON form: decimal coefficient strings, constant term first."""
        return [str(x) for x in self._c]

    @classmethod
    def from_json(cls, data: str | Sequence[str | int]) -> QPoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(x) for x in data)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for d, x in enumerate(self._c):
            if x == 0:
                continue
            mag = abs(x)
            if d == 0:
                body = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((x < 0, body))
        neg, body = terms[0]
        parts = [("-" if neg else "") + body]
        for neg, body in terms[1:]:
            parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({list(self._c)!r})"


def _coerce(x: QPoly | int) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly([x])
    raise TypeError(f"cannot use {type(x).__name__} as a QPoly")


ZERO = QPoly()
ONE = QPoly([1])
Q = QPoly([0, 1])


def q_integer(r: int) -> QPoly:
    """``[r]_q = 1 + q + ... + q^(r-1)``; ``[0]_q`` is zero."""
    if r < 0:
        raise ValueError(f"q-integer needs r >= 0, got {r}")
    return QPoly([1] * r)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError(f"q-factorial needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial via ``[n,k] = [n-1,k-1] + q^k [n-1,k]``.

    Zero outside ``0 <= k <= n``.
    """
    if n < 0:
        raise ValueError(f"q-binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


@lru_cache(maxsize=None)
def q_stirling(n: int, k: int) -> QPoly:
    """q-Stirling numbers of the second kind.

    ``Stir(n,k) = Stir(n-1,k-1) + [k]_q Stir(n-1,k)`` with
    ``Stir(0,k) = [k == 0]``.
    """
    if n < 0 or k < 0:
        return ZERO
    if n == 0:
        return ONE if k == 0 else ZERO
    if k == 0:
        return ZERO
    return q_stirling(n - 1, k - 1) + q_integer(k) * q_stirling(n - 1, k)


def binomial_series(part: int, top: int) -> QPoly:
    """``sum_{d=0}^{top} C(part-1+d, part-1) q^d``, one factor of ``f_poly``."""
    return QPoly(comb(part - 1 + d, part - 1) for d in range(top + 1))


def f_poly(n: int, alpha: Sequence[int]) -> QPoly:
    """Product q-analog of the multinomial coefficient ``n choose alpha``.

    The ``i``-th factor runs ``d`` from 0 to the sum of the parts before
    ``alpha[i]``, so the first factor is always 1.
    """
    alpha = tuple(alpha)
    if any(a < 1 for a in alpha) or sum(alpha) != n:
        raise ValueError(f"{alpha} is not a composition of {n}")
    result = ONE
    prefix = 0
    for a in alpha:
        result = result * binomial_series(a, prefix)
        prefix += a
    return result
