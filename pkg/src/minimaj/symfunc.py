"""Monomial and Schur expansions of the valley functions at ``t = 0`` / ``q = 0``.

A symmetric function of degree ``n`` is stored by its coefficients at the
integer partitions of ``n``.  Monomial coefficients come from enumerating
ordered multiset partitions, Schur coefficients either from the standard
tableau formula or from the monomial side through Kostka numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterator, Sequence

from .distributions import DistributionKey, distribution
from .partitions import enum_omp, enum_partitions
from .qpoly import ZERO, QPoly, q_binomial
from .statistics import descent_set, minimaj, segmented_word

Partition = tuple[int, ...]


@dataclass(frozen=True)
class SymFuncExpansion:
    basis: str
    n: int
    coefficients: dict[Partition, QPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("monomial", "schur"):
            raise ValueError(f"unknown basis {self.basis!r}")
        for lam in self.coefficients:
            if sum(lam) != self.n or list(lam) != sorted(lam, reverse=True) or 0 in lam:
                raise ValueError(f"{lam} is not a partition of {self.n}")

    def __getitem__(self, lam: Sequence[int]) -> QPoly:
        return self.coefficients.get(tuple(lam), ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFuncExpansion):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.n == other.n
            and all(self[lam] == other[lam] for lam in enum_partitions(self.n))
        )

    def items(self) -> Iterator[tuple[Partition, QPoly]]:
        """Every partition of ``n`` (zeros included), in reverse lex order."""
        for lam in enum_partitions(self.n):
            yield lam, self[lam]

    def to_dict(self, k: int | None = None) -> dict:
        out = {"basis": self.basis, "n": self.n}
        if k is not None:
            out["k"] = k
        out["coefficients"] = [
            {"partition": list(lam), "poly": poly.to_json()} for lam, poly in self.items()
        ]
        return out


def val_coefficient(beta: Sequence[int], k: int, statistic: str = "minimaj") -> QPoly:
    """Coefficient of ``x^beta`` in ``Val_{n,k}``: partitions with ``k+1`` blocks."""
    return distribution(DistributionKey(statistic, tuple(beta), blocks=k + 1))


def val_expansion(n: int, k: int, statistic: str = "minimaj") -> SymFuncExpansion:
    """Monomial expansion of ``Val_{n,k}(x;0,q)`` (minimaj) or ``(x;q,0)`` (inv)."""
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got n={n}, k={k}")
    coeffs = {lam: val_coefficient(lam, k, statistic) for lam in enum_partitions(n)}
    return SymFuncExpansion("monomial", n, coeffs)


# -- tableaux ----------------------------------------------------------------

@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def _row_of(self) -> dict[int, int]:
        return {x: i for i, row in enumerate(self.rows) for x in row}

    def descents(self) -> tuple[int, ...]:
        """``i`` is a descent when ``i+1`` sits in a strictly lower row."""
        row = self._row_of()
        n = len(row)
        return tuple(i for i in range(1, n) if row[i + 1] > row[i])


def syt_enumerate(shape: Sequence[int]) -> Iterator[StandardTableau]:
    """Standard Young tableaux of ``shape``, filling ``1..n`` row by row choice."""
    shape = tuple(shape)
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def rec(x: int) -> Iterator[StandardTableau]:
        if x > n:
            yield StandardTableau(tuple(tuple(r) for r in rows))
            return
        for i, length in enumerate(shape):
            if len(rows[i]) < length and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(x)
                yield from rec(x + 1)
                rows[i].pop()

    yield from rec(1)


def syt_des(t: StandardTableau) -> int:
    return len(t.descents())


def syt_maj(t: StandardTableau) -> int:
    return sum(t.descents())


def hook_length_count(shape: Sequence[int]) -> int:
    from math import factorial

    shape = tuple(shape)
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, r in enumerate(shape):
        for j in range(r):
            hooks *= (r - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(shape)) // hooks


def schur_coeff_formula(lam: Sequence[int], n: int, k: int) -> QPoly:
    """Coefficient of ``s_lam`` in ``Val_{n,k-1}`` from standard tableaux.

    Sums ``q^(maj T + C(n-k,2) - (n-k) des T) [des T choose n-k]_q`` over
    ``T`` of shape ``lam``.
    """
    if sum(lam) != n:
        raise ValueError(f"{tuple(lam)} is not a partition of {n}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    d = n - k
    total = ZERO
    for t in syt_enumerate(lam):
        des, maj = syt_des(t), syt_maj(t)
        qb = q_binomial(des, d)
        if not qb:
            continue
        exp = maj + comb(d, 2) - d * des
        if exp < 0:
            raise ArithmeticError(f"negative exponent {exp} for tableau {t.rows}")
        total = total + qb.shift(exp)
    return total


# -- Kostka numbers and basis change ---------------------------------------

@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    Counted by placing the letters ``1, 2, ...`` one horizontal strip at a
    time.
    """
    if sum(lam) != sum(mu):
        return 0
    target = tuple(lam)

    @lru_cache(maxsize=None)
    def strips(current: tuple[int, ...], idx: int) -> int:
        if idx == len(mu):
            return int(current == target)
        return sum(strips(nxt, idx + 1) for nxt in _horizontal_strips(current, target, mu[idx]))

    return strips(tuple(0 for _ in target), 0)


def _horizontal_strips(current, target, size) -> Iterator[tuple[int, ...]]:
    """Shapes ``nu`` with ``current <= nu <= target`` and ``nu/current`` a
    horizontal strip of ``size`` boxes."""
    rows = len(target)

    def rec(i: int, left: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if left == 0:
                yield tuple(acc)
            return
        upper = target[i]
        if i > 0:
            # strip condition: new row i may not pass the old row i-1
            upper = min(upper, current[i - 1])
        for add in range(0, min(left, upper - current[i]) + 1):
            acc.append(current[i] + add)
            yield from rec(i + 1, left - add, acc)
            acc.pop()

    yield from rec(0, size, [])


def kostka_ssyt_brute(lam: Partition, mu: Partition) -> int:
    """Kostka number by filling the diagram cell by cell (test oracle)."""
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    content = [x + 1 for x, c in enumerate(mu) for _ in range(c)]
    count = 0
    for filling in set(permutations(content)):
        t = dict(zip(cells, filling))
        ok = all(
            (j == 0 or t[(i, j - 1)] <= t[(i, j)]) and (i == 0 or t[(i - 1, j)] < t[(i, j)])
            for i, j in cells
        )
        count += ok
    return count


def monomial_to_schur(e: SymFuncExpansion) -> SymFuncExpansion:
    """Solve ``f = sum_lam d_lam s_lam`` with ``s_lam = sum_mu K_{lam,mu} m_mu``.

    Kostka matrices are unitriangular in reverse lex order, so the solve is
    exact back-substitution starting from ``(n)``.
    """
    if e.basis != "monomial":
        raise ValueError("expected a monomial-basis expansion")
    parts = list(enum_partitions(e.n))
    d: dict[Partition, QPoly] = {}
    for idx, mu in enumerate(parts):
        acc = e[mu]
        for lam in parts[:idx]:
            kk = kostka(lam, mu)
            if kk and d[lam]:
                acc = acc - d[lam] * kk
        d[mu] = acc
    return SymFuncExpansion("schur", e.n, d)


def schur_to_monomial(e: SymFuncExpansion) -> SymFuncExpansion:
    if e.basis != "schur":
        raise ValueError("expected a Schur-basis expansion")
    parts = list(enum_partitions(e.n))
    out = {}
    for mu in parts:
        acc = ZERO
        for lam in parts:
            kk = kostka(lam, mu)
            if kk:
                acc = acc + e[lam] * kk
        out[mu] = acc
    return SymFuncExpansion("monomial", e.n, out)


def is_schur_positive(e: SymFuncExpansion) -> bool:
    return e.basis == "schur" and all(p.is_nonnegative() for _, p in e.items())


def schur_expansion_formula(n: int, k: int) -> SymFuncExpansion:
    """Schur expansion of ``Val_{n,k}`` from the tableau formula."""
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got n={n}, k={k}")
    return SymFuncExpansion(
        "schur", n, {lam: schur_coeff_formula(lam, n, k + 1) for lam in enum_partitions(n)}
    )


# -- descent classes ---------------------------------------------------------

def descent_refined_coefficient(beta: Sequence[int], k: int, s: Sequence[int]) -> QPoly:
    """Coefficient of ``x^beta`` in ``F_{n,k,S}``: ``k``-block partitions whose
    minimizing word has descent set ``S``."""
    s = tuple(s)
    return QPoly.from_exponents(
        minimaj(mu) for mu in enum_omp(tuple(beta), blocks=k)
        if descent_set(segmented_word(mu)) == s
    )


def descent_class_count(beta: Sequence[int], k: int, s: Sequence[int]) -> int:
    s = tuple(s)
    return sum(
        1 for mu in enum_omp(tuple(beta), blocks=k)
        if descent_set(segmented_word(mu)) == s
    )


def descent_refined_expansion(n: int, k: int, s: Sequence[int]) -> SymFuncExpansion:
    s = tuple(s)
    if any(not 1 <= x <= n - 1 for x in s):
        raise ValueError(f"descent set {s} not inside [1, {n - 1}]")
    coeffs = {lam: descent_refined_coefficient(lam, k, s) for lam in enum_partitions(n)}
    return SymFuncExpansion("monomial", n, coeffs)


def rearrangements(lam: Sequence[int], length: int) -> list[tuple[int, ...]]:
    """Distinct weak compositions of ``length`` whose nonzero parts are ``lam``."""
    padded = tuple(lam) + (0,) * (length - len(lam))
    return sorted(set(permutations(padded)), reverse=True)
