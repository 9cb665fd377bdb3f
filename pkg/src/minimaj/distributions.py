"""Generating functions of inv and minimaj over ordered multiset partitions.

Every quantity has two routes: direct enumeration (:func:`distribution`) and
an independent recursion or closed form.  The ``verify_*`` functions compare
the two and return a :class:`~minimaj.report.Report`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .partitions import (
    enum_compositions,
    enum_omp,
    enum_weak_compositions,
    Composition,
    WeakComposition,
)
from .qpoly import ONE, ZERO, QPoly, f_poly, q_factorial, q_stirling
from .report import Report, ReportEntry, check, parallel_map
from .statistics import inv_omp, minimaj

STATISTICS = {"inv": inv_omp, "minimaj": minimaj}


@dataclass(frozen=True)
class DistributionKey:
    """Which family to sum ``q^stat`` over.

    ``blocks`` fixes the number of blocks, ``shape`` the block sizes, and
    ``last_block_size`` (only together with ``blocks``) the size of the final
    block.  With none of them the family is every partition of weight ``beta``.
    """

    statistic: str
    beta: WeakComposition
    blocks: int | None = None
    shape: Composition | None = None
    last_block_size: int | None = None

    def __post_init__(self):
        if self.statistic not in STATISTICS:
            raise ValueError(f"unknown statistic {self.statistic!r}")
        object.__setattr__(self, "beta", tuple(self.beta))
        if self.shape is not None:
            object.__setattr__(self, "shape", tuple(self.shape))
            if self.blocks is not None or self.last_block_size is not None:
                raise ValueError("shape= excludes blocks= and last_block_size=")
            if sum(self.shape) != sum(self.beta):
                raise ValueError(f"shape {self.shape} does not match weight {self.beta}")
        if self.last_block_size is not None and self.blocks is None:
            raise ValueError("last_block_size= needs blocks=")

    @classmethod
    def osp(cls, statistic: str, n: int, **kw) -> DistributionKey:
        """Key over ordered set partitions of ``[n]``."""
        return cls(statistic, (1,) * n, **kw)


def _family(key: DistributionKey):
    mus = enum_omp(key.beta, blocks=key.blocks, shape=key.shape)
    if key.last_block_size is not None:
        a = key.last_block_size
        mus = (mu for mu in mus if len(mu[-1]) == a)
    return mus


def distribution(key: DistributionKey) -> QPoly:
    stat = STATISTICS[key.statistic]
    return QPoly.from_exponents(stat(mu) for mu in _family(key))


def joint_distribution(key: DistributionKey) -> tuple[QPoly, QPoly]:
    """``(I, M)`` for the family of ``key`` in a single enumeration pass.

    ``key.statistic`` is ignored.
    """
    invs, majs = [], []
    for mu in _family(key):
        invs.append(inv_omp(mu))
        majs.append(minimaj(mu))
    return QPoly.from_exponents(invs), QPoly.from_exponents(majs)


def binned_distributions(beta: Sequence[int]) -> dict[tuple, tuple[QPoly, QPoly]]:
    """One pass over every partition of weight ``beta``, binned three ways.

    Keys are ``("blocks", k)``, ``("last", k, a)`` and ``("shape", alpha)``;
    values are ``(I, M)``.
    """
    bins: dict[tuple, tuple[list[int], list[int]]] = defaultdict(lambda: ([], []))
    for mu in enum_omp(beta):
        i, m = inv_omp(mu), minimaj(mu)
        k = len(mu)
        for key in (("blocks", k), ("last", k, len(mu[-1])), ("shape", tuple(len(b) for b in mu))):
            bins[key][0].append(i)
            bins[key][1].append(m)
    return {
        key: (QPoly.from_exponents(a), QPoly.from_exponents(b))
        for key, (a, b) in sorted(bins.items(), key=lambda kv: repr(kv[0]))
    }


# -- recursions --------------------------------------------------------------

def _trim(beta: Sequence[int]) -> WeakComposition:
    beta = list(beta)
    while beta and beta[-1] == 0:
        beta.pop()
    return tuple(beta)


def _removals(beta: WeakComposition, size: int):
    """Yield ``(min(S), beta - chi(S), exponent)`` over valid last blocks ``S``.

    ``exponent`` is the number of remaining letters larger than ``min(S)``.
    """
    support = [i for i, b in enumerate(beta) if b > 0]
    for s in combinations(support, size):
        rest = list(beta)
        for i in s:
            rest[i] -= 1
        p = s[0]
        yield p, rest, sum(rest[p + 1:])


@lru_cache(maxsize=None)
def _inv_rec(beta: WeakComposition, alpha: Composition) -> QPoly:
    if not alpha:
        return ONE if not any(beta) else ZERO
    total = ZERO
    for _, rest, exp in _removals(beta, alpha[-1]):
        total = total + _inv_rec(_trim(rest), alpha[:-1]).shift(exp)
    return total


def inv_recursion(beta: Sequence[int], alpha: Sequence[int]) -> QPoly:
    """``I_{beta,alpha}`` by peeling off the last block."""
    beta, alpha = tuple(beta), tuple(alpha)
    if sum(beta) != sum(alpha):
        raise ValueError(f"|beta| = {sum(beta)} but |alpha| = {sum(alpha)}")
    return _inv_rec(_trim(beta), alpha)


@lru_cache(maxsize=None)
def _minimaj_rec(beta: WeakComposition, alpha: Composition) -> QPoly:
    # Compression reduces the last block to its minimum p, after which the
    # cycling recursion applies with weight beta - chi(S).
    if not alpha:
        return ONE if not any(beta) else ZERO
    total = ZERO
    for p, rest, exp in _removals(beta, alpha[-1]):
        cycled = tuple(rest[p + 1:] + rest[:p + 1])
        total = total + _minimaj_rec(_trim(cycled), alpha[:-1]).shift(exp)
    return total


def minimaj_recursion(beta: Sequence[int], alpha: Sequence[int]) -> QPoly:
    """``M_{beta,alpha}`` for ``alpha`` ending in 1, cycling the weight.

    The term for last letter ``i`` is ``q^(beta_{i+1}+...+beta_m)`` times
    ``M`` at weight ``(beta_{i+1},...,beta_m, beta_1,...,beta_i - 1)``.
    """
    beta, alpha = tuple(beta), tuple(alpha)
    if not alpha or alpha[-1] != 1:
        raise ValueError(f"minimaj recursion needs a last part of 1, got {alpha}")
    if sum(beta) != sum(alpha):
        raise ValueError(f"|beta| = {sum(beta)} but |alpha| = {sum(alpha)}")
    m = len(beta)
    total = ZERO
    for i in range(m):
        if beta[i] == 0:
            continue
        cycled = beta[i + 1:] + beta[:i] + (beta[i] - 1,)
        total = total + minimaj_shape_recursion(cycled, alpha[:-1]).shift(sum(beta[i + 1:]))
    return total


def minimaj_shape_recursion(beta: Sequence[int], alpha: Sequence[int]) -> QPoly:
    """``M_{beta,alpha}`` for any ``alpha``, via compression of the last block."""
    beta, alpha = tuple(beta), tuple(alpha)
    if sum(beta) != sum(alpha):
        raise ValueError(f"|beta| = {sum(beta)} but |alpha| = {sum(alpha)}")
    return _minimaj_rec(_trim(beta), alpha)


@lru_cache(maxsize=None)
def _blocks_rec(beta: WeakComposition, k: int) -> QPoly:
    if k == 0:
        return ONE if not any(beta) else ZERO
    return sum(
        (_last_rec(beta, k, a) for a in range(1, sum(beta) + 1)),
        ZERO,
    )


@lru_cache(maxsize=None)
def _last_rec(beta: WeakComposition, k: int, a: int) -> QPoly:
    if k == 0:
        return ZERO
    total = ZERO
    for _, rest, exp in _removals(beta, a):
        total = total + _blocks_rec(_trim(rest), k - 1).shift(exp)
    return total


def last_block_recursion(beta: Sequence[int], k: int, a: int) -> QPoly:
    """Common value of inv and minimaj over ``k``-block partitions of weight
    ``beta`` whose last block has ``a`` letters.

    Sums ``q^(letters left above min S) * M_{beta - chi(S), k-1}`` over
    ``a``-subsets ``S`` of the support; no weight cycling.
    """
    return _last_rec(_trim(tuple(beta)), k, a)


def blocks_recursion(beta: Sequence[int], k: int) -> QPoly:
    return _blocks_rec(_trim(tuple(beta)), k)


# -- verification ------------------------------------------------------------

def weight_domain(n: int, max_len: int = 4) -> list[WeakComposition]:
    """Weights checked at size ``n``: every composition of ``n`` plus every
    weak composition of length at most ``max_len`` that contains a zero."""
    out: list[WeakComposition] = list(enum_compositions(n))
    seen = set(out)
    for m in range(1, max_len + 1):
        for beta in enum_weak_compositions(n, m):
            if 0 in beta and beta not in seen:
                seen.add(beta)
                out.append(beta)
    return out


def _fmt(t: Sequence[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _theorem_2_7_one(args: tuple[int, Composition]) -> list[ReportEntry]:
    n, alpha = args
    i, m = joint_distribution(DistributionKey.osp("inv", n, shape=alpha))
    f = f_poly(n, alpha)
    inst = f"n={n} alpha={_fmt(alpha)}"
    return [
        check("theorem-2-7", inst + " inv=F", i, f),
        check("theorem-2-7", inst + " minimaj=F", m, f),
    ]


def verify_theorem_2_7(n: int, jobs: int = 1) -> Report:
    """``I_{n,alpha} = M_{n,alpha} = F_{n,alpha}`` for every ``alpha`` of every size ``<= n``."""
    items = [(s, a) for s in range(1, n + 1) for a in enum_compositions(s)]
    report = Report()
    for entries in parallel_map(_theorem_2_7_one, items, jobs):
        report.extend(entries)
    return report


def _corollary_2_8_one(args: tuple[int, int]) -> list[ReportEntry]:
    n, k = args
    i, m = joint_distribution(DistributionKey.osp("inv", n, blocks=k))
    closed = q_factorial(k) * q_stirling(n, k)
    inst = f"n={n} k={k}"
    return [
        check("corollary-2-8", inst + " inv=[k]!Stir", i, closed),
        check("corollary-2-8", inst + " minimaj=[k]!Stir", m, closed),
    ]


def verify_corollary_2_8(n: int, jobs: int = 1) -> Report:
    items = [(s, k) for s in range(1, n + 1) for k in range(1, s + 1)]
    report = Report()
    for entries in parallel_map(_corollary_2_8_one, items, jobs):
        report.extend(entries)
    return report


def _multiset_one(args: tuple[WeakComposition, bool]) -> list[ReportEntry]:
    beta, shapes = args
    bins = binned_distributions(beta)
    n = sum(beta)
    out = []
    for k in range(1, n + 1):
        i, m = bins.get(("blocks", k), (ZERO, ZERO))
        out.append(check("theorem-3-13", f"beta={_fmt(beta)} k={k}", i, m))
    for k in range(1, n + 1):
        for a in range(1, n + 1):
            if ("last", k, a) in bins:
                i, m = bins[("last", k, a)]
                out.append(check("refined-last-block", f"beta={_fmt(beta)} k={k} a={a}", i, m))
    if shapes:
        for alpha in enum_compositions(n):
            i, m = bins.get(("shape", alpha), (ZERO, ZERO))
            out.append(check("theorem-3-13-shape", f"beta={_fmt(beta)} alpha={_fmt(alpha)}", i, m))
    return out


def _multiset_report(n: int, jobs: int, keep: set[str], shapes: bool = False) -> Report:
    items = [(beta, shapes) for s in range(1, n + 1) for beta in weight_domain(s)]
    report = Report()
    for entries in parallel_map(_multiset_one, items, jobs):
        report.extend(e for e in entries if e.theorem in keep)
    return report


def verify_theorem_3_13(n: int, jobs: int = 1, shape_mode: bool = False) -> Report:
    """``I_{beta,k} = M_{beta,k}`` for all weights in :func:`weight_domain`.

    ``shape_mode`` adds the shape-level comparisons, which are expected to
    fail for genuine multisets (e.g. weight (2,2,1), shape (2,1,2)).
    """
    keep = {"theorem-3-13"} | ({"theorem-3-13-shape"} if shape_mode else set())
    return _multiset_report(n, jobs, keep, shapes=shape_mode)


def verify_refined_last_block(n: int, jobs: int = 1) -> Report:
    return _multiset_report(n, jobs, {"refined-last-block"})


def _recursions_one(beta: WeakComposition) -> list[ReportEntry]:
    bins = binned_distributions(beta)
    n = sum(beta)
    b = _fmt(beta)
    out = []
    for alpha in enum_compositions(n):
        i, m = bins.get(("shape", alpha), (ZERO, ZERO))
        inst = f"beta={b} alpha={_fmt(alpha)}"
        out.append(check("inv-recursion", inst, inv_recursion(beta, alpha), i))
        if alpha[-1] == 1:
            out.append(check("minimaj-recursion", inst, minimaj_recursion(beta, alpha), m))
        out.append(check("minimaj-compressed-recursion", inst, minimaj_shape_recursion(beta, alpha), m))
    for k in range(1, n + 1):
        for a in range(1, n + 1):
            i, m = bins.get(("last", k, a), (ZERO, ZERO))
            inst = f"beta={b} k={k} a={a}"
            rec = last_block_recursion(beta, k, a)
            out.append(check("last-block-recursion", inst + " minimaj", rec, m))
            out.append(check("last-block-recursion", inst + " inv", rec, i))
    return out


def verify_recursions(n: int, jobs: int = 1) -> Report:
    """Recursions against enumeration on every weight of size ``<= n``."""
    items = [beta for s in range(1, n + 1) for beta in weight_domain(s)]
    report = Report()
    for entries in parallel_map(_recursions_one, items, jobs):
        report.extend(entries)
    return report


def shape_counterexample() -> tuple[QPoly, QPoly]:
    """``(I, M)`` at weight (2,2,1), shape (2,1,2), where the two differ."""
    return joint_distribution(DistributionKey("inv", (2, 2, 1), shape=(2, 1, 2)))
