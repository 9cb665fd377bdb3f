"""Colored permutations and colored ordered set partitions (``C_r wr S_n``).

A colored letter ``i^j`` has value ``i`` in ``1..n`` and color ``j`` in
``0..r-1``.  Letters are totally ordered by ``<`` below: a larger color is
smaller, and ties go by value, so ``1^(r-1)`` is the minimum and ``n^0`` the
maximum.  Only set partitions are supported: every value appears exactly
once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from itertools import permutations, product
from math import comb, factorial
from typing import Iterator, Sequence

from .distributions import _fmt
from .partitions import OrderedMultisetPartition, enum_compositions, enum_osp
from .qpoly import ZERO, QPoly, binomial_series, f_poly, q_integer
from .report import Report, ReportEntry, check, count_check, parallel_map
from .statistics import inv_omp, maj_word, minimaj, segment_blocks


@total_ordering
@dataclass(frozen=True)
class ColoredLetter:
    value: int
    color: int

    def __lt__(self, other: ColoredLetter) -> bool:
        return (-self.color, self.value) < (-other.color, other.value)

    def __str__(self) -> str:
        return f"{self.value}^{self.color}"


@dataclass(frozen=True)
class ColoredOSP:
    """A ``C_r wr S_n`` ordered set partition; blocks are stored ``<``-sorted."""

    blocks: tuple[tuple[ColoredLetter, ...], ...]
    n: int
    r: int

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        values = sorted(x.value for b in blocks for x in b)
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        if values != list(range(1, self.n + 1)):
            raise ValueError(f"values must be exactly 1..{self.n}, got {values}")
        if any(not 0 <= x.color < self.r for b in blocks for x in b):
            raise ValueError(f"colors must lie in 0..{self.r - 1}")

    @classmethod
    def from_pairs(cls, blocks, r: int) -> ColoredOSP:
        """Build from blocks of ``(value, color)`` pairs."""
        bs = tuple(tuple(ColoredLetter(v, c) for v, c in b) for b in blocks)
        return cls(bs, sum(len(b) for b in bs), r)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return print_colored(self)


_LETTER = re.compile(r"^(\d+)\^(\d+)$")


def parse_colored(text: str, r: int | None = None) -> ColoredOSP:
    """Parse ``"2^0 3^2|4^0|5^0 1^1"``; ``r`` defaults to the largest color + 1."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    blocks = []
    for chunk in body.split("|"):
        letters = []
        for tok in chunk.split():
            m = _LETTER.match(tok)
            if not m:
                raise ValueError(f"malformed colored letter {tok!r} in {text!r}")
            letters.append((int(m.group(1)), int(m.group(2))))
        if not letters:
            raise ValueError(f"empty block in {text!r}")
        blocks.append(letters)
    if r is None:
        r = 1 + max(c for b in blocks for _, c in b)
    return ColoredOSP.from_pairs(blocks, r)


def print_colored(sigma: ColoredOSP) -> str:
    return "|".join(" ".join(str(x) for x in b) for b in sigma.blocks)


def format_colored_word(letters: Sequence[ColoredLetter], segmentation: Sequence[int] | None = None) -> str:
    if segmentation is None:
        return " ".join(map(str, letters))
    out, pos = [], 0
    for a in segmentation:
        out.append(" ".join(map(str, letters[pos:pos + a])))
        pos += a
    return " . ".join(out)


# -- statistics --------------------------------------------------------------

def flag_maj(pi: Sequence[ColoredLetter], r: int) -> int:
    """``r`` times the sum of descent positions plus the total color."""
    des = sum(i + 1 for i in range(len(pi) - 1) if pi[i + 1] < pi[i])
    return r * des + sum(x.color for x in pi)


def decolor(sigma: ColoredOSP) -> OrderedMultisetPartition:
    return OrderedMultisetPartition.from_blocks([x.value for x in b] for b in sigma.blocks)


def color_sum(sigma: ColoredOSP) -> int:
    return sum(x.color for b in sigma.blocks for x in b)


def colored_inv(sigma: ColoredOSP) -> int:
    return sigma.r * inv_omp(decolor(sigma)) + color_sum(sigma)


def colored_segmented(sigma: ColoredOSP) -> tuple[tuple[ColoredLetter, ...], tuple[int, ...]]:
    """The minimizing arrangement as ``(letters, segmentation)``."""
    segs = segment_blocks(sigma.blocks)
    return tuple(x for s in segs for x in s), tuple(len(s) for s in segs)


def _key(x: ColoredLetter, n: int, r: int) -> int:
    # integer order-isomorphic to the colored order
    return (r - 1 - x.color) * n + x.value


def colored_minimaj(sigma: ColoredOSP) -> int:
    n, r = sigma.n, sigma.r
    keyed = [[_key(x, n, r) for x in b] for b in sigma.blocks]
    word = [x for s in segment_blocks(keyed) for x in s]
    return r * maj_word(word) + color_sum(sigma)


def colored_rearrangements(sigma: ColoredOSP) -> Iterator[tuple[ColoredLetter, ...]]:
    for parts in product(*(permutations(b) for b in sigma.blocks)):
        yield tuple(x for p in parts for x in p)


def colored_minimaj_brute(sigma: ColoredOSP) -> int:
    return min(flag_maj(w, sigma.r) for w in colored_rearrangements(sigma))


def colored_standardize(sigma: ColoredOSP) -> OrderedMultisetPartition:
    """Relabel by rank in the colored order and drop colors."""
    letters = sorted(x for b in sigma.blocks for x in b)
    rank = {x: i + 1 for i, x in enumerate(letters)}
    return OrderedMultisetPartition.from_blocks([rank[x] for x in b] for b in sigma.blocks)


def color_multiplicities(sigma: ColoredOSP) -> tuple[int, ...]:
    gamma = [0] * sigma.r
    for b in sigma.blocks:
        for x in b:
            gamma[x.color] += 1
    return tuple(gamma)


def compress_colored(blocks: Sequence[Sequence[ColoredLetter]], r: int) -> ColoredOSP:
    """Relabel values to ``1..n'`` preserving value order and colors."""
    values = sorted(x.value for b in blocks for x in b)
    if len(set(values)) != len(values):
        raise ValueError("values must be distinct")
    rank = {v: i + 1 for i, v in enumerate(values)}
    return ColoredOSP(
        tuple(tuple(ColoredLetter(rank[x.value], x.color) for x in b) for b in blocks),
        len(values),
        r,
    )


# -- cyclic action -----------------------------------------------------------

def colored_cycle_letter(x: ColoredLetter, n: int, r: int) -> ColoredLetter:
    if x.value > 1:
        return ColoredLetter(x.value - 1, x.color)
    if x.color < r - 1:
        return ColoredLetter(n, x.color + 1)
    return ColoredLetter(n, 0)


def colored_cycle(x, n: int, r: int):
    """Apply the order-``nr`` cycle to a letter, a letter sequence or a partition."""
    if isinstance(x, ColoredLetter):
        return colored_cycle_letter(x, n, r)
    if isinstance(x, ColoredOSP):
        return ColoredOSP(
            tuple(tuple(colored_cycle_letter(y, n, r) for y in b) for b in x.blocks), n, r
        )
    return tuple(colored_cycle_letter(y, n, r) for y in x)


# -- enumeration -------------------------------------------------------------

def enum_colored_permutations(n: int, r: int) -> Iterator[tuple[ColoredLetter, ...]]:
    for perm in permutations(range(1, n + 1)):
        for colors in product(range(r), repeat=n):
            yield tuple(ColoredLetter(v, colors[v - 1]) for v in perm)


def enum_colored_osp(n: int, r: int, shape: Sequence[int] | None = None,
                     blocks: int | None = None) -> Iterator[ColoredOSP]:
    """Every coloring of every ordered set partition of ``[n]``."""
    for sigma in enum_osp(n, blocks=blocks, shape=shape):
        for colors in product(range(r), repeat=n):
            yield ColoredOSP(
                tuple(tuple(ColoredLetter(v, colors[v - 1]) for v in b) for b in sigma), n, r
            )


def colored_distributions(n: int, r: int, shape: Sequence[int]) -> tuple[QPoly, QPoly]:
    """``(I^r, M^r)`` over colored partitions of the given shape."""
    invs, majs = [], []
    for sigma in enum_osp(n, shape=shape):
        base_inv = r * inv_omp(sigma)
        for colors in product(range(r), repeat=n):
            cs = ColoredOSP(
                tuple(tuple(ColoredLetter(v, colors[v - 1]) for v in b) for b in sigma), n, r
            )
            invs.append(base_inv + sum(colors))
            majs.append(colored_minimaj(cs))
    return QPoly.from_exponents(invs), QPoly.from_exponents(majs)


def theorem_4_4_closed_form(n: int, r: int, alpha: Sequence[int]) -> QPoly:
    return q_integer(r) ** n * f_poly(n, alpha).substitute_power(r)


def _theorem_4_4_one(args: tuple[int, int, tuple[int, ...]]) -> list[ReportEntry]:
    n, r, alpha = args
    i, m = colored_distributions(n, r, alpha)
    closed = theorem_4_4_closed_form(n, r, alpha)
    inst = f"n={n} r={r} alpha={_fmt(alpha)}"
    return [
        check("theorem-4-4", inst + " inv", i, closed),
        check("theorem-4-4", inst + " minimaj", m, closed),
    ]


def verify_theorem_4_4(n: int, r: int, jobs: int = 1) -> Report:
    """``I^r = M^r = [r]_q^n F(q^r)`` for every composition of every size ``<= n``."""
    items = [(s, r, a) for s in range(1, n + 1) for a in enum_compositions(s)]
    report = Report()
    for entries in parallel_map(_theorem_4_4_one, items, jobs):
        report.extend(entries)
    return report


# -- the polynomial identity -------------------------------------------------

def prop_4_8_sides(n: int, alpha_k: int, r: int) -> tuple[QPoly, QPoly]:
    """Both sides of the last-block identity for colored partitions.

    Left: ``[r]_q^a`` times ``sum_d C(a-1+d, a-1) q^(r d)`` for ``d <= n-a``.
    Right: the triple sum over the minimum ``i^j`` of the last block and the
    number ``t`` of larger values in it.  ``[0]_q`` is zero and ``[j]_q^0 = 1``.
    """
    a = alpha_k
    if not 1 <= a <= n or r < 1:
        raise ValueError(f"need 1 <= alpha_k <= n and r >= 1, got n={n}, alpha_k={a}, r={r}")
    lhs = q_integer(r) ** a * binomial_series(a, n - a).substitute_power(r)
    rhs = ZERO
    for i in range(1, n + 1):
        for j in range(r):
            for t in range(a):
                c = comb(n - i, t) * comb(i - 1, a - t - 1)
                if not c:
                    continue
                term = q_integer(j) ** (a - t - 1) * q_integer(j + 1) ** t
                rhs = rhs + term.shift(j * (n - a + 1) + (n - i - t)) * c
    return lhs, rhs


def verify_prop_4_8(n: int, r: int) -> Report:
    report = Report()
    for size in range(1, n + 1):
        for a in range(1, size + 1):
            for rr in range(1, r + 1):
                lhs, rhs = prop_4_8_sides(size, a, rr)
                report.entries.append(check("prop-4-8", f"n={size} alpha_k={a} r={rr}", lhs, rhs))
    return report


# -- lemma sweeps ------------------------------------------------------------

def _unique_min_at(sigma: ColoredOSP) -> bool:
    target, _ = colored_segmented(sigma)
    values = [(flag_maj(w, sigma.r), w) for w in colored_rearrangements(sigma)]
    low = min(v for v, _ in values)
    winners = [w for v, w in values if v == low]
    return winners == [target]


def _compression_holds(sigma: ColoredOSP) -> bool:
    *front, last = sigma.blocks
    first, *others = last  # stored in increasing colored order
    shorter = compress_colored(list(front) + [(first,)], sigma.r)
    return colored_minimaj(sigma) == colored_minimaj(shorter) + sum(x.color for x in others)


def _relation_holds(sigma: ColoredOSP) -> bool:
    gamma = color_multiplicities(sigma)
    expected = sigma.r * minimaj(colored_standardize(sigma)) + sum(i * g for i, g in enumerate(gamma))
    return colored_minimaj(sigma) == expected


def _commutes_segmented(sigma: ColoredOSP) -> bool:
    n, r = sigma.n, sigma.r
    letters, seg = colored_segmented(sigma)
    return colored_segmented(colored_cycle(sigma, n, r)) == (colored_cycle(letters, n, r), seg)


def verify_colored_lemmas(n: int, r: int) -> Report:
    """Exhaustive checks of the colored-letter lemmas for every size ``<= n``
    and every color count ``<= r``; one entry per property and size."""
    report = Report()
    for rr in range(1, r + 1):
        for size in range(1, n + 1):
            inst = f"n={size} r={rr}"
            cyc_ok = cyc_total = 0
            order_ok = 0
            for pi in enum_colored_permutations(size, rr):
                if pi[-1] != ColoredLetter(1, rr - 1):
                    cyc_total += 1
                    cyc_ok += flag_maj(colored_cycle(pi, size, rr), rr) == flag_maj(pi, rr) + 1
                w = pi
                for _ in range(size * rr):
                    w = colored_cycle(w, size, rr)
                order_ok += w == pi
            report.entries.append(count_check("colored-cycle-maj-increment", inst, cyc_ok, cyc_total))
            report.entries.append(
                count_check("colored-cycle-order", inst, order_ok, rr ** size * factorial(size))
            )
            counts = dict.fromkeys(
                ("colored-brute-agrees", "colored-unique-minimizer", "colored-compression",
                 "colored-standardize-relation"), 0)
            total = comm_ok = comm_total = 0
            for sigma in enum_colored_osp(size, rr):
                total += 1
                counts["colored-brute-agrees"] += colored_minimaj(sigma) == colored_minimaj_brute(sigma)
                counts["colored-unique-minimizer"] += _unique_min_at(sigma)
                counts["colored-compression"] += _compression_holds(sigma)
                counts["colored-standardize-relation"] += _relation_holds(sigma)
                if sigma.shape[-1] == 1:
                    comm_total += 1
                    comm_ok += _commutes_segmented(sigma)
            for name, good in counts.items():
                report.entries.append(count_check(name, inst, good, total))
            report.entries.append(count_check("colored-cycle-commutation", inst, comm_ok, comm_total))
    return report

