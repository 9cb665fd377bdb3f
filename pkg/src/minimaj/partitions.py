"""Words, compositions, ordered multiset partitions and segmented words.

Words and (weak) compositions are plain tuples of ints.  Ordered multiset
partitions are tuples of strictly increasing tuples, wrapped in
:class:`OrderedMultisetPartition` so they carry shape/weight helpers.

All enumerators are lazy generators.  Compositions come out in reverse
lexicographic order (largest first part first); words, subsets and ordered
multiset partitions in lexicographic order, with blocks compared as
increasing sequences.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence

Word = tuple[int, ...]
Composition = tuple[int, ...]
WeakComposition = tuple[int, ...]


class OMPParseError(ValueError):
    """Malformed ordered multiset partition or segmented word text."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)


class EmptyBlockError(OMPParseError):
    pass


class RepeatedLetterError(OMPParseError):
    pass


class MalformedTokenError(OMPParseError):
    pass


class OrderedMultisetPartition(tuple):
    """A sequence of nonempty sets of positive letters, e.g. ``(25|1|34)``.

    Behaves as a tuple of increasing tuples.  Use :meth:`from_blocks` to build
    one from arbitrary iterables (blocks are sorted and validated).
    """

    __slots__ = ()

    def __new__(cls, blocks=()):
        return cls.from_blocks(blocks)

    @classmethod
    def from_blocks(cls, blocks) -> OrderedMultisetPartition:
        out = []
        for b in blocks:
            letters = sorted(int(x) for x in b)
            if not letters:
                raise ValueError("blocks must be nonempty")
            if letters[0] < 1:
                raise ValueError(f"letters must be positive, got {letters[0]}")
            if any(x == y for x, y in zip(letters, letters[1:])):
                raise ValueError(f"repeated letter in block {letters}")
            out.append(tuple(letters))
        return tuple.__new__(cls, out)

    @classmethod
    def _trusted(cls, blocks) -> OrderedMultisetPartition:
        return tuple.__new__(cls, blocks)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self)

    @property
    def shape(self) -> Composition:
        return tuple(len(b) for b in self)

    @property
    def size(self) -> int:
        return sum(len(b) for b in self)

    @property
    def max_letter(self) -> int:
        return max((b[-1] for b in self), default=0)

    def weight(self, m: int | None = None) -> WeakComposition:
        """Letter multiplicities over the alphabet ``1..m``.

        ``m`` defaults to the largest letter present.
        """
        top = self.max_letter
        if m is None:
            m = top
        elif m < top:
            raise ValueError(f"alphabet size {m} smaller than letter {top}")
        counts = [0] * m
        for b in self:
            for x in b:
                counts[x - 1] += 1
        return tuple(counts)

    def is_set_partition(self) -> bool:
        return all(c == 1 for c in self.weight())

    def __str__(self) -> str:
        return print_omp(self)

    def __repr__(self) -> str:
        return f"OMP({print_omp(self)})"


class SegmentedWord(NamedTuple):
    """A word together with a composition cutting it into segments."""

    word: Word
    segmentation: Composition

    @classmethod
    def from_segments(cls, segments: Sequence[Sequence[int]]) -> SegmentedWord:
        segs = [tuple(s) for s in segments]
        if any(not s for s in segs):
            raise ValueError("segments must be nonempty")
        return cls(tuple(x for s in segs for x in s), tuple(len(s) for s in segs))

    @property
    def segments(self) -> tuple[Word, ...]:
        out, pos = [], 0
        for a in self.segmentation:
            out.append(self.word[pos:pos + a])
            pos += a
        return tuple(out)

    @property
    def cuts(self) -> frozenset[int]:
        """Positions ``p`` such that a segment boundary follows letter ``p``.

        Positions are 0-based; the end of the word is not a cut.
        """
        out, pos = set(), 0
        for a in self.segmentation[:-1]:
            pos += a
            out.add(pos - 1)
        return frozenset(out)

    def to_omp(self) -> OrderedMultisetPartition:
        """Blocks are the letter sets of the segments (repeats collapse)."""
        return OrderedMultisetPartition._trusted(
            tuple(sorted(set(s))) for s in self.segments
        )

    def __str__(self) -> str:
        return print_segmented(self)


# -- enumerators -------------------------------------------------------------

def enum_compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n``; ``n = 0`` yields the empty composition."""
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in enum_compositions(n - first):
            yield (first,) + rest


def enum_compositions_with_parts(n: int, k: int) -> Iterator[Composition]:
    """Compositions of ``n`` with exactly ``k`` parts."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n - k + 1, 0, -1):
        for rest in enum_compositions_with_parts(n - first, k - 1):
            yield (first,) + rest


def enum_weak_compositions(n: int, m: int) -> Iterator[WeakComposition]:
    """Weak compositions of ``n`` with exactly ``m`` parts."""
    if m == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in enum_weak_compositions(n - first, m - 1):
            yield (first,) + rest


def enum_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in enum_partitions(n - first, first):
            yield (first,) + rest


def enum_subsets(m: int, size: int) -> Iterator[tuple[int, ...]]:
    """Subsets of ``{1..m}`` with ``size`` elements, lexicographically."""
    return combinations(range(1, m + 1), size)


def subset_indicator(s: Sequence[int], m: int) -> WeakComposition:
    out = [0] * m
    for i in s:
        if not 1 <= i <= m:
            raise ValueError(f"subset element {i} outside 1..{m}")
        out[i - 1] = 1
    return tuple(out)


def multinomial(parts: Sequence[int]) -> int:
    from math import comb

    total, result = 0, 1
    for p in parts:
        total += p
        result *= comb(total, p)
    return result


def enum_words(beta: Sequence[int]) -> Iterator[Word]:
    """All words with ``beta[i-1]`` copies of each letter ``i``.

    Lexicographic order, generated by the classic next-permutation step.
    """
    w = [i + 1 for i, b in enumerate(beta) for _ in range(b)]
    n = len(w)
    yield tuple(w)
    while True:
        j = n - 2
        while j >= 0 and w[j] >= w[j + 1]:
            j -= 1
        if j < 0:
            return
        l = n - 1
        while w[l] <= w[j]:
            l -= 1
        w[j], w[l] = w[l], w[j]
        w[j + 1:] = reversed(w[j + 1:])
        yield tuple(w)


def enum_permutations(n: int) -> Iterator[Word]:
    return enum_words((1,) * n)


@lru_cache(maxsize=None)
def _lex_index_subsets(m: int) -> tuple[tuple[int, ...], ...]:
    """Nonempty subsets of ``range(m)`` as increasing tuples, lexicographic."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], start: int) -> None:
        for j in range(start, m):
            s = prefix + (j,)
            out.append(s)
            rec(s, j + 1)

    rec((), 0)
    return tuple(out)


def enum_omp(
    beta: Sequence[int],
    blocks: int | None = None,
    shape: Sequence[int] | None = None,
) -> Iterator[OrderedMultisetPartition]:
    """Ordered multiset partitions of weight ``beta``.

    At most one of ``blocks`` (exact block count) and ``shape`` (exact block
    sizes) may be given.  With ``beta = (1,)*n`` this enumerates ordered set
    partitions of ``[n]``.
    """
    beta = tuple(beta)
    if any(b < 0 for b in beta):
        raise ValueError(f"weight {beta} has a negative part")
    if blocks is not None and shape is not None:
        raise ValueError("give at most one of blocks= and shape=")
    total = sum(beta)
    if shape is not None:
        shape = tuple(shape)
        if any(a < 1 for a in shape):
            raise ValueError(f"shape {shape} has a nonpositive part")
        if sum(shape) != total:
            raise ValueError(f"shape {shape} does not sum to |beta| = {total}")
    counts = list(beta)
    prefix: list[tuple[int, ...]] = []
    make = OrderedMultisetPartition._trusted

    def remaining_ok(left_blocks: int) -> bool:
        # every copy of a letter must land in a distinct remaining block
        return max(counts, default=0) <= left_blocks

    def rec_shape(idx: int) -> Iterator[OrderedMultisetPartition]:
        if idx == len(shape):
            yield make(prefix)
            return
        avail = [i + 1 for i, c in enumerate(counts) if c]
        for block in combinations(avail, shape[idx]):
            for x in block:
                counts[x - 1] -= 1
            if remaining_ok(len(shape) - idx - 1):
                prefix.append(block)
                yield from rec_shape(idx + 1)
                prefix.pop()
            for x in block:
                counts[x - 1] += 1

    def rec_free(left: int, left_blocks: int | None) -> Iterator[OrderedMultisetPartition]:
        if left == 0:
            if left_blocks is None or left_blocks == 0:
                yield make(prefix)
            return
        if left_blocks is not None and left_blocks == 0:
            return
        avail = [i + 1 for i, c in enumerate(counts) if c]
        for idx in _lex_index_subsets(len(avail)):
            size = len(idx)
            if left_blocks is not None and left - size < left_blocks - 1:
                continue
            block = tuple(avail[j] for j in idx)
            for x in block:
                counts[x - 1] -= 1
            nxt = None if left_blocks is None else left_blocks - 1
            if nxt is None or remaining_ok(nxt):
                prefix.append(block)
                yield from rec_free(left - size, nxt)
                prefix.pop()
            for x in block:
                counts[x - 1] += 1

    if shape is not None:
        if remaining_ok(len(shape)):
            yield from rec_shape(0)
    else:
        if blocks is not None and (blocks < 0 or not remaining_ok(blocks)):
            return
        yield from rec_free(total, blocks)


def enum_osp(n: int, blocks: int | None = None, shape: Sequence[int] | None = None):
    """Ordered set partitions of ``[n]``."""
    return enum_omp((1,) * n, blocks=blocks, shape=shape)


# -- notation ----------------------------------------------------------------

_TOKEN_OK = re.compile(r"^[0-9,]*$")


def _parse_letters(chunk: str, text: str, offset: int, allow_repeats: bool,
                   comma_mode: bool = False) -> tuple[int, ...]:
    if not chunk:
        raise EmptyBlockError("empty block", text, offset)
    if not _TOKEN_OK.match(chunk):
        bad = next(i for i, ch in enumerate(chunk) if ch not in "0123456789,")
        raise MalformedTokenError(f"unexpected character {chunk[bad]!r}", text, offset + bad)
    if comma_mode:
        pieces = chunk.split(",")
        if len(pieces) > 1 and pieces[-1] == "":
            pieces.pop()  # a trailing comma only marks the comma form
        letters, pos = [], offset
        for p in pieces:
            if not p:
                raise MalformedTokenError("empty letter between commas", text, pos)
            letters.append(int(p))
            pos += len(p) + 1
    else:
        letters = [int(ch) for ch in chunk]
    for j, x in enumerate(letters):
        if x < 1:
            raise MalformedTokenError("letters must be positive", text, offset + j)
    if not allow_repeats and len(set(letters)) != len(letters):
        raise RepeatedLetterError(f"repeated letter in block {chunk!r}", text, offset)
    return tuple(letters)


def _split(text: str, sep: str) -> list[tuple[str, int]]:
    """Split whitespace-stripped ``text`` on ``sep``, keeping raw offsets."""
    chunks, cur, start = [], [], None
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch == sep:
            chunks.append(("".join(cur), pos if start is None else start))
            cur, start = [], None
            continue
        if start is None:
            start = pos
        cur.append(ch)
    chunks.append(("".join(cur), len(text) if start is None else start))
    return chunks


def parse_omp(text: str) -> OrderedMultisetPartition:
    """Parse ``"25|1|34"`` or ``"2,5|1|3,4"``; parentheses are optional."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    comma_mode = "," in body
    blocks = [
        tuple(sorted(_parse_letters(chunk, text, off, False, comma_mode)))
        for chunk, off in _split(body, "|")
    ]
    return OrderedMultisetPartition._trusted(blocks)


def parse_segmented(text: str) -> SegmentedWord:
    """Parse ``"725.6.481.39"``; letters within a segment keep their order."""
    body = text.strip()
    comma_mode = "," in body
    segs = [_parse_letters(chunk, text, off, True, comma_mode) for chunk, off in _split(body, ".")]
    return SegmentedWord.from_segments(segs)


def _fmt_letters(letters: Sequence[int], compact: bool) -> str:
    if compact:
        return "".join(str(x) for x in letters)
    return ",".join(str(x) for x in letters)


def _join(parts: list[str], sep: str, compact: bool) -> str:
    out = sep.join(parts)
    if not compact and "," not in out:
        out += ","  # all singletons: mark the comma form explicitly
    return out


def print_omp(mu: Sequence[Sequence[int]]) -> str:
    """Digits when every letter is below 10, otherwise comma-separated.

    Any comma switches the parser to the comma form for the whole text.
    """
    compact = all(x <= 9 for b in mu for x in b)
    return _join([_fmt_letters(b, compact) for b in mu], "|", compact)


def print_segmented(sw: SegmentedWord) -> str:
    compact = all(x <= 9 for x in sw.word)
    return _join([_fmt_letters(s, compact) for s in sw.segments], ".", compact)


def omp_to_json(mu: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(b) for b in mu]


def omp_from_json(data: Sequence[Sequence[int]]) -> OrderedMultisetPartition:
    return OrderedMultisetPartition.from_blocks(data)
