"""Statistics and structural maps on words and ordered multiset partitions."""

from __future__ import annotations

from bisect import bisect_right
from itertools import permutations, product
from typing import Iterator, Sequence

from .partitions import OrderedMultisetPartition, SegmentedWord, Word


def _letters(w) -> Sequence:
    return w.word if isinstance(w, SegmentedWord) else w


def inv_word(w) -> int:
    w = _letters(w)
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descent_set(w) -> tuple[int, ...]:
    """1-based positions ``i`` with ``w_i > w_{i+1}``."""
    w = _letters(w)
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def maj_word(w) -> int:
    w = _letters(w)
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def inv_omp(mu: Sequence[Sequence[int]]) -> int:
    """Pairs (earlier block letter ``j``, later block minimum ``i``) with ``j > i``."""
    total = 0
    for m in range(1, len(mu)):
        low = min(mu[m])
        for block in mu[:m]:
            for j in block:
                if j > low:
                    total += 1
    return total


def rearrangement_class(mu: Sequence[Sequence[int]]) -> Iterator[Word]:
    """All words obtained by permuting letters within each block."""
    for parts in product(*(permutations(b) for b in mu)):
        yield tuple(x for p in parts for x in p)


def segment_blocks(blocks: Sequence[Sequence]) -> list[tuple]:
    """Segments of the minimizing arrangement, built right to left.

    The last segment is its block in increasing order.  Each earlier block
    ``j_1 < ... < j_a`` becomes ``j_{m+1} ... j_a j_1 ... j_m`` where ``m``
    counts the block elements ``<=`` the first letter of the next segment.
    Works for any totally ordered letters.
    """
    k = len(blocks)
    if k == 0:
        return []
    segs: list[tuple] = [()] * k
    segs[-1] = tuple(sorted(blocks[-1]))
    for i in range(k - 2, -1, -1):
        b = sorted(blocks[i])
        m = bisect_right(b, segs[i + 1][0])
        segs[i] = tuple(b[m:] + b[:m])
    return segs


def segmented_word(mu: Sequence[Sequence[int]]) -> SegmentedWord:
    return SegmentedWord.from_segments(segment_blocks(mu))


def minimaj(mu: Sequence[Sequence[int]]) -> int:
    word = [x for seg in segment_blocks(mu) for x in seg]
    return maj_word(word)


def minimaj_brute(mu: Sequence[Sequence[int]]) -> int:
    return min(maj_word(w) for w in rearrangement_class(mu))


def standardize(blocks: Sequence[Sequence[int]]) -> OrderedMultisetPartition:
    """Relabel disjoint integer sets to ``1..N`` preserving relative order."""
    letters = [x for b in blocks for x in b]
    if any(not b for b in blocks):
        raise ValueError("blocks must be nonempty")
    if len(set(letters)) != len(letters):
        raise ValueError("standardization needs pairwise disjoint blocks")
    rank = {x: i + 1 for i, x in enumerate(sorted(letters))}
    return OrderedMultisetPartition.from_blocks([rank[x] for x in b] for b in blocks)


def _cycle_letter(x: int, m: int) -> int:
    if not 1 <= x <= m:
        raise ValueError(f"letter {x} outside alphabet 1..{m}")
    return m if x == 1 else x - 1


def cycle_word(w: Sequence[int], m: int) -> Word:
    """Decrement every letter by one modulo ``m`` (so ``1 -> m``)."""
    return tuple(_cycle_letter(x, m) for x in w)


def cycle_segmented(sw: SegmentedWord, m: int) -> SegmentedWord:
    return SegmentedWord(cycle_word(sw.word, m), sw.segmentation)


def cycle_omp(mu: Sequence[Sequence[int]], m: int) -> OrderedMultisetPartition:
    return OrderedMultisetPartition.from_blocks([_cycle_letter(x, m) for x in b] for b in mu)


def compress_last_block(mu: Sequence[Sequence[int]]) -> OrderedMultisetPartition:
    """Replace the final block by its minimum letter."""
    return OrderedMultisetPartition.from_blocks(list(mu[:-1]) + [(min(mu[-1]),)])
