"""Switch maps ``t_i``: descent-preserving involutions that swap the
multiplicities of the letters ``i`` and ``i+1``.

On plain words, adjacent ``(i+1) i`` pairs are frozen and every maximal
unfrozen run ``i^a (i+1)^b`` becomes ``i^b (i+1)^a``.  On ordered multiset
partitions the same idea runs on the segmented word ``w(mu)``, where the
frozen units are *i-drops* and the segmentation next to each rewritten run
has to be adjusted so the result is again in the image of ``w``.

Positions are 0-based absolute letter indices.  Intervals are half-open.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import OrderedMultisetPartition, SegmentedWord, Word
from .statistics import segmented_word

Interval = tuple[int, int]


class DecorationError(ValueError):
    """The segmented word is not shaped like an image of ``w``."""


def word_switch(w, i: int) -> Word:
    w = tuple(w)
    n = len(w)
    frozen = [False] * n
    for p in range(n - 1):
        if w[p] == i + 1 and w[p + 1] == i:
            frozen[p] = frozen[p + 1] = True
    out = list(w)
    p = 0
    while p < n:
        if frozen[p] or w[p] not in (i, i + 1):
            p += 1
            continue
        q = p
        while q < n and not frozen[q] and w[q] in (i, i + 1):
            q += 1
        a = sum(1 for x in w[p:q] if x == i)
        b = q - p - a
        out[p:q] = [i] * b + [i + 1] * a
        p = q
    return tuple(out)


def find_drops(sw: SegmentedWord, i: int) -> list[Interval]:
    """All i-drops, left to right.

    An i-drop is ``(i+1) j_1 ... j_l i`` with no ``j`` in ``{i, i+1}`` where
    either the whole thing or everything but the final ``i`` is a segment.
    """
    segs = sw.segments
    out = []
    offset = 0
    for idx, seg in enumerate(segs):
        if seg[0] == i + 1:
            tail = seg[1:]
            if tail and tail[-1] == i and all(x not in (i, i + 1) for x in tail[:-1]):
                out.append((offset, offset + len(seg)))
            elif (
                all(x not in (i, i + 1) for x in tail)
                and idx + 1 < len(segs)
                and segs[idx + 1][0] == i
            ):
                out.append((offset, offset + len(seg) + 1))
        offset += len(seg)
    return out


@dataclass(frozen=True)
class Decoration:
    """An i-decorated segmented word: underlined drops, overlined runs."""

    base: SegmentedWord
    color: int
    drops: tuple[Interval, ...]
    overlines: tuple[Interval, ...]

    def run_counts(self, run: Interval) -> tuple[int, int]:
        """``(a, b)`` for an overlined run of the form ``i^a (i+1)^b``."""
        s, e = run
        a = sum(1 for x in self.base.word[s:e] if x == self.color)
        return a, e - s - a

    def render(self) -> str:
        """Plain-text rendering: ``[..]`` marks drops, ``{..}`` overlines."""
        word, cuts = self.base.word, self.base.cuts
        opens = {s: "[" for s, _ in self.drops} | {s: "{" for s, _ in self.overlines}
        closes = {e: "]" for _, e in self.drops} | {e: "}" for _, e in self.overlines}
        out = []
        for p, x in enumerate(word):
            out.append(opens.get(p, ""))
            out.append(str(x))
            out.append(closes.get(p + 1, ""))
            if p in cuts:
                out.append(".")
        return "".join(out)


def decorate(sw: SegmentedWord, i: int) -> Decoration:
    drops = find_drops(sw, i)
    word = sw.word
    n = len(word)
    in_drop = [False] * n
    for s, e in drops:
        for p in range(s, e):
            if in_drop[p]:
                raise DecorationError(f"overlapping {i}-drops in {sw}")
            in_drop[p] = True
    overlines = []
    p = 0
    while p < n:
        if in_drop[p] or word[p] not in (i, i + 1):
            p += 1
            continue
        q = p
        while q < n and not in_drop[q] and word[q] in (i, i + 1):
            q += 1
        overlines.append((p, q))
        p = q
    cuts = sw.cuts
    for s, e in overlines:
        run = word[s:e]
        a = sum(1 for x in run if x == i)
        if run != (i,) * a + (i + 1,) * (e - s - a):
            raise DecorationError(f"overline {run} in {sw} is not of the form i^a (i+1)^b")
        for p in range(s, e - 1):
            if run[p - s] == run[p - s + 1] and p not in cuts:
                raise DecorationError(f"repeated letter inside a segment of {sw}")
    return Decoration(sw, i, tuple(drops), tuple(overlines))


def switch_segmented(dec: Decoration) -> SegmentedWord:
    """Apply the three-case run rewriting to a decorated segmented word."""
    i = dec.color
    letters = list(dec.base.word)
    cuts = set(dec.base.cuts)
    drop_ends = {e for _, e in dec.drops}
    for s, e in dec.overlines:
        a, b = dec.run_counts((s, e))
        mid_cut = a > 0 and b > 0 and (s + a - 1) in cuts
        letters[s:e] = [i] * b + [i + 1] * a
        for p in range(s, e - 1):
            cuts.discard(p)
        for p in range(s, e - 1):
            boundary = a > 0 and b > 0 and p == s + b - 1
            if not boundary or mid_cut:
                cuts.add(p)
        if (a == 0 or b == 0) and s in drop_ends:
            # run directly after a drop: the dot on one side of the drop's
            # final i moves to the other side, unless both are present
            d = s - 1
            before, after = (d - 1) in cuts, d in cuts
            if before != after:
                cuts.symmetric_difference_update({d - 1, d})
    bounds = sorted(cuts) + [len(letters) - 1]
    segmentation, prev = [], -1
    for c in bounds:
        segmentation.append(c - prev)
        prev = c
    return SegmentedWord(tuple(letters), tuple(segmentation))


def omp_switch(mu, i: int, validate: bool = False) -> OrderedMultisetPartition:
    """The switch map ``t_i`` on an ordered multiset partition.

    With ``validate=True`` the result is checked to satisfy
    ``w(t_i(mu)) == w'`` (the rewritten segmented word).
    """
    if i < 1:
        raise ValueError(f"switch index must be >= 1, got {i}")
    if not mu:
        return OrderedMultisetPartition._trusted(())
    new = switch_segmented(decorate(segmented_word(mu), i))
    blocks = []
    for seg in new.segments:
        if len(set(seg)) != len(seg):
            raise DecorationError(f"switch produced repeated letter in segment {seg}")
        blocks.append(tuple(sorted(seg)))
    out = OrderedMultisetPartition._trusted(blocks)
    if validate and segmented_word(out) != new:
        raise AssertionError(f"w(t_{i}({mu})) = {segmented_word(out)} differs from {new}")
    return out
