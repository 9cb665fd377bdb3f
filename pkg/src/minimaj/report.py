"""Verification reports and the parallel map used by the sweeps."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence, TypeVar

from .qpoly import QPoly

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class ReportEntry:
    theorem: str
    instance: str
    lhs: QPoly
    rhs: QPoly
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "pass": self.passed,
        }


def check(theorem: str, instance: str, lhs: QPoly, rhs: QPoly) -> ReportEntry:
    return ReportEntry(theorem, instance, lhs, rhs, lhs == rhs)


def check_bool(theorem: str, instance: str, ok: bool) -> ReportEntry:
    """Entry for a non-polynomial property; sides are 1 for true, 0 for false."""
    return ReportEntry(theorem, instance, QPoly([1]), QPoly([int(bool(ok))]), bool(ok))


def count_check(theorem: str, instance: str, good: int, total: int) -> ReportEntry:
    """Entry for an exhaustive sweep: instances satisfying the property vs. all."""
    return ReportEntry(theorem, instance, QPoly([good]), QPoly([total]), good == total)


@dataclass
class Report:
    entries: list[ReportEntry] = field(default_factory=list)

    def extend(self, more: Iterable[ReportEntry]) -> None:
        self.entries.extend(more)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list[ReportEntry]:
        return [e for e in self.entries if not e.passed]

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> str:
        return json.dumps([e.to_dict() for e in self.entries], indent=2)


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    """Order-preserving map, fanned out over processes when ``jobs > 1``.

    ``fn`` must be a picklable module-level callable.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
