"""Homology classes of embedded symplectic disks in blowups of B^4.

A class ``sum n_j e_j`` is stored as the multiset of its positive coefficients.
Removing its neighbourhood realizes smooth surgery with coefficient
``r = sum n_j^2`` on the boundary knot, and the knot's slice genus is forced to
``sum n_j (n_j - 1) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from fillsurg import kernels

__all__ = [
    "DiskClass",
    "NoUnitPart",
    "ImpossibleInput",
    "PUBLISHED_GAP_LIST",
    "surgery_coefficient",
    "genus_of",
    "blow_down",
    "blow_up_point",
    "consistent_classes",
    "gap_set",
    "GapReport",
    "gap_report",
    "mu_bounds",
    "strong_fill_predicate",
    "min_coefficient_for_genus",
]

# r-values published as "every sum-of-squares representation uses a 1".
PUBLISHED_GAP_LIST = frozenset({1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19})


class NoUnitPart(ValueError):
    pass


class ImpossibleInput(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DiskClass:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError(f"disk class coefficients must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> DiskClass:
        text = text.strip()
        if not text or text == "-":
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad disk class {text!r}: {exc}") from exc

    @property
    def surgery_coefficient(self) -> int:
        return sum(p * p for p in self.parts)

    @property
    def genus(self) -> int:
        return sum(p * (p - 1) for p in self.parts) // 2

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def _as_class(d: DiskClass | Iterable[int]) -> DiskClass:
    return d if isinstance(d, DiskClass) else DiskClass(tuple(d))


def surgery_coefficient(d: DiskClass | Iterable[int]) -> int:
    return _as_class(d).surgery_coefficient


def genus_of(d: DiskClass | Iterable[int]) -> int:
    return _as_class(d).genus


def blow_down(d: DiskClass | Iterable[int]) -> DiskClass:
    d = _as_class(d)
    if 1 not in d.parts:
        raise NoUnitPart(f"class {{{d}}} has no coefficient equal to 1")
    parts = list(d.parts)
    parts.remove(1)
    return DiskClass(tuple(parts))


def blow_up_point(d: DiskClass | Iterable[int]) -> DiskClass:
    d = _as_class(d)
    return DiskClass(d.parts + (1,))


def consistent_classes(r: int, g: int) -> list[DiskClass]:
    """Every class with sum n_j^2 = r and sum n_j (n_j - 1) = 2g, sorted.

    The two constraints fix sum n_j = r - 2g, so this is an exhaustive search
    over partitions of r - 2g whose squares add up to r.
    """
    if r < 0 or g < 0:
        raise ValueError("r and g must be non-negative")
    s = r - 2 * g
    if s < 0:
        return []
    return sorted(DiskClass(p) for p in kernels.square_partitions(r, s))


def gap_set(limit: int) -> set[int]:
    """r in [1, limit] with no sum-of-squares representation avoiding 1.

    Equivalently the positive integers outside the additive monoid generated
    by {4, 9, 16, ...}.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    table = kernels.square_sum_table(limit, 2)
    return {r for r in range(1, limit + 1) if not table[r]}


@dataclass(frozen=True)
class GapReport:
    limit: int
    computed: frozenset[int]
    published: frozenset[int]

    @property
    def missing_from_published(self) -> frozenset[int]:
        return self.computed - self.published

    @property
    def not_computed(self) -> frozenset[int]:
        return (self.published & frozenset(range(1, self.limit + 1))) - self.computed

    @property
    def discrepancy(self) -> bool:
        return bool(self.missing_from_published or self.not_computed)


def gap_report(limit: int) -> GapReport:
    return GapReport(limit, frozenset(gap_set(limit)), PUBLISHED_GAP_LIST)


def mu_bounds(g: int, slice_disk_exists: bool = False) -> tuple[int, int]:
    """Effective (lower, upper) bounds on the minimal fillable coefficient for slice genus g.

    For g > 0 the lower bound 2g is strict, so 2g + 1 is reported.  For g = 0
    the disk is an honest slice disk and both bounds are 0; the flag is kept
    for callers that track whether a symplectic slice disk is known.
    """
    if g < 0:
        raise ValueError("genus must be non-negative")
    if g == 0:
        return (0, 0)
    return (2 * g + 1, 4 * g)


def strong_fill_predicate(r: int, slice: bool) -> bool:
    """Whether a weak filling of the r-surgery deforms to a strong one.

    r != 0: the meridian dies in real homology of the surgered manifold.
    r == 0: the disk sits in B^4 itself, where the form is exact; this needs
    the knot to be slice, and r == 0 without a slice disk cannot be fillable.
    """
    if r < 0:
        raise ValueError("surgery coefficient must be non-negative")
    if r != 0:
        return True
    if not slice:
        raise ImpossibleInput("a fillable 0-surgery forces the knot to be slice")
    return True


def min_coefficient_for_genus(g: int) -> int:
    """Least r = sum n_j^2 over classes with sum n_j (n_j - 1) = 2g.

    Any fillable coefficient of a knot with slice genus g is at least this.
    Unit parts only add to r, so the minimum is over classes without 1s; for
    g > 0 this refines the bound 2g + 1 (e.g. g = 2 gives 8).
    """
    if g < 0:
        raise ValueError("genus must be non-negative")
    if g == 0:
        return 0
    best = 4 * g  # g nodes
    for r in range(2 * g + 1, 4 * g):
        if any(1 not in c.parts for c in consistent_classes(r, g)):
            return r
    return best
