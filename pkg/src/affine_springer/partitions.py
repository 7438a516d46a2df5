"""Integer partitions, conjugation and the dominance order."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, zip_longest
from typing import Iterator, Sequence

from .errors import DomainError

__all__ = [
    "Partition",
    "conjugate",
    "dominance_leq",
    "partitions_of",
    "partition_identity_values",
    "verify_partition_identity",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers (no trailing zeros)."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_unsorted(cls, values: Sequence[int]) -> "Partition":
        return cls(sorted((v for v in values if v), reverse=True))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram: ``p'_i = #{j : p_j >= i}``."""
    if not p.parts:
        return Partition()
    return Partition([sum(1 for x in p.parts if x >= i) for i in range(1, p.parts[0] + 1)])


def dominance_leq(mu: Partition, nu: Partition) -> bool:
    """True iff every prefix sum of ``mu`` is at most the matching prefix sum of ``nu``."""
    if mu.n != nu.n:
        raise DomainError(f"cannot compare partitions of {mu.n} and {nu.n}")
    pairs = zip_longest(accumulate(mu.parts), accumulate(nu.parts), fillvalue=mu.n)
    return all(a <= b for a, b in pairs)


def partitions_of(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise DomainError("n must be non-negative")
    largest = n if largest is None else largest

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, largest):
        yield Partition(parts)


def _sum_of_squares(p: Partition) -> int:
    return sum(x * x for x in p.parts)


def _pairwise_min_of_columns(p: Partition) -> int:
    # column heights read off the cell set, independently of conjugate()
    cells = {(row, col) for row, length in enumerate(p.parts) for col in range(length)}
    heights: dict[int, int] = {}
    for _, col in cells:
        heights[col] = heights.get(col, 0) + 1
    h = list(heights.values())
    return sum(min(a, b) for a in h for b in h)


def _odd_weighted_conjugate(p: Partition) -> int:
    return sum((2 * i - 1) * x for i, x in enumerate(conjugate(p).parts, start=1))


def partition_identity_values(p: Partition) -> tuple[int, int, int]:
    """The three sides of ``sum nu_i^2 = sum_ij min(nu'_i, nu'_j) = sum (2i-1) nu'_i``."""
    return _sum_of_squares(p), _pairwise_min_of_columns(p), _odd_weighted_conjugate(p)


def verify_partition_identity(p: Partition) -> bool:
    a, b, c = partition_identity_values(p)
    return a == b == c
