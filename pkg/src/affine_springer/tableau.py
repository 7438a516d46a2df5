"""The left-aligned tableau attached to a parabolic subgroup of SL_n.

Row ``k`` holds the integers ``d_{k-1} < x <= d_k`` in increasing order.  The
entry in column ``i`` and ``j``-th position from the top is ``f(i, j)``.  All
indices (rows, columns, entries) are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .errors import DomainError
from .partitions import Partition

__all__ = [
    "ParabolicDescriptor",
    "ParabolicTableau",
    "build_tableau",
    "all_descriptors",
    "dim_g_mod_p",
]


@dataclass(frozen=True)
class ParabolicDescriptor:
    """Size ``n`` and the positions ``0 < d_1 < ... < d_{r-1} < n`` of the omitted simple roots."""

    n: int
    d: tuple[int, ...] = ()

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        object.__setattr__(self, "d", d)
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        if any(not 0 < x < self.n for x in d) or any(a >= b for a, b in zip(d, d[1:])):
            raise DomainError(f"d must be strictly increasing inside (0, {self.n}): {d}")

    @property
    def breaks(self) -> tuple[int, ...]:
        """The full sequence ``0 = d_0 < d_1 < ... < d_r = n``."""
        return (0,) + self.d + (self.n,)

    @property
    def lam(self) -> tuple[int, ...]:
        b = self.breaks
        return tuple(b[i] - b[i - 1] for i in range(1, len(b)))

    @property
    def simple_roots(self) -> frozenset[int]:
        """S_P: indices of the simple roots of the Levi factor."""
        return frozenset(range(1, self.n)) - set(self.d)

    def block_of(self, x: int) -> int:
        """1-based row of the tableau containing ``x``."""
        for k, bound in enumerate(self.breaks[1:], start=1):
            if x <= bound:
                return k
        raise DomainError(f"{x} is not in 1..{self.n}")

    def __str__(self) -> str:
        return f"n={self.n}, d=({','.join(map(str, self.d))})"


@dataclass(frozen=True)
class ParabolicTableau:
    descriptor: ParabolicDescriptor
    lam: tuple[int, ...]
    nu: Partition
    s: int
    r: int
    rows: tuple[tuple[int, ...], ...]
    columns: tuple[tuple[int, ...], ...]
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    red: tuple[tuple[int, ...], ...]
    blue: tuple[tuple[int, ...], ...]
    l_seq: tuple[int, ...]
    m_seq: tuple[int, ...]
    t_seq: tuple[int, ...]
    iota: dict[int, int] = field(hash=False, compare=False)
    position: dict[int, tuple[int, int]] = field(hash=False, compare=False)

    @property
    def n(self) -> int:
        return self.descriptor.n

    def f(self, i: int, j: int) -> int:
        """Entry of column ``i``, ``j``-th from the top."""
        if not (1 <= i <= self.s and 1 <= j <= self.nu[i - 1]):
            raise DomainError(f"f({i},{j}) is outside the tableau")
        return self.columns[i - 1][j - 1]

    def row_of(self, x: int) -> int:
        return self.descriptor.block_of(x)

    @property
    def red_set(self) -> frozenset[int]:
        return frozenset(x for row in self.red for x in row)

    @property
    def blue_set(self) -> frozenset[int]:
        return frozenset(x for row in self.blue for x in row)

    def red_closed_form(self, k: int) -> tuple[int, ...]:
        """``{x : d_{k-1} < x <= d_k - max(lam_j, j < k)}`` (empty when the bound undershoots)."""
        b = self.descriptor.breaks
        cap = max(self.lam[: k - 1], default=0)
        return tuple(range(b[k - 1] + 1, b[k] - cap + 1))

    def closed_form_mismatches(self) -> list[int]:
        """Rows whose closed-form Red set differs from the smallest-entries definition."""
        return [k for k in range(1, self.r + 1) if self.red_closed_form(k) != self.red[k - 1]]

    def render(self) -> str:
        width = len(str(self.n))
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": list(self.descriptor.d),
            "lambda": list(self.lam),
            "nu": list(self.nu.parts),
            "r": self.r,
            "s": self.s,
            "rows": [list(row) for row in self.rows],
            "columns": [list(col) for col in self.columns],
            "S1": list(self.s1),
            "S2": list(self.s2),
            "red": [list(x) for x in self.red],
            "blue": [list(x) for x in self.blue],
            "l": list(self.l_seq),
            "m": list(self.m_seq),
            "t": list(self.t_seq),
            "iota": {str(k): v for k, v in sorted(self.iota.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def build_tableau(desc: ParabolicDescriptor | int, d: Sequence[int] | None = None) -> ParabolicTableau:
    """Fill the tableau of ``desc`` and derive every combinatorial datum from it.

    ``build_tableau(17, (1, 5, 9, 11))`` is accepted as shorthand.
    """
    if not isinstance(desc, ParabolicDescriptor):
        desc = ParabolicDescriptor(desc, tuple(d or ()))
    b = desc.breaks
    rows = tuple(tuple(range(b[k - 1] + 1, b[k] + 1)) for k in range(1, len(b)))
    lam = desc.lam
    s = max(lam)
    columns = tuple(tuple(row[i] for row in rows if len(row) > i) for i in range(s))
    nu = Partition([len(col) for col in columns])
    position = {x: (i, j) for i, col in enumerate(columns, 1) for j, x in enumerate(col, 1)}

    s1 = tuple(sorted(col[0] for col in columns))
    s1_set = set(s1)
    red, blue = [], []
    for row in rows:
        k = sum(1 for x in row if x in s1_set)
        red.append(row[:k])
        blue.append(row[k:])
    s2_rows = [tuple(x for x in row if x not in s1_set) for row in rows]

    l_seq = tuple(sorted(x for part in red for x in part))
    m_seq = tuple(x for part in reversed(blue) for x in part)
    # row-aligned with m: each row's S2 entries in increasing order
    t_seq = tuple(x for part in reversed(s2_rows) for x in part)
    iota = {x: columns[i - 1][j - 2] for x, (i, j) in position.items() if j > 1}

    return ParabolicTableau(
        descriptor=desc,
        lam=lam,
        nu=nu,
        s=s,
        r=len(rows),
        rows=rows,
        columns=columns,
        s1=s1,
        s2=tuple(sorted(x for part in s2_rows for x in part)),
        red=tuple(red),
        blue=tuple(blue),
        l_seq=l_seq,
        m_seq=m_seq,
        t_seq=t_seq,
        iota=iota,
        position=position,
    )


def dim_g_mod_p(tab: ParabolicTableau) -> int:
    lam = tab.lam
    cross = sum(a * b for a, b in combinations(lam, 2))
    assert 2 * cross == tab.n**2 - sum(x * x for x in lam)
    return cross


def all_descriptors(n: int) -> Iterator[ParabolicDescriptor]:
    """Every parabolic of SL_n, one per subset of {1, ..., n-1}, P = G first."""
    for size in range(n):
        for d in combinations(range(1, n), size):
            yield ParabolicDescriptor(n, d)
