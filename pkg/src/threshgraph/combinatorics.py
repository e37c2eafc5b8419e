"""Permutation statistics and exact Eulerian-number arithmetic.

Positions and values are 1-based throughout. All counts are Python ints, so
nothing overflows.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from ._config import OracleBoundError, oracle_bounds

__all__ = [
    "Permutation",
    "EulerianTable",
    "ascent_set",
    "ascents",
    "descents",
    "eulerian",
    "eulerian_row",
    "count_ascent_start",
    "count_descent_classes",
    "brute_force_permutation_census",
    "begins_with_ascent",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation."""

    entries: tuple[int, ...]
    _inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        entries = tuple(int(v) for v in self.entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"not a permutation of 1..{len(entries)}: {entries}")
        inverse = [0] * len(entries)
        for i, v in enumerate(entries, start=1):
            inverse[v - 1] = i
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_inverse", tuple(inverse))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read ``"24135"`` (single digits) or ``"2,4,1,3,5"``."""
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        if not text.isdigit():
            raise ValueError(f"malformed permutation {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        if len(self.entries) <= 9:
            return "".join(map(str, self.entries))
        return ",".join(map(str, self.entries))

    def at(self, i: int) -> int:
        """Entry at 1-based position ``i``."""
        if not 1 <= i <= len(self.entries):
            raise IndexError(i)
        return self.entries[i - 1]

    def pos(self, v: int) -> int:
        """1-based position of value ``v``; the inverse permutation."""
        if not 1 <= v <= len(self.entries):
            raise IndexError(v)
        return self._inverse[v - 1]


def ascent_set(p: Sequence[int] | Permutation) -> frozenset[int]:
    """Positions ``i`` (1-based) with ``p_i < p_{i+1}``."""
    e = tuple(p)
    return frozenset(i for i in range(1, len(e)) if e[i - 1] < e[i])


def ascents(p: Sequence[int] | Permutation) -> int:
    e = tuple(p)
    return sum(1 for a, b in zip(e, e[1:]) if a < b)


def descents(p: Sequence[int] | Permutation) -> int:
    e = tuple(p)
    return sum(1 for a, b in zip(e, e[1:]) if a > b)


class EulerianTable:
    """Caller-owned memo of Eulerian rows, built by the recurrence

        <n d> = (d+1) <n-1 d> + (n-d) <n-1 d-1>

    from ``<0 0> = 1``. Not synchronized; share one per thread or lock it.
    """

    def __init__(self) -> None:
        # _rows[n][d] = <n d> for 0 <= d <= max(n-1, 0)
        self._rows: list[list[int]] = [[1]]

    def _ensure(self, n: int) -> None:
        while len(self._rows) <= n:
            m = len(self._rows)
            prev = self._rows[-1]

            def at(d: int) -> int:
                return prev[d] if 0 <= d < len(prev) else 0

            self._rows.append([(d + 1) * at(d) + (m - d) * at(d - 1) for d in range(m)])

    def value(self, n: int, k: int) -> int:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        self._ensure(n)
        row = self._rows[n]
        return row[k] if 0 <= k < len(row) else 0

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        if n == 0:
            return ()
        self._ensure(n)
        return tuple(self._rows[n])


def eulerian(n: int, k: int, table: EulerianTable | None = None) -> int:
    """Number of permutations of size ``n`` with exactly ``k`` ascents.

    Out-of-range ``k`` gives 0, and ``eulerian(0, 0) == 1``.
    """
    return (table or EulerianTable()).value(n, k)


def eulerian_row(n: int, table: EulerianTable | None = None) -> tuple[int, ...]:
    """``(<n 0>, ..., <n n-1>)``; empty for ``n == 0``."""
    return (table or EulerianTable()).row(n)


def count_ascent_start(n: int, k: int, table: EulerianTable | None = None) -> int:
    """Permutations of size ``n`` with ``p_1 < p_2`` and exactly ``k`` ascents.

    Equals ``(n-k) <n-1 k-1>``. Only ``1 <= k <= n-1`` is meaningful: every
    such permutation has at least one ascent.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must satisfy 1 <= k <= {n - 1}, got {k}")
    return (n - k) * eulerian(n - 1, k - 1, table)


def count_descent_classes(n: int, d: int, table: EulerianTable | None = None) -> tuple[int, int]:
    """Split the permutations with ``d`` descents by their first step.

    Returns ``(P, M)`` where P counts those beginning with an ascent,
    ``P = (d+1) <n-1 d>``, and ``M = <n d> - P`` those beginning with a
    descent.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= d <= n - 1:
        raise ValueError(f"d must satisfy 0 <= d <= {n - 1}, got {d}")
    table = table or EulerianTable()
    p = (d + 1) * table.value(n - 1, d)
    # descents and ascents are exchanged by symmetry, so <n d> counts either
    return p, table.value(n, d) - p


def brute_force_permutation_census(
    n: int,
    classifier: Callable[[tuple[int, ...]], bool],
    bound: int | None = None,
) -> int:
    """Count permutations of ``1..n`` (as tuples) accepted by ``classifier``.

    Walks all ``n!`` permutations. Refuses ``n`` above the oracle bound.
    """
    limit = oracle_bounds().permutations if bound is None else bound
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > limit:
        raise OracleBoundError(f"permutation census limited to n <= {limit}, got {n}")
    return sum(1 for p in itertools.permutations(range(1, n + 1)) if classifier(p))


def begins_with_ascent(p: Sequence[int]) -> bool:
    return len(p) >= 2 and p[0] < p[1]
