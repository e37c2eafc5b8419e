"""Labeled graphs on ``1..n``, creation pairs, and threshold recognition."""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from .combinatorics import Permutation

__all__ = [
    "SignWord",
    "ThresholdPair",
    "LabeledGraph",
    "Witness",
    "NotThresholdError",
    "construct",
    "neighborhoods",
    "is_threshold",
    "forbidden_witness",
    "extract_pair",
]

PLUS, MINUS = 1, -1
_SIGN_CHARS = {"+": PLUS, "-": MINUS, "−": MINUS}


@dataclass(frozen=True)
class SignWord:
    """A word over ``{+1, -1}``; letter ``i`` says whether vertex ``i`` dominates."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        letters = tuple(int(x) for x in self.letters)
        if any(x not in (PLUS, MINUS) for x in letters):
            raise ValueError(f"sign word letters must be +1 or -1: {letters}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> SignWord:
        try:
            return cls(tuple(_SIGN_CHARS[c] for c in text.strip()))
        except KeyError as exc:
            raise ValueError(f"malformed sign word {text!r}") from exc

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join("+" if x == PLUS else "-" for x in self.letters)

    def at(self, i: int) -> int:
        """Letter at 1-based position ``i``."""
        if not 1 <= i <= len(self.letters):
            raise IndexError(i)
        return self.letters[i - 1]

    def with_first(self, letter: int) -> SignWord:
        return SignWord((letter,) + self.letters[1:])


@dataclass(frozen=True)
class ThresholdPair:
    perm: Permutation
    word: SignWord

    def __post_init__(self) -> None:
        if not isinstance(self.perm, Permutation):
            object.__setattr__(self, "perm", Permutation(tuple(self.perm)))
        if not isinstance(self.word, SignWord):
            object.__setattr__(self, "word", SignWord(tuple(self.word)))
        if len(self.perm) != len(self.word):
            raise ValueError(
                f"permutation and word lengths differ: {len(self.perm)} != {len(self.word)}"
            )

    @classmethod
    def parse(cls, text: str) -> ThresholdPair:
        """Read the ``"24135;++---"`` form."""
        perm, sep, word = text.strip().partition(";")
        if not sep:
            raise ValueError(f"pair must look like 'perm;word', got {text!r}")
        return cls(Permutation.parse(perm), SignWord.parse(word))

    def __len__(self) -> int:
        return len(self.perm)

    def __str__(self) -> str:
        return f"{self.perm};{self.word}"


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on vertices ``1..n``. Equality compares labeled edge sets."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        normalized = set()
        for a, b in self.edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if a > b:
                a, b = b, a
            if a < 1 or b > self.n:
                raise ValueError(f"edge ({a}, {b}) outside 1..{self.n}")
            normalized.add((a, b))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def _trusted(cls, n: int, edges: frozenset[tuple[int, int]]) -> LabeledGraph:
        # edges already normalized (a < b, in range); skips the validation loop
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", edges)
        return g

    @classmethod
    def complete(cls, n: int) -> LabeledGraph:
        return cls(n, frozenset(itertools.combinations(range(1, n + 1), 2)))

    @classmethod
    def empty(cls, n: int) -> LabeledGraph:
        return cls(n)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> LabeledGraph:
        """Inverse of :attr:`mask`."""
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        edges = [ab for bit, ab in enumerate(_pairs_in_mask_order(n)) if mask >> bit & 1]
        return cls._trusted(n, frozenset(edges))

    @cached_property
    def mask(self) -> int:
        """Edge set as an integer; pair ``a < b`` sits at bit ``(b-1)(b-2)/2 + (a-1)``.

        This is the column-major upper-triangle order graph6 uses.
        """
        m = 0
        for a, b in self.edges:
            m |= 1 << ((b - 1) * (b - 2) // 2 + (a - 1))
        return m

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbor bitsets; bit ``v-1`` of entry ``u-1`` marks edge ``uv``."""
        adj = [0] * self.n
        for a, b in self.edges:
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
        return tuple(adj)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((adj.bit_count() for adj in self.adjacency), reverse=True))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def _pairs_in_mask_order(n: int) -> Iterable[tuple[int, int]]:
    for b in range(2, n + 1):
        for a in range(1, b):
            yield a, b


@dataclass(frozen=True)
class Witness:
    """Four vertices inducing one of the forbidden patterns ``2K2``, ``P4``, ``C4``."""

    vertices: tuple[int, int, int, int]
    pattern: str


class NotThresholdError(ValueError):
    def __init__(self, witness: Witness | None):
        self.witness = witness
        detail = f": {witness.pattern} on {list(witness.vertices)}" if witness else ""
        super().__init__(f"graph is not threshold{detail}")


def construct(pair: ThresholdPair) -> LabeledGraph:
    """Insert ``perm_1, ..., perm_n`` in order; ``+1`` joins the new vertex to all
    earlier ones, ``-1`` leaves it isolated. The first letter is never read."""
    perm = pair.perm.entries
    edges = set()
    for i in range(1, len(perm)):
        if pair.word.letters[i] == PLUS:
            v = perm[i]
            edges.update((u, v) if u < v else (v, u) for u in perm[:i])
    return LabeledGraph._trusted(len(perm), frozenset(edges))


def neighborhoods(g: LabeledGraph) -> dict[int, frozenset[int]]:
    nbrs: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    for a, b in g.edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    return {v: frozenset(s) for v, s in nbrs.items()}


def _peel(g: LabeledGraph) -> list[tuple[int, int]] | None:
    """Peel isolated/dominating vertices, largest eligible label first.

    Returns ``(vertex, letter)`` in removal order, or None if peeling gets stuck.
    """
    adj = g.adjacency
    alive = (1 << g.n) - 1
    order = []
    while alive:
        chosen = None
        for v in range(g.n, 0, -1):
            bit = 1 << (v - 1)
            if not alive & bit:
                continue
            live_nbrs = adj[v - 1] & alive
            if live_nbrs == 0:
                chosen = (v, MINUS)
                break
            if live_nbrs == alive ^ bit:
                chosen = (v, PLUS)
                break
        if chosen is None:
            return None
        order.append(chosen)
        alive ^= 1 << (chosen[0] - 1)
    return order


def is_threshold(g: LabeledGraph) -> bool:
    """True iff repeatedly deleting isolated or dominating vertices empties ``g``."""
    return _peel(g) is not None


_PATTERNS = {
    (2, (1, 1, 1, 1)): "2K2",
    (3, (1, 1, 2, 2)): "P4",
    (4, (2, 2, 2, 2)): "C4",
}


def forbidden_witness(g: LabeledGraph) -> Witness | None:
    """First 4-subset (lexicographic) inducing 2K2, P4 or C4, else None."""
    adj = g.adjacency
    for quad in itertools.combinations(range(1, g.n + 1), 4):
        sub = sum(1 << (v - 1) for v in quad)
        degs = tuple(sorted((adj[v - 1] & sub).bit_count() for v in quad))
        pattern = _PATTERNS.get((sum(degs) // 2, degs))
        if pattern is not None:
            return Witness(quad, pattern)
    return None


def extract_pair(g: LabeledGraph) -> ThresholdPair:
    """A creation pair for a threshold graph, found by peeling.

    Vertices come off largest eligible label first and fill the permutation
    from the right. A lone last vertex is recorded as ``-1``; for ``n >= 2``
    the first letter is then copied from the second.
    """
    order = _peel(g)
    if order is None:
        raise NotThresholdError(forbidden_witness(g))
    order.reverse()
    perm = tuple(v for v, _ in order)
    letters = [s for _, s in order]
    if len(letters) >= 2:
        letters[0] = letters[1]
    return ThresholdPair(Permutation(perm), SignWord(tuple(letters)))
