"""Standard creation pairs and the bijection with ascent-marked permutations."""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import Permutation, ascent_set
from .graph import (
    MINUS,
    PLUS,
    LabeledGraph,
    SignWord,
    ThresholdPair,
    construct,
    extract_pair,
)

__all__ = [
    "AscentSelection",
    "RunPartition",
    "is_standard_form",
    "standardize",
    "run_partition",
    "same_graph_pairs",
    "canonical_pair",
    "phi",
    "phi_inverse",
    "selection_word",
]


@dataclass(frozen=True)
class AscentSelection:
    """A permutation starting with an ascent, together with a subset of its ascents."""

    perm: Permutation
    marks: frozenset[int]

    def __post_init__(self) -> None:
        if not isinstance(self.perm, Permutation):
            object.__setattr__(self, "perm", Permutation(tuple(self.perm)))
        object.__setattr__(self, "marks", frozenset(int(m) for m in self.marks))
        e = self.perm.entries
        if len(e) < 2 or e[0] > e[1]:
            raise ValueError(f"permutation {self.perm} does not begin with an ascent")
        stray = self.marks - ascent_set(e)
        if stray:
            raise ValueError(f"marks {sorted(stray)} are not ascents of {self.perm}")

    def __str__(self) -> str:
        return f"{self.perm};{{{','.join(map(str, sorted(self.marks)))}}}"


@dataclass(frozen=True)
class RunPartition:
    """Maximal constant-sign segments of a word.

    ``boundaries`` holds the segment starts followed by the sentinel ``n + 1``;
    ``segments`` holds the 1-based positions of each segment.
    """

    boundaries: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]

    def labels(self, perm: Permutation) -> tuple[frozenset[int], ...]:
        """Vertex labels placed by ``perm`` in each segment."""
        return tuple(frozenset(perm.at(i) for i in seg) for seg in self.segments)


def _require_size(pair: ThresholdPair) -> None:
    if len(pair) < 2:
        raise ValueError(f"standard form needs n >= 2, got n = {len(pair)}")


def is_standard_form(pair: ThresholdPair) -> bool:
    _require_size(pair)
    p, w = pair.perm.entries, pair.word.letters
    if w[0] != w[1]:
        return False
    return all(p[i] < p[i + 1] for i in range(len(p) - 1) if w[i] == w[i + 1])


def run_partition(w: SignWord) -> RunPartition:
    letters = w.letters
    if not letters:
        raise ValueError("run partition needs a non-empty word")
    starts = [1] + [i + 1 for i in range(1, len(letters)) if letters[i] != letters[i - 1]]
    boundaries = tuple(starts) + (len(letters) + 1,)
    segments = tuple(tuple(range(a, b)) for a, b in zip(boundaries, boundaries[1:]))
    return RunPartition(boundaries, segments)


def standardize(pair: ThresholdPair) -> ThresholdPair:
    """Copy letter 2 onto letter 1, then sort the permutation inside each run.

    Sorted runs are the fixpoint of swapping out-of-order neighbours within a
    run, and every such swap leaves the constructed graph unchanged.
    """
    _require_size(pair)
    word = pair.word.with_first(pair.word.letters[1])
    entries = list(pair.perm.entries)
    bounds = run_partition(word).boundaries
    for a, b in zip(bounds, bounds[1:]):
        entries[a - 1 : b - 1] = sorted(entries[a - 1 : b - 1])
    return ThresholdPair(Permutation(tuple(entries)), word)


def same_graph_pairs(p: ThresholdPair, q: ThresholdPair) -> bool:
    """Decide ``construct(p) == construct(q)`` from the pairs alone.

    (a) the words agree from position 2 on;
    (b) for every vertex, with ``j`` and ``k`` its positions in the two
        permutations, either one of them is 1 and the word is constant on
        ``2..max(j, k)``, or the word is constant on ``min(j, k)..max(j, k)``.
    First letters are normalized to the second before checking (b).
    """
    n = len(p)
    if len(q) != n:
        raise ValueError(f"pair sizes differ: {n} != {len(q)}")
    if n < 2:
        raise ValueError(f"pair comparison needs n >= 2, got n = {n}")
    w, u = p.word.letters, q.word.letters
    if w[1:] != u[1:]:
        return False
    w = (w[1],) + w[1:]
    # run_id[l] is constant exactly on maximal runs, so "w constant on [a, b]"
    # reduces to run_id[a] == run_id[b]
    run_id = [0] * n
    for i in range(1, n):
        run_id[i] = run_id[i - 1] + (w[i] != w[i - 1])
    for v in range(1, n + 1):
        j, k = p.perm.pos(v), q.perm.pos(v)
        lo, hi = min(j, k), max(j, k)
        if lo == 1 and run_id[1] == run_id[hi - 1]:
            continue
        if run_id[lo - 1] == run_id[hi - 1]:
            continue
        return False
    return True


def canonical_pair(g: LabeledGraph) -> ThresholdPair:
    """The unique standard-form pair presenting ``g`` (``n >= 2``)."""
    if g.n < 2:
        raise ValueError(f"canonical pair needs n >= 2, got n = {g.n}")
    return standardize(extract_pair(g))


def phi(g: LabeledGraph) -> AscentSelection:
    """Map a threshold graph to ``(pi, A)``: ``pi`` is its standard permutation,
    ``A`` the positions ``2 <= i <= n-1`` where the word repeats, plus 1 when
    the word starts with ``+1``."""
    pair = canonical_pair(g)
    w = pair.word.letters
    marks = {i for i in range(2, g.n) if w[i - 1] == w[i]}
    if w[0] == PLUS:
        marks.add(1)
    return AscentSelection(pair.perm, frozenset(marks))


def selection_word(sel: AscentSelection) -> SignWord:
    """Rebuild the standard word: ``w_1 = w_2 = +1`` iff ``1`` is marked, then
    ``w_{k+1} = w_k`` for marked ``k`` and ``-w_k`` otherwise."""
    n = len(sel.perm)
    first = PLUS if 1 in sel.marks else MINUS
    letters = [first, first]
    for k in range(2, n):
        letters.append(letters[-1] if k in sel.marks else -letters[-1])
    return SignWord(tuple(letters[:n]))


def phi_inverse(sel: AscentSelection) -> LabeledGraph:
    return construct(ThresholdPair(sel.perm, selection_word(sel)))
