"""Streaming every labeled threshold graph, exact counts, and census oracles.

Graphs are streamed through their ascent selections, so no graph is seen
twice and no dedup set is kept.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter, defaultdict
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from . import _kernels
from ._config import OracleBoundError, oracle_bounds
from .bijection import (
    AscentSelection,
    is_standard_form,
    phi,
    phi_inverse,
    run_partition,
    same_graph_pairs,
    standardize,
)
from .combinatorics import (
    EulerianTable,
    Permutation,
    ascent_set,
    ascents,
    count_ascent_start,
    count_descent_classes,
    eulerian,
    eulerian_row,
)
from .graph import (
    MINUS,
    PLUS,
    LabeledGraph,
    SignWord,
    ThresholdPair,
    construct,
    forbidden_witness,
    is_threshold,
)

__all__ = [
    "prefixes",
    "partition_prefixes",
    "enumerate_selections",
    "enumerate_threshold_graphs",
    "count_labeled",
    "labeled_count_with_conventions",
    "count_unlabeled",
    "unlabeled_classes",
    "class_representative",
    "selection_weight_sum",
    "brute_force_graph_census",
    "CheckResult",
    "VerificationReport",
    "verify",
]

#: largest n for which ``verify`` walks the full enumeration
ENUMERATION_VERIFY_MAX = 7
#: largest n for which ``verify`` compares all pair-pairs exhaustively
PAIR_EXHAUSTIVE_MAX = 4
#: largest n for which ``verify`` groups every pair by its graph
PAIR_GROUPING_MAX = 5


def _require_n2(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")


def prefixes(n: int) -> list[tuple[int, int]]:
    """Ascending two-letter starts ``(a, b)``, ``a < b``, in lexicographic order."""
    _require_n2(n)
    return list(itertools.combinations(range(1, n + 1), 2))


def partition_prefixes(n: int, parts: int) -> list[list[tuple[int, int]]]:
    """Split :func:`prefixes` into at most ``parts`` contiguous blocks.

    Concatenating the blocks' streams in order reproduces the canonical order.
    """
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    allp = prefixes(n)
    size, extra = divmod(len(allp), parts)
    blocks, start = [], 0
    for i in range(parts):
        stop = start + size + (i < extra)
        if stop > start:
            blocks.append(allp[start:stop])
        start = stop
    return blocks


def _perms_with_prefix(n: int, prefix: tuple[int, int]) -> Iterator[tuple[int, ...]]:
    a, b = prefix
    rest = [v for v in range(1, n + 1) if v != a and v != b]
    for tail in itertools.permutations(rest):
        yield (a, b) + tail


def enumerate_selections(
    n: int, prefix_block: Sequence[tuple[int, int]] | None = None
) -> Iterator[AscentSelection]:
    """Every ``(pi, A)`` with ``pi_1 < pi_2`` and ``A`` a subset of the ascents.

    Order: ``pi`` lexicographically, then ``A`` as a binary counter over the
    ascents of ``pi`` (smallest ascent is the low bit). ``prefix_block``
    restricts to permutations with the given first two entries.
    """
    _require_n2(n)
    block = prefixes(n) if prefix_block is None else prefix_block
    for prefix in block:
        if not (1 <= prefix[0] < prefix[1] <= n):
            raise ValueError(f"bad prefix {prefix} for n = {n}")
        for entries in _perms_with_prefix(n, prefix):
            perm = Permutation(entries)
            asc = sorted(ascent_set(entries))
            for code in range(1 << len(asc)):
                marks = frozenset(a for bit, a in enumerate(asc) if code >> bit & 1)
                yield AscentSelection(perm, marks)


def enumerate_threshold_graphs(
    n: int, prefix_block: Sequence[tuple[int, int]] | None = None
) -> Iterator[LabeledGraph]:
    for sel in enumerate_selections(n, prefix_block):
        yield phi_inverse(sel)


def count_labeled(n: int, table: EulerianTable | None = None) -> int:
    """Labeled threshold graphs on ``n >= 2`` vertices:
    ``sum_{k=1}^{n-1} (n-k) <n-1 k-1> 2^k``."""
    _require_n2(n)
    table = table or EulerianTable()
    return sum((n - k) * table.value(n - 1, k - 1) << k for k in range(1, n))


def labeled_count_with_conventions(n: int) -> int:
    """Like :func:`count_labeled` but also defined, by convention, as 1 for n = 0, 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return 1 if n < 2 else count_labeled(n)


def count_unlabeled(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 1 << (n - 1)


def unlabeled_classes(n: int) -> Iterator[SignWord]:
    """One creation word per isomorphism class: ``w_1 = w_2``, rest free."""
    _require_n2(n)
    for tail in itertools.product((MINUS, PLUS), repeat=n - 1):
        yield SignWord((tail[0],) + tail)


def class_representative(w: SignWord) -> LabeledGraph:
    return construct(ThresholdPair(Permutation.identity(len(w)), w))


def selection_weight_sum(n: int) -> int:
    """``sum over pi with pi_1 < pi_2 of 2^asc(pi)``, by walking the permutations."""
    _require_n2(n)
    return sum(
        1 << ascents(p) for p in itertools.permutations(range(1, n + 1)) if p[0] < p[1]
    )


def brute_force_graph_census(n: int, extended: bool = False, engine: str = "kernel") -> int:
    """Count threshold graphs among all ``2^C(n,2)`` labeled graphs on ``1..n``.

    ``engine="kernel"`` uses the compiled/vectorized peeling loop;
    ``engine="python"`` calls :func:`is_threshold` on each graph.
    """
    bounds = oracle_bounds()
    limit = bounds.graphs_extended if extended else bounds.graphs
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > limit:
        hint = "" if extended else " (pass extended=True for one more)"
        raise OracleBoundError(f"graph census limited to n <= {limit}, got {n}{hint}")
    if engine == "kernel":
        return _kernels.threshold_census(n)
    if engine == "python":
        total = 1 << (n * (n - 1) // 2)
        return sum(is_threshold(LabeledGraph.from_mask(n, m)) for m in range(total))
    raise ValueError(f"unknown engine {engine!r}")


# ---------------------------------------------------------------- verification


@dataclass(frozen=True)
class CheckResult:
    name: str
    detail: str
    passed: bool | None  # None: skipped

    @property
    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "SKIP"}[self.passed]


@dataclass
class VerificationReport:
    n: int
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, detail: str, passed: bool | None) -> None:
        self.checks.append(CheckResult(name, detail, passed))

    def expect(self, name: str, expected, computed, label: str = "expected") -> None:
        detail = f"{name}: {label}={expected} computed={computed}"
        self.add(name, detail, expected == computed)

    @property
    def passed(self) -> int:
        return sum(c.passed is True for c in self.checks)

    @property
    def failed(self) -> int:
        return sum(c.passed is False for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        return f"VERIFY n={self.n} pass={self.passed} fail={self.failed}"

    def render(self) -> str:
        lines = [f"[{c.status}] {c.detail}" for c in self.checks]
        lines.append(self.summary())
        return "\n".join(lines) + "\n"


def _all_pairs(n: int) -> list[ThresholdPair]:
    words = [SignWord(w) for w in itertools.product((PLUS, MINUS), repeat=n)]
    return [ThresholdPair(Permutation(p), w)
            for p in itertools.permutations(range(1, n + 1)) for w in words]


def random_pair(n: int, rng: random.Random) -> ThresholdPair:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    bits = rng.getrandbits(n)
    word = tuple(PLUS if bits >> i & 1 else MINUS for i in range(n))
    return ThresholdPair(Permutation(tuple(perm)), SignWord(word))


def random_presentation(p: ThresholdPair, rng: random.Random) -> ThresholdPair:
    """Another pair for the same graph: shuffle entries inside each run of the
    normalized word and redraw the first letter."""
    w = p.word.with_first(p.word.letters[1])
    entries = list(p.perm.entries)
    for seg in run_partition(w).segments:
        chunk = entries[seg[0] - 1 : seg[-1]]
        rng.shuffle(chunk)
        entries[seg[0] - 1 : seg[-1]] = chunk
    return ThresholdPair(Permutation(tuple(entries)), w.with_first(PLUS if rng.getrandbits(1) else MINUS))


def _check_pair_equivalence(report: VerificationReport, n: int, rng: random.Random,
                            samples: int) -> None:
    mismatches = 0
    if n <= PAIR_EXHAUSTIVE_MAX:
        pairs = _all_pairs(n)
        graphs = [construct(p) for p in pairs]
        compared = 0
        for p, g in zip(pairs, graphs):
            for q, h in zip(pairs, graphs):
                compared += 1
                mismatches += same_graph_pairs(p, q) != (g == h)
        mode = f"exhaustive {compared} comparisons"
    else:
        for _ in range(samples):
            p = random_pair(n, rng)
            q = random_presentation(p, rng) if rng.random() < 0.5 else random_pair(n, rng)
            mismatches += same_graph_pairs(p, q) != (construct(p) == construct(q))
        mode = f"random {samples} comparisons"
    report.add("pair-equality", f"pair-equality test vs construct ({mode}): "
               f"mismatches={mismatches}", mismatches == 0)


def _check_uniqueness(report: VerificationReport, n: int) -> None:
    groups: dict[LabeledGraph, list[ThresholdPair]] = defaultdict(list)
    for p in _all_pairs(n):
        groups[construct(p)].append(p)
    bad = 0
    for members in groups.values():
        standard = [p for p in members if is_standard_form(p)]
        if len(standard) != 1 or any(standardize(p) != standard[0] for p in members):
            bad += 1
    report.add("standard-form", f"unique standard pair per graph: groups={len(groups)} "
               f"bad={bad}", bad == 0 and len(groups) == count_labeled(n))


def verify(n: int, census: bool = False, extended: bool = False, seed: int = 0,
           samples: int = 2000) -> VerificationReport:
    """Cross-check every counting identity and the bijection at size ``n``.

    Failures are recorded in the report rather than raised. Checks whose cost
    is out of reach for ``n`` are listed as skipped.
    """
    _require_n2(n)
    bounds = oracle_bounds()
    report = VerificationReport(n)
    table = EulerianTable()
    rng = random.Random(seed)
    t_n = count_labeled(n, table)

    if census:
        c = brute_force_graph_census(n, extended=extended)
        report.add(f"t_{n}", f"t_{n}: formula={t_n} census={c}", t_n == c)

    if n <= bounds.permutations:
        report.expect(f"weights_{n}", t_n, selection_weight_sum(n), label="formula")
    else:
        report.add(f"weights_{n}", f"weights_{n}: n above permutation oracle bound", None)

    if n <= ENUMERATION_VERIFY_MAX:
        seen: set[LabeledGraph] = set()
        fibers: Counter = Counter()
        emitted = roundtrip_bad = inverse_bad = non_threshold = 0
        for sel in enumerate_selections(n):
            emitted += 1
            fibers[sel.perm] += 1
            g = phi_inverse(sel)
            seen.add(g)
            back = phi(g)
            inverse_bad += back != sel
            roundtrip_bad += phi_inverse(back) != g
            non_threshold += not is_threshold(g) or forbidden_witness(g) is not None
        report.expect(f"enumeration_{n}", t_n, emitted, label="formula")
        report.expect(f"distinct_{n}", t_n, len(seen), label="formula")
        report.add("bijection", f"bijection round trips: phi(phi_inv) bad={inverse_bad} "
                   f"phi_inv(phi) bad={roundtrip_bad}", inverse_bad == roundtrip_bad == 0)
        report.add("recognition", f"emitted graphs not threshold: {non_threshold}",
                   non_threshold == 0)
        fiber_bad = sum(c != 1 << ascents(p) for p, c in fibers.items())
        report.add("fibers", f"fiber sizes 2^asc: perms={len(fibers)} bad={fiber_bad}",
                   fiber_bad == 0 and len(fibers) == math.factorial(n) // 2)
    else:
        report.add("enumeration", f"enumeration_{n}: above enumeration bound "
                   f"{ENUMERATION_VERIFY_MAX}", None)

    _check_pair_equivalence(report, n, rng, samples)
    if n <= PAIR_GROUPING_MAX:
        _check_uniqueness(report, n)
    else:
        report.add("standard-form", f"standard-form grouping: above bound {PAIR_GROUPING_MAX}",
                   None)

    row = eulerian_row(n, table)
    if n <= bounds.permutations:
        cen = _kernels.ascent_census(n)
        report.expect(f"eulerian_row_{n}", list(row), [int(cen[0, k] + cen[1, k])
                                                       for k in range(n)], label="recurrence")
        pm_bad = 0
        for d in range(n):
            p, m = count_descent_classes(n, d, table)
            k = n - 1 - d
            pm_bad += (p, m) != (int(cen[1, k]), int(cen[0, k]))
        report.add("descent-classes", f"P/M split vs census: bad={pm_bad}", pm_bad == 0)
        starts_bad = sum(count_ascent_start(n, k, table) != int(cen[1, k]) for k in range(1, n))
        report.add("ascent-start", f"(n-k)<n-1 k-1> vs census: bad={starts_bad}",
                   starts_bad == 0)
    else:
        report.add("eulerian", "Eulerian census: above permutation oracle bound", None)
    report.expect("row-sum", math.factorial(n), sum(row), label="n!")
    sym_bad = sum(row[x] != row[n - 1 - x] for x in range(n))
    report.add("symmetry", f"<n x> = <n n-1-x>: bad={sym_bad}", sym_bad == 0)
    rec_bad = sum(
        eulerian(m, d, table)
        != (d + 1) * eulerian(m - 1, d, table) + (m - d) * eulerian(m - 1, d - 1, table)
        for m in range(1, n + 1) for d in range(m)
    )
    report.add("recurrence", f"recurrence entrywise up to n={n}: bad={rec_bad}", rec_bad == 0)
    m_bad = sum(count_descent_classes(n, d, table)[1] != (n - d) * eulerian(n - 1, d - 1, table)
                for d in range(1, n))
    report.add("m-closed-form", f"M(n,d) = (n-d)<n-1 d-1>: bad={m_bad}", m_bad == 0)

    words = list(unlabeled_classes(n))
    degs = {class_representative(w).degree_sequence() for w in words}
    report.add("unlabeled", f"unlabeled classes: words={len(words)} distinct degree "
               f"sequences={len(degs)} expected={count_unlabeled(n)}",
               len(words) == len(degs) == count_unlabeled(n))
    return report
