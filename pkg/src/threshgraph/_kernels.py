"""Brute-force inner loops behind the census oracles.

A graph on ``n`` vertices is an int64 edge mask in graph6 column order (pair
``i < j``, 0-based, at bit ``j*(j-1)/2 + i``), so ``n <= 11`` fits. Each kernel
exists twice: a numba ``@njit`` loop and a vectorized numpy version. The
numba path is used when numba imports and ``THRESHGRAPH_NUMBA`` is not
switched off; both stay importable for tests and benchmarks.
"""

from __future__ import annotations

import itertools
from types import SimpleNamespace

import numpy as np

from ._config import numba_requested

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

MAX_MASK_VERTICES = 11
_CHUNK = 1 << 16


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_MASK_VERTICES:
        raise ValueError(f"mask kernels support 0 <= n <= {MAX_MASK_VERTICES}, got {n}")


def pair_tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(pi, pj, index)``: endpoints of each mask bit, and the bit of pair ``(i, j)``."""
    pi, pj = [], []
    index = np.full((max(n, 1), max(n, 1)), -1, dtype=np.int64)
    for j in range(n):
        for i in range(j):
            index[i, j] = index[j, i] = len(pi)
            pi.append(i)
            pj.append(j)
    return np.array(pi, dtype=np.int64), np.array(pj, dtype=np.int64), index


def quad_table(n: int) -> np.ndarray:
    quads = list(itertools.combinations(range(n), 4))
    return np.array(quads, dtype=np.int64).reshape(len(quads), 4)


# ---------------------------------------------------------------- numpy path


def _adjacency_np(masks: np.ndarray, n: int) -> np.ndarray:
    pi, pj, _ = pair_tables(n)
    adj = np.zeros((masks.shape[0], n), dtype=np.int64)
    for b in range(pi.shape[0]):
        bit = (masks >> b) & 1
        adj[:, pi[b]] |= bit << pj[b]
        adj[:, pj[b]] |= bit << pi[b]
    return adj


def _threshold_flags_np(masks: np.ndarray, n: int) -> np.ndarray:
    masks = np.asarray(masks, dtype=np.int64)
    adj = _adjacency_np(masks, n)
    vbits = np.int64(1) << np.arange(n, dtype=np.int64)
    alive = np.full(masks.shape[0], (1 << n) - 1, dtype=np.int64)
    for _ in range(n):
        a = alive[:, None]
        live = adj & a
        eligible = ((a & vbits) != 0) & ((live == 0) | (live == (a ^ vbits)))
        stuck = ~eligible.any(axis=1)
        pick = eligible.argmax(axis=1)
        alive = np.where(stuck, alive, alive & ~vbits[pick])
    return alive == 0


def _forbidden_flags_np(masks: np.ndarray, n: int) -> np.ndarray:
    masks = np.asarray(masks, dtype=np.int64)
    _, _, index = pair_tables(n)
    found = np.zeros(masks.shape[0], dtype=bool)
    for a, b, c, d in quad_table(n):
        e = [((masks >> index[x, y]) & 1).astype(np.int8)
             for x, y in ((a, b), (a, c), (a, d), (b, c), (b, d), (c, d))]
        ab, ac, ad, bc, bd, cd = e
        degs = np.stack([ab + ac + ad, ab + bc + bd, ac + bc + cd, ad + bd + cd])
        edges = degs.sum(axis=0) // 2
        lo, hi = degs.min(axis=0), degs.max(axis=0)
        two_k2 = (edges == 2) & (lo == 1) & (hi == 1)
        p4 = (edges == 3) & (lo == 1) & (hi == 2)
        c4 = (edges == 4) & (lo == 2) & (hi == 2)
        found |= two_k2 | p4 | c4
    return found


def _threshold_census_np(n: int) -> int:
    total = 1 << (n * (n - 1) // 2)
    count = 0
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        count += int(_threshold_flags_np(masks, n).sum())
    return count


def _ascent_census_np(n: int) -> np.ndarray:
    table = np.zeros((2, max(n, 1)), dtype=np.int64)
    if n < 2:
        table[0, 0] = 1
        return table
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    asc = (np.diff(perms, axis=1) > 0).sum(axis=1)
    first = (perms[:, 0] < perms[:, 1]).astype(np.int64)
    np.add.at(table, (first, asc), 1)
    return table


# ---------------------------------------------------------------- numba path


def _build_numba():
    njit = numba.njit(cache=True, nogil=True)

    @njit
    def peel_mask(mask, n, pi, pj, adj):
        adj[:] = 0
        for b in range(pi.shape[0]):
            if (mask >> b) & 1:
                adj[pi[b]] |= np.int64(1) << pj[b]
                adj[pj[b]] |= np.int64(1) << pi[b]
        alive = (np.int64(1) << n) - 1
        for _ in range(n):
            chosen = -1
            for v in range(n):
                vb = np.int64(1) << v
                if alive & vb:
                    live = adj[v] & alive
                    if live == 0 or live == (alive ^ vb):
                        chosen = v
                        break
            if chosen < 0:
                return False
            alive &= ~(np.int64(1) << chosen)
        return True

    @njit
    def threshold_flags(masks, n, pi, pj):
        out = np.zeros(masks.shape[0], dtype=np.bool_)
        adj = np.zeros(max(n, 1), dtype=np.int64)
        for t in range(masks.shape[0]):
            out[t] = peel_mask(masks[t], n, pi, pj, adj)
        return out

    @njit
    def threshold_census(n, pi, pj):
        adj = np.zeros(max(n, 1), dtype=np.int64)
        total = np.int64(1) << pi.shape[0]
        count = 0
        for mask in range(total):
            if peel_mask(mask, n, pi, pj, adj):
                count += 1
        return count

    @njit
    def forbidden_flags(masks, quads, index):
        out = np.zeros(masks.shape[0], dtype=np.bool_)
        deg = np.zeros(4, dtype=np.int64)
        for t in range(masks.shape[0]):
            mask = masks[t]
            for q in range(quads.shape[0]):
                edges = 0
                deg[:] = 0
                for x in range(4):
                    for y in range(x + 1, 4):
                        if (mask >> index[quads[q, x], quads[q, y]]) & 1:
                            edges += 1
                            deg[x] += 1
                            deg[y] += 1
                lo, hi = deg.min(), deg.max()
                if ((edges == 2 and lo == 1 and hi == 1)
                        or (edges == 3 and lo == 1 and hi == 2)
                        or (edges == 4 and lo == 2 and hi == 2)):
                    out[t] = True
                    break
        return out

    @njit
    def ascent_census(n):
        table = np.zeros((2, max(n, 1)), dtype=np.int64)
        if n < 2:
            table[0, 0] = 1
            return table
        perm = np.arange(n)
        while True:
            asc = 0
            for i in range(n - 1):
                if perm[i] < perm[i + 1]:
                    asc += 1
            table[1 if perm[0] < perm[1] else 0, asc] += 1
            i = n - 2
            while i >= 0 and perm[i] > perm[i + 1]:
                i -= 1
            if i < 0:
                break
            j = n - 1
            while perm[j] < perm[i]:
                j -= 1
            perm[i], perm[j] = perm[j], perm[i]
            lo, hi = i + 1, n - 1
            while lo < hi:
                perm[lo], perm[hi] = perm[hi], perm[lo]
                lo += 1
                hi -= 1
        return table

    return SimpleNamespace(
        threshold_flags=threshold_flags,
        threshold_census=threshold_census,
        forbidden_flags=forbidden_flags,
        ascent_census=ascent_census,
    )


_numba_raw = _build_numba() if numba is not None else None


def _threshold_flags_nb(masks: np.ndarray, n: int) -> np.ndarray:
    pi, pj, _ = pair_tables(n)
    return _numba_raw.threshold_flags(np.ascontiguousarray(masks, dtype=np.int64), n, pi, pj)


def _forbidden_flags_nb(masks: np.ndarray, n: int) -> np.ndarray:
    _, _, index = pair_tables(n)
    return _numba_raw.forbidden_flags(
        np.ascontiguousarray(masks, dtype=np.int64), quad_table(n), index
    )


def _threshold_census_nb(n: int) -> int:
    pi, pj, _ = pair_tables(n)
    return int(_numba_raw.threshold_census(n, pi, pj))


def _ascent_census_nb(n: int) -> np.ndarray:
    return _numba_raw.ascent_census(n)


numpy_impl = SimpleNamespace(
    name="numpy",
    threshold_flags=_threshold_flags_np,
    forbidden_flags=_forbidden_flags_np,
    threshold_census=_threshold_census_np,
    ascent_census=_ascent_census_np,
)

numba_impl = None if _numba_raw is None else SimpleNamespace(
    name="numba",
    threshold_flags=_threshold_flags_nb,
    forbidden_flags=_forbidden_flags_nb,
    threshold_census=_threshold_census_nb,
    ascent_census=_ascent_census_nb,
)


def active():
    """The backend selected by the environment at call time."""
    if numba_impl is not None and numba_requested():
        return numba_impl
    return numpy_impl


def threshold_flags(masks, n: int) -> np.ndarray:
    """Per-mask flag: does peeling isolated/dominating vertices empty the graph."""
    _check_n(n)
    return active().threshold_flags(masks, n)


def forbidden_flags(masks, n: int) -> np.ndarray:
    """Per-mask flag: does some 4-subset induce 2K2, P4 or C4."""
    _check_n(n)
    return active().forbidden_flags(masks, n)


def threshold_census(n: int) -> int:
    """Number of threshold graphs among all ``2^C(n,2)`` masks."""
    _check_n(n)
    return active().threshold_census(n)


def ascent_census(n: int) -> np.ndarray:
    """``table[b, k]``: permutations of size ``n`` with ``k`` ascents, split by
    whether they begin with an ascent (``b = 1``) or not."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return active().ascent_census(n)
