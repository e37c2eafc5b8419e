"""Text encodings for graphs, pairs and selections.

graph6 follows the standard format: a size prefix (one byte ``63+n`` for
``n <= 62``, ``~`` plus three bytes up to 258047, ``~~`` plus six bytes
beyond), then the upper triangle in column order ``x(0,1) x(0,2) x(1,2) ...``
packed six bits per byte, each byte offset by 63 and the tail zero-padded.

The edge list is ``"n m"`` followed by ``m`` pairs ``"a b"`` with ``a < b``,
1-based. Parsing is whitespace-insensitive, so the one-line form used by
``enumerate`` reads back the same way.
"""

from __future__ import annotations

import json

from .bijection import AscentSelection, selection_word
from .graph import LabeledGraph, ThresholdPair, Witness, construct

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError(n)
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode n = {n}")


def to_graph6(g: LabeledGraph) -> str:
    nbits = g.n * (g.n - 1) // 2
    mask = g.mask
    out = [_encode_size(g.n)]
    for start in range(0, nbits, 6):
        byte = 0
        for b in range(start, start + 6):
            byte = byte << 1 | (b < nbits and mask >> b & 1)
        out.append(chr(63 + byte))
    return "".join(out)


def from_graph6(text: str) -> LabeledGraph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise FormatError(f"invalid graph6 character in {s!r}")
    if codes[0] != 63:
        n, body = codes[0], codes[1:]
    elif len(codes) >= 2 and codes[1] == 63:
        if len(codes) < 8:
            raise FormatError("truncated graph6 size field")
        n, body = _decode_int(codes[2:8]), codes[8:]
    else:
        if len(codes) < 4:
            raise FormatError("truncated graph6 size field")
        n, body = _decode_int(codes[1:4]), codes[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    mask = 0
    for idx, code in enumerate(body):
        for k in range(6):
            b = idx * 6 + k
            if b < nbits and code >> (5 - k) & 1:
                mask |= 1 << b
    return LabeledGraph.from_mask(n, mask)


def _decode_int(codes: list[int]) -> int:
    v = 0
    for c in codes:
        v = v << 6 | c
    return v


def to_edge_list(g: LabeledGraph, one_line: bool = False) -> str:
    edges = g.sorted_edges()
    parts = [f"{g.n} {len(edges)}"] + [f"{a} {b}" for a, b in edges]
    return " ".join(parts) if one_line else "\n".join(parts) + "\n"


def from_edge_list(text: str) -> LabeledGraph:
    try:
        nums = [int(t) for t in text.split()]
    except ValueError as exc:
        raise FormatError(f"edge list must contain integers only: {exc}") from None
    if len(nums) < 2:
        raise FormatError("edge list needs a header 'n m'")
    n, m = nums[0], nums[1]
    if n < 0 or m < 0:
        raise FormatError("negative vertex or edge count")
    if len(nums) != 2 + 2 * m:
        raise FormatError(f"edge list declares {m} edges but has {(len(nums) - 2) / 2:g}")
    edges = list(zip(nums[2::2], nums[3::2]))
    for a, b in edges:
        if not (1 <= a < b <= n):
            raise FormatError(f"edge '{a} {b}' must satisfy 1 <= a < b <= {n}")
    if len(set(edges)) != m:
        raise FormatError("duplicate edge")
    return LabeledGraph(n, frozenset(edges))


def dumps(record: dict) -> str:
    """One JSON object on one line; key order as given."""
    return json.dumps(record, separators=(",", ":"))


def selection_record(sel: AscentSelection) -> dict:
    word = selection_word(sel)
    g = construct(ThresholdPair(sel.perm, word))
    return {
        "n": g.n,
        "edges": [list(e) for e in g.sorted_edges()],
        "perm": list(sel.perm.entries),
        "word": list(word.letters),
        "marks": sorted(sel.marks),
    }


def pair_record(pair: ThresholdPair) -> dict:
    return {"perm": list(pair.perm.entries), "word": list(pair.word.letters)}


def witness_record(w: Witness) -> dict:
    return {"vertices": list(w.vertices), "pattern": w.pattern}
