"""Runtime configuration read from the environment.

``THRESHOLD_ORACLE_MAX`` overrides the size limits of the brute-force oracles.
It accepts either a bare integer, applied to both oracles, or a comma list
such as ``perm=10,graph=7``.

``THRESHGRAPH_NUMBA`` selects the kernel backend: ``0``/``false``/``no``
forces the pure-numpy path even when numba is importable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

PERMUTATION_ORACLE_MAX = 9
GRAPH_ORACLE_MAX = 6
GRAPH_ORACLE_EXTENDED_MAX = 7

ORACLE_ENV = "THRESHOLD_ORACLE_MAX"
NUMBA_ENV = "THRESHGRAPH_NUMBA"


class OracleBoundError(ValueError):
    """Raised when a brute-force oracle is asked for a size above its bound."""


@dataclass(frozen=True)
class OracleBounds:
    permutations: int = PERMUTATION_ORACLE_MAX
    graphs: int = GRAPH_ORACLE_MAX
    graphs_extended: int = GRAPH_ORACLE_EXTENDED_MAX


def oracle_bounds() -> OracleBounds:
    raw = os.environ.get(ORACLE_ENV, "").strip()
    if not raw:
        return OracleBounds()
    try:
        if "=" not in raw:
            value = int(raw)
            return OracleBounds(value, value, max(value, GRAPH_ORACLE_EXTENDED_MAX))
        fields = {}
        for item in raw.split(","):
            key, _, val = item.partition("=")
            fields[key.strip()] = int(val)
    except ValueError as exc:
        raise ValueError(f"malformed {ORACLE_ENV}={raw!r}") from exc
    unknown = set(fields) - {"perm", "graph"}
    if unknown:
        raise ValueError(f"unknown {ORACLE_ENV} keys: {sorted(unknown)}")
    perm = fields.get("perm", PERMUTATION_ORACLE_MAX)
    graph = fields.get("graph", GRAPH_ORACLE_MAX)
    return OracleBounds(perm, graph, max(graph, GRAPH_ORACLE_EXTENDED_MAX))


def numba_requested() -> bool:
    return os.environ.get(NUMBA_ENV, "1").strip().lower() not in {"0", "false", "no", "off"}
