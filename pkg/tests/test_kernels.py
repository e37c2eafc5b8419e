import os
import subprocess
import sys

import numpy as np
import pytest

from threshgraph import _config, _kernels
from threshgraph.graph import LabeledGraph, forbidden_witness, is_threshold

from oracles import all_perms, asc

BACKENDS = [_kernels.numpy_impl] + ([_kernels.numba_impl] if _kernels.numba_impl else [])
backend = pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.name)


@backend
@pytest.mark.parametrize("n", range(0, 6))
def test_flags_match_python_on_every_graph(impl, n):
    masks = np.arange(1 << (n * (n - 1) // 2), dtype=np.int64)
    thr = impl.threshold_flags(masks, n)
    forb = impl.forbidden_flags(masks, n)
    for m in range(masks.shape[0]):
        g = LabeledGraph.from_mask(n, m)
        assert thr[m] == is_threshold(g)
        assert forb[m] == (forbidden_witness(g) is not None)


@backend
def test_flags_random_n8(impl):
    rng = np.random.default_rng(1)
    masks = rng.integers(0, 1 << 28, size=300, dtype=np.int64)
    thr = impl.threshold_flags(masks, 8)
    for m, flag in zip(masks, thr):
        assert flag == is_threshold(LabeledGraph.from_mask(8, int(m)))
    assert np.array_equal(thr, ~impl.forbidden_flags(masks, 8))


@backend
@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 46), (5, 332), (6, 2874)])
def test_census(impl, n, count):
    assert impl.threshold_census(n) == count


@backend
@pytest.mark.parametrize("n", range(0, 8))
def test_ascent_census(impl, n):
    table = impl.ascent_census(n)
    perms = all_perms(n)
    for k in range(max(n, 1)):
        up = sum(len(p) >= 2 and p[0] < p[1] and asc(p) == k for p in perms)
        down = sum(not (len(p) >= 2 and p[0] < p[1]) and asc(p) == k for p in perms)
        assert (table[1, k], table[0, k]) == (up, down)


def test_backends_agree_on_larger_inputs():
    if _kernels.numba_impl is None:
        pytest.skip("numba not installed")
    assert np.array_equal(_kernels.numpy_impl.ascent_census(9), _kernels.numba_impl.ascent_census(9))
    rng = np.random.default_rng(7)
    masks = rng.integers(0, 1 << 36, size=2000, dtype=np.int64)
    for name in ("threshold_flags", "forbidden_flags"):
        assert np.array_equal(getattr(_kernels.numpy_impl, name)(masks, 9),
                              getattr(_kernels.numba_impl, name)(masks, 9))


def test_dispatch_honours_env(monkeypatch):
    monkeypatch.setenv(_config.NUMBA_ENV, "0")
    assert _kernels.active() is _kernels.numpy_impl
    monkeypatch.setenv(_config.NUMBA_ENV, "1")
    expected = _kernels.numba_impl or _kernels.numpy_impl
    assert _kernels.active() is expected


def test_env_flag_in_fresh_process():
    code = "from threshgraph import _kernels as k; print(k.active().name, k.threshold_census(5))"
    env = dict(os.environ, **{_config.NUMBA_ENV: "0"})
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout
    assert out.split() == ["numpy", "332"]


def test_size_guard():
    with pytest.raises(ValueError):
        _kernels.threshold_census(12)
    with pytest.raises(ValueError):
        _kernels.ascent_census(-1)
