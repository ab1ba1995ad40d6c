from __future__ import annotations

import importlib
import random

import numpy as np
import pytest

from oracles import cosine
from procmatch import _kernels_py, kernels
from strategies import random_workflow_net

try:
    from procmatch import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _compiled is not None:
    BACKENDS.append(pytest.param(_compiled, id="cython"))

needs_compiled = pytest.mark.skipif(_compiled is None, reason="compiled kernels not built")


def net_arrays(net):
    places = list(net.places)
    pos = {p: i for i, p in enumerate(places)}
    pre = [[pos[p] for p in net.preset(t)] for t in net.transitions]
    post = [[pos[p] for p in net.postset(t)] for t in net.transitions]
    initial = [1] + [0] * (len(places) - 1)
    return pre, post, initial


@pytest.mark.parametrize("impl", BACKENDS)
def test_explore_chain(impl):
    markings, edges, complete = impl.explore_markings([[0], [1]], [[1], [2]], [1, 0, 0], 10)
    assert markings == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert edges == [(0, 0, 1), (1, 1, 2)]
    assert complete


@pytest.mark.parametrize("impl", BACKENDS)
def test_explore_bound(impl):
    markings, _, complete = impl.explore_markings([[0], [1]], [[1], [2]], [1, 0, 0], 2)
    assert len(markings) == 2 and not complete
    with pytest.raises(ValueError):
        impl.explore_markings([[0]], [[1]], [1, 0], 0)


def test_cosine_matrix_values():
    a = np.array([[1.0, 0.0], [0.0, 0.0], [3.0, 4.0]])
    b = np.array([[1.0, 0.0], [-4.0, 3.0]])
    out = np.asarray(kernels.cosine_matrix(a, b))
    expected = [[cosine(x, y) for y in b] for x in a]
    np.testing.assert_allclose(out, expected, atol=1e-15)


def test_cosine_matrix_extreme_magnitudes():
    a = np.array([[1e200, 1e200], [1e-200, 2e-200]])
    out = np.asarray(kernels.cosine_matrix(a, a))
    assert np.isfinite(out).all()
    assert out[0, 0] == pytest.approx(1.0)
    assert out[1, 1] == pytest.approx(1.0)


def test_cosine_matrix_shapes():
    assert np.asarray(kernels.cosine_matrix(np.zeros((0, 3)), np.ones((2, 3)))).shape == (0, 2)
    with pytest.raises(ValueError):
        kernels.cosine_matrix(np.ones((1, 3)), np.ones((1, 4)))


@needs_compiled
@pytest.mark.parametrize("seed", range(50))
def test_backends_explore_identically(seed):
    net = random_workflow_net(random.Random(seed), mutations=seed % 3)
    args = net_arrays(net)
    assert _compiled.explore_markings(*args, 500) == _kernels_py.explore_markings(*args, 500)


def test_env_var_forces_python(monkeypatch):
    original = kernels.BACKEND
    monkeypatch.setenv("PROCMATCH_PURE_PYTHON", "1")
    try:
        reloaded = importlib.reload(kernels)
        assert reloaded.BACKEND == "python"
        assert reloaded.explore_markings is _kernels_py.explore_markings
        assert reloaded.cosine_matrix is _kernels_py.cosine_matrix
    finally:
        monkeypatch.undo()
        importlib.reload(kernels)
    assert kernels.BACKEND == original
