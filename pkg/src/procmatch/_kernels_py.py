"""Pure-Python kernels.

``explore_markings`` is the fallback for the compiled extension (used when
it is missing or ``PROCMATCH_PURE_PYTHON=1`` is set); both must return
identical marking and edge lists. ``cosine_matrix`` is numpy-backed and
serves both backends.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np


def explore_markings(
    pre: Sequence[Sequence[int]],
    post: Sequence[Sequence[int]],
    initial: Sequence[int],
    bound: int,
) -> tuple[list[tuple[int, ...]], list[tuple[int, int, int]], bool]:
    """Breadth-first reachability over integer marking vectors.

    ``pre[t]``/``post[t]`` list the input/output place indices of transition
    ``t``. Returns the distinct markings in discovery order, the firing edges
    ``(source marking, transition, target marking)``, and whether the whole
    state space fit within ``bound`` markings.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    start = tuple(int(x) for x in initial)
    index = {start: 0}
    markings = [start]
    edges: list[tuple[int, int, int]] = []
    arcs = list(zip(pre, post))
    head = 0
    while head < len(markings):
        marking = markings[head]
        for t, (inputs, outputs) in enumerate(arcs):
            if not all(marking[p] > 0 for p in inputs):
                continue
            successor = list(marking)
            for p in inputs:
                successor[p] -= 1
            for p in outputs:
                successor[p] += 1
            key = tuple(successor)
            target = index.get(key)
            if target is None:
                if len(markings) >= bound:
                    return markings, edges, False
                target = len(markings)
                index[key] = target
                markings.append(key)
            edges.append((head, t, target))
        head += 1
    return markings, edges, True


def rescale_rows(x: np.ndarray) -> np.ndarray:
    """Scale each row by a power of two so its largest magnitude lies in
    [0.5, 1). The scaling is exact and cosine is scale-invariant, so squared
    norms can neither overflow nor underflow afterwards."""
    peak = np.max(np.abs(x), axis=1) if x.size else np.zeros(x.shape[0])
    _, exponent = np.frexp(peak)
    return np.ldexp(x, -exponent[:, None])


def cosine_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pairwise cosine between the rows of ``a`` (n x d) and ``b`` (m x d).

    Zero rows score 0 against everything.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[1]:
        raise ValueError(f"incompatible shapes {a.shape} and {b.shape}")
    out = np.zeros((a.shape[0], b.shape[0]))
    if out.size == 0 or a.shape[1] == 0:
        return out
    a = rescale_rows(a)
    b = rescale_rows(b)
    dots = a @ b.T
    a2 = np.einsum("ij,ij->i", a, a)
    b2 = np.einsum("ij,ij->i", b, b)
    denom = np.sqrt(np.outer(a2, b2))
    np.divide(dots, denom, out=out, where=denom > 0)
    return np.clip(out, -1.0, 1.0)
