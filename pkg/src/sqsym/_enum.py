"""Canonical integer colorings shared by the enumerators.

An SQSym element is determined by its coefficients on colorings whose
distinct nonzero absolute values are exactly ``{1..r}``; each such coloring
stands for one ``M_{k, lam}`` monomial.
"""

import itertools
from functools import lru_cache

import numpy as np

from .algebra import MonomialIndex


def monomial_of(values):
    """``(k, lam)`` of the monomial ``x_{values[0]} x_{values[1]} ...``."""
    k = 0
    r = max((abs(v) for v in values), default=0)
    cols = [[0, 0] for _ in range(r)]
    for v in values:
        if v == 0:
            k += 1
        elif v > 0:
            cols[v - 1][0] += 1
        else:
            cols[-v - 1][1] += 1
    return MonomialIndex(k, tuple(map(tuple, cols)))


@lru_cache(maxsize=None)
def canonical_colorings(d):
    """``(rows, key_ids, keys)``: every canonical coloring of ``d`` vertices,
    the index of its monomial in ``keys``, and the sorted monomial list."""
    rows = []
    for pattern in itertools.product(range(d + 1), repeat=d):
        used = {x for x in pattern if x}
        if used != set(range(1, len(used) + 1)):
            continue
        nz = [i for i, x in enumerate(pattern) if x]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            row = list(pattern)
            for i, s in zip(nz, signs):
                row[i] *= s
            rows.append(row)
    arr = np.array(rows, dtype=np.int16).reshape(len(rows), d)
    mons = [monomial_of(r) for r in rows]
    keys = sorted(set(mons))
    pos = {m: i for i, m in enumerate(keys)}
    ids = np.array([pos[m] for m in mons], dtype=np.int64)
    arr.setflags(write=False)
    ids.setflags(write=False)
    return arr, ids, tuple(keys)


def signed_values(arr, x):
    """Column of values of the element ``x`` of ``±[d]`` (``f(-x) = -f(x)``)."""
    col = arr[:, abs(x) - 1]
    return col if x > 0 else -col
