"""Signed posets on ``±[d]``, labelings, linear extensions and the
``(P, omega)``-partition enumerators."""

from dataclasses import dataclass

import numpy as np

from ._enum import canonical_colorings, signed_values
from ._guard import InvalidInput, check_size
from .algebra import SqsExpr
from .graphs import DirectedSignedGraph, double_cover, full_word, signed_permutations


def _ground(d):
    return [x for i in range(1, d + 1) for x in (-i, i)]


def _close(d, pairs):
    less = {x: set() for x in _ground(d)}
    for x, y in pairs:
        less[x].add(y)
        less[-y].add(-x)
    # Warshall
    for z in _ground(d):
        for x in _ground(d):
            if z in less[x]:
                less[x] |= less[z]
    rel = set()
    for x, ys in less.items():
        for y in ys:
            if x == y or x in less[y]:
                raise InvalidInput(f"relation is not antisymmetric: cycle through {x}")
            rel.add((x, y))
    return frozenset(rel)


@dataclass(frozen=True)
class SignedPoset:
    """Strict order ``x <_P y`` on ``±[d]`` stored as its transitive closure.

    Building one mirrors every pair (``x < y`` gives ``-y < -x``) and closes.
    """

    d: int
    relation: frozenset

    def __post_init__(self):
        for x, y in self.relation:
            if not (0 < abs(x) <= self.d and 0 < abs(y) <= self.d):
                raise InvalidInput(f"pair {(x, y)} outside ±[{self.d}]")
        object.__setattr__(self, "relation", _close(self.d, self.relation))

    @classmethod
    def chain(cls, word):
        """Total order along ``word`` (a full symmetric word)."""
        return cls(len(word) // 2, frozenset(zip(word, word[1:])))

    @classmethod
    def from_permutation(cls, pi):
        return cls.chain(full_word(pi))

    def less(self, x, y):
        return (x, y) in self.relation

    def covers(self):
        rel = self.relation
        out = set()
        for x, y in rel:
            if not any((x, z) in rel and (z, y) in rel for z in _ground(self.d)):
                out.add((x, y))
        return frozenset(out)


@dataclass(frozen=True)
class Labeling:
    """A bijection ``omega`` of ``±[d]`` with ``w(i) < w(j) => w(-j) < w(-i)``."""

    omega: tuple  # sorted (element, label) pairs

    def __post_init__(self):
        w = dict(self.omega)
        d = len(w) // 2
        if sorted(w) != sorted(_ground(d)) or sorted(w.values()) != sorted(_ground(d)):
            raise InvalidInput("labeling must be a bijection of ±[d]")
        for i in w:
            for j in w:
                if w[i] < w[j] and not w[-j] < w[-i]:
                    raise InvalidInput(f"labeling breaks central symmetry at {(i, j)}")
        object.__setattr__(self, "omega", tuple(sorted(w.items())))

    def __call__(self, x):
        return dict(self.omega)[x]

    def strict_pairs(self, p):
        w = dict(self.omega)
        return frozenset((x, y) for x, y in p.relation if w[x] > w[y])

    @classmethod
    def from_word(cls, word, reverse=False):
        """Label the ``n``-th letter of a full symmetric word by its position
        (``-d..-1, 1..d``), or by its negative when ``reverse``."""
        d = len(word) // 2
        positions = list(range(-d, 0)) + list(range(1, d + 1))
        return cls(tuple((x, -p if reverse else p) for x, p in zip(word, positions)))


def linear_extensions(p):
    check_size("linear_extensions", p.d)
    out = []
    for pi in signed_permutations(p.d):
        pos = {x: i for i, x in enumerate(full_word(pi))}
        if all(pos[x] < pos[y] for x, y in p.relation):
            out.append(pi)
    return sorted(out)


def natural_labeling(p):
    return Labeling.from_word(full_word(linear_extensions(p)[0]))


def dual_natural_labeling(p):
    return Labeling.from_word(full_word(linear_extensions(p)[0]), reverse=True)


def _strict_set(p, w):
    if isinstance(w, Labeling):
        return w.strict_pairs(p)
    pairs = frozenset(tuple(x) for x in w)
    if not pairs <= p.relation:
        raise InvalidInput("strict pairs must belong to the poset relation")
    return pairs


def partition_mask(p, w, arr):
    """Rows of ``arr`` (values on ``1..d``) that are ``(P, w)``-partitions."""
    strict = _strict_set(p, w)
    mask = np.ones(len(arr), dtype=bool)
    for x, y in p.relation:
        fx, fy = signed_values(arr, x), signed_values(arr, y)
        mask &= (fx < fy) if (x, y) in strict else (fx <= fy)
    return mask


def gamma_enumerator(p, w):
    """Enumerator of ``(P, w)``-partitions over the positive transversal.

    ``w`` is a ``Labeling`` or an explicit set of strict pairs of ``P``.
    """
    check_size("gamma_enumerator", p.d)
    arr, ids, keys = canonical_colorings(p.d)
    counts = np.bincount(ids[partition_mask(p, w, arr)], minlength=len(keys))
    return SqsExpr({keys[i]: int(c) for i, c in enumerate(counts) if c})


def chain_strict_set(pi, w):
    """Descent set of ``w`` read along ``pi``: ``j`` is strict when
    ``w(pi(j)) > w(pi(j + 1))`` with ``pi(0)`` read as ``-pi(1)``."""
    word = (-pi[0],) + tuple(pi)
    return frozenset(j for j in range(len(pi)) if w(word[j]) > w(word[j + 1]))


def poset_from_orientation(g):
    """``a <_P b`` for every double-cover arc ``b -> a``; compatible colorings
    of ``g`` are then exactly the strict ``P``-partitions."""
    if not isinstance(g, DirectedSignedGraph):
        raise InvalidInput("poset_from_orientation needs a directed signed graph")
    arcs = double_cover(g).arcs
    try:
        return SignedPoset(g.d, frozenset((a, b) for b, a in arcs))
    except InvalidInput as exc:
        raise InvalidInput(f"orientation is not acyclic: {exc}") from None


def strict_partition_enumerator(p):
    return gamma_enumerator(p, p.relation)
