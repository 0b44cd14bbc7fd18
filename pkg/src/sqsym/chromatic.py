"""The chromatic invariant ``X(x; t)`` of a directed signed graph.

``X`` sums ``t^asc(k) x_{k(1)} ... x_{k(d)}`` over proper colorings ``k``.
It is computed three ways: directly over canonical colorings, as a sum over
acyclic orientations of strict partition enumerators, and through the
fundamental expansion indexed by signed permutations.
"""

from collections import Counter
from functools import lru_cache
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from ._enum import canonical_colorings
from ._guard import InvalidInput, SqsymError, check_size
from .algebra import SqsExpr, TPoly, is_signed_symmetric, specialize
from .fundamental import FundamentalIndex, f_to_monomial
from .graphs import (
    DirectedSignedGraph,
    acyclic_orientations,
    circulant,
    coloring_stats,
    double_cover,
    full_word,
    region_orientation,
    signed_permutations,
    switch_coloring,
    switched_circulant,
)
from .posets import poset_from_orientation, strict_partition_enumerator


def _need_directed(g):
    if not isinstance(g, DirectedSignedGraph):
        raise InvalidInput("a directed signed graph is required")


def _tpoly_from_counts(counts, keys):
    out = {}
    for e in range(counts.shape[0]):
        row = counts[e]
        nz = np.nonzero(row)[0]
        if len(nz):
            out[e] = SqsExpr({keys[i]: int(row[i]) for i in nz})
    return TPoly(out)


def chromatic_oracle(g):
    """Direct enumeration over canonical colorings."""
    _need_directed(g)
    check_size("chromatic_oracle", g.d)
    arr, ids, keys = canonical_colorings(g.d)
    proper = np.ones(len(arr), dtype=bool)
    asc = np.zeros(len(arr), dtype=np.int64)
    for e, (tu, tv) in zip(g.edges, g.taus):
        ku, kv = arr[:, e.u - 1], arr[:, e.v - 1]
        proper &= ku != e.sign * kv
        asc += (tu * ku + tv * kv) > 0
    n_e = len(g.edges) + 1
    flat = np.bincount(asc[proper] * len(keys) + ids[proper], minlength=n_e * len(keys))
    return _tpoly_from_counts(flat.reshape(n_e, len(keys)), keys)


def disagreements(g, h):
    """Edges of ``g`` whose orientation differs from the one ``h`` gives the
    same underlying edge."""
    tau = dict(zip(h.edges, h.taus))
    return sum(1 for e, t in zip(g.edges, g.taus) if tau[e] != t)


def chromatic_chambers(g):
    """Sum over acyclic orientations of ``t^{disagreements}`` times the
    strict partition enumerator of the orientation's poset."""
    _need_directed(g)
    check_size("chromatic_chambers", g.d)
    out = TPoly()
    for o in acyclic_orientations(g.underlying, method="double_cover"):
        gamma = strict_partition_enumerator(poset_from_orientation(o))
        out = out + TPoly({disagreements(g, o): gamma})
    return out


# ------------------------------------------------------------- statistics


def sigma_rank(sg, pi):
    """Longest run of successively adjacent letters of the full word of
    ``pi`` ending at each letter (adjacency in the undirected cover)."""
    nbrs = {}
    for a, b in sg.arcs:
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    rank = {}
    for m in full_word(pi):
        rank[m] = 1 + max((rank[x] for x in nbrs.get(m, ()) if x in rank), default=0)
    return rank


def _cover(g):
    return double_cover(g.underlying)


def des_sigma(g, pi):
    """Descents of ``pi`` for the labeling that orders ``±[d]`` by the key
    ``(rank(x) - rank(-x), x)``.

    The key is odd under ``x -> -x`` and strictly increases along every
    relation of the region's poset, so it induces a signed labeling.  It
    agrees with ordering by ``(rank(x), x)`` whenever that ordering is
    itself centrally symmetric, and differs (correctly) on graphs where it is
    not, e.g. a single edge ``{1, 3}`` with vertex 2 isolated.
    """
    rank = sigma_rank(_cover(g), pi)

    def key(x):
        return (rank[x] - rank[-x], x)

    word = (-pi[0],) + tuple(pi) if pi else ()
    return frozenset(i for i in range(len(pi)) if key(word[i]) < key(word[i + 1]))


def des_sigma_literal(g, pi):
    """Descents ordered by ``(rank(x), x)`` alone, the unsymmetrized reading;
    kept to document where it breaks the expansion."""
    rank = sigma_rank(_cover(g), pi)
    word = (-pi[0],) + tuple(pi) if pi else ()
    return frozenset(i for i in range(len(pi)) if (rank[word[i]], word[i]) < (rank[word[i + 1]], word[i + 1]))


def inv_count(g, pi):
    return disagreements(g, region_orientation(g, pi))


def theorem_terms(g):
    """The multiset of ``(t-exponent, FundamentalIndex)`` over signed permutations."""
    _need_directed(g)
    check_size("chromatic_theorem", g.d)
    terms = Counter()
    for pi in signed_permutations(g.d):
        fi = FundamentalIndex(g.d, des_sigma(g, pi), tuple(1 if p > 0 else -1 for p in pi))
        terms[(inv_count(g, pi), fi)] += 1
    return terms


def chromatic_theorem(g):
    out = {}
    for (e, fi), c in theorem_terms(g).items():
        x = f_to_monomial(fi).scale(c)
        out[e] = out[e] + x if e in out else x
    return TPoly(out)


CHROMATIC_METHODS = {"oracle": chromatic_oracle, "chambers": chromatic_chambers, "theorem": chromatic_theorem}


def chromatic(g, method="oracle"):
    try:
        fn = CHROMATIC_METHODS[method]
    except KeyError:
        raise InvalidInput(f"unknown method {method!r}") from None
    return fn(g)


# ----------------------------------------------------------------- symmetry


def specialize_count(x, m, t_value=1):
    t_value = Fraction(t_value)
    return sum((t_value**e * specialize(c, m) for e, c in x.items()), Fraction(0))


def is_invariant_symmetric(x):
    return all(is_signed_symmetric(c) for _, c in x.items())


# --------------------------------------------------------------- involution


class CirculantShape(NamedTuple):
    d: int
    k: int
    v: int


def circulant_shape(g):
    """``(d, k, v)`` when ``g`` is the circulant switched at the single vertex ``v``."""
    _need_directed(g)
    return _circulant_shape(g)


@lru_cache(maxsize=32)
def _circulant_shape(g):
    target = Counter(zip(g.edges, g.taus))
    for k in range(1, g.d - 1):
        if len(g.edges) != g.d * k:
            continue
        for v in range(1, g.d + 1):
            h = switched_circulant(g.d, k, v)
            if Counter(zip(h.edges, h.taus)) == target:
                return CirculantShape(g.d, k, v)
    raise InvalidInput("graph is not a circulant switched at one vertex")


def _components(adj, verts):
    seen, out = set(), []
    for s in sorted(verts):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w in verts and w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(comp)
    return out


def _shape(comp, adj):
    """``("path", ordered vertices)`` or ``("cycle", vertices)``."""
    cs = set(comp)
    deg = {u: len(adj[u] & cs) for u in comp}
    n_edges = sum(deg.values()) // 2
    if n_edges == len(comp) - 1 and all(x <= 2 for x in deg.values()):
        start = min(u for u in comp if deg[u] <= 1)
        order, prev = [start], None
        while len(order) < len(comp):
            nxt = [w for w in adj[order[-1]] & cs if w != prev]
            prev = order[-1]
            order.append(nxt[0])
        return "path", order
    if n_edges == len(comp) and all(x == 2 for x in deg.values()) and len(comp) % 2 == 0:
        return "cycle", comp
    raise SqsymError(f"component {sorted(comp)} is neither a path nor an even cycle")


def _analyse(kt, pairs, adj, vp):
    """Per pair, the components of the vertices colored from the pair."""
    out = []
    for pair in pairs:
        verts = {u for u in kt if kt[u] in pair}
        for comp in _components(adj, verts):
            kind, order = _shape(comp, adj)
            out.append((pair, kind, order))
    return out


def _swap(kt, pair, verts):
    a, b = pair
    for u in verts:
        kt[u] = b if kt[u] == a else a


def _exchange(kt, pairs, adj, vp, d):
    """One color-exchange step on the unswitched coloring ``kt``."""
    comps = _analyse(kt, pairs, adj, vp)
    for pair, kind, order in comps:
        if kind == "path" and len(order) % 2 == 0 and vp in order:
            j = order.index(vp)
            partner = order[j + 1] if j % 2 == 0 else order[j - 1]
            shift = (vp - partner) % d
            rot = {(u - 1 + shift) % d + 1: kt[u] for u in kt}
            for pair2, kind2, order2 in _analyse(rot, pairs, adj, vp):
                if kind2 == "path" and len(order2) % 2 == 1:
                    _swap(rot, pair2, order2)
            return rot
    out = dict(kt)
    for pair, kind, order in comps:
        if (kind == "path" and len(order) % 2 == 1) or (kind == "cycle" and vp in order):
            _swap(out, pair, order)
    return out


@lru_cache(maxsize=32)
def _adjacency(d, k):
    adj = {u: set() for u in range(1, d + 1)}
    for e in circulant(d, k).edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    return adj


def phi_involution(g, i, kappa):
    """Color exchange ``i <-> i+1`` (with ``-i <-> -i-1``) preserving ascents.

    ``g`` must be a circulant switched at one vertex.  ``i = 0`` composes
    three single-pair exchanges ``(0,1)(-1,0)(0,1)`` and is experimental.
    """
    shape = circulant_shape(g)
    kappa = tuple(int(c) for c in kappa)
    if not coloring_stats(g, kappa).proper:
        raise InvalidInput(f"coloring {kappa} is not proper")
    if i < 0:
        raise InvalidInput("phi index must be nonnegative")
    nu = tuple(-1 if u == shape.v else 1 for u in range(1, g.d + 1))
    kt = dict(enumerate(switch_coloring(kappa, nu), start=1))
    adj = _adjacency(shape.d, shape.k)
    if i == 0:
        for pair in ((0, 1), (-1, 0), (0, 1)):
            kt = _exchange(kt, [pair], adj, shape.v, g.d)
    else:
        kt = _exchange(kt, [(i, i + 1), (-i - 1, -i)], adj, shape.v, g.d)
    return switch_coloring(tuple(kt[u] for u in range(1, g.d + 1)), nu)
