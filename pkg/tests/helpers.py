"""Enumerators and generators shared by the test modules."""

import itertools

from sqsym import InvalidInput
from sqsym.graphs import DirectedSignedGraph, SignedGraph
from sqsym.posets import SignedPoset


def directed_edge_pool(d):
    """Every directed edge record on ``d`` vertices."""
    out = []
    for u in range(1, d + 1):
        for v in range(u + 1, d + 1):
            out += [(u, v, -1, 1), (u, v, 1, -1), (u, v, 1, 1), (u, v, -1, -1)]
        out += [(u, u, 1, 1), (u, u, -1, -1)]
    return out


def undirected_edge_pool(d):
    out = []
    for u in range(1, d + 1):
        for v in range(u + 1, d + 1):
            out += [(u, v, 1), (u, v, -1)]
        out.append((u, u, -1))
    return out


def all_directed_graphs(d, max_edges):
    pool = directed_edge_pool(d)
    for m in range(max_edges + 1):
        for sub in itertools.combinations(pool, m):
            yield DirectedSignedGraph.from_records(d, sub)


def all_signed_graphs(d, max_edges=None):
    pool = undirected_edge_pool(d)
    top = len(pool) if max_edges is None else max_edges
    for m in range(top + 1):
        for sub in itertools.combinations(pool, m):
            yield SignedGraph(d, sub)


def random_directed_graph(rng, d, max_edges=None):
    pool = directed_edge_pool(d)
    m = rng.randint(0, len(pool) if max_edges is None else min(max_edges, len(pool)))
    return DirectedSignedGraph.from_records(d, rng.sample(pool, m))


def random_signed_graph(rng, d):
    pool = undirected_edge_pool(d)
    return SignedGraph(d, rng.sample(pool, rng.randint(0, len(pool))))


def all_signed_posets(d):
    """Every signed poset on ``±[d]``, found by adding one mirrored pair at a time."""
    ground = [x for i in range(1, d + 1) for x in (-i, i)]
    pairs = {}
    for x, y in itertools.permutations(ground, 2):
        pairs.setdefault(min((x, y), (-y, -x)), (x, y))
    start = SignedPoset(d, frozenset())
    seen = {start.relation: start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for x, y in pairs.values():
                if (x, y) in p.relation or (y, x) in p.relation:
                    continue
                try:
                    q = SignedPoset(d, p.relation | {(x, y)})
                except InvalidInput:
                    continue
                if q.relation not in seen:
                    seen[q.relation] = q
                    nxt.append(q)
        frontier = nxt
    return list(seen.values())
