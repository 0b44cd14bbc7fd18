"""Signed graphs, bidirected orientations, switching, balance, frame circuits,
double covers and coloring statistics.

Vertices are the integers ``1..d``.  Signs and incidence orientations are
stored as ``+1``/``-1``.  ``tau = +1`` means the incidence points into the
vertex, ``tau = -1`` away from it.  A coloring is a tuple ``kappa`` with
``kappa[v - 1]`` the color of vertex ``v``.

A coloring and an orientation are compatible on an edge when
``tau_u*kappa(u) + tau_v*kappa(v) <= 0``; the edge is an ascent when that
quantity is positive.  A positive edge directed ``u -> v`` is therefore
compatible exactly when ``kappa(u) >= kappa(v)``.
"""

import itertools
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import NamedTuple

from ._guard import FRAME_CIRCUIT_MAX_VERTICES, InvalidInput, check_size, max_vertices

PLUS = 1
MINUS = -1


def parse_sign(s):
    if s in ("+", 1, "+1"):
        return PLUS
    if s in ("-", -1, "-1"):
        return MINUS
    raise InvalidInput(f"not a sign: {s!r}")


def sign_char(s):
    return "+" if s > 0 else "-"


def _sgn(x):
    return (x > 0) - (x < 0)


class Edge(NamedTuple):
    u: int
    v: int
    sign: int

    @property
    def is_loop(self):
        return self.u == self.v


def _normalize_edge(e, idx):
    if isinstance(e, dict):
        u, v, s = e["u"], e["v"], e["sign"]
    else:
        u, v, s = e
    u, v, s = int(u), int(v), parse_sign(s)
    if u > v:
        u, v = v, u
    if u == v and s == PLUS:
        raise InvalidInput(f"positive loop at vertex {u} on edge {idx}: positive loops admit no proper coloring")
    return Edge(u, v, s)


def _check_vertices(d, edges):
    if d < 0:
        raise InvalidInput(f"vertex count must be nonnegative, got {d}")
    for idx, e in enumerate(edges):
        if not (1 <= e.u <= d and 1 <= e.v <= d):
            raise InvalidInput(f"edge {idx} has an endpoint outside 1..{d}")


@dataclass(frozen=True)
class SignedGraph:
    d: int
    edges: tuple

    def __post_init__(self):
        edges = tuple(_normalize_edge(e, i) for i, e in enumerate(self.edges))
        _check_vertices(self.d, edges)
        seen = set()
        for idx, e in enumerate(edges):
            if e in seen:
                raise InvalidInput(f"duplicate edge {tuple(e)} on edge {idx}")
            seen.add(e)
        object.__setattr__(self, "edges", edges)

    @property
    def underlying(self):
        return self

    def __add__(self, other):
        """Disjoint union; the vertices of ``other`` are shifted by ``self.d``."""
        shifted = [Edge(e.u + self.d, e.v + self.d, e.sign) for e in other.edges]
        return SignedGraph(self.d + other.d, self.edges + tuple(shifted))


@dataclass(frozen=True)
class DirectedSignedGraph:
    """A signed graph together with a bidirection ``taus[i] = (tau_u, tau_v)``.

    Two edges may share endpoints and sign when they are directed oppositely.
    """

    d: int
    edges: tuple
    taus: tuple

    def __post_init__(self):
        if len(self.edges) != len(self.taus):
            raise InvalidInput("edges and taus differ in length")
        edges, taus = [], []
        for idx, (e, t) in enumerate(zip(self.edges, self.taus)):
            if isinstance(e, dict):
                u, v, s = int(e["u"]), int(e["v"]), parse_sign(e["sign"])
            else:
                u, v, s = int(e[0]), int(e[1]), parse_sign(e[2])
            tu, tv = parse_sign(t[0]), parse_sign(t[1])
            if u > v:
                u, v, tu, tv = v, u, tv, tu
            if u == v and s == PLUS:
                raise InvalidInput(f"positive loop at vertex {u} on edge {idx}: positive loops admit no proper coloring")
            if s != -tu * tv:
                raise InvalidInput(f"sign != -tau_u*tau_v on edge {idx}")
            edges.append(Edge(u, v, s))
            taus.append((tu, tv))
        _check_vertices(self.d, edges)
        seen = set()
        for idx, rec in enumerate(zip(edges, taus)):
            if rec in seen:
                raise InvalidInput(f"duplicate directed edge {tuple(rec[0])} {rec[1]} on edge {idx}")
            seen.add(rec)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "taus", tuple(taus))

    @classmethod
    def from_records(cls, d, records):
        """Build from ``(u, v, tau_u, tau_v)`` records; signs follow from the taus."""
        edges, taus = [], []
        for u, v, tu, tv in records:
            tu, tv = parse_sign(tu), parse_sign(tv)
            edges.append((u, v, -tu * tv))
            taus.append((tu, tv))
        return cls(d, tuple(edges), tuple(taus))

    @property
    def underlying(self):
        """The underlying signed graph, with repeated ``(u, v, sign)`` merged."""
        return SignedGraph(self.d, tuple(dict.fromkeys(self.edges)))

    def records(self):
        return [(e.u, e.v, e.sign, t[0], t[1]) for e, t in zip(self.edges, self.taus)]

    def __add__(self, other):
        shifted = [Edge(e.u + self.d, e.v + self.d, e.sign) for e in other.edges]
        return DirectedSignedGraph(self.d + other.d, self.edges + tuple(shifted), self.taus + other.taus)


def arc(u, v):
    """Record for a positive edge directed from ``u`` to ``v``."""
    return (u, v, MINUS, PLUS)


def introverted(u, v):
    return (u, v, PLUS, PLUS)


def extroverted(u, v):
    return (u, v, MINUS, MINUS)


# ---------------------------------------------------------------- double cover


@dataclass(frozen=True)
class SymmetricGraph:
    """Graph on ``{±1, ..., ±d}`` closed under ``(i, j) -> (-j, -i)``.

    ``arcs`` are ordered pairs.  An undirected symmetric graph stores both
    directions of every edge and has ``directed = False``.
    """

    d: int
    arcs: frozenset
    directed: bool = True

    def __post_init__(self):
        for a, b in self.arcs:
            if (-b, -a) not in self.arcs:
                raise InvalidInput(f"arc {(a, b)} has no mirror {(-b, -a)}")

    def neighbors(self):
        nb = {x: set() for x in _pm(self.d)}
        for a, b in self.arcs:
            nb[a].add(b)
            nb[b].add(a)
        return nb

    def has_directed_cycle(self):
        ts = TopologicalSorter({x: set() for x in _pm(self.d)})
        for a, b in self.arcs:
            if a == b:
                return True
            ts.add(b, a)
        try:
            tuple(ts.static_order())
        except CycleError:
            return True
        return False


def _pm(d):
    return [x for i in range(1, d + 1) for x in (-i, i)]


def edge_arc(edge, tau):
    """The arc ``(high, low)`` of the double cover for one directed edge.

    Compatibility ``tau_u*k(u) + tau_v*k(v) <= 0`` reads ``k(a) <= k(b)`` with
    ``a = tau_u*u`` and ``b = -tau_v*v`` (where ``k(-i) = -k(i)``); the arc
    points from ``b`` to ``a``.  The mirror arc is ``(-a, -b)``.
    """
    a = tau[0] * edge.u
    b = -tau[1] * edge.v
    return (b, a)


def double_cover(g):
    """Symmetric graph of ``g``: directed for a ``DirectedSignedGraph``,
    undirected (both directions stored) for a ``SignedGraph``."""
    arcs = set()
    if isinstance(g, DirectedSignedGraph):
        for e, t in zip(g.edges, g.taus):
            b, a = edge_arc(e, t)
            arcs.add((b, a))
            arcs.add((-a, -b))
        return SymmetricGraph(g.d, frozenset(arcs), True)
    for e in g.edges:
        if e.is_loop:
            pairs = [(e.u, -e.u)]
        elif e.sign == PLUS:
            pairs = [(e.u, e.v), (-e.u, -e.v)]
        else:
            pairs = [(e.u, -e.v), (-e.u, e.v)]
        for a, b in pairs:
            arcs.add((a, b))
            arcs.add((b, a))
    return SymmetricGraph(g.d, frozenset(arcs), False)


def lift_coloring(kappa):
    """Symmetric coloring of the double cover induced by ``kappa``."""
    out = {}
    for i, c in enumerate(kappa, start=1):
        out[i] = c
        out[-i] = -c
    return out


def is_proper_symmetric(sg, kcol):
    return all(kcol[a] != kcol[b] for a, b in sg.arcs)


# ------------------------------------------------------------------ colorings


class ColoringStats(NamedTuple):
    proper: bool
    asc: int
    incompatible_edges: tuple


def coloring_stats(g, kappa):
    if len(kappa) != g.d:
        raise InvalidInput(f"coloring has {len(kappa)} values for {g.d} vertices")
    proper = True
    bad = []
    for idx, (e, (tu, tv)) in enumerate(zip(g.edges, g.taus)):
        ku, kv = kappa[e.u - 1], kappa[e.v - 1]
        if ku == e.sign * kv:
            proper = False
        if tu * ku + tv * kv > 0:
            bad.append(idx)
    return ColoringStats(proper, len(bad), tuple(bad))


def is_proper(g, kappa):
    return all(kappa[e.u - 1] != e.sign * kappa[e.v - 1] for e in g.edges)


def switch_graph(g, nu):
    nu = tuple(parse_sign(s) for s in nu)
    if len(nu) != g.d:
        raise InvalidInput("switching function must be total on the vertices")
    edges = [Edge(e.u, e.v, nu[e.u - 1] * e.sign * nu[e.v - 1]) for e in g.edges]
    if isinstance(g, DirectedSignedGraph):
        taus = [(nu[e.u - 1] * tu, nu[e.v - 1] * tv) for e, (tu, tv) in zip(g.edges, g.taus)]
        return DirectedSignedGraph(g.d, tuple(edges), tuple(taus))
    return SignedGraph(g.d, tuple(edges))


def switch_coloring(kappa, nu):
    return tuple(parse_sign(s) * c for c, s in zip(kappa, nu, strict=True))


# ------------------------------------------------------------------- balance


def is_balanced(g):
    # potential p with sign(e) = p(u) p(v) along a spanning forest
    pot = {}
    adj = {v: [] for v in range(1, g.d + 1)}
    for e in g.edges:
        if e.is_loop:
            if e.sign == MINUS:
                return False
            continue
        adj[e.u].append((e.v, e.sign))
        adj[e.v].append((e.u, e.sign))
    for root in range(1, g.d + 1):
        if root in pot:
            continue
        pot[root] = PLUS
        stack = [root]
        while stack:
            x = stack.pop()
            for y, s in adj[x]:
                want = pot[x] * s
                if y not in pot:
                    pot[y] = want
                    stack.append(y)
                elif pot[y] != want:
                    return False
    return True


# ------------------------------------------------------------ frame circuits


def _incidence(edges, d):
    inc = {v: [] for v in range(1, d + 1)}
    for idx, e in enumerate(edges):
        if not e.is_loop:
            inc[e.u].append((idx, e.v))
            inc[e.v].append((idx, e.u))
    return inc


def _simple_cycles(edges, d):
    """All cycles as (edge index frozenset, vertex frozenset), loops included."""
    found = {}
    for idx, e in enumerate(edges):
        if e.is_loop:
            found[frozenset([idx])] = frozenset([e.u])
    inc = _incidence(edges, d)

    def dfs(start, v, verts, used):
        for idx, w in inc[v]:
            if idx in used:
                continue
            if w == start and used:
                key = frozenset(used + [idx])
                found.setdefault(key, frozenset(verts))
            elif w > start and w not in verts:
                verts.append(w)
                used.append(idx)
                dfs(start, w, verts, used)
                used.pop()
                verts.pop()

    for s in range(1, d + 1):
        dfs(s, s, [s], [])
    return found


def _sign_of(edges, idxs):
    p = PLUS
    for i in idxs:
        p *= edges[i].sign
    return p


def _connecting_paths(edges, d, c1, c2, forbidden):
    """Simple paths from a vertex of ``c1`` to a vertex of ``c2`` whose inner
    vertices avoid ``c1 | c2`` and whose edges avoid ``forbidden``."""
    inc = _incidence(edges, d)
    paths = []

    def dfs(v, seen, used):
        for idx, w in inc[v]:
            if idx in forbidden or idx in used:
                continue
            if w in c2:
                paths.append(frozenset(used + [idx]))
            elif w not in c1 and w not in seen:
                seen.add(w)
                used.append(idx)
                dfs(w, seen, used)
                used.pop()
                seen.discard(w)

    for x in sorted(c1):
        dfs(x, set(), [])
    return paths


def frame_circuits(g):
    """Balanced cycles, tight handcuffs and loose handcuffs of ``g``.

    Each circuit is a frozenset of edge indices into ``g.edges``; parallel
    edges of a directed graph are distinct edges here.  Exhaustive, so only
    meant for small graphs.
    """
    check_size("frame_circuits", g.d, max(FRAME_CIRCUIT_MAX_VERTICES, max_vertices()))
    edges = g.edges
    cycles = _simple_cycles(edges, g.d)
    out = set()
    unbalanced = []
    for es, vs in cycles.items():
        if _sign_of(edges, es) == PLUS:
            out.add(es)
        else:
            unbalanced.append((es, vs))
    for (e1, v1), (e2, v2) in itertools.combinations(unbalanced, 2):
        shared = v1 & v2
        if len(shared) == 1:
            out.add(e1 | e2)
        elif not shared:
            for p in _connecting_paths(edges, g.d, v1, v2, e1 | e2):
                out.add(e1 | e2 | p)
    return sorted(out, key=lambda c: (len(c), sorted(c)))


def has_source_or_sink(g, circuit):
    seen = {}
    for idx in circuit:
        e, (tu, tv) = g.edges[idx], g.taus[idx]
        seen.setdefault(e.u, set()).add(tu)
        seen.setdefault(e.v, set()).add(tv)
    return any(len(s) == 1 for s in seen.values())


def is_acyclic(g, method="circuits"):
    """Whether every frame circuit of ``g`` has a source or a sink.

    ``method="double_cover"`` instead looks for a directed cycle in the double
    cover; the two agree on every graph the test-suite enumerates.
    """
    if method == "double_cover":
        return not double_cover(g).has_directed_cycle()
    if method != "circuits":
        raise ValueError(f"unknown method {method!r}")
    return all(has_source_or_sink(g, c) for c in frame_circuits(g))


def orientation_choices(edge):
    if edge.sign == PLUS:
        return [(MINUS, PLUS), (PLUS, MINUS)]
    return [(MINUS, MINUS), (PLUS, PLUS)]


def orientations(g):
    """Every orientation of the signed graph ``g`` (lexicographic in the taus)."""
    base = g.underlying
    for taus in itertools.product(*(orientation_choices(e) for e in base.edges)):
        yield DirectedSignedGraph(base.d, base.edges, taus)


def acyclic_orientations(g, method="circuits"):
    base = g.underlying
    check_size("acyclic_orientations", base.d, max(FRAME_CIRCUIT_MAX_VERTICES, max_vertices()))
    if method == "double_cover":
        return [o for o in orientations(base) if is_acyclic(o, "double_cover")]
    circuits = frame_circuits(base)
    out = []
    for o in orientations(base):
        if all(has_source_or_sink(o, c) for c in circuits):
            out.append(o)
    return out


# ------------------------------------------------------ signed permutations


def signed_permutations(d):
    """All of S𝔖_d as tuples ``(pi(1), ..., pi(d))``, in a fixed order."""
    for perm in itertools.permutations(range(1, d + 1)):
        for signs in itertools.product((1, -1), repeat=d):
            yield tuple(s * p for s, p in zip(signs, perm))


def check_signed_permutation(pi, d=None):
    pi = tuple(int(x) for x in pi)
    n = len(pi) if d is None else d
    if len(pi) != n or sorted(abs(x) for x in pi) != list(range(1, n + 1)):
        raise InvalidInput(f"not a signed permutation of size {n}: {pi}")
    return pi


def full_word(pi):
    """``pi(-d) ... pi(-1) pi(1) ... pi(d)``."""
    return tuple(-x for x in reversed(pi)) + tuple(pi)


def region_point(pi):
    """An integer point of the open region ``0 < x_{pi(1)} < ... < x_{pi(d)}``."""
    x = [0] * len(pi)
    for pos, p in enumerate(pi, start=1):
        x[abs(p) - 1] = pos if p > 0 else -pos
    return tuple(x)


def region_orientation(g, pi):
    """The orientation of ``g`` compatible with every point of the region of ``pi``."""
    base = g.underlying
    pi = check_signed_permutation(pi, base.d)
    x = region_point(pi)
    taus = []
    for e in base.edges:
        xu, xv = x[e.u - 1], x[e.v - 1]
        if e.is_loop:
            t = -_sgn(xu)
            taus.append((t, t))
        elif e.sign == PLUS:
            t = -_sgn(xu - xv)
            taus.append((t, -t))
        else:
            t = -_sgn(xu + xv)
            taus.append((t, t))
    return DirectedSignedGraph(base.d, base.edges, tuple(taus))


# ------------------------------------------------------- named constructions


def circulant(d, k):
    """All-positive circulant digraph: ``v_i -> v_{i+p mod d}`` for every
    ``i`` in ``1..d`` and ``p`` in ``1..k``."""
    if not (1 <= k < d - 1):
        raise InvalidInput(f"circulant needs 1 <= k < d-1, got d={d}, k={k}")
    recs = []
    for i in range(1, d + 1):
        for p in range(1, k + 1):
            j = (i + p - 1) % d + 1
            recs.append(arc(i, j))
    return DirectedSignedGraph.from_records(d, recs)


def switched_circulant(d, k, switched):
    if isinstance(switched, int):
        switched = (switched,)
    switched = set(switched)
    if not switched or not switched <= set(range(1, d + 1)):
        raise InvalidInput(f"switched vertices must lie in 1..{d}")
    nu = tuple(MINUS if v in switched else PLUS for v in range(1, d + 1))
    return switch_graph(circulant(d, k), nu)


def with_negative_loops(g):
    """Add an introverted negative loop at every vertex (forces nonzero colors)."""
    recs = [(e.u, e.v, t[0], t[1]) for e, t in zip(g.edges, g.taus)]
    have = set(recs)
    for v in range(1, g.d + 1):
        if (v, v, PLUS, PLUS) not in have:
            recs.append(introverted(v, v))
    return DirectedSignedGraph.from_records(g.d, recs)


def example2():
    """Two vertices, a positive edge 1 -> 2, an introverted negative edge
    {1, 2} and an introverted negative loop at 1."""
    return DirectedSignedGraph.from_records(2, [arc(1, 2), introverted(1, 2), introverted(1, 1)])


def build_named(name, *params):
    name = name.replace("_", "-")
    if name == "example2":
        return example2()
    if name == "circulant":
        return circulant(*map(int, params))
    if name in ("switched-circulant", "circulant-switched"):
        if len(params) < 3:
            raise InvalidInput("switched-circulant needs d, k and at least one vertex")
        d, k, *vs = map(int, params)
        return switched_circulant(d, k, vs)
    if name == "with-negative-loops":
        (g,) = params
        return with_negative_loops(g)
    raise InvalidInput(f"unknown named graph {name!r}")
