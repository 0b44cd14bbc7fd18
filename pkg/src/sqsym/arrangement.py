"""The arrangement of a signed graph inside the type-B braid arrangement.

Regions of the full arrangement are signed permutations ``pi`` (the cone
``0 < x_{pi(1)} < ... < x_{pi(d)}``).  Chambers of the graph's arrangement are
unions of regions, found by gluing regions across walls that are not
hyperplanes of the graph.
"""

from typing import NamedTuple

from ._guard import check_size
from .graphs import DirectedSignedGraph, acyclic_orientations, region_orientation, sign_char, signed_permutations


class Hyperplane(NamedTuple):
    kind: str  # equal, opposite or zero
    i: int
    j: int = 0

    def __str__(self):
        if self.kind == "zero":
            return f"x{self.i}=0"
        return f"x{self.i}={'' if self.kind == 'equal' else '-'}x{self.j}"


def hyperplanes_of(g):
    out = set()
    for e in g.underlying.edges:
        if e.is_loop:
            out.add(Hyperplane("zero", e.u))
        else:
            out.add(Hyperplane("equal" if e.sign > 0 else "opposite", e.u, e.v))
    return out


def walls(pi):
    """``(hyperplane, neighbouring region)`` for each of the ``d`` walls of ``pi``."""
    out = []
    if pi:
        out.append((Hyperplane("zero", abs(pi[0])), (-pi[0],) + pi[1:]))
    for p in range(len(pi) - 1):
        a, b = pi[p], pi[p + 1]
        i, j = sorted((abs(a), abs(b)))
        kind = "equal" if (a > 0) == (b > 0) else "opposite"
        nb = pi[:p] + (b, a) + pi[p + 2 :]
        out.append((Hyperplane(kind, i, j), nb))
    return out


class Chamber(NamedTuple):
    name: tuple  # lexicographically least member region
    regions: tuple
    asc: int
    orientation: DirectedSignedGraph

    def fingerprint(self):
        return ",".join(sign_char(tu) + sign_char(tv) for tu, tv in self.orientation.taus)


def _disagreements(g, o):
    tau = dict(zip(o.edges, o.taus))
    return sum(1 for e, t in zip(g.edges, g.taus) if tau[e] != t)


def chambers(g):
    check_size("chambers", g.d)
    hs = hyperplanes_of(g)
    regions = list(signed_permutations(g.d))
    parent = {r: r for r in regions}

    def find(r):
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    for r in regions:
        for h, nb in walls(r):
            if h not in hs:
                a, b = find(r), find(nb)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    groups = {}
    for r in regions:
        groups.setdefault(find(r), []).append(r)
    out = []
    for members in groups.values():
        members = tuple(sorted(members))
        o = region_orientation(g, members[0])
        asc = _disagreements(g, o) if isinstance(g, DirectedSignedGraph) else 0
        out.append(Chamber(members[0], members, asc, o))
    return sorted(out)


class ZaslavskyReport(NamedTuple):
    chambers: int
    acyclic: int
    region_map_consistent: bool

    @property
    def ok(self):
        return self.chambers == self.acyclic and self.region_map_consistent


def _key(o):
    return tuple(zip(o.edges, o.taus))


def verify_zaslavsky(g):
    cs = chambers(g)
    acyc = {_key(o) for o in acyclic_orientations(g.underlying)}
    images = []
    consistent = True
    for c in cs:
        keys = {_key(region_orientation(g, r)) for r in c.regions}
        consistent &= len(keys) == 1
        images.extend(keys)
    consistent &= len(set(images)) == len(images) and set(images) == acyc
    return ZaslavskyReport(len(cs), len(acyc), consistent)
