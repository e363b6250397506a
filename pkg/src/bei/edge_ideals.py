"""Binomial edge ideals and closed formulas for their colon ideals.

For a graph G on 1..n work in K[x_1..x_n, y_1..y_n] with the degrevlex
order for x_1 > ... > x_n > y_1 > ... > y_n.  The generator attached to
an edge {i, j} with i < j is f_ij = x_i*y_j - x_j*y_i.

Coloning J_G by one of its generators has a combinatorial answer: the
binomial edge ideal of the graph completed along the edge's neighborhoods,
plus, when the edge sits on cycles, monomials read off the simple paths
between its endpoints.
"""

from .errors import InputError, RingError
from .graphs import Graph, neighbor_completion
from .groebner import Ideal
from .ring import QQ, PolyRing


def default_ring(n, field=QQ):
    """K[x_1..x_n, y_1..y_n], degrevlex, x block before y block."""
    names = tuple(f"x_{i}" for i in range(1, n + 1)) + \
        tuple(f"y_{i}" for i in range(1, n + 1))
    return PolyRing(names, field=field)


def _pair_count(ring):
    nv = ring.nvars
    if nv % 2 != 0:
        raise RingError("expected a ring in paired x/y variables")
    n = nv // 2
    for i in range(1, n + 1):
        if f"x_{i}" not in ring._index or f"y_{i}" not in ring._index:
            raise RingError(f"ring is missing x_{i} or y_{i}")
    return n


def edge_binomial(ring, i, j):
    """f_ij = x_i*y_j - x_j*y_i, indices normalized so i < j."""
    if i == j:
        raise InputError(f"loop at vertex {i}")
    if i > j:
        i, j = j, i
    xi, yi = ring.var(f"x_{i}"), ring.var(f"y_{i}")
    xj, yj = ring.var(f"x_{j}"), ring.var(f"y_{j}")
    return xi * yj - xj * yi


def edge_binomials(graph, ring=None, field=QQ):
    """Generators of J_G in the graph's sorted edge order."""
    if ring is None:
        ring = default_ring(graph.n, field=field)
    else:
        n = _pair_count(ring)
        if n < graph.n:
            raise RingError(f"ring has {n} vertex pairs, graph needs {graph.n}")
    return [edge_binomial(ring, i, j) for i, j in graph.edges]


def binomial_edge_ideal(graph, ring=None, field=QQ):
    gens = edge_binomials(graph, ring=ring, field=field)
    if not gens:
        if ring is None:
            ring = default_ring(graph.n, field=field)
        return Ideal(ring, [])
    return Ideal(gens[0].ring, gens)


def sequence_for_ordering(edges, ring=None, n=None, field=QQ):
    """Edge binomials in the given edge order (an EdgeOrdering or a list)."""
    if hasattr(edges, "edges"):
        edges = edges.edges
    edges = [tuple(e) for e in edges]
    if ring is None:
        if n is None:
            n = max((max(e) for e in edges), default=1)
        ring = default_ring(n, field=field)
    return [edge_binomial(ring, i, j) for i, j in edges]


def simple_paths(graph, i, j):
    """All simple paths from i to j with at least one interior vertex.

    Yields the interior vertex sequences.  Neighbors are explored in
    ascending order so the enumeration is deterministic.
    """
    out = []
    path = [i]
    on_path = {i}

    def extend(v):
        for u in graph.neighbors(v):
            if u == j:
                if len(path) > 1:
                    out.append(tuple(path[1:]))
                continue
            if u in on_path:
                continue
            path.append(u)
            on_path.add(u)
            extend(u)
            path.pop()
            on_path.remove(u)

    extend(i)
    return out


def colon_bridge_formula(graph, e, ring=None, field=QQ):
    """J_G : f_e when e joins two components: the completed graph's ideal."""
    i, j = min(e), max(e)
    if i == j:
        raise InputError(f"loop at vertex {i}")
    if graph.has_edge(i, j):
        raise InputError(f"({i}, {j}) is already an edge")
    completed = neighbor_completion(graph, (i, j))
    return binomial_edge_ideal(completed, ring=ring, field=field)


def colon_path_formula(graph, e, ring=None, field=QQ):
    """J_G : f_e for any vertex pair e = {i, j}.

    Takes the completed graph's binomials and adds, for every simple path
    i, i_1, ..., i_s, j, the s+1 monomials obtained by switching the
    interior variables from x to y one position at a time:

        x_{i_1}..x_{i_s},  y_{i_1}x_{i_2}..x_{i_s},  ...,  y_{i_1}..y_{i_s}

    A bridge has no path with interior vertices, so this degenerates to
    the completed graph's ideal.
    """
    i, j = min(e), max(e)
    if i == j:
        raise InputError(f"loop at vertex {i}")
    if graph.has_edge(i, j):
        raise InputError(f"({i}, {j}) is already an edge")
    completed = neighbor_completion(graph, (i, j))
    if ring is None:
        ring = default_ring(graph.n, field=field)
    gens = edge_binomials(completed, ring=ring)
    seen = set()
    monos = []
    for interior in simple_paths(graph, i, j):
        s = len(interior)
        for t in range(s + 1):
            m = ring.one()
            for k, v in enumerate(interior):
                m = m * ring.var(f"y_{v}" if k < t else f"x_{v}")
            key = m.leading_monomial()
            if key not in seen:
                seen.add(key)
                monos.append(m)
    monos.sort(key=lambda p: ring.key(p.leading_monomial()))
    return Ideal(ring, gens + monos)
