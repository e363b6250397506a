"""Simple graphs on vertices 1..n, with the orderings used for edge
binomial sequences.

Trees are ordered level by level from a pendant root, ties broken by
ascending child label.  A unicyclic graph qualifies when some cycle edge
has both endpoints of degree 2; removing it leaves a spanning tree whose
ordering is reused with the closing edge appended last.
"""

import itertools
import json
from dataclasses import dataclass, field

from .errors import InputError, NotInClassError, ParseError


class Graph:
    """Immutable simple undirected graph on vertices 1..n."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n, edges):
        if not isinstance(n, int) or n < 1:
            raise InputError(f"vertex count must be a positive integer, got {n!r}")
        norm = []
        seen = set()
        for e in edges:
            i, j = e
            if not (isinstance(i, int) and isinstance(j, int)):
                raise InputError(f"edge {e!r} has non-integer endpoints")
            if i == j:
                raise InputError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise InputError(f"edge {e!r} out of range 1..{n}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        norm.sort()
        self.n = n
        self.edges = tuple(norm)
        adj = {v: set() for v in range(1, n + 1)}
        for i, j in norm:
            adj[i].add(j)
            adj[j].add(i)
        self._adj = {v: tuple(sorted(s)) for v, s in adj.items()}

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, i, j):
        return (min(i, j), max(i, j)) in set(self.edges)

    def add_edge(self, i, j):
        return Graph(self.n, self.edges + ((i, j),))

    def remove_edge(self, i, j):
        key = (min(i, j), max(i, j))
        if key not in self.edges:
            raise InputError(f"no edge {key} to remove")
        return Graph(self.n, tuple(e for e in self.edges if e != key))

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# ---------------------------------------------------------------------------
# families


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star_graph(k):
    """K_{1,k}: center 1 with leaves 2..k+1."""
    if k < 1:
        raise InputError("a star needs at least one leaf")
    return Graph(k + 1, [(1, j) for j in range(2, k + 2)])


def cycle_with_pendants(n, k):
    """The n-cycle with k fresh pendant neighbors on every cycle vertex.

    The j-th pendant of cycle vertex i gets label n + (i-1)*k + j.
    """
    if n < 3 or k < 0:
        raise InputError("need a cycle of length >= 3 and k >= 0")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            edges.append((i, n + (i - 1) * k + j))
    return Graph(n * (k + 1), edges)


# ---------------------------------------------------------------------------
# serialization


def graph_from_json(data):
    """Accepts a dict or a JSON string {"n": int, "edges": [[i, j], ...]}."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad graph JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError('graph JSON needs keys "n" and "edges"')
    edges = data["edges"]
    if not isinstance(edges, list) or any(
            not isinstance(e, (list, tuple)) or len(e) != 2 for e in edges):
        raise ParseError('"edges" must be a list of [i, j] pairs')
    return Graph(data["n"], [tuple(e) for e in edges])


def graph_to_json(graph):
    return {"n": graph.n, "edges": [list(e) for e in graph.edges]}


def graph_from_edge_text(text):
    """One edge per line as "i j"; blank lines and # comments ignored.

    The vertex count is the largest label mentioned.
    """
    edges = []
    top = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise ParseError(f"line {lineno}: expected two vertex labels, got {raw!r}")
        i, j = int(parts[0]), int(parts[1])
        top = max(top, i, j)
        edges.append((i, j))
    if top == 0:
        raise ParseError("no edges in edge list text")
    return Graph(top, edges)


# ---------------------------------------------------------------------------
# analysis


@dataclass(frozen=True)
class GraphInfo:
    components: tuple
    is_connected: bool
    is_tree: bool
    is_unicyclic: bool
    pendants: tuple
    bridges: tuple
    degrees: dict = field(compare=False)


def _components(n, adj):
    seen = set()
    comps = []
    for s in range(1, n + 1):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def analyze(graph):
    comps = _components(graph.n, graph._adj)
    connected = len(comps) == 1
    ne = len(graph.edges)
    is_tree = connected and ne == graph.n - 1
    is_unicyclic = connected and ne == graph.n
    pendants = tuple(v for v in range(1, graph.n + 1) if graph.degree(v) == 1)
    bridges = []
    for e in graph.edges:
        smaller = graph.remove_edge(*e)
        if len(_components(smaller.n, smaller._adj)) > len(comps):
            bridges.append(e)
    degrees = {v: graph.degree(v) for v in range(1, graph.n + 1)}
    return GraphInfo(comps, connected, is_tree, is_unicyclic, pendants,
                     tuple(bridges), degrees)


def find_cycle(graph):
    """The unique cycle of a unicyclic graph, as a vertex tuple."""
    parent = {}
    seen = set()
    for s in range(1, graph.n + 1):
        if s in seen:
            continue
        seen.add(s)
        parent[s] = None
        stack = [(s, None)]
        while stack:
            v, par = stack.pop()
            for u in graph.neighbors(v):
                if u == par:
                    continue
                if u in seen:
                    # back edge: walk both ends up to the meeting point
                    pa = []
                    x = v
                    while x is not None:
                        pa.append(x)
                        x = parent[x]
                    pa_set = {x: k for k, x in enumerate(pa)}
                    x = u
                    pb = []
                    while x not in pa_set:
                        pb.append(x)
                        x = parent[x]
                    cycle = pa[:pa_set[x] + 1] + list(reversed(pb))
                    return tuple(cycle)
                seen.add(u)
                parent[u] = v
                stack.append((u, v))
    raise InputError("graph has no cycle")


# ---------------------------------------------------------------------------
# orderings


@dataclass(frozen=True)
class EdgeOrdering:
    """An ordered edge list with the rooting that produced it."""

    kind: str
    edges: tuple
    root: int
    levels: dict = field(compare=False)
    closing_edge: tuple = None


def tree_edge_ordering(graph, root=None):
    """Order tree edges level by level from a pendant root.

    An edge's level is the level of its deeper endpoint.  Within a level
    the edges follow the left to right order of the plane drawing: the
    parents keep the order they received in the previous level and each
    parent lists its children by label.  Keeping one parent's edges
    adjacent is what makes the later colon computations telescope; a
    plain sort by child label can interleave two parents and break that.
    The default root is the smallest labeled pendant vertex.
    """
    info = analyze(graph)
    if not info.is_tree:
        raise NotInClassError("edge ordering by levels needs a tree")
    if graph.n == 1:
        return EdgeOrdering("tree", (), 1, {1: 0})
    if root is None:
        root = info.pendants[0]
    elif root not in info.pendants:
        raise InputError(f"root {root} is not a pendant vertex")
    levels = {root: 0}
    order = []
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for u in graph.neighbors(v):
                if u not in levels:
                    levels[u] = levels[v] + 1
                    order.append((u, v))
                    nxt.append(u)
        frontier = nxt
    edges = tuple((min(u, v), max(u, v)) for u, v in order)
    return EdgeOrdering("tree", edges, root, levels)


def unicyclic_edge_ordering(graph):
    """Tree ordering of G minus a qualifying cycle edge, that edge last.

    A cycle edge qualifies when both endpoints have degree 2 in G.  Among
    the qualifying edges and pendant roots of the remaining tree, prefer
    rootings that put an endpoint of the removed edge at the deepest
    level, then the smallest root, then the lexicographically smallest
    edge sequence.
    """
    info = analyze(graph)
    if not info.is_unicyclic:
        raise NotInClassError("graph is not connected unicyclic")
    cycle = find_cycle(graph)
    m = len(cycle)
    cycle_edges = []
    for a in range(m):
        u, v = cycle[a], cycle[(a + 1) % m]
        cycle_edges.append((min(u, v), max(u, v)))
    qualifying = [e for e in cycle_edges
                  if graph.degree(e[0]) == 2 and graph.degree(e[1]) == 2]
    if not qualifying:
        raise NotInClassError(
            "no cycle edge has both endpoints of degree 2; the graph is not "
            "a tree plus an edge joining two pendant vertices")
    best = None
    for e in sorted(qualifying):
        tree = graph.remove_edge(*e)
        tinfo = analyze(tree)
        for root in tinfo.pendants:
            ordering = tree_edge_ordering(tree, root)
            deepest = max(ordering.levels.values())
            ok = ordering.levels[e[0]] == deepest or ordering.levels[e[1]] == deepest
            cand = (not ok, root, ordering.edges + (e,), ordering, e)
            if best is None or cand[:3] < best[:3]:
                best = cand
    _, root, edges, ordering, e = best
    return EdgeOrdering("unicyclic", edges, root, ordering.levels, e)


# ---------------------------------------------------------------------------
# neighborhood completion


def neighbor_completion(graph, e):
    """G_(e): add every edge inside N(i) and inside N(j), for e = {i, j}."""
    i, j = e
    if not (1 <= i <= graph.n and 1 <= j <= graph.n) or i == j:
        raise InputError(f"bad edge {e!r}")
    present = set(graph.edges)
    extra = []
    for center in (i, j):
        nb = graph.neighbors(center)
        for a, b in itertools.combinations(nb, 2):
            key = (min(a, b), max(a, b))
            if key not in present:
                present.add(key)
                extra.append(key)
    return Graph(graph.n, graph.edges + tuple(extra))


# ---------------------------------------------------------------------------
# induced subgraph search


def contains_induced(graph, sub):
    """An injective map carrying sub onto an induced subgraph, or None.

    Returned as a dict from sub's vertices to graph's vertices.
    """
    hs = sorted(range(1, sub.n + 1), key=lambda v: -sub.degree(v))
    gdeg = {v: graph.degree(v) for v in range(1, graph.n + 1)}
    assignment = {}
    used = set()

    def backtrack(k):
        if k == len(hs):
            return True
        h = hs[k]
        hnb = set(sub.neighbors(h))
        for g in range(1, graph.n + 1):
            if g in used or gdeg[g] < sub.degree(h):
                continue
            ok = True
            for h2, g2 in assignment.items():
                adj_h = h2 in hnb
                adj_g = g2 in set(graph.neighbors(g))
                if adj_h != adj_g:
                    ok = False
                    break
            if ok:
                assignment[h] = g
                used.add(g)
                if backtrack(k + 1):
                    return True
                del assignment[h]
                used.remove(g)
        return False

    if backtrack(0):
        return dict(assignment)
    return None


# ---------------------------------------------------------------------------
# tree enumeration


def prufer_to_edges(seq, n):
    """Decode a Prufer sequence over 1..n into tree edges."""
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    import heapq

    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def labeled_trees(n):
    """All labeled trees on 1..n (Cayley: n^(n-2) of them)."""
    if n == 1:
        yield Graph(1, [])
        return
    if n == 2:
        yield Graph(2, [(1, 2)])
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        yield Graph(n, prufer_to_edges(seq, n))


def _rooted_canon(graph, v, parent):
    subs = sorted(_rooted_canon(graph, u, v)
                  for u in graph.neighbors(v) if u != parent)
    return tuple(subs)


def _centroids(graph):
    """Vertices minimizing the largest component left by their removal."""
    n = graph.n
    size = {}

    def calc(v, parent):
        s = 1
        for u in graph.neighbors(v):
            if u != parent:
                s += calc(u, v)
        size[(v, parent)] = s
        return s

    calc(1, None)
    best = None
    out = []
    for v in range(1, n + 1):
        heaviest = 0
        for u in graph.neighbors(v):
            comp = size.get((u, v))
            if comp is None:
                comp = n - size[(v, u)]
            heaviest = max(heaviest, comp)
        if best is None or heaviest < best:
            best = heaviest
            out = [v]
        elif heaviest == best:
            out.append(v)
    return out


def tree_canonical_form(graph):
    """A canonical encoding, equal iff the trees are isomorphic."""
    if graph.n == 1:
        return ("*",)
    cents = _centroids(graph)
    return min(_rooted_canon(graph, c, None) for c in cents)


def nonisomorphic_trees(n):
    """One representative per isomorphism class of trees on n vertices."""
    seen = set()
    out = []
    for tree in labeled_trees(n):
        canon = tree_canonical_form(tree)
        if canon not in seen:
            seen.add(canon)
            out.append(tree)
    return out
