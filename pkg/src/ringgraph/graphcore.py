"""The r-noncommuting graph of a finite ring and exact small-graph analytics.

Graphs are immutable and store adjacency as one integer bitmask per vertex,
which keeps BFS, clique search and isomorphism refinement cheap at the
sizes we care about (at most 64 vertices for the exact searches).
"""

from __future__ import annotations

import enum
import json
import os
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .ringcore import FiniteRing, center

MAX_SEARCH_VERTICES = 64
BUDGET_ENV = "RINGGRAPH_NODE_BUDGET"
DEFAULT_NODE_BUDGET = 200_000


class Sentinel(enum.Enum):
    UNBOUNDED = "unbounded"
    UNREACHABLE = "unreachable"
    UNDECIDED = "undecided"

    def __repr__(self):
        return self.name


UNBOUNDED = Sentinel.UNBOUNDED
UNREACHABLE = Sentinel.UNREACHABLE
UNDECIDED = Sentinel.UNDECIDED


class GraphTooLarge(ValueError):
    pass


class _OutOfBudget(Exception):
    pass


def node_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_NODE_BUDGET


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimpleGraph:
    labels: tuple[str, ...]
    rows: tuple[int, ...]
    elements: tuple[int, ...] = ()
    name: str = "G"

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        if not self.elements:
            object.__setattr__(self, "elements", tuple(range(len(self.rows))))
        n = len(self.rows)
        if len(self.labels) != n or len(self.elements) != n:
            raise ValueError("labels, elements and rows must have the same length")
        for i, row in enumerate(self.rows):
            if row >> n:
                raise ValueError(f"vertex {i} has a neighbour out of range")
            if row >> i & 1:
                raise ValueError(f"vertex {i} has a loop")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency is not symmetric at ({i}, {j})")

    @classmethod
    def from_matrix(cls, adj, labels: Sequence[str] | None = None, elements: Sequence[int] = (),
                    name: str = "G") -> "SimpleGraph":
        adj = np.asarray(adj, dtype=bool)
        n = adj.shape[0]
        rows = tuple(sum(1 << int(j) for j in np.flatnonzero(adj[i])) for i in range(n))
        labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        return cls(labels, rows, tuple(elements), name)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "G") -> "SimpleGraph":
        rows = [0] * n
        for i, j in edges:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(tuple(str(i) for i in range(n)), tuple(rows), (), name)

    @property
    def vertex_count(self) -> int:
        return len(self.rows)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(_bits(self.rows[i]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.vertex_count) for j in _bits(self.rows[i] >> (i + 1) << (i + 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(bin(r).count("1") for r in self.rows)

    def adjacency_matrix(self) -> np.ndarray:
        n = self.vertex_count
        adj = np.zeros((n, n), dtype=bool)
        for i, j in self.edges():
            adj[i, j] = adj[j, i] = True
        return adj

    def induced(self, vertices: Sequence[int], name: str | None = None) -> "SimpleGraph":
        vertices = list(vertices)
        pos = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(sum(1 << pos[u] for u in _bits(self.rows[v]) if u in pos))
        return SimpleGraph(tuple(self.labels[v] for v in vertices), tuple(rows),
                           tuple(self.elements[v] for v in vertices), name or self.name)

    def vertex_of(self, element: int) -> int:
        return self.elements.index(element)


# construction


def build_gamma(R: FiniteRing, r: int) -> SimpleGraph:
    """x ~ y iff x != y and [x, y] is neither r nor -r."""
    C = R.commutator_table
    blocked = (C == r) | (C == R.neg(r))
    np.fill_diagonal(blocked, True)
    return SimpleGraph.from_matrix(~blocked, R.names, range(R.order), f"Gamma_{R.name}^{R.names[r]}")


def build_delta(R: FiniteRing, r: int) -> SimpleGraph:
    """The subgraph of the r-noncommuting graph induced on noncentral elements."""
    Z = center(R)
    keep = [x for x in R.elements if x not in Z]
    return build_gamma(R, r).induced(keep, f"Delta_{R.name}^{R.names[r]}")


# degrees and shape


def degree(G: SimpleGraph, v: int) -> int:
    return G.degrees[v]


def degree_sequence(G: SimpleGraph) -> list[int]:
    return sorted(G.degrees)


def is_regular(G: SimpleGraph) -> int | None:
    """The common degree, or None.  A graph with no vertices has none."""
    degs = set(G.degrees)
    return degs.pop() if len(degs) == 1 else None


def connected_components(G: SimpleGraph) -> list[list[int]]:
    seen = 0
    comps = []
    for v in range(G.vertex_count):
        if seen >> v & 1:
            continue
        comp = reach = 1 << v
        while reach:
            nxt = 0
            for u in _bits(reach):
                nxt |= G.rows[u]
            reach = nxt & ~comp
            comp |= reach
        seen |= comp
        comps.append(list(_bits(comp)))
    return comps


def _bfs(G: SimpleGraph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * G.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in _bits(G.rows[u]):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(G: SimpleGraph, u: int, v: int) -> int | Sentinel:
    d = _bfs(G, u)[v]
    return UNREACHABLE if d is None else d


def eccentricities(G: SimpleGraph) -> list[int | Sentinel]:
    out = []
    for v in range(G.vertex_count):
        d = _bfs(G, v)
        out.append(UNBOUNDED if None in d else max(d))
    return out


def diameter(G: SimpleGraph) -> int | Sentinel:
    """Longest shortest path; UNBOUNDED when the graph is disconnected."""
    if G.vertex_count == 0:
        return 0
    ecc = eccentricities(G)
    return UNBOUNDED if UNBOUNDED in ecc else max(ecc)


def farthest_pair(G: SimpleGraph) -> tuple[int, int, int | Sentinel] | None:
    """A pair realising the diameter (an unreachable pair if disconnected)."""
    best = None
    for u in range(G.vertex_count):
        d = _bfs(G, u)
        for v in range(u + 1, G.vertex_count):
            if d[v] is None:
                return (u, v, UNREACHABLE)
            if best is None or d[v] > best[2]:
                best = (u, v, d[v])
    return best


def _is_clique(G: SimpleGraph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    mask = sum(1 << v for v in vs)
    return all((G.rows[v] | 1 << v) & mask == mask for v in vs)


def _lollipop(G: SimpleGraph, comps) -> bool:
    n = G.vertex_count
    if len(comps) != 1 or n < 4:
        return False
    leaves = [v for v in range(n) if G.degrees[v] == 1]
    if len(leaves) != 1:
        return False
    path = [leaves[0]]
    prev, cur = None, leaves[0]
    while True:
        nxt = [u for u in G.neighbors(cur) if u != prev]
        if G.degrees[cur] == 1 and prev is not None:
            return False
        if len(nxt) != 1:
            return False
        prev, cur = cur, nxt[0]
        if G.degrees[cur] != 2:
            break
        path.append(cur)
    head = [v for v in range(n) if v not in path]
    m = len(head)
    if m < 3 or cur not in head or G.degrees[cur] != m:
        return False
    if not _is_clique(G, head):
        return False
    return G.edge_count == m * (m - 1) // 2 + len(path)


def _bipartition(G: SimpleGraph) -> tuple[list[int], list[int]] | None:
    side: dict[int, int] = {}
    for s in range(G.vertex_count):
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    left = [v for v in range(G.vertex_count) if side[v] == 0]
    right = [v for v in range(G.vertex_count) if side[v] == 1]
    return left, right


@dataclass(frozen=True)
class GraphShape:
    vertex_count: int
    edge_count: int
    is_connected: bool
    is_complete: bool
    is_empty: bool
    is_tree: bool
    is_star: bool
    is_lollipop: bool
    is_complete_bipartite: bool
    regular_degree: int | None
    is_disjoint_union_of_edges: bool
    edge_components: int | None = field(default=None)


def shape(G: SimpleGraph) -> GraphShape:
    n, m = G.vertex_count, G.edge_count
    comps = connected_components(G)
    connected = len(comps) == 1
    tree = connected and m == n - 1
    star = tree and n >= 2 and max(G.degrees) == n - 1
    bip = False
    if connected and n >= 2:
        parts = _bipartition(G)
        if parts is not None:
            left, right = parts
            bip = m == len(left) * len(right)
    k = is_regular(G)
    matching = k == 1
    return GraphShape(
        vertex_count=n,
        edge_count=m,
        is_connected=connected,
        is_complete=m == n * (n - 1) // 2,
        is_empty=m == 0,
        is_tree=tree,
        is_star=star,
        is_lollipop=_lollipop(G, comps),
        is_complete_bipartite=bip,
        regular_degree=k,
        is_disjoint_union_of_edges=matching,
        edge_components=n // 2 if matching else None,
    )


# exact searches


def _check_size(G: SimpleGraph):
    if G.vertex_count > MAX_SEARCH_VERTICES:
        raise GraphTooLarge(f"{G.vertex_count} vertices exceeds the exact-search cap of {MAX_SEARCH_VERTICES}")


def _color_sort(G: SimpleGraph, P: int) -> list[tuple[int, int]]:
    """Greedy colouring of candidate set P; returns (vertex, colour) by colour."""
    order = []
    colour = 0
    uncoloured = P
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~G.rows[v] & ~(1 << v)
            uncoloured &= ~(1 << v)
            order.append((v, colour))
    return order


def max_clique(G: SimpleGraph, budget: int | None = None) -> list[int] | Sentinel:
    """A maximum clique by branch and bound with a colouring bound."""
    _check_size(G)
    if G.vertex_count == 0:
        return []
    limit = node_budget(budget)
    best: list[int] = []
    nodes = 0

    def expand(P: int, clique: list[int]):
        nonlocal best, nodes
        nodes += 1
        if nodes > limit:
            raise _OutOfBudget
        for v, c in reversed(_color_sort(G, P)):
            if len(clique) + c <= len(best):
                return
            Q = P & G.rows[v]
            if Q:
                expand(Q, clique + [v])
            elif len(clique) + 1 > len(best):
                best = clique + [v]
            P &= ~(1 << v)

    try:
        expand((1 << G.vertex_count) - 1, [])
    except _OutOfBudget:
        return UNDECIDED
    return sorted(best)


def clique_number(G: SimpleGraph, budget: int | None = None) -> int | Sentinel:
    best = max_clique(G, budget)
    return best if best is UNDECIDED else len(best)


def _refine(GA: SimpleGraph, ca: list[int], GB: SimpleGraph, cb: list[int]):
    """Joint colour refinement.  Returns refined colourings or None on mismatch."""
    while True:
        sa = [(ca[v], tuple(sorted(Counter(ca[u] for u in GA.neighbors(v)).items()))) for v in range(len(ca))]
        sb = [(cb[v], tuple(sorted(Counter(cb[u] for u in GB.neighbors(v)).items()))) for v in range(len(cb))]
        if Counter(sa) != Counter(sb):
            return None
        palette = {sig: k for k, sig in enumerate(sorted(set(sa)))}
        na = [palette[s] for s in sa]
        nb = [palette[s] for s in sb]
        if len(palette) == len(set(ca)):
            return na, nb
        ca, cb = na, nb


def graph_isomorphic(G: SimpleGraph, H: SimpleGraph, budget: int | None = None) -> tuple[int, ...] | None | Sentinel:
    """Find a bijection mapping edges of G exactly onto edges of H.

    Individualise-and-refine backtracking.  Returns the image tuple, None
    if the graphs are not isomorphic, or UNDECIDED if the node budget runs
    out.  Any returned bijection has been checked edge by edge.
    """
    _check_size(G)
    _check_size(H)
    n = G.vertex_count
    if n != H.vertex_count or G.edge_count != H.edge_count or sorted(G.degrees) != sorted(H.degrees):
        return None
    limit = node_budget(budget)
    nodes = 0

    def search(ca, cb):
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _OutOfBudget
        refined = _refine(G, ca, H, cb)
        if refined is None:
            return None
        ca, cb = refined
        sizes = Counter(ca)
        if all(s == 1 for s in sizes.values()):
            where = {c: v for v, c in enumerate(cb)}
            f = tuple(where[c] for c in ca)
            return f if _preserves(G, H, f) else None
        # smallest nontrivial cell
        cell = min((s, c) for c, s in sizes.items() if s > 1)[1]
        v = ca.index(cell)
        fresh = max(ca) + 1
        ca2 = list(ca)
        ca2[v] = fresh
        for w in (u for u in range(n) if cb[u] == cell):
            cb2 = list(cb)
            cb2[w] = fresh
            found = search(ca2, cb2)
            if found is not None:
                return found
        return None

    try:
        return search([0] * n, [0] * n)
    except _OutOfBudget:
        return UNDECIDED


def _preserves(G: SimpleGraph, H: SimpleGraph, f: Sequence[int]) -> bool:
    if sorted(f) != list(range(H.vertex_count)):
        return False
    for i in range(G.vertex_count):
        for j in range(i + 1, G.vertex_count):
            if G.adjacent(i, j) != H.adjacent(f[i], f[j]):
                return False
    return True


def is_isomorphism(G: SimpleGraph, H: SimpleGraph, f: Sequence[int]) -> bool:
    return G.vertex_count == H.vertex_count and _preserves(G, H, f)


# exports


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(G: SimpleGraph) -> str:
    out = [f"graph {_dot_quote(G.name)} {{"]
    for v, label in enumerate(G.labels):
        out.append(f"  {v} [label={_dot_quote(label)}];")
    for i, j in G.edges():
        out.append(f"  {i} -- {j};")
    out.append("}")
    return "\n".join(out) + "\n"


def export_json(G: SimpleGraph) -> str:
    doc = {
        "name": G.name,
        "vertices": [{"id": v, "label": G.labels[v], "element": G.elements[v]} for v in range(G.vertex_count)],
        "edges": [[i, j] for i, j in G.edges()],
    }
    return json.dumps(doc, indent=1) + "\n"


def import_json(text: str) -> SimpleGraph:
    doc = json.loads(text)
    verts = sorted(doc["vertices"], key=lambda v: v["id"])
    if [v["id"] for v in verts] != list(range(len(verts))):
        raise ValueError("vertex ids must be 0..n-1")
    rows = [0] * len(verts)
    for i, j in doc["edges"]:
        if not i < j:
            raise ValueError(f"edge {[i, j]} must have i < j")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return SimpleGraph(tuple(v["label"] for v in verts), tuple(rows),
                       tuple(v.get("element", v["id"]) for v in verts), doc.get("name", "G"))
