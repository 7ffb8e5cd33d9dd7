"""Small abstract-graph utilities shared by the search and reduction code.

These work on plain adjacency, with no embedding attached. The embedding
types stay in `embedding`; anything that only needs who-is-next-to-whom
(cycle finding, components, bipartitions, the Hamiltonicity searches) goes
through here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """An immutable simple undirected graph on vertices 0..n-1."""
    n: int
    edges: Tuple[Edge, ...]
    adj: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: List[List[int]] = [[] for _ in range(self.n)]
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise ValueError(f"bad edge ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(tuple(sorted(x)) for x in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((min(u, v), max(u, v)) for u, v in edges))

    @classmethod
    def from_embedding(cls, emb) -> "Graph":
        return cls(emb.vertex_count, emb.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(components(range(self.n), lambda v: self.adj[v])) == 1

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph, vertices renumbered ascending."""
        kept = sorted(set(keep))
        renum = {v: i for i, v in enumerate(kept)}
        keep_set = set(kept)
        edges = [(renum[u], renum[v]) for u, v in self.edges if u in keep_set and v in keep_set]
        return Graph.from_edges(len(kept), edges)

    def cycle_rank(self) -> int:
        c = len(components(range(self.n), lambda v: self.adj[v]))
        return self.m - self.n + c


def components(vertices: Iterable[int], adjacency: Callable[[int], Iterable[int]]) -> List[FrozenSet[int]]:
    """Connected components of the subgraph induced by `vertices`.

    `adjacency` may over-report: neighbours outside `vertices` are ignored.
    Components are ordered by their smallest member.
    """
    verts = sorted(set(vertices))
    inside = set(verts)
    seen = set()
    comps = []
    for s in verts:
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adjacency(x):
                if y in inside and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return comps


def find_cycle(vertices: Iterable[int], adjacency: Callable[[int], Iterable[int]]) -> Optional[List[int]]:
    """A simple cycle in the induced subgraph, or None if it is a forest.

    Deterministic: vertices and neighbours are scanned in ascending order,
    and the first back edge met closes the reported cycle.
    """
    verts = sorted(set(vertices))
    inside = set(verts)
    parent: Dict[int, Optional[int]] = {}
    depth: Dict[int, int] = {}
    for root in verts:
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        stack = [(root, iter(sorted(u for u in adjacency(root) if u in inside)))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if u not in parent:
                    parent[u] = v
                    depth[u] = depth[v] + 1
                    stack.append((u, iter(sorted(w for w in adjacency(u) if w in inside))))
                    advanced = True
                    break
                if u != parent[v] and depth.get(u, -1) < depth[v]:
                    # back edge v-u: walk parents from v up to u
                    cyc = [v]
                    x = v
                    while x != u:
                        x = parent[x]  # type: ignore[assignment]
                        cyc.append(x)
                    return cyc
            if not advanced:
                stack.pop()
    return None


def is_forest(vertices: Iterable[int], adjacency: Callable[[int], Iterable[int]]) -> bool:
    return find_cycle(vertices, adjacency) is None


def bipartition(g: Graph) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """2-colour classes of a connected bipartite graph, or None if odd cycle.

    The class containing vertex 0 comes first.
    """
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    a = frozenset(v for v in range(g.n) if colour[v] == 0)
    b = frozenset(v for v in range(g.n) if colour[v] == 1)
    return (a, b) if 0 in a or not a else (b, a)
