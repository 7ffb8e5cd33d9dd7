"""Brute-force search oracles: Hamiltonian cycles and paths, permeating
subtree enumeration, cycle enumeration.

Everything here is exhaustive backtracking over bitmask state, bounded by an
explicit SearchBudget. Exceeding the budget produces an inconclusive result,
never a silently wrong answer. All searches are deterministic: vertices and
branches are always taken in ascending order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .graphs import Graph

Edge = Tuple[int, int]

FOUND = "found"
NONE = "none"
INCONCLUSIVE = "inconclusive"


class BudgetExceeded(Exception):
    """Internal signal: the node or wall-clock budget ran out."""


@dataclass
class SearchBudget:
    """Caps exhaustive searches: node count and wall-clock seconds."""
    node_limit: int = 10 ** 8
    wall_limit: float = 600.0
    nodes: int = 0
    _started: float = field(default=-1.0, repr=False)
    _check_every: int = field(default=4096, repr=False)

    def tick(self) -> None:
        if self._started < 0:
            self._started = time.monotonic()
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise BudgetExceeded(f"node limit {self.node_limit} exceeded")
        if self.nodes % self._check_every == 0:
            if time.monotonic() - self._started > self.wall_limit:
                raise BudgetExceeded(f"wall limit {self.wall_limit}s exceeded")


@dataclass(frozen=True)
class CycleSearch:
    """Outcome of a Hamiltonian cycle or path search."""
    status: str                      # found | none | inconclusive
    cycle: Optional[Tuple[int, ...]]
    explored: int
    reason: str = ""


@dataclass(frozen=True)
class Enumeration:
    """Outcome of an exhaustive enumeration; complete=False means the budget
    ran out and `items` only holds what was seen up to that point."""
    complete: bool
    items: Tuple[Tuple[int, ...], ...]
    explored: int


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    """Rotate to start at the smallest vertex, direct toward its smaller neighbour."""
    k = len(cycle)
    i = cycle.index(min(cycle))
    rotated = [cycle[(i + j) % k] for j in range(k)]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


# ======================================================================
# Hamiltonian cycles
# ======================================================================

def _norm_edge(e: Sequence[int]) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


def find_hamiltonian_cycle(g: Graph,
                           required: Iterable[Sequence[int]] = (),
                           forbidden: Iterable[Sequence[int]] = (),
                           budget: Optional[SearchBudget] = None) -> CycleSearch:
    """Search for a Hamiltonian cycle using every required edge and no
    forbidden edge.

    Backtracking with two prunes: every unvisited vertex must keep at least
    two usable incident edges, and the unvisited region plus both open path
    ends must stay connected. The witness comes back in canonical form
    (smallest vertex first, directed toward its smaller neighbour).

    Raises:
        ValueError: if a constraint edge is absent from the graph or an edge
            is both required and forbidden.
    """
    budget = budget or SearchBudget()
    req = sorted({_norm_edge(e) for e in required})
    forb = {_norm_edge(e) for e in forbidden}
    for e in list(req) + sorted(forb):
        if not g.has_edge(*e):
            raise ValueError(f"constraint edge {e} not in graph")
    overlap = set(req) & forb
    if overlap:
        raise ValueError(f"edges both required and forbidden: {sorted(overlap)}")

    n = g.n
    if n < 3:
        return CycleSearch(NONE, None, 0, "needs at least 3 vertices")
    adj = [0] * n
    for u, v in g.edges:
        if (u, v) in forb:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    reqmask = [0] * n
    for u, v in req:
        reqmask[u] |= 1 << v
        reqmask[v] |= 1 << u
    if any(bin(r).count("1") > 2 for r in reqmask):
        return CycleSearch(NONE, None, 0, "a vertex carries three required edges")

    full = (1 << n) - 1
    start = req[0][0] if req else 0
    start_bit = 1 << start

    def connected_enough(visited: int, cur: int) -> bool:
        # the rest of the cycle runs through unvisited vertices from cur to start
        allowed = (full & ~visited) | (1 << cur) | start_bit
        seen = 1 << cur
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v] & allowed
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        return seen & allowed == allowed

    best: List[Optional[Tuple[int, ...]]] = [None]
    path: List[int] = [start]

    def extend(cur: int, visited: int, prev_bit: int) -> bool:
        budget.tick()
        if visited == full:
            if not adj[cur] & start_bit:
                return False
            # closing edge cur-start; required edges at both closure ends
            if reqmask[cur] & ~(prev_bit | start_bit):
                return False
            if reqmask[start] & ~((1 << path[1]) | (1 << cur)):
                return False
            best[0] = canonical_cycle(path)
            return True
        # leaving cur: its cycle edges will be prev and the next step only
        other = reqmask[cur] & ~prev_bit
        if other & visited:
            return False  # a required edge at cur now points into the dead past
        if other:
            if other & (other - 1):
                return False  # two required edges left but one slot
            cands = other
        else:
            cands = adj[cur] & ~visited
        rest = full & ~visited
        for w in _bits(rest):
            avail = adj[w] & (rest | (1 << cur) | start_bit)
            if avail == 0 or avail & (avail - 1) == 0:
                return False  # every future vertex still needs two edges
        if not connected_enough(visited, cur):
            return False
        for w in sorted(_bits(cands)):
            path.append(w)
            if extend(w, visited | (1 << w), 1 << cur):
                return True
            path.pop()
        return False

    try:
        ok = extend(start, start_bit, 0)
    except BudgetExceeded as exc:
        return CycleSearch(INCONCLUSIVE, None, budget.nodes, str(exc))
    if ok:
        return CycleSearch(FOUND, best[0], budget.nodes)
    return CycleSearch(NONE, None, budget.nodes)


def find_hamiltonian_path(g: Graph,
                          budget: Optional[SearchBudget] = None) -> CycleSearch:
    """Search for a Hamiltonian path with free endpoints."""
    budget = budget or SearchBudget()
    n = g.n
    if n == 0:
        return CycleSearch(NONE, None, 0, "empty graph")
    if n == 1:
        return CycleSearch(FOUND, (0,), 0)
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    full = (1 << n) - 1
    path: List[int] = []

    def reach_all(visited: int, cur: int) -> bool:
        allowed = (full & ~visited) | (1 << cur)
        seen = 1 << cur
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v] & allowed
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        return seen & allowed == allowed

    def extend(cur: int, visited: int) -> bool:
        budget.tick()
        if visited == full:
            return True
        if not reach_all(visited, cur):
            return False
        rest = full & ~visited
        tight = 0
        for w in _bits(rest):
            avail = adj[w] & (rest | (1 << cur))
            if avail == 0:
                return False
            if avail & (avail - 1) == 0:
                tight += 1  # must end the path there
                if tight > 1:
                    return False
        for w in sorted(_bits(adj[cur] & ~visited)):
            path.append(w)
            if extend(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    try:
        for s in range(n):
            path[:] = [s]
            if extend(s, 1 << s):
                return CycleSearch(FOUND, tuple(path), budget.nodes)
    except BudgetExceeded as exc:
        return CycleSearch(INCONCLUSIVE, None, budget.nodes, str(exc))
    return CycleSearch(NONE, None, budget.nodes)


# ======================================================================
# Permeating subtrees
# ======================================================================

def enumerate_permeating_subtrees(tri,
                                  budget: Optional[SearchBudget] = None) -> Enumeration:
    """All vertex sets that induce a subtree hitting every face, each once,
    in ascending lexicographic order (as sorted tuples).

    Branch and bound over connected induced acyclic sets grown from each
    root in turn (a set is charged to its smallest vertex). A branch dies
    as soon as some face has all three corners decided out: excluded,
    below the root, or already holding two or more neighbours of the set
    (such a vertex could never join without closing an induced cycle).
    """
    budget = budget or SearchBudget()
    n = tri.vertex_count
    adj = [0] * n
    for u, v in tri.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    face_masks = []
    for fs in tri.face_sets:
        m = 0
        for v in fs:
            m |= 1 << v
        face_masks.append(m)
    found: List[Tuple[int, ...]] = []
    complete = True

    def grow(s_mask: int, excluded: int, one_nbr: int, dead: int) -> None:
        budget.tick()
        usable = ~(excluded | dead | s_mask)
        hit_all = True
        for fm in face_masks:
            if not fm & s_mask:
                hit_all = False
                if not fm & usable:
                    return
        if hit_all:
            found.append(tuple(v for v in range(n) if (s_mask >> v) & 1))
        taken = 0
        for w in sorted(_bits(one_nbr & ~excluded)):
            wbit = 1 << w
            n_one, n_dead = one_nbr & ~wbit, dead
            for x in _bits(adj[w] & ~s_mask & ~wbit):
                xbit = 1 << x
                if n_one & xbit:
                    n_one &= ~xbit
                    n_dead |= xbit
                elif not n_dead & xbit:
                    n_one |= xbit
            grow(s_mask | wbit, excluded | taken, n_one, n_dead)
            taken |= wbit

    try:
        for root in range(n):
            grow(1 << root, (1 << root) - 1, adj[root], 0)
    except BudgetExceeded:
        complete = False
    found.sort()
    return Enumeration(complete, tuple(found), budget.nodes)


def enumerate_cycles(g: Graph,
                     predicate: Optional[Callable[[Tuple[int, ...]], bool]] = None,
                     budget: Optional[SearchBudget] = None) -> Enumeration:
    """All simple cycles, canonical form, ascending lexicographic order.

    A cycle is listed once, rooted at its smallest vertex and directed
    toward the smaller of that vertex's two cycle neighbours. The optional
    predicate filters the output, not the search.
    """
    budget = budget or SearchBudget()
    n = g.n
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    out: List[Tuple[int, ...]] = []
    complete = True
    path: List[int] = []

    def extend(root: int, cur: int, visited: int, above: int) -> None:
        budget.tick()
        for w in sorted(_bits(adj[cur] & above & ~visited)):
            path.append(w)
            if adj[w] & (1 << root) and len(path) >= 3 and path[1] < path[-1]:
                cyc = tuple(path)
                if predicate is None or predicate(cyc):
                    out.append(cyc)
            extend(root, w, visited | (1 << w), above)
            path.pop()

    try:
        for root in range(n):
            above = ~((1 << (root + 1)) - 1)
            path[:] = [root]
            extend(root, root, 1 << root, above)
    except BudgetExceeded:
        complete = False
    out.sort()
    return Enumeration(complete, tuple(out), budget.nodes)
