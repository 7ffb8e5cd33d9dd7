"""Combinatorial planar embeddings as rotation systems.

Vertices are dense integers 0..n-1. An embedding stores, for every vertex,
the cyclic clockwise order of its neighbours. A dart is one of the two
directed sides of an undirected edge, addressed as (vertex, position) with
position indexing into that vertex's rotation. Faces are recovered purely
combinatorially with the next-dart rule: reverse the dart, then take the
successor in the rotation at its head. On a sphere embedding the traced
faces satisfy Euler's formula, which is what validation enforces.

Only simple embeddings live here (no loops, no parallel edges). The dual of
a triangulation may have loops or parallels in degenerate uses, so duals get
their own multigraph type.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple


class EmbeddingError(ValueError):
    """Raised when rotation data does not describe a valid sphere embedding."""


class TriangulationError(EmbeddingError):
    """Raised when an embedding is not a simple planar triangulation."""


class ColoringError(ValueError):
    """Raised when a requested colouring does not exist or is improper."""


Dart = Tuple[int, int]          # (vertex, position in its rotation)
Edge = Tuple[int, int]          # (u, v) with u < v
Face = Tuple[int, ...]          # vertex walk, one entry per dart on the face


# ======================================================================
# Planar embeddings
# ======================================================================

class PlanarEmbedding:
    """A simple graph with a clockwise rotation at every vertex.

    The constructor validates the data: neighbour lists must be loop-free,
    duplicate-free and symmetric, and every connected component must trace
    to a genus-zero face set (per-component Euler formula V - E + F = 2).
    Instances are immutable after construction.

    Args:
        rotations: per-vertex sequences of neighbour ids in clockwise order.

    Raises:
        EmbeddingError: on malformed or non-spherical rotation data.
    """

    __slots__ = ("rotations", "_faces", "_face_of_dart", "_edges", "_edge_index")

    def __init__(self, rotations: Sequence[Sequence[int]]):
        rots = tuple(tuple(r) for r in rotations)
        n = len(rots)
        for v, rot in enumerate(rots):
            for u in rot:
                if not 0 <= u < n:
                    raise EmbeddingError(f"vertex {v} lists unknown neighbour {u}")
                if u == v:
                    raise EmbeddingError(f"loop at vertex {v}")
            if len(set(rot)) != len(rot):
                raise EmbeddingError(f"parallel edges at vertex {v}")
        for v, rot in enumerate(rots):
            for u in rot:
                if v not in rots[u]:
                    raise EmbeddingError(f"dart {v}->{u} has no mate")
        self.rotations = rots
        self._edges: Tuple[Edge, ...] = tuple(
            sorted((v, u) if v < u else (u, v) for v, rot in enumerate(rots) for u in rot if v < u)
        )
        self._edge_index: Dict[Edge, int] = {e: i for i, e in enumerate(self._edges)}
        self._faces, self._face_of_dart = self._trace_all_faces()
        self._check_euler()

    # -- basic accessors ------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Undirected edges as (u, v) with u < v, sorted; index = edge id."""
        return self._edges

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._edge_index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise EmbeddingError(f"no edge {u}-{v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbours(self, v: int) -> Tuple[int, ...]:
        return self.rotations[v]

    def dart_target(self, dart: Dart) -> int:
        v, i = dart
        return self.rotations[v][i]

    def mate(self, dart: Dart) -> Dart:
        """The opposite dart of the same undirected edge."""
        v, i = dart
        u = self.rotations[v][i]
        return (u, self.rotations[u].index(v))

    def next_dart(self, dart: Dart) -> Dart:
        """Face-walk successor: reverse the dart, then take the rotation successor at its head."""
        u, j = self.mate(dart)
        return (u, (j + 1) % len(self.rotations[u]))

    # -- faces ----------------------------------------------------------

    @property
    def faces(self) -> Tuple[Face, ...]:
        """Traced face walks, as vertex tuples, in discovery order.

        Discovery order scans darts by (vertex, position), so the face that
        contains dart (0, 0) is always face 0; by convention that is the
        outer face unless a caller overrides it.
        """
        return self._faces

    @property
    def face_count(self) -> int:
        return len(self._faces)

    def face_of_dart(self, dart: Dart) -> int:
        return self._face_of_dart[dart]

    def face_darts(self, face_id: int) -> Tuple[Dart, ...]:
        """The dart walk of a face (same order as its vertex walk)."""
        walk = []
        for dart, f in self._face_of_dart.items():
            if f == face_id:
                walk.append(dart)
        # Re-walk from a deterministic start to restore cyclic order.
        start = min(walk)
        out = [start]
        cur = self.next_dart(start)
        while cur != start:
            out.append(cur)
            cur = self.next_dart(cur)
        return tuple(out)

    def _trace_all_faces(self) -> Tuple[Tuple[Face, ...], Dict[Dart, int]]:
        face_of: Dict[Dart, int] = {}
        faces: List[Face] = []
        for v in range(len(self.rotations)):
            for i in range(len(self.rotations[v])):
                if (v, i) in face_of:
                    continue
                fid = len(faces)
                walk: List[int] = []
                dart = (v, i)
                while dart not in face_of:
                    face_of[dart] = fid
                    walk.append(dart[0])
                    dart = self.next_dart(dart)
                if dart != (v, i):
                    raise EmbeddingError("face walk did not close on its first dart")
                faces.append(tuple(walk))
        return tuple(faces), face_of

    def _check_euler(self) -> None:
        for comp in self.components():
            nv = len(comp)
            ne = sum(1 for (u, w) in self._edges if u in comp)
            nf = len({f for dart, f in self._face_of_dart.items() if dart[0] in comp})
            if ne == 0:
                continue  # isolated vertex: no darts, no traced faces
            if nv - ne + nf != 2:
                raise EmbeddingError(
                    f"component {sorted(comp)[:6]}...: V-E+F = {nv}-{ne}+{nf} != 2, "
                    "rotation system is not spherical"
                )

    # -- connectivity ---------------------------------------------------

    def components(self) -> List[FrozenSet[int]]:
        """Connected components, each a frozenset, ordered by smallest member."""
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            comp = {s}
            seen[s] = True
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.rotations[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.add(y)
                        queue.append(y)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanarEmbedding) and self.rotations == other.rotations

    def __hash__(self) -> int:
        return hash(self.rotations)

    def __repr__(self) -> str:
        return f"PlanarEmbedding(n={self.vertex_count}, m={self.edge_count}, f={self.face_count})"


def trace_faces(embedding: PlanarEmbedding) -> Tuple[Face, ...]:
    """All faces of the embedding as vertex walks (see PlanarEmbedding.faces)."""
    return embedding.faces


def embedding_from_faces(vertex_count: int, faces: Iterable[Sequence[int]]) -> PlanarEmbedding:
    """Rebuild a rotation system from a coherent set of oriented face walks.

    Every dart (consecutive pair on some walk) must appear exactly once over
    all walks, and at every vertex the corner successors must chain into a
    single cycle; the resulting rotations then trace back to the given faces.
    This is the workhorse for surgeries that are easier to state face-wise
    (barycentric subdivision, pasting a patch into a triangular hole).

    Raises:
        EmbeddingError: if the walks are not a coherent sphere face set.
    """
    succ: List[Dict[int, int]] = [dict() for _ in range(vertex_count)]
    for walk in faces:
        k = len(walk)
        for t in range(k):
            a, v, b = walk[t - 1], walk[t], walk[(t + 1) % k]
            if a in succ[v]:
                raise EmbeddingError(f"dart {a}->{v} used by two faces")
            succ[v][a] = b
    rotations: List[List[int]] = []
    for v in range(vertex_count):
        cyc: List[int] = []
        if succ[v]:
            start = min(succ[v])
            cur = start
            while True:
                cyc.append(cur)
                cur = succ[v][cur]
                if cur == start:
                    break
            if len(cyc) != len(succ[v]):
                raise EmbeddingError(f"corners at vertex {v} do not close into one rotation")
        rotations.append(cyc)
    return PlanarEmbedding(rotations)


# ======================================================================
# Triangulations
# ======================================================================

class Triangulation:
    """A validated simple planar triangulation on >= 4 vertices.

    Checks: connected, every traced face is a triangle of three distinct
    vertices, and the edge/face count identity m = 3f/2 holds (Euler is
    already enforced by the embedding).

    Attributes:
        embedding: the underlying PlanarEmbedding.
        faces: face triples in trace order (oriented vertex walks).
    """

    __slots__ = ("embedding", "faces", "_face_sets", "_adj", "_faces_of_edge", "_faces_of_vertex")

    def __init__(self, embedding: PlanarEmbedding):
        if embedding.vertex_count < 4:
            raise TriangulationError(f"need >= 4 vertices, got {embedding.vertex_count}")
        if not embedding.is_connected():
            raise TriangulationError("triangulation must be connected")
        for fid, walk in enumerate(embedding.faces):
            if len(walk) != 3 or len(set(walk)) != 3:
                raise TriangulationError(f"face {fid} is not a triangle: {walk}")
        if 2 * embedding.edge_count != 3 * embedding.face_count:
            raise TriangulationError("edge/face count identity m = 3f/2 violated")
        self.embedding = embedding
        self.faces: Tuple[Tuple[int, int, int], ...] = embedding.faces  # type: ignore[assignment]
        self._face_sets: Tuple[FrozenSet[int], ...] = tuple(frozenset(f) for f in self.faces)
        self._adj: Tuple[FrozenSet[int], ...] = tuple(
            frozenset(embedding.rotations[v]) for v in range(embedding.vertex_count)
        )
        faces_of_edge: Dict[Edge, List[int]] = {e: [] for e in embedding.edges}
        for fid, (a, b, c) in enumerate(self.faces):
            for u, v in ((a, b), (b, c), (c, a)):
                faces_of_edge[(u, v) if u < v else (v, u)].append(fid)
        for e, pair in faces_of_edge.items():
            if len(pair) != 2:
                raise TriangulationError(f"edge {e} borders {len(pair)} faces")
        self._faces_of_edge: Dict[Edge, Tuple[int, int]] = {
            e: (p[0], p[1]) for e, p in faces_of_edge.items()
        }
        fov: List[List[int]] = [[] for _ in range(embedding.vertex_count)]
        for fid, walk in enumerate(self.faces):
            for v in walk:
                fov[v].append(fid)
        self._faces_of_vertex: Tuple[Tuple[int, ...], ...] = tuple(tuple(x) for x in fov)

    # -- accessors --------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self.embedding.vertex_count

    @property
    def edge_count(self) -> int:
        return self.embedding.edge_count

    @property
    def face_count(self) -> int:
        return self.embedding.face_count

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.embedding.edges

    def degree(self, v: int) -> int:
        return self.embedding.degree(v)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(self.embedding.degree(v) for v in range(self.vertex_count))

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def adjacency(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def face_set(self, fid: int) -> FrozenSet[int]:
        return self._face_sets[fid]

    @property
    def face_sets(self) -> Tuple[FrozenSet[int], ...]:
        return self._face_sets

    def faces_of_edge(self, u: int, v: int) -> Tuple[int, int]:
        """The two face ids bordering edge uv."""
        e = (u, v) if u < v else (v, u)
        try:
            return self._faces_of_edge[e]
        except KeyError:
            raise TriangulationError(f"no edge {u}-{v}") from None

    def faces_of_vertex(self, v: int) -> Tuple[int, ...]:
        return self._faces_of_vertex[v]

    def face_id_of(self, triple: Iterable[int]) -> int:
        """Face id whose vertex set equals the given triple."""
        want = frozenset(triple)
        for fid, fs in enumerate(self._face_sets):
            if fs == want:
                return fid
        raise TriangulationError(f"{sorted(want)} is not a face")

    def __repr__(self) -> str:
        return f"Triangulation(n={self.vertex_count}, m={self.edge_count}, f={self.face_count})"


def is_eulerian(tri: Triangulation) -> bool:
    """True iff every vertex degree is even."""
    return all(d % 2 == 0 for d in tri.degrees)


def separating_triangles(tri: Triangulation) -> List[FrozenSet[int]]:
    """All triangles (3-cliques) of the graph that are not faces.

    In a triangulation on >= 5 vertices each such clique separates the
    graph; they are reported, never rejected.
    """
    found = []
    face_sets = set(tri._face_sets)
    n = tri.vertex_count
    for u in range(n):
        for v in sorted(tri.adjacency(u)):
            if v <= u:
                continue
            for w in sorted(tri.adjacency(u) & tri.adjacency(v)):
                if w <= v:
                    continue
                t = frozenset((u, v, w))
                if t not in face_sets:
                    found.append(t)
    return found


# ======================================================================
# Dual multigraphs
# ======================================================================

@dataclass(frozen=True)
class DualEdge:
    """One dual edge: connects the two faces bordering its primal edge."""
    a: int
    b: int
    primal: Edge

    @property
    def is_loop(self) -> bool:
        return self.a == self.b


class DualMultigraph:
    """The dual of an embedded graph: a node per face, an edge per primal edge.

    Loops and parallel edges are allowed (they arise for subgraph duals).
    Dual edges are indexed in primal edge-id order, and each node carries
    its incident dual edges in face-walk order, which is a rotation system
    for the dual; `to_embedding` converts it whenever the dual is simple.
    """

    __slots__ = ("node_count", "edges", "rotations")

    def __init__(self, node_count: int, edges: Sequence[DualEdge],
                 rotations: Optional[Sequence[Sequence[int]]] = None):
        self.node_count = node_count
        self.edges: Tuple[DualEdge, ...] = tuple(edges)
        for de in self.edges:
            if not (0 <= de.a < node_count and 0 <= de.b < node_count):
                raise EmbeddingError(f"dual edge {de} out of range")
        self.rotations: Optional[Tuple[Tuple[int, ...], ...]] = (
            tuple(tuple(r) for r in rotations) if rotations is not None else None
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, node: int) -> int:
        d = 0
        for de in self.edges:
            d += (de.a == node) + (de.b == node)
        return d

    @property
    def degrees(self) -> Tuple[int, ...]:
        degs = [0] * self.node_count
        for de in self.edges:
            degs[de.a] += 1
            degs[de.b] += 1
        return tuple(degs)

    def is_simple(self) -> bool:
        seen = set()
        for de in self.edges:
            if de.is_loop:
                return False
            key = (de.a, de.b) if de.a < de.b else (de.b, de.a)
            if key in seen:
                return False
            seen.add(key)
        return True

    def to_embedding(self) -> PlanarEmbedding:
        """The dual as a PlanarEmbedding (requires simplicity and rotations)."""
        if not self.is_simple():
            raise EmbeddingError("dual has loops or parallel edges")
        if self.rotations is None:
            raise EmbeddingError("dual carries no rotation data")
        other = []
        for node, rot in enumerate(self.rotations):
            nbrs = []
            for eid in rot:
                de = self.edges[eid]
                nbrs.append(de.b if de.a == node else de.a)
            other.append(nbrs)
        return PlanarEmbedding(other)

    def components(self) -> List[FrozenSet[int]]:
        adj: List[List[int]] = [[] for _ in range(self.node_count)]
        for de in self.edges:
            if not de.is_loop:
                adj[de.a].append(de.b)
                adj[de.b].append(de.a)
        seen = [False] * self.node_count
        comps = []
        for s in range(self.node_count):
            if seen[s]:
                continue
            comp = {s}
            seen[s] = True
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.add(y)
                        queue.append(y)
            comps.append(frozenset(comp))
        return comps

    def __repr__(self) -> str:
        return f"DualMultigraph(nodes={self.node_count}, edges={len(self.edges)})"


def dual(tri: Triangulation) -> DualMultigraph:
    """The cubic dual of a triangulation, with rotations in face-walk order."""
    emb = tri.embedding
    edges = []
    for eid, (u, v) in enumerate(emb.edges):
        f1, f2 = tri.faces_of_edge(u, v)
        edges.append(DualEdge(f1, f2, (u, v)))
    rotations: List[List[int]] = [[] for _ in range(tri.face_count)]
    for fid in range(tri.face_count):
        for dart in emb.face_darts(fid):
            u = dart[0]
            v = emb.dart_target(dart)
            rotations[fid].append(emb.edge_id(u, v))
    return DualMultigraph(tri.face_count, edges, rotations)


# ======================================================================
# Colourings
# ======================================================================

PALETTE = ("blue", "red", "green")


@dataclass(frozen=True)
class VertexColoring:
    """An assignment of palette colour names to every vertex."""
    palette: Tuple[str, ...]
    colours: Tuple[str, ...]

    def __post_init__(self):
        for c in self.colours:
            if c not in self.palette:
                raise ColoringError(f"colour {c!r} not in palette {self.palette}")

    def colour_of(self, v: int) -> str:
        return self.colours[v]

    def class_of(self, colour: str) -> FrozenSet[int]:
        return frozenset(v for v, c in enumerate(self.colours) if c == colour)

    def is_proper(self, tri: Triangulation) -> bool:
        return all(self.colours[u] != self.colours[v] for u, v in tri.edges)


def proper_3_coloring(tri: Triangulation) -> VertexColoring:
    """The unique proper 3-colouring of an Eulerian triangulation.

    Seeds one face with three colours and propagates across the dual: a
    face sharing an edge with a decided face has its third vertex forced.
    Canonical naming: vertex 0 gets "blue" and its lowest-index neighbour
    gets "red".

    Raises:
        ColoringError: if propagation hits a conflict (the triangulation is
            then not Eulerian / not 3-chromatic); the message names the
            contradicting face.
    """
    n = tri.vertex_count
    col: List[Optional[int]] = [None] * n
    a, b, c = tri.faces[0]
    col[a], col[b], col[c] = 0, 1, 2
    seen_face = [False] * tri.face_count
    seen_face[0] = True
    queue = deque([0])
    while queue:
        fid = queue.popleft()
        walk = tri.faces[fid]
        for u, v in ((walk[0], walk[1]), (walk[1], walk[2]), (walk[2], walk[0])):
            g1, g2 = tri.faces_of_edge(u, v)
            nxt = g2 if g1 == fid else g1
            if seen_face[nxt]:
                continue
            w = next(iter(tri.face_set(nxt) - {u, v}))
            forced = 3 - col[u] - col[v]  # type: ignore[operator]
            if col[w] is None:
                col[w] = forced
            elif col[w] != forced:
                raise ColoringError(
                    f"propagation conflict at face {nxt} {tri.faces[nxt]}: "
                    f"vertex {w} needs colour {forced}, already {col[w]}"
                )
            seen_face[nxt] = True
            queue.append(nxt)
    if any(x is None for x in col):
        raise ColoringError("colour propagation did not reach every vertex")
    # Canonical names: vertex 0 blue, its lowest neighbour red.
    first = col[0]
    second = col[min(tri.adjacency(0))]
    third = 3 - first - second
    names = {first: PALETTE[0], second: PALETTE[1], third: PALETTE[2]}
    colours = tuple(names[x] for x in col)  # type: ignore[index]
    colouring = VertexColoring(PALETTE, colours)
    if not colouring.is_proper(tri):
        raise ColoringError("internal: propagated colouring is improper")
    return colouring


# ======================================================================
# Induced embedded subgraphs
# ======================================================================

@dataclass(frozen=True)
class InducedEmbedding:
    """An induced subgraph with the inherited embedding.

    `kept` maps new vertex ids (positions) to original ids, ascending. The
    rotation of each kept vertex is the original cyclic order restricted to
    kept neighbours. An edgeless induced subgraph is permitted; it traces no
    face walks, and by convention occupies a single face of the plane.
    """
    embedding: PlanarEmbedding
    kept: Tuple[int, ...]

    def original(self, new_id: int) -> int:
        return self.kept[new_id]

    def new_id(self, original: int) -> int:
        return self.kept.index(original)


def induced_embedded_subgraph(emb: PlanarEmbedding, keep: Iterable[int]) -> InducedEmbedding:
    """Restrict an embedding to a vertex subset, keeping rotation order."""
    kept = tuple(sorted(set(keep)))
    for v in kept:
        if not 0 <= v < emb.vertex_count:
            raise EmbeddingError(f"vertex {v} not in embedding")
    renum = {v: i for i, v in enumerate(kept)}
    keep_set = set(kept)
    rotations = [
        [renum[u] for u in emb.rotations[v] if u in keep_set]
        for v in kept
    ]
    return InducedEmbedding(PlanarEmbedding(rotations), kept)


def inherited_face_partition(tri: Triangulation, keep: Iterable[int]) -> List[int]:
    """Which face of the induced subgraph each primal face lies in.

    Faces of the subgraph induced by `keep` are unions of primal faces: two
    primal faces merge when they share an edge that the subgraph does not
    contain (crossing such an edge stays inside one subgraph face). Returns
    a list mapping primal face id to subgraph face id (0-based, ordered by
    smallest contained primal face).
    """
    keep_set = set(keep)
    comp = [-1] * tri.face_count
    next_id = 0
    for start in range(tri.face_count):
        if comp[start] != -1:
            continue
        comp[start] = next_id
        queue = deque([start])
        while queue:
            fid = queue.popleft()
            walk = tri.faces[fid]
            for u, v in ((walk[0], walk[1]), (walk[1], walk[2]), (walk[2], walk[0])):
                if u in keep_set and v in keep_set:
                    continue  # subgraph edge or not: only non-subgraph edges merge
                g1, g2 = tri.faces_of_edge(u, v)
                nxt = g2 if g1 == fid else g1
                if comp[nxt] == -1:
                    comp[nxt] = comp[fid]
                    queue.append(nxt)
        next_id += 1
    return comp
