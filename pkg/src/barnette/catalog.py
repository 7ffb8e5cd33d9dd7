"""Canonical small embeddings used across tests, docs and the CLI.

All of these are built from explicit oriented face lists, so the rotation
conventions are consistent by construction and validated on the way in.
"""

from __future__ import annotations

from .embedding import (
    PlanarEmbedding,
    Triangulation,
    dual,
    embedding_from_faces,
)


def tetrahedron() -> Triangulation:
    """K4 embedded on the sphere; the smallest triangulation, self-dual."""
    faces = [(0, 1, 3), (0, 2, 1), (0, 3, 2), (1, 2, 3)]
    return Triangulation(embedding_from_faces(4, faces))


def double_wheel(rim: int) -> Triangulation:
    """Two apexes joined to every vertex of a rim cycle.

    Vertex 0 is the north apex, 1..rim the rim in cyclic order, rim+1 the
    south apex. Eulerian exactly when the rim length is even; rim vertices
    have degree 4, apexes degree `rim`. double_wheel(4) is the octahedron.
    """
    if rim < 3:
        raise ValueError("rim must have at least 3 vertices")
    north, south = 0, rim + 1
    faces = []
    for i in range(1, rim + 1):
        j = i % rim + 1
        faces.append((north, i, j))
        faces.append((south, j, i))
    return Triangulation(embedding_from_faces(rim + 2, faces))


def octahedron() -> Triangulation:
    """The octahedron: apexes 0 and 5, equator 1-2-3-4.

    Antipodal (non-adjacent) pairs: {0,5}, {1,3}, {2,4}. Its dual is the
    cube.
    """
    return double_wheel(4)


def cube() -> PlanarEmbedding:
    """The cube graph Q3 with the embedding inherited from the octahedron dual."""
    return dual(octahedron()).to_embedding()


def bridged_prisms() -> PlanarEmbedding:
    """A 10-vertex cubic planar graph with a bridge, hence non-Hamiltonian.

    Two K4-with-one-subdivided-edge blocks joined at their degree-2
    vertices. Handy as a small guaranteed-"none" input for cycle searches.
    """
    # block A: K4 on 0..3 with edge 0-1 subdivided by 4
    # block B: K4 on 5..8 with edge 5-6 subdivided by 9, bridge 4-9
    faces_a = [(0, 1, 3), (0, 2, 1), (0, 3, 2), (1, 2, 3)]

    def subdivide(faces, u, v, s):
        out = []
        for f in faces:
            walk = list(f)
            grown = []
            k = len(walk)
            for t in range(k):
                grown.append(walk[t])
                if (walk[t], walk[(t + 1) % k]) in ((u, v), (v, u)):
                    grown.append(s)
            out.append(tuple(grown))
        return out

    fa = subdivide(faces_a, 0, 1, 4)
    fb = [tuple(x + 5 for x in f) for f in subdivide(faces_a, 0, 1, 4)]
    emb_a = embedding_from_faces(10, fa + fb)
    rot = [list(r) for r in emb_a.rotations]
    rot[4].append(9)
    rot[9].append(4)
    return PlanarEmbedding(rot)
