"""Planar embedded multigraphs with rotation systems.

The embedding of a graph in the plane is stored combinatorially: every vertex
carries the cyclic (counterclockwise) order of its incident edges.  Faces are
never stored; they are derived by half-edge traversal.  Two distinguished
"virtual" vertices mark the rough boundaries of a surface-code patch and are
joined by a single virtual-virtual edge, so the patch plus that edge is a
sphere map and duality is an ordinary combinatorial dual.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["EmbeddedGraph", "GraphError"]


class GraphError(ValueError):
    """Raised when an embedded graph violates a structural requirement."""


@dataclass
class EmbeddedGraph:
    """A connected planar multigraph with a rotation system.

    edges[i] is the (u, v) vertex pair of edge i; rotations[v] lists the edge
    ids around vertex v in counterclockwise order.  Each edge appears exactly
    once in each endpoint's rotation (self-loops are not allowed).
    virtual_pair, when set, names the two virtual boundary vertices, which
    must be joined by exactly one edge (the vv-edge).
    """

    edges: list[tuple[int, int]]
    rotations: list[list[int]]
    virtual_pair: tuple[int, int] | None = None
    vv: int | None = None
    _rotpos: dict[tuple[int, int], int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._rotpos = {}
        for v, rot in enumerate(self.rotations):
            for i, e in enumerate(rot):
                key = (v, e)
                if key in self._rotpos:
                    raise GraphError(f"edge {e} appears twice in rotation of vertex {v}")
                self._rotpos[key] = i

    # -- basic accessors ---------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    @property
    def vv_edge(self) -> int:
        """The edge joining the two virtual vertices (stored, or unique)."""
        if self.virtual_pair is None:
            raise GraphError("virtual_pair is not set")
        a, b = self.virtual_pair
        if self.vv is not None:
            if {a, b} != set(self.edges[self.vv]):
                raise GraphError("stored vv edge does not join the virtual pair")
            return self.vv
        hits = [i for i, (u, v) in enumerate(self.edges) if {u, v} == {a, b}]
        if len(hits) != 1:
            raise GraphError(f"expected one virtual-virtual edge, found {len(hits)}")
        return hits[0]

    # -- half-edge machinery -----------------------------------------------
    #
    # Half-edge 2e travels from edges[e][0] to edges[e][1]; 2e+1 the reverse.
    # The successor of a half-edge arriving at w via edge e leaves w along the
    # next edge counterclockwise; orbits of the successor map are the faces.

    def he_tail(self, h: int) -> int:
        u, v = self.edges[h >> 1]
        return u if h & 1 == 0 else v

    def he_head(self, h: int) -> int:
        u, v = self.edges[h >> 1]
        return v if h & 1 == 0 else u

    def he_next(self, h: int) -> int:
        w = self.he_head(h)
        rot = self.rotations[w]
        i = self._rotpos[(w, h >> 1)]
        e2 = rot[(i + 1) % len(rot)]
        u, v = self.edges[e2]
        return 2 * e2 if u == w else 2 * e2 + 1

    def faces(self) -> list[list[int]]:
        """Face orbits as lists of half-edges, in deterministic order."""
        seen = [False] * (2 * self.num_edges)
        out = []
        for h0 in range(2 * self.num_edges):
            if seen[h0]:
                continue
            cycle = []
            h = h0
            while not seen[h]:
                seen[h] = True
                cycle.append(h)
                h = self.he_next(h)
            if h != h0:
                raise GraphError("face traversal is not a permutation orbit")
            out.append(cycle)
        return out

    def face_edges(self, face: list[int]) -> list[int]:
        return [h >> 1 for h in face]

    def validate(self) -> None:
        """Check rotation consistency, connectivity and the Euler formula."""
        for e, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphError(f"edge {e} is a self-loop")
            for w in (u, v):
                if (w, e) not in self._rotpos:
                    raise GraphError(f"edge {e} missing from rotation of vertex {w}")
        counts = [0] * self.num_edges
        for rot in self.rotations:
            for e in rot:
                counts[e] += 1
        if any(c != 2 for c in counts):
            raise GraphError("every edge must appear in exactly two rotations")
        # connectivity
        if self.num_vertices == 0:
            raise GraphError("empty graph")
        seen = [False] * self.num_vertices
        stack = [0]
        seen[0] = True
        while stack:
            v = stack.pop()
            for e in self.rotations[v]:
                w = self.other_end(e, v)
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        if not all(seen):
            raise GraphError("graph is not connected")
        euler = self.num_vertices - self.num_edges + len(self.faces())
        if euler != 2:
            raise GraphError(f"Euler characteristic is {euler}, expected 2")
        if self.virtual_pair is not None:
            self.vv_edge  # raises unless exactly one

    # -- duality -------------------------------------------------------------

    def dual(self) -> "EmbeddedGraph":
        """Combinatorial dual; edge ids are preserved (dual edge i crosses
        primal edge i).  The dual's virtual pair is the pair of faces flanking
        the virtual-virtual edge."""
        if self.virtual_pair is None:
            raise GraphError("dual requires virtual_pair to be set")
        vv = self.vv_edge
        faces = self.faces()
        face_of = [0] * (2 * self.num_edges)
        for fi, cyc in enumerate(faces):
            for h in cyc:
                face_of[h] = fi
        edges = [(0, 0)] * self.num_edges
        rotations: list[list[int]] = [[] for _ in faces]
        for fi, cyc in enumerate(faces):
            # reversed boundary order keeps the double dual orientation-aligned
            rotations[fi] = [h >> 1 for h in reversed(cyc)]
        for e in range(self.num_edges):
            edges[e] = (face_of[2 * e], face_of[2 * e + 1])
        pair = (face_of[2 * vv], face_of[2 * vv + 1])
        if pair[0] == pair[1]:
            raise GraphError("virtual-virtual edge is a bridge; dual pair degenerate")
        g = EmbeddedGraph(edges=edges, rotations=rotations, virtual_pair=pair, vv=vv)
        return g

    # -- serialization -------------------------------------------------------

    def neighbors_cyclic(self, v: int) -> list[tuple[int, int]]:
        """[(neighbor id, edge id), ...] in rotation order."""
        return [(self.other_end(e, v), e) for e in self.rotations[v]]

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {"id": v, "neighbors": [[n, e] for n, e in self.neighbors_cyclic(v)]}
                for v in range(self.num_vertices)
            ],
            "edges": [{"id": i, "endpoints": [u, v]} for i, (u, v) in enumerate(self.edges)],
            "virtual_pair": list(self.virtual_pair) if self.virtual_pair else None,
            "vv_edge": self.vv_edge if self.virtual_pair else None,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "EmbeddedGraph":
        edges = [tuple(rec["endpoints"]) for rec in sorted(d["edges"], key=lambda r: r["id"])]
        nv = len(d["vertices"])
        rotations: list[list[int]] = [[] for _ in range(nv)]
        for rec in d["vertices"]:
            rotations[rec["id"]] = [e for _, e in rec["neighbors"]]
        vp = d.get("virtual_pair")
        return cls(edges=edges, rotations=rotations,
                   virtual_pair=tuple(vp) if vp else None,
                   vv=d.get("vv_edge"))

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def build_from_positions(
    vertex_pos: dict[int, tuple[float, float]],
    edge_list: list[tuple[int, int]],
    virtual_pair: tuple[int, int] | None = None,
    waypoints: dict[int, tuple[float, float]] | None = None,
) -> EmbeddedGraph:
    """Assemble an EmbeddedGraph from vertex coordinates.

    Rotations are obtained by sorting incident edges counterclockwise by
    angle.  An edge's direction at a vertex points toward its waypoint if one
    is given (needed for stubs, parallel edges and the vv-edge, which are not
    straight segments), otherwise toward the other endpoint.  Waypoints are
    keyed by edge id, or by (edge id, vertex id) for a per-endpoint override.
    """
    import math

    waypoints = waypoints or {}
    nv = len(vertex_pos)
    if set(vertex_pos) != set(range(nv)):
        raise GraphError("vertex ids must be 0..n-1")
    incident: list[list[int]] = [[] for _ in range(nv)]
    for i, (u, v) in enumerate(edge_list):
        incident[u].append(i)
        incident[v].append(i)
    rotations: list[list[int]] = []
    for v in range(nv):
        vx, vy = vertex_pos[v]

        def angle(e: int) -> float:
            u, w = edge_list[e]
            if (e, v) in waypoints:
                tx, ty = waypoints[(e, v)]
            elif e in waypoints:
                tx, ty = waypoints[e]
            else:
                o = w if u == v else u
                tx, ty = vertex_pos[o]
            return math.atan2(ty - vy, tx - vx)

        rotations.append(sorted(incident[v], key=angle))
    return EmbeddedGraph(edges=list(edge_list), rotations=rotations,
                         virtual_pair=virtual_pair)
