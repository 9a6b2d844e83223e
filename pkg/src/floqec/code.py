"""Surface-code construction on an embedded Z-stabilizer graph.

Qubits are the non-virtual edges of the Z-graph, numbered by ascending primal
edge id.  Z-stabilizers come from real vertices, X-stabilizers from real
faces (faces not flanking the vv-edge); the logical Z support is the edge set
of one virtual vertex, the logical X support the qubit set of one virtual
face.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .planar import EmbeddedGraph, GraphError


class CodeClass(enum.Enum):
    ODD_Z = "OddZ"
    EVEN_Z_ODD_LOGICAL = "EvenZ_OddLogical"
    EVEN_Z_EVEN_LOGICAL = "EvenZ_EvenLogical"


@dataclass
class SurfaceCode:
    """Stabilizer data of a one-logical-qubit surface-code patch."""

    n_qubits: int
    z_stabilizers: list[list[int]]
    x_stabilizers: list[list[int]]
    logical_z: list[int]
    logical_x: list[int]
    corner_qubits: list[int]
    graph: EmbeddedGraph = field(repr=False)
    qubit_of_edge: dict[int, int] = field(repr=False)
    edge_of_qubit: list[int] = field(repr=False)
    x_face_indices: list[int] = field(repr=False)  # face index per X-stabilizer
    virtual_faces: tuple[int, int] = field(repr=False)
    family: str | None = None
    size: int | None = None

    @property
    def parity_class(self) -> CodeClass:
        return classify(self)

    def distance(self) -> int:
        """Graph distance (hops) between the two rough boundaries, i.e.
        between the virtual Z-vertices."""
        g = self.graph
        a, b = g.virtual_pair
        vv = g.vv_edge
        from collections import deque

        dist = {a: 0}
        dq = deque([a])
        while dq:
            v = dq.popleft()
            for e in g.rotations[v]:
                if e == vv:
                    continue
                w = g.other_end(e, v)
                if w not in dist:
                    dist[w] = dist[v] + 1
                    dq.append(w)
        return dist[b]

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "size": self.size,
            "N": self.n_qubits,
            "z_stabilizers": self.z_stabilizers,
            "x_stabilizers": self.x_stabilizers,
            "logical_z": self.logical_z,
            "logical_x": self.logical_x,
            "corner_qubits": self.corner_qubits,
            "parity_class": self.parity_class.value,
            "embedding": self.graph.to_json_dict(),
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json_dict(cls, d: dict) -> "SurfaceCode":
        g = EmbeddedGraph.from_json_dict(d["embedding"])
        code = build_code(g, family=d.get("family"), size=d.get("size"))
        if code.n_qubits != d["N"] or code.z_stabilizers != [list(s) for s in d["z_stabilizers"]]:
            raise GraphError("code JSON is inconsistent with its embedding")
        return code


def build_code(zgraph: EmbeddedGraph, family: str | None = None,
               size: int | None = None) -> SurfaceCode:
    g = zgraph
    g.validate()
    if g.virtual_pair is None:
        raise GraphError("Z-graph needs a virtual_pair")
    vv = g.vv_edge
    L, R = g.virtual_pair

    qubit_edges = [e for e in range(g.num_edges) if e != vv]
    qubit_of_edge = {e: i for i, e in enumerate(qubit_edges)}

    z_stabs = []
    for v in range(g.num_vertices):
        if v in (L, R):
            continue
        z_stabs.append(sorted(qubit_of_edge[e] for e in g.rotations[v]))

    faces = g.faces()
    face_of = {}
    for fi, cyc in enumerate(faces):
        for h in cyc:
            face_of[h] = fi
    vf = (face_of[2 * vv], face_of[2 * vv + 1])
    x_stabs = []
    x_face_indices = []
    for fi, cyc in enumerate(faces):
        if fi in vf:
            continue
        x_stabs.append(sorted(qubit_of_edge[h >> 1] for h in cyc))
        x_face_indices.append(fi)

    logical_z = sorted(qubit_of_edge[e] for e in g.rotations[L] if e != vv)
    # logical X: qubits of the first virtual face
    logical_x = sorted(qubit_of_edge[h >> 1] for h in faces[vf[0]] if (h >> 1) != vv)

    # corner qubits: the edges flanking the vv-edge around both virtual
    # vertices (these qubits have degree 3 in the intermediate graph)
    corners = []
    for v in (L, R):
        rot = g.rotations[v]
        i = rot.index(vv)
        corners.append(qubit_of_edge[rot[(i - 1) % len(rot)]])
        corners.append(qubit_of_edge[rot[(i + 1) % len(rot)]])
    corners = sorted(set(corners))
    if len(corners) != 4:
        raise GraphError(f"expected 4 corner qubits, found {len(corners)}")

    code = SurfaceCode(
        n_qubits=len(qubit_edges),
        z_stabilizers=z_stabs,
        x_stabilizers=x_stabs,
        logical_z=logical_z,
        logical_x=logical_x,
        corner_qubits=corners,
        graph=g,
        qubit_of_edge=qubit_of_edge,
        edge_of_qubit=qubit_edges,
        x_face_indices=x_face_indices,
        virtual_faces=vf,
        family=family,
        size=size,
    )
    _check_code(code)
    return code


def _check_code(code: SurfaceCode) -> None:
    n = code.n_qubits
    if len(code.z_stabilizers) + len(code.x_stabilizers) != n - 1:
        raise GraphError("stabilizer count must be N - 1 for one logical qubit")
    zl = set(code.logical_z)
    xl = set(code.logical_x)
    if len(zl & xl) != 1:
        raise GraphError("logical Z and X must overlap on exactly one qubit")
    for xs in code.x_stabilizers:
        s = set(xs)
        for zs in code.z_stabilizers:
            if len(s & set(zs)) % 2:
                raise GraphError("X and Z stabilizers must overlap evenly")
        if len(s & zl) % 2:
            raise GraphError("logical Z must commute with all X-stabilizers")
    for zs in code.z_stabilizers:
        if len(set(zs) & xl) % 2:
            raise GraphError("logical X must commute with all Z-stabilizers")


def classify(code: SurfaceCode) -> CodeClass:
    if any(len(s) % 2 for s in code.z_stabilizers):
        return CodeClass.ODD_Z
    if len(code.logical_z) % 2:
        return CodeClass.EVEN_Z_ODD_LOGICAL
    return CodeClass.EVEN_Z_EVEN_LOGICAL


def make_code(family: str, size: int) -> SurfaceCode:
    from .lattices import generate_lattice

    return build_code(generate_lattice(family, size), family=family, size=size)
