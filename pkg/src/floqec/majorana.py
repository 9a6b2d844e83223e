"""Majorana-fermion representation of a surface-code patch.

Every qubit is encoded in four Majorana modes (mode id = 4*qubit + slot) with
Pauli dimers X = i c1 c2, Z = i c2 c3, SX = i c3 c4 and the equivalent
Z' = i c1 c4; an oriented dimer (p, q) always stands for the operator
i c_p c_q.  Modes sit at the corners of the intermediate graph: its vertices
are qubits, two qubits are adjacent when they are cyclically consecutive
around a stabilizer, and each stabilizer generator is one face.  Link dimers
pair the two modes of every intermediate edge; the four modes left unpaired
at the corner qubits host the logical dimers.  Link orientations are fixed by
a spanning-tree pass over the faces so that every bounded face has an odd
number of edges agreeing with its traversal direction (a Kasteleyn
orientation).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .code import SurfaceCode
from .planar import EmbeddedGraph, GraphError

X_SLOTS = (0, 1)   # X  = i c1 c2
Z_SLOTS = (1, 2)   # Z  = i c2 c3
SX_SLOTS = (2, 3)  # SX = i c3 c4
ZP_SLOTS = (0, 3)  # Z' = i c1 c4
_CYCLE_SLOTS = (X_SLOTS, Z_SLOTS, SX_SLOTS, ZP_SLOTS)


@dataclass
class MajoranaGraph:
    code: SurfaceCode
    n_modes: int
    pauli_edges: list[tuple[int, int]]
    link_edges: list[tuple[int, int]]
    logical_dimers: dict[str, list[tuple[int, int]]]
    extra_slot: dict[int, int]  # corner qubit -> slot of its unpaired mode
    intermediate_edges: list[tuple[int, int]] = field(repr=False)
    measurement_order: list[int] = field(default_factory=list)

    def matching(self, basis: str) -> list[tuple[int, int]]:
        """Perfect matching on all modes: link dimers plus the logical dimers
        of the requested basis ("Z", "X" or "Y")."""
        return self.link_edges + self.logical_dimers[basis]

    def to_json_dict(self) -> dict:
        return {
            "n_modes": self.n_modes,
            "pauli_dimers": [list(e) for e in self.pauli_edges],
            "link_dimers": [list(e) for e in self.link_edges],
            "logical_dimers": {b: [list(e) for e in v]
                               for b, v in self.logical_dimers.items()},
            "measurement_order": self.measurement_order,
        }


def intermediate_graph(code: SurfaceCode):
    """Edges of the intermediate graph, with the mode slot each edge occupies
    on its two qubits.

    Edge k joins (qubits[k][0] at slots[k][0]) to (qubits[k][1] at
    slots[k][1]).  There is one edge per corner of the Z-graph (a half-edge h
    together with its rotation successor), except corners touching the
    vv-edge, which is where the four corner qubits lose one neighbor.
    """
    g = code.graph
    vv = g.vv_edge
    q_of = code.qubit_of_edge
    gedges: list[tuple[int, int]] = []
    slots: list[tuple[int, int]] = []
    for h in range(2 * g.num_edges):
        e1 = h >> 1
        if e1 == vv:
            continue
        e2 = g.he_next(h) >> 1
        if e2 == vv:
            continue
        w = g.he_head(h)
        s1 = 3 if h % 2 == 0 else 1       # c4 on the forward side, c2 reversed
        s2 = 0 if g.edges[e2][1] == w else 2  # c1 / c3 on the successor edge
        gedges.append((q_of[e1], q_of[e2]))
        slots.append((s1, s2))
    return gedges, slots


def measurement_order(gedges: list[tuple[int, int]], n_qubits: int) -> list[int]:
    """Reverse breadth-first order from qubit 0; removing qubits in this
    order keeps the remaining intermediate graph connected at every step."""
    adj: list[list[int]] = [[] for _ in range(n_qubits)]
    for a, b in gedges:
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * n_qubits
    order = [0]
    seen[0] = True
    dq = deque([0])
    while dq:
        v = dq.popleft()
        for w in sorted(set(adj[v])):
            if not seen[w]:
                seen[w] = True
                order.append(w)
                dq.append(w)
    if not all(seen):
        raise GraphError("intermediate graph is not connected")
    order.reverse()
    return order


def _mode_graph(n_qubits: int, gedges, slots,
                logical: list[tuple[int, int]] | None = None) -> EmbeddedGraph:
    """EmbeddedGraph on the 4N modes: one 4-cycle per qubit plus one edge per
    link dimer (and optionally the logical dimers, attached like links).

    Edge ids: 4q+j (j = 0..3) are qubit q's cycle edges in the order X, Z,
    SX, Z'; link edge k is 4N + k; logical dimers follow.  Stored edge
    direction is the dimer's initial orientation.
    """
    edges: list[tuple[int, int]] = []
    for q in range(n_qubits):
        for (a, b) in _CYCLE_SLOTS:
            edges.append((4 * q + a, 4 * q + b))
    link_base = len(edges)
    radial: dict[int, int] = {}
    for (q1, q2), (s1, s2) in zip(gedges, slots):
        eid = len(edges)
        edges.append((4 * q1 + s1, 4 * q2 + s2))
        radial[4 * q1 + s1] = eid
        radial[4 * q2 + s2] = eid
    if logical:
        for (m1, m2) in logical:
            eid = len(edges)
            edges.append((m1, m2))
            radial[m1] = eid
            radial[m2] = eid

    # rotation at mode (q, s): [cycle edge to slot s-1, radial edge, cycle
    # edge to slot s+1]; the cycle edge joining slots {a, b} is 4q + index
    joining = {frozenset(p): j for j, p in enumerate(_CYCLE_SLOTS)}
    rotations: list[list[int]] = []
    for q in range(n_qubits):
        for s in range(4):
            e_prev = 4 * q + joining[frozenset({(s - 1) % 4, s})]
            e_next = 4 * q + joining[frozenset({s, (s + 1) % 4})]
            m = 4 * q + s
            rot = [e_prev]
            if m in radial:
                rot.append(radial[m])
            rot.append(e_next)
            rotations.append(rot)
    return EmbeddedGraph(edges=edges, rotations=rotations)


def _outer_face_base(mg: EmbeddedGraph, faces: list[list[int]],
                     extra_mode: int) -> int:
    """Outer face of a mode graph without logical dimers: an unpaired corner
    mode has degree 2, and of its two incident faces one is its qubit 4-cycle
    and the other is the outer face."""
    q = extra_mode // 4
    out = []
    for i, f in enumerate(faces):
        if not any(mg.he_tail(h) == extra_mode for h in f):
            continue
        is_cycle = len(f) == 4 and all(
            mg.edges[h >> 1][0] // 4 == q and mg.edges[h >> 1][1] // 4 == q for h in f)
        if not is_cycle:
            out.append(i)
    if len(out) != 1:
        raise GraphError(f"could not identify the outer face ({len(out)} candidates)")
    return out[0]


def _outer_face_with_dimers(faces: list[list[int]], dimer_eids: list[int]) -> int:
    """Outer face once logical dimers are attached: the unique face whose
    boundary contains both dimer edges (each dimer bounds one new face plus
    this leftover outer region)."""
    out = [i for i, f in enumerate(faces)
           if len({h >> 1 for h in f} & set(dimer_eids)) == len(dimer_eids)]
    if len(out) != 1:
        raise GraphError(f"could not identify the outer face ({len(out)} candidates)")
    return out[0]


def _face_parity(mg: EmbeddedGraph, face: list[int], orient) -> int:
    """Count (mod 2) of face edges whose actual orientation agrees with the
    traversal direction; orient maps edge id -> oriented pair."""
    agree = 0
    for h in face:
        e = h >> 1
        forward = (h % 2 == 0)
        if (orient(e) == mg.edges[e]) == forward:
            agree += 1
    return agree % 2


def build_majorana(code: SurfaceCode) -> MajoranaGraph:
    gedges, slots = intermediate_graph(code)
    n = code.n_qubits

    deg = [0] * n
    for a, b in gedges:
        deg[a] += 1
        deg[b] += 1
    corner_qubits = sorted(q for q in range(n) if deg[q] == 3)
    if corner_qubits != code.corner_qubits:
        raise GraphError("degree-3 qubits disagree with the code's corners")
    if any(deg[q] != 4 for q in range(n) if deg[q] != 3):
        raise GraphError("non-corner qubit without degree 4")

    used: dict[int, set[int]] = {q: set() for q in range(n)}
    for (q1, q2), (s1, s2) in zip(gedges, slots):
        if s1 in used[q1] or s2 in used[q2]:
            raise GraphError("mode slot assigned twice")
        used[q1].add(s1)
        used[q2].add(s2)
    extra_slot = {}
    for q in corner_qubits:
        (free,) = set(range(4)) - used[q]
        extra_slot[q] = free

    mg = _mode_graph(n, gedges, slots)
    mg.validate()
    faces = mg.faces()
    if len(faces) != 2 * n:
        raise GraphError(f"mode graph has {len(faces)} faces, expected {2 * n}")
    link_base = 4 * n
    any_extra = 4 * corner_qubits[0] + extra_slot[corner_qubits[0]]
    outer = _outer_face_base(mg, faces, any_extra)
    qubit_face_ids = []
    stab_face_ids = []
    for i, f in enumerate(faces):
        if i == outer:
            continue
        (qubit_face_ids if all((h >> 1) < link_base for h in f) else stab_face_ids).append(i)
    if len(qubit_face_ids) != n or len(stab_face_ids) != n - 1:
        raise GraphError("unexpected face structure in the mode graph")

    flipped: set[int] = set()

    def orient(e: int):
        u, v = mg.edges[e]
        return (v, u) if e in flipped else (u, v)

    for i in qubit_face_ids:
        if _face_parity(mg, faces[i], orient) == 0:
            raise GraphError("qubit face is even; Pauli orientation broken")

    # spanning tree of faces, connected through link dimers, rooted at outer
    adj: dict[int, list[tuple[int, int]]] = {}
    face_of_h = {}
    for i, f in enumerate(faces):
        for h in f:
            face_of_h[h] = i
    for k in range(len(gedges)):
        e = link_base + k
        f1, f2 = face_of_h[2 * e], face_of_h[2 * e + 1]
        adj.setdefault(f1, []).append((f2, e))
        adj.setdefault(f2, []).append((f1, e))
    parent_edge: dict[int, int] = {}
    seen = {outer}
    tree_order = []
    dq = deque([outer])
    while dq:
        x = dq.popleft()
        for y, e in adj.get(x, []):
            if y not in seen:
                seen.add(y)
                parent_edge[y] = e
                tree_order.append(y)
                dq.append(y)
    # fix faces deepest-first: flipping a face's tree edge toggles only that
    # face and its parent, and parents are processed afterwards
    for x in reversed(tree_order):
        if x not in stab_face_ids and x not in qubit_face_ids:
            continue
        if _face_parity(mg, faces[x], orient) == 0:
            if x not in parent_edge:
                raise GraphError("even face has no free link dimer to flip")
            flipped.symmetric_difference_update({parent_edge[x]})
    for x in stab_face_ids + qubit_face_ids:
        if _face_parity(mg, faces[x], orient) == 0:
            raise GraphError("Kasteleyn pass left an even face")

    link_edges = [orient(link_base + k) for k in range(len(gedges))]
    pauli_edges = []
    for q in range(n):
        for (a, b) in _CYCLE_SLOTS:
            pauli_edges.append((4 * q + a, 4 * q + b))

    mjg = MajoranaGraph(
        code=code,
        n_modes=4 * n,
        pauli_edges=pauli_edges,
        link_edges=link_edges,
        logical_dimers={},
        extra_slot=extra_slot,
        intermediate_edges=gedges,
        measurement_order=measurement_order(gedges, n),
    )
    mjg.logical_dimers = _logical_dimers(code, mjg, gedges, slots)
    return mjg


def corner_mode_layout(code: SurfaceCode, mjg: MajoranaGraph):
    """The four unpaired corner modes keyed by (virtual vertex side, virtual
    face side): returns {(v, f): mode} for v in {L, R} and f in {F1, F2}."""
    g = code.graph
    vv = g.vv_edge
    q_of = code.qubit_of_edge
    L, R = g.virtual_pair
    faces = g.faces()
    face_of = {}
    for fi, cyc in enumerate(faces):
        for h in cyc:
            face_of[h] = fi
    f1, f2 = face_of[2 * vv], face_of[2 * vv + 1]

    out = {}
    for virt, vkey in ((L, "L"), (R, "R")):
        for fid, fkey in ((f1, "F1"), (f2, "F2")):
            cyc = faces[fid]
            pos = next(i for i, h in enumerate(cyc) if (h >> 1) == vv)
            for h in (cyc[(pos - 1) % len(cyc)], cyc[(pos + 1) % len(cyc)]):
                e = h >> 1
                if virt in g.edges[e]:
                    q = q_of[e]
                    out[(vkey, fkey)] = 4 * q + mjg.extra_slot[q]
                    break
            else:
                raise GraphError("virtual face does not close at the virtual vertex")
    if len(set(out.values())) != 4:
        raise GraphError("corner modes are not distinct")
    return out


def _logical_dimers(code: SurfaceCode, mjg: MajoranaGraph, gedges, slots):
    """Pair the extra corner modes per logical basis.  Z pairs the two modes
    on each rough side, X pairs along each virtual face, Y pairs diagonally
    opposite corners (non-planar, so no face constraint applies)."""
    cm = corner_mode_layout(code, mjg)
    pairings = {
        "Z": [(cm[("L", "F1")], cm[("L", "F2")]), (cm[("R", "F1")], cm[("R", "F2")])],
        "X": [(cm[("L", "F1")], cm[("R", "F1")]), (cm[("L", "F2")], cm[("R", "F2")])],
        "Y": [(cm[("L", "F1")], cm[("R", "F2")]), (cm[("L", "F2")], cm[("R", "F1")])],
    }
    out = {"Y": pairings["Y"]}
    for basis in ("Z", "X"):
        out[basis] = _orient_logical(code, mjg, gedges, slots, pairings[basis])
    return out


def _orient_logical(code, mjg, gedges, slots, dimers):
    """Orient two planar logical dimers so each added face is odd."""
    n = code.n_qubits
    mg = _mode_graph(n, gedges, slots, logical=dimers)
    mg.validate()
    link_base = 4 * n
    n_link = len(mjg.link_edges)
    flipped = {link_base + k for k, pair in enumerate(mjg.link_edges)
               if mg.edges[link_base + k] != pair}
    dimer_flip = [False, False]

    def orient(e: int):
        u, v = mg.edges[e]
        if e >= link_base + n_link and dimer_flip[e - link_base - n_link]:
            return (v, u)
        return (v, u) if e in flipped else (u, v)

    faces = mg.faces()
    dimer_eids = [link_base + n_link + i for i in range(2)]
    outer = _outer_face_with_dimers(faces, dimer_eids)
    for d_i in range(2):
        eid = dimer_eids[d_i]
        cand = [i for i, f in enumerate(faces)
                if i != outer and any((h >> 1) == eid for h in f)]
        if len(cand) != 1:
            raise GraphError("logical dimer must bound exactly one new face")
        if _face_parity(mg, faces[cand[0]], orient) == 0:
            dimer_flip[d_i] = True
    return [((v, u) if dimer_flip[i] else (u, v)) for i, (u, v) in enumerate(dimers)]


def verify_kasteleyn(code: SurfaceCode, mjg: MajoranaGraph,
                     bases: tuple[str, ...] = ("Z", "X"),
                     link_override: list[tuple[int, int]] | None = None) -> bool:
    """True iff every bounded face (qubit, stabilizer, and the logical faces
    of each requested planar basis) has odd agreement with its traversal."""
    gedges, slots = intermediate_graph(code)
    n = code.n_qubits
    link_base = 4 * n
    links = link_override if link_override is not None else mjg.link_edges
    for basis in bases:
        dimers = mjg.logical_dimers[basis]
        mg = _mode_graph(n, gedges, slots, logical=dimers)
        actual = {link_base + k: pair for k, pair in enumerate(links)}
        for i, pair in enumerate(dimers):
            actual[link_base + len(links) + i] = pair

        def orient(e: int):
            return actual.get(e, mg.edges[e])

        faces = mg.faces()
        dimer_eids = [link_base + len(links) + i for i in range(len(dimers))]
        outer = _outer_face_with_dimers(faces, dimer_eids)
        for i, f in enumerate(faces):
            if i != outer and _face_parity(mg, f, orient) == 0:
                return False
    return True
