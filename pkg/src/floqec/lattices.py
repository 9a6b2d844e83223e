"""Lattice-family generators for surface-code patches.

Each generator returns the embedded Z-stabilizer graph of a patch: real
vertices are Z-stabilizers, edges are qubits, and two virtual vertices
(joined by the vv-edge) collect the rough-boundary edges.  Dual families are
generated by dualizing the base family, and the doubly-odd family is built
separately in :mod:`floqec.selfdual`.
"""

from __future__ import annotations

from .planar import EmbeddedGraph, GraphError, build_from_positions

FAMILIES = (
    "square",
    "hexagonal",
    "kagome",
    "tri-hex",
    "dual-hexagonal",
    "dual-kagome",
    "dual-tri-hex",
    "doubly-odd",
)


def generate_lattice(family: str, size: int) -> EmbeddedGraph:
    """Build the Z-stabilizer graph for a lattice family.

    Sizes: square takes an odd code distance d >= 3; hexagonal, kagome,
    tri-hex (and their duals) take a linear dimension m >= 1; doubly-odd
    takes a canonical size index k >= 1.
    """
    if family == "square":
        return square_graph(size)
    if family == "hexagonal":
        return hexagonal_graph(size)
    if family == "kagome":
        return kagome_graph(size)
    if family == "tri-hex":
        return trihex_graph(size)
    if family in ("dual-hexagonal", "dual-kagome", "dual-tri-hex"):
        base = generate_lattice(family[5:], size)
        return base.dual()
    if family == "doubly-odd":
        from .selfdual import doubly_odd_graph

        return doubly_odd_graph(size)
    raise GraphError(f"unknown lattice family {family!r}")


def square_graph(d: int) -> EmbeddedGraph:
    """Diagonal-alignment square-lattice patch of distance d (odd, >= 3).

    Qubits sit at (p, q) with p + q even on the square [0, 2d-2]^2; every
    Z-stabilizer has even weight (bulk plaquettes weight 4, boundary caps
    weight 2) and the logical Z support is the d-qubit left column, so the
    qubit count is d^2 + (d-1)^2.
    """
    if d < 3 or d % 2 == 0:
        raise GraphError("square lattice size must be an odd distance >= 3")
    top = 2 * d - 2

    pos: dict[int, tuple[float, float]] = {}
    ids: dict[tuple, int] = {}

    def vert(key, xy) -> int:
        if key not in ids:
            ids[key] = len(pos)
            pos[ids[key]] = xy
        return ids[key]

    L = vert(("virt", 0), (-2.0, d - 1.0))
    R = vert(("virt", 1), (top + 2.0, d - 1.0))
    # bulk plaquettes at (p odd, q even interior)
    for p in range(1, top, 2):
        for q in range(2, top - 1, 2):
            vert(("B", p, q), (float(p), float(q)))
    # south/north caps: pairs along q=0/q=top, and pairs in the q=1/q=top-1 rows
    for k in range(d - 1):
        vert(("S1", k), (2 * k + 1.0, -0.5))
        vert(("N1", k), (2 * k + 1.0, top + 0.5))
    for k in range((d - 1) // 2):
        vert(("S2", k), (4 * k + 2.0, 0.5))
        vert(("N2", k), (4 * k + 2.0, top - 0.5))

    edges: list[tuple[int, int]] = []
    waypoints: dict[int, tuple[float, float]] = {}

    def add(a: int, b: int, wp=None):
        edges.append((a, b))
        if wp is not None:
            waypoints[len(edges) - 1] = wp

    def stabs_of_qubit(p: int, q: int) -> tuple[int, int]:
        out = []
        if p == 0:
            out.append(L)
        if p == top:
            out.append(R)
        if q == 0:
            out.append(ids[("S1", min(p // 2, d - 2))] if p > 0 or True else None)
        if q == top:
            out.append(ids[("N1", min(p // 2, d - 2))])
        return out

    # enumerate qubits (p, q), p+q even, attaching each to its two stabilizers
    for q in range(0, top + 1):
        for p in range(0, top + 1):
            if (p + q) % 2:
                continue
            owners: list[int] = []
            if p % 2 == 0:
                # even-even qubits
                if p == 0:
                    owners.append(L)
                elif q == 0:
                    owners.append(ids[("S1", p // 2 - 1)])
                elif q == top:
                    owners.append(ids[("N1", p // 2 - 1)])
                else:
                    owners.append(ids[("B", p - 1, q)])
                if p == top:
                    owners.append(R)
                elif q == 0:
                    owners.append(ids[("S1", p // 2)])
                elif q == top:
                    owners.append(ids[("N1", p // 2)])
                else:
                    owners.append(ids[("B", p + 1, q)])
            else:
                # odd-odd qubits
                if q == 1:
                    owners.append(ids[("S2", (p - 1) // 4)])
                else:
                    owners.append(ids[("B", p, q - 1)])
                if q == top - 1:
                    owners.append(ids[("N2", (p - 1) // 4)])
                else:
                    owners.append(ids[("B", p, q + 1)])
            a, b = owners
            add(a, b, wp=(float(p), float(q)))

    edges.append((L, R))  # vv-edge routed under the south side
    waypoints[(len(edges) - 1, L)] = (-2.0, -4.0)
    waypoints[(len(edges) - 1, R)] = (top + 2.0, -4.0)

    g = build_from_positions(pos, edges, virtual_pair=(L, R), waypoints=waypoints)
    g.vv = len(edges) - 1
    g.validate()
    return g


def hexagonal_graph(m: int) -> EmbeddedGraph:
    """Honeycomb patch (brick-wall drawing) of linear dimension m >= 1.

    Vertices live on [0, W] x [0, H] with W = 2m, H = 2m - 1; vertical edges
    exist where x + y is even.  Rough boundaries: stubs at (0, y even) on the
    left and (W, y odd) on the right.  The boundary is cut so that every
    internal face has even length and both virtual faces carry an odd number
    of qubits (W + 3), which the dual-hexagonal class relies on.
    """
    if m < 1:
        raise GraphError("hexagonal lattice size must be >= 1")
    W, H = (2, 3) if m == 1 else (2 * m, 2 * m - 1)

    pos: dict[int, tuple[float, float]] = {}
    ids: dict[tuple, int] = {}

    def vert(key, xy) -> int:
        if key not in ids:
            ids[key] = len(pos)
            pos[ids[key]] = xy
        return ids[key]

    L = vert(("virt", 0), (-2.0, H / 2.0))
    R = vert(("virt", 1), (W + 2.0, H / 2.0))
    for x in range(W + 1):
        for y in range(H + 1):
            vert((x, y), (float(x), float(y)))

    edges: list[tuple[int, int]] = []
    waypoints: dict[int, tuple[float, float]] = {}

    def add(a, b, wp=None):
        edges.append((a, b))
        if wp is not None:
            waypoints[len(edges) - 1] = wp

    for x in range(W):
        for y in range(H + 1):
            add(ids[(x, y)], ids[(x + 1, y)])
    for x in range(W + 1):
        for y in range(H):
            if (x + y) % 2 == 0:
                add(ids[(x, y)], ids[(x, y + 1)])
    for y in range(0, H + 1, 2):
        add(L, ids[(0, y)], wp=(-1.0, float(y)))
    for y in range(1, H + 1, 2):
        add(R, ids[(W, y)], wp=(W + 1.0, float(y)))
    edges.append((L, R))  # vv-edge wraps under the south side
    waypoints[(len(edges) - 1, L)] = (-2.0, -5.0)
    waypoints[(len(edges) - 1, R)] = (W + 2.0, -5.0)

    g = build_from_positions(pos, edges, virtual_pair=(L, R), waypoints=waypoints)
    g.vv = len(edges) - 1
    g.validate()
    return g


def kagome_graph(m: int) -> EmbeddedGraph:
    """Kagome patch of m x m triangular cells.

    Kagome vertices are the edges of a triangular-lattice parallelogram;
    each triangular face becomes a kagome triangle, so interior vertices have
    degree 4 and boundary vertices degree 2.  Rough-boundary vertices receive
    two parallel stubs each, keeping all Z-weights even and making the
    logical Z support even (2m qubits).
    """
    if m < 1:
        raise GraphError("kagome lattice size must be >= 1")
    Rn = Cn = m

    def tpos(r: int, c: int) -> tuple[float, float]:
        return (c + r / 2.0, r * 0.8660254)

    # kagome vertices = triangular-lattice edges
    pos: dict[int, tuple[float, float]] = {}
    ids: dict[tuple, int] = {}

    def kvert(key, a, b) -> int:
        if key not in ids:
            ids[key] = len(pos)
            ax, ay = tpos(*a)
            bx, by = tpos(*b)
            pos[ids[key]] = ((ax + bx) / 2.0, (ay + by) / 2.0)
        return ids[key]

    def horiz(r, c):
        return kvert(("h", r, c), (r, c), (r, c + 1))

    def ne(r, c):
        return kvert(("ne", r, c), (r, c), (r + 1, c))

    def nw(r, c):
        return kvert(("nw", r, c), (r, c + 1), (r + 1, c))

    edges: list[tuple[int, int]] = []
    waypoints: dict[int, tuple[float, float]] = {}

    def add(a, b, wp=None):
        edges.append((a, b))
        if wp is not None:
            waypoints[len(edges) - 1] = wp

    for r in range(Rn):
        for c in range(Cn):
            # up triangle (r,c): corners t(r,c), t(r,c+1), t(r+1,c)
            add(horiz(r, c), ne(r, c))
            add(ne(r, c), nw(r, c))
            add(nw(r, c), horiz(r, c))
            # down triangle (r,c): corners t(r,c+1), t(r+1,c), t(r+1,c+1)
            add(nw(r, c), horiz(r + 1, c))
            add(horiz(r + 1, c), ne(r, c + 1))
            add(ne(r, c + 1), nw(r, c))

    Lv = len(pos)
    pos[Lv] = (-2.0, Rn * 0.43)
    Rv = len(pos)
    pos[Rv] = (Cn + Rn / 2.0 + 2.0, Rn * 0.43)
    # two parallel stubs per rough-boundary vertex (ne edges at c=0 and c=Cn)
    for r in range(Rn):
        v = ids[("ne", r, 0)]
        vx, vy = pos[v]
        add(Lv, v, wp=(vx - 0.3, vy + 0.15))
        add(Lv, v, wp=(vx - 0.3, vy - 0.15))
        w = ids[("ne", r, Cn)]
        wx, wy = pos[w]
        add(Rv, w, wp=(wx + 0.3, wy + 0.15))
        add(Rv, w, wp=(wx + 0.3, wy - 0.15))
    edges.append((Lv, Rv))
    waypoints[(len(edges) - 1, Lv)] = (-2.0, -5.0)
    waypoints[(len(edges) - 1, Rv)] = (Cn + Rn / 2.0 + 2.0, -5.0)

    g = build_from_positions(pos, edges, virtual_pair=(Lv, Rv), waypoints=waypoints)
    g.vv = len(edges) - 1
    g.validate()
    return g


def trihex_graph(m: int) -> EmbeddedGraph:
    """(3, 12^2) patch: the hexagonal patch with every degree-3 vertex split
    into a triangle, giving triangle faces and 12-gon bulk faces."""
    base = hexagonal_graph(m)
    return _truncate_deg3(base)


def _truncate_deg3(g: EmbeddedGraph) -> EmbeddedGraph:
    """Split each real degree-3 vertex into a 3-cycle, one new vertex per
    incident edge; rotations follow the original cyclic order."""
    assert g.virtual_pair is not None
    virt = set(g.virtual_pair)
    new_rot: list[list[int]] = []
    edges: list[tuple[int, int]] = [(-1, -1)] * g.num_edges
    # map (old vertex, incident edge) -> new vertex id
    nid: dict[tuple[int, int], int] = {}

    def alloc() -> int:
        new_rot.append([])
        return len(new_rot) - 1

    for v in range(g.num_vertices):
        rot = g.rotations[v]
        if v in virt or len(rot) != 3:
            w = alloc()
            for e in rot:
                nid[(v, e)] = w
        else:
            for e in rot:
                nid[(v, e)] = alloc()

    ne = g.num_edges
    extra: list[tuple[int, int]] = []
    cyc_edges: dict[tuple[int, int], int] = {}
    for v in range(g.num_vertices):
        rot = g.rotations[v]
        if v in virt or len(rot) != 3:
            continue
        for i, e in enumerate(rot):
            e2 = rot[(i + 1) % 3]
            a, b = nid[(v, e)], nid[(v, e2)]
            cyc_edges[(v, i)] = ne + len(extra)
            extra.append((a, b))

    for e, (u, w) in enumerate(g.edges):
        edges[e] = (nid[(u, e)], nid[(w, e)])
    edges.extend(extra)

    for v in range(g.num_vertices):
        rot = g.rotations[v]
        if v in virt or len(rot) != 3:
            new_rot[nid[(v, rot[0])]] = list(rot)
        else:
            for i, e in enumerate(rot):
                # at the split vertex: original edge, cycle edge to next,
                # cycle edge from previous (counterclockwise)
                prev_c = cyc_edges[(v, (i - 1) % 3)]
                next_c = cyc_edges[(v, i)]
                new_rot[nid[(v, e)]] = [e, next_c, prev_c]

    vp = (nid[(g.virtual_pair[0], g.rotations[g.virtual_pair[0]][0])],
          nid[(g.virtual_pair[1], g.rotations[g.virtual_pair[1]][0])])
    out = EmbeddedGraph(edges=edges, rotations=new_rot, virtual_pair=vp)
    out.validate()
    return out
