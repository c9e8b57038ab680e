"""Extremal constructions: the radius/pathwidth lower-bound family and the
combinatorial plane-graph surgery (apexification and cutting a graph open
along a spanning tree into a Hamiltonian plane graph).

Plane graphs are purely combinatorial: a rotation system (cyclic neighbor
order per vertex) plus a distinguished outer-face vertex set.  Face tracing
plus Euler's formula per component is the planarity check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import BudgetExceeded, Graph, GraphError, RootedForest, complete_ternary, fan
from .minors import MinorModel, find_rooted_minor, model_violation
from .oracles import DEFAULT_BUDGET, OracleBudget, exact_width


# -- rotation systems -----------------------------------------------------------


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of incident neighbors per vertex."""

    rotation: Mapping[int, tuple[int, ...]]

    def check(self, g: Graph) -> None:
        if set(self.rotation) != set(g.vertices):
            raise GraphError("rotation must cover every vertex")
        for v, order in self.rotation.items():
            if sorted(order) != sorted(g.neighbors(v)):
                raise GraphError(f"rotation at {v} is not a permutation of its neighbors")

    def succ(self, v: int, w: int) -> int:
        """Neighbor of v immediately after w in the cyclic order."""
        order = self.rotation[v]
        i = order.index(w)
        return order[(i + 1) % len(order)]

    def faces(self, g: Graph) -> list[tuple[tuple[int, int], ...]]:
        """Face boundary walks as dart sequences; next dart of (u,v) is
        (v, succ_v(u)).  Canonical rotation: each walk starts at its minimum
        dart; sorted output."""
        darts = {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}
        out = []
        while darts:
            start = min(darts)
            walk = []
            cur = start
            while True:
                walk.append(cur)
                darts.discard(cur)
                cur = (cur[1], self.succ(cur[1], cur[0]))
                if cur == start:
                    break
            k = walk.index(min(walk))
            out.append(tuple(walk[k:] + walk[:k]))
        return sorted(out)

    def euler_check(self, g: Graph) -> None:
        """Genus-0 check: V − E + F = 2 per connected component (isolated
        vertices count one face)."""
        faces = self.faces(g)
        for comp in g.components():
            sub = g.subgraph(comp)
            if sub.m == 0:
                continue  # single vertex: 1 - 0 + 1 = 2
            f = sum(1 for walk in faces if walk[0][0] in comp)
            if len(comp) - sub.m + f != 2:
                raise GraphError(
                    f"component {sorted(comp)[:4]}...: V-E+F = {len(comp)}-{sub.m}+{f} != 2"
                )

    def to_json(self) -> dict:
        return {"rotation": {str(v): list(self.rotation[v]) for v in sorted(self.rotation)}}


@dataclass(frozen=True)
class PlaneGraph:
    """A plane-embedded graph: rotation system plus outer-face vertex set."""

    graph: Graph
    rotation: RotationSystem
    outer_face: frozenset[int]

    def check(self) -> None:
        self.rotation.check(self.graph)
        self.rotation.euler_check(self.graph)
        if not self.outer_face <= set(self.graph.vertices):
            raise GraphError("outer face must be a vertex subset")

    def outer_walk(self) -> tuple[tuple[int, int], ...]:
        """The face walk realizing the outer face (canonical min among the
        faces whose vertex set equals outer_face)."""
        if self.graph.m == 0:
            return ()
        cands = [w for w in self.rotation.faces(self.graph) if {d[0] for d in w} == self.outer_face]
        if not cands:
            raise GraphError("no face walk realizes the declared outer face")
        return cands[0]

    def to_json(self) -> dict:
        out = self.rotation.to_json()
        out["outer"] = sorted(self.outer_face)
        return out


def plane_cycle(n: int) -> PlaneGraph:
    from .graph import cycle_graph

    g = cycle_graph(n)
    rot = RotationSystem({v: ((v - 1) % n, (v + 1) % n) for v in range(n)})
    return PlaneGraph(g, rot, frozenset(range(n)))


def plane_path(n: int) -> PlaneGraph:
    from .graph import path_graph

    g = path_graph(n)
    rot = {v: tuple(g.neighbors(v)) for v in g.vertices}
    return PlaneGraph(g, RotationSystem(rot), frozenset(range(n)))


def plane_k4() -> PlaneGraph:
    """K_4 drawn with face {0,1,2} outer and 3 in the middle."""
    g = Graph(range(4), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    rot = RotationSystem({0: (1, 3, 2), 1: (2, 3, 0), 2: (0, 3, 1), 3: (0, 1, 2)})
    return PlaneGraph(g, rot, frozenset({0, 1, 2}))


# -- apexification ----------------------------------------------------------------


def apexify(h: PlaneGraph) -> PlaneGraph:
    """Add a vertex u inside the outer face adjacent to all its vertices.

    u is woven into each boundary vertex's rotation at (one occurrence of)
    its outer-face corner, keeping the embedding planar; the new outer face
    is the largest face at u in the re-traced embedding.
    """
    h.check()
    if not h.outer_face:
        raise GraphError("cannot apexify an empty outer face")
    g = h.graph
    u = max(g.vertices) + 1 if g.n else 0
    boundary = sorted(h.outer_face)
    if g.m == 0:
        if g.n != 1:
            raise GraphError("edgeless plane graphs other than K1 are ambiguous to apexify")
        v = boundary[0]
        g2 = Graph([v, u], [(v, u)])
        rot = RotationSystem({v: (u,), u: (v,)})
        out = PlaneGraph(g2, rot, frozenset([v, u]))
        out.check()
        return out
    walk = h.outer_walk()
    order: list[int] = []
    corner: dict[int, tuple[int, int]] = {}
    for i, (a, b) in enumerate(walk):
        if b not in corner:
            # b's corner on this face: between incoming a and the successor
            corner[b] = (a, h.rotation.succ(b, a))
            order.append(b)
    new_rot: dict[int, tuple[int, ...]] = {}
    for v in g.vertices:
        cur = list(h.rotation.rotation[v])
        if v in corner:
            a, _ = corner[v]
            i = cur.index(a)
            cur = cur[: i + 1] + [u] + cur[i + 1 :]
        new_rot[v] = tuple(cur)
    new_rot[u] = tuple(reversed(order))
    g2 = Graph(list(g.vertices) + [u], list(g.edges) + [(u, v) for v in boundary])
    rot2 = RotationSystem(new_rot)
    rot2.check(g2)
    rot2.euler_check(g2)
    faces = [w for w in rot2.faces(g2) if any(d[0] == u for d in w)]
    best = max(faces, key=lambda w: (len({d[0] for d in w}), [(-a, -b) for a, b in w]))
    out = PlaneGraph(g2, rot2, frozenset(d[0] for d in best))
    out.check()
    return out


# -- cutting open along a spanning tree ----------------------------------------------


def _tree_succ(rot: RotationSystem, t: RootedForest, v: int, w: int) -> int:
    """First tree-neighbor of v strictly after w along v's rotation."""
    order = rot.rotation[v]
    tn = set(t.children(v)) | ({t.parent[v]} if v in t.parent else set())
    i = order.index(w)
    for step in range(1, len(order) + 1):
        cand = order[(i + step) % len(order)]
        if cand in tn:
            return cand
    raise GraphError(f"vertex {v} has no tree neighbor")


def cut_open(h_prime: PlaneGraph, t: RootedForest, apex: int):
    """Cut H′ open along a spanning tree with the apex as a leaf.

    Every vertex becomes the cycle of its tree darts; tree edges are doubled
    and non-tree edges reattach at the corners.  Returns (H″ as PlaneGraph,
    dart-to-id map, hamiltonian cycle as an id sequence, model of H′ in H″).
    The doubled-tree walk is the Hamiltonian cycle; for H′ = K_2 it
    degenerates to the 2-vertex path closed by its single edge.
    """
    h_prime.check()
    g = h_prime.graph
    if set(t.vertices) != set(g.vertices) or len(t.roots) != 1:
        raise GraphError("t must be a spanning tree")
    for v, p in t.parent.items():
        if not g.has_edge(v, p):
            raise GraphError("t must be a subtree of the graph")
    tn: dict[int, set[int]] = {v: set(t.children(v)) for v in t.vertices}
    for v, p in t.parent.items():
        tn[v].add(p)
    if len(tn[apex]) != 1:
        raise GraphError("apex must be a leaf of the spanning tree")
    rot = h_prime.rotation

    darts = sorted((v, w) for v in g.vertices for w in sorted(tn[v]))
    dart_id = {d: i for i, d in enumerate(darts)}
    n2 = len(darts)
    assert n2 == 2 * (g.n - 1), "|V(H'')| must be 2|E(T)| = 2|V(H)|"

    def serve(v: int, x: int) -> tuple[int, int]:
        return (v, _tree_succ(rot, t, v, x))

    edges: set[tuple[int, int]] = set()

    def add(c1: tuple[int, int], c2: tuple[int, int]) -> None:
        a, b = dart_id[c1], dart_id[c2]
        if a != b:
            edges.add((a, b) if a < b else (b, a))

    for v in g.vertices:
        for w in sorted(tn[v]):
            nxt = _tree_succ(rot, t, v, w)
            if nxt != w:
                add((v, w), (v, nxt))  # the corner cycle around v
    for v, w in g.edges:
        if w in tn[v]:
            add((v, w), serve(w, v))
            add((w, v), serve(v, w))
        else:
            add(serve(v, w), serve(w, v))

    h2 = Graph(range(n2), edges)

    # rotation of H'': each corner lies on the circle around v spanning the
    # rotation interval that it serves
    rot2: dict[int, list[int]] = {}
    for v in g.vertices:
        order = rot.rotation[v]
        tlist = [w for w in order if w in tn[v]]
        d = len(tlist)
        for i, w in enumerate(tlist):
            prev = tlist[(i - 1) % d]
            cyc: list[tuple[int, int]] = []
            if d >= 2:
                cyc.append((v, prev))
            cyc.append((prev, v))
            j = order.index(prev)
            step = (order.index(w) - j) % len(order)
            for off in range(1, step):
                x = order[(j + off) % len(order)]
                if x not in tn[v]:
                    cyc.append(serve(x, v))
            cyc.append(serve(w, v))
            if d >= 2:
                nxt = tlist[(i + 1) % d]
                if (v, nxt) != (v, prev) or d == 2:
                    cyc.append((v, nxt))
            ids = []
            for c in cyc:
                cid = dart_id[c]
                if cid not in ids and cid != dart_id[(v, w)]:
                    ids.append(cid)
            rot2[dart_id[(v, w)]] = tuple(ids)
    for cid, order2 in rot2.items():
        if sorted(order2) != sorted(h2.neighbors(cid)):
            raise GraphError(f"derived rotation at corner {darts[cid]} is inconsistent")
    rsys2 = RotationSystem(rot2)
    rsys2.euler_check(h2)

    # Hamiltonian cycle: walk the doubled tree from the apex
    u2 = next(iter(tn[apex]))
    seq = [apex, u2]
    for _ in range(2 * (g.n - 1) - 1):
        seq.append(_tree_succ(rot, t, seq[-1], seq[-2]))
    cycle = [dart_id[(seq[i], seq[i + 1])] for i in range(2 * (g.n - 1))]
    if len(set(cycle)) != n2:
        raise GraphError("doubled-tree walk is not Hamiltonian")
    for i in range(len(cycle)):
        a, b = cycle[i], cycle[(i + 1) % len(cycle)]
        if a != b and not h2.has_edge(a, b):
            raise GraphError("hamiltonian walk leaves the edge set")

    model_back = MinorModel(
        {v: frozenset(dart_id[(v, w)] for w in tn[v]) for v in g.vertices}
    )
    why = model_violation(h2, g, model_back)
    assert why is None, f"corner cycles must model H': {why}"
    outer = frozenset(range(n2))
    return PlaneGraph(h2, rsys2, outer), dart_id, tuple(cycle), model_back


def disjoint_plane_union(h: PlaneGraph, k: int) -> PlaneGraph:
    """k relabeled disjoint copies; the outer face is the union of the copies'."""
    if k < 1:
        raise GraphError("k must be positive")
    h.check()
    offset = (max(h.graph.vertices) + 1) if h.graph.n else 1
    verts: list[int] = []
    edges: list[tuple[int, int]] = []
    rot: dict[int, tuple[int, ...]] = {}
    outer: set[int] = set()
    for i in range(k):
        sh = i * offset
        verts.extend(v + sh for v in h.graph.vertices)
        edges.extend((a + sh, b + sh) for a, b in h.graph.edges)
        for v, order in h.rotation.rotation.items():
            rot[v + sh] = tuple(w + sh for w in order)
        outer |= {v + sh for v in h.outer_face}
    out = PlaneGraph(Graph(verts, edges), RotationSystem(rot), frozenset(outer))
    out.check()
    return out


# -- the radius / pathwidth lower-bound family -----------------------------------------


def _ternary_with_bands(ell: int, k: int) -> Graph:
    """Complete ternary tree of vertex-height k+1; for ℓ ≥ 4, extra edges
    join each depth 1+⌊ℓ/2⌋i vertex to its depth 1+⌊ℓ/2⌋(i+1) descendants
    (complete bands only)."""
    g = complete_ternary(k + 1)
    if ell < 4 or k == 0:
        return g
    m = ell // 2
    depth = {0: 1}
    order = [0]
    for v in order:
        for c in range(3 * v + 1, 3 * v + 4):
            if c < g.n:
                depth[c] = depth[v] + 1
                order.append(c)
    extra = []
    i = 0
    while 1 + m * (i + 1) <= k + 1 and i <= k / m - 1:
        lo, hi = 1 + m * i, 1 + m * (i + 1)
        uppers = [v for v in g.vertices if depth[v] == lo]
        for u in uppers:
            descendants = [u]
            for _ in range(m):
                descendants = [c for d in descendants for c in range(3 * d + 1, 3 * d + 4) if c < g.n]
            extra.extend((u, v) for v in descendants)
        i += 1
    return Graph(g.vertices, list(g.edges) + extra)


def lower_bound_graph(ell: int, r: int) -> tuple[Graph, Graph]:
    """The theorem's construction: k = ⌈ℓr/2⌉, banded ternary tree of
    vertex-height k+1, paired with the fan X on ℓ+1 vertices."""
    if ell < 2:
        raise GraphError("ell must be at least 2")
    if r < 0:
        raise GraphError("r must be non-negative")
    k = -(-ell * r // 2)
    return _ternary_with_bands(ell, k), fan(ell + 1)


def ternary_pathwidth_lower(height: int) -> int:
    """pw(complete ternary tree of vertex-height h) = h − 1: a vertex with
    three branches of pathwidth p forces pathwidth p+1."""
    return max(height - 1, 0)


def check_lower_bound(
    ell: int,
    r: int,
    k_override: int | None = None,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> dict:
    """Validate one instance of the construction.

    Asserts the two BFS radius estimates, the ternary-subtree pathwidth
    bound (oracle cross-checked at desk scale), and X-minor-freeness by
    exhaustive rooted-minor search (block decomposition keeps 2-connected
    fan patterns within the search budget)."""
    if ell < 2:
        raise GraphError("ell must be at least 2")
    m = ell // 2
    if k_override is not None:
        k = k_override
        g = _ternary_with_bands(ell, k)
    else:
        k = -(-ell * r // 2)
        g, _ = lower_bound_graph(ell, r)
    x = fan(ell + 1)
    report: dict = {"k": k, "n": g.n, "pattern": x.n}

    ecc_root = max(g.distances_from(0).values()) if g.n > 1 else 0
    assert ecc_root * m >= k, "eccentricity of the root must be at least k/⌊ℓ/2⌋"
    assert ecc_root <= k / m + m + 1e-9, "eccentricity exceeds the proof's estimate"
    if k_override is None:
        assert ecc_root >= r, "radius must reach the requested r"
        if g.n <= 2000:
            assert g.radius() >= r
    report["radius_root"] = ecc_root

    pw_claim = ternary_pathwidth_lower(k + 1)
    report["pw_lower"] = pw_claim
    if g.n <= budget.max_vertices:
        assert exact_width(g, "pw", budget) >= pw_claim
        report["pw_exact"] = exact_width(g, "pw", budget)

    model = find_rooted_minor(g, set(g.vertices), x, "rooted")
    assert model is None, "construction must be X-minor-free"
    report["minor_free"] = True
    return report
