"""Simple undirected graphs with stable integer vertex ids.

Everything downstream (separations, decompositions, minor models) keeps
vertex identity, so the carrier type is deliberately small and immutable:
a sorted tuple of vertex ids plus a set of sorted edge pairs.  The null
graph (no vertices) is legal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Malformed graph data (loops, duplicate edges, unknown endpoints)."""


class BudgetExceeded(RuntimeError):
    """An exact-search routine refused an input beyond its size budget."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    Vertices are opaque non-negative integers; iteration order is always
    ascending id.  No loops, no parallel edges.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Sequence[int]] = ()):
        vs = sorted({int(v) for v in vertices})
        for v in vs:
            if v < 0:
                raise GraphError(f"negative vertex id {v}")
        vset = set(vs)
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u},{v}) has undeclared endpoint")
            es.add(_norm_edge(u, v))
        self._vertices: tuple[int, ...] = tuple(vs)
        self._edges: frozenset[tuple[int, int]] = frozenset(es)
        adj: dict[int, list[int]] = {v: [] for v in vs}
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        self._adj: dict[int, tuple[int, ...]] = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self._hash: int | None = None

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._edges))

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighborhood_of_set(self, vs: Iterable[int]) -> frozenset[int]:
        """N_G(R): vertices outside R adjacent to R."""
        rs = set(vs)
        out = set()
        for v in rs:
            out.update(self._adj[v])
        return frozenset(out - rs)

    # -- derived graphs ---------------------------------------------------

    def subgraph(self, vs: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vs`` (ids preserved)."""
        keep = set(vs)
        for v in keep:
            if v not in self._adj:
                raise GraphError(f"vertex {v} not in graph")
        es = [e for e in self._edges if e[0] in keep and e[1] in keep]
        return Graph(keep, es)

    def remove_vertices(self, vs: Iterable[int]) -> "Graph":
        drop = set(vs)
        return self.subgraph([v for v in self._vertices if v not in drop])

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self._vertices, list(self._edges) + [tuple(e) for e in extra])

    def union(self, other: "Graph") -> "Graph":
        return Graph(
            set(self._vertices) | set(other._vertices),
            list(self._edges) + list(other._edges),
        )

    def contract_set(self, vs: Iterable[int]) -> tuple["Graph", int]:
        """Contract the vertex set ``vs`` into one vertex named min(vs).

        The set need not be connected (used for the layered recursion where
        the complement of a component is contracted).  Returns the contracted
        graph and the merged vertex id.
        """
        cls = set(vs)
        if not cls:
            raise GraphError("cannot contract an empty set")
        name = min(cls)
        keep = [v for v in self._vertices if v not in cls]
        es = set()
        for u, v in self._edges:
            cu = name if u in cls else u
            cv = name if v in cls else v
            if cu != cv:
                es.add(_norm_edge(cu, cv))
        return Graph(keep + [name], es), name

    # -- traversal --------------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        """Connected components, sorted by minimum vertex id."""
        seen: set[int] = set()
        comps = []
        for s in self._vertices:
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bfs_layers(self, sources: Iterable[int]) -> list[frozenset[int]]:
        """BFS layering from a source set; unreachable vertices are omitted."""
        frontier = sorted(set(sources))
        seen = set(frontier)
        layers = []
        while frontier:
            layers.append(frozenset(frontier))
            nxt = set()
            for u in frontier:
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        nxt.add(w)
            frontier = sorted(nxt)
        return layers

    def distances_from(self, source: int) -> dict[int, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def diameter(self) -> int:
        if not self.is_connected():
            raise GraphError("diameter of a disconnected graph")
        if self.n == 0:
            return 0
        best = 0
        for v in self._vertices:
            d = self.distances_from(v)
            best = max(best, max(d.values()))
        return best

    def radius(self) -> int:
        if not self.is_connected():
            raise GraphError("radius of a disconnected graph")
        if self.n == 0:
            return 0
        return min(max(self.distances_from(v).values()) for v in self._vertices)

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def has_cycle(self) -> bool:
        return not self.is_forest()

    # -- blocks (2-connected components) -----------------------------------

    def blocks(self) -> list[frozenset[int]]:
        """Vertex sets of the blocks (maximal 2-connected subgraphs / bridges).

        Isolated vertices yield singleton blocks.  Iterative Hopcroft-Tarjan.
        """
        index: dict[int, int] = {}
        low: dict[int, int] = {}
        out: list[frozenset[int]] = []
        counter = 0
        for root in self._vertices:
            if root in index:
                continue
            if self.degree(root) == 0:
                out.append(frozenset([root]))
                index[root] = counter
                counter += 1
                continue
            stack = [(root, None, iter(self._adj[root]))]
            index[root] = low[root] = counter
            counter += 1
            estack: list[tuple[int, int]] = []
            while stack:
                v, parent, it = stack[-1]
                advanced = False
                for w in it:
                    if w == parent:
                        continue
                    if w not in index:
                        index[w] = low[w] = counter
                        counter += 1
                        estack.append((v, w))
                        stack.append((w, v, iter(self._adj[w])))
                        advanced = True
                        break
                    if index[w] < index[v]:
                        estack.append((v, w))
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] >= index[pv]:
                        block = set()
                        while estack:
                            e = estack.pop()
                            block.update(e)
                            if e == (pv, v):
                                break
                        if block:
                            out.append(frozenset(block))
        return sorted(out, key=lambda b: min(b))

    def is_biconnected(self) -> bool:
        if self.n < 3:
            return self.n == 2 and self.m == 1
        return self.is_connected() and len(self.blocks()) == 1

    # -- bitmask view -------------------------------------------------------

    def to_masks(self) -> tuple[list[int], list[int], dict[int, int]]:
        """(vertex list, adjacency bitmasks, id -> index map) for subset DPs."""
        verts = list(self._vertices)
        idx = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for u, v in self._edges:
            adj[idx[u]] |= 1 << idx[v]
            adj[idx[v]] |= 1 << idx[u]
        return verts, adj, idx


# -- rooted forests ---------------------------------------------------------


class RootedForest:
    """Disjoint union of rooted trees given by a parent map.

    ``parent`` maps every non-root vertex to its parent; ``roots`` lists the
    roots.  Vertex-height counts vertices on a longest root-to-leaf path.
    """

    __slots__ = ("parent", "roots", "_children", "_depth")

    def __init__(self, parent: dict[int, int], roots: Iterable[int]):
        self.parent = dict(parent)
        self.roots = tuple(sorted(set(roots)))
        verts = set(self.parent) | set(self.roots) | set(self.parent.values())
        for r in self.roots:
            if r in self.parent:
                raise GraphError(f"root {r} has a parent")
        children: dict[int, list[int]] = {v: [] for v in verts}
        for c, p in self.parent.items():
            if p not in verts:
                raise GraphError(f"parent {p} undeclared")
            children[p].append(c)
        self._children = {v: tuple(sorted(cs)) for v, cs in children.items()}
        # depth assignment doubles as the acyclicity check
        depth: dict[int, int] = {}
        for r in self.roots:
            stack = [(r, 1)]
            while stack:
                v, d = stack.pop()
                if v in depth:
                    raise GraphError("forest is not acyclic")
                depth[v] = d
                for c in self._children[v]:
                    stack.append((c, d + 1))
        if set(depth) != verts:
            raise GraphError("some vertices are not reachable from a root")
        self._depth = depth

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._depth))

    def __len__(self) -> int:
        return len(self._depth)

    def __contains__(self, v: int) -> bool:
        return v in self._depth

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def depth(self, v: int) -> int:
        """Number of vertices on the path from the root to v, inclusive."""
        return self._depth[v]

    def vertex_height(self) -> int:
        return max(self._depth.values(), default=0)

    def root_of(self, v: int) -> int:
        while v in self.parent:
            v = self.parent[v]
        return v

    def path_to_root(self, v: int) -> list[int]:
        """Vertices from v up to its root, inclusive."""
        out = [v]
        while v in self.parent:
            v = self.parent[v]
            out.append(v)
        return out

    def is_descendant(self, u: int, v: int) -> bool:
        """True iff v lies on the path from a root to u (u below v)."""
        w = u
        while True:
            if w == v:
                return True
            if w not in self.parent:
                return False
            w = self.parent[w]

    def leaves(self) -> tuple[int, ...]:
        return tuple(sorted(v for v in self._depth if not self._children[v]))

    def root_to_leaf_paths(self) -> list[list[int]]:
        out = []
        for leaf in self.leaves():
            out.append(list(reversed(self.path_to_root(leaf))))
        return out

    def closure_contains(self, u: int, v: int) -> bool:
        """True iff uv is an edge of the closure (ancestor/descendant pair)."""
        return u != v and (self.is_descendant(u, v) or self.is_descendant(v, u))

    def is_elimination_forest_of(self, g: Graph) -> bool:
        if set(self.vertices) != set(g.vertices):
            return False
        return all(self.closure_contains(u, v) for u, v in g.edges)

    def restrict(self, keep: Iterable[int]) -> "RootedForest":
        """Ancestor-compression onto ``keep``.

        Each surviving vertex's parent becomes its nearest surviving proper
        ancestor; vertices with none become roots.  Chains stay chains.
        """
        keepset = set(keep)
        parent = {}
        roots = []
        for v in self._depth:
            if v not in keepset:
                continue
            p = self.parent.get(v)
            while p is not None and p not in keepset:
                p = self.parent.get(p)
            if p is None:
                roots.append(v)
            else:
                parent[v] = p
        return RootedForest(parent, roots)

    def union(self, other: "RootedForest") -> "RootedForest":
        overlap = set(self._depth) & set(other._depth)
        if overlap:
            raise GraphError(f"forests overlap on {sorted(overlap)[:4]}")
        parent = dict(self.parent)
        parent.update(other.parent)
        return RootedForest(parent, self.roots + other.roots)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootedForest):
            return NotImplemented
        return self.parent == other.parent and self.roots == other.roots

    def __repr__(self) -> str:
        return f"RootedForest(roots={self.roots}, n={len(self._depth)})"


def dfs_tree(g: Graph, root: int) -> RootedForest:
    """Deterministic DFS spanning tree of a connected graph.

    Neighbors are visited in ascending id, so the output is reproducible.
    Any DFS tree of a connected graph is an elimination tree: non-tree edges
    connect ancestor-descendant pairs.
    """
    if root not in g:
        raise GraphError(f"root {root} not in graph")
    if not g.is_connected():
        raise GraphError("dfs_tree requires a connected graph")
    parent: dict[int, int] = {}
    seen = {root}
    stack = [(root, iter(g.neighbors(root)))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append((w, iter(g.neighbors(w))))
                break
        else:
            stack.pop()
    return RootedForest(parent, [root])


# -- separations -------------------------------------------------------------


@dataclass(frozen=True)
class Separation:
    """A separation (A, B): subgraphs with A ∪ B = G and E(A ∩ B) = ∅.

    Both sides are stored explicitly so that edge bookkeeping (which side an
    edge belongs to) survives the A-side manipulations of the win/win engine.
    """

    side_a: Graph
    side_b: Graph

    def validate(self, g: Graph) -> None:
        va, vb = set(self.side_a.vertices), set(self.side_b.vertices)
        if va | vb != set(g.vertices):
            raise GraphError("separation sides do not cover V(G)")
        ea, eb = self.side_a.edge_set, self.side_b.edge_set
        if ea | eb != g.edge_set:
            raise GraphError("separation sides do not cover E(G)")
        if ea & eb:
            raise GraphError("E(A ∩ B) must be empty")

    @property
    def boundary(self) -> frozenset[int]:
        return frozenset(set(self.side_a.vertices) & set(self.side_b.vertices))

    @property
    def order(self) -> int:
        return len(self.boundary)

    def le(self, other: "Separation") -> bool:
        """(A,B) ≤ (A',B'): A ⊆ A' and B ⊇ B'."""
        return (
            set(self.side_a.vertices) <= set(other.side_a.vertices)
            and self.side_a.edge_set <= other.side_a.edge_set
            and set(other.side_b.vertices) <= set(self.side_b.vertices)
            and other.side_b.edge_set <= self.side_b.edge_set
        )

    def extends(self, other: "Separation") -> bool:
        """True iff self extends other: other ≤ self and order(self) ≤ order(other)."""
        return other.le(self) and self.order <= other.order


def make_separation(g: Graph, va: Iterable[int], vb: Iterable[int]) -> Separation:
    """Canonical separation with the given sides.

    All edges inside V(A) go to A; B gets the rest.  Valid only when no edge
    joins V(A)∖V(B) to V(B)∖V(A); validation raises otherwise.
    """
    va, vb = set(va), set(vb)
    ea = [e for e in g.edges if e[0] in va and e[1] in va]
    eb = [e for e in g.edges if e not in set(ea)]
    sep = Separation(Graph(va, ea), Graph(vb, eb))
    sep.validate(g)
    return sep


# -- Menger (vertex-disjoint paths) ------------------------------------------


@dataclass(frozen=True)
class Linkage:
    """Pairwise vertex-disjoint X–Y paths (each an ordered vertex list)."""

    paths: tuple[tuple[int, ...], ...]
    endpoints_x: frozenset[int]
    endpoints_y: frozenset[int]

    def __len__(self) -> int:
        return len(self.paths)

    def validate(self, g: Graph) -> None:
        seen: set[int] = set()
        for p in self.paths:
            if not p:
                raise GraphError("empty path in linkage")
            if set(p) & seen:
                raise GraphError("linkage paths are not disjoint")
            seen.update(p)
            for a, b in zip(p, p[1:]):
                if not g.has_edge(a, b):
                    raise GraphError(f"linkage uses non-edge ({a},{b})")
            if len(p) == 1:
                if p[0] not in self.endpoints_x or p[0] not in self.endpoints_y:
                    raise GraphError("one-vertex path not in X ∩ Y")
            else:
                if p[0] not in self.endpoints_x or p[-1] not in self.endpoints_y:
                    raise GraphError("path endpoints not in X/Y")
                for inner in p[1:-1]:
                    if inner in self.endpoints_x or inner in self.endpoints_y:
                        raise GraphError("internal vertex of an X–Y path lies in X ∪ Y")


class _FlowNet:
    """Unit-vertex-capacity flow network for Menger computations."""

    def __init__(self, g: Graph, x: frozenset[int], y: frozenset[int]):
        self.g = g
        self.x = x
        self.y = y
        # node encoding: (v, 0)=v_in, (v, 1)=v_out, plus "s" and "t"
        self.flow: dict[tuple, dict[tuple, int]] = {}
        verts = g.vertices
        self._arcs: dict[tuple, list[tuple]] = {"s": [], "t": []}
        for v in verts:
            self._arcs[(v, 0)] = [(v, 1)]
            self._arcs[(v, 1)] = [(w, 0) for w in g.neighbors(v)]
        for v in sorted(x):
            self._arcs["s"].append((v, 0))
        for v in sorted(y):
            self._arcs[(v, 1)].append("t")

    def _cap(self, a, b) -> int:
        # v_in -> v_out has capacity 1; everything else effectively infinite
        if isinstance(a, tuple) and isinstance(b, tuple) and a[0] == b[0]:
            return 1
        return 1 << 20

    def _residual(self, a, b) -> int:
        used = self.flow.get(a, {}).get(b, 0)
        return self._cap(a, b) - used

    def _push(self, a, b, amount=1) -> None:
        self.flow.setdefault(a, {})[b] = self.flow.get(a, {}).get(b, 0) + amount
        self.flow.setdefault(b, {})[a] = self.flow.get(b, {}).get(a, 0) - amount

    def _bfs_augment(self) -> bool:
        prev = {"s": None}
        queue = deque(["s"])
        while queue:
            a = queue.popleft()
            outs = list(self._arcs.get(a, []))
            # residual (reverse) arcs
            outs += [b for b, f in self.flow.get(a, {}).items() if f < 0]
            for b in outs:
                if b in prev or self._residual(a, b) <= 0:
                    continue
                prev[b] = a
                if b == "t":
                    node = "t"
                    while prev[node] is not None:
                        self._push(prev[node], node)
                        node = prev[node]
                    return True
                queue.append(b)
        return False

    def max_flow(self) -> int:
        total = 0
        while self._bfs_augment():
            total += 1
        return total

    def reachable(self) -> set:
        """Nodes reachable from the source in the residual network."""
        seen = {"s"}
        queue = deque(["s"])
        while queue:
            a = queue.popleft()
            outs = list(self._arcs.get(a, []))
            outs += [b for b, f in self.flow.get(a, {}).items() if f < 0]
            for b in outs:
                if b not in seen and self._residual(a, b) > 0:
                    seen.add(b)
                    queue.append(b)
        return seen

    def extract_paths(self) -> list[list[int]]:
        """Decompose the flow into vertex-disjoint X–Y paths, ascending starts."""
        succ: dict[int, int | None] = {}
        starts = []
        for v in sorted(self.x):
            if self.flow.get("s", {}).get((v, 0), 0) > 0:
                starts.append(v)
        for v in self.g.vertices:
            if self.flow.get((v, 0), {}).get((v, 1), 0) > 0:
                nxt = None
                for b, f in sorted(self.flow.get((v, 1), {}).items(), key=str):
                    if f > 0 and b != "t" and isinstance(b, tuple):
                        nxt = b[0]
                        break
                succ[v] = nxt
        paths = []
        for v in starts:
            path = [v]
            while succ.get(path[-1]) is not None:
                path.append(succ[path[-1]])
            paths.append(path)
        return paths


def menger(g: Graph, x: Iterable[int], y: Iterable[int]) -> tuple[Linkage, Separation]:
    """Maximum set of disjoint X–Y paths plus a matching-order separation.

    The separation is the X-closest minimum cut: V(A) consists of the cut
    plus everything still reachable from X in the residual network, with all
    edges inside V(A) assigned to A.  Each returned path meets the boundary
    exactly once.
    """
    xs = frozenset(x)
    ys = frozenset(y)
    for v in xs | ys:
        if v not in g:
            raise GraphError(f"terminal {v} not in graph")
    net = _FlowNet(g, xs, ys)
    k = net.max_flow()
    reach = net.reachable()
    cut = {v for v in g.vertices if (v, 0) in reach and (v, 1) not in reach}
    rside = {v for v in g.vertices if (v, 1) in reach}
    va = rside | cut
    vb = (set(g.vertices) - rside) | cut
    sep = make_separation(g, va, vb)
    assert sep.order == k, "min cut size must equal max flow"
    paths = net.extract_paths()
    assert len(paths) == k
    linkage = Linkage(tuple(tuple(p) for p in paths), xs, ys)
    linkage.validate(g)
    return linkage, sep


# -- generators ---------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def clique(n: int) -> Graph:
    return Graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def grid(k: int, length: int) -> Graph:
    """k×ℓ grid; vertex (i,j) gets id i*ℓ + j (row-major, 0-based)."""
    verts = range(k * length)
    es = []
    for i in range(k):
        for j in range(length):
            if j + 1 < length:
                es.append((i * length + j, i * length + j + 1))
            if i + 1 < k:
                es.append((i * length + j, (i + 1) * length + j))
    return Graph(verts, es)


def grid_coords(k: int, length: int) -> dict[tuple[int, int], int]:
    return {(i, j): i * length + j for i in range(k) for j in range(length)}


def fan(n: int) -> Graph:
    """Fan on n vertices: path 0..n-2 plus the universal vertex n-1."""
    if n < 1:
        raise GraphError("fan needs at least 1 vertex")
    es = [(i, i + 1) for i in range(n - 2)]
    es += [(i, n - 1) for i in range(n - 1)]
    return Graph(range(n), es)


def complete_ternary(height: int) -> Graph:
    """Complete ternary tree of the given vertex-height, BFS ids from 0."""
    if height < 0:
        raise GraphError("height must be non-negative")
    if height == 0:
        return Graph()
    total = (3**height - 1) // 2
    es = [(v, (v - 1) // 3) for v in range(1, total)]
    return Graph(range(total), es)


def apex_forest(forest: Graph, apex_edges: Iterable[int]) -> Graph:
    """Add an apex vertex adjacent to ``apex_edges``; id is max(V)+1 (0 if null)."""
    if not forest.is_forest():
        raise GraphError("apex_forest expects a forest")
    apex = (max(forest.vertices) + 1) if forest.n else 0
    targets = set(apex_edges)
    if not targets <= set(forest.vertices):
        raise GraphError("apex targets must be forest vertices")
    return Graph(
        list(forest.vertices) + [apex],
        list(forest.edges) + [(apex, t) for t in sorted(targets)],
    )


def generate(kind: str, *params: int) -> Graph:
    """Named-generator dispatcher used by the CLI (`gen grid 3 3`, ...)."""
    if kind == "grid":
        return grid(int(params[0]), int(params[1]))
    if kind == "fan":
        return fan(int(params[0]))
    if kind == "path":
        return path_graph(int(params[0]))
    if kind == "clique":
        return clique(int(params[0]))
    if kind == "cycle":
        return cycle_graph(int(params[0]))
    if kind == "complete_ternary":
        return complete_ternary(int(params[0]))
    raise GraphError(f"unknown generator kind {kind!r}")


# -- text format ---------------------------------------------------------------


def read_graph_text(text: str) -> Graph:
    """Parse the `n m` / `u v` edge list format (0-based ids).

    Rejects loops and duplicate edges.  Vertices are 0..n-1.
    """
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphError(f"loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range")
        key = _norm_edge(u, v)
        if key in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add(key)
        edges.append(key)
    return Graph(range(n), edges)


def write_graph_text(g: Graph) -> str:
    idx = {v: i for i, v in enumerate(g.vertices)}
    lines = [f"{g.n} {g.m}"]
    for u, v in g.edges:
        lines.append(f"{idx[u]} {idx[v]}")
    return "\n".join(lines) + "\n"
