"""Minor models: verification and exhaustive small-scale search.

A model of H in G assigns a branch set to every pattern vertex: disjoint,
connected, non-empty, with a host edge for every pattern edge.  Rooted
models additionally require each branch set to meet S; outer-rooted models
require this only for branch sets of outer-face pattern vertices.

The search is the lower-bound oracle for the whole package: exhaustive
within a hard size budget, never silently wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import BudgetExceeded, Graph, GraphError

MAX_HOST = 14
MAX_PATTERN = 6


@dataclass(frozen=True)
class MinorModel:
    """Branch sets keyed by pattern vertex."""

    branch_sets: Mapping[int, frozenset[int]]

    @staticmethod
    def of(bs: Mapping[int, Iterable[int]]) -> "MinorModel":
        return MinorModel({x: frozenset(b) for x, b in bs.items()})

    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for b in self.branch_sets.values():
            out |= b
        return frozenset(out)

    def to_json(self) -> dict:
        return {"branch_sets": {str(x): sorted(self.branch_sets[x]) for x in sorted(self.branch_sets)}}

    @staticmethod
    def from_json(obj: dict) -> "MinorModel":
        return MinorModel({int(x): frozenset(b) for x, b in obj["branch_sets"].items()})


@dataclass(frozen=True)
class PlanePattern:
    """A plane pattern graph with its outer-face vertex set."""

    graph: Graph
    outer_face: frozenset[int]

    def __post_init__(self):
        if not self.outer_face <= set(self.graph.vertices):
            raise GraphError("outer face must be a vertex subset")


NO_ROOTING = ("none",)


def rooted(s: Iterable[int]) -> tuple:
    return ("rooted", frozenset(s))

def outer_rooted(s: Iterable[int], outer_face: Iterable[int]) -> tuple:
    return ("outer", frozenset(s), frozenset(outer_face))


def model_violation(g: Graph, h: Graph, m: MinorModel, rooting=NO_ROOTING) -> str | None:
    """None if the model is valid, else a human-readable failure witness."""
    if set(m.branch_sets) != set(h.vertices):
        return f"branch sets keyed by {sorted(m.branch_sets)}, pattern has {sorted(h.vertices)}"
    seen: set[int] = set()
    for x in sorted(m.branch_sets):
        b = m.branch_sets[x]
        if not b:
            return f"branch set of {x} is empty"
        if not b <= set(g.vertices):
            return f"branch set of {x} leaves the host"
        if b & seen:
            return f"branch set of {x} overlaps another"
        seen |= b
        if not g.subgraph(b).is_connected():
            return f"branch set of {x} is disconnected"
    for x, y in h.edges:
        bx, by = m.branch_sets[x], m.branch_sets[y]
        if not any(g.has_edge(u, v) for u in bx for v in by):
            return f"no host edge realizes pattern edge ({x},{y})"
    if rooting[0] == "rooted":
        s = rooting[1]
        for x in sorted(m.branch_sets):
            if not m.branch_sets[x] & s:
                return f"branch set of {x} misses S"
    elif rooting[0] == "outer":
        s, outer = rooting[1], rooting[2]
        for x in sorted(outer):
            if not m.branch_sets[x] & s:
                return f"branch set of outer vertex {x} misses S"
    return None


def verify_model(g: Graph, h: Graph, m: MinorModel, rooting=NO_ROOTING) -> bool:
    return model_violation(g, h, m, rooting) is None


def _mask_neighbors_raw(adj: list[int], mask: int) -> int:
    out = 0
    rest = mask
    while rest:
        b = rest & -rest
        out |= adj[b.bit_length() - 1]
        rest ^= b
    return out


def _mask_neighbors(adj: list[int], mask: int) -> int:
    return _mask_neighbors_raw(adj, mask) & ~mask


def _mask_component(adj: list[int], mask: int, seed: int) -> int:
    """Component of the induced submask containing the seed bit."""
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            b = rest & -rest
            nxt |= adj[b.bit_length() - 1] & mask & ~comp
            rest ^= b
        comp |= nxt
        frontier = nxt
    return comp


def _mask_connected(adj: list[int], mask: int) -> bool:
    if mask == 0:
        return False
    return _mask_component(adj, mask, mask & -mask) == mask


def _search_masks(
    adj: list[int],
    smask: int,
    pat_edges: list[tuple[int, int]],
    p: int,
    need_s: list[bool],
) -> list[int] | None:
    """Branch-and-bound over assignments host vertex -> branch set or unused.

    Deterministic: host vertices in ascending index order; for each, 'unused'
    first, then pattern vertices ascending.  Returns branch-set masks or None.
    """
    n = len(adj)
    full = (1 << n) - 1
    sets = [0] * p

    def complete() -> bool:
        for x in range(p):
            bx = sets[x]
            if bx == 0 or (need_s[x] and not bx & smask):
                return False
            if not _mask_connected(adj, bx):
                return False
        for x, y in pat_edges:
            if not _mask_neighbors(adj, sets[x]) & sets[y]:
                return False
        return True

    def consistent(future: int) -> bool:
        empties = 0
        rootless = 0
        for x in range(p):
            bx = sets[x]
            if bx == 0:
                empties += 1
                if need_s[x]:
                    rootless += 1
                continue
            if need_s[x] and not bx & smask:
                rootless += 1
            # every component of a split branch set must reach future vertices
            rest = bx
            comps = []
            while rest:
                comp = _mask_component(adj, bx, rest & -rest)
                comps.append(comp)
                rest &= ~comp
            if len(comps) > 1:
                for comp in comps:
                    if not _mask_neighbors(adj, comp) & future:
                        return False
        if bin(future).count("1") < empties:
            return False
        if bin(future & smask).count("1") < rootless:
            return False
        for x, y in pat_edges:
            bx, by = sets[x], sets[y]
            if bx and by:
                # an eventual B_x-B_y edge needs an edge between the closures
                if not _mask_neighbors_raw(adj, bx | future) & (by | future):
                    return False
        return True

    def rec(i: int) -> bool:
        if complete():
            return True
        if i == n:
            return False
        future = (full >> (i + 1)) << (i + 1)
        bit = 1 << i
        # leaving the vertex unused first keeps found models search-minimal
        if consistent(future) and rec(i + 1):
            return True
        for x in range(p):
            sets[x] |= bit
            if consistent(future) and rec(i + 1):
                return True
            sets[x] &= ~bit
        return False

    if rec(0):
        return list(sets)
    return None


def find_rooted_minor(
    g: Graph,
    s: Iterable[int],
    h: Graph,
    rooting_kind: str = "rooted",
    outer_face: Iterable[int] = (),
    max_host: int = MAX_HOST,
    max_pattern: int = MAX_PATTERN,
) -> MinorModel | None:
    """Exhaustive rooted/outer-rooted/plain minor search (no false negatives).

    rooting_kind: "rooted" (every branch set meets s), "outer" (outer-face
    pattern vertices meet s), or "none".  Refuses hosts/patterns beyond the
    budget rather than risking a silent wrong answer.
    """
    sset = frozenset(s)
    if h.n > max_pattern:
        raise BudgetExceeded(f"pattern has {h.n} > {max_pattern} vertices")
    if h.n == 0:
        return MinorModel({})
    if rooting_kind == "rooted" and sset >= set(g.vertices):
        rooting_kind_eff = "none"  # every non-empty branch set meets V(G) anyway
    else:
        rooting_kind_eff = rooting_kind
    if rooting_kind_eff == "rooted" and len(sset) < h.n:
        return None  # |S| < |V(H)| cannot root disjoint branch sets
    if h.n > g.n:
        return None
    if h.has_cycle() and g.is_forest():
        return None  # minors of forests are forests
    # 2-connected patterns live inside a single block; recursing into blocks
    # keeps the big sparse instances (lower-bound graphs) within budget.
    if rooting_kind_eff == "none" and h.n >= 3 and h.is_biconnected() and not g.is_biconnected():
        for block in g.blocks():
            if len(block) < h.n:
                continue
            m = find_rooted_minor(g.subgraph(block), (), h, "none", (), max_host, max_pattern)
            if m is not None:
                return m
        return None
    if g.n > max_host:
        raise BudgetExceeded(f"host has {g.n} > {max_host} vertices")

    hostverts, adj, idx = g.to_masks()
    smask = 0
    for v in sset:
        if v in idx:
            smask |= 1 << idx[v]
    patverts = list(h.vertices)
    pidx = {x: i for i, x in enumerate(patverts)}
    pat_edges = [(pidx[a], pidx[b]) for a, b in h.edges]
    if rooting_kind_eff == "rooted":
        need_s = [True] * h.n
    elif rooting_kind_eff == "outer":
        outer = frozenset(outer_face)
        need_s = [x in outer for x in patverts]
    else:
        need_s = [False] * h.n
    res = _search_masks(adj, smask, pat_edges, h.n, need_s)
    if res is None:
        return None
    bs = {}
    for x, mask in zip(patverts, res):
        vs = set()
        while mask:
            b = mask & -mask
            vs.add(hostverts[b.bit_length() - 1])
            mask ^= b
        bs[x] = frozenset(vs)
    model = MinorModel(bs)
    if rooting_kind == "rooted":
        rt = rooted(sset)
    elif rooting_kind == "outer":
        rt = outer_rooted(sset, outer_face)
    else:
        rt = NO_ROOTING
    why = model_violation(g, h, model, rt)
    assert why is None, f"search produced an invalid model: {why}"
    return model


def minimal_support(g: Graph, s: frozenset[int], h: Graph, model: MinorModel) -> frozenset[int]:
    """Shrink a model's support to an inclusion-minimal vertex set (greedy)."""
    support = set(model.support())
    for v in sorted(support, reverse=True):
        trial = support - {v}
        if find_rooted_minor(g.subgraph(trial), s & trial, h, "rooted") is not None:
            support = trial
    return frozenset(support)


def enumerate_minimal_supports(
    g: Graph, s: Iterable[int], h: Graph, cap: int = 2000
) -> list[frozenset[int]]:
    """All inclusion-minimal supports of S-rooted models of h in g.

    Restart search with forbidden-vertex masks (Lawler-style branching);
    refuses via BudgetExceeded when the family would exceed ``cap``.
    """
    sset = frozenset(s)
    found: set[frozenset[int]] = set()
    seen_forbidden: set[frozenset[int]] = set()
    stack: list[frozenset[int]] = [frozenset()]
    while stack:
        forbidden = stack.pop()
        if forbidden in seen_forbidden:
            continue
        seen_forbidden.add(forbidden)
        sub = g.remove_vertices(forbidden)
        m = find_rooted_minor(sub, sset - forbidden, h, "rooted")
        if m is None:
            continue
        supp = minimal_support(sub, sset - forbidden, h, m)
        found.add(supp)
        if len(found) > cap:
            raise BudgetExceeded(f"more than {cap} minimal supports")
        for v in sorted(supp):
            stack.append(forbidden | {v})
    return sorted(found, key=lambda f: (len(f), sorted(f)))
