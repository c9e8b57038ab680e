"""Tangles focused on a vertex set: enumeration, axioms, tangle number,
and the constructive tangle-or-tree-decomposition builder.

Separations are canonicalized by their vertex-set pair: all edges inside
V(A) go to A.  Membership of a tangle depends only on the vertex sets
(consistent orientation across vertex-equal separations is forced by the
axioms), so tangles are stored as sets of vertex-set pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .decompositions import (
    FocusedCertificate,
    TreeDecomposition,
    compute_attachment,
    verify_focused,
)
from .graph import BudgetExceeded, Graph, GraphError, RootedForest, Separation, make_separation
from .oracles import DEFAULT_BUDGET, OracleBudget, exact_width_pair

MAX_TANGLE_VERTICES = 10
MAX_SEPARATIONS = 200_000


@dataclass(frozen=True)
class Tangle:
    """Order k plus an orientation: one vertex-set pair per separation of
    order < k."""

    order: int
    oriented: frozenset[tuple[frozenset[int], frozenset[int]]]

    def to_json(self) -> dict:
        items = sorted((sorted(a), sorted(b)) for a, b in self.oriented)
        return {"order": self.order, "oriented": [{"a": a, "b": b} for a, b in items]}

    @staticmethod
    def from_json(obj: dict) -> "Tangle":
        return Tangle(
            int(obj["order"]),
            frozenset((frozenset(e["a"]), frozenset(e["b"])) for e in obj["oriented"]),
        )


def enumerate_separations(
    g: Graph, max_order: int, max_vertices: int = MAX_TANGLE_VERTICES
) -> list[Separation]:
    """All canonical separations of order ≤ max_order, deterministic order.

    Iterates boundary sets X ascending, then component-to-side assignments;
    each vertex-set pair is realized exactly once (boundary-internal edges
    always go to A).
    """
    if g.n > max_vertices:
        raise BudgetExceeded(f"separation enumeration refuses {g.n} > {max_vertices} vertices")
    verts = list(g.vertices)
    out = []
    for size in range(min(max_order, g.n) + 1):
        for x in combinations(verts, size):
            xs = set(x)
            comps = g.remove_vertices(xs).components()
            if (1 << len(comps)) * (len(out) + 1) > MAX_SEPARATIONS:
                raise BudgetExceeded("too many separations to enumerate")
            for assign in range(1 << len(comps)):
                va = set(xs)
                vb = set(xs)
                for i, comp in enumerate(comps):
                    if (assign >> i) & 1:
                        va |= comp
                    else:
                        vb |= comp
                out.append(make_separation(g, va, vb))
    return out


def enumerate_separations_naive(g: Graph, max_order: int) -> set[tuple[frozenset[int], frozenset[int]]]:
    """Independent double-loop oracle: all vertex-set pairs (V(A), V(B)) with
    union V, no crossing edge, order ≤ max_order.  Tiny graphs only."""
    if g.n > 7:
        raise BudgetExceeded("naive separation enumeration beyond 7 vertices")
    verts = list(g.vertices)
    n = g.n
    found = set()
    for amask in range(1 << n):
        va = {verts[i] for i in range(n) if (amask >> i) & 1}
        for bsub in range(1 << n):
            vb = {verts[i] for i in range(n) if (bsub >> i) & 1}
            if va | vb != set(verts):
                continue
            if len(va & vb) > max_order:
                continue
            if any((u in va - vb and v in vb - va) or (v in va - vb and u in vb - va) for u, v in g.edges):
                continue
            found.add((frozenset(va), frozenset(vb)))
    return found


class _AxiomData:
    """Bitmask view of candidate orientations for the axiom checks."""

    def __init__(self, g: Graph):
        self.g = g
        self.vidx = {v: i for i, v in enumerate(g.vertices)}
        self.eidx = {e: i for i, e in enumerate(g.edges)}
        self.fullv = (1 << g.n) - 1
        self.fulle = (1 << g.m) - 1

    def masks(self, va: frozenset[int]) -> tuple[int, int]:
        vm = 0
        for v in va:
            vm |= 1 << self.vidx[v]
        em = 0
        for e, i in self.eidx.items():
            if e[0] in va and e[1] in va:
                em |= 1 << i
        return vm, em


def tangle_violation(g: Graph, s, t: Tangle, budget_vertices: int = MAX_TANGLE_VERTICES) -> str | None:
    """First violated axiom as a witness string, or None for a valid tangle."""
    sset = frozenset(s)
    k = t.order
    if k < 1:
        return "order must be positive"
    for va, vb in t.oriented:
        if len(va & vb) > k - 1:
            return f"oriented separation of order {len(va & vb)} ≥ k"
        if va | vb != set(g.vertices):
            return "oriented pair does not cover V(G)"
    for u, v in g.edges:
        for va, vb in t.oriented:
            if (u in va - vb and v in vb - va) or (v in va - vb and u in vb - va):
                return f"crossing edge ({u},{v}) in an oriented pair"
    for sep in enumerate_separations(g, k - 1, budget_vertices):
        va, vb = frozenset(sep.side_a.vertices), frozenset(sep.side_b.vertices)
        if (va, vb) not in t.oriented and (vb, va) not in t.oriented:
            return f"(T1) unoriented separation {sorted(va)}|{sorted(vb)}"
    ax = _AxiomData(g)
    sides = sorted(t.oriented, key=lambda p: (sorted(p[0]), sorted(p[1])))
    masked = [ax.masks(va) for va, _ in sides]
    for i in range(len(sides)):
        vi, ei = masked[i]
        if vi == ax.fullv and sides[i][0] == set(g.vertices):
            return f"(T3) member with V(A) = V(G): {sorted(sides[i][0])}"
        if sset <= sides[i][0]:
            return f"(T4) member with S ⊆ V(A): {sorted(sides[i][0])}"
    for i in range(len(sides)):
        vi, ei = masked[i]
        for j in range(i, len(sides)):
            vj, ej = masked[j]
            for l in range(j, len(sides)):
                vl, el = masked[l]
                if vi | vj | vl == ax.fullv and ei | ej | el == ax.fulle:
                    return f"(T2) covering triple {i},{j},{l}"
    return None


def is_tangle(g: Graph, s, t: Tangle) -> bool:
    return tangle_violation(g, s, t) is None


def _tangle_search(g: Graph, s: frozenset[int], k: int, max_vertices: int) -> Tangle | None:
    """Exhaustive orientation search with (T1)-(T4) pruning; deterministic."""
    seps = enumerate_separations(g, k - 1, max_vertices)
    ax = _AxiomData(g)
    pairs: dict[frozenset, tuple] = {}
    for sep in seps:
        va = frozenset(sep.side_a.vertices)
        vb = frozenset(sep.side_b.vertices)
        key = frozenset((va, vb))
        if key not in pairs:
            pairs[key] = (va, vb)
    vall = set(g.vertices)
    choices: list[list[tuple]] = []
    for key in sorted(pairs, key=lambda fs: sorted(sorted(x) for x in fs)):
        va, vb = pairs[key]
        opts = []
        for a, b in ((va, vb), (vb, va)) if va != vb else ((va, vb),):
            if set(a) == vall:
                continue  # (T3)
            if s <= a:
                continue  # (T4)
            vm, em = ax.masks(a)
            opts.append((a, b, vm, em))
        if not opts:
            return None
        choices.append(opts)
    choices.sort(key=lambda opts: (len(opts), -len(opts[0][0])))
    chosen: list[tuple] = []

    def t2_clear(vm: int, em: int) -> bool:
        pool = chosen + [(None, None, vm, em)]
        for _, _, v1, e1 in pool:
            for _, _, v2, e2 in pool:
                if vm | v1 | v2 == ax.fullv and em | e1 | e2 == ax.fulle:
                    return False
        return True

    out: list[tuple] = []

    def rec(i: int) -> bool:
        if i == len(choices):
            return True
        for a, b, vm, em in choices[i]:
            if t2_clear(vm, em):
                chosen.append((a, b, vm, em))
                out.append((a, b))
                if rec(i + 1):
                    return True
                chosen.pop()
                out.pop()
        return False

    if not rec(0):
        return None
    return Tangle(k, frozenset((a, b) for a, b in out))


def tangle_number(
    g: Graph, s, max_vertices: int = 8, return_tangle: bool = False
):
    """Maximum k admitting a tangle of (G,S) of order k; 0 if none.

    Exhaustive orientation search per k (a tangle of order k restricts to one
    of every lower order, so the first failing k ends the climb).
    """
    if g.n > max_vertices:
        raise BudgetExceeded(f"tangle number refuses {g.n} > {max_vertices} vertices")
    sset = frozenset(s)
    best = None
    k = 1
    while k <= g.n + 1:
        t = _tangle_search(g, sset, k, max_vertices)
        if t is None:
            break
        best = t
        k += 1
    tn = 0 if best is None else best.order
    if return_tangle:
        return tn, best
    return tn


# -- constructive duality: no order-k tangle -> bounded tree decomposition -------


class TangleExists(Exception):
    """The candidate family satisfied all four axioms: the precondition of the
    builder fails, and the tangle itself is the counter-certificate."""

    def __init__(self, tangle: Tangle):
        self.tangle = tangle
        super().__init__(f"found a tangle of order {tangle.order}")


class _TreeBuilder:
    def __init__(self):
        self.next_id = 0
        self.bags: dict[int, frozenset[int]] = {}
        self.parent: dict[int, int] = {}

    def node(self, bag: frozenset[int]) -> int:
        nid = self.next_id
        self.next_id += 1
        self.bags[nid] = bag
        return nid

    def attach(self, child: int, parent: int) -> None:
        self.parent[child] = parent


def _cover_triple(ax: _AxiomData, sides: list[tuple[frozenset, frozenset, int, int]]):
    """A covering triple among the inclusion-maximal sides, or None."""
    maximal = []
    for cand in sides:
        if not any(
            (cand[2] | o[2] == o[2]) and (cand[3] | o[3] == o[3]) and (cand[2], cand[3]) != (o[2], o[3])
            for o in sides
        ):
            maximal.append(cand)
    for i, a in enumerate(maximal):
        for j in range(i, len(maximal)):
            b = maximal[j]
            vab = a[2] | b[2]
            eab = a[3] | b[3]
            for l in range(j, len(maximal)):
                c = maximal[l]
                if vab | c[2] == ax.fullv and eab | c[3] == ax.fulle:
                    return a, b, c
    return None


def _build_rec(g: Graph, s: frozenset[int], k: int, r: frozenset[int], tb: _TreeBuilder, max_vertices: int) -> int:
    """Recursive builder; returns the node whose bag contains r."""
    if g.n <= 10 * k - 11:
        return tb.node(frozenset(g.vertices))
    want = min(7 * k - 8, g.n)
    pad = sorted(set(g.vertices) - r)
    r = frozenset(set(r) | set(pad[: want - len(r)]))

    seps = enumerate_separations(g, k - 1, max_vertices)
    ax = _AxiomData(g)
    fam = []
    seen = set()
    for sep in seps:
        va = frozenset(sep.side_a.vertices)
        if len(va & r) > 4 * k - 5:
            continue
        if va in seen:
            continue
        seen.add(va)
        vb = frozenset(sep.side_b.vertices)
        vm, em = ax.masks(va)
        fam.append((va, vb, vm, em))
    fam.sort(key=lambda t: (sorted(t[0]), sorted(t[1])))

    # (T1) and (T3) failures are impossible by counting; assert, don't branch
    for va, vb, _, _ in fam:
        assert va != set(g.vertices), "(T3) failure contradicts |R| > 4k-5"

    # (T4) failure: some member already contains S
    for va, vb, _, _ in fam:
        if s <= va:
            boundary = va & vb
            rprime = frozenset((r & va) | boundary)
            assert len(rprime) <= 7 * k - 8
            side = g.subgraph(va)  # canonical A-side is induced
            assert side.n < g.n
            child = _build_rec(side, s, k, rprime, tb, max_vertices)
            root = tb.node(frozenset(r | boundary))
            tb.attach(child, root)
            return root

    # (T2) failure: a covering triple
    triple = _cover_triple(ax, fam)
    if triple is not None:
        z = frozenset().union(*(a[0] & a[1] for a in triple))
        root = tb.node(frozenset(z | r))
        for comp in g.remove_vertices(z).components():
            nbrs = g.neighborhood_of_set(comp)
            gc = g.subgraph(comp | nbrs)
            rc = frozenset(nbrs | (r & comp))
            assert len(rc) <= 7 * k - 8
            assert gc.n < g.n
            child = _build_rec(gc, s & set(gc.vertices), k, rc, tb, max_vertices)
            tb.attach(child, root)
        return root

    # no axiom fails: the candidate family itself is a tangle of order k
    tangle = Tangle(k, frozenset((va, vb) for va, vb, _, _ in fam))
    why = tangle_violation(g, s, tangle, max_vertices)
    assert why is None, f"axiom search missed a failure: {why}"
    raise TangleExists(tangle)


def build_tree_decomposition(
    g: Graph, s, k: int, r: Iterable[int] = (), max_vertices: int = 30
) -> FocusedCertificate:
    """Lemma-level construction: assuming no tangle of (G,S) of order k,
    return a tree-style focused certificate of width ≤ 10k−12 with some bag
    containing r.  If the candidate family turns out to be a tangle, raise
    TangleExists carrying it."""
    sset = frozenset(s)
    rset = frozenset(r)
    if k < 2:
        raise GraphError("k must be at least 2")
    if not rset <= set(g.vertices):
        raise GraphError("r must be a vertex subset")
    if len(rset) > 7 * k - 8:
        raise GraphError(f"|r| must be at most 7k-8 = {7 * k - 8}")
    if g.n == 0:
        raise GraphError("null graph has no tree decomposition")
    tb = _TreeBuilder()
    root = _build_rec(g, sset, k, rset, tb, max_vertices)
    roots = [nid for nid in tb.bags if nid not in tb.parent]
    assert roots == [root] or root in roots
    tree = RootedForest(tb.parent, [root] if len(roots) == 1 else roots)
    td = TreeDecomposition(tree, tb.bags)
    host = td.support
    att = compute_attachment(g, host, "tree", td)
    cert = FocusedCertificate("tree", host, tree=td, attachment=att)
    width = verify_focused(g, sset, cert)
    assert width <= 10 * k - 12
    assert any(rset <= bag for bag in tb.bags.values())
    return cert


def check_duality(g: Graph, s, budget: OracleBudget = DEFAULT_BUDGET) -> dict:
    """Assert tn(G,S) − 1 ≤ tw(G,S) ≤ 10·max(tn(G,S),2) − 12 and the
    orientation coherence of the stored tangle; return the numbers."""
    if g.n > 7:
        raise BudgetExceeded("duality check needs exact tw: ≤ 7 vertices")
    sset = frozenset(s)
    tn, tangle = tangle_number(g, sset, max_vertices=8, return_tangle=True)
    tw = exact_width_pair(g, sset, "tw", budget)
    assert tn - 1 <= tw, f"tn-1={tn - 1} > tw={tw}"
    assert tw <= 10 * max(tn, 2) - 12, f"tw={tw} > 10*max(tn,2)-12"
    if tangle is not None:
        for va, vb in tangle.oriented:
            assert (vb, va) not in tangle.oriented or va == vb
    return {"tn": tn, "tw": tw, "upper": 10 * max(tn, 2) - 12}
