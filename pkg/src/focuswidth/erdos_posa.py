"""Erdős–Pósa packing/covering over focused tree decompositions.

pack_or_cover maps each family member to the subtree of decomposition
nodes whose bags it meets (components attached outside the host transfer
through their anchoring bag), then runs the classic deepest-first greedy on
subtrees of a tree: either k disjoint members or ≤ k−1 piercing bags.

rooted_tree_ep combines this with the pathwidth win/win engine on k
disjoint copies of the target tree: the model branch splits into k disjoint
S-rooted models; the decomposition branch covers all models using the
family of inclusion-minimal model supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .decompositions import (
    FocusedCertificate,
    TreeDecomposition,
    compute_attachment,
    verify_focused,
)
from .focused_pathwidth import decide_spw
from .graph import BudgetExceeded, Graph, GraphError, RootedForest
from .minors import MinorModel, enumerate_minimal_supports, find_rooted_minor, model_violation, rooted


@dataclass(frozen=True)
class SubgraphFamily:
    """Connected subgraphs of G (as vertex sets), each meeting S."""

    members: tuple[frozenset[int], ...]

    @staticmethod
    def of(members: Iterable[Iterable[int]]) -> "SubgraphFamily":
        return SubgraphFamily(tuple(frozenset(m) for m in members))

    def validate(self, g: Graph, s: frozenset[int]) -> None:
        for m in self.members:
            if not m:
                raise GraphError("family members must be non-empty")
            if not m <= set(g.vertices):
                raise GraphError("family member leaves the graph")
            if not g.subgraph(m).is_connected():
                raise GraphError(f"family member {sorted(m)} is not connected")
            if not m & s:
                raise GraphError(f"family member {sorted(m)} misses S")


@dataclass(frozen=True)
class PackOrCover:
    """Either k pairwise disjoint member indices, or a cover vertex set that
    is the union of ≤ k−1 bags and hits every member."""

    packing: tuple[int, ...] | None = None
    cover: frozenset[int] | None = None
    cover_bags: tuple[int, ...] = ()

    @property
    def kind(self) -> str:
        return "packing" if self.packing is not None else "cover"


def _member_subtree(g: Graph, cert: FocusedCertificate, member: frozenset[int]) -> frozenset[int]:
    """Decomposition-tree nodes whose bags meet the member.

    A member confined to an attached component would have empty node set,
    but every member meets S ⊆ host, so it exits each component through the
    component's neighborhood, which lies inside the anchoring bag; the node
    set is automatically non-empty and subtree-shaped.
    """
    return frozenset(x for x, bag in cert.tree.bags.items() if bag & member)


def pack_or_cover(
    g: Graph, s, cert: FocusedCertificate, fam: SubgraphFamily, k: int
) -> PackOrCover:
    """Helly dichotomy over a verified tree-style focused certificate."""
    sset = frozenset(s)
    if k < 1:
        raise GraphError("k must be positive")
    if cert.kind != "tree":
        raise GraphError("pack_or_cover needs a tree-style certificate")
    verify_focused(g, sset, cert)
    fam.validate(g, sset)

    tree = cert.tree.tree
    subtrees = []
    for idx, member in enumerate(fam.members):
        nodes = _member_subtree(g, cert, member)
        assert nodes, "a member meeting S must meet the host"
        top = min(nodes, key=lambda x: (tree.depth(x), x))
        # the nodes must induce a subtree hanging below top
        reached = {top}
        stack = [top]
        while stack:
            a = stack.pop()
            for c in tree.children(a):
                if c in nodes and c not in reached:
                    reached.add(c)
                    stack.append(c)
        assert reached == set(nodes), "member nodes must form a subtree"
        subtrees.append((idx, nodes, top))

    chosen: list[int] = []
    pierce: list[int] = []
    alive = list(subtrees)
    while alive:
        idx, nodes, top = max(alive, key=lambda t: (tree.depth(t[2]), -t[0]))
        chosen.append(idx)
        if len(chosen) >= k:
            _check_disjoint(fam, chosen)
            return PackOrCover(packing=tuple(sorted(chosen)))
        pierce.append(top)
        alive = [t for t in alive if top not in t[1]]
    cover = frozenset().union(*(cert.tree.bags[x] for x in pierce)) if pierce else frozenset()
    assert len(pierce) <= k - 1
    for member in fam.members:
        assert member & cover, "cover must hit every member"
    return PackOrCover(cover=cover, cover_bags=tuple(pierce))


def _check_disjoint(fam: SubgraphFamily, chosen: Sequence[int]) -> None:
    seen: set[int] = set()
    for idx in chosen:
        m = fam.members[idx]
        assert not (m & seen), "packing members must be vertex-disjoint"
        seen |= m


def _disjoint_tree_copies(t: Graph, k: int) -> tuple[Graph, list[dict[int, int]]]:
    offset = (max(t.vertices) + 1) if t.n else 1
    verts: list[int] = []
    edges: list[tuple[int, int]] = []
    mappings: list[dict[int, int]] = []
    for i in range(k):
        mp = {v: v + i * offset for v in t.vertices}
        mappings.append(mp)
        verts.extend(mp.values())
        edges.extend((mp[a], mp[b]) for a, b in t.edges)
    return Graph(verts, edges), mappings


def _path_cert_to_tree(cert: FocusedCertificate) -> FocusedCertificate:
    """A path decomposition is a tree decomposition: chain the bags."""
    bags = {i: b for i, b in enumerate(cert.pd.bags)}
    parent = {i: i - 1 for i in range(1, len(bags))}
    tree = RootedForest(parent, [0] if bags else [])
    td = TreeDecomposition(tree, bags)
    return FocusedCertificate("tree", cert.host, tree=td, attachment=dict(cert.attachment))


@dataclass(frozen=True)
class RootedTreeEP:
    """Outcome of the rooted-tree Erdős–Pósa dichotomy."""

    models: tuple[MinorModel, ...] | None = None
    cover: frozenset[int] | None = None

    @property
    def kind(self) -> str:
        return "packing" if self.models is not None else "cover"


def rooted_tree_ep(g: Graph, s, t: Graph, k: int, support_cap: int = 2000) -> RootedTreeEP:
    """Either k vertex-disjoint S-rooted models of the tree t, or a vertex set
    Z with |Z| ≤ (2k|V(t)|−1)(k−1) meeting every S-rooted model of t."""
    sset = frozenset(s)
    if k < 1:
        raise GraphError("k must be positive")
    if t.n < 1 or not t.is_forest() or len(t.components()) != 1:
        raise GraphError("pattern must be a tree with at least one vertex")
    kt, mappings = _disjoint_tree_copies(t, k)
    outcome = decide_spw(g, sset, kt)
    if outcome.kind == "model":
        models = []
        for mp in mappings:
            bs = {x: outcome.model.branch_sets[mp[x]] for x in t.vertices}
            m = MinorModel(bs)
            why = model_violation(g, t, m, rooted(sset))
            assert why is None, why
            models.append(m)
        return RootedTreeEP(models=tuple(models))

    cert = _path_cert_to_tree(outcome.decomposition)
    supports = enumerate_minimal_supports(g, sset, t, cap=support_cap)
    if not supports:
        return RootedTreeEP(cover=frozenset())
    fam = SubgraphFamily.of(supports)
    res = pack_or_cover(g, sset, cert, fam, k)
    if res.kind == "packing":
        models = []
        for idx in res.packing:
            supp = fam.members[idx]
            m = find_rooted_minor(g.subgraph(supp), sset & supp, t, "rooted")
            assert m is not None, "minimal support must carry a model"
            models.append(m)
        return RootedTreeEP(models=tuple(models))
    bound = (2 * k * t.n - 1) * (k - 1)
    assert len(res.cover) <= bound, f"cover size {len(res.cover)} exceeds {bound}"
    return RootedTreeEP(cover=res.cover)


def max_disjoint_rooted_models(g: Graph, s, t: Graph, cap: int = 2000) -> int:
    """Brute-force packing number over inclusion-minimal supports (test oracle)."""
    sset = frozenset(s)
    supports = enumerate_minimal_supports(g, sset, t, cap=cap)

    best = 0

    def rec(idx: int, used: frozenset[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        if idx >= len(supports):
            return
        if count + (len(supports) - idx) <= best:
            return
        for i in range(idx, len(supports)):
            supp = supports[i]
            if not supp & used:
                rec(i + 1, used | supp, count + 1)
        return

    rec(0, frozenset(), 0)
    return best
