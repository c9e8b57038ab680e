"""Win/win engine for treedepth focused on a vertex set.

decide_std returns either a focused elimination forest of vertex-height at
most ℓ(ℓ−1)/2 or an S-rooted minor model of the ℓ-vertex path.  The
recursion follows a DFS tree: locate the deepest vertex whose subtree still
contains all of S, run Menger between the root path and S, and either
harvest an ℓ-linkage (which splices into a path model) or recurse into the
subtrees below the cut with ℓ−1, stacking the cut on top of the recursive
forests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decompositions import FocusedCertificate, compute_attachment, verify_focused
from .graph import Graph, GraphError, RootedForest, dfs_tree, menger
from .minors import MinorModel, model_violation, rooted


@dataclass(frozen=True)
class StdOutcome:
    """Exactly one of forest_cert / model is populated; it verifies, and the
    forest's vertex-height is at most ℓ(ℓ−1)/2."""

    forest_cert: FocusedCertificate | None = None
    model: MinorModel | None = None

    @property
    def kind(self) -> str:
        return "decomposition" if self.forest_cert is not None else "model"


@dataclass(frozen=True)
class _PairElim:
    """Internal focused elimination forest: host vertex set + forest on it."""

    host: frozenset[int]
    forest: RootedForest


def _empty_elim() -> _PairElim:
    return _PairElim(frozenset(), RootedForest({}, []))


def _restrict_pair_elim(cert: _PairElim, g_sub: Graph) -> _PairElim:
    """Monotonicity (t4) made constructive: restrict a focused elimination
    forest of (G', S') to a subgraph of G' (here: a component of G−X)."""
    keep = set(g_sub.vertices) & set(cert.host)
    return _PairElim(frozenset(keep), cert.forest.restrict(keep))


def _stack_cut(cut: list[int], children: list[_PairElim]) -> _PairElim:
    """Chain the cut vertices and hang every child forest below the chain."""
    parent: dict[int, int] = {}
    for a, b in zip(cut, cut[1:]):
        parent[b] = a
    roots = [cut[0]] if cut else []
    host = set(cut)
    anchor = cut[-1] if cut else None
    for child in children:
        host |= child.host
        parent.update(child.forest.parent)
        for r in child.forest.roots:
            if anchor is None:
                roots.append(r)
            else:
                parent[r] = anchor
    return _PairElim(frozenset(host), RootedForest(parent, roots))


def td_pair_recursive(g: Graph, s, t: RootedForest, ell: int):
    """One connected round of the induction.

    Returns ("cert", _PairElim of height ≤ C(ℓ,2)) or ("linkage", path P
    starting at the DFS root, ℓ disjoint V(P)–S paths).  The linkage branch
    bubbles up through the recursion by splicing the subtree path onto the
    root path and adding a disjoint escape path to an S-vertex outside the
    subtree.
    """
    sset = frozenset(s)
    if not g.is_connected():
        raise GraphError("td_pair_recursive expects a connected graph")
    if len(t.roots) != 1 or set(t.vertices) != set(g.vertices):
        raise GraphError("t must be a rooted spanning tree")
    if ell < 1:
        raise GraphError("ell must be positive")
    if not sset:
        return ("cert", _empty_elim())
    root = t.roots[0]

    # deepest vertex whose subtree contains all of S
    s0 = root
    while True:
        nxt = None
        for c in t.children(s0):
            sub = _subtree_vertices(t, c)
            if sset <= sub:
                nxt = c
                break
        if nxt is None:
            break
        s0 = nxt

    r_path = list(reversed(t.path_to_root(s0)))  # root .. s0
    linkage, sep = menger(g, frozenset(r_path), sset)
    if len(linkage) >= ell:
        return ("linkage", tuple(r_path), linkage.paths[:ell])

    cut = sorted(sep.boundary)
    # components of G − X; those meeting S live inside child subtrees of s0
    children_out: list[_PairElim] = []
    handled: set[int] = set()
    residual = g.remove_vertices(cut)
    scomps = [c for c in residual.components() if c & sset]
    for comp in scomps:
        vchild = None
        for c in t.children(s0):
            if comp <= _subtree_vertices(t, c):
                vchild = c
                break
        assert vchild is not None, "an S-meeting component must sit below s0"
        if vchild in handled:
            continue
        handled.add(vchild)
        sub_vs = _subtree_vertices(t, vchild)
        g_v = g.subgraph(sub_vs)
        t_v = t.restrict(sub_vs)
        res = td_pair_recursive(g_v, sset & sub_vs, t_v, ell - 1)
        if res[0] == "linkage":
            return _lift_linkage(g, t, sset, s0, vchild, res[1], res[2])
        cert_v = res[1]
        for comp2 in scomps:
            if comp2 <= sub_vs:
                children_out.append(_restrict_pair_elim(cert_v, g.subgraph(comp2)))
    return ("cert", _stack_cut(cut, children_out))


def _subtree_vertices(t: RootedForest, v: int) -> frozenset[int]:
    out = set()
    stack = [v]
    while stack:
        u = stack.pop()
        out.add(u)
        stack.extend(t.children(u))
    return frozenset(out)


def _lift_linkage(g: Graph, t: RootedForest, sset, s0: int, vchild: int, p_sub, paths_sub):
    """Splice a subtree linkage into one for the parent call.

    P' starts at the child root; prepend the root..s0 path; the escape path
    runs from s0 through the tree to an S-vertex outside the child subtree,
    truncated at its first S-vertex.
    """
    r_path = list(reversed(t.path_to_root(s0)))
    assert p_sub[0] == vchild
    full_p = tuple(r_path) + tuple(p_sub)
    sub_vs = _subtree_vertices(t, vchild)
    outside = sorted(sset - sub_vs)
    assert outside, "maximality of s0 guarantees an S-vertex outside the child subtree"
    w = outside[0]
    if s0 in sset:
        escape = (s0,)
    else:
        # tree path s0 .. w, truncated at the first S-vertex
        up = t.path_to_root(w)  # w .. root
        i = up.index(s0)
        walk = list(reversed(up[: i + 1]))  # s0 .. w
        escape_list = []
        for x in walk:
            escape_list.append(x)
            if x in sset:
                break
        escape = tuple(escape_list)
    new_paths = tuple(paths_sub) + (escape,)
    return ("linkage", full_p, new_paths)


def _linkage_to_path_model(g: Graph, p: tuple[int, ...], paths, ell: int) -> MinorModel:
    """Split P at the ℓ attachment points; each segment plus its pendant path
    is one branch set, ordered along P."""
    pos = {v: i for i, v in enumerate(p)}
    anchored = sorted(((pos[q[0]], q) for q in paths), key=lambda t: t[0])
    assert len(anchored) == ell
    bounds = [a for a, _ in anchored]
    branch: dict[int, frozenset[int]] = {}
    for i, (a, q) in enumerate(anchored):
        lo = 0 if i == 0 else bounds[i]
        hi = len(p) if i == ell - 1 else bounds[i + 1]
        seg = set(p[lo:hi]) | set(q)
        branch[i] = frozenset(seg)
    return MinorModel(branch)


def decide_std(g: Graph, s, ell: int) -> StdOutcome:
    """Thm-level dichotomy for treedepth: an elimination-forest certificate of
    (G,S) with vertex-height ≤ ℓ(ℓ−1)/2, or an S-rooted model of P_ℓ."""
    sset = frozenset(s)
    if not sset <= set(g.vertices):
        raise GraphError("S must be a subset of V(G)")
    if ell < 1:
        raise GraphError("ell must be positive")
    if not sset:
        cert = _emit_elim(g, sset, _empty_elim())
        return StdOutcome(forest_cert=cert)

    pieces: list[_PairElim] = []
    for comp in g.components():
        s_k = sset & comp
        if not s_k:
            continue
        g_k = g.subgraph(comp)
        t_k = dfs_tree(g_k, min(comp))
        res = td_pair_recursive(g_k, s_k, t_k, ell)
        if res[0] == "linkage":
            model = _linkage_to_path_model(g_k, res[1], res[2], ell)
            from .graph import path_graph

            why = model_violation(g, path_graph(ell), model, rooted(sset))
            assert why is None, why
            return StdOutcome(model=model)
        pieces.append(res[1])

    host: set[int] = set()
    parent: dict[int, int] = {}
    roots: list[int] = []
    for pc in pieces:
        host |= pc.host
        parent.update(pc.forest.parent)
        roots.extend(pc.forest.roots)
    merged = _PairElim(frozenset(host), RootedForest(parent, roots))
    cert = _emit_elim(g, sset, merged)
    height = verify_focused(g, sset, cert)
    assert height <= ell * (ell - 1) // 2
    return StdOutcome(forest_cert=cert)


def _emit_elim(g: Graph, sset: frozenset[int], pe: _PairElim) -> FocusedCertificate:
    att = compute_attachment(g, pe.host, "elim", pe.forest)
    cert = FocusedCertificate("elim", pe.host, forest=pe.forest, attachment=att)
    verify_focused(g, sset, cert)
    return cert
