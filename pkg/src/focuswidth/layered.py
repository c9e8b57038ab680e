"""Layered pathwidth / layered treedepth constructions.

For an apex-forest X (resp. fan X), an X-minor-free graph gets a layering
plus a path decomposition (resp. elimination forest) of layered width at
most 2|V(X)|−3 (resp. binom(|V(X)|−1, 2)).  The recursion peels a root
vertex u, runs the focused win/win engine on (G−u, N(u)) against X−apex,
minimizes the returned host, lays it out as layer 1, and recurses into the
contractions of the remaining components.  If the engine ever produces a
rooted model, the apex branch set {u} completes it to an X-model: the
precondition was violated and the verified model is raised as a structured
error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decompositions import (
    FocusedCertificate,
    LayeredCertificate,
    Layering,
    PathDecomposition,
    compute_attachment,
    verify_focused,
    verify_layered,
)
from .graph import Graph, GraphError, RootedForest
from .focused_pathwidth import decide_spw
from .focused_treedepth import decide_std
from .minors import MinorModel, model_violation
from .oracles import DEFAULT_BUDGET, exact_width


@dataclass(frozen=True)
class ApexPattern:
    """An apex-forest (lpw) or fan (ltd): graph minus apex is a forest/path."""

    graph: Graph
    apex: int

    def __post_init__(self):
        if self.apex not in self.graph:
            raise GraphError("apex must be a pattern vertex")

    def residue(self) -> Graph:
        return self.graph.remove_vertices([self.apex])

    def require_apex_forest(self) -> None:
        if self.graph.n < 2:
            raise GraphError("apex-forest pattern needs at least 2 vertices")
        if not self.residue().is_forest():
            raise GraphError("pattern minus apex must be a forest")

    def require_fan(self) -> None:
        if self.graph.n < 3:
            raise GraphError("fan pattern needs at least 3 vertices")
        res = self.residue()
        if not res.is_forest() or any(res.degree(v) > 2 for v in res.vertices):
            raise GraphError("pattern minus apex must be a path")
        if res.n > 1 and (len(res.components()) != 1):
            raise GraphError("pattern minus apex must be a path")


class ModelFound(Exception):
    """The input was not X-minor-free: carries the verified X-model."""

    def __init__(self, model: MinorModel):
        self.model = model
        super().__init__("input graph contains the excluded pattern as a minor")


def _lift_model(g: Graph, comp: frozenset[int], uc: int, model: MinorModel) -> MinorModel:
    """Lift a model from the contraction G/(V∖C → uc) back to G."""
    blob = frozenset(set(g.vertices) - comp)
    out = {}
    for x, b in model.branch_sets.items():
        out[x] = frozenset((b - {uc}) | blob) if uc in b else b
    return MinorModel(out)


def _raise_model(g: Graph, x: ApexPattern, model: MinorModel) -> None:
    why = model_violation(g, x.graph, model)
    assert why is None, f"lifted model must verify: {why}"
    raise ModelFound(model)


def _apex_completion(u: int, spw_model: MinorModel, x: ApexPattern) -> MinorModel:
    bs = dict(spw_model.branch_sets)
    bs[x.apex] = frozenset([u])
    return MinorModel(bs)


# -- layered pathwidth ---------------------------------------------------------


def _minimize_host_pd(g: Graph, g1: Graph, s: frozenset[int], bags: list[frozenset[int]], u: int):
    """Iterate the exchange step: drop a u-free component of G−V(C) from the
    host, until no component of G'−U permits the move."""
    while True:
        host = frozenset().union(*bags) if bags else frozenset()
        moved = False
        for comp in g1.remove_vertices(host).components():
            rest = g.remove_vertices(comp)
            for cprime in rest.components():
                if u not in cprime:
                    bags = [b - cprime for b in bags]
                    moved = True
                    break
            if moved:
                break
        if not moved:
            return bags


def _lpw_technical(g: Graph, u: int, x: ApexPattern) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    """Connected case: a layering with L_0 = {u} and a path decomposition of
    G−u with |W ∩ L_j| ≤ 2|V(X)|−3 for j ≥ 1."""
    if g.n == 1:
        return [frozenset([u])], []
    s = frozenset(g.neighbors(u))
    g1 = g.remove_vertices([u])
    f = x.residue()
    out = decide_spw(g1, s, f)
    if out.kind == "model":
        _raise_model(g, x, _apex_completion(u, out.model, x))
    bags = list(out.decomposition.pd.bags)
    bags = _minimize_host_pd(g, g1, s, bags, u)
    host = frozenset().union(*bags) if bags else frozenset()
    _assert_pd_cert(g1, s, bags)

    layers: list[set[int]] = [set([u]), set(host)]
    comps = g1.remove_vertices(host).components()
    blocks: dict[int, list[list[frozenset[int]]]] = {k: [] for k in range(len(bags))}
    for comp in comps:
        nbrs = g.neighborhood_of_set(comp)
        alpha = next(k for k, b in enumerate(bags) if nbrs <= b)
        gc, uc = g.contract_set(set(g.vertices) - comp)
        assert gc.n <= g.n - 1, "contraction must strictly shrink the graph"
        try:
            sub_layers, sub_bags = _lpw_technical(gc, uc, x)
        except ModelFound as mf:
            _raise_model(g, x, _lift_model(g, comp, uc, mf.model))
        assert sub_layers[0] == frozenset([uc])
        for j, layer in enumerate(sub_layers[1:], start=2):
            while len(layers) <= j:
                layers.append(set())
            layers[j] |= layer
        blocks[alpha].append(sub_bags)
    out_bags: list[frozenset[int]] = []
    for k, vk in enumerate(bags):
        out_bags.append(vk)
        for sub_bags in blocks[k]:
            out_bags.extend(frozenset(b | vk) for b in sub_bags)
    flayers = [frozenset(layer) for layer in layers if True]
    while flayers and not flayers[-1]:
        flayers.pop()
    bound = 2 * x.graph.n - 3
    for w_bag in out_bags:
        for layer in flayers[1:]:
            assert len(w_bag & layer) <= bound
    return flayers, out_bags


def layered_pw(g: Graph, x: ApexPattern) -> LayeredCertificate:
    """Layering + path decomposition of G of layered width ≤ 2|V(X)|−3,
    assuming G is X-minor-free; raises ModelFound with a verified model
    otherwise."""
    x.require_apex_forest()
    all_layers: list[frozenset[int]] = []
    all_bags: list[frozenset[int]] = []
    for comp in g.components():
        u = min(comp)
        sub = g.subgraph(comp)
        layers, bags = _lpw_technical(sub, u, x)
        final_bags = [frozenset(b | {u}) for b in bags] if bags else [frozenset([u])]
        all_layers.extend(layers)
        all_bags.extend(final_bags)
    cert = LayeredCertificate(Layering(tuple(all_layers)), pd=PathDecomposition(tuple(all_bags)))
    if g.n:
        width = verify_layered(g, cert)
        assert width <= 2 * x.graph.n - 3
    return cert


def _assert_pd_cert(g1: Graph, s: frozenset[int], bags: list[frozenset[int]]) -> None:
    host = frozenset().union(*bags) if bags else frozenset()
    pd = PathDecomposition(tuple(bags))
    att = compute_attachment(g1, host, "path", pd)
    verify_focused(g1, s, FocusedCertificate("path", host, pd=pd, attachment=att))


# -- layered treedepth ----------------------------------------------------------


def _minimize_host_elim(g: Graph, g1: Graph, s: frozenset[int], forest: RootedForest, u: int) -> RootedForest:
    while True:
        host = frozenset(forest.vertices)
        moved = False
        for comp in g1.remove_vertices(host).components():
            rest = g.remove_vertices(comp)
            for cprime in rest.components():
                if u not in cprime:
                    forest = forest.restrict(set(forest.vertices) - cprime)
                    moved = True
                    break
            if moved:
                break
        if not moved:
            return forest


def _ltd_technical(g: Graph, u: int, x: ApexPattern) -> tuple[list[frozenset[int]], RootedForest]:
    """Connected case: a layering with L_0 = {u} and an elimination forest of
    G−u whose root-to-leaf paths meet each layer in ≤ C(|V(X)|−1, 2) vertices."""
    if g.n == 1:
        return [frozenset([u])], RootedForest({}, [])
    ell = x.graph.n - 1
    s = frozenset(g.neighbors(u))
    g1 = g.remove_vertices([u])
    out = decide_std(g1, s, ell)
    if out.kind == "model":
        _raise_model(g, x, _apex_completion(u, out.model, x))
    forest = out.forest_cert.forest
    forest = _minimize_host_elim(g, g1, s, forest, u)
    host = frozenset(forest.vertices)
    _assert_elim_cert(g1, s, forest)

    layers: list[set[int]] = [set([u]), set(host)]
    parent = dict(forest.parent)
    roots = list(forest.roots)
    leaves = forest.leaves()
    for comp in g1.remove_vertices(host).components():
        nbrs = g.neighborhood_of_set(comp)
        alpha = None
        for leaf in leaves:
            if nbrs <= set(forest.path_to_root(leaf)):
                alpha = leaf
                break
        assert alpha is not None, "certificate guarantees an anchoring leaf"
        gc, uc = g.contract_set(set(g.vertices) - comp)
        assert gc.n <= g.n - 1
        try:
            sub_layers, sub_forest = _ltd_technical(gc, uc, x)
        except ModelFound as mf:
            _raise_model(g, x, _lift_model(g, comp, uc, mf.model))
        assert sub_layers[0] == frozenset([uc])
        for j, layer in enumerate(sub_layers[1:], start=2):
            while len(layers) <= j:
                layers.append(set())
            layers[j] |= layer
        parent.update(sub_forest.parent)
        for r in sub_forest.roots:
            parent[r] = alpha
    full = RootedForest(parent, roots)
    flayers = [frozenset(layer) for layer in layers]
    while flayers and not flayers[-1]:
        flayers.pop()
    bound = ell * (ell - 1) // 2
    for path in full.root_to_leaf_paths():
        pv = frozenset(path)
        for layer in flayers[1:]:
            assert len(pv & layer) <= bound
    return flayers, full


def layered_td(g: Graph, x: ApexPattern) -> LayeredCertificate:
    """Layering + elimination forest of G of layered width ≤ C(|V(X)|−1, 2),
    assuming G is fan-X-minor-free; raises ModelFound otherwise."""
    x.require_fan()
    all_layers: list[frozenset[int]] = []
    parent: dict[int, int] = {}
    roots: list[int] = []
    for comp in g.components():
        u = min(comp)
        sub = g.subgraph(comp)
        layers, forest = _ltd_technical(sub, u, x)
        parent.update(forest.parent)
        for r in forest.roots:
            parent[r] = u
        roots.append(u)
        all_layers.extend(layers)
    cert = LayeredCertificate(Layering(tuple(all_layers)), forest=RootedForest(parent, roots))
    if g.n:
        width = verify_layered(g, cert)
        assert width <= (x.graph.n - 1) * (x.graph.n - 2) // 2
    return cert


def _assert_elim_cert(g1: Graph, s: frozenset[int], forest: RootedForest) -> None:
    host = frozenset(forest.vertices)
    att = compute_attachment(g1, host, "elim", forest)
    verify_focused(g1, s, FocusedCertificate("elim", host, forest=forest, attachment=att))


# -- diameter corollaries ----------------------------------------------------------


def diameter_corollaries(cert: LayeredCertificate, g: Graph, budget=DEFAULT_BUDGET) -> int:
    """Evaluate the diameter-style bound carried by a layered certificate.

    In a connected graph the nonempty layers form a contiguous range of at
    most diam(G)+1 entries, so an elimination certificate of layered width w
    gives td(G) ≤ w·(diam+1) and a path certificate gives
    pw(G) ≤ w·(diam+1) − 1.  When the graph is small enough the exact value
    is checked against the bound.
    """
    if not g.is_connected():
        raise GraphError("diameter corollaries need a connected graph")
    w = verify_layered(g, cert)
    d = g.diameter()
    if cert.kind == "path":
        bound = w * (d + 1) - 1
        if g.n <= budget.max_vertices:
            assert exact_width(g, "pw", budget) <= bound
    else:
        bound = w * (d + 1)
        if g.n <= budget.max_vertices:
            assert exact_width(g, "td", budget) <= bound
    return bound
