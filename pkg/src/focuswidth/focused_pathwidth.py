"""Win/win engine for pathwidth focused on a vertex set.

Given a forest F and a pair (G, S), decide_spw returns either a path-style
focused certificate of width at most 2|V(F)|−2 or an S-rooted minor model
of F.  The engine maintains a stack of "good separations" (order ≤ w, with
a witness path decomposition of the A-side whose last bag holds the
boundary), one level per forest vertex, each carrying a boundary-rooted
model of the forest prefix.  A level grows by absorbing one fresh vertex
and re-saturating; Menger pull-backs either extend the model along a full
linkage or produce a strictly better separation for some lower level, so
every run terminates in one of the two verified outcomes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decompositions import (
    FocusedCertificate,
    PathDecomposition,
    compute_attachment,
    verify_focused,
)
from .graph import Graph, GraphError, Linkage, Separation, make_separation, menger
from .minors import MinorModel, model_violation, rooted


@dataclass(frozen=True)
class GoodSeparation:
    """A (w,S)-good separation: order ≤ w plus a witness path decomposition
    of (A, S ∩ V(A)) of width ≤ 2w−2 whose last bag contains the boundary."""

    separation: Separation
    witness: PathDecomposition

    def validate(self, g: Graph, s: frozenset[int], w: int) -> None:
        self.separation.validate(g)
        if self.separation.order > w:
            raise GraphError(f"order {self.separation.order} exceeds w={w}")
        side = self.separation.side_a
        host = self.witness.support
        att = compute_attachment(side, host, "path", self.witness)
        cert = FocusedCertificate("path", host, pd=self.witness, attachment=att)
        width = verify_focused(side, s & set(side.vertices), cert)
        if width > 2 * w - 2:
            raise GraphError(f"witness width {width} exceeds 2w-2={2 * w - 2}")
        last = self.witness.bags[-1] if self.witness.bags else frozenset()
        if not self.separation.boundary <= last:
            raise GraphError("last witness bag misses the boundary")


@dataclass(frozen=True)
class SpwOutcome:
    """Exactly one of decomposition / model is populated, and it verifies."""

    decomposition: FocusedCertificate | None = None
    model: MinorModel | None = None

    @property
    def kind(self) -> str:
        return "decomposition" if self.decomposition is not None else "model"


class _Win(Exception):
    """Internal: the A-side covered V(G), so the witness certifies (G, S)."""

    def __init__(self, bags: tuple[frozenset[int], ...]):
        self.bags = bags


@dataclass
class _Level:
    sep: Separation
    bags: tuple[frozenset[int], ...]
    model: dict[int, frozenset[int]]  # forest-prefix model rooted at the boundary


def _peel_order(f: Graph) -> list[int]:
    """Vertex addition order: each added vertex has ≤ 1 neighbor added before."""
    remaining = set(f.vertices)
    removal = []
    while remaining:
        v = min(u for u in remaining if sum(1 for x in f.neighbors(u) if x in remaining) <= 1)
        removal.append(v)
        remaining.remove(v)
    return list(reversed(removal))


def _saturate(g: Graph, sep: Separation, bags: tuple[frozenset[int], ...], win: bool):
    """Absorb boundary vertices with no private B-side neighbor (Move A).

    Each absorption keeps the A-vertex set, moves the vertex's remaining
    B-edges (all inside the boundary) into A, and drops it from B; the
    witness is unchanged since those edges land inside the last bag.
    """
    while True:
        va = set(sep.side_a.vertices)
        if win and va == set(g.vertices):
            raise _Win(bags)
        bd = sep.boundary
        b_private = set(sep.side_b.vertices) - va
        dead = sorted(u for u in bd if not any(x in b_private for x in g.neighbors(u)))
        if not dead:
            return sep, bags
        u = dead[0]
        moved = [e for e in sep.side_b.edges if u in e]
        side_a = Graph(va, list(sep.side_a.edges) + moved)
        side_b = Graph(
            [x for x in sep.side_b.vertices if x != u],
            [e for e in sep.side_b.edges if u not in e],
        )
        sep = Separation(side_a, side_b)


def grow_maximal_good(g: Graph, s, w: int, start: GoodSeparation) -> GoodSeparation:
    """Saturate the constructive extension move of the proofs (absorb a
    boundary vertex whose private B-side neighborhood is empty).

    The result is good and admits no further such move; same-A-side
    extensions are exactly iterated absorptions, so none exist afterwards.
    """
    start.validate(g, frozenset(s), w)
    sep, bags = _saturate(g, start.separation, start.witness.bags, win=False)
    out = GoodSeparation(sep, PathDecomposition(bags))
    out.validate(g, frozenset(s), w)
    return out


def _lemma_menger(g: Graph, lo: Separation, hi: Separation):
    """Menger between nested separations, inside the zone B_lo ∩ A_hi.

    Returns (P,Q) with lo ≤ (P,Q) ≤ hi, the cut, full boundary-to-boundary
    paths (for model extension) and per-cut-vertex suffix paths (for witness
    pull-back).
    """
    if not lo.le(hi):
        raise GraphError("lemma_menger requires lo ≤ hi")
    zone_vs = set(lo.side_b.vertices) & set(hi.side_a.vertices)
    zone_es = hi.side_a.edge_set & lo.side_b.edge_set
    zone = Graph(zone_vs, zone_es)
    x0 = lo.boundary
    y0 = hi.boundary
    linkage, zsep = menger(zone, x0, y0)
    cut = zsep.boundary
    vp = set(lo.side_a.vertices) | set(zsep.side_a.vertices)
    ep = set(lo.side_a.edge_set) | set(zsep.side_a.edge_set)
    vq = (set(g.vertices) - vp) | cut
    eq = g.edge_set - frozenset(ep)
    pq = Separation(Graph(vp, ep), Graph(vq, eq))
    pq.validate(g)
    assert lo.le(pq) and pq.le(hi), "pull-back target must nest between lo and hi"
    assert pq.order == len(linkage)
    suffixes: dict[int, tuple[int, ...]] = {}
    for path in linkage.paths:
        hits = [i for i, v in enumerate(path) if v in cut]
        assert len(hits) == 1, "each linkage path must cross the cut once"
        x = path[hits[0]]
        suffixes[x] = tuple(path[hits[0]:])
    return pq, cut, linkage, suffixes


def pull_back_good(
    g: Graph,
    s,
    w: int,
    good: GoodSeparation,
    target: Separation,
    linkage: Linkage,
) -> GoodSeparation:
    """Transfer a witness from (A′,B′) down to (P,Q) ≤ (A′,B′) by contracting
    the linkage paths into their cut vertices.

    Each linkage path must be a V(P)–V(B′) path containing exactly one
    boundary vertex of the target; bag sizes never grow.
    """
    sset = frozenset(s)
    if not target.le(good.separation):
        raise GraphError("target must satisfy (P,Q) ≤ (A',B')")
    cut = target.boundary
    if len(linkage.paths) != len(cut):
        raise GraphError(f"linkage must have {len(cut)} paths, got {len(linkage.paths)}")
    owner: dict[int, tuple[int, ...]] = {}
    for path in linkage.paths:
        hits = [v for v in path if v in cut]
        if len(hits) != 1:
            raise GraphError(f"path {path} must contain exactly one target boundary vertex")
        if hits[0] in owner:
            raise GraphError(f"two paths claim boundary vertex {hits[0]}")
        owner[hits[0]] = path
    vp = set(target.side_a.vertices)
    new_bags = []
    for bag in good.witness.bags:
        nb = set(bag & vp)
        for x, path in owner.items():
            if bag & set(path):
                nb.add(x)
        if len(nb) > len(bag):
            raise GraphError("pull-back must not grow a bag")
        new_bags.append(frozenset(nb))
    out = GoodSeparation(target, PathDecomposition(tuple(new_bags)))
    out.validate(g, sset, w)
    return out


def _extend_model(
    model: dict[int, frozenset[int]],
    old_bd: frozenset[int],
    linkage_paths,
    new_bd: frozenset[int],
) -> dict[int, frozenset[int]]:
    """Push a boundary-rooted model along a full linkage to the new boundary."""
    by_start = {}
    for path in linkage_paths:
        by_start[path[0]] = path
    out = {}
    for x, bset in model.items():
        anchors = bset & old_bd
        assert len(anchors) == 1, "model must hold exactly one boundary vertex per branch set"
        a = next(iter(anchors))
        path = by_start[a]
        grown = bset | set(path)
        assert grown & new_bd, "extended branch set must reach the new boundary"
        out[x] = frozenset(grown)
    return out


def _null_certificate(g: Graph, s: frozenset[int]) -> FocusedCertificate:
    bags = PathDecomposition((frozenset(),))
    att = compute_attachment(g, frozenset(), "path", bags)
    cert = FocusedCertificate("path", frozenset(), pd=bags, attachment=att)
    verify_focused(g, s, cert)
    return cert


def _emit_certificate(g: Graph, s: frozenset[int], bags: tuple[frozenset[int], ...]) -> FocusedCertificate:
    host = frozenset().union(*bags) if bags else frozenset()
    pd = PathDecomposition(bags)
    att = compute_attachment(g, host, "path", pd)
    cert = FocusedCertificate("path", host, pd=pd, attachment=att)
    verify_focused(g, s, cert)
    return cert


class _Engine:
    def __init__(self, g: Graph, s: frozenset[int], f: Graph):
        self.g = g
        self.s = s
        self.f = f
        self.w = f.n
        self.order = _peel_order(f)
        self.levels: list[_Level] = []

    # -- level construction -------------------------------------------------

    def _base_level(self) -> _Level:
        sep = make_separation(self.g, set(), set(self.g.vertices))
        sep, bags = _saturate(self.g, sep, (frozenset(),), win=True)
        return _Level(sep, bags, {})

    def _choose_vertex(self, base: _Level, t: int, placed: list[int]) -> int:
        b_private = sorted(set(base.sep.side_b.vertices) - set(base.sep.side_a.vertices))
        nbrs_in_prefix = [x for x in self.f.neighbors(t) if x in placed]
        assert len(nbrs_in_prefix) <= 1
        if not nbrs_in_prefix:
            return b_private[0]
        u_candidates = base.model[nbrs_in_prefix[0]] & base.sep.boundary
        assert len(u_candidates) == 1
        u = next(iter(u_candidates))
        for v in self.g.neighbors(u):
            if v in b_private:
                return v
        raise AssertionError("saturated boundary vertex lost its private neighbor")

    def _add_vertex(self, base: _Level, v: int):
        va = set(base.sep.side_a.vertices) | {v}
        side_a = self.g.subgraph(va)
        side_b = Graph(
            base.sep.side_b.vertices,
            [e for e in base.sep.side_b.edges if e not in side_a.edge_set],
        )
        sep = Separation(side_a, side_b)
        bags = base.bags + (frozenset(sep.boundary),)
        return sep, bags

    def _improve(self, j: int, sep: Separation, bags: tuple[frozenset[int], ...]) -> None:
        """Install a strictly better good separation at level ≤ j, rebuilding
        the prefix model via a fresh linkage; descends while the linkage is
        too small."""
        sep, bags = _saturate(self.g, sep, bags, win=True)
        while True:
            if j == 0:
                assert sep.order == 0
                self.levels[:] = [_Level(sep, bags, {})]
                return
            old = self.levels[j]
            pq, cut, linkage, suffixes = _lemma_menger(self.g, old.sep, sep)
            if len(cut) >= j:
                model = _extend_model(old.model, old.sep.boundary, linkage.paths, sep.boundary)
                del self.levels[j + 1 :]
                self.levels[j] = _Level(sep, bags, model)
                return
            bags = self._pull_back_bags(bags, pq, suffixes)
            sep, bags = _saturate(self.g, pq, bags, win=True)
            # the pulled-back separation strictly extends level j-1
            j -= 1

    def _pull_back_bags(self, bags, pq: Separation, suffixes) -> tuple[frozenset[int], ...]:
        vp = set(pq.side_a.vertices)
        out = []
        for bag in bags:
            nb = set(bag & vp)
            for x, path in suffixes.items():
                if bag & set(path):
                    nb.add(x)
            assert len(nb) <= len(bag)
            out.append(frozenset(nb))
        return tuple(out)

    # -- main loop -----------------------------------------------------------

    def _build(self) -> None:
        """Grow the level stack until it carries a full model of the forest."""
        if not self.levels:
            self.levels = [self._base_level()]
        while len(self.levels) - 1 < self.w:
            i = len(self.levels) - 1
            base = self.levels[i]
            t = self.order[i]
            v = self._choose_vertex(base, t, self.order[:i])
            sep_av, bags_av = self._add_vertex(base, v)
            sat_sep, sat_bags = _saturate(self.g, sep_av, bags_av, win=True)
            pq, cut, linkage, suffixes = _lemma_menger(self.g, sep_av, sat_sep)
            if len(cut) >= i + 1:
                model = dict(base.model)
                model[t] = frozenset([v])
                model = _extend_model(model, sep_av.boundary, linkage.paths, sat_sep.boundary)
                self.levels.append(_Level(sat_sep, sat_bags, model))
            else:
                bags_pq = self._pull_back_bags(sat_bags, pq, suffixes)
                self._improve(i, pq, bags_pq)

    def run(self) -> SpwOutcome:
        g, s, w = self.g, self.s, self.w
        try:
            while True:
                self._build()
                # final step: Menger between V(A) and S ∩ V(B)
                top = self.levels[w]
                x = frozenset(top.sep.side_a.vertices)
                y = self.s & set(top.sep.side_b.vertices)
                linkage, pq = menger(g, x, frozenset(y))
                if len(linkage) >= w:
                    model = self._final_model(top, linkage)
                    return SpwOutcome(model=model)
                bag = frozenset(top.sep.boundary | pq.boundary)
                self._improve(w, pq, top.bags + (bag,))
        except _Win as win:
            cert = _emit_certificate(g, s, win.bags)
            return SpwOutcome(decomposition=cert)

    def _final_model(self, top: _Level, linkage: Linkage) -> MinorModel:
        by_start = {p[0]: p for p in linkage.paths}
        bd = top.sep.boundary
        out = {}
        for xv, bset in top.model.items():
            anchors = bset & bd
            assert len(anchors) == 1
            a = next(iter(anchors))
            path = by_start[a]
            out[xv] = frozenset(bset | set(path))
        return MinorModel(out)


def find_rooted_separation(g: Graph, s, f: Graph, w: int | None = None):
    """Run the forest induction to completion.

    Returns ("separation", GoodSeparation, MinorModel-rooted-at-boundary) on
    the model track, or ("decomposition", FocusedCertificate) when the A-side
    swallowed V(G) en route (the win branch; not an error).
    """
    sset = frozenset(s)
    if not f.is_forest():
        raise GraphError("pattern must be a forest")
    if w is None:
        w = f.n
    if w < f.n:
        raise GraphError("w must be at least |V(F)|")
    if f.n == 0:
        eng = _Engine(g, sset, f)
        try:
            lvl = eng._base_level()
            gs = GoodSeparation(lvl.sep, PathDecomposition(lvl.bags))
            gs.validate(g, sset, max(w, 1))
            return ("separation", gs, MinorModel({}))
        except _Win as win:
            return ("decomposition", _emit_certificate(g, sset, win.bags))
    eng = _Engine(g, sset, f)
    try:
        eng._build()
        top = eng.levels[f.n]
        gs = GoodSeparation(top.sep, PathDecomposition(top.bags))
        gs.validate(g, sset, w)
        model = MinorModel(top.model)
        why = model_violation(g.subgraph(top.sep.side_a.vertices), f, model, rooted(top.sep.boundary))
        assert why is None, why
        return ("separation", gs, model)
    except _Win as win:
        return ("decomposition", _emit_certificate(g, sset, win.bags))


def decide_spw(g: Graph, s, f: Graph) -> SpwOutcome:
    """Thm-level dichotomy: a focused path certificate of width ≤ 2|V(F)|−2,
    or an S-rooted model of the forest F.  Both outcomes are re-verified."""
    sset = frozenset(s)
    if not sset <= set(g.vertices):
        raise GraphError("S must be a subset of V(G)")
    if not f.is_forest():
        raise GraphError("pattern must be a forest")
    if f.n < 1:
        raise GraphError("pattern forest needs at least one vertex")
    if not sset:
        return SpwOutcome(decomposition=_null_certificate(g, sset))
    outcome = _Engine(g, sset, f).run()
    if outcome.kind == "decomposition":
        width = verify_focused(g, sset, outcome.decomposition)
        assert width <= 2 * f.n - 2
    else:
        why = model_violation(g, f, outcome.model, rooted(sset))
        assert why is None, why
    return outcome
