"""Decomposition certificates and their bit-exact verifiers.

The focused ("pair") variants decompose an induced host H ⊇ S and require
every component of G − V(H) to attach inside a single bag (path/tree case)
or inside a single root-to-leaf path (elimination case).  Attachment
witnesses are stored explicitly: verification never re-searches, so a
failure is attributable to one clause.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Graph, GraphError, RootedForest


class CertificateError(ValueError):
    """A certificate violated one of its invariants.

    ``clause`` names the first violated condition, ``witness`` points at the
    offending object (vertex, edge, bag index, component...).
    """

    def __init__(self, clause: str, witness=None):
        self.clause = clause
        self.witness = witness
        msg = clause if witness is None else f"{clause}: {witness!r}"
        super().__init__(msg)


# -- plain decomposition types -------------------------------------------------


@dataclass(frozen=True)
class PathDecomposition:
    """Ordered bag sequence W_1..W_m.  Width is max |W_i| − 1 (−1 if no bags)."""

    bags: tuple[frozenset[int], ...]

    @staticmethod
    def of(bags: Iterable[Iterable[int]]) -> "PathDecomposition":
        return PathDecomposition(tuple(frozenset(b) for b in bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @property
    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for b in self.bags:
            out |= b
        return frozenset(out)

    def check(self, h: Graph) -> None:
        """Assert this is a path decomposition of the graph h."""
        if set(self.support) != set(h.vertices):
            raise CertificateError("bags do not cover V(H)", sorted(set(h.vertices) ^ set(self.support)))
        for u, v in h.edges:
            if not any(u in b and v in b for b in self.bags):
                raise CertificateError("uncovered edge", (u, v))
        for v in h.vertices:
            ix = [i for i, b in enumerate(self.bags) if v in b]
            if ix != list(range(ix[0], ix[-1] + 1)):
                raise CertificateError("broken contiguity", v)


@dataclass(frozen=True)
class TreeDecomposition:
    """Tree decomposition: a single-root forest as the tree, bags per node."""

    tree: RootedForest
    bags: Mapping[int, frozenset[int]]

    @staticmethod
    def of(tree: RootedForest, bags: Mapping[int, Iterable[int]]) -> "TreeDecomposition":
        return TreeDecomposition(tree, {x: frozenset(b) for x, b in bags.items()})

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    @property
    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for b in self.bags.values():
            out |= b
        return frozenset(out)

    def check(self, h: Graph) -> None:
        if len(self.tree.roots) != 1:
            raise CertificateError("decomposition tree must have one root", self.tree.roots)
        if set(self.bags) != set(self.tree.vertices):
            raise CertificateError("bags and tree nodes mismatch")
        if set(self.support) != set(h.vertices):
            raise CertificateError("bags do not cover V(H)", sorted(set(h.vertices) ^ set(self.support)))
        for u, v in h.edges:
            if not any(u in b and v in b for b in self.bags.values()):
                raise CertificateError("uncovered edge", (u, v))
        for v in h.vertices:
            nodes = {x for x, b in self.bags.items() if v in b}
            # the nodes holding v must induce a subtree: connected under parent links
            start = min(nodes)
            seen = {start}
            queue = [start]
            while queue:
                a = queue.pop()
                for b in self.tree.children(a):
                    if b in nodes and b not in seen:
                        seen.add(b)
                        queue.append(b)
                p = self.tree.parent.get(a)
                if p is not None and p in nodes and p not in seen:
                    seen.add(p)
                    queue.append(p)
            if seen != nodes:
                raise CertificateError("broken subtree", v)


# -- focused certificates --------------------------------------------------------


@dataclass(frozen=True)
class FocusedCertificate:
    """Width/height certificate for a pair (G, S).

    ``kind`` is one of "path", "tree", "elim".  ``host`` is V(H); exactly one
    of pd/tree/forest is populated.  ``attachment`` maps each component of
    G − V(H) (keyed by its minimum vertex) to a bag index, tree node, or leaf
    whose root-to-leaf path holds the component's neighborhood.  Elimination
    components with empty neighborhood may be omitted.
    """

    kind: str
    host: frozenset[int]
    pd: PathDecomposition | None = None
    tree: TreeDecomposition | None = None
    forest: RootedForest | None = None
    attachment: Mapping[int, int] = field(default_factory=dict)

    def value(self) -> int:
        """Width (path/tree) or vertex-height (elim) without validity checks."""
        if self.kind == "path":
            return self.pd.width
        if self.kind == "tree":
            return self.tree.width
        return self.forest.vertex_height()


def _attach_components(g: Graph, host: frozenset[int]) -> list[frozenset[int]]:
    return g.remove_vertices(host).components()


def compute_attachment(g: Graph, host: frozenset[int], cert_kind: str, structure) -> dict[int, int]:
    """Pick the first valid attachment witness per component (producer side)."""
    out: dict[int, int] = {}
    for comp in _attach_components(g, host):
        key = min(comp)
        nbrs = g.neighborhood_of_set(comp)
        if cert_kind == "path":
            for i, b in enumerate(structure.bags):
                if nbrs <= b:
                    out[key] = i
                    break
            else:
                raise CertificateError("orphan component", sorted(comp))
        elif cert_kind == "tree":
            for x in sorted(structure.bags):
                if nbrs <= structure.bags[x]:
                    out[key] = x
                    break
            else:
                raise CertificateError("orphan component", sorted(comp))
        else:  # elimination: root-to-leaf path witness, recorded by its leaf
            if not nbrs:
                continue
            for leaf in structure.leaves():
                if nbrs <= set(structure.path_to_root(leaf)):
                    out[key] = leaf
                    break
            else:
                raise CertificateError("orphan component", sorted(comp))
    return out


def make_focused_path(g: Graph, host: Iterable[int], bags: Iterable[Iterable[int]]) -> FocusedCertificate:
    pd = PathDecomposition.of(bags)
    host = frozenset(host)
    return FocusedCertificate("path", host, pd=pd, attachment=compute_attachment(g, host, "path", pd))


def make_focused_tree(g: Graph, host: Iterable[int], td: TreeDecomposition) -> FocusedCertificate:
    host = frozenset(host)
    return FocusedCertificate("tree", host, tree=td, attachment=compute_attachment(g, host, "tree", td))


def make_focused_elim(g: Graph, host: Iterable[int], forest: RootedForest) -> FocusedCertificate:
    host = frozenset(host)
    return FocusedCertificate("elim", host, forest=forest, attachment=compute_attachment(g, host, "elim", forest))


def verify_focused(g: Graph, s: Iterable[int], cert: FocusedCertificate) -> int:
    """Verify every invariant of a focused certificate; return width or height.

    Raises CertificateError naming the first violated clause.
    """
    sset = frozenset(s)
    if not sset <= set(g.vertices):
        raise GraphError("S must be a subset of V(G)")
    if not sset <= cert.host:
        raise CertificateError("S not contained in host", sorted(sset - cert.host))
    if not cert.host <= set(g.vertices):
        raise CertificateError("host not contained in V(G)", sorted(cert.host - set(g.vertices)))
    h = g.subgraph(cert.host)  # induced: the decomposition must cover all its edges

    if cert.kind == "path":
        if cert.pd is None:
            raise CertificateError("missing path decomposition")
        if not cert.pd.bags and cert.host:
            raise CertificateError("non-null host needs at least one bag")
        cert.pd.check(h)
        value = cert.pd.width
    elif cert.kind == "tree":
        if cert.tree is None:
            raise CertificateError("missing tree decomposition")
        cert.tree.check(h)
        value = cert.tree.width
    elif cert.kind == "elim":
        if cert.forest is None:
            raise CertificateError("missing elimination forest")
        if set(cert.forest.vertices) != set(cert.host):
            raise CertificateError("forest vertices differ from host")
        for u, v in h.edges:
            if not cert.forest.closure_contains(u, v):
                raise CertificateError("uncovered edge", (u, v))
        value = cert.forest.vertex_height()
    else:
        raise CertificateError("unknown certificate kind", cert.kind)

    for comp in _attach_components(g, cert.host):
        key = min(comp)
        nbrs = g.neighborhood_of_set(comp)
        if cert.kind == "elim" and not nbrs:
            continue
        if key not in cert.attachment:
            raise CertificateError("orphan component", sorted(comp))
        wit = cert.attachment[key]
        if cert.kind == "path":
            if not (0 <= wit < len(cert.pd.bags)) or not nbrs <= cert.pd.bags[wit]:
                raise CertificateError("orphan component", sorted(comp))
        elif cert.kind == "tree":
            if wit not in cert.tree.bags or not nbrs <= cert.tree.bags[wit]:
                raise CertificateError("orphan component", sorted(comp))
        else:
            if wit not in cert.forest or not nbrs <= set(cert.forest.path_to_root(wit)):
                raise CertificateError("orphan component", sorted(comp))
    return value


# -- layered certificates ----------------------------------------------------------


@dataclass(frozen=True)
class Layering:
    """Disjoint vertex layers covering V(G); edges stay within or between
    consecutive layers.  Trailing empty layers are forbidden (canonical form)."""

    layers: tuple[frozenset[int], ...]

    @staticmethod
    def of(layers: Iterable[Iterable[int]]) -> "Layering":
        return Layering(tuple(frozenset(layer) for layer in layers))

    def check(self, g: Graph) -> None:
        if self.layers and not self.layers[-1]:
            raise CertificateError("trailing empty layer")
        pos: dict[int, int] = {}
        for i, layer in enumerate(self.layers):
            for v in layer:
                if v in pos:
                    raise CertificateError("layers are not disjoint", v)
                pos[v] = i
        if set(pos) != set(g.vertices):
            raise CertificateError("layers do not partition V(G)", sorted(set(g.vertices) ^ set(pos)))
        for u, v in g.edges:
            if abs(pos[u] - pos[v]) > 1:
                raise CertificateError("edge spans non-consecutive layers", (u, v))

    def index_of(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}


@dataclass(frozen=True)
class LayeredCertificate:
    """A layering plus either a path decomposition or an elimination forest of
    all of G.  The layered width counts |bag ∩ layer| (resp. |path ∩ layer|)."""

    layering: Layering
    pd: PathDecomposition | None = None
    forest: RootedForest | None = None

    @property
    def kind(self) -> str:
        return "path" if self.pd is not None else "elim"


def verify_layered(g: Graph, cert: LayeredCertificate) -> int:
    """Assert layering + structure validity over all of G, return layered width."""
    cert.layering.check(g)
    if cert.pd is not None:
        if not cert.pd.bags and g.n:
            raise CertificateError("non-null graph needs at least one bag")
        cert.pd.check(g)
        width = 0
        for b in cert.pd.bags:
            for layer in cert.layering.layers:
                width = max(width, len(b & layer))
        return width
    if cert.forest is None:
        raise CertificateError("layered certificate needs a structure")
    if not cert.forest.is_elimination_forest_of(g):
        raise CertificateError("invalid elimination forest")
    width = 0
    for path in cert.forest.root_to_leaf_paths():
        pv = frozenset(path)
        for layer in cert.layering.layers:
            width = max(width, len(pv & layer))
    return width


# -- width accessors -----------------------------------------------------------


def widths(cert) -> int:
    """Pure width / vertex-height / layered width arithmetic, no validation."""
    if isinstance(cert, PathDecomposition):
        return cert.width
    if isinstance(cert, TreeDecomposition):
        return cert.width
    if isinstance(cert, RootedForest):
        return cert.vertex_height()
    if isinstance(cert, FocusedCertificate):
        return cert.value()
    if isinstance(cert, LayeredCertificate):
        width = 0
        if cert.pd is not None:
            for b in cert.pd.bags:
                for layer in cert.layering.layers:
                    width = max(width, len(b & layer))
        else:
            for path in cert.forest.root_to_leaf_paths():
                pv = frozenset(path)
                for layer in cert.layering.layers:
                    width = max(width, len(pv & layer))
        return width
    raise TypeError(f"no width defined for {type(cert).__name__}")


# -- JSON round-trip -----------------------------------------------------------


def _ids(vs) -> list[int]:
    return sorted(int(v) for v in vs)


def forest_to_json(f: RootedForest) -> dict:
    return {
        "roots": _ids(f.roots),
        "parent": {str(c): f.parent[c] for c in sorted(f.parent)},
    }


def forest_from_json(obj: dict) -> RootedForest:
    return RootedForest({int(c): int(p) for c, p in obj["parent"].items()}, obj["roots"])


def certificate_to_json(cert) -> dict:
    """Canonical JSON form: fixed field order, ascending ids (golden-test stable)."""
    if isinstance(cert, FocusedCertificate):
        out: dict = {"kind": f"focused-{cert.kind}", "host": _ids(cert.host)}
        if cert.kind == "path":
            out["bags"] = [_ids(b) for b in cert.pd.bags]
        elif cert.kind == "tree":
            out["tree"] = forest_to_json(cert.tree.tree)
            out["bags"] = {str(x): _ids(cert.tree.bags[x]) for x in sorted(cert.tree.bags)}
        else:
            out["forest"] = forest_to_json(cert.forest)
        out["attachment"] = {str(k): int(v) for k, v in sorted(cert.attachment.items())}
        return out
    if isinstance(cert, LayeredCertificate):
        out = {"kind": f"layered-{cert.kind}"}
        if cert.pd is not None:
            out["bags"] = [_ids(b) for b in cert.pd.bags]
        else:
            out["forest"] = forest_to_json(cert.forest)
        out["layers"] = [_ids(layer) for layer in cert.layering.layers]
        return out
    raise TypeError(f"cannot serialize {type(cert).__name__}")


def certificate_from_json(obj: dict):
    kind = obj["kind"]
    if kind == "focused-path":
        return FocusedCertificate(
            "path",
            frozenset(obj["host"]),
            pd=PathDecomposition.of(obj["bags"]),
            attachment={int(k): int(v) for k, v in obj.get("attachment", {}).items()},
        )
    if kind == "focused-tree":
        tree = forest_from_json(obj["tree"])
        bags = {int(x): frozenset(b) for x, b in obj["bags"].items()}
        return FocusedCertificate(
            "tree",
            frozenset(obj["host"]),
            tree=TreeDecomposition(tree, bags),
            attachment={int(k): int(v) for k, v in obj.get("attachment", {}).items()},
        )
    if kind == "focused-elim":
        return FocusedCertificate(
            "elim",
            frozenset(obj["host"]),
            forest=forest_from_json(obj["forest"]),
            attachment={int(k): int(v) for k, v in obj.get("attachment", {}).items()},
        )
    if kind == "layered-path":
        return LayeredCertificate(Layering.of(obj["layers"]), pd=PathDecomposition.of(obj["bags"]))
    if kind == "layered-elim":
        return LayeredCertificate(Layering.of(obj["layers"]), forest=forest_from_json(obj["forest"]))
    raise CertificateError("unknown certificate kind", kind)
