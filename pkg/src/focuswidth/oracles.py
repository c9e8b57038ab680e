"""Brute-force reference oracles: exact pw/td/tw, classical and focused.

Everything here is independent of the constructive engines; acceptance
tests compare engine output against these values.  Budgets are hard
refusals, never truncations: a wrong oracle would poison every test.

Classical widths use standard subset dynamic programs over bitmasks
(vertex separation for pw, elimination orders for tw, recursive deletion
for td).  The focused ("pair") variants enumerate induced hosts H ⊇ S and
clique-ify each outside component's neighborhood, which forces it into one
bag (a set is guaranteed a common bag iff it is a clique); the treedepth
analog forces it onto one root-to-leaf path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import BudgetExceeded, Graph


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_vertices_tw: int = 10
    max_pattern: int = 6
    time_cap: float = 600.0

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_vertices_tw <= 0 or self.time_cap <= 0:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = OracleBudget()


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _components_mask(adj: list[int], mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            sub = frontier
            while sub:
                b = sub & -sub
                nxt |= adj[b.bit_length() - 1] & mask & ~comp
                sub ^= b
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


# -- classical exact widths ---------------------------------------------------


def _pw_masks(adj: list[int]) -> int:
    """Pathwidth via the vertex-separation subset DP."""
    n = len(adj)
    if n == 0:
        return -1
    full = (1 << n) - 1
    border = [0] * (full + 1)
    # border(X) = # vertices in X with a neighbor outside X
    for mask in range(1, full + 1):
        cnt = 0
        for u in _bits(mask):
            if adj[u] & ~mask & full:
                cnt += 1
        border[mask] = cnt
    INF = n + 1
    f = [INF] * (full + 1)
    f[0] = 0
    for mask in range(1, full + 1):
        best = INF
        for v in _bits(mask):
            prev = f[mask ^ (1 << v)]
            if prev < best:
                cost = border[mask ^ (1 << v)] + 1
                cand = max(prev, cost)
                if cand < best:
                    best = cand
        f[mask] = best
    return f[full] - 1


def _tw_masks(adj: list[int]) -> int:
    """Treewidth via the elimination-order subset DP.

    q(X, v) = vertices outside X∪{v} reachable from v through X; f(X) is the
    best max-degree over orders eliminating X first.
    """
    n = len(adj)
    if n == 0:
        return -1
    full = (1 << n) - 1

    def q(x_mask: int, v: int) -> int:
        seen = 1 << v
        frontier = 1 << v
        reach = 0
        while frontier:
            nxt = 0
            sub = frontier
            while sub:
                b = sub & -sub
                nb = adj[b.bit_length() - 1]
                reach |= nb & ~x_mask & ~(1 << v)
                nxt |= nb & x_mask & ~seen
                sub ^= b
            seen |= nxt
            frontier = nxt
        return _popcount(reach)

    INF = n + 1
    f = [INF] * (full + 1)
    f[0] = 0
    for mask in range(1, full + 1):
        best = INF
        for v in _bits(mask):
            prev = f[mask ^ (1 << v)]
            if prev >= best:
                continue
            cand = max(prev, q(mask ^ (1 << v), v))
            if cand < best:
                best = cand
        f[mask] = best
    return f[full]


def _td_masks(adj: list[int], full: int) -> int:
    """Treedepth by recursive min-over-root with memoization."""

    @lru_cache(maxsize=None)
    def rec(mask: int) -> int:
        if mask == 0:
            return 0
        comps = _components_mask(adj, mask)
        if len(comps) > 1:
            return max(rec(c) for c in comps)
        best = _popcount(mask)
        for v in _bits(mask):
            cand = 1 + rec(mask ^ (1 << v))
            if cand < best:
                best = cand
        return best

    return rec(full)


def exact_width(g: Graph, kind: str, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact classical pw / td / tw.  Null graph: pw = tw = −1, td = 0."""
    cap = budget.max_vertices_tw if kind == "tw" else budget.max_vertices
    if g.n > cap:
        raise BudgetExceeded(f"{kind} oracle refuses {g.n} > {cap} vertices")
    _, adj, _ = g.to_masks()
    if kind == "pw":
        return _pw_masks(adj)
    if kind == "tw":
        return _tw_masks(adj)
    if kind == "td":
        return _td_masks(tuple(adj), (1 << g.n) - 1)
    raise ValueError(f"unknown width kind {kind!r}")


# -- focused (pair) exact widths ------------------------------------------------


def _supersets(base: int, full: int):
    """All supersets of base within full, ascending."""
    free = full & ~base
    sub = 0
    while True:
        yield base | sub
        if sub == free:
            return
        sub = (sub - free) & free


def _cliqueified_host(adj: list[int], full: int, host: int) -> list[int] | None:
    """Adjacency of G[host] plus a clique on each outside component's
    neighborhood.  None when some component's neighborhood is not inside host
    (cannot happen for genuine components, so this is just defensive)."""
    hadj = [adj[i] & host if (host >> i) & 1 else 0 for i in range(len(adj))]
    outside = full & ~host
    for comp in _components_mask(adj, outside):
        nb = 0
        for v in _bits(comp):
            nb |= adj[v]
        nb &= host
        for v in _bits(nb):
            hadj[v] |= nb & ~(1 << v)
    return hadj


def _pw_of_submask(adj: list[int], host: int) -> int:
    """Vertex separation DP restricted to the vertices of ``host``."""
    verts = list(_bits(host))
    n = len(verts)
    if n == 0:
        return -1
    sub_adj = []
    pos = {v: i for i, v in enumerate(verts)}
    for v in verts:
        m = 0
        for u in _bits(adj[v] & host):
            m |= 1 << pos[u]
        sub_adj.append(m)
    return _pw_masks(sub_adj)


def _tw_of_submask(adj: list[int], host: int) -> int:
    verts = list(_bits(host))
    if not verts:
        return -1
    pos = {v: i for i, v in enumerate(verts)}
    sub_adj = []
    for v in verts:
        m = 0
        for u in _bits(adj[v] & host):
            m |= 1 << pos[u]
        sub_adj.append(m)
    return _tw_masks(sub_adj)


def _td_of_submask(adj: list[int], host: int) -> int:
    verts = list(_bits(host))
    if not verts:
        return 0
    pos = {v: i for i, v in enumerate(verts)}
    sub_adj = []
    for v in verts:
        m = 0
        for u in _bits(adj[v] & host):
            m |= 1 << pos[u]
        sub_adj.append(m)
    return _td_masks(tuple(sub_adj), (1 << len(verts)) - 1)


def exact_width_pair(g: Graph, s, kind: str, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact focused pw/td/tw of (G, S): min over induced hosts H ⊇ S of the
    clique-ified classical width.

    Conventions: S = ∅ gives −1 for pw/tw (null decomposition) and 0 for td.
    """
    sset = frozenset(s)
    if not sset <= set(g.vertices):
        raise ValueError("S must be a subset of V(G)")
    cap = min(budget.max_vertices_tw if kind == "tw" else budget.max_vertices, 9 if kind != "td" else 12)
    if g.n > cap:
        raise BudgetExceeded(f"{kind} pair oracle refuses {g.n} > {cap} vertices")
    if not sset:
        return 0 if kind == "td" else -1
    verts, adj, idx = g.to_masks()
    full = (1 << g.n) - 1
    smask = 0
    for v in sset:
        smask |= 1 << idx[v]
    best = None
    for host in _supersets(smask, full):
        hadj = _cliqueified_host(adj, full, host)
        if kind == "pw":
            val = _pw_of_submask(hadj, host)
        elif kind == "tw":
            val = _tw_of_submask(hadj, host)
        elif kind == "td":
            val = _td_of_submask(hadj, host)
        else:
            raise ValueError(f"unknown width kind {kind!r}")
        if best is None or val < best:
            best = val
        # with non-empty S the value cannot drop below one bag / one root
        if best <= (1 if kind == "td" else 0):
            break
    return best


def td_pair_inductive(g: Graph, s, budget: OracleBudget = DEFAULT_BUDGET, cutoff: int | None = None) -> int:
    """Exact td(G,S) by the inductive identities.

    td(G,∅) = 0; td over components is the max; connected non-empty-S:
    1 + min over u of td(G−u, S∖{u}).  Equals exact_width_pair(kind="td")
    (asserted exhaustively in tests); much faster for sweep-style checks.
    ``cutoff`` caps the search: the returned value is exact when < cutoff,
    otherwise it is a certificate that td ≥ cutoff.
    """
    sset = frozenset(s)
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"td pair oracle refuses {g.n} > {budget.max_vertices} vertices")
    verts, adj, idx = g.to_masks()
    smask = 0
    for v in sset:
        smask |= 1 << idx[v]
    hi = cutoff if cutoff is not None else g.n + 1

    memo: dict[int, int] = {}

    def rec(mask: int, bound: int) -> int:
        """Exact value if < bound, else any value ≥ bound."""
        sm = mask & smask
        if sm == 0:
            return 0
        if bound <= 0:
            return hi
        cached = memo.get(mask)
        if cached is not None:
            return cached
        comps = _components_mask(adj, mask)
        if len(comps) > 1:
            val = max(rec(c, bound) for c in comps)
        else:
            best = hi
            for v in _bits(mask):
                cand = 1 + rec(mask ^ (1 << v), best - 1)
                if cand < best:
                    best = cand
                if best <= 1:
                    break
            val = best
        if val < bound:
            memo[mask] = val
        return val

    return rec((1 << g.n) - 1, hi)


# -- fully naive validators (tiny scale) ------------------------------------------


def naive_td_pair(g: Graph, s) -> int:
    """Enumerate every host and every rooted forest on it; verify the pair
    conditions directly; take the minimum vertex-height.  |V| ≤ 5 only."""
    from itertools import product

    from .decompositions import CertificateError, FocusedCertificate, compute_attachment, verify_focused
    from .graph import RootedForest

    sset = frozenset(s)
    if g.n > 5:
        raise BudgetExceeded("naive td oracle beyond 5 vertices")
    if not sset:
        return 0
    best = None
    rest = [v for v in g.vertices]
    for host_bits in range(1 << g.n):
        host = {rest[i] for i in range(g.n) if (host_bits >> i) & 1}
        if not sset <= host:
            continue
        hv = sorted(host)
        # parent choice per vertex: another host vertex or "root"
        for parents in product(range(len(hv) + 1), repeat=len(hv)):
            pmap = {}
            roots = []
            ok = True
            for i, choice in enumerate(parents):
                if choice == len(hv):
                    roots.append(hv[i])
                elif choice == i:
                    ok = False
                    break
                else:
                    pmap[hv[i]] = hv[choice]
            if not ok or not roots:
                continue
            try:
                forest = RootedForest(pmap, roots)
            except Exception:
                continue
            try:
                att = compute_attachment(g, frozenset(host), "elim", forest)
                cert = FocusedCertificate("elim", frozenset(host), forest=forest, attachment=att)
                val = verify_focused(g, sset, cert)
            except CertificateError:
                continue
            if best is None or val < best:
                best = val
    return best


def naive_pw_pair(g: Graph, s) -> int:
    """Permutation-generated candidate path decompositions over both the raw
    and the clique-ified host, verify-filtered against the pair definition.

    Independent of the subset DP; |V| ≤ 5 only.
    """
    from itertools import permutations

    from .decompositions import CertificateError, FocusedCertificate, PathDecomposition, compute_attachment, verify_focused

    sset = frozenset(s)
    if g.n > 5:
        raise BudgetExceeded("naive pw oracle beyond 5 vertices")
    if not sset:
        return -1
    verts, adj, idx = g.to_masks()
    full = (1 << g.n) - 1
    best = None
    smask = 0
    for v in sset:
        smask |= 1 << idx[v]
    for host in _supersets(smask, full):
        hv = [verts[i] for i in _bits(host)]
        for hadj in (adj, _cliqueified_host(adj, full, host)):
            for order in permutations(hv):
                bags = []
                placed = 0
                for v in order:
                    bag = {v}
                    for u in _bits(placed):
                        if hadj[u] & host & ~placed:
                            bag.add(verts[u])
                    placed |= 1 << idx[v]
                    bags.append(frozenset(bag))
                pd = PathDecomposition(tuple(bags))
                try:
                    att = compute_attachment(g, frozenset(hv), "path", pd)
                    cert = FocusedCertificate("path", frozenset(hv), pd=pd, attachment=att)
                    val = verify_focused(g, sset, cert)
                except CertificateError:
                    continue
                if best is None or val < best:
                    best = val
    return best
