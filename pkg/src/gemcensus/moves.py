"""Dipole moves, rho-pair switchings and rigidity.

Dipole cancellation shrinks a graph by two vertices; proper dipoles do
so without changing the represented manifold.  Switching a rho-pair
rewires two equally colored edges of a bipartite graph; good pairs again
preserve the manifold (rho-2) or decompose it along well-understood
connected sums (rho-3).  A bipartite graph admitting neither kind of
good pair is rigid, the combinatorial precondition for minimality among
irreducible, boundary-irreducible manifolds.
"""

from __future__ import annotations

from dataclasses import dataclass

from gemcensus.core import (
    COLORS,
    ColoredGraph,
    Residue,
    boundary_profile,
    complement,
    is_bipartite,
    residues,
    surface_type,
)


@dataclass(frozen=True)
class Dipole:
    """Two adjacent vertices together with all h edges joining them,
    lying in different residues of the complementary colors."""

    vertices: tuple[int, int]
    colors: frozenset[int]

    @property
    def h(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class RhoPair:
    """Two distinct equally colored edges together with the bicolored
    cycles containing both.  ``find_rho_pairs`` yields the pairs sharing
    i in {2,3} cycles; ``pair_at`` builds the pair for any two edges
    (switching is mechanically defined for all of them, which is what
    makes it an involution)."""

    color: int
    edges: tuple[tuple[int, int], tuple[int, int]]
    shared: tuple[Residue, ...]

    @property
    def i(self) -> int:
        return len(self.shared)


@dataclass(frozen=True)
class Rho3Classification:
    """Outcome of switching a good rho-3 pair, as one of the six lemma
    cases relating the manifold before to the manifold(s) after."""

    case: str
    index: int
    components_after: int


def _separated(g: ColoredGraph, u: int, v: int, colors) -> bool:
    """True when u and v lie in different residues of the given colors."""
    ms = [g.matchings[c] for c in colors]
    seen = {u}
    stack = [u]
    while stack:
        w = stack.pop()
        for m in ms:
            x = m[w]
            if x == v:
                return False
            if x not in seen:
                seen.add(x)
                stack.append(x)
    return True


def find_dipoles(g: ColoredGraph) -> list[Dipole]:
    """All dipoles of a graph of order > 2, one per unordered vertex pair."""
    if g.order <= 2:
        raise ValueError("dipoles are defined for graphs of order > 2")
    out = []
    for v in range(g.order):
        for u in set(m[v] for m in g.matchings):
            if u < v:
                continue
            cols = g.degree_colors(v, u)
            if len(cols) == 4:
                continue  # impossible in a connected graph of order > 2
            if _separated(g, v, u, complement(cols)):
                out.append(Dipole((v, u), frozenset(cols)))
    return out


def _validate_dipole(g: ColoredGraph, d: Dipole) -> None:
    v, u = d.vertices
    if not (0 <= v < g.order and 0 <= u < g.order):
        raise ValueError("dipole vertices out of range")
    if frozenset(g.degree_colors(v, u)) != d.colors or not d.colors:
        raise ValueError("stale dipole: the listed edges are not present")
    if not _separated(g, v, u, complement(d.colors)):
        raise ValueError("stale dipole: separation condition fails")


def is_proper(g: ColoredGraph, d: Dipole) -> bool:
    """Whether cancelling the dipole preserves the manifold: always for
    h > 1, and for h = 1 exactly when one of the two residues missing the
    dipole color through its endpoints is ordinary."""
    _validate_dipole(g, d)
    if d.h > 1:
        return True
    (c,) = d.colors
    rest = complement([c])
    for w in d.vertices:
        r = next(r for r in residues(g, rest) if w in r.vertices)
        if surface_type(g, r).is_sphere:
            return True
    return False


def _relabel(matchings, removed: set[int]) -> list[list[int]]:
    old = [v for v in range(len(matchings[0])) if v not in removed]
    new = {v: i for i, v in enumerate(old)}
    return [[new[m[v]] for v in old] for m in matchings]


def cancel_dipole(g: ColoredGraph, d: Dipole) -> ColoredGraph:
    """Remove the dipole and splice the hanging edges color by color,
    producing a graph of order 2p - 2."""
    _validate_dipole(g, d)
    if g.order <= 2:
        raise ValueError("cannot cancel in a graph of order 2")
    v, u = d.vertices
    ms = [list(m) for m in g.matchings]
    for c in complement(d.colors):
        x, y = ms[c][v], ms[c][u]
        ms[c][x], ms[c][y] = y, x
    return ColoredGraph.from_matchings(_relabel(ms, {v, u}))


def insert_two_dipole(g: ColoredGraph, anchor: int, colors) -> ColoredGraph:
    """Add a 2-dipole with the given edge colors next to ``anchor``.

    The two new vertices take the last two indices; the second one is
    doubly joined to ``anchor`` by the complementary colors, which pins
    the new pair in a bicolored digon and so guarantees the dipole
    condition.  Inverse of cancelling that dipole.
    """
    colors = frozenset(colors)
    if len(colors) != 2 or not colors <= set(COLORS):
        raise ValueError("a 2-dipole needs exactly two distinct colors")
    n = g.order
    if not 0 <= anchor < n:
        raise ValueError("anchor vertex out of range")
    v, w = n, n + 1  # v keeps the anchor's old neighbors, w hugs the anchor
    ms = [list(m) + [-1, -1] for m in g.matchings]
    for c in COLORS:
        if c in colors:
            ms[c][v], ms[c][w] = w, v
        else:
            x = ms[c][anchor]
            ms[c][v], ms[c][x] = x, v
            ms[c][w], ms[c][anchor] = anchor, w
    return ColoredGraph.from_matchings(ms)


def join_with_one_dipole(g1: ColoredGraph, g2: ColoredGraph,
                         w1: int, w2: int, color: int) -> ColoredGraph:
    """Connect two disjoint graphs by a 1-dipole of the given color.

    The vertices ``w1`` of ``g1`` and ``w2`` of ``g2`` are replaced by the
    two dipole vertices; their old edges of the dipole color are joined
    to each other.  The dipole is proper exactly when one of the replaced
    vertices' residues missing ``color`` is ordinary.
    """
    n1 = g1.order
    ms = [list(a) + [v + n1 for v in b]
          for a, b in zip(g1.matchings, g2.matchings)]
    n = n1 + g2.order
    u1, u2 = w1, n1 + w2
    for m in ms:
        m.extend((-1, -1))
    v, w = n, n + 1
    for c in COLORS:
        if c == color:
            a, b = ms[c][u1], ms[c][u2]
            ms[c][a], ms[c][b] = b, a
            ms[c][v], ms[c][w] = w, v
        else:
            a, b = ms[c][u1], ms[c][u2]
            ms[c][a], ms[c][v] = v, a
            ms[c][b], ms[c][w] = w, b
    return ColoredGraph.from_matchings(_relabel(ms, {u1, u2}))


def _cycle_residue(g: ColoredGraph, a: int, b: int, start: int) -> Residue:
    verts = set()
    v = start
    while v not in verts:
        verts.add(v)
        verts.add(g.matchings[a][v])
        v = g.matchings[b][g.matchings[a][v]]
    return Residue(frozenset((a, b)), tuple(sorted(verts)))


def find_rho_pairs(g: ColoredGraph, i: int) -> list[RhoPair]:
    """All pairs of equally colored edges sharing exactly ``i`` bicolored
    cycles, for i = 2 or 3, ordered by (color, endpoints)."""
    if i not in (2, 3):
        raise ValueError("rho-pairs share 2 or 3 bicolored cycles")
    if not is_bipartite(g):
        raise ValueError("rho-pairs are defined for bipartite graphs")
    out = []
    for c in COLORS:
        m = g.matchings[c]
        edges = sorted((v, m[v]) for v in range(g.order) if v < m[v])
        cycles = {}
        for other in COLORS:
            if other == c:
                continue
            a, b = min(c, other), max(c, other)
            cyc = {}
            for s in range(g.order):
                if s in cyc:
                    continue
                r = _cycle_residue(g, a, b, s)
                for v in r.vertices:
                    cyc[v] = r
            cycles[other] = cyc
        for x in range(len(edges)):
            for y in range(x + 1, len(edges)):
                e, f = edges[x], edges[y]
                shared = tuple(
                    cycles[other][e[0]]
                    for other in sorted(cycles)
                    if cycles[other][e[0]] is cycles[other][f[0]]
                )
                if len(shared) == i:
                    out.append(RhoPair(c, (e, f), shared))
    return out


def _validate_rho_pair(g: ColoredGraph, p: RhoPair) -> None:
    m = g.matchings[p.color]
    (a, b), (u, v) = p.edges
    if m[a] != b or m[u] != v or len({a, b, u, v}) != 4:
        raise ValueError("stale rho-pair: edges not present")


def pair_at(g: ColoredGraph, color: int, v1: int, v2: int) -> RhoPair:
    """The pair of ``color``-edges at the two given vertices, with its
    shared bicolored cycles (any number of them)."""
    m = g.matchings[color]
    if m[v1] == v2 or v1 == v2:
        raise ValueError("the two edges must be distinct and disjoint")
    e = tuple(sorted((v1, m[v1])))
    f = tuple(sorted((v2, m[v2])))
    shared = []
    for other in sorted(set(COLORS) - {color}):
        a, b = min(color, other), max(color, other)
        r = _cycle_residue(g, a, b, e[0])
        if f[0] in r.vertices:
            shared.append(r)
    return RhoPair(color, tuple(sorted((e, f))), tuple(shared))


def switch(g: ColoredGraph, p: RhoPair) -> list[ColoredGraph]:
    """Replace the pair's edges by the two same-colored edges joining
    their endpoints the only way that preserves the bipartition.  Returns
    the connected components of the result (one or two graphs)."""
    side = _bipartition(g)
    _validate_rho_pair(g, p)
    (a, b), (u, v) = p.edges
    if side[u] != side[a]:
        u, v = v, u
    ms = [list(m) for m in g.matchings]
    mc = ms[p.color]
    # a pairs with the opposite-side endpoint of the other edge
    mc[a], mc[v] = v, a
    mc[u], mc[b] = b, u
    comp = sorted(_reach_list(ms, 0))
    if len(comp) == len(mc):
        return [ColoredGraph.from_matchings(ms)]
    rest = set(range(len(mc))) - set(comp)
    return [
        ColoredGraph.from_matchings(_relabel(ms, rest)),
        ColoredGraph.from_matchings(_relabel(ms, set(comp))),
    ]


def _bipartition(g: ColoredGraph) -> list[int]:
    side = [-1] * g.order
    side[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for m in g.matchings:
            u = m[v]
            if side[u] < 0:
                side[u] = 1 - side[v]
                stack.append(u)
            elif side[u] == side[v]:
                raise ValueError("switching needs a bipartite graph")
    return side


def _reach_list(matchings, start):
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for m in matchings:
            u = m[v]
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def is_good_rho2(g: ColoredGraph, p: RhoPair) -> bool:
    """Perform the switch on a copy and test the defining condition: the
    residue spanned by the three colors of the shared cycles must split
    in two, at least one part capping off to a sphere."""
    if p.i != 2:
        raise ValueError("not a rho-2 pair")
    _validate_rho_pair(g, p)
    tri = frozenset().union(*(r.colors for r in p.shared))
    ms = [list(m) for m in g.matchings]
    side = _bipartition(g)
    (a, b), (u, v) = p.edges
    if side[u] != side[a]:
        u, v = v, u
    mc = ms[p.color]
    mc[a], mc[v] = v, a
    mc[u], mc[b] = b, u
    cols = sorted(tri)
    sub = [ms[c] for c in cols]
    comp_a = _reach_list(sub, a)
    if u in comp_a:
        return False  # the residue did not split
    for verts in (comp_a, _reach_list(sub, u)):
        f = 0
        for i, x in enumerate(cols):
            for y in cols[i + 1:]:
                f += _count_cycles_within(ms[x], ms[y], verts)
        chi = len(verts) - (3 * len(verts)) // 2 + f
        if chi == 2:
            return True
    return False


def _count_cycles_within(ma, mb, verts):
    seen = set()
    count = 0
    for s in verts:
        if s in seen:
            continue
        count += 1
        v = s
        while v not in seen:
            seen.add(v)
            seen.add(ma[v])
            v = mb[ma[v]]
    return count


def rho3_index(g: ColoredGraph, p: RhoPair) -> int:
    """Number of ordinary residues among the three 3-residues containing
    both edges of a rho-3 pair.  The pair is good when this is >= 2."""
    if p.i != 3:
        raise ValueError("not a rho-3 pair")
    _validate_rho_pair(g, p)
    e = p.edges[0][0]
    f = p.edges[1][0]
    r = 0
    for skip in complement([p.color]):
        cols = complement([skip])
        res = next(x for x in residues(g, cols) if e in x.vertices)
        if f not in res.vertices:
            raise ValueError("rho-3 pair edges in different 3-residues")
        if surface_type(g, res).is_sphere:
            r += 1
    return r


def is_good_rho3(g: ColoredGraph, p: RhoPair) -> bool:
    return rho3_index(g, p) >= 2


def classify_rho3_switch(g: ColoredGraph, p: RhoPair) -> Rho3Classification:
    """Which of the six decomposition cases the switch of a good rho-3
    pair realizes, from its index, the component count afterwards and the
    boundary component counts before and after."""
    r = rho3_index(g, p)
    if r < 2:
        raise ValueError("classification needs a good rho-3 pair (index >= 2)")
    parts = switch(g, p)
    if r == 3:
        case = "split-connected-sum" if len(parts) == 2 else "connected-S2xS1-sum"
        return Rho3Classification(case, r, len(parts))
    if len(parts) == 2:
        return Rho3Classification("split-boundary-or-connected-sum", r, 2)
    before = len(boundary_profile(g))
    after = len(boundary_profile(parts[0]))
    if after == before:
        case = "connected-same-boundary"
    elif after < before:
        case = "connected-fewer-boundary"
    else:
        case = "connected-more-boundary"
    return Rho3Classification(case, r, 1)


def is_rigid(g: ColoredGraph) -> bool:
    """No good rho-2 pair and no good rho-3 pair."""
    if not is_bipartite(g):
        raise ValueError("rigidity is defined for bipartite graphs")
    for p in find_rho_pairs(g, 3):
        if rho3_index(g, p) >= 2:
            return False
    for p in find_rho_pairs(g, 2):
        if is_good_rho2(g, p):
            return False
    return True
