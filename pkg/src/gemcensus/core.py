"""4-colored graphs and the invariants of their associated 3-manifolds.

A 4-colored graph is a connected 4-regular multigraph with a proper
4-edge-coloring; it encodes a compact 3-manifold whose boundary
components correspond to the singular (non-spherical) 3-residues of the
graph.  This module holds the graph type itself and everything that can
be read off a single graph: residues, residue surfaces, the boundary
profile, bipartiteness, contractedness and integral first homology.

All operations are pure functions on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

COLORS = (0, 1, 2, 3)


def complement(colors: Iterable[int]) -> tuple[int, ...]:
    """The colors of Delta = {0,1,2,3} not in ``colors``."""
    colors = set(colors)
    return tuple(c for c in COLORS if c not in colors)


@dataclass(frozen=True)
class ColoredGraph:
    """A connected 4-regular graph with a proper 4-edge-coloring.

    ``matchings[c][v]`` is the vertex joined to ``v`` by its ``c``-colored
    edge; each matching is a fixed-point-free involution on ``0..2p-1``.
    Matchings of distinct colors may agree on a pair (multiple edges),
    never on a single vertex (loops).
    """

    matchings: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.matchings) != 4:
            raise ValueError("a 4-colored graph needs exactly 4 matchings")
        n = len(self.matchings[0])
        if n < 2 or n % 2:
            raise ValueError("vertex count must be even and positive")
        for c, m in enumerate(self.matchings):
            if len(m) != n:
                raise ValueError("matchings disagree on the vertex count")
            for v, u in enumerate(m):
                if not 0 <= u < n or u == v or m[u] != v:
                    raise ValueError(
                        f"color {c} is not a fixed-point-free involution"
                    )
        if len(_reach(self.matchings, 0)) != n:
            raise ValueError("the union of the matchings must be connected")

    @classmethod
    def from_matchings(cls, matchings: Sequence[Sequence[int]]) -> "ColoredGraph":
        return cls(tuple(tuple(m) for m in matchings))

    @property
    def order(self) -> int:
        return len(self.matchings[0])

    def neighbor(self, v: int, color: int) -> int:
        return self.matchings[color][v]

    def degree_colors(self, u: int, v: int) -> tuple[int, ...]:
        """Colors of the edges joining ``u`` and ``v``."""
        return tuple(c for c in COLORS if self.matchings[c][u] == v)


@dataclass(frozen=True)
class Residue:
    """One connected component of the subgraph spanned by a color set."""

    colors: frozenset[int]
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))


@dataclass(frozen=True)
class SurfaceType:
    """A closed surface, by orientability and genus.

    ``genus`` is the orientable genus when ``orientable`` (Euler
    characteristic ``2 - 2*genus``) and the non-orientable genus
    otherwise (``2 - genus``).
    """

    orientable: bool
    genus: int

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    @property
    def is_sphere(self) -> bool:
        return self.orientable and self.genus == 0

    @property
    def is_torus(self) -> bool:
        return self.orientable and self.genus == 1

    @classmethod
    def from_euler(cls, orientable: bool, chi: int) -> "SurfaceType":
        if orientable:
            if chi % 2 or chi > 2:
                raise ValueError(f"no orientable surface has chi = {chi}")
            return cls(True, (2 - chi) // 2)
        if chi > 1:
            raise ValueError(f"no non-orientable surface has chi = {chi}")
        return cls(False, 2 - chi)

    def __str__(self):
        if self.is_sphere:
            return "S^2"
        if self.orientable:
            return f"T_{self.genus}" if self.genus > 1 else "T^2"
        return f"N_{self.genus}"


@dataclass(frozen=True)
class BoundaryProfile:
    """The multiset of surfaces bounding the associated manifold,
    one per singular 3-residue."""

    components: tuple[SurfaceType, ...]

    def __post_init__(self):
        ordered = tuple(
            sorted(self.components, key=lambda s: (not s.orientable, s.genus))
        )
        object.__setattr__(self, "components", ordered)

    @property
    def is_closed(self) -> bool:
        return not self.components

    @property
    def is_toric(self) -> bool:
        """True when the boundary is non-empty and all components are tori."""
        return bool(self.components) and all(s.is_torus for s in self.components)

    def __len__(self):
        return len(self.components)

    def __str__(self):
        if not self.components:
            return "empty"
        return " + ".join(str(s) for s in self.components)


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group in invariant-factor form:
    Z^rank plus Z/d for each torsion coefficient, with d1 | d2 | ..."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for i, d in enumerate(self.torsion):
            if d < 2:
                raise ValueError("torsion coefficients must be >= 2")
            if i and d % self.torsion[i - 1]:
                raise ValueError("torsion coefficients must form a chain")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def _reach(matchings, start, allowed=None):
    """Vertices reachable from ``start`` along the given matchings,
    optionally restricted to colors in ``allowed``."""
    ms = matchings if allowed is None else [matchings[c] for c in allowed]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for m in ms:
            u = m[v]
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def residues(g: ColoredGraph, colors: Iterable[int]) -> list[Residue]:
    """Connected components of the subgraph spanned by ``colors``.

    Every vertex lies in exactly one returned residue; residues are
    ordered by their smallest vertex.
    """
    colors = frozenset(colors)
    if not colors:
        raise ValueError("the color set must be non-empty")
    if not colors <= set(COLORS):
        raise ValueError(f"colors must be a subset of {set(COLORS)}")
    out = []
    left = set(range(g.order))
    while left:
        s = min(left)
        comp = _reach(g.matchings, s, sorted(colors))
        left -= comp
        out.append(Residue(colors, tuple(sorted(comp))))
    return out


def _bicolored_cycles(g: ColoredGraph, a: int, b: int,
                      within: set[int] | None = None) -> int:
    """Number of {a,b}-colored cycles, optionally only those inside a
    vertex set."""
    ma, mb = g.matchings[a], g.matchings[b]
    seen = set()
    count = 0
    verts = range(g.order) if within is None else sorted(within)
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


def _vertices_bipartite(g: ColoredGraph, vertices: Sequence[int],
                        colors: Sequence[int]) -> bool:
    side = {}
    for s in vertices:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            w = 1 - side[v]
            for c in colors:
                u = g.matchings[c][v]
                if u not in side:
                    side[u] = w
                    stack.append(u)
                elif side[u] != w:
                    return False
    return True


def surface_type(g: ColoredGraph, r: Residue) -> SurfaceType:
    """The closed surface obtained by capping every bicolored cycle of a
    3-residue with a disk.

    With v vertices the residue has e = 3v/2 edges and f = (number of
    bicolored cycles over its three color pairs) disks, so
    chi = v - e + f; the surface is orientable exactly when the residue
    subgraph is bipartite.
    """
    if len(r.colors) != 3:
        raise ValueError("surface types are defined for 3-residues only")
    cols = sorted(r.colors)
    verts = set(r.vertices)
    if verts != _reach(g.matchings, r.vertices[0], cols):
        raise ValueError("the vertex set is not a residue of this graph")
    v = len(verts)
    f = sum(
        _bicolored_cycles(g, a, b, verts)
        for i, a in enumerate(cols)
        for b in cols[i + 1:]
    )
    chi = v - (3 * v) // 2 + f
    return SurfaceType.from_euler(_vertices_bipartite(g, r.vertices, cols), chi)


def boundary_profile(g: ColoredGraph) -> BoundaryProfile:
    """Surface types of all singular 3-residues, over the four choices of
    missing color.  Empty exactly when the manifold is closed."""
    singular = []
    for c in COLORS:
        for r in residues(g, complement([c])):
            s = surface_type(g, r)
            if not s.is_sphere:
                singular.append(s)
    return BoundaryProfile(tuple(singular))


def is_bipartite(g: ColoredGraph) -> bool:
    """Whether the underlying multigraph admits a proper 2-coloring of
    its vertices (equivalently, the manifold is orientable)."""
    return _vertices_bipartite(g, range(g.order), COLORS)


def g_vector(g: ColoredGraph) -> tuple[int, int, int, int]:
    """For each color c, the number of residues missing c."""
    return tuple(len(residues(g, complement([c]))) for c in COLORS)


def is_contracted(g: ColoredGraph) -> bool:
    """For every color c: a single residue misses c, or every residue
    missing c is singular."""
    for c in COLORS:
        rs = residues(g, complement([c]))
        if len(rs) == 1:
            continue
        if any(surface_type(g, r).is_sphere for r in rs):
            return False
    return True


def _edge_index(g: ColoredGraph) -> dict[tuple[int, int, int], int]:
    """Index the 2p*2 edges as (min endpoint, max endpoint, color)."""
    idx = {}
    for c in COLORS:
        m = g.matchings[c]
        for v in range(g.order):
            u = m[v]
            if v < u:
                idx[(v, u, c)] = len(idx)
    return idx


def _chain_complex(g: ColoredGraph) -> tuple[list[list[int]], list[list[int]]]:
    """Boundary matrices of the 2-complex with one disk per bicolored
    cycle: d1 (vertices x edges) and d2 (edges x disks).

    Edges are oriented from the smaller to the larger endpoint; each disk
    boundary walks its cycle once, signing edges by traversal direction.
    """
    n = g.order
    edges = _edge_index(g)
    d1 = [[0] * len(edges) for _ in range(n)]
    for (v, u, _c), j in edges.items():
        d1[v][j] -= 1
        d1[u][j] += 1
    cols = []
    for a in range(4):
        for b in range(a + 1, 4):
            ma, mb = g.matchings[a], g.matchings[b]
            seen = set()
            for s in range(n):
                if s in seen:
                    continue
                col = [0] * len(edges)
                v = s
                while True:
                    seen.add(v)
                    u = ma[v]
                    col[edges[(min(v, u), max(v, u), a)]] += 1 if v < u else -1
                    v = u
                    u = mb[v]
                    col[edges[(min(v, u), max(v, u), b)]] += 1 if v < u else -1
                    v = u
                    if v == s:
                        break
                cols.append(col)
    d2 = [[col[j] for col in cols] for j in range(len(edges))]
    return d1, d2


def smith_invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, in divisibility
    order.  Exact integer arithmetic throughout."""
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors = []
    t = 0
    while True:
        # locate a pivot of smallest magnitude in the remaining block
        pi = pj = -1
        best = 0
        for i in range(t, rows):
            for j in range(t, cols):
                x = abs(a[i][j])
                if x and (best == 0 or x < best):
                    best, pi, pj = x, i, j
        if pi < 0:
            break
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        clean = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        clean = False
            if clean:
                break
        # the pivot must divide the rest of the block
        piv = a[t][t]
        adjust = False
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % piv:
                    for jj in range(t, cols):
                        a[t][jj] += a[i][jj]
                    adjust = True
                    break
            if adjust:
                break
        if adjust:
            continue
        factors.append(abs(piv))
        t += 1
    return factors


def first_homology(g: ColoredGraph) -> AbelianGroup:
    """Integral first homology of the associated manifold.

    Computed from the 2-complex of the graph (one disk per bicolored
    cycle); filling ordinary residues with balls and thickening singular
    ones attaches cells of dimension >= 3 only, so H1 is unchanged.
    """
    d1, d2 = _chain_complex(g)
    n_edges = len(d1[0]) if d1 else 0
    rank1 = len(smith_invariant_factors(d1))
    f2 = smith_invariant_factors(d2)
    rank = n_edges - rank1 - len(f2)
    torsion = tuple(d for d in f2 if d > 1)
    return AbelianGroup(rank, torsion)
