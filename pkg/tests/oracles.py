"""Independent reference implementations used as test oracles.

Everything here recomputes invariants from first principles (networkx
for graph structure, sympy for exact linear algebra, exhaustive search
for isomorphism) without touching the library's own traversal or Smith
normal form code paths.
"""

from __future__ import annotations

import itertools

import networkx as nx
import sympy
from sympy.matrices.normalforms import smith_normal_form

COLORS = (0, 1, 2, 3)


def multigraph(matchings) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(len(matchings[0])))
    for c, m in enumerate(matchings):
        for v, u in enumerate(m):
            if v < u:
                g.add_edge(v, u, color=c)
    return g


def subgraph_components(matchings, colors) -> list[set[int]]:
    g = nx.MultiGraph()
    g.add_nodes_from(range(len(matchings[0])))
    for c in colors:
        for v, u in enumerate(matchings[c]):
            if v < u:
                g.add_edge(v, u)
    return [set(comp) for comp in nx.connected_components(g)]


def bicolored_cycle_count(matchings, a, b, within=None) -> int:
    comps = subgraph_components(matchings, (a, b))
    if within is None:
        return len(comps)
    return sum(1 for comp in comps if comp <= within)


def component_surface(matchings, verts) -> tuple[int, bool]:
    """(euler characteristic, orientable) of one capped surface
    component; ``matchings`` holds exactly the three spanning colors."""
    assert len(matchings) == 3
    v = len(verts)
    e = 3 * v // 2
    f = sum(
        bicolored_cycle_count(matchings, a, b, within=set(verts))
        for a, b in itertools.combinations(range(3), 2)
    )
    sub = nx.MultiGraph()
    sub.add_nodes_from(verts)
    for c in range(3):
        for x in verts:
            y = matchings[c][x]
            if x < y:
                sub.add_edge(x, y)
    return v - e + f, nx.is_bipartite(nx.Graph(sub))


def boundary_surfaces(matchings) -> list[tuple[int, bool]]:
    """(chi, orientable) of every singular 3-residue, sorted."""
    out = []
    for missing in range(4):
        cols = [c for c in range(4) if c != missing]
        sub = [matchings[c] for c in cols]
        for comp in subgraph_components(matchings, cols):
            chi, orientable = component_surface(sub, sorted(comp))
            if chi != 2:
                out.append((chi, orientable))
    return sorted(out)


def is_bipartite(matchings) -> bool:
    return nx.is_bipartite(nx.Graph(multigraph(matchings)))


def is_connected(matchings) -> bool:
    return nx.is_connected(nx.Graph(multigraph(matchings)))


def is_contracted(matchings) -> bool:
    for missing in range(4):
        cols = [c for c in range(4) if c != missing]
        comps = subgraph_components(matchings, cols)
        if len(comps) == 1:
            continue
        sub = [matchings[c] for c in cols]
        if any(component_surface(sub, sorted(c))[0] == 2 for c in comps):
            return False
    return True


def has_two_dipole(matchings) -> bool:
    n = len(matchings[0])
    for v in range(n):
        for u in range(v + 1, n):
            cols = [c for c in range(4) if matchings[c][v] == u]
            if len(cols) != 2:
                continue
            rest = [c for c in range(4) if c not in cols]
            comps = subgraph_components(matchings, rest)
            if not any(v in comp and u in comp for comp in comps):
                return True
    return False


def homology(matchings) -> tuple[int, tuple[int, ...]]:
    """(rank, torsion) of H1 of the disk-capped 2-complex, via sympy."""
    n = len(matchings[0])
    edges = {}
    for c, m in enumerate(matchings):
        for v, u in enumerate(m):
            if v < u:
                edges[(v, u, c)] = len(edges)
    d1 = sympy.zeros(n, len(edges))
    for (v, u, c), j in edges.items():
        d1[v, j] -= 1
        d1[u, j] += 1
    cols = []
    k = len(matchings)
    for a, b in itertools.combinations(range(k), 2):
        seen = set()
        for s in range(n):
            if s in seen:
                continue
            col = sympy.zeros(len(edges), 1)
            v = s
            while True:
                seen.add(v)
                u = matchings[a][v]
                col[edges[(min(v, u), max(v, u), a)], 0] += 1 if v < u else -1
                v = u
                u = matchings[b][v]
                col[edges[(min(v, u), max(v, u), b)], 0] += 1 if v < u else -1
                v = u
                if v == s:
                    break
            cols.append(col)
    d2 = sympy.Matrix.hstack(*cols)
    rank1 = d1.rank()
    snf = smith_normal_form(d2)
    diag = [snf[i, i] for i in range(min(snf.shape))]
    nonzero = [abs(d) for d in diag if d != 0]
    rank = len(edges) - rank1 - len(nonzero)
    torsion = tuple(int(d) for d in sorted(nonzero) if d > 1)
    return rank, torsion


def brute_iso(ma, mb) -> bool:
    """Exhaustive colored-graph isomorphism for connected graphs: every
    color permutation, every image of vertex 0, forced propagation."""
    n = len(ma[0])
    if len(mb[0]) != n:
        return False
    for sigma in itertools.permutations(range(4)):
        hm = [mb[sigma[c]] for c in range(4)]
        for w0 in range(n):
            phi = [-1] * n
            phi[0] = w0
            stack = [0]
            ok = True
            while stack and ok:
                v = stack.pop()
                for c in range(4):
                    u = ma[c][v]
                    img = hm[c][phi[v]]
                    if phi[u] == -1:
                        phi[u] = img
                        stack.append(u)
                    elif phi[u] != img:
                        ok = False
                        break
            if ok and len(set(phi)) == n:
                return True
    return False


def perfect_matchings(n) -> list[tuple[int, ...]]:
    """All fixed-point-free involutions on 0..n-1."""
    out = []

    def rec(assigned):
        free = [v for v in range(n) if assigned[v] < 0]
        if not free:
            out.append(tuple(assigned))
            return
        v = free[0]
        for u in free[1:]:
            assigned[v] = u
            assigned[u] = v
            rec(assigned)
            assigned[v] = -1
            assigned[u] = -1
    rec([-1] * n)
    return out


def naive_census(order) -> list[tuple[tuple[int, ...], ...]]:
    """The census by sheer enumeration: all multisets of four perfect
    matchings, filtered by the definitions, deduplicated by brute-force
    isomorphism.  Returns one representative per class."""
    pms = perfect_matchings(order)
    survivors = []
    for combo in itertools.combinations_with_replacement(range(len(pms)), 4):
        ms = tuple(pms[i] for i in combo)
        if not is_connected(ms):
            continue
        if not is_contracted(ms):
            continue
        if has_two_dipole(ms):
            continue
        if not boundary_surfaces(ms):
            continue
        survivors.append(ms)
    reps: list[tuple[tuple[int, ...], ...]] = []
    for ms in survivors:
        if not any(brute_iso(ms, rep) for rep in reps):
            reps.append(ms)
    return reps


def relabel(matchings, perm) -> tuple[tuple[int, ...], ...]:
    """Apply the vertex bijection v -> perm[v]."""
    n = len(matchings[0])
    out = []
    for m in matchings:
        row = [0] * n
        for v in range(n):
            row[perm[v]] = perm[m[v]]
        out.append(tuple(row))
    return tuple(out)


def recolor(matchings, sigma) -> tuple[tuple[int, ...], ...]:
    """New color i carries what old color sigma[i] carried."""
    return tuple(tuple(matchings[sigma[i]]) for i in range(len(matchings)))


def cross_join(ma, mb, color, ea, eb):
    """Join two disjoint graphs by crossing a ``color``-edge of each:
    replace edges ea = (a1, b1) and eb = (a2, b2) by (a1, b2') and
    (a2', b1).  This is the inverse of a splitting rho-pair switch."""
    n1 = len(ma[0])
    out = [list(x) + [v + n1 for v in y] for x, y in zip(ma, mb)]
    a1, b1 = ea
    a2, b2 = (v + n1 for v in eb)
    m = out[color]
    assert m[a1] == b1 and m[a2] == b2
    m[a1], m[b2] = b2, a1
    m[a2], m[b1] = b1, a2
    return tuple(tuple(row) for row in out)


def random_graph(rng, order, bipartite=False, tries=1000):
    """A random connected 4-colored graph, optionally bipartite."""
    p = order // 2
    for _ in range(tries):
        ms = []
        if bipartite:
            for _c in range(4):
                perm = list(range(p))
                rng.shuffle(perm)
                row = [0] * order
                for i in range(p):
                    row[i] = p + perm[i]
                    row[p + perm[i]] = i
                ms.append(tuple(row))
        else:
            for _c in range(4):
                verts = list(range(order))
                rng.shuffle(verts)
                row = [0] * order
                for i in range(0, order, 2):
                    row[verts[i]] = verts[i + 1]
                    row[verts[i + 1]] = verts[i]
                ms.append(tuple(row))
        if is_connected(ms):
            return tuple(ms)
    raise RuntimeError("no connected sample found")
