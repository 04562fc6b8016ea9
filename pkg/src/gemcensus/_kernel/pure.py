"""Pure-Python kernel: canonical codes and matching-completion searches.

This module is the reference implementation of the three hot operations:

* ``canonical_code`` -- canonical string form of an edge-colored graph,
  used as the isomorphism-class key everywhere;
* ``complete_surfaces`` -- add a third perfect matching to a fixed
  two-colored cycle base, keeping graphs whose components are all
  positive-genus surfaces;
* ``complete_gems`` -- add a fourth perfect matching to a three-colored
  base, keeping connected contracted graphs without 2-dipoles.

``gemcensus._kernel._fast`` is a compiled mirror with byte-identical
output, selected automatically at import when available.

Graphs are passed around as sequences of fixed-point-free involutions on
``0..n-1``, one per color: ``matchings[c][v]`` is the vertex joined to
``v`` by the ``c``-colored edge.
"""

from itertools import permutations

BACKEND = "pure"

_MAX_CODE_ORDER = 26  # one letter per vertex (or per vertex pair)


def _components(matchings, n):
    """Connected components of the union of the matchings, as sorted lists."""
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = [s]
        while stack:
            v = stack.pop()
            for m in matchings:
                u = m[v]
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def _two_coloring(matchings, n):
    """A proper 2-coloring of the vertices, or None if none exists."""
    side = [-1] * n
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            w = 1 - side[v]
            for m in matchings:
                u = m[v]
                if side[u] < 0:
                    side[u] = w
                    stack.append(u)
                elif side[u] != w:
                    return None
    return side


def _canon_bipartite(matchings, n):
    """Minimal row-format code of a connected bipartite graph.

    The emitted string has one row of ``p = n/2`` uppercase letters per
    color beyond the first: vertices are grouped into the ``p`` pairs of
    the first matching, pairs are labeled in discovery order from a root,
    and row ``c`` spells, for pair ``i``, the pair reached from pair
    ``i``'s root-side vertex along the ``c``-colored edge (``A`` = pair 1).
    The code is minimized over all color permutations and all roots.
    """
    k = len(matchings)
    p = n // 2
    best = None
    label = [-1] * n
    for sigma in permutations(range(k)):
        m0 = matchings[sigma[0]]
        rest = [matchings[c] for c in sigma[1:]]
        for s in range(n):
            for i in range(n):
                label[i] = -1
            bverts = [s]
            label[s] = label[m0[s]] = 0
            i = 0
            while i < len(bverts):
                b = bverts[i]
                i += 1
                for m in rest:
                    w = m[b]
                    if label[w] < 0:
                        label[w] = label[m0[w]] = len(bverts)
                        bverts.append(m0[w])
            if len(bverts) != p:
                raise ValueError("graph is not connected")
            code = "".join(
                chr(65 + label[m[b]]) for m in rest for b in bverts
            )
            if best is None or code < best:
                best = code
    return best


def _canon_component(matchings, sigma, comp, n):
    """Minimal involution-table code of one component under a fixed
    color permutation: colors are traversed in ``sigma`` order, vertices
    labeled in discovery order, and each color contributes a row of
    lowercase letters spelling its involution in the new labels."""
    ms = [matchings[c] for c in sigma]
    best = None
    label = [-1] * n
    for s in comp:
        for v in comp:
            label[v] = -1
        order = [s]
        label[s] = 0
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            for m in ms:
                u = m[v]
                if label[u] < 0:
                    label[u] = len(order)
                    order.append(u)
        code = "".join(chr(97 + label[m[v]]) for m in ms for v in order)
        if best is None or code < best:
            best = code
    return best


def canonical_code(matchings):
    """Canonical code of an edge-colored graph given as involution rows.

    Two graphs receive equal codes exactly when some vertex bijection and
    some permutation of the colors maps one onto the other.  A connected
    bipartite 4-colored graph yields the public uppercase row format (the
    catalog interchange format); every other graph yields a
    lowercase involution format, with the codes of separate components
    sorted and joined by ``.``.
    """
    k = len(matchings)
    n = len(matchings[0])
    comps = _components(matchings, n)
    if k == 4 and len(comps) == 1 and _two_coloring(matchings, n) is not None:
        if n > 2 * _MAX_CODE_ORDER:
            raise ValueError("graph too large for the letter code format")
        return _canon_bipartite(matchings, n)
    if n > _MAX_CODE_ORDER:
        raise ValueError("graph too large for the letter code format")
    best = None
    for sigma in permutations(range(k)):
        full = ".".join(
            sorted(_canon_component(matchings, sigma, comp, n) for comp in comps)
        )
        if best is None or full < best:
            best = full
    return best


class _ParityUnion:
    """Union-find over base components carrying a parity bit, with undo.

    ``union(a, b, rel)`` demands ``flip[a] XOR flip[b] == rel`` and
    reports whether the system stays consistent.  No path compression, so
    every merge is undoable in O(1).
    """

    def __init__(self, size):
        self.parent = list(range(size))
        self.rank = [0] * size
        self.par = [0] * size  # parity relative to parent
        self.trail = []

    def find(self, a):
        x = 0
        while self.parent[a] != a:
            x ^= self.par[a]
            a = self.parent[a]
        return a, x

    def union(self, a, b, rel):
        ra, xa = self.find(a)
        rb, xb = self.find(b)
        if ra == rb:
            self.trail.append(None)
            return (xa ^ xb) == rel
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
            xa, xb = xb, xa
        self.parent[rb] = ra
        self.par[rb] = xa ^ xb ^ rel
        grew = 0
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
            grew = 1
        self.trail.append((rb, ra, grew))
        return True

    def undo(self):
        op = self.trail.pop()
        if op is None:
            return
        rb, ra, grew = op
        self.parent[rb] = rb
        self.par[rb] = 0
        if grew:
            self.rank[ra] -= 1


def _pair_cycles(ma, mb, n):
    """Cycle id per vertex for the union of two matchings, plus one
    representative vertex per cycle (its minimum)."""
    cyc = [-1] * n
    reps = []
    for s in range(n):
        if cyc[s] >= 0:
            continue
        cid = len(reps)
        reps.append(s)
        v = s
        while True:
            cyc[v] = cid
            u = ma[v]
            cyc[u] = cid
            v = mb[u]
            if v == s:
                break
    return cyc, reps


def _component_data(matchings, n):
    """Component id per vertex plus, per component, (size, euler, side)
    where ``side`` is a global 2-coloring list or None if some component
    is non-bipartite (then only that component's entry is None).
    """
    k = len(matchings)
    comp = [-1] * n
    sizes = []
    for s in range(n):
        if comp[s] >= 0:
            continue
        cid = len(sizes)
        stack = [s]
        comp[s] = cid
        size = 1
        while stack:
            v = stack.pop()
            for m in matchings:
                u = m[v]
                if comp[u] < 0:
                    comp[u] = cid
                    size += 1
                    stack.append(u)
        sizes.append(size)
    f = [0] * len(sizes)
    for a in range(k):
        for b in range(a + 1, k):
            cyc, reps = _pair_cycles(matchings[a], matchings[b], n)
            for r in reps:
                f[comp[r]] += 1
    euler = [
        sizes[c] - (k * sizes[c]) // 2 + f[c] for c in range(len(sizes))
    ]
    return comp, sizes, euler


def complete_surfaces(m0, m1, bipartite_only=False, torus_only=False,
                      connected_only=False):
    """All ways to add a third matching to the 2-colored base ``(m0, m1)``
    so that every component of the result is a closed surface of positive
    genus.  Results are deduplicated by canonical code within this base.

    Returns a dict mapping canonical code to one representative
    ``(m0, m1, m2)`` triple of involution tuples.
    """
    n = len(m0)
    m0 = list(m0)
    m1 = list(m1)
    # Parity data over the {0,1}-cycles for bipartite pruning: pos[v]
    # alternates along each cycle, cyc01[v] is the cycle id.
    cyc01, reps01 = _pair_cycles(m0, m1, n)
    pos = [-1] * n
    for s in reps01:
        v, x, use0 = s, 0, True
        while pos[v] < 0:
            pos[v] = x
            v = m0[v] if use0 else m1[v]
            use0 = not use0
            x ^= 1

    out = {}
    m2 = [-1] * n
    # All-torus graphs are bipartite, so the parity prune applies there too.
    use_parity = bipartite_only or torus_only
    dsu = _ParityUnion(len(reps01)) if use_parity else None

    def leaf():
        ms = (m0, m1, m2)
        comp, sizes, euler = _component_data(ms, n)
        if connected_only and len(sizes) > 1:
            return
        if any(chi == 2 for chi in euler):
            return
        if torus_only and any(chi != 0 for chi in euler):
            # the parity prune already forces orientability
            return
        code = canonical_code(ms)
        if code not in out:
            out[code] = (tuple(m0), tuple(m1), tuple(m2))

    def extend(start):
        u = start
        while u < n and m2[u] >= 0:
            u += 1
        if u == n:
            leaf()
            return
        for v in range(u + 1, n):
            if m2[v] >= 0:
                continue
            if m0[u] == v and m1[u] == v:
                continue  # triple edge: a sphere component, never wanted
            if dsu is not None:
                if not dsu.union(cyc01[u], cyc01[v], pos[u] ^ pos[v] ^ 1):
                    dsu.undo()
                    continue
            m2[u] = v
            m2[v] = u
            extend(u + 1)
            m2[u] = m2[v] = -1
            if dsu is not None:
                dsu.undo()

    extend(0)
    return out


def complete_gems(m0, m1, m2, want_bipartite=-1, boundary_mode=0):
    """All ways to add a fourth matching to the 3-colored base so that the
    result is a connected contracted 4-colored graph without 2-dipoles.

    Every component of the base must be a positive-genus surface; those
    components become the residues missing the new color, so the result
    always represents a manifold with non-empty boundary.

    want_bipartite: 1 = keep bipartite graphs only, 0 = non-bipartite
    only, -1 = both.  boundary_mode: 0 = any boundary, 1 = all boundary
    components tori, 2 = connected toric boundary.

    Returns a dict mapping canonical code to a representative
    4-tuple of involution tuples.
    """
    n = len(m0)
    base = (list(m0), list(m1), list(m2))
    comp3, sizes3, euler3 = _component_data(base, n)
    if any(chi >= 2 for chi in euler3):
        raise ValueError("base component of non-positive genus")
    side3 = _two_coloring(base, n)
    if want_bipartite == 1 and side3 is None:
        return {}
    if boundary_mode:
        # Base components are always singular; under a toric filter they
        # must all be tori, and a connected toric boundary needs exactly
        # one of them.
        if any(chi != 0 for chi in euler3) or side3 is None:
            return {}
        if boundary_mode == 2 and len(sizes3) > 1:
            return {}

    pair_cycles = {}
    for a in range(3):
        for b in range(a + 1, 3):
            pair_cycles[(a, b)] = _pair_cycles(base[a], base[b], n)

    # Static pruning table for the new edges.  A new edge doubling a base
    # edge of color c makes a 2-dipole unless both endpoints lie on the
    # same cycle of the two remaining base colors; tripling a base digon
    # would create a 2-vertex residue (a sphere), never contracted.
    allowed = [[True] * n for _ in range(n)]
    digons = []
    other = {0: (1, 2), 1: (0, 2), 2: (0, 1)}
    for u in range(n):
        for v in range(u + 1, n):
            cols = [c for c in range(3) if base[c][u] == v]
            if len(cols) >= 2:
                allowed[u][v] = False
                if len(cols) == 2:
                    c = 3 - cols[0] - cols[1]
                    digons.append((u, v, c))
            elif len(cols) == 1:
                a, b = other[cols[0]]
                cyc = pair_cycles[(a, b)][0]
                if cyc[u] != cyc[v]:
                    allowed[u][v] = False

    out = {}
    m3 = [-1] * n
    dsu = _ParityUnion(len(sizes3)) if want_bipartite == 1 else None

    def on_same_new_cycle(u, v, c):
        """Walk the {c,3}-cycle through u looking for v."""
        mc = base[c]
        w = u
        while True:
            x = mc[w]
            if x == v:
                return True
            w = m3[x]
            if w == v:
                return True
            if w == u:
                return False

    def leaf():
        ms = (base[0], base[1], base[2], m3)
        # connectivity
        seen = [False] * n
        stack = [0]
        seen[0] = True
        cnt = 1
        while stack:
            v = stack.pop()
            for m in ms:
                u = m[v]
                if not seen[u]:
                    seen[u] = True
                    cnt += 1
                    stack.append(u)
        if cnt != n:
            return
        if want_bipartite == 1:
            bip = True
        else:
            bip = _two_coloring(ms, n) is not None
            if want_bipartite == 0 and bip:
                return
        # contractedness and boundary class for the three base colors
        for c in range(3):
            a, b = other[c]
            cols = (base[a], base[b], m3)
            resid = [-1] * n
            g = 0
            rsizes = []
            for s in range(n):
                if resid[s] >= 0:
                    continue
                stack = [s]
                resid[s] = g
                size = 1
                while stack:
                    v = stack.pop()
                    for m in cols:
                        u = m[v]
                        if resid[u] < 0:
                            resid[u] = g
                            size += 1
                            stack.append(u)
                g += 1
                rsizes.append(size)
            f = [0] * g
            for r in pair_cycles[(a, b)][1]:
                f[resid[r]] += 1
            for ma, mb in ((base[a], m3), (base[b], m3)):
                seen2 = [False] * n
                for s in range(n):
                    if seen2[s]:
                        continue
                    f[resid[s]] += 1
                    v = s
                    while not seen2[v]:
                        seen2[v] = True
                        seen2[ma[v]] = True
                        v = mb[ma[v]]
            ordinary = 0
            for r in range(g):
                chi = rsizes[r] - (3 * rsizes[r]) // 2 + f[r]
                if chi == 2:
                    ordinary += 1
                elif boundary_mode == 2:
                    return  # extra singular residue: boundary not connected
                elif boundary_mode == 1:
                    if chi != 0:
                        return
                    if not bip and not _residue_bipartite(cols, resid, r, n):
                        return
            if ordinary and g > 1:
                return  # not contracted for color c
            if boundary_mode == 2 and g > 1:
                return
        for u, v, c in digons:
            if not on_same_new_cycle(u, v, c):
                return  # the base digon became a 2-dipole
        code = canonical_code(ms)
        if code not in out:
            out[code] = (tuple(base[0]), tuple(base[1]), tuple(base[2]),
                         tuple(m3))

    def extend(start):
        u = start
        while u < n and m3[u] >= 0:
            u += 1
        if u == n:
            leaf()
            return
        row = allowed[u]
        for v in range(u + 1, n):
            if m3[v] >= 0 or not row[v]:
                continue
            if dsu is not None:
                if not dsu.union(comp3[u], comp3[v],
                                 side3[u] ^ side3[v] ^ 1):
                    dsu.undo()
                    continue
            m3[u] = v
            m3[v] = u
            extend(u + 1)
            m3[u] = m3[v] = -1
            if dsu is not None:
                dsu.undo()

    extend(0)
    return out


def _residue_bipartite(cols, resid, r, n):
    """2-colorability of the subgraph spanned by ``cols`` on residue r."""
    side = [-1] * n
    for s in range(n):
        if resid[s] != r or side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            w = 1 - side[v]
            for m in cols:
                u = m[v]
                if side[u] < 0:
                    side[u] = w
                    stack.append(u)
                elif side[u] != w:
                    return False
    return True
