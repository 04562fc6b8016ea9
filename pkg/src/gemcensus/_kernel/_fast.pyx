# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel: canonical codes and matching-completion searches.

A performance mirror of gemcensus._kernel.pure with byte-identical
results; see that module for the semantics.  Graphs are copied into
fixed C arrays (at most 64 vertices, 26 for code emission), searches and
leaf filters run without touching Python objects, and only surviving
graphs surface as (code, matchings) pairs.
"""

from libc.string cimport memcmp, memcpy

from itertools import permutations as _permutations

BACKEND = "fast"

cdef int MAXN = 64
cdef int MAXCODE = 26  # alphabet size for code letters

# color permutation tables, in itertools order
cdef int PERM4[24][4]
cdef int PERM3[6][3]
_i = 0
for _p in _permutations(range(4)):
    for _j in range(4):
        PERM4[_i][_j] = _p[_j]
    _i += 1
_i = 0
for _p in _permutations(range(3)):
    for _j in range(3):
        PERM3[_i][_j] = _p[_j]
    _i += 1


cdef int _copy_matchings(object matchings, int* ms, int* kk) except -1:
    """Flatten k involution rows into ms (k*n ints); returns n."""
    cdef int k = len(matchings)
    cdef int n = len(matchings[0])
    cdef int c, v, u
    if k < 2 or k > 4:
        raise ValueError("need between 2 and 4 matchings")
    if n > MAXN:
        raise ValueError("graph too large for the compiled kernel")
    for c in range(k):
        row = matchings[c]
        if len(row) != n:
            raise ValueError("matchings disagree on the vertex count")
        for v in range(n):
            u = row[v]
            if u < 0 or u >= n or u == v:
                raise ValueError("not a fixed-point-free involution")
            ms[c * n + v] = u
    for c in range(k):
        for v in range(n):
            if ms[c * n + ms[c * n + v]] != v:
                raise ValueError("not a fixed-point-free involution")
    kk[0] = k
    return n


cdef int _components_c(int* ms, int k, int n, int* comp) noexcept:
    """Component id per vertex (by order of smallest vertex); count."""
    cdef int stack[64]
    cdef int ncomp = 0, top, s, v, u, c
    for v in range(n):
        comp[v] = -1
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = ncomp
        stack[0] = s
        top = 1
        while top:
            top -= 1
            v = stack[top]
            for c in range(k):
                u = ms[c * n + v]
                if comp[u] < 0:
                    comp[u] = ncomp
                    stack[top] = u
                    top += 1
        ncomp += 1
    return ncomp


cdef bint _two_coloring_c(int* ms, int k, int n, int* side) noexcept:
    cdef int stack[64]
    cdef int top, s, v, u, c, w
    for v in range(n):
        side[v] = -1
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack[0] = s
        top = 1
        while top:
            top -= 1
            v = stack[top]
            w = 1 - side[v]
            for c in range(k):
                u = ms[c * n + v]
                if side[u] < 0:
                    side[u] = w
                    stack[top] = u
                    top += 1
                elif side[u] != w:
                    return False
    return True


cdef int _pair_cycles_c(int* ma, int* mb, int n, int* cyc, int* reps) noexcept:
    """Cycle ids for the union of two matchings; reps get the minimal
    vertex of each cycle; returns the cycle count."""
    cdef int ncyc = 0, s, v, u
    for v in range(n):
        cyc[v] = -1
    for s in range(n):
        if cyc[s] >= 0:
            continue
        reps[ncyc] = s
        v = s
        while True:
            cyc[v] = ncyc
            u = ma[v]
            cyc[u] = ncyc
            v = mb[u]
            if v == s:
                break
        ncyc += 1
    return ncyc


cdef int _canon_bip_c(int* ms, int k, int n, char* best) except -1:
    """Uppercase row-format canonical code of a connected bipartite
    graph; writes the code into best and returns its length."""
    cdef int p = n // 2
    cdef int codelen = (k - 1) * p
    cdef int label[64]
    cdef int bverts[32]
    cdef char cand[96]
    cdef int nperm = 24 if k == 4 else 6
    cdef int* sig
    cdef int* m0
    cdef int* mc
    cdef int pi, s, v, b, w, nb, qi, ci, i, pos
    cdef bint have = False
    if p > MAXCODE:
        raise ValueError("graph too large for the letter code format")
    for pi in range(nperm):
        if k == 4:
            sig = &PERM4[pi][0]
        else:
            sig = &PERM3[pi][0]
        m0 = ms + sig[0] * n
        for s in range(n):
            for v in range(n):
                label[v] = -1
            bverts[0] = s
            label[s] = 0
            label[m0[s]] = 0
            nb = 1
            qi = 0
            while qi < nb:
                b = bverts[qi]
                qi += 1
                for ci in range(1, k):
                    w = ms[sig[ci] * n + b]
                    if label[w] < 0:
                        label[w] = nb
                        label[m0[w]] = nb
                        bverts[nb] = m0[w]
                        nb += 1
            if nb != p:
                raise ValueError("graph is not connected")
            pos = 0
            for ci in range(1, k):
                mc = ms + sig[ci] * n
                for i in range(p):
                    cand[pos] = 65 + label[mc[bverts[i]]]
                    pos += 1
            if not have or memcmp(cand, best, codelen) < 0:
                memcpy(best, cand, codelen)
                have = True
    return codelen


cdef int _canon_inv_comp_c(int* ms, int k, int n, int* sig,
                           int* verts, int csize, char* best) except -1:
    """Lowercase involution-format code of one component under a fixed
    color permutation, minimized over roots; returns the length."""
    cdef int label[64]
    cdef int order[64]
    cdef char cand[256]
    cdef int codelen = k * csize
    cdef int si, s, v, u, no, qi, ci, i, pos
    cdef bint have = False
    if csize > MAXCODE:
        raise ValueError("graph too large for the letter code format")
    for si in range(csize):
        s = verts[si]
        for i in range(csize):
            label[verts[i]] = -1
        order[0] = s
        label[s] = 0
        no = 1
        qi = 0
        while qi < no:
            v = order[qi]
            qi += 1
            for ci in range(k):
                u = ms[sig[ci] * n + v]
                if label[u] < 0:
                    label[u] = no
                    order[no] = u
                    no += 1
        pos = 0
        for ci in range(k):
            for i in range(no):
                cand[pos] = 97 + label[ms[sig[ci] * n + order[i]]]
                pos += 1
        if not have or memcmp(cand, best, codelen) < 0:
            memcpy(best, cand, codelen)
            have = True
    return codelen


cdef object _canon_from_arrays(int* ms, int k, int n):
    """Canonical code string; dispatches between the two formats."""
    cdef int comp[64]
    cdef int side[64]
    cdef int verts[64]
    cdef char buf[256]
    cdef char comp_best[256]
    cdef int ncomp = _components_c(ms, k, n, comp)
    cdef int nperm, pi, ci, csize, length
    cdef int* sig
    if k == 4 and ncomp == 1 and _two_coloring_c(ms, k, n, side):
        length = _canon_bip_c(ms, k, n, buf)
        return buf[:length].decode("ascii")
    if n > MAXCODE:
        raise ValueError("graph too large for the letter code format")
    nperm = 24 if k == 4 else 6
    best = None
    if ncomp == 1:
        for ci in range(n):
            verts[ci] = ci
        for pi in range(nperm):
            if k == 4:
                sig = &PERM4[pi][0]
            else:
                sig = &PERM3[pi][0]
            length = _canon_inv_comp_c(ms, k, n, sig, verts, n, buf)
            cand = buf[:length]
            if best is None or cand < best:
                best = cand
        return best.decode("ascii")
    for pi in range(nperm):
        if k == 4:
            sig = &PERM4[pi][0]
        else:
            sig = &PERM3[pi][0]
        parts = []
        for ci in range(ncomp):
            csize = 0
            for v in range(n):
                if comp[v] == ci:
                    verts[csize] = v
                    csize += 1
            length = _canon_inv_comp_c(ms, k, n, sig, verts, csize, comp_best)
            parts.append(comp_best[:length])
        parts.sort()
        cand = b".".join(parts)
        if best is None or cand < best:
            best = cand
    return best.decode("ascii")


def canonical_code(matchings):
    """Canonical code of an edge-colored graph; see the pure kernel."""
    cdef int ms[256]
    cdef int k
    cdef int n = _copy_matchings(matchings, ms, &k)
    return _canon_from_arrays(ms, k, n)


cdef class _ParityDSU:
    """Union-find with parity and O(1) undo (no path compression)."""
    cdef int parent[64]
    cdef int rank[64]
    cdef int par[64]
    cdef int trail_rb[40]
    cdef int trail_ra[40]
    cdef int trail_gr[40]
    cdef int ntrail

    cdef void reset(self, int size) noexcept:
        cdef int i
        for i in range(size):
            self.parent[i] = i
            self.rank[i] = 0
            self.par[i] = 0
        self.ntrail = 0

    cdef bint union_(self, int a, int b, int rel) noexcept:
        cdef int ra = a, rb = b, xa = 0, xb = 0, t
        while self.parent[ra] != ra:
            xa ^= self.par[ra]
            ra = self.parent[ra]
        while self.parent[rb] != rb:
            xb ^= self.par[rb]
            rb = self.parent[rb]
        if ra == rb:
            self.trail_rb[self.ntrail] = -1
            self.ntrail += 1
            return (xa ^ xb) == rel
        if self.rank[ra] < self.rank[rb]:
            t = ra; ra = rb; rb = t
            t = xa; xa = xb; xb = t
        self.parent[rb] = ra
        self.par[rb] = xa ^ xb ^ rel
        self.trail_rb[self.ntrail] = rb
        self.trail_ra[self.ntrail] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
            self.trail_gr[self.ntrail] = 1
        else:
            self.trail_gr[self.ntrail] = 0
        self.ntrail += 1
        return True

    cdef void undo(self) noexcept:
        self.ntrail -= 1
        cdef int rb = self.trail_rb[self.ntrail]
        if rb < 0:
            return
        self.parent[rb] = rb
        self.par[rb] = 0
        if self.trail_gr[self.ntrail]:
            self.rank[self.trail_ra[self.ntrail]] -= 1


cdef class _SurfSearch:
    """Backtracking completion of the third matching over a cycle base."""
    cdef int n
    cdef bint bipartite_only, torus_only, connected_only, use_parity
    cdef int ms[192]            # rows 0,1 fixed, row 2 the search state
    cdef int cyc01[64]
    cdef int pos[64]
    cdef _ParityDSU dsu
    cdef dict out

    def __cinit__(self):
        self.dsu = _ParityDSU()

    cdef void setup(self, int n) noexcept:
        cdef int reps[64]
        cdef int v, s, x
        cdef bint use0
        cdef int ncyc = _pair_cycles_c(self.ms, self.ms + n, n,
                                       self.cyc01, reps)
        for v in range(n):
            self.pos[v] = -1
        for s in range(ncyc):
            v = reps[s]
            x = 0
            use0 = True
            while self.pos[v] < 0:
                self.pos[v] = x
                v = self.ms[v] if use0 else self.ms[n + v]
                use0 = not use0
                x ^= 1
        self.dsu.reset(ncyc)

    cdef void leaf(self):
        cdef int n = self.n
        cdef int comp[64]
        cdef int sizes[64]
        cdef int f[64]
        cdef int cyc[64]
        cdef int reps[64]
        cdef int ncomp = _components_c(self.ms, 3, n, comp)
        cdef int i, a, b, ncyc, chi
        if self.connected_only and ncomp > 1:
            return
        for i in range(ncomp):
            sizes[i] = 0
            f[i] = 0
        for i in range(n):
            sizes[comp[i]] += 1
        for a in range(3):
            for b in range(a + 1, 3):
                ncyc = _pair_cycles_c(self.ms + a * n, self.ms + b * n,
                                      n, cyc, reps)
                for i in range(ncyc):
                    f[comp[reps[i]]] += 1
        for i in range(ncomp):
            chi = sizes[i] - (3 * sizes[i]) // 2 + f[i]
            if chi == 2:
                return
            if self.torus_only and chi != 0:
                return
        code = _canon_from_arrays(self.ms, 3, n)
        if code not in self.out:
            m0 = tuple([self.ms[i] for i in range(n)])
            m1 = tuple([self.ms[n + i] for i in range(n)])
            m2 = tuple([self.ms[2 * n + i] for i in range(n)])
            self.out[code] = (m0, m1, m2)

    cdef void extend(self, int start):
        cdef int n = self.n
        cdef int* m2 = self.ms + 2 * n
        cdef int u = start, v
        while u < n and m2[u] >= 0:
            u += 1
        if u == n:
            self.leaf()
            return
        for v in range(u + 1, n):
            if m2[v] >= 0:
                continue
            if self.ms[u] == v and self.ms[n + u] == v:
                continue  # triple edge: sphere component
            if self.use_parity:
                if not self.dsu.union_(self.cyc01[u], self.cyc01[v],
                                       self.pos[u] ^ self.pos[v] ^ 1):
                    self.dsu.undo()
                    continue
            m2[u] = v
            m2[v] = u
            self.extend(u + 1)
            m2[u] = -1
            m2[v] = -1
            if self.use_parity:
                self.dsu.undo()

    cdef dict run(self, object m0, object m1, bint bipartite_only,
                  bint torus_only, bint connected_only):
        cdef int n = len(m0)
        cdef int v
        if n > MAXN:
            raise ValueError("graph too large for the compiled kernel")
        self.n = n
        self.bipartite_only = bipartite_only
        self.torus_only = torus_only
        self.connected_only = connected_only
        self.use_parity = bipartite_only or torus_only
        for v in range(n):
            self.ms[v] = m0[v]
            self.ms[n + v] = m1[v]
            self.ms[2 * n + v] = -1
        self.setup(n)
        self.out = {}
        self.extend(0)
        return self.out


def complete_surfaces(m0, m1, bipartite_only=False, torus_only=False,
                      connected_only=False):
    """See gemcensus._kernel.pure.complete_surfaces."""
    cdef _SurfSearch s = _SurfSearch()
    return s.run(m0, m1, bipartite_only, torus_only, connected_only)


cdef class _GemSearch:
    """Backtracking completion of the fourth matching over a surface base."""
    cdef int n, want_bip, boundary_mode
    cdef bint graph_bip_known          # base spans one side assignment
    cdef int ms[256]                   # rows 0..2 base, row 3 search state
    cdef int comp3[64]
    cdef int side3[64]
    cdef int cyc[3][64]                # cycle ids of the pair missing color c
    cdef int creps[3][64]
    cdef int ncyc[3]
    cdef unsigned char allowed[64][64]
    cdef int dig_u[96]
    cdef int dig_v[96]
    cdef int dig_c[96]
    cdef int ndig
    cdef _ParityDSU dsu
    cdef dict out

    def __cinit__(self):
        self.dsu = _ParityDSU()

    cdef bint on_same_new_cycle(self, int u, int v, int c) noexcept:
        cdef int* mc = self.ms + c * self.n
        cdef int* m3 = self.ms + 3 * self.n
        cdef int w = u, x
        while True:
            x = mc[w]
            if x == v:
                return True
            w = m3[x]
            if w == v:
                return True
            if w == u:
                return False

    cdef void leaf(self):
        cdef int n = self.n
        cdef int* m3 = self.ms + 3 * n
        cdef int stack[64]
        cdef int resid[64]
        cdef int rsizes[32]
        cdef int f[32]
        cdef int side[64]
        cdef unsigned char seen[64]
        cdef int i, c, a, b, s, v, u, w, top, g, size, chi, ordinary
        cdef bint bip
        # connectivity of the full 4-colored graph
        for i in range(n):
            seen[i] = 0
        seen[0] = 1
        stack[0] = 0
        top = 1
        i = 1
        while top:
            top -= 1
            v = stack[top]
            for c in range(4):
                u = self.ms[c * n + v]
                if not seen[u]:
                    seen[u] = 1
                    i += 1
                    stack[top] = u
                    top += 1
        if i != n:
            return
        if self.want_bip == 1:
            bip = True
        else:
            bip = _two_coloring_c(self.ms, 4, n, side)
            if self.want_bip == 0 and bip:
                return
        # contractedness (and the boundary class) color by color
        for c in range(3):
            a = 1 if c == 0 else 0
            b = 1 if c == 2 else 2
            # residues missing color c: colors a, b, 3
            for i in range(n):
                resid[i] = -1
            g = 0
            for s in range(n):
                if resid[s] >= 0:
                    continue
                resid[s] = g
                stack[0] = s
                top = 1
                size = 1
                while top:
                    top -= 1
                    v = stack[top]
                    u = self.ms[a * n + v]
                    if resid[u] < 0:
                        resid[u] = g
                        size += 1
                        stack[top] = u
                        top += 1
                    u = self.ms[b * n + v]
                    if resid[u] < 0:
                        resid[u] = g
                        size += 1
                        stack[top] = u
                        top += 1
                    u = m3[v]
                    if resid[u] < 0:
                        resid[u] = g
                        size += 1
                        stack[top] = u
                        top += 1
                rsizes[g] = size
                g += 1
            for i in range(g):
                f[i] = 0
            for i in range(self.ncyc[c]):
                f[resid[self.creps[c][i]]] += 1
            for i in range(n):
                seen[i] = 0
            for s in range(n):
                if seen[s]:
                    continue
                f[resid[s]] += 1
                v = s
                while not seen[v]:
                    seen[v] = 1
                    u = self.ms[a * n + v]
                    seen[u] = 1
                    v = m3[u]
            for i in range(n):
                seen[i] = 0
            for s in range(n):
                if seen[s]:
                    continue
                f[resid[s]] += 1
                v = s
                while not seen[v]:
                    seen[v] = 1
                    u = self.ms[b * n + v]
                    seen[u] = 1
                    v = m3[u]
            ordinary = 0
            for i in range(g):
                chi = rsizes[i] - (3 * rsizes[i]) // 2 + f[i]
                if chi == 2:
                    ordinary += 1
                elif self.boundary_mode == 2:
                    return
                elif self.boundary_mode == 1:
                    if chi != 0:
                        return
                    if not bip and not self.residue_bipartite(a, b, resid, i):
                        return
            if ordinary and g > 1:
                return
            if self.boundary_mode == 2 and g > 1:
                return
        for i in range(self.ndig):
            if not self.on_same_new_cycle(self.dig_u[i], self.dig_v[i],
                                          self.dig_c[i]):
                return
        code = _canon_from_arrays(self.ms, 4, n)
        if code not in self.out:
            rows = []
            for c in range(4):
                rows.append(tuple([self.ms[c * n + i] for i in range(n)]))
            self.out[code] = tuple(rows)

    cdef bint residue_bipartite(self, int a, int b, int* resid, int r) noexcept:
        cdef int n = self.n
        cdef int side[64]
        cdef int stack[64]
        cdef int s, v, u, w, top, c
        cdef int cols[3]
        cols[0] = a
        cols[1] = b
        cols[2] = 3
        for v in range(n):
            side[v] = -1
        for s in range(n):
            if resid[s] != r or side[s] >= 0:
                continue
            side[s] = 0
            stack[0] = s
            top = 1
            while top:
                top -= 1
                v = stack[top]
                w = 1 - side[v]
                for c in range(3):
                    u = self.ms[cols[c] * self.n + v]
                    if side[u] < 0:
                        side[u] = w
                        stack[top] = u
                        top += 1
                    elif side[u] != w:
                        return False
        return True

    cdef void extend(self, int start):
        cdef int n = self.n
        cdef int* m3 = self.ms + 3 * n
        cdef int u = start, v
        while u < n and m3[u] >= 0:
            u += 1
        if u == n:
            self.leaf()
            return
        for v in range(u + 1, n):
            if m3[v] >= 0 or not self.allowed[u][v]:
                continue
            if self.want_bip == 1:
                if not self.dsu.union_(self.comp3[u], self.comp3[v],
                                       self.side3[u] ^ self.side3[v] ^ 1):
                    self.dsu.undo()
                    continue
            m3[u] = v
            m3[v] = u
            self.extend(u + 1)
            m3[u] = -1
            m3[v] = -1
            if self.want_bip == 1:
                self.dsu.undo()

    cdef dict run(self, object m0, object m1, object m2, int want_bip,
                  int boundary_mode):
        cdef int n = len(m0)
        cdef int comp[64]
        cdef int sizes[64]
        cdef int f[64]
        cdef int c, a, b, i, v, u, ncols, ncomp, chi
        cdef bint all_tori
        if n > MAXN:
            raise ValueError("graph too large for the compiled kernel")
        self.n = n
        self.want_bip = want_bip
        self.boundary_mode = boundary_mode
        for v in range(n):
            self.ms[v] = m0[v]
            self.ms[n + v] = m1[v]
            self.ms[2 * n + v] = m2[v]
            self.ms[3 * n + v] = -1
        # base components and their Euler characteristics
        ncomp = _components_c(self.ms, 3, n, comp)
        for i in range(ncomp):
            sizes[i] = 0
            f[i] = 0
        for v in range(n):
            sizes[comp[v]] += 1
            self.comp3[v] = comp[v]
        for c in range(3):
            a = 1 if c == 0 else 0
            b = 1 if c == 2 else 2
            self.ncyc[c] = _pair_cycles_c(self.ms + a * n, self.ms + b * n,
                                          n, self.cyc[c], self.creps[c])
            for i in range(self.ncyc[c]):
                f[comp[self.creps[c][i]]] += 1
        all_tori = True
        for i in range(ncomp):
            chi = sizes[i] - (3 * sizes[i]) // 2 + f[i]
            if chi >= 2:
                raise ValueError("base component of non-positive genus")
            if chi != 0:
                all_tori = False
        cdef bint base_bip = _two_coloring_c(self.ms, 3, n, self.side3)
        if want_bip == 1 and not base_bip:
            return {}
        if boundary_mode:
            if not all_tori or not base_bip:
                return {}
            if boundary_mode == 2 and ncomp > 1:
                return {}
        # static edge admissibility
        self.ndig = 0
        for u in range(n):
            for v in range(n):
                self.allowed[u][v] = 0
        for u in range(n):
            for v in range(u + 1, n):
                ncols = 0
                c = -1
                for a in range(3):
                    if self.ms[a * n + u] == v:
                        ncols += 1
                        c = a
                if ncols >= 2:
                    if ncols == 2:
                        for a in range(3):
                            if self.ms[a * n + u] != v:
                                self.dig_u[self.ndig] = u
                                self.dig_v[self.ndig] = v
                                self.dig_c[self.ndig] = a
                                self.ndig += 1
                                break
                    continue
                if ncols == 1:
                    if self.cyc[c][u] != self.cyc[c][v]:
                        continue
                self.allowed[u][v] = 1
        self.dsu.reset(ncomp)
        self.out = {}
        self.extend(0)
        return self.out


def complete_gems(m0, m1, m2, want_bipartite=-1, boundary_mode=0):
    """See gemcensus._kernel.pure.complete_gems."""
    cdef _GemSearch s = _GemSearch()
    return s.run(m0, m1, m2, want_bipartite, boundary_mode)
