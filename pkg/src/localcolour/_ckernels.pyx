# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the kernels in ``_pykernels``.  Same signatures,
same results; see that module for the contracts."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

BACKEND = "cython"

DEF MAXD = 12          # max rows / columns
DEF MAXE = 144         # MAXD * MAXD
DEF MAXC = 160         # max distinct colour values


def ham_path_ends(adj, int n):
    if n > 26:
        raise ValueError("ham_path_ends: n too large")
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef unsigned int *ends = <unsigned int *> malloc(size * sizeof(unsigned int))
    cdef unsigned int A[32]
    cdef Py_ssize_t mask
    cdef unsigned int m, b, out
    cdef int v
    if ends == NULL:
        raise MemoryError()
    try:
        for v in range(n):
            A[v] = <unsigned int> adj[v]
        ends[0] = 0
        for mask in range(1, size):
            if not (mask & (mask - 1)):
                ends[mask] = <unsigned int> mask
                continue
            out = 0
            m = <unsigned int> mask
            while m:
                b = m & (~m + 1)
                m ^= b
                v = __builtin_ctz(b)
                if ends[mask ^ b] & A[v]:
                    out |= b
            ends[mask] = out
        return [ends[mask] for mask in range(size)]
    finally:
        free(ends)


cdef extern from *:
    int __builtin_ctz(unsigned int x) nogil
    int __builtin_popcount(unsigned int x) nogil


def ham_cycle_flags(adj, int n):
    if n > 26:
        raise ValueError("ham_cycle_flags: n too large")
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef unsigned int *paths = <unsigned int *> malloc(size * sizeof(unsigned int))
    cdef unsigned char *flags = <unsigned char *> malloc(size)
    cdef unsigned int A[32]
    cdef Py_ssize_t mask
    cdef unsigned int m, b, out, low
    cdef int v
    if paths == NULL or flags == NULL:
        free(paths)
        free(flags)
        raise MemoryError()
    try:
        for v in range(n):
            A[v] = <unsigned int> adj[v]
        memset(flags, 0, size)
        paths[0] = 0
        for mask in range(1, size):
            if not (mask & (mask - 1)):
                paths[mask] = <unsigned int> mask
                continue
            low = (<unsigned int> mask) & (~(<unsigned int> mask) + 1)
            out = 0
            m = (<unsigned int> mask) ^ low
            while m:
                b = m & (~m + 1)
                m ^= b
                v = __builtin_ctz(b)
                if paths[mask ^ b] & A[v]:
                    out |= b
            paths[mask] = out
            if out and __builtin_popcount(<unsigned int> mask) >= 3:
                if out & A[__builtin_ctz(low)]:
                    flags[mask] = 1
        return bytes([flags[mask] for mask in range(size)])
    finally:
        free(paths)
        free(flags)


# -- canonical form ------------------------------------------------------------

cdef struct Ctx:
    int a
    int b
    int relabel
    int M[MAXE]
    int labels[MAXC]
    int cur[MAXE]
    int best[MAXE]
    int have_best
    long ver
    # per-level column orders and cell boundaries (level d is used by row d)
    int order[MAXD + 1][MAXD]
    int cs[MAXD + 1][MAXD]
    int ce[MAXD + 1][MAXD]
    int ncells[MAXD + 1]


cdef inline int eff(Ctx *c, int rel, long ver) nogil:
    if not c.have_best:
        return 1
    if ver == c.ver:
        return rel
    return 0


cdef void dfs(Ctx *c, int depth, unsigned int used, int nextlabel, int rel, long ver) nogil:
    cdef int r
    if depth == c.a:
        if (not c.have_best) or eff(c, rel, ver) == 1:
            memcpy(c.best, c.cur, c.a * c.b * sizeof(int))
            c.have_best = 1
            c.ver += 1
        return
    for r in range(c.a):
        if (used >> r) & 1:
            continue
        refine(c, depth, used | (1u << r), r, 0, 0, 0, nextlabel, eff(c, rel, ver), c.ver)


cdef struct Groups:
    int n
    int colour[MAXD]
    int count[MAXD]
    int cols[MAXD][MAXD]


cdef void refine(Ctx *c, int depth, unsigned int used, int r, int ci, int pos, int nn,
                 int nextlabel, int rel, long ver) nogil:
    # ci: cell index at level depth; pos: next write position; nn: cells written at depth+1
    cdef int s, e, k, g, col, colr, lab
    cdef Groups G
    cdef int known[MAXD]
    cdef int nknown = 0
    cdef int fresh[MAXD]
    cdef int nfresh = 0
    cdef int tmp, i, j
    if ci == c.ncells[depth]:
        c.ncells[depth + 1] = nn
        dfs(c, depth + 1, used, nextlabel, eff(c, rel, ver), c.ver)
        return
    s = c.cs[depth][ci]
    e = c.ce[depth][ci]
    G.n = 0
    for k in range(s, e):
        col = c.order[depth][k]
        colr = c.M[r * c.b + col]
        g = 0
        while g < G.n and G.colour[g] != colr:
            g += 1
        if g == G.n:
            G.colour[g] = colr
            G.count[g] = 0
            G.n += 1
        G.cols[g][G.count[g]] = col
        G.count[g] += 1
    for g in range(G.n):
        if (not c.relabel) or c.labels[G.colour[g]] >= 0:
            known[nknown] = g
            nknown += 1
        else:
            fresh[nfresh] = g
            nfresh += 1
    # known groups ascending by label (colour value when not relabelling)
    for i in range(1, nknown):
        tmp = known[i]
        j = i - 1
        while j >= 0 and keylabel(c, &G, known[j]) > keylabel(c, &G, tmp):
            known[j + 1] = known[j]
            j -= 1
        known[j + 1] = tmp
    # fresh groups by size, descending, stable
    for i in range(1, nfresh):
        tmp = fresh[i]
        j = i - 1
        while j >= 0 and G.count[fresh[j]] < G.count[tmp]:
            fresh[j + 1] = fresh[j]
            j -= 1
        fresh[j + 1] = tmp
    rel = eff(c, rel, ver)
    ver = c.ver
    for i in range(nknown):
        g = known[i]
        lab = keylabel(c, &G, g)
        if not write_group(c, depth, pos, nn, lab, &G, g, &rel):
            return
        pos += G.count[g]
        nn += 1
    place_fresh(c, depth, used, r, ci, pos, nn, nextlabel, rel, ver, &G, fresh, nfresh, 0, 0)


cdef inline int keylabel(Ctx *c, Groups *G, int g) nogil:
    if c.relabel:
        return c.labels[G.colour[g]]
    return G.colour[g]


cdef int write_group(Ctx *c, int depth, int pos, int nn, int lab, Groups *G, int g, int *rel) nogil:
    """Write group g at pos with label lab; returns 0 when the prefix
    exceeds the best code."""
    cdef int off = depth * c.b
    cdef int k, bv
    c.cs[depth + 1][nn] = pos
    c.ce[depth + 1][nn] = pos + G.count[g]
    for k in range(G.count[g]):
        c.order[depth + 1][pos + k] = G.cols[g][k]
        c.cur[off + pos + k] = lab
        if rel[0] == 0:
            bv = c.best[off + pos + k]
            if lab < bv:
                rel[0] = 1
            elif lab > bv:
                return 0
    return 1


cdef void place_fresh(Ctx *c, int depth, unsigned int used, int r, int ci, int pos, int nn,
                      int nextlabel, int rel, long ver, Groups *G, int *fresh, int nfresh,
                      int slot, unsigned int taken) nogil:
    cdef int i, g, rr
    if slot == nfresh:
        refine(c, depth, used, r, ci + 1, pos, nn, nextlabel, eff(c, rel, ver), c.ver)
        return
    # the slot's size is that of the slot-th largest group; any untaken group of
    # that size may fill it (ties between fresh colours are the only branching)
    for i in range(nfresh):
        g = fresh[i]
        if (taken >> i) & 1 or G.count[g] != G.count[fresh[slot]]:
            continue
        rr = eff(c, rel, ver)
        c.labels[G.colour[g]] = nextlabel
        if write_group(c, depth, pos, nn, nextlabel, G, g, &rr):
            place_fresh(c, depth, used, r, ci, pos + G.count[g], nn + 1, nextlabel + 1,
                        rr, c.ver, G, fresh, nfresh, slot + 1, taken | (1u << i))
        c.labels[G.colour[g]] = -1


cdef void canon_into(Ctx *c, int *M, int a, int b, int relabel, int *out) nogil:
    cdef int k
    c.a = a
    c.b = b
    c.relabel = relabel
    for k in range(a * b):
        c.M[k] = M[k]
    for k in range(MAXC):
        c.labels[k] = -1
    c.have_best = 0
    c.ver = 0
    for k in range(b):
        c.order[0][k] = k
    c.cs[0][0] = 0
    c.ce[0][0] = b
    c.ncells[0] = 1
    dfs(c, 0, 0, 0, 1, 0)
    memcpy(out, c.best, a * b * sizeof(int))


cdef int canonical(Ctx *c, int *flat, int a, int b, int relabel, int transpose, int *out) nogil:
    cdef int T[MAXE]
    cdef int alt[MAXE]
    cdef int i, j
    canon_into(c, flat, a, b, relabel, out)
    if transpose and a == b:
        for i in range(a):
            for j in range(b):
                T[j * a + i] = flat[i * b + j]
        canon_into(c, T, b, a, relabel, alt)
        for i in range(a * b):
            if alt[i] < out[i]:
                memcpy(out, alt, a * b * sizeof(int))
                break
            if alt[i] > out[i]:
                break
    return 0


def canonical_code(flat, int a, int b, bint relabel=True, bint transpose=False):
    cdef int F[MAXE]
    cdef int out[MAXE]
    cdef int k
    cdef Ctx *c
    if a == 0 or b == 0:
        return tuple(flat)
    if a > MAXD or b > MAXD:
        raise ValueError("canonical_code: matrix too large")
    if max(flat) >= MAXC:
        raise ValueError("canonical_code: colour value too large")
    for k in range(a * b):
        F[k] = flat[k]
    c = <Ctx *> malloc(sizeof(Ctx))
    if c == NULL:
        raise MemoryError()
    try:
        canonical(c, F, a, b, relabel, transpose, out)
        return tuple([out[k] for k in range(a * b)])
    finally:
        free(c)


# -- enumeration ------------------------------------------------------------------

cdef struct Enum:
    int a
    int b
    int E
    int maxloc
    int maxcol
    int relabel
    int transpose
    int flat[MAXE]
    int rowpal[MAXD][MAXD]
    int rown[MAXD]
    int colpal[MAXD][MAXD]
    int coln[MAXD]
    int first[MAXD]
    int npre
    int prefix[MAXE]
    long raw


cdef void row_pattern(int *row, int n, int relabel, int *out) nogil:
    cdef int cnt[MAXD]
    cdef int val[MAXD]
    cdef int nd = 0, k, g, i, j, tmp, pos
    if not relabel:
        for k in range(n):
            out[k] = row[k]
        for i in range(1, n):
            tmp = out[i]
            j = i - 1
            while j >= 0 and out[j] > tmp:
                out[j + 1] = out[j]
                j -= 1
            out[j + 1] = tmp
        return
    for k in range(n):
        g = 0
        while g < nd and val[g] != row[k]:
            g += 1
        if g == nd:
            val[g] = row[k]
            cnt[g] = 0
            nd += 1
        cnt[g] += 1
    for i in range(1, nd):
        tmp = cnt[i]
        j = i - 1
        while j >= 0 and cnt[j] < tmp:
            cnt[j + 1] = cnt[j]
            j -= 1
        cnt[j + 1] = tmp
    pos = 0
    for g in range(nd):
        for k in range(cnt[g]):
            out[pos] = g
            pos += 1


cdef inline int lexcmp(int *x, int *y, int n) nogil:
    cdef int k
    for k in range(n):
        if x[k] < y[k]:
            return -1
        if x[k] > y[k]:
            return 1
    return 0


cdef void erec(Enum *en, Ctx *cx, int k, int used, list out) except *:
    cdef int i, j, c, top, addr, addc, ok, q
    cdef int pat[MAXD]
    cdef int colv[MAXD]
    cdef int code[MAXE]
    if k == en.E:
        en.raw += 1
        if en.transpose and en.a == en.b:
            for j in range(en.b):
                for i in range(en.a):
                    colv[i] = en.flat[i * en.b + j]
                row_pattern(colv, en.a, en.relabel, pat)
                if lexcmp(pat, en.first, en.a) < 0:
                    return
        canonical(cx, en.flat, en.a, en.b, en.relabel, en.transpose, code)
        if lexcmp(code, en.flat, en.E) == 0:
            out.append(tuple([en.flat[q] for q in range(en.E)]))
        return
    i = k // en.b
    j = k % en.b
    if en.relabel:
        top = used + 1
        if top > en.maxcol:
            top = en.maxcol
    else:
        top = en.maxcol
    for c in range(top):
        if k < en.npre and c != en.prefix[k]:
            continue
        addr = 1
        for q in range(en.rown[i]):
            if en.rowpal[i][q] == c:
                addr = 0
        addc = 1
        for q in range(en.coln[j]):
            if en.colpal[j][q] == c:
                addc = 0
        if (addr and en.rown[i] >= en.maxloc) or (addc and en.coln[j] >= en.maxloc):
            continue
        if addr:
            en.rowpal[i][en.rown[i]] = c
            en.rown[i] += 1
        if addc:
            en.colpal[j][en.coln[j]] = c
            en.coln[j] += 1
        en.flat[k] = c
        ok = 1
        if j == en.b - 1:
            row_pattern(&en.flat[i * en.b], en.b, en.relabel, pat)
            if i == 0:
                ok = lexcmp(pat, &en.flat[0], en.b) == 0
                memcpy(en.first, pat, en.b * sizeof(int))
            else:
                ok = lexcmp(pat, en.first, en.b) >= 0
        if ok:
            erec(en, cx, k + 1, used if used > c + 1 else c + 1, out)
        if addr:
            en.rown[i] -= 1
        if addc:
            en.coln[j] -= 1


def enumerate_bipartite(int a, int b, int max_loc, int max_colours, bint relabel=True,
                        bint transpose=False, prefix=()):
    cdef Enum *en
    cdef Ctx *cx
    cdef int k
    if a > MAXD or b > MAXD:
        raise ValueError("enumerate_bipartite: host too large")
    if max_colours >= MAXC:
        raise ValueError("enumerate_bipartite: too many colours")
    if a == 0 or b == 0:
        return [()], 1
    en = <Enum *> malloc(sizeof(Enum))
    cx = <Ctx *> malloc(sizeof(Ctx))
    out = []
    try:
        memset(en, 0, sizeof(Enum))
        en.a = a
        en.b = b
        en.E = a * b
        en.maxloc = max_loc
        en.maxcol = max_colours
        en.relabel = relabel
        en.transpose = transpose
        en.npre = len(prefix)
        for k in range(en.npre):
            en.prefix[k] = prefix[k]
        erec(en, cx, 0, 0, out)
        return out, en.raw
    finally:
        free(en)
        free(cx)
