"""Pure-Python implementations of the hot kernels.

The compiled module ``_ckernels`` exports the same functions with the same
results; :mod:`localcolour.kernels` picks one at import time.
"""

from __future__ import annotations

from itertools import permutations, product

BACKEND = "python"


def ham_path_ends(adj, n):
    """``ends[mask]`` = bitmask of vertices at which some Hamilton path of
    the subgraph induced on ``mask`` ends.  ``adj[v]`` is a neighbour bitmask."""
    size = 1 << n
    ends = [0] * size
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(3, size):
        if not mask & (mask - 1):
            continue
        out = 0
        m = mask
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if ends[mask ^ b] & adj[v]:
                out |= b
        ends[mask] = out
    return ends


def ham_cycle_flags(adj, n):
    """``flags[mask]`` is 1 iff ``mask`` has at least 3 vertices and the
    induced subgraph has a Hamilton cycle."""
    size = 1 << n
    # paths[mask]: ends of Hamilton paths of mask starting at its lowest vertex
    paths = [0] * size
    flags = bytearray(size)
    for v in range(n):
        paths[1 << v] = 1 << v
    for mask in range(3, size):
        if not mask & (mask - 1):
            continue
        low = mask & -mask
        out = 0
        m = mask ^ low
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if paths[mask ^ b] & adj[v]:
                out |= b
        paths[mask] = out
        if out and (mask & (mask - 1)) & ((mask & (mask - 1)) - 1):
            s = low.bit_length() - 1
            if out & adj[s]:
                flags[mask] = 1
    return bytes(flags)


# -- canonical form of a coloured a x b matrix ------------------------------


class _Search:
    __slots__ = ("M", "a", "b", "relabel", "labels", "cur", "best", "ver")

    def __init__(self, M, a, b, relabel, ncol):
        self.M, self.a, self.b, self.relabel = M, a, b, relabel
        self.labels = [-1] * ncol
        self.cur = [0] * (a * b)
        self.best = None
        self.ver = 0

    def rel(self, rel, ver):
        # a leaf update makes every active prefix equal to the new best
        if self.best is None:
            return 1
        return rel if ver == self.ver else 0

    def dfs(self, depth, used, order, cells, nextlabel, rel, ver):
        if depth == self.a:
            if self.best is None or self.rel(rel, ver) == 1:
                self.best = list(self.cur)
                self.ver += 1
            return
        for r in range(self.a):
            if used >> r & 1:
                continue
            self.refine(depth, used | (1 << r), r, order, cells, 0, [], [], nextlabel,
                        self.rel(rel, ver), self.ver)

    def refine(self, depth, used, r, order, cells, ci, norder, ncells, nextlabel, rel, ver):
        if ci == len(cells):
            self.dfs(depth + 1, used, norder, ncells, nextlabel, self.rel(rel, ver), self.ver)
            return
        s, e = cells[ci]
        row = self.M[r]
        groups = {}
        for col in order[s:e]:
            groups.setdefault(row[col], []).append(col)
        labels = self.labels
        if self.relabel:
            known = sorted((labels[c], cols) for c, cols in groups.items() if labels[c] >= 0)
            fresh = sorted(((len(cols), c, cols) for c, cols in groups.items() if labels[c] < 0),
                           key=lambda t: -t[0])
            runs, i = [], 0
            while i < len(fresh):
                j = i
                while j < len(fresh) and fresh[j][0] == fresh[i][0]:
                    j += 1
                runs.append(fresh[i:j])
                i = j
            arrangements = product(*[permutations(run) for run in runs]) if runs else [()]
        else:
            known = sorted((c, cols) for c, cols in groups.items())
            arrangements = [()]
        off = depth * self.b
        cur = self.cur
        for arr in arrangements:
            seq = [g for run in arr for g in run]
            nl = nextlabel
            assigned = []
            for _, c, _ in seq:
                labels[c] = nl
                assigned.append(c)
                nl += 1
            parts = list(known) + [(labels[c], cols) for _, c, cols in seq]
            rr = self.rel(rel, ver)
            pos = s
            pruned = False
            sub = []
            for lab, cols in parts:
                sub.append((pos, pos + len(cols)))
                for col in cols:
                    cur[off + pos] = lab
                    if rr == 0:
                        bv = self.best[off + pos]
                        if lab < bv:
                            rr = 1
                        elif lab > bv:
                            pruned = True
                            break
                    pos += 1
                if pruned:
                    break
            if not pruned:
                no = norder + [col for _, cols in parts for col in cols]
                self.refine(depth, used, r, order, cells, ci + 1, no, ncells + sub, nl, rr, self.ver)
            for c in assigned:
                labels[c] = -1


def canonical_code(flat, a, b, relabel=True, transpose=False):
    """Lexicographically least row-major code of the ``a x b`` colour matrix
    ``flat`` over all row and column permutations (and the transpose when
    ``transpose`` and ``a == b``).  With ``relabel`` colours are renumbered
    by first appearance, so colour permutations are quotiented out too."""
    if a == 0 or b == 0:
        return tuple(flat)
    ncol = max(flat) + 1
    rows = [list(flat[i * b:(i + 1) * b]) for i in range(a)]
    S = _Search(rows, a, b, relabel, ncol)
    S.dfs(0, 0, list(range(b)), [(0, b)], 0, 1, 0)
    best = S.best
    if transpose and a == b:
        cols = [[rows[i][j] for i in range(a)] for j in range(b)]
        T = _Search(cols, b, a, relabel, ncol)
        T.dfs(0, 0, list(range(a)), [(0, a)], 0, 1, 0)
        if T.best < best:
            best = T.best
    return tuple(best)


# -- raw enumeration ---------------------------------------------------------


def _row_pattern(row, relabel):
    """Best possible first-row segment for ``row`` (a canonical-code bound)."""
    if not relabel:
        return sorted(row)
    counts = {}
    for c in row:
        counts[c] = counts.get(c, 0) + 1
    out = []
    for lab, k in enumerate(sorted(counts.values(), reverse=True)):
        out.extend([lab] * k)
    return out


def enumerate_bipartite(a, b, max_loc, max_colours, relabel=True, transpose=False, prefix=()):
    """Canonical colourings of K_{a,b} with locality <= ``max_loc``.

    Returns ``(codes, raw)``: the canonical codes (row-major tuples) found
    among raw colourings whose code starts with ``prefix``, in increasing
    order, and the number of raw colourings visited.  With ``relabel`` raw
    colourings are restricted growth strings (one per colour partition);
    without it every assignment from ``range(max_colours)`` is raw.
    """
    E = a * b
    flat = [0] * E
    rowpal = [[] for _ in range(a)]
    colpal = [[] for _ in range(b)]
    out = []
    raw = 0
    first = None

    def rec(k, used):
        nonlocal raw, first
        if k == E:
            raw += 1
            if transpose and a == b:
                for j in range(b):
                    if _row_pattern([flat[i * b + j] for i in range(a)], relabel) < first:
                        return
            code = canonical_code(flat, a, b, relabel, transpose)
            if list(code) == flat:
                out.append(code)
            return
        i, j = divmod(k, b)
        top = min(used + 1, max_colours) if relabel else max_colours
        lo = 0
        for c in range(lo, top):
            if k < len(prefix) and c != prefix[k]:
                continue
            rp, cp = rowpal[i], colpal[j]
            addr = c not in rp
            addc = c not in cp
            if (addr and len(rp) >= max_loc) or (addc and len(cp) >= max_loc):
                continue
            if addr:
                rp.append(c)
            if addc:
                cp.append(c)
            flat[k] = c
            ok = True
            if j == b - 1:
                row = flat[i * b:(i + 1) * b]
                if i == 0:
                    pat = _row_pattern(row, relabel)
                    ok = pat == row
                    first = pat
                else:
                    ok = _row_pattern(row, relabel) >= first
            if ok:
                rec(k + 1, max(used, c + 1))
            if addr:
                rp.pop()
            if addc:
                cp.pop()

    rec(0, 0)
    return out, raw
