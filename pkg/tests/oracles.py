"""Slow, independent reference implementations used only by the tests.

Nothing here shares code with the package's solvers: paths are found by
plain depth-first enumeration, splits by trying every part assignment and
symmetry classes by applying every group element.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from localcolour.graph import Bipartite, ColouredGraph


def colour_neighbours(g: ColouredGraph, c):
    nb = {v: [] for v in g.vertices}
    for u, v, col in g.edges():
        if col == c:
            nb[u].append(v)
            nb[v].append(u)
    return nb


def path_vertex_sets(g: ColouredGraph, c) -> set[frozenset]:
    """Vertex sets of all colour-``c`` paths, singletons included."""
    nb = colour_neighbours(g, c)
    found = {frozenset((v,)) for v in g.vertices}

    def dfs(path, seen):
        found.add(frozenset(seen))
        for w in nb[path[-1]]:
            if w not in seen:
                seen.add(w)
                path.append(w)
                dfs(path, seen)
                path.pop()
                seen.discard(w)

    for v in g.vertices:
        dfs([v], {v})
    return found


def longest_path_brute(g: ColouredGraph) -> int:
    """All vertex orderings of all subsets; only for tiny graphs."""
    best = min(1, g.n)
    for k in range(2, g.n + 1):
        for sub in combinations(g.vertices, k):
            for perm in permutations(sub):
                cols = {g.colour(a, b) for a, b in zip(perm, perm[1:])}
                if len(cols) == 1 and None not in cols:
                    best = k
                    break
            if best == k:
                break
    return best


def min_path_partition_brute(g: ColouredGraph) -> int:
    full = frozenset(g.vertices)
    sets = set()
    for c in g.colours:
        sets |= path_vertex_sets(g, c)
    sets |= {frozenset((v,)) for v in g.vertices}
    layer = {frozenset()}
    k = 0
    while full not in layer:
        k += 1
        nxt = set()
        for cov in layer:
            first = min(full - cov)
            for s in sets:
                if first in s and not s & cov:
                    nxt.add(cov | s)
        layer = nxt
    return k


def two_path_partition_exists(g: ColouredGraph) -> bool:
    """Two disjoint paths of distinct colours (one may be empty) covering V."""
    full = frozenset(g.vertices)
    cols = sorted(g.colours)
    if len(cols) <= 1:
        return bool(full) and full in path_vertex_sets(g, cols[0]) if cols else True
    a, b = cols
    A, B = path_vertex_sets(g, a), path_vertex_sets(g, b)
    if full in A or full in B:
        return True
    return any(full - s in B for s in A)


def nondegenerate_split_brute(g: ColouredGraph) -> bool:
    top, bot = g.top(), g.bottom()
    cols = sorted(g.colours)
    if len(cols) != 2:
        return False
    for tmask in product((0, 1), repeat=len(top)):
        if len(set(tmask)) < 2:
            continue
        for bmask in product((0, 1), repeat=len(bot)):
            if len(set(bmask)) < 2:
                continue
            for c, d in ((cols[0], cols[1]), (cols[1], cols[0])):
                if all(g.colour(t, b) == (c if tmask[i] == bmask[j] else d)
                       for i, t in enumerate(top) for j, b in enumerate(bot)):
                    return True
    return False


# -- symmetry classes of bipartite colour matrices ------------------------------------


def rg(seq) -> tuple:
    seen: dict = {}
    return tuple(seen.setdefault(c, len(seen)) for c in seq)


def images(code, a, b, transpose=True):
    """Every image of an ``a x b`` matrix under row and column permutations
    and (if square and allowed) the transpose, colours renamed by first
    appearance."""
    rows = [code[i * b:(i + 1) * b] for i in range(a)]
    mats = [rows]
    if transpose and a == b:
        mats.append([[rows[i][j] for i in range(a)] for j in range(b)])
    out = set()
    for m in mats:
        for rp in permutations(range(len(m))):
            for cp in permutations(range(len(m[0]))):
                out.add(rg(m[r][c] for r in rp for c in cp))
    return out


def local_codes(a, b, max_loc, colours):
    """All colour matrices of ``K_{a,b}`` with at most ``colours`` colours,
    as restricted growth strings (colours named by first appearance)."""
    out = []

    def rec(flat, used):
        if len(flat) == a * b:
            rows_ok = all(len(set(flat[i * b:(i + 1) * b])) <= max_loc for i in range(a))
            cols_ok = all(len({flat[i * b + j] for i in range(a)}) <= max_loc for j in range(b))
            if rows_ok and cols_ok:
                out.append(tuple(flat))
            return
        for c in range(min(used + 1, colours)):
            rec(flat + [c], max(used, c + 1))

    rec([], 0)
    return out


def orbit_count(codes, a, b, transpose=True) -> int:
    reps = {min(images(c, a, b, transpose)) for c in codes}
    return len(reps)


def bipartite_from_rows(rows) -> ColouredGraph:
    a, b = len(rows), len(rows[0])
    return ColouredGraph(Bipartite(a, b), {(i, a + j): rows[i][j] for i in range(a) for j in range(b)})


def fixed_colour_orbits(n, colours=2) -> set:
    """Orbit minima of all ``colours``-colourings of ``K_{n,n}`` (colour
    names kept) under row and column permutations and the transpose."""
    reps = set()
    for code in product(range(colours), repeat=n * n):
        rows = [code[i * n:(i + 1) * n] for i in range(n)]
        best = None
        for m in (rows, [[rows[i][j] for i in range(n)] for j in range(n)]):
            for rp in permutations(range(n)):
                for cp in permutations(range(n)):
                    img = tuple(m[r][c] for r in rp for c in cp)
                    if best is None or img < best:
                        best = img
        reps.add(best)
    return reps


def complete_local_orbits(n, max_loc) -> int:
    """Number of ``max_loc``-local colourings of ``K_n`` up to vertex
    permutations and colour renaming."""
    pairs = list(combinations(range(n), 2))
    reps = set()
    for code in product(range(len(pairs)), repeat=len(pairs)):
        if rg(code) != code:
            continue
        pal = [set() for _ in range(n)]
        for (u, v), c in zip(pairs, code):
            pal[u].add(c)
            pal[v].add(c)
        if any(len(p) > max_loc for p in pal):
            continue
        col = dict(zip(pairs, code))
        reps.add(min(rg(col[tuple(sorted((p[u], p[v])))] for u, v in pairs)
                     for p in permutations(range(n))))
    return len(reps)
