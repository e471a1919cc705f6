"""Exhaustive, symmetry-reduced checks of path Ramsey statements for
2-local bipartite colourings, and the long-path construction for three
colours.

Canonical forms quotient out vertex permutations within each side, the
side swap (balanced hosts only) and colour renaming; see
:func:`localcolour.kernels.canonical_code`.  The canonical stream of
``K_{a,b}`` is cut into work units by the first two rows of the code, so a
run can be split across processes and resumed from a checkpoint file that
lists finished unit ids.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import Iterator, NamedTuple, Optional

from . import kernels
from .errors import (BudgetExceeded, PreconditionViolated, SubroutineBudgetExceeded,
                     TheoremViolation)
from .graph import (Bipartite, ColouredGraph, Complete, bipartite_subgraph, connected_in_colour,
                    host_edges, locality)
from .paths import LONGEST_PATH_BUDGET, MonoPath, check_path, longest_mono_path, longest_path_in_colour
from .structure import is_simple, simplify

MAX_SIDE = 4  # default enumeration limit per side; 5 needs opt-in
OPT_IN_SIDE = 5
MAX_COMPLETE = 5
SCHEME = "lexmin-rowcol"


class EnumerationSpec(NamedTuple):
    host: object
    max_locality: int
    colour_budget: int
    relabel: bool = True
    side_swap: bool = True
    scheme: str = SCHEME


def bipartite_spec(a: int, b: int, max_locality: int = 2) -> EnumerationSpec:
    """The palettes of either side cover every colour, so at most
    ``max_locality * min(a, b)`` colours occur."""
    return EnumerationSpec(Bipartite(a, b), max_locality, max_locality * max(1, min(a, b)))


def graph_from_code(code, a: int, b: int) -> ColouredGraph:
    """Colour ``code[i * b + j] + 1`` on top ``i`` and bottom ``j``."""
    return ColouredGraph(Bipartite(a, b), {(i, a + j): code[i * b + j] + 1
                                           for i in range(a) for j in range(b)})


def code_of(g: ColouredGraph) -> tuple:
    """Row-major colour matrix of a bipartite graph, 0-based by first
    appearance."""
    a, b = g.host.top, g.host.bottom
    flat = [g.colour(i, a + j) for i in range(a) for j in range(b)]
    seen: dict = {}
    return tuple(seen.setdefault(c, len(seen)) for c in flat)


def canonical_form(g: ColouredGraph, relabel: bool = True, side_swap: bool = True) -> tuple:
    a, b = g.host.top, g.host.bottom
    flat = code_of(g) if relabel else tuple(g.colour(i, a + j) for i in range(a) for j in range(b))
    return tuple(kernels.canonical_code(list(flat), a, b, relabel, side_swap))


# -- work units ------------------------------------------------------------------


def _row_pattern(row, relabel):
    if not relabel:
        return sorted(row)
    counts: dict = {}
    for c in row:
        counts[c] = counts.get(c, 0) + 1
    out = []
    for lab, k in enumerate(sorted(counts.values(), reverse=True)):
        out.extend([lab] * k)
    return out


def work_units(a: int, b: int, max_loc: int, max_colours: int, relabel: bool = True) -> list[tuple]:
    """Candidate first-two-row prefixes of canonical codes, in lexicographic
    order.  Every canonical code starts with exactly one of them."""
    rows = min(a, 2)
    E = rows * b
    flat = [0] * E
    out = []

    def rec(k, used, first):
        if k == E:
            out.append(tuple(flat))
            return
        i, j = divmod(k, b)
        top = min(used + 1, max_colours) if relabel else max_colours
        for c in range(top):
            flat[k] = c
            row = flat[i * b:k + 1]
            col = {flat[r * b + j] for r in range(i + 1)}
            if len(set(row)) > max_loc or len(col) > max_loc:
                continue
            nxt = first
            if j == b - 1:
                full = flat[i * b:(i + 1) * b]
                if i == 0:
                    if _row_pattern(full, relabel) != full:
                        continue
                    nxt = full
                elif _row_pattern(full, relabel) < first:
                    continue
            rec(k + 1, max(used, c + 1), nxt)

    rec(0, 0, None)
    return out


def unit_id(unit: tuple, b: int) -> str:
    return ";".join(",".join(map(str, unit[r:r + b])) for r in range(0, len(unit), b))


def _check_side(spec_side: int, limit: int):
    if spec_side > limit:
        raise BudgetExceeded(spec_side, limit, "enumeration side")


def enumerate_canonical(spec: EnumerationSpec, max_side: int = MAX_SIDE) -> Iterator[ColouredGraph]:
    """One representative per symmetry class, in increasing code order."""
    host = spec.host
    if isinstance(host, Bipartite):
        a, b = host.top, host.bottom
        _check_side(max(a, b), max_side)
        swap = spec.side_swap and a == b
        codes, _ = kernels.enumerate_bipartite(a, b, spec.max_locality, spec.colour_budget,
                                               spec.relabel, swap)
        for code in codes:
            yield graph_from_code(code, a, b) if spec.relabel else \
                ColouredGraph(host, {(i, a + j): code[i * b + j] for i in range(a) for j in range(b)})
        return
    if isinstance(host, Complete):
        yield from _enumerate_complete(host.n, spec.max_locality, spec.colour_budget)
        return
    raise BudgetExceeded(0, 0, "enumeration supports complete and bipartite hosts")


def _enumerate_complete(n: int, max_loc: int, max_colours: int) -> Iterator[ColouredGraph]:
    """Brute force over restricted-growth colourings of ``K_n``; small ``n``."""
    _check_side(n, MAX_COMPLETE)
    edges = list(host_edges(Complete(n)))
    index = {e: k for k, e in enumerate(edges)}
    perms = list(permutations(range(n)))

    def relabelled(seq):
        seen: dict = {}
        return tuple(seen.setdefault(c, len(seen)) for c in seq)

    def canonical(code):
        best = None
        for p in perms:
            img = [0] * len(edges)
            for (u, v), k in index.items():
                x, y = p[u], p[v]
                img[index[(min(x, y), max(x, y))]] = code[k]
            cand = relabelled(img)
            if best is None or cand < best:
                best = cand
        return best

    flat = [0] * len(edges)
    pals = [set() for _ in range(n)]

    def rec(k, used):
        if k == len(edges):
            code = tuple(flat)
            if canonical(code) == code:
                yield ColouredGraph(Complete(n), {e: flat[i] + 1 for i, e in enumerate(edges)})
            return
        u, v = edges[k]
        for c in range(min(used + 1, max_colours)):
            au, av = c not in pals[u], c not in pals[v]
            if (au and len(pals[u]) >= max_loc) or (av and len(pals[v]) >= max_loc):
                continue
            flat[k] = c
            if au:
                pals[u].add(c)
            if av:
                pals[v].add(c)
            yield from rec(k + 1, max(used, c + 1))
            if au:
                pals[u].discard(c)
            if av:
                pals[v].discard(c)

    yield from rec(0, 0)


# -- verification drivers ------------------------------------------------------------


class RamseyReport(NamedTuple):
    verdict: str  # "Verified" or "Counterexample"
    statement: str
    host: Bipartite
    canonical_count: int
    total_checked: int
    units: int
    resumed_units: int = 0
    elapsed: float = 0.0
    counterexample: Optional[ColouredGraph] = None
    longest: Optional[int] = None
    witness: Optional[MonoPath] = None

    @property
    def verified(self) -> bool:
        return self.verdict == "Verified"


def _ramsey_unit(args):
    a, max_colours, target, unit = args
    codes, raw = kernels.enumerate_bipartite(a, a, 2, max_colours, True, True, unit)
    for code in codes:
        g = graph_from_code(code, a, a)
        length, path = longest_mono_path(g)
        if length < target:
            return len(codes), raw, (code, length, path)
    return len(codes), raw, None


def _fs_unit(args):
    n, p, q, unit = args
    codes, raw = kernels.enumerate_bipartite(n, n, 2, 2, False, True, unit)
    for code in codes:
        g = graph_from_code(code, n, n)
        one = longest_path_in_colour(g, 1)
        two = longest_path_in_colour(g, 2)
        if len(one) < 2 * p and len(two) < 2 * q:
            return len(codes), raw, (code, max(len(one), len(two)), max(one, two, key=len))
    return len(codes), raw, None


def _drive(side, units, make_args, worker, statement, checkpoint, jobs):
    t0 = time.perf_counter()
    done: set = set()
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as fh:
            done = {line.strip() for line in fh if line.strip()}
    todo = [u for u in units if unit_id(u, side) not in done]
    count = raw = 0
    found = None
    fh = open(checkpoint, "a") if checkpoint else None
    try:
        if jobs > 1:
            with ProcessPoolExecutor(jobs) as pool:
                results = pool.map(worker, [make_args(u) for u in todo])
                outcomes = list(zip(todo, results))
        else:
            outcomes = ((u, worker(make_args(u))) for u in todo)
        for u, (k, r, bad) in outcomes:
            count += k
            raw += r
            if bad is not None:
                found = bad
                break
            if fh:
                fh.write(unit_id(u, side) + "\n")
                fh.flush()
    finally:
        if fh:
            fh.close()
    elapsed = time.perf_counter() - t0
    host = Bipartite(side, side)
    if found is None:
        return RamseyReport("Verified", statement, host, count, raw, len(units), len(units) - len(todo), elapsed)
    code, length, path = found
    return RamseyReport("Counterexample", statement, host, count, raw, len(units),
                        len(units) - len(todo), elapsed, graph_from_code(code, side, side), length, path)


def verify_even_path_ramsey(m: int, side: Optional[int] = None, opt_in_large: bool = False,
                            checkpoint: Optional[str] = None, jobs: int = 1) -> RamseyReport:
    """Does every 2-local colouring of ``K_{s,s}`` (default ``s = 2m - 1``)
    contain a monochromatic path on ``2m`` vertices?

    The first failing colouring in canonical order is returned as the
    counterexample together with its longest monochromatic path.
    """
    if m < 1:
        raise PreconditionViolated("m must be at least 1")
    s = 2 * m - 1 if side is None else side
    _check_side(s, OPT_IN_SIDE if opt_in_large else MAX_SIDE)
    max_colours = 2 * s
    units = work_units(s, s, 2, max_colours)
    return _drive(s, units, lambda u: (s, max_colours, 2 * m, u), _ramsey_unit,
                  f"monochromatic path on {2 * m} vertices", checkpoint, jobs)


def verify_faudree_schelp(p: int, q: int, checkpoint: Optional[str] = None, jobs: int = 1,
                          opt_in_large: bool = False) -> RamseyReport:
    """Every 2-colouring of ``K_{n,n}``, ``n = p + q - 1``, has a colour-1
    path on ``2p`` vertices or a colour-2 path on ``2q`` vertices.

    Colours keep their names since the statement is not symmetric in
    them; the side swap preserves colours and is quotiented out.
    """
    if p < 1 or q < 1:
        raise PreconditionViolated("p and q must be positive")
    n = p + q - 1
    _check_side(n, OPT_IN_SIDE if opt_in_large else MAX_SIDE)
    units = work_units(n, n, 2, 2, relabel=False)
    return _drive(n, units, lambda u: (n, p, q, u), _fs_unit,
                  f"colour-1 path on {2 * p} or colour-2 path on {2 * q} vertices", checkpoint, jobs)


# -- long paths from a large intersection ------------------------------------------


def _alternate(first, second):
    out = []
    for x, y in zip(first, second):
        out.extend((x, y))
    return out


def long_path_lemma(g: ColouredGraph, i: int, j: int) -> MonoPath:
    """A monochromatic path on at least ``min(2m, 2 * max(|X|, |Y|))``
    vertices, where ``X`` and ``Y`` are the top and bottom vertices seeing
    both ``i`` and ``j`` and the host is ``K_{2m-1,2m-1}``.

    Let ``X`` be the larger of the two (top on ties) and ``Y`` the other
    side.  Vertices in ``X`` see only ``i`` and ``j``, so every vertex of
    ``Y`` sees ``i`` or ``j``.  With ``p = m - #(Y sees i, not j)`` and
    ``q = m - #(Y sees j, not i)`` the square block between ``Y``'s
    ``{i, j}`` vertices and as many ``X`` vertices has side ``p + q - 1``;
    an exact search there finds a colour-``i`` path on ``2p`` vertices or a
    colour-``j`` path on ``2q`` vertices.  The path is then extended
    alternately through unused ``X`` vertices and the ``Y`` vertices that
    see only its colour of the two.
    """
    host = g.host
    if not isinstance(host, Bipartite) or not host.balanced or host.top % 2 == 0:
        raise PreconditionViolated("host must be K_{2m-1,2m-1}")
    if locality(g) > 2 or len(g.colours) != 3 or not is_simple(g):
        raise PreconditionViolated("need a simple 2-local colouring with exactly three colours")
    if i == j or i not in g.colours or j not in g.colours:
        raise PreconditionViolated("i and j must be two distinct colours of g")
    m = (host.top + 1) // 2
    top, bot = g.top(), g.bottom()

    def sees(v, c, not_c=None):
        pal = g.palette(v)
        return c in pal and (not_c is None or not_c not in pal)

    both_top = [v for v in top if sees(v, i) and sees(v, j)]
    both_bot = [v for v in bot if sees(v, i) and sees(v, j)]
    X, Y = (both_top, bot) if len(both_top) >= len(both_bot) else (both_bot, top)
    if not X:
        return MonoPath((), i)
    Y_both = [y for y in Y if sees(y, i) and sees(y, j)]
    only = {i: [y for y in Y if sees(y, i, j)], j: [y for y in Y if sees(y, j, i)]}
    need = {i: m - len(only[i]), j: m - len(only[j])}
    for c in (i, j):
        if need[c] <= 0:
            # the y's seeing only c already number at least m
            k = min(len(X), len(only[c]))
            return MonoPath.of(_alternate(only[c][:k], X[:k]), c)
    s = len(Y_both)
    if s != need[i] + need[j] - 1:
        raise TheoremViolation("a vertex facing the {i, j} block misses both colours")
    if 2 * s > LONGEST_PATH_BUDGET:
        raise SubroutineBudgetExceeded(2 * s, LONGEST_PATH_BUDGET, "long path subroutine")
    xs = X[:s]
    sub = bipartite_subgraph(g, xs, Y_both)
    back = sorted(xs) + sorted(Y_both)
    chosen = None
    for c in (i, j):
        path = longest_path_in_colour(sub, c)
        if len(path) >= 2 * need[c]:
            chosen = c, [back[v] for v in path.vertices[:2 * need[c]]]
            break
    if chosen is None:
        raise TheoremViolation("two-colour path statement failed on the square block")
    c, P = chosen
    if P[-1] not in X:
        P.reverse()
    rest = [x for x in X if x not in P]
    k = min(len(rest), len(only[c]))
    out = MonoPath.of(P + _alternate(only[c][:k], rest[:k]), c)
    assert check_path(g, out), check_path(g, out).reason
    return out


def long_path_bound(g: ColouredGraph, i: int, j: int) -> int:
    m = (g.host.top + 1) // 2
    top = sum(1 for v in g.top() if {i, j} <= g.palette(v))
    bot = sum(1 for v in g.bottom() if {i, j} <= g.palette(v))
    return min(2 * m, 2 * max(top, bot))


# -- the claim chain for three colours --------------------------------------------------


CLAIMS = (
    "at-least-three-colours",
    "exactly-three-colours",
    "two-colours-per-vertex",
    "blocks-below-m",
    "blocks-nonempty",
    "connected-class-shape",
    "at-most-one-small-intersection",
)


class ClaimReport(NamedTuple):
    n: int
    m: int
    checked: int
    triggered: dict
    violations: dict
    lemma_checks: int
    lemma_violations: int

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values()) + self.lemma_violations


def _blocks3(g):
    cols = sorted(g.colours)
    pairs = [(a, b) for k, a in enumerate(cols) for b in cols[k + 1:]]
    top, bot = {}, {}
    for a, b in pairs:
        top[(a, b)] = [v for v in g.top() if g.palette(v) == frozenset((a, b))]
        bot[(a, b)] = [v for v in g.bottom() if g.palette(v) == frozenset((a, b))]
    return cols, pairs, top, bot


def _key(a, b):
    return (a, b) if a < b else (b, a)


def _connected_class_shape(g, m, cols, top, bot) -> bool:
    for c in cols:
        cls = [v for v in g.vertices if c in g.palette(v)]
        if not connected_in_colour(g, cls, c):
            continue
        j, k = (x for x in cols if x != c)
        ok = False
        for jj, kk in ((j, k), (k, j)):
            ij, ik = _key(c, jj), _key(c, kk)
            for T, B in ((top, bot), (bot, top)):
                if (len(T[ij]) >= len(B[ik]) and len(B[ij]) > len(T[ik])
                        and len(T[ik]) + len(B[ik]) < m):
                    ok = True
        if not ok:
            return False
    return True


def _claim_chain(g, m):
    """Name of the first claim whose conclusion fails, or ``None``."""
    k = len(g.colours)
    if k < 3:
        return CLAIMS[0]
    if k != 3:
        return CLAIMS[1]
    if any(len(g.palette(v)) != 2 for v in g.vertices):
        return CLAIMS[2]
    cols, pairs, top, bot = _blocks3(g)
    if any(max(len(top[p]), len(bot[p])) >= m for p in pairs):
        return CLAIMS[3]
    if any(not top[p] or not bot[p] for p in pairs):
        return CLAIMS[4]
    if not _connected_class_shape(g, m, cols, top, bot):
        return CLAIMS[5]
    if sum(1 for p in pairs if len(top[p]) + len(bot[p]) < m) > 1:
        return CLAIMS[6]
    return None


def verify_structural_claims(n: int, opt_in_large: bool = False) -> ClaimReport:
    """Run the claim chain on every canonical 2-local colouring of
    ``K_{n,n}`` (``n = 2m - 1``), after simplification.

    Each claim's conclusion is evaluated only when the earlier ones hold.
    A colouring where some conclusion fails is *triggered* for that claim,
    and must then contain a monochromatic path on ``2m`` vertices; if it
    does not, that is a violation.  Every three-colour simplified colouring
    also runs :func:`long_path_lemma` on each colour pair and checks the
    path against its bound.
    """
    if n < 1 or n % 2 == 0:
        raise PreconditionViolated("n must be odd")
    _check_side(n, OPT_IN_SIDE if opt_in_large else MAX_SIDE)
    m = (n + 1) // 2
    triggered = dict.fromkeys(CLAIMS + ("none",), 0)
    violations = dict.fromkeys(CLAIMS + ("none",), 0)
    checked = lemma_checks = lemma_bad = 0
    for g in enumerate_canonical(bipartite_spec(n, n), max_side=n):
        checked += 1
        s, _ = simplify(g)
        failed = _claim_chain(s, m) or "none"
        triggered[failed] += 1
        if longest_mono_path(s)[0] < 2 * m:
            violations[failed] += 1
        if len(s.colours) == 3:
            cols = sorted(s.colours)
            for a in range(3):
                for b in range(a + 1, 3):
                    lemma_checks += 1
                    path = long_path_lemma(s, cols[a], cols[b])
                    if not check_path(s, path) or len(path) < long_path_bound(s, cols[a], cols[b]):
                        lemma_bad += 1
    return ClaimReport(n, m, checked, triggered, violations, lemma_checks, lemma_bad)


__all__ = [
    "EnumerationSpec", "RamseyReport", "ClaimReport", "CLAIMS", "bipartite_spec", "enumerate_canonical",
    "canonical_form", "code_of", "graph_from_code", "work_units", "unit_id", "verify_even_path_ramsey",
    "verify_faudree_schelp", "long_path_lemma", "long_path_bound", "verify_structural_claims",
]
