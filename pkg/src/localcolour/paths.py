"""Monochromatic paths: certificates, exact solvers and the two-colour
dichotomy.

Path length always counts vertices.  Exact solvers run a dynamic programme
over vertex subsets (see :mod:`localcolour.kernels`) and refuse inputs
above an explicit budget rather than truncating.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence

from . import kernels
from .errors import BudgetExceeded, TheoremViolation, TooManyColours
from .graph import Bipartite, ColouredGraph, bits
from .structure import SplitWitness, detect_split

LONGEST_PATH_BUDGET = 20
PATH_PARTITION_BUDGET = 16
CYCLE_PARTITION_BUDGET = 14
TWO_PATH_BUDGET = 20


class MonoPath(NamedTuple):
    vertices: tuple
    colour: Optional[int]

    def __len__(self):
        return len(self.vertices)

    @classmethod
    def of(cls, vertices: Iterable[int], colour) -> "MonoPath":
        return cls(tuple(vertices), colour)


class PathPartitionCertificate(NamedTuple):
    paths: tuple
    covered: frozenset
    route: str = ""

    @classmethod
    def of(cls, paths: Iterable[MonoPath], route: str = "") -> "PathPartitionCertificate":
        ps = tuple(p for p in paths if p.vertices)
        return cls(ps, frozenset(v for p in ps for v in p.vertices), route)

    def __len__(self):
        return len(self.paths)

    def with_route(self, route: str) -> "PathPartitionCertificate":
        # _replace goes through len(), which counts paths here
        return PathPartitionCertificate(self.paths, self.covered, route)

    def dumps(self) -> str:
        return "".join(f"path {p.colour}: {' '.join(map(str, p.vertices))}\n" for p in self.paths)


def parse_path_certificate(text: str) -> PathPartitionCertificate:
    """Inverse of :meth:`PathPartitionCertificate.dumps`; other lines are ignored."""
    paths = []
    for line in text.splitlines():
        if not line.startswith("path "):
            continue
        head, _, body = line.partition(":")
        colour = head.split()[1]
        paths.append(MonoPath.of(map(int, body.split()), None if colour == "None" else int(colour)))
    return PathPartitionCertificate.of(paths)


class CyclePartitionCertificate(NamedTuple):
    cycles: tuple
    covered: frozenset

    def __len__(self):
        return len(self.cycles)


class Verdict(NamedTuple):
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def check_path(g: ColouredGraph, p: MonoPath) -> Verdict:
    vs = p.vertices
    if len(set(vs)) != len(vs):
        return Verdict(False, f"path repeats a vertex: {vs}")
    for v in vs:
        if not 0 <= v < g.n:
            return Verdict(False, f"vertex {v} out of range")
    for u, v in zip(vs, vs[1:]):
        c = g.colour(u, v)
        if c is None:
            return Verdict(False, f"{u}-{v} is not an edge")
        if c != p.colour:
            return Verdict(False, f"edge {u}-{v} has colour {c}, path declares {p.colour}")
    return Verdict(True)


def verify_path_partition(g: ColouredGraph, cert: PathPartitionCertificate) -> Verdict:
    seen: set = set()
    for p in cert.paths:
        if not p.vertices:
            return Verdict(False, "empty path in certificate")
        v = check_path(g, p)
        if not v:
            return v
        if seen & set(p.vertices):
            return Verdict(False, f"paths share vertices {sorted(seen & set(p.vertices))}")
        seen |= set(p.vertices)
    if seen != set(cert.covered):
        return Verdict(False, "covered set does not match the paths")
    if seen != set(g.vertices):
        return Verdict(False, f"uncovered vertices {sorted(set(g.vertices) - seen)}")
    return Verdict(True)


def verify_cycle_partition(g: ColouredGraph, cert: CyclePartitionCertificate) -> Verdict:
    seen: set = set()
    for colour, cyc in cert.cycles:
        if not cyc or len(set(cyc)) != len(cyc):
            return Verdict(False, f"bad cycle {cyc}")
        if len(cyc) == 2 and g.colour(*cyc) is None:
            return Verdict(False, f"{cyc} is not an edge")
        if len(cyc) >= 3:
            for u, v in zip(cyc, cyc[1:] + cyc[:1]):
                if g.colour(u, v) != colour:
                    return Verdict(False, f"cycle edge {u}-{v} is not colour {colour}")
        if seen & set(cyc):
            return Verdict(False, "cycles overlap")
        seen |= set(cyc)
    if seen != set(cert.covered) or seen != set(g.vertices):
        return Verdict(False, "cycles do not cover the vertex set")
    return Verdict(True)


def cycles_to_paths(g: ColouredGraph, cert: CyclePartitionCertificate) -> PathPartitionCertificate:
    """Drop one edge of every cycle; the count does not change."""
    paths = []
    for colour, cyc in cert.cycles:
        if len(cyc) == 2:
            colour = g.colour(*cyc)
        paths.append(MonoPath.of(cyc, colour))
    return PathPartitionCertificate.of(paths, "cycles")


# -- dynamic programme helpers ------------------------------------------------


def _check_budget(n, budget, what):
    if n > budget:
        raise BudgetExceeded(n, budget, what)


def _walk(ends, adj, mask) -> list[int]:
    """Recover a Hamilton path of ``mask`` from an end table."""
    e = ends[mask]
    v = (e & -e).bit_length() - 1
    path = [v]
    m = mask
    while m != 1 << v:
        m ^= 1 << v
        cand = ends[m] & adj[v]
        v = (cand & -cand).bit_length() - 1
        path.append(v)
    return path


def _colour_tables(g: ColouredGraph):
    return {c: (g.colour_adjacency(c), kernels.ham_path_ends(g.colour_adjacency(c), g.n))
            for c in sorted(g.colours)}


def longest_path_in_colour(g: ColouredGraph, c, budget: int = LONGEST_PATH_BUDGET) -> MonoPath:
    """Longest colour-``c`` path; among the longest, the vertex set with the
    smallest mask wins.  Empty when ``c`` does not appear."""
    n = g.n
    _check_budget(n, budget, "longest_path_in_colour")
    if c not in g.colours:
        return MonoPath((), c)
    adj = g.colour_adjacency(c)
    ends = kernels.ham_path_ends(adj, n)
    top_mask, top_size = 0, 0
    for mask in range(1, 1 << n):
        if ends[mask]:
            k = mask.bit_count()
            if k > top_size:
                top_mask, top_size = mask, k
    return MonoPath.of(_walk(ends, adj, top_mask), c)


def longest_mono_path(g: ColouredGraph, budget: int = LONGEST_PATH_BUDGET) -> tuple[int, MonoPath]:
    """Longest monochromatic path over all colours; ties go to the smallest
    colour.  An edgeless graph with vertices gives a single vertex."""
    n = g.n
    _check_budget(n, budget, "longest_mono_path")
    if n == 0:
        return 0, MonoPath((), None)
    best = MonoPath((0,), min(g.palette(0), default=None))
    for c in sorted(g.colours):
        p = longest_path_in_colour(g, c, budget)
        if len(p) > len(best):
            best = p
    return len(best), best


def _popcount(x: int) -> int:
    return x.bit_count()


def _min_partition(n, ok, what):
    """Iterative deepening over covers of ``range(n)`` by sets ``S`` with
    ``ok[S]``; returns the cover as a list of masks in discovery order."""
    full = (1 << n) - 1
    failed: set = set()

    def solve(mask, k):
        if ok[mask]:
            return [mask]
        if k == 1 or (mask, k) in failed:
            return None
        low = mask & -mask
        rest = mask ^ low
        sub = rest
        while True:
            s = sub | low
            if ok[s]:
                tail = solve(mask ^ s, k - 1)
                if tail is not None:
                    return [s] + tail
            if sub == 0:
                break
            sub = (sub - 1) & rest
        failed.add((mask, k))
        return None

    if n == 0:
        return []
    for k in range(1, n + 1):
        found = solve(full, k)
        if found is not None:
            return found
    raise AssertionError(f"{what}: singletons always cover")  # pragma: no cover


def min_mono_path_partition(g: ColouredGraph, budget: int = PATH_PARTITION_BUDGET
                            ) -> tuple[int, PathPartitionCertificate]:
    n = g.n
    _check_budget(n, budget, "min_mono_path_partition")
    tables = _colour_tables(g)
    ok = bytearray(1 << n)
    for _, ends in tables.values():
        for mask, e in enumerate(ends):
            if e:
                ok[mask] = 1
    for v in range(n):
        ok[1 << v] = 1
    cover = _min_partition(n, ok, "paths")
    paths = []
    for s in cover:
        if s & (s - 1) == 0:
            v = s.bit_length() - 1
            paths.append(MonoPath((v,), min(g.palette(v), default=None)))
            continue
        for c, (adj, ends) in tables.items():
            if ends[s]:
                paths.append(MonoPath.of(_walk(ends, adj, s), c))
                break
    cert = PathPartitionCertificate.of(paths, "exact")
    return len(cert), cert


def _hamilton_cycle(adj, mask) -> list[int]:
    """A Hamilton cycle of ``mask`` (known to exist), starting at its lowest
    vertex.  Small dynamic programme over submasks containing the start."""
    s = (mask & -mask).bit_length() - 1
    reach = {1 << s: 1 << s}
    order = sorted((m for m in _submasks(mask) if m >> s & 1), key=_popcount)
    for m in order:
        if m == 1 << s:
            continue
        out = 0
        for v in bits(m ^ (1 << s)):
            prev = reach.get(m ^ (1 << v), 0)
            if prev & adj[v]:
                out |= 1 << v
        reach[m] = out
    end = reach[mask] & adj[s]
    v = (end & -end).bit_length() - 1
    path, m = [v], mask
    while v != s:
        m ^= 1 << v
        cand = reach[m] & adj[v]
        v = (cand & -cand).bit_length() - 1
        path.append(v)
    return path[::-1]


def _submasks(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def min_mono_cycle_partition(g: ColouredGraph, budget: int = CYCLE_PARTITION_BUDGET
                             ) -> tuple[int, CyclePartitionCertificate]:
    """Single vertices and single edges count as cycles."""
    n = g.n
    _check_budget(n, budget, "min_mono_cycle_partition")
    flags = {c: kernels.ham_cycle_flags(g.colour_adjacency(c), n) for c in sorted(g.colours)}
    ok = bytearray(1 << n)
    for f in flags.values():
        for mask in range(1 << n):
            if f[mask]:
                ok[mask] = 1
    for v in range(n):
        ok[1 << v] = 1
    for u, v, _ in g.edges():
        ok[(1 << u) | (1 << v)] = 1
    cover = _min_partition(n, ok, "cycles")
    cycles = []
    for s in cover:
        vs = bits(s)
        if len(vs) == 1:
            cycles.append((min(g.palette(vs[0]), default=None), tuple(vs)))
        elif len(vs) == 2 and g.colour(*vs) is not None and not any(f[s] for f in flags.values()):
            cycles.append((g.colour(*vs), tuple(vs)))
        else:
            c = next(c for c, f in flags.items() if f[s])
            cycles.append((c, tuple(_hamilton_cycle(g.colour_adjacency(c), s))))
    cert = CyclePartitionCertificate(tuple(cycles), frozenset(range(n)))
    return len(cert), cert


# -- two colours ----------------------------------------------------------------


class TwoPaths(NamedTuple):
    first: MonoPath
    second: MonoPath


class Split(NamedTuple):
    witness: SplitWitness


def two_path_search(g: ColouredGraph, colours: Sequence, budget: int = TWO_PATH_BUDGET):
    """First split ``S | rest`` with a Hamilton path of ``colours[0]`` on
    ``S`` and of ``colours[1]`` on the rest; either side may be empty.  A
    single path through everything is tried first, then ``S`` in increasing
    mask order.  Returns a :class:`TwoPaths` or ``None``."""
    n = g.n
    _check_budget(n, budget, "two_colour_partition")
    full = (1 << n) - 1
    a, b = colours
    adj_a = g.colour_adjacency(a) if a in g.colours else [0] * n
    adj_b = g.colour_adjacency(b) if b in g.colours else [0] * n
    ends_a = kernels.ham_path_ends(adj_a, n)
    ends_b = kernels.ham_path_ends(adj_b, n)
    for s in (full, *range(full)):
        if (s == 0 or ends_a[s]) and (s == full or ends_b[full ^ s]):
            p = _walk(ends_a, adj_a, s) if s else []
            q = _walk(ends_b, adj_b, full ^ s) if s != full else []
            return TwoPaths(MonoPath.of(p, a), MonoPath.of(q, b))
    return None


def two_colour_partition(g: ColouredGraph, budget: int = TWO_PATH_BUDGET) -> TwoPaths | Split:
    """Two disjoint paths of distinct colours covering everything, or a
    split witness.

    A split with all four parts nonempty is returned straight away: each
    colour then has two components, and no path of one colour together
    with a path of the other can reach all four parts.  Otherwise the two
    paths are found by exhaustive search.
    """
    assert isinstance(g.host, Bipartite)
    cols = sorted(g.colours)
    if len(cols) > 2:
        raise TooManyColours(f"{len(cols)} colours")
    w = detect_split(g)
    if isinstance(w, SplitWitness) and not w.degenerate:
        return Split(w)
    pair = (cols + [None, None])[:2] if cols else [None, None]
    for order in (pair, pair[::-1]):
        found = two_path_search(g, order, budget)
        if found is not None:
            return found
    if isinstance(w, SplitWitness):
        return Split(w)
    raise TheoremViolation("non-split 2-colouring without a two-path partition")
