"""Monochromatic connected matchings and colour-density bounds.

A connected matching of colour ``c`` is a matching whose edges all have
colour ``c`` and lie in one component of the colour-``c`` subgraph.

Covers are built in rounds.  Each round picks components covering the
current vertex set, extracts a maximum matching from each in turn, and
removes the matched vertices; a vertex left unmatched in its component has
lost that colour, so every round lowers the locality by at least one.  A
round that starts at locality 0 has only isolated vertices left; they are
reported as *trivial* single-vertex pieces, kept apart from the matching
count.
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import ComponentsDoNotCover, EmptyGraph, NoEdges, NotRLocal, TheoremViolation
from .graph import Bipartite, ColouredGraph, Complete, _components_of, host_edges, locality, restrict


class ConnectedMatching(NamedTuple):
    edges: tuple
    colour: Optional[int]
    component: frozenset

    def vertices(self) -> frozenset:
        return frozenset(v for e in self.edges for v in e)


class Round(NamedTuple):
    locality_before: int
    matchings: int
    locality_after: int


class MatchingCover(NamedTuple):
    matchings: tuple
    residual: frozenset
    trivial: tuple = ()
    rounds: tuple = ()

    @property
    def count(self) -> int:
        """Nontrivial matchings only; see :attr:`trivial`."""
        return len(self.matchings)

    def dumps(self) -> str:
        lines = []
        for m in self.matchings:
            edges = " ".join(f"{u}-{v}" for u, v in m.edges)
            lines.append(f"matching {m.colour}: {edges}")
        for v in self.trivial:
            lines.append(f"trivial: {v}")
        return "".join(line + "\n" for line in lines)


def parse_matching_cover(text: str) -> MatchingCover:
    """Inverse of :meth:`MatchingCover.dumps`; other lines are ignored.
    Components are not stored and come back empty."""
    matchings, trivial = [], []
    for line in text.splitlines():
        if line.startswith("matching "):
            head, _, body = line.partition(":")
            edges = tuple(tuple(int(x) for x in e.split("-")) for e in body.split())
            matchings.append(ConnectedMatching(edges, int(head.split()[1]), frozenset()))
        elif line.startswith("trivial:"):
            trivial.append(int(line.split(":")[1]))
    return MatchingCover(tuple(matchings), frozenset(), tuple(trivial))


# -- maximum matchings -------------------------------------------------------------


def _kuhn(left: Sequence[int], adj: dict) -> dict:
    """Augmenting-path maximum matching of a bipartite graph."""
    match: dict = {}

    def try_vertex(u, seen):
        for w in adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match or try_vertex(match[w], seen):
                match[w] = u
                return True
        return False

    for u in left:
        try_vertex(u, set())
    return {u: w for w, u in match.items()}


def _blossom(vertices: Sequence[int], adj: dict) -> dict:
    """Edmonds' blossom algorithm for maximum matching in a general graph."""
    idx = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    nbr = [[idx[w] for w in adj[v]] for v in vertices]
    match = [-1] * n
    for v in range(n):  # greedy start
        if match[v] == -1:
            for w in nbr[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break

    def find_path(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a, b):
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v, b, child, blossom):
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in nbr[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = find_path(root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return {vertices[i]: vertices[j] for i, j in enumerate(match) if j != -1}


def max_matching_in_component(g: ColouredGraph, c: int, comp: Iterable[int],
                              forbidden: Iterable[int] = ()) -> ConnectedMatching:
    """Maximum colour-``c`` matching on ``comp`` minus ``forbidden``."""
    comp = frozenset(comp)
    live = sorted(comp - set(forbidden))
    live_set = set(live)
    adj = {v: [w for w in live if w in live_set and g.colour(v, w) == c] for v in live}
    if isinstance(g.host, Bipartite):
        mate = _kuhn([v for v in live if g.side(v) == 0], adj)
    else:
        mate = _blossom(live, adj)
    edges = tuple(sorted((min(u, w), max(u, w)) for u, w in mate.items() if u < w))
    return ConnectedMatching(edges, c, comp)


def extract_matchings(g: ColouredGraph, components: Sequence[tuple[int, Iterable[int]]]
                      ) -> tuple[MatchingCover, ColouredGraph]:
    """Greedy extraction in list order: each component gives a maximum
    matching avoiding everything matched before it."""
    comps = [(c, frozenset(vs)) for c, vs in components]
    covered = frozenset().union(*(vs for _, vs in comps)) if comps else frozenset()
    if covered != frozenset(g.vertices):
        raise ComponentsDoNotCover(f"uncovered: {sorted(set(g.vertices) - covered)}")
    used: set = set()
    out = []
    for c, vs in comps:
        m = max_matching_in_component(g, c, vs, used)
        used |= m.vertices()
        out.append(m)
    residual = frozenset(g.vertices) - used
    return MatchingCover(tuple(out), residual), restrict(g, residual)


# -- component covers ----------------------------------------------------------------


def _colour_component(g, c, v):
    verts = [u for u in g.vertices if c in g.palette(u)]
    for comp in _components_of(g.colour_adjacency(c), verts):
        if v in comp:
            return comp
    return frozenset((v,))  # pragma: no cover


def component_cover_complete(g: ColouredGraph) -> list[tuple[int, frozenset]]:
    """Colour-``c`` components through vertex 0, one per colour it sees."""
    if g.n == 0:
        raise EmptyGraph("no vertices")
    return [(c, _colour_component(g, c, 0)) for c in sorted(g.palette(0))]


def component_cover_bipartite(g: ColouredGraph) -> list[tuple[int, frozenset]]:
    """Components through the ends of the first edge ``u-v``: one per colour
    at ``u`` and one per colour at ``v``, the colour of ``u-v`` counted once."""
    edges = g.edges()
    if not edges:
        raise NoEdges("no edges")
    u, v, d = edges[0]
    out = [(c, _colour_component(g, c, u)) for c in sorted(g.palette(u))]
    for c in sorted(g.palette(v)):
        if c == d:
            continue
        comp = _colour_component(g, c, v)
        if (c, comp) not in out:
            out.append((c, comp))
    return out


def _cover_rounds(g: ColouredGraph, r: int, cover_fn) -> MatchingCover:
    if locality(g) > r:
        raise NotRLocal(f"locality {locality(g)} > {r}")
    current = sorted(g.vertices)
    matchings: list = []
    trivial: list = []
    rounds = []
    while current:
        sub = restrict(g, current)
        k = locality(sub)
        if not sub.edges():
            trivial.extend(current)
            rounds.append(Round(k, 0, 0))
            break
        cover, rest = extract_matchings(sub, cover_fn(sub))
        lift = lambda x: current[x]  # noqa: E731
        found = 0
        for m in cover.matchings:
            if not m.edges:
                continue
            edges = tuple(sorted((lift(a), lift(b)) for a, b in m.edges))
            matchings.append(ConnectedMatching(edges, m.colour, frozenset(map(lift, m.component))))
            found += 1
        after = locality(rest)
        if after > k - 1:
            raise TheoremViolation(f"residual locality {after} after a round at locality {k}")
        rounds.append(Round(k, found, after))
        current = [lift(x) for x in sorted(cover.residual)]
    matched = frozenset(v for m in matchings for v in m.vertices())
    return MatchingCover(tuple(matchings), frozenset(g.vertices) - matched, tuple(trivial), tuple(rounds))


def matching_cover_complete(g: ColouredGraph, r: int) -> MatchingCover:
    assert isinstance(g.host, Complete)
    return _cover_rounds(g, r, component_cover_complete)


def matching_cover_bipartite(g: ColouredGraph, r: int) -> MatchingCover:
    assert isinstance(g.host, Bipartite)
    return _cover_rounds(g, r, component_cover_bipartite)


def verify_matching_cover(g: ColouredGraph, cover: MatchingCover) -> bool:
    """Matchings are disjoint, monochromatic, inside one colour component,
    and together with the trivial pieces cover every vertex."""
    seen: set = set()
    for m in cover.matchings:
        vs = [v for e in m.edges for v in e]
        if len(set(vs)) != len(vs) or seen & set(vs):
            return False
        seen |= set(vs)
        if any(g.colour(a, b) != m.colour for a, b in m.edges):
            return False
        comp = _colour_component(g, m.colour, vs[0]) if vs else frozenset()
        if not set(vs) <= comp:
            return False
    if seen & set(cover.trivial):
        return False
    return seen | set(cover.trivial) == set(g.vertices)


# -- density ---------------------------------------------------------------------------


def colour_counts(g: ColouredGraph) -> dict[int, int]:
    counts: dict[int, int] = {}
    for _, _, c in g.edges():
        counts[c] = counts.get(c, 0) + 1
    return counts


def densest_colour(g: ColouredGraph) -> tuple[int, int, Fraction]:
    """Colour with the most edges, its edge count, and the lower bound
    ``a^2 / (2 r^2)`` (``a`` the average degree, ``r`` the locality)."""
    counts = colour_counts(g)
    if not counts:
        raise EmptyGraph("no edges")
    r = locality(g)
    a = Fraction(2 * len(g.edges()), g.n)
    bound = a * a / (2 * r * r)
    colour = min(counts, key=lambda c: (-counts[c], c))
    if counts[colour] < bound:
        raise TheoremViolation(f"densest colour has {counts[colour]} < {bound} edges")
    return colour, counts[colour], bound


class Peeling(NamedTuple):
    kept: frozenset
    residual: int
    t: int
    capacity: int


def _capacity(host) -> int:
    if isinstance(host, Bipartite):
        return host.top * host.bottom
    return sum(1 for _ in host_edges(host))


def colour_peeling(g: ColouredGraph, eps) -> Peeling:
    """Remove the largest colour class while fewer than ``t`` colours are
    gone and the remaining density is at least ``eps``.

    ``t = ceil(-(2 r^2 / eps) ln eps)``; density is the remaining edge count
    over the host's edge count (``top * bottom`` or ``n(n-1)/2``).  The
    residual is checked against ``eps`` times the host's edge count.
    """
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    r = max(locality(g), 1)
    t = math.ceil(-(2 * r * r / float(eps)) * math.log(float(eps)))
    cap = _capacity(g.host)
    counts = colour_counts(g)
    remaining = sum(counts.values())
    kept: list = []
    while len(kept) < t and counts and cap and Fraction(remaining, cap) >= eps:
        c = min(counts, key=lambda x: (-counts[x], x))
        remaining -= counts.pop(c)
        kept.append(c)
    if remaining > eps * cap:
        raise TheoremViolation(f"residual {remaining} exceeds {eps} * {cap}")
    return Peeling(frozenset(kept), remaining, t, cap)


__all__ = [
    "ConnectedMatching", "MatchingCover", "Round", "max_matching_in_component", "extract_matchings",
    "component_cover_complete", "component_cover_bipartite", "matching_cover_complete",
    "matching_cover_bipartite", "verify_matching_cover", "densest_colour", "colour_peeling",
    "colour_counts", "Peeling",
]
