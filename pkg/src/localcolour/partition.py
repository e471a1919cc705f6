"""Constructive partition of a 2-locally coloured K_{n,n} into at most three
monochromatic paths.

The engine simplifies the colouring, reads off its shape and then walks a
fixed sequence of constructions.  Each construction builds an even
monochromatic path ``P`` and hands the rest of the graph to one of two
finishing moves:

* :meth:`_Engine.one_then_three`: every rest vertex on one side sees only
  two colours ``{i, j}``, so the rest is 2-coloured.  Either two paths of
  distinct colours cover it, or it is split, in which case ``P`` is grown
  or its end vertex is used to glue two paths of the split together.
* :meth:`_Engine.great_observation`: every rest vertex sees colour ``i``;
  merging the other colours gives a 2-colouring that is not split as long
  as the rest is connected in ``i``.

The two-colour step itself is exact search (``two_colour_partition``).
Every move re-checks its preconditions at run time and returns ``None``
when they fail, so a move that does not apply is simply skipped.  If none
applies the engine falls back to the exact solver and records an anomaly;
on valid input this never happens.

Where the construction leaves a choice open (which vertices an alternating
path uses, which end is joined), vertices are taken in ascending index
order; such choices are the engine's own and are checked only through the
final certificate.
"""

from __future__ import annotations

import threading
from itertools import permutations
from typing import Optional

from .errors import LocalColourError, NotBalancedBipartite, NotTwoLocal
from .graph import Bipartite, ColouredGraph, connected_in_colour, locality, restrict
from .paths import (MonoPath, PathPartitionCertificate, Split, TwoPaths, check_path,
                    min_mono_path_partition, two_colour_partition, verify_path_partition)
from .structure import BOTTOM, TOP, SplitWitness, classify_2local, complete_bipartite_in_colour, simplify

_lock = threading.Lock()
_anomalies: list[dict] = []


def anomaly_count() -> int:
    with _lock:
        return len(_anomalies)


def anomalies() -> list[dict]:
    with _lock:
        return list(_anomalies)


def reset_anomalies() -> None:
    with _lock:
        _anomalies.clear()


def _record(g, reason):
    with _lock:
        _anomalies.append({"host": g.host, "edges": tuple(g.edges()), "reason": reason})


# -- alternating builders --------------------------------------------------------


def _alternate(first, second):
    """``first[0], second[0], first[1], ...``; lengths differ by at most one
    and ``first`` is the longer (or equal) list."""
    assert 0 <= len(first) - len(second) <= 1, (len(first), len(second))
    out = []
    for k, x in enumerate(first):
        out.append(x)
        if k < len(second):
            out.append(second[k])
    return out


def _pick(pool, k, avoid=()):
    """``k`` vertices of ``pool`` in ascending order, preferring ones not in
    ``avoid``.  ``None`` if the pool is too small."""
    good = sorted(v for v in pool if v not in avoid)
    bad = sorted(v for v in pool if v in avoid)
    chosen = (good + bad)[:k]
    return chosen if len(chosen) == k else None


def _block_path(a, b, na, nb):
    """Path inside a complete bipartite block using ``na`` vertices of ``a``
    and ``nb`` of ``b`` (ascending), ``|na - nb| <= 1``."""
    xs, ys = sorted(a)[:na], sorted(b)[:nb]
    return _alternate(xs, ys) if na >= nb else _alternate(ys, xs)


# -- the engine ------------------------------------------------------------------


class _Engine:
    def __init__(self, g: ColouredGraph):
        self.g = g
        self.sides = {TOP: frozenset(g.top()), BOTTOM: frozenset(g.bottom())}
        self.all = frozenset(g.vertices)

    def other(self, side):
        return BOTTOM if side == TOP else TOP

    def path_ok(self, p, colour):
        return check_path(self.g, MonoPath.of(p, colour)).ok

    # -- two-colour finishing ----------------------------------------------------

    def two_colour(self, rest):
        """Partition the 2-coloured subgraph on ``rest``: a list of paths, or a
        split witness in global indices."""
        keep = sorted(rest)
        if not keep:
            return []
        sub = restrict(self.g, keep)
        try:
            res = two_colour_partition(sub)
        except LocalColourError:
            return None
        if isinstance(res, TwoPaths):
            return [MonoPath.of([keep[v] for v in p.vertices], p.colour) for p in res if p.vertices]
        w = res.witness
        lift = lambda s: frozenset(keep[v] for v in s)  # noqa: E731
        return SplitWitness(tuple(map(lift, w.top_parts)), tuple(map(lift, w.bottom_parts)), w.colours)

    def split_paths(self, w: SplitWitness):
        """At most three paths for a split block structure: the two blocks of
        one colour absorb all but a balanced remainder, which sits inside a
        block of the other colour."""
        (t1, t2), (b1, b2) = w.top_parts, w.bottom_parts
        c, c2 = w.colours
        best = None
        for x, y, parts in ((c, c2, ((t1, b1), (t2, b2))), (c2, c, ((t1, b2), (t2, b1)))):
            (ta, ba), (tb, bb) = parts
            if len(ta) - len(ba) < 0:
                (ta, ba), (tb, bb) = (tb, bb), (ta, ba)
            e = len(ta) - len(ba)
            p1 = _block_path(ta, ba, min(len(ta), len(ba) + 1), len(ba))
            p2 = _block_path(tb, bb, len(tb), min(len(bb), len(tb) + 1))
            left_t = sorted(set(ta) - set(p1))
            left_b = sorted(set(bb) - set(p2))
            if abs(len(left_t) - len(left_b)) > 1:
                continue
            p3 = _block_path(left_t, left_b, len(left_t), len(left_b))
            paths = [MonoPath.of(p, col) for p, col in ((p1, x), (p2, x), (p3, y)) if p]
            if e < 0:  # pragma: no cover - orientation fixed above
                continue
            if best is None or len(paths) < len(best):
                best = paths
        return best

    # -- finishing moves -----------------------------------------------------------

    def one_then_three(self, P, k, side, pair):
        """``P`` is an even colour-``k`` path and every vertex of ``side`` off
        ``P`` sees only colours in ``pair``.  Returns at most three paths."""
        g = self.g
        P = list(P)
        if len(P) % 2 or (len(P) >= 2 and not self.path_ok(P, k)):
            return None
        S = self.sides[side]
        while True:
            rest = self.all - set(P)
            if any(not g.palette(v) <= set(pair) for v in rest & S):
                return None
            res = self.two_colour(rest)
            if res is None:
                return None
            if isinstance(res, list):
                return ([MonoPath.of(P, k)] if P else []) + res
            if res.degenerate:
                return None
            if not P:
                return self.split_paths(res)
            if P[0] not in S:
                P.reverse()
            p = P[-1]  # end of P on the far side
            s_rest = sorted(rest & S)
            seen = {g.colour(p, t) for t in s_rest}
            if k in seen:
                t = next(t for t in s_rest if g.colour(p, t) == k)
                b = next((b for b in sorted(rest - S) if g.colour(t, b) == k), None)
                if b is None:
                    return None
                P += [t, b]
                continue
            if len(seen) != 1:
                return None
            (x,) = seen
            joined = self._glue(res, S, p, x)
            if joined is None:
                return None
            return [MonoPath.of(P[:-1], k)] + joined

    def _glue(self, w: SplitWitness, S, p, x):
        """Cover a split rest by two colour-``x`` paths ending on side ``S``
        (joined through ``p``) and one path of the other colour."""
        (t1, t2), (b1, b2) = w.top_parts, w.bottom_parts
        if next(iter(t1 | t2)) in S:
            s1, s2, o1, o2 = t1, t2, b1, b2
        else:
            s1, s2, o1, o2 = b1, b2, t1, t2
        c, c2 = w.colours
        y = c2 if x == c else c
        if x == c:
            (sa, oa), (sb, ob) = (s1, o1), (s2, o2)
        else:
            (sa, oa), (sb, ob) = (s1, o2), (s2, o1)
        if len(sa) < len(oa):
            (sa, oa), (sb, ob) = (sb, ob), (sa, oa)
        e = len(sa) - len(oa)
        # P1 ends on S, using all of oa
        ns = min(len(sa), len(oa) + 1)
        p1 = _block_path(sa, oa, ns, len(oa))
        if p1 and p1[-1] not in S:
            p1.reverse()
        # P2 starts on S, using all of sb and as many of ob
        p2 = _block_path(sb, ob, len(sb), len(sb))
        if p2 and p2[0] not in S:
            p2.reverse()
        if p1 and p1[-1] not in S or p2 and p2[0] not in S:
            return None
        left_s = sorted(set(sa) - set(p1))
        left_o = sorted(set(ob) - set(p2))
        if len(left_o) - len(left_s) not in (0, 1) or len(left_o) != e:
            return None
        p3 = _alternate(left_o, left_s)
        joined = p1 + [p] + p2
        out = [MonoPath.of(joined, x)]
        if p3:
            out.append(MonoPath.of(p3, y))
        return out

    def great_observation(self, P, k, i):
        """``P`` is an even colour-``k`` path and every rest vertex sees colour
        ``i``; merge the other colours and split the rest into two paths."""
        g = self.g
        if len(P) % 2 or (len(P) >= 2 and not self.path_ok(P, k)):
            return None
        rest = sorted(self.all - set(P))
        rs = set(rest)
        for v in rest:
            others = {g.colour(v, u) for u in rs if g.has_edge(v, u)} - {i}
            if len(others) > 1:
                return None
        sub = restrict(g, rest)
        merged = max(g.colours) + 1
        sub = sub.recoloured({c: merged for c in sub.colours if c != i})
        try:
            res = two_colour_partition(sub)
        except LocalColourError:
            return None
        if not isinstance(res, TwoPaths):
            return None
        out = [MonoPath.of(P, k)] if P else []
        for q in res:
            vs = [rest[v] for v in q.vertices]
            if not vs:
                continue
            col = g.colour(vs[0], vs[1]) if len(vs) > 1 else q.colour
            out.append(MonoPath.of(vs, col))
        return out

    # -- shapes --------------------------------------------------------------------

    def run(self):
        g = self.g
        cols = sorted(g.colours)
        if len(cols) <= 2:
            res = self.two_colour(self.all)
            if isinstance(res, SplitWitness):
                return "split", self.split_paths(res)
            return "two-colour", res
        rep = classify_2local(g)
        inv = {v: k for k, v in rep.colour_map.items()}
        # work in the relabelled graph; reported sides may be swapped
        sub = _Engine(g.recoloured(rep.colour_map))
        if rep.shape == "FourColour":
            route, paths = "four-colour", sub.four_colour(rep)
        else:
            route, paths = sub.three_colour(rep)
        if paths is None:
            return route, None
        return route, [MonoPath.of(p.vertices, inv.get(p.colour, p.colour)) for p in paths]

    def blk(self, side, i, j):
        """Vertices on reported side ``side`` whose palette is ``{i, j}``."""
        return self.rep_blocks[(side, frozenset((i, j)))]

    def four_colour(self, rep):
        self.rep_blocks = rep.blocks
        top = rep.side_of(TOP)
        n = len(self.sides[top])
        for (a, b), (c, d) in (((1, 2), (3, 4)), ((3, 4), (1, 2))):
            X = sorted(self.blk(TOP, a, b))
            if 2 * len(X) > n:
                continue
            for col in (b, a):
                Y = sorted(v for key, vs in rep.blocks.items()
                           if key[0] == BOTTOM and col in key[1] for v in vs)
                if len(Y) < len(X):
                    continue
                P = _alternate(X, Y[:len(X)])
                out = self.one_then_three(P, col, top, (c, d))
                if out is not None:
                    return out
        return None

    def three_colour(self, rep):
        self.rep_blocks = rep.blocks
        steps = (("single-colour-vertex", self.single_colour_vertex),
                 ("complete-class", self.complete_class),
                 ("disconnected-class", self.disconnected_class),
                 ("empty-corner", self.empty_corner),
                 ("final", self.final))
        for name, step in steps:
            out = step(rep)
            if out is not None:
                return name, out
        return "none", None

    def orientations(self):
        """(top, bottom) as original side names, block side keys."""
        yield (TOP, BOTTOM)
        yield (BOTTOM, TOP)

    def single_colour_vertex(self, rep):
        g = self.g
        for x in sorted(self.all):
            pal = g.palette(x)
            if len(pal) != 1:
                continue
            (a,) = pal
            top = TOP if x in self.sides[TOP] else BOTTOM
            bot = self.other(top)
            for b, c in permutations([v for v in (1, 2, 3) if v != a]):
                A = sorted(self.blk(top, b, c))
                B = sorted(self.blk(bot, a, c))
                if len(A) > len(B):
                    P = _alternate(B, A[:len(B)])
                    out = self.one_then_three(P, c, bot, (a, b))
                else:
                    P = _alternate(A, B[:len(A)])
                    out = self.great_observation(P, c, a)
                if out is not None:
                    return out
        return None

    def complete_class(self, rep):
        g = self.g
        for i in (1, 2, 3):
            if not complete_bipartite_in_colour(g, i):
                continue
            j, k = (v for v in (1, 2, 3) if v != i)
            for top in (TOP, BOTTOM):
                bot = self.other(top)
                T = sorted(self.blk(top, i, j) | self.blk(top, i, k))
                B = sorted(self.blk(bot, i, j) | self.blk(bot, i, k))
                if len(T) > len(B):
                    continue
                P = _alternate(T, B[:len(T)])
                out = self.one_then_three(P, i, top, (j, k))
                if out is not None:
                    return out
        return None

    def disconnected_class(self, rep):
        g = self.g
        for c in (1, 2, 3):
            verts = {v for v in self.all if c in g.palette(v)}
            if connected_in_colour(g, verts, c):
                continue
            for a, b in permutations(self._others_of(c)):
                if self._has_colour_inside(c, a, c) or self._has_colour_inside(c, b, c):
                    continue
                for top, bot in self.orientations():
                    Tac = sorted(self.blk(top, a, c))
                    Bac = sorted(self.blk(bot, a, c))
                    Bab = sorted(self.blk(bot, a, b))
                    if len(Tac) < len(Bac):
                        continue
                    if len(Tac) >= len(Bab) + len(Bac):
                        bots = Bac + Bab
                        P = _alternate(bots, Tac[:len(bots)])
                        out = self.one_then_three(P, a, bot, (b, c))
                    else:
                        bots = Bac + Bab[:len(Tac) - len(Bac)]
                        P = _alternate(Tac, bots)
                        out = self.great_observation(P, a, b)
                    if out is not None:
                        return out
        return None

    def _others_of(self, c):
        return [v for v in (1, 2, 3) if v != c]

    def _has_colour_inside(self, x, y, col):
        """Does the block ``C_x & C_y`` contain an edge of colour ``col``?"""
        g = self.g
        return any(g.colour(t, b) == col
                   for t in self.blk(TOP, x, y) for b in self.blk(BOTTOM, x, y))

    def empty_corner(self, rep):
        for i in (1, 2, 3):
            for j, k in permutations(self._others_of(i)):
                for top, bot in self.orientations():
                    if self.blk(bot, i, j) or self.blk(top, i, k):
                        continue
                    X = sorted(self.blk(top, i, j))
                    Y = sorted(self.blk(bot, i, k))
                    if len(X) <= len(Y):
                        P = _alternate(X, Y[:len(X)])
                        out = self.one_then_three(P, i, top, (j, k))
                    else:
                        P = _alternate(Y, X[:len(Y)])
                        out = self.one_then_three(P, i, bot, (j, k))
                    if out is not None:
                        return out
        return None

    def _edges_in(self, x, y, col):
        g = self.g
        return [(t, b) for t in sorted(self.blk(TOP, x, y)) for b in sorted(self.blk(BOTTOM, x, y))
                if g.colour(t, b) == col]

    def final(self, rep):
        for one in (1, 2, 3):
            for two, three in permutations(self._others_of(one)):
                for top, bot in self.orientations():
                    out = self._final_case(one, two, three, top, bot)
                    if out is not None:
                        return out
        return None

    def _final_case(self, one, two, three, top, bot):
        T12, B12 = self.blk(top, one, two), self.blk(bot, one, two)
        T13, B13 = self.blk(top, one, three), self.blk(bot, one, three)
        A, B, C, D = len(T12), len(B12), len(T13), len(B13)
        if not (A and B and C and D) or A < D:
            return None
        e1s = self._oriented_edges(one, two, one, top) + self._oriented_edges(one, three, one, top)
        if B <= C:
            for t, b in e1s:
                P = self._cover_bottoms(t, b, T12, B12, T13, B13)
                if P is None:
                    continue
                out = self.one_then_three(P, one, bot, (two, three))
                if out is not None:
                    return out
            return None
        e1s = self._oriented_edges(one, three, one, top) + self._oriented_edges(one, two, one, top)
        e2s = self._oriented_edges(two, three, two, top) + self._oriented_edges(one, two, two, top)
        for t, b in e1s:
            for e2 in e2s:
                if {t, b} & set(e2):
                    continue
                P = self._cover_c13(t, b, T12, B12, T13, B13, set(e2))
                if P is None:
                    continue
                if set(e2) & set(P):
                    out = None
                    if B12 <= set(P):
                        out = self.one_then_three(P, one, bot, (two, three))
                    if out is None and T12 <= set(P):
                        out = self.one_then_three(P, one, top, (two, three))
                else:
                    out = self.great_observation(P, one, two)
                if out is not None:
                    return out
        return None

    def _oriented_edges(self, x, y, col, top):
        """Colour-``col`` edges inside block ``C_x & C_y`` as (top-role end,
        bottom-role end)."""
        g = self.g
        T, B = self.blk(top, x, y), self.blk(self.other(top), x, y)
        return [(t, b) for t in sorted(T) for b in sorted(B) if g.colour(t, b) == col]

    def _cover_bottoms(self, t, b, T12, B12, T13, B13):
        """Even colour-1 path over all of ``B12 | B13`` through the edge
        ``t-b`` that lies inside ``C12`` or ``C13``."""
        A, B, C, D = len(T12), len(B12), len(T13), len(B13)
        if t in T12:
            if A < D or C < B:
                return None
            t12 = [t] + sorted(T12 - {t})
            seg1 = (_alternate(sorted(B13), t12[1:D]) + [t]) if D else [t]
            t13 = sorted(T13)
            P = seg1 + _alternate([b] + sorted(B12 - {b}), t13[:B - 1])
            if D:
                P.append(t13[B - 1])
        else:
            if C < B or A < D:
                return None
            t13 = [t] + sorted(T13 - {t})
            seg2 = (_alternate(sorted(B12), t13[1:B]) + [t]) if B else [t]
            t12 = sorted(T12)
            P = seg2 + _alternate([b] + sorted(B13 - {b}), t12[:D - 1])
            if B:
                P.append(t12[D - 1])
        return P if len(P) % 2 == 0 else None

    def _cover_c13(self, t, b, T12, B12, T13, B13, avoid):
        """Even colour-1 path over all of ``C13`` through the edge ``t-b``,
        keeping clear of ``avoid`` where the counts allow."""
        C, D = len(T13), len(B13)
        if t in T13:
            tops = sorted(T13 - {t}) + [t]
            bots = _pick(B12, C - 1, avoid)
            mids = _pick(T12, D - 1, avoid)
            if bots is None or mids is None:
                return None
            X = _alternate(tops, bots)
            Y = _alternate([b] + sorted(B13 - {b}), mids)
            return X + Y
        bots = _pick(B12 - {b}, C - 1, avoid)
        mids = _pick(T12 - {t}, D - 1, avoid)
        if bots is None or mids is None:
            return None
        X = _alternate(sorted(T13), bots + [b])
        Y = _alternate([t] + mids, sorted(B13))
        return X + Y


def _pull_back(g0: ColouredGraph, paths) -> list[MonoPath]:
    """Re-colour paths of the simplified graph in original colours.  Merged
    colours have disjoint classes, so every path stays monochromatic."""
    out = []
    for p in paths:
        vs = p.vertices
        col = g0.colour(vs[0], vs[1]) if len(vs) > 1 else min(g0.palette(vs[0]), default=p.colour)
        out.append(MonoPath.of(vs, col))
    return out


def partition_2local_bipartite(g: ColouredGraph, fallback_budget: int = 16) -> PathPartitionCertificate:
    if not isinstance(g.host, Bipartite) or not g.host.balanced:
        raise NotBalancedBipartite(f"{g.host!r}")
    if locality(g) > 2:
        raise NotTwoLocal(f"locality {locality(g)}")
    if g.n == 0:
        return PathPartitionCertificate.of([], "empty")
    simple, _ = simplify(g)
    route, paths = "none", None
    try:
        route, paths = _Engine(simple).run()
    except LocalColourError as exc:  # an engine bug, never expected
        route = f"error {type(exc).__name__}"
    if paths is not None:
        cert = PathPartitionCertificate.of(_pull_back(g, paths), route)
        if len(cert) <= 3 and verify_path_partition(g, cert):
            return cert
        route = f"{route} produced an invalid certificate"
    _record(g, route)
    _, cert = min_mono_path_partition(g, budget=fallback_budget)
    return cert.with_route("fallback")
