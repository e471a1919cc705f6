"""Simplification, split detection and the shape of 2-local colourings.

For a colour ``c`` its class ``C_c`` is the set of vertices incident to a
colour-``c`` edge.  A colouring is *simple* when every two classes meet;
disjoint classes can be merged without affecting monochromatic paths.

Simple 2-local colourings of a complete bipartite graph come in three
shapes:

* ``AtMostTwo``: one or two colours.
* ``ThreeColour``: three colours.  Vertices are grouped by palette; a
  vertex that sees two colours ``{i, j}`` lies in the block ``C_i & C_j``.
* ``FourColour``: four colours.  After relabelling (and possibly swapping
  the sides) every top vertex sees ``{1, 2}`` or ``{3, 4}`` and every bottom
  vertex sees one of ``{1, 3}, {1, 4}, {2, 3}, {2, 4}``.

Five or more colours cannot occur; :func:`classify_2local` raises
:class:`StructureViolation` if it ever sees them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple, Optional

from .errors import NotSimple, NotTwoLocal, StructureViolation, UnknownColour
from .graph import Bipartite, ColouredGraph, colour_class, locality

TOP, BOTTOM = "top", "bottom"


# -- simplicity --------------------------------------------------------------


def _class_sets(g: ColouredGraph) -> dict[int, frozenset]:
    sets: dict[int, set] = {c: set() for c in g.colours}
    for u, v, c in g.edges():
        sets[c].add(u)
        sets[c].add(v)
    return {c: frozenset(s) for c, s in sets.items()}


def is_simple(g: ColouredGraph) -> bool:
    sets = _class_sets(g)
    return all(sets[a] & sets[b] for a, b in combinations(sorted(sets), 2))


def simplify(g: ColouredGraph) -> tuple[ColouredGraph, dict[int, int]]:
    """Merge colours with disjoint classes until the colouring is simple.

    Pairs are merged smallest-first, the larger id folding into the smaller.
    Returns the simplified graph and the old-to-new colour map (identity on
    colours that were not merged).
    """
    sets = {c: set(s) for c, s in _class_sets(g).items()}
    mapping = {c: c for c in sets}
    while True:
        pair = next(((a, b) for a, b in combinations(sorted(sets), 2)
                     if not sets[a] & sets[b]), None)
        if pair is None:
            break
        a, b = pair
        sets[a] |= sets.pop(b)
        for old, new in mapping.items():
            if new == b:
                mapping[old] = a
    if all(k == v for k, v in mapping.items()):
        return g, mapping
    return g.recoloured(mapping), mapping


# -- split colourings ----------------------------------------------------------


class SplitWitness(NamedTuple):
    """``[T1,B1]`` and ``[T2,B2]`` have colour ``c``; ``[T1,B2]`` and
    ``[T2,B1]`` have colour ``c2``.  ``c2`` is ``None`` for a monochromatic
    input, where ``T2`` and ``B2`` are empty."""

    top_parts: tuple[frozenset, frozenset]
    bottom_parts: tuple[frozenset, frozenset]
    colours: tuple[int, Optional[int]]

    @property
    def degenerate(self) -> bool:
        return not all(self.top_parts) or not all(self.bottom_parts)

    def sizes(self) -> tuple[int, int, int, int]:
        (t1, t2), (b1, b2) = self.top_parts, self.bottom_parts
        return len(t1), len(t2), len(b1), len(b2)


class NotSplit(NamedTuple):
    """``minor`` is ``(t, t2, b, b2)`` spanning a 2x2 minor with an odd
    number of edges of ``t``-``b``'s colour, or ``None`` when the reason is
    the colour count."""

    reason: str
    minor: Optional[tuple[int, int, int, int]] = None


def detect_split(g: ColouredGraph) -> SplitWitness | NotSplit:
    """Decide whether a 2-coloured bipartite graph is split.

    A 0/1 matrix is a block pattern ``x_i xor y_j`` exactly when every 2x2
    minor has an even number of ones, so the row of the first top vertex and
    the column of the first bottom vertex determine the only candidate.
    """
    assert isinstance(g.host, Bipartite)
    top, bot = g.top(), g.bottom()
    cols = sorted(g.colours)
    if len(cols) > 2:
        return NotSplit(f"{len(cols)} colours")
    if not top or not bot:
        c = cols[0] if cols else 0
        return SplitWitness((frozenset(top), frozenset()), (frozenset(bot), frozenset()), (c, None))
    t0, b0 = top[0], bot[0]
    c = g.colour(t0, b0)
    other = next((x for x in cols if x != c), None)
    T1 = frozenset(t for t in top if g.colour(t, b0) == c)
    B1 = frozenset(b for b in bot if g.colour(t0, b) == c)
    for t in top:
        for b in bot:
            want = c if ((t in T1) == (b in B1)) else other
            if g.colour(t, b) != want:
                return NotSplit("odd 2x2 minor", (t0, t, b0, b))
    return SplitWitness((T1, frozenset(top) - T1), (B1, frozenset(bot) - B1), (c, other))


# -- classification ----------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    """Shape of a simple 2-local bipartite colouring.

    Colours are renamed to ``1..k`` via ``colour_map`` (original -> new) and
    sides are named after ``side_swapped`` is applied.  ``blocks`` maps
    ``(side, frozenset({i, j}))`` to the vertices on that side whose palette
    is exactly ``{i, j}`` (new names); ``mono`` maps ``(side, i)`` to those
    seeing only ``i``.  Empty entries are kept for every pair.
    """

    simple: bool
    colour_count: int
    shape: str
    blocks: dict = field(default_factory=dict)
    mono: dict = field(default_factory=dict)
    colour_map: dict = field(default_factory=dict)
    side_swapped: bool = False

    def block(self, side: str, i: int, j: int) -> frozenset:
        return self.blocks.get((side, frozenset((i, j))), frozenset())

    def side_of(self, side: str) -> str:
        """Original side name of a reported side."""
        if not self.side_swapped:
            return side
        return BOTTOM if side == TOP else TOP


def _group(g, verts, cmap):
    blocks, mono = {}, {}
    for v in verts:
        pal = frozenset(cmap[c] for c in g.palette(v))
        if len(pal) == 2:
            blocks.setdefault(pal, set()).add(v)
        elif len(pal) == 1:
            mono.setdefault(next(iter(pal)), set()).add(v)
    return blocks, mono


def classify_2local(g: ColouredGraph) -> StructureReport:
    if not isinstance(g.host, Bipartite):
        raise StructureViolation("bipartite host required")
    if locality(g) > 2:
        raise NotTwoLocal(f"locality {locality(g)}")
    if not is_simple(g):
        raise NotSimple("colour classes are not pairwise intersecting")
    cols = sorted(g.colours)
    k = len(cols)
    if k >= 5:
        raise StructureViolation(f"simple 2-local colouring with {k} colours")
    sides = {TOP: g.top(), BOTTOM: g.bottom()}
    if k <= 3:
        cmap = {c: i + 1 for i, c in enumerate(cols)}
        shape = "ThreeColour" if k == 3 else "AtMostTwo"
        swapped = False
    else:
        cmap, swapped = _four_colour_labels(g, cols, sides)
        shape = "FourColour"
    if swapped:
        sides = {TOP: sides[BOTTOM], BOTTOM: sides[TOP]}
    blocks, mono = {}, {}
    labels = range(1, k + 1)
    for side, verts in sides.items():
        bl, mo = _group(g, verts, cmap)
        for i, j in combinations(labels, 2):
            blocks[(side, frozenset((i, j)))] = frozenset(bl.get(frozenset((i, j)), ()))
        for i in labels:
            mono[(side, i)] = frozenset(mo.get(i, ()))
    report = StructureReport(True, k, shape, blocks, mono, cmap, swapped)
    if shape == "FourColour":
        _check_four(report, sides)
    elif shape == "ThreeColour":
        _check_three(report, sides)
    return report


def _four_colour_labels(g, cols, sides):
    for swapped, side in ((False, TOP), (True, BOTTOM)):
        pals = {g.palette(v) for v in sides[side]}
        if len(pals) == 2 and all(len(p) == 2 for p in pals):
            p, q = sorted(sorted(x) for x in pals)
            if not set(p) & set(q):
                return {p[0]: 1, p[1]: 2, q[0]: 3, q[1]: 4}, swapped
    raise StructureViolation("four colours but no side splits into two disjoint colour pairs")


def _check_four(report, sides):
    b = report.block
    top_ok = b(TOP, 1, 2) | b(TOP, 3, 4) == frozenset(sides[TOP])
    bot_ok = b(BOTTOM, 1, 3) | b(BOTTOM, 1, 4) | b(BOTTOM, 2, 3) | b(BOTTOM, 2, 4) == frozenset(sides[BOTTOM])
    if not (top_ok and bot_ok):
        raise StructureViolation("four-colour blocks do not cover the sides")
    for i, j in combinations(range(1, 5), 2):
        if not (b(TOP, i, j) or b(BOTTOM, i, j)):
            raise StructureViolation(f"classes {i} and {j} do not meet")


def _check_three(report, sides):
    for side, verts in sides.items():
        covered = set()
        for key, vs in list(report.blocks.items()) + list(report.mono.items()):
            if key[0] == side:
                covered |= vs
        if covered != set(verts):
            raise StructureViolation(f"{side} vertices outside blocks")
    # a vertex seeing only colour i is joined in colour i to the whole other
    # side, so nothing there can avoid i
    for side, other in ((TOP, BOTTOM), (BOTTOM, TOP)):
        for i in (1, 2, 3):
            if report.mono[(side, i)]:
                j, k = (x for x in (1, 2, 3) if x != i)
                if report.block(other, j, k) or any(report.mono[(other, x)] for x in (j, k)):
                    raise StructureViolation("single-colour vertex facing a vertex without its colour")


def complete_bipartite_in_colour(g: ColouredGraph, c: int) -> bool:
    assert isinstance(g.host, Bipartite)
    verts = colour_class(g, c).vertices
    top = [v for v in verts if g.side(v) == 0]
    bot = [v for v in verts if g.side(v) == 1]
    return all(g.colour(t, b) == c for t in top for b in bot)


def class_vertices(g: ColouredGraph, c: int) -> frozenset:
    """Vertex set of ``C_c``; raises :class:`UnknownColour`."""
    if c not in g.colours:
        raise UnknownColour(c)
    return _class_sets(g)[c]
