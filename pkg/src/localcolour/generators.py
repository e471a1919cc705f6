"""Deterministic constructions of extremal and illustrative colourings, plus
a seeded random r-local generator for property tests."""

from __future__ import annotations

import random
from typing import Sequence

from .errors import InconsistentBlocks
from .graph import Bipartite, ColouredGraph, Complete, HostKind, Multipartite, host_edges
from .structure import is_simple

RED, GREEN, BLUE = 1, 2, 3


def _blocks(sizes: Sequence[int], start: int = 0) -> list[range]:
    out = []
    for s in sizes:
        out.append(range(start, start + s))
        start += s
    return out


def _block_index(blocks, v):
    for i, b in enumerate(blocks):
        if v in b:
            return i
    raise ValueError(v)  # pragma: no cover


def gen_split(top1: int, top2: int, bot1: int, bot2: int) -> ColouredGraph:
    """``[T1,B1]`` and ``[T2,B2]`` colour 1, the cross blocks colour 2."""
    if min(top1, top2, bot1, bot2) < 0:
        raise ValueError("sizes must be nonnegative")
    host = Bipartite(top1 + top2, bot1 + bot2)
    a = top1 + top2

    def colour(t, b):
        return 1 if (t < top1) == (b - a < bot1) else 2

    return ColouredGraph.from_function(host, colour)


def gen_generalized_split(r: int, block_size: int) -> ColouredGraph:
    """Both sides cut into ``r`` blocks; ``[T_i, B_j]`` gets colour
    ``((i + j) mod r) + 1``.

    Every vertex meets each colour exactly once per block on the other side,
    so the colouring is r-local, and ``r = 2`` gives the split colouring.
    """
    if r < 1 or block_size < 1:
        raise ValueError("r and block_size must be positive")
    n = r * block_size
    host = Bipartite(n, n)
    return ColouredGraph.from_function(host, lambda t, b: ((t // block_size + (b - n) // block_size) % r) + 1)


def grid_vertex(t: int, row: int, col: int) -> int:
    """Index of grid cell ``(row, col)``, both 1-based, in ``gen_grid(t)``."""
    return (row - 1) * t + (col - 1)


def gen_grid(t: int, complete: bool = True) -> ColouredGraph:
    """A ``t x t`` grid whose row-``i`` and column-``i`` edges have colour
    ``i``, completed with colour ``t + 1``.

    With ``complete`` the host is ``K_{t^2}``.  Otherwise the host is the
    complete bipartite graph on the two checkerboard classes (even cells
    first); for ``t = 2`` that host has no room for the fill colour.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    grid: dict[tuple[int, int], int] = {}
    for i in range(1, t + 1):
        for j in range(1, t):
            grid[(grid_vertex(t, i, j), grid_vertex(t, i, j + 1))] = i  # row i
            grid[(grid_vertex(t, j, i), grid_vertex(t, j + 1, i))] = i  # column i
    if complete:
        host = Complete(t * t)
        return ColouredGraph.from_function(host, lambda u, v: grid.get((u, v), t + 1))
    cells = [(i, j) for i in range(1, t + 1) for j in range(1, t + 1)]
    even = [c for c in cells if (c[0] + c[1]) % 2 == 0]
    odd = [c for c in cells if (c[0] + c[1]) % 2 == 1]
    order = even + odd
    host = Bipartite(len(even), len(odd))

    def colour(u, v):
        a, b = grid_vertex(t, *order[u]), grid_vertex(t, *order[v])
        return grid.get((min(a, b), max(a, b)), t + 1)

    return ColouredGraph.from_function(host, colour)


def gen_tripartite() -> ColouredGraph:
    """Parts ``U = 0..5``, ``V = 6..8``, ``W = 9..11`` with ``u, v, w`` the
    first vertex of each.  ``[W' + v, U']`` is red, ``[V' + w, U']`` green,
    everything else blue."""
    U, V, W = range(0, 6), range(6, 9), range(9, 12)
    u, v, w = U[0], V[0], W[0]
    U1 = set(U) - {u}
    red_side = (set(W) - {w}) | {v}
    green_side = (set(V) - {v}) | {w}

    def colour(x, y):
        if x in U1 or y in U1:
            other = y if x in U1 else x
            if other in red_side:
                return RED
            if other in green_side:
                return GREEN
        return BLUE

    return ColouredGraph.from_function(Multipartite((6, 3, 3)), colour)


def gen_exponential_parts(r: int) -> ColouredGraph:
    """``K_n`` on parts ``V_1..V_r`` with ``|V_i| = 2^i``; an edge between
    ``V_i`` and ``V_j`` (``i <= j``, also ``i = j``) has colour ``i``."""
    if r < 1:
        raise ValueError("r must be positive")
    blocks = _blocks([2 ** i for i in range(1, r + 1)])
    host = Complete(sum(len(b) for b in blocks))
    return ColouredGraph.from_function(
        host, lambda u, v: min(_block_index(blocks, u), _block_index(blocks, v)) + 1)


FOUR_TOP = ((1, 2), (3, 4))
FOUR_BOTTOM = ((1, 3), (1, 4), (2, 3), (2, 4))
THREE_PAIRS = ((1, 2), (1, 3), (2, 3))
# within a same-pair block the drawn picture uses the larger colour on one
# diagonal position; everything else takes the smaller colour
_DRAWN = {((1, 2), 1): 2, ((1, 3), 2): 3, ((2, 3), 2): 3}


def gen_figure(shape: str, sizes: Sequence[int]) -> ColouredGraph:
    """Block-structured simple 2-local colourings.

    ``FourColour``: sizes ``(t12, t34, b13, b14, b23, b24)``; every edge
    colour is forced by the two palettes.  ``ThreeColour``: sizes
    ``(t12, t13, t23, b12, b13, b23)``; an edge between blocks of the same
    pair has two legal colours and takes the smaller one, except on the
    diagonal positions listed in ``_DRAWN``.
    """
    sizes = tuple(sizes)
    if len(sizes) != 6 or min(sizes) < 0:
        raise InconsistentBlocks(f"expected six nonnegative block sizes, got {sizes}")
    if shape == "FourColour":
        top_pals, bot_pals = FOUR_TOP, FOUR_BOTTOM
        tops, bots = sizes[:2], sizes[2:]
    elif shape == "ThreeColour":
        top_pals = bot_pals = THREE_PAIRS
        tops, bots = sizes[:3], sizes[3:]
    else:
        raise InconsistentBlocks(f"unknown shape {shape!r}")
    a = sum(tops)
    tb, bb = _blocks(tops), _blocks(bots, a)
    host = Bipartite(a, sum(bots))

    def colour(t, b):
        i, j = _block_index(tb, t), _block_index(bb, b)
        p, q = top_pals[i], bot_pals[j]
        common = sorted(set(p) & set(q))
        if not common:
            raise InconsistentBlocks(f"blocks {p} and {q} share no colour")
        if len(common) == 2:
            pos_t, pos_b = t - tb[i].start, b - bb[j].start
            if pos_t == pos_b and (p, pos_t) in _DRAWN:
                return _DRAWN[(p, pos_t)]
        return common[0]

    g = ColouredGraph.from_function(host, colour)
    want = 4 if shape == "FourColour" else 3
    if len(g.colours) != want or not is_simple(g):
        raise InconsistentBlocks(f"sizes {sizes} do not give a simple {want}-colouring")
    return g


def gen_random_r_local(host: HostKind, r: int, pool: int, seed: int) -> ColouredGraph:
    """Every vertex gets the palette ``{0}`` plus ``r - 1`` colours drawn
    from ``1..pool-1``; each edge picks uniformly from the shared colours."""
    if r < 1 or pool < r:
        raise ValueError("need r >= 1 and pool >= r")
    rng = random.Random(seed)
    n = host.order
    pals = [sorted({0, *rng.sample(range(1, pool), r - 1)}) for _ in range(n)]
    col = {}
    for u, v in host_edges(host):
        shared = sorted(set(pals[u]) & set(pals[v]))
        col[(u, v)] = rng.choice(shared)
    return ColouredGraph(host, col)


__all__ = [
    "gen_split", "gen_generalized_split", "gen_grid", "grid_vertex", "gen_tripartite",
    "gen_exponential_parts", "gen_figure", "gen_random_r_local",
]
