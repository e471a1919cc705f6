"""Edge-coloured complete and complete multipartite host graphs.

Vertices are 0-based integers.  Partite hosts lay their parts out as
consecutive index ranges, so for a bipartite host the top side is
``range(top)`` and the bottom side is ``range(top, top + bottom)``.
Colours are opaque nonnegative integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from .errors import IllegalEdge, InvalidColour, MissingEdgeColour, UnknownColour


@dataclass(frozen=True)
class Complete:
    n: int

    @property
    def order(self) -> int:
        return self.n

    def parts(self) -> list[range]:
        return [range(v, v + 1) for v in range(self.n)]


@dataclass(frozen=True)
class Bipartite:
    top: int
    bottom: int

    @property
    def order(self) -> int:
        return self.top + self.bottom

    @property
    def balanced(self) -> bool:
        return self.top == self.bottom

    def parts(self) -> list[range]:
        return [range(self.top), range(self.top, self.top + self.bottom)]


@dataclass(frozen=True)
class Multipartite:
    sizes: tuple[int, ...]

    def __init__(self, sizes: Iterable[int]):
        object.__setattr__(self, "sizes", tuple(sizes))

    @property
    def order(self) -> int:
        return sum(self.sizes)

    def parts(self) -> list[range]:
        out, start = [], 0
        for s in self.sizes:
            out.append(range(start, start + s))
            start += s
        return out


HostKind = Union[Complete, Bipartite, Multipartite]


def check_host(host: HostKind) -> None:
    counts = (host.n,) if isinstance(host, Complete) else (
        (host.top, host.bottom) if isinstance(host, Bipartite) else host.sizes)
    if any((not isinstance(c, int)) or c < 0 for c in counts):
        raise ValueError(f"invalid vertex counts in {host!r}")


def part_labels(host: HostKind) -> list[int]:
    labels = [0] * host.order
    for i, part in enumerate(host.parts()):
        for v in part:
            labels[v] = i
    return labels


def host_edges(host: HostKind) -> Iterator[tuple[int, int]]:
    """All host edges ``(u, v)`` with ``u < v`` in lexicographic order."""
    if isinstance(host, Bipartite):
        for u in range(host.top):
            for v in range(host.top, host.order):
                yield (u, v)
        return
    lab = part_labels(host)
    n = host.order
    for u in range(n):
        for v in range(u + 1, n):
            if lab[u] != lab[v]:
                yield (u, v)


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class ColouredGraph:
    """A host graph together with a colour for each host edge.

    The constructor stores whatever it is given; :func:`validate` checks
    totality and legality.  Everything else assumes a validated graph.
    Instances are immutable and hashable.
    """

    __slots__ = ("host", "_colour", "_mat", "_cache")

    def __init__(self, host: HostKind, colouring: Mapping[tuple[int, int], int]):
        check_host(host)
        self.host = host
        col = {}
        for (u, v), c in colouring.items():
            col[_key(u, v)] = c
        self._colour = col
        n = host.order
        mat = [[-1] * n for _ in range(n)]
        for (u, v), c in col.items():
            if 0 <= u < n and 0 <= v < n and isinstance(c, int) and c >= 0:
                mat[u][v] = mat[v][u] = c
        self._mat = mat
        self._cache = {}

    # -- basic access -------------------------------------------------------

    @property
    def n(self) -> int:
        return self.host.order

    @property
    def vertices(self) -> range:
        return range(self.host.order)

    def colour(self, u: int, v: int) -> int | None:
        c = self._mat[u][v]
        return None if c < 0 else c

    def has_edge(self, u: int, v: int) -> bool:
        return self._mat[u][v] >= 0

    @property
    def matrix(self) -> list[list[int]]:
        """Colour matrix with ``-1`` for non-edges.  Do not mutate."""
        return self._mat

    def edges(self) -> list[tuple[int, int, int]]:
        if "edges" not in self._cache:
            self._cache["edges"] = sorted((u, v, c) for (u, v), c in self._colour.items())
        return self._cache["edges"]

    @property
    def colours(self) -> frozenset[int]:
        if "colours" not in self._cache:
            self._cache["colours"] = frozenset(self._colour.values())
        return self._cache["colours"]

    def palette(self, v: int) -> frozenset[int]:
        pals = self._cache.get("palettes")
        if pals is None:
            pals = [frozenset(c for c in row if c >= 0) for row in self._mat]
            self._cache["palettes"] = pals
        return pals[v]

    def colour_adjacency(self, c: int) -> list[int]:
        """Per-vertex bitmask of colour-``c`` neighbours."""
        cache = self._cache.setdefault("adj", {})
        adj = cache.get(c)
        if adj is None:
            adj = [0] * self.n
            for (u, v), cc in self._colour.items():
                if cc == c:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            cache[c] = adj
        return adj

    def side(self, v: int) -> int:
        """Part index of ``v``; for bipartite hosts 0 is top, 1 is bottom."""
        lab = self._cache.get("parts")
        if lab is None:
            lab = self._cache["parts"] = part_labels(self.host)
        return lab[v]

    def top(self) -> list[int]:
        assert isinstance(self.host, Bipartite)
        return list(range(self.host.top))

    def bottom(self) -> list[int]:
        assert isinstance(self.host, Bipartite)
        return list(range(self.host.top, self.host.order))

    def recoloured(self, mapping: Mapping[int, int]) -> "ColouredGraph":
        return ColouredGraph(self.host, {e: mapping.get(c, c) for e, c in self._colour.items()})

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, ColouredGraph) and self.host == other.host
                and self._colour == other._colour)

    def __hash__(self):
        return hash((self.host, tuple(self.edges())))

    def __repr__(self):
        return f"ColouredGraph({self.host!r}, {len(self._colour)} edges, colours={sorted(self.colours)})"

    @classmethod
    def from_function(cls, host: HostKind, fn) -> "ColouredGraph":
        return cls(host, {(u, v): fn(u, v) for u, v in host_edges(host)})


class ValidationResult(NamedTuple):
    colours: frozenset
    palettes: tuple


def validate(g: ColouredGraph) -> ValidationResult:
    n = g.n
    lab = part_labels(g.host)
    for (u, v), c in sorted(g._colour.items()):
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise IllegalEdge((u, v), "vertex out of range")
        if lab[u] == lab[v]:
            raise IllegalEdge((u, v), "both ends in the same part")
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise InvalidColour(f"edge {(u, v)} has colour {c!r}")
    for e in host_edges(g.host):
        if e not in g._colour:
            raise MissingEdgeColour(e)
    return ValidationResult(g.colours, tuple(g.palette(v) for v in g.vertices))


def locality(g: ColouredGraph) -> int:
    return max((len(g.palette(v)) for v in g.vertices), default=0)


class ColourClass(NamedTuple):
    colour: int
    vertices: frozenset
    edges: tuple


def colour_class(g: ColouredGraph, c: int) -> ColourClass:
    if c not in g.colours:
        raise UnknownColour(c)
    edges = tuple((u, v) for u, v, cc in g.edges() if cc == c)
    verts = frozenset(x for e in edges for x in e)
    return ColourClass(c, verts, edges)


def _components_of(adj: list[int], verts: Iterable[int]) -> list[frozenset]:
    remaining = 0
    for v in verts:
        remaining |= 1 << v
    comps = []
    while remaining:
        low = remaining & -remaining
        seen = frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            nxt &= remaining & ~seen
            seen |= nxt
            frontier = nxt
        remaining &= ~seen
        comps.append(frozenset(bits(seen)))
    return comps


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def monochromatic_components(g: ColouredGraph, c: int) -> list[frozenset]:
    """Components of the colour-``c`` subgraph, ordered by smallest vertex."""
    cls = colour_class(g, c)
    return _components_of(g.colour_adjacency(c), sorted(cls.vertices))


def connected_in_colour(g: ColouredGraph, vertices: Iterable[int], c: int) -> bool:
    vs = set(vertices)
    if len(vs) <= 1:
        return True
    if c not in g.colours:
        return False
    m = mask_of(vs)
    adj = [a & m for a in g.colour_adjacency(c)]
    return len(_components_of(adj, vs)) == 1


def restrict(g: ColouredGraph, vertices: Iterable[int]) -> ColouredGraph:
    """Induced coloured subgraph; vertices keep their relative order.

    New index ``i`` corresponds to ``sorted(vertices)[i]``.
    """
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    lab = part_labels(g.host)
    host = g.host
    if isinstance(host, Complete):
        sub = Complete(len(keep))
    else:
        counts = [0] * len(host.parts())
        for v in keep:
            counts[lab[v]] += 1
        sub = Bipartite(*counts) if isinstance(host, Bipartite) else Multipartite(counts)
    col = {}
    for (u, v), c in g._colour.items():
        if u in index and v in index:
            col[(index[u], index[v])] = c
    return ColouredGraph(sub, col)


def bipartite_subgraph(g: ColouredGraph, top: Iterable[int], bottom: Iterable[int]) -> ColouredGraph:
    """The coloured complete bipartite graph ``[top, bottom]`` inside ``g``.

    Every top-bottom pair must be a host edge.  New indices list ``top``
    (sorted) first, then ``bottom`` (sorted).
    """
    t, b = sorted(top), sorted(bottom)
    col = {}
    for i, u in enumerate(t):
        for j, v in enumerate(b):
            c = g.colour(u, v)
            if c is None:
                raise IllegalEdge((u, v), "pair is not a host edge")
            col[(i, len(t) + j)] = c
    return ColouredGraph(Bipartite(len(t), len(b)), col)
