"""Reader and writer for the line-oriented ``.ecg`` colouring format.

::

    host bipartite 2 2
    # comment
    0 2 1
    0 3 2
    ...

The first non-comment line names the host; every further non-empty line is
``u v c`` with ``u < v``, one line per host edge.
"""

from __future__ import annotations

from pathlib import Path

from .errors import IllegalEdge, ParseError
from .graph import Bipartite, ColouredGraph, Complete, Multipartite, validate


def _ints(tokens, lineno):
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None
    if any(v < 0 for v in vals):
        raise ParseError(f"line {lineno}: negative value")
    return vals


def _parse_host(tokens, lineno):
    if len(tokens) < 2 or tokens[0] != "host":
        raise ParseError(f"line {lineno}: expected 'host <kind> ...'")
    kind, args = tokens[1], _ints(tokens[2:], lineno)
    if kind == "complete" and len(args) == 1:
        return Complete(args[0])
    if kind == "bipartite" and len(args) == 2:
        return Bipartite(*args)
    if kind == "multipartite" and args and len(args) == args[0] + 1:
        return Multipartite(args[1:])
    raise ParseError(f"line {lineno}: malformed host line")


def loads(text: str) -> ColouredGraph:
    host = None
    colouring = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if host is None:
            host = _parse_host(tokens, lineno)
            continue
        if len(tokens) != 3:
            raise ParseError(f"line {lineno}: expected 'u v c'")
        u, v, c = _ints(tokens, lineno)
        if u >= v:
            raise ParseError(f"line {lineno}: need u < v")
        if (u, v) in colouring:
            raise IllegalEdge((u, v), f"duplicate edge on line {lineno}")
        colouring[(u, v)] = c
    if host is None:
        raise ParseError("missing host line")
    g = ColouredGraph(host, colouring)
    validate(g)
    return g


def dumps(g: ColouredGraph) -> str:
    h = g.host
    if isinstance(h, Complete):
        head = f"host complete {h.n}"
    elif isinstance(h, Bipartite):
        head = f"host bipartite {h.top} {h.bottom}"
    else:
        head = "host multipartite " + " ".join(map(str, (len(h.sizes), *h.sizes)))
    lines = [head] + [f"{u} {v} {c}" for u, v, c in g.edges()]
    return "\n".join(lines) + "\n"


def load(path) -> ColouredGraph:
    return loads(Path(path).read_text())


def dump(g: ColouredGraph, path) -> None:
    Path(path).write_text(dumps(g))
