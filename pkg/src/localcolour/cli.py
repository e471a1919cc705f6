"""Command-line interface.

Reports are ``key: value`` lines followed by certificates in the formats of
:mod:`localcolour.paths` and :mod:`localcolour.matchings`.  Exit status is 0
on success, 1 on a domain error (reported as ``error: <Name>`` on stderr)
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import ecg, generators, kernels
from .errors import LocalColourError
from .graph import Bipartite, Complete, Multipartite, locality, validate
from .matchings import colour_peeling, densest_colour, matching_cover_bipartite, matching_cover_complete
from .partition import anomaly_count, partition_2local_bipartite
from .paths import (LONGEST_PATH_BUDGET, PATH_PARTITION_BUDGET, CYCLE_PARTITION_BUDGET, longest_mono_path,
                    min_mono_cycle_partition, min_mono_path_partition, verify_path_partition)
from .ramsey import verify_even_path_ramsey, verify_faudree_schelp, verify_structural_claims
from .structure import BOTTOM, TOP, classify_2local, simplify

FAMILIES = ("split", "generalized-split", "grid", "tripartite", "exponential-parts", "figure", "random")


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.split(",")]


def _host_text(host) -> str:
    if isinstance(host, Complete):
        return f"complete {host.n}"
    if isinstance(host, Bipartite):
        return f"bipartite {host.top} {host.bottom}"
    return "multipartite " + " ".join(map(str, host.sizes))


def _colours(cs) -> str:
    return " ".join(map(str, sorted(cs)))


class Report:
    def __init__(self, out):
        self.out = out

    def kv(self, key, value):
        self.out.write(f"{key}: {value}\n")

    def raw(self, text):
        self.out.write(text)


# -- verbs ------------------------------------------------------------------------------


def _generate(args):
    sizes = _ints(args.sizes)
    fam = args.family

    def need(k):
        if len(sizes) != k:
            raise SystemExit(f"usage: --family {fam} needs --sizes with {k} values")

    if fam == "split":
        need(4)
        return generators.gen_split(*sizes)
    if fam == "generalized-split":
        need(2)
        return generators.gen_generalized_split(*sizes)
    if fam == "grid":
        need(1)
        return generators.gen_grid(sizes[0], complete=not args.bipartite)
    if fam == "tripartite":
        return generators.gen_tripartite()
    if fam == "exponential-parts":
        need(1)
        return generators.gen_exponential_parts(sizes[0])
    if fam == "figure":
        return generators.gen_figure(args.shape, sizes)
    if args.seed is None:
        raise SystemExit("usage: --family random needs --seed")
    if args.host == "complete":
        need(1)
        host = Complete(sizes[0])
    elif args.host == "bipartite":
        need(2)
        host = Bipartite(*sizes)
    else:
        host = Multipartite(sizes)
    return generators.gen_random_r_local(host, args.r, args.pool or args.r + 1, args.seed)


def cmd_gen(args, rep):
    g = _generate(args)
    if args.out:
        ecg.dump(g, args.out)
        rep.kv("family", args.family)
        rep.kv("host", _host_text(g.host))
        rep.kv("colours", _colours(g.colours))
        rep.kv("locality", locality(g))
        rep.kv("out", args.out)
    else:
        rep.raw(ecg.dumps(g))


def cmd_validate(args, rep):
    g = ecg.load(args.file)
    res = validate(g)
    rep.kv("valid", "true")
    rep.kv("host", _host_text(g.host))
    rep.kv("colours", _colours(res.colours))
    rep.kv("locality", locality(g))


def cmd_classify(args, rep):
    g = ecg.load(args.file)
    r = classify_2local(g)
    rep.kv("simple", str(r.simple).lower())
    rep.kv("colour_count", r.colour_count)
    rep.kv("shape", r.shape)
    rep.kv("side_swapped", str(r.side_swapped).lower())
    rep.kv("colour_map", " ".join(f"{a}->{b}" for a, b in sorted(r.colour_map.items())))
    for side in (TOP, BOTTOM):
        for key in sorted((k for k in r.blocks if k[0] == side), key=lambda k: sorted(k[1])):
            i, j = sorted(key[1])
            if r.blocks[key]:
                rep.kv(f"block {side} {i},{j}", " ".join(map(str, sorted(r.blocks[key]))))
        for (s, i), vs in sorted(r.mono.items()):
            if s == side and vs:
                rep.kv(f"mono {side} {i}", " ".join(map(str, sorted(vs))))


def cmd_simplify(args, rep):
    g = ecg.load(args.file)
    s, mapping = simplify(g)
    rep.kv("colours_before", len(g.colours))
    rep.kv("colours_after", len(s.colours))
    rep.kv("merge_map", " ".join(f"{a}->{b}" for a, b in sorted(mapping.items())))
    if args.out:
        ecg.dump(s, args.out)
        rep.kv("out", args.out)


def cmd_partition(args, rep):
    g = ecg.load(args.file)
    before = anomaly_count()
    cert = partition_2local_bipartite(g)
    rep.kv("route", cert.route)
    rep.kv("paths", len(cert))
    rep.kv("verified", str(bool(verify_path_partition(g, cert))).lower())
    rep.kv("anomalies", anomaly_count() - before)
    rep.raw(cert.dumps())


def cmd_longest(args, rep):
    g = ecg.load(args.file)
    length, path = longest_mono_path(g, args.budget or LONGEST_PATH_BUDGET)
    rep.kv("length", length)
    if path.vertices:
        rep.raw(f"path {path.colour}: {' '.join(map(str, path.vertices))}\n")


def cmd_min_partition(args, rep):
    g = ecg.load(args.file)
    if args.cycles:
        count, cert = min_mono_cycle_partition(g, args.budget or CYCLE_PARTITION_BUDGET)
        rep.kv("cycles", count)
        for colour, cyc in cert.cycles:
            rep.raw(f"cycle {colour}: {' '.join(map(str, cyc))}\n")
        return
    count, cert = min_mono_path_partition(g, args.budget or PATH_PARTITION_BUDGET)
    rep.kv("paths", count)
    rep.raw(cert.dumps())


def cmd_matching_cover(args, rep):
    g = ecg.load(args.file)
    r = args.r if args.r is not None else locality(g)
    if isinstance(g.host, Complete):
        cover, budget = matching_cover_complete(g, r), r * (r + 1) // 2
    elif isinstance(g.host, Bipartite):
        cover, budget = matching_cover_bipartite(g, r), (2 * r - 1) * r
    else:
        raise SystemExit("usage: matching-cover needs a complete or bipartite host")
    rep.kv("r", r)
    rep.kv("matchings", cover.count)
    rep.kv("budget", budget)
    rep.kv("trivial_count", len(cover.trivial))
    for k, rnd in enumerate(cover.rounds, 1):
        rep.kv(f"round {k}", f"locality {rnd.locality_before} -> {rnd.locality_after}, matchings {rnd.matchings}")
    if g.edges():
        colour, count, bound = densest_colour(g)
        rep.kv("densest_colour", f"{colour} edges {count} bound {bound}")
        if args.eps is not None:
            peel = colour_peeling(g, Fraction(args.eps))
            rep.kv("peeling", f"t {peel.t} kept {_colours(peel.kept)} residual {peel.residual} of {peel.capacity}")
    rep.raw(cover.dumps())


def cmd_ramsey(args, rep):
    if args.faudree_schelp:
        p, q = _ints(args.faudree_schelp)
        report = verify_faudree_schelp(p, q, args.checkpoint, args.jobs, args.opt_in_large)
    else:
        if args.m is None:
            raise SystemExit("usage: ramsey-verify needs --m or --faudree-schelp")
        report = verify_even_path_ramsey(args.m, args.side, args.opt_in_large, args.checkpoint, args.jobs)
    rep.kv("verdict", report.verdict)
    rep.kv("statement", report.statement)
    rep.kv("host", _host_text(report.host))
    rep.kv("canonical_count", report.canonical_count)
    rep.kv("total_checked", report.total_checked)
    rep.kv("units", report.units)
    rep.kv("resumed_units", report.resumed_units)
    if report.counterexample is not None:
        rep.kv("longest", report.longest)
        rep.raw(f"path {report.witness.colour}: {' '.join(map(str, report.witness.vertices))}\n")
        if args.out:
            ecg.dump(report.counterexample, args.out)
            rep.kv("out", args.out)
    args._elapsed = report.elapsed


def cmd_claims(args, rep):
    r = verify_structural_claims(args.n, args.opt_in_large)
    rep.kv("n", r.n)
    rep.kv("m", r.m)
    rep.kv("checked", r.checked)
    for name in r.triggered:
        rep.kv(f"claim {name}", f"triggered {r.triggered[name]} violations {r.violations[name]}")
    rep.kv("lemma_checks", r.lemma_checks)
    rep.kv("lemma_violations", r.lemma_violations)
    rep.kv("violations", r.total_violations)


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="localcolour", description=__doc__.splitlines()[0])
    p.add_argument("--timing", action="store_true", help="append a timing trailer")
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", help="generate a colouring")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--sizes")
    g.add_argument("--shape", choices=("FourColour", "ThreeColour"), default="ThreeColour")
    g.add_argument("--bipartite", action="store_true", help="grid: checkerboard bipartite host")
    g.add_argument("--host", choices=("complete", "bipartite", "multipartite"), default="complete")
    g.add_argument("--r", type=int, default=2)
    g.add_argument("--pool", type=int)
    g.add_argument("--seed", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    for name, func, helptext in (("validate", cmd_validate, "check an .ecg file"),
                                 ("classify", cmd_classify, "shape of a simple 2-local colouring"),
                                 ("partition", cmd_partition, "at most three paths for 2-local K_{n,n}")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("file")
        s.set_defaults(func=func)

    s = sub.add_parser("simplify", help="merge colours with disjoint classes")
    s.add_argument("file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_simplify)

    s = sub.add_parser("longest-path", help="longest monochromatic path")
    s.add_argument("file")
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_longest)

    s = sub.add_parser("min-partition", help="exact monochromatic path (or cycle) partition")
    s.add_argument("file")
    s.add_argument("--budget", type=int)
    s.add_argument("--cycles", action="store_true")
    s.set_defaults(func=cmd_min_partition)

    s = sub.add_parser("matching-cover", help="monochromatic connected matching cover")
    s.add_argument("file")
    s.add_argument("--r", type=int)
    s.add_argument("--eps", help="also run colour peeling, e.g. 1/10")
    s.set_defaults(func=cmd_matching_cover)

    s = sub.add_parser("ramsey-verify", help="exhaustive path Ramsey check")
    s.add_argument("--m", type=int)
    s.add_argument("--side", type=int, help="host side (default 2m-1)")
    s.add_argument("--faudree-schelp", metavar="P,Q")
    s.add_argument("--opt-in-large", action="store_true")
    s.add_argument("--checkpoint")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", help="write a counterexample here")
    s.set_defaults(func=cmd_ramsey)

    s = sub.add_parser("claims-verify", help="claim chain over all colourings of K_{n,n}")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--opt-in-large", action="store_true")
    s.set_defaults(func=cmd_claims)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rep = Report(out)
    t0 = time.perf_counter()
    try:
        args.func(args, rep)
    except LocalColourError as exc:
        err.write(f"error: {type(exc).__name__}\n")
        return 1
    except OSError as exc:
        err.write(f"error: {type(exc).__name__}\n")
        return 1
    except SystemExit as exc:
        err.write(f"{exc.code}\n")
        return 2
    if args.timing:
        out.write("# timing\n")
        out.write(f"backend: {kernels.BACKEND}\n")
        out.write(f"elapsed: {time.perf_counter() - t0:.3f}\n")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
