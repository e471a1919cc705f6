"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each kernel runs on identical input in both backends; outputs are compared
before timings are reported.
"""

import argparse
import random
import time

from localcolour import _pykernels

try:
    from localcolour import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_adj(n, p, seed):
    rng = random.Random(seed)
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def cases():
    adj = random_adj(16, 0.4, 1)
    yield "ham_path_ends n=16", lambda k: k.ham_path_ends(adj, 16), list
    yield "ham_cycle_flags n=14", lambda k: k.ham_cycle_flags(adj[:14], 14), bytes
    rng = random.Random(2)
    mats = [[rng.randrange(3) for _ in range(25)] for _ in range(40)]
    yield "canonical_code 5x5 x40", lambda k: [k.canonical_code(m, 5, 5, False, True) for m in mats], \
        lambda out: [list(c) for c in out]
    yield "enumerate K44 2-local", lambda k: k.enumerate_bipartite(4, 4, 2, 8, True, True), \
        lambda out: ([tuple(c) for c in out[0]], out[1])


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`")
        return
    print(f"{'kernel':<26}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, run, norm in cases():
        tp, outp = best_of(lambda: run(_pykernels), args.repeat)
        tc, outc = best_of(lambda: run(_ckernels), args.repeat)
        assert norm(outp) == norm(outc), f"{name}: backends disagree"
        print(f"{name:<26}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
