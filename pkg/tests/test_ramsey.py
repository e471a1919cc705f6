import random

import pytest
from hypothesis import given, settings, strategies as st

from localcolour import kernels
from localcolour.errors import BudgetExceeded, PreconditionViolated
from localcolour.generators import gen_figure, gen_split
from localcolour.graph import Bipartite, ColouredGraph, Complete
from localcolour.paths import check_path, longest_mono_path
from localcolour.ramsey import (CLAIMS, EnumerationSpec, bipartite_spec, canonical_form, code_of,
                                enumerate_canonical, graph_from_code, long_path_bound, long_path_lemma,
                                unit_id, verify_even_path_ramsey, verify_faudree_schelp,
                                verify_structural_claims, work_units)
from localcolour.structure import is_simple

from oracles import bipartite_from_rows, complete_local_orbits, fixed_colour_orbits, images, local_codes


@pytest.mark.parametrize("a, b, raw, orbits", [(1, 1, 1, 1), (2, 2, 15, 7), (2, 3, 83, 17), (3, 3, 823, 33)])
def test_orbit_counts_match_brute_force(a, b, raw, orbits):
    spec = bipartite_spec(a, b)
    codes = local_codes(a, b, 2, spec.colour_budget)
    reps = [code_of(g) for g in enumerate_canonical(spec)]
    assert len(codes) == raw and len(reps) == orbits
    assert set(reps) == {min(images(c, a, b)) for c in codes}
    # orbit sizes add back up to the raw count
    assert sum(len(images(c, a, b)) for c in reps) == raw


def test_one_local_is_monochromatic():
    assert len(list(enumerate_canonical(bipartite_spec(3, 3, max_locality=1)))) == 1
    assert len(list(enumerate_canonical(bipartite_spec(1, 1)))) == 1


def test_k44_count():
    assert len(list(enumerate_canonical(bipartite_spec(4, 4)))) == 269


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fixed_colour_orbits(n):
    spec = EnumerationSpec(Bipartite(n, n), 2, 2, relabel=False)
    reps = {code_of_fixed(g) for g in enumerate_canonical(spec)}
    assert reps == fixed_colour_orbits(n)


def code_of_fixed(g):
    a, b = g.host.top, g.host.bottom
    return tuple(g.colour(i, a + j) for i in range(a) for j in range(b))


def test_fixed_colour_k44_count():
    # 192 orbits, confirmed once by fixed_colour_orbits(4) (about a minute)
    assert len(list(enumerate_canonical(EnumerationSpec(Bipartite(4, 4), 2, 2, relabel=False)))) == 192


@pytest.mark.parametrize("n, count", [(2, 1), (3, 3), (4, 8)])
def test_complete_host_counts(n, count):
    spec = EnumerationSpec(Complete(n), 2, n * (n - 1) // 2)
    assert len(list(enumerate_canonical(spec))) == count == complete_local_orbits(n, 2)


def test_enumeration_side_limit():
    with pytest.raises(BudgetExceeded):
        list(enumerate_canonical(bipartite_spec(5, 5)))


def random_image(g, rng):
    a, b = g.host.top, g.host.bottom
    rows = [[g.colour(i, a + j) for j in range(b)] for i in range(a)]
    rng.shuffle(rows)
    cols = list(range(b))
    rng.shuffle(cols)
    rows = [[r[c] for c in cols] for r in rows]
    if a == b and rng.random() < 0.5:
        rows = [list(col) for col in zip(*rows)]
    names = {c: rng.randrange(100, 10**6) for c in g.colours}
    return bipartite_from_rows([[names[c] for c in r] for r in rows])


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 10**9), n=st.integers(2, 4))
def test_canonical_form_is_invariant(seed, n):
    rng = random.Random(seed)
    reps = list(enumerate_canonical(bipartite_spec(n, n)))
    g = reps[rng.randrange(len(reps))]
    assert canonical_form(random_image(g, rng)) == canonical_form(g) == code_of(g)


def test_work_units_partition_the_enumeration():
    for a, loc, cols in ((3, 2, 6), (4, 2, 8)):
        units = work_units(a, a, loc, cols)
        assert units == sorted(units)
        total = []
        for u in units:
            codes, _ = kernels.enumerate_bipartite(a, a, loc, cols, True, True, u)
            assert all(tuple(c[:len(u)]) == u for c in codes)
            total.extend(map(tuple, codes))
        assert sorted(total) == sorted(code_of(g) for g in enumerate_canonical(bipartite_spec(a, a)))
    assert unit_id((0, 0, 0, 0, 0, 1), 3) == "0,0,0;0,0,1"


def test_ramsey_small():
    assert verify_even_path_ramsey(1).verified
    r = verify_even_path_ramsey(2)
    assert r.verified and r.canonical_count == 33 and r.units == 32 and r.total_checked == 292


def test_ramsey_probe_below_threshold():
    r = verify_even_path_ramsey(3, side=4)
    assert not r.verified and r.longest == 5 < 6
    assert check_path(r.counterexample, r.witness)
    assert longest_mono_path(r.counterexample)[0] == r.longest


def test_ramsey_checkpoint_resume(tmp_path):
    ck = tmp_path / "units.txt"
    units = work_units(3, 3, 2, 6)
    skip = units[:10]
    ck.write_text("".join(unit_id(u, 3) + "\n" for u in skip))
    skipped = sum(len(kernels.enumerate_bipartite(3, 3, 2, 6, True, True, u)[0]) for u in skip)
    r = verify_even_path_ramsey(2, checkpoint=str(ck))
    assert r.verified and r.resumed_units == 10
    assert r.canonical_count + skipped == 33
    assert ck.read_text().splitlines() == [unit_id(u, 3) for u in skip + units[10:]]
    again = verify_even_path_ramsey(2, checkpoint=str(ck))
    assert again.resumed_units == 32 and again.canonical_count == 0


def test_ramsey_parallel_matches_serial():
    a, b = verify_even_path_ramsey(2), verify_even_path_ramsey(2, jobs=2)
    assert (a.verdict, a.canonical_count, a.total_checked) == (b.verdict, b.canonical_count, b.total_checked)


@pytest.mark.parametrize("p, q, count", [(1, 1, 2), (2, 1, 6), (1, 2, 6), (2, 2, 26), (3, 1, 26),
                                         (1, 3, 26), (1, 4, 192), (2, 3, 192), (3, 2, 192), (4, 1, 192)])
def test_faudree_schelp(p, q, count):
    r = verify_faudree_schelp(p, q)
    assert r.verified and r.canonical_count == count


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_split_sharpness(m):
    k = m - 1
    assert longest_mono_path(gen_split(k, k, k, k))[0] == 2 * m - 2


@pytest.mark.parametrize("bots", [(1, 2, 2), (2, 2, 1), (2, 1, 2), (3, 1, 1), (1, 1, 3)])
def test_long_path_lemma_on_figures(bots):
    g = gen_figure("ThreeColour", (3, 1, 1) + bots)
    best = longest_mono_path(g)[0]
    for i, j in ((1, 2), (1, 3), (2, 3)):
        p = long_path_lemma(g, i, j)
        assert check_path(g, p)
        assert len(p) >= long_path_bound(g, i, j)
        assert len(p) <= best
    # three top vertices see colours 1 and 2, and m = 3
    assert long_path_bound(g, 1, 2) == 6 and len(long_path_lemma(g, 1, 2)) == 6


def test_long_path_lemma_sharp_instance():
    g = bipartite_from_rows([[1, 1, 1], [1, 1, 1], [2, 2, 3]])
    p = long_path_lemma(g, 1, 2)
    assert long_path_bound(g, 1, 2) == 4 and len(p) == 4 and check_path(g, p)


def test_long_path_lemma_exhaustive_k33():
    seen = 0
    for g in enumerate_canonical(bipartite_spec(3, 3)):
        if len(g.colours) != 3 or not is_simple(g):
            continue
        for i, j in ((1, 2), (1, 3), (2, 3)):
            p = long_path_lemma(g, i, j)
            assert check_path(g, p) and len(p) >= long_path_bound(g, i, j)
            seen += 1
    assert seen > 0


def test_long_path_lemma_preconditions():
    with pytest.raises(PreconditionViolated):
        long_path_lemma(gen_split(2, 2, 2, 2), 1, 2)
    g = bipartite_from_rows([[1, 1, 1], [1, 1, 1], [2, 2, 3]])
    with pytest.raises(PreconditionViolated):
        long_path_lemma(g, 1, 1)
    with pytest.raises(PreconditionViolated):
        long_path_lemma(g, 1, 7)


def test_structural_claims_m2():
    r = verify_structural_claims(3)
    assert r.checked == 33 and r.total_violations == 0 and r.lemma_violations == 0
    assert sum(r.triggered.values()) == 33
    assert set(r.triggered) == set(CLAIMS) | {"none"}
    with pytest.raises(PreconditionViolated):
        verify_structural_claims(4)


def test_graph_from_code_round_trip():
    g = graph_from_code((0, 1, 1, 0), 2, 2)
    assert g == gen_split(1, 1, 1, 1)
    assert code_of(g) == (0, 1, 1, 0)
