import pytest
from hypothesis import given, settings, strategies as st

from localcolour.errors import BudgetExceeded, TooManyColours
from localcolour.generators import (gen_exponential_parts, gen_random_r_local, gen_split,
                                    gen_tripartite)
from localcolour.graph import Bipartite, ColouredGraph, Complete, restrict
from localcolour.paths import (CyclePartitionCertificate, MonoPath, PathPartitionCertificate, Split,
                               TwoPaths, check_path, cycles_to_paths, longest_mono_path,
                               longest_path_in_colour, min_mono_cycle_partition, min_mono_path_partition,
                               parse_path_certificate, two_colour_partition, verify_cycle_partition,
                               verify_path_partition)
from localcolour.ramsey import EnumerationSpec, enumerate_canonical

from oracles import (longest_path_brute, min_path_partition_brute, nondegenerate_split_brute,
                     two_path_partition_exists)


def mono(host, c=0):
    return ColouredGraph.from_function(host, lambda u, v: c)


def test_verify_path_partition():
    g = mono(Complete(3))
    assert verify_path_partition(g, PathPartitionCertificate.of([MonoPath((0, 1, 2), 0)]))
    bad = PathPartitionCertificate.of([MonoPath((0, 1), 0), MonoPath((1, 2), 0)])
    v = verify_path_partition(g, bad)
    assert not v and "share" in v.reason


def test_verify_path_partition_rejects_wrong_colour_and_gaps():
    s = gen_split(1, 1, 1, 1)
    assert not verify_path_partition(s, PathPartitionCertificate.of([MonoPath((0, 2, 1, 3), 1)]))
    assert not verify_path_partition(s, PathPartitionCertificate.of([MonoPath((0, 2), 1)]))
    assert not check_path(s, MonoPath((0, 1), 1))  # same side, not an edge


def test_certificate_text_round_trip():
    cert = PathPartitionCertificate.of([MonoPath((0, 2), 1), MonoPath((3,), 2), MonoPath((1,), 1)])
    assert parse_path_certificate(cert.dumps()) == cert.with_route("")


def test_longest_examples():
    assert longest_mono_path(mono(Bipartite(3, 3)))[0] == 6
    assert longest_mono_path(gen_split(1, 1, 1, 1))[0] == 2
    length, path = longest_mono_path(gen_split(2, 2, 2, 2))
    assert length == 4 and check_path(gen_split(2, 2, 2, 2), path)
    assert longest_mono_path(mono(Complete(0)))[0] == 0
    assert longest_path_in_colour(gen_split(1, 1, 1, 1), 9) == MonoPath((), 9)


def test_longest_budget():
    with pytest.raises(BudgetExceeded):
        longest_mono_path(mono(Complete(6)), budget=5)


@settings(max_examples=60, deadline=None)
@given(a=st.integers(1, 4), b=st.integers(1, 4), r=st.integers(1, 3), seed=st.integers(0, 10**6))
def test_longest_agrees_with_permutation_search(a, b, r, seed):
    g = gen_random_r_local(Bipartite(a, b), r, 4, seed)
    length, path = longest_mono_path(g)
    assert length == longest_path_brute(g)
    assert check_path(g, path) and len(path) == length


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 7), r=st.integers(1, 3), seed=st.integers(0, 10**6))
def test_min_partition_agrees_with_oracle(n, r, seed):
    g = gen_random_r_local(Complete(n), r, 5, seed)
    count, cert = min_mono_path_partition(g)
    assert verify_path_partition(g, cert)
    assert count == len(cert) == min_path_partition_brute(g)


def test_min_partition_examples():
    assert min_mono_path_partition(mono(Complete(6)))[0] == 1
    # the balanced split of K_{4,4} needs only two paths; (5,1,3,3) needs three
    for sizes, expected in (((2, 2, 2, 2), 2), ((5, 1, 3, 3), 3)):
        g = gen_split(*sizes)
        count, cert = min_mono_path_partition(g)
        assert verify_path_partition(g, cert)
        assert count == expected == min_path_partition_brute(g)


def test_min_partition_tripartite():
    g = gen_tripartite()
    count, cert = min_mono_path_partition(g)
    assert count == 3 == min_path_partition_brute(g)
    assert verify_path_partition(g, cert)


def test_min_partition_exponential_parts():
    # three parts of sizes 2, 4, 8 are covered by two paths
    g = gen_exponential_parts(3)
    count, cert = min_mono_path_partition(g)
    assert verify_path_partition(g, cert)
    assert count == 2 == min_path_partition_brute(g)


def test_min_cycle_partition_examples():
    assert min_mono_cycle_partition(mono(Complete(4)))[0] == 1
    assert min_mono_cycle_partition(mono(Complete(2)))[0] == 1
    g = gen_exponential_parts(2)
    count, cert = min_mono_cycle_partition(g)
    assert count == 2
    assert verify_cycle_partition(g, cert)


def test_verify_cycle_partition_rejects():
    g = gen_split(1, 1, 1, 1)
    # 0-2-1-3 alternates colours, so it is no monochromatic cycle
    assert not verify_cycle_partition(g, CyclePartitionCertificate(((1, (0, 2, 1, 3)),), frozenset(range(4))))
    assert not verify_cycle_partition(g, CyclePartitionCertificate(((1, (0, 1)),), frozenset((0, 1))))


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 7), r=st.integers(1, 3), seed=st.integers(0, 10**6))
def test_cycle_certificate_converts_to_paths(n, r, seed):
    g = gen_random_r_local(Complete(n), r, 5, seed)
    count, cert = min_mono_cycle_partition(g)
    assert verify_cycle_partition(g, cert)
    paths = cycles_to_paths(g, cert)
    assert verify_path_partition(g, paths)
    assert len(paths) == count
    assert min_mono_path_partition(g)[0] <= count


def test_two_colour_partition_examples():
    res = two_colour_partition(mono(Bipartite(3, 3), 1))
    assert isinstance(res, TwoPaths)
    assert len(res.first) == 6 and len(res.second) == 0

    assert isinstance(two_colour_partition(gen_split(2, 2, 2, 2)), Split)

    star = ColouredGraph.from_function(Bipartite(3, 3), lambda t, b: 1 if t == 0 else 2)
    res = two_colour_partition(star)
    assert isinstance(res, TwoPaths) and res.first.colour != res.second.colour
    cert = PathPartitionCertificate.of([res.first, res.second])
    assert verify_path_partition(star, cert)


def test_two_colour_partition_rejects_three_colours():
    g = ColouredGraph.from_function(Bipartite(1, 3), lambda t, b: b)
    with pytest.raises(TooManyColours):
        two_colour_partition(g)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dichotomy_matches_brute_force(n):
    spec = EnumerationSpec(Bipartite(n, n), 2, 2)
    for g in enumerate_canonical(spec):
        res = two_colour_partition(g)
        exists = two_path_partition_exists(g)
        split = nondegenerate_split_brute(g)
        assert exists != split
        assert isinstance(res, TwoPaths) == exists
        if exists:
            cert = PathPartitionCertificate.of([res.first, res.second])
            assert verify_path_partition(g, cert)
            assert res.first.colour != res.second.colour


def test_restricted_subgraph_paths_stay_valid():
    g = gen_split(5, 1, 3, 3)
    sub = restrict(g, range(0, 12, 2))
    count, cert = min_mono_path_partition(sub)
    assert verify_path_partition(sub, cert)
