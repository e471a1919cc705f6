import pytest
from hypothesis import given, settings, strategies as st

from localcolour import partition
from localcolour.errors import NotBalancedBipartite, NotTwoLocal
from localcolour.generators import gen_figure, gen_random_r_local, gen_split
from localcolour.graph import Bipartite, ColouredGraph, Complete
from localcolour.partition import anomaly_count, partition_2local_bipartite, reset_anomalies
from localcolour.paths import min_mono_path_partition, verify_path_partition
from localcolour.ramsey import bipartite_spec, enumerate_canonical


@pytest.fixture(autouse=True)
def clean_anomalies():
    reset_anomalies()
    yield
    reset_anomalies()


def check(g):
    cert = partition_2local_bipartite(g)
    assert verify_path_partition(g, cert), cert
    assert len(cert) <= 3
    return cert


def test_examples():
    assert len(check(ColouredGraph.from_function(Bipartite(3, 3), lambda u, v: 1))) == 1
    assert len(check(gen_split(2, 2, 2, 2))) <= 3
    assert check(gen_split(5, 1, 3, 3)).route != "fallback"
    assert check(gen_figure("ThreeColour", (2, 2, 2, 2, 2, 2))).route != "fallback"
    assert check(gen_figure("FourColour", (2, 2, 1, 1, 1, 1))).route != "fallback"
    assert len(partition_2local_bipartite(ColouredGraph(Bipartite(0, 0), {}))) == 0
    assert anomaly_count() == 0


def test_rejections():
    with pytest.raises(NotBalancedBipartite):
        partition_2local_bipartite(ColouredGraph.from_function(Bipartite(2, 3), lambda u, v: 1))
    with pytest.raises(NotBalancedBipartite):
        partition_2local_bipartite(ColouredGraph.from_function(Complete(4), lambda u, v: 1))
    with pytest.raises(NotTwoLocal):
        partition_2local_bipartite(ColouredGraph.from_function(Bipartite(3, 3), lambda t, b: b))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exhaustive(n):
    for g in enumerate_canonical(bipartite_spec(n, n)):
        check(g)
        assert min_mono_path_partition(g)[0] <= 3
    assert anomaly_count() == 0


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 6), pool=st.integers(2, 8), seed=st.integers(0, 10**6))
def test_random_two_local(n, pool, seed):
    g = gen_random_r_local(Bipartite(n, n), 2, pool, seed)
    check(g)
    assert anomaly_count() == 0


@settings(max_examples=30, deadline=None)
@given(sizes=st.tuples(*[st.integers(1, 3)] * 6), shape=st.sampled_from(["FourColour", "ThreeColour"]))
def test_figure_shapes(sizes, shape):
    try:
        g = gen_figure(shape, sizes)
    except Exception:
        return  # unbalanced or inconsistent block sizes
    if g.host.balanced:
        assert check(g).route != "fallback"


def test_fallback_records_anomaly(monkeypatch):
    def broken(self):
        return "broken", None
    monkeypatch.setattr(partition._Engine, "run", broken)
    g = gen_split(2, 2, 2, 2)
    cert = partition_2local_bipartite(g)
    assert cert.route == "fallback" and verify_path_partition(g, cert)
    assert anomaly_count() == 1
    assert partition.anomalies()[0]["reason"] == "broken"
