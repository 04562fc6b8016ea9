"""Generation pipeline: two-colored bases, surface sets, censuses."""

import pytest

import oracles
from gemcensus import canonical_code, decode
from gemcensus.catalog import record_from_graph
from gemcensus.census import (
    CensusFilter,
    build_surface_set,
    census_codes,
    enumerate_census,
    generate_two_colored,
)

SURFACE_SIZES = {2: 0, 4: 1, 6: 3, 8: 14, 10: 71}
BIPARTITE_COUNTS = {2: 0, 4: 0, 6: 2, 8: 4, 10: 57}
NONBIPARTITE_COUNTS = {2: 0, 4: 1, 6: 6, 8: 90}


def test_two_colored_partitions():
    assert [cp.parts for cp in generate_two_colored(2)] == [(2,)]
    assert [cp.parts for cp in generate_two_colored(6)] == [
        (6,), (4, 2), (2, 2, 2)]
    assert len(generate_two_colored(12)) == 11


def test_two_colored_normal_form():
    for cp in generate_two_colored(8):
        n = sum(cp.parts)
        for m in (cp.m0, cp.m1):
            assert sorted(m) == list(range(n))
            assert all(m[m[v]] == v and m[v] != v for v in range(n))
        # the {0,1}-cycles realize exactly the declared parts
        comps = oracles.subgraph_components((cp.m0, cp.m1), (0, 1))
        assert sorted(len(c) for c in comps) == sorted(cp.parts)


def test_surface_set_sizes():
    for order, size in SURFACE_SIZES.items():
        assert len(build_surface_set(order)) == size


def test_surface_set_members_are_positive_genus():
    for order in (4, 6, 8):
        for member in build_surface_set(order).members:
            comps = oracles.subgraph_components(member.matchings, (0, 1, 2))
            for comp in comps:
                chi, _ = oracles.component_surface(
                    member.matchings, sorted(comp))
                assert chi < 2


def test_surface_set_6_profile():
    # three classes: torus, Klein bottle, projective plane
    profiles = []
    for member in build_surface_set(6).members:
        (comp,) = oracles.subgraph_components(member.matchings, (0, 1, 2))
        profiles.append(oracles.component_surface(
            member.matchings, sorted(comp)))
    assert sorted(profiles) == [(0, False), (0, True), (1, False)]


def test_census_counts_small(small_census_codes):
    for order, count in BIPARTITE_COUNTS.items():
        if order <= 8:
            assert len(small_census_codes[(order, True)]) == count
    for order, count in NONBIPARTITE_COUNTS.items():
        assert len(small_census_codes[(order, False)]) == count
    assert len(census_codes(10, CensusFilter(bipartite=True))) == 57


def test_census_against_naive_oracle(small_census_codes):
    for order in (2, 4, 6):
        reps = oracles.naive_census(order)
        oracle_codes = set()
        for ms in reps:
            from gemcensus import ColoredGraph
            oracle_codes.add(
                canonical_code(ColoredGraph.from_matchings(ms)).text)
        assert len(oracle_codes) == len(reps)  # no iso classes collapsed
        pipeline = set(small_census_codes[(order, True)])
        pipeline |= set(small_census_codes[(order, False)])
        assert pipeline == oracle_codes


def test_census_monotonicity():
    for order in (8, 10):
        any_codes = set(census_codes(order, CensusFilter(bipartite=True)))
        toric = set(census_codes(
            order, CensusFilter(bipartite=True, boundary="toric")))
        tc = set(census_codes(
            order, CensusFilter(bipartite=True, boundary="toric-connected")))
        assert tc <= toric <= any_codes
        rigid = {r.code for r in enumerate_census(
            order, CensusFilter(bipartite=True, boundary="toric",
                                rigid_only=True))}
        assert rigid <= toric


def test_census_records_validate():
    filt = CensusFilter(bipartite=True, boundary="toric")
    for rec in enumerate_census(8, filt):
        g = decode(rec.code)
        fresh = record_from_graph(g)
        assert fresh == rec
        assert rec.contracted
        assert rec.boundary.is_toric
        assert rec.bipartite


def test_census_codes_sorted_unique():
    codes = census_codes(8, CensusFilter(bipartite=False))
    assert codes == sorted(set(codes))


def test_parallel_determinism():
    filt = CensusFilter(bipartite=False)
    assert census_codes(8, filt, workers=1) == census_codes(8, filt, workers=3)


def test_gem_threads_env(monkeypatch):
    from gemcensus.census import resolve_workers

    monkeypatch.delenv("GEM_THREADS", raising=False)
    assert resolve_workers(None) == 1
    assert resolve_workers(5) == 5
    monkeypatch.setenv("GEM_THREADS", "2")
    assert resolve_workers(None) == 2
    assert resolve_workers(5) == 2   # bounded by the environment
    assert resolve_workers(1) == 1


def test_filter_validation():
    with pytest.raises(ValueError):
        CensusFilter(boundary="nonsense")
    with pytest.raises(ValueError):
        CensusFilter(rigid_only=True)  # needs bipartite=True
    with pytest.raises(ValueError):
        CensusFilter(contracted_only=False)
    with pytest.raises(ValueError):
        CensusFilter(require_boundary=False)


def test_surface_graph_codes_match_members():
    s = build_surface_set(6)
    assert len({m.code for m in s.members}) == len(s.members)
    assert s.order == 6
