"""Residues, surfaces, boundary profiles and homology."""

import random

import pytest

import oracles
from gemcensus import (
    AbelianGroup,
    BoundaryProfile,
    ColoredGraph,
    SurfaceType,
    boundary_profile,
    complement,
    decode,
    first_homology,
    g_vector,
    is_bipartite,
    is_contracted,
    residues,
    surface_type,
)
from gemcensus.core import smith_invariant_factors
from gemcensus.moves import join_with_one_dipole

ORDER2 = ColoredGraph.from_matchings([[1, 0]] * 4)
SOLID_TORUS = "CABCBABCA"   # boundary: one torus, H1 = Z
HOPF = "CABCABBCA"          # boundary: two tori, H1 = Z^2


def test_order2_graph():
    assert ORDER2.order == 2
    assert [len(residues(ORDER2, cols)) for cols in ([0, 1], [0, 1, 2])] == [1, 1]
    assert g_vector(ORDER2) == (1, 1, 1, 1)
    assert is_bipartite(ORDER2)
    assert boundary_profile(ORDER2).is_closed
    assert first_homology(ORDER2).is_trivial
    for r in residues(ORDER2, [1, 2, 3]):
        assert surface_type(ORDER2, r) == SurfaceType(True, 0)


def test_residue_counts_solid_torus():
    g = decode(SOLID_TORUS)
    assert len(residues(g, [0, 1])) == 1
    assert len(residues(g, [0, 2])) == 2
    assert g_vector(g) == (1, 1, 1, 1)


def test_residues_partition_vertices():
    rng = random.Random(11)
    for _ in range(20):
        ms = oracles.random_graph(rng, 10)
        g = ColoredGraph.from_matchings(ms)
        for a in range(4):
            for b in range(a + 1, 4):
                rs = residues(g, [a, b])
                verts = sorted(v for r in rs for v in r.vertices)
                assert verts == list(range(g.order))
                for r in rs:
                    assert len(r.vertices) % 2 == 0
                    assert len(r.vertices) >= 2


def test_residues_empty_colors_rejected():
    with pytest.raises(ValueError):
        residues(ORDER2, [])


def test_surface_type_requires_three_colors():
    g = decode(SOLID_TORUS)
    r = residues(g, [0, 1])[0]
    with pytest.raises(ValueError):
        surface_type(g, r)


def test_surface_types_solid_torus():
    g = decode(SOLID_TORUS)
    (r013,) = residues(g, [0, 1, 3])
    assert surface_type(g, r013) == SurfaceType(True, 1)
    (r123,) = residues(g, [1, 2, 3])
    assert surface_type(g, r123) == SurfaceType(True, 0)


def test_three_residue_euler_bound():
    rng = random.Random(5)
    for _ in range(25):
        ms = oracles.random_graph(rng, 8)
        g = ColoredGraph.from_matchings(ms)
        for c in range(4):
            for r in residues(g, complement([c])):
                s = surface_type(g, r)
                v = len(r.vertices)
                assert s.euler_characteristic <= 2
                assert (3 * v) % 2 == 0
                if s.orientable:
                    assert s.euler_characteristic % 2 == 0
                # cross-check against the networkx oracle
                sub = [g.matchings[c2] for c2 in sorted(r.colors)]
                chi, orientable = oracles.component_surface(
                    sub, list(r.vertices))
                assert chi == s.euler_characteristic
                assert orientable == s.orientable


def test_boundary_profiles():
    assert str(boundary_profile(decode(SOLID_TORUS))) == "T^2"
    profile = boundary_profile(decode(HOPF))
    assert len(profile) == 2 and profile.is_toric


def test_bipartite_examples():
    assert is_bipartite(decode(SOLID_TORUS))
    # odd bicolored cycle: colors 0 and 1 alternate around 6 vertices in
    # a way impossible for a bipartition
    ms = [
        (1, 0, 3, 2, 5, 4),
        (3, 2, 1, 0, 5, 4),   # {0,1}-cycle 0-1-2-3 plus digon 4-5
        (5, 4, 3, 2, 1, 0),
        (2, 3, 0, 1, 5, 4),
    ]
    g = ColoredGraph.from_matchings(ms)
    assert is_bipartite(g) == oracles.is_bipartite(ms)


def test_bipartite_implies_orientable_boundary():
    rng = random.Random(23)
    for _ in range(20):
        ms = oracles.random_graph(rng, 10, bipartite=True)
        g = ColoredGraph.from_matchings(ms)
        assert all(s.orientable for s in boundary_profile(g).components)


def test_contracted():
    assert is_contracted(decode(SOLID_TORUS))
    joined = join_with_one_dipole(ORDER2, ORDER2, 0, 0, 0)
    assert not is_contracted(joined)


def test_invariance_under_relabeling_and_recoloring():
    rng = random.Random(3)
    for text in (SOLID_TORUS, HOPF):
        g = decode(text)
        base = (
            boundary_profile(g),
            sorted(g_vector(g)),
            is_bipartite(g),
            is_contracted(g),
            first_homology(g),
        )
        for _ in range(25):
            perm = list(range(g.order))
            rng.shuffle(perm)
            sigma = list(range(4))
            rng.shuffle(sigma)
            ms = oracles.recolor(oracles.relabel(g.matchings, perm), sigma)
            h = ColoredGraph.from_matchings(ms)
            assert (
                boundary_profile(h),
                sorted(g_vector(h)),
                is_bipartite(h),
                is_contracted(h),
                first_homology(h),
            ) == base


def test_first_homology_catalog_values():
    assert str(first_homology(decode(SOLID_TORUS))) == "Z"
    assert str(first_homology(decode(HOPF))) == "Z^2"
    assert str(first_homology(decode("CABFDEFEDCBAEFABCD"))) == "Z + Z/2"


def test_first_homology_against_sympy():
    rng = random.Random(17)
    for _ in range(12):
        ms = oracles.random_graph(rng, 8)
        g = ColoredGraph.from_matchings(ms)
        h1 = first_homology(g)
        assert (h1.rank, h1.torsion) == oracles.homology(ms)


def test_smith_invariant_factors_against_sympy():
    from sympy.matrices.normalforms import smith_normal_form
    import sympy

    rng = random.Random(29)
    for _ in range(40):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        mine = smith_invariant_factors(mat)
        snf = smith_normal_form(sympy.Matrix(mat))
        ref = [abs(snf[i, i]) for i in range(min(rows, cols)) if snf[i, i] != 0]
        assert mine == sorted(ref)
        for i in range(1, len(mine)):
            assert mine[i] % mine[i - 1] == 0


def test_homology_of_closed_contracted_graph_from_order2():
    # order-2 graph with a 2-dipole inserted still represents the sphere
    from gemcensus.moves import insert_two_dipole

    g = insert_two_dipole(ORDER2, 0, (0, 1))
    assert boundary_profile(g).is_closed
    assert first_homology(g).is_trivial
    assert all(x == 1 for x in g_vector(ORDER2))


def test_type_invariants():
    with pytest.raises(ValueError):
        AbelianGroup(0, (3, 2))     # not a divisibility chain
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        SurfaceType.from_euler(True, 1)
    assert SurfaceType.from_euler(False, 1).genus == 1
    assert BoundaryProfile(()).is_closed
    assert not BoundaryProfile(()).is_toric


def test_colored_graph_validation():
    with pytest.raises(ValueError):
        ColoredGraph.from_matchings([[0, 1]] * 4)       # fixed points
    with pytest.raises(ValueError):
        ColoredGraph.from_matchings([[1, 0]] * 3)       # wrong color count
    with pytest.raises(ValueError):
        # two separate doubled pairs: disconnected
        ColoredGraph.from_matchings([[1, 0, 3, 2]] * 4)
