#!/usr/bin/env python

import pytest

import planturan as ptr
from planturan import constructions, plane
from planturan.errors import NonTriangularFace, UnknownFace, UnknownName, UnsupportedOrder
from planturan.verify import edge_face_pairs, extremal_characterization_h3


@pytest.mark.parametrize('name, n, e, sizes', [
    ('k3', 3, 3, {3: 2}),
    ('k4', 4, 6, {3: 4}),
    ('octahedron', 6, 12, {3: 8}),
    ('icosahedron', 12, 30, {3: 20}),
    ('cube', 8, 12, {4: 6}),
    ('cuboctahedron', 12, 24, {3: 8, 4: 6}),
])
def test_named(name, n, e, sizes):
    G = constructions.named(name)
    assert (G.vertex_count, G.edge_count) == (n, e)
    assert plane.profile(G).f_counts == sizes


def test_aliases():
    ico = ptr.canonical_code(constructions.icosahedron())
    assert ptr.canonical_code(constructions.named('R6')) == ico
    assert ptr.canonical_code(constructions.named('jk5')) == ico
    assert ptr.canonical_code(constructions.named('r1')) == \
        ptr.canonical_code(constructions.octahedron())
    assert constructions.jk(2).vertex_count == 3
    with pytest.raises(UnknownName):
        constructions.named('dodecahedron')
    with pytest.raises(UnknownName):
        constructions.jk(6)


@pytest.mark.parametrize('k', [0, 1, 2, 3])
def test_h3_family(k):
    G = constructions.h3_family(k)
    n, e = G.vertex_count, G.edge_count
    assert n == 24 * (k + 1)
    assert 24 * e == 67 * n - 96
    assert e == [63, 130, 197, 264][k]
    assert set(plane.profile(G).f_counts) == {3, 4}
    assert G.outer_face.size == 4
    assert ptr.is_hk_free(G, 3)
    assert extremal_characterization_h3(G)


def test_h3_characterization_rejects_mutations():
    assert not extremal_characterization_h3(constructions.icosahedron())
    G = constructions.h3_family(1)
    quad = next(f for f in G.faces if f.size == 4 and not G.is_outer(f))
    a, _, c, _ = quad.vertices
    assert not extremal_characterization_h3(ptr.add_chord(G, quad, a, c))
    with pytest.raises(UnsupportedOrder):
        constructions.h3_family(-1)


@pytest.mark.parametrize('t', [0, 1, 2])
def test_fan_base(t):
    G = constructions.fan_base(t)
    assert (G.vertex_count, G.edge_count) == (20 * t + 12, 48 * t + 24)
    assert edge_face_pairs(G) == {(3, 4): G.edge_count}
    assert ptr.is_fk_free(G, 2)
    assert G.outer_face.size == 4


@pytest.mark.parametrize('t, k', [(t, k) for t in (0, 1, 2) for k in (2, 3, 4, 5)])
def test_fan_family(t, k):
    G = constructions.fan_family(t, k)
    n, e = G.vertex_count, G.edge_count
    assert n * (6 - k) == (28 * k + 24) * t + 12 * (k + 2)
    assert e * (6 - k) == 96 * k * t + 48 * k
    assert (7 * k + 6) * e == 24 * k * (n - 2)
    assert ptr.is_fk_free(G, k)
    assert not ptr.is_fk_free(G, k - 1) or k == 2


@pytest.mark.parametrize('k', [2, 3, 4, 5])
def test_fan_family_blocks_are_jk(k):
    G = constructions.fan_family(2, k)
    code = ptr.canonical_code(constructions.jk(k))
    found = ptr.triangular_blocks(G)
    assert found
    assert all(ptr.canonical_code(b.block_graph) == code for b in found)


def test_fan_family_t1_k5():
    G = constructions.fan_family(1, 5)
    assert (G.vertex_count, G.edge_count) == (248, 720)
    with pytest.raises(UnsupportedOrder):
        constructions.fan_family(0, 6)


def test_glue_k4_into_k4():
    host = constructions.k4()
    patch = constructions.k4()
    G = constructions.glue_into_face(host, host.faces[0], patch, patch.faces[0])
    assert (G.vertex_count, G.edge_count) == (5, 9)
    assert G.is_triangulation
    mirrored = constructions.glue_into_face(host, host.faces[0], patch, patch.faces[0], (1, True))
    assert mirrored.is_triangulation


def test_glue_errors():
    host = constructions.cube()
    patch = constructions.k4()
    with pytest.raises(NonTriangularFace):
        constructions.glue_into_face(host, host.faces[0], patch, patch.faces[0])
    other = constructions.octahedron()
    with pytest.raises(UnknownFace):
        constructions.glue_into_face(constructions.k4(), other.faces[5], patch, patch.faces[0])


@pytest.mark.parametrize('n', list(range(3, 20)) + [30, 41])
def test_delta6(n):
    G = constructions.delta6_triangulation(n)
    assert G.vertex_count == n
    assert G.is_triangulation
    assert max(G.degrees) <= 6
    if n >= 12:
        assert ptr.is_hk_free(G, 4)
        assert ptr.is_fk_free(G, 6)


def test_delta6_small_orders():
    with pytest.raises(UnsupportedOrder):
        constructions.delta6_triangulation(2)
    assert ptr.canonical_code(constructions.delta6_triangulation(12)) == \
        ptr.canonical_code(constructions.icosahedron())


@pytest.mark.parametrize('n', [6, 7, 10])
def test_bipyramid(n):
    G = constructions.bipyramid(n)
    assert G.is_triangulation
    assert G.edge_count == 3 * n - 6
    assert sorted(G.degrees)[-2:] == [n - 2, n - 2]


def test_k2n():
    G = constructions.k2n(7)
    assert G.edge_count == 2 * 7 - 4
    assert plane.profile(G).f3 == 0
    assert ptr.is_hk_free(G, 1)
    with pytest.raises(UnsupportedOrder):
        constructions.k2n(3)
    with pytest.raises(UnsupportedOrder):
        constructions.bipyramid(4)
