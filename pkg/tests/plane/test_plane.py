#!/usr/bin/env python

import pytest

import planturan as ptr
from planturan import constructions, plane
from planturan.errors import (AsymmetricAdjacency, NonPlanarRotation, NonSimple,
                              UnknownEdge, UnknownFace, UnknownVertex)

from tests.common import from_edges, load, same_embedding


def test_k4_from_file():
    G = load('k4.rot')
    assert (G.vertex_count, G.edge_count, len(G.faces)) == (4, 6, 4)
    assert G.is_triangulation
    assert G.edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_cube_from_file():
    G = load('cube.rot')
    assert sorted(f.size for f in G.faces) == [4] * 6
    assert G.outer_face == G.face_of(0, 1)
    assert not G.is_triangulation


def test_face_tracing_convention():
    G = constructions.icosahedron()
    for f in G.faces:
        for (u, v), (x, y) in zip(f.walk, f.walk[1:] + f.walk[:1]):
            assert x == v
            assert y == G.successor(v, u)


def test_every_dart_on_one_face():
    G = load('cube.rot')
    darts = [d for f in G.faces for d in f.walk]
    assert len(darts) == len(set(darts)) == 2 * G.edge_count


def test_default_outer_face_is_largest():
    G = load('wheel6.rot')
    assert G.outer_face.size == 6
    # all faces of the cube tie; smallest directed edge wins
    cube = constructions.cube()
    assert 0 in cube.outer_face.vertices


def test_outer_face_hint():
    G = ptr.build(load('k4.rot').rotations, (1, 0))
    assert G.outer_face == G.face_of(1, 0)
    with pytest.raises(UnknownEdge):
        ptr.build(load('k4.rot').rotations, (0, 0))


def test_euler_per_component():
    two_triangles = ptr.build([(1, 2), (2, 0), (0, 1), (4, 5), (5, 3), (3, 4)])
    assert two_triangles.component_count == 2
    assert len(two_triangles.outer_faces) == 2
    n, e, f = 6, 6, two_triangles.region_count
    assert n - e + f == 1 + two_triangles.component_count

    single = ptr.build([()])
    assert single.region_count == 1
    assert single.outer_face is None


@pytest.mark.parametrize('rotations, error', [
    ([(0, 1), (0,)], NonSimple),
    ([(1, 1), (0, 0)], NonSimple),
    ([(1, 2), (0,), (1,)], AsymmetricAdjacency),
    ([(1,), (5,)], UnknownVertex),
    ([(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)], NonPlanarRotation),
])
def test_invalid_rotations(rotations, error):
    with pytest.raises(error):
        ptr.build(rotations)


def test_lookup_errors():
    G = load('k4.rot')
    with pytest.raises(UnknownEdge):
        G.face_of(0, 0)
    with pytest.raises(UnknownFace):
        G.face(99)
    with pytest.raises(UnknownVertex):
        G.degree(4)
    with pytest.raises(KeyError):
        G.neighbors(-1)


def test_delete_then_add_is_identity():
    G = constructions.octahedron()
    for u, v in G.edges():
        u_after, v_after = G.predecessor(u, v), G.predecessor(v, u)
        H = ptr.add_edge(ptr.delete_edge(G, u, v), u, v, u_after, v_after)
        assert same_embedding(G, H)
        assert sorted(f.size for f in H.faces) == [3] * 8


def test_delete_edge_merges_faces():
    G = ptr.delete_edge(load('k4.rot'), 0, 1)
    assert sorted(f.size for f in G.faces) == [3, 3, 4]
    with pytest.raises(UnknownEdge):
        ptr.delete_edge(G, 0, 1)


def test_add_chord_splits_face():
    G = constructions.cube()
    face = G.faces[1]
    a, _, c, _ = face.vertices
    H = ptr.add_chord(G, face, a, c)
    assert H.edge_count == 13
    assert plane.profile(H).f_counts == {3: 2, 4: 5}
    with pytest.raises(NonSimple):
        ptr.add_chord(H, H.face_of(a, c), a, c)


def test_add_edge_to_isolated_vertex():
    G = ptr.build([(1,), (0,), ()])
    H = ptr.add_edge(G, 1, 2, u_after=0)
    assert H.is_connected
    assert H.degree(1) == 2


def test_mirror():
    G = ptr.delete_edge(constructions.icosahedron(), 0, 1)
    M = ptr.mirror(G)
    assert all(M.rotations[v] == tuple(reversed(G.rotations[v])) for v in range(G.vertex_count))
    assert sorted(f.size for f in M.faces) == sorted(f.size for f in G.faces)
    assert ptr.mirror(M) == G


def test_reroot():
    G = load('wheel6.rot')
    tri = G.face_of(0, 1)
    H = ptr.reroot(G, tri)
    assert H.outer_face == tri
    assert H.rotations == G.rotations
    with pytest.raises(UnknownFace):
        ptr.reroot(G, constructions.cube().faces[0])


def test_relabel_keeps_embedding_class():
    G = constructions.octahedron()
    mapping = {v: (v + 2) % 6 for v in range(6)}
    H = plane.relabel(G, mapping)
    assert ptr.canonical_code(H) == ptr.canonical_code(G)
    assert H.rotations[2] == tuple((w + 2) % 6 for w in G.rotations[0])


def test_delete_vertex():
    G, remap = ptr.delete_vertex(constructions.octahedron(), 0)
    assert (G.vertex_count, G.edge_count) == (5, 8)
    assert remap == {1: 0, 2: 1, 3: 2, 4: 3, 5: 4}
    assert sorted(f.size for f in G.faces) == [3, 3, 3, 3, 4]


def test_profile_octahedron():
    prof = plane.profile(constructions.octahedron())
    assert prof.f_counts == {3: 8}
    assert (prof.e3, prof.e33, prof.e33_prime) == (12, 12, 9)
    # vertices off the outer face lie on four inner 3-faces
    assert prof.nk == {4: 3}
    assert (prof.min_degree, prof.max_degree, prof.avg_degree) == (4, 4, 4.0)
    assert prof.face_count == 8


def test_profile_counts_only_inner_triangles():
    G = ptr.delete_edge(load('k4.rot'), 2, 3)
    prof = plane.profile(G)
    assert prof.f3 == 2
    assert prof.e3 == 5
    assert prof.e33 == 1


def test_link_graph():
    G = load('wheel6.rot')
    link = plane.link_graph(G, 0)
    assert len(link) == 7
    assert len(link.edges) == 12
    rim = link.without(0)
    assert rim.is_paths_and_cycles()
    assert len(rim.components()) == 1
    assert rim.rotation(1) == (6, 2)


def test_link_graph_skips_non_triangles():
    G = ptr.delete_edge(load('wheel6.rot'), 0, 3)
    rim = plane.link_graph(G, 0).without(0)
    assert rim.degree(3) == 0 or 3 not in rim.vertices
    assert rim.is_paths_and_cycles()


def test_corners_and_faces_at():
    G = ptr.delete_edge(load('wheel6.rot'), 0, 3)
    corners = G.corners_at(0)
    assert len(corners) == 5
    assert sorted(f.size for f in corners) == [3, 3, 3, 3, 4]
    assert len(G.faces_at(0)) == 5


def test_networkx_embedding_roundtrip():
    G = from_edges([(0, 1), (1, 2), (2, 0), (2, 3)])
    assert G.edge_count == 4
    assert sorted(f.size for f in G.faces) == [3, 5]
    assert set(G.to_networkx().edges()) == {(0, 1), (1, 2), (0, 2), (2, 3)}
