#!/usr/bin/env python

from fractions import Fraction

import pytest

import planturan as ptr
from planturan import blocks, constructions
from planturan.errors import BlockError, OuterFaceIsTriangle, PreconditionViolated

from tests.common import from_edges, load, two_k4_sharing_vertex, wheel


def test_h3_family_blocks_are_icosahedra():
    G = constructions.h3_family(0)
    found = blocks.triangular_blocks(G)
    ico = ptr.canonical_code(constructions.icosahedron())
    assert len(found) == 2
    for blk in found:
        assert ptr.canonical_code(blk.block_graph) == ico
        assert blk.B == frozenset()
        assert max(blk.alpha.values()) <= 2
        assert blk.n_contribution == 12
        assert blk.l_sizes == (3, )
    assert sum(len(b.vertices) for b in found) == G.vertex_count


def test_shared_vertex():
    G = two_k4_sharing_vertex()
    found = blocks.triangular_blocks(G)
    assert len(found) == 2
    for blk in found:
        assert blk.B == frozenset({0})
        assert blk.sharing[0] == 2
        assert blk.n_contribution == Fraction(7, 2)
    assert blocks.vertices_on_triangles(G) == 7


def test_bowtie():
    G = from_edges([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    found = blocks.triangular_blocks(G)
    assert len(found) == 2
    for blk in found:
        assert blk.B == frozenset({0})
        assert blk.n_contribution == Fraction(5, 2)
    assert sum(b.n_contribution for b in found) == 5


def test_k4_with_pendant_vertex():
    G = from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
    (blk,) = blocks.triangular_blocks(G)
    assert (blk.e3_block, blk.e33_prime) == (6, 3)
    report = blocks.block_inequalities_fan(G, 3)
    assert report.ok, report.all_violations()
    (b,) = report.blocks
    assert b.notes['is_jk'] and b.notes['tight']


def test_order_does_not_matter():
    G = ptr.delete_edges(constructions.icosahedron(), [(0, 1), (6, 7)])
    forward = blocks.triangular_blocks(G)
    ids = [f.id for f in G.faces if f.size == 3]
    backward = blocks.triangular_blocks(G, order=list(reversed(ids)))
    assert [b.edges for b in forward] == [b.edges for b in backward]
    with pytest.raises(BlockError):
        blocks.triangular_blocks(G, order=ids[1:])


def test_incremental_growth_reaches_same_block():
    G = ptr.delete_edges(constructions.octahedron(), [(0, 1), (5, 3)])
    for blk in blocks.triangular_blocks(G):
        for fid in blk.faces:
            assert blocks.grow_block(G, G.face(fid)) == blk.edges
    with pytest.raises(BlockError):
        blocks.grow_block(G, max(G.faces, key=lambda f: f.size))


def test_c_faces_start_with_outer_face():
    G = ptr.delete_edge(load('k4.rot'), 0, 1)
    (blk,) = blocks.triangular_blocks(G)
    cf = blocks.c_faces(blk)
    assert cf[0] == blk.block_graph.outer_face
    assert cf[0].size == 4
    assert blk.host_outer_size == 4


def test_improvement_block_splits_shared_corners():
    split = 0
    for G in ptr.near_triangulations(7, 2):
        G = blocks.rooted_off_triangle(G)
        for blk in blocks.triangular_blocks(G):
            imp = blocks.improvement_block(blk)
            assert (imp.e3, imp.e33_prime) == (blk.e3_block, blk.e33_prime)
            assert set(imp.origin.values()) == set(blk.vertices)
            bg = imp.block_graph
            ids = {f.id for f in imp.c_faces}
            for v in range(bg.vertex_count):
                assert sum(1 for f in bg.corners_at(v) if f.id in ids) <= 1
            split += bg.vertex_count > len(blk.vertices)
    assert split > 0


def test_improvement_needs_non_triangular_outer_face():
    (blk,) = blocks.triangular_blocks(constructions.octahedron())
    with pytest.raises(OuterFaceIsTriangle):
        blocks.improvement_block(blk)


def test_h3_report_on_extremal_graph():
    report = blocks.block_inequalities_h3(constructions.h3_family(0))
    assert report.ok, report.all_violations()
    assert len(report.blocks) == 2
    names = [c.name for c in report.checks]
    assert 'sum n(F)' in names and 'f3' in names
    assert all(c.holds for c in report.checks)
    assert report.to_jsonl().count('\n') == 2
    assert 'H3 report: n=24 e=63 blocks=2' in report.format_text()


def test_h3_report_requires_freeness():
    with pytest.raises(PreconditionViolated) as info:
        blocks.block_inequalities_h3(wheel(6))
    assert info.value.witness.center == 0


def test_h3_report_skips_triangulations():
    report = blocks.block_inequalities_h3(constructions.icosahedron())
    assert report.skipped
    assert report.blocks == []


def test_h3_report_reroots_off_triangle():
    G = ptr.delete_edge(constructions.icosahedron(), 0, 1)
    G = ptr.reroot(G, next(f for f in G.faces if f.size == 3))
    assert G.outer_face.size == 3
    report = blocks.block_inequalities_h3(G)
    assert report.skipped is None
    assert report.ok, report.all_violations()


@pytest.mark.parametrize('k', [3, 4])
def test_fan_report_tight_on_family(k):
    G = constructions.fan_family(0, k)
    report = blocks.block_inequalities_fan(G, k)
    assert report.ok, report.all_violations()
    assert report.blocks
    for b in report.blocks:
        assert b.notes['is_jk'] and b.notes['tight']


def test_fan_report_preconditions():
    with pytest.raises(PreconditionViolated):
        blocks.block_inequalities_fan(constructions.cube(), 6)
    with pytest.raises(PreconditionViolated):
        blocks.block_inequalities_fan(wheel(6), 4)


def test_inequality_slack_is_exact():
    check = blocks.Inequality('x', Fraction(1, 3), Fraction(1, 2))
    assert check.slack == Fraction(1, 6)
    assert check.holds and not check.tight


@pytest.mark.parametrize('G', [
    constructions.h3_family(0),
    constructions.fan_base(0),
    ptr.delete_edge(load('k4.rot'), 0, 1),
    two_k4_sharing_vertex(),
    constructions.cube(),
])
def test_machinery_identities(G):
    assert blocks.machinery_violations(G) == []
