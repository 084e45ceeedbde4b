#!/usr/bin/env python

import pytest

import planturan as ptr
from planturan import constructions, enumeration
from planturan.enumeration import GenStream
from planturan.errors import (BadResumeToken, DeepRunRequired, NTooLarge,
                              NTooLargeForOracle, NTooSmall, TTooLarge)

from tests.common import reference

COUNTS = {n: c for n, c in reference('counts.ref.enumerate.txt')}


@pytest.mark.parametrize('n', range(3, 10))
def test_counts(n):
    expected = 1 if n == 3 else COUNTS[n]
    assert ptr.triangulations(n).count() == expected


@pytest.mark.slow
@pytest.mark.parametrize('n', [10, 11])
def test_counts_slow(n):
    assert ptr.triangulations(n).count() == COUNTS[n]


@pytest.mark.parametrize('n', range(4, 8))
def test_matches_brute_force_oracle(n):
    generated = {ptr.canonical_code(G) for G in ptr.triangulations(n)}
    oracle = {ptr.canonical_code(G) for G in ptr.brute_force_oracle(n)}
    assert generated == oracle


def test_stream_graphs_are_distinct_triangulations():
    codes = set()
    for G in ptr.triangulations(9):
        assert G.is_triangulation
        assert G.edge_count == 3 * 9 - 6
        codes.add(ptr.canonical_code(G))
    assert len(codes) == COUNTS[9]


def test_partitions_cover_stream_once():
    whole = sorted(ptr.canonical_code(G) for G in ptr.triangulations(9))
    parts = GenStream(9).partition(3)
    pieces = [ptr.canonical_code(G) for s in parts for G in s]
    assert sorted(pieces) == whole
    assert sum(s.count() for s in GenStream(9).partition(3)) == COUNTS[9]


def test_resume_token():
    stream = GenStream(9, split_level=7)
    seen = []
    token = None
    for G in stream:
        seen.append(G.rotations)
        if len(seen) == 20:
            token = stream.resume_token
    assert token.startswith('7:')
    restart = GenStream(9, split_level=7, resume='7:0')
    assert [G.rotations for G in restart] == seen
    tail = [G.rotations for G in GenStream(9, split_level=7, resume=token)]
    assert len(seen) - 20 < len(tail) <= len(seen)
    assert tail == seen[len(seen) - len(tail):]


@pytest.mark.parametrize('token', ['x', '7', '8:0'])
def test_bad_resume_token(token):
    with pytest.raises(BadResumeToken):
        GenStream(9, split_level=7, resume=token)


def test_progress_callback():
    calls = []
    GenStream(8, progress=calls.append, progress_every=5).count()
    assert calls == [5, 10]


def test_parameter_errors():
    with pytest.raises(NTooSmall):
        ptr.triangulations(2)
    with pytest.raises(NTooLarge):
        ptr.triangulations(15)
    with pytest.raises(DeepRunRequired):
        ptr.triangulations(13)
    with pytest.raises(TTooLarge):
        ptr.near_triangulations(6, 3)
    with pytest.raises(NTooLargeForOracle):
        ptr.brute_force_oracle(8)
    assert ptr.triangulations(15, unbounded=True, deep=True).n == 15


def test_near_triangulations():
    assert ptr.near_triangulations(6, 1).count() == 2 * 12
    assert ptr.near_triangulations(5, 2).count() == 36
    unique = ptr.near_triangulations(6, 1, unique=True).count()
    assert 0 < unique < 24
    for G in ptr.near_triangulations(6, 2):
        assert G.edge_count == 10
        assert G.is_connected


def test_canonical_code_is_an_invariant():
    G = constructions.icosahedron()
    code = ptr.canonical_code(G)
    assert ptr.canonical_code(ptr.mirror(G)) == code
    mapping = {v: (7 * v + 3) % 12 for v in range(12)}
    assert ptr.canonical_code(ptr.plane.relabel(G, mapping)) == code
    octa, other = sorted(ptr.triangulations(6), key=lambda T: max(T.degrees))
    assert ptr.canonical_code(octa) == ptr.canonical_code(constructions.octahedron())
    assert ptr.canonical_code(other) != ptr.canonical_code(octa)


@pytest.mark.parametrize('n', [8, 9, 10,
                               pytest.param(11, marks=pytest.mark.slow),
                               pytest.param(12, marks=pytest.mark.slow)])
def test_closure_under_contraction(n):
    smaller = {ptr.canonical_code(G) for G in ptr.triangulations(n - 1)}
    for G in ptr.sample_triangulations(n, 1000, seed=n):
        for v, d in enumerate(G.degrees):
            if d == 3:
                H, _ = ptr.delete_vertex(G, v)
                assert H.is_triangulation
                assert ptr.canonical_code(H) in smaller


def test_children_of_k4():
    kids = list(enumeration.children(enumeration.K4_ROTATIONS))
    assert len(kids) == 1
    assert ptr.build(kids[0]).is_triangulation


def test_sample_is_seeded_and_distinct():
    first = [ptr.canonical_code(G) for G in ptr.sample_triangulations(10, 40, seed=1)]
    again = [ptr.canonical_code(G) for G in ptr.sample_triangulations(10, 40, seed=1)]
    other = [ptr.canonical_code(G) for G in ptr.sample_triangulations(10, 40, seed=2)]
    assert first == again
    assert first != other
    assert len(set(first)) == 40
    assert set(first) <= {ptr.canonical_code(G) for G in ptr.triangulations(10)}


def test_sample_of_small_class_is_the_class():
    whole = sorted(ptr.canonical_code(G) for G in ptr.triangulations(8))
    assert sorted(ptr.canonical_code(G) for G in ptr.sample_triangulations(8, 1000)) == whole
