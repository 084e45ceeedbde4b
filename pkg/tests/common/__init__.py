#! /usr/bin/env python

import os

import networkx as nx
from networkx.algorithms import isomorphism

import planturan as ptr
from planturan import codec

ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
DATA = os.path.join(ROOT, 'data')
TEST_DATA = os.path.join(ROOT, 'tests', 'test_data')


def data_file(name):
    return os.path.join(DATA, name)


def load(name):
    return codec.read_rotation_text(data_file(name))


def reference(name):
    """Whitespace separated integer rows of a reference file"""
    rows = []
    with open(os.path.join(TEST_DATA, name)) as f:
        for line in f:
            line = line.split('#')[0].strip()
            if line:
                rows.append([int(x) for x in line.split()])
    return rows


def from_edges(edges, n=None):
    """Plane graph of a planar edge list, embedded by networkx"""
    g = nx.Graph(edges)
    if n is not None:
        g.add_nodes_from(range(n))
    planar, emb = nx.check_planarity(g)
    assert planar
    return ptr.build([tuple(emb.neighbors_cw_order(v)) if g.degree(v) else ()
                      for v in range(g.number_of_nodes())])


def wheel(m):
    """Centre 0 and rim 1..m"""
    rim = list(range(1, m + 1))
    return from_edges([(0, v) for v in rim] + [(rim[i], rim[(i + 1) % m]) for i in range(m)])


def two_k4_sharing_vertex():
    a = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    b = [(0, 4), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6)]
    return from_edges(a + b)


def friendship(k):
    """H_k: k triangles sharing vertex 0"""
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return nx.Graph(edges)


def fan(k):
    """F_k: vertex 0 joined to a path on k + 1 vertices"""
    path = list(range(1, k + 2))
    return nx.Graph([(0, v) for v in path] + list(zip(path, path[1:])))


def contains_vf2(G, pattern):
    """Naive oracle: pattern is a (not necessarily induced) subgraph of G"""
    host = G if isinstance(G, nx.Graph) else G.to_networkx()
    return isomorphism.GraphMatcher(host, pattern).subgraph_is_monomorphic()


def cyclic(rotation):
    if not rotation:
        return rotation
    i = rotation.index(min(rotation))
    return rotation[i:] + rotation[:i]


def same_embedding(G, H):
    """Equal rotation systems up to the starting point of each rotation"""
    return [cyclic(r) for r in G.rotations] == [cyclic(r) for r in H.rotations]
