"""
Friendship graph (H_k) and fan (F_k) detection.

Both patterns have a center adjacent to everything else, so G contains
the pattern iff some neighbourhood graph G[N(v)] contains the rest of it:
k disjoint edges (a matching of size k) for H_k, a path on k+1 vertices
for F_k.
"""
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .errors import DetectorError, MTooLarge
from .plane import PlaneGraph, SubgraphView, edge_key

logger = logging.getLogger(__name__)

MAX_PATH = 12


def adjacency(g):
    """
    Adjacency sets of a graph given as a PlaneGraph, a SubgraphView,
    a networkx graph, a NeighborhoodGraph or a mapping vertex -> neighbours
    """
    if isinstance(g, PlaneGraph):
        return g.adjacency()
    if isinstance(g, (SubgraphView, NeighborhoodGraph)):
        g = g.to_networkx()
    if isinstance(g, nx.Graph):
        return {v: frozenset(g[v]) for v in g.nodes}
    if isinstance(g, Mapping):
        return {v: frozenset(ws) for v, ws in g.items()}
    raise TypeError('unsupported graph type %s' % type(g).__name__)


@dataclass(frozen=True)
class NeighborhoodGraph:
    """G[N(center)]"""
    center: int
    vertices: frozenset
    edges: frozenset

    def adjacency(self):
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(ws) for v, ws in adj.items()}

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


def neighborhood_graph(g, v):
    adj = g if isinstance(g, dict) else adjacency(g)
    nbrs = adj[v]
    edges = frozenset(edge_key(a, b) for a in nbrs for b in adj[a] & nbrs)
    return NeighborhoodGraph(v, frozenset(nbrs), edges)


@dataclass(frozen=True)
class PatternWitness:
    """
    Occurrence of H_k (limbs: k disjoint edges) or F_k
    (limbs: path of k+1 vertices) around `center`
    """
    kind: str
    k: int
    center: int
    limbs: tuple

    def verify(self, g):
        """Check the occurrence against plain adjacency"""
        adj = g if isinstance(g, dict) else adjacency(g)
        c = self.center
        if c not in adj:
            return False
        if self.kind == 'H':
            if len(self.limbs) != self.k:
                return False
            ends = [x for limb in self.limbs for x in limb]
            if len(set(ends)) != 2 * self.k or c in ends:
                return False
            return (all(b in adj[a] for a, b in self.limbs)
                    and all(x in adj[c] for x in ends))
        if self.kind == 'F':
            path = self.limbs
            if len(path) != self.k + 1 or len(set(path)) != len(path) or c in path:
                return False
            return (all(b in adj[a] for a, b in zip(path, path[1:]))
                    and all(x in adj[c] for x in path))
        return False


@dataclass(frozen=True)
class Freeness:
    """Result of a freeness test; false carries a verified witness"""
    free: bool
    witness: Optional[PatternWitness] = None

    def __bool__(self):
        return self.free


def max_matching(g):
    """
    Maximum cardinality matching (blossom algorithm).

    Returns:
        (size, frozenset of edges)
    """
    graph = g if isinstance(g, nx.Graph) else nx.Graph(
        [(a, b) for a, ws in adjacency(g).items() for b in ws])
    matching = nx.max_weight_matching(graph, maxcardinality=True)
    edges = frozenset(edge_key(a, b) for a, b in matching)
    return len(edges), edges


def _greedy_matching(adj):
    matched = set()
    pairs = []
    for a in sorted(adj, key=lambda x: (len(adj[x]), x)):
        if a in matched:
            continue
        free = [b for b in adj[a] if b not in matched]
        if free:
            b = min(free, key=lambda x: (len(adj[x]), x))
            matched.update((a, b))
            pairs.append(edge_key(a, b))
    return pairs


def _matching_at_least(adj, k):
    pairs = _greedy_matching(adj)
    if len(pairs) >= k:
        return tuple(sorted(pairs)[:k])
    size, matching = max_matching(adj)
    if size >= k:
        return tuple(sorted(matching)[:k])
    return None


def longest_path_at_least(g, m):
    """
    A path on `m` vertices as a vertex list, or None.

    Exact backtracking, limited to m <= 12.
    """
    if m < 1:
        raise DetectorError('path length must be positive, got %d' % m)
    if m > MAX_PATH:
        raise MTooLarge('path search limited to %d vertices, got %d' % (MAX_PATH, m))
    adj = g if isinstance(g, dict) else adjacency(g)
    if len(adj) < m:
        return None
    if m == 1:
        return [min(adj)] if adj else None

    path = []
    used = set()

    def extend():
        if len(path) == m:
            return True
        for w in sorted(adj[path[-1]], key=lambda x: (len(adj[x]), x)):
            if w not in used:
                path.append(w)
                used.add(w)
                if extend():
                    return True
                path.pop()
                used.discard(w)
        return False

    # path endpoints are more likely among low degree vertices
    for s in sorted((v for v in adj if adj[v]), key=lambda x: (len(adj[x]), x)):
        path[:] = [s]
        used.clear()
        used.add(s)
        if extend():
            return list(path)
    return None


def pattern_at(adj, v, kind, k):
    """PatternWitness centred at v, or None"""
    nbrs = adj[v]
    if kind == 'H':
        if len(nbrs) < 2 * k:
            return None
        limbs = _matching_at_least({a: adj[a] & nbrs for a in nbrs}, k)
    elif kind == 'F':
        if len(nbrs) < k + 1:
            return None
        path = longest_path_at_least({a: adj[a] & nbrs for a in nbrs}, k + 1)
        limbs = tuple(path) if path is not None else None
    else:
        raise DetectorError('unknown pattern kind %r' % kind)
    if limbs is None:
        return None
    return PatternWitness(kind, k, v, limbs)


def bad_vertices(adj, kind, k):
    """Vertices that are centres of a pattern occurrence"""
    return [v for v in sorted(adj) if pattern_at(adj, v, kind, k) is not None]


def _check_k(kind, k):
    if k < 1:
        raise DetectorError('k must be positive, got %d' % k)
    if kind == 'F' and k + 1 > MAX_PATH:
        raise MTooLarge('F_k detection supports k <= %d, got %d' % (MAX_PATH - 1, k))


def is_pattern_free(g, kind, k, at=None):
    """
    Freeness test for H_k or F_k.

    Args:
        g: graph in any form accepted by :func:`adjacency`
        kind: 'H' or 'F'
        k: pattern size
        at: restrict the search to these centres
    """
    _check_k(kind, k)
    adj = g if isinstance(g, dict) else adjacency(g)
    for v in (sorted(adj) if at is None else at):
        witness = pattern_at(adj, v, kind, k)
        if witness is not None:
            if not witness.verify(adj):
                raise DetectorError('witness failed verification: %r' % (witness,))
            logger.debug('found %s_%d at vertex %d', kind, k, v)
            return Freeness(False, witness)
    return Freeness(True)


def is_hk_free(g, k):
    return is_pattern_free(g, 'H', k)


def is_fk_free(g, k):
    return is_pattern_free(g, 'F', k)


@dataclass(frozen=True)
class Pattern:
    """Pattern name such as H3 or F5"""
    kind: str
    k: int

    @classmethod
    def parse(cls, text):
        text = str(text).strip().upper().replace('_', '')
        if len(text) < 2 or text[0] not in 'HF' or not text[1:].isdigit():
            raise DetectorError('pattern must look like H3 or F5, got %r' % text)
        pattern = cls(text[0], int(text[1:]))
        _check_k(pattern.kind, pattern.k)
        return pattern

    def is_free(self, g, at=None):
        return is_pattern_free(g, self.kind, self.k, at)

    def __str__(self):
        return '%s%d' % (self.kind, self.k)
