"""
Isomorph-free generation of plane triangulations.

Triangulations on n vertices are grown from K4 by vertex splitting, the
inverse of contracting an edge whose ends have exactly two common
neighbours. A child is kept only when its new edge is the canonical
contractible edge: smallest sorted end degrees, ties broken by the
smallest rooted code. Every triangulation then has exactly one parent
class, so duplicates can only come from the same parent and are removed
there.

Streams can be cut into deterministic partitions: nodes of the generation
tree at a split level are numbered in depth-first order and partition j
of m keeps the nodes whose number is j modulo m.
"""
import itertools
import logging
from dataclasses import dataclass, replace
from typing import Callable, Optional

import networkx as nx
import numpy as np

from .errors import (BadResumeToken, DeepRunRequired, Disconnected, NTooLarge,
                     NTooLargeForOracle, NTooSmall, TTooLarge)
from .plane import build, delete_edges

logger = logging.getLogger(__name__)

K3_ROTATIONS = ((1, 2), (2, 0), (0, 1))
K4_ROTATIONS = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))

SOFT_CAP = 14
DEEP_FROM = 13


def _index(rotations):
    return [{w: i for i, w in enumerate(r)} for r in rotations]


def _rooted_code(rotations, index, u, v, step, best=None):
    """
    Code of the breadth-first numbering rooted at directed edge (u, v),
    walking rotations in direction `step`. Returns None as soon as the
    code exceeds `best`.
    """
    n = len(rotations)
    number = [0] * n
    first = [0] * n
    number[u] = 1
    first[u] = v
    order = [u]
    code = [n]
    smaller = best is None
    nxt = 2
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        r = rotations[x]
        d = len(r)
        k = index[x][first[x]]
        for _ in range(d):
            y = r[k]
            if number[y] == 0:
                number[y] = nxt
                nxt += 1
                first[y] = x
                order.append(y)
            code.append(number[y])
            if not smaller:
                b = best[len(code) - 1]
                if number[y] > b:
                    return None
                if number[y] < b:
                    smaller = True
            k = (k + step) % d
        code.append(0)
        if not smaller and best[len(code) - 1] > 0:
            smaller = True
    return code


def _min_code(rotations, index, darts, best=None):
    for u, v in darts:
        for step in (1, -1):
            code = _rooted_code(rotations, index, u, v, step, best)
            if code is not None and (best is None or code < best):
                best = code
    return best


def _is_connected(rotations):
    seen = {0}
    stack = [0]
    while stack:
        for w in rotations[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rotations)


def canonical_code_of_rotations(rotations):
    n = len(rotations)
    if not _is_connected(rotations):
        raise Disconnected('canonical codes need a connected graph')
    if n == 1:
        return bytes([1, 0])
    deg = [len(r) for r in rotations]
    low = min((deg[u], deg[v]) for u in range(n) for v in rotations[u])
    darts = [(u, v) for u in range(n) for v in rotations[u] if (deg[u], deg[v]) == low]
    return bytes(_min_code(rotations, _index(rotations), darts))


def canonical_code(G):
    """
    Byte string equal for two graphs iff their embeddings are isomorphic,
    reflections included
    """
    return canonical_code_of_rotations(G.rotations)


def _split(rotations, v, i, j):
    """
    Split v: the new vertex takes the clockwise arc from the i-th to the
    j-th neighbour (i < j), v keeps the rest, both stay adjacent to the
    two arc ends and to each other
    """
    R = rotations[v]
    w = len(rotations)
    child = list(rotations)
    child[v] = R[j:] + R[:i + 1] + (w,)
    for k in range(i + 1, j):
        x = R[k]
        child[x] = tuple(w if y == v else y for y in child[x])
    a = child[R[i]]
    p = a.index(v)
    child[R[i]] = a[:p] + (w,) + a[p:]
    b = child[R[j]]
    p = b.index(v)
    child[R[j]] = b[:p + 1] + (w,) + b[p + 1:]
    child.append(R[i:j + 1] + (v,))
    return tuple(child)


def _canonical_key(child, v, w):
    """Canonical form of `child` if edge vw is its canonical edge, else None"""
    deg = [len(r) for r in child]
    nbrs = [set(r) for r in child]
    target = (min(deg[v], deg[w]), max(deg[v], deg[w]))
    ties = []
    for x, r in enumerate(child):
        if deg[x] > target[0]:
            continue
        for y in r:
            if deg[y] < deg[x] or (deg[y] == deg[x] and y < x):
                continue
            inv = (deg[x], deg[y])
            if inv > target:
                continue
            if len(nbrs[x] & nbrs[y]) != 2:
                continue
            if inv < target:
                return None
            if {x, y} != {v, w}:
                ties.append((x, y))

    index = _index(child)
    own = _min_code(child, index, ((v, w), (w, v)))
    for x, y in ties:
        for u, z in ((x, y), (y, x)):
            for step in (1, -1):
                code = _rooted_code(child, index, u, z, step, own)
                if code is not None and code < own:
                    return None
    return bytes(own)


def children(rotations):
    """Canonical children of a triangulation, one per isomorphism class"""
    keys = set()
    for v, R in enumerate(rotations):
        d = len(R)
        for i in range(d):
            for j in range(i + 1, d):
                child = _split(rotations, v, i, j)
                key = _canonical_key(child, v, len(rotations))
                if key is not None and key not in keys:
                    keys.add(key)
                    yield child


@dataclass
class GenStream:
    """
    Stream of triangulations (``mode='triangulation'``) or of
    triangulations minus t edges (``mode='near'``).

    Attributes:
        part, parts: this stream is partition `part` of `parts`
        split_level: tree level whose nodes are distributed over partitions
        resume: token ``'level:index'``; nodes before index are skipped
        progress: called with the number of graphs emitted so far
        unique: in near mode, drop graphs isomorphic to an earlier one
    """
    n: int
    mode: str = 'triangulation'
    t: int = 0
    part: int = 0
    parts: int = 1
    split_level: Optional[int] = None
    resume: Optional[str] = None
    progress: Optional[Callable] = None
    progress_every: int = 1000
    deep: bool = False
    unbounded: bool = False
    unique: bool = False

    def __post_init__(self):
        if self.n < 3:
            raise NTooSmall('triangulations need at least 3 vertices, got %d' % self.n)
        if self.n > SOFT_CAP and not self.unbounded:
            raise NTooLarge('n=%d is above the soft cap %d' % (self.n, SOFT_CAP))
        if self.n >= DEEP_FROM and not self.deep:
            raise DeepRunRequired('n=%d needs a deep run' % self.n)
        if not 0 <= self.t <= 2:
            raise TTooLarge('deletion budget must be 0..2, got %d' % self.t)
        if not 0 <= self.part < self.parts:
            raise ValueError('part %d out of range for %d parts' % (self.part, self.parts))
        if self.split_level is None:
            self.split_level = max(4, min(self.n, self.n - 2))
        self._start = 0
        if self.resume is not None:
            try:
                level, start = (int(x) for x in self.resume.split(':'))
            except ValueError:
                raise BadResumeToken('resume token must be "level:index", got %r' % self.resume)
            if level != self.split_level:
                raise BadResumeToken('token level %d does not match split level %d'
                                     % (level, self.split_level))
            self._start = start
        self.position = self._start

    @property
    def resume_token(self):
        """Token that restarts this stream at the current split-level node"""
        return '%d:%d' % (self.split_level, self.position)

    def partition(self, parts):
        """`parts` independent streams whose union is this stream"""
        return [replace(self, part=j, parts=parts, progress=None) for j in range(parts)]

    def iter_rotations(self):
        """Rotation tuples of the triangulations, without building graphs"""
        n = self.n
        if n <= 4:
            if self.part == 0 and self._start == 0:
                yield K3_ROTATIONS if n == 3 else K4_ROTATIONS
            return

        counter = 0

        def walk(rotations):
            nonlocal counter
            size = len(rotations)
            if size == self.split_level:
                idx = counter
                counter += 1
                if idx % self.parts != self.part or idx < self._start:
                    return
                self.position = idx
            if size == n:
                yield rotations
                return
            for child in children(rotations):
                yield from walk(child)

        emitted = 0
        for rotations in walk(K4_ROTATIONS):
            emitted += 1
            if emitted % self.progress_every == 0:
                logger.info('n=%d part %d/%d: %d triangulations (at %s)',
                            n, self.part, self.parts, emitted, self.resume_token)
                if self.progress is not None:
                    self.progress(emitted)
            yield rotations
        logger.debug('n=%d part %d/%d done: %d triangulations', n, self.part, self.parts, emitted)

    def __iter__(self):
        if self.mode == 'triangulation':
            for rotations in self.iter_rotations():
                yield build(rotations)
        elif self.mode == 'near':
            seen = set()
            for rotations in self.iter_rotations():
                T = build(rotations)
                for dels in itertools.combinations(T.edges(), self.t):
                    G = delete_edges(T, dels)
                    if self.unique:
                        code = canonical_code(G)
                        if code in seen:
                            continue
                        seen.add(code)
                    yield G
        else:
            raise ValueError('unknown stream mode %r' % self.mode)

    def count(self):
        if self.mode == 'triangulation':
            return sum(1 for _ in self.iter_rotations())
        return sum(1 for _ in self)


def triangulations(n, **kwargs):
    """Every plane triangulation on n vertices once, up to isomorphism"""
    return GenStream(n, 'triangulation', **kwargs)


def near_triangulations(n, t, **kwargs):
    """Every triangulation on n vertices minus every set of t edges"""
    if not 0 <= t <= 2:
        raise TTooLarge('deletion budget must be 0..2, got %d' % t)
    return GenStream(n, 'near', t=t, **kwargs)


def sample_triangulations(n, count, seed=0, **kwargs):
    """
    Uniform sample (without replacement) of `count` triangulations on n
    vertices, in stream order; the whole class when it is smaller.

    One pass over the stream with a reservoir, driven by a numpy
    generator seeded with `seed`.
    """
    rng = np.random.default_rng(seed)
    reservoir = []
    for i, rotations in enumerate(triangulations(n, **kwargs).iter_rotations()):
        if i < count:
            reservoir.append((i, rotations))
        else:
            j = int(rng.integers(0, i + 1))
            if j < count:
                reservoir[j] = (i, rotations)
    return [build(rotations) for _, rotations in sorted(reservoir)]


def brute_force_oracle(n):
    """
    Triangulations on n <= 7 vertices by exhaustive search over labeled
    edge sets with 3n - 6 edges, deduplicated by canonical code
    """
    if n > 7:
        raise NTooLargeForOracle('the oracle is limited to 7 vertices, got %d' % n)
    if n < 3:
        raise NTooSmall('triangulations need at least 3 vertices, got %d' % n)

    pairs = list(itertools.combinations(range(n), 2))
    incidence = np.zeros((len(pairs), n), dtype=np.int8)
    for idx, (a, b) in enumerate(pairs):
        incidence[idx, a] = incidence[idx, b] = 1
    subsets = np.array(list(itertools.combinations(range(len(pairs)), 3 * n - 6)), dtype=np.int16)
    degrees = incidence[subsets].sum(axis=1)
    keep = subsets[degrees.min(axis=1) >= min(3, n - 1)]
    logger.debug('oracle n=%d: %d of %d edge sets pass the degree filter',
                 n, len(keep), len(subsets))

    found = {}
    for subset in keep:
        g = nx.Graph([pairs[i] for i in subset])
        if not nx.is_connected(g):
            continue
        planar, embedding = nx.check_planarity(g)
        if not planar:
            continue
        G = build([tuple(embedding.neighbors_cw_order(v)) for v in range(n)])
        found.setdefault(canonical_code(G), G)
    return list(found.values())
