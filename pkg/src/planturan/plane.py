"""
Plane graphs given by rotation systems.

A :class:`PlaneGraph` stores, for every vertex, the clockwise cyclic order
of its neighbours. Faces are traced with one fixed convention: the
directed edge following ``(u, v)`` on its face is ``(v, w)`` where ``w``
comes right after ``u`` in the rotation at ``v``. One face per connected
component is designated as the outer face.

Vertex ids are the dense integers ``0..n-1``. All operations return new
graphs; a PlaneGraph is never modified after construction.
"""
import logging
from collections import Counter, defaultdict, deque
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import (AsymmetricAdjacency, GraphError, NonPlanarRotation,
                     NonSimple, UnknownEdge, UnknownFace, UnknownVertex)

logger = logging.getLogger(__name__)


def edge_key(u, v):
    """Undirected edge as an ordered pair"""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    """One traced face: its id and closed walk of directed edges"""
    id: int
    walk: tuple

    @property
    def size(self):
        return len(self.walk)

    @property
    def vertices(self):
        """Vertices in walk order; a vertex met twice is listed twice"""
        return tuple(u for u, _ in self.walk)

    def edges(self):
        return frozenset(edge_key(u, v) for u, v in self.walk)


class PlaneGraph:
    """
    Immutable rotation system with per-component outer faces.

    Use :func:`build` or :func:`from_faces` to create one.
    """

    __slots__ = ('_rotations', '_index', '_faces', '_dart_face',
                 '_component_of', '_outer_ids')

    def __init__(self, rotations, index, faces, dart_face, component_of, outer_ids):
        self._rotations = rotations
        self._index = index
        self._faces = faces
        self._dart_face = dart_face
        self._component_of = component_of
        self._outer_ids = outer_ids

    # vertices and edges

    @property
    def vertex_count(self):
        return len(self._rotations)

    @property
    def rotations(self):
        return self._rotations

    @property
    def edge_count(self):
        return sum(len(r) for r in self._rotations) // 2

    def _check_vertex(self, v):
        if not 0 <= v < len(self._rotations):
            raise UnknownVertex(v)

    def neighbors(self, v):
        self._check_vertex(v)
        return self._rotations[v]

    def degree(self, v):
        self._check_vertex(v)
        return len(self._rotations[v])

    @property
    def degrees(self):
        return tuple(len(r) for r in self._rotations)

    def has_edge(self, u, v):
        return 0 <= u < len(self._index) and v in self._index[u]

    def edges(self):
        """Sorted list of undirected edges (u < v)"""
        return [(u, v) for u, r in enumerate(self._rotations) for v in sorted(r) if u < v]

    def successor(self, v, u):
        """Neighbour following u in the clockwise rotation at v"""
        r = self._rotations[v]
        return r[(self._index[v][u] + 1) % len(r)]

    def predecessor(self, v, u):
        r = self._rotations[v]
        return r[(self._index[v][u] - 1) % len(r)]

    def position(self, v, u):
        """Index of u in the rotation at v"""
        try:
            return self._index[v][u]
        except (IndexError, KeyError):
            raise UnknownEdge((v, u))

    def adjacency(self):
        return {v: frozenset(r) for v, r in enumerate(self._rotations)}

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges())
        return g

    # faces

    @property
    def faces(self):
        return self._faces

    def face(self, face_id):
        try:
            return self._faces[face_id]
        except (IndexError, TypeError):
            raise UnknownFace(face_id)

    def face_of(self, u, v):
        """Face traced through the directed edge (u, v)"""
        try:
            return self._faces[self._dart_face[(u, v)]]
        except KeyError:
            raise UnknownEdge((u, v))

    def faces_at(self, v):
        """Distinct faces incident with v, in rotation order"""
        self._check_vertex(v)
        seen = {}
        for w in self._rotations[v]:
            f = self._faces[self._dart_face[(v, w)]]
            seen.setdefault(f.id, f)
        return list(seen.values())

    def corners_at(self, v):
        """
        Faces on the wedges at v, one entry per wedge: the wedge between
        neighbour w and its successor belongs to the face through (w, v)
        """
        self._check_vertex(v)
        return [self._faces[self._dart_face[(w, v)]] for w in self._rotations[v]]

    def contains_face(self, face):
        return (isinstance(face, Face) and 0 <= face.id < len(self._faces)
                and self._faces[face.id] == face)

    @property
    def outer_faces(self):
        """Designated outer faces, one per component that has edges"""
        return tuple(self._faces[i] for i in self._outer_ids if i is not None)

    @property
    def outer_face(self):
        """Outer face of the first component with edges, or None"""
        for i in self._outer_ids:
            if i is not None:
                return self._faces[i]
        return None

    def is_outer(self, face):
        return face.id in self._outer_ids

    def outer_face_of(self, v):
        i = self._outer_ids[self._component_of[v]]
        return None if i is None else self._faces[i]

    # components

    @property
    def component_count(self):
        return len(self._outer_ids)

    def component_of(self, v):
        return self._component_of[v]

    def components(self):
        comps = defaultdict(set)
        for v, c in enumerate(self._component_of):
            comps[c].add(v)
        return [frozenset(comps[c]) for c in range(len(self._outer_ids))]

    @property
    def is_connected(self):
        return len(self._outer_ids) == 1

    @property
    def region_count(self):
        """Faces of the plane drawing, with all components sharing one outer region"""
        isolated = sum(1 for r in self._rotations if not r)
        return len(self._faces) + isolated - (len(self._outer_ids) - 1)

    @property
    def is_triangulation(self):
        return (self.is_connected and self.vertex_count >= 3
                and all(f.size == 3 for f in self._faces))

    def outer_hints(self):
        """One directed edge per designated outer face"""
        return [f.walk[0] for f in self.outer_faces]

    def __eq__(self, other):
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return (self._rotations == other._rotations
                and self._outer_ids == other._outer_ids)

    def __hash__(self):
        return hash((self._rotations, self._outer_ids))

    def __repr__(self):
        return 'PlaneGraph(n=%d, e=%d, f=%d)' % (
            self.vertex_count, self.edge_count, len(self._faces))


def _trace(rotations, index):
    dart_face = {}
    faces = []
    for u, rot in enumerate(rotations):
        for v in rot:
            if (u, v) in dart_face:
                continue
            fid = len(faces)
            walk = []
            a, b = u, v
            while (a, b) not in dart_face:
                dart_face[(a, b)] = fid
                walk.append((a, b))
                rb = rotations[b]
                a, b = b, rb[(index[b][a] + 1) % len(rb)]
            faces.append(Face(fid, tuple(walk)))
    return tuple(faces), dart_face


def _label_components(rotations):
    component_of = [-1] * len(rotations)
    count = 0
    for s in range(len(rotations)):
        if component_of[s] >= 0:
            continue
        component_of[s] = count
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in rotations[v]:
                if component_of[w] < 0:
                    component_of[w] = count
                    queue.append(w)
        count += 1
    return tuple(component_of), count


def _validate(rotations):
    n = len(rotations)
    if n == 0:
        raise GraphError('a plane graph needs at least one vertex')
    for v, rot in enumerate(rotations):
        seen = set()
        for w in rot:
            if not 0 <= w < n:
                raise UnknownVertex(w)
            if w == v:
                raise NonSimple('loop at vertex %d' % v)
            if w in seen:
                raise NonSimple('parallel edge %d-%d' % (v, w))
            seen.add(w)
    index = tuple({w: i for i, w in enumerate(r)} for r in rotations)
    for v, rot in enumerate(rotations):
        for w in rot:
            if v not in index[w]:
                raise AsymmetricAdjacency('%d lists %d but %d does not list %d' % (v, w, w, v))
    return index


def _assemble(rotations, hints=()):
    rotations = tuple(tuple(int(w) for w in r) for r in rotations)
    index = _validate(rotations)
    faces, dart_face = _trace(rotations, index)
    component_of, count = _label_components(rotations)

    n_c = Counter(component_of)
    e_c = Counter()
    for v, r in enumerate(rotations):
        e_c[component_of[v]] += len(r)
    by_component = defaultdict(list)
    for f in faces:
        by_component[component_of[f.walk[0][0]]].append(f)
    for c in range(count):
        if e_c[c] == 0:
            continue
        if n_c[c] - e_c[c] // 2 + len(by_component[c]) != 2:
            raise NonPlanarRotation(
                'Euler check failed: n=%d e=%d f=%d' % (n_c[c], e_c[c] // 2, len(by_component[c])))

    hinted = {}
    for dart in hints:
        fid = dart_face.get(tuple(dart))
        if fid is not None:
            hinted.setdefault(component_of[dart[0]], fid)

    outer_ids = []
    for c in range(count):
        if c in hinted:
            outer_ids.append(hinted[c])
        elif by_component[c]:
            best = min(by_component[c], key=lambda f: (-f.size, min(f.walk)))
            outer_ids.append(best.id)
        else:
            outer_ids.append(None)

    return PlaneGraph(rotations, index, faces, dart_face, component_of, tuple(outer_ids))


def build(rotations, outer_face_hint=None):
    """
    Build a plane graph from clockwise rotations.

    Args:
        rotations: for each vertex, its neighbours in clockwise order
        outer_face_hint: optional directed edge; its face becomes the outer
            face of its component

    Without a hint the outer face of a component is its largest face, ties
    broken by the lexicographically smallest directed edge.
    """
    hints = ()
    if outer_face_hint is not None:
        u, v = outer_face_hint
        if not (0 <= u < len(rotations) and v in rotations[u]):
            raise UnknownEdge(tuple(outer_face_hint))
        hints = ((u, v),)
    return _assemble(rotations, hints)


def from_faces(cycles, outer=None, vertex_count=None):
    """
    Build a plane graph from consistently oriented face cycles.

    Every directed edge must be used by exactly one cycle; for each
    consecutive u -> v -> w of a cycle, w follows u in the rotation at v.

    Args:
        cycles: vertex cycles of all faces
        outer: index into `cycles` of the outer face
        vertex_count: number of vertices, to allow isolated ones
    """
    succ = defaultdict(dict)
    top = -1
    for cycle in cycles:
        k = len(cycle)
        for i in range(k):
            u, v, w = cycle[i - 1], cycle[i], cycle[(i + 1) % k]
            if u in succ[v]:
                raise NonPlanarRotation('directed edge %d->%d used by two faces' % (u, v))
            succ[v][u] = w
            top = max(top, v)

    n = top + 1 if vertex_count is None else vertex_count
    rotations = []
    for v in range(n):
        nxt = succ.get(v, {})
        if not nxt:
            rotations.append(())
            continue
        start = min(nxt)
        rot = [start]
        x = nxt[start]
        while x != start:
            if x not in nxt or len(rot) > len(nxt):
                raise NonPlanarRotation('faces around vertex %d do not close up' % v)
            rot.append(x)
            x = nxt[x]
        if len(rot) != len(nxt):
            raise NonPlanarRotation('faces around vertex %d form several disks' % v)
        rotations.append(tuple(rot))

    hint = None
    if outer is not None:
        hint = (cycles[outer][0], cycles[outer][1])
    return build(rotations, hint)


def faces(G):
    return list(G.faces)


@dataclass(frozen=True)
class FaceProfile:
    """
    Face, edge and vertex statistics of a plane graph.

    ``e33_prime`` excludes edges on a designated outer face; ``nk[k]`` counts
    k-vertices on exactly k inner 3-faces.
    """
    f_counts: dict
    e3: int
    e33: int
    e33_prime: int
    nk: dict
    degrees: tuple
    min_degree: int
    avg_degree: float
    max_degree: int

    @property
    def f3(self):
        return self.f_counts.get(3, 0)

    @property
    def face_count(self):
        return sum(self.f_counts.values())


def _triangle_count_per_edge(G):
    count = Counter()
    for f in G.faces:
        if f.size == 3:
            for e in f.edges():
                count[e] += 1
    return count


def profile(G):
    f_counts = Counter(f.size for f in G.faces)
    on_triangles = _triangle_count_per_edge(G)
    e3 = len(on_triangles)
    double = {e for e, c in on_triangles.items() if c >= 2}
    outer_edges = set()
    for f in G.outer_faces:
        outer_edges |= f.edges()

    nk = Counter()
    for v, rot in enumerate(G.rotations):
        if not rot:
            continue
        inner = sum(1 for f in G.faces_at(v) if f.size == 3 and not G.is_outer(f))
        if inner == len(rot):
            nk[len(rot)] += 1

    deg = np.array(G.degrees, dtype=int)
    return FaceProfile(f_counts=dict(f_counts), e3=e3, e33=len(double),
                       e33_prime=len(double - outer_edges), nk=dict(nk),
                       degrees=G.degrees, min_degree=int(deg.min()),
                       avg_degree=float(deg.mean()), max_degree=int(deg.max()))


@dataclass(frozen=True)
class SubgraphView:
    """Vertex and edge subset of a plane graph, rotations filtered from the parent"""
    parent: PlaneGraph
    vertices: frozenset
    edges: frozenset

    def rotation(self, v):
        return tuple(w for w in self.parent.rotations[v] if edge_key(v, w) in self.edges)

    def without(self, v):
        return SubgraphView(self.parent, self.vertices - {v},
                            frozenset(e for e in self.edges if v not in e))

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def components(self):
        return [frozenset(c) for c in nx.connected_components(self.to_networkx())]

    def is_paths_and_cycles(self):
        return all(d <= 2 for _, d in self.to_networkx().degree())

    def __len__(self):
        return len(self.vertices)


def link_graph(G, v):
    """G_v: the subgraph formed by all 3-faces incident with v"""
    vertices, edges = set(), set()
    for f in G.faces_at(v):
        if f.size == 3:
            vertices.update(f.vertices)
            edges |= f.edges()
    return SubgraphView(G, frozenset(vertices), frozenset(edges))


def reroot(G, face):
    """Same rotation system with `face` as the outer face of its component"""
    if not G.contains_face(face):
        raise UnknownFace(face)
    return _assemble(G.rotations, [face.walk[0]] + G.outer_hints())


def mirror(G):
    """Reflected embedding: every rotation reversed"""
    rotations = [tuple(reversed(r)) for r in G.rotations]
    return _assemble(rotations, [(v, u) for u, v in G.outer_hints()])


def relabel(G, mapping):
    """Graph with vertex v renamed mapping[v]; mapping is a permutation"""
    n = G.vertex_count
    if sorted(mapping[v] for v in range(n)) != list(range(n)):
        raise GraphError('relabeling is not a permutation of 0..%d' % (n - 1))
    rotations = [None] * n
    for v, r in enumerate(G.rotations):
        rotations[mapping[v]] = tuple(mapping[w] for w in r)
    return _assemble(rotations, [(mapping[u], mapping[v]) for u, v in G.outer_hints()])


def _surviving_hints(G, gone):
    hints = []
    for f in G.outer_faces:
        for dart in f.walk:
            if not gone(dart):
                hints.append(dart)
                break
    return hints


def delete_edge(G, u, v):
    """Remove edge uv; its two faces merge"""
    if not G.has_edge(u, v):
        raise UnknownEdge((u, v))
    rotations = list(G.rotations)
    rotations[u] = tuple(w for w in rotations[u] if w != v)
    rotations[v] = tuple(w for w in rotations[v] if w != u)
    hints = _surviving_hints(G, lambda d: d in ((u, v), (v, u)))
    return _assemble(rotations, hints)


def delete_edges(G, edges):
    for u, v in edges:
        G = delete_edge(G, u, v)
    return G


def add_edge(G, u, v, u_after=None, v_after=None):
    """
    Insert edge uv with v placed right after `u_after` in the rotation at u
    and u right after `v_after` at v. The `after` argument may be None only
    for a vertex without neighbours.
    """
    G._check_vertex(u)
    G._check_vertex(v)
    if u == v or G.has_edge(u, v):
        raise NonSimple('edge %d-%d cannot be added' % (u, v))
    rotations = list(G.rotations)
    for a, b, after in ((u, v, u_after), (v, u, v_after)):
        r = list(rotations[a])
        if after is None:
            if r:
                raise UnknownEdge((a, after))
            r = [b]
        else:
            r.insert(G.position(a, after) + 1, b)
        rotations[a] = tuple(r)
    return _assemble(rotations, G.outer_hints())


def add_chord(G, face, u, v):
    """Insert edge uv across `face`, splitting it in two"""
    if not G.contains_face(face):
        raise UnknownFace(face)
    corner = {}
    for x, y in face.walk:
        corner.setdefault(y, x)
    if u not in corner or v not in corner:
        raise UnknownVertex(u if u not in corner else v)
    return add_edge(G, u, v, corner[u], corner[v])


def delete_vertex(G, v):
    """
    Remove vertex v and compact ids.

    Returns:
        (graph, relabel) where relabel maps old ids to new ids
    """
    G._check_vertex(v)
    remap = {old: old - (old > v) for old in range(G.vertex_count) if old != v}
    rotations = [tuple(remap[w] for w in r if w != v)
                 for old, r in enumerate(G.rotations) if old != v]
    if not rotations:
        raise GraphError('cannot delete the last vertex')
    hints = [(remap[a], remap[b])
             for a, b in _surviving_hints(G, lambda d: v in d)]
    return _assemble(rotations, hints), remap
