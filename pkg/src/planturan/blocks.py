"""
Triangular-block decomposition.

A triangular block is a maximal set of 3-faces connected through shared
edges, taken together with its edges. Each block is also embedded on its
own (rotations filtered from the host); its outer face is the block face
containing the host's outer face. The c-faces of a block are its outer
face plus all block faces of size at least 4.

The improvement block splits every vertex that meets two or more c-faces
into one copy per fan of consecutive 3-faces.
"""
import json
import logging
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from networkx.utils import UnionFind

from .constructions import jk
from .detectors import is_fk_free, is_hk_free
from .enumeration import canonical_code
from .errors import BlockError, OuterFaceIsTriangle, PreconditionViolated
from .plane import PlaneGraph, build, edge_key, profile, reroot
from .tools import fraction_str, slack

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TriangularBlock:
    """
    One triangular block of a host graph.

    Vertex sets (`vertices`, `A`, `B`) and the `alpha` map use host ids;
    `block_graph` uses its own compact ids, translated by `vertex_map`
    and `host_vertex`. `alpha[v]` counts c-face corners at v. `A` is None
    when some alpha exceeds 2.
    """
    index: int
    faces: tuple
    edges: frozenset
    vertices: frozenset
    block_graph: PlaneGraph
    vertex_map: dict
    host_vertex: tuple
    c_faces: tuple
    alpha: dict
    A: Optional[frozenset]
    B: frozenset
    sharing: dict
    l_sizes: tuple
    e3_block: int
    e33_prime: int
    n5: int
    n_contribution: Fraction
    host_outer_size: int

    def degree(self, v):
        """Degree of host vertex v inside the block"""
        return self.block_graph.degree(self.vertex_map[v])


@dataclass(frozen=True)
class ImprovementBlock:
    """Block after vertex splitting; `origin` maps its vertices to host ids"""
    block_graph: PlaneGraph
    origin: dict
    c_faces: tuple
    e3: int
    e33_prime: int


def _triangle_classes(G, order=None):
    triangles = [f.id for f in G.faces if f.size == 3]
    if order is not None:
        order = list(order)
        if sorted(order) != triangles:
            raise BlockError('order must be a permutation of the 3-face ids')
        triangles = order
    uf = UnionFind(triangles)
    by_edge = defaultdict(list)
    for fid in triangles:
        for e in G.face(fid).edges():
            by_edge[e].append(fid)
    for ids in by_edge.values():
        uf.union(*ids)
    return sorted((tuple(sorted(s)) for s in uf.to_sets()), key=lambda c: c[0])


def grow_block(G, face):
    """
    Edges of the block containing the 3-face `face`, found by repeatedly
    absorbing 3-faces that share an edge with the block
    """
    if face.size != 3:
        raise BlockError('a block grows from a 3-face, got size %d' % face.size)
    edges = set(face.edges())
    absorbed = {face.id}
    queue = deque(face.edges())
    while queue:
        u, v = queue.popleft()
        for dart in ((u, v), (v, u)):
            f = G.face_of(*dart)
            if f.size == 3 and f.id not in absorbed:
                absorbed.add(f.id)
                for e in f.edges():
                    if e not in edges:
                        edges.add(e)
                        queue.append(e)
    return frozenset(edges)


def vertices_on_triangles(G):
    return len({v for f in G.faces if f.size == 3 for v in f.vertices})


def _outer_dart(G, block_edges, anchor):
    """A block dart whose host face lies in the outer region of the block"""
    uf = UnionFind(f.id for f in G.faces)
    for u, v in G.edges():
        if (u, v) not in block_edges:
            uf.union(G.face_of(u, v).id, G.face_of(v, u).id)
    outer = uf[G.outer_face_of(anchor).id]
    for u, v in sorted(block_edges):
        for dart in ((u, v), (v, u)):
            if uf[G.face_of(*dart).id] == outer:
                return dart
    raise BlockError('block has no edge on its outer region')


def _c_faces(bg):
    outer = bg.outer_face
    return (outer,) + tuple(f for f in bg.faces if f.size >= 4 and f.id != outer.id)


def _c_corners(bg, c_faces, b):
    ids = {f.id for f in c_faces}
    return sum(1 for f in bg.corners_at(b) if f.id in ids)


def triangular_blocks(G, order=None):
    """
    All triangular blocks of G, ordered by their smallest 3-face id.

    Args:
        order: optional permutation of the 3-face ids to process; the
            result does not depend on it
    """
    classes = _triangle_classes(G, order)
    raw = []
    sharing = Counter()
    for cls in classes:
        edges = frozenset(e for fid in cls for e in G.face(fid).edges())
        vertices = frozenset(v for e in edges for v in e)
        sharing.update(vertices)
        raw.append((cls, edges, vertices))

    blocks = []
    for index, (cls, edges, vertices) in enumerate(raw):
        host_vertex = tuple(sorted(vertices))
        vertex_map = {h: b for b, h in enumerate(host_vertex)}
        rotations = [tuple(vertex_map[w] for w in G.rotations[h] if edge_key(h, w) in edges)
                     for h in host_vertex]
        u, v = _outer_dart(G, edges, host_vertex[0])
        bg = build(rotations, (vertex_map[u], vertex_map[v]))

        c_faces = _c_faces(bg)
        alpha = {h: _c_corners(bg, c_faces, vertex_map[h]) for h in host_vertex}
        A = None
        if max(alpha.values()) <= 2:
            A = frozenset(h for h, a in alpha.items() if a == 2)
        prof = profile(bg)
        blocks.append(TriangularBlock(
            index=index, faces=cls, edges=edges, vertices=vertices,
            block_graph=bg, vertex_map=vertex_map, host_vertex=host_vertex,
            c_faces=c_faces, alpha=alpha, A=A,
            B=frozenset(h for h in vertices if sharing[h] == 2),
            sharing={h: sharing[h] for h in vertices},
            l_sizes=tuple(f.size for f in c_faces),
            e3_block=prof.e3, e33_prime=prof.e33_prime, n5=prof.nk.get(5, 0),
            n_contribution=sum((Fraction(1, sharing[h]) for h in vertices), Fraction(0)),
            host_outer_size=G.outer_face_of(host_vertex[0]).size))
    logger.debug('%d triangular blocks in %r', len(blocks), G)
    return blocks


def c_faces(block):
    return list(block.c_faces)


def _fans(rotation, gaps):
    d = len(rotation)
    fans = []
    for a, g in enumerate(gaps):
        end = gaps[(a + 1) % len(gaps)]
        fan = []
        i = (g + 1) % d
        while True:
            fan.append(rotation[i])
            if i == end:
                break
            i = (i + 1) % d
        fans.append(fan)
    return fans


def improvement_block(block):
    """
    Split vertices meeting l >= 2 c-faces into l copies, lowest id first,
    until no such vertex is left.
    """
    if block.host_outer_size == 3:
        raise OuterFaceIsTriangle('the host outer face is a 3-face')

    current = block.block_graph
    origin = list(block.host_vertex)
    while True:
        cf = _c_faces(current)
        ids = {f.id for f in cf}
        target = None
        for v in range(current.vertex_count):
            gaps = [i for i, f in enumerate(current.corners_at(v)) if f.id in ids]
            if len(gaps) >= 2:
                target = (v, gaps)
                break
        if target is None:
            break

        v, gaps = target
        fans = _fans(current.rotations[v], gaps)
        rotations = [list(r) for r in current.rotations]
        owner = {}
        for i, fan in enumerate(fans):
            copy = v if i == 0 else len(rotations)
            if i > 0:
                rotations.append([])
                origin.append(origin[v])
            rotations[copy] = list(fan)
            for x in fan:
                owner[x] = copy
        for x, copy in owner.items():
            rotations[x] = [copy if w == v else w for w in rotations[x]]

        a, b = current.outer_face.walk[0]
        if a == v:
            a = owner[b]
        elif b == v:
            b = owner[a]
        current = build(rotations, (a, b))
        logger.debug('split vertex %d into %d copies', v, len(fans))

    prof = profile(current)
    return ImprovementBlock(block_graph=current, origin=dict(enumerate(origin)),
                            c_faces=_c_faces(current), e3=prof.e3,
                            e33_prime=prof.e33_prime)


# inequality reports

@dataclass(frozen=True)
class Inequality:
    """lhs <= rhs, with exact values"""
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def slack(self):
        return slack(self.lhs, self.rhs)

    @property
    def holds(self):
        return self.slack >= 0

    @property
    def tight(self):
        return self.slack == 0


@dataclass
class BlockReport:
    index: int
    n_vertices: int
    l_sizes: tuple
    A_size: Optional[int]
    B_size: int
    e3: int
    e33_prime: int
    n_contribution: Fraction
    checks: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def require(self, name, lhs, rhs):
        check = Inequality(name, Fraction(lhs), Fraction(rhs))
        self.checks.append(check)
        if not check.holds:
            self.violations.append('%s: %s > %s' % (name, fraction_str(lhs), fraction_str(rhs)))
        return check

    @property
    def ok(self):
        return not self.violations

    def as_record(self):
        return {
            'block': self.index,
            'n_vertices': self.n_vertices,
            'l_sizes': list(self.l_sizes),
            'A': self.A_size,
            'B': self.B_size,
            'e3': self.e3,
            'e33_prime': self.e33_prime,
            'n_contribution': fraction_str(self.n_contribution),
            'slacks': {c.name: fraction_str(c.slack) for c in self.checks},
            'violations': list(self.violations),
            **{k: v for k, v in self.notes.items()},
        }


@dataclass
class InequalityReport:
    mode: str
    n: int
    e: int
    blocks: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    skipped: Optional[str] = None

    def require(self, name, lhs, rhs):
        check = Inequality(name, Fraction(lhs), Fraction(rhs))
        self.checks.append(check)
        if not check.holds:
            self.violations.append('%s: %s > %s' % (name, fraction_str(lhs), fraction_str(rhs)))
        return check

    @property
    def ok(self):
        return not self.violations and all(b.ok for b in self.blocks)

    def all_violations(self):
        out = list(self.violations)
        for b in self.blocks:
            out.extend('block %d: %s' % (b.index, v) for v in b.violations)
        return out

    def to_jsonl(self):
        return ''.join(json.dumps(b.as_record(), sort_keys=True) + '\n' for b in self.blocks)

    def format_text(self):
        lines = ['%s report: n=%d e=%d blocks=%d%s' % (
            self.mode, self.n, self.e, len(self.blocks),
            ' (skipped: %s)' % self.skipped if self.skipped else '')]
        for c in self.checks:
            lines.append('  %-28s %10s <= %-10s slack %s' % (
                c.name, fraction_str(c.lhs), fraction_str(c.rhs), fraction_str(c.slack)))
        for b in self.blocks:
            lines.append('  block %d: |V|=%d l=%s |A|=%s |B|=%d e3=%d e33\'=%d n(F)=%s %s' % (
                b.index, b.n_vertices, list(b.l_sizes), b.A_size, b.B_size,
                b.e3, b.e33_prime, fraction_str(b.n_contribution),
                'ok' if b.ok else 'VIOLATED'))
            for v in b.violations:
                lines.append('    ' + v)
        for v in self.violations:
            lines.append('  VIOLATED ' + v)
        return '\n'.join(lines)


def rooted_off_triangle(G):
    """
    G rerooted so that its outer face is not a 3-face, or None when every
    face is a 3-face
    """
    outer = G.outer_face
    if outer is not None and outer.size != 3:
        return G
    candidates = [f for f in G.faces if f.size != 3]
    if not candidates:
        return None
    return reroot(G, max(candidates, key=lambda f: (f.size, -f.id)))


def _prepare(G, mode):
    if not G.is_connected:
        raise PreconditionViolated('%s inequalities need a connected graph' % mode)
    rooted = rooted_off_triangle(G)
    report = InequalityReport(mode, G.vertex_count, G.edge_count)
    if rooted is None:
        report.skipped = 'every face is a 3-face'
    return rooted, report


def block_inequalities_h3(G):
    """Per-block and global inequalities for an H_3-free plane graph"""
    result = is_hk_free(G, 3)
    if not result:
        raise PreconditionViolated('graph contains H_3', result.witness)
    G, report = _prepare(G, 'H3')
    if G is None:
        return report

    n = G.vertex_count
    blocks = triangular_blocks(G)
    for blk in blocks:
        nv = len(blk.vertices)
        br = BlockReport(blk.index, nv, blk.l_sizes,
                         None if blk.A is None else len(blk.A), len(blk.B),
                         blk.e3_block, blk.e33_prime, blk.n_contribution)
        br.require('max alpha', max(blk.alpha.values()), 2)
        if blk.A is None:
            report.blocks.append(br)
            continue
        A, B = blk.A, blk.B
        C = len(blk.c_faces)
        on_a = [blk.degree(v) for v in A]
        off_a = [blk.degree(v) for v in blk.vertices - A]
        on_b = [blk.degree(v) for v in B]
        if on_a:
            br.require('min degree on A', 4, min(on_a))
            br.require('max degree on A', max(on_a), 6)
        if off_a:
            br.require('max degree off A', max(off_a), 5)
        if on_b:
            br.require('max degree on B', max(on_b), 3)
        br.require('|A & B|', len(A & B), 0)
        br.require('|A| <= |C| - 1', len(A), C - 1)
        l0, rest = blk.l_sizes[0], sum(blk.l_sizes[1:])
        br.require('|V| from c-faces', nv, 2 * l0 + 2 * rest - 6 * C + len(A) - 2 * len(B) + 12)
        br.require('n5 in block', blk.n5, Fraction(3, 4) * (nv - Fraction(len(B), 2)))
        report.blocks.append(br)

    prof = profile(G)
    n5 = prof.nk.get(5, 0)
    report.require('sum n(F)', sum((b.n_contribution for b in blocks), Fraction(0)), n)
    report.require('n5(G)', n5, Fraction(3 * n, 4))
    report.require('3 f3', 3 * prof.f3, 4 * n + n5)
    report.require('4f - f3', 4 * G.region_count - prof.f3, 2 * G.edge_count)
    report.require('f3', prof.f3, Fraction(19 * n, 12))
    return report


def block_inequalities_fan(G, k, jk_code=None):
    """
    Per-block (through improvement blocks) and global inequalities for an
    F_k-free plane graph, 2 <= k <= 5.

    Args:
        jk_code: canonical code of J_k; computed when not given
    """
    if not 2 <= k <= 5:
        raise PreconditionViolated('fan inequalities need 2 <= k <= 5, got %d' % k)
    result = is_fk_free(G, k)
    if not result:
        raise PreconditionViolated('graph contains F_%d' % k, result.witness)
    G, report = _prepare(G, 'F%d' % k)
    if G is None:
        return report

    if jk_code is None:
        jk_code = canonical_code(jk(k))

    ratio = Fraction(3 * k - 6, 2 * k)
    for blk in triangular_blocks(G):
        imp = improvement_block(blk)
        fg = imp.block_graph
        nv = fg.vertex_count
        br = BlockReport(blk.index, len(blk.vertices), blk.l_sizes,
                         None if blk.A is None else len(blk.A), len(blk.B),
                         blk.e3_block, blk.e33_prime, blk.n_contribution)
        br.require('max degree of improvement', max(fg.degrees), k)
        br.require('e3 improvement', imp.e3, Fraction(k * nv, 2))
        br.require('sum of c-face sizes', Fraction(6 - k, 2) * nv + 3 * len(imp.c_faces) - 6,
                   sum(f.size for f in imp.c_faces))
        claim = br.require("e33' vs e3", blk.e33_prime, ratio * blk.e3_block)
        is_jk = canonical_code(blk.block_graph) == jk_code
        br.notes['is_jk'] = is_jk
        br.notes['tight'] = claim.tight
        if claim.tight != is_jk:
            br.violations.append('equality %s but block %s J_%d' % (
                claim.tight, 'is' if is_jk else 'is not', k))
        if (imp.e3, imp.e33_prime) != (blk.e3_block, blk.e33_prime):
            br.violations.append('improvement changed (e3, e33 prime) from %s to %s' % (
                (blk.e3_block, blk.e33_prime), (imp.e3, imp.e33_prime)))
        report.blocks.append(br)

    prof = profile(G)
    report.require('e33(G)', prof.e33, ratio * prof.e3)
    report.require('f3(G)', prof.f3, Fraction(5 * k - 6, 6 * k) * prof.e3)
    return report


def machinery_violations(G):
    """
    Identities of the block machinery that hold for every plane graph.

    Returns:
        list of violation messages, empty when all identities hold
    """
    out = []
    prof = profile(G)
    n, e = G.vertex_count, G.edge_count
    if n - e + G.region_count != 1 + G.component_count:
        out.append('Euler: n=%d e=%d f=%d c=%d' % (n, e, G.region_count, G.component_count))
    if sum(i * c for i, c in prof.f_counts.items()) != 2 * e:
        out.append('face handshake')
    if 3 * prof.f3 != prof.e3 + prof.e33:
        out.append('3 f3 = e3 + e33')

    blocks = triangular_blocks(G)
    seen = set()
    for blk in blocks:
        if seen & blk.edges:
            out.append('blocks %d overlaps an earlier block' % blk.index)
        seen |= blk.edges
        if grow_block(G, G.face(blk.faces[0])) != blk.edges:
            out.append('block %d differs from the incremental scan' % blk.index)
    triangle_edges = {e for f in G.faces if f.size == 3 for e in f.edges()}
    if seen != triangle_edges:
        out.append('blocks do not cover E_3')
    if sum(b.e3_block for b in blocks) != prof.e3:
        out.append('sum e3(F) != e3(G)')
    if sum((b.n_contribution for b in blocks), Fraction(0)) != vertices_on_triangles(G):
        out.append('sum n(F) != vertices on 3-faces')

    outer_triangle = any(f.size == 3 for f in G.outer_faces)
    if not outer_triangle:
        if sum(b.e33_prime for b in blocks) != prof.e33:
            out.append('sum e33 prime(F) != e33(G)')
        for blk in blocks:
            cf = blk.c_faces
            for i in range(len(cf)):
                for j in range(i + 1, len(cf)):
                    if cf[i].edges() & cf[j].edges():
                        out.append('block %d: c-faces %d and %d share an edge'
                                   % (blk.index, cf[i].id, cf[j].id))
            imp = improvement_block(blk)
            if (imp.e3, imp.e33_prime) != (blk.e3_block, blk.e33_prime):
                out.append('block %d: improvement changed e3 or e33 prime' % blk.index)
            if imp.block_graph.vertex_count < len(blk.vertices):
                out.append('block %d: improvement lost vertices' % blk.index)
            sets = [set(f.vertices) for f in imp.c_faces]
            for i in range(len(sets)):
                for j in range(i + 1, len(sets)):
                    if sets[i] & sets[j]:
                        out.append('block %d: improved c-faces meet' % blk.index)
    return out
