"""
Named plane graphs and the extremal families.

All graphs are assembled from consistently oriented face cycles with
:func:`planturan.plane.from_faces`, which checks Euler's formula.
"""
import logging

from .errors import (ConstructionError, GraphError, NonTriangularFace,
                     SimplicityViolated, UnknownFace, UnknownName, UnsupportedOrder)
from .plane import build, from_faces, mirror

logger = logging.getLogger(__name__)


def _k3_faces():
    return [(0, 1, 2), (0, 2, 1)]


def _k4_faces():
    return [(3, 0, 1), (3, 1, 2), (3, 2, 0), (0, 2, 1)]


def _octahedron_faces():
    ring = [1, 2, 3, 4]
    faces = []
    for i in range(4):
        a, b = ring[i], ring[(i + 1) % 4]
        faces += [(0, a, b), (5, b, a)]
    return faces


def _icosahedron_faces():
    # apex 0, upper ring 1..5, lower ring 6..10, apex 11; face (0, 1, 2) first
    up = [1 + i for i in range(5)]
    low = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [(0, up[i], up[j]), (up[i], low[i], up[j]),
                  (up[j], low[i], low[j]), (11, low[j], low[i])]
    return faces


def _cube_faces():
    faces = [(0, 1, 2, 3), (7, 6, 5, 4)]
    for i in range(4):
        j = (i + 1) % 4
        faces.append((i, 4 + i, 4 + j, j))
    return faces


def _certify(G, name, degree=None, sizes=None):
    if degree is not None and set(G.degrees) != {degree}:
        raise ConstructionError('%s is not %d-regular' % (name, degree))
    if sizes is not None and {f.size for f in G.faces} != set(sizes):
        raise ConstructionError('%s has unexpected face sizes' % name)
    return G


def k3():
    return _certify(from_faces(_k3_faces()), 'k3', 2, [3])


def k4():
    return _certify(from_faces(_k4_faces()), 'k4', 3, [3])


def octahedron():
    return _certify(from_faces(_octahedron_faces()), 'octahedron', 4, [3])


def icosahedron():
    return _certify(from_faces(_icosahedron_faces()), 'icosahedron', 5, [3])


def cube():
    return _certify(from_faces(_cube_faces()), 'cube', 3, [4])


def cuboctahedron():
    return _certify(fan_base(0), 'cuboctahedron', 4, [3, 4])


_JK = {2: k3, 3: k4, 4: octahedron, 5: icosahedron}


def jk(k):
    """The block attaining equality in the fan bound: K3, K4, octahedron, icosahedron"""
    try:
        return _JK[k]()
    except KeyError:
        raise UnknownName('jk(%d): k must be 2..5' % k)


_NAMED = {
    'k3': k3, 'k4': k4,
    'octahedron': octahedron, 'r1': octahedron,
    'icosahedron': icosahedron, 'r6': icosahedron,
    'cube': cube, 'cuboctahedron': cuboctahedron,
}


def named(name):
    """
    A named graph: k3, k4, octahedron (r1), icosahedron (r6), cube,
    cuboctahedron, or jk2..jk5
    """
    key = str(name).lower()
    if key.startswith('jk') and key[2:].isdigit():
        return jk(int(key[2:]))
    try:
        return _NAMED[key]()
    except KeyError:
        raise UnknownName(name)


def named_graphs():
    return sorted(_NAMED)


def _rotate_walk(vertices, start):
    i = vertices.index(start)
    return vertices[i:] + vertices[:i]


def glue_into_face(host, face, patch, patch_face, alignment=(0, False)):
    """
    Embed `patch` inside the 3-face `face` of `host`, identifying the
    boundary of `patch_face` with it.

    Args:
        alignment: (shift, reflect); patch face vertex i goes to host face
            vertex (shift - i) mod 3, after mirroring the patch if reflect
    """
    if face.size != 3 or patch_face.size != 3:
        raise NonTriangularFace('gluing needs two 3-faces, got sizes %d and %d'
                                % (face.size, patch_face.size))
    if not host.contains_face(face):
        raise UnknownFace(face)
    if not patch.contains_face(patch_face):
        raise UnknownFace(patch_face)

    shift, reflect = alignment
    if reflect:
        u, v = patch_face.walk[0]
        patch = mirror(patch)
        patch_face = patch.face_of(v, u)

    p = patch_face.vertices
    a = face.vertices
    image = {p[i]: a[(shift - i) % 3] for i in range(3)}
    n = host.vertex_count
    for x in range(patch.vertex_count):
        if x not in image:
            image[x] = n
            n += 1

    rotations = [list(r) for r in host.rotations] + [None] * (n - host.vertex_count)
    for x in range(patch.vertex_count):
        if x not in p:
            rotations[image[x]] = [image[y] for y in patch.rotations[x]]
    for i, x in enumerate(p):
        # patch walk q -> x -> r maps onto host a_next <- x <- a_prev
        r = p[(i + 1) % 3]
        prot = patch.rotations[x]
        k = prot.index(r)
        inner = []
        while True:
            k = (k + 1) % len(prot)
            y = prot[k]
            if y in p:
                break
            inner.append(image[y])
        hx = image[x]
        host_rot = rotations[hx]
        pos = host_rot.index(image[r]) + 1
        rotations[hx] = host_rot[:pos] + inner + host_rot[pos:]

    hints = [d for d in host.outer_hints() if host.face_of(*d).id != face.id]
    try:
        return build(rotations, hints[0] if hints else None)
    except GraphError as e:
        raise SimplicityViolated('gluing produced an invalid graph: %s' % e)


def _icosahedron_pair(offset):
    """
    Two icosahedra with one triangle opened each, mirrored against each
    other; returns faces and the opened triangles (a0, a1, a2), (b0, b1, b2)
    """
    base = _icosahedron_faces()
    opened = base[0]
    faces = [tuple(offset + v for v in f) for f in base[1:]]
    faces += [tuple(offset + 12 + v for v in reversed(f)) for f in base[1:]]
    a = tuple(offset + v for v in opened)
    b = tuple(offset + 12 + v for v in opened)
    return faces, a, b


def _quad(a, b, i):
    j = (i + 1) % 3
    return (a[i], a[j], b[j], b[i])


def h3_family(k):
    """
    The H_3-free graph G_k on 24(k + 1) vertices.

    G_0 joins two icosahedra through their opened triangles by three
    quadrilaterals. G_k nests G_(k-1) into a fresh pair: the pair's first
    quadrilateral becomes a ring of four quadrilaterals attached to the
    outer quadrilateral of G_(k-1).
    """
    if k < 0:
        raise UnsupportedOrder('h3_family needs k >= 0, got %d' % k)
    faces, a, b = _icosahedron_pair(0)
    faces += [_quad(a, b, i) for i in range(3)]
    outer = _quad(a, b, 1)
    for level in range(1, k + 1):
        faces.remove(outer)
        q = outer
        shell, a, b = _icosahedron_pair(24 * level)
        faces += shell
        faces += [_quad(a, b, 1), _quad(a, b, 2)]
        r = _quad(a, b, 0)
        for j in range(4):
            faces.append((r[j], r[(j + 1) % 4], q[-(j + 1) % 4], q[-j % 4]))
        outer = _quad(a, b, 1)
    G = from_faces(faces, outer=faces.index(outer))
    logger.debug('h3_family(%d): %r', k, G)
    return G


def _tube_faces(t):
    """Quadrangulated tube of t stacked cubes; t = 0 is a 4-cycle"""
    def p(r, i):
        return 4 * r + i % 4

    faces = [tuple(p(0, i) for i in range(4))]
    for r in range(t):
        for i in range(4):
            faces.append((p(r, i), p(r + 1, i), p(r + 1, i + 1), p(r, i + 1)))
    faces.append(tuple(p(t, i) for i in (3, 2, 1, 0)))
    return faces, 4 * (t + 1)


def fan_base(t):
    """
    F_2-free graph on 20t + 12 vertices and 48t + 24 edges.

    Every face of the tube of t cubes shrinks to an inner quadrilateral,
    corners become triangles and tube edges become quadrilaterals, so each
    edge lies on exactly one 3-face and one 4-face. t = 0 gives the
    cuboctahedron.
    """
    if t < 0:
        raise UnsupportedOrder('fan_base needs t >= 0, got %d' % t)
    tube, base = _tube_faces(t)
    owner = {}
    for f, cycle in enumerate(tube):
        for j in range(4):
            owner[(cycle[j], cycle[(j + 1) % 4])] = (f, j)

    def x(f, j):
        return base + 4 * f + j % 4

    faces = []
    for f, cycle in enumerate(tube):
        faces.append(tuple(x(f, j) for j in range(4)))
        for j in range(4):
            faces.append((x(f, j + 1), x(f, j), cycle[(j + 1) % 4]))
    for (u, v), (f, j) in sorted(owner.items()):
        if u < v:
            g, m = owner[(v, u)]
            faces.append((u, x(g, m), v, x(f, j)))
    return from_faces(faces, outer=0)


def _aligned(face, patch_face):
    p = patch_face.vertices
    a = face.vertices
    return ((a.index(min(a)) + p.index(min(p))) % 3, False)


def fan_family(t, k):
    """fan_base(t) with every 3-face replaced by a copy of jk(k)"""
    if k not in _JK:
        raise UnsupportedOrder('fan_family needs k in 2..5, got %d' % k)
    G = fan_base(t)
    patch = jk(k)
    patch_face = patch.faces[0]
    for walk in [f.walk for f in G.faces if f.size == 3]:
        face = G.face_of(*walk[0])
        G = glue_into_face(G, face, patch, patch_face, _aligned(face, patch_face))
    logger.debug('fan_family(%d, %d): %r', t, k, G)
    return G


def delta6_triangulation(n):
    """
    Plane triangulation with maximum degree at most 6, for every n >= 3.

    A stack of L triangles joined by antiprism bands; each end is closed
    by the triangle itself or by an apex, so n = 3L + (number of apexes).
    n = 12 returns the icosahedron.
    """
    if n < 3:
        raise UnsupportedOrder('delta6_triangulation needs n >= 3, got %d' % n)
    if n == 12:
        return icosahedron()
    apexes = n % 3
    levels = (n - apexes) // 3

    def ring(r, i):
        return 3 * r + i % 3

    top, bottom = 3 * levels, 3 * levels + 1
    faces = []
    if apexes >= 1:
        faces += [(top, ring(0, i), ring(0, i + 1)) for i in range(3)]
    else:
        faces.append((ring(0, 0), ring(0, 1), ring(0, 2)))
    for r in range(levels - 1):
        for i in range(3):
            faces.append((ring(r, i + 1), ring(r, i), ring(r + 1, i)))
            faces.append((ring(r + 1, i), ring(r + 1, i + 1), ring(r, i + 1)))
    last = levels - 1
    if apexes == 2:
        faces += [(bottom, ring(last, i + 1), ring(last, i)) for i in range(3)]
    else:
        faces.append((ring(last, 2), ring(last, 1), ring(last, 0)))
    return from_faces(faces)


def bipyramid(n):
    """2K_1 + C_(n-2); K_4-free for n >= 6"""
    if n < 5:
        raise UnsupportedOrder('bipyramid needs n >= 5, got %d' % n)
    m = n - 2
    top, bottom = m, m + 1
    faces = []
    for i in range(m):
        j = (i + 1) % m
        faces += [(top, i, j), (bottom, j, i)]
    return from_faces(faces)


def k2n(n):
    """K_(2, n-2) drawn with n - 2 quadrilaterals"""
    if n < 4:
        raise UnsupportedOrder('k2n needs n >= 4, got %d' % n)
    rest = list(range(2, n))
    faces = [(0, rest[i], 1, rest[(i + 1) % len(rest)]) for i in range(len(rest))]
    return from_faces(faces)
