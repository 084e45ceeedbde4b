"""
File formats: planar_code, rotation text and DOT.

planar_code is the binary format of plane graph generators: the ASCII
header ``>>planar_code<<`` followed, per graph, by one byte n and, for each
vertex in id order, its clockwise neighbours as 1-based bytes closed by a
zero byte.
"""
import base64
import logging
import re

from .errors import CodecError, GraphError
from .plane import build

logger = logging.getLogger(__name__)

HEADER = b'>>planar_code<<'


def encode(G):
    """planar_code body of one graph, without header"""
    n = G.vertex_count
    if n >= 256:
        raise CodecError('planar_code stores at most 255 vertices, got %d' % n)
    out = bytearray([n])
    for rot in G.rotations:
        out.extend(w + 1 for w in rot)
        out.append(0)
    return bytes(out)


def write_planar_code(graphs, stream, header=True):
    """
    Writes graphs to a binary stream.

    Returns:
        number of graphs written
    """
    if header:
        stream.write(HEADER)
    count = 0
    for G in graphs:
        stream.write(encode(G))
        count += 1
    return count


def dumps(graphs, header=True):
    return (HEADER if header else b'') + b''.join(encode(G) for G in graphs)


def iter_decode(data):
    """Yields rotation lists from planar_code bytes (header optional)"""
    data = bytes(data)
    pos = len(HEADER) if data.startswith(HEADER) else 0
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise CodecError('graph with zero vertices at offset %d' % (pos - 1))
        rotations = []
        for _ in range(n):
            end = data.find(b'\x00', pos)
            if end < 0:
                raise CodecError('truncated planar_code')
            rotations.append(tuple(b - 1 for b in data[pos:end]))
            pos = end + 1
        yield rotations


def loads(data):
    """List of PlaneGraph decoded from planar_code bytes"""
    try:
        return [build(r) for r in iter_decode(data)]
    except GraphError as e:
        raise CodecError('invalid graph in planar_code: %s' % e)


def read_planar_code(stream):
    return loads(stream.read())


def to_base64(G):
    return base64.b64encode(encode(G)).decode('ascii')


def from_base64(text):
    graphs = loads(base64.b64decode(text))
    if len(graphs) != 1:
        raise CodecError('expected one graph, got %d' % len(graphs))
    return graphs[0]


_line = re.compile(r'^\s*(\d+)\s*:(.*)$')


def parse_rotation_text(text, outer_face_hint=None):
    """
    Parse ``v: w1 w2 ...`` lines (clockwise) with ``#`` comments.
    A comment ``# outer: u v`` sets the outer face hint.
    """
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition('#')
        m = re.match(r'\s*outer\s*:\s*(\d+)\s+(\d+)', comment)
        if m and outer_face_hint is None:
            outer_face_hint = (int(m.group(1)), int(m.group(2)))
        if not line.strip():
            continue
        m = _line.match(line)
        if not m:
            raise CodecError('line %d: expected "v: w1 w2 ..."' % lineno)
        v = int(m.group(1))
        if v in entries:
            raise CodecError('line %d: vertex %d listed twice' % (lineno, v))
        try:
            entries[v] = tuple(int(w) for w in m.group(2).split())
        except ValueError:
            raise CodecError('line %d: neighbours must be integers' % lineno)

    if sorted(entries) != list(range(len(entries))):
        raise CodecError('vertex ids must be 0..n-1')
    return build([entries[v] for v in range(len(entries))], outer_face_hint)


def read_rotation_text(path, outer_face_hint=None):
    with open(path) as f:
        return parse_rotation_text(f.read(), outer_face_hint)


def format_rotation_text(G):
    lines = ['# n=%d e=%d' % (G.vertex_count, G.edge_count)]
    outer = G.outer_face
    if outer is not None:
        lines.append('# outer: %d %d' % outer.walk[0])
    for v, rot in enumerate(G.rotations):
        lines.append(('%d: %s' % (v, ' '.join(str(w) for w in rot))).rstrip())
    return '\n'.join(lines) + '\n'


def to_dot(G, name='G'):
    """Undirected DOT graph; face sizes and walks go into comments"""
    lines = ['graph %s {' % name,
             '  // n=%d e=%d f=%d' % (G.vertex_count, G.edge_count, len(G.faces))]
    for f in G.faces:
        tag = ' outer' if G.is_outer(f) else ''
        lines.append('  // face %d size %d%s: %s' % (
            f.id, f.size, tag, ' '.join(str(v) for v in f.vertices)))
    for v in range(G.vertex_count):
        lines.append('  %d;' % v)
    for u, v in G.edges():
        lines.append('  %d -- %d;' % (u, v))
    lines.append('}')
    return '\n'.join(lines) + '\n'
