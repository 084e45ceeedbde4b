"""
Statement harness.

Each statement is checked by a function returning a :class:`Certificate`:
a pass/fail verdict, the counts of everything scanned and the witnesses
found, as planar_code. Witnesses are decoded again and re-verified
(freeness and edge count) before they enter a certificate.

Searches over graphs with 3n - 6 - t edges scan triangulations on n
vertices and their t-edge deletions: a deletion can only repair a pattern
centre that it touches (an end of the deleted edge or a common neighbour
of its ends), so only deletion sets touching every pattern centre are
checked.
"""
import base64
import functools
import itertools
import inspect
import json
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import codec
from .blocks import (block_inequalities_fan, block_inequalities_h3,
                     machinery_violations, triangular_blocks)
from .config import Settings
from .constructions import (bipyramid, delta6_triangulation, fan_base,
                            fan_family, h3_family, icosahedron, jk, k2n, named)
from .detectors import Pattern, adjacency, bad_vertices, is_hk_free, pattern_at
from .enumeration import (canonical_code, canonical_code_of_rotations,
                          sample_triangulations, triangulations)
from .errors import Inconclusive, UnknownStatement
from .parallel import partitioned, parts_for, run_partitioned
from .plane import build, delete_edges, delete_vertex, profile
from .tools import fraction_str, ratio_le

logger = logging.getLogger(__name__)

SCHEMA = 'cert-v1'

EX_H3_VALUES = {7: 15, 8: 18, 9: 21, 10: 24, 11: 26, 12: 30, 13: 31, 14: 34}
FAN_TRIANGULATIONS = {(6, 4), (7, 5), (8, 5), (9, 5), (10, 5), (12, 5)}


@dataclass
class Certificate:
    statement_id: str
    parameters: dict = field(default_factory=dict)
    verdict: bool = True
    counts: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    runtime: float = 0.0

    def fail(self, message):
        self.verdict = False
        self.notes.append('FAIL: ' + message)
        logger.warning('%s: %s', self.statement_id, message)

    def add_witness(self, label, G, pattern=None, edges=None):
        """Encode G, decode it again and re-verify freeness and edge count"""
        if G.vertex_count >= 256:
            self.notes.append('witness %s not stored: %d vertices' % (label, G.vertex_count))
            return True
        data = codec.encode(G)
        H = codec.loads(data)[0]
        ok = True
        if pattern is not None and not pattern.is_free(H):
            ok = False
        if edges is not None and H.edge_count != edges:
            ok = False
        if not ok:
            self.fail('witness %s does not re-verify' % label)
        self.witnesses.append((label, data))
        return ok

    def to_dict(self):
        return {
            'schema': SCHEMA,
            'statement': self.statement_id,
            'parameters': self.parameters,
            'verdict': 'pass' if self.verdict else 'fail',
            'counts': self.counts,
            'rows': self.rows,
            'witnesses': [{'label': label, 'planar_code': base64.b64encode(data).decode('ascii')}
                          for label, data in self.witnesses],
            'notes': self.notes,
            'runtime_seconds': round(self.runtime, 3),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str)

    def summary(self):
        lines = ['%-16s %s  (%.1f s)' % (self.statement_id,
                                          'PASS' if self.verdict else 'FAIL', self.runtime)]
        if self.rows:
            columns = list(self.rows[0])
            widths = [max(len(str(c)), *(len(str(r.get(c, ''))) for r in self.rows)) for c in columns]
            lines.append('  ' + '  '.join(str(c).ljust(w) for c, w in zip(columns, widths)))
            for r in self.rows:
                lines.append('  ' + '  '.join(str(r.get(c, '')).ljust(w) for c, w in zip(columns, widths)))
        for key in sorted(self.counts):
            lines.append('  %s: %s' % (key, self.counts[key]))
        for label, data in self.witnesses:
            lines.append('  witness %s: %s' % (label, base64.b64encode(data).decode('ascii')))
        lines.extend('  ' + note for note in self.notes)
        return '\n'.join(lines)


@dataclass(frozen=True)
class SearchTask:
    """
    Scan of the t-edge deletions of all triangulations on n vertices.

    An existence scan stops at the first pattern-free graph; otherwise
    every triangulation is scanned and every free deletion set counted.
    """
    n: int
    pattern: Pattern
    t: int
    existence: bool = True

    def run(self, jobs=1, deep=False):
        """Counts over all partitions and the first witness (rotations, deletions), if any"""
        results = run_partitioned(_scan_task, parts_for(jobs), self, deep, jobs=jobs)
        found = [r['witness'] for r in results if r['witness'] is not None]
        return {'triangulations': sum(r['triangulations'] for r in results),
                'checked': sum(r['checked'] for r in results),
                'free': sum(r['free'] for r in results),
                'witness': found[0] if found else None}

    def free_graphs(self, deep=False):
        """Every pattern-free graph of the scan, labelled by triangulation index and deletions"""
        for idx, rotations in enumerate(triangulations(self.n, deep=deep).iter_rotations()):
            sets, _ = free_deletion_sets(rotations, self.pattern, self.t)
            if not sets:
                continue
            T = build(rotations)
            for dels in sets:
                yield 'n=%d T%d-%s' % (self.n, idx, list(dels)), delete_edges(T, dels)


# deletion search

def _edges(rotations):
    return sorted((u, v) for u, r in enumerate(rotations) for v in r if u < v)


def _without(adj, deletions):
    adj = dict(adj)
    for x, y in deletions:
        adj[x] = adj[x] - {y}
        adj[y] = adj[y] - {x}
    return adj


def free_deletion_sets(rotations, pattern, t, first_only=False):
    """
    Sets of t edges whose removal makes the triangulation pattern-free.

    Returns:
        (list of deletion tuples, number of candidate sets checked)
    """
    adj = {v: frozenset(r) for v, r in enumerate(rotations)}
    edges = _edges(rotations)
    bad = bad_vertices(adj, pattern.kind, pattern.k)
    if not bad:
        sets = []
        for dels in itertools.combinations(edges, t):
            sets.append(dels)
            if first_only:
                break
        return sets, len(sets)
    if t == 0:
        return [], 0

    touch = {(x, y): {x, y} | (adj[x] & adj[y]) for x, y in edges}
    need = set(bad)
    if t == 1:
        candidates = [(e,) for e in edges if need <= touch[e]]
    else:
        candidates = []
        seen = set()
        for e1 in edges:
            if bad[0] not in touch[e1]:
                continue
            for e2 in edges:
                key = (min(e1, e2), max(e1, e2))
                if e1 == e2 or key in seen:
                    continue
                seen.add(key)
                if need <= touch[e1] | touch[e2]:
                    candidates.append(key)

    found = []
    for dels in candidates:
        reduced = _without(adj, dels)
        if all(pattern_at(reduced, v, pattern.kind, pattern.k) is None for v in bad):
            found.append(dels)
            if first_only:
                break
    return found, len(candidates)


@partitioned
def _scan_task(part, parts, task, deep):
    first_only = task.existence
    seen = checked = free = 0
    witness = None
    for rotations in triangulations(task.n, part=part, parts=parts, deep=deep).iter_rotations():
        seen += 1
        sets, c = free_deletion_sets(rotations, task.pattern, task.t, first_only)
        checked += c
        free += len(sets)
        if sets and witness is None:
            witness = (rotations, sets[0])
            if first_only:
                break
    return {'triangulations': seen, 'checked': checked, 'free': free, 'witness': witness}


@dataclass
class MaxEdges:
    n: int
    pattern: Pattern
    value: int
    t: int
    witness: object
    deletions: tuple
    counts: dict


def max_edges(n, pattern, t_max=2, jobs=1, deep=False):
    """
    Maximum number of edges of a pattern-free planar graph on n vertices,
    provided it is at least 3n - 6 - t_max.

    Deletion budgets t = 0, 1, ... are scanned in turn; a budget without
    a pattern-free graph is scanned completely.
    """
    if isinstance(pattern, str):
        pattern = Pattern.parse(pattern)
    counts = {}
    for t in range(t_max + 1):
        scan = SearchTask(n, pattern, t, existence=True).run(jobs, deep)
        counts['t%d_triangulations' % t] = scan['triangulations']
        counts['t%d_checked' % t] = scan['checked']
        if scan['witness'] is not None:
            rotations, dels = scan['witness']
            G = delete_edges(build(rotations), dels)
            logger.info('ex(%d, %s) = %d', n, pattern, 3 * n - 6 - t)
            return MaxEdges(n, pattern, 3 * n - 6 - t, t, G, dels, counts)
        logger.info('n=%d %s: no pattern-free graph with %d edges', n, pattern, 3 * n - 6 - t)
    raise Inconclusive('no %s-free graph on %d vertices with at least %d edges'
                       % (pattern, n, 3 * n - 6 - t_max))


# statements

def statement(statement_id):
    """Run the decorated check on a fresh Certificate and time it"""
    def decorate(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            cert = Certificate(statement_id, {k: v for k, v in kwargs.items() if k != 'jobs'})
            start = time.perf_counter()
            logger.info('%s: start %s', statement_id, kwargs)
            func(cert, *args, **kwargs)
            cert.runtime = time.perf_counter() - start
            logger.info('%s: %s in %.1f s', statement_id,
                        'pass' if cert.verdict else 'fail', cert.runtime)
            return cert
        return wrapper
    return decorate


def h3_bound_holds(n, e):
    return 24 * e <= 67 * n - 96


def fan_bound_holds(n, e, k):
    return ratio_le(e, n - 2, 24 * k, 7 * k + 6)


@statement('THM_1_1')
def verify_ex_h3(cert, ns=None, jobs=1, deep=False):
    """ex_P(n, H_3) for n = 7..12, and 13, 14 on deep runs"""
    if ns is None:
        ns = [n for n in sorted(EX_H3_VALUES) if deep or n <= 12]
    h3 = Pattern('H', 3)
    for n in ns:
        res = max_edges(n, h3, jobs=jobs, deep=deep)
        expected = EX_H3_VALUES.get(n)
        cert.rows.append({'n': n, 'value': res.value, 'expected': expected,
                          'form': '3n-%d' % (6 + res.t),
                          'checked': res.counts.get('t%d_checked' % res.t)})
        for key, value in res.counts.items():
            cert.counts['n%d_%s' % (n, key)] = value
        if expected is not None and res.value != expected:
            cert.fail('n=%d: found %d, expected %d' % (n, res.value, expected))
        cert.add_witness('n=%d' % n, res.witness, h3, res.value)
        if n >= 13 and not h3_bound_holds(n, res.value):
            cert.fail('n=%d witness exceeds 67n/24 - 4' % n)


@partitioned
def _regular_task(part, parts, n):
    found = {}
    seen = 0
    for rotations in triangulations(n, part=part, parts=parts).iter_rotations():
        seen += 1
        if len({len(r) for r in rotations}) == 1:
            found[canonical_code_of_rotations(rotations)] = rotations
    return seen, found


@statement('LEM_2_2')
def verify_lemma_regular(cert, n_max=12, jobs=1):
    """The regular plane triangulations are K3, K4, the octahedron and the icosahedron"""
    expected = {}
    for name in ('k3', 'k4', 'octahedron', 'icosahedron'):
        G = named(name)
        if G.vertex_count <= n_max:
            expected[canonical_code(G)] = name
    found = {}
    parts = parts_for(jobs)
    for n in range(3, n_max + 1):
        results = run_partitioned(_regular_task, parts, n, jobs=jobs)
        cert.counts['n%d_triangulations' % n] = sum(r[0] for r in results)
        regular = {}
        for _, f in results:
            regular.update(f)
        cert.rows.append({'n': n, 'triangulations': cert.counts['n%d_triangulations' % n],
                          'regular': len(regular),
                          'names': ','.join(expected.get(c, '?') for c in sorted(regular))})
        found.update(regular)
    for code, rotations in sorted(found.items()):
        cert.add_witness(expected.get(code, 'unexpected'), build(rotations))
    if set(found) != set(expected):
        cert.fail('regular triangulations found: %d, expected %d' % (len(found), len(expected)))


def _degree_key(degrees):
    return tuple(sorted(degrees))


def _degree_text(degrees):
    return ','.join('%d^%d' % (d, degrees.count(d)) for d in sorted(set(degrees)))


@partitioned
def _degseq_task(part, parts, n, t, target, deep):
    seen = matches = 0
    example = None
    for rotations in triangulations(n, part=part, parts=parts, deep=deep).iter_rotations():
        seen += 1
        deg = [len(r) for r in rotations]
        if t == 0:
            if _degree_key(deg) == target:
                matches += 1
                example = example or (rotations, ())
            continue
        # one deletion lowers two degrees by one
        if min(deg) < min(target) or max(deg) > max(target) + 1:
            continue
        for x, y in _edges(rotations):
            deg[x] -= 1
            deg[y] -= 1
            if _degree_key(deg) == target:
                matches += 1
                example = example or (rotations, ((x, y),))
            deg[x] += 1
            deg[y] += 1
    return seen, matches, example


@statement('LEM_3_1')
def verify_lemma_degseq(cert, jobs=1, deep=False):
    """No planar graph has one vertex of degree 4 and all others of degree 5 for n = 11, 13"""
    parts = parts_for(jobs)
    cases = [(11, 0, (4,) + (5,) * 10, 0), (12, 0, (5,) * 12, 1)]
    if deep:
        cases.append((13, 1, (4,) + (5,) * 12, 0))
    else:
        cert.notes.append('n=13 (one deletion) skipped: needs a deep run')
    ico = canonical_code(icosahedron())
    for n, t, target, wanted in cases:
        results = run_partitioned(_degseq_task, parts, n, t, target, deep, jobs=jobs)
        seen = sum(r[0] for r in results)
        matches = sum(r[1] for r in results)
        cert.counts['n%d_graphs' % n] = seen
        cert.counts['n%d_matches' % n] = matches
        cert.rows.append({'n': n, 'deletions': t, 'degrees': _degree_text(target),
                          'matches': matches, 'expected': wanted})
        if matches != wanted:
            cert.fail('n=%d: %d graphs with the degree sequence, expected %d' % (n, matches, wanted))
        examples = [r[2] for r in results if r[2] is not None]
        if n == 12 and examples:
            G = build(examples[0][0])
            if canonical_code(G) != ico:
                cert.fail('the 5-regular triangulation on 12 vertices is not the icosahedron')
            cert.add_witness('n=12 control', G, edges=30)


@partitioned
def _fan_free_task(part, parts, n):
    seen = 0
    smallest = {}
    for rotations in triangulations(n, part=part, parts=parts).iter_rotations():
        seen += 1
        adj = {v: frozenset(r) for v, r in enumerate(rotations)}
        for k in range(1, 6):
            if not bad_vertices(adj, 'F', k):
                smallest.setdefault(k, rotations)
                break
    return seen, smallest


@statement('THM_3_2')
def verify_fan_triangulations(cert, n_max=12, jobs=1):
    """F_k-free plane triangulations exist exactly for (6,4), (7..10,5), (12,5)"""
    parts = parts_for(jobs)
    exists = set()
    implied = set()
    for n in range(3, n_max + 1):
        results = run_partitioned(_fan_free_task, parts, n, jobs=jobs)
        cert.counts['n%d_triangulations' % n] = sum(r[0] for r in results)
        smallest = {}
        for _, s in results:
            for k, rot in s.items():
                smallest.setdefault(k, rot)
        for k0, rotations in sorted(smallest.items()):
            for k in range(k0, 6):
                if n >= k + 2:
                    if (n, k) not in exists:
                        exists.add((n, k))
                        cert.add_witness('n=%d F%d' % (n, k), build(rotations),
                                         Pattern('F', k), 3 * n - 6)
                else:
                    implied.add((n, k))
        cert.rows.append({'n': n, 'free_for_k': ','.join(
            str(k) for k in range(1, 6) if (n, k) in exists) or '-'})
    expected = {(n, k) for n, k in FAN_TRIANGULATIONS if n <= n_max}
    cert.counts['exists'] = sorted(exists)
    cert.counts['implied_outside_range'] = sorted(implied)
    if exists != expected:
        cert.fail('existence set %s differs from %s' % (sorted(exists), sorted(expected)))


def verify_bounds(graphs, mode, statement_id=None):
    """
    Check the edge bound of `mode` ('H3' or 'FAN<k>') on every
    pattern-free graph of `graphs`
    """
    mode = str(mode).upper()
    if mode == 'H3':
        pattern = Pattern('H', 3)
        applies = lambda n: n >= 13
        holds = h3_bound_holds
        tight = lambda n, e: 24 * e == 67 * n - 96
    elif mode.startswith('FAN'):
        k = int(mode[3:])
        pattern = Pattern('F', k)
        applies = lambda n: n * (6 - k) >= 12 + (6 - k)
        holds = lambda n, e: fan_bound_holds(n, e, k)
        tight = lambda n, e: (7 * k + 6) * e == 24 * k * (n - 2)
    else:
        raise UnknownStatement('bound mode must be H3 or FAN<k>, got %r' % mode)

    cert = Certificate(statement_id or 'BOUND_' + mode, {'mode': mode})
    start = time.perf_counter()
    seen = checked = equal = 0
    best = None
    for label, G in graphs:
        seen += 1
        n, e = G.vertex_count, G.edge_count
        if not applies(n) or not pattern.is_free(G):
            continue
        checked += 1
        ratio = Fraction(e, n - 2)
        if best is None or ratio > best:
            best = ratio
        if not holds(n, e):
            cert.fail('%s: n=%d e=%d exceeds the bound' % (label, n, e))
            cert.add_witness(label, G)
        elif tight(n, e):
            equal += 1
            cert.rows.append({'graph': label, 'n': n, 'e': e, 'equality': True})
    cert.counts.update({'graphs': seen, 'checked': checked, 'equality': equal,
                        'max_ratio_e_over_n_minus_2': fraction_str(best) if best else None})
    cert.runtime = time.perf_counter() - start
    return cert


def _free_graphs(n, pattern, t_values, deep=False):
    """Pattern-free graphs among triangulation deletions, with labels"""
    for t in t_values:
        yield from SearchTask(n, pattern, t, existence=False).free_graphs(deep)


def _merge(cert, sub, prefix):
    for key, value in sub.counts.items():
        cert.counts['%s_%s' % (prefix, key)] = value
    cert.rows.extend(dict(r, source=prefix) for r in sub.rows)
    cert.witnesses.extend(sub.witnesses)
    cert.notes.extend(sub.notes)
    if not sub.verdict:
        cert.verdict = False


@statement('THM_2_4_BOUND')
def verify_h3_bound(cert, k_max=3, deep=False):
    """24e <= 67n - 96 on the H_3 family and, on deep runs, on all H_3-free graphs with 13 vertices"""
    family = (('G_%d' % k, h3_family(k)) for k in range(k_max + 1))
    _merge(cert, verify_bounds(family, 'H3'), 'family')
    if deep:
        free = _free_graphs(13, Pattern('H', 3), (0, 1, 2), deep=True)
        _merge(cert, verify_bounds(free, 'H3'), 'n13')
    else:
        cert.notes.append('13-vertex sweep skipped: needs a deep run')
    cert.notes.append('equality classes modulo 24 are checked only on constructed members')


@statement('THM_3_4_BOUND')
def verify_fan_bound(cert, t_max=2, n_max=10):
    """(7k+6)e <= 24k(n-2) on the fan family and on enumerated F_k-free graphs"""
    for k in range(2, 6):
        family = (('G_%d,%d' % (t, k), fan_family(t, k)) for t in range(t_max + 1))
        _merge(cert, verify_bounds(family, 'FAN%d' % k), 'family_k%d' % k)
        low = 12 // (6 - k) + 1
        enumerated = itertools.chain.from_iterable(
            _free_graphs(n, Pattern('F', k), (0, 1, 2)) for n in range(max(4, low), n_max + 1))
        _merge(cert, verify_bounds(enumerated, 'FAN%d' % k), 'enum_k%d' % k)
    cert.notes.append('equality classes modulo 7k+6 are checked only on constructed members')


def extremal_characterization_h3(G):
    """
    Connected, H_3-free with 24e = 67n - 96, every block an icosahedron, every vertex in
    exactly one block, every face of size 3 or 4
    """
    if not G.is_connected:
        return False
    if 24 * G.edge_count != 67 * G.vertex_count - 96 or not is_hk_free(G, 3):
        return False
    if any(f.size not in (3, 4) for f in G.faces):
        return False
    blocks = triangular_blocks(G)
    if not blocks:
        return False
    ico = canonical_code(icosahedron())
    if any(canonical_code(b.block_graph) != ico for b in blocks):
        return False
    counts = [0] * G.vertex_count
    for b in blocks:
        for v in b.vertices:
            counts[v] += 1
    return all(c == 1 for c in counts)


@statement('FAMILY_H3')
def verify_h3_family(cert, k_max=3):
    """G_k has 24(k+1) vertices, 67n/24 - 4 edges and the extremal structure"""
    ico = canonical_code(icosahedron())
    h3 = Pattern('H', 3)
    for k in range(k_max + 1):
        G = h3_family(k)
        n, e = G.vertex_count, G.edge_count
        blocks = triangular_blocks(G)
        row = {'k': k, 'n': n, 'e': e,
               'characterized': extremal_characterization_h3(G),
               'blocks': len(blocks),
               'faces': ','.join('%d:%d' % kv for kv in sorted(profile(G).f_counts.items()))}
        cert.rows.append(row)
        if n != 24 * (k + 1) or 24 * e != 67 * n - 96:
            cert.fail('k=%d: n=%d e=%d do not match the formulas' % (k, n, e))
        if not row['characterized']:
            cert.fail('k=%d: extremal characterization fails' % k)
        if len(blocks) != 2 * (k + 1) or any(b.B for b in blocks):
            cert.fail('k=%d: unexpected block structure' % k)
        if any(canonical_code(b.block_graph) != ico for b in blocks):
            cert.fail('k=%d: a block is not an icosahedron' % k)
        cert.add_witness('G_%d' % k, G, h3, e)


def edge_face_pairs(G):
    """Counter of (smaller, larger) sizes of the two faces at each edge"""
    pairs = {}
    for u, v in G.edges():
        a, b = G.face_of(u, v).size, G.face_of(v, u).size
        key = (min(a, b), max(a, b))
        pairs[key] = pairs.get(key, 0) + 1
    return pairs


@statement('FAMILY_FAN')
def verify_fan_family(cert, t_max=2):
    """G_{t,k} meets the order and size formulas, is F_k-free and has J_k blocks"""
    for t in range(t_max + 1):
        base = fan_base(t)
        pairs = edge_face_pairs(base)
        if pairs != {(3, 4): base.edge_count}:
            cert.fail('fan_base(%d): edges not all on one 3-face and one 4-face: %s' % (t, pairs))
        if (base.vertex_count, base.edge_count) != (20 * t + 12, 48 * t + 24):
            cert.fail('fan_base(%d) has n=%d e=%d' % (t, base.vertex_count, base.edge_count))
        if not Pattern('F', 2).is_free(base):
            cert.fail('fan_base(%d) contains F_2' % t)
        for k in range(2, 6):
            G = fan_family(t, k)
            n, e = G.vertex_count, G.edge_count
            code = canonical_code(jk(k))
            blocks = triangular_blocks(G)
            row = {'t': t, 'k': k, 'n': n, 'e': e,
                   'jk_blocks': sum(canonical_code(b.block_graph) == code for b in blocks),
                   'blocks': len(blocks)}
            cert.rows.append(row)
            if n * (6 - k) != (28 * k + 24) * t + 12 * (k + 2):
                cert.fail('t=%d k=%d: order %d' % (t, k, n))
            if e * (6 - k) != 96 * k * t + 48 * k:
                cert.fail('t=%d k=%d: size %d' % (t, k, e))
            if (7 * k + 6) * e != 24 * k * (n - 2):
                cert.fail('t=%d k=%d: not tight' % (t, k))
            if row['jk_blocks'] != row['blocks']:
                cert.fail('t=%d k=%d: a block is not J_%d' % (t, k, k))
            cert.add_witness('G_%d,%d' % (t, k), G, Pattern('F', k), e)


@partitioned
def _claims_task(part, parts, n, t, mode, k):
    """Inequality reports on the pattern-free deletions (mode 'H3' or 'FAN')"""
    pattern = Pattern('H', 3) if mode == 'H3' else Pattern('F', k)
    jk_code = canonical_code(jk(k)) if mode == 'FAN' else None
    graphs = blocks = 0
    tight = 0
    failures = []
    for rotations in triangulations(n, part=part, parts=parts).iter_rotations():
        sets, _ = free_deletion_sets(rotations, pattern, t)
        if not sets:
            continue
        T = build(rotations)
        for dels in sets:
            G = delete_edges(T, dels)
            graphs += 1
            if mode == 'H3':
                report = block_inequalities_h3(G)
            else:
                report = block_inequalities_fan(G, k, jk_code)
                tight += sum(1 for b in report.blocks if b.notes.get('tight'))
            blocks += len(report.blocks)
            if not report.ok:
                failures.append((codec.encode(G), report.all_violations()))
    return graphs, blocks, tight, failures


def _claims(cert, mode, ks, n_max, jobs):
    parts = parts_for(jobs)
    for k in ks:
        for n in range(4, n_max + 1):
            for t in (1, 2):
                results = run_partitioned(_claims_task, parts, n, t, mode, k, jobs=jobs)
                graphs = sum(r[0] for r in results)
                blocks = sum(r[1] for r in results)
                tight = sum(r[2] for r in results)
                failures = [f for r in results for f in r[3]]
                cert.rows.append({'k': k, 'n': n, 't': t, 'graphs': graphs,
                                  'blocks': blocks, 'tight': tight, 'violations': len(failures)})
                for data, messages in failures[:3]:
                    cert.witnesses.append(('n=%d t=%d violation' % (n, t), data))
                    cert.fail('n=%d t=%d: %s' % (n, t, '; '.join(messages[:3])))
    cert.counts['graphs'] = sum(r['graphs'] for r in cert.rows)
    cert.counts['blocks'] = sum(r['blocks'] for r in cert.rows)
    cert.notes.append('triangulations (t=0) have no non-triangular face and are skipped')


@statement('CLAIMS_H3')
def verify_claims_h3(cert, n_max=10, jobs=1):
    """Block inequalities on all H_3-free triangulations minus one or two edges"""
    _claims(cert, 'H3', [3], n_max, jobs)


@statement('CLAIMS_FAN')
def verify_claims_fan(cert, n_max=10, ks=(3, 4, 5), jobs=1):
    """Improvement-block inequalities on all F_k-free triangulations minus one or two edges"""
    _claims(cert, 'FAN', list(ks), n_max, jobs)


@partitioned
def _machinery_task(part, parts, n, t):
    graphs = 0
    failures = []
    for rotations in triangulations(n, part=part, parts=parts).iter_rotations():
        T = build(rotations)
        for dels in itertools.combinations(T.edges(), t):
            G = delete_edges(T, dels)
            graphs += 1
            problems = machinery_violations(G)
            if problems:
                failures.append((codec.encode(G), problems))
    return graphs, failures


@statement('PROOF_MACHINERY')
def verify_machinery(cert, n_max=10, jobs=1):
    """Face, block and improvement identities on every triangulation minus one or two edges"""
    parts = parts_for(jobs)
    for n in range(4, n_max + 1):
        for t in (0, 1, 2):
            results = run_partitioned(_machinery_task, parts, n, t, jobs=jobs)
            graphs = sum(r[0] for r in results)
            failures = [f for r in results for f in r[1]]
            cert.rows.append({'n': n, 't': t, 'graphs': graphs, 'violations': len(failures)})
            for data, messages in failures[:3]:
                cert.witnesses.append(('n=%d t=%d violation' % (n, t), data))
                cert.fail('n=%d t=%d: %s' % (n, t, '; '.join(messages[:3])))
    cert.counts['graphs'] = sum(r['graphs'] for r in cert.rows)


@statement('LEM_DELTA6')
def verify_delta6(cert, n_min=12, n_max=40):
    """Triangulations with maximum degree 6 are H_4-free and F_6-free"""
    h4, f6 = Pattern('H', 4), Pattern('F', 6)
    for n in range(n_min, n_max + 1):
        G = delta6_triangulation(n)
        ok = (G.is_triangulation and G.vertex_count == n and max(G.degrees) <= 6
              and G.edge_count == 3 * n - 6 and h4.is_free(G) and f6.is_free(G))
        if not ok:
            cert.fail('delta6_triangulation(%d) fails' % n)
    cert.counts['orders'] = n_max - n_min + 1


def _has_k4(G):
    """K_4 in G iff some neighbourhood graph contains a triangle"""
    adj = adjacency(G)
    for v, nbrs in adj.items():
        for a in nbrs:
            if any(adj[a] & adj[b] & nbrs for b in adj[a] & nbrs):
                return True
    return False


@statement('INTRO_CLIQUES')
def verify_cliques(cert, n_max=20):
    """2K_1 + C_(n-2) is a K_4-free triangulation, K_(2,n-2) is triangle-free with 2n - 4 edges"""
    for n in range(6, n_max + 1):
        G = bipyramid(n)
        if not G.is_triangulation or _has_k4(G):
            cert.fail('bipyramid(%d) is not a K_4-free triangulation' % n)
    for n in range(4, n_max + 1):
        G = k2n(n)
        if G.edge_count != 2 * n - 4 or profile(G).f3 or not Pattern('H', 1).is_free(G):
            cert.fail('k2n(%d) is not triangle-free with 2n-4 edges' % n)
    cert.counts['orders'] = n_max - 3


@statement('CONTRACTION_CLOSURE')
def verify_contraction_closure(cert, n_min=8, n_max=12, samples=1000, seed=0):
    """Removing a degree-3 vertex of a sampled triangulation gives a generated smaller one"""
    smaller = {canonical_code_of_rotations(r) for r in triangulations(n_min - 1).iter_rotations()}
    for n in range(n_min, n_max + 1):
        graphs = sample_triangulations(n, samples, seed + n)
        checked = 0
        for G in graphs:
            for v, d in enumerate(G.degrees):
                if d != 3:
                    continue
                checked += 1
                H, _ = delete_vertex(G, v)
                if not H.is_triangulation or canonical_code(H) not in smaller:
                    cert.fail('n=%d: removing vertex %d leaves no generated triangulation' % (n, v))
                    cert.witnesses.append(('n=%d vertex %d' % (n, v), codec.encode(G)))
        cert.rows.append({'n': n, 'sampled': len(graphs), 'contractions': checked})
        smaller = {canonical_code_of_rotations(r) for r in triangulations(n).iter_rotations()}
    cert.counts['contractions'] = sum(r['contractions'] for r in cert.rows)


STATEMENTS = {
    'THM_1_1': verify_ex_h3,
    'LEM_2_2': verify_lemma_regular,
    'LEM_3_1': verify_lemma_degseq,
    'THM_3_2': verify_fan_triangulations,
    'THM_2_4_BOUND': verify_h3_bound,
    'THM_3_4_BOUND': verify_fan_bound,
    'CLAIMS_H3': verify_claims_h3,
    'CLAIMS_FAN': verify_claims_fan,
    'FAMILY_H3': verify_h3_family,
    'FAMILY_FAN': verify_fan_family,
    'PROOF_MACHINERY': verify_machinery,
    'LEM_DELTA6': verify_delta6,
    'INTRO_CLIQUES': verify_cliques,
    'CONTRACTION_CLOSURE': verify_contraction_closure,
}

# statements that accept the run configuration
_USES_JOBS = {'THM_1_1', 'LEM_2_2', 'LEM_3_1', 'THM_3_2', 'CLAIMS_H3', 'CLAIMS_FAN', 'PROOF_MACHINERY'}
_USES_DEEP = {'THM_1_1', 'LEM_3_1', 'THM_2_4_BOUND'}
_USES_SEED = {'CONTRACTION_CLOSURE'}


def run_statement(statement_id, settings=None, **params):
    """Run one statement with the jobs / deep settings it understands"""
    settings = settings or Settings()
    try:
        func = STATEMENTS[statement_id.upper()]
    except KeyError:
        raise UnknownStatement(statement_id)
    if statement_id.upper() in _USES_JOBS:
        params.setdefault('jobs', settings.jobs)
    if statement_id.upper() in _USES_DEEP:
        params.setdefault('deep', settings.deep)
    if statement_id.upper() in _USES_SEED:
        params.setdefault('seed', settings.seed)
    return func(**params)


def statement_parameters(statement_id):
    """Keyword parameters a statement accepts"""
    try:
        func = STATEMENTS[statement_id.upper()]
    except KeyError:
        raise UnknownStatement(statement_id)
    return set(inspect.signature(func).parameters) - {'cert'}
