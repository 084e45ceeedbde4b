"""
Command line front end.

Exit codes: 0 pass, 1 a certificate or report failed, 2 usage or input error.
"""
import argparse
import logging
import sys

from . import codec, constructions, log
from .blocks import block_inequalities_fan, block_inequalities_h3
from .config import Settings
from .detectors import Pattern
from .enumeration import GenStream
from .errors import NTooLarge, PlanTuranError
from .verify import STATEMENTS, run_statement, statement_parameters
from .version import ptr_version

logger = logging.getLogger(__name__)


def err(s):
    sys.stderr.write(s)


def _read_graphs(path):
    if path == '-':
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, 'rb') as f:
                data = f.read()
        except IOError:
            err('planturan: fails to open <%s>\n' % path)
            sys.exit(2)
    if data.startswith(codec.HEADER):
        return codec.loads(data)
    return [codec.parse_rotation_text(data.decode('ascii'))]


def _write(args, payload):
    out = getattr(args, 'out', None)
    if isinstance(payload, str):
        payload = payload.encode('ascii')
    if out is None or out == '-':
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    else:
        with open(out, 'wb') as f:
            f.write(payload)


def _format(graphs, fmt):
    if fmt == 'pc':
        return codec.dumps(graphs)
    if fmt == 'b64':
        return ''.join(codec.to_base64(G) + '\n' for G in graphs)
    if fmt == 'dot':
        return ''.join(codec.to_dot(G, 'G%d' % i) for i, G in enumerate(graphs))
    return '\n'.join(codec.format_rotation_text(G) for G in graphs)


def cmd_enumerate(args, settings):
    if args.n > settings.n_cap and not args.unbounded:
        raise NTooLarge('n=%d is above the cap %d, pass --unbounded' % (args.n, settings.n_cap))
    stream = GenStream(args.n, 'near' if args.t else 'triangulation', t=args.t,
                       part=args.part, parts=args.parts, resume=args.resume,
                       progress_every=settings.progress_every, deep=settings.deep,
                       unbounded=args.unbounded,
                       unique=args.unique)
    if args.count:
        print('n=%d t=%d: %d' % (args.n, args.t, stream.count()))
        return 0
    if args.out is None or args.out == '-':
        count = codec.write_planar_code(stream, sys.stdout.buffer)
        sys.stdout.flush()
    else:
        with open(args.out, 'wb') as f:
            count = codec.write_planar_code(stream, f)
        print('n=%d t=%d: %d graphs written to %s' % (args.n, args.t, count, args.out))
    logger.info('enumerate n=%d t=%d: %d graphs, resume token %s',
                args.n, args.t, count, stream.resume_token)
    return 0


def _construct(args):
    family = args.family
    if family is None:
        return constructions.named(args.name)
    if family == 'h3':
        return constructions.h3_family(args.k)
    if family == 'fan':
        return constructions.fan_family(args.t, args.k)
    if family == 'fan-base':
        return constructions.fan_base(args.t)
    if family == 'delta6':
        return constructions.delta6_triangulation(args.n)
    if family == 'bipyramid':
        return constructions.bipyramid(args.n)
    return constructions.k2n(args.n)


def cmd_construct(args, settings):
    if args.family is None and args.name is None:
        err('planturan construct: give --name or --family\n')
        return 2
    if args.family in ('delta6', 'bipyramid', 'k2n') and args.n is None:
        err('planturan construct: --family %s needs --n\n' % args.family)
        return 2
    G = _construct(args)
    _write(args, _format([G], args.format))
    return 0


def cmd_check(args, settings):
    pattern = Pattern.parse(args.pattern)
    status = 0
    for i, G in enumerate(_read_graphs(args.file)):
        result = pattern.is_free(G)
        if result:
            print('graph %d: n=%d e=%d %s-free' % (i, G.vertex_count, G.edge_count, pattern))
        else:
            w = result.witness
            print('graph %d: n=%d e=%d contains %s at %d, limbs %s'
                  % (i, G.vertex_count, G.edge_count, pattern, w.center, list(w.limbs)))
            if args.expect_free:
                status = 1
    return status


def cmd_blocks(args, settings):
    status = 0
    for G in _read_graphs(args.file):
        if args.mode == 'h3':
            report = block_inequalities_h3(G)
        else:
            report = block_inequalities_fan(G, args.k)
        print(report.to_jsonl() if args.jsonl else report.format_text(), end='' if args.jsonl else '\n')
        if not report.ok:
            status = 1
    return status


def cmd_verify(args, settings):
    ids = sorted(STATEMENTS) if args.statement.lower() == 'all' else [args.statement.upper()]
    given = {'ns': None if args.n is None else [args.n], 'n_max': args.n_max}
    status = 0
    certs = []
    for sid in ids:
        accepted = statement_parameters(sid)
        params = {k: v for k, v in given.items() if v is not None and k in accepted}
        cert = run_statement(sid, settings, **params)
        certs.append(cert)
        print(cert.summary())
        if not cert.verdict:
            status = 1
    if args.json:
        payload = certs[0].to_json() if len(certs) == 1 else \
            '[\n' + ',\n'.join(c.to_json() for c in certs) + '\n]'
        with open(args.json, 'w') as f:
            f.write(payload + '\n')
    return status


def cmd_export(args, settings):
    _write(args, _format(_read_graphs(args.file), args.format))
    return 0


FORMATS = ['rot', 'dot', 'pc', 'b64']


def parser():
    p = argparse.ArgumentParser(prog='planturan',
                                description='Planar Turan numbers of H_k and F_k')
    p.add_argument('--version', action='version', version='%(prog)s ' + ptr_version)
    p.add_argument('--jobs', type=int, default=None, help='worker processes, -1 for all cores')
    p.add_argument('--seed', type=int, default=None, help='seed of sampled property suites')
    p.add_argument('--deep', action='store_true', help='allow 13 and 14 vertex scans')
    p.add_argument('--debug-level', dest='debug_level', type=int, default=None,
                   help='log verbosity 0..9 (default 3)')
    p.add_argument('--log', dest='log_filename', default=None,
                   help="log file, or 'stdout' / 'stderr' (default)")
    sub = p.add_subparsers(dest='command', required=True)

    s = sub.add_parser('enumerate', help='write triangulations (minus t edges) as planar_code')
    s.add_argument('--n', type=int, required=True)
    s.add_argument('--t', type=int, default=0, help='deleted edges, 0..2')
    s.add_argument('--part', type=int, default=0)
    s.add_argument('--parts', type=int, default=1)
    s.add_argument('--resume', default=None, help="token 'level:index'")
    s.add_argument('--unique', action='store_true', help='drop isomorphic near-triangulations')
    s.add_argument('--unbounded', action='store_true', help='allow n above the soft cap')
    s.add_argument('--count', action='store_true', help='only print the number of graphs')
    s.add_argument('--out', default=None)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser('construct', help='named graphs and extremal families')
    s.add_argument('--name', default=None, choices=constructions.named_graphs() + ['jk2', 'jk3', 'jk4', 'jk5'])
    s.add_argument('--family', default=None,
                   choices=['h3', 'fan', 'fan-base', 'delta6', 'bipyramid', 'k2n'])
    s.add_argument('--k', type=int, default=0)
    s.add_argument('--t', type=int, default=0)
    s.add_argument('--n', type=int, default=None)
    s.add_argument('--format', choices=FORMATS, default='rot')
    s.add_argument('--out', default=None)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser('check', help='pattern freeness of graphs in a file')
    s.add_argument('file', help="planar_code or rotation text, '-' for stdin")
    s.add_argument('--pattern', default='H3')
    s.add_argument('--expect-free', dest='expect_free', action='store_true',
                   help='exit 1 if a graph contains the pattern')
    s.set_defaults(func=cmd_check)

    s = sub.add_parser('blocks', help='triangular-block inequality report')
    s.add_argument('file')
    s.add_argument('--mode', choices=['h3', 'fan'], default='h3')
    s.add_argument('--k', type=int, default=5)
    s.add_argument('--jsonl', action='store_true', help='one JSON record per block')
    s.set_defaults(func=cmd_blocks)

    s = sub.add_parser('verify', help='run statements and print certificates')
    s.add_argument('--statement', required=True, help='statement id or all: %s' % ', '.join(sorted(STATEMENTS)))
    s.add_argument('--n', type=int, default=None, help='single order for THM_1_1')
    s.add_argument('--n-max', dest='n_max', type=int, default=None)
    s.add_argument('--json', default=None, help='write the cert-v1 JSON here')
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser('export', help='convert a graph file')
    s.add_argument('file')
    s.add_argument('--format', choices=FORMATS, default='dot')
    s.add_argument('--out', default=None)
    s.set_defaults(func=cmd_export)
    return p


def main(argv=None):
    args = parser().parse_args(argv)
    settings = Settings.from_args(args)
    log.setup(settings.debug_level, settings.log_filename)
    try:
        return args.func(args, settings)
    except PlanTuranError as e:
        logger.error('%s: %s', type(e).__name__, e)
        err('planturan: %s\n' % e)
        return 2


if __name__ == '__main__':
    sys.exit(main())
