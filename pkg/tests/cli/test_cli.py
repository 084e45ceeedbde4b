#!/usr/bin/env python

import json

import pytest

from planturan import codec
from planturan.cli import main

from tests.common import data_file, reference

COUNTS = {n: c for n, c in reference('counts.ref.enumerate.txt')}


def test_construct_rotation_text(capsys):
    assert main(['construct', '--name', 'octahedron']) == 0
    out = capsys.readouterr().out
    assert out.startswith('# n=6 e=12')
    G = codec.parse_rotation_text(out)
    assert G.is_triangulation


def test_construct_fan_family_dot(capsys):
    assert main(['construct', '--family', 'fan', '--t', '1', '--k', '4', '--format', 'dot']) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1] == '  // n=104 e=288 f=%d' % (2 - 104 + 288)


def test_construct_needs_order(capsys):
    assert main(['construct', '--family', 'delta6']) == 2
    assert '--n' in capsys.readouterr().err
    assert main(['construct']) == 2


def test_enumerate_count(capsys):
    assert main(['enumerate', '--n', '8', '--count']) == 0
    assert capsys.readouterr().out.strip() == 'n=8 t=0: %d' % COUNTS[8]


def test_enumerate_to_file(tmp_path, capsys):
    out = tmp_path / 'n7.pc'
    assert main(['enumerate', '--n', '7', '--out', str(out)]) == 0
    assert 'graphs written' in capsys.readouterr().out
    graphs = codec.loads(out.read_bytes())
    assert len(graphs) == COUNTS[7]
    assert all(G.is_triangulation for G in graphs)


def test_enumerate_cap(capsys):
    assert main(['enumerate', '--n', '15', '--count']) == 2
    assert '--unbounded' in capsys.readouterr().err


def test_check(capsys):
    assert main(['check', data_file('k4.rot'), '--pattern', 'H2']) == 0
    assert 'H2-free' in capsys.readouterr().out
    assert main(['check', data_file('wheel6.rot'), '--pattern', 'H3']) == 0
    assert main(['check', data_file('wheel6.rot'), '--pattern', 'H3', '--expect-free']) == 1
    assert 'contains H3 at 0' in capsys.readouterr().out


def test_check_missing_file(capsys):
    with pytest.raises(SystemExit) as info:
        main(['check', 'no-such-file.rot'])
    assert info.value.code == 2
    assert 'fails to open' in capsys.readouterr().err


def test_blocks(capsys):
    assert main(['blocks', data_file('cube.rot')]) == 0
    assert 'H3 report' in capsys.readouterr().out


def test_export_round_trip(tmp_path):
    out = tmp_path / 'cube.pc'
    assert main(['export', data_file('cube.rot'), '--format', 'pc', '--out', str(out)]) == 0
    (G,) = codec.loads(out.read_bytes())
    assert (G.vertex_count, G.edge_count) == (8, 12)


def test_verify_statement(tmp_path, capsys):
    target = tmp_path / 'cert.json'
    assert main(['verify', '--statement', 'LEM_2_2', '--n-max', '6', '--json', str(target)]) == 0
    assert 'LEM_2_2' in capsys.readouterr().out
    data = json.loads(target.read_text())
    assert data['schema'] == 'cert-v1'
    assert data['parameters'] == {'n_max': 6}


def test_verify_unknown_statement(capsys):
    assert main(['verify', '--statement', 'THM_9_9']) == 2
    assert 'THM_9_9' in capsys.readouterr().err


def test_verify_passes_seed(tmp_path, capsys):
    target = tmp_path / 'closure.json'
    assert main(['--seed', '11', 'verify', '--statement', 'CONTRACTION_CLOSURE',
                 '--n-max', '8', '--json', str(target)]) == 0
    assert json.loads(target.read_text())['parameters'] == {'n_max': 8, 'seed': 11}
