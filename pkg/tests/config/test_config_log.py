#!/usr/bin/env python

import argparse
import logging
from fractions import Fraction

from planturan import log, tools
from planturan.config import Settings


def test_defaults():
    s = Settings()
    assert (s.jobs, s.deep, s.debug_level, s.n_cap) == (1, False, 3, 14)


def test_from_env(monkeypatch):
    monkeypatch.setenv('PLANTURAN_JOBS', '3')
    monkeypatch.setenv('PLANTURAN_DEEP', 'yes')
    s = Settings.from_env()
    assert s.jobs == 3 and s.deep
    monkeypatch.setenv('PLANTURAN_DEEP', '0')
    assert not Settings.from_env().deep


def test_flags_override_environment(monkeypatch):
    monkeypatch.setenv('PLANTURAN_JOBS', '3')
    args = argparse.Namespace(jobs=2, seed=None, deep=False, debug_level=5, log_filename=None)
    s = Settings.from_args(args)
    assert s.jobs == 2
    assert s.debug_level == 5
    assert s.log_filename == 'stderr'
    args = argparse.Namespace(jobs=None, seed=7, deep=True, debug_level=None, log_filename=None)
    s = Settings.from_args(args)
    assert (s.jobs, s.seed, s.deep) == (3, 7, True)


def test_levels():
    assert log.level_from_debug(0) == logging.CRITICAL
    assert log.level_from_debug(2) == logging.WARNING
    assert log.level_from_debug(3) == logging.INFO
    assert log.level_from_debug(9) == logging.DEBUG


def test_setup_writes_txt(tmp_path):
    base = str(tmp_path / 'run')
    logger = log.setup(4, base)
    logging.getLogger('planturan.test').debug('hello')
    log.setup(3, 'stderr')
    assert logger.name == 'planturan'
    assert 'hello' in (tmp_path / 'run.txt').read_text()


def test_exact_arithmetic():
    assert tools.slack(Fraction(1, 3), 1) == Fraction(2, 3)
    assert tools.ratio_le(63, 22, 3, 1)
    assert not tools.ratio_le(30, 10, 120, 41)
    assert tools.fraction_str(Fraction(63, 22)) == '63/22'
    assert tools.fraction_str(Fraction(4, 2)) == '2'
