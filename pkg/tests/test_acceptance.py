"""Release gate: one test per acceptance criterion, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines and measured values.  The same battery is reachable from the command
line via ``stablecut bench --suite acceptance``.
"""

import pytest

from stablecut import acceptance


def _check(criterion):
    result = criterion(acceptance.DEFAULT_SEED)
    print(result.line())
    assert result.passed, result.line()


def test_criterion_01_oracle_cross_validation():
    _check(acceptance.criterion_1)


def test_criterion_02_dense_solver():
    _check(acceptance.criterion_2)


def test_criterion_03_metric_reduction():
    _check(acceptance.criterion_3)


def test_criterion_04_ball_guarantee():
    _check(acceptance.criterion_4)


def test_criterion_05_cut_edge_lower_bound():
    _check(acceptance.criterion_5)


def test_criterion_06_merging_solvers():
    _check(acceptance.criterion_6)


def test_criterion_07_spanning_tree():
    _check(acceptance.criterion_7)


def test_criterion_08_spectral_certificate():
    _check(acceptance.criterion_8)


def test_criterion_09_relaxation_battery():
    _check(acceptance.criterion_9)


def test_criterion_10_locally_stable_counts():
    _check(acceptance.criterion_10)
