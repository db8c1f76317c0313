import json

import pytest

from superspecial import verifier_cli
from superspecial.quat_core import ParameterError, make_params
from superspecial.verifier_cli import (build_report, main, report_from_json, report_to_json,
                                       run_invariant_suites, sweep_from_json)


def test_params_text(capsys):
    assert main(['params', '--p', '3']) == 0
    assert 'p = 3, q = 19, a = 4' in capsys.readouterr().out


def test_params_json(capsys):
    assert main(['params', '--p', '7', '--json']) == 0
    assert json.loads(capsys.readouterr().out) == {'p': '7', 'q': '11', 'a': '2'}


def test_invalid_input_exit_code(capsys):
    assert main(['params', '--p', '4']) == 2
    assert main(['params', '--p', '3', '--a', '4']) == 2
    assert main(['params', '--p', '3', '--q', '11']) == 2
    assert main(['kernel', '--p', '3', '--q-cap', '11']) == 2
    assert main(['verify']) == 2
    assert main([]) == 2
    assert capsys.readouterr().out == ''


def test_invariant_suites_pass(params):
    checks = run_invariant_suites(params, seed=1, samples=15)
    assert len(checks) == len(dict(checks))
    assert all(ok for _, ok in checks), [name for name, ok in checks if not ok]


def test_verify_text(capsys):
    assert main(['verify', '--p', '3', '--samples', '20']) == 0
    out = capsys.readouterr().out
    assert out.rstrip().endswith('PASS')
    assert 'kernel dimension 2, image dimension 4' in out


def test_verify_json_round_trip(capsys):
    assert main(['verify', '--p', '5', '--samples', '10', '--json']) == 0
    out = capsys.readouterr().out
    report = report_from_json(out)
    assert report == build_report(make_params(5), seed=0, samples=10)
    assert report_to_json(report) == out.rstrip('\n')
    doc = json.loads(out)
    assert doc['p'] == '5'
    assert doc['passed'] is True
    assert doc['audit']['candidates'][1]['member'] is False


def test_verify_is_deterministic(capsys):
    main(['verify', '--p', '7', '--samples', '10', '--json'])
    first = capsys.readouterr().out
    main(['verify', '--p', '7', '--samples', '10', '--json'])
    assert capsys.readouterr().out == first


def test_sub_commands(capsys):
    for command in ('gram', 'c1', 'kernel', 'kummer'):
        assert main([command, '--p', '3', '--json']) == 0
        json.loads(capsys.readouterr().out)
    assert main(['c1', '--p', '3']) == 0
    assert '2+2t' in capsys.readouterr().out


def test_sweep(capsys):
    assert main(['sweep', '--p-min', '3', '--p-max', '14', '--samples', '5', '--json']) == 0
    report = sweep_from_json(capsys.readouterr().out)
    assert report.passed
    assert [row.p for row in report.rows] == [3, 5, 7, 11, 13]
    assert all(row.kernel_dimension == 2 for row in report.rows)


def test_sweep_table(capsys):
    assert main(['sweep', '--p-min', '4', '--p-max', '6', '--samples', '5']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split('\t') == ['p', 'q', 'a', 'ker-dim', 'im-dim', 'audit-ii', 'pass']
    assert lines[1].split('\t')[:3] == ['5', '3', '1']


def test_large_q_override_cli(capsys):
    assert main(['params', '--p', '3', '--q', '1000000123', '--json']) == 0
    assert json.loads(capsys.readouterr().out)['a'] == '157032605'


def test_empty_sweep_is_invalid(capsys):
    assert main(['sweep', '--p-min', '50', '--p-max', '10']) == 2
    assert main(['sweep', '--p-min', '24', '--p-max', '28']) == 2
    assert main(['sweep', '--p-min', '0', '--p-max', '2']) == 2
    assert capsys.readouterr().out == ''


def test_samples_must_be_positive(capsys):
    assert main(['verify', '--p', '3', '--samples', '0']) == 2
    assert main(['verify', '--p', '3', '--samples', '-5']) == 2
    assert main(['sweep', '--p-min', '3', '--p-max', '5', '--samples', '0']) == 2
    assert capsys.readouterr().out == ''
    with pytest.raises(ParameterError):
        run_invariant_suites(make_params(3), samples=0)


def test_failed_check_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(verifier_cli, 'chern_rank_over_fp2', lambda matrix: 3)
    assert main(['verify', '--p', '3', '--samples', '5']) == 1
    out = capsys.readouterr().out
    assert out.rstrip().endswith('FAIL')
    assert 'chern_rank_fp2_4' in out and 'FAILED' in out
    assert main(['sweep', '--p-min', '3', '--p-max', '3', '--samples', '5']) == 1
