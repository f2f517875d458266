import json

import pytest

from run import main



def test_verify_subcommand(capsys):
    assert main(['verify', '--ell-min', '11', '--ell-max', '13']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [json.loads(line)['ell'] for line in lines] == ['11', '13']


def test_verify_rejects_ell_7(capsys):
    with pytest.raises(SystemExit) as info:
        main(['verify', '--ell-min', '7', '--ell-max', '13'])
    assert info.value.code == 2
    assert 'ell_min must exceed 7' in capsys.readouterr().err


def test_fixtures_subcommand():
    assert main(['fixtures']) == 0


def test_count_subcommand(capsys):
    assert main(['count', '--ell', '17', '--p', '5']) == 0
    assert json.loads(capsys.readouterr().out) == {'ell': '17', 'p': '5', 'points': '8', 'trace': '-2'}


def test_weil_table_subcommand(capsys):
    assert main(['weil-table', '--p', '3', '--max-degree', '1', '--format', 'markdown']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == '| p | degree | bound | witness | witness_poly | product |'
    assert lines[2] == '| 3 | 1 | 7 | {1, -3} | x - 3 | -7 |'


def test_weil_table_degree_above_cap(capsys):
    with pytest.raises(SystemExit) as info:
        main(['weil-table', '--p', '3', '--max-degree', '5'])
    assert info.value.code == 2


def test_exceptions_subcommand(capsys):
    assert main(['exceptions', '--ell-min', '17', '--ell-max', '17']) == 0
    row = json.loads(capsys.readouterr().out)
    assert row['exceptions'] == ['-1', '1']


def test_missing_config_file(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(['--config', str(tmp_path / 'absent.yaml'), 'fixtures'])
    assert info.value.code == 2
