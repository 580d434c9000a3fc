import json

import pytest

from humbertkit.cli.__main__ import main
from humbertkit.cli.config import RunConfig, load_config
from humbertkit.verifier.__main__ import run


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_predict_table(capsys):
    code, out, _ = run_cli(capsys, 'predict', '--n', '4')
    assert code == 0
    assert 'genus: 5' in out and 'kernel order: 32' in out


def test_predict_structured(capsys):
    code, out, _ = run_cli(capsys, 'predict', '--n', '7', '--format', 'structured')
    doc = json.loads(out)
    assert code == 0
    assert doc['counts_by_dim'] == {'1': '70', '2': '28', '3': '1'}
    assert doc['genus'] == '129'


def test_predict_rejects_small_type(capsys):
    code, _, err = run_cli(capsys, 'predict', '--n', '2')
    assert code == 2 and '--n' in err


def test_verify_seeded_quartic(capsys):
    code, out, _ = run_cli(capsys, 'verify', '--n', '4', '--p', '7', '--kmax', '2', '--seed', '42')
    assert code == 0
    assert out.strip().endswith('verdict: pass')


@pytest.mark.slow
def test_verify_seeded_quartic_kmax3(capsys):
    code, _, _ = run_cli(capsys, 'verify', '--n', '4', '--p', '7', '--kmax', '3', '--seed', '42')
    assert code == 0


def test_verify_several_primes_and_trials(capsys):
    code, out, _ = run_cli(capsys, 'verify', '--n', '4', '--p', '5', '7', '--kmax', '1', '--trials', '2',
                           '--format', 'structured', '--deterministic')
    doc = json.loads(out)
    assert code == 0 and doc['verdict'] == 'pass'
    assert len(doc['trials']) == 4


def test_verify_invalid_curve_file(capsys, singular_file):
    code, _, err = run_cli(capsys, 'verify', '--curve', singular_file)
    assert code == 2
    assert 'vanishing minor on columns [1, 2]' in err


def test_verify_curve_file_prime_mismatch(capsys, curve_file):
    code, _, err = run_cli(capsys, 'verify', '--curve', curve_file, '--p', '7')
    assert code == 2 and 'does not match' in err


def test_verify_curve_file(capsys, curve_file):
    code, out, _ = run_cli(capsys, 'verify', '--curve', curve_file, '--kmax', '2')
    assert code == 0 and 'pass' in out


def test_deterministic_output_is_byte_identical(tmp_path, capsys, curve_file):
    paths = [str(tmp_path / f'out{i}.json') for i in range(2)]
    for path in paths:
        code, _, _ = run_cli(capsys, 'verify', '--curve', curve_file, '--kmax', '2', '--format', 'structured',
                             '--deterministic', '--output', path)
        assert code == 0
    first, second = (open(p, encoding='utf-8').read() for p in paths)
    assert first == second
    assert 'timestamp' not in first


def test_count_conic(capsys, curve_file):
    code, out, _ = run_cli(capsys, 'count', '--curve', curve_file, '--T', '3', '--k', '1', '--format', 'structured')
    doc = json.loads(out)
    assert code == 0
    assert doc['N'] == 6 and doc['a'] == 0 and doc['type'] == 2


def test_count_with_cache_stats(tmp_path, capsys, curve_file):
    cache = str(tmp_path / 'cache.jsonl')
    args = ['count', '--curve', curve_file, '--k', '2', '--cache', cache, '--stats', '--format', 'structured']
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert json.loads(first)['cache']['misses'] == 1
    doc = json.loads(second)
    assert doc['method'] == 'cache' and doc['cache']['hits'] == 1
    assert doc['N'] == json.loads(first)['N']


def test_count_budget_exceeded(capsys, curve_file):
    code, _, err = run_cli(capsys, 'count', '--curve', curve_file, '--k', '4', '--method', 'naive')
    assert code == 2 and 'budget' in err


def test_unknown_method(capsys, curve_file):
    code, _, err = run_cli(capsys, 'count', '--curve', curve_file, '--method', 'no_such_method')
    assert code == 2 and 'no_such_method' in err


def test_quotient_writes_canonical_file(tmp_path, capsys, curve_file):
    out_path = tmp_path / 'quot.json'
    code, _, _ = run_cli(capsys, 'quotient', '--curve', curve_file, '--T', '0', '--output', str(out_path))
    assert code == 0
    assert json.loads(out_path.read_text()) == {'n': 2, 'p': 5, 'rows': [[1, 2, 3]]}


def test_quotient_type_one(capsys, curve_file):
    code, out, _ = run_cli(capsys, 'quotient', '--curve', curve_file, '--T', '0', '1')
    assert code == 0 and json.loads(out)['rows'] == []


def test_identities(capsys):
    code, out, _ = run_cli(capsys, 'identities', '--max-n', '30')
    assert code == 0 and out.strip().endswith('verdict: pass')


def test_run_config_from_dict():
    config = RunConfig.from_dict({'command': 'verify', 'n': 4, 'p': 7, 'unused': True, 'curve': None})
    assert config.p == [7] and config.curve is None and config.kmax == 3
    config.validate()
    with pytest.raises(ValueError):
        RunConfig.from_dict({'command': 'verify', 'n': 4, 'p': [9]}).validate()


def test_run_file(tmp_path):
    path = tmp_path / 'run.json'
    path.write_text(json.dumps({'n': 4, 'p': [5], 'kmax': 1, 'seed': 2}))
    assert load_config(str(path))['n'] == 4
    assert run(str(path)) == 0
    assert run(str(tmp_path / 'missing.json')) == 2
    with pytest.raises(RuntimeError):
        load_config(str(tmp_path / 'missing.json'))


def test_verify_quartic_over_f11_up_to_k3(capsys):
    code, out, err = run_cli(capsys, 'verify', '--n', '4', '--p', '11', '--kmax', '3', '--seed', '0')
    assert code == 0, err
    assert out.strip().endswith('verdict: pass')


@pytest.mark.parametrize('text', [
    json.dumps({'n': 4, 'p': '5', 'kmax': 1}),
    json.dumps({'n': '4', 'p': [5], 'kmax': 1}),
    json.dumps({'n': 4, 'p': [5], 'kmax': 1, 'verbose': 'yes'}),
    json.dumps([4, 5]),
    '{"n": 4, "p": [5],',
])
def test_malformed_run_file_exits_with_2(tmp_path, capsys, text):
    path = tmp_path / 'run.json'
    path.write_text(text)
    assert run(str(path)) == 2
    assert 'error:' in capsys.readouterr().err


def test_load_config_rejects_invalid_json(tmp_path):
    path = tmp_path / 'run.json'
    path.write_text('{"n": 4')
    with pytest.raises(RuntimeError, match='not valid JSON'):
        load_config(str(path))
