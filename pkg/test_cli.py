"""Command line front end: output forms and exit codes"""
import json

import pandas as pd
import pytest

from cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_mobius(capsys):
    assert run(capsys, 'mobius', '1|2|3', '1,2,3')[:2] == (EXIT_OK, '2\n')


def test_meet_worked_example(capsys):
    code, out, _ = run(capsys, 'op', 'meet', '1,3,8|2,4|5|6,7', '1|2,3,8|4,5,6,7')
    assert code == EXIT_OK
    assert out.strip() == '1|2|3,8|4|5|6,7'


def test_op_split_and_restrict(capsys):
    assert run(capsys, 'op', 'split', '1|2|3,4', '2')[1].strip() == '1|2 1,2'
    assert run(capsys, 'op', 'split', '1,3|2', '1')[1].strip() == 'none'
    assert run(capsys, 'op', 'restrict', '1,3,6,8|2|4|5,7,9', '1,4')[1].strip() == '1,2,4,6|3,5,7'


def test_enumerate_text_and_json(capsys):
    assert run(capsys, 'enumerate', '2')[1] == '1,2\n1|2\n'
    code, out, _ = run(capsys, 'enumerate', '3', '--json')
    assert code == EXIT_OK
    assert json.loads(out) == ['1,2,3', '1,2|3', '1,3|2', '1|2,3', '1|2|3']


def test_convert_prints_element_json(capsys):
    code, out, _ = run(capsys, 'convert', '--from', 'p', '--to', 'm', '1|2')
    assert code == EXIT_OK
    assert json.loads(out) == {
        'basis': 'm',
        'terms': [{'coef': '1', 'partition': [[1, 2]]}, {'coef': '1', 'partition': [[1], [2]]}]
    }


def test_convert_accepts_element_json(capsys):
    element = json.dumps({'basis': 'x', 'terms': [{'coef': '1', 'partition': '1,2'}]})
    code, out, _ = run(capsys, 'convert', '--to', 'm', '--text', element)
    assert code == EXIT_OK
    assert out.strip() == '-m[1|2]'


def test_element_file_argument(capsys, tmp_path):
    path = tmp_path / 'element.json'
    path.write_text(json.dumps({'basis': 'm', 'terms': [{'coef': '2', 'partition': [[1]]}]}))
    code, out, _ = run(capsys, 'mul', '--text', f'@{path}', '1')
    assert code == EXIT_OK
    assert out.strip() == '2*m[1,2] + 2*m[1|2]'


def test_coproduct_kinds(capsys):
    code, out, _ = run(capsys, 'coproduct', '--basis', 'p', '--kind', 'internal', '1|2')
    assert code == EXIT_OK
    assert json.loads(out)['terms'] == [{'coef': '1', 'left': [[1], [2]], 'right': [[1], [2]]}]
    code, out, _ = run(capsys, 'coproduct', '--basis', 'x', '1')
    assert code == EXIT_OK
    assert json.loads(out)['basis'] == ['x', 'x']


def test_module_commands(capsys):
    assert run(capsys, 'induct', '--algebra', 'join', '--text', '1', '1')[1].strip() == 'W[1,2] + W[1|2]'
    assert run(capsys, 'restrict', '--algebra', 'meet', '--text', '1,2', '1')[1].strip() == '0'
    assert run(capsys, 'tensor', '--algebra', 'meet', '--text', '1,2|3', '1|2,3')[1].strip() == 'V[1,2,3]'
    assert run(capsys, 'character', '--algebra', 'meet', '1|2', '1,2')[1].strip() == '1'
    assert run(capsys, 'frobenius', '--algebra', 'meet', '--text', '1|2')[1].strip() == 'x[1|2]'
    assert run(capsys, 'shape', '1,3,5|2|4')[1].strip() == '(3,1,1)'


def test_idempotent_json(capsys):
    code, out, _ = run(capsys, 'idempotent', '--algebra', 'meet', '1,2')
    assert code == EXIT_OK
    assert json.loads(out) == {
        'algebra': 'meet',
        'n': 2,
        'terms': [{'coef': '1', 'partition': [[1, 2]]}, {'coef': '-1', 'partition': [[1], [2]]}]
    }


def test_witness(capsys):
    code, out, _ = run(capsys, 'witness', '--algebra', 'meet', '--max-n', '2')
    assert code == EXIT_OK
    witness = json.loads(out)
    assert witness['degree'] == 2
    assert witness['algebra'] == 'meet'


def test_domain_errors_exit_3(capsys):
    code, _, err = run(capsys, 'mobius', '1|2', '1,2,3')
    assert code == EXIT_DOMAIN
    assert 'SizeMismatchError: ' in err
    code, _, err = run(capsys, 'mobius', '1,,2', '1')
    assert code == EXIT_DOMAIN
    assert 'PartitionSyntaxError: ' in err
    code, _, err = run(capsys, 'mul', '--basis', 'm', '{"basis": "p", "terms": []}', '1')
    assert code == EXIT_DOMAIN
    assert 'BasisMismatchError: ' in err


def test_usage_errors_exit_2(capsys):
    assert main(['no-such-command']) == EXIT_USAGE
    code, _, err = run(capsys, 'verify', '--suite', 'nope')
    assert code == EXIT_USAGE
    assert 'UnknownSuiteError: ' in err
    code, _, err = run(capsys, 'verify', '--suite', 'realization', '--max-n', '6')
    assert code == EXIT_USAGE
    assert 'BoundTooLargeError: ' in err


def test_verify_report_is_reproducible(capsys):
    code, first, _ = run(capsys, 'verify', '--suite', 'lattice', '--max-n', '3')
    assert code == EXIT_OK
    report = json.loads(first)
    assert report['status'] == 'PASSED'
    assert report['failed'] == 0
    assert report['counterexample'] is None
    assert 'duration_seconds' not in report
    _, second, _ = run(capsys, 'verify', '--suite', 'lattice', '--max-n', '3', '--jobs', '3')
    assert first == second


def test_verify_timing_flag(capsys):
    _, out, _ = run(capsys, 'verify', '--suite', 'mobius', '--max-n', '3', '--timing')
    assert 'duration_seconds' in json.loads(out)


@pytest.mark.parametrize('suffix', ['.json', '.xlsx'])
def test_verify_out_file(capsys, tmp_path, suffix):
    target = tmp_path / f'report{suffix}'
    code, out, _ = run(capsys, 'verify', '--suite', 'mobius', '--max-n', '3', '--out', str(target))
    assert code == EXIT_OK
    assert out == ''
    if suffix == '.json':
        assert json.loads(target.read_text())['suite'] == 'mobius'
    else:
        frame = pd.read_excel(target, engine='openpyxl')
        assert list(frame.columns[:6]) == ['suite', 'max_n', 'property', 'passed', 'failed', 'counterexample']
        assert (frame['failed'] == 0).all()
