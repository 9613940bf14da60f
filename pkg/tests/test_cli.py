import json

import pytest

from mlvlab.config import BUDGET_ENV
from mlvlab.conjlab import dump_datum

from .common import ELLIPTIC_DOC, BaseTest, corrupted_projective_line


class TestZeta(BaseTest):

    def test_count(self, run_cli, variety_path):
        code, out, err = run_cli('zeta', 'count', '--spec', variety_path('p2'), '--p', '2')
        assert code == 0
        assert out == '7\n'

    def test_count_extension(self, run_cli, variety_path):
        code, out, _ = run_cli('zeta', 'count', '--spec', variety_path('elliptic_f5'),
                               '--p', '5', '--k', '2')
        assert (code, out) == (0, '32\n')

    def test_budget_from_environment(self, run_cli, variety_path, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV, '10')
        argv = ('zeta', 'count', '--spec', variety_path('elliptic_f5'), '--p', '5')
        code, out, err = run_cli(*argv)
        assert code == 2
        assert out == ''
        assert 'budget' in err
        code, out, _ = run_cli(*argv, '--budget', '1000')
        assert (code, out) == (0, '8\n')

    def test_bad_budget(self, run_cli, variety_path, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV, 'plenty')
        code, _, err = run_cli('zeta', 'count', '--spec', variety_path('p2'), '--p', '2')
        assert code == 2
        assert err.startswith('mlv: error:')

    def test_not_a_prime(self, run_cli, variety_path):
        code, _, err = run_cli('zeta', 'count', '--spec', variety_path('p2'), '--p', '4')
        assert code == 2
        assert 'is not a prime' in err

    def test_missing_file(self, run_cli):
        code, out, err = run_cli('zeta', 'count', '--spec', '/nonexistent.json', '--p', '2')
        assert code == 2
        assert out == ''
        assert 'No such file' in err

    def test_reconstruct(self, run_cli, variety_path):
        code, out, _ = run_cli(
            'zeta', 'reconstruct', '--spec', variety_path('elliptic_f5'), '--p', '5',
            '--deg-num', '2', '--deg-den', '2', '--counts', '3', '--known-den', '1,-6,5',
            '--format', 'json')
        assert code == 0
        values = dict(json.loads(out)['values'])
        assert values == {'counts': '[8, 32, 104]', 'numerator': '[1, 2, 5]',
                          'denominator': '[1, -6, 5]', 'predicted': '640'}


class TestLfun(BaseTest):

    def test_factor(self, run_cli, write_json):
        path = write_json('module.json', {'p': 3, 'phi': [[1, 0], [0, 2]]})
        code, out, _ = run_cli('lfun', 'factor', '--module', path, '--format', 'csv')
        assert code == 0
        assert 'value,coeffs,"[1, -3, 2]",' in out.splitlines()
        code, out, _ = run_cli('lfun', 'factor', '--module', path, '--twist', '1',
                               '--format', 'csv')
        assert 'value,coeffs,"[1, -1, 2/9]",' in out.splitlines()

    def test_factor_pushdown(self, run_cli, write_json):
        path = write_json('module.json', {'p': 2, 'f': 2, 'phi': [[3]]})
        code, out, _ = run_cli('lfun', 'factor', '--module', path, '--pushdown')
        assert code == 0
        assert 'f: 1' in out.splitlines()
        assert 'coeffs: [1, 0, -3]' in out.splitlines()

    def test_leading_word(self, run_cli, write_json):
        path = write_json('word.json', {'shifts': [[0, 1]]})
        code, out, _ = run_cli('lfun', 'leading', '--word', path, '--at', '0')
        assert (code, out) == (0, 'order: 0\nleading: -1/2\n')

    def test_leading_euler_factors(self, run_cli, write_json):
        path = write_json('factors.json', [{'p': 2, 'coeffs': [1, -1]}])
        code, out, _ = run_cli('lfun', 'leading', '--word', path, '--approx')
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == 'order: -1'
        assert lines[1].startswith('leading: 1/log_2  [~ 1.442695')
        assert lines[1].endswith('approximate, non-normative]')

    def test_epsilon(self, run_cli, write_json):
        path = write_json('module.json', {'p': 3, 'phi': [[2]]})
        code, out, _ = run_cli('lfun', 'epsilon', '--module', path)
        assert code == 0
        assert out.splitlines()[:2] == ['a: -1/2', 'b: 3']

    def test_bad_document(self, run_cli, write_json):
        path = write_json('module.json', {'p': 3, 'phi': [['pi']]})
        code, _, err = run_cli('lfun', 'factor', '--module', path)
        assert code == 2
        assert 'Matrix entries must be rational.' in err


class TestHodge(BaseTest):

    def test_weak(self, run_cli, write_json):
        path = write_json('hodge.json', ELLIPTIC_DOC)
        code, out, _ = run_cli('hodge', 'weak', '--datum', path)
        assert code == 0
        lines = out.splitlines()
        assert lines[:4] == ['Hw0: 1', 'Hw1: 0', 'alpha_rank: 2', 'duality: perfect']
        assert '-1/pi' in lines[4]

    def test_weak_layers(self, run_cli, write_json):
        path = write_json('hodge.json', {'layers': [ELLIPTIC_DOC, ELLIPTIC_DOC]})
        code, out, _ = run_cli('hodge', 'weak', '--datum', path)
        assert code == 0
        assert out.splitlines()[:2] == ['Hw0: 2', 'Hw1: 0']

    def test_arch(self, run_cli, write_json):
        path = write_json('hodge.json', ELLIPTIC_DOC)
        code, out, _ = run_cli('hodge', 'arch', '--datum', path)
        assert code == 0
        assert out.splitlines() == ['GammaC(s+0)^1', 'order: -1', 'leading: 2']


class TestConj(BaseTest):

    def test_check_catalog(self, run_cli):
        code, out, _ = run_cli('conj', 'check', 'catalog:tate_1')
        assert code == 0
        assert 'PASS pole_order tate_1' in out.splitlines()

    def test_check_file(self, run_cli, write_json):
        from mlvlab.catalog import fp_point
        path = write_json('point.json', dump_datum(fp_point(2)))
        code, out, _ = run_cli('conj', 'check', path, '--format', 'json')
        assert code == 0
        statuses = {v['status'] for v in json.loads(out)['verdicts']}
        assert statuses == {'pass'}

    def test_soule(self, run_cli):
        code, out, _ = run_cli('conj', 'soule', 'catalog:spec_z_soule(-3)')
        assert code == 0
        assert out.startswith('PASS')

    def test_fp(self, run_cli):
        code, out, _ = run_cli('conj', 'fp', 'catalog:fp_pn_m(3,2,1)')
        assert code == 0
        assert out.startswith('PASS')
        code, _, err = run_cli('conj', 'fp', 'catalog:tate_0')
        assert code == 2

    def test_indeterminate_does_not_fail(self, run_cli):
        code, out, _ = run_cli('conj', 'check', 'catalog:spec_z_soule(-2)')
        assert code == 0
        assert 'INDETERMINATE' in out

    @pytest.mark.parametrize('argv', [('--help',), ('conj', '--help')])
    def test_help_states_exit_codes(self, run_cli, argv):
        code, out, _ = run_cli(*argv)
        assert code == 0
        assert 'exit status' in out
        assert 'indeterminate' in out

    def test_triangle(self, run_cli, write_json):
        code, out, _ = run_cli('conj', 'triangle', 'catalog:fp_affine_line(2,0)',
                               'catalog:fp_pn_m(2,1,0)', 'catalog:fp_point(2,0)')
        assert code == 0
        path = write_json('corrupted.json', dump_datum(corrupted_projective_line()))
        code, out, _ = run_cli('conj', 'triangle', 'catalog:fp_affine_line(2,0)', path,
                               'catalog:fp_point(2,0)')
        assert code == 1
        assert out.startswith('FAIL')
        assert 'witness' in out

    def test_suite(self, run_cli):
        code, out, _ = run_cli('conj', 'suite', 'catalog:tate_0', 'catalog:fp_point(2)',
                               '--workers', '2', '--format', 'csv')
        assert code == 0
        rows = out.splitlines()
        assert rows[0] == 'kind,name,value,status'
        assert all(row.startswith('verdict,') for row in rows[1:])

    def test_suite_needs_data(self, run_cli):
        code, _, err = run_cli('conj', 'suite')
        assert code == 2

    @pytest.mark.parametrize('name', ['catalog:nothing', 'catalog:fp_pn_m(2,9,0)'])
    def test_unknown_catalog_name(self, run_cli, name):
        code, out, err = run_cli('conj', 'check', name)
        assert code == 2
        assert out == ''

    def test_bad_datum_file(self, run_cli, write_json):
        path = write_json('bad.json', {'schema': 'mlv-datum/1', 'zetaWord': {}})
        code, _, err = run_cli('conj', 'check', path)
        assert code == 2
        assert 'label' in err


class TestParser(BaseTest):

    def test_usage_errors(self, run_cli):
        assert run_cli()[0] == 2
        assert run_cli('zeta')[0] == 2
        assert run_cli('zeta', 'count')[0] == 2
        assert run_cli('lfun', 'leading', '--word', 'x', '--at', 'one')[0] == 2

    def test_version(self, run_cli):
        code, out, _ = run_cli('--version')
        assert code == 0
        assert out.startswith('mlv ')

    def test_declare(self, run_cli, write_json):
        doc = dict(ELLIPTIC_DOC, comparison=[['omega', 'omega'], ['i', '-i']])
        path = write_json('hodge.json', doc)
        code, _, err = run_cli('hodge', 'weak', '--datum', path)
        assert code == 0
        code, _, err = run_cli('hodge', 'weak', '--datum', path, '--declare', 'pi:negated')
        assert code == 2
