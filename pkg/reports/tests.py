"""
Testes para o app reports.
"""

import csv
import io
import json

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from integrals.terms import base_value, mono
from kernel.rational import ONE
from kernel.serializers import emit_json, parse_json
from reports.exceptions import InvalidConfig
from reports.factories import VerificationRunFactory
from reports.management.commands.compute import Command as ComputeCommand
from reports.models import VerificationRun
from reports.runner import SUITES, RunConfig, run_suite
from reports.verification import Comparator, VerificationReport


def run(*args, **options):
    stdout, stderr = io.StringIO(), io.StringIO()
    call_command(*args, stdout=stdout, stderr=stderr, **options)
    return stdout.getvalue(), stderr.getvalue()


class TestComparator:
    """Testes do comparador."""

    def test_exact(self):
        """Modo exato compara por multiplicação cruzada."""
        compare = Comparator('exact')
        assert compare(base_value(), base_value())
        assert compare.last_mismatch is None

    def test_records_mismatch(self):
        """A falha guarda os dois lados serializados."""
        compare = Comparator('exact')
        assert not compare(base_value(), 1)
        assert compare.last_mismatch == {'left': emit_json(base_value()), 'right': emit_json(ONE)}

    def test_modp(self):
        """Modo modp não dá falso negativo."""
        compare = Comparator('modp', seed=7)
        assert compare(base_value(), base_value())
        assert not compare(base_value(), mono(0, -2))

    def test_both(self):
        """Modo both devolve o veredito exato e conta divergências."""
        compare = Comparator('both', seed=3)
        assert compare(base_value(), base_value())
        assert not compare(base_value(), mono(1, 0))
        assert compare.disagreements == 0
        assert compare.verdict_mode == 'exact'
        assert Comparator('modp').verdict_mode == 'modp'

    def test_invalid_mode(self):
        """Modo desconhecido."""
        with pytest.raises(ValueError):
            Comparator('fuzzy')


class TestVerificationReport:
    """Testes do relatório."""

    def test_cells_and_summary(self):
        """Células, resumo e falha documentada."""
        report = VerificationReport('demo')
        report.run('ok', (2, 1), lambda: True)
        report.run('ok', (1, 1), lambda: True)
        report.run('documented', (1, 1), lambda: False, expected=False)
        assert report.passed
        assert report.summary() == {
            'cells': 3, 'passed': 3, 'failed': 0, 'documented_failures': 1, 'disagreements': 0,
        }
        assert [c.cell for c in report.identities()['ok']] == [(1, 1), (2, 1)]

    def test_first_failure(self):
        """A primeira falha aponta a célula e os dois lados."""
        compare = Comparator('exact')
        report = VerificationReport('demo')
        report.run('one', (1, 1), lambda: compare(base_value(), base_value()), compare)
        report.run('two', (1, 2), lambda: compare(base_value(), 1), compare)
        report.run('three', (1, 3), lambda: compare(2, 1), compare)
        assert not report.passed
        assert report.first_failure['identity'] == 'two'
        assert report.first_failure['cell'] == [1, 2]
        assert report.first_failure['left'] == emit_json(base_value())

    def test_json_without_timings(self, settings):
        """Sem tempos o JSON é determinístico."""
        settings.ARCMOT_REPORT_TIMINGS = False
        report = VerificationReport('demo')
        report.run('ok', (1, 1), lambda: True)
        data = json.loads(report.to_json())
        assert data['identities'] == {'ok': [{'cell': [1, 1], 'pass': True, 'mode': 'exact'}]}

    def test_both_mode_cells_record_exact(self, settings):
        """No modo both cada célula registra o modo que decidiu o veredito."""
        settings.ARCMOT_REPORT_TIMINGS = False
        report = VerificationReport('demo')
        compare = Comparator('both', seed=4)
        report.run('ok', (1, 1), lambda: compare(base_value(), base_value()), compare)
        data = report.to_dict()
        assert data['identities']['ok'][0]['mode'] == 'exact'
        assert data['timings'] is False

    def test_json_with_timings(self, settings):
        """Com ARCMOT_REPORT_TIMINGS cada célula traz millis."""
        settings.ARCMOT_REPORT_TIMINGS = True
        report = VerificationReport('demo')
        report.run('ok', (1, 1), lambda: True)
        assert 'millis' in report.to_dict()['identities']['ok'][0]
        assert report.to_dict()['timings'] is True


class TestRunConfig:
    """Testes da configuração de execução."""

    def test_from_settings(self, settings):
        """Padrões vêm de settings.ARCMOT_*."""
        settings.ARCMOT_MAX_ORDER = 3
        settings.ARCMOT_MODE = 'modp'
        config = RunConfig.from_settings(seed=None)
        assert config.max_order == 3
        assert config.mode == 'modp'
        assert RunConfig.from_settings(max_order=5).max_order == 5

    @pytest.mark.parametrize('options', [
        {'max_order': 0},
        {'mode': 'fuzzy'},
        {'format': 'xml'},
    ])
    def test_invalid(self, options):
        """Valores inválidos levantam InvalidConfig."""
        with pytest.raises(InvalidConfig):
            RunConfig(**options)


class TestSuites:
    """Testes das suítes de verificação."""

    @pytest.mark.parametrize('suite', sorted(SUITES))
    def test_each_suite_small(self, suite):
        """Cada suíte passa em N = 3."""
        report = run_suite(suite, RunConfig(max_order=3))
        assert report.passed, report.first_failure

    def test_routes_reduce_to_gcd(self):
        """A suíte routes tem uma célula de redução ao mdc por (k, m)."""
        report = run_suite('routes', RunConfig(max_order=4))
        cells = report.identities()['reduce-to-gcd']
        assert [c.cell for c in cells] == [(k, m) for k in range(1, 5) for m in range(k, 5)]
        assert all(c.passed for c in cells)

    def test_theorem4_alias(self):
        """theorem4 executa a suíte derivatives."""
        report = run_suite('theorem4', RunConfig(max_order=3))
        assert report.name == 'derivatives'
        assert report.passed
        assert 'lambda-derivative' in report.identities()

    def test_all_base_case(self):
        """all com N = 1 passa trivialmente."""
        report = run_suite('all', RunConfig(max_order=1))
        assert report.passed
        assert 'routes' in report.identities()

    def test_documented_discrepancies(self):
        """As falhas esperadas aparecem como documentadas."""
        report = run_suite('symmetry', RunConfig(max_order=2))
        doubled = report.identities()['doubled-exponent-symmetry']
        assert all(not cell.holds and cell.passed for cell in doubled)
        assert report.notes

    def test_literal_prefactor_documented(self):
        """A forma literal do prefator falha e é documentada."""
        report = run_suite('derivatives', RunConfig(max_order=4))
        literal = report.identities()['lambda-higher-derivative-literal']
        assert len(literal) == 1 and not literal[0].holds and literal[0].passed

    def test_modp_agrees(self):
        """No modo both os vereditos coincidem em três sementes."""
        for seed in (1, 2, 3):
            config = RunConfig(max_order=3, mode='both', seed=seed)
            report = run_suite('routes', config)
            assert report.passed and report.disagreements == 0

    def test_unknown_suite(self):
        """Suíte desconhecida."""
        with pytest.raises(InvalidConfig):
            run_suite('nope', RunConfig(max_order=1))


@pytest.mark.integration
class TestComputeCommand:
    """Testes do comando compute."""

    def test_g_json(self):
        """compute g 1 1 emite G(1,1) em JSON."""
        out, _ = run('compute', 'g', '1', '1')
        assert out.strip() == emit_json(base_value())

    def test_closed_form_route(self):
        """A rota da forma fechada dá o mesmo valor."""
        out, _ = run('compute', 'g', '2', '3', '--route', 'closed-form')
        recurrence, _ = run('compute', 'g', '2', '3')
        assert parse_json(out.strip()) == parse_json(recurrence.strip())

    def test_h_latex(self):
        """compute h 2 2 em LaTeX usa lambda_2."""
        out, _ = run('compute', 'h', '2', '2', '--format', 'latex')
        assert r'\lambda_{2}' in out

    def test_h_with_lambda_file(self, tmp_path):
        """Com lambda_2 = L o valor de H(2,2) é 1."""
        spec = tmp_path / 'lam.json'
        spec.write_text(json.dumps({'lam': {'2': 'L'}}), encoding='utf-8')
        out, _ = run('compute', 'h', '2', '2', '--lambda', str(spec))
        assert parse_json(out.strip()) == 1

    def test_csv(self):
        """Saída CSV com cabeçalho."""
        out, _ = run('compute', 'z', '1', '--format', 'csv')
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ['kind', 'indices', 'value']
        assert rows[1][:2] == ['z', '1']

    def test_not_a_divisor(self):
        """compute s 3 2 sai com código 2."""
        with pytest.raises(CommandError) as exc:
            run('compute', 's', '3', '2')
        assert exc.value.returncode == 2
        assert 'a deve dividir k' in str(exc.value)

    def test_wrong_arity(self):
        """Número errado de índices."""
        with pytest.raises(CommandError) as exc:
            run('compute', 'g', '1')
        assert exc.value.returncode == 2

    def test_computation_error_exit_code(self, monkeypatch):
        """Divisor fora da forma fatorada é falha de cálculo: código 1."""

        def non_binomial(self, kind, indices, ctx, route):
            return ONE / 2

        monkeypatch.setattr(ComputeCommand, 'compute', non_binomial)
        with pytest.raises(CommandError) as exc:
            run('compute', 'z', '2')
        assert exc.value.returncode == 1

    def test_invalid_lambda_file(self, tmp_path):
        """Arquivo de lambdas malformado sai com código 2."""
        spec = tmp_path / 'bad.json'
        spec.write_text('{"lam": {"1": "L"}}', encoding='utf-8')
        with pytest.raises(CommandError) as exc:
            run('compute', 'h', '2', '2', '--lambda', str(spec))
        assert exc.value.returncode == 2


@pytest.mark.integration
class TestTableCommand:
    """Testes do comando table."""

    def test_csv_triangle(self):
        """table g 2 csv: três entradas distintas."""
        out, _ = run('table', 'g', '2', '--format', 'csv')
        lines = out.strip().splitlines()
        assert lines[0].startswith('# kind=g route=recurrence')
        rows = list(csv.reader(lines[1:]))
        assert rows[0] == ['k', 'm', 'value']
        assert [row[:2] for row in rows[1:]] == [['1', '1'], ['1', '2'], ['2', '2']]

    def test_json_single(self):
        """table g 1 json: uma entrada."""
        out, _ = run('table', 'g', '1')
        data = json.loads(out)
        assert data['route'] == 'recurrence'
        assert len(data['entries']) == 1

    def test_h_latex(self):
        """table h 3 latex: fora do mdc > 1 H vale 1."""
        out, _ = run('table', 'h', '3', '--format', 'latex')
        assert r'H_{1,2} &= 1 \\' in out
        assert r'\begin{align*}' in out

    def test_route_mismatch(self):
        """Rota que não se aplica ao tipo."""
        with pytest.raises(CommandError) as exc:
            run('table', 'h', '2', '--route', 'closed-form')
        assert exc.value.returncode == 2


@pytest.mark.integration
class TestVerifyCommand:
    """Testes do comando verify."""

    def test_routes(self):
        """verify routes --max 3 passa e emite JSON."""
        out, err = run('verify', 'routes', '--max', '3')
        data = json.loads(out)
        assert data['passed'] is True
        assert data['config']['max'] == 3
        assert 'routes' in err

    def test_deterministic(self):
        """Duas execuções com a mesma configuração são idênticas."""
        first, _ = run('verify', 'symmetry', '--max', '2', '--mode', 'both', '--seed', '5')
        second, _ = run('verify', 'symmetry', '--max', '2', '--mode', 'both', '--seed', '5')
        assert first == second

    def test_out_file(self, tmp_path):
        """--out grava o relatório no arquivo."""
        path = tmp_path / 'report.json'
        out, _ = run('verify', 'measure', '--max', '2', '--out', str(path))
        assert json.loads(path.read_text(encoding='utf-8'))['suite'] == 'measure'
        assert 'Saída gravada' in out

    def test_failure_exit_code(self, monkeypatch):
        """Uma célula falha dá código 1 e aponta a célula."""

        def failing(config, compare):
            report = VerificationReport('routes')
            report.run('routes', (1, 1), lambda: compare(base_value(), 1), compare)
            return report

        monkeypatch.setitem(SUITES, 'routes', failing)
        with pytest.raises(CommandError) as exc:
            run('verify', 'routes', '--max', '1')
        assert exc.value.returncode == 1
        assert 'routes' in str(exc.value)

    def test_theorem4_suite_name(self):
        """verify theorem4 é aceito e roda as derivadas em lambda."""
        out, _ = run('verify', 'theorem4', '--max', '2')
        data = json.loads(out)
        assert data['suite'] == 'derivatives'
        assert data['passed'] is True

    @pytest.mark.django_db
    def test_record(self):
        """--record guarda a execução."""
        run('verify', 'routes', '--max', '2', '--record')
        stored = VerificationRun.objects.get()
        assert stored.passed and stored.suite == 'routes'
        assert stored.report['summary']['failed'] == 0
        assert stored.cells == stored.report['summary']['cells']


@pytest.mark.integration
class TestBenchCommand:
    """Testes do comando bench."""

    def test_bench_base_case(self):
        """bench --max 1 emite uma linha por suíte."""
        out, _ = run('bench', '--max', '1')
        rows = json.loads(out)
        assert [row['suite'] for row in rows] == list(SUITES)
        assert all({'exact_ms', 'modp_ms', 'cells'} <= set(row) for row in rows)

    def test_bench_both_csv(self):
        """Com --mode both os vereditos coincidem."""
        out, _ = run('bench', 'routes', 'measure', '--max', '2', '--mode', 'both', '--format', 'csv')
        assert out.splitlines()[0] == 'suite,cells,exact_ms,modp_ms'
        assert len(out.strip().splitlines()) == 3

    def test_bench_alias(self):
        """bench aceita theorem4."""
        out, _ = run('bench', 'theorem4', '--max', '2')
        assert [row['suite'] for row in json.loads(out)] == ['derivatives']

    def test_unknown_suite(self):
        """Suíte desconhecida sai com código 2."""
        with pytest.raises(CommandError) as exc:
            run('bench', 'nope')
        assert exc.value.returncode == 2


@pytest.mark.django_db
class TestVerificationRunModel:
    """Testes do modelo VerificationRun."""

    def test_factory(self):
        """A factory cria uma execução consistente."""
        stored = VerificationRunFactory()
        assert stored.cells == 1
        assert str(stored) == 'routes N=2 exact (ok)'

    def test_record(self):
        """record guarda resumo e relatório."""
        config = RunConfig(max_order=2)
        report = run_suite('measure', config)
        stored = VerificationRun.record(report, config, 'measure')
        assert stored.report['config']['suite'] == 'measure'
        assert VerificationRun.objects.count() == 1
