"""
Opções compartilhadas pelos comandos compute, table, verify e bench.
"""

from __future__ import annotations

from pathlib import Path

from django.core.management.base import CommandError

from deformed.context import LambdaContext
from deformed.exceptions import DeformedError
from integrals.exceptions import IntegralError
from numtheory.exceptions import NumberTheoryError
from series.exceptions import SeriesError

from .exceptions import ReportError
from .runner import OUTPUT_FORMATS, RunConfig
from .verification import MODES

USAGE_ERRORS = (IntegralError, NumberTheoryError, DeformedError, SeriesError, ReportError)


def add_run_arguments(parser, formats=OUTPUT_FORMATS) -> None:
    parser.add_argument('--max', dest='max_order', type=int, help='Ordem máxima N')
    parser.add_argument('--mode', choices=MODES, help='Comparação exata, modular ou ambas')
    parser.add_argument('--seed', type=int, help='Semente da avaliação modular')
    parser.add_argument('--format', dest='output_format', choices=formats, default='json',
                        help='Formato de saída')
    parser.add_argument('--out', help='Arquivo de saída (padrão: stdout)')
    parser.add_argument('--lambda', dest='lambda_spec', metavar='SPEC.json',
                        help='Especialização dos lambdas em JSON')


def usage_error(exc: Exception) -> CommandError:
    return CommandError(str(exc), returncode=2)


def load_lambda(options) -> LambdaContext:
    if not options.get('lambda_spec'):
        return LambdaContext.symbolic()
    try:
        return LambdaContext.from_file(options['lambda_spec'])
    except DeformedError as exc:
        raise usage_error(exc) from exc


def build_config(options) -> RunConfig:
    try:
        return RunConfig.from_settings(
            max_order=options.get('max_order'),
            mode=options.get('mode'),
            seed=options.get('seed'),
            format=options.get('output_format'),
            out=options.get('out'),
            lambda_ctx=load_lambda(options),
        )
    except ReportError as exc:
        raise usage_error(exc) from exc


def write_output(command, text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text + '\n', encoding='utf-8')
        except OSError as exc:
            raise usage_error(exc) from exc
        command.stdout.write(command.style.SUCCESS(f'✓ Saída gravada em {out}'))
    else:
        command.stdout.write(text)

