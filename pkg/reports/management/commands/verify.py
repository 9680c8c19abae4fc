"""
Comando para executar as suítes de verificação.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from kernel.exceptions import KernelError
from reports.cli import USAGE_ERRORS, add_run_arguments, build_config, usage_error, write_output
from reports.formats import render_report
from reports.models import VerificationRun
from reports.runner import SUITE_CHOICES, run_suite

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Verifica as identidades exatas até a ordem N (código 1 se alguma falhar)'

    def add_arguments(self, parser):
        parser.add_argument('suite', nargs='?', choices=SUITE_CHOICES, default='all')
        add_run_arguments(parser)
        parser.add_argument('--record', action='store_true',
                            help='Guarda o relatório no banco de dados')

    def handle(self, *args, **options):
        suite = options['suite']
        config = build_config(options)
        try:
            report = run_suite(suite, config)
        except USAGE_ERRORS as exc:
            raise usage_error(exc) from exc
        except KernelError as exc:
            raise CommandError(f'Erro na verificação: {exc}', returncode=1) from exc

        suite = report.name
        header = config.header(suite)
        write_output(self, render_report(report, config.format, header), config.out)
        if options['record']:
            run = VerificationRun.record(report, config, suite)
            logger.info('Execução registrada: %s', run.pk)

        summary = report.summary()
        status = self.stdout if config.out else self.stderr
        if not report.passed:
            failure = report.first_failure or {}
            raise CommandError(
                f"{summary['failed']} de {summary['cells']} células falharam; "
                f"primeira: {failure.get('identity')} {failure.get('cell')}",
                returncode=1,
            )
        if report.disagreements:
            raise CommandError(f"{report.disagreements} divergências modp/exato", returncode=1)
        status.write(self.style.SUCCESS(
            f"✓ {suite}: {summary['cells']} células verificadas (N={config.max_order}, {config.mode})"
        ))
