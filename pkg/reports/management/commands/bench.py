"""
Comando para comparar o tempo das suítes em modo exato e modular.
"""

import json
import time

from django.core.management.base import BaseCommand, CommandError

from kernel.exceptions import KernelError
from reports.cli import USAGE_ERRORS, add_run_arguments, build_config, usage_error, write_output
from reports.runner import SUITE_ALIASES, SUITES, run_suite


class Command(BaseCommand):
    help = 'Mede cada suíte em modo exato e modp; com --mode both exige vereditos iguais'

    def add_arguments(self, parser):
        parser.add_argument('suites', nargs='*', metavar='suite',
                            help='Suítes a medir (padrão: todas)')
        add_run_arguments(parser, formats=('json', 'csv'))

    def handle(self, *args, **options):
        config = build_config(options)
        names = [SUITE_ALIASES.get(name, name) for name in options['suites']] or list(SUITES)
        unknown = sorted(set(names) - set(SUITES))
        if unknown:
            raise CommandError(f"Suítes desconhecidas: {', '.join(unknown)}", returncode=2)
        rows = []
        mismatches = []
        for name in names:
            verdicts = {}
            row = {'suite': name}
            for mode in ('exact', 'modp'):
                started = time.perf_counter()
                try:
                    report = run_suite(name, config, config.comparator(mode))
                except USAGE_ERRORS as exc:
                    raise usage_error(exc) from exc
                except KernelError as exc:
                    raise CommandError(f'Erro em {name} ({mode}): {exc}', returncode=1) from exc
                row[f'{mode}_ms'] = round((time.perf_counter() - started) * 1000, 1)
                row['cells'] = len(report.cells)
                verdicts[mode] = [(cell.identity, cell.cell, cell.holds) for cell in report.cells]
            if verdicts['exact'] != verdicts['modp']:
                mismatches.append(name)
            rows.append(row)

        write_output(self, self.render(rows, config.format), config.out)
        if config.mode == 'both' and mismatches:
            raise CommandError(f"Vereditos modp diferentes dos exatos em: {', '.join(mismatches)}",
                               returncode=1)

    def render(self, rows, format):
        if format == 'json':
            return json.dumps(rows, indent=2)
        lines = ['suite,cells,exact_ms,modp_ms']
        lines.extend(f"{r['suite']},{r['cells']},{r['exact_ms']},{r['modp_ms']}" for r in rows)
        return '\n'.join(lines)
