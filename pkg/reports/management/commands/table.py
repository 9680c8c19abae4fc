"""
Comando para emitir a tabela triangular k <= m <= N de G, G deformado ou H.
"""

from django.core.management.base import BaseCommand, CommandError

from deformed.systems import g_def_recurrence, h_chain_sum
from integrals.closed_forms import g_closed_form
from integrals.recurrence import g_recurrence
from kernel.exceptions import KernelError
from reports.cli import USAGE_ERRORS, add_run_arguments, build_config, usage_error, write_output
from reports.formats import render_table
from reports.runner import triangle

ROUTES = {
    'g': ('recurrence', 'closed-form'),
    'g-deformed': ('recurrence',),
    'h': ('chain-sum',),
}


class Command(BaseCommand):
    help = 'Emite a tabela de valores exatos até a ordem N'

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=sorted(ROUTES))
        parser.add_argument('n', nargs='?', type=int, help='Ordem máxima (o mesmo que --max)')
        parser.add_argument('--route', choices=['recurrence', 'closed-form', 'chain-sum'],
                            help='Rota de cálculo')
        add_run_arguments(parser)

    def handle(self, *args, **options):
        kind = options['kind']
        if options.get('n') is not None:
            options['max_order'] = options['n']
        config = build_config(options)
        route = options.get('route') or ROUTES[kind][0]
        if route not in ROUTES[kind]:
            raise usage_error(ValueError(f'Rota {route} não se aplica a {kind}'))
        compute = self.value_function(kind, route, config.lambda_ctx)
        try:
            rows = [((k, m), compute(k, m)) for k, m in triangle(config.max_order)]
        except USAGE_ERRORS as exc:
            raise usage_error(exc) from exc
        except KernelError as exc:
            raise CommandError(f'Erro no cálculo: {exc}', returncode=1) from exc
        header = {
            'kind': kind,
            'route': route,
            'max': config.max_order,
            'lambda': config.lambda_ctx.describe(),
        }
        write_output(self, render_table(kind, rows, config.format, header), config.out)

    def value_function(self, kind, route, ctx):
        if kind == 'g':
            return g_closed_form if route == 'closed-form' else g_recurrence
        if kind == 'g-deformed':
            return lambda k, m: g_def_recurrence(k, m, ctx)
        return lambda k, m: h_chain_sum(k, m, ctx)
