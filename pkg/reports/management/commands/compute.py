"""
Comando para calcular um valor exato: G, G deformado, H, S ou Z.
"""

from django.core.management.base import BaseCommand, CommandError

from deformed.systems import g_def_recurrence, h_chain_sum
from integrals.closed_forms import g_closed_form
from integrals.recurrence import g_recurrence
from integrals.spolys import s_direct
from kernel.exceptions import KernelError
from reports.cli import USAGE_ERRORS, add_run_arguments, load_lambda, usage_error, write_output
from reports.formats import render_value
from series.derivatives import z_value

ARITY = {'g': 2, 'g-deformed': 2, 'h': 2, 's': 2, 'z': 1}


class Command(BaseCommand):
    help = 'Calcula G(k,m), G deformado, H(k,m), S(a,k) ou Z_n'

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=sorted(ARITY))
        parser.add_argument('indices', nargs='+', type=int)
        parser.add_argument('--route', choices=['recurrence', 'closed-form'], default='recurrence',
                            help='Rota de cálculo de G')
        add_run_arguments(parser)

    def handle(self, *args, **options):
        kind = options['kind']
        indices = tuple(options['indices'])
        if len(indices) != ARITY[kind]:
            raise CommandError(f'{kind} recebe {ARITY[kind]} índice(s), recebidos {len(indices)}',
                               returncode=2)
        ctx = load_lambda(options)
        try:
            value = self.compute(kind, indices, ctx, options['route'])
        except USAGE_ERRORS as exc:
            raise usage_error(exc) from exc
        except KernelError as exc:
            raise CommandError(f'Erro no cálculo: {exc}', returncode=1) from exc
        write_output(self, render_value(kind, indices, value, options['output_format']), options['out'])

    def compute(self, kind, indices, ctx, route):
        if kind == 'g':
            return g_closed_form(*indices) if route == 'closed-form' else g_recurrence(*indices)
        if kind == 'g-deformed':
            return g_def_recurrence(*indices, ctx)
        if kind == 'h':
            return h_chain_sum(*indices, ctx)
        if kind == 's':
            return s_direct(*indices)
        return z_value(*indices)
