"""
Suítes de verificação e a configuração de uma execução.

Cada suíte percorre o triângulo k <= m <= N (a simetria G(k, m) = G(m, k)
cobre o resto) e devolve um VerificationReport com as células em ordem
canônica.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd

from django.conf import settings

from deformed.checks import (
    degeneration_check,
    h_consistency_check,
    lambda_one_check,
    lambda_support_check,
    routes_def_check,
    symmetry_def_check,
    t1_check,
)
from deformed.context import LambdaContext
from deformed.systems import g_def_closed_form, g_def_recurrence
from integrals.checks import (
    diagonal_rowsum_check,
    doubled_exponent_symmetry_check,
    gcd_one_check,
    normalization_check,
    reduce_to_gcd_check,
    routes_check,
    s_lemma_check,
    symmetry_check,
    tail_sum_check,
)
from numtheory.utils import divisors
from series.derivatives import (
    check_chain_rule,
    check_lambda_derivative,
    check_lambda_higher_derivative,
    check_z_ode,
    check_z_pde_coefficient,
)
from series.window import check_f_symmetry, check_functional_eq

from .exceptions import InvalidConfig
from .verification import MODES, Comparator, VerificationReport

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "latex", "csv")

# (k, m, índices, ordens) das derivadas mistas verificadas
HIGHER_DERIVATIVE_CASES = (
    (4, 4, (2, 4), (1, 1)),
    (4, 8, (2, 4), (1, 1)),
    (8, 8, (2, 4), (1, 1)),
    (4, 4, (2,), (2,)),
    (6, 6, (2, 3), (1, 1)),
)


@dataclass
class RunConfig:
    max_order: int = 10
    mode: str = "exact"
    seed: int = 20240601
    lambda_ctx: LambdaContext = field(default_factory=LambdaContext.symbolic)
    format: str = "json"
    out: str | None = None
    s_lemma_max: int = 0

    def __post_init__(self):
        if isinstance(self.max_order, bool) or not isinstance(self.max_order, int) or self.max_order < 1:
            raise InvalidConfig(f"--max deve ser inteiro >= 1, recebido {self.max_order!r}")
        if self.mode not in MODES:
            raise InvalidConfig(f"Modo inválido: {self.mode!r}")
        if self.format not in OUTPUT_FORMATS:
            raise InvalidConfig(f"Formato inválido: {self.format!r}")

    @classmethod
    def from_settings(cls, **overrides) -> "RunConfig":
        """Padrões de settings.ARCMOT_*; valores None em overrides são ignorados."""
        values = {
            "max_order": settings.ARCMOT_MAX_ORDER,
            "mode": settings.ARCMOT_MODE,
            "seed": settings.ARCMOT_SEED,
            "s_lemma_max": settings.ARCMOT_S_LEMMA_MAX,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def comparator(self, mode: str | None = None) -> Comparator:
        return Comparator(mode or self.mode, seed=self.seed)

    def header(self, suite: str) -> dict:
        return {
            "suite": suite,
            "max": self.max_order,
            "mode": self.mode,
            "seed": self.seed,
            "lambda": self.lambda_ctx.describe(),
        }


def triangle(n: int):
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            yield k, m


def routes_suite(config: RunConfig, compare) -> VerificationReport:
    report = VerificationReport("routes")
    for k, m in triangle(config.max_order):
        report.run("routes", (k, m), lambda: routes_check(k, m, compare), compare)
        report.run("reduce-to-gcd", (k, m), lambda: reduce_to_gcd_check(k, m, compare), compare)
        if gcd(k, m) == 1:
            report.run("gcd-one", (k, m), lambda: gcd_one_check(k, m, compare), compare)
    return report


def symmetry_suite(config: RunConfig, compare) -> VerificationReport:
    report = VerificationReport("symmetry")
    for k, m in triangle(config.max_order):
        report.run("symmetry", (k, m), lambda: symmetry_check(k, m, compare), compare)
        report.run("doubled-exponent-symmetry", (k, m),
                   lambda: doubled_exponent_symmetry_check(k, m, compare), compare, expected=False)
    report.extend(check_f_symmetry(config.max_order, compare))
    report.notes.append("doubled-exponent-symmetry: L^(2(k+m)) falha já em (1,1); vale L^(2k+2m-2)")
    return report


def s_lemma_suite(config: RunConfig, compare) -> VerificationReport:
    report = VerificationReport("s-lemma")
    bound = config.s_lemma_max or config.max_order
    for k in range(2, bound + 1):
        for a in divisors(k):
            if a < k:
                report.run("s-lemma", (a, k), lambda: s_lemma_check(a, k, compare), compare)
    return report


def measure_suite(config: RunConfig, compare) -> VerificationReport:
    report = VerificationReport("measure")
    for k, m in triangle(config.max_order):
        report.run("normalization", (k, m), lambda: normalization_check(k, m, compare), compare)
    report.notes.append("normalization: a soma de cadeias vale 1 em t = 1 (derivado)")
    return report


def functional_eq_suite(config: RunConfig, compare) -> VerificationReport:
    report = check_functional_eq(config.max_order, compare)
    for k in range(1, config.max_order + 1):
        report.run("tail-sum", (k,), lambda: tail_sum_check(k, compare), compare)
        report.run("diagonal-rowsum", (k,), lambda: diagonal_rowsum_check(k, compare), compare)
    return report


def deformed_suite(config: RunConfig, compare) -> VerificationReport:
    report = VerificationReport("deformed")
    ctx = config.lambda_ctx
    for k, m in triangle(config.max_order):
        report.run("routes-deformed", (k, m), lambda: routes_def_check(k, m, compare), compare)
        report.run("degeneration", (k, m), lambda: degeneration_check(k, m, compare), compare)
        report.run("symmetry-deformed", (k, m), lambda: symmetry_def_check(k, m, compare), compare)
        report.run("h-consistency", (k, m), lambda: h_consistency_check(k, m, compare), compare)
        report.run("t-one", (k, m), lambda: t1_check(k, m, compare), compare)
        report.run("lambda-support", (k, m), lambda: lambda_support_check(k, m), compare)
        if ctx.mode == "specialized":
            report.run("routes-specialized", (k, m), lambda: compare(
                g_def_closed_form(k, m, ctx), g_def_recurrence(k, m, ctx)), compare)
    report.run("lambda-one", (config.max_order,),
               lambda: lambda_one_check(config.max_order, compare), compare)
    return report


def derivatives_suite(config: RunConfig, compare) -> VerificationReport:
    report = VerificationReport("derivatives")
    n = config.max_order
    for k, m in triangle(n):
        for alpha in range(2, n + 1):
            report.run("lambda-derivative", (k, m, alpha),
                       lambda: check_lambda_derivative(k, m, alpha, compare), compare)
    for k, m, alphas, orders in HIGHER_DERIVATIVE_CASES:
        if m > n:
            continue
        cell = (k, m, ",".join(map(str, alphas)), ",".join(map(str, orders)))
        report.run("lambda-higher-derivative", cell,
                   lambda: check_lambda_higher_derivative(k, m, alphas, orders, compare), compare)
    if n >= 4:
        report.run("lambda-higher-derivative-literal", (4, 4, "2", "2"),
                   lambda: check_lambda_higher_derivative(4, 4, (2,), (2,), compare, literal=True),
                   compare, expected=False)
        report.notes.append(
            "lambda-higher-derivative-literal: o fator L^(alpha(k-1)) sem k! só vale na ordem 1; "
            "o correto é k! (1 - L^-alpha) L^(-alpha(k-1))"
        )
    return report


def z_ode_suite(config: RunConfig, compare) -> VerificationReport:
    report = VerificationReport("z-ode")
    for n in range(1, config.max_order + 1):
        report.run("z-ode", (n,), lambda: check_z_ode(n, compare), compare)
        report.run("chain-rule", (n,), lambda: check_chain_rule(n, compare), compare)
    for k, m in triangle(config.max_order):
        report.run("z-pde", (k, m), lambda: check_z_pde_coefficient(k, m, compare), compare)
    return report


SUITES = {
    "routes": routes_suite,
    "symmetry": symmetry_suite,
    "s-lemma": s_lemma_suite,
    "measure": measure_suite,
    "functional-eq": functional_eq_suite,
    "deformed": deformed_suite,
    "derivatives": derivatives_suite,
    "z-ode": z_ode_suite,
}

# nomes aceitos na linha de comando além das chaves de SUITES
SUITE_ALIASES = {"theorem4": "derivatives"}

SUITE_CHOICES = ("all",) + tuple(SUITES) + tuple(SUITE_ALIASES)


def run_suite(suite: str, config: RunConfig, compare: Comparator | None = None) -> VerificationReport:
    """Executa uma suíte (ou todas, em ordem de registro)."""
    if suite not in SUITE_CHOICES:
        raise InvalidConfig(f"Suíte desconhecida: {suite!r}")
    suite = SUITE_ALIASES.get(suite, suite)
    compare = compare or config.comparator()
    names = tuple(SUITES) if suite == "all" else (suite,)
    report = VerificationReport(suite)
    for name in names:
        logger.info("Iniciando suíte %s (N=%d, modo %s)", name, config.max_order, compare.mode)
        part = SUITES[name](config, compare)
        report.extend(part)
        logger.info("Suíte %s: %d células, %d falhas", name, len(part.cells),
                    part.summary()["failed"])
    report.disagreements = compare.disagreements
    return report
