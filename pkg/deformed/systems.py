"""
G(k, m) deformado: a diagonal usa (lambda_k - 1) no lugar de (L - 1).

Os valores são calculados e guardados em forma simbólica; cada contexto
os especializa por substituição.
"""

import logging
from functools import lru_cache
from math import gcd

from integrals.closed_forms import chain_sum, closed_form_prefactor
from integrals.recurrence import GTable
from integrals.terms import L_MINUS_ONE, base_value, body, check_orders, inv, mono, one_minus
from kernel.rational import ZERO, FactoredRational
from kernel.variables import T, lam

from .context import LambdaContext

logger = logging.getLogger(__name__)

SYMBOLIC = LambdaContext.symbolic()
ALL_L = LambdaContext.all_l()


def lam_minus_one(index: int) -> FactoredRational:
    return FactoredRational.var(lam(index)) - 1


def deformed_diagonal_factor(k: int) -> FactoredRational:
    """(lambda_k - 1) t^(k(k-1)) L^-k / (1 - lambda_k t^(k(k-1)) L^-k)."""
    shift = k * (k - 1)
    return lam_minus_one(k) * mono(shift, -k) * inv(body(shift, -k, **{f"lam{k}": 1}))


def _deformed_recurrence(k: int, m: int) -> FactoredRational:
    if k == m == 1:
        return base_value()
    if m > k:
        return mono(k * (k - 1), -k) * DEFORMED_TABLE.get(k, m - k)
    total = ZERO
    for smaller in range(1, k):
        total = total + DEFORMED_TABLE.get(k, smaller)
    return deformed_diagonal_factor(k) * total


DEFORMED_TABLE = GTable("deformed-recurrence", _deformed_recurrence)


def g_def_recurrence(k: int, m: int, ctx: LambdaContext = SYMBOLIC) -> FactoredRational:
    return ctx.specialize(DEFORMED_TABLE.get(k, m))


def deformed_step(prev: int, b: int, a: int) -> FactoredRational:
    return (
        lam_minus_one(a)
        * mono((a - 1) * b, -b)
        * one_minus(body((a - 1) * (a - b), b - a))
        * inv(body(a * (a - 1), -a, **{f"lam{a}": 1}))
        * inv(body((a - 1) * b, -b))
    )


def ratio_step(prev: int, b: int, a: int) -> FactoredRational:
    """O passo em t = 1: (lambda_a - 1) L^-b (1 - L^(b-a)) / ((1 - lambda_a L^-a)(1 - L^-b))."""
    return (
        lam_minus_one(a)
        * mono(0, -b)
        * one_minus(body(0, b - a))
        * inv(body(0, -a, **{f"lam{a}": 1}))
        * inv(body(0, -b))
    )


@lru_cache(maxsize=None)
def _deformed_chain_sum(a: int) -> FactoredRational:
    logger.debug("Soma deformada para a=%d", a)
    return chain_sum(a, deformed_step)


@lru_cache(maxsize=None)
def _ratio_chain_sum(a: int) -> FactoredRational:
    return chain_sum(a, ratio_step)


def g_def_closed_form(k: int, m: int, ctx: LambdaContext = SYMBOLIC) -> FactoredRational:
    check_orders(k, m)
    return ctx.specialize(closed_form_prefactor(k, m) * _deformed_chain_sum(gcd(k, m)))


def h_chain_sum(k: int, m: int, ctx: LambdaContext = SYMBOLIC) -> FactoredRational:
    """H(k, m) como soma sobre tuplas de cadeia; mdc 1 dá 1."""
    check_orders(k, m)
    return ctx.specialize(_ratio_chain_sum(gcd(k, m)))


def h_from_definition(k: int, m: int, ctx: LambdaContext = SYMBOLIC) -> FactoredRational:
    """G(1, L; lambdas) / G(1, L; L, L, ...)."""
    at_one = {T: 1}
    deformed = g_def_closed_form(k, m, ctx).substitute(at_one)
    undeformed = g_def_closed_form(k, m, ALL_L).substitute(at_one)
    return deformed / undeformed


def g_def_t1(k: int, m: int, ctx: LambdaContext = SYMBOLIC) -> FactoredRational:
    """G(1, L; lambdas) = (L - 1)^2 L^(-k-m) vezes a soma de cadeias em t = 1."""
    check_orders(k, m)
    return ctx.specialize(L_MINUS_ONE ** 2 * mono(0, -k - m) * _ratio_chain_sum(gcd(k, m)))


def lambda_support(k: int, m: int) -> set[int]:
    """Índices de lambda presentes na forma fechada simbólica."""
    return g_def_closed_form(k, m).lambda_indices()
