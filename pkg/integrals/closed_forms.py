"""
Formas fechadas de G(k, m): redução ao mdc, a soma diagonal sobre
divisores, a soma sobre cadeias de divisores e a soma sobre tuplas de cadeia.
"""

import logging
from functools import lru_cache
from math import gcd
from typing import Callable

from kernel.rational import ONE, ZERO, FactoredRational
from numtheory.chains import enumerate_chain_tuples, enumerate_divisor_chains
from numtheory.utils import divisors, mobius

from .recurrence import diagonal_factor
from .spolys import s_direct
from .terms import L_MINUS_ONE, base_value, body, check_orders, inv, mono, one_minus

logger = logging.getLogger(__name__)

StepFactor = Callable[[int, int, int], FactoredRational]


def g_reduce_to_gcd(k: int, m: int) -> tuple[FactoredRational, int]:
    """G(k, m) = t^((k-1)(m-1)-(a-1)^2) L^(2a-k-m) G(a, a), a = mdc(k, m)."""
    check_orders(k, m)
    a = gcd(k, m)
    return mono((k - 1) * (m - 1) - (a - 1) ** 2, 2 * a - k - m), a


def g_diag_divisor_sum(k: int, s_poly: Callable[[int, int], FactoredRational] = s_direct) -> FactoredRational:
    """
    G(k, k) = fator_diagonal(k) * sum_{a|k, a<k} S(a, k) G(a, a), com
    G(a, a) pela mesma rota. k = 1 devolve o valor base.
    """
    check_orders(k)
    return _divisor_sum(k, s_poly)


@lru_cache(maxsize=None)
def _divisor_sum(k, s_poly):
    if k == 1:
        return base_value()
    total = ZERO
    for a in divisors(k)[:-1]:
        total = total + s_poly(a, k) * _divisor_sum(a, s_poly)
    return diagonal_factor(k) * total


@lru_cache(maxsize=None)
def g_diag_chain_sum(k: int) -> FactoredRational:
    """Soma explícita sobre as cadeias 1 = a0 | a1 | ... | ar = k."""
    check_orders(k)
    total = ZERO
    for chain in enumerate_divisor_chains(k):
        steps = chain.seq[1:]
        term = L_MINUS_ONE ** (2 + chain.r) * mono(
            sum(a * (a - 1) for a in steps), -2 - sum(steps)
        )
        for prev, a in chain.steps():
            term = term * inv(body(a * (a - 1), 1 - a)) * s_direct(prev, a)
        total = total + term
    return total


def chain_sum(a: int, step: StepFactor) -> FactoredRational:
    """
    sum sobre tuplas (a_seq; b_seq) de prod_j mu(b_j/a_{j-1}) * step(a_{j-1}, b_j, a_j).
    A tupla vazia (a = 1) contribui com o produto vazio 1.
    """
    total = ZERO
    for chain in enumerate_chain_tuples(a):
        term = ONE
        for prev, b, nxt in chain.steps():
            weight = mobius(b // prev)
            if not weight:
                term = ZERO
                break
            term = term * (weight * step(prev, b, nxt))
        total = total + term
    return total


def closed_form_step(prev: int, b: int, a: int) -> FactoredRational:
    """(L-1) t^((a-1)b) L^-b (1 - t^((a-1)(a-b)) L^(b-a)) / ((1 - t^(a(a-1)) L^(1-a)) (1 - t^((a-1)b) L^-b))."""
    return (
        L_MINUS_ONE
        * mono((a - 1) * b, -b)
        * one_minus(body((a - 1) * (a - b), b - a))
        * inv(body(a * (a - 1), 1 - a))
        * inv(body((a - 1) * b, -b))
    )


@lru_cache(maxsize=None)
def _closed_form_chain_sum(a: int) -> FactoredRational:
    value = chain_sum(a, closed_form_step)
    logger.debug("Soma de cadeias para a=%d calculada", a)
    return value


def closed_form_chain_sum(k: int, m: int) -> FactoredRational:
    """A parte somatória da forma fechada (sem o prefator monomial)."""
    check_orders(k, m)
    return _closed_form_chain_sum(gcd(k, m))


def closed_form_prefactor(k: int, m: int) -> FactoredRational:
    """(L - 1)^2 t^((k-1)(m-1)) L^(-k-m)."""
    return L_MINUS_ONE ** 2 * mono((k - 1) * (m - 1), -k - m)


def g_closed_form(k: int, m: int) -> FactoredRational:
    check_orders(k, m)
    return closed_form_prefactor(k, m) * _closed_form_chain_sum(gcd(k, m))
