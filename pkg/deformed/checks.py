"""
Identidades do sistema deformado.
"""

from math import gcd

from integrals.recurrence import g_recurrence
from integrals.terms import INVERT_T_L, L_MINUS_ONE, base_value, body, check_orders, inv, mono
from kernel.rational import rat_eq_exact
from kernel.variables import T, Monomial, lam
from numtheory.utils import divisors

from .systems import (
    ALL_L,
    g_def_closed_form,
    g_def_recurrence,
    g_def_t1,
    h_chain_sum,
    h_from_definition,
    lambda_support,
)


def routes_def_check(k: int, m: int, compare=rat_eq_exact) -> bool:
    """Recorrência deformada = forma fechada deformada (lambdas simbólicos)."""
    return compare(g_def_closed_form(k, m), g_def_recurrence(k, m))


def degeneration_check(k: int, m: int, compare=rat_eq_exact) -> bool:
    """Com lambda_i = L o valor deformado é o não deformado."""
    return compare(g_def_recurrence(k, m, ALL_L), g_recurrence(k, m))


def symmetry_def_check(k: int, m: int, compare=rat_eq_exact) -> bool:
    """G(1/t, 1/L, 1/lambda) = t^(-2(k-1)(m-1)) L^(2k+2m-2) G(t, L, lambda)."""
    check_orders(k, m)
    value = g_def_recurrence(k, m)
    sigma = dict(INVERT_T_L)
    for index in value.lambda_indices():
        sigma[lam(index)] = Monomial.var(lam(index), -1)
    expected = mono(-2 * (k - 1) * (m - 1), 2 * k + 2 * m - 2) * value
    return compare(value.substitute(sigma), expected)


def h_consistency_check(k: int, m: int, compare=rat_eq_exact) -> bool:
    """A razão que define H coincide com a soma de cadeias, e H(lambda = L) = 1."""
    ok = compare(h_from_definition(k, m), h_chain_sum(k, m))
    return compare(h_chain_sum(k, m, ALL_L), 1) and ok


def t1_check(k: int, m: int, compare=rat_eq_exact) -> bool:
    """A fórmula em t = 1 coincide com a substituição na forma fechada."""
    ok = compare(g_def_t1(k, m), g_def_closed_form(k, m).substitute({T: 1}))
    return compare(g_def_t1(k, m, ALL_L), L_MINUS_ONE ** 2 * mono(0, -k - m)) and ok


def lambda_support_check(k: int, m: int) -> bool:
    """Só aparecem lambda_d com d | mdc(k, m), d >= 2."""
    allowed = {d for d in divisors(gcd(k, m)) if d >= 2}
    return lambda_support(k, m) <= allowed


def lambda_one_check(max_order: int = 6, compare=rat_eq_exact) -> bool:
    """
    G(1, k) = L^(1-k) G(1, 1), a cauda sum_{k>1} G(1, k) vale G(1, 1)/(L - 1)
    e a equação diagonal G(1, 1) = (lambda_1 - 1) * cauda força lambda_1 = L.
    """
    check_orders(max_order)
    g11 = base_value()
    ok = True
    partial = g11 - g11
    for k in range(2, max_order + 1):
        ok = compare(g_recurrence(1, k), mono(0, 1 - k) * g11) and ok
        partial = partial + g_recurrence(1, k)
    # soma finita da série geométrica de razão L^-1
    finite = g11 * (mono(0, -1) - mono(0, -max_order)) * inv(body(0, -1))
    ok = compare(partial, finite) and ok
    tail = g11 * mono(0, -1) * inv(body(0, -1))
    ok = compare(tail, g11 / L_MINUS_ONE) and ok
    lambda_one = 1 + g11 / tail
    return compare(lambda_one, mono(0, 1)) and ok
