"""
Derivadas de H(k, m) nos lambdas e a especialização lambda_i = A tau^i.

Tudo é verificado coeficiente a coeficiente: o lado esquerdo por
derivação simbólica, o lado direito pela fórmula em produto.
"""

from __future__ import annotations

import logging
from math import factorial, gcd

from deformed.context import LambdaContext
from deformed.systems import h_chain_sum
from integrals.terms import body, check_orders, inv, mono, one_minus
from kernel.rational import ZERO, FactoredRational, rat_eq_exact
from kernel.variables import A, L, TAU, Monomial, lam
from numtheory.utils import divisors

from .exceptions import InvalidSequence

logger = logging.getLogger(__name__)

A_TAU = LambdaContext.a_tau()


def rescale(value: FactoredRational, alpha: int) -> FactoredRational:
    """L -> L^alpha e lambda_i -> lambda_(i alpha), simultaneamente."""
    sigma = {L: Monomial.var(L, alpha)}
    for index in value.lambda_indices():
        sigma[lam(index)] = Monomial.var(lam(index * alpha))
    return value.substitute(sigma)


def _lambda_factor(alpha: int, order: int = 1, literal: bool = False) -> FactoredRational:
    """
    Razão entre a derivada de ordem `order` de (lambda - 1)/(1 - lambda q)
    e a própria função, com q = L^-alpha:
    order! (1 - q) q^(order-1) / ((lambda - 1)(1 - lambda q)^order).

    `literal` usa L^(alpha(order-1)) sem o fatorial, forma que só coincide
    em order = 1.
    """
    lam_alpha = FactoredRational.var(lam(alpha))
    if literal:
        scale = mono(0, alpha * (order - 1))
    else:
        scale = factorial(order) * mono(0, -alpha * (order - 1))
    return (
        scale
        * one_minus(Monomial.var(L, -alpha))
        * inv(body(0, -alpha, **{f"lam{alpha}": 1})) ** order
        / (lam_alpha - 1)
    )


def _check_alpha(alpha: int) -> None:
    if isinstance(alpha, bool) or not isinstance(alpha, int) or alpha < 2:
        raise InvalidSequence(f"Índice de lambda deve ser inteiro >= 2, recebido {alpha!r}")


def lambda_derivative_rhs(k: int, m: int, alpha: int) -> FactoredRational:
    """Lado direito da derivada primeira em lambda_alpha; zero se alpha não divide mdc(k, m)."""
    check_orders(k, m)
    _check_alpha(alpha)
    if gcd(k, m) % alpha:
        return ZERO
    return _lambda_factor(alpha) * h_chain_sum(alpha, alpha) * rescale(h_chain_sum(k // alpha, m // alpha), alpha)


def check_lambda_derivative(k: int, m: int, alpha: int, compare=rat_eq_exact) -> bool:
    left = h_chain_sum(k, m).derivative(lam(alpha))
    return compare(left, lambda_derivative_rhs(k, m, alpha))


def _check_sequence(alphas, orders) -> None:
    alphas, orders = tuple(alphas), tuple(orders)
    if not alphas or len(alphas) != len(orders):
        raise InvalidSequence("As sequências de índices e de ordens devem ter o mesmo tamanho, não nulo")
    for alpha in alphas:
        _check_alpha(alpha)
    if any(a >= b for a, b in zip(alphas, alphas[1:])):
        raise InvalidSequence(f"Índices devem ser estritamente crescentes: {alphas}")
    for order in orders:
        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise InvalidSequence(f"Ordem de derivada deve ser inteira positiva, recebido {order!r}")


def lambda_higher_derivative_rhs(k: int, m: int, alphas, orders, literal: bool = False) -> FactoredRational:
    """
    Derivada mista de H(k, m) pela fórmula em produto: prefatores por índice
    vezes H(a1, a1) * prod H(a_j/a_(j-1)) reescalado por a_(j-1) vezes
    H(k/a_n, m/a_n) reescalado por a_n. Zero se a cadeia de divisibilidade
    quebra.
    """
    check_orders(k, m)
    _check_sequence(alphas, orders)
    alphas, orders = tuple(alphas), tuple(orders)
    if any(b % a for a, b in zip(alphas, alphas[1:])) or gcd(k, m) % alphas[-1]:
        return ZERO
    value = h_chain_sum(alphas[0], alphas[0])
    for prev, alpha in zip(alphas, alphas[1:]):
        step = alpha // prev
        value = value * rescale(h_chain_sum(step, step), prev)
    last = alphas[-1]
    value = value * rescale(h_chain_sum(k // last, m // last), last)
    for alpha, order in zip(alphas, orders):
        value = value * _lambda_factor(alpha, order, literal)
    return value


def lambda_higher_derivative(k: int, m: int, alphas, orders) -> FactoredRational:
    """Derivação simbólica repetida de H(k, m)."""
    _check_sequence(alphas, orders)
    value = h_chain_sum(k, m)
    for alpha, order in zip(alphas, orders):
        for _ in range(order):
            value = value.derivative(lam(alpha))
    return value


def check_lambda_higher_derivative(k: int, m: int, alphas, orders, compare=rat_eq_exact,
                                   literal: bool = False) -> bool:
    rhs = lambda_higher_derivative_rhs(k, m, alphas, orders, literal)
    return compare(lambda_higher_derivative(k, m, alphas, orders), rhs)


# -- especialização lambda_i = A tau^i ----------------------------------------


def z_value(n: int) -> FactoredRational:
    """Z_n(L, tau) = H(n, n) com lambda_i = A tau^i."""
    return h_chain_sum(n, n, A_TAU)


def z_rescale(value: FactoredRational, alpha: int) -> FactoredRational:
    """L -> L^alpha, tau -> tau^alpha; A não muda."""
    return value.substitute({L: Monomial.var(L, alpha), TAU: Monomial.var(TAU, alpha)})


def z_factor(alpha: int) -> FactoredRational:
    """A alpha tau^(alpha-1) (1 - L^-alpha) / ((A tau^alpha - 1)(1 - A tau^alpha L^-alpha))."""
    a_tau = Monomial({A: 1, TAU: alpha})
    return (
        alpha
        * FactoredRational.from_monomial(Monomial({A: 1, TAU: alpha - 1}))
        * one_minus(Monomial.var(L, -alpha))
        * inv(a_tau * Monomial.var(L, -alpha))
        / (FactoredRational.from_monomial(a_tau) - 1)
    )


def z_ode_rhs(n: int) -> FactoredRational:
    check_orders(n)
    total = ZERO
    for alpha in divisors(n):
        if alpha >= 2:
            total = total + z_factor(alpha) * z_value(alpha) * z_rescale(z_value(n // alpha), alpha)
    return total


def check_z_ode(n: int, compare=rat_eq_exact) -> bool:
    return compare(z_value(n).derivative(TAU), z_ode_rhs(n))


def z_pde_rhs(k: int, m: int) -> FactoredRational:
    check_orders(k, m)
    total = ZERO
    for alpha in divisors(gcd(k, m)):
        if alpha >= 2:
            reduced = h_chain_sum(k // alpha, m // alpha, A_TAU)
            total = total + z_factor(alpha) * z_value(alpha) * z_rescale(reduced, alpha)
    return total


def check_z_pde_coefficient(k: int, m: int, compare=rat_eq_exact) -> bool:
    """Coeficiente de a^k b^m da equação em tau."""
    return compare(h_chain_sum(k, m, A_TAU).derivative(TAU), z_pde_rhs(k, m))


def chain_rule_rhs(n: int) -> FactoredRational:
    """sum_alpha (dH(n, n)/d lambda_alpha em lambda_i = A tau^i) * alpha A tau^(alpha-1)."""
    check_orders(n)
    value = h_chain_sum(n, n)
    total = ZERO
    for alpha in sorted(value.lambda_indices()):
        partial = A_TAU.specialize(value.derivative(lam(alpha)))
        weight = alpha * FactoredRational.from_monomial(Monomial({A: 1, TAU: alpha - 1}))
        total = total + partial * weight
    return total


def check_chain_rule(n: int, compare=rat_eq_exact) -> bool:
    """A derivada direta de Z_n coincide com a regra da cadeia pelas derivadas em lambda."""
    return compare(z_value(n).derivative(TAU), chain_rule_rhs(n))
