"""
Blocos recorrentes das fórmulas: monômios em t e L, (L - 1) e 1/(1 - m).
"""

from kernel.rational import FactoredRational
from kernel.variables import L, T, Monomial

from .exceptions import InvalidOrder

L_MINUS_ONE = FactoredRational.var(L) - 1
INVERT_T_L = {T: Monomial.var(T, -1), L: Monomial.var(L, -1)}


def body(t_exp: int, l_exp: int, **extra: int) -> Monomial:
    exps = {T: t_exp, L: l_exp}
    if extra:
        exps.update(Monomial.of(**extra).exps)
    return Monomial(exps)


def mono(t_exp: int, l_exp: int, **extra: int) -> FactoredRational:
    """t^t_exp * L^l_exp (* demais variáveis nomeadas)."""
    return FactoredRational.from_monomial(body(t_exp, l_exp, **extra))


def inv(monomial: Monomial) -> FactoredRational:
    """1 / (1 - monomial)."""
    return FactoredRational.inverse_binomial(monomial)


def one_minus(monomial: Monomial) -> FactoredRational:
    return FactoredRational.binomial(monomial)


def check_orders(*orders: int) -> None:
    for order in orders:
        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise InvalidOrder(f"Ordens devem ser inteiros >= 1, recebido {order!r}")


def base_value() -> FactoredRational:
    """G(1, 1) = (L - 1)^2 L^-2."""
    return L_MINUS_ONE ** 2 * mono(0, -2)
