"""
Polinômios auxiliares S(a, k) e as somas geométricas S^(a, k).

    S(a, k)  = sum_{1<=m<k, mdc(m,k)=a} t^((k-1)(m-1)-(a-1)^2) L^(2a-k-m)
    S^(a, k) = sum_{1<=m<k, a|m}        t^((k-1)(m-1)) L^(-k-m)

S^ se escreve como soma sobre os múltiplos b de a de termos em S(b, k);
a inversão de Möbius dá S(a, k) a partir das formas fechadas de S^.
"""

from functools import lru_cache
from math import gcd

from kernel.rational import ZERO, FactoredRational
from numtheory.utils import divisors, mobius

from .exceptions import NotADivisor
from .terms import body, check_orders, inv, mono


def _check_divisor(a: int, k: int) -> None:
    check_orders(a, k)
    if k % a:
        raise NotADivisor(f"a deve dividir k: {a} não divide {k}")


@lru_cache(maxsize=None)
def s_direct(a: int, k: int) -> FactoredRational:
    """A soma finita literal; vazia (zero) quando a = k."""
    _check_divisor(a, k)
    total = ZERO
    for m in range(1, k):
        if gcd(m, k) == a:
            total = total + mono((k - 1) * (m - 1) - (a - 1) ** 2, 2 * a - k - m)
    return total


@lru_cache(maxsize=None)
def s_hat_sum(a: int, k: int) -> FactoredRational:
    _check_divisor(a, k)
    total = ZERO
    for m in range(a, k, a):
        total = total + mono((k - 1) * (m - 1), -k - m)
    return total


@lru_cache(maxsize=None)
def s_hat(a: int, k: int) -> FactoredRational:
    """Forma fechada da série geométrica de razão t^((k-1)a) L^-a."""
    _check_divisor(a, k)
    first = mono((k - 1) * (a - 1), -k - a)
    last = mono((k - 1) ** 2, -2 * k)
    return (first - last) * inv(body((k - 1) * a, -a))


@lru_cache(maxsize=None)
def s_mobius(a: int, k: int) -> FactoredRational:
    """S(a, k) = t^-(a-1)^2 L^2a sum_{a|b, b|k} mu(b/a) S^(b, k)."""
    _check_divisor(a, k)
    total = ZERO
    for b in divisors(k):
        if b % a == 0 and b < k:
            weight = mobius(b // a)
            if weight:
                total = total + weight * s_hat(b, k)
    return mono(-(a - 1) ** 2, 2 * a) * total
