"""
Funções aritméticas: mdc, divisores e Möbius.
"""

from functools import lru_cache
from math import gcd

import sympy

from .exceptions import NotPositive

__all__ = ["gcd", "divisors", "proper_divisors", "mobius", "check_positive"]


def check_positive(n, name="n"):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise NotPositive(f"{name} deve ser um inteiro >= 1, recebido {n!r}")
    return n


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Divisores positivos de n em ordem crescente."""
    check_positive(n)
    return tuple(sympy.divisors(n))


def proper_divisors(n: int) -> tuple[int, ...]:
    return divisors(n)[:-1]


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Função de Möbius: 0 se n tem fator quadrado, senão (-1)^(número de primos)."""
    check_positive(n)
    exponents = sympy.factorint(n)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1
