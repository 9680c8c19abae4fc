"""
Exceções do núcleo de aritmética exata.
"""


class KernelError(Exception):
    """Erro base do núcleo."""


class DivisionByZero(KernelError, ZeroDivisionError):
    """Divisão por zero ou denominador que se anula após substituição."""


class ZeroSubstitution(KernelError):
    """Uma variável foi substituída por zero."""


class DegeneratePoint(KernelError):
    """Pontos aleatórios demais anularam algum denominador."""


class ParseError(KernelError, ValueError):
    """JSON ou expressão malformada."""


class NonBinomialDivisor(KernelError):
    """
    O numerador do divisor não se decompõe em unidade vezes binômios
    canônicos (1 - m), então o quociente não cabe na forma fatorada.
    """
