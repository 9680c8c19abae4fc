"""
Exceções das integrais G(k, m).
"""


class IntegralError(Exception):
    """Erro base de integrals."""


class InvalidOrder(IntegralError, ValueError):
    """Ordem de tangência k ou m menor que 1."""


class NotADivisor(IntegralError, ValueError):
    """O índice a não divide k (ou não é menor que k)."""
