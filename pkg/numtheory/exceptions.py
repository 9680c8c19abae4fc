"""
Exceções das utilidades aritméticas.
"""


class NumberTheoryError(Exception):
    """Erro base de numtheory."""


class NotPositive(NumberTheoryError, ValueError):
    """Argumento inteiro que deveria ser >= 1."""
