"""
Exceções das verificações de séries.
"""


class SeriesError(Exception):
    """Erro base de series."""


class InvalidSequence(SeriesError, ValueError):
    """Sequência de índices ou de ordens de derivada inválida."""
