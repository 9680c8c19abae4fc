"""
Exceções do sistema deformado.
"""


class DeformedError(Exception):
    """Erro base de deformed."""


class LambdaSpecError(DeformedError, ValueError):
    """Especificação de lambdas malformada."""
