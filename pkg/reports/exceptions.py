"""
Exceções do app de relatórios.
"""


class ReportError(Exception):
    """Erro base de reports."""


class InvalidConfig(ReportError, ValueError):
    """Configuração de execução inválida."""
