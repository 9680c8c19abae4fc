"""
Contexto de especialização dos parâmetros lambda_i (i >= 2).

Sem atribuição o contexto é simbólico. Índices sem entrada continuam
simbólicos, a menos que haja uma regra padrão ("L" ou "A*tau^i").
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from kernel.exceptions import ParseError
from kernel.rational import FactoredRational, as_image
from kernel.serializers import emit_json, parse_signed_monomial
from kernel.variables import lam

from .exceptions import LambdaSpecError

SPEC_KEYS = {"lam", "default"}


class LambdaContext:
    """Atribuição finita i -> valor, mais uma regra padrão opcional."""

    def __init__(self, assignment: Mapping[int, object] | None = None, default: str | None = None):
        self.assignment = {}
        for index, image in (assignment or {}).items():
            if isinstance(index, bool) or not isinstance(index, int) or index < 2:
                raise LambdaSpecError(f"Índice de lambda deve ser inteiro >= 2, recebido {index!r}")
            self.assignment[index] = as_image(image)
        self.default = default
        if default is not None:
            self._default_image(2)

    # -- construtores ----------------------------------------------------------

    @classmethod
    def symbolic(cls) -> "LambdaContext":
        return cls()

    @classmethod
    def all_l(cls) -> "LambdaContext":
        """lambda_i = L para todo i: o sistema volta ao não deformado."""
        return cls(default="L")

    @classmethod
    def a_tau(cls) -> "LambdaContext":
        """lambda_i = A tau^i."""
        return cls(default="A*tau^i")

    @classmethod
    def from_spec(cls, data) -> "LambdaContext":
        """{"lam": {"2": "L", "4": "A*tau^4"}, "default": "L"}"""
        if not isinstance(data, dict):
            raise LambdaSpecError("A especificação deve ser um objeto JSON")
        unknown = set(data) - SPEC_KEYS
        if unknown:
            raise LambdaSpecError(f"Chaves desconhecidas: {', '.join(sorted(unknown))}")
        entries = data.get("lam", {})
        if not isinstance(entries, dict):
            raise LambdaSpecError("'lam' deve mapear índices a expressões")
        assignment = {}
        for key, text in entries.items():
            try:
                index = int(key)
            except (TypeError, ValueError):
                raise LambdaSpecError(f"Índice inválido: {key!r}") from None
            if not isinstance(text, str):
                raise LambdaSpecError(f"Expressão de lambda_{index} deve ser texto")
            try:
                assignment[index] = parse_signed_monomial(text)
            except ParseError as exc:
                raise LambdaSpecError(f"lambda_{index}: {exc}") from exc
        default = data.get("default")
        if default is not None and not isinstance(default, str):
            raise LambdaSpecError("'default' deve ser texto")
        return cls(assignment, default)

    @classmethod
    def from_file(cls, path) -> "LambdaContext":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise LambdaSpecError(f"Não foi possível ler {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise LambdaSpecError(f"JSON malformado em {path}: {exc}") from exc
        return cls.from_spec(data)

    # -- consultas -------------------------------------------------------------

    @property
    def mode(self) -> str:
        return "specialized" if self.assignment or self.default else "symbolic"

    def _default_image(self, index: int):
        try:
            return parse_signed_monomial(self.default, index=index)
        except ParseError as exc:
            raise LambdaSpecError(f"Regra padrão inválida: {exc}") from exc

    def image(self, index: int):
        """Imagem de lambda_index, ou None se continua simbólico."""
        if index in self.assignment:
            return self.assignment[index]
        if self.default is not None:
            return self._default_image(index)
        return None

    def sigma(self, indices) -> dict:
        mapping = {}
        for index in indices:
            image = self.image(index)
            if image is not None:
                mapping[lam(index)] = image
        return mapping

    def specialize(self, value: FactoredRational) -> FactoredRational:
        if self.mode == "symbolic":
            return value
        return value.substitute(self.sigma(value.lambda_indices()))

    def describe(self) -> dict:
        """Forma serializável para cabeçalhos de relatório."""

        def text(image):
            if isinstance(image, tuple):
                sign, monomial = image
                return ("-" if sign < 0 else "") + repr(monomial)
            return emit_json(image)

        return {
            "mode": self.mode,
            "lam": {str(i): text(self.assignment[i]) for i in sorted(self.assignment)},
            "default": self.default,
        }

    def __repr__(self) -> str:
        return f"LambdaContext({self.describe()!r})"
