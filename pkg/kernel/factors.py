"""
Fatores binomiais canônicos (1 - m) dos denominadores.
"""

from __future__ import annotations

from .polynomials import LaurentPoly
from .variables import ONE_MONOMIAL, Monomial


class CanonFactor:
    """
    O binômio (1 - body), com body na orientação canônica: o primeiro
    expoente não nulo (na ordem das variáveis) é positivo.
    """

    __slots__ = ("body",)

    def __init__(self, body: Monomial):
        if body.leading_sign() <= 0:
            raise ValueError(f"Corpo fora da orientação canônica: {body!r}")
        self.body = body

    @staticmethod
    def orient(body: Monomial) -> tuple[int, Monomial, "CanonFactor"]:
        """
        Escreve (1 - body) = sign * unit * (1 - canon) e devolve
        (sign, unit, CanonFactor(canon)).

        Para body fora da orientação: (1 - m) = (-m) * (1 - m^-1).
        """
        direction = body.leading_sign()
        if direction == 0:
            raise ValueError("O binômio 1 - 1 é nulo")
        if direction > 0:
            return 1, ONE_MONOMIAL, CanonFactor(body)
        return -1, body, CanonFactor(body.inverse())

    def flip(self) -> tuple[int, Monomial, Monomial]:
        """
        Escreve (1 - body^-1) = sign * unit * (1 - body); devolve
        (sign, unit, body^-1). Aplicar duas vezes é a identidade e as
        unidades extraídas se multiplicam para 1.
        """
        return -1, self.body.inverse(), self.body.inverse()

    def poly(self) -> LaurentPoly:
        return LaurentPoly.binomial(self.body)

    def __eq__(self, other) -> bool:
        return isinstance(other, CanonFactor) and self.body == other.body

    def __hash__(self) -> int:
        return hash(("canon", self.body))

    def sort_key(self):
        return self.body.exps

    def __repr__(self) -> str:
        return f"(1 - {self.body!r})"
