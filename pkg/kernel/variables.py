"""
Variáveis e monômios de Laurent.

A ordem das variáveis é fixa: t < L < lam2 < lam3 < ... < A < tau.
Toda a canonização (ordem de termos, orientação de fatores) depende dela.
"""

from __future__ import annotations

import re
from math import gcd
from typing import Iterable, Mapping, NamedTuple

from .exceptions import ParseError

_RANK_T, _RANK_L, _RANK_LAM, _RANK_A, _RANK_TAU = range(5)
_NAME_RE = re.compile(r"^(t|L|A|tau|lam(\d+))$")


class VarId(NamedTuple):
    """Identificador de variável; a ordem de tupla é a ordem canônica."""

    rank: int
    index: int = 0

    @property
    def name(self) -> str:
        if self.rank == _RANK_LAM:
            return f"lam{self.index}"
        return ("t", "L", None, "A", "tau")[self.rank]

    @property
    def is_lambda(self) -> bool:
        return self.rank == _RANK_LAM

    @classmethod
    def from_name(cls, name: str) -> "VarId":
        match = _NAME_RE.match(name)
        if not match:
            raise ParseError(f"Variável desconhecida: {name!r}")
        if match.group(2) is not None:
            index = int(match.group(2))
            if index < 2:
                raise ParseError(f"lambda_{index} não é variável livre")
            return lam(index)
        return {"t": T, "L": L, "A": A, "tau": TAU}[name]

    def __repr__(self) -> str:
        return self.name


T = VarId(_RANK_T)
L = VarId(_RANK_L)
A = VarId(_RANK_A)
TAU = VarId(_RANK_TAU)


def lam(i: int) -> VarId:
    """Parâmetro de deformação lambda_i; lambda_1 nunca é livre (vale L)."""
    if i < 2:
        raise ValueError(f"Índice de lambda deve ser >= 2, recebido {i}")
    return VarId(_RANK_LAM, i)


class Monomial:
    """
    Monômio de Laurent: mapeamento VarId -> expoente inteiro não nulo,
    guardado como tupla ordenada de pares.
    """

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Mapping[VarId, int] | Iterable[tuple[VarId, int]] = ()):
        if isinstance(exps, Mapping):
            exps = exps.items()
        merged: dict[VarId, int] = {}
        for var, exp in exps:
            merged[var] = merged.get(var, 0) + exp
        self.exps = tuple(sorted((v, e) for v, e in merged.items() if e))
        self._hash = hash(self.exps)

    @classmethod
    def _from_sorted(cls, exps: tuple) -> "Monomial":
        obj = cls.__new__(cls)
        obj.exps = exps
        obj._hash = hash(exps)
        return obj

    @classmethod
    def of(cls, **named: int) -> "Monomial":
        """Monomial.of(t=2, L=-1, lam2=1)"""
        return cls({VarId.from_name(name): exp for name, exp in named.items()})

    @classmethod
    def var(cls, var: VarId, exp: int = 1) -> "Monomial":
        return cls._from_sorted(((var, exp),) if exp else ())

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    @property
    def is_one(self) -> bool:
        return not self.exps

    def as_dict(self) -> dict[VarId, int]:
        return dict(self.exps)

    def degree(self, var: VarId) -> int:
        for v, e in self.exps:
            if v == var:
                return e
        return 0

    def variables(self) -> set[VarId]:
        return {v for v, _ in self.exps}

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other.exps:
            return self
        if not self.exps:
            return other
        merged = dict(self.exps)
        for var, exp in other.exps:
            merged[var] = merged.get(var, 0) + exp
        return Monomial._from_sorted(tuple(sorted((v, e) for v, e in merged.items() if e)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inverse()

    def inverse(self) -> "Monomial":
        return Monomial._from_sorted(tuple((v, -e) for v, e in self.exps))

    def __pow__(self, n: int) -> "Monomial":
        if n == 0:
            return ONE_MONOMIAL
        return Monomial._from_sorted(tuple((v, e * n) for v, e in self.exps))

    def leading_sign(self) -> int:
        """Sinal do primeiro expoente não nulo na ordem das variáveis (0 se unitário)."""
        if not self.exps:
            return 0
        return 1 if self.exps[0][1] > 0 else -1

    def content(self) -> int:
        """mdc dos expoentes."""
        g = 0
        for _, e in self.exps:
            g = gcd(g, e)
        return g

    def root(self, g: int) -> "Monomial":
        return Monomial._from_sorted(tuple((v, e // g) for v, e in self.exps))

    def dense(self, order: tuple[VarId, ...]) -> tuple[int, ...]:
        exps = dict(self.exps)
        return tuple(exps.get(v, 0) for v in order)

    def __repr__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in self.exps)


ONE_MONOMIAL = Monomial()


def dense_order(*monomial_sets: Iterable[Monomial]) -> tuple[VarId, ...]:
    """Lista ordenada das variáveis presentes nos monômios dados."""
    found: set[VarId] = set()
    for monomials in monomial_sets:
        for monomial in monomials:
            found.update(v for v, _ in monomial.exps)
    return tuple(sorted(found))


def from_dense(order: tuple[VarId, ...], key: tuple[int, ...]) -> Monomial:
    return Monomial._from_sorted(tuple((v, e) for v, e in zip(order, key) if e))
