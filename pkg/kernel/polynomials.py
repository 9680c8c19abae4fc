"""
Polinômios de Laurent com coeficientes inteiros de precisão arbitrária.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Mapping

from .variables import ONE_MONOMIAL, Monomial, VarId, dense_order, from_dense


class LaurentPoly:
    """
    Polinômio de Laurent: mapeamento Monomial -> inteiro não nulo.

    Instâncias são tratadas como imutáveis; nenhuma operação pública altera
    o dicionário de termos depois da construção.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        merged: dict[Monomial, int] = {}
        for monomial, coeff in terms:
            merged[monomial] = merged.get(monomial, 0) + coeff
        self.terms = {m: c for m, c in merged.items() if c}

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls._wrap({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def monomial(cls, monomial: Monomial, c: int = 1) -> "LaurentPoly":
        return cls._wrap({monomial: c} if c else {})

    @classmethod
    def binomial(cls, body: Monomial) -> "LaurentPoly":
        """O polinômio 1 - body."""
        return cls({ONE_MONOMIAL: 1, body: -1})

    # -- consultas ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {ONE_MONOMIAL: 1}

    def single_term(self) -> tuple[Monomial, int] | None:
        if len(self.terms) == 1:
            return next(iter(self.terms.items()))
        return None

    def __len__(self) -> int:
        return len(self.terms)

    def variables(self) -> set[VarId]:
        found: set[VarId] = set()
        for monomial in self.terms:
            found.update(monomial.variables())
        return found

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    __hash__ = None

    def min_monomial(self) -> Monomial:
        """Monômio dos expoentes mínimos, variável a variável (âncora do suporte)."""
        lows: dict[VarId, int] = {}
        first = True
        for monomial in self.terms:
            exps = monomial.as_dict()
            if first:
                lows = dict(exps)
                first = False
                continue
            for var in list(lows):
                lows[var] = min(lows[var], exps.get(var, 0))
            for var, e in exps.items():
                if var not in lows:
                    lows[var] = min(0, e)
        return Monomial(lows)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Termos em ordem lexicográfica densa decrescente (ordem canônica)."""
        order = dense_order(self.terms)
        return sorted(self.terms.items(), key=lambda item: item[0].dense(order), reverse=True)

    def leading_coefficient(self) -> int:
        return self.sorted_terms()[0][1]

    # -- anel --------------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other.terms:
            return self
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            c = terms.get(monomial, 0) + coeff
            if c:
                terms[monomial] = c
            else:
                terms.pop(monomial, None)
        return LaurentPoly._wrap(terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if len(other.terms) < len(self.terms):
            self, other = other, self
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                c = terms.get(m, 0) + c1 * c2
                if c:
                    terms[m] = c
                else:
                    del terms[m]
        return LaurentPoly._wrap(terms)

    def scale(self, c: int, monomial: Monomial = ONE_MONOMIAL) -> "LaurentPoly":
        if not c:
            return LaurentPoly()
        if monomial.is_one:
            return LaurentPoly._wrap({m: c * k for m, k in self.terms.items()})
        return LaurentPoly._wrap({m * monomial: c * k for m, k in self.terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("Potência negativa de polinômio")
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- cálculo -----------------------------------------------------------

    def derivative(self, var: VarId) -> "LaurentPoly":
        drop = Monomial.var(var, -1)
        terms: dict[Monomial, int] = {}
        for monomial, coeff in self.terms.items():
            e = monomial.degree(var)
            if e:
                terms[monomial * drop] = coeff * e
        return LaurentPoly._wrap(terms)

    def divide_binomial(self, body: Monomial) -> "LaurentPoly | None":
        """
        Divisão exata por (1 - body), ou None se houver resto.

        Exige body > 1 na ordem lexicográfica densa (orientação canônica).
        Os termos são consumidos do menor para o maior. A parte de grau máximo
        do quociente na primeira variável de body não se cancela no produto,
        então um termo do resto acima do grau máximo do dividendo nessa
        variável prova que a divisão não é exata.
        """
        if not self.terms:
            return LaurentPoly()
        order = dense_order(self.terms, (body,))
        step = body.dense(order)
        remainder = {m.dense(order): c for m, c in self.terms.items()}
        lead = next(i for i, e in enumerate(step) if e)
        top = max(key[lead] for key in remainder)
        heap = list(remainder)
        heapq.heapify(heap)
        quotient: dict[tuple[int, ...], int] = {}
        while heap:
            key = heapq.heappop(heap)
            c = remainder.pop(key, 0)
            if not c:
                continue
            shifted = tuple(a + b for a, b in zip(key, step))
            if shifted[lead] > top:
                return None
            quotient[key] = c
            r = remainder.get(shifted, 0) + c
            if r:
                remainder[shifted] = r
                heapq.heappush(heap, shifted)
            else:
                remainder.pop(shifted, None)
        return LaurentPoly._wrap({from_dense(order, k): c for k, c in quotient.items()})

    def evaluate_mod(self, point: Mapping[VarId, int], prime: int) -> int:
        cache: dict[tuple[VarId, int], int] = {}
        total = 0
        for monomial, coeff in self.terms.items():
            value = coeff % prime
            for var, e in monomial.exps:
                power = cache.get((var, e))
                if power is None:
                    power = cache[(var, e)] = pow(point[var], e, prime)
                value = value * power % prime
            total += value
        return total % prime

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for monomial, coeff in self.sorted_terms():
            if monomial.is_one:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = repr(monomial)
            else:
                body = f"{abs(coeff)}*{monomial!r}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
