"""
Funções racionais fatoradas.

Valor = sign * unit * num / prod(fator ** multiplicidade), com fatores
binomiais canônicos (1 - m). Não há mdc multivariado: a simplificação é só
divisão por tentativa pelos fatores conhecidos e a igualdade é decidida por
multiplicação cruzada.
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import Mapping, Union

from .exceptions import DivisionByZero, NonBinomialDivisor, ZeroSubstitution
from .factors import CanonFactor
from .polynomials import LaurentPoly
from .variables import ONE_MONOMIAL, Monomial, VarId, dense_order

logger = logging.getLogger(__name__)

SignedMonomial = tuple[int, Monomial]
Image = Union["FactoredRational", Monomial, SignedMonomial, int]

# limite de passos ao decompor um divisor em binômios
_SPLIT_STEPS = 256


def expand_factors(factors: Mapping[CanonFactor, int]) -> LaurentPoly:
    result = LaurentPoly.constant(1)
    for factor in sorted(factors, key=CanonFactor.sort_key):
        mult = factors[factor]
        if mult:
            result = result * factor.poly() ** mult
    return result


class FactoredRational:
    """
    Elemento exato do corpo de funções racionais em t, L, lambdas, A, tau.

    A forma fatorada só guarda denominadores que são produtos de binômios
    canônicos (1 - m) com sinal e unidade monomial. Dividir por um valor cujo
    numerador não se decompõe assim (1 + 2t, ou a constante 2) levanta
    NonBinomialDivisor: é um limite da representação, não um erro de uso, e
    os comandos o tratam como falha de cálculo (código 1).
    """

    __slots__ = ("num", "sign", "unit", "den")

    def __init__(self, num: LaurentPoly, sign: int = 1, unit: Monomial = ONE_MONOMIAL,
                 den: Mapping[CanonFactor, int] | None = None):
        self._normalize(num, sign, unit, dict(den or {}))

    # -- construção --------------------------------------------------------

    def _normalize(self, num, sign, unit, den):
        if num.is_zero():
            self.num, self.sign, self.unit, self.den = LaurentPoly(), 1, ONE_MONOMIAL, {}
            return
        kept = {}
        for factor in sorted(den, key=CanonFactor.sort_key):
            mult = den[factor]
            while mult > 0:
                quotient = num.divide_binomial(factor.body)
                if quotient is None:
                    break
                num = quotient
                mult -= 1
            if mult > 0:
                kept[factor] = mult
        anchor = num.min_monomial()
        if not anchor.is_one:
            num = num.scale(1, anchor.inverse())
            unit = unit * anchor
        if num.leading_coefficient() < 0:
            num = -num
            sign = -sign
        self.num, self.sign, self.unit, self.den = num, sign, unit, kept

    @classmethod
    def _raw(cls, num, sign, unit, den) -> "FactoredRational":
        obj = cls.__new__(cls)
        obj.num, obj.sign, obj.unit, obj.den = num, sign, unit, den
        return obj

    @classmethod
    def from_int(cls, n: int) -> "FactoredRational":
        return cls(LaurentPoly.constant(n))

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "FactoredRational":
        return cls(poly)

    @classmethod
    def from_monomial(cls, monomial: Monomial, sign: int = 1) -> "FactoredRational":
        return cls._raw(LaurentPoly.constant(1), sign, monomial, {})

    @classmethod
    def monomial(cls, **named: int) -> "FactoredRational":
        return cls.from_monomial(Monomial.of(**named))

    @classmethod
    def var(cls, var: VarId, exp: int = 1) -> "FactoredRational":
        return cls.from_monomial(Monomial.var(var, exp))

    @classmethod
    def binomial(cls, body: Monomial) -> "FactoredRational":
        """O valor 1 - body."""
        return cls(LaurentPoly.binomial(body))

    @classmethod
    def inverse_binomial(cls, body: Monomial) -> "FactoredRational":
        """O valor 1 / (1 - body)."""
        if body.is_one:
            raise DivisionByZero("1 / (1 - 1)")
        sign, unit, factor = CanonFactor.orient(body)
        return cls._raw(LaurentPoly.constant(1), sign, unit.inverse(), {factor: 1})

    # -- consultas ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def signed_monomial(self) -> SignedMonomial | None:
        """(sinal, monômio) se o valor for um monômio com sinal."""
        if self.den:
            return None
        single = self.num.single_term()
        if single is None or abs(single[1]) != 1 or not single[0].is_one:
            return None
        return self.sign * single[1], self.unit

    def variables(self) -> set[VarId]:
        found = self.num.variables() | self.unit.variables()
        for factor in self.den:
            found |= factor.body.variables()
        return found

    def lambda_indices(self) -> set[int]:
        return {v.index for v in self.variables() if v.is_lambda}

    def numerator_poly(self) -> LaurentPoly:
        """sign * unit * num como um único polinômio."""
        return self.num.scale(self.sign, self.unit)

    def denominator_poly(self) -> LaurentPoly:
        return expand_factors(self.den)

    # -- corpo -------------------------------------------------------------

    def __add__(self, other) -> "FactoredRational":
        other = coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        den = dict(self.den)
        for factor, mult in other.den.items():
            den[factor] = max(den.get(factor, 0), mult)
        left = self.numerator_poly()
        right = other.numerator_poly()
        missing_left = {f: m - self.den.get(f, 0) for f, m in den.items() if m > self.den.get(f, 0)}
        missing_right = {f: m - other.den.get(f, 0) for f, m in den.items() if m > other.den.get(f, 0)}
        if missing_left:
            left = left * expand_factors(missing_left)
        if missing_right:
            right = right * expand_factors(missing_right)
        return FactoredRational(left + right, 1, ONE_MONOMIAL, den)

    __radd__ = __add__

    def __neg__(self) -> "FactoredRational":
        if self.is_zero():
            return self
        return FactoredRational._raw(self.num, -self.sign, self.unit, self.den)

    def __sub__(self, other) -> "FactoredRational":
        return self + (-coerce(other))

    def __rsub__(self, other) -> "FactoredRational":
        return coerce(other) - self

    def __mul__(self, other) -> "FactoredRational":
        other = coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        den = Counter(self.den)
        den.update(other.den)
        return FactoredRational(self.num * other.num, self.sign * other.sign,
                                self.unit * other.unit, den)

    __rmul__ = __mul__

    def inverse(self) -> "FactoredRational":
        if self.is_zero():
            raise DivisionByZero("Inverso de zero")
        inv = invert_poly(self.num)
        return FactoredRational(inv.num * expand_factors(self.den), inv.sign * self.sign,
                                inv.unit * self.unit.inverse(), inv.den)

    def __truediv__(self, other) -> "FactoredRational":
        other = coerce(other)
        if other.is_zero():
            raise DivisionByZero("Divisão por zero")
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FactoredRational":
        return coerce(other) / self

    def __pow__(self, n: int) -> "FactoredRational":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        den = {f: m * n for f, m in self.den.items()}
        return FactoredRational(self.num ** n, self.sign ** n, self.unit ** n, den)

    # -- igualdade ---------------------------------------------------------

    def equals(self, other) -> bool:
        """Igualdade exata por multiplicação cruzada dos numeradores."""
        other = coerce(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        left_extra, right_extra = {}, {}
        for factor in set(self.den) | set(other.den):
            diff = other.den.get(factor, 0) - self.den.get(factor, 0)
            if diff > 0:
                left_extra[factor] = diff
            elif diff < 0:
                right_extra[factor] = -diff
        left = self.numerator_poly()
        right = other.numerator_poly()
        if left_extra:
            left = left * expand_factors(left_extra)
        if right_extra:
            right = right * expand_factors(right_extra)
        return left == right

    def __eq__(self, other) -> bool:
        try:
            return self.equals(other)
        except TypeError:
            return NotImplemented

    __hash__ = None

    # -- substituição e derivada -------------------------------------------

    def substitute(self, sigma: Mapping[VarId, Image]) -> "FactoredRational":
        """
        Imagem pelo homomorfismo de substituição. Imagens monomiais levam
        fatores canônicos em fatores canônicos a menos de unidades.
        """
        present = self.variables()
        images = {var: as_image(image) for var, image in sigma.items() if var in present}
        if not images or self.is_zero():
            return self
        if all(isinstance(image, tuple) for image in images.values()):
            return self._substitute_monomial(images)
        return self._substitute_general(images)

    def _substitute_monomial(self, images) -> "FactoredRational":
        num = LaurentPoly()
        mapped: dict[Monomial, int] = {}
        for monomial, coeff in self.num.terms.items():
            s, image = _map_monomial(monomial, images)
            mapped[image] = mapped.get(image, 0) + s * coeff
        num = LaurentPoly(mapped)
        s, unit = _map_monomial(self.unit, images)
        sign = self.sign * s
        den: Counter = Counter()
        for factor, mult in self.den.items():
            s, body = _map_monomial(factor.body, images)
            if body.is_one:
                if s > 0:
                    raise DivisionByZero(f"O fator {factor!r} se anula na substituição")
                raise NonBinomialDivisor(f"O fator {factor!r} vira a constante 2")
            if s < 0:
                # 1/(1 + M) = (1 - M)/(1 - M^2)
                num = num * LaurentPoly.binomial(body) ** mult
                body = body ** 2
            fsign, funit, canon = CanonFactor.orient(body)
            sign *= fsign ** mult
            unit = unit * funit ** (-mult)
            den[canon] += mult
        return FactoredRational(num, sign, unit, den)

    def _substitute_general(self, images) -> "FactoredRational":
        def image_of(monomial):
            result = ONE
            untouched = []
            for var, exp in monomial.exps:
                image = images.get(var)
                if image is None:
                    untouched.append((var, exp))
                elif isinstance(image, tuple):
                    result = result * FactoredRational.from_monomial(image[1] ** exp, image[0] ** abs(exp))
                else:
                    result = result * image ** exp
            return result * FactoredRational.from_monomial(Monomial(untouched))

        value = ZERO
        for monomial, coeff in self.num.terms.items():
            value = value + image_of(monomial) * coeff
        value = value * image_of(self.unit) * self.sign
        for factor, mult in self.den.items():
            base = ONE - image_of(factor.body)
            if base.is_zero():
                raise DivisionByZero(f"O fator {factor!r} se anula na substituição")
            value = value / base ** mult
        return value

    def derivative(self, var: VarId) -> "FactoredRational":
        """
        Derivada parcial pela regra do quociente. O numerador e o denominador
        resultantes são expandidos e renormalizados por divisão por tentativa
        contra o dicionário de fatores da entrada.
        """
        top = self.numerator_poly()
        d_top = top.derivative(var)
        moving = [(f, m) for f, m in sorted(self.den.items(), key=lambda item: item[0].sort_key())
                  if f.body.degree(var)]
        if not moving:
            return FactoredRational(d_top, 1, ONE_MONOMIAL, self.den)
        polys = [f.poly() for f, _ in moving]
        # d(1 - M)/dv = -(dM/dv)
        d_polys = [LaurentPoly.monomial(f.body * Monomial.var(var, -1), -f.body.degree(var))
                   for f, _ in moving]
        product = LaurentPoly.constant(1)
        for poly in polys:
            product = product * poly
        correction = LaurentPoly()
        for i, (factor, mult) in enumerate(moving):
            others = LaurentPoly.constant(mult)
            for j, poly in enumerate(polys):
                if j != i:
                    others = others * poly
            correction = correction + d_polys[i] * others
        num = d_top * product - top * correction
        den = Counter(self.den)
        for factor, _ in moving:
            den[factor] += 1
        return FactoredRational(num, 1, ONE_MONOMIAL, den)

    # -- avaliação modular -------------------------------------------------

    def evaluate_mod(self, point: Mapping[VarId, int], prime: int) -> int | None:
        """Valor em F_p, ou None se algum fator do denominador se anula."""
        den_value = 1
        for factor, mult in self.den.items():
            value = (1 - LaurentPoly.monomial(factor.body).evaluate_mod(point, prime)) % prime
            if value == 0:
                return None
            den_value = den_value * pow(value, mult, prime) % prime
        value = self.num.evaluate_mod(point, prime)
        value = value * LaurentPoly.monomial(self.unit).evaluate_mod(point, prime) * self.sign
        return value * pow(den_value, -1, prime) % prime

    def __repr__(self) -> str:
        text = repr(self.num) if len(self.num) == 1 else f"({self.num!r})"
        if not self.unit.is_one:
            text = repr(self.unit) if self.num.is_one() else f"{text}*{self.unit!r}"
        if self.sign < 0:
            text = f"-{text}"
        if self.den:
            parts = []
            for factor in sorted(self.den, key=CanonFactor.sort_key):
                mult = self.den[factor]
                parts.append(repr(factor) if mult == 1 else f"{factor!r}^{mult}")
            text += " / " + "*".join(parts)
        return text


ZERO = FactoredRational._raw(LaurentPoly(), 1, ONE_MONOMIAL, {})
ONE = FactoredRational._raw(LaurentPoly.constant(1), 1, ONE_MONOMIAL, {})


def coerce(value) -> FactoredRational:
    if isinstance(value, FactoredRational):
        return value
    if isinstance(value, bool):
        raise TypeError("bool não é um valor racional")
    if isinstance(value, int):
        return FactoredRational.from_int(value)
    if isinstance(value, Monomial):
        return FactoredRational.from_monomial(value)
    if isinstance(value, LaurentPoly):
        return FactoredRational.from_poly(value)
    raise TypeError(f"Não é possível converter {type(value).__name__} em FactoredRational")


def as_image(image) -> SignedMonomial | FactoredRational:
    """Normaliza a imagem de uma variável numa substituição."""
    if isinstance(image, tuple):
        sign, monomial = image
        if sign not in (1, -1):
            raise ValueError("Sinal de monômio deve ser +1 ou -1")
        return sign, monomial
    if isinstance(image, Monomial):
        return 1, image
    value = coerce(image)
    if value.is_zero():
        raise ZeroSubstitution("Imagem nula numa substituição")
    return value.signed_monomial() or value


def _map_monomial(monomial: Monomial, images) -> SignedMonomial:
    sign = 1
    parts = []
    for var, exp in monomial.exps:
        image = images.get(var)
        if image is None:
            parts.append((var, exp))
            continue
        s, target = image
        if s < 0 and exp % 2:
            sign = -sign
        parts.extend((v, e * exp) for v, e in target.exps)
    return sign, Monomial(parts)


def _binomial_bases(poly: LaurentPoly) -> list[Monomial]:
    """Candidatos m > 1 a fatores (1 - m): razões ao menor termo e suas raízes."""
    order = dense_order(poly.terms)
    ranked = sorted(poly.terms, key=lambda m: m.dense(order))
    low = ranked[0]
    found: list[Monomial] = []
    for monomial in ranked[1:]:
        ratio = monomial / low
        for candidate in (ratio, ratio.root(ratio.content())):
            if candidate not in found:
                found.append(candidate)
    return found


def invert_poly(poly: LaurentPoly) -> FactoredRational:
    """
    1/poly na forma fatorada. O polinômio precisa se escrever como unidade
    vezes binômios (1 - m) e quocientes (1 - m^n)/(1 - m), como 1 + m;
    caso contrário levanta NonBinomialDivisor.
    """
    remaining = poly
    extra = LaurentPoly.constant(1)
    den: Counter = Counter()
    for _ in range(_SPLIT_STEPS):
        single = remaining.single_term()
        if single is not None:
            monomial, coeff = single
            if abs(coeff) != 1:
                raise NonBinomialDivisor(f"Conteúdo inteiro {coeff} não é invertível")
            return FactoredRational(extra, coeff, monomial.inverse(), den)
        bases = _binomial_bases(remaining)
        for base in bases:
            quotient = remaining.divide_binomial(base)
            if quotient is not None:
                den[CanonFactor(base)] += 1
                remaining = quotient
                break
        else:
            step = _cyclotomic_step(remaining, bases)
            if step is None:
                raise NonBinomialDivisor(f"O divisor {poly!r} não se decompõe em binômios")
            multiplier, body, remaining = step
            extra = extra * multiplier
            den[CanonFactor(body)] += 1
    raise NonBinomialDivisor(f"Decomposição de {poly!r} não terminou")


def _cyclotomic_step(poly: LaurentPoly, bases: list[Monomial]):
    """
    Procura m e c com poly * (1 - m) divisível por (1 - c), c != m.
    Devolve (1 - m, c, quociente) ou None.
    """
    for base in bases:
        multiplier = LaurentPoly.binomial(base)
        product = poly * multiplier
        for body in _binomial_bases(product):
            if body == base:
                continue
            quotient = product.divide_binomial(body)
            if quotient is not None:
                return multiplier, body, quotient
    return None


def rat_eq_exact(x, y) -> bool:
    return coerce(x).equals(y)


def substitute(x: FactoredRational, sigma: Mapping[VarId, Image]) -> FactoredRational:
    return coerce(x).substitute(sigma)


def derivative(x: FactoredRational, var: VarId) -> FactoredRational:
    return coerce(x).derivative(var)
