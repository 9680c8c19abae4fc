"""
Serialização de FactoredRational.

JSON é a forma de máquina (ida e volta exata); LaTeX é só para exibição e
passa pelo sympy. Nomes de variáveis em formatos de máquina são ASCII:
"t", "L", "lam2", ..., "A", "tau".
"""

from __future__ import annotations

import json
import re

import sympy

from .exceptions import ParseError
from .factors import CanonFactor
from .polynomials import LaurentPoly
from .rational import FactoredRational
from .variables import Monomial, VarId

FORMATS = ("json", "latex")

_FACTOR_RE = re.compile(r"^([A-Za-z]+\d*)(?:\^(-?\d+))?$")


def _exps_json(monomial: Monomial) -> dict:
    return {var.name: exp for var, exp in monomial.exps}


def _exps_parse(data) -> Monomial:
    if not isinstance(data, dict):
        raise ParseError(f"'exps' deve ser um objeto, recebido {type(data).__name__}")
    exps = {}
    for name, exp in data.items():
        if not isinstance(exp, int) or isinstance(exp, bool) or exp == 0:
            raise ParseError(f"Expoente inválido para {name!r}: {exp!r}")
        exps[VarId.from_name(name)] = exp
    return Monomial(exps)


def to_dict(x: FactoredRational) -> dict:
    return {
        "unit": {"sign": x.sign, "exps": _exps_json(x.unit)},
        "num": [{"c": c, "exps": _exps_json(m)} for m, c in x.num.sorted_terms()],
        "den": [
            {"exps": _exps_json(factor.body), "mult": x.den[factor]}
            for factor in sorted(x.den, key=CanonFactor.sort_key)
        ],
    }


def emit_json(x: FactoredRational) -> str:
    return json.dumps(to_dict(x), separators=(",", ":"), ensure_ascii=True)


def from_dict(data) -> FactoredRational:
    try:
        unit = data["unit"]
        sign = unit["sign"]
        if sign not in (1, -1):
            raise ParseError(f"Sinal inválido: {sign!r}")
        terms = []
        for term in data["num"]:
            c = term["c"]
            if not isinstance(c, int) or isinstance(c, bool) or c == 0:
                raise ParseError(f"Coeficiente inválido: {c!r}")
            terms.append((_exps_parse(term["exps"]), c))
        den = {}
        for entry in data["den"]:
            mult = entry["mult"]
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                raise ParseError(f"Multiplicidade inválida: {mult!r}")
            factor = CanonFactor(_exps_parse(entry["exps"]))
            den[factor] = den.get(factor, 0) + mult
    except ParseError:
        raise
    except (KeyError, TypeError) as exc:
        raise ParseError(f"Estrutura JSON inválida: {exc}") from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return FactoredRational(LaurentPoly(terms), sign, _exps_parse(unit["exps"]), den)


def parse_json(text: str) -> FactoredRational:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"JSON malformado: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("O valor serializado deve ser um objeto JSON")
    return from_dict(data)


# -- sympy -------------------------------------------------------------------

def sympy_symbol(var: VarId) -> sympy.Symbol:
    return sympy.Symbol(var.name, positive=True)


def latex_names(variables) -> dict:
    names = {}
    for var in variables:
        symbol = sympy_symbol(var)
        if var.is_lambda:
            names[symbol] = rf"\lambda_{{{var.index}}}"
        elif var.name == "L":
            names[symbol] = r"\mathbb{L}"
        elif var.name == "tau":
            names[symbol] = r"\tau"
    return names


def _monomial_expr(monomial: Monomial):
    return sympy.Mul(*(sympy_symbol(v) ** e for v, e in monomial.exps))


def _poly_expr(poly: LaurentPoly):
    return sympy.Add(*(c * _monomial_expr(m) for m, c in poly.terms.items()))


def to_sympy(x: FactoredRational):
    """Expressão sympy com o mesmo valor (sem simplificação)."""
    den = sympy.Mul(*((1 - _monomial_expr(f.body)) ** m for f, m in x.den.items()))
    return x.sign * _monomial_expr(x.unit) * _poly_expr(x.num) / den


def emit_latex(x: FactoredRational) -> str:
    if x.is_zero():
        return "0"
    expr = x.sign * _monomial_expr(x.unit) * sympy.factor(_poly_expr(x.num))
    den = sympy.Mul(*((1 - _monomial_expr(f.body)) ** m
                      for f, m in sorted(x.den.items(), key=lambda item: item[0].sort_key())))
    return sympy.latex(expr / den, symbol_names=latex_names(x.variables()))


def emit(x: FactoredRational, format: str = "json") -> str:
    if format == "json":
        return emit_json(x)
    if format == "latex":
        return emit_latex(x)
    raise ValueError(f"Formato desconhecido: {format!r} (use {', '.join(FORMATS)})")


# -- monômios com sinal --------------------------------------------------------

def parse_signed_monomial(text: str, index: int | None = None) -> tuple[int, Monomial]:
    """
    Lê "-A*tau^4", "L", "1". Se `index` for dado, o expoente literal "i"
    vale index (usado na regra padrão "A*tau^i").
    """
    source = text
    text = text.replace(" ", "")
    sign = 1
    if text and text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        text = text[1:]
    if not text:
        raise ParseError(f"Monômio vazio: {source!r}")
    if index is not None:
        text = text.replace("^i", f"^{index}")
    exps: dict[VarId, int] = {}
    for part in text.split("*"):
        if part == "1":
            continue
        match = _FACTOR_RE.match(part)
        if not match:
            raise ParseError(f"Fator inválido {part!r} em {source!r}")
        var = VarId.from_name(match.group(1))
        exps[var] = exps.get(var, 0) + int(match.group(2) or 1)
    return sign, Monomial(exps)
