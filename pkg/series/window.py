"""
Janela finita da série F = sum G(k, m) a^k b^m c^(k^2) d^(km) e^(m^2).

As variáveis formais a, b, c, d, e ficam implícitas no par (k, m); as
substituições monomiais da equação funcional agem como mapas de índices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable

from integrals.recurrence import g_recurrence, rowsum
from integrals.terms import INVERT_T_L, L_MINUS_ONE, check_orders, mono
from kernel.rational import FactoredRational, rat_eq_exact
from reports.verification import VerificationReport

logger = logging.getLogger(__name__)


@dataclass
class SeriesWindow:
    """Coeficientes (k, m) com k, m <= max_order."""

    max_order: int
    coefficient: Callable[[int, int], FactoredRational] = g_recurrence
    coefficients: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        check_orders(self.max_order)

    def __getitem__(self, key: tuple[int, int]) -> FactoredRational:
        k, m = key
        if not (1 <= k <= self.max_order and 1 <= m <= self.max_order):
            raise KeyError(key)
        if key not in self.coefficients:
            self.coefficients[key] = self.coefficient(k, m)
        return self.coefficients[key]

    def cells(self):
        for k in range(1, self.max_order + 1):
            for m in range(1, self.max_order + 1):
                yield k, m


def functional_eq_rhs(window: SeriesWindow, k: int, m: int) -> FactoredRational:
    """
    Coeficiente de a^k b^m no lado direito da equação funcional.

    O primeiro F leva (k, m) em (k, k + m) com fator t^(k(k-1)) L^-k, o
    segundo leva em (k + m, m), e o terceiro cai na diagonal com rowsum(k).
    """
    if m > k:
        return mono(k * (k - 1), -k) * window[k, m - k]
    if k > m:
        return mono(m * (m - 1), -m) * window[m, k - m]
    return L_MINUS_ONE * mono(k * (k - 1), -k) * rowsum(k)


def check_functional_eq(max_order: int, compare=rat_eq_exact) -> VerificationReport:
    window = SeriesWindow(max_order)
    report = VerificationReport("functional-eq")
    for k, m in window.cells():
        report.run(
            "functional-eq", (k, m),
            lambda k=k, m=m: compare(window[k, m], functional_eq_rhs(window, k, m)),
            compare,
        )
    logger.info("Equação funcional: %d células", len(report.cells))
    return report


def f_symmetry_rhs(window: SeriesWindow, k: int, m: int) -> FactoredRational:
    """Coeficiente de a^k b^m em t^2 L^2 F(1/t, 1/L; a t^-2 L^-2, b t^-2 L^-2, c, d t^2, e)."""
    shift = mono(-2 * k, -2 * k) * mono(-2 * m, -2 * m) * mono(2 * k * m, 0) * mono(2, 2)
    return window[k, m].substitute(INVERT_T_L) * shift


def check_f_symmetry(max_order: int, compare=rat_eq_exact) -> VerificationReport:
    window = SeriesWindow(max_order)
    report = VerificationReport("f-symmetry")
    for k, m in window.cells():
        report.run(
            "f-symmetry", (k, m),
            lambda k=k, m=m: compare(f_symmetry_rhs(window, k, m), window[k, m]),
            compare,
        )
    return report
