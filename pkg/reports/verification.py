"""
Relatórios de verificação: células, resumo e JSON determinístico.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from typing import Callable

from django.conf import settings

from kernel.modular import rat_eq_modp
from kernel.rational import coerce, rat_eq_exact
from kernel.serializers import emit_json

logger = logging.getLogger(__name__)

MODES = ("exact", "modp", "both")


class Comparator:
    """
    Comparador usado pelas verificações: exato, modular ou ambos.

    No modo "both" o veredito é o exato; uma divergência do modular é
    contada e registrada como aviso. A última falha fica guardada com os
    dois lados serializados.
    """

    def __init__(self, mode: str = "exact", seed: int | None = None,
                 trials: int | None = None, prime: int | None = None):
        if mode not in MODES:
            raise ValueError(f"Modo inválido: {mode!r}")
        self.mode = mode
        self.seed = seed
        self.trials = trials
        self.prime = prime
        self.disagreements = 0
        self.last_mismatch = None

    def _modp(self, left, right) -> bool:
        return rat_eq_modp(left, right, trials=self.trials, seed=self.seed, prime=self.prime)

    @property
    def verdict_mode(self) -> str:
        """Modo que decide o veredito de cada célula: no modo "both" é o exato."""
        return "modp" if self.mode == "modp" else "exact"

    def __call__(self, left, right) -> bool:
        left, right = coerce(left), coerce(right)
        if self.mode == "modp":
            verdict = self._modp(left, right)
        else:
            verdict = rat_eq_exact(left, right)
            if self.mode == "both" and self._modp(left, right) != verdict:
                self.disagreements += 1
                logger.warning("Divergência modp/exato: exato=%s", verdict)
        if not verdict:
            self.last_mismatch = {"left": emit_json(left), "right": emit_json(right)}
        return verdict


@dataclass
class CellResult:
    identity: str
    cell: tuple
    holds: bool
    mode: str
    millis: float = 0.0
    expected: bool = True

    @property
    def passed(self) -> bool:
        return self.holds == self.expected

    def to_dict(self, timings: bool = False) -> dict:
        data = {"cell": list(self.cell), "pass": self.passed, "mode": self.mode}
        if not self.expected:
            data["expected"] = "fail"
        if timings:
            data["millis"] = round(self.millis, 3)
        return data


@dataclass
class VerificationReport:
    """Resultado de uma suíte: passa se e somente se toda célula passa."""

    name: str
    cells: list = field(default_factory=list)
    first_failure: dict | None = None
    disagreements: int = 0
    notes: list = field(default_factory=list)

    def run(self, identity: str, cell: tuple, check: Callable[[], bool],
            compare=rat_eq_exact, expected: bool = True) -> CellResult:
        """Executa uma célula, mede o tempo e guarda o resultado."""
        if isinstance(compare, Comparator):
            compare.last_mismatch = None
        mode = getattr(compare, "verdict_mode", "exact")
        started = time.perf_counter()
        holds = bool(check())
        millis = (time.perf_counter() - started) * 1000
        result = CellResult(identity, tuple(cell), holds, mode, millis, expected)
        self.cells.append(result)
        if not result.passed:
            logger.warning("Falha em %s %s", identity, result.cell)
            if self.first_failure is None:
                self.first_failure = {"identity": identity, "cell": list(result.cell)}
                mismatch = getattr(compare, "last_mismatch", None)
                if mismatch:
                    self.first_failure.update(mismatch)
        return result

    def extend(self, other: "VerificationReport") -> None:
        self.cells.extend(other.cells)
        self.disagreements += other.disagreements
        self.notes.extend(other.notes)
        if self.first_failure is None:
            self.first_failure = other.first_failure

    @property
    def passed(self) -> bool:
        return all(cell.passed for cell in self.cells)

    def identities(self) -> dict:
        grouped = {}
        for cell in self.cells:
            grouped.setdefault(cell.identity, []).append(cell)
        return {
            name: sorted(cells, key=lambda c: c.cell)
            for name, cells in sorted(grouped.items())
        }

    def summary(self) -> dict:
        failed = sum(1 for cell in self.cells if not cell.passed)
        return {
            "cells": len(self.cells),
            "passed": len(self.cells) - failed,
            "failed": failed,
            "documented_failures": sum(1 for c in self.cells if not c.expected and c.passed),
            "disagreements": self.disagreements,
        }

    def to_dict(self, timings: bool | None = None, header: dict | None = None) -> dict:
        if timings is None:
            timings = getattr(settings, "ARCMOT_REPORT_TIMINGS", False)
        data = {"suite": self.name}
        if header:
            data["config"] = header
        # millis varia entre execuções; sem eles o JSON é reproduzível
        data["timings"] = timings
        data["passed"] = self.passed
        data["summary"] = self.summary()
        data["identities"] = {
            name: [cell.to_dict(timings) for cell in cells]
            for name, cells in self.identities().items()
        }
        data["first_failure"] = self.first_failure
        if self.notes:
            data["notes"] = list(self.notes)
        return data

    def to_json(self, timings: bool | None = None, header: dict | None = None) -> str:
        return json.dumps(self.to_dict(timings, header), indent=2, ensure_ascii=True)
