"""
Teste probabilístico de identidade por avaliação num corpo primo.
"""

from __future__ import annotations

import logging
import random

from django.conf import settings

from .exceptions import DegeneratePoint
from .rational import coerce

logger = logging.getLogger(__name__)

MERSENNE_61 = 2**61 - 1
DEFAULT_TRIALS = 20
DEFAULT_SEED = 20240601


def _setting(name, default):
    if settings.configured:
        return getattr(settings, name, default)
    return default


def rat_eq_modp(x, y, trials: int | None = None, seed: int | None = None,
                prime: int | None = None) -> bool:
    """
    Compara x e y em `trials` pontos aleatórios de F_p, descartando pontos
    que anulam algum denominador. Falso negativo é impossível: se x == y
    exatamente, os valores coincidem em todo ponto aceito.
    """
    x, y = coerce(x), coerce(y)
    trials = _setting("ARCMOT_MODP_TRIALS", DEFAULT_TRIALS) if trials is None else trials
    seed = _setting("ARCMOT_SEED", DEFAULT_SEED) if seed is None else seed
    prime = _setting("ARCMOT_MODP_PRIME", MERSENNE_61) if prime is None else prime
    variables = sorted(x.variables() | y.variables())
    rng = random.Random(seed)
    rejected = 0
    accepted = 0
    while accepted < trials:
        point = {var: rng.randrange(1, prime) for var in variables}
        left = x.evaluate_mod(point, prime)
        right = y.evaluate_mod(point, prime) if left is not None else None
        if left is None or right is None:
            rejected += 1
            logger.debug("Ponto descartado (%d consecutivos)", rejected)
            if rejected > 100 * trials:
                raise DegeneratePoint(f"{rejected} pontos consecutivos anularam um denominador")
            continue
        rejected = 0
        if left != right:
            return False
        accepted += 1
    return True
