"""
Avaliação de G(k, m) pelas recorrências e a tabela memoizada por rota.

Ordem de redução: troca (k > m), deslocamento m -> m - k (m > k), diagonal
pela soma finita dos G(k, m') com m' < k, e o valor base G(1, 1).
"""

import logging
import threading
from typing import Callable

from kernel.rational import FactoredRational

from .terms import L_MINUS_ONE, base_value, body, check_orders, inv, mono

logger = logging.getLogger(__name__)


class GTable:
    """
    Cache (k, m) -> FactoredRational de uma rota de cálculo. As chaves são
    guardadas com k <= m, então cache(k, m) = cache(m, k).
    """

    def __init__(self, route: str, compute: Callable[[int, int], FactoredRational]):
        self.route = route
        self._compute = compute
        self._cache: dict[tuple[int, int], FactoredRational] = {}
        self._lock = threading.RLock()

    def get(self, k: int, m: int) -> FactoredRational:
        check_orders(k, m)
        key = (k, m) if k <= m else (m, k)
        value = self._cache.get(key)
        if value is None:
            with self._lock:
                value = self._cache.get(key)
                if value is None:
                    value = self._compute(*key)
                    self._cache[key] = value
                    logger.debug("G%s preenchido pela rota %s", key, self.route)
        return value

    def __contains__(self, key) -> bool:
        k, m = key
        return (min(k, m), max(k, m)) in self._cache

    def __len__(self) -> int:
        return len(self._cache)

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()


def diagonal_factor(k: int) -> FactoredRational:
    """(L - 1) t^(k(k-1)) L^-k / (1 - t^(k(k-1)) L^(1-k))."""
    shift = k * (k - 1)
    return L_MINUS_ONE * mono(shift, -k) * inv(body(shift, 1 - k))


def _recurrence(k: int, m: int) -> FactoredRational:
    if k == m == 1:
        return base_value()
    if m > k:
        return mono(k * (k - 1), -k) * g_recurrence(k, m - k)
    total = FactoredRational.from_int(0)
    for smaller in range(1, k):
        total = total + g_recurrence(k, smaller)
    return diagonal_factor(k) * total


RECURRENCE_TABLE = GTable("recurrence", _recurrence)


def g_recurrence(k: int, m: int) -> FactoredRational:
    return RECURRENCE_TABLE.get(k, m)


def rowsum(k: int) -> FactoredRational:
    """
    Soma de G(k, m) sobre todo m >= 1 em forma fechada: a cauda m > k vale
    G(k, k)/(L - 1), então a soma é sum_{m<k} G(k, m) + G(k, k) + G(k, k)/(L - 1).
    """
    check_orders(k)
    diagonal = g_recurrence(k, k)
    total = diagonal + diagonal / L_MINUS_ONE
    for m in range(1, k):
        total = total + g_recurrence(k, m)
    return total
