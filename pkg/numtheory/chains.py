"""
Enumeração das cadeias de divisores que indexam as fórmulas fechadas.

ChainTuple: (1 = a0 <= b1 < a1 <= b2 < ... <= br < ar = a), com
a_{j-1} | b_j e b_j | a_j. DivisorChain: (1 = a0 < a1 < ... < ar = k),
com a_{j-1} | a_j.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from .utils import check_positive, divisors, proper_divisors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainTuple:
    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.b_seq)

    @property
    def target(self) -> int:
        return self.a_seq[-1]

    def steps(self):
        """Pares (a_{j-1}, b_j, a_j) para j = 1..r."""
        return zip(self.a_seq, self.b_seq, self.a_seq[1:])

    def is_valid(self) -> bool:
        if not self.a_seq or self.a_seq[0] != 1 or len(self.a_seq) != self.r + 1:
            return False
        return all(prev <= b < a and b % prev == 0 and a % b == 0 for prev, b, a in self.steps())

    def sort_key(self):
        return (self.r, self.a_seq, self.b_seq)

    def __str__(self) -> str:
        a_part = ",".join(map(str, self.a_seq))
        b_part = ",".join(map(str, self.b_seq))
        return f"({a_part};{b_part})"


@dataclass(frozen=True)
class DivisorChain:
    seq: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.seq) - 1

    def steps(self):
        """Pares (a_{j-1}, a_j)."""
        return zip(self.seq, self.seq[1:])

    def is_valid(self) -> bool:
        return bool(self.seq) and self.seq[0] == 1 and all(
            prev < a and a % prev == 0 for prev, a in self.steps()
        )

    def sort_key(self):
        return (self.r, self.seq)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.seq)) + ")"


@lru_cache(maxsize=None)
def _chain_tuples(a: int) -> tuple[ChainTuple, ...]:
    if a == 1:
        return (ChainTuple((1,), ()),)
    found = []
    for p in proper_divisors(a):
        for prefix in _chain_tuples(p):
            for b in divisors(a):
                if b < a and b % p == 0:
                    found.append(ChainTuple(prefix.a_seq + (a,), prefix.b_seq + (b,)))
    found.sort(key=ChainTuple.sort_key)
    logger.debug("Tuplas de cadeia para a=%d: %d", a, len(found))
    return tuple(found)


def enumerate_chain_tuples(a: int) -> tuple[ChainTuple, ...]:
    """Todas as ChainTuple com a_r = a, ordenadas por (r, a_seq, b_seq)."""
    return _chain_tuples(check_positive(a, "a"))


@lru_cache(maxsize=None)
def _divisor_chains(k: int) -> tuple[DivisorChain, ...]:
    if k == 1:
        return (DivisorChain((1,)),)
    found = [
        DivisorChain(prefix.seq + (k,))
        for p in proper_divisors(k)
        for prefix in _divisor_chains(p)
    ]
    found.sort(key=DivisorChain.sort_key)
    return tuple(found)


def enumerate_divisor_chains(k: int) -> tuple[DivisorChain, ...]:
    """Cadeias estritamente crescentes 1 = a0 | a1 | ... | ar = k."""
    return _divisor_chains(check_positive(k, "k"))
