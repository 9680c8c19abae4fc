"""
Testes para o app numtheory.
"""

from itertools import combinations, product

import pytest

from numtheory.chains import ChainTuple, DivisorChain, enumerate_chain_tuples, enumerate_divisor_chains
from numtheory.exceptions import NotPositive
from numtheory.utils import divisors, mobius


def brute_force_tuples(a):
    """Todas as subsequências de divisores, filtradas pelas condições de cadeia."""
    divs = [d for d in range(1, a + 1) if a % d == 0]
    middle = [d for d in divs if 1 < d < a]
    found = set()
    for size in range(len(middle) + 1):
        for chosen in combinations(middle, size):
            a_seq = (1,) + chosen + ((a,) if a > 1 else ())
            ranges = [[b for b in divs if prev <= b < nxt] for prev, nxt in zip(a_seq, a_seq[1:])]
            for b_seq in product(*ranges):
                ok = all(
                    b % prev == 0 and nxt % b == 0
                    for prev, b, nxt in zip(a_seq, b_seq, a_seq[1:])
                )
                if ok:
                    found.add((a_seq, tuple(b_seq)))
    return found


class TestArithmetic:
    """Testes de divisores e Möbius."""

    @pytest.mark.parametrize('n,expected', [(1, 1), (6, 1), (12, 0), (2, -1), (30, -1)])
    def test_mobius_values(self, n, expected):
        """Valores clássicos da função de Möbius."""
        assert mobius(n) == expected

    @pytest.mark.parametrize('n,expected', [
        (1, (1,)),
        (12, (1, 2, 3, 4, 6, 12)),
        (7, (1, 7)),
    ])
    def test_divisors(self, n, expected):
        """Divisores em ordem crescente."""
        assert divisors(n) == expected

    def test_mobius_sum(self):
        """Soma de mu(d) sobre d | n vale 1 para n = 1 e 0 para n >= 2."""
        for n in range(1, 2001):
            assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)

    @pytest.mark.slow
    def test_mobius_sum_large(self):
        """A mesma identidade até 10^4."""
        for n in range(2001, 10001):
            assert sum(mobius(d) for d in divisors(n)) == 0

    @pytest.mark.parametrize('bad', [0, -3, 2.5, True])
    def test_rejects_non_positive(self, bad):
        """Entradas não positivas levantam NotPositive."""
        with pytest.raises(NotPositive):
            divisors(bad)
        with pytest.raises(NotPositive):
            mobius(bad)


class TestChainTuples:
    """Testes da enumeração de tuplas de cadeia."""

    def test_target_one(self):
        """a = 1 tem só a tupla vazia (r = 0)."""
        assert enumerate_chain_tuples(1) == (ChainTuple((1,), ()),)

    def test_target_four(self):
        """a = 4 tem 3 tuplas."""
        assert enumerate_chain_tuples(4) == (
            ChainTuple((1, 4), (1,)),
            ChainTuple((1, 4), (2,)),
            ChainTuple((1, 2, 4), (1, 2)),
        )

    def test_target_six(self):
        """a = 6 tem 5 tuplas, em ordem determinística."""
        assert [str(c) for c in enumerate_chain_tuples(6)] == [
            '(1,6;1)', '(1,6;2)', '(1,6;3)', '(1,2,6;1,2)', '(1,3,6;1,3)',
        ]

    def test_primes_have_one_tuple(self):
        """Para p primo só existe (1,p;1)."""
        for p in (2, 3, 5, 7, 11, 13, 53):
            assert enumerate_chain_tuples(p) == (ChainTuple((1, p), (1,)),)

    def test_matches_brute_force(self):
        """A enumeração coincide com a força bruta para a <= 60."""
        for a in range(1, 61):
            tuples = enumerate_chain_tuples(a)
            assert all(c.is_valid() and c.target == a for c in tuples)
            assert len(set(tuples)) == len(tuples)
            assert {(c.a_seq, c.b_seq) for c in tuples} == brute_force_tuples(a)

    def test_invalid_tuple_detected(self):
        """is_valid rejeita b que não divide o próximo a."""
        assert not ChainTuple((1, 6), (4,)).is_valid()
        assert not ChainTuple((1, 4, 8), (1, 2)).is_valid()


class TestDivisorChains:
    """Testes das cadeias de divisores."""

    def test_small(self):
        """k = 1 e k = 4."""
        assert enumerate_divisor_chains(1) == (DivisorChain((1,)),)
        assert enumerate_divisor_chains(4) == (DivisorChain((1, 4)), DivisorChain((1, 2, 4)))

    def test_twelve_has_eight_chains(self):
        """12 tem 8 fatorações ordenadas."""
        chains = enumerate_divisor_chains(12)
        assert len(chains) == 8
        assert all(chain.is_valid() for chain in chains)

    def test_six(self):
        """Cadeias de 6: (1,6), (1,2,6), (1,3,6)."""
        assert [str(c) for c in enumerate_divisor_chains(6)] == ['(1,6)', '(1,2,6)', '(1,3,6)']
