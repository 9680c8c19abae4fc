"""
Testes para o app integrals.
"""

import pytest

from integrals.checks import (
    diagonal_rowsum_check,
    doubled_exponent_symmetry_check,
    gcd_one_check,
    normalization_check,
    reduce_to_gcd_check,
    routes_check,
    s_lemma_check,
    symmetry_check,
    tail_sum_check,
)
from integrals.closed_forms import (
    closed_form_chain_sum,
    g_closed_form,
    g_diag_chain_sum,
    g_diag_divisor_sum,
    g_reduce_to_gcd,
)
from integrals.exceptions import InvalidOrder, NotADivisor
from integrals.recurrence import RECURRENCE_TABLE, g_recurrence, rowsum
from integrals.spolys import s_direct, s_hat, s_hat_sum, s_mobius
from integrals.terms import L_MINUS_ONE, body, inv, mono
from kernel.rational import ONE
from kernel.variables import T


def g22():
    return L_MINUS_ONE ** 3 * mono(2, -5) * inv(body(2, -1))


class TestRecurrence:
    """Testes de G(k, m) pelas recorrências."""

    def test_base_value(self):
        """G(1,1) = (L-1)^2 L^-2."""
        assert g_recurrence(1, 1) == L_MINUS_ONE ** 2 * mono(0, -2)

    def test_shift(self):
        """G(1,2) = (L-1)^2 L^-3."""
        assert g_recurrence(1, 2) == L_MINUS_ONE ** 2 * mono(0, -3)

    def test_diagonal_two(self):
        """G(2,2) = (L-1)^3 t^2 L^-5 / (1 - t^2 L^-1)."""
        assert g_recurrence(2, 2) == g22()

    def test_diagonal_three(self):
        """G(3,3) = (L-1)^3 t^6 L^-7 (1 + t^2 L^-1) / (1 - t^6 L^-2)."""
        expected = L_MINUS_ONE ** 3 * mono(6, -7) * (1 + mono(2, -1)) * inv(body(6, -2))
        assert g_recurrence(3, 3) == expected

    def test_symmetric_table(self):
        """A tabela guarda G(k,m) e G(m,k) na mesma chave."""
        assert g_recurrence(2, 5) is g_recurrence(5, 2)
        assert (5, 2) in RECURRENCE_TABLE

    @pytest.mark.parametrize('k,m', [(0, 1), (1, -2), (1.5, 2)])
    def test_invalid_order(self, k, m):
        """Ordens menores que 1 levantam InvalidOrder."""
        with pytest.raises(InvalidOrder):
            g_recurrence(k, m)

    def test_rowsum_one(self):
        """rowsum(1) = G(1,1) (1 + 1/(L-1)) = (L-1) L^-1."""
        assert rowsum(1) == L_MINUS_ONE * mono(0, -1)

    def test_rowsum_two(self):
        """rowsum(2) = G(2,1) + G(2,2) L/(L-1)."""
        expected = g_recurrence(2, 1) + g22() * mono(0, 1) / L_MINUS_ONE
        assert rowsum(2) == expected


class TestSPolynomials:
    """Testes de S(a,k) e S^(a,k)."""

    def test_s_direct_values(self):
        """Valores pequenos da soma literal."""
        assert s_direct(1, 2) == mono(0, -1)
        assert s_direct(1, 3) == mono(0, -2) + mono(2, -3)
        assert s_direct(2, 4) == mono(2, -2)
        assert s_direct(3, 3).is_zero()

    def test_s_hat_values(self):
        """Soma geométrica literal e fechada."""
        assert s_hat_sum(1, 2) == mono(0, -3)
        assert s_hat(1, 2) == mono(0, -3)
        assert s_hat(2, 4) == mono(3, -6)
        assert s_hat(1, 3) == mono(0, -4) + mono(2, -5)

    @pytest.mark.parametrize('a,k', [(1, 2), (2, 4), (1, 6), (2, 6), (3, 6), (1, 12), (4, 12)])
    def test_mobius_inversion(self, a, k):
        """S por Möbius = S direto."""
        assert s_mobius(a, k) == s_direct(a, k)

    def test_lemma_up_to_sixty(self):
        """As duas rotas de S e de S^ coincidem para k <= 60."""
        for k in range(2, 61):
            for a in range(1, k):
                if k % a == 0:
                    assert s_lemma_check(a, k), (a, k)

    def test_not_a_divisor(self):
        """a precisa dividir k."""
        with pytest.raises(NotADivisor):
            s_direct(3, 4)
        with pytest.raises(NotADivisor):
            s_mobius(2, 5)


class TestClosedForms:
    """Testes das formas fechadas."""

    def test_reduce_to_gcd(self):
        """Prefatores monomiais da redução ao mdc."""
        assert g_reduce_to_gcd(2, 3) == (mono(2, -3), 1)
        assert g_reduce_to_gcd(2, 4) == (mono(2, -2), 2)
        prefactor, a = g_reduce_to_gcd(5, 5)
        assert prefactor == ONE and a == 5

    def test_reduce_matches_recurrence(self):
        """G(k,m) = prefator * G(a,a)."""
        for k in range(1, 9):
            for m in range(1, 9):
                prefactor, a = g_reduce_to_gcd(k, m)
                assert g_recurrence(k, m) == prefactor * g_recurrence(a, a)

    def test_closed_form_examples(self):
        """Exemplos pequenos da forma fechada."""
        assert g_closed_form(1, 1) == L_MINUS_ONE ** 2 * mono(0, -2)
        assert g_closed_form(2, 3) == L_MINUS_ONE ** 2 * mono(2, -5)
        unreduced = (L_MINUS_ONE ** 3 * mono(2, -5) * (1 - mono(1, -1))
                     * inv(body(2, -1)) * inv(body(1, -1)))
        assert g_closed_form(2, 2) == unreduced

    def test_diagonal_routes(self):
        """As somas diagonais coincidem com a recorrência."""
        for k in (1, 2, 3, 4, 6):
            assert g_diag_chain_sum(k) == g_recurrence(k, k)
        for k in (2, 3, 4):
            assert g_diag_divisor_sum(k) == g_recurrence(k, k)

    def test_route_agreement(self):
        """Todas as rotas coincidem para k, m <= 6."""
        for k in range(1, 7):
            for m in range(1, 7):
                assert routes_check(k, m), (k, m)

    @pytest.mark.slow
    def test_route_agreement_large(self):
        """Todas as rotas coincidem para k, m <= 12."""
        for k in range(1, 13):
            for m in range(k, 13):
                assert routes_check(k, m), (k, m)

    def test_gcd_one(self):
        """mdc 1 dá um monômio vezes (L-1)^2."""
        for k, m in ((1, 4), (2, 3), (3, 5), (4, 9)):
            assert gcd_one_check(k, m)


class TestChecks:
    """Testes das identidades de simetria e normalização."""

    def test_reduce_to_gcd(self):
        """A redução ao mdc vale no triângulo até 8 e detecta prefator errado."""
        for k in range(1, 9):
            for m in range(k, 9):
                assert reduce_to_gcd_check(k, m), (k, m)
        assert not reduce_to_gcd_check(2, 4, lambda left, right: left == right * mono(1, 0))

    def test_symmetry_examples(self):
        """Simetria em (1,1), (2,2) e (2,3)."""
        for k, m in ((1, 1), (2, 2), (2, 3)):
            assert symmetry_check(k, m)

    def test_symmetry_range(self):
        """Simetria para k, m <= 6."""
        for k in range(1, 7):
            for m in range(1, 7):
                assert symmetry_check(k, m)

    def test_doubled_exponent_fails(self):
        """O expoente 2(k+m) não vale nem em (1,1)."""
        for k, m in ((1, 1), (2, 3), (4, 4)):
            assert not doubled_exponent_symmetry_check(k, m)

    def test_normalization(self):
        """Em t = 1 o valor é (L-1)^2 L^(-k-m) e a soma de cadeias vale 1."""
        for k in range(1, 7):
            for m in range(1, 7):
                assert normalization_check(k, m)

    def test_chain_sum_at_one(self):
        """A soma de cadeias de (6,6) vale 1 em t = 1."""
        assert closed_form_chain_sum(6, 6).substitute({T: 1}) == 1

    def test_tail_and_diagonal_rowsum(self):
        """A cauda e a identidade diagonal com rowsum."""
        for k in range(1, 7):
            assert tail_sum_check(k)
            assert diagonal_rowsum_check(k)

    def test_compare_receives_both_sides(self):
        """O comparador é chamado com os dois lados."""
        calls = []

        def compare(left, right):
            calls.append((left, right))
            return True

        assert symmetry_check(2, 2, compare)
        assert len(calls) == 1
