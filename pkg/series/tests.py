"""
Testes para o app series.
"""

import pytest

from deformed.systems import h_chain_sum
from integrals.checks import symmetry_check
from integrals.recurrence import g_recurrence, rowsum
from integrals.terms import L_MINUS_ONE, inv, mono
from kernel.rational import FactoredRational
from kernel.variables import A, L, TAU, Monomial, lam
from series.derivatives import (
    check_chain_rule,
    check_lambda_derivative,
    check_lambda_higher_derivative,
    check_z_ode,
    check_z_pde_coefficient,
    lambda_derivative_rhs,
    lambda_higher_derivative,
    lambda_higher_derivative_rhs,
    rescale,
    z_ode_rhs,
    z_value,
)
from series.exceptions import InvalidSequence
from series.window import SeriesWindow, check_f_symmetry, check_functional_eq, functional_eq_rhs

Q2 = Monomial.var(L, -2)


class TestSeriesWindow:
    """Testes da janela de coeficientes."""

    def test_coefficients(self):
        """Os coeficientes são os valores G(k, m)."""
        window = SeriesWindow(3)
        assert window[2, 3] == g_recurrence(2, 3)
        assert len(list(window.cells())) == 9

    def test_outside_window(self):
        """Índices fora da janela levantam KeyError."""
        window = SeriesWindow(2)
        with pytest.raises(KeyError):
            window[3, 1]


class TestFunctionalEquation:
    """Testes da equação funcional de F."""

    def test_diagonal_one(self):
        """G(1,1) = (L-1) L^-1 rowsum(1)."""
        window = SeriesWindow(1)
        assert rowsum(1) == L_MINUS_ONE * mono(0, -1)
        assert functional_eq_rhs(window, 1, 1) == L_MINUS_ONE ** 2 * mono(0, -2)

    def test_off_diagonal_maps(self):
        """(k, m) fora da diagonal vem de (k, m-k) ou de (m, k-m)."""
        window = SeriesWindow(5)
        assert functional_eq_rhs(window, 2, 5) == mono(2, -2) * g_recurrence(2, 3)
        assert functional_eq_rhs(window, 5, 2) == mono(2, -2) * g_recurrence(2, 3)

    def test_report(self):
        """Todas as células passam até N = 6."""
        report = check_functional_eq(6)
        assert report.passed
        assert report.summary()['cells'] == 36
        assert report.first_failure is None

    @pytest.mark.slow
    def test_report_large(self):
        """Todas as células passam até N = 8."""
        assert check_functional_eq(8).passed


class TestFSymmetry:
    """Testes da simetria de F."""

    def test_report(self):
        """A simetria de F vale até N = 6."""
        report = check_f_symmetry(6)
        assert report.passed
        assert len(report.cells) == 36

    def test_matches_coefficient_symmetry(self):
        """Cada célula coincide com a simetria coeficiente a coeficiente."""
        report = check_f_symmetry(4)
        for cell in report.cells:
            assert cell.passed == symmetry_check(*cell.cell)


class TestLambdaDerivative:
    """Testes da derivada primeira de H nos lambdas."""

    def test_two_two(self):
        """dH(2,2)/d lambda_2 = (1 - L^-2) L^-1 / (1 - lambda_2 L^-2)^2."""
        expected = (1 - mono(0, -2)) * mono(0, -1) * inv(Q2 * Monomial.var(lam(2))) ** 2
        assert h_chain_sum(2, 2).derivative(lam(2)) == expected
        assert lambda_derivative_rhs(2, 2, 2) == expected
        assert check_lambda_derivative(2, 2, 2)

    def test_vanishing(self):
        """Com alpha fora de mdc(k, m) a derivada é zero."""
        assert lambda_derivative_rhs(3, 5, 2).is_zero()
        assert check_lambda_derivative(3, 5, 2)
        assert check_lambda_derivative(4, 6, 4)

    def test_four_four(self):
        """(4,4) com alpha = 2 envolve H(2,2) reescalado."""
        rescaled = rescale(h_chain_sum(2, 2), 2)
        assert rescaled.lambda_indices() == {4}
        assert check_lambda_derivative(4, 4, 2)
        assert check_lambda_derivative(4, 4, 4)

    def test_range(self):
        """Todas as combinações k, m, alpha <= 6."""
        for k in range(1, 7):
            for m in range(k, 7):
                for alpha in range(2, 7):
                    assert check_lambda_derivative(k, m, alpha), (k, m, alpha)

    def test_invalid_alpha(self):
        """alpha precisa ser >= 2."""
        with pytest.raises(InvalidSequence):
            lambda_derivative_rhs(2, 2, 1)


class TestLambdaHigherDerivative:
    """Testes das derivadas mistas."""

    @pytest.mark.parametrize('k,m', [(4, 4), (4, 8)])
    def test_two_four(self, k, m):
        """Índices (2, 4), ordens (1, 1)."""
        assert check_lambda_higher_derivative(k, m, (2, 4), (1, 1))

    def test_second_order(self):
        """Derivada segunda em lambda_2 de H(4,4) com o fator corrigido."""
        assert check_lambda_higher_derivative(4, 4, (2,), (2,))

    def test_literal_prefactor_fails(self):
        """O prefator L^(alpha(k-1)) sem fatorial só vale na ordem 1."""
        assert not check_lambda_higher_derivative(4, 4, (2,), (2,), literal=True)
        assert check_lambda_higher_derivative(4, 4, (2,), (1,), literal=True)

    def test_broken_divisibility_vanishes(self):
        """(2, 3) em (6,6): a derivada mista é zero."""
        assert lambda_higher_derivative_rhs(6, 6, (2, 3), (1, 1)).is_zero()
        assert lambda_higher_derivative(6, 6, (2, 3), (1, 1)).is_zero()
        assert check_lambda_higher_derivative(6, 6, (2, 3), (1, 1))

    def test_first_order_agrees(self):
        """Com um índice e ordem 1 a fórmula é a da derivada primeira."""
        assert lambda_higher_derivative_rhs(4, 4, (2,), (1,)) == lambda_derivative_rhs(4, 4, 2)

    @pytest.mark.parametrize('alphas,orders', [
        ((4, 2), (1, 1)),
        ((2, 2), (1, 1)),
        ((1,), (1,)),
        ((2,), (0,)),
        ((2, 4), (1,)),
        ((), ()),
    ])
    def test_invalid_sequences(self, alphas, orders):
        """Sequências malformadas levantam InvalidSequence."""
        with pytest.raises(InvalidSequence):
            lambda_higher_derivative_rhs(4, 4, alphas, orders)


class TestZ:
    """Testes da especialização lambda_i = A tau^i."""

    def test_z_one(self):
        """Z_1 = 1."""
        assert z_value(1) == 1

    def test_z_two(self):
        """Z_2 = (A tau^2 - 1) L^-1 / (1 - A tau^2 L^-2)."""
        a_tau2 = Monomial({A: 1, TAU: 2})
        expected = (FactoredRational.from_monomial(a_tau2) - 1) * mono(0, -1) * inv(a_tau2 * Q2)
        assert z_value(2) == expected

    def test_normalization(self):
        """A = L e tau = 1 dão 1."""
        for n in range(1, 7):
            assert z_value(n).substitute({A: Monomial.var(L), TAU: 1}) == 1

    def test_ode_one(self):
        """n = 1: os dois lados são zero."""
        assert z_ode_rhs(1).is_zero()
        assert check_z_ode(1)

    def test_ode_range(self):
        """A equação em tau vale para n <= 8."""
        for n in range(1, 9):
            assert check_z_ode(n), n

    def test_pde_coefficients(self):
        """Coeficientes da equação em tau para k, m <= 6."""
        for k in range(1, 7):
            for m in range(k, 7):
                assert check_z_pde_coefficient(k, m), (k, m)

    def test_pde_diagonal_is_ode(self):
        """Na diagonal o coeficiente é a equação de Z_n."""
        assert check_z_pde_coefficient(2, 2) and check_z_ode(2)

    def test_chain_rule(self):
        """A derivada de Z_n pela regra da cadeia nos lambdas."""
        for n in (1, 2, 4, 6):
            assert check_chain_rule(n), n

