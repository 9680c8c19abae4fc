"""
Testes para o app deformed.
"""

import json

import pytest

from deformed.checks import (
    degeneration_check,
    h_consistency_check,
    lambda_one_check,
    lambda_support_check,
    routes_def_check,
    symmetry_def_check,
    t1_check,
)
from deformed.context import LambdaContext
from deformed.exceptions import LambdaSpecError
from deformed.systems import (
    ALL_L,
    g_def_closed_form,
    g_def_recurrence,
    g_def_t1,
    h_chain_sum,
    h_from_definition,
    lambda_support,
)
from integrals.recurrence import g_recurrence
from integrals.terms import L_MINUS_ONE, body, inv, mono
from kernel.rational import FactoredRational
from kernel.variables import A, L, TAU, Monomial, lam

LAM2 = FactoredRational.var(lam(2))


def h22():
    return (LAM2 - 1) * mono(0, -1) * inv(body(0, -2, lam2=1))


class TestLambdaContext:
    """Testes do contexto de especialização."""

    def test_symbolic_by_default(self):
        """Sem atribuição o contexto não substitui nada."""
        ctx = LambdaContext()
        assert ctx.mode == 'symbolic'
        value = h22()
        assert ctx.specialize(value) is value

    def test_from_spec(self):
        """Lê a gramática de monômios com sinal."""
        ctx = LambdaContext.from_spec({'lam': {'2': 'L', '4': 'A*tau^4'}})
        assert ctx.mode == 'specialized'
        assert ctx.image(2) == (1, Monomial.var(L))
        assert ctx.image(4) == (1, Monomial({A: 1, TAU: 4}))
        assert ctx.image(3) is None

    def test_default_rule(self):
        """A regra padrão cobre os índices não listados."""
        ctx = LambdaContext.from_spec({'lam': {'2': '-L'}, 'default': 'A*tau^i'})
        assert ctx.image(2) == (-1, Monomial.var(L))
        assert ctx.image(5) == (1, Monomial({A: 1, TAU: 5}))

    def test_from_file(self, tmp_path):
        """Lê a especificação de um arquivo JSON."""
        path = tmp_path / 'lam.json'
        path.write_text(json.dumps({'lam': {'2': 'L'}}), encoding='utf-8')
        assert LambdaContext.from_file(path).image(2) == (1, Monomial.var(L))

    @pytest.mark.parametrize('spec', [
        [],
        {'lam': {'1': 'L'}},
        {'lam': {'x': 'L'}},
        {'lam': {'2': 'q'}},
        {'lam': {'2': 3}},
        {'lam': {'2': 'L'}, 'extra': 1},
        {'default': 'B'},
    ])
    def test_invalid_specs(self, spec):
        """Especificações malformadas levantam LambdaSpecError."""
        with pytest.raises(LambdaSpecError):
            LambdaContext.from_spec(spec)

    def test_invalid_file(self, tmp_path):
        """Arquivo ausente ou JSON inválido."""
        path = tmp_path / 'bad.json'
        path.write_text('{', encoding='utf-8')
        with pytest.raises(LambdaSpecError):
            LambdaContext.from_file(path)
        with pytest.raises(LambdaSpecError):
            LambdaContext.from_file(tmp_path / 'missing.json')


class TestDeformedValues:
    """Testes dos valores deformados."""

    def test_base_value(self):
        """G(1,1) não é deformado."""
        assert g_def_recurrence(1, 1) == L_MINUS_ONE ** 2 * mono(0, -2)

    def test_diagonal_two(self):
        """G(2,2) = (lambda_2 - 1)(L-1)^2 t^2 L^-5 / (1 - lambda_2 t^2 L^-2)."""
        expected = (LAM2 - 1) * L_MINUS_ONE ** 2 * mono(2, -5) * inv(body(2, -2, lam2=1))
        assert g_def_recurrence(2, 2) == expected
        assert g_def_closed_form(2, 2) == expected

    def test_gcd_one_is_lambda_free(self):
        """mdc 1 dá o monômio não deformado."""
        assert g_def_closed_form(3, 5) == L_MINUS_ONE ** 2 * mono(8, -8)
        assert lambda_support(3, 5) == set()

    def test_four_four(self):
        """(4,4) envolve lambda_2 e lambda_4."""
        assert routes_def_check(4, 4)
        assert lambda_support(4, 4) == {2, 4}

    def test_routes(self):
        """Recorrência deformada = forma fechada para k, m <= 6."""
        for k in range(1, 7):
            for m in range(k, 7):
                assert routes_def_check(k, m), (k, m)

    def test_degeneration(self):
        """lambda_i = L reproduz G(k,m)."""
        for k in range(1, 7):
            for m in range(k, 7):
                assert degeneration_check(k, m), (k, m)
        assert g_def_closed_form(6, 6, ALL_L) == g_recurrence(6, 6)

    def test_lambda_support(self):
        """Só lambda_d com d | mdc aparece."""
        for k in range(1, 9):
            for m in range(1, 9):
                assert lambda_support_check(k, m)
        assert lambda_support(6, 12) == {2, 3, 6}


class TestRatio:
    """Testes de H(k,m)."""

    def test_gcd_one(self):
        """mdc 1 dá H = 1."""
        assert h_chain_sum(2, 3) == 1
        assert h_chain_sum(1, 1) == 1

    def test_two_two(self):
        """H(2,2) = (lambda_2 - 1) L^-1 / (1 - lambda_2 L^-2)."""
        assert h_chain_sum(2, 2) == h22()
        assert h_chain_sum(2, 2, ALL_L) == 1

    @pytest.mark.parametrize('k,m', [(2, 2), (4, 6), (6, 6)])
    def test_definition_matches_chain_sum(self, k, m):
        """A razão de definição coincide com a soma de cadeias."""
        assert h_from_definition(k, m) == h_chain_sum(k, m)

    def test_all_l_context_is_one(self):
        """No contexto todo-L a razão vale 1."""
        for k in range(1, 7):
            assert h_from_definition(k, 6, ALL_L) == 1

    def test_consistency_range(self):
        """Consistência de H para k, m <= 6."""
        for k in range(1, 7):
            for m in range(k, 7):
                assert h_consistency_check(k, m)

    def test_partial_context(self):
        """Especializar só lambda_2 mantém lambda_4 simbólico."""
        ctx = LambdaContext({2: Monomial.var(L)})
        value = h_chain_sum(4, 4, ctx)
        assert value.lambda_indices() == {4}


class TestDeformedChecks:
    """Testes das identidades do sistema deformado."""

    @pytest.mark.parametrize('k,m', [(1, 1), (2, 2), (4, 6), (3, 3), (6, 6)])
    def test_symmetry(self, k, m):
        """Simetria com lambdas invertidos."""
        assert symmetry_def_check(k, m)

    def test_t1_formula(self):
        """Fórmula em t = 1."""
        expected = L_MINUS_ONE ** 2 * mono(0, -4) * h22()
        assert g_def_t1(2, 2) == expected
        assert g_def_t1(1, 1) == L_MINUS_ONE ** 2 * mono(0, -2)
        for k in range(1, 7):
            for m in range(k, 7):
                assert t1_check(k, m)

    def test_lambda_one(self):
        """A equação diagonal em k = 1 força lambda_1 = L."""
        assert lambda_one_check(8)
