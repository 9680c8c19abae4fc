"""
Testes para o app kernel.
"""

import random

import pytest
import sympy

from kernel.exceptions import (
    DegeneratePoint,
    DivisionByZero,
    KernelError,
    NonBinomialDivisor,
    ParseError,
    ZeroSubstitution,
)
from kernel.factors import CanonFactor
from kernel.modular import rat_eq_modp
from kernel.polynomials import LaurentPoly
from kernel.rational import ONE, ZERO, FactoredRational, invert_poly, rat_eq_exact
from kernel.serializers import emit, emit_latex, parse_json, parse_signed_monomial, to_sympy
from kernel.variables import A, L, ONE_MONOMIAL, T, TAU, Monomial, VarId, lam

FR = FactoredRational
LAM2 = lam(2)


def poly(*terms):
    """poly((c, {'t': 1}), ...)"""
    return LaurentPoly([(Monomial.of(**exps), c) for c, exps in terms])


def random_monomial(rng, variables=(T, L), low=-3, high=3):
    while True:
        monomial = Monomial({v: rng.randint(low, high) for v in variables})
        if not monomial.is_one:
            return monomial


def random_poly(rng, max_terms=6):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        exps = {v: rng.randint(-5, 5) for v in (T, L, LAM2)}
        terms.append((Monomial(exps), rng.randint(-9, 9)))
    return LaurentPoly(terms)


def random_rational(rng):
    """Valor com numerador produto de binômios (sempre invertível)."""
    value = FR.from_monomial(random_monomial(rng, low=-2, high=2), rng.choice((1, -1)))
    for _ in range(rng.randint(0, 2)):
        value = value * FR.binomial(random_monomial(rng))
    for _ in range(rng.randint(0, 2)):
        value = value * FR.inverse_binomial(random_monomial(rng))
    return value


def g11():
    return (FR.var(L) - 1) ** 2 * FR.var(L, -2)


class TestMonomial:
    """Testes para variáveis e monômios."""

    def test_variable_order(self):
        """A ordem canônica é t < L < lambdas < A < tau."""
        assert sorted([TAU, A, lam(3), LAM2, L, T]) == [T, L, LAM2, lam(3), A, TAU]

    def test_variable_names_round_trip(self):
        """Nomes ASCII identificam as variáveis."""
        for var in (T, L, LAM2, lam(17), A, TAU):
            assert VarId.from_name(var.name) == var

    def test_lambda_one_is_not_free(self):
        """lambda_1 nunca é uma variável livre."""
        with pytest.raises(ValueError):
            lam(1)
        with pytest.raises(ParseError):
            VarId.from_name('lam1')

    def test_no_zero_exponents(self):
        """Expoentes nulos não são guardados."""
        monomial = Monomial.of(t=2) * Monomial.of(t=-2, L=1)
        assert monomial == Monomial.of(L=1)
        assert (monomial / monomial).is_one


class TestLaurentPoly:
    """Testes de anel para LaurentPoly."""

    def test_binomial_square(self):
        """(L - 1)^2 = L^2 - 2L + 1."""
        lm1 = poly((1, {'L': 1}), (-1, {}))
        assert lm1 * lm1 == poly((1, {'L': 2}), (-2, {'L': 1}), (1, {}))

    def test_additive_identity(self):
        """p + 0 = p."""
        p = poly((3, {'t': 1, 'L': -2}), (-1, {}))
        assert p + LaurentPoly() == p

    def test_difference_of_squares(self):
        """(1 - t/L)(1 + t/L) = 1 - t^2/L^2."""
        left = poly((1, {}), (-1, {'t': 1, 'L': -1}))
        right = poly((1, {}), (1, {'t': 1, 'L': -1}))
        assert left * right == poly((1, {}), (-1, {'t': 2, 'L': -2}))

    def test_ring_axioms_random(self):
        """Associatividade, comutatividade e distributividade em entradas aleatórias."""
        rng = random.Random(7)
        for _ in range(40):
            x, y, z = random_poly(rng), random_poly(rng), random_poly(rng)
            assert (x + y) + z == x + (y + z)
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert (x - x).is_zero()

    def test_divide_binomial(self):
        """Divisão exata por (1 - m) e detecção de resto."""
        body = Monomial.of(t=2, L=-1)
        product = poly((5, {'L': 3}), (-1, {'t': 1})) * LaurentPoly.binomial(body)
        assert product.divide_binomial(body) == poly((5, {'L': 3}), (-1, {'t': 1}))
        assert poly((1, {}), (1, {'t': 2, 'L': -1})).divide_binomial(body) is None

    @pytest.mark.parametrize('dividend,body', [
        (poly((1, {}), (1, {'t': 1})), Monomial.of(L=1)),
        (poly((1, {}), (1, {'A': 1})), Monomial.of(tau=1)),
        (poly((3, {'t': 2}), (-1, {'L': -1})), Monomial.of(L=2)),
        (poly((1, {}), (-1, {'lam2': 1})), Monomial.of(A=1, tau=2)),
    ])
    def test_divide_binomial_later_variable(self, dividend, body):
        """Resto com divisor numa variável posterior termina em None."""
        assert dividend.divide_binomial(body) is None

    def test_divide_binomial_later_variable_exact(self):
        """Quociente exato quando o divisor usa outra variável."""
        quotient = poly((1, {}), (2, {'t': 1}), (-1, {'A': 1}))
        body = Monomial.of(tau=1)
        assert (quotient * LaurentPoly.binomial(body)).divide_binomial(body) == quotient


class TestCanonFactor:
    """Testes de orientação dos fatores."""

    def test_rejects_non_canonical_body(self):
        """O primeiro expoente não nulo precisa ser positivo."""
        with pytest.raises(ValueError):
            CanonFactor(Monomial.of(t=-1, L=2))

    def test_orient_extracts_unit(self):
        """(1 - m) = (-m)(1 - m^-1) para m fora da orientação."""
        body = Monomial.of(L=-2, lam2=1)
        sign, unit, factor = CanonFactor.orient(body)
        assert factor.body == body.inverse()
        assert LaurentPoly.binomial(body) == factor.poly().scale(sign, unit)

    def test_flip_twice_is_identity(self):
        """Inverter a orientação duas vezes volta ao início e as unidades se cancelam."""
        rng = random.Random(11)
        for _ in range(30):
            body = random_monomial(rng, (T, L, LAM2))
            if body.leading_sign() < 0:
                body = body.inverse()
            factor = CanonFactor(body)
            sign, unit, flipped = factor.flip()
            assert LaurentPoly.binomial(flipped) == factor.poly().scale(sign, unit)
            back_sign, back_unit, canon = CanonFactor.orient(flipped)
            assert canon == factor
            assert LaurentPoly.binomial(body) == LaurentPoly.binomial(flipped).scale(sign, unit.inverse())
            assert (unit * unit.inverse()).is_one and sign * sign == 1
            assert back_sign == sign and back_unit == unit


class TestFactoredRational:
    """Testes de corpo, igualdade e normalização."""

    def test_zero_representation(self):
        """Zero tem numerador vazio, denominador vazio e unidade (+1, 1)."""
        x = g11()
        zero = x - x
        assert zero.is_zero()
        assert zero.den == {} and zero.sign == 1 and zero.unit.is_one
        assert (-ZERO).sign == 1

    def test_monomial_scaling(self):
        """(L-1)^2 L^-2 * L^-1 = (L-1)^2 L^-3."""
        assert g11() * FR.var(L, -1) == (FR.var(L) - 1) ** 2 * FR.var(L, -3)

    def test_common_denominator(self):
        """1/(1 - t^2/L) + 1 = (2 - t^2/L)/(1 - t^2/L)."""
        body = Monomial.of(t=2, L=-1)
        left = FR.inverse_binomial(body) + 1
        right = (2 - FR.from_monomial(body)) * FR.inverse_binomial(body)
        assert left == right

    def test_normalization_cancels_known_factors(self):
        """Nenhum fator canônico divide o numerador depois da normalização."""
        body = Monomial.of(t=1, L=-1)
        x = FR.binomial(body) ** 2 * FR.inverse_binomial(body) ** 3
        assert x.den == {CanonFactor(body): 1}
        assert x.num.is_one()

    def test_cross_multiplication_equality(self):
        """Valores iguais com fatores diferentes são reconhecidos."""
        lm1 = FR.var(L) - 1
        shared = Monomial.of(t=1, L=-1)
        diag = Monomial.of(t=2, L=-1)
        x = (lm1 ** 3 * FR.monomial(t=2, L=-5) * FR.binomial(shared)
             * FR.inverse_binomial(diag) * FR.inverse_binomial(shared))
        y = lm1 ** 3 * FR.monomial(t=2, L=-5) * FR.inverse_binomial(diag)
        assert rat_eq_exact(x, y)
        assert rat_eq_exact(x, x)
        assert not rat_eq_exact(g11(), (FR.var(L) - 1) ** 2 * FR.var(L, -3))

    def test_division_and_inverse(self):
        """x / x = 1 e divisão por zero levanta erro."""
        x = g11()
        assert x / x == 1
        with pytest.raises(DivisionByZero):
            x / ZERO
        with pytest.raises(ZeroDivisionError):
            ONE / 0

    def test_product_keeps_foreign_factor(self):
        """(1 + t) / (1 - L) não simplifica e o produto termina."""
        value = FR(poly((1, {}), (1, {'t': 1}))) * FR.inverse_binomial(Monomial.of(L=1))
        assert value.den == {CanonFactor(Monomial.of(L=1)): 1}
        assert value * FR.binomial(Monomial.of(L=1)) == FR(poly((1, {}), (1, {'t': 1})))

    def test_non_binomial_divisor(self):
        """Numerador que não se decompõe em binômios não pode ser invertido."""
        with pytest.raises(NonBinomialDivisor):
            ONE / FR(poly((1, {}), (2, {'t': 1})))
        with pytest.raises(KernelError):
            ONE / 2

    def test_invert_cyclotomic_remainders(self):
        """1 + m e 1 + m + m^2 são invertidos pela forma fatorada."""
        m = Monomial.of(t=1, L=-1)
        n = Monomial.of(L=2)
        for divisor in (
            LaurentPoly({ONE_MONOMIAL: 1, m: 1}),
            LaurentPoly({ONE_MONOMIAL: 1, m: 1, m ** 2: 1}),
            LaurentPoly({ONE_MONOMIAL: 1, m: 1}) * LaurentPoly({ONE_MONOMIAL: 1, n: 1}),
        ):
            assert invert_poly(divisor) * FR(divisor) == 1

    def test_field_axioms_random(self):
        """Axiomas de corpo em valores aleatórios com numeradores binomiais."""
        rng = random.Random(2024)
        for _ in range(30):
            x, y, z = random_rational(rng), random_rational(rng), random_rational(rng)
            assert x + y == y + x
            assert (x + y) + z == x + (y + z)
            assert x * (y + z) == x * y + x * z
            assert x * (1 / x) == 1
            assert (x / y) * y == x
            assert (x + y) - y == x

    def test_power(self):
        """Potências negativas usam o inverso."""
        x = FR.inverse_binomial(Monomial.of(t=1))
        assert x ** -2 == FR.binomial(Monomial.of(t=1)) ** 2
        assert x ** 0 == 1


class TestSubstitution:
    """Testes do homomorfismo de substituição."""

    def test_inversion_of_base_value(self):
        """(L-1)^2 L^-2 com L -> 1/L vale (L-1)^2."""
        image = g11().substitute({L: Monomial.var(L, -1)})
        assert image == (FR.var(L) - 1) ** 2

    def test_empty_substitution(self):
        """Substituição vazia devolve o próprio valor."""
        x = g11()
        assert x.substitute({}) is x

    def test_lambda_to_l(self):
        """1 - lambda_2 L^-2 com lambda_2 -> L vale 1 - L^-1."""
        x = FR.binomial(Monomial.of(lam2=1, L=-2))
        assert x.substitute({LAM2: Monomial.var(L)}) == FR.binomial(Monomial.of(L=-1))

    def test_zero_image(self):
        """Imagem nula levanta ZeroSubstitution."""
        with pytest.raises(ZeroSubstitution):
            g11().substitute({L: 0})

    def test_vanishing_factor(self):
        """Um fator que vira (1 - 1) é divisão por zero."""
        x = FR.inverse_binomial(Monomial.of(t=1, L=-1))
        with pytest.raises(DivisionByZero):
            x.substitute({T: Monomial.var(L)})

    def test_signed_monomial_image(self):
        """1/(1 - t) com t -> -L vale 1/(1 + L)."""
        x = FR.inverse_binomial(Monomial.of(t=1))
        image = x.substitute({T: (-1, Monomial.var(L))})
        assert image * (1 + FR.var(L)) == 1

    def test_rational_image(self):
        """Imagens racionais passam pelo caminho geral."""
        x = FR.var(T, 2) + FR.var(L)
        image = x.substitute({T: FR.inverse_binomial(Monomial.of(L=1))})
        expected = FR.inverse_binomial(Monomial.of(L=1)) ** 2 + FR.var(L)
        assert image == expected

    @pytest.mark.parametrize('sigma', [
        {T: Monomial.var(T, -1), L: Monomial.var(L, -1)},
        {T: Monomial.var(T, -1), L: Monomial.of(t=1, L=2)},
        {T: (-1, Monomial.var(T, -1))},
    ])
    def test_homomorphism(self, sigma):
        """substitute(x*y) = substitute(x)*substitute(y)."""
        rng = random.Random(5)
        for _ in range(15):
            x, y = random_rational(rng), random_rational(rng)
            assert (x * y).substitute(sigma) == x.substitute(sigma) * y.substitute(sigma)
            assert (x + y).substitute(sigma) == x.substitute(sigma) + y.substitute(sigma)


class TestDerivative:
    """Testes da derivada parcial."""

    def test_lambda_factor(self):
        """d/dlambda_2 [(lambda_2 - 1)/(1 - lambda_2 L^-2)] = (1 - L^-2)/(1 - lambda_2 L^-2)^2."""
        body = Monomial.of(lam2=1, L=-2)
        x = (FR.var(LAM2) - 1) * FR.inverse_binomial(body)
        expected = FR.binomial(Monomial.of(L=-2)) * FR.inverse_binomial(body) ** 2
        assert x.derivative(LAM2) == expected

    def test_constant(self):
        """Derivada de valor sem a variável é zero."""
        assert g11().derivative(LAM2).is_zero()

    def test_power_rule(self):
        """d/dtau [A tau^2] = 2 A tau."""
        assert FR.monomial(A=1, tau=2).derivative(TAU) == 2 * FR.monomial(A=1, tau=1)

    def test_product_rule_random(self):
        """D(xy) = D(x) y + x D(y)."""
        rng = random.Random(99)
        for _ in range(25):
            x, y = random_rational(rng), random_rational(rng)
            for var in (T, L):
                assert (x * y).derivative(var) == x.derivative(var) * y + x * y.derivative(var)

    def test_against_sympy(self):
        """A derivada coincide com a do sympy."""
        rng = random.Random(3)
        t_symbol = sympy.Symbol('t', positive=True)
        for _ in range(10):
            x = random_rational(rng)
            difference = to_sympy(x.derivative(T)) - sympy.diff(to_sympy(x), t_symbol)
            assert sympy.cancel(difference) == 0


class TestModularEquality:
    """Testes do teste probabilístico em F_p."""

    def test_agrees_with_exact(self):
        """Valores exatamente iguais passam no teste modular."""
        shared = Monomial.of(t=1, L=-1)
        x = FR.binomial(shared) * FR.inverse_binomial(shared) * g11()
        assert rat_eq_modp(x, g11(), trials=20, seed=1)

    def test_constant_offset(self):
        """x e x + 1 são distintos."""
        assert not rat_eq_modp(g11(), g11() + 1, trials=20, seed=1)

    def test_no_false_negatives(self):
        """Nunca falso quando a igualdade exata vale, para várias sementes."""
        rng = random.Random(17)
        for seed in range(5):
            x, y = random_rational(rng), random_rational(rng)
            assert rat_eq_modp(x * y, y * x, seed=seed)
            assert rat_eq_modp((x + y) * y, x * y + y * y, seed=seed)

    def test_deterministic(self):
        """Mesma semente, mesmo veredito."""
        x = random_rational(random.Random(1))
        y = random_rational(random.Random(2))
        assert rat_eq_modp(x, y, seed=4) == rat_eq_modp(x, y, seed=4)

    def test_degenerate_points(self):
        """Primo pequeno demais esgota as amostras."""
        x = FR.inverse_binomial(Monomial.of(t=1))
        with pytest.raises(DegeneratePoint):
            rat_eq_modp(x, x, trials=1, seed=0, prime=2)

    def test_reads_settings(self, settings):
        """Primo e número de pontos vêm das configurações."""
        settings.ARCMOT_MODP_TRIALS = 3
        settings.ARCMOT_MODP_PRIME = 101
        assert rat_eq_modp(g11(), g11())


class TestSerializers:
    """Testes de JSON, LaTeX e do leitor de monômios."""

    def test_json_canonical_form(self):
        """(L-1)^2 L^-2 tem a forma JSON documentada."""
        assert emit(g11(), 'json') == (
            '{"unit":{"sign":1,"exps":{"L":-2}},'
            '"num":[{"c":1,"exps":{"L":2}},{"c":-2,"exps":{"L":1}},{"c":1,"exps":{}}],'
            '"den":[]}'
        )

    def test_json_round_trip(self):
        """parse(emit(x)) = x, inclusive com denominador."""
        rng = random.Random(8)
        for _ in range(10):
            x = random_rational(rng)
            parsed = parse_json(emit(x))
            assert parsed == x
            assert emit(parsed) == emit(x)

    @pytest.mark.parametrize('text', [
        '{not json',
        '[]',
        '{"unit":{"sign":2,"exps":{}},"num":[],"den":[]}',
        '{"unit":{"sign":1,"exps":{"q":1}},"num":[],"den":[]}',
        '{"unit":{"sign":1,"exps":{}},"num":[{"c":1,"exps":{}}],"den":[{"exps":{"t":-1},"mult":1}]}',
        '{"unit":{"sign":1,"exps":{}},"num":[{"c":1}],"den":[]}',
    ])
    def test_parse_errors(self, text):
        """JSON malformado levanta ParseError."""
        with pytest.raises(ParseError):
            parse_json(text)

    def test_latex_uses_display_names(self):
        """LaTeX usa \\mathbb{L} e \\lambda_i."""
        text = emit_latex(g11())
        assert r'\mathbb{L}' in text
        assert r'\lambda_{2}' in emit_latex(FR.var(LAM2) - 1)
        assert emit_latex(ZERO) == '0'

    def test_to_sympy_oracle(self):
        """to_sympy preserva o valor."""
        L_symbol = sympy.Symbol('L', positive=True)
        assert sympy.cancel(to_sympy(g11()) - (L_symbol - 1) ** 2 / L_symbol ** 2) == 0

    def test_signed_monomial_parser(self):
        """Monômios com sinal da gramática de especialização."""
        assert parse_signed_monomial('L') == (1, Monomial.of(L=1))
        assert parse_signed_monomial('-A*tau^4') == (-1, Monomial.of(A=1, tau=4))
        assert parse_signed_monomial('1') == (1, ONE_MONOMIAL)
        assert parse_signed_monomial('A*tau^i', index=3) == (1, Monomial.of(A=1, tau=3))
        for bad in ('', 'x', 'L^', '2*L', 'lam1'):
            with pytest.raises(ParseError):
                parse_signed_monomial(bad)
