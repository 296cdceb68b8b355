import random

import pytest

from cadorder.errors import ParseError
from cadorder.polys import Polynomial, Variable, degree_in, make_variables, parse_polynomial, total_degree


def random_polynomial(rng, variables, max_degree=4, max_terms=5, bound=20):
    items = []
    for _ in range(rng.randint(1, max_terms)):
        exponents = tuple((v, rng.randint(0, max_degree)) for v in variables)
        items.append((exponents, rng.randint(-bound, bound)))
    return Polynomial.from_terms(items)


class TestDegrees:
    def test_total_degree_of_feature_example(self, poly):
        assert total_degree(poly("x0^4*x2 + 9*x1")) == 5

    def test_total_degree_of_constant(self, poly):
        assert total_degree(poly("7")) == 0

    def test_total_degree_of_mixed_terms(self, poly):
        assert total_degree(poly("x0*x1 + x1^3")) == 3

    def test_total_degree_of_zero_is_zero(self):
        assert total_degree(Polynomial.zero()) == 0

    def test_degree_in(self, poly, xs):
        p = poly("x0^4*x2 + 9*x1")
        assert degree_in(p, xs[0]) == 4
        assert degree_in(p, xs[1]) == 1
        assert degree_in(poly("5"), xs[0]) == 0


class TestCanonicalForm:
    def test_text_is_descending_graded_lex(self, poly):
        assert str(poly("9*x1 + x2*x0^4")) == "x0^4*x2 + 9*x1"
        assert str(poly("x2^2 + x1^2 + x0^2 - 1")) == "x0^2 + x1^2 + x2^2 - 1"

    def test_like_terms_merge_and_cancel(self, poly):
        assert poly("x0 + x1 - x0").terms == poly("x1").terms
        assert poly("x0*x1 - x1*x0").is_zero
        assert str(poly("x0 - x0")) == "0"

    def test_negative_coefficients_render_with_minus(self, poly):
        assert str(poly("-x0^2 + 3*x1 - 1")) == "-x0^2 + 3*x1 - 1"

    def test_recanonicalization_is_idempotent(self, xs):
        rng = random.Random(11)
        names = {v.display_name: v for v in xs}
        for _ in range(100):
            p = random_polynomial(rng, xs)
            again = parse_polynomial(str(p), names)
            assert again == p
            assert str(again) == str(p)

    def test_arithmetic(self, poly):
        x = poly("x0")
        y = poly("x1")
        assert (x + 1) * (x - 1) == poly("x0^2 - 1")
        assert (x + y) ** 2 == poly("x0^2 + 2*x0*x1 + x1^2")
        assert 3 - x == poly("3 - x0")
        assert -(x * y) == poly("-x0*x1")

    def test_relabel(self, poly, xs):
        p = poly("x0^2*x1 + x2")
        swapped = p.relabel({xs[0]: xs[2], xs[2]: xs[0]})
        assert swapped == poly("x2^2*x1 + x0")

    def test_variables_are_ordered_by_index(self):
        a, b = Variable(0, "y"), Variable(1, "a")
        assert a < b
        assert make_variables(2, prefix="z") == (Variable(0, "z0"), Variable(1, "z1"))


class TestParse:
    def test_undeclared_variable(self, xs):
        with pytest.raises(ParseError, match="undeclared"):
            parse_polynomial("x0 + y", {v.display_name: v for v in xs})

    def test_bad_character_reports_column(self, xs):
        with pytest.raises(ParseError) as exc:
            parse_polynomial("x0 + $", {v.display_name: v for v in xs}, line=4)
        assert exc.value.line == 4
        assert exc.value.column is not None

    def test_dangling_operator(self, poly):
        with pytest.raises(ParseError):
            poly("x0 +")

    def test_empty(self, poly):
        with pytest.raises(ParseError):
            poly("   ")
