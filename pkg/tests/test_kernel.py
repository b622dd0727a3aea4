from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from alt1.kernel import (ONE, ZERO, Add, Exp, FormalSeries, GaussQ, I, LaurentError, Log, Matrix, Mul, NotDivisible,
                         Poly, Pow, Rat, RationalFn, nilpotent_exp, rank, rational_eq, series_expand, solve_linear)

from conftest import sym, sym_equal

x, y, z = Poly.var("x"), Poly.var("y"), Poly.var("z")

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monos = st.tuples(st.integers(0, 3), st.integers(0, 2))


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(monos, small, max_size=4))
    p = Poly.const(0)
    for (a, b), c in terms.items():
        p = p + Poly.const(c) * x ** a * y ** b
    return p


@st.composite
def gauss(draw):
    return GaussQ(draw(small), draw(small))


# scalars -------------------------------------------------------------------------

@given(gauss(), gauss(), gauss())
def test_gaussq_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * (ONE / a) == ONE


def test_gaussq_imaginary_unit():
    assert I * I == -ONE
    assert (GaussQ(1, 1) ** 2) == GaussQ(0, 2)
    assert complex(GaussQ(Fraction(1, 2), -3)) == complex(0.5, -3)


@given(gauss())
def test_gaussq_parse_roundtrip(q):
    assert GaussQ.parse(str(q)) == q


def test_gaussq_parse_forms():
    assert GaussQ.parse("1/2+3/5i") == GaussQ(Fraction(1, 2), Fraction(3, 5))
    assert GaussQ.parse("-I/2") == GaussQ(0, Fraction(-1, 2))
    with pytest.raises(ValueError):
        GaussQ.parse("")


# polynomials ---------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_poly_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == Poly.const(0)


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_poly_product_matches_sympy(p, q):
    assert sympy.expand(sym(p * q) - sym(p) * sym(q)) == 0


@settings(max_examples=60, deadline=None)
@given(polys())
def test_poly_diff_matches_sympy(p):
    assert sympy.expand(sym(p.diff("x")) - sympy.diff(sym(p), sympy.Symbol("x"))) == 0
    assert sympy.expand(sym(p.diff("y", 2)) - sympy.diff(sym(p), sympy.Symbol("y"), 2)) == 0


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_divexact_inverts_multiplication(p, q):
    if q.is_zero():
        return
    assert (p * q).divexact(q) == p


def test_divexact_raises_when_not_divisible():
    with pytest.raises(NotDivisible):
        (x * x + 1).divexact(x + 1)


def test_laurent_variable():
    E = Poly.var("E", laurent=True)
    assert E * E.inverse() == Poly.const(1)
    assert (E ** -2).diff("E") == E ** -3 * -2
    with pytest.raises(LaurentError):
        x ** -1


def test_subs_and_evaluate():
    p = x ** 2 * y - 3 * z
    assert p.subs({"x": y + 1}) == (y + 1) ** 2 * y - 3 * z
    assert p.evaluate({"x": 2, "y": Fraction(1, 2), "z": 1}) == GaussQ(-1)


def test_pretty_printing():
    p = x ** 4 - 6 * x ** 2 + 3
    assert p.pretty() == "x⁴ − 6x² + 3"
    assert str(p) == "x^4 - 6*x^2 + 3"


# rational functions ------------------------------------------------------------------

def test_rational_cancellation():
    assert str(RationalFn(x * x - 1, x - 1)) == "x + 1"
    r = RationalFn(1, x) + RationalFn(1, y)
    assert sym_equal(sym(r), 1 / sympy.Symbol("x") + 1 / sympy.Symbol("y"))


@settings(max_examples=40, deadline=None)
@given(polys(), polys(), polys())
def test_rational_field_ops_match_sympy(p, q, r):
    if q.is_zero() or r.is_zero():
        return
    a, b = RationalFn(p, q), RationalFn(q, r)
    assert sym_equal(sym(a + b), sym(p) / sym(q) + sym(q) / sym(r))
    assert sym_equal(sym(a * b), sym(p) / sym(r))
    assert rational_eq(a * b, RationalFn(p, r))


def test_rational_diff_quotient_rule():
    r = RationalFn(x, 1 - x * y)
    X, Y = sympy.symbols("x y")
    assert sym_equal(sym(r.diff("x")), sympy.diff(X / (1 - X * Y), X))


def test_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RationalFn(x, 0)


# series -----------------------------------------------------------------------

def test_series_exp_coefficients():
    s = series_expand(Exp(Rat(x)), ["x"], 7)
    for n in range(8):
        assert s.coeff((n,)) == Poly.const(Fraction(1, sympy.factorial(n)))


def test_series_log():
    s = series_expand(Log(Rat(1 + x)), ["x"], 6)
    for n in range(1, 7):
        assert s.coeff((n,)) == Poly.const(Fraction((-1) ** (n + 1), n))


def test_series_symbolic_power_matches_sympy():
    B2, V2 = Poly.var("B2"), Poly.var("V2")
    s = series_expand(Pow(Rat(1 - B2 * V2), x * -2), ["B2", "V2"], 3)
    b, v, X = sympy.symbols("B2 V2 x")
    ref = sympy.series((1 - b * v) ** (-2 * X), b, 0, 4).removeO()
    for n in range(4):
        c = sympy.expand(ref.coeff(b, n).coeff(v, n))
        assert sympy.expand(sym(s.coeff((n, n))) - c) == 0


def test_series_product_of_exp_and_rational():
    e = Mul((Exp(Rat(RationalFn(y, 1 - y))), Rat(RationalFn(1, 1 - y))))
    s = series_expand(e, ["y"], 5)
    Y = sympy.Symbol("y")
    ref = sympy.series(sympy.exp(Y / (1 - Y)) / (1 - Y), Y, 0, 6).removeO()
    assert sympy.expand(sym(s.to_poly()) - ref) == 0


# linear algebra -------------------------------------------------------------

def test_solve_linear_unique():
    A = Matrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]]).map(GaussQ)
    b = [GaussQ(1), GaussQ(2), GaussQ(3)]
    sol = solve_linear(A, b)
    ref = sympy.Matrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]]).LUsolve(sympy.Matrix([1, 2, 3]))
    assert sol.status == "solution"
    assert [sym(v) for v in sol.particular] == list(ref)


def test_solve_linear_infeasible_witness():
    rows = [[1, 1], [2, 2]]
    sol = solve_linear(rows, [GaussQ(1), GaussQ(3)])
    assert sol.status == "infeasible"
    y = sol.witness
    assert all(sum((y[i] * rows[i][j] for i in range(2)), ZERO) == ZERO for j in range(2))
    assert y[0] * 1 + y[1] * 3 != ZERO


def test_solve_linear_kernel():
    sol = solve_linear([[1, 2, 3], [2, 4, 6]])
    assert sol.rank == 1 and len(sol.kernel) == 2
    for v in sol.kernel:
        assert v[0] + 2 * v[1] + 3 * v[2] == ZERO


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=3, max_size=5))
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()


def test_nilpotent_exp_matches_sympy():
    N = Matrix([[0, 1, 2, 0], [0, 0, 3, 1], [0, 0, 0, 5], [0, 0, 0, 0]]).map(GaussQ)
    got = nilpotent_exp(N)
    ref = sympy.Matrix([[0, 1, 2, 0], [0, 0, 3, 1], [0, 0, 0, 5], [0, 0, 0, 0]]).exp()
    assert all(sym(got[i, j]) == ref[i, j] for i in range(4) for j in range(4))
    with pytest.raises(ValueError):
        nilpotent_exp(Matrix([[1, 0], [0, 0]]).map(GaussQ))
