from fractions import Fraction

import sympy

from alt1.kernel import GaussQ, Poly, RationalFn


def sym(p):
    """Independent conversion of a Poly / RationalFn / GaussQ into sympy."""
    if isinstance(p, RationalFn):
        return sym(p.num) / sym(p.denominator())
    if isinstance(p, GaussQ):
        return sympy.Rational(p.re.numerator, p.re.denominator) + sympy.I * sympy.Rational(p.im.numerator, p.im.denominator)
    p = Poly.coerce(p)
    out = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sym(c)
        for v, e in mono:
            term *= sympy.Symbol(v) ** e
        out += term
    return out


def sym_equal(a, b) -> bool:
    return sympy.simplify(sympy.expand(a - b)) == 0


def frac(s):
    return Fraction(s)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(VERDICTS):
        ok, detail = VERDICTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
