"""Exact arithmetic kernel: scalars, Laurent polynomials, rational functions,
truncated series and linear algebra."""

from .matrix import LinearSolution, Matrix, nilpotent_exp, rank, solve_linear
from .poly import LaurentError, NotDivisible, Poly, symbols
from .rational import RationalFn, rational_eq
from .scalar import ONE, ZERO, GaussQ, I, as_scalar
from .series import Add, Exp, FormalSeries, Log, Mul, Pow, Rat, SeriesError, series_expand

__all__ = [
    "GaussQ", "ONE", "ZERO", "I", "as_scalar",
    "Poly", "LaurentError", "NotDivisible", "symbols",
    "RationalFn", "rational_eq",
    "FormalSeries", "SeriesError", "series_expand", "Rat", "Add", "Mul", "Pow", "Exp", "Log",
    "Matrix", "LinearSolution", "solve_linear", "rank", "nilpotent_exp",
]
