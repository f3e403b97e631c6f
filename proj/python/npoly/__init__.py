"""Exact Hodge, Hodge-Stickelberger and generic Newton polygons of
exponential-sum L-functions.

All rational quantities cross the boundary as exact strings "a/b"; nothing is
ever rounded to floating point.
"""

from npoly._core import (
    BudgetError,
    ConvexPolygon,
    DegenerateError,
    MathError,
    ParseError,
    Polytope,
    average,
    convergence_table,
    dec_h_decomposition,
    direct_sum,
    dominates,
    gnp_1d,
    hodge_polygon,
    hp_1d,
    hs_1d_closed_form,
    hs_polygon,
    juxtapose,
    lambda_stickelberger,
    max_deviation,
    newton_polygon,
    poincare_polynomial,
    product,
    run_suite,
    suite_names,
    y_values,
)

__all__ = [
    "BudgetError",
    "ConvexPolygon",
    "DegenerateError",
    "MathError",
    "ParseError",
    "Polytope",
    "average",
    "convergence_table",
    "dec_h_decomposition",
    "direct_sum",
    "dominates",
    "gnp_1d",
    "hodge_polygon",
    "hp_1d",
    "hs_1d_closed_form",
    "hs_polygon",
    "juxtapose",
    "lambda_stickelberger",
    "max_deviation",
    "newton_polygon",
    "poincare_polynomial",
    "product",
    "run_suite",
    "suite_names",
    "y_values",
]
