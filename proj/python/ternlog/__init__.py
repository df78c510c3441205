"""Symmetric ternary logic toolkit.

Values are the trits 0, 1, 2.  The concrete syntax uses ``~`` for rotate
(0->2, 1->0, 2->1) and the infix operators ``*`` (alpha), ``+`` (beta) and
``@`` (gamma), binding in that order from tightest to loosest.
"""

from ternlog._core import (
    Expr,
    alpha,
    beta,
    cell_expr,
    cell_table,
    cells,
    census_ok,
    census_report,
    cost,
    counterexample,
    equivalent,
    gamma,
    parse,
    rotate,
    simplify,
    simulate,
    synthesize,
    table,
    to_dot,
    to_json,
    verify_ok,
    verify_report,
)

__all__ = [
    "Expr",
    "alpha",
    "beta",
    "cell_expr",
    "cell_table",
    "cells",
    "census_ok",
    "census_report",
    "cost",
    "counterexample",
    "equivalent",
    "gamma",
    "parse",
    "rotate",
    "simplify",
    "simulate",
    "synthesize",
    "table",
    "to_dot",
    "to_json",
    "verify_ok",
    "verify_report",
]
