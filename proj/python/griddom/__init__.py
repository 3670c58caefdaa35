"""Dominating sets on grid graphs: constructions, exact search, simulation."""

from ._core import (
    BudgetExhausted,
    FormulaNotApplicable,
    bounds,
    construct,
    construct_best,
    diagonalize,
    exact,
    gamma_formula,
    greedy,
    greedy_worst_case_formula,
    render,
    simulate,
    verify,
)

__all__ = [
    "BudgetExhausted",
    "FormulaNotApplicable",
    "bounds",
    "construct",
    "construct_best",
    "diagonalize",
    "exact",
    "gamma_formula",
    "greedy",
    "greedy_worst_case_formula",
    "render",
    "simulate",
    "verify",
]
