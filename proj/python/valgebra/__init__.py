"""Separative valuation algebra kernel.

Combination, projection, quotient-group division, conditionals and the
compositional operator, instantiated for probability potentials, Gaussian
potentials and Dempster-Shafer belief functions.
"""

from ._core import (
    AlgebraError,
    DensityElement,
    Domain,
    LatticeContext,
    Quotient,
    Valuation,
    approx_equal,
    combine,
    compose,
    compose_elements,
    conditional,
    density_equal,
    dominates,
    embed,
    eval_model,
    gaussian,
    invert,
    join,
    leq,
    mass,
    meet,
    member,
    multiply,
    partition_context,
    potential,
    project,
    project_element,
    project_quotient,
    quotient_equal,
    reduce,
    run_suite,
    subset_context,
    try_reduce,
    unit,
)

__all__ = [
    "AlgebraError",
    "DensityElement",
    "Domain",
    "LatticeContext",
    "Quotient",
    "Valuation",
    "approx_equal",
    "combine",
    "compose",
    "compose_elements",
    "conditional",
    "density_equal",
    "dominates",
    "embed",
    "eval_model",
    "gaussian",
    "invert",
    "join",
    "leq",
    "mass",
    "meet",
    "member",
    "multiply",
    "partition_context",
    "potential",
    "project",
    "project_element",
    "project_quotient",
    "quotient_equal",
    "reduce",
    "run_suite",
    "subset_context",
    "try_reduce",
    "unit",
]
