"""Pattern unavoidability toolkit.

Decides whether word patterns are unavoidable, emits and verifies reduction
certificates, maps 3-CNF formulas to patterns whose unavoidability matches
satisfiability, and evaluates the associated density, counting, and length
bounds.
"""

from unavoid._core import (
    BudgetExceeded,
    ToolkitError,
    apply_morphism,
    bound_n,
    build_word,
    canonicalize,
    census,
    check_sat,
    count_bound,
    decide,
    decide_via_zimin,
    delete_letters,
    density_bound,
    factor_graph_dot,
    free_letters,
    free_sets,
    identify,
    is_free,
    is_free_set,
    longest_avoiding,
    reflects,
    two_factors,
    verify,
    zimin,
)

__all__ = [
    "BudgetExceeded",
    "ToolkitError",
    "apply_morphism",
    "bound_n",
    "build_word",
    "canonicalize",
    "census",
    "check_sat",
    "count_bound",
    "decide",
    "decide_via_zimin",
    "delete_letters",
    "density_bound",
    "factor_graph_dot",
    "free_letters",
    "free_sets",
    "identify",
    "is_free",
    "is_free_set",
    "longest_avoiding",
    "reflects",
    "two_factors",
    "verify",
    "zimin",
]
