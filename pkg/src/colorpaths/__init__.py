"""Exact counts of colored Catalan, Schroder and Motzkin lattice paths."""

from .enumeration import (
    LatticePath,
    Step,
    colored_count,
    enumerate_paths,
    oracle_series,
    parse_path,
    path_to_string,
)
from .families import (
    FunctionalEquation,
    closed_form_series,
    functional_equation_of,
    recurrence_series,
    small_schroder_series,
)
from .model import Family, FamilySpec, Method, SequenceResult
from .series import (
    PowerSeries,
    ps_add,
    ps_div_exact,
    ps_mul,
    ps_reciprocal,
    ps_scale_shift,
    ps_sqrt,
)

__all__ = [
    "Family", "FamilySpec", "FunctionalEquation", "LatticePath", "Method",
    "PowerSeries", "SequenceResult", "Step", "closed_form_series",
    "colored_count", "enumerate_paths", "functional_equation_of",
    "oracle_series", "parse_path", "path_to_string", "ps_add",
    "ps_div_exact", "ps_mul", "ps_reciprocal", "ps_scale_shift", "ps_sqrt",
    "recurrence_series", "small_schroder_series",
]
