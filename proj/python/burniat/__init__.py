"""Toric case data and degeneration tables for Burniat surfaces."""

import json

from ._core import (
    FanError,
    FanIoError,
    GroupError,
    LatticeError,
    UnknownFamily,
    Fan,
    __version__,
    base_volume,
    boundary_divisors,
    build_case_fan,
    case_lattice,
    case_names,
    character_pushforward,
    child,
    classify_ray,
    derive_generic_component,
    f_curves_in_case,
    fan_from_json,
    gamma6,
    hermite_normal_form,
    relabeling_group,
    smith_invariant_factors,
    validate_tables,
)
from ._core import verify as _verify


def verify(case=None, format="json", tables=None):
    """Run the verification suite; returns (exit_code, report).

    With format="json" the report is parsed into a dict, with "md" it is the
    Markdown text.
    """
    code, text = _verify(case, format, tables)
    return code, (json.loads(text) if format == "json" else text)


__all__ = [
    "Fan",
    "FanError",
    "FanIoError",
    "GroupError",
    "LatticeError",
    "UnknownFamily",
    "base_volume",
    "boundary_divisors",
    "build_case_fan",
    "case_lattice",
    "case_names",
    "character_pushforward",
    "child",
    "classify_ray",
    "derive_generic_component",
    "f_curves_in_case",
    "fan_from_json",
    "gamma6",
    "hermite_normal_form",
    "relabeling_group",
    "smith_invariant_factors",
    "validate_tables",
    "verify",
]
