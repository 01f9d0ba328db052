"""Exact verification of symmetric power identities."""

import json

from ._core import (
    CapExceeded,
    Error,
    InvalidInput,
    ParseError,
    canonical_poly,
    commands,
    invariant_dimension,
    linearization_inverse_holds,
    point_counts,
    run_json,
    sym_count,
)

__all__ = [
    "CapExceeded",
    "Error",
    "InvalidInput",
    "ParseError",
    "canonical_poly",
    "commands",
    "invariant_dimension",
    "linearization_inverse_holds",
    "point_counts",
    "run",
    "sym_count",
]


def run(command, **options):
    """Runs a CLI command in-process and returns the parsed JSON report."""
    return json.loads(run_json(command, **options))
