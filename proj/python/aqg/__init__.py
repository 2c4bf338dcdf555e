"""Python front end for the algebraic quantum group verification engine."""

import json as _json

from ._aqg import (  # noqa: F401
    Instance,
    InstanceParseError,
    StructuralError,
    load_instance,
    q_power,
    suq2_antipode,
    suq2_haar,
    suq2_normal_form,
)
from ._aqg import run_suite as _run_suite

__all__ = [
    "Instance",
    "InstanceParseError",
    "StructuralError",
    "load_instance",
    "q_power",
    "run_suite",
    "suq2_antipode",
    "suq2_haar",
    "suq2_normal_form",
]


def run_suite(instance, suite="all", degree=6, q="", tolerance=1e-9, jobs=1):
    """Run a verification suite and return the report as a dict."""
    return _json.loads(_run_suite(instance, suite, degree, q, tolerance, jobs))
