"""Projective calculus over the power set of a finite group.

Thin Python layer over the C++ core: groups from spec strings, the four
structure maps, subgroup/transversal/carrier enumeration, the permutation
sign table, and the full check suite.
"""

import json as _json

try:
    from ._torsorlab import (
        Group,
        carrier_uab,
        carrier_ub,
        gamma,
        grassmannian,
        group,
        is_transversal,
        left_transversals,
        run_suite_json,
        sigma,
        sign_table,
    )
except ImportError:  # build-tree layout: extension module next to the package
    from _torsorlab import (
        Group,
        carrier_uab,
        carrier_ub,
        gamma,
        grassmannian,
        group,
        is_transversal,
        left_transversals,
        run_suite_json,
        sigma,
        sign_table,
    )

__all__ = [
    "Group",
    "carrier_uab",
    "carrier_ub",
    "gamma",
    "grassmannian",
    "group",
    "is_transversal",
    "left_transversals",
    "run_suite",
    "run_suite_json",
    "sigma",
    "sign_table",
]

__version__ = "0.1.0"


def run_suite(g, seed=0):
    """Runs the full check catalog on ``g``; returns the report as a dict."""
    return _json.loads(run_suite_json(g, seed))
