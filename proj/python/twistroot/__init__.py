"""Exact classification of roots of Dehn twists about multicurves.

The heavy lifting lives in the compiled extension; this package re-exports the
main operations and knows where the shipped classification tables live.
"""

import os

from ._core import (  # noqa: F401
    bound_nonseparating,
    bound_separating,
    canonicalize,
    classify,
    enumerate_datasets,
    enumerate_permuting,
    fixed_angle,
    genus,
    multicurve_genus,
    power,
    reproduce_table,
    stable_bound,
    table_ids,
    theta,
    validate,
)

def shipped_tables():
    """Path of the classification tables bundled with the package."""
    here = os.path.join(os.path.dirname(__file__), "tables")
    if os.path.isdir(here):
        return here
    env = os.environ.get("TWISTROOT_TABLES")
    if env and os.path.isdir(env):
        return env
    return "tables"
