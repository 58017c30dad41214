"""Orthogonal polynomials, reproducing kernels and Cesaro means on cones."""

import json

from ._conekit import *  # noqa: F401,F403
from ._conekit import run_command_json as _run_command_json


def run(command, **options):
    """Run a CLI command in-process and return the report as a dict."""
    return json.loads(_run_command_json(command, options))
