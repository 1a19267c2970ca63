"""Exact Yang-Baxter, reflection and open-chain computations.

Solutions, boundaries and matrices are plain dicts in the ybx/1 JSON layout
used by the ``ybx`` command-line tool. Check functions return lists of
``{"name", "status", "witnesses", "note"}`` records.
"""

import json as _json

from . import _ybx
from ._ybx import FormatError

__all__ = [
    "FormatError",
    "fixture",
    "fixture_names",
    "brace_from_ring",
    "solution_from_brace",
    "validate_solution",
    "find_reflections",
    "linearize",
    "twist",
    "verify_yang_baxter",
    "verify_q_hecke",
    "verify_reflection",
    "transfer",
    "check_commutativity",
    "run_suite",
]


def _d(obj):
    return _json.dumps(obj)


def fixture(name):
    return _json.loads(_ybx.fixture(name))


def fixture_names(max_n=4):
    return _ybx.fixture_names(max_n)


def brace_from_ring(ring):
    return _json.loads(_ybx.brace_from_ring(_d(ring)))


def solution_from_brace(brace):
    return _json.loads(_ybx.solution_from_brace(_d(brace)))


def validate_solution(solution):
    """Raises ValueError with a witness if the solution is invalid."""
    _ybx.validate_solution(_d(solution))


def find_reflections(solution):
    return _ybx.find_reflections(_d(solution))


def linearize(solution):
    return _json.loads(_ybx.linearize(_d(solution)))


def twist(solution):
    return _json.loads(_ybx.twist(_d(solution)))


def verify_yang_baxter(solution):
    return _json.loads(_ybx.verify_yang_baxter(_d(solution)))


def verify_q_hecke(n):
    return _json.loads(_ybx.verify_q_hecke(n))


def verify_reflection(solution, boundary):
    return _json.loads(_ybx.verify_reflection(_d(solution), _d(boundary)))


def transfer(solution, sites, boundary=None, variant="reflection"):
    b = None if boundary is None else _d(boundary)
    return _json.loads(_ybx.transfer(_d(solution), sites, b, variant))


def check_commutativity(solution, sites, boundary=None, variant="reflection"):
    b = None if boundary is None else _d(boundary)
    return _json.loads(_ybx.check_commutativity(_d(solution), sites, b, variant))


def run_suite(config, timing=False):
    return _json.loads(_ybx.run_suite(_d(config), timing))
