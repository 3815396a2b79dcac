"""Spectral and combinatorial diagnostics for product-free sets in S_n and A_n."""

import json as _json

from . import _symspec
from ._symspec import (
    GroupFunction,
    Permutation,
    SetFamily,
    SymspecError,
    UsageError,
    build_family,
    level_project,
    normalized_form,
    set_thread_budget,
    thread_budget,
)

__all__ = [
    "GroupFunction",
    "Permutation",
    "SetFamily",
    "SymspecError",
    "UsageError",
    "build_family",
    "cli",
    "globalness",
    "is_product_free",
    "isotypic_report",
    "level_project",
    "max_product_free",
    "measure_family",
    "normalized_form",
    "set_thread_budget",
    "spectral_report",
    "thread_budget",
    "verify",
]


def isotypic_report(f):
    return _json.loads(_symspec.isotypic_report_json(f))


def spectral_report(f, max_level=1):
    return _json.loads(_symspec.spectral_report_json(f, max_level))


def globalness(a, t=1):
    return _json.loads(_symspec.globalness_json(a, t))


def measure_family(spec, n):
    return _json.loads(_symspec.measure_family_json(spec, n))


def is_product_free(a, b=None, c=None):
    """Certifies that no a in A, b in B give ab in C; B and C default to A."""
    b = a if b is None else b
    c = a if c is None else c
    return _json.loads(_symspec.is_product_free_json(a, b, c))


def max_product_free(n, mode="exact", seed=0xC0FFEE, budget=0):
    return _json.loads(_symspec.max_product_free_json(n, mode, seed, budget))


def verify(n=5, suite="core", seed=0xC0FFEE):
    return _json.loads(_symspec.verify_json(n, suite, seed))


def cli(*args):
    """Runs a symspec subcommand in-process. Returns (exit_code, stdout, stderr)."""
    return _symspec.cli([str(a) for a in args])
