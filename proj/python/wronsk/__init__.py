"""Exact real-root bounds and identity tests for structured polynomials.

An *instance* is a sum of products of powers of sparse base polynomials,
written in a small text format::

    bases 2
    f1: 1*x^0 + 1*x^1
    f2: 2*x^0 + -1/2*x^2
    terms 2
    3 : f1^2 f2^1
    -1/4 : f2^3

Every function in this package takes that text. Results that carry
arbitrary-precision numbers return them as decimal strings so nothing is
ever rounded; parse problems raise :class:`ValueError` and resource limits
raise :class:`RuntimeError`.
"""

from __future__ import annotations

import json
from typing import Any

from wronsk import _core

__all__ = [
    "canonical",
    "evaluate",
    "root_report",
    "bounds",
    "pit_blackbox",
    "pit_whitebox",
    "wronskian",
    "generate",
    "run_suite",
    "suite_names",
]


def canonical(text: str) -> str:
    """Parse an instance and return its canonical serialization."""
    return _core.canonical(text)


def evaluate(text: str, point: str) -> str:
    """Evaluate an instance at a rational point ('p' or 'p/q'), exactly."""
    return _core.evaluate(text, str(point))


def root_report(
    text: str,
    *,
    exact: bool = True,
    isolate: bool = False,
    pit: bool = False,
    budget_degree: int = 10000,
    budget_sparsity: int = 100000,
    basis_cap: int = 5,
    max_queries: int = 1000000,
) -> dict[str, Any]:
    """Everything the pipeline can say about one instance.

    The report holds the exact distinct-real-root count (when the expansion
    fits the budgets), the a-priori and certified bounds, isolating
    intervals when ``isolate`` is set, both identity-test verdicts when
    ``pit`` is set, and a note for every field a budget put out of reach.
    """
    return json.loads(
        _core.report_json(
            text,
            exact=exact,
            isolate=isolate,
            pit=pit,
            budget_degree=budget_degree,
            budget_sparsity=budget_sparsity,
            basis_cap=basis_cap,
            max_queries=max_queries,
        )
    )


def bounds(text: str, **options: Any) -> dict[str, Any]:
    """Only the root bounds of :func:`root_report` (no expansion)."""
    report = root_report(text, exact=False, **options)
    return {
        "a_priori_sparse": report["a_priori_sparse"],
        "a_priori_dense": report["a_priori_dense"],
        "certified_upsilon": report["certified_upsilon"],
        "certified_main3": report["certified_main3"],
        "reduced_k": report["reduced_k"],
        "notes": report["notes"],
    }


def pit_blackbox(text: str, model: str = "dense", max_queries: int = 1000000) -> dict[str, Any]:
    """Decide zeroness by querying integer points up to a root bound."""
    return json.loads(_core.pit_blackbox_json(text, model=model, max_queries=max_queries))


def pit_whitebox(text: str, basis_cap: int = 5) -> dict[str, Any]:
    """Decide zeroness structurally; the verdict carries a checked certificate."""
    return json.loads(_core.pit_whitebox_json(text, basis_cap=basis_cap))


def wronskian(text: str, prefix: int) -> dict[str, Any]:
    """Factored Wronskian of the first ``prefix`` power products."""
    return json.loads(_core.wronskian_json(text, prefix))


def generate(kind: str = "random", **params: Any) -> str:
    """Produce instance text: ``random``, ``zero``, ``optimal``, or ``descartes``."""
    return _core.generate(kind, **params)


def run_suite(name: str) -> dict[str, Any]:
    """Run one named verification suite and return its result."""
    return json.loads(_core.suite_json(name))


def suite_names() -> list[str]:
    """Names of the available verification suites."""
    return list(_core.suite_names())
