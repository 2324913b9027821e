"""Evaluators, baseline constructions, and the discovery loop for eight
extremal-combinatorics benchmark problems.

Thin re-export of the compiled module; payloads and results are plain dicts
matching the CLI's JSON wire formats.
"""

from ._core import (
    discover,
    evaluate,
    excel_at_best,
    problem,
    problem_ids,
    solve,
    verify_known,
)

__all__ = [
    "discover",
    "evaluate",
    "excel_at_best",
    "problem",
    "problem_ids",
    "solve",
    "verify_known",
]
