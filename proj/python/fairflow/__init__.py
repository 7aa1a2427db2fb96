"""Python front end over the C++ engine.

Every call takes an instance as a JSON string, a dict or a path and returns a
Result with the CLI exit code, the parsed report and the diagnostics text.
"""

import json
import os
from dataclasses import dataclass

from . import _fairflow
from ._fairflow import (
    EXIT_INFEASIBLE,
    EXIT_INPUT,
    EXIT_MISMATCH,
    EXIT_NO_DECMIN,
    EXIT_OK,
)

__all__ = [
    "Result",
    "check",
    "solve",
    "orient",
    "verify",
    "EXIT_OK",
    "EXIT_INPUT",
    "EXIT_INFEASIBLE",
    "EXIT_NO_DECMIN",
    "EXIT_MISMATCH",
]


@dataclass(frozen=True)
class Result:
    exit_code: int
    report: dict
    diagnostics: str

    @property
    def ok(self):
        return self.exit_code == EXIT_OK


def _text(instance):
    if isinstance(instance, dict):
        return json.dumps(instance)
    if isinstance(instance, os.PathLike):
        with open(instance, encoding="utf-8") as fh:
            return fh.read()
    return instance


def _wrap(packed):
    code, out, diag = packed
    return Result(code, json.loads(out) if out else {}, diag)


def check(instance):
    return _wrap(_fairflow.check(_text(instance)))


def solve(instance, min_cost=False, trace=False):
    return _wrap(_fairflow.solve(_text(instance), min_cost, trace))


def orient(instance, k=None):
    return _wrap(_fairflow.orient(_text(instance), k))


def verify(instance, budget=10_000_000):
    return _wrap(_fairflow.verify(_text(instance), budget))
