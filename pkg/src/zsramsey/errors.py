"""Exception hierarchy.

Everything the engine raises on purpose derives from :class:`ZeroSumError`,
so callers (and the CLI) can separate domain failures from programming errors.
"""

from __future__ import annotations

import json
from typing import Any


class ZeroSumError(Exception):
    """Base class for all typed failures."""

    kind = "error"


class HypothesisViolation(ZeroSumError):
    kind = "hypothesis-violation"

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("hypotheses violated: " + "; ".join(self.violations))


class InfeasibleParameters(ZeroSumError):
    kind = "infeasible-parameters"


class InsufficientBlueprint(ZeroSumError):
    kind = "insufficient-blueprint"


class ModulusMismatch(ZeroSumError):
    kind = "modulus-mismatch"


class Unreachable(ZeroSumError):
    kind = "unreachable"


class HostTooSmall(ZeroSumError):
    kind = "host-too-small"


class PoolExhausted(HostTooSmall):
    kind = "pool-exhausted"


class PreconditionViolation(ZeroSumError):
    kind = "precondition-violation"


class TooLarge(ZeroSumError):
    kind = "too-large"


class NotZeroSum(ZeroSumError):
    """Final self-check failed; only reachable when hypotheses do not hold."""

    kind = "not-zero-sum"


class TheoremViolation(ZeroSumError):
    """A property that the proof guarantees did not hold.

    On hypothesis-satisfying input this is a bug detector. ``witness`` holds
    the offending sets and values in JSON-friendly form.
    """

    kind = "theorem-violation"

    def __init__(self, message: str, witness: dict[str, Any] | None = None):
        self.witness = witness or {}
        super().__init__(message)

    def witness_json(self) -> str:
        return json.dumps(self.witness, sort_keys=True, default=_jsonable)


class FormatError(ZeroSumError, ValueError):
    """Malformed input file. ``line`` is 1-based (0 when not line-specific)."""

    kind = "format-error"

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _jsonable(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "tolist"):
        return obj.tolist()
    if hasattr(obj, "item"):
        return obj.item()
    return str(obj)


class OutOfContract(ZeroSumError):
    """A proof-backed property failed on input that does not meet the hypotheses."""

    kind = "out-of-contract"


def violation(hypotheses_hold: bool, message: str, witness: dict[str, Any] | None = None,
              size_bound: bool = False) -> ZeroSumError:
    """Pick the exception for a failed runtime assertion.

    On hypothesis-satisfying input the failure is a :class:`TheoremViolation`;
    otherwise it is an ordinary typed failure of an out-of-contract run.
    """
    if hypotheses_hold:
        return TheoremViolation(message, witness)
    if size_bound:
        return HostTooSmall(message)
    return OutOfContract(message)
