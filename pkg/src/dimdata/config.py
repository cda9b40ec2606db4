"""Budget knobs shared by the enumerators.

Every cap can be overridden with an environment variable ``DIMDATA_BUDGET_<NAME>``
or by the matching CLI flag.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed a configured cap."""


@dataclass(frozen=True)
class Budget:
    orbit: int = 10_000_000
    enum_roots: int = 72
    degree: int = 8
    identity_n: int = 5

    @classmethod
    def from_env(cls) -> "Budget":
        b = cls()
        fields = {}
        for name in ("orbit", "enum_roots", "degree", "identity_n"):
            raw = os.environ.get(f"DIMDATA_BUDGET_{name.upper()}")
            if raw is not None:
                fields[name] = int(raw)
        return replace(b, **fields)


_current = Budget.from_env()


def budget() -> Budget:
    return _current


def set_budget(**kw) -> Budget:
    global _current
    _current = replace(_current, **kw)
    return _current
