"""Cooperative resource budget checked inside long-running loops."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from gorfro.errors import ResourceLimitError


@dataclass
class Budget:
    """Deadline and size caps shared by one example's pipeline.

    ``deadline`` is an absolute ``time.monotonic()`` value. Eliminations call
    :meth:`check` before and after each sympy reduction; Buchberger once per
    S-pair.
    """

    deadline: Optional[float] = None
    max_nonzeros: Optional[int] = None
    label: str = ""
    _cancelled: bool = field(default=False, repr=False)

    @classmethod
    def unlimited(cls) -> "Budget":
        return cls()

    @classmethod
    def from_limits(
        cls,
        *,
        max_seconds: Optional[float] = None,
        max_nonzeros: Optional[int] = None,
        label: str = "",
    ) -> "Budget":
        deadline = time.monotonic() + max_seconds if max_seconds is not None else None
        return cls(deadline=deadline, max_nonzeros=max_nonzeros, label=label)

    def cancel(self) -> None:
        self._cancelled = True

    @property
    def cancelled(self) -> bool:
        return self._cancelled

    def check(self, nonzeros: int = 0) -> None:
        if self._cancelled:
            raise ResourceLimitError("ERR_RESOURCE_LIMIT", "Computation cancelled", pointer=self.label or None)
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimitError("ERR_RESOURCE_LIMIT", "Time budget exhausted", pointer=self.label or None)
        if self.max_nonzeros is not None and nonzeros > self.max_nonzeros:
            raise ResourceLimitError(
                "ERR_RESOURCE_LIMIT",
                f"Matrix with {nonzeros} nonzeros exceeds the cap of {self.max_nonzeros}",
                pointer=self.label or None,
            )
