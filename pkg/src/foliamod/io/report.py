"""Machine-readable command reports."""

from __future__ import annotations

import hashlib
import io
import json
from typing import Any

import pandas as pd
from pydantic import BaseModel, Field

from foliamod.core.errors import FoliamodError, InputRejected
from foliamod.core.formatters import split_complex_columns, to_jsonable

CSV_FLOAT_FORMAT = "%.17g"
# batch runs exit 2 once more than this fraction of samples is rejected
REJECTION_BUDGET = 0.02


class ErrorEntry(BaseModel):
    sample: int
    code: str
    message: str
    exit_code: int = Field(default=FoliamodError.exit_code, exclude=True)

    @classmethod
    def from_error(cls, sample: int, error: FoliamodError) -> ErrorEntry:
        return cls(sample=sample, code=error.code, message=str(error), exit_code=error.exit_code)


class Report(BaseModel):
    """Result of one CLI command.

    ``results["rows"]`` holds the tabular part emitted by ``--csv``; any
    other keys are summary values. Complex numbers are kept as Python
    complex until rendering.
    """

    command: str
    input_digest: str
    results: dict[str, Any] = Field(default_factory=dict)
    errors: list[ErrorEntry] = Field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def rows(self) -> list[dict[str, Any]]:
        return list(self.results.get("rows", []))

    def add_error(self, sample: int, error: FoliamodError) -> None:
        self.errors.append(ErrorEntry.from_error(sample, error))

    def exit_status(self, batch: bool = False) -> int:
        """0 on success; for batches, 1 on any internal failure and 2 past the rejection budget."""
        if not self.errors:
            return 0
        if not batch:
            return max(e.exit_code for e in self.errors)
        if any(e.exit_code != InputRejected.exit_code for e in self.errors):
            return FoliamodError.exit_code
        samples = int(self.results.get("samples", len(self.errors))) or 1
        if len(self.errors) / samples > REJECTION_BUDGET:
            return InputRejected.exit_code
        return 0

    def payload(self, include_time: bool = True) -> dict[str, Any]:
        data: dict[str, Any] = {
            "command": self.command,
            "input_digest": self.input_digest,
            "results": to_jsonable(self.results),
            "errors": [e.model_dump() for e in self.errors],
        }
        if include_time:
            data["wall_time_s"] = self.wall_time_s
        return data

    def to_json(self, include_time: bool = True) -> str:
        return json.dumps(self.payload(include_time), indent=2, sort_keys=True) + "\n"

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([split_complex_columns(row) for row in self.rows])

    def to_csv(self) -> str:
        buffer = io.StringIO()
        self.to_frame().to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT)
        return buffer.getvalue()


def canonical_digest(payload: Any) -> str:
    """SHA-256 of the canonical JSON encoding of ``payload``."""
    text = json.dumps(to_jsonable(payload), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
