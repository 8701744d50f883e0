"""Pydantic schemas for estimates, comparison reports and input files."""

from __future__ import annotations

import math
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

Verdict = Literal["pass", "warn", "fail", "info", "error"]


def _clean(value: float | None) -> float | None:
    if value is None or not math.isfinite(value):
        return None
    return float(value)


class MCEstimate(BaseModel):
    """Sample mean with its standard error; complex means keep the imaginary part."""

    mean: float
    mean_imag: float = 0.0
    stderr: float = Field(ge=0.0)
    n_samples: int = Field(ge=0)
    seed: int

    @property
    def value(self) -> complex | float:
        return complex(self.mean, self.mean_imag) if self.mean_imag else self.mean

    def mean_json(self) -> float | dict:
        if self.mean_imag:
            return {"re": self.mean, "im": self.mean_imag}
        return self.mean


class ComparisonReport(BaseModel):
    id: str
    closed: float | None = None
    estimate: MCEstimate | None = None
    z: float | None = None
    verdict: Verdict
    note: str = ""

    def to_json(self) -> dict:
        est = self.estimate
        return {
            "id": self.id,
            "closed": _clean(self.closed),
            "mean": est.mean_json() if est else None,
            "stderr": est.stderr if est else None,
            "n": est.n_samples if est else None,
            "seed": est.seed if est else None,
            "z": _clean(self.z),
            "verdict": self.verdict,
        }

    @property
    def failed(self) -> bool:
        return self.verdict in ("fail", "error")


class Discrepancy(BaseModel):
    """A printed closed form set against the derived one, with Monte-Carlo evidence."""

    item: str
    description: str
    printed: float
    derived: float
    flagged: bool
    evidence: list[ComparisonReport] = Field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "item": self.item,
            "description": self.description,
            "printed": self.printed,
            "derived": self.derived,
            "flagged": self.flagged,
            "evidence": [r.to_json() for r in self.evidence],
        }


class ComplexEntry(BaseModel):
    re: float
    im: float = 0.0


class SigmaFile(BaseModel):
    """Variance matrix file: ``{"n": N, "data": [[...], ...]}`` row-major."""

    n: int = Field(gt=0)
    data: list[list[float | ComplexEntry]]

    @model_validator(mode="after")
    def _square(self):
        if len(self.data) != self.n or any(len(row) != self.n for row in self.data):
            raise ValueError(f"data must be {self.n}x{self.n}")
        return self


class TermPayload(BaseModel):
    partition: list[int]
    coeff: str

    @field_validator("partition")
    @classmethod
    def _positive(cls, parts: list[int]) -> list[int]:
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        return parts


class SymPolyPayload(BaseModel):
    nvars: int = Field(gt=0)
    terms: list[TermPayload]
