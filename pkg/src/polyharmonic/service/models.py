"""Request and response schemas for the HTTP surface."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class HypersphereRequest(BaseModel):
    r: int = Field(ge=2, description="polyharmonic order")
    n: int = Field(default=3, ge=2, description="ambient sphere dimension")


class CliffordRequest(BaseModel):
    p: int = Field(ge=1, description="first factor sphere dimension")
    q: int = Field(ge=1, description="second factor sphere dimension")
    r: int = Field(ge=2, description="polyharmonic order")


class IntRange(BaseModel):
    lo: int
    hi: int

    @model_validator(mode="after")
    def _nonempty(self) -> "IntRange":
        if self.hi < self.lo:
            raise ValueError(f"empty range {self.lo}:{self.hi}")
        return self


class SweepRequest(BaseModel):
    p_range: IntRange
    q_range: IntRange
    r_range: IntRange

    @model_validator(mode="after")
    def _bounds(self) -> "SweepRequest":
        if self.p_range.lo < 1 or self.q_range.lo < 1:
            raise ValueError("p and q ranges must start at 1 or above")
        if self.r_range.lo < 2:
            raise ValueError("r range must start at 2 or above")
        return self


class VerifyRequest(BaseModel):
    suite: Literal["energy", "ladder", "tau", "clifford", "all"] = "all"
    tol: Optional[float] = Field(default=None, gt=0)


class HypersphereSolution(BaseModel):
    radius: float
    alpha_star: float
    kind: str
    stable: bool
    residuals: dict[str, float]


class CliffordSolution(BaseModel):
    t: float
    R1: float
    R2: float
    alpha_star: float
    kind: str
    stable: Optional[bool]
    residuals: dict[str, float]


class CliffordResponse(BaseModel):
    discriminant: Optional[float]
    solutions: list[CliffordSolution]


class SweepRow(BaseModel):
    p: int
    q: int
    r: int
    count: int
    disc: Optional[float]
    roots: list[float]


class SweepResponse(BaseModel):
    rows: list[SweepRow]


class CheckResult(BaseModel):
    name: str
    max_residual: float
    samples: int
    passed: bool
    tolerance: float


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[CheckResult]
