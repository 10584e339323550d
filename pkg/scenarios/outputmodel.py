"""
This module contains Output Models.\n
Reports produced by the checker: dynamic model validation, soundness fuzzing and scenario check runs.
They hold printable world labels and rendered formulas, so they serialize straight to JSON.
"""
from typing import Literal
from pydantic import BaseModel

class Violation(BaseModel):
    condition: Literal["C1", "C2", "totality"]
    agent: str
    worlds: list[str]
    detail: str

    def __str__(self) -> str:
        return f"{self.condition} agent={self.agent} worlds={','.join(self.worlds)}: {self.detail}"

class ValidationReport(BaseModel):
    violations: list[Violation] = []

    @property
    def ok(self) -> bool:
        return not self.violations

class FuzzFailure(BaseModel):
    schema_id: str
    seed: int
    world: str
    formula: str

    def line(self) -> str:
        return f"schema={self.schema_id} seed={self.seed} world={self.world} formula={self.formula}"

class FuzzReport(BaseModel):
    trials: int
    seed: int
    schemas: list[str]
    failures: list[FuzzFailure] = []

    def failuresFor(self, schema_id: str) -> list[FuzzFailure]:
        return [f for f in self.failures if f.schema_id == schema_id]

    def text(self) -> str:
        return "".join(f.line() + "\n" for f in self.failures)

class CheckResult(BaseModel):
    index: int
    model: str
    world: str | None
    formula: str | None
    expected: bool | Literal["report"]
    actual: bool | None
    passed: bool
    detail: str | None = None
    elapsed_ms: float | None = None

class CheckRun(BaseModel):
    scenario: str
    results: list[CheckResult]
    passed: int
    failed: int

    def toJson(self, timings: bool = False) -> str:
        """
        JSON of the run. Elapsed times are left out unless asked for, so reruns give identical bytes.
        """
        exclude = None if timings else {"results": {"__all__": {"elapsed_ms"}}}
        return self.model_dump_json(indent=2, exclude=exclude)
