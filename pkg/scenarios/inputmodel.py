"""
This module contains Input Models.\n
A scenario file is JSON: a signature, named models and a list of checks. These models describe its
shape; names are validated here, formulas and references are resolved by the loader.
"""
import re
from typing import Annotated, Literal
from pydantic import AfterValidator, BaseModel, Field, model_validator

from configs.config_validation import Limit, Pattern

def _identifier(name: str) -> str:
    if not re.fullmatch(Pattern.IDENTIFIER_PATTERN, name) or name in Pattern.RESERVED_WORDS:
        raise ValueError(f"'{name}' is not a valid identifier")
    return name

Identifier = Annotated[str, AfterValidator(_identifier)]

class EpistemicSpec(BaseModel):
    worlds: list[str] = Field(min_length=1, max_length=Limit.MAX_WORLDS)
    val: dict[Identifier, list[str]] = {}
    edges: list[tuple[Identifier, str, str]] = []

class ActionModelSpec(BaseModel):
    actions: list[Identifier] = Field(min_length=1, max_length=Limit.MAX_ACTIONS)
    edges: list[tuple[Identifier, Identifier, Identifier]] = []

class GuardRule(BaseModel):
    agent: Identifier
    guard: str | None = None
    partition: list[list[Identifier]]

class DynamicSpec(BaseModel):
    base: str
    actions: list[Identifier] | None = None
    f: list[GuardRule] = []
    f_edges: list[tuple[Identifier, str, Identifier, Identifier]] = []

    @model_validator(mode="after")
    def _oneStyle(self):
        if self.f and self.f_edges:
            raise ValueError("Define f either by guards ('f') or by pairs ('f_edges'), not both")
        return self

class CheckSpec(BaseModel):
    model: str | None = None
    world: str | None = None
    formula: str | None = None
    bisim: tuple[str, str, str, str] | None = None
    expect: bool | Literal["report"]

    @model_validator(mode="after")
    def _kind(self):
        if self.bisim is not None:
            if self.model is not None or self.formula is not None:
                raise ValueError("A bisimulation check takes no 'model' or 'formula'")
        elif self.model is None:
            raise ValueError("A check needs a 'model' or a 'bisim' list")
        return self

class ScenarioFile(BaseModel):
    name: str | None = None
    agents: list[Identifier] = Field(min_length=1)
    props: list[Identifier] = []
    actions: dict[Identifier, str] = {}
    epistemic: dict[Identifier, EpistemicSpec] = {}
    action_models: dict[Identifier, ActionModelSpec] = {}
    dynamic: dict[Identifier, DynamicSpec] = {}
    checks: list[CheckSpec] = []

    @model_validator(mode="after")
    def _uniqueModelNames(self):
        names = list(self.epistemic) + list(self.action_models) + list(self.dynamic)
        clashes = sorted({n for n in names if names.count(n) > 1})
        if clashes:
            raise ValueError(f"Model names used twice: {', '.join(clashes)}")
        return self
