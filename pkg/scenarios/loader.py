"""
Loading scenario files and running their checks.

Model references in checks may chain updates onto a named model:
`M0^A0` is the product of M0 with action model A0, `D+` the updated dynamic model D⁺,
`D++` updates twice. World references are names or pairs such as `(w0,sp)`.
"""
from __future__ import annotations
import json
import logging
import re
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

from pydantic import ValidationError

from configs.config_app import FIXTURES_PATH
from scenarios.inputmodel import CheckSpec, ScenarioFile
from scenarios.outputmodel import CheckResult, CheckRun
from utilities.action_update import ActionModel, buildActionModel, productUpdate
from utilities.dynamic import DynamicModel, buildDynamicModel, buildGuardedDynamicModel, updatePlus, validate
from utilities.exceptions import EpikitError, ScenarioParseError, ScenarioValidationError
from utilities.formula import Formula, Signature, buildSignature
from utilities.kripke import EpistemicModel, bisimilar, buildEpistemicModel
from utilities.parser import parseFormula, parseWorldRef
from utilities.semantics import EvalContext, evaluate, isValidIn

logger = logging.getLogger(__name__)

_REF_ROOT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_REF_STEP = re.compile(r"\^([A-Za-z][A-Za-z0-9_]*)|\+")


@dataclass
class Scenario:
    name: str
    sig: Signature
    epistemic: dict[str, EpistemicModel]
    action_models: dict[str, ActionModel]
    dynamic: dict[str, DynamicModel]
    checks: list[CheckSpec]
    formulas: dict[int, Formula] = field(default_factory=dict)
    _models: dict = field(default_factory=dict, repr=False)
    _contexts: dict = field(default_factory=dict, repr=False)


@contextmanager
def _building(where: str):
    try:
        yield
    except ScenarioValidationError:
        raise
    except EpikitError as e:
        witness = getattr(e, "violations", None) or getattr(e, "name", None)
        raise ScenarioValidationError(f"{where}: {e}", witness=witness) from e


def scenarioPath(name: str | Path) -> Path:
    """
    Resolve a scenario argument: an existing file, or the name of a built-in scenario such as `example1`.
    """
    path = Path(name)
    if path.is_file():
        return path
    builtin = FIXTURES_PATH / (path.name if path.suffix == ".json" else f"{path.name}.json")
    if builtin.is_file():
        return builtin
    raise ScenarioParseError(f"No scenario file or built-in scenario named {name}")


def builtinScenarios() -> list[str]:
    return sorted(p.stem for p in FIXTURES_PATH.glob("*.json"))


def loadScenario(path: str | Path) -> Scenario:
    """
    Read, validate and build a scenario.

    Params:
        path: Scenario file, or the name of a built-in scenario

    Returns:
        Scenario: signature, built models and checks with parsed formulas

    Raises:
        ScenarioParseError: unreadable file or malformed JSON, with line and column
        ScenarioValidationError: anything that does not resolve or build, with a witness
    """
    path = scenarioPath(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ScenarioParseError(f"Cannot read {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioParseError(f"Malformed JSON in {path}: {e.msg}", e.lineno, e.colno) from e

    try:
        spec = ScenarioFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ScenarioValidationError(f"Invalid scenario {path.name}", witness=f"{location}: {first['msg']}") from e
    return buildScenario(spec, spec.name or path.stem)


def buildScenario(spec: ScenarioFile, name: str) -> Scenario:
    """
    Build every model of a validated scenario file. Dynamic models are checked for C1/C2.
    """
    with _building("actions"):
        pre = {action: parseFormula(text) for action, text in spec.actions.items()}
        sig = buildSignature(spec.agents, spec.props, pre)

    epistemic = {}
    for model_name, m in spec.epistemic.items():
        with _building(f"epistemic model {model_name}"):
            epistemic[model_name] = buildEpistemicModel(m.worlds, m.edges, m.val, agents=sig.agents, props=sig.props)
            logger.debug("Built %s: %d worlds", model_name, len(epistemic[model_name]))

    action_models = {}
    for model_name, m in spec.action_models.items():
        with _building(f"action model {model_name}"):
            action_models[model_name] = buildActionModel(model_name, m.actions, m.edges, sig)

    dynamic = {}
    for model_name, m in spec.dynamic.items():
        with _building(f"dynamic model {model_name}"):
            if m.base not in epistemic:
                raise ScenarioValidationError(f"dynamic model {model_name}: unknown base model", witness=m.base)
            base = epistemic[m.base]
            dsig = sig.restrictActions(m.actions) if m.actions is not None else sig
            if m.f:
                rules = [(r.agent, parseFormula(r.guard, sig) if r.guard else None, r.partition) for r in m.f]
                dynamic[model_name] = buildGuardedDynamicModel(base, rules, dsig)
            else:
                dynamic[model_name] = buildDynamicModel(base, m.f_edges, dsig)

    scenario = Scenario(name, sig, epistemic, action_models, dynamic, list(spec.checks))
    for index, check in enumerate(scenario.checks):
        with _building(f"check {index}"):
            if check.formula is not None:
                scenario.formulas[index] = parseFormula(check.formula, sig)
            for ref in ([check.model] if check.model else list(check.bisim[0::2])):
                _parseRef(scenario, ref)
    return scenario

# =========================
# Model and world references
# =========================

def _parseRef(scenario: Scenario, ref: str) -> tuple[str, list[str | None]]:
    root = _REF_ROOT.match(ref)
    if root is None:
        raise ScenarioValidationError("Malformed model reference", witness=ref)
    steps = []
    position = root.end()
    while position < len(ref):
        step = _REF_STEP.match(ref, position)
        if step is None:
            raise ScenarioValidationError("Malformed model reference", witness=ref)
        steps.append(step.group(1))
        position = step.end()

    name = root.group(0)
    if name not in scenario.epistemic and name not in scenario.dynamic:
        raise ScenarioValidationError("Unknown model", witness=name)
    for step in steps:
        if step is not None and step not in scenario.action_models:
            raise ScenarioValidationError("Unknown action model", witness=step)
    return name, steps


def resolveModel(scenario: Scenario, ref: str) -> EpistemicModel | DynamicModel:
    """
    The model a reference denotes. Updated models are built once per scenario.

    Params:
        scenario: Loaded scenario
        ref: `M`, `M^A`, `D+`, `D++`, `M^A^B`, ...

    Returns:
        EpistemicModel | DynamicModel: the model
    """
    if ref in scenario._models:
        return scenario._models[ref]

    name, steps = _parseRef(scenario, ref)
    model = scenario.epistemic[name] if name in scenario.epistemic else scenario.dynamic[name]
    for step in steps:
        if step is None:
            if not isinstance(model, DynamicModel):
                raise ScenarioValidationError("'+' applies to dynamic models only", witness=ref)
            model = updatePlus(model)
        else:
            if isinstance(model, DynamicModel):
                raise ScenarioValidationError("'^' applies to epistemic models only", witness=ref)
            model = productUpdate(model, scenario.action_models[step])
    scenario._models[ref] = model
    return model


def contextFor(scenario: Scenario, ref: str) -> EvalContext:
    if ref not in scenario._contexts:
        scenario._contexts[ref] = EvalContext(resolveModel(scenario, ref), scenario.action_models)
    return scenario._contexts[ref]

# =========================
# Checks
# =========================

def _runCheck(scenario: Scenario, index: int, check: CheckSpec) -> tuple[bool, str | None]:
    if check.bisim is not None:
        first, first_world, second, second_world = check.bisim
        M1, M2 = resolveModel(scenario, first), resolveModel(scenario, second)
        M1 = M1.base if isinstance(M1, DynamicModel) else M1
        M2 = M2.base if isinstance(M2, DynamicModel) else M2
        return bisimilar(M1, parseWorldRef(first_world), M2, parseWorldRef(second_world)), None

    if check.formula is None:
        model = resolveModel(scenario, check.model)
        if not isinstance(model, DynamicModel):
            raise ScenarioValidationError("A check without formula validates a dynamic model", witness=check.model)
        report = validate(model)
        return report.ok, "; ".join(str(v) for v in report.violations) or None

    ctx = contextFor(scenario, check.model)
    phi = scenario.formulas[index]
    if check.world is None:
        return isValidIn(ctx, phi), None
    return evaluate(ctx, parseWorldRef(check.world), phi), None


def runChecks(scenario: Scenario) -> tuple[list[CheckResult], int]:
    """
    Run every check of a scenario in declaration order.

    Params:
        scenario: Loaded scenario

    Returns:
        tuple[list[CheckResult], int]: the results and the exit code, 0 iff every check passed.
            An evaluation error fails its check and is kept as the diagnostic.
    """
    results = []
    for index, check in enumerate(scenario.checks):
        started = time.perf_counter()
        try:
            actual, detail = _runCheck(scenario, index, check)
        except EpikitError as e:
            actual, detail = None, f"{type(e).__name__}: {e}"
        elapsed = (time.perf_counter() - started) * 1000

        passed = actual is not None and (check.expect == "report" or actual == check.expect)
        results.append(CheckResult(
            index=index,
            model=check.model if check.bisim is None else " ~ ".join(check.bisim[0::2]),
            world=check.world if check.bisim is None else " ~ ".join(check.bisim[1::2]),
            formula=check.formula,
            expected=check.expect,
            actual=actual,
            passed=passed,
            detail=detail,
            elapsed_ms=elapsed,
        ))
        logger.debug("Check %d: actual=%s expected=%s", index, actual, check.expect)

    exit_code = 0 if all(r.passed for r in results) else 1
    return results, exit_code


def checkRun(scenario: Scenario, results: list[CheckResult]) -> CheckRun:
    passed = sum(r.passed for r in results)
    return CheckRun(scenario=scenario.name, results=results, passed=passed, failed=len(results) - passed)
