"""
Reduction of dynamic formulas to static ones, the axiom schemas and the soundness fuzzer.

`translate` pushes every `[σ]` inward until only epistemic operators and xi atoms are left:

    t([σ]p)        = pre_σ -> p
    t([σ]xi)       = pre_σ -> xi
    t([σ]!φ)       = pre_σ -> !t([σ]φ)
    t([σ](φ & ψ))  = t([σ]φ) & t([σ]ψ)
    t([σ]K_a φ)    = pre_σ -> AND over σ' in Σ of (xi(a,σ,σ') -> K_a t([σ']φ))
    t([σ][σ']φ)    = t([σ] t([σ']φ))

and is homomorphic on everything else.
"""
from __future__ import annotations
import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Sequence

from configs.config_fuzz import FuzzDefault, TranslationLimit
from scenarios.outputmodel import FuzzFailure, FuzzReport
from utilities.dynamic import DynamicModel
from utilities.exceptions import FuelExhausted, MissingBinding, UnknownIdentifier, UnsupportedFragment
from utilities.formula import (
    And, Atom, Formula, Fragment, Iff, Implies, Knows, Not, Or, Signature, UpdateDyn, Xi, conjoin, fragment,
)
from utilities.kripke import worldLabel
from utilities.parser import renderFormula
from utilities.randommodels import RandomModelParams, randomDynamicModel, randomFormula, randomSignature
from utilities.semantics import EvalContext, truthSet

logger = logging.getLogger(__name__)

# =========================
# Translation
# =========================

class _Fuel:
    def __init__(self, amount: int):
        self.left = amount

    def burn(self):
        self.left -= 1
        if self.left < 0:
            raise FuelExhausted("Translation ran out of fuel")


def translate(phi: Formula, sig: Signature, fuel: int = TranslationLimit.FUEL) -> Formula:
    """
    Equivalent formula of L_EL+ for a formula of L_DL+.

    Params:
        phi: Formula of L_DL+
        sig: Signature giving Σ and the preconditions
        fuel: Max number of rewriting steps

    Returns:
        Formula: t(φ), free of `[σ]`
    """
    if fragment(phi) == Fragment.AL:
        raise UnsupportedFragment("Action-model updates have no translation")
    return _translate(phi, sig, _Fuel(fuel))


def _translate(phi: Formula, sig: Signature, fuel: _Fuel) -> Formula:
    fuel.burn()
    if isinstance(phi, (Atom, Xi)):
        return phi
    if isinstance(phi, Not):
        return Not(_translate(phi.operand, sig, fuel))
    if isinstance(phi, And):
        return And(_translate(phi.left, sig, fuel), _translate(phi.right, sig, fuel))
    if isinstance(phi, Knows):
        return Knows(phi.agent, _translate(phi.operand, sig, fuel))
    return _translateBox(phi.action, phi.operand, sig, fuel)


def _translateBox(action: str, phi: Formula, sig: Signature, fuel: _Fuel) -> Formula:
    fuel.burn()
    pre = sig.precondition(action)
    if isinstance(phi, (Atom, Xi)):
        return Implies(pre, phi)
    if isinstance(phi, Not):
        return Implies(pre, Not(_translateBox(action, phi.operand, sig, fuel)))
    if isinstance(phi, And):
        return And(_translateBox(action, phi.left, sig, fuel), _translateBox(action, phi.right, sig, fuel))
    if isinstance(phi, Knows):
        return Implies(pre, conjoin([
            Implies(Xi(phi.agent, action, other), Knows(phi.agent, _translateBox(other, phi.operand, sig, fuel)))
            for other in sig.actions
        ]))
    # [σ][σ']ψ: translate the inner update first, the result has no [·] left
    return _translateBox(action, _translate(phi, sig, fuel), sig, fuel)

# =========================
# Axiom schemas
# =========================

TAUTOLOGIES: tuple[Callable[[Formula, Formula], Formula], ...] = (
    lambda phi, psi: Or(phi, Not(phi)),
    lambda phi, psi: Implies(phi, Implies(psi, phi)),
    lambda phi, psi: Implies(And(phi, psi), phi),
    lambda phi, psi: Not(And(phi, Not(phi))),
    lambda phi, psi: Iff(Implies(phi, psi), Implies(Not(psi), Not(phi))),
    lambda phi, psi: Implies(Not(Or(phi, psi)), Not(phi)),
)


@dataclass(frozen=True)
class AxiomSchema:
    id: str
    description: str
    metavariables: tuple[str, ...]
    build: Callable[[Mapping[str, Any], Signature], Formula]
    sound: bool = True


def _box10e(b: Mapping[str, Any], sig: Signature) -> Formula:
    agent, action, phi = b["agent"], b["sigma"], b["phi"]
    return Iff(
        UpdateDyn(action, Knows(agent, phi)),
        Implies(sig.precondition(action), conjoin([
            Implies(Xi(agent, action, other), Knows(agent, UpdateDyn(other, phi))) for other in sig.actions
        ])),
    )


_SCHEMAS = (
    AxiomSchema("1", "propositional tautology", ("tautology", "phi", "psi"),
                lambda b, sig: TAUTOLOGIES[b["tautology"] % len(TAUTOLOGIES)](b["phi"], b["psi"])),
    AxiomSchema("2", "K_a(φ -> ψ) -> (K_a φ -> K_a ψ)", ("agent", "phi", "psi"),
                lambda b, sig: Implies(Knows(b["agent"], Implies(b["phi"], b["psi"])),
                                       Implies(Knows(b["agent"], b["phi"]), Knows(b["agent"], b["psi"])))),
    AxiomSchema("3", "K_a φ -> φ", ("agent", "phi"),
                lambda b, sig: Implies(Knows(b["agent"], b["phi"]), b["phi"])),
    AxiomSchema("4", "K_a φ -> K_a K_a φ", ("agent", "phi"),
                lambda b, sig: Implies(Knows(b["agent"], b["phi"]), Knows(b["agent"], Knows(b["agent"], b["phi"])))),
    AxiomSchema("5", "!K_a φ -> K_a !K_a φ", ("agent", "phi"),
                lambda b, sig: Implies(Not(Knows(b["agent"], b["phi"])), Knows(b["agent"], Not(Knows(b["agent"], b["phi"]))))),
    AxiomSchema("6a", "xi(j,σ,σ)", ("agent", "sigma"),
                lambda b, sig: Xi(b["agent"], b["sigma"], b["sigma"])),
    AxiomSchema("6b", "xi(j,σ,σ') -> xi(j,σ',σ)", ("agent", "sigma", "sigma2"),
                lambda b, sig: Implies(Xi(b["agent"], b["sigma"], b["sigma2"]), Xi(b["agent"], b["sigma2"], b["sigma"]))),
    AxiomSchema("6c", "xi(j,σ,σ') -> (xi(j,σ',σ'') -> xi(j,σ,σ''))", ("agent", "sigma", "sigma2", "sigma3"),
                lambda b, sig: Implies(Xi(b["agent"], b["sigma"], b["sigma2"]),
                                       Implies(Xi(b["agent"], b["sigma2"], b["sigma3"]), Xi(b["agent"], b["sigma"], b["sigma3"])))),
    AxiomSchema("7a", "xi(j,σ,σ') -> K_j xi(j,σ,σ')", ("agent", "sigma", "sigma2"),
                lambda b, sig: Implies(Xi(b["agent"], b["sigma"], b["sigma2"]), Knows(b["agent"], Xi(b["agent"], b["sigma"], b["sigma2"])))),
    AxiomSchema("7b", "!xi(j,σ,σ') -> K_j !xi(j,σ,σ')", ("agent", "sigma", "sigma2"),
                lambda b, sig: Implies(Not(Xi(b["agent"], b["sigma"], b["sigma2"])),
                                       Knows(b["agent"], Not(Xi(b["agent"], b["sigma"], b["sigma2"]))))),
    AxiomSchema("9", "necessitation for K, as K_j(K_j φ -> φ)", ("agent", "phi"),
                lambda b, sig: Knows(b["agent"], Implies(Knows(b["agent"], b["phi"]), b["phi"]))),
    AxiomSchema("10a", "[σ](φ -> ψ) -> ([σ]φ -> [σ]ψ)", ("sigma", "phi", "psi"),
                lambda b, sig: Implies(UpdateDyn(b["sigma"], Implies(b["phi"], b["psi"])),
                                       Implies(UpdateDyn(b["sigma"], b["phi"]), UpdateDyn(b["sigma"], b["psi"])))),
    AxiomSchema("10b", "[σ]p <-> (pre_σ -> p)", ("sigma", "prop"),
                lambda b, sig: Iff(UpdateDyn(b["sigma"], Atom(b["prop"])), Implies(sig.precondition(b["sigma"]), Atom(b["prop"])))),
    AxiomSchema("10c", "[σ]!φ <-> (pre_σ -> ![σ]φ)", ("sigma", "phi"),
                lambda b, sig: Iff(UpdateDyn(b["sigma"], Not(b["phi"])),
                                   Implies(sig.precondition(b["sigma"]), Not(UpdateDyn(b["sigma"], b["phi"]))))),
    AxiomSchema("10d", "[σ](φ & ψ) <-> ([σ]φ & [σ]ψ)", ("sigma", "phi", "psi"),
                lambda b, sig: Iff(UpdateDyn(b["sigma"], And(b["phi"], b["psi"])),
                                   And(UpdateDyn(b["sigma"], b["phi"]), UpdateDyn(b["sigma"], b["psi"])))),
    AxiomSchema("10e", "[σ]K_a φ <-> (pre_σ -> AND over σ' of (xi(a,σ,σ') -> K_a[σ']φ))", ("agent", "sigma", "phi"), _box10e),
    AxiomSchema("11", "necessitation for [σ], as [σ](K_j φ -> φ)", ("sigma", "agent", "phi"),
                lambda b, sig: UpdateDyn(b["sigma"], Implies(Knows(b["agent"], b["phi"]), b["phi"]))),
    AxiomSchema("control", "[σ]K_a φ <-> K_a[σ]φ, not sound", ("agent", "sigma", "phi"),
                lambda b, sig: Iff(UpdateDyn(b["sigma"], Knows(b["agent"], b["phi"])), Knows(b["agent"], UpdateDyn(b["sigma"], b["phi"]))),
                sound=False),
)

AXIOMS: dict[str, AxiomSchema] = {schema.id: schema for schema in _SCHEMAS}
SOUND_SCHEMAS: tuple[str, ...] = tuple(schema.id for schema in _SCHEMAS if schema.sound)


def getSchema(schema: str | AxiomSchema) -> AxiomSchema:
    if isinstance(schema, AxiomSchema):
        return schema
    try:
        return AXIOMS[schema]
    except KeyError:
        raise UnknownIdentifier(schema, "axiom schema")


def instantiateAxiom(schema: str | AxiomSchema, bindings: Mapping[str, Any], sig: Signature) -> Formula:
    """
    Instance of an axiom schema.

    Params:
        schema: Schema id such as "10e", or the schema itself
        bindings: Values of the metavariables: formulas for phi/psi, names for agent/sigma/sigma2/sigma3/prop,
            an index for tautology
        sig: Signature resolving pre_σ and Σ

    Returns:
        Formula: the instance
    """
    schema = getSchema(schema)
    for name in schema.metavariables:
        if name not in bindings:
            raise MissingBinding(schema.id, name)
    return schema.build(bindings, sig)


def randomBindings(rng: random.Random, sig: Signature, depth: int = FuzzDefault.FORMULA_DEPTH) -> dict[str, Any]:
    """
    One random value for every metavariable any schema uses. Formulas have at most one update operator.
    """
    return {
        "phi": randomFormula(rng, sig, depth, Fragment.DL_PLUS, maxUpdates=1),
        "psi": randomFormula(rng, sig, depth, Fragment.DL_PLUS, maxUpdates=1),
        "agent": rng.choice(sig.agents),
        "sigma": rng.choice(sig.actions),
        "sigma2": rng.choice(sig.actions),
        "sigma3": rng.choice(sig.actions),
        "prop": rng.choice(sig.props),
        "tautology": rng.randrange(len(TAUTOLOGIES)),
    }

# =========================
# Fuzzing
# =========================

def soundnessFuzz(
    schemas: Sequence[str] = SOUND_SCHEMAS,
    trials: int = FuzzDefault.TRIALS,
    params: RandomModelParams | None = None,
    seed: int = FuzzDefault.SEED,
) -> FuzzReport:
    """
    Check schema instances for validity on random dynamic models.

    Each trial draws sizes up to the ones in `params`, a signature, a model and one set of bindings,
    then checks every schema instance on the whole model.

    Params:
        schemas: Schema ids to test
        trials: Number of random models, at least 1
        params: Max world, agent, prop and action counts
        seed: Trial t uses the seed `seed + t`

    Returns:
        FuzzReport: one failure per (schema, trial) whose instance is not valid, sorted by seed
    """
    if trials < 1:
        raise ValueError("Fuzzing needs at least one trial")
    params = params or RandomModelParams()
    resolved = [getSchema(s) for s in schemas]
    failures: list[FuzzFailure] = []

    for trial in range(trials):
        trial_seed = seed + trial
        rng = random.Random(trial_seed)
        sig = randomSignature(
            rng, rng.randint(1, params.agent_count), rng.randint(1, params.prop_count), rng.randint(1, params.action_count),
        )
        model = randomDynamicModel(RandomModelParams(world_count=rng.randint(1, params.world_count), seed=trial_seed), sig)
        ctx = EvalContext(model)
        bindings = randomBindings(rng, sig)

        for schema in resolved:
            phi = instantiateAxiom(schema, bindings, sig)
            refuted = ctx.worlds - truthSet(ctx, phi)
            if refuted:
                witness = next(w for w in model.worlds if w in refuted)
                failures.append(FuzzFailure(schema_id=schema.id, seed=trial_seed, world=worldLabel(witness), formula=renderFormula(phi)))

        if (trial + 1) % 100 == 0:
            logger.info("Fuzzing: %d/%d trials, %d failures", trial + 1, trials, len(failures))

    failures.sort(key=lambda f: (f.seed, f.schema_id))
    return FuzzReport(trials=trials, seed=seed, schemas=[s.id for s in resolved], failures=failures)


def checkTranslationEquivalence(phi: Formula, model: DynamicModel, ctx: EvalContext | None = None) -> bool:
    """
    Check that φ and t(φ) have the same truth set in a dynamic model.
    """
    ctx = ctx or EvalContext(model)
    return truthSet(ctx, phi) == truthSet(ctx, translate(phi, model.sig))
