"""
Dynamic models: epistemic models where each agent's action indistinguishability depends on the world.

f_j(w) is a partition of the action set Σ. Well-formed models satisfy

    C1: w ∼_j w' implies f_j(w) = f_j(w')
    C2: every f_j(w) is an equivalence relation on Σ

Since C1 makes f_j constant on each ∼_j class, every world of a class shares one Partition object.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from scenarios.outputmodel import ValidationReport, Violation
from utilities.action_update import ActionModel
from utilities.exceptions import C1Violation, EmptyProduct, UnknownAction, UnknownIdentifier, UnknownWorld, UnsupportedFragment
from utilities.formula import Formula, Signature, isEpistemic
from utilities.kripke import EpistemicModel, WorldId, extension, worldLabel
from utilities.partition import Partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DynamicModel:
    base: EpistemicModel
    f: Mapping[str, Mapping[WorldId, Partition]]
    sig: Signature

    @property
    def actions(self) -> tuple[str, ...]:
        return self.sig.actions

    @property
    def worlds(self) -> tuple[WorldId, ...]:
        return self.base.worlds

    def actionPartition(self, agent: str, world: WorldId) -> Partition:
        """
        f_j(w).
        """
        if agent not in self.f:
            raise UnknownIdentifier(agent, "agent")
        try:
            return self.f[agent][world]
        except KeyError:
            raise UnknownWorld(world)


def _checkWorld(base: EpistemicModel, world: WorldId):
    if not base.hasWorld(world):
        raise UnknownWorld(world)

def _checkAgent(base: EpistemicModel, agent: str):
    if agent not in base.agents:
        raise UnknownIdentifier(agent, "agent")

def _checkAction(sig: Signature, action: str):
    if action not in sig.actions:
        raise UnknownAction(action)


def _shareAcrossClasses(base: EpistemicModel, f: Mapping[str, Mapping[WorldId, Partition]]) -> dict:
    # Valid models only: each class reuses the partition of its first world.
    shared = {}
    for agent, per_world in f.items():
        shared[agent] = {}
        for world_class in base.partition(agent):
            partition = per_world[world_class[0]]
            for w in world_class:
                shared[agent][w] = partition
    return shared


def _finish(base: EpistemicModel, f: dict, sig: Signature) -> DynamicModel:
    model = DynamicModel(base, f, sig)
    report = validate(model)
    if not report.ok:
        raise C1Violation(report.violations)
    return DynamicModel(base, _shareAcrossClasses(base, f), sig)


def buildDynamicModel(base: EpistemicModel, fEdges: Iterable[tuple[str, WorldId, str, str]], sig: Signature) -> DynamicModel:
    """
    Build a dynamic model from pairs of confusable actions.

    Params:
        base: Epistemic model
        fEdges: (agent, world, action, action) quadruples. The pairs given at a world are
            closed to an equivalence on Σ; a world with no pairs gets the identity.
        sig: Signature whose actions are Σ

    Returns:
        DynamicModel: the validated model

    Raises:
        C1Violation: if some f_j differs inside a ∼_j class. The model is never repaired.
    """
    pairs: dict[str, dict] = {agent: {w: [] for w in base.worlds} for agent in base.agents}
    for agent, world, first, second in fEdges:
        _checkAgent(base, agent)
        _checkWorld(base, world)
        _checkAction(sig, first)
        _checkAction(sig, second)
        pairs[agent][world].append((first, second))

    f = {agent: {w: Partition.fromEdges(sig.actions, per_world[w]) for w in base.worlds} for agent, per_world in pairs.items()}
    return _finish(base, f, sig)


def buildGuardedDynamicModel(
    base: EpistemicModel,
    rules: Sequence[tuple[str, Formula | None, Sequence[Sequence[str]]]],
    sig: Signature,
) -> DynamicModel:
    """
    Build a dynamic model from guarded partitions, e.g. "f_a(w) = id if w ⊨ r, else Σ×Σ".

    Params:
        base: Epistemic model
        rules: (agent, guard, partition) triples. At each world the first rule of the agent whose
            guard holds there applies; a None guard always holds. Worlds no rule matches get the identity.
        sig: Signature whose actions are Σ

    Returns:
        DynamicModel: the validated model
    """
    identity = Partition.discrete(sig.actions)
    f: dict[str, dict] = {agent: {} for agent in base.agents}
    memo: dict = {}

    for agent, guard, blocks in rules:
        _checkAgent(base, agent)
        for block in blocks:
            for action in block:
                _checkAction(sig, action)
        if guard is None:
            matching = base.worldSet
        elif not isEpistemic(guard):
            raise UnsupportedFragment("Guards of f must be in L_EL")
        else:
            matching = extension(base, guard, memo)

        partition = Partition(blocks)
        for w in base.worlds:
            if w in matching and w not in f[agent]:
                f[agent][w] = partition

    for agent in base.agents:
        for w in base.worlds:
            f[agent].setdefault(w, identity)
    return _finish(base, f, sig)


def validate(M: DynamicModel) -> ValidationReport:
    """
    List every breach of C1, C2 and totality of f.

    Params:
        M: Dynamic model, possibly malformed

    Returns:
        ValidationReport: empty iff the model is well-formed. C1 breaches name the first world
            of the class and the world whose partition differs from it.
    """
    violations = []
    for agent in M.base.agents:
        per_world = M.f.get(agent)
        if per_world is None:
            violations.append(Violation(condition="totality", agent=agent, worlds=[], detail="f is not defined for this agent"))
            continue

        missing = [w for w in M.base.worlds if w not in per_world]
        if missing:
            violations.append(Violation(
                condition="totality", agent=agent, worlds=[worldLabel(w) for w in missing], detail="f is not defined at these worlds",
            ))

        for w in M.base.worlds:
            if w in per_world and not per_world[w].isPartitionOf(M.actions):
                violations.append(Violation(
                    condition="C2", agent=agent, worlds=[worldLabel(w)], detail=f"{per_world[w]!r} is not a partition of the actions",
                ))

        for world_class in M.base.partition(agent):
            defined = [w for w in world_class if w in per_world]
            if not defined:
                continue
            first = defined[0]
            for w in defined[1:]:
                if per_world[w] != per_world[first]:
                    violations.append(Violation(
                        condition="C1", agent=agent, worlds=[worldLabel(first), worldLabel(w)],
                        detail=f"{per_world[first]!r} != {per_world[w]!r}",
                    ))
    return ValidationReport(violations=violations)


def updatePlus(M: DynamicModel) -> DynamicModel:
    """
    Perform every executable action at once.

    Worlds are the pairs (w, σ) with w ⊨ Pre(σ). (w,σ) ∼⁺_j (w',σ') iff w ∼_j w' and
    (σ,σ') ∈ f_j(w). The new f inherits f⁺_j(w,σ) = f_j(w).

    Params:
        M: Well-formed dynamic model

    Returns:
        DynamicModel: M⁺, validated again
    """
    base = M.base
    memo: dict = {}
    executable = {action: extension(base, M.sig.precondition(action), memo) for action in M.actions}
    worlds = tuple((w, action) for w in base.worlds for action in M.actions if w in executable[action])
    if not worlds:
        raise EmptyProduct("No world of the dynamic model satisfies any precondition")
    alive = frozenset(worlds)

    indist = {}
    f_plus = {}
    for agent in base.agents:
        blocks = []
        f_plus[agent] = {}
        for world_class in base.partition(agent):
            action_partition = M.f[agent][world_class[0]]
            for action_class in action_partition:
                blocks.append([(w, a) for w in world_class for a in action_class if (w, a) in alive])
        indist[agent] = Partition(blocks)
        for pair in worlds:
            f_plus[agent][pair] = M.f[agent][pair[0]]

    valuation = {prop: frozenset(pair for pair in worlds if pair[0] in true_worlds) for prop, true_worlds in base.valuation.items()}
    updated = DynamicModel(EpistemicModel(worlds, base.agents, base.props, indist, valuation), f_plus, M.sig)

    report = validate(updated)
    if not report.ok:
        raise C1Violation(report.violations)
    logger.debug("Updated dynamic model: %d worlds from %d", len(worlds), len(base.worlds))
    return updated


def embedActionModel(M: EpistemicModel, A: ActionModel) -> DynamicModel:
    """
    Dynamic model with the constant f_j(w) = ≈_j of the action model.

    Params:
        M: Epistemic model
        A: Action model over the same agents

    Returns:
        DynamicModel: base M, Σ and Pre taken from A
    """
    sig = Signature(M.agents, M.props, A.actions, dict(A.pre))
    f = {}
    for agent in M.agents:
        partition = A.partition(agent)
        f[agent] = {w: partition for w in M.worlds}
    return DynamicModel(M, f, sig)


def epistemicPart(M: DynamicModel) -> EpistemicModel:
    return M.base
