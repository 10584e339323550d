"""
Action models and the product update M^A.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from utilities.exceptions import EmptyActionSet, EmptyProduct, NameCollision, UnknownAction, UnknownIdentifier, UnsupportedFragment
from utilities.formula import Formula, Signature, isEpistemic
from utilities.kripke import EpistemicModel, extension
from utilities.partition import Partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ActionModel:
    name: str
    actions: tuple[str, ...]
    agents: tuple[str, ...]
    indist: Mapping[str, Partition]
    pre: Mapping[str, Formula]

    def partition(self, agent: str) -> Partition:
        """
        ≈_j of an agent. An agent the model does not mention tells every action apart.
        """
        return self.indist.get(agent) or Partition.discrete(self.actions)

    def precondition(self, action: str) -> Formula:
        try:
            return self.pre[action]
        except KeyError:
            raise UnknownAction(action)


def buildActionModel(name: str, actions: Sequence[str], edges: Iterable[tuple[str, str, str]], sig: Signature) -> ActionModel:
    """
    Build an action model over a signature.

    Params:
        name: Name the model is bound to in `[name:σ]` formulas
        actions: Actions of the model, a subset of the signature's actions
        edges: (agent, action, action) triples, closed to an equivalence per agent
        sig: Signature supplying agents and preconditions

    Returns:
        ActionModel: the model
    """
    actions = tuple(dict.fromkeys(actions))
    if not actions:
        raise EmptyActionSet(f"Action model {name} has no actions")
    for action in actions:
        if action not in sig.actions:
            raise UnknownAction(action)

    per_agent: dict[str, list] = {agent: [] for agent in sig.agents}
    for agent, first, second in edges:
        if agent not in per_agent:
            raise UnknownIdentifier(agent, "agent")
        for action in (first, second):
            if action not in actions:
                raise UnknownAction(action)
        per_agent[agent].append((first, second))

    indist = {agent: Partition.fromEdges(actions, pairs) for agent, pairs in per_agent.items()}
    return ActionModel(name, actions, tuple(sig.agents), indist, {a: sig.precondition(a) for a in actions})


def productUpdate(M: EpistemicModel, A: ActionModel) -> EpistemicModel:
    """
    Restricted product of an epistemic model and an action model.

    Worlds are the pairs (w, σ) with w ⊨ Pre(σ). Two pairs are j-related when both the worlds
    and the actions are. Valuation is taken from the world component.

    Params:
        M: Epistemic model
        A: Action model

    Returns:
        EpistemicModel: M^A
    """
    memo: dict = {}
    executable = {action: extension(M, A.precondition(action), memo) for action in A.actions}
    worlds = tuple((w, action) for w in M.worlds for action in A.actions if w in executable[action])
    if not worlds:
        raise EmptyProduct(f"No world of the model satisfies a precondition of {A.name}")
    alive = frozenset(worlds)

    indist = {}
    for agent in M.agents:
        blocks = []
        for world_class in M.partition(agent):
            for action_class in A.partition(agent):
                blocks.append([(w, a) for w in world_class for a in action_class if (w, a) in alive])
        indist[agent] = Partition(blocks)

    valuation = {prop: frozenset(pair for pair in worlds if pair[0] in true_worlds) for prop, true_worlds in M.valuation.items()}
    logger.debug("Product with %s: %d worlds from %d", A.name, len(worlds), len(M.worlds))
    return EpistemicModel(worlds, M.agents, M.props, indist, valuation)


def publicAnnouncementModel(phi: Formula, agents: Sequence[str], name: str = "PA", action: str = "announce") -> ActionModel:
    """
    The single-action model of a public announcement of φ.

    Params:
        phi: Announced formula, in L_EL
        agents: Agents of the model
        name: Model name
        action: Name of the single action

    Returns:
        ActionModel: one action with precondition φ
    """
    if not isEpistemic(phi):
        raise UnsupportedFragment("Announced formulas must be in L_EL")
    indist = {agent: Partition.discrete([action]) for agent in agents}
    return ActionModel(name, (action,), tuple(agents), indist, {action: phi})


def disjointUnionActions(models: Sequence[ActionModel], name: str | None = None) -> ActionModel:
    """
    Disjoint union of action models. Actions of different models are never related.

    Params:
        models: Action models with pairwise distinct action names
        name: Name of the union. Defaults to the member names joined by "+".

    Returns:
        ActionModel: the union
    """
    if not models:
        raise EmptyActionSet("Disjoint union of no action models")

    seen: dict[str, int] = {}
    for A in models:
        for action in A.actions:
            seen[action] = seen.get(action, 0) + 1
    clashes = sorted(a for a, count in seen.items() if count > 1)
    if clashes:
        raise NameCollision(clashes)

    agents = tuple(dict.fromkeys(agent for A in models for agent in A.agents))
    indist = {agent: Partition([block for A in models for block in A.partition(agent)]) for agent in agents}
    pre = {action: A.pre[action] for A in models for action in A.actions}
    actions = tuple(action for A in models for action in A.actions)
    return ActionModel(name or "+".join(A.name for A in models), actions, agents, indist, pre)
