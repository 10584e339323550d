"""
S5 epistemic models: construction from edge lists, truth sets of epistemic formulas,
restriction, disjoint union and bisimulation.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

from utilities.exceptions import (
    EmptyModel, EmptyRestriction, FragmentMismatch, UnknownIdentifier, UnknownWorld, UnsupportedFragment,
)
from utilities.formula import And, Atom, Formula, Knows, Not, isEpistemic
from utilities.partition import Partition

logger = logging.getLogger(__name__)

WorldId = Hashable


class CopyOf(NamedTuple):
    """A world renamed apart by a disjoint union."""
    copy: int
    world: WorldId


def worldLabel(world: WorldId) -> str:
    """
    Printable name of a world: `w0`, `(w0,sp)`, `((w0,sp),snp)`, `copy1.w0`.
    """
    if isinstance(world, CopyOf):
        return f"copy{world.copy}.{worldLabel(world.world)}"
    if isinstance(world, tuple):
        return f"({worldLabel(world[0])},{world[1]})"
    return str(world)


@dataclass(frozen=True)
class EpistemicModel:
    worlds: tuple[WorldId, ...]
    agents: tuple[str, ...]
    props: tuple[str, ...]
    indist: Mapping[str, Partition]
    valuation: Mapping[str, frozenset]

    @cached_property
    def worldSet(self) -> frozenset:
        return frozenset(self.worlds)

    def hasWorld(self, world: WorldId) -> bool:
        return world in self.worldSet

    def partition(self, agent: str) -> Partition:
        try:
            return self.indist[agent]
        except KeyError:
            raise UnknownIdentifier(agent, "agent")

    def classOf(self, agent: str, world: WorldId) -> tuple[WorldId, ...]:
        return self.partition(agent).classOf(world)

    def holds(self, prop: str, world: WorldId) -> bool:
        return world in self.valuation.get(prop, frozenset())

    def trueAtoms(self, world: WorldId) -> list[str]:
        return [p for p in self.props if self.holds(p, world)]

    def __len__(self) -> int:
        return len(self.worlds)


def buildEpistemicModel(
    worlds: Sequence[WorldId],
    edges: Iterable[tuple[str, WorldId, WorldId]],
    valuation: Mapping[str, Iterable[WorldId]],
    agents: Sequence[str] | None = None,
    props: Sequence[str] | None = None,
) -> EpistemicModel:
    """
    Build an S5 model. Reflexive loops and edges implied by symmetry or transitivity are added.

    Params:
        worlds: World names, in output order
        edges: (agent, world, world) triples
        valuation: For each proposition, the worlds where it is true
        agents: Every agent of the model. Defaults to the agents found in `edges`.
        props: Every proposition of the model. Defaults to the keys of `valuation`.

    Returns:
        EpistemicModel: the model, one partition per agent
    """
    worlds = tuple(dict.fromkeys(worlds))
    if not worlds:
        raise EmptyModel("An epistemic model needs at least one world")
    known = set(worlds)

    edges = list(edges)
    if agents is None:
        agents = list(dict.fromkeys(agent for agent, _, _ in edges))
    if props is None:
        props = list(valuation.keys())

    per_agent: dict[str, list] = {agent: [] for agent in agents}
    for agent, first, second in edges:
        for w in (first, second):
            if w not in known:
                raise UnknownWorld(w)
        if agent not in per_agent:
            raise UnknownIdentifier(agent, "agent")
        per_agent[agent].append((first, second))

    truth: dict[str, frozenset] = {}
    for prop in props:
        truth[prop] = frozenset()
    for prop, true_worlds in valuation.items():
        if prop not in truth:
            raise UnknownIdentifier(prop, "proposition")
        true_worlds = frozenset(true_worlds)
        for w in true_worlds - known:
            raise UnknownWorld(w)
        truth[prop] = true_worlds

    indist = {agent: Partition.fromEdges(worlds, pairs) for agent, pairs in per_agent.items()}
    return EpistemicModel(worlds, tuple(agents), tuple(props), indist, truth)

# =========================
# Epistemic truth sets
# =========================

def extension(M: EpistemicModel, phi: Formula, memo: dict | None = None) -> frozenset:
    """
    Worlds of M where an epistemic formula holds. Knowledge is read off the agent's classes.

    Params:
        M: Epistemic model
        phi: Formula of L_EL
        memo: Optional cache shared across calls on the same model

    Returns:
        frozenset: the truth set
    """
    if memo is not None and phi in memo:
        return memo[phi]

    if isinstance(phi, Atom):
        if phi.name not in M.valuation:
            raise UnknownIdentifier(phi.name, "proposition")
        result = M.valuation[phi.name]
    elif isinstance(phi, Not):
        result = M.worldSet - extension(M, phi.operand, memo)
    elif isinstance(phi, And):
        result = extension(M, phi.left, memo) & extension(M, phi.right, memo)
    elif isinstance(phi, Knows):
        inner = extension(M, phi.operand, memo)
        result = frozenset(w for block in M.partition(phi.agent) if inner.issuperset(block) for w in block)
    else:
        raise FragmentMismatch(f"{type(phi).__name__} cannot be evaluated on a plain epistemic model")

    if memo is not None:
        memo[phi] = result
    return result


def satisfies(M: EpistemicModel, world: WorldId, phi: Formula) -> bool:
    if not M.hasWorld(world):
        raise UnknownWorld(world)
    return world in extension(M, phi)

# =========================
# Restriction and union
# =========================

def restrictWorlds(M: EpistemicModel, keep: Iterable[WorldId]) -> EpistemicModel:
    """
    Submodel on the given worlds. Classes and valuation are cut down; S5 is preserved.
    """
    keep = frozenset(keep) & M.worldSet
    if not keep:
        raise EmptyRestriction("Restriction leaves no world")
    worlds = tuple(w for w in M.worlds if w in keep)
    indist = {agent: partition.restrict(keep) for agent, partition in M.indist.items()}
    valuation = {prop: true_worlds & keep for prop, true_worlds in M.valuation.items()}
    return EpistemicModel(worlds, M.agents, M.props, indist, valuation)


def restrict(M: EpistemicModel, phi: Formula) -> EpistemicModel:
    """
    M restricted to the worlds where φ holds: the effect of publicly announcing φ.

    Params:
        M: Epistemic model
        phi: Formula of L_EL

    Returns:
        EpistemicModel: M|φ
    """
    if not isEpistemic(phi):
        raise UnsupportedFragment("Restriction is defined for L_EL formulas")
    return restrictWorlds(M, extension(M, phi))


def disjointUnion(M1: EpistemicModel, M2: EpistemicModel) -> EpistemicModel:
    """
    Side-by-side copy of two models. Worlds become `CopyOf(1, w)` and `CopyOf(2, w)`.
    An agent missing from one side is treated as distinguishing everything there.
    """
    agents = tuple(dict.fromkeys(M1.agents + M2.agents))
    props = tuple(dict.fromkeys(M1.props + M2.props))
    worlds = tuple(CopyOf(1, w) for w in M1.worlds) + tuple(CopyOf(2, w) for w in M2.worlds)

    indist = {}
    for agent in agents:
        blocks = []
        for copy, M in ((1, M1), (2, M2)):
            partition = M.indist.get(agent) or Partition.discrete(M.worlds)
            blocks.extend([CopyOf(copy, w) for w in block] for block in partition)
        indist[agent] = Partition(blocks)

    valuation = {
        prop: frozenset(CopyOf(1, w) for w in M1.valuation.get(prop, ()))
        | frozenset(CopyOf(2, w) for w in M2.valuation.get(prop, ()))
        for prop in props
    }
    return EpistemicModel(worlds, agents, props, indist, valuation)

# =========================
# Bisimulation
# =========================

def bisimulationClasses(M: EpistemicModel) -> Partition:
    """
    Coarsest bisimulation of a model, by partition refinement.

    Worlds start out grouped by the atoms true at them. Each round splits a group when its
    members see different sets of groups through some agent's class. The loop stops when a
    round splits nothing.

    Params:
        M: Epistemic model

    Returns:
        Partition: the bisimulation classes
    """
    block_of = {w: tuple(M.holds(p, w) for p in M.props) for w in M.worlds}
    count = len(set(block_of.values()))

    while True:
        signature = {
            w: (block_of[w], tuple(frozenset(block_of[v] for v in M.classOf(agent, w)) for agent in M.agents))
            for w in M.worlds
        }
        ids: dict = {}
        block_of = {w: ids.setdefault(signature[w], len(ids)) for w in M.worlds}
        if len(ids) == count:
            break
        count = len(ids)

    groups: dict[int, list] = {}
    for w in M.worlds:
        groups.setdefault(block_of[w], []).append(w)
    return Partition(groups.values())


def bisimilar(M1: EpistemicModel, w1: WorldId, M2: EpistemicModel, w2: WorldId) -> bool:
    """
    Check whether two pointed models are bisimilar with respect to every atom and agent.

    Params:
        M1, w1: First pointed model
        M2, w2: Second pointed model

    Returns:
        bool: True iff (M1,w1) and (M2,w2) land in the same class of the coarsest bisimulation of their disjoint union
    """
    if not M1.hasWorld(w1):
        raise UnknownWorld(w1)
    if not M2.hasWorld(w2):
        raise UnknownWorld(w2)
    classes = bisimulationClasses(disjointUnion(M1, M2))
    return classes.related(CopyOf(1, w1), CopyOf(2, w2))


def sameModel(M1: EpistemicModel, M2: EpistemicModel) -> bool:
    """
    Isomorphism under the identity on world names: same worlds, same classes per agent, same valuation.
    """
    if M1.worldSet != M2.worldSet or set(M1.agents) != set(M2.agents):
        return False
    if any(M1.indist[agent] != M2.indist[agent] for agent in M1.agents):
        return False
    props = set(M1.props) | set(M2.props)
    return all(M1.valuation.get(p, frozenset()) == M2.valuation.get(p, frozenset()) for p in props)
