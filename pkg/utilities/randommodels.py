"""
Seeded generators of signatures, models and formulas for the property suites and the fuzzer.

Every generator takes a `random.Random` (or a seed) so the same seed always gives the same
object. Set partitions are drawn uniformly among all partitions of the set.
"""
from __future__ import annotations
import random
import string
from functools import lru_cache
from math import comb
from typing import Hashable, Sequence

from pydantic import BaseModel, Field

from configs.config_fuzz import FuzzDefault
from utilities.action_update import ActionModel
from utilities.dynamic import DynamicModel
from utilities.formula import (
    And, Atom, Formula, Fragment, Knows, Not, Or, Signature, UpdateAM, UpdateDyn, Xi, buildSignature,
)
from utilities.kripke import EpistemicModel
from utilities.partition import Partition

PROP_NAMES = "pqrstuvw"


class RandomModelParams(BaseModel):
    world_count: int = Field(default=FuzzDefault.MAX_WORLDS, ge=1)
    agent_count: int = Field(default=FuzzDefault.AGENTS, ge=1)
    prop_count: int = Field(default=FuzzDefault.PROPS, ge=1)
    action_count: int = Field(default=FuzzDefault.ACTIONS, ge=1)
    seed: int = FuzzDefault.SEED


@lru_cache(maxsize=None)
def bellNumber(n: int) -> int:
    """
    Number of partitions of an n-element set.
    """
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bellNumber(k) for k in range(n))


def randomPartition(rng: random.Random, elements: Sequence[Hashable]) -> Partition:
    """
    Uniformly random partition of the given elements.

    The block of the first remaining element gets k more members with probability
    proportional to C(n, k) * Bell(n - k), which counts the partitions having such a block.

    Params:
        rng: Random source
        elements: Elements to partition

    Returns:
        Partition: blocks listed in element order
    """
    remaining = list(elements)
    blocks = []
    while remaining:
        first, rest = remaining[0], remaining[1:]
        n = len(rest)
        weights = [comb(n, k) * bellNumber(n - k) for k in range(n + 1)]
        k = rng.choices(range(n + 1), weights=weights)[0]
        mates = set(rng.sample(rest, k))
        blocks.append([first] + [x for x in rest if x in mates])
        remaining = [x for x in rest if x not in mates]
    return Partition(blocks)


def _names(prefix: str, letters: str, count: int) -> list[str]:
    if count <= len(letters):
        return list(letters[:count])
    return [f"{prefix}{i}" for i in range(count)]


def _randomPrecondition(rng: random.Random, props: Sequence[str]) -> Formula:
    literal = lambda: Atom(rng.choice(props)) if rng.random() < 0.5 else Not(Atom(rng.choice(props)))
    roll = rng.random()
    if roll < 0.2:
        p = Atom(rng.choice(props))
        return Or(p, Not(p))
    if roll < 0.7:
        return literal()
    return And(literal(), literal())


def randomSignature(rng: random.Random, agentCount: int, propCount: int, actionCount: int) -> Signature:
    """
    Signature with agents a, b, ..., propositions p, q, ... and actions e0, e1, ...
    Preconditions are random literals, conjunctions of two literals or tautologies.
    """
    agents = _names("j", string.ascii_lowercase, agentCount)
    props = _names("p", PROP_NAMES, propCount)
    pre = {f"e{i}": _randomPrecondition(rng, props) for i in range(actionCount)}
    return buildSignature(agents, props, pre)


def randomEpistemicModel(rng: random.Random, sig: Signature, worldCount: int) -> EpistemicModel:
    worlds = tuple(f"w{i}" for i in range(worldCount))
    indist = {agent: randomPartition(rng, worlds) for agent in sig.agents}
    valuation = {prop: frozenset(w for w in worlds if rng.random() < 0.5) for prop in sig.props}
    return EpistemicModel(worlds, sig.agents, sig.props, indist, valuation)


def randomActionModel(rng: random.Random, sig: Signature, name: str = "A") -> ActionModel:
    """
    Action model on all of the signature's actions with uniformly random ≈_j.
    """
    indist = {agent: randomPartition(rng, sig.actions) for agent in sig.agents}
    return ActionModel(name, sig.actions, sig.agents, indist, dict(sig.pre))


def randomDynamicModel(params: RandomModelParams, sig: Signature | None = None) -> DynamicModel:
    """
    Random well-formed dynamic model.

    Params:
        params: Sizes and seed. Agent, prop and action counts are only used when `sig` is None.
        sig: Signature to build over

    Returns:
        DynamicModel: uniform ∼_j per agent, one uniform partition of Σ per ∼_j class
            (so C1 and C2 hold by construction), uniform valuation
    """
    rng = random.Random(params.seed)
    if sig is None:
        sig = randomSignature(rng, params.agent_count, params.prop_count, params.action_count)
    base = randomEpistemicModel(rng, sig, params.world_count)

    f = {}
    for agent in sig.agents:
        f[agent] = {}
        for world_class in base.partition(agent):
            partition = randomPartition(rng, sig.actions)
            for w in world_class:
                f[agent][w] = partition
    return DynamicModel(base, f, sig)


def randomFormula(
    rng: random.Random,
    sig: Signature,
    depth: int,
    language: Fragment = Fragment.DL_PLUS,
    maxUpdates: int | None = None,
    actionModel: str | None = None,
) -> Formula:
    """
    Random formula of bounded depth.

    Params:
        rng: Random source
        sig: Names to draw from
        depth: Max nesting of connectives
        language: Fragment to stay in. xi atoms appear in the + fragments, `[σ]` in L_DL
            and L_DL+, `[actionModel:σ]` in L_AL.
        maxUpdates: Max nesting of update operators. None leaves it to `depth`.
        actionModel: Name used by `[A:σ]` nodes, needed for L_AL

    Returns:
        Formula: the formula
    """
    if language == Fragment.AL and actionModel is None:
        raise ValueError("Formulas of L_AL need an action model name")
    with_xi = language in (Fragment.EL_PLUS, Fragment.DL_PLUS)
    with_updates = language in (Fragment.DL, Fragment.DL_PLUS, Fragment.AL)
    updates_left = depth if maxUpdates is None else maxUpdates

    def build(level: int, updates: int) -> Formula:
        if level <= 0 or rng.random() < 0.25:
            if with_xi and rng.random() < 0.3:
                return Xi(rng.choice(sig.agents), rng.choice(sig.actions), rng.choice(sig.actions))
            return Atom(rng.choice(sig.props))

        kinds = ["not", "and", "knows"]
        if with_updates and updates > 0:
            kinds.append("update")
        kind = rng.choice(kinds)
        if kind == "not":
            return Not(build(level - 1, updates))
        if kind == "and":
            return And(build(level - 1, updates), build(level - 1, updates))
        if kind == "knows":
            return Knows(rng.choice(sig.agents), build(level - 1, updates))
        action = rng.choice(sig.actions)
        if language == Fragment.AL:
            return UpdateAM(actionModel, action, build(level - 1, updates - 1))
        return UpdateDyn(action, build(level - 1, updates - 1))

    return build(depth, updates_left)
