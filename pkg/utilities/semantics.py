"""
One evaluator for every language: epistemic formulas, xi atoms, `[A:σ]` over action models
and `[σ]` over dynamic models.

Evaluation works on truth sets. A context caches the truth set of every formula it has seen
and keeps the updated models it has built (M⁺ once, M^A once per action model), so
`[σ][σ']φ` builds M⁺ and M⁺⁺ a single time each.
"""
from __future__ import annotations
import logging
from typing import Mapping

from cachetools import LRUCache

from configs.config_app import EVAL_CACHE_SIZE
from utilities.action_update import ActionModel, productUpdate
from utilities.dynamic import DynamicModel, updatePlus
from utilities.exceptions import FragmentMismatch, UnboundActionModel, UnknownAction, UnknownIdentifier, UnknownWorld
from utilities.formula import And, Atom, Formula, Knows, Not, UpdateAM, UpdateDyn, Xi, fragment
from utilities.kripke import EpistemicModel, WorldId

logger = logging.getLogger(__name__)


class EvalContext:
    """
    Evaluation state for one model. Not meant to be shared between threads; build one context per
    evaluator over the same (immutable) model instead.

    Params:
        model: EpistemicModel or DynamicModel
        actionModels: Action models `[name:σ]` may refer to
        cached: Keep truth sets between calls. Turning it off only costs time.
        cacheSize: Max number of truth sets kept
    """

    def __init__(
        self,
        model: EpistemicModel | DynamicModel,
        actionModels: Mapping[str, ActionModel] | None = None,
        cached: bool = True,
        cacheSize: int = EVAL_CACHE_SIZE,
    ):
        self.model = model
        self.actionModels = dict(actionModels or {})
        self.cached = cached
        self.cacheSize = cacheSize
        self.cache = LRUCache(maxsize=cacheSize) if cached else None
        self._plus: EvalContext | None = None
        self._products: dict[str, EvalContext] = {}

    @property
    def epistemic(self) -> EpistemicModel:
        return self.model.base if isinstance(self.model, DynamicModel) else self.model

    @property
    def worlds(self) -> frozenset:
        return self.epistemic.worldSet

    def _child(self, model) -> EvalContext:
        return EvalContext(model, self.actionModels, self.cached, self.cacheSize)

    def plusContext(self) -> EvalContext:
        if self._plus is None:
            self._plus = self._child(updatePlus(self.model))
        else:
            logger.debug("Reusing updated dynamic model")
        return self._plus

    def productContext(self, name: str) -> EvalContext:
        if name not in self._products:
            self._products[name] = self._child(productUpdate(self.epistemic, self.actionModel(name)))
        else:
            logger.debug("Reusing product with %s", name)
        return self._products[name]

    def actionModel(self, name: str) -> ActionModel:
        try:
            return self.actionModels[name]
        except KeyError:
            raise UnboundActionModel(name)

    def dynamic(self, phi: Formula) -> DynamicModel:
        if not isinstance(self.model, DynamicModel):
            raise FragmentMismatch(f"{type(phi).__name__} needs a dynamic model")
        return self.model

    def extension(self, phi: Formula) -> frozenset:
        if self.cache is not None:
            hit = self.cache.get(phi)
            if hit is not None:
                return hit
        result = self._compute(phi)
        if self.cache is not None:
            self.cache[phi] = result
        return result

    def _compute(self, phi: Formula) -> frozenset:
        M = self.epistemic

        if isinstance(phi, Atom):
            if phi.name not in M.valuation:
                raise UnknownIdentifier(phi.name, "proposition")
            return M.valuation[phi.name]

        if isinstance(phi, Not):
            return M.worldSet - self.extension(phi.operand)

        if isinstance(phi, And):
            return self.extension(phi.left) & self.extension(phi.right)

        if isinstance(phi, Knows):
            inner = self.extension(phi.operand)
            return frozenset(w for block in M.partition(phi.agent) if inner.issuperset(block) for w in block)

        if isinstance(phi, Xi):
            D = self.dynamic(phi)
            for action in (phi.performed, phi.confusable):
                if action not in D.actions:
                    raise UnknownAction(action)
            return frozenset(w for w in M.worlds if D.actionPartition(phi.agent, w).related(phi.performed, phi.confusable))

        if isinstance(phi, UpdateDyn):
            D = self.dynamic(phi)
            executable = self.extension(D.sig.precondition(phi.action))
            if not executable:
                return M.worldSet
            inner = self.plusContext().extension(phi.operand)
            return frozenset(w for w in M.worlds if w not in executable or (w, phi.action) in inner)

        if isinstance(phi, UpdateAM):
            A = self.actionModel(phi.model)
            executable = self.extension(A.precondition(phi.action))
            if not executable:
                return M.worldSet
            inner = self.productContext(phi.model).extension(phi.operand)
            return frozenset(w for w in M.worlds if w not in executable or (w, phi.action) in inner)

        raise TypeError(f"Not a formula: {phi!r}")


def evaluate(ctx: EvalContext, world: WorldId, phi: Formula) -> bool:
    """
    Truth of φ at a world of the context's model.

    Params:
        ctx: Evaluation context
        world: A world of ctx.model
        phi: Formula of any supported language

    Returns:
        bool: (M, w) ⊨ φ. `[σ]φ` and `[A:σ]φ` are vacuously true where σ cannot be performed.
    """
    if world not in ctx.worlds:
        raise UnknownWorld(world)
    fragment(phi)
    return world in ctx.extension(phi)


def truthSet(ctx: EvalContext, phi: Formula) -> frozenset:
    fragment(phi)
    return ctx.extension(phi)


def isValidIn(ctx: EvalContext, phi: Formula) -> bool:
    return truthSet(ctx, phi) == ctx.worlds
