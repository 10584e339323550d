"""
Formula AST shared by every language the checker understands.\n
One set of immutable node types covers epistemic formulas, indistinguishability atoms (xi),
action-model updates `[A:σ]` and dynamic updates `[σ]`. Derived connectives are built by the
smart constructors below and never stored as nodes of their own.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, Sequence, Union

from utilities.exceptions import UnknownAction, UnknownIdentifier, UnsupportedFragment


@dataclass(frozen=True)
class Atom:
    name: str

@dataclass(frozen=True)
class Xi:
    agent: str
    performed: str
    confusable: str

@dataclass(frozen=True)
class Not:
    operand: Formula

@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula

@dataclass(frozen=True)
class Knows:
    agent: str
    operand: Formula

@dataclass(frozen=True)
class UpdateDyn:
    action: str
    operand: Formula

@dataclass(frozen=True)
class UpdateAM:
    model: str
    action: str
    operand: Formula


Formula = Union[Atom, Xi, Not, And, Knows, UpdateDyn, UpdateAM]

# =========================
# Derived connectives
# =========================

def Or(left: Formula, right: Formula) -> Formula:
    return Not(And(Not(left), Not(right)))

def Implies(left: Formula, right: Formula) -> Formula:
    return Not(And(left, Not(right)))

def Iff(left: Formula, right: Formula) -> Formula:
    return And(Implies(left, right), Implies(right, left))

def KHat(agent: str, operand: Formula) -> Formula:
    return Not(Knows(agent, Not(operand)))

def Diamond(action: str, operand: Formula) -> Formula:
    return Not(UpdateDyn(action, Not(operand)))

def conjoin(formulas: Sequence[Formula]) -> Formula:
    """
    Left-nested conjunction of a nonempty sequence of formulas.
    """
    if not formulas:
        raise ValueError("Cannot conjoin an empty sequence of formulas")
    result = formulas[0]
    for phi in formulas[1:]:
        result = And(result, phi)
    return result

# =========================
# Traversal, fragments and measures
# =========================

def children(phi: Formula) -> tuple[Formula, ...]:
    if isinstance(phi, (Atom, Xi)):
        return ()
    if isinstance(phi, And):
        return (phi.left, phi.right)
    return (phi.operand,)


def subformulas(phi: Formula) -> Iterator[Formula]:
    """
    Yield φ and every subformula of it, parents before children.
    """
    stack = [phi]
    while stack:
        current = stack.pop()
        yield current
        stack.extend(reversed(children(current)))


class Fragment(str, Enum):
    EL = "L_EL"
    EL_PLUS = "L_EL+"
    AL = "L_AL"
    DL = "L_DL"
    DL_PLUS = "L_DL+"


def fragment(phi: Formula) -> Fragment:
    """
    Smallest language the formula belongs to.

    Params:
        phi: The formula

    Returns:
        Fragment: one of L_EL, L_EL+, L_AL, L_DL, L_DL+

    Raises:
        UnsupportedFragment: if the formula mixes `[A:σ]` with `[σ]` or xi atoms.
    """
    has_xi = has_dyn = has_am = False
    for sub in subformulas(phi):
        if isinstance(sub, Xi):
            has_xi = True
        elif isinstance(sub, UpdateDyn):
            has_dyn = True
        elif isinstance(sub, UpdateAM):
            has_am = True

    if has_am and (has_xi or has_dyn):
        raise UnsupportedFragment("Formulas mixing action-model updates with dynamic updates or xi atoms are not supported")
    if has_am:
        return Fragment.AL
    if has_dyn:
        return Fragment.DL_PLUS if has_xi else Fragment.DL
    return Fragment.EL_PLUS if has_xi else Fragment.EL


def isEpistemic(phi: Formula) -> bool:
    return all(isinstance(sub, (Atom, Not, And, Knows)) for sub in subformulas(phi))


def _requireDynamicFragment(phi: Formula):
    if any(isinstance(sub, UpdateAM) for sub in subformulas(phi)):
        raise UnsupportedFragment("Measure is only defined on L_DL+ formulas")


def actionDepth(phi: Formula) -> int:
    """
    Action nesting depth d: the number of nested `[σ]` operators.

    Params:
        phi: A formula of L_DL+

    Returns:
        int: d(φ)
    """
    _requireDynamicFragment(phi)
    return _depth(phi)

def _depth(phi: Formula) -> int:
    if isinstance(phi, (Atom, Xi)):
        return 0
    if isinstance(phi, And):
        return max(_depth(phi.left), _depth(phi.right))
    if isinstance(phi, UpdateDyn):
        return _depth(phi.operand) + 1
    return _depth(phi.operand)


def weight(phi: Formula) -> int:
    """
    Weight w: 1 on atoms, one more than the heaviest child elsewhere.

    Params:
        phi: A formula of L_DL+

    Returns:
        int: w(φ)
    """
    _requireDynamicFragment(phi)
    return _weight(phi)

def _weight(phi: Formula) -> int:
    if isinstance(phi, (Atom, Xi)):
        return 1
    if isinstance(phi, And):
        return max(_weight(phi.left), _weight(phi.right)) + 1
    return _weight(phi.operand) + 1

# =========================
# Signature
# =========================

@dataclass(frozen=True)
class Signature:
    agents: tuple[str, ...]
    props: tuple[str, ...]
    actions: tuple[str, ...]
    pre: Mapping[str, Formula] = field(default_factory=dict, hash=False)

    def precondition(self, action: str) -> Formula:
        try:
            return self.pre[action]
        except KeyError:
            raise UnknownAction(action)

    def restrictActions(self, actions: Sequence[str]) -> Signature:
        """
        Same agents and props, with Σ cut down to the given actions.
        """
        for action in actions:
            if action not in self.actions:
                raise UnknownAction(action)
        return Signature(self.agents, self.props, tuple(actions), {a: self.pre[a] for a in actions})


def buildSignature(agents: Sequence[str], props: Sequence[str], pre: Mapping[str, Formula]) -> Signature:
    """
    Create a signature and check that preconditions are epistemic and only mention known names.

    Params:
        agents: Agent names
        props: Proposition names
        pre: Precondition of every action, keyed by action name. Its keys are the action set Σ.

    Returns:
        Signature: the checked signature
    """
    sig = Signature(tuple(agents), tuple(props), tuple(pre.keys()), dict(pre))
    for action, condition in sig.pre.items():
        if not isEpistemic(condition):
            raise UnsupportedFragment(f"Precondition of {action} must be in L_EL")
        checkIdentifiers(condition, sig)
    return sig


def checkIdentifiers(phi: Formula, sig: Signature):
    """
    Make sure every agent, proposition and action named in φ is declared in the signature.
    Action-model names are bound at evaluation time and are not checked here.
    """
    for sub in subformulas(phi):
        if isinstance(sub, Atom) and sub.name not in sig.props:
            raise UnknownIdentifier(sub.name, "proposition")
        if isinstance(sub, (Knows, Xi)) and sub.agent not in sig.agents:
            raise UnknownIdentifier(sub.agent, "agent")
        if isinstance(sub, Xi):
            for action in (sub.performed, sub.confusable):
                if action not in sig.actions:
                    raise UnknownAction(action)
        if isinstance(sub, (UpdateDyn, UpdateAM)) and sub.action not in sig.actions:
            raise UnknownAction(sub.action)
