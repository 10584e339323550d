"""
Concrete ASCII syntax for formulas and world references.

Grammar, loosest to tightest binding::

    formula := imp ("<->" imp)*           left-assoc
    imp     := or ("->" imp)?             right-assoc
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | "K_" ident unary | "Khat_" ident unary
             | "[" ident "]" unary | "<" ident ">" unary | "[" ident ":" ident "]" unary
             | "xi" "(" ident "," ident "," ident ")" | ident | "(" formula ")"
"""
from __future__ import annotations
from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput
from lark.lexer import PatternStr

from configs.config_validation import Pattern
from utilities.exceptions import FormulaSyntaxError
from utilities.formula import (
    And, Atom, Diamond, Formula, Iff, Implies, KHat, Knows, Not, Or, Signature,
    UpdateAM, UpdateDyn, Xi, checkIdentifiers, fragment,
)

FORMULA_GRAMMAR = r"""
    ?start: equiv
    ?equiv: imp
          | equiv "<->" imp                 -> equivalence
    ?imp: disj
        | disj "->" imp                     -> implies
    ?disj: conj
         | disj "|" conj                    -> disjunction
    ?conj: unary
         | conj "&" unary                   -> conjunction
    ?unary: "!" unary                       -> negation
          | _KNOWS NAME unary               -> knows
          | _KHAT NAME unary                -> khat
          | "[" NAME "]" unary              -> box
          | "<" NAME ">" unary              -> diamond
          | "[" NAME ":" NAME "]" unary     -> box_model
          | "xi" "(" NAME "," NAME "," NAME ")" -> xi
          | NAME                            -> atom
          | "(" equiv ")"
    _KNOWS: "K_"
    _KHAT: "Khat_"
    NAME: /%s/
    %%import common.WS
    %%ignore WS
""" % Pattern.IDENTIFIER_PATTERN

WORLD_GRAMMAR = r"""
    ?start: world
    ?world: NAME                    -> name
          | "(" world "," NAME ")"  -> pair
    NAME: /[^\s(),]+/
    %import common.WS
    %ignore WS
"""


@v_args(inline=True)
class FormulaTransformer(Transformer):
    """Turns the parse tree into the core AST, desugaring derived connectives on the way."""
    def equivalence(self, left, right): return Iff(left, right)
    def implies(self, left, right): return Implies(left, right)
    def disjunction(self, left, right): return Or(left, right)
    def conjunction(self, left, right): return And(left, right)
    def negation(self, operand): return Not(operand)
    def knows(self, agent, operand): return Knows(str(agent), operand)
    def khat(self, agent, operand): return KHat(str(agent), operand)
    def box(self, action, operand): return UpdateDyn(str(action), operand)
    def diamond(self, action, operand): return Diamond(str(action), operand)
    def box_model(self, model, action, operand): return UpdateAM(str(model), str(action), operand)
    def xi(self, agent, performed, confusable): return Xi(str(agent), str(performed), str(confusable))
    def atom(self, name): return Atom(str(name))


@v_args(inline=True)
class WorldTransformer(Transformer):
    def name(self, token): return str(token)
    def pair(self, world, action): return (world, str(action))


_FORMULA_PARSER = Lark(FORMULA_GRAMMAR, parser="lalr", transformer=FormulaTransformer())
_WORLD_PARSER = Lark(WORLD_GRAMMAR, parser="lalr", transformer=WorldTransformer())


def _describe(parser: Lark, terminal: str) -> str:
    try:
        pattern = parser.get_terminal(terminal).pattern
    except KeyError:
        return terminal
    if isinstance(pattern, PatternStr):
        return f'"{pattern.value}"'
    return "identifier" if terminal == "NAME" else terminal


def _syntaxError(parser: Lark, text: str, e: UnexpectedInput) -> FormulaSyntaxError:
    expected = getattr(e, "expected", None) or getattr(e, "allowed", None) or ()
    position = getattr(e, "pos_in_stream", None)
    if position is None:
        position = len(text)
    line = e.line if isinstance(e.line, int) and e.line > 0 else text.count("\n") + 1
    column = e.column if isinstance(e.column, int) and e.column > 0 else len(text.rsplit("\n", 1)[-1]) + 1
    return FormulaSyntaxError(text, position, line, column, [_describe(parser, t) for t in expected])


def parseFormula(text: str, sig: Signature | None = None) -> Formula:
    """
    Parse a formula written in the concrete syntax.

    Params:
        text: Formula text, e.g. `[sp] (K_b p | K_b !p)`
        sig: Signature to resolve names against. Skipped if None.

    Returns:
        Formula: the desugared AST

    Raises:
        FormulaSyntaxError: with the position and the expected tokens
        UnknownIdentifier: if a name is not declared in `sig`
        UnsupportedFragment: if `[A:σ]` is mixed with `[σ]` or xi atoms
    """
    try:
        phi = _FORMULA_PARSER.parse(text)
    except UnexpectedInput as e:
        raise _syntaxError(_FORMULA_PARSER, text, e) from e

    fragment(phi)
    if sig is not None:
        checkIdentifiers(phi, sig)
    return phi


def parseWorldRef(text: str):
    """
    Parse a world reference: a plain name like `w0`, or a product world like `(w0,sp)` or `((w0,sp),snp)`.
    """
    try:
        return _WORLD_PARSER.parse(text)
    except UnexpectedInput as e:
        raise _syntaxError(_WORLD_PARSER, text, e) from e

# =========================
# Printing
# =========================

_IFF, _IMP, _OR, _AND, _UNARY = 1, 2, 3, 4, 5


def _asImplies(phi: Formula):
    if isinstance(phi, Not) and isinstance(phi.operand, And) and isinstance(phi.operand.right, Not):
        return phi.operand.left, phi.operand.right.operand
    return None

def _asOr(phi: Formula):
    parts = _asImplies(phi)
    # a negated implication antecedent reads better as (a -> b) -> c
    if parts is not None and isinstance(parts[0], Not) and _asImplies(parts[0]) is None:
        return parts[0].operand, parts[1]
    return None

def _asIff(phi: Formula):
    if not isinstance(phi, And):
        return None
    forward, backward = _asImplies(phi.left), _asImplies(phi.right)
    if forward is not None and backward is not None and forward == (backward[1], backward[0]):
        return forward
    return None


def _wrap(rendered: tuple[str, int], needed: int) -> str:
    text, precedence = rendered
    return f"({text})" if precedence < needed else text


def _render(phi: Formula) -> tuple[str, int]:
    if isinstance(phi, Atom):
        return phi.name, _UNARY
    if isinstance(phi, Xi):
        return f"xi({phi.agent}, {phi.performed}, {phi.confusable})", _UNARY

    if (parts := _asIff(phi)) is not None:
        return f"{_wrap(_render(parts[0]), _IFF)} <-> {_wrap(_render(parts[1]), _IMP)}", _IFF
    if (parts := _asOr(phi)) is not None:
        return f"{_wrap(_render(parts[0]), _OR)} | {_wrap(_render(parts[1]), _AND)}", _OR
    if (parts := _asImplies(phi)) is not None:
        return f"{_wrap(_render(parts[0]), _OR)} -> {_wrap(_render(parts[1]), _IMP)}", _IMP

    if isinstance(phi, And):
        return f"{_wrap(_render(phi.left), _AND)} & {_wrap(_render(phi.right), _UNARY)}", _AND
    if isinstance(phi, Not):
        return f"!{_wrap(_render(phi.operand), _UNARY)}", _UNARY
    if isinstance(phi, Knows):
        return f"K_{phi.agent} {_wrap(_render(phi.operand), _UNARY)}", _UNARY
    if isinstance(phi, UpdateDyn):
        return f"[{phi.action}] {_wrap(_render(phi.operand), _UNARY)}", _UNARY
    return f"[{phi.model}:{phi.action}] {_wrap(_render(phi.operand), _UNARY)}", _UNARY


def renderFormula(phi: Formula) -> str:
    """
    Print a formula with as few parentheses as the grammar allows.
    `parseFormula(renderFormula(phi))` gives back `phi`.
    """
    return _render(phi)[0]
