"""A small predicate language for witness search.

Grammar (keywords are case-insensitive)::

    query    := disj
    disj     := conj ( ("OR" | "∨" | "||") conj )*
    conj     := unary ( ("AND" | "∧" | "&&") unary )*
    unary    := ("NOT" | "¬" | "!") unary
              | ("EXISTS" | "∃" | "FORALL" | "∀") VAR ("," VAR)* ":" disj
              | "(" disj ")" | "TRUE" | "FALSE"
              | ATOM [ "(" set ("," set)* ")" ]
    set      := term ( ("∪" | "|" | "-" | "∖") term )*
    term     := factor ( ("∩" | "&") factor )*
    factor   := ("~" | "COMPLEMENT") factor | "(" set ")" | VAR | "X" | "EMPTY" | "∅"
              | "{" [INT ("," INT)*] "}"

Space atoms are the axiom flags (``semi_T1``). Set atoms are the subset
class flags (``semi_open(A)``) plus a few helpers (``nonempty``,
``singleton``, ``subset``, ``equal``, ``semi_separated``). A unary set atom
written without an argument applies to the innermost quantified variable,
so ``EXISTS A: slambda_closed AND NOT sg_star_closed`` is accepted.

A quantifier's body extends as far to the right as possible.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Union

from .. import classes
from ..axioms import AXIOM_FLAGS, classify_space
from ..core import Space, full_set
from ..semiops import is_semi_closed, is_semi_open, semi_separated


class QueryError(ValueError):
    pass


class UnknownAtom(QueryError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"UnknownAtom: {name!r}")


# ---------------------------------------------------------------------------
# registry


def _safe_separated(space: Space, a: int, b: int) -> bool:
    return bool(a) and bool(b) and semi_separated(space, a, b)


SET_ATOMS: dict[str, tuple[int, Callable[..., bool]]] = {
    "semi_open": (1, is_semi_open),
    "semi_closed": (1, is_semi_closed),
    "wedge": (1, classes.is_wedge_set),
    "vee": (1, classes.is_vee_set),
    "g_wedge": (1, classes.is_g_wedge_set),
    "g_vee": (1, classes.is_g_vee_set),
    "sg_star_closed": (1, classes.is_sg_star_closed),
    "sg_star_open": (1, classes.is_sg_star_open),
    "slambda_closed": (1, classes.is_slambda_closed),
    "slambda_open": (1, classes.is_slambda_open),
    "in_B": (1, classes.in_B),
    "in_B_prime": (1, classes.in_B_prime),
    "nonempty": (1, lambda space, a: a != 0),
    "singleton": (1, lambda space, a: a != 0 and a & (a - 1) == 0),
    "subset": (2, lambda space, a, b: a & ~b == 0),
    "equal": (2, lambda space, a, b: a == b),
    "semi_separated": (2, _safe_separated),
}

SPACE_ATOMS = frozenset(AXIOM_FLAGS)


# ---------------------------------------------------------------------------
# syntax tree


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Literal:
    points: tuple[int, ...]


@dataclass(frozen=True)
class Whole:
    pass


@dataclass(frozen=True)
class Void:
    pass


@dataclass(frozen=True)
class Compl:
    operand: "SetExpr"


@dataclass(frozen=True)
class SetOp:
    op: str  # "&", "|", "-"
    left: "SetExpr"
    right: "SetExpr"


SetExpr = Union[Var, Literal, Whole, Void, Compl, SetOp]


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class SpaceAtom:
    name: str


@dataclass(frozen=True)
class SetAtom:
    name: str
    args: tuple[SetExpr, ...]


@dataclass(frozen=True)
class Not:
    operand: "Expr"


@dataclass(frozen=True)
class And:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Or:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Quant:
    kind: str  # "exists" | "forall"
    names: tuple[str, ...]
    body: "Expr"


Expr = Union[Const, SpaceAtom, SetAtom, Not, And, Or, Quant]


# ---------------------------------------------------------------------------
# tokenizer and parser

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<sym>&&|\|\||[()\{\},:!&|~\-\\∧∨¬∃∀∩∪∖∅])"
    r")"
)

_WORDS = {
    "AND": "&&", "OR": "||", "NOT": "!",
    "EXISTS": "EXISTS", "FORALL": "FORALL",
    "TRUE": "TRUE", "FALSE": "FALSE",
    "EMPTY": "EMPTY", "COMPLEMENT": "~",
}
_SYMBOLS = {
    "∧": "&&", "∨": "||", "¬": "!", "∃": "EXISTS", "∀": "FORALL",
    "∩": "&", "∪": "|", "∖": "-", "\\": "-", "∅": "EMPTY",
}


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise QueryError(f"unexpected character {text[pos:].lstrip()[:1]!r} at {pos}")
        pos = m.end()
        if m.group("num") is not None:
            tokens.append(("num", m.group("num")))
        elif m.group("name") is not None:
            word = m.group("name")
            key = _WORDS.get(word.upper())
            tokens.append(("op", key) if key else ("name", word))
        else:
            sym = m.group("sym")
            tokens.append(("op", _SYMBOLS.get(sym, sym)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0
        self.scope: list[str] = []

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def accept(self, value: str) -> bool:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == value:
            self.pos += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            tok = self.peek()
            found = tok[1] if tok else "end of query"
            raise QueryError(f"expected {value!r}, found {found!r}")

    def parse(self) -> Expr:
        if not self.tokens:
            raise QueryError("empty query")
        expr = self.disj()
        if self.peek() is not None:
            raise QueryError(f"unexpected {self.peek()[1]!r}")
        return expr

    def disj(self) -> Expr:
        left = self.conj()
        while self.accept("||"):
            left = Or(left, self.conj())
        return left

    def conj(self) -> Expr:
        left = self.unary()
        while self.accept("&&"):
            left = And(left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.accept("!"):
            return Not(self.unary())
        for kw, kind in (("EXISTS", "exists"), ("FORALL", "forall")):
            if self.accept(kw):
                names = [self.variable()]
                while self.accept(","):
                    names.append(self.variable())
                self.expect(":")
                self.scope.extend(names)
                try:
                    body = self.disj()
                finally:
                    del self.scope[len(self.scope) - len(names):]
                return Quant(kind, tuple(names), body)
        if self.accept("("):
            inner = self.disj()
            self.expect(")")
            return inner
        if self.accept("TRUE"):
            return Const(True)
        if self.accept("FALSE"):
            return Const(False)
        tok = self.peek()
        if tok is None or tok[0] != "name":
            raise QueryError(f"expected an atom, found {tok[1] if tok else 'end of query'!r}")
        self.pos += 1
        return self.atom(tok[1])

    def variable(self) -> str:
        tok = self.peek()
        if tok is None or tok[0] != "name":
            raise QueryError("expected a variable name")
        if tok[1] in SET_ATOMS or tok[1] in SPACE_ATOMS or tok[1] == "X":
            raise QueryError(f"{tok[1]!r} cannot be used as a variable")
        self.pos += 1
        return tok[1]

    def atom(self, name: str) -> Expr:
        if name in SPACE_ATOMS:
            if self.peek() == ("op", "("):
                raise QueryError(f"{name} is a space property and takes no argument")
            return SpaceAtom(name)
        if name not in SET_ATOMS:
            raise UnknownAtom(name)
        arity = SET_ATOMS[name][0]
        if self.accept("("):
            args = [self.set_expr()]
            while self.accept(","):
                args.append(self.set_expr())
            self.expect(")")
        elif arity == 1 and self.scope:
            args = [Var(self.scope[-1])]
        else:
            raise QueryError(f"{name} needs {arity} argument(s)")
        if len(args) != arity:
            raise QueryError(f"{name} takes {arity} argument(s), got {len(args)}")
        return SetAtom(name, tuple(args))

    def set_expr(self) -> SetExpr:
        left = self.set_term()
        while True:
            if self.accept("|"):
                left = SetOp("|", left, self.set_term())
            elif self.accept("-"):
                left = SetOp("-", left, self.set_term())
            else:
                return left

    def set_term(self) -> SetExpr:
        left = self.set_factor()
        while self.accept("&"):
            left = SetOp("&", left, self.set_factor())
        return left

    def set_factor(self) -> SetExpr:
        if self.accept("~"):
            return Compl(self.set_factor())
        if self.accept("("):
            inner = self.set_expr()
            self.expect(")")
            return inner
        if self.accept("EMPTY"):
            return Void()
        if self.accept("{"):
            points = []
            if not self.accept("}"):
                while True:
                    tok = self.peek()
                    if tok is None or tok[0] != "num":
                        raise QueryError("expected a point index in set literal")
                    self.pos += 1
                    points.append(int(tok[1]))
                    if self.accept("}"):
                        break
                    self.expect(",")
            return Literal(tuple(sorted(set(points))))
        tok = self.peek()
        if tok is None or tok[0] != "name":
            raise QueryError("expected a set expression")
        self.pos += 1
        if tok[1] == "X":
            return Whole()
        if tok[1] not in self.scope:
            raise QueryError(f"unbound variable {tok[1]!r}")
        return Var(tok[1])


def parse_query(text: str) -> Expr:
    """Parse a query string; raises UnknownAtom or QueryError."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation


class _OutOfRange(Exception):
    pass


def _eval_set(expr: SetExpr, space: Space, env: dict[str, int]) -> int:
    if isinstance(expr, Var):
        return env[expr.name]
    if isinstance(expr, Whole):
        return space.full
    if isinstance(expr, Void):
        return 0
    if isinstance(expr, Literal):
        if any(p >= space.n for p in expr.points):
            raise _OutOfRange
        mask = 0
        for p in expr.points:
            mask |= 1 << p
        return mask
    if isinstance(expr, Compl):
        return space.full & ~_eval_set(expr.operand, space, env)
    left = _eval_set(expr.left, space, env)
    right = _eval_set(expr.right, space, env)
    if expr.op == "&":
        return left & right
    if expr.op == "|":
        return left | right
    return left & ~right


def _eval(expr: Expr, space: Space, env: dict[str, int]) -> tuple[bool, dict[str, int]]:
    if isinstance(expr, Const):
        return expr.value, {}
    if isinstance(expr, SpaceAtom):
        return bool(getattr(classify_space(space), expr.name)), {}
    if isinstance(expr, SetAtom):
        try:
            args = [_eval_set(a, space, env) for a in expr.args]
        except _OutOfRange:
            # a literal naming a point the space lacks never holds
            return False, {}
        return bool(SET_ATOMS[expr.name][1](space, *args)), {}
    if isinstance(expr, Not):
        value, _ = _eval(expr.operand, space, env)
        return not value, {}
    if isinstance(expr, And):
        lv, lb = _eval(expr.left, space, env)
        if not lv:
            return False, {}
        rv, rb = _eval(expr.right, space, env)
        return (True, {**lb, **rb}) if rv else (False, {})
    if isinstance(expr, Or):
        lv, lb = _eval(expr.left, space, env)
        if lv:
            return True, lb
        return _eval(expr.right, space, env)
    if isinstance(expr, Quant):
        masks = range(full_set(space.n) + 1)
        for values in itertools.product(masks, repeat=len(expr.names)):
            inner = {**env, **dict(zip(expr.names, values))}
            value, bound = _eval(expr.body, space, inner)
            if expr.kind == "exists" and value:
                return True, {**dict(zip(expr.names, values)), **bound}
            if expr.kind == "forall" and not value:
                return False, {}
        return expr.kind == "forall", {}
    raise TypeError(f"not a query node: {expr!r}")


def evaluate(query: Expr | str, space: Space) -> tuple[bool, dict[str, int]]:
    """Truth value on ``space`` and, when true, the bindings of the satisfied
    existential quantifiers (least assignment in mask order)."""
    if isinstance(query, str):
        query = parse_query(query)
    return _eval(query, space, {})
