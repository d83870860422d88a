"""
sexpr.py - S-expression surface syntax for types, terms and languages.

    types  (b NAME) | unit | empty | (prod T T) | (sum T T) | (arr T T)
    terms  (var N) | (cst NAME) | star | (pair t u) | (proj1 t) | (proj2 t)
           | (lam T t) | (app t u) | (raise T t) | (inl T t) | (inr T t)
           | (case T s bl br)

A context is a space-separated list of types, oldest binding first.
Language files hold `base NAME` and `const NAME : TYPE` lines; blank
lines and `#` comments are ignored.

Printing is canonical: single spaces, no trailing whitespace, so
print(parse(text)) only normalizes whitespace.
"""

from dataclasses import dataclass

import pyparsing as pp

from stlc_interp.errors import LanguageError, ParseError, StlcError, ValidationError
from stlc_interp.syntax.context import Context
from stlc_interp.syntax.terms import (
    App,
    Case,
    Cst,
    Inl,
    Inr,
    Lam,
    Pair,
    Proj,
    Raise,
    STAR,
    Star,
    Term,
    Var,
)
from stlc_interp.syntax.types import EMPTY, UNIT, Arrow, Base, Empty, Language, Prod, Sum, Type, Unit


# =============================================================================
# Reader
# =============================================================================

@dataclass(frozen=True, slots=True)
class Atom:
    text: str
    loc: int


@dataclass(frozen=True, slots=True)
class SList:
    items: tuple["Atom | SList", ...]
    loc: int


SExpr = Atom | SList

LPAR, RPAR = map(pp.Suppress, "()")
_atom = pp.Word(pp.alphanums + "_'.-").set_parse_action(lambda s, loc, toks: Atom(toks[0], loc))
_sexpr = pp.Forward()
_list = pp.Group(LPAR + pp.ZeroOrMore(_sexpr) + RPAR).set_parse_action(
    lambda s, loc, toks: SList(tuple(toks[0]), loc)
)
_sexpr <<= _atom | _list
_sexpr_seq = pp.ZeroOrMore(_sexpr)


def _error(message: str, text: str, loc: int) -> ParseError:
    return ParseError(message, position=loc, line=pp.lineno(loc, text), column=pp.col(loc, text))


def _read(grammar: pp.ParserElement, text: str) -> list[SExpr]:
    try:
        return list(grammar.parse_string(text, parse_all=True))
    except pp.ParseException as exc:
        raise ParseError(
            f"Malformed s-expression: {exc.msg}",
            position=exc.loc,
            line=exc.lineno,
            column=exc.col,
        ) from None


def _read_one(text: str) -> SExpr:
    items = _read(_sexpr_seq, text)
    if len(items) != 1:
        raise _error(f"Expected exactly one s-expression, found {len(items)}", text, 0)
    return items[0]


# =============================================================================
# Conversion
# =============================================================================

def _head(node: SList, text: str) -> str:
    if not node.items or not isinstance(node.items[0], Atom):
        raise _error("Expected a keyword after '('", text, node.loc)
    return node.items[0].text


def _args(node: SList, count: int, text: str) -> tuple[SExpr, ...]:
    args = node.items[1:]
    if len(args) != count:
        keyword = _head(node, text)
        raise _error(f"'{keyword}' takes {count} argument(s), got {len(args)}", text, node.loc)
    return args


def _name(node: SExpr, text: str) -> str:
    if not isinstance(node, Atom):
        raise _error("Expected a name", text, node.loc)
    return node.text


def _to_type(node: SExpr, text: str) -> Type:
    if isinstance(node, Atom):
        if node.text == "unit":
            return UNIT
        if node.text == "empty":
            return EMPTY
        raise _error(f"Unknown type '{node.text}'", text, node.loc)

    keyword = _head(node, text)
    if keyword == "b":
        (name,) = _args(node, 1, text)
        return Base(_name(name, text))
    constructors = {"prod": Prod, "sum": Sum, "arr": Arrow}
    if keyword in constructors:
        left, right = _args(node, 2, text)
        return constructors[keyword](_to_type(left, text), _to_type(right, text))
    raise _error(f"Unknown type former '{keyword}'", text, node.loc)


def _to_term(node: SExpr, text: str) -> Term:
    if isinstance(node, Atom):
        if node.text == "star":
            return STAR
        raise _error(f"Unknown term '{node.text}'", text, node.loc)

    keyword = _head(node, text)
    try:
        match keyword:
            case "var":
                (index,) = _args(node, 1, text)
                digits = _name(index, text)
                if not digits.isdigit():
                    raise _error(f"Variable index must be a number, got '{digits}'", text, index.loc)
                return Var(int(digits))
            case "cst":
                (name,) = _args(node, 1, text)
                return Cst(_name(name, text))
            case "pair" | "app":
                a, b = _args(node, 2, text)
                build = Pair if keyword == "pair" else App
                return build(_to_term(a, text), _to_term(b, text))
            case "proj1" | "proj2":
                (a,) = _args(node, 1, text)
                return Proj(1 if keyword == "proj1" else 2, _to_term(a, text))
            case "lam" | "raise" | "inl" | "inr":
                ty, a = _args(node, 2, text)
                annotated = {"lam": Lam, "raise": Raise, "inl": Inl, "inr": Inr}[keyword]
                return annotated(_to_type(ty, text), _to_term(a, text))
            case "case":
                ty, s, left, right = _args(node, 4, text)
                return Case(
                    _to_type(ty, text),
                    _to_term(s, text),
                    _to_term(left, text),
                    _to_term(right, text),
                )
    except ParseError:
        raise
    except StlcError as exc:
        raise _error(exc.message, text, node.loc) from None
    raise _error(f"Unknown term former '{keyword}'", text, node.loc)


# =============================================================================
# Public API
# =============================================================================

def parse_type(text: str) -> Type:
    """
    Raises:
        ParseError: text is not a single well-formed type
    """
    return _to_type(_read_one(text), text)


def parse_term(text: str) -> Term:
    """
    Raises:
        ParseError: text is not a single well-formed term
    """
    return _to_term(_read_one(text), text)


def parse_context(text: str) -> Context:
    """Space-separated types, leftmost = oldest binding."""
    return tuple(_to_type(node, text) for node in _read(_sexpr_seq, text))


def parse_language(text: str) -> Language:
    """
    Parse a language file.

    Raises:
        ParseError: a line is malformed
        LanguageError: a constant is declared twice or mentions an
            undeclared base type
    """
    bases: set[str] = set()
    constants: dict[str, Type] = {}
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        start = offset + (len(raw) - len(raw.lstrip()))
        offset += len(raw)
        if not line:
            continue
        words = line.split(None, 1)
        if words[0] == "base" and len(words) == 2 and len(words[1].split()) == 1:
            bases.add(words[1])
        elif words[0] == "const" and len(words) == 2 and ":" in words[1]:
            name, type_text = (part.strip() for part in words[1].split(":", 1))
            if not name or len(name.split()) != 1:
                raise _error("Expected 'const NAME : TYPE'", text, start)
            if name in constants:
                raise LanguageError(f"Constant {name} declared twice", constant=name)
            try:
                constants[name] = parse_type(type_text)
            except ParseError as exc:
                raise _error(exc.message, text, start) from None
        else:
            raise _error("Expected 'base NAME' or 'const NAME : TYPE'", text, start)
    return Language(base_types=frozenset(bases), constants=constants)


def print_type(ty: Type) -> str:
    match ty:
        case Base(name):
            return f"(b {name})"
        case Unit():
            return "unit"
        case Empty():
            return "empty"
        case Prod(a, b):
            return f"(prod {print_type(a)} {print_type(b)})"
        case Sum(a, b):
            return f"(sum {print_type(a)} {print_type(b)})"
        case Arrow(a, b):
            return f"(arr {print_type(a)} {print_type(b)})"
    raise ValidationError("Not a type", value=ty)


def print_term(t: Term) -> str:
    match t:
        case Var(i):
            return f"(var {i})"
        case Cst(name):
            return f"(cst {name})"
        case Star():
            return "star"
        case Pair(a, b):
            return f"(pair {print_term(a)} {print_term(b)})"
        case Proj(i, a):
            return f"(proj{i} {print_term(a)})"
        case Lam(ty, body):
            return f"(lam {print_type(ty)} {print_term(body)})"
        case App(f, a):
            return f"(app {print_term(f)} {print_term(a)})"
        case Raise(ty, a):
            return f"(raise {print_type(ty)} {print_term(a)})"
        case Inl(ty, a):
            return f"(inl {print_type(ty)} {print_term(a)})"
        case Inr(ty, a):
            return f"(inr {print_type(ty)} {print_term(a)})"
        case Case(ty, s, left, right):
            return f"(case {print_type(ty)} {print_term(s)} {print_term(left)} {print_term(right)})"
    raise ValidationError("Not a term", value=t)


def print_context(ctx: Context) -> str:
    return " ".join(print_type(ty) for ty in ctx)


def language_lines(lang: Language) -> list[str]:
    """Canonical language file lines: sorted bases, then sorted constants."""
    lines = [f"base {name}" for name in sorted(lang.base_types)]
    lines += [f"const {name} : {print_type(ty)}" for name, ty in lang.constants.items()]
    return lines


def print_language(lang: Language) -> str:
    return "\n".join(language_lines(lang))
