"""Formula language: AST, parser, printer and qubit counting.

Grammar (whitespace insensitive)::

    disj  := conj ("or" conj)*
    conj  := unary ("and" unary)*
    unary := ("not" | "snot") unary | atom | "(" disj ")"
    atom  := [a-z][a-z0-9_]*   (keywords excluded)

Both binary connectives associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import ParseError

KEYWORDS = frozenset({"not", "snot", "and", "or"})


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Neg:
    sub: "Formula"


@dataclass(frozen=True)
class SqrtNeg:
    sub: "Formula"


@dataclass(frozen=True)
class Conj:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Disj:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Neg, SqrtNeg, Conj, Disj]

_WORD_RE = re.compile(r"[a-z][a-z0-9_]*")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in "()":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        mo = _WORD_RE.match(text, pos)
        if mo is None:
            raise ParseError(f"unexpected character {ch!r}", pos)
        word = mo.group()
        tokens.append(("kw" if word in KEYWORDS else "atom", word, pos))
        pos = mo.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_kw(self, word: str) -> bool:
        kind, val, _ = self.peek()
        return kind == "kw" and val == word

    def disj(self) -> Formula:
        left = self.conj()
        while self.at_kw("or"):
            self.take()
            left = Disj(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        while self.at_kw("and"):
            self.take()
            left = Conj(left, self.unary())
        return left

    def unary(self) -> Formula:
        kind, val, pos = self.take()
        if kind == "kw" and val == "not":
            return Neg(self.unary())
        if kind == "kw" and val == "snot":
            return SqrtNeg(self.unary())
        if kind == "atom":
            return Atom(val)
        if kind == "(":
            inner = self.disj()
            kind2, _, pos2 = self.take()
            if kind2 != ")":
                raise ParseError("expected ')'", pos2)
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse(text: str) -> Formula:
    """Parse formula text into an AST; raises :class:`ParseError`."""
    p = _Parser(text)
    f = p.disj()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    return f


# binding strength used by the printer
_PREC = {Disj: 1, Conj: 2, Neg: 3, SqrtNeg: 3, Atom: 4}


def format(f: Formula) -> str:  # noqa: A001 - mirrors parse()
    """Render ``f`` so that ``parse(format(f)) == f``, with minimal parentheses."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, (Neg, SqrtNeg)):
        kw = "not" if isinstance(f, Neg) else "snot"
        sub = format(f.sub)
        if _PREC[type(f.sub)] < 3:
            sub = f"({sub})"
        return f"{kw} {sub}"
    op = "and" if isinstance(f, Conj) else "or"
    prec = _PREC[type(f)]
    left, right = format(f.left), format(f.right)
    if _PREC[type(f.left)] < prec:
        left = f"({left})"
    # left associativity: an equal-precedence right operand needs brackets
    if _PREC[type(f.right)] <= prec:
        right = f"({right})"
    return f"{left} {op} {right}"


def qubit_count(f: Formula) -> int:
    if isinstance(f, Atom):
        return 1
    if isinstance(f, (Neg, SqrtNeg)):
        return qubit_count(f.sub)
    return qubit_count(f.left) + qubit_count(f.right) + 1


def expand_disjunction(f: Formula) -> Formula:
    """Rewrite every ``a or b`` as ``not (not a and not b)``, bottom-up."""
    if isinstance(f, Atom):
        return f
    if isinstance(f, Neg):
        return Neg(expand_disjunction(f.sub))
    if isinstance(f, SqrtNeg):
        return SqrtNeg(expand_disjunction(f.sub))
    left, right = expand_disjunction(f.left), expand_disjunction(f.right)
    if isinstance(f, Conj):
        return Conj(left, right)
    return Neg(Conj(Neg(left), Neg(right)))


def iter_atoms(f: Formula) -> Iterator[str]:
    """Atom names in left-to-right occurrence order, with repeats."""
    if isinstance(f, Atom):
        yield f.name
    elif isinstance(f, (Neg, SqrtNeg)):
        yield from iter_atoms(f.sub)
    else:
        yield from iter_atoms(f.left)
        yield from iter_atoms(f.right)


def atoms(f: Formula) -> frozenset[str]:
    return frozenset(iter_atoms(f))


def has_sqrt_neg(f: Formula) -> bool:
    if isinstance(f, SqrtNeg):
        return True
    if isinstance(f, Atom):
        return False
    if isinstance(f, Neg):
        return has_sqrt_neg(f.sub)
    return has_sqrt_neg(f.left) or has_sqrt_neg(f.right)


def rename_atoms(f: Formula, mapping: dict[str, str]) -> Formula:
    if isinstance(f, Atom):
        return Atom(mapping.get(f.name, f.name))
    if isinstance(f, (Neg, SqrtNeg)):
        return type(f)(rename_atoms(f.sub, mapping))
    return type(f)(rename_atoms(f.left, mapping), rename_atoms(f.right, mapping))
