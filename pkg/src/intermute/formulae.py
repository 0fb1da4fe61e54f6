"""Propositional formulae over letters, the units T and F, and the binary
connectives & (conjunction) and | (disjunction).

Formulae are immutable trees.  The concrete syntax is

    disj := conj ('|' conj)*
    conj := atom ('&' atom)*
    atom := letter | 'T' | 'F' | '(' disj ')'

with both connectives associating to the left.  ``to_str`` prints the
minimal parenthesisation, so ``parse_formula(to_str(a)) == a``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Union

LETTER_RE = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")


class ParseError(ValueError):
    """Syntax error with the offending position in the input."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(self._render())

    def _render(self) -> str:
        if not self.text:
            return self.message
        return f"{self.message} at position {self.pos}\n  {self.text}\n  {' ' * self.pos}^"


@dataclass(frozen=True)
class Letter:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Top:
    def __str__(self):
        return "T"


@dataclass(frozen=True)
class Bot:
    def __str__(self):
        return "F"


@dataclass(frozen=True)
class Conj:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class Disj:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_str(self)


Formula = Union[Letter, Top, Bot, Conj, Disj]
Binary = (Conj, Disj)

TOP = Top()
BOT = Bot()


def is_unit(a) -> bool:
    return isinstance(a, (Top, Bot))


def connective(a) -> str | None:
    """'&' or '|' for a binary formula, None otherwise."""
    if isinstance(a, Conj):
        return "&"
    if isinstance(a, Disj):
        return "|"
    return None


def make(conn: str, left, right):
    return Conj(left, right) if conn == "&" else Disj(left, right)


def unit_of(conn: str):
    """The unit of a connective: T for &, F for |."""
    return TOP if conn == "&" else BOT


# ---------------------------------------------------------------- parsing

_TOKEN_RE = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_]*[+-]?)|(.))")


def tokenize(text: str) -> list[tuple[str, int]]:
    """Split into (token, position) pairs.  Words may end in + or - so that
    the arrow syntax can share this lexer."""
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            out.append((m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append((m.group(2), m.start(2)))
        pos = m.end()
    return out


class TokenStream:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            self.fail("unexpected end of input")
        self.i += 1
        return tok

    def expect(self, tok: str):
        got = self.peek()
        if got != tok:
            self.fail(f"expected {tok!r}, found {got!r}" if got else f"expected {tok!r}")
        self.i += 1

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos())

    def at_end(self) -> bool:
        return self.i >= len(self.tokens)


def parse_formula_tokens(ts: TokenStream) -> Formula:
    left = _parse_conj(ts)
    while ts.peek() == "|":
        ts.next()
        left = Disj(left, _parse_conj(ts))
    return left


def _parse_conj(ts: TokenStream) -> Formula:
    left = _parse_atom(ts)
    while ts.peek() == "&":
        ts.next()
        left = Conj(left, _parse_atom(ts))
    return left


def _parse_atom(ts: TokenStream) -> Formula:
    tok = ts.peek()
    if tok == "(":
        ts.next()
        inner = parse_formula_tokens(ts)
        ts.expect(")")
        return inner
    if tok == "T":
        ts.next()
        return TOP
    if tok == "F":
        ts.next()
        return BOT
    if tok is not None and LETTER_RE.match(tok):
        ts.next()
        return Letter(tok)
    ts.fail(f"expected a letter, T, F or '(', found {tok!r}" if tok else "unexpected end of input")


def parse_formula(text: str) -> Formula:
    ts = TokenStream(text)
    result = parse_formula_tokens(ts)
    if not ts.at_end():
        ts.fail(f"unexpected {ts.peek()!r}")
    return result


# --------------------------------------------------------------- printing

def to_str(a) -> str:
    if isinstance(a, (Letter, Top, Bot)):
        return str(a)
    if isinstance(a, Conj):
        left = to_str(a.left)
        right = to_str(a.right)
        if isinstance(a.left, Disj):
            left = f"({left})"
        if isinstance(a.right, Binary):
            right = f"({right})"
        return f"{left} & {right}"
    if isinstance(a, Disj):
        right = to_str(a.right)
        if isinstance(a.right, Disj):
            right = f"({right})"
        return f"{to_str(a.left)} | {right}"
    raise TypeError(f"not a formula: {a!r}")


# ---------------------------------------------------------------- queries

def leaves(a) -> Iterator:
    """Leaves (letters and units) from left to right."""
    stack = [a]
    while stack:
        x = stack.pop()
        if isinstance(x, Binary):
            stack.append(x.right)
            stack.append(x.left)
        else:
            yield x


def letter_list(a) -> list[str]:
    """Letter occurrences from left to right."""
    return [x.name for x in leaves(a) if isinstance(x, Letter)]


def letters(a) -> frozenset[str]:
    return frozenset(letter_list(a))


def letter_multiset(a) -> Counter:
    """Letter names with their number of occurrences."""
    return Counter(letter_list(a))


def size(a) -> int:
    """Number of leaves."""
    return sum(1 for _ in leaves(a))


def count_connective(a, conn: str) -> int:
    if isinstance(a, Binary):
        own = 1 if connective(a) == conn else 0
        return own + count_connective(a.left, conn) + count_connective(a.right, conn)
    return 0


def is_constant_free(a) -> bool:
    return not any(is_unit(x) for x in leaves(a))


def is_letterless(a) -> bool:
    return not letter_list(a)


def is_diversified(a) -> bool:
    names = letter_list(a)
    return len(names) == len(set(names))


def diversify(a, taken: set[str] | None = None):
    """Rename repeated letters apart.  The k-th occurrence (counting from the
    left, from 1) of a letter p that occurs more than once becomes p_k;
    letters occurring once are kept.  Fresh names avoid ``taken`` and the
    letters of ``a``.  Returns the new formula and the map from its letters
    back to the original ones, so ``rename(new, back)`` gives ``a``."""
    counts = Counter(letter_list(a))
    used = set(counts) | set(taken or ())
    seen: Counter = Counter()
    fresh: dict[tuple[str, int], str] = {}

    def name_for(p: str) -> str:
        seen[p] += 1
        if counts[p] == 1:
            return p
        key = (p, seen[p])
        if key not in fresh:
            candidate = f"{p}_{seen[p]}"
            while candidate in used:
                candidate += "_"
            used.add(candidate)
            fresh[key] = candidate
        return fresh[key]

    def go(x):
        if isinstance(x, Letter):
            return Letter(name_for(x.name))
        if isinstance(x, Binary):
            left = go(x.left)
            return type(x)(left, go(x.right))
        return x

    out = go(a)
    back = {new: key[0] for key, new in fresh.items()}
    back.update({p: p for p in counts if counts[p] == 1})
    return out, back


def rename(a, mapping: dict[str, str]):
    """Substitute letters for letters."""
    if isinstance(a, Letter):
        return Letter(mapping.get(a.name, a.name))
    if isinstance(a, Binary):
        return type(a)(rename(a.left, mapping), rename(a.right, mapping))
    return a


def normal_form(a):
    """Cancel units as far as the bimonoidal unit laws allow: T is
    cancelled in conjunctions and F in disjunctions, while a disjunction of
    T's collapses to T and a conjunction of F's to F.  Thus p & F stays."""
    if not isinstance(a, Binary):
        return a
    left = normal_form(a.left)
    right = normal_form(a.right)
    if is_unit(left) and left == right:
        return left
    neutral = unit_of(connective(a))
    if right == neutral and left != neutral:
        return left
    if left == neutral and right != neutral:
        return right
    return type(a)(left, right)


def is_zeta_pure(a, zeta) -> bool:
    """True when the normal form of ``a`` has no occurrence of ``zeta``."""
    return zeta not in set(leaves(normal_form(a)))


def is_pure(a) -> bool:
    return is_zeta_pure(a, TOP) and is_zeta_pure(a, BOT)


def dual(a):
    """Swap & with | and T with F."""
    if isinstance(a, Conj):
        return Disj(dual(a.left), dual(a.right))
    if isinstance(a, Disj):
        return Conj(dual(a.left), dual(a.right))
    if isinstance(a, Top):
        return BOT
    if isinstance(a, Bot):
        return TOP
    return a


def subformula(a, path: tuple[str, ...]):
    """Follow a path of 'L'/'R' steps."""
    for step in path:
        if not isinstance(a, Binary):
            raise KeyError(f"path {path} leaves the formula")
        a = a.left if step == "L" else a.right
    return a


def replace_at(a, path: tuple[str, ...], new):
    if not path:
        return new
    if not isinstance(a, Binary):
        raise KeyError(f"path {path} leaves the formula")
    if path[0] == "L":
        return type(a)(replace_at(a.left, path[1:], new), a.right)
    return type(a)(a.left, replace_at(a.right, path[1:], new))


def fold(conn: str, parts):
    """Left-nested conjunction or disjunction of a non-empty sequence."""
    parts = list(parts)
    result = parts[0]
    for p in parts[1:]:
        result = make(conn, result, p)
    return result
