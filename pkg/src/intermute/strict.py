"""Form sequences: formulae modulo associativity, stored as ordered trees
whose inner nodes have at least two children and alternate between & and |.

Form sets additionally forget the order of children; they are represented
by form sequences with children in a canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from . import formulae as fm


@dataclass(frozen=True)
class Leaf:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Node:
    conn: str
    children: tuple
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        # trees are hashed constantly by the searches; hash once
        object.__setattr__(self, "_hash", hash((self.conn, self.children)))

    def __hash__(self):
        return self._hash

    def __str__(self):
        return seq_str(self)


FormSequence = Union[Leaf, Node]
FormSet = FormSequence  # children in canonical order, see canonical_set


class NotDiversified(ValueError):
    pass


class BadOccurrence(ValueError):
    pass


class WouldEraseAll(ValueError):
    pass


def require_diversified(*xs):
    for x in xs:
        if not is_diversified(x):
            raise NotDiversified(f"{seq_str(x)} has a repeated letter")


class HasUnits(ValueError):
    pass


def node(conn: str, children) -> FormSequence:
    """Build a node, flattening children with the same connective."""
    flat = []
    for c in children:
        if isinstance(c, Node) and c.conn == conn:
            flat.extend(c.children)
        else:
            flat.append(c)
    if len(flat) == 1:
        return flat[0]
    return Node(conn, tuple(flat))


def flatten(a) -> FormSequence:
    """The form sequence of a formula.  Units become leaves named T and F."""
    if isinstance(a, fm.Letter):
        return Leaf(a.name)
    if isinstance(a, fm.Top):
        return Leaf("T")
    if isinstance(a, fm.Bot):
        return Leaf("F")
    return node(fm.connective(a), (flatten(a.left), flatten(a.right)))


def strictify(a) -> FormSequence:
    if not fm.is_constant_free(a):
        raise HasUnits(f"{fm.to_str(a)} contains a unit")
    return flatten(a)


def to_formula(x):
    """A left-nested formula representing the form sequence."""
    if isinstance(x, Leaf):
        if x.name == "T":
            return fm.TOP
        if x.name == "F":
            return fm.BOT
        return fm.Letter(x.name)
    return fm.fold(x.conn, [to_formula(c) for c in x.children])


def parse_sequence(text: str) -> FormSequence:
    return strictify(fm.parse_formula(text))


def seq_str(x) -> str:
    if isinstance(x, Leaf):
        return x.name
    parts = []
    for c in x.children:
        s = seq_str(c)
        parts.append(f"({s})" if isinstance(c, Node) and (x.conn == "&" or c.conn == "|") else s)
    return f" {x.conn} ".join(parts)


@lru_cache(maxsize=None)
def seq_letters(x) -> tuple:
    if isinstance(x, Leaf):
        return (x.name,)
    out = []
    for c in x.children:
        out.extend(seq_letters(c))
    return tuple(out)


def letter_set(x) -> frozenset:
    return frozenset(seq_letters(x))


@lru_cache(maxsize=None)
def is_diversified(x) -> bool:
    names = seq_letters(x)
    return len(names) == len(set(names))


@lru_cache(maxsize=None)
def binary_count(x, conn: str) -> int:
    """Number of binary occurrences of a connective (k-1 per k-ary node)."""
    if isinstance(x, Leaf):
        return 0
    own = len(x.children) - 1 if x.conn == conn else 0
    return own + sum(binary_count(c, conn) for c in x.children)


# -------------------------------------------------------------- form sets

def _set_key(x):
    return (min(seq_letters(x)), len(seq_letters(x)), seq_str(x))


@lru_cache(maxsize=None)
def canonical_set(x) -> FormSet:
    """Sort children by (least letter, size, text) at every node."""
    if isinstance(x, Leaf):
        return x
    kids = sorted((canonical_set(c) for c in x.children), key=_set_key)
    return Node(x.conn, tuple(kids))


def same_set(x, y) -> bool:
    return canonical_set(x) == canonical_set(y)


# ------------------------------------------------------------------- TBLR

@lru_cache(maxsize=None)
def tblr(x) -> tuple:
    """Top, bottom, left and right letter sequences."""
    if isinstance(x, Leaf):
        s = (x.name,)
        return s, s, s, s
    parts = [tblr(c) for c in x.children]
    cat = lambda i: tuple(n for p in parts for n in p[i])
    if x.conn == "&":
        return cat(0), cat(1), parts[0][2], parts[-1][3]
    return parts[0][0], parts[-1][1], cat(2), cat(3)


def top(x):
    return tblr(x)[0]


def bottom(x):
    return tblr(x)[1]


def left(x):
    return tblr(x)[2]


def right(x):
    return tblr(x)[3]


# ------------------------------------------------------------ occurrences

@dataclass(frozen=True)
class ConnOccurrence:
    """A binary occurrence of a connective: the gap after child ``gap`` of
    the node reached by ``path`` (child indices from the root)."""
    conn: str
    path: tuple
    gap: int

    def __str__(self):
        where = ".".join(str(i) for i in self.path) or "root"
        return f"{self.conn}@{where}:{self.gap}"


def subsequence(x, path):
    for i in path:
        x = x.children[i]
    return x


@lru_cache(maxsize=None)
def occurrences(x, conn: str) -> tuple:
    """Binary occurrences of ``conn`` in textual order."""
    out = []

    def go(y, path):
        if isinstance(y, Leaf):
            return
        for i, c in enumerate(y.children):
            go(c, path + (i,))
            if i < len(y.children) - 1 and y.conn == conn:
                out.append(ConnOccurrence(conn, path, i))
    go(x, ())
    return tuple(out)


def flank(x, occ: ConnOccurrence) -> tuple:
    """For & the pair (L_x, R_x); for | the pair (T_y, B_y).

    L_x is the left column of what follows the occurrence and R_x the right
    column of what precedes it; T_y and B_y are defined likewise with rows.
    """
    try:
        n = subsequence(x, occ.path)
    except (AttributeError, IndexError):
        raise BadOccurrence(f"{occ} is not in {seq_str(x)}") from None
    if (isinstance(n, Leaf) or n.conn != occ.conn
            or not 0 <= occ.gap < len(n.children) - 1):
        raise BadOccurrence(f"{occ} is not in {seq_str(x)}")
    before, after = n.children[occ.gap], n.children[occ.gap + 1]
    if occ.conn == "&":
        return left(after), right(before)
    return top(after), bottom(before)


@lru_cache(maxsize=None)
def flanks(x, conn: str) -> tuple:
    return tuple((o, flank(x, o)) for o in occurrences(x, conn))


# ------------------------------------------------------------- relations

@lru_cache(maxsize=None)
def above(x) -> frozenset:
    """Pairs (q, p) with q directly above p: q in B_y and p in T_y."""
    return frozenset((q, p) for _, (t, b) in flanks(x, "|") for q in b for p in t)


@lru_cache(maxsize=None)
def beside(x) -> frozenset:
    """Pairs (q, p) with q directly left of p: q in R_x and p in L_x."""
    return frozenset((q, p) for _, (l, r) in flanks(x, "&") for q in r for p in l)


def transitive_closure(pairs) -> frozenset:
    succ: dict = {}
    for a, b in pairs:
        succ.setdefault(a, set()).add(b)
    out = set()
    for start in list(succ):
        stack = list(succ[start])
        seen = set()
        while stack:
            n = stack.pop()
            if n in seen:
                continue
            seen.add(n)
            out.add((start, n))
            stack.extend(succ.get(n, ()))
    return frozenset(out)


def above_below(x) -> tuple:
    """The direct above relation and its transitive closure."""
    require_diversified(x)
    rel = above(x)
    return rel, transitive_closure(rel)


def beside_closure(x) -> tuple:
    rel = beside(x)
    return rel, transitive_closure(rel)


def _chain(names, closure):
    # sort a chain by the number of its members preceding each element
    names = list(names)
    return tuple(sorted(names, key=lambda n: sum((m, n) in closure for m in names)))


def borders(x) -> dict:
    """Letters on each side of the grid, each list in reading order.

    A letter is on the left border when it lies in no L_x, on the top
    border when it lies in no T_y, and so on.  Left and right borders are
    ordered top-down, top and bottom borders left to right."""
    require_diversified(x)
    names = seq_letters(x)
    and_fl = [f for _, f in flanks(x, "&")]
    or_fl = [f for _, f in flanks(x, "|")]
    in_l = {n for l, _ in and_fl for n in l}
    in_r = {n for _, r in and_fl for n in r}
    in_t = {n for t, _ in or_fl for n in t}
    in_b = {n for _, b in or_fl for n in b}
    vert = transitive_closure(above(x))
    horiz = transitive_closure(beside(x))
    return {
        "left": _chain([n for n in names if n not in in_l], vert),
        "right": _chain([n for n in names if n not in in_r], vert),
        "top": _chain([n for n in names if n not in in_t], horiz),
        "bottom": _chain([n for n in names if n not in in_b], horiz),
    }


def transversals(x) -> list:
    """Horizontal transversals: chains y1 ... yl of | occurrences such that
    T_{y1} starts on the left border, T_{yl} ends on the right border and
    the last letter of each T_{yi} is directly left of the first letter of
    T_{yi+1}."""
    require_diversified(x)
    fl = flanks(x, "|")
    b = borders(x)
    left_b, right_b = set(b["left"]), set(b["right"])
    rel = beside(x)
    out = []

    def extend(chain, last):
        if last in right_b:
            out.append(tuple(chain))
        for occ, (t, _) in fl:
            if (last, t[0]) in rel:
                extend(chain + [occ], t[-1])

    for occ, (t, _) in fl:
        if t[0] in left_b:
            extend([occ], t[-1])
    return out


# ------------------------------------------------------------------- grid

@dataclass(frozen=True)
class Segment:
    orientation: str        # 'v' for a & divider, 'h' for a | divider
    start: tuple            # (x, y) with y growing downwards
    end: tuple
    occurrence: ConnOccurrence


@dataclass(frozen=True)
class Grid:
    outer: tuple            # (x0, y0, x1, y1)
    segments: tuple
    crossings: dict         # point -> frozenset of arrows
    cells: dict             # letter -> (x0, y0, x1, y1)

    def to_json(self) -> dict:
        q = lambda v: str(v)
        pt = lambda p: [q(p[0]), q(p[1])]
        return {
            "outer": [q(v) for v in self.outer],
            "segments": [{"orientation": s.orientation, "from": pt(s.start), "to": pt(s.end),
                          "occurrence": str(s.occurrence)} for s in self.segments],
            "crossings": [{"point": pt(p), "index": sorted(i)}
                          for p, i in sorted(self.crossings.items())],
            "cells": {n: [q(v) for v in r] for n, r in self.cells.items()},
        }


def grid(x) -> Grid:
    """Grid of a form sequence in the unit square.  & splits a rectangle
    into equal vertical strips and | into equal horizontal strips, the first
    disjunct on top."""
    segments = []
    crossings: dict = {}
    cells = {}

    def mark(p, arrow):
        crossings[p] = crossings.get(p, frozenset()) | {arrow}

    def go(y, path, x0, y0, x1, y1):
        if isinstance(y, Leaf):
            cells[y.name] = (x0, y0, x1, y1)
            return
        k = len(y.children)
        for i, c in enumerate(y.children):
            if y.conn == "&":
                a = x0 + (x1 - x0) * Fraction(i, k)
                b = x0 + (x1 - x0) * Fraction(i + 1, k)
                go(c, path + (i,), a, y0, b, y1)
                if i < k - 1:
                    occ = ConnOccurrence("&", path, i)
                    segments.append(Segment("v", (b, y0), (b, y1), occ))
                    mark((b, y0), "↓")
                    mark((b, y1), "↑")
            else:
                a = y0 + (y1 - y0) * Fraction(i, k)
                b = y0 + (y1 - y0) * Fraction(i + 1, k)
                go(c, path + (i,), x0, a, x1, b)
                if i < k - 1:
                    occ = ConnOccurrence("|", path, i)
                    segments.append(Segment("h", (x0, b), (x1, b), occ))
                    mark((x0, b), "→")
                    mark((x1, b), "←")

    zero, one = Fraction(0), Fraction(1)
    go(x, (), zero, zero, one, one)
    return Grid((zero, zero, one, one), tuple(segments), crossings, cells)


def _lcm(a, b):
    from math import gcd
    return a * b // gcd(a, b)


def render_grid(g: Grid, style: str = "ascii") -> str:
    if style == "svg":
        return _render_svg(g)
    if style != "ascii":
        raise ValueError(f"unknown style {style!r}")
    dx = dy = 1
    for s in g.segments:
        for p in (s.start, s.end):
            dx = _lcm(dx, p[0].denominator)
            dy = _lcm(dy, p[1].denominator)
    widest = max(len(n) for n in g.cells)
    cw = max(widest + 3, 4)
    ch = 2
    width, height = dx * cw, dy * ch
    canvas = [[" "] * (width + 1) for _ in range(height + 1)]
    col = lambda v: int(v * dx) * cw
    row = lambda v: int(v * dy) * ch

    # outer box
    for c in range(width + 1):
        canvas[0][c] = canvas[height][c] = "─"
    for r in range(height + 1):
        canvas[r][0] = canvas[r][width] = "│"
    canvas[0][0], canvas[0][width] = "┌", "┐"
    canvas[height][0], canvas[height][width] = "└", "┘"

    for s in g.segments:
        if s.orientation == "v":
            c = col(s.start[0])
            for r in range(row(s.start[1]) + 1, row(s.end[1])):
                canvas[r][c] = "│"
        else:
            r = row(s.start[1])
            for c in range(col(s.start[0]) + 1, col(s.end[0])):
                canvas[r][c] = "─"

    glyphs = {
        frozenset("↓"): "┬", frozenset("↑"): "┴", frozenset("→"): "├", frozenset("←"): "┤",
        # a vertical meeting from both sides: the horizontal passes through
        frozenset("↓↑"): "─", frozenset("→←"): "│",
    }
    for p, idx in g.crossings.items():
        r, c = row(p[1]), col(p[0])
        canvas[r][c] = glyphs.get(idx, "┼")

    for name, (x0, y0, x1, y1) in g.cells.items():
        r = (row(y0) + row(y1)) // 2
        c0, c1 = col(x0), col(x1)
        start = c0 + max(1, (c1 - c0 - len(name) + 1) // 2)
        for i, chr_ in enumerate(name):
            canvas[r][start + i] = chr_
    return "\n".join("".join(line).rstrip() for line in canvas)


def _render_svg(g: Grid) -> str:
    scale = 240
    f = lambda v: f"{float(v) * scale:.2f}"
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{scale + 20}" '
             f'height="{scale + 20}" viewBox="-10 -10 {scale + 20} {scale + 20}">',
             f'<rect x="0" y="0" width="{scale}" height="{scale}" fill="none" stroke="black"/>']
    for s in g.segments:
        parts.append(f'<line x1="{f(s.start[0])}" y1="{f(s.start[1])}" x2="{f(s.end[0])}" '
                     f'y2="{f(s.end[1])}" stroke="black" data-occurrence="{s.occurrence}"/>')
    for name, (x0, y0, x1, y1) in g.cells.items():
        parts.append(f'<text x="{f((x0 + x1) / 2)}" y="{f((y0 + y1) / 2)}" '
                     f'text-anchor="middle" dominant-baseline="middle">{name}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


# --------------------------------------------------------------- deletion

def delete_letters(x, letters_, canonical: bool = False, allow_empty: bool = False):
    """X with the letters in ``letters_`` deleted.  Nodes left with one
    child collapse into it.  Deleting every letter raises WouldEraseAll,
    or returns None with ``allow_empty``."""
    require_diversified(x)
    gone = frozenset(letters_)

    def go(y):
        if isinstance(y, Leaf):
            return None if y.name in gone else y
        kids = [k for k in (go(c) for c in y.children) if k is not None]
        if not kids:
            return None
        return node(y.conn, kids)
    out = go(x)
    if out is None and not allow_empty:
        raise WouldEraseAll(f"deleting {','.join(sorted(gone))} empties {seq_str(x)}")
    if out is not None and canonical:
        out = canonical_set(out)
    return out


def enumerate_sequences(names) -> list:
    """Every constant-free form sequence whose letters are exactly
    ``names``, each used once."""
    names = tuple(names)
    return list(_sequences(frozenset(names), None))


@lru_cache(maxsize=None)
def _ordered_partitions(items: frozenset) -> tuple:
    # ordered partitions into at least two non-empty blocks
    items_t = tuple(sorted(items))
    out = []

    def rec(rest, acc):
        if not rest:
            if len(acc) >= 2:
                out.append(tuple(acc))
            return
        rest_t = tuple(sorted(rest))
        n = len(rest_t)
        for mask in range(1, 1 << n):
            block = frozenset(rest_t[i] for i in range(n) if mask >> i & 1)
            rec(rest - block, acc + [block])
    rec(frozenset(items_t), [])
    return tuple(out)


@lru_cache(maxsize=None)
def _sequences(names: frozenset, parent_conn) -> tuple:
    if len(names) == 1:
        return (Leaf(next(iter(names))),)
    out = []
    for conn in ("&", "|"):
        if conn == parent_conn:
            continue
        for blocks in _ordered_partitions(names):
            options = [_sequences(b, conn) for b in blocks]
            for combo in _product(options):
                out.append(Node(conn, combo))
    return tuple(out)


def _product(options):
    if not options:
        yield ()
        return
    for head in options[0]:
        for tail in _product(options[1:]):
            yield (head,) + tail
