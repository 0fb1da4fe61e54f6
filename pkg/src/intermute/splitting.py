"""Splitting and restriction of strict symmetric intermutation terms.

The terms here are built from identities and c^k with composition and both
products, and are typed up to associativity and commutativity (objects are
form sets).  Objects are diversified, so every letter names one occurrence.

For a source X1 | X2, a c^k with indices S, T, U, V is *splitting* when the
letters of S & T lie in one of X1, X2 and those of U & V in the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import formulae as fm
from . import strict as st
from . import terms as tm
from .terms import SYM, Comp, ConjPar, DisjPar, Id, Prim


class PreconditionViolated(ValueError):
    pass


class NotAllSplitting(PreconditionViolated):
    pass


def _letters(a) -> frozenset:
    return fm.letters(a)


def _as_set(x):
    """A form set from a formula or a form sequence."""
    if isinstance(x, (st.Leaf, st.Node)):
        return st.canonical_set(x)
    return st.canonical_set(st.flatten(x))


def delete_in_formula(a, gone: frozenset):
    """The formula with the letters in ``gone`` deleted (None if empty)."""
    if isinstance(a, fm.Letter):
        return None if a.name in gone else a
    if isinstance(a, fm.Binary):
        left = delete_in_formula(a.left, gone)
        right = delete_in_formula(a.right, gone)
        if left is None:
            return right
        if right is None:
            return left
        return type(a)(left, right)
    return a


# ------------------------------------------------------------- restriction

def restriction_allowed(x, p) -> tuple:
    """(ok, reason): some letter must survive, and in every conjunction of
    the form set the conjuncts lie in P either all or none."""
    s = _as_set(x)
    p = frozenset(p)
    if st.letter_set(s) <= p:
        return False, "every letter would be deleted"
    for _, n in _set_nodes(s):
        if n.conn != "&":
            continue
        inside = [st.letter_set(c) <= p for c in n.children]
        if any(inside) and not all(inside):
            return False, f"the conjunction {st.seq_str(n)} is only partly deleted"
    return True, "ok"


def _set_nodes(x, path=()):
    if isinstance(x, st.Node):
        yield path, x
        for i, c in enumerate(x.children):
            yield from _set_nodes(c, path + (i,))


def restrict_arrow(f, p):
    """The restriction of f to the letters outside P."""
    p = frozenset(p)
    src = tm.type_of(f, SYM).source
    ok, reason = restriction_allowed(src, p)
    if not ok:
        raise PreconditionViolated(reason)
    return _restrict(f, p)


def _restrict(f, p):
    src = tm.type_of(f, SYM).source
    if not (_letters(src) & p):
        return f
    if isinstance(f, Id):
        return Id(delete_in_formula(f.obj, p))
    if isinstance(f, Prim):
        g = f.gen
        if g.kind != "ck":
            raise PreconditionViolated(f"restriction is defined for c^k terms, found {g.kind}")
        a, b, c, d = g.args
        if _letters(fm.Conj(a, b)) <= p or _letters(fm.Conj(c, d)) <= p:
            return Id(delete_in_formula(g.source, p))
        parts = [delete_in_formula(z, p) for z in g.args]
        if any(z is None for z in parts):
            raise PreconditionViolated(f"{g} loses a conjunct")
        return tm.prim("ck", *parts)
    if isinstance(f, Comp):
        return Comp(_restrict(f.after, p), _restrict(f.before, p))
    left_src = tm.type_of(f.left, SYM).source
    right_src = tm.type_of(f.right, SYM).source
    if _letters(left_src) <= p:
        return _restrict(f.right, p)
    if _letters(right_src) <= p:
        return _restrict(f.left, p)
    return type(f)(_restrict(f.left, p), _restrict(f.right, p))


# --------------------------------------------------------- classification

SPLITTING = "splitting"
NONSPLITTING = "nonsplitting"


@dataclass(frozen=True)
class SplitClass:
    tags: tuple             # (generator, tag) in textual order

    @property
    def all_splitting(self) -> bool:
        return all(t == SPLITTING for _, t in self.tags)

    @property
    def all_nonsplitting(self) -> bool:
        return all(t == NONSPLITTING for _, t in self.tags)

    def to_json(self) -> dict:
        return {"generators": [{"generator": str(g), "tag": t} for g, t in self.tags]}


def is_splitting(gen, x1, x2) -> bool:
    l1, l2 = _letters_of(x1), _letters_of(x2)
    a, b, c, d = gen.args
    first, second = _letters(fm.Conj(a, b)), _letters(fm.Conj(c, d))
    return (first <= l1 and second <= l2) or (first <= l2 and second <= l1)


def _letters_of(x):
    if isinstance(x, (st.Leaf, st.Node)):
        return st.letter_set(x)
    if isinstance(x, (set, frozenset)):
        return frozenset(x)
    return fm.letters(x)


def classify(f, x1, x2) -> SplitClass:
    tags = []
    for g in tm.generators(f):
        if g.kind != "ck":
            raise PreconditionViolated(f"expected c^k terms, found {g.kind}")
        tags.append((g, SPLITTING if is_splitting(g, x1, x2) else NONSPLITTING))
    return SplitClass(tuple(tags))


def _check_source(f, x1, x2):
    src = tm.type_of(f, SYM).source
    want = _as_set(st.node("|", (_as_set(x1), _as_set(x2))))
    if _as_set(src) != want:
        raise PreconditionViolated(
            f"source {fm.to_str(src)} is not {st.seq_str(want)} as a form set")
    return src


# ----------------------------------------------------------- normal form

def _conj(parts):
    return fm.fold("&", [st.to_formula(p) for p in parts])


def multi_intermutation(ps, qs):
    """(P1 & ... & Pn) | (Q1 & ... & Qn) -> (P1 | Q1) & ... & (Pn | Qn)."""
    if len(ps) == 1:
        return Id(fm.Disj(st.to_formula(ps[0]), st.to_formula(qs[0])))
    head = tm.prim("ck", st.to_formula(ps[0]), _conj(ps[1:]), st.to_formula(qs[0]), _conj(qs[1:]))
    first = Id(fm.Disj(st.to_formula(ps[0]), st.to_formula(qs[0])))
    return Comp(ConjPar(first, multi_intermutation(ps[1:], qs[1:])), head)


def _prime(x, conn):
    if isinstance(x, st.Node) and x.conn == conn:
        return list(x.children)
    return [x]


def normal_splitting(z1, z2, y):
    """The canonical splitting term Z1 | Z2 -> Y: peel the c^k head fixed
    by deletion for a conjunction, go through prime disjuncts for a
    disjunction."""
    z1, z2, y = _as_set(z1), _as_set(z2), _as_set(y)
    return tm.simplify(_nf(z1, z2, y), SYM)


def _nf(z1, z2, y):
    l1, l2 = st.letter_set(z1), st.letter_set(z2)
    if st.letter_set(y) != l1 | l2 or l1 & l2:
        raise PreconditionViolated("letters do not match")
    if isinstance(y, st.Leaf):
        raise PreconditionViolated("a disjunction cannot be sent to a letter")
    if y.conn == "&":
        ps = [st.delete_letters(c, l2, canonical=True, allow_empty=True) for c in y.children]
        qs = [st.delete_letters(c, l1, canonical=True, allow_empty=True) for c in y.children]
        if any(v is None for v in ps + qs):
            raise PreconditionViolated("no splitting arrow has this type")
        head = multi_intermutation(ps, qs)
        tails = [_nf(p, q, c) for p, q, c in zip(ps, qs, y.children)]
        tail = tails[0]
        for t in tails[1:]:
            tail = ConjPar(tail, t)
        return Comp(tail, head)
    pd1, pd2 = _prime(z1, "|"), _prime(z2, "|")
    parts = []
    for d in y.children:
        if d in pd1 or d in pd2:
            parts.append(Id(st.to_formula(d)))
            continue
        ld = st.letter_set(d)
        a = [c for c in pd1 if st.letter_set(c) <= ld]
        b = [c for c in pd2 if st.letter_set(c) <= ld]
        if len(a) != 1 or len(b) != 1:
            raise PreconditionViolated(f"disjunct {st.seq_str(d)} has no splitting source")
        parts.append(_nf(a[0], b[0], d))
    out = parts[0]
    for t in parts[1:]:
        out = DisjPar(out, t)
    return out


def splitting_normal_form(f, x1, x2):
    """The member of the normal class with the type of f.  Requires every
    c^k of f to be splitting for (X1, X2)."""
    _check_source(f, x1, x2)
    if not classify(f, x1, x2).all_splitting:
        raise NotAllSplitting("f has a nonsplitting c^k")
    target = tm.type_of(f, SYM).target
    return normal_splitting(x1, x2, target)


def factor_split(f, x1, x2):
    """(f1, f2) with f equal to f2 . f1, every c^k of f1 nonsplitting and
    every c^k of f2 splitting.  f1 is the restriction of f to each
    disjunct, side by side; f2 is the normal splitting term from the
    resulting interpolants to the target."""
    _check_source(f, x1, x2)
    l1, l2 = _letters_of(x1), _letters_of(x2)
    g1 = restrict_arrow(f, l2)
    g2 = restrict_arrow(f, l1)
    first = DisjPar(g1, g2)
    mid = tm.type_of(first, SYM).target
    target = tm.type_of(f, SYM).target
    second = normal_splitting(tm.type_of(g1, SYM).target, tm.type_of(g2, SYM).target, target)
    if not tm.same_object(mid, tm.type_of(second, SYM).source, SYM):
        raise PreconditionViolated("factors do not compose")
    return first, second


# ------------------------------------------------------ conjunction source

def heads(f):
    """The c^k generators of f in the order they are applied."""
    dev = tm.develop(f, SYM)
    return [tm.head_of(factor)[1] for factor in dev.factors]


def assemble(source, gens):
    """Apply c^k generators in order to a form set, each at the unique
    place its indices name."""
    from .generate import place
    x = _as_set(source)
    factors = []
    for g in gens:
        found = _locate(x, g)
        if found is None:
            raise PreconditionViolated(f"{g} does not apply to {st.seq_str(x)}")
        path, i, j, parts = found
        factor, x = place(x, path, i, j, parts)
        factors.append(factor)
    if not factors:
        return Id(st.to_formula(x))
    return tm.compose(*reversed(factors))


def _locate(x, g):
    a, b, c, d = (_as_set(z) for z in g.args)
    left = _as_set(st.node("&", (a, b)))
    right = _as_set(st.node("&", (c, d)))
    for path, n in _set_nodes(x):
        if n.conn != "|":
            continue
        kids = list(n.children)
        if left in kids and right in kids:
            return path, kids.index(left), kids.index(right), (a, b, c, d)
    return None


def split_conjunction(f, x1, x2):
    """For f : X1 & X2 -> Y return (f1, f2) with f equal to f1 & f2."""
    src = tm.type_of(f, SYM).source
    want = _as_set(st.node("&", (_as_set(x1), _as_set(x2))))
    if _as_set(src) != want:
        raise PreconditionViolated("source is not X1 & X2")
    l1 = _letters_of(x1)
    hs = heads(f)
    first = [g for g in hs if fm.letters(g.source) <= l1]
    second = [g for g in hs if not fm.letters(g.source) <= l1]
    return assemble(x1, first), assemble(x2, second)
