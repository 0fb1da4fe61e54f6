"""Two models of arrow terms.

``eval_rel`` sends a term to a relation between the letter occurrences of
its source and target, numbered from zero left to right.  ``eval_mat``
sends it to a matrix of natural numbers with a row per target occurrence
and a column per source occurrence, counting connecting lines.  Units carry
no occurrences, so letterless objects give empty relations and 0x0
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import formulae as fm
from . import terms as tm
from .terms import SIGNATURES, Comp, Id, Prim


@dataclass(frozen=True)
class Relation:
    source_size: int
    target_size: int
    pairs: frozenset        # (source index, target index)

    def compose(self, before: "Relation") -> "Relation":
        """self after before."""
        succ: dict = {}
        for a, b in self.pairs:
            succ.setdefault(a, set()).add(b)
        pairs = frozenset((a, c) for a, b in before.pairs for c in succ.get(b, ()))
        return Relation(before.source_size, self.target_size, pairs)

    def beside(self, other: "Relation") -> "Relation":
        s, t = self.source_size, self.target_size
        shifted = {(a + s, b + t) for a, b in other.pairs}
        return Relation(s + other.source_size, t + other.target_size,
                        frozenset(self.pairs | shifted))

    def is_bijection(self) -> bool:
        if self.source_size != self.target_size or len(self.pairs) != self.source_size:
            return False
        return (len({a for a, _ in self.pairs}) == self.source_size
                and len({b for _, b in self.pairs}) == self.target_size)

    def to_json(self) -> dict:
        return {"source": self.source_size, "target": self.target_size,
                "pairs": sorted(list(p) for p in self.pairs)}

    def __str__(self):
        body = ", ".join(f"{a}-{b}" for a, b in sorted(self.pairs))
        return f"{self.source_size} -> {self.target_size}: {{{body}}}"


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple          # tuple of row tuples

    @staticmethod
    def zeros(rows, cols):
        return [[0] * cols for _ in range(rows)]

    def compose(self, before: "IntMatrix") -> "IntMatrix":
        """self after before, i.e. the product self * before."""
        out = IntMatrix.zeros(self.rows, before.cols)
        for i, row in enumerate(self.entries):
            for k, v in enumerate(row):
                if v:
                    bk = before.entries[k]
                    for j in range(before.cols):
                        if bk[j]:
                            out[i][j] += v * bk[j]
        return IntMatrix(self.rows, before.cols, tuple(map(tuple, out)))

    def beside(self, other: "IntMatrix") -> "IntMatrix":
        out = IntMatrix.zeros(self.rows + other.rows, self.cols + other.cols)
        for i, row in enumerate(self.entries):
            out[i][:self.cols] = row
        for i, row in enumerate(other.entries):
            out[self.rows + i][self.cols:] = row
        return IntMatrix(self.rows + other.rows, self.cols + other.cols, tuple(map(tuple, out)))

    def support(self) -> frozenset:
        return frozenset((j, i) for i, row in enumerate(self.entries)
                         for j, v in enumerate(row) if v)

    def is_permutation(self) -> bool:
        if self.rows != self.cols:
            return False
        return (all(sorted(r) == [0] * (self.cols - 1) + [1] for r in self.entries)
                and all(sum(r[j] for r in self.entries) == 1 for j in range(self.cols)))

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    def __str__(self):
        if not self.rows:
            return f"({self.rows}x{self.cols})"
        wide = any(v > 9 for r in self.entries for v in r)
        sep = " " if wide else ""
        return "\n".join(sep.join(str(v) for v in r) for r in self.entries)


def occurrence_count(a) -> int:
    return len(fm.letter_list(a))


def _blocks(template, args):
    """(index number, offset) for each placeholder occurrence."""
    out = []
    offset = 0
    for leaf in fm.leaves(template):
        if isinstance(leaf, fm.Letter) and leaf.name.startswith("#"):
            i = int(leaf.name[1:])
            out.append((i, offset))
            offset += occurrence_count(args[i])
        elif isinstance(leaf, fm.Letter):
            offset += 1
    return out


def generator_pairs(g: tm.Generator) -> list:
    """Lines of a generator: every occurrence of an index in the source is
    joined to every occurrence of the same index in the target."""
    _, _, src, tgt = SIGNATURES[g.kind]
    pairs = []
    for i, s_off in _blocks(src, g.args):
        for j, t_off in _blocks(tgt, g.args):
            if i == j:
                n = occurrence_count(g.args[i])
                pairs.extend((s_off + k, t_off + k) for k in range(n))
    return pairs


def _glue(frm, to):
    """Lines identifying the occurrences of two objects that are equal up
    to associativity and commutativity, matched by letter."""
    a, b = fm.letter_list(frm), fm.letter_list(to)
    if a == b:
        return None
    if sorted(a) != sorted(b):
        raise tm.IllTyped(f"{fm.to_str(frm)} and {fm.to_str(to)} have different letters")
    if len(set(a)) != len(a):
        raise tm.IllTyped("cannot match occurrences of an object that is not diversified")
    where = {n: i for i, n in enumerate(b)}
    return [(i, where[n]) for i, n in enumerate(a)]


class _Model:
    def __init__(self, make_gen, make_id, make_glue):
        self.make_gen = make_gen
        self.make_id = make_id
        self.make_glue = make_glue

    def run(self, t):
        if isinstance(t, Id):
            return self.make_id(occurrence_count(t.obj)), t.obj, t.obj
        if isinstance(t, Prim):
            return self.make_gen(t.gen), t.gen.source, t.gen.target
        if isinstance(t, Comp):
            f, fs, ft = self.run(t.before)
            g, gs, gt = self.run(t.after)
            glue = _glue(ft, gs)
            if glue is not None:
                f = self.make_glue(len(glue), glue).compose(f)
            return g.compose(f), fs, gt
        left, ls, lt = self.run(t.left)
        right, rs, rt = self.run(t.right)
        mk = fm.Conj if isinstance(t, tm.ConjPar) else fm.Disj
        return left.beside(right), mk(ls, rs), mk(lt, rt)


def _rel_gen(g):
    s = occurrence_count(g.source)
    t = occurrence_count(g.target)
    return Relation(s, t, frozenset(generator_pairs(g)))


def _mat_from_pairs(s, t, pairs):
    out = IntMatrix.zeros(t, s)
    for a, b in pairs:
        out[b][a] += 1
    return IntMatrix(t, s, tuple(map(tuple, out)))


_REL = _Model(_rel_gen,
              lambda n: Relation(n, n, frozenset((i, i) for i in range(n))),
              lambda n, pairs: Relation(n, n, frozenset(pairs)))
_MAT = _Model(lambda g: _mat_from_pairs(occurrence_count(g.source), occurrence_count(g.target),
                                        generator_pairs(g)),
              lambda n: _mat_from_pairs(n, n, [(i, i) for i in range(n)]),
              lambda n, pairs: _mat_from_pairs(n, n, pairs))


def _evaluate(model, t, equiv):
    tm.type_of(t, equiv)
    value, src, tgt = model.run(t)
    if equiv == tm.SYM:
        # number occurrences by the canonical representatives
        from . import strict as st
        for_src = _glue(st.to_formula(st.canonical_set(st.flatten(src))), src)
        for_tgt = _glue(tgt, st.to_formula(st.canonical_set(st.flatten(tgt))))
        if for_src is not None:
            value = value.compose(model.make_glue(len(for_src), for_src))
        if for_tgt is not None:
            value = model.make_glue(len(for_tgt), for_tgt).compose(value)
    return value


def eval_rel(t, equiv: str = tm.SYNTACTIC) -> Relation:
    """The relation of a well-typed term.  For terms typed up to
    associativity and commutativity, matching occurrences are joined by
    letter, which needs diversified objects, and occurrences are numbered
    in the canonical representatives of source and target."""
    return _evaluate(_REL, t, equiv)


def eval_mat(t, equiv: str = tm.SYNTACTIC) -> IntMatrix:
    return _evaluate(_MAT, t, equiv)


# ------------------------------------------------------------- equations

class UnknownSchema(KeyError):
    pass


def check_equation(schema, instantiation) -> bool:
    """Model-check one instance of a catalogued schema.  ``instantiation``
    maps metavariable names to formulae (or lists them in order)."""
    from .equations import BY_NAME
    if isinstance(schema, str):
        if schema not in BY_NAME:
            raise UnknownSchema(schema)
        schema = BY_NAME[schema]
    if not isinstance(instantiation, dict):
        values = list(instantiation)
        if len(values) != len(schema.params):
            raise tm.ArityMismatch(
                f"{schema.name} takes {len(schema.params)} formulae, got {len(values)}")
        instantiation = dict(zip(schema.params, values))
    missing = [p for p in schema.params if p not in instantiation]
    if missing:
        raise tm.ArityMismatch(f"{schema.name} needs {', '.join(missing)}")
    env = {k: fm.parse_formula(v) if isinstance(v, str) else v for k, v in instantiation.items()}
    lhs, rhs = schema.instantiate(env)
    return same_image(lhs, rhs)


def same_image(lhs, rhs, equiv: str = tm.SYNTACTIC) -> bool:
    """True when both sides have the same type and the same matrix (and
    hence the same relation).  Ill-typed sides raise IllTyped."""
    lt, rt = tm.type_of(lhs, equiv), tm.type_of(rhs, equiv)
    if not (tm.same_object(lt.source, rt.source, equiv)
            and tm.same_object(lt.target, rt.target, equiv)):
        return False
    return eval_mat(lhs, equiv) == eval_mat(rhs, equiv) and eval_rel(lhs, equiv) == eval_rel(rhs, equiv)


def lattice_reduce(t):
    """The reduced SCk term, or None when the term does not denote a
    bijection."""
    from .lattice import ReductionError, lattice_reduce as reduce_
    try:
        return reduce_(t)
    except ReductionError:
        if not (eval_rel(t).is_bijection() and eval_mat(t).is_permutation()):
            return None
        raise
