"""Arrow terms built from primitive generators with composition and the two
parallel products.

Concrete syntax (``g . f`` means g after f, & binds tighter than |, all
operators associate to the left)::

    arrow := par ('.' par)*
    par   := prim (('&' | '|') prim)*
    prim  := 'id{' formula '}' | GEN '{' formula (',' formula)* '}'
           | GEN | '(' arrow ')'

Nullary generators (hwb-, hwb+, vwt+, vwt-, kappa) take no braces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from . import formulae as fm
from .formulae import (BOT, TOP, Conj, Disj, Letter, ParseError, TokenStream,
                       parse_formula_tokens)

# ------------------------------------------------------------- generators


def _m(i):
    # placeholder leaf for the i-th index of a generator template
    return Letter(f"#{i}")


A, B, C, D = (_m(i) for i in range(4))

# kind -> (concrete name, arity, source template, target template)
SIGNATURES = {
    "hbPlus": ("hb+", 3, Conj(A, Conj(B, C)), Conj(Conj(A, B), C)),
    "hbMinus": ("hb-", 3, Conj(Conj(A, B), C), Conj(A, Conj(B, C))),
    "vbPlus": ("vb+", 3, Disj(A, Disj(B, C)), Disj(Disj(A, B), C)),
    "vbMinus": ("vb-", 3, Disj(Disj(A, B), C), Disj(A, Disj(B, C))),
    "hc": ("hc", 2, Conj(A, B), Conj(B, A)),
    "vc": ("vc", 2, Disj(A, B), Disj(B, A)),
    "hdPlus": ("hd+", 1, Conj(A, TOP), A),
    "hdMinus": ("hd-", 1, A, Conj(A, TOP)),
    "hsPlus": ("hs+", 1, Conj(TOP, A), A),
    "hsMinus": ("hs-", 1, A, Conj(TOP, A)),
    "vdPlus": ("vd+", 1, Disj(A, BOT), A),
    "vdMinus": ("vd-", 1, A, Disj(A, BOT)),
    "vsPlus": ("vs+", 1, Disj(BOT, A), A),
    "vsMinus": ("vs-", 1, A, Disj(BOT, A)),
    "hwBotMinus": ("hwb-", 0, BOT, Conj(BOT, BOT)),
    "hwBotPlus": ("hwb+", 0, Conj(BOT, BOT), BOT),
    "vwTopPlus": ("vwt+", 0, Disj(TOP, TOP), TOP),
    "vwTopMinus": ("vwt-", 0, TOP, Disj(TOP, TOP)),
    "kappa": ("kappa", 0, BOT, TOP),
    "ck": ("ck", 4, Disj(Conj(A, B), Conj(C, D)), Conj(Disj(A, C), Disj(B, D))),
    "hw": ("hw", 1, A, Conj(A, A)),
    "vw": ("vw", 1, Disj(A, A), A),
    "hk1": ("hk1", 2, Conj(A, B), A),
    "hk2": ("hk2", 2, Conj(A, B), B),
    "vk1": ("vk1", 2, A, Disj(A, B)),
    "vk2": ("vk2", 2, B, Disj(A, B)),
}

KIND_OF_NAME = {sig[0]: kind for kind, sig in SIGNATURES.items()}

B_KINDS = frozenset({"hbPlus", "hbMinus", "vbPlus", "vbMinus"})
C_KINDS = frozenset({"hc", "vc"})
DS_KINDS = frozenset({"hdPlus", "hdMinus", "hsPlus", "hsMinus",
                      "vdPlus", "vdMinus", "vsPlus", "vsMinus"})
W_KINDS = frozenset({"hwBotMinus", "hwBotPlus", "vwTopPlus", "vwTopMinus"})
LATTICE_KINDS = frozenset({"hw", "vw", "hk1", "hk2", "vk1", "vk2"})
INVERSE = {
    "hbPlus": "hbMinus", "hbMinus": "hbPlus", "vbPlus": "vbMinus", "vbMinus": "vbPlus",
    "hdPlus": "hdMinus", "hdMinus": "hdPlus", "hsPlus": "hsMinus", "hsMinus": "hsPlus",
    "vdPlus": "vdMinus", "vdMinus": "vdPlus", "vsPlus": "vsMinus", "vsMinus": "vsPlus",
    "hwBotMinus": "hwBotPlus", "hwBotPlus": "hwBotMinus",
    "vwTopPlus": "vwTopMinus", "vwTopMinus": "vwTopPlus",
}


def instantiate(template, args):
    if isinstance(template, Letter):
        if template.name.startswith("#"):
            return args[int(template.name[1:])]
        return template
    if isinstance(template, fm.Binary):
        return type(template)(instantiate(template.left, args), instantiate(template.right, args))
    return template


class ArityMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    kind: str
    args: tuple = ()

    def __post_init__(self):
        if self.kind not in SIGNATURES:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        arity = SIGNATURES[self.kind][1]
        if len(self.args) != arity:
            raise ArityMismatch(f"{self.kind} takes {arity} indices, got {len(self.args)}")

    @property
    def source(self):
        return instantiate(SIGNATURES[self.kind][2], self.args)

    @property
    def target(self):
        return instantiate(SIGNATURES[self.kind][3], self.args)

    def __str__(self):
        name = SIGNATURES[self.kind][0]
        if not self.args:
            return name
        return name + "{" + ",".join(fm.to_str(a) for a in self.args) + "}"


# ------------------------------------------------------------------ terms

@dataclass(frozen=True)
class Id:
    obj: object

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class Prim:
    gen: Generator

    def __str__(self):
        return str(self.gen)


@dataclass(frozen=True)
class Comp:
    """``Comp(g, f)`` is g after f."""
    after: "ArrowTerm"
    before: "ArrowTerm"

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class ConjPar:
    left: "ArrowTerm"
    right: "ArrowTerm"

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class DisjPar:
    left: "ArrowTerm"
    right: "ArrowTerm"

    def __str__(self):
        return to_str(self)


ArrowTerm = Union[Id, Prim, Comp, ConjPar, DisjPar]
PARALLEL = (ConjPar, DisjPar)


def prim(kind: str, *args) -> Prim:
    return Prim(Generator(kind, tuple(args)))


def par(conn: str, left, right):
    return ConjPar(left, right) if conn == "&" else DisjPar(left, right)


def compose(*terms):
    """compose(h, g, f) is h after g after f."""
    result = terms[-1]
    for t in reversed(terms[:-1]):
        result = Comp(t, result)
    return result


# ---------------------------------------------------------------- parsing

def parse_arrow(text: str) -> ArrowTerm:
    ts = TokenStream(text)
    result = _parse_comp(ts)
    if not ts.at_end():
        ts.fail(f"unexpected {ts.peek()!r}")
    return result


def _parse_comp(ts):
    term = _parse_disjpar(ts)
    while ts.peek() == ".":
        ts.next()
        term = Comp(term, _parse_disjpar(ts))
    return term


def _parse_disjpar(ts):
    term = _parse_conjpar(ts)
    while ts.peek() == "|":
        ts.next()
        term = DisjPar(term, _parse_conjpar(ts))
    return term


def _parse_conjpar(ts):
    term = _parse_prim(ts)
    while ts.peek() == "&":
        ts.next()
        term = ConjPar(term, _parse_prim(ts))
    return term


def _parse_prim(ts):
    tok = ts.peek()
    if tok == "(":
        ts.next()
        inner = _parse_comp(ts)
        ts.expect(")")
        return inner
    if tok == "id":
        ts.next()
        ts.expect("{")
        obj = parse_formula_tokens(ts)
        ts.expect("}")
        return Id(obj)
    if tok in KIND_OF_NAME:
        kind = KIND_OF_NAME[tok]
        arity = SIGNATURES[kind][1]
        ts.next()
        args = []
        if arity:
            ts.expect("{")
            args.append(parse_formula_tokens(ts))
            while ts.peek() == ",":
                ts.next()
                args.append(parse_formula_tokens(ts))
            ts.expect("}")
            if len(args) != arity:
                ts.fail(f"{tok} takes {arity} indices, got {len(args)}")
        return Prim(Generator(kind, tuple(args)))
    ts.fail(f"expected a generator, id{{...}} or '(', found {tok!r}" if tok else "unexpected end of input")


def to_str(t) -> str:
    if isinstance(t, Id):
        return "id{" + fm.to_str(t.obj) + "}"
    if isinstance(t, Prim):
        return str(t.gen)
    if isinstance(t, Comp):
        after = to_str(t.after)
        before = to_str(t.before)
        if isinstance(t.before, Comp):
            before = f"({before})"
        return f"{after} . {before}"
    if isinstance(t, ConjPar):
        left, right = to_str(t.left), to_str(t.right)
        if isinstance(t.left, (Comp, DisjPar)):
            left = f"({left})"
        if isinstance(t.right, (Comp, DisjPar, ConjPar)):
            right = f"({right})"
        return f"{left} & {right}"
    if isinstance(t, DisjPar):
        left, right = to_str(t.left), to_str(t.right)
        if isinstance(t.left, Comp):
            left = f"({left})"
        if isinstance(t.right, (Comp, DisjPar)):
            right = f"({right})"
        return f"{left} | {right}"
    raise TypeError(f"not an arrow term: {t!r}")


# ----------------------------------------------------------------- typing

class IllTyped(ValueError):
    """A composition whose endpoints do not match."""

    def __init__(self, message: str, path: tuple = ()):
        self.path = path
        where = "/".join(path) if path else "root"
        super().__init__(f"{message} (at {where})")


SYNTACTIC = "syntactic"
ASSOC = "assoc"
SYM = "sym"


def object_key(a, equiv: str = SYNTACTIC):
    """The representative used to compare objects under an equivalence:
    the formula itself, its form sequence, or its form set."""
    if equiv == SYNTACTIC:
        return a
    from . import strict
    seq = strict.flatten(a)
    return strict.canonical_set(seq) if equiv == SYM else seq


def same_object(a, b, equiv: str = SYNTACTIC) -> bool:
    if equiv == SYNTACTIC:
        return a == b
    return object_key(a, equiv) == object_key(b, equiv)


@dataclass(frozen=True)
class Typing:
    source: object
    target: object


def type_of(t, equiv: str = SYNTACTIC) -> Typing:
    """Source and target of a term.  Compositions are checked up to the
    given equivalence of objects (syntactic, associativity, or
    associativity with commutativity)."""
    return _type_of(t, equiv, ())


def _type_of(t, equiv, path):
    if isinstance(t, Id):
        return Typing(t.obj, t.obj)
    if isinstance(t, Prim):
        return Typing(t.gen.source, t.gen.target)
    if isinstance(t, Comp):
        f = _type_of(t.before, equiv, path + ("before",))
        g = _type_of(t.after, equiv, path + ("after",))
        if not same_object(f.target, g.source, equiv):
            raise IllTyped(
                f"cannot compose {fm.to_str(g.source)} <- {fm.to_str(f.target)}", path)
        return Typing(f.source, g.target)
    if isinstance(t, PARALLEL):
        left = _type_of(t.left, equiv, path + ("left",))
        right = _type_of(t.right, equiv, path + ("right",))
        mk = Conj if isinstance(t, ConjPar) else Disj
        return Typing(mk(left.source, right.source), mk(left.target, right.target))
    raise TypeError(f"not an arrow term: {t!r}")


def is_well_typed(t, equiv: str = SYNTACTIC) -> bool:
    try:
        type_of(t, equiv)
        return True
    except IllTyped:
        return False


# ------------------------------------------------------------ inspection

def generators(t):
    """Generators in left-to-right textual order."""
    if isinstance(t, Prim):
        yield t.gen
    elif isinstance(t, Comp):
        yield from generators(t.after)
        yield from generators(t.before)
    elif isinstance(t, PARALLEL):
        yield from generators(t.left)
        yield from generators(t.right)


def generator_kinds(t) -> frozenset:
    return frozenset(g.kind for g in generators(t))


def count_kind(t, kind: str) -> int:
    return sum(1 for g in generators(t) if g.kind == kind)


def is_identity_term(t) -> bool:
    """True when the term contains no generator at all."""
    return not any(True for _ in generators(t))


def objects_in(t):
    """All formulae appearing as identity objects or generator indices."""
    if isinstance(t, Id):
        yield t.obj
    elif isinstance(t, Prim):
        yield t.gen.source
        yield t.gen.target
    elif isinstance(t, Comp):
        yield from objects_in(t.after)
        yield from objects_in(t.before)
    else:
        yield from objects_in(t.left)
        yield from objects_in(t.right)


def dual_generator(g: Generator) -> Generator:
    """The generator whose type is the dual type reversed."""
    args = tuple(fm.dual(a) for a in g.args)
    k = g.kind
    table = {
        "hbPlus": "vbMinus", "hbMinus": "vbPlus", "vbPlus": "hbMinus", "vbMinus": "hbPlus",
        "hdPlus": "vdMinus", "hdMinus": "vdPlus", "vdPlus": "hdMinus", "vdMinus": "hdPlus",
        "hsPlus": "vsMinus", "hsMinus": "vsPlus", "vsPlus": "hsMinus", "vsMinus": "hsPlus",
        "hwBotMinus": "vwTopPlus", "vwTopPlus": "hwBotMinus",
        "hwBotPlus": "vwTopMinus", "vwTopMinus": "hwBotPlus",
        "kappa": "kappa", "hw": "vw", "vw": "hw",
        "hk1": "vk1", "hk2": "vk2", "vk1": "hk1", "vk2": "hk2",
    }
    if k == "hc":
        return Generator("vc", (args[1], args[0]))
    if k == "vc":
        return Generator("hc", (args[1], args[0]))
    if k == "ck":
        a, b, c, d = args
        return Generator("ck", (a, c, b, d))
    return Generator(table[k], args)


def dual(t):
    """The dual term: connectives and units swapped, arrows reversed."""
    if isinstance(t, Id):
        return Id(fm.dual(t.obj))
    if isinstance(t, Prim):
        return Prim(dual_generator(t.gen))
    if isinstance(t, Comp):
        return Comp(dual(t.before), dual(t.after))
    if isinstance(t, ConjPar):
        return DisjPar(dual(t.left), dual(t.right))
    return ConjPar(dual(t.left), dual(t.right))


def simplify(t, equiv: str = SYNTACTIC):
    """Drop identity factors and merge parallel identities."""
    if isinstance(t, Comp):
        after = simplify(t.after, equiv)
        before = simplify(t.before, equiv)
        if isinstance(after, Id):
            return before
        if isinstance(before, Id):
            return after
        return Comp(after, before)
    if isinstance(t, PARALLEL):
        left = simplify(t.left, equiv)
        right = simplify(t.right, equiv)
        if isinstance(left, Id) and isinstance(right, Id):
            mk = Conj if isinstance(t, ConjPar) else Disj
            return Id(mk(left.obj, right.obj))
        return type(t)(left, right)
    return t


# ------------------------------------------------------------ development

@dataclass(frozen=True)
class Development:
    """A term as a sequence of factors, each containing exactly one
    generator and no composition.  ``factors[0]`` is applied first."""
    source: object
    target: object
    factors: tuple = field(default=())

    def term(self):
        if not self.factors:
            return Id(self.source)
        return compose(*reversed(self.factors))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


def develop(t, equiv: str = SYNTACTIC) -> Development:
    """Developed form: parallel products are sequentialised left part
    first, so that every factor is a generator in an identity context."""
    typing = type_of(t, equiv)
    return Development(typing.source, typing.target, tuple(_develop(t, equiv)))


def _develop(t, equiv):
    if isinstance(t, Id):
        return []
    if isinstance(t, Prim):
        return [t]
    if isinstance(t, Comp):
        return _develop(t.before, equiv) + _develop(t.after, equiv)
    left_t = type_of(t.left, equiv)
    right_t = type_of(t.right, equiv)
    out = [par_of(t, f, Id(right_t.source)) for f in _develop(t.left, equiv)]
    out += [par_of(t, Id(left_t.target), f) for f in _develop(t.right, equiv)]
    return out


def par_of(like, left, right):
    return ConjPar(left, right) if isinstance(like, ConjPar) else DisjPar(left, right)


def is_beta_term(t) -> bool:
    """Exactly one generator and no composition."""
    if isinstance(t, Prim):
        return True
    if isinstance(t, PARALLEL):
        l_id, r_id = isinstance(t.left, Id), isinstance(t.right, Id)
        if l_id and not r_id:
            return is_beta_term(t.right)
        if r_id and not l_id:
            return is_beta_term(t.left)
    return False


def head_of(beta):
    """(path, generator) of a factor, with the path as 'L'/'R' steps."""
    path = []
    while isinstance(beta, PARALLEL):
        if isinstance(beta.left, Id):
            path.append("R")
            beta = beta.right
        else:
            path.append("L")
            beta = beta.left
    if not isinstance(beta, Prim):
        raise ValueError("not a factor with exactly one generator")
    return tuple(path), beta.gen


def in_context(obj, path, term):
    """Wrap ``term`` with identities so that it acts at ``path`` in ``obj``."""
    if not path:
        return term
    inner = in_context(fm.subformula(obj, (path[0],)), path[1:], term)
    mk = ConjPar if isinstance(obj, Conj) else DisjPar
    if path[0] == "L":
        return mk(inner, Id(obj.right))
    return mk(Id(obj.left), inner)


# ----------------------------------------------------------------- shapes

@dataclass(frozen=True)
class Hole:
    """The box of a shape, filled by the next argument."""

    def __str__(self):
        return "[]"


@dataclass(frozen=True)
class ShapeUnit:
    unit: object

    def __str__(self):
        return str(self.unit)


@dataclass(frozen=True)
class ShapeNode:
    conn: str
    left: "Shape"
    right: "Shape"

    def __str__(self):
        return f"({self.left} {self.conn} {self.right})"


Shape = Union[Hole, ShapeUnit, ShapeNode]
HOLE = Hole()


def parse_shape(text: str) -> Shape:
    """Shapes are written like formulae with [] for the box."""
    text = text.replace("[]", "box_")
    a = fm.parse_formula(text)

    def go(x):
        if isinstance(x, Letter):
            if x.name != "box_":
                raise ParseError(f"unexpected letter {x.name!r} in a shape", text, 0)
            return HOLE
        if fm.is_unit(x):
            return ShapeUnit(x)
        return ShapeNode(fm.connective(x), go(x.left), go(x.right))
    return go(a)


def holes(m) -> int:
    if isinstance(m, Hole):
        return 1
    if isinstance(m, ShapeNode):
        return holes(m.left) + holes(m.right)
    return 0


def shape_apply(m, args):
    """Fill the boxes of ``m`` from left to right."""
    args = list(args)
    if len(args) != holes(m):
        raise ArityMismatch(f"shape has {holes(m)} boxes, got {len(args)} arguments")
    it = iter(args)

    def go(x):
        if isinstance(x, Hole):
            return next(it)
        if isinstance(x, ShapeUnit):
            return x.unit
        return fm.make(x.conn, go(x.left), go(x.right))
    return go(m)


def _check_shape(m, conn, unit):
    if isinstance(m, ShapeNode):
        if m.conn != conn:
            raise ArityMismatch(f"shape uses {m.conn}, expected only {conn}")
        _check_shape(m.left, conn, unit)
        _check_shape(m.right, conn, unit)
    elif isinstance(m, ShapeUnit) and m.unit != unit:
        raise ArityMismatch(f"shape uses {m.unit}, expected only {unit}")


def _split_args(m, args):
    n = holes(m.left)
    return args[:n], args[n:]


def derive_psi(m, a, a2):
    """Arrow M(A) & M(A') -> M(A & A') for a shape built from | and F."""
    _check_shape(m, "|", BOT)
    return simplify(_psi(m, list(a), list(a2)))


def _psi(m, a, a2):
    if isinstance(m, ShapeUnit):
        return prim("hwBotMinus")
    if isinstance(m, Hole):
        return Id(Conj(a[0], a2[0]))
    la, ra = _split_args(m, a)
    la2, ra2 = _split_args(m, a2)
    head = prim("ck", shape_apply(m.left, la), shape_apply(m.left, la2),
                shape_apply(m.right, ra), shape_apply(m.right, ra2))
    return Comp(head, DisjPar(_psi(m.left, la, la2), _psi(m.right, ra, ra2)))


def derive_psibar(m, a, a2):
    """Arrow M(A) | M(A') -> M(A | A') for a shape built from & and T."""
    _check_shape(m, "&", TOP)
    return simplify(_psibar(m, list(a), list(a2)))


def _psibar(m, a, a2):
    if isinstance(m, ShapeUnit):
        return prim("vwTopPlus")
    if isinstance(m, Hole):
        return Id(Disj(a[0], a2[0]))
    la, ra = _split_args(m, a)
    la2, ra2 = _split_args(m, a2)
    head = prim("ck", shape_apply(m.left, la), shape_apply(m.right, ra),
                shape_apply(m.left, la2), shape_apply(m.right, ra2))
    return Comp(ConjPar(_psibar(m.left, la, la2), _psibar(m.right, ra, ra2)), head)


def derive_pi_top(m):
    """Arrow M(T,...,T) -> T for a shape built from | and F."""
    _check_shape(m, "|", BOT)
    return simplify(_pi_top(m))


def _pi_top(m):
    if isinstance(m, ShapeUnit):
        return prim("kappa")
    if isinstance(m, Hole):
        return Id(TOP)
    return Comp(prim("vwTopPlus"), DisjPar(_pi_top(m.left), _pi_top(m.right)))


def derive_pi_bot(m):
    """Arrow F -> M(F,...,F) for a shape built from & and T."""
    _check_shape(m, "&", TOP)
    return simplify(_pi_bot(m))


def _pi_bot(m):
    if isinstance(m, ShapeUnit):
        return prim("kappa")
    if isinstance(m, Hole):
        return Id(BOT)
    return Comp(ConjPar(_pi_bot(m.left), _pi_bot(m.right)), prim("hwBotMinus"))


# --------------------------------------------------------------- theories

PREORDER = "Preorder"
DIVERSIFIED_PREORDER = "DiversifiedPreorder"
RESTRICTED_BY_PURITY = "RestrictedByPurity"
FAITHFUL_REL = "FaithfulRel"


@dataclass(frozen=True)
class Theory:
    name: str
    kinds: frozenset
    coherence: str
    letterless: bool = False
    diversified_only: bool = False
    compare_matrices: bool = False
    description: str = ""


def _theories():
    n = DS_KINDS | W_KINDS
    k = frozenset({"kappa"})
    ck = frozenset({"ck"})
    rows = [
        Theory("A", B_KINDS, PREORDER, description="associativity"),
        Theory("N", n, PREORDER, description="unit cancellation"),
        Theory("K0", n | k, PREORDER, letterless=True,
               description="units with kappa, letterless objects"),
        Theory("NA", B_KINDS | n, PREORDER, description="associativity with units"),
        Theory("KA0", B_KINDS | n | k, PREORDER, letterless=True,
               description="associativity with units and kappa, letterless objects"),
        Theory("Ck", ck, PREORDER, description="intermutation alone"),
        Theory("ACk", B_KINDS | ck, PREORDER, description="associativity with intermutation"),
        Theory("ACkU", B_KINDS | ck | n | k, RESTRICTED_BY_PURITY,
               description="ACk with units and kappa"),
        Theory("S", B_KINDS | C_KINDS, DIVERSIFIED_PREORDER,
               description="symmetric associativity"),
        Theory("SCk", B_KINDS | C_KINDS | ck, FAITHFUL_REL,
               description="symmetric associativity with intermutation"),
        Theory("SCkU", B_KINDS | C_KINDS | ck | n | k, RESTRICTED_BY_PURITY,
               diversified_only=True, description="SCk with units and kappa"),
        Theory("L", B_KINDS | C_KINDS | ck | LATTICE_KINDS, FAITHFUL_REL,
               compare_matrices=True, description="lattice"),
    ]
    return {t.name: t for t in rows}


THEORIES = _theories()


class GeneratorNotInTheory(ValueError):
    pass


def get_theory(name) -> Theory:
    if isinstance(name, Theory):
        return name
    if name not in THEORIES:
        raise KeyError(f"unknown theory {name!r}; known: {', '.join(THEORIES)}")
    return THEORIES[name]


def validate_in_theory(t, theory) -> bool:
    """True when every generator of ``t`` belongs to the theory.  The
    letterless theories also require every object to be letterless."""
    th = get_theory(theory)
    if not generator_kinds(t) <= th.kinds:
        return False
    if th.letterless:
        return all(fm.is_letterless(a) for a in objects_in(t))
    return True


def require_in_theory(t, theory):
    th = get_theory(theory)
    extra = generator_kinds(t) - th.kinds
    if extra:
        raise GeneratorNotInTheory(
            f"generators {', '.join(sorted(extra))} are not in theory {th.name}")
    if th.letterless and not all(fm.is_letterless(a) for a in objects_in(t)):
        raise GeneratorNotInTheory(f"theory {th.name} only has letterless objects")


def restrict_arrow(f, p):
    """The restriction of a strict symmetric intermutation term to the
    letters outside ``p``; see ``splitting.restrict_arrow``."""
    from .splitting import restrict_arrow as restrict
    return restrict(f, p)
