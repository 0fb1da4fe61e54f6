"""Random formulae and random well-typed terms for property tests."""

from __future__ import annotations

import random

from . import formulae as fm
from . import strict as st
from . import terms as tm
from .formulae import Conj, Disj, Letter
from .terms import Prim


def random_formula(rng: random.Random, n_letters: int, units: float = 0.0,
                   letters=None, diversified: bool = True):
    """A random formula with ``n_letters`` letter occurrences; each leaf is
    followed by a unit with probability ``units``."""
    names = list(letters or [f"p{i}" for i in range(n_letters)])
    if diversified:
        rng.shuffle(names)
        leaves = [Letter(n) for n in names[:n_letters]]
    else:
        leaves = [Letter(rng.choice(names)) for _ in range(n_letters)]
    items = []
    for leaf in leaves:
        items.append(leaf)
        if rng.random() < units:
            items.append(rng.choice((fm.TOP, fm.BOT)))
    return _random_tree(rng, items)


def _random_tree(rng, items):
    if len(items) == 1:
        return items[0]
    cut = rng.randint(1, len(items) - 1)
    left = _random_tree(rng, items[:cut])
    right = _random_tree(rng, items[cut:])
    return Conj(left, right) if rng.random() < 0.5 else Disj(left, right)


def _positions(a, path=()):
    yield path, a
    if isinstance(a, fm.Binary):
        yield from _positions(a.left, path + ("L",))
        yield from _positions(a.right, path + ("R",))


def applicable(a, kinds, rng: random.Random, free_letters=("z",)):
    """Generators of the given kinds whose source occurs in ``a``, with
    their paths."""
    from .lattice import ReductionError, reindex
    out = []
    for path, sub in _positions(a):
        for kind in kinds:
            free = None
            if kind in ("vk1", "vk2"):
                free = Letter(rng.choice(free_letters))
            try:
                out.append((path, reindex(kind, sub, free)))
            except (ReductionError, ValueError):
                pass
    return out


def random_walk(rng: random.Random, source, kinds, steps: int, max_size: int = 12):
    """A composite of ``steps`` random factors starting at ``source``."""
    obj = source
    factors = []
    kinds = sorted(kinds)
    for _ in range(steps):
        options = [(p, g) for p, g in applicable(obj, kinds, rng)
                   if fm.size(fm.replace_at(obj, p, g.target)) <= max_size]
        if not options:
            break
        path, gen = rng.choice(options)
        factors.append(tm.in_context(obj, path, Prim(gen)))
        obj = fm.replace_at(obj, path, gen.target)
    if not factors:
        return tm.Id(source)
    return tm.compose(*reversed(factors))


def random_term(rng: random.Random, theory, n_letters: int = 4, steps: int = 6,
                units: float = 0.0, diversified: bool = True):
    th = tm.get_theory(theory)
    source = random_formula(rng, n_letters, units=units, diversified=diversified)
    return random_walk(rng, source, th.kinds, steps)


# ------------------------------------------------------- strict SCk terms

def random_formset(rng: random.Random, n_letters: int, top: str | None = None):
    names = [f"p{i}" for i in range(n_letters)]
    rng.shuffle(names)
    while True:
        x = st.flatten(_random_tree(rng, [Letter(n) for n in names]))
        if top is None or (isinstance(x, st.Node) and x.conn == top):
            return st.canonical_set(x)


def formset_ck_steps(x):
    """Every c^k redex of a form set: two &-children of a |-node, each
    split into two non-empty groups of its children."""
    out = []
    for path, v in _set_nodes(x):
        if v.conn != "|":
            continue
        kids = v.children
        ands = [i for i, k in enumerate(kids) if isinstance(k, st.Node) and k.conn == "&"]
        for i in ands:
            for j in ands:
                if i == j:
                    continue
                for a, b in _two_groups(kids[i]):
                    for c, d in _two_groups(kids[j]):
                        out.append((path, i, j, (a, b, c, d)))
    return out


def _set_nodes(x, path=()):
    if isinstance(x, st.Node):
        yield path, x
        for i, c in enumerate(x.children):
            yield from _set_nodes(c, path + (i,))


def _two_groups(n):
    kids = n.children
    k = len(kids)
    for mask in range(1, (1 << k) - 1):
        a = [kids[i] for i in range(k) if mask >> i & 1]
        b = [kids[i] for i in range(k) if not mask >> i & 1]
        yield st.node("&", a), st.node("&", b)


def place(x, path, i, j, parts):
    """Apply c^k to children i and j of the |-node at ``path`` of a form
    set.  Returns the factor and the new (canonical) form set."""
    a, b, c, d = parts
    v = st.subsequence(x, path)
    head = tm.prim("ck", *(st.to_formula(z) for z in parts))
    rest = [k for n, k in enumerate(v.children) if n not in (i, j)]
    term = head
    for k in rest:
        term = tm.DisjPar(term, tm.Id(st.to_formula(k)))
    merged = st.node("&", (st.node("|", (a, c)), st.node("|", (b, d))))
    new_v = st.node("|", [merged] + rest)
    for depth in range(len(path) - 1, -1, -1):
        parent = st.subsequence(x, path[:depth])
        others = [k for n, k in enumerate(parent.children) if n != path[depth]]
        for k in others:
            term = tm.par(parent.conn, term, tm.Id(st.to_formula(k)))
    new_x = _replace_set(x, path, new_v)
    return term, st.canonical_set(new_x)


def _replace_set(x, path, new):
    if not path:
        return new
    kids = list(x.children)
    kids[path[0]] = _replace_set(kids[path[0]], path[1:], new)
    return st.node(x.conn, kids)


def random_disjunctive_source(rng: random.Random, n_letters: int):
    """A form set X1 | ... | Xk (k >= 2) whose disjuncts are mostly
    conjunctions, so that intermutation has room to act."""
    names = [f"p{i}" for i in range(n_letters)]
    rng.shuffle(names)
    k = rng.randint(2, max(2, min(3, n_letters // 2)))
    cuts = sorted(rng.sample(range(1, n_letters), k - 1))
    blocks = [names[a:b] for a, b in zip([0] + cuts, cuts + [n_letters])]
    disjuncts = []
    for block in blocks:
        if len(block) == 1:
            disjuncts.append(st.Leaf(block[0]))
            continue
        m = rng.randint(2, min(3, len(block)))
        inner = sorted(rng.sample(range(1, len(block)), m - 1))
        groups = [block[a:b] for a, b in zip([0] + inner, inner + [len(block)])]
        parts = [st.flatten(_random_tree(rng, [Letter(n) for n in g])) for g in groups]
        disjuncts.append(st.node("&", parts))
    return st.canonical_set(st.node("|", disjuncts))


def random_strict_sck(rng: random.Random, n_letters: int = 6, steps: int = 4):
    """A random term typed up to associativity and commutativity, built
    from c^k in identity contexts, with a disjunctive source."""
    x = random_disjunctive_source(rng, n_letters)
    source = x
    factors = []
    for _ in range(steps):
        options = formset_ck_steps(x)
        if not options:
            break
        path, i, j, parts = rng.choice(options)
        factor, x = place(x, path, i, j, parts)
        factors.append(factor)
    if not factors:
        return source, tm.Id(st.to_formula(source))
    return source, tm.compose(*reversed(factors))


# ---------------------------------------------------------- lattice terms

_LATTICE_SCHEMA = {
    "hbPlus": ("lattice-assoc/and", lambda a: a),
    "hbMinus": ("lattice-assoc-inverse/and", lambda a: a),
    "vbMinus": ("lattice-assoc/or", lambda a: a),
    "vbPlus": ("lattice-assoc-inverse/or", lambda a: a),
    "hc": ("lattice-symmetry/and", lambda a: a),
    "vc": ("lattice-symmetry/or", lambda a: a[::-1]),
}


def to_lattice(t, rng: random.Random, rate: float = 0.7):
    """Replace generators by their definitions through diagonals and
    projections (or injections), each with probability ``rate``."""
    from .equations import BY_NAME
    if isinstance(t, Prim):
        g = t.gen
        if rng.random() >= rate:
            return t
        if g.kind == "ck":
            name = rng.choice(("lattice-intermutation/and", "lattice-intermutation/or"))
            args = g.args
        elif g.kind in _LATTICE_SCHEMA:
            name, perm = _LATTICE_SCHEMA[g.kind]
            args = perm(g.args)
        else:
            return t
        lhs, rhs = BY_NAME[name].build(*args)
        if lhs != t:
            raise AssertionError(f"schema {name} does not define {g}")
        return rhs
    if isinstance(t, tm.Comp):
        return tm.Comp(to_lattice(t.after, rng, rate), to_lattice(t.before, rng, rate))
    if isinstance(t, tm.PARALLEL):
        return type(t)(to_lattice(t.left, rng, rate), to_lattice(t.right, rng, rate))
    return t
