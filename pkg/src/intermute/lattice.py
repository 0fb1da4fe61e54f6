"""Reduction of lattice terms whose line diagram is a bijection to terms
built from associativity, symmetry and intermutation only.

The term is first rewritten so that every diagonal (hw, vw) has a letter
index.  It is then developed into a list of steps (path, generator), and
each projection (hk1, hk2) is moved towards the source one step at a time:

* past a step acting elsewhere, by bifunctoriality;
* into a step whose output it acts inside, by naturality;
* against associativity, symmetry, intermutation and diagonals by the
  elimination equations (a diagonal followed by a projection cancels).

Injections (vk1, vk2) are handled by running the same pass on the dual
term.  With a bijective diagram every projection meets a diagonal, and no
diagonal survives once projections and injections are gone.
"""

from __future__ import annotations

from . import formulae as fm
from . import semantics as se
from . import terms as tm
from .formulae import Conj, Disj
from .terms import SIGNATURES, Generator, Prim, compose


class ReductionError(ValueError):
    pass


PROJECTIONS = ("hk1", "hk2")
KEEP = {"hk1": "L", "hk2": "R"}

# (previous kind, path of the projection inside its target, projection)
#   -> replacement steps relative to the previous step's path
STRUCTURAL = {
    ("hbPlus", (), "hk1"): [(("R",), "hk1")],
    ("hbPlus", (), "hk2"): [((), "hk2"), ((), "hk2")],
    ("hbPlus", ("L",), "hk1"): [(("R",), "hk2")],
    ("hbPlus", ("L",), "hk2"): [((), "hk2")],
    ("hbMinus", (), "hk1"): [((), "hk1"), ((), "hk1")],
    ("hbMinus", (), "hk2"): [(("L",), "hk2")],
    ("hbMinus", ("R",), "hk1"): [((), "hk1")],
    ("hbMinus", ("R",), "hk2"): [(("L",), "hk1")],
    ("hc", (), "hk1"): [((), "hk2")],
    ("hc", (), "hk2"): [((), "hk1")],
    ("ck", (), "hk1"): [(("L",), "hk1"), (("R",), "hk1")],
    ("ck", (), "hk2"): [(("L",), "hk2"), (("R",), "hk2")],
    ("hw", (), "hk1"): [],
    ("hw", (), "hk2"): [],
}


# --------------------------------------------------------------- diagonals

def expand_diagonals(t):
    """Rewrite diagonals so that their indices are letters."""
    if isinstance(t, Prim) and t.gen.kind in ("hw", "vw"):
        return _expand(t.gen.kind, t.gen.args[0])
    if isinstance(t, tm.Comp):
        return tm.Comp(expand_diagonals(t.after), expand_diagonals(t.before))
    if isinstance(t, tm.PARALLEL):
        return type(t)(expand_diagonals(t.left), expand_diagonals(t.right))
    return t


def _expand(kind, a):
    from .equations import middle_four
    if isinstance(a, fm.Letter):
        return tm.prim(kind, a)
    l, r = a.left, a.right
    if kind == "hw":
        inner = tm.par(fm.connective(a), _expand("hw", l), _expand("hw", r))
        head = middle_four("&", l, l, r, r) if isinstance(a, Conj) else tm.prim("ck", l, l, r, r)
        return compose(head, inner)
    inner = tm.par(fm.connective(a), _expand("vw", l), _expand("vw", r))
    head = middle_four("|", l, r, l, r) if isinstance(a, Disj) else tm.prim("ck", l, r, l, r)
    return compose(inner, head)


# ------------------------------------------------------------------ steps

def _match(template, f, env):
    if isinstance(template, fm.Letter) and template.name.startswith("#"):
        i = int(template.name[1:])
        if i in env and env[i] != f:
            raise ReductionError("inconsistent index")
        env[i] = f
        return
    if isinstance(template, fm.Binary):
        if type(f) is not type(template):
            raise ReductionError(f"{fm.to_str(f)} does not fit the generator")
        _match(template.left, f.left, env)
        _match(template.right, f.right, env)
        return
    if template != f:
        raise ReductionError(f"{fm.to_str(f)} does not fit the generator")


def reindex(kind, sub, free=None) -> Generator:
    """The generator of a kind whose source is ``sub``."""
    _, arity, src, _ = SIGNATURES[kind]
    env: dict = {}
    _match(src, sub, env)
    if kind == "vk1":
        env[1] = free
    elif kind == "vk2":
        env[0] = free
    return Generator(kind, tuple(env[i] for i in range(arity)))


def _free(gen):
    if gen.kind == "vk1":
        return gen.args[1]
    if gen.kind == "vk2":
        return gen.args[0]
    return None


def to_steps(t):
    dev = tm.develop(t)
    steps = []
    for factor in dev.factors:
        path, gen = tm.head_of(factor)
        steps.append((path, gen.kind, _free(gen)))
    return dev.source, steps


def replay(source, steps):
    """Concrete generators for the steps, and the objects between them."""
    obj = source
    gens, objs = [], [source]
    for path, kind, free in steps:
        gen = reindex(kind, fm.subformula(obj, path), free)
        obj = fm.replace_at(obj, path, gen.target)
        gens.append(gen)
        objs.append(obj)
    return gens, objs


def from_steps(source, steps):
    gens, objs = replay(source, steps)
    factors = [tm.in_context(objs[i], steps[i][0], Prim(g)) for i, g in enumerate(gens)]
    if not factors:
        return tm.Id(source)
    return compose(*reversed(factors))


def _marker_positions(template, marker):
    out = []

    def go(x, path):
        if x == marker:
            out.append(path)
        elif isinstance(x, fm.Binary):
            go(x.left, path + ("L",))
            go(x.right, path + ("R",))
    go(template, ())
    return out


def _walk(template, rel):
    """Follow ``rel`` into a template: (marker, rest) when it enters an
    index, (None, rel) when it stops at a node of the template."""
    x = template
    for j, step in enumerate(rel):
        if isinstance(x, fm.Letter) and x.name.startswith("#"):
            return x, rel[j:]
        x = x.left if step == "L" else x.right
    if isinstance(x, fm.Letter) and x.name.startswith("#"):
        return x, ()
    return None, rel


def _rewrite(prev, proj, prev_gen, proj_gen):
    """Replacement for the pair [prev, proj] with the projection moved
    towards the source."""
    p_path, p_kind, p_free = prev
    k_path, k_kind, _ = proj
    n = len(p_path)
    if k_path[:n] == p_path:
        rel = k_path[n:]
        _, _, src_t, tgt_t = SIGNATURES[p_kind]
        marker, rest = _walk(tgt_t, rel)
        if marker is None:
            key = (p_kind, rel, k_kind)
            if key not in STRUCTURAL:
                raise ReductionError(f"no rule for {k_kind} after {p_kind} at {rel}")
            return [(p_path + r, kind, None) for r, kind in STRUCTURAL[key]]
        spots = _marker_positions(src_t, marker)
        if len(spots) == 1:
            # naturality: act on the index before the previous step
            return [(p_path + spots[0] + rest, k_kind, None), prev]
        if not spots:
            # the projection acts inside the free index of an injection
            new_free = fm.replace_at(p_free, rest, proj_gen.target)
            return [(p_path, p_kind, new_free)]
        raise ReductionError(f"{k_kind} acts inside a copy made by {p_kind}")
    m = len(k_path)
    if p_path[:m] == k_path:
        side, rest = p_path[m], p_path[m + 1:]
        if side == KEEP[k_kind]:
            return [proj, (k_path + rest, p_kind, p_free)]
        return [proj]
    return [proj, prev]


def eliminate_projections(source, steps, fuel: int = 100000):
    steps = list(steps)
    while True:
        idx = next((i for i, s in enumerate(steps) if s[1] in PROJECTIONS), None)
        if idx is None:
            return steps
        if idx == 0:
            raise ReductionError("a projection reaches the source; the diagram is not bijective")
        fuel -= 1
        if fuel < 0:
            raise ReductionError("out of fuel")
        gens, _ = replay(source, steps)
        new = _rewrite(steps[idx - 1], steps[idx], gens[idx - 1], gens[idx])
        steps = steps[:idx - 1] + new + steps[idx + 1:]
        replay(source, steps)


def _dual_steps(source, steps):
    gens, objs = replay(source, steps)
    out = []
    for (path, _, _), g in zip(reversed(steps), reversed(gens)):
        d = tm.dual_generator(g)
        out.append((path, d.kind, _free(d)))
    return fm.dual(objs[-1]), out


def lattice_reduce(t):
    """An equal term without diagonals, projections or injections.
    Requires a term of the lattice theory whose relation is a bijection
    and whose matrix is a permutation matrix."""
    if not tm.validate_in_theory(t, "L"):
        raise tm.GeneratorNotInTheory("lattice_reduce expects a term of theory L")
    rel, mat = se.eval_rel(t), se.eval_mat(t)
    if not rel.is_bijection() or not mat.is_permutation():
        raise ReductionError("the term does not denote a bijection")
    source, steps = to_steps(expand_diagonals(t))
    steps = eliminate_projections(source, steps)
    dsource, dsteps = _dual_steps(source, steps)
    dsteps = eliminate_projections(dsource, dsteps)
    source, steps = _dual_steps(dsource, dsteps)
    left = {kind for _, kind, _ in steps} & tm.LATTICE_KINDS
    if left:
        raise ReductionError(f"generators {sorted(left)} survived the reduction")
    return from_steps(source, steps)
