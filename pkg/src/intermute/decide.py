"""Decision procedures: equality of arrow terms and existence of arrows,
per theory, with honest answers outside the decided fragments."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from . import formulae as fm
from . import legitimacy as lg
from . import semantics as se
from . import strict as st
from . import terms as tm

EQUAL = "Equal"
NOT_EQUAL = "NotEqual"
OUTSIDE = "OutsideFragment"


@dataclass(frozen=True)
class Verdict:
    tag: str
    reason: str = ""
    evidence: dict = field(default_factory=dict)

    def __bool__(self):
        return self.tag == EQUAL

    def to_json(self) -> dict:
        return {"verdict": self.tag, "reason": self.reason, "evidence": self.evidence}


def decide_equal(f, g, theory) -> Verdict:
    """Decide f = g in a theory by its coherence result."""
    th = tm.get_theory(theory)
    tm.require_in_theory(f, th)
    tm.require_in_theory(g, th)
    ft, gt = tm.type_of(f), tm.type_of(g)
    if ft != gt:
        return Verdict(NOT_EQUAL, "the terms have different types", {
            "left": [fm.to_str(ft.source), fm.to_str(ft.target)],
            "right": [fm.to_str(gt.source), fm.to_str(gt.target)]})
    a, b = ft.source, ft.target

    if th.coherence == tm.PREORDER:
        return Verdict(EQUAL, f"{th.name} is a preorder")

    if th.coherence == tm.DIVERSIFIED_PREORDER and fm.is_diversified(a) and fm.is_diversified(b):
        return Verdict(EQUAL, f"{th.name} is a preorder on diversified objects")

    if th.coherence == tm.RESTRICTED_BY_PURITY:
        letterless = fm.is_letterless(a) and fm.is_letterless(b)
        pure = fm.is_pure(a) and fm.is_pure(b)
        if th.diversified_only and not letterless:
            pure = pure and fm.is_diversified(a) and fm.is_diversified(b)
        if letterless or pure:
            why = "both objects are letterless" if letterless else "both objects are pure"
            return Verdict(EQUAL, f"{why}; {th.name} is a preorder there")
        return Verdict(OUTSIDE, "coherence is only known for pure or letterless objects", {
            "source_pure": fm.is_pure(a), "target_pure": fm.is_pure(b)})

    rf, rg = se.eval_rel(f), se.eval_rel(g)
    if rf != rg:
        return Verdict(NOT_EQUAL, "the relations differ",
                       {"left": rf.to_json(), "right": rg.to_json()})
    if th.compare_matrices:
        mf, mg = se.eval_mat(f), se.eval_mat(g)
        if mf != mg:
            return Verdict(NOT_EQUAL, "the matrices differ",
                           {"left": mf.to_json(), "right": mg.to_json()})
        return Verdict(EQUAL, "the relations and matrices agree")
    return Verdict(EQUAL, "the relations agree")


@dataclass(frozen=True)
class Existence:
    """``value`` is None when the question lies outside the decided
    fragment."""
    value: object
    reason: str
    depth_cap: int | None = None

    def to_json(self) -> dict:
        out = {"exists": self.value, "reason": self.reason}
        if self.depth_cap is not None:
            out["depth_cap"] = self.depth_cap
        return out


def _renamings_of(y_formula, x_counts, x_names, limit):
    """Every way of renaming the occurrences of Y to the diversified
    names of X, keeping letters."""
    occ = fm.letter_list(y_formula)
    pools = {p: x_names[p] for p in x_counts}
    choices = {p: list(itertools.permutations(pools[p])) for p in pools}
    keys = sorted(choices)
    count = 0
    for combo in itertools.product(*(choices[k] for k in keys)):
        count += 1
        if count > limit:
            return
        assign = {k: list(c) for k, c in zip(keys, combo)}
        names = []
        for p in occ:
            names.append(assign[p].pop(0))
        it = iter(names)
        yield _rename_occurrences(y_formula, it)


def _rename_occurrences(a, it):
    if isinstance(a, fm.Letter):
        return fm.Letter(next(it))
    if isinstance(a, fm.Binary):
        left = _rename_occurrences(a.left, it)
        return type(a)(left, _rename_occurrences(a.right, it))
    return a


def decide_exists(x, y, theory, renaming_limit: int = 5040) -> Existence:
    th = tm.get_theory(theory)
    if th.name == "ACk":
        return _exists_ack(x, y, renaming_limit)
    if th.name == "Ck":
        return _exists_ck(x, y)
    if th.name == "A":
        same = fm.is_constant_free(x) and st.flatten(x) == st.flatten(y)
        return Existence(same, "associativity only rebrackets")
    return _exists_iso(x, y, th)


def _exists_ack(x, y, limit):
    if not (fm.is_constant_free(x) and fm.is_constant_free(y)):
        return Existence(None, "ACk is decided for constant-free objects")
    from collections import Counter
    cx, cy = Counter(fm.letter_list(x)), Counter(fm.letter_list(y))
    if cx != cy:
        return Existence(False, "the letter occurrences differ")
    if fm.is_diversified(x):
        ok = lg.is_legitimate(st.strictify(x), st.strictify(y))
        return Existence(ok, "legitimate" if ok else "not legitimate")
    dx, _ = fm.diversify(x)
    names: dict = {}
    for orig, new in zip(fm.letter_list(x), fm.letter_list(dx)):
        names.setdefault(orig, []).append(new)
    sx = st.strictify(dx)
    tried = 0
    for y2 in _renamings_of(y, cx, names, limit):
        tried += 1
        if lg.is_legitimate(sx, st.strictify(y2)):
            return Existence(True, f"legitimate after renaming Y to {fm.to_str(y2)}")
    total = 1
    for p, n in cx.items():
        for k in range(2, n + 1):
            total *= k
    if total > limit:
        return Existence(None, f"gave up after {limit} of {total} renamings")
    return Existence(False, f"no renaming of {tried} is legitimate")


def _ck_redexes(a, path=()):
    if isinstance(a, fm.Disj) and isinstance(a.left, fm.Conj) and isinstance(a.right, fm.Conj):
        yield path
    if isinstance(a, fm.Binary):
        yield from _ck_redexes(a.left, path + ("L",))
        yield from _ck_redexes(a.right, path + ("R",))


def _ck_apply(a):
    (p, q), (r, s) = (a.left.left, a.left.right), (a.right.left, a.right.right)
    return fm.Conj(fm.Disj(p, r), fm.Disj(q, s))


def _exists_ck(x, y):
    # each step removes one &, so the search space is finite
    seen = {x}
    queue = deque([x])
    while queue:
        cur = queue.popleft()
        if cur == y:
            return Existence(True, "found by exhaustive search")
        for path in _ck_redexes(cur):
            nxt = fm.replace_at(cur, path, _ck_apply(fm.subformula(cur, path)))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return Existence(False, "exhaustive search found nothing")


def _exists_iso(x, y, th):
    from .generate import applicable
    import random
    inverse = {k for k in th.kinds if k in tm.INVERSE or k in tm.C_KINDS}
    cap = 2 * max(fm.size(x), fm.size(y))
    bound = max(fm.size(x), fm.size(y)) + 2
    seen = {x}
    frontier = [x]
    rng = random.Random(0)
    for depth in range(cap + 1):
        if y in seen:
            return Existence(True, f"isomorphic within {depth} step(s)", cap)
        nxt = []
        for cur in frontier:
            for path, g in applicable(cur, sorted(inverse), rng):
                new = fm.replace_at(cur, path, g.target)
                if new not in seen and fm.size(new) <= bound:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
        if not frontier:
            break
    if y in seen:
        return Existence(True, "isomorphic by invertible generators", cap)
    return Existence(None, f"no isomorphism found within depth {cap}; "
                           f"{th.name} is not decided beyond isomorphism", cap)


# ---------------------------------------------------------------- purity

@dataclass(frozen=True)
class PurityReport:
    steps: tuple            # (source, target, notes) per factor
    violations: tuple       # (factor index, message)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "steps": [{"source": fm.to_str(a), "target": fm.to_str(b), "notes": list(v)}
                          for a, b, v in self.steps]}


def purity_scan(f) -> PurityReport:
    """Check, factor by factor, that F-purity of the source carries to the
    target and T-purity of the target carries back to the source.
    Letterless factors are noted and make no claim."""
    dev = tm.develop(f)
    steps = []
    bad = []
    for i, factor in enumerate(dev.factors):
        typing = tm.type_of(factor)
        a, b = typing.source, typing.target
        if fm.is_letterless(a) and fm.is_letterless(b):
            steps.append((a, b, ("letterless",)))
            continue
        v = []
        if fm.is_zeta_pure(a, fm.BOT) and not fm.is_zeta_pure(b, fm.BOT):
            v.append("F-purity lost")
        if fm.is_zeta_pure(b, fm.TOP) and not fm.is_zeta_pure(a, fm.TOP):
            v.append("T-purity not reflected")
        steps.append((a, b, tuple(v)))
        bad.extend((i, m) for m in v)
    return PurityReport(tuple(steps), tuple(bad))
