"""Catalogue of equation schemas between arrow terms.

Each schema has metavariables standing for formulae and builds both sides
of the equation from an instantiation.  Every schema here holds in the
relational and matrix models, which ``check_equation`` verifies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import formulae as fm
from . import terms as tm
from .formulae import BOT, TOP, Conj, Disj
from .terms import ConjPar, DisjPar, Id, compose, prim


@dataclass(frozen=True)
class Schema:
    name: str
    params: tuple
    build: Callable
    group: str = ""

    def instantiate(self, env: dict):
        missing = [p for p in self.params if p not in env]
        if missing:
            raise KeyError(f"{self.name} needs {', '.join(missing)}")
        return self.build(*(env[p] for p in self.params))

    def kinds(self) -> frozenset:
        env = {p: fm.Letter(f"x{i}") for i, p in enumerate(self.params)}
        lhs, rhs = self.instantiate(env)
        return tm.generator_kinds(lhs) | tm.generator_kinds(rhs)


def _h(f, g):
    return ConjPar(f, g)


def _v(f, g):
    return DisjPar(f, g)


# generator shorthands; the first letter picks the connective
def bp(c, *a):
    return prim("hbPlus" if c == "&" else "vbPlus", *a)


def bm(c, *a):
    return prim("hbMinus" if c == "&" else "vbMinus", *a)


def cc(c, *a):
    return prim("hc" if c == "&" else "vc", *a)


def dp(c, a):
    return prim("hdPlus" if c == "&" else "vdPlus", a)


def dm(c, a):
    return prim("hdMinus" if c == "&" else "vdMinus", a)


def sp(c, a):
    return prim("hsPlus" if c == "&" else "vsPlus", a)


def sm(c, a):
    return prim("hsMinus" if c == "&" else "vsMinus", a)


def ck(*a):
    return prim("ck", *a)


def par(c, f, g):
    return tm.par(c, f, g)


def mk(c, a, b):
    return fm.make(c, a, b)


HWB = prim("hwBotMinus")
VWT = prim("vwTopPlus")
KAPPA = prim("kappa")


def middle_four(c, a, b, x, d):
    """(A o B) o (X o D) -> (A o X) o (B o D) from associativity and
    commutativity."""
    inner = compose(bm(c, x, b, d), par(c, cc(c, b, x), Id(d)), bp(c, b, x, d))
    return compose(bp(c, a, x, mk(c, b, d)), par(c, Id(a), inner), bm(c, a, b, mk(c, x, d)))


def _both(name, params, build, group):
    """A schema for & and its dual for |."""
    def dual_build(*args):
        lhs, rhs = build(*(fm.dual(a) for a in args))
        return tm.dual(lhs), tm.dual(rhs)
    return [Schema(name + "/and", params, build, group),
            Schema(name + "/or", params, dual_build, group)]


def _catalogue():
    out = []
    add = out.append
    ext = out.extend

    # monoidal structure
    ext(_both("pentagon", ("A", "B", "C", "D"), lambda a, b, c, d: (
        compose(bp("&", Conj(a, b), c, d), bp("&", a, b, Conj(c, d))),
        compose(_h(bp("&", a, b, c), Id(d)), bp("&", a, Conj(b, c), d), _h(Id(a), bp("&", b, c, d))),
    ), "monoidal"))
    ext(_both("assoc-inverse", ("A", "B", "C"), lambda a, b, c: (
        compose(bm("&", a, b, c), bp("&", a, b, c)), Id(Conj(a, Conj(b, c)))), "monoidal"))
    ext(_both("unit-assoc-middle", ("A", "C"), lambda a, c: (
        bp("&", a, TOP, c), _h(dm("&", a), sp("&", c))), "monoidal"))
    ext(_both("unit-assoc-right", ("A", "B"), lambda a, b: (
        bp("&", a, b, TOP), compose(dm("&", Conj(a, b)), _h(Id(a), dp("&", b)))), "monoidal"))
    ext(_both("unit-assoc-left", ("B", "C"), lambda b, c: (
        bp("&", TOP, b, c), compose(_h(sm("&", b), Id(c)), sp("&", Conj(b, c)))), "monoidal"))
    ext(_both("biunital", (), lambda: (dp("&", TOP), sp("&", TOP)), "monoidal"))
    ext(_both("unit-inverse", ("A",), lambda a: (
        compose(dp("&", a), dm("&", a)), Id(a)), "monoidal"))

    # symmetry
    ext(_both("hexagon", ("A", "B", "C"), lambda a, b, c: (
        cc("&", a, Conj(b, c)),
        compose(bp("&", b, c, a), _h(Id(b), cc("&", a, c)), bm("&", b, a, c),
                _h(cc("&", a, b), Id(c)), bp("&", a, b, c))), "symmetric"))
    ext(_both("symmetry-involution", ("A", "B"), lambda a, b: (
        compose(cc("&", b, a), cc("&", a, b)), Id(Conj(a, b))), "symmetric"))
    ext(_both("symmetry-unit-left", ("A",), lambda a: (
        cc("&", TOP, a), compose(dm("&", a), sp("&", a))), "symmetric"))
    ext(_both("symmetry-unit-right", ("A",), lambda a: (
        cc("&", a, TOP), compose(sm("&", a), dp("&", a))), "symmetric"))
    ext(_both("symmetry-middle-four", ("A", "B", "C", "D"), lambda a, b, c, d: (
        compose(middle_four("&", a, c, b, d), middle_four("&", a, b, c, d)),
        Id(Conj(Conj(a, b), Conj(c, d)))), "symmetric"))

    # intermutation
    def nat(a, a2, b, b2, c, c2, d, d2):
        lhs = compose(_h(_v(cc("&", a, a2), cc("&", c, c2)), _v(cc("&", b, b2), cc("&", d, d2))),
                      ck(Conj(a, a2), Conj(b, b2), Conj(c, c2), Conj(d, d2)))
        rhs = compose(ck(Conj(a2, a), Conj(b2, b), Conj(c2, c), Conj(d2, d)),
                      _v(_h(cc("&", a, a2), cc("&", b, b2)), _h(cc("&", c, c2), cc("&", d, d2))))
        return lhs, rhs
    add(Schema("intermutation-naturality", ("A", "A'", "B", "B'", "C", "C'", "D", "D'"),
               nat, "intermutation"))

    def ck_assoc_or(a1, a1p, a2, a2p, a3, a3p):
        lhs = compose(ck(Disj(a1, a2), Disj(a1p, a2p), a3, a3p),
                      _v(ck(a1, a1p, a2, a2p), Id(Conj(a3, a3p))),
                      bp("|", Conj(a1, a1p), Conj(a2, a2p), Conj(a3, a3p)))
        rhs = compose(_h(bp("|", a1, a2, a3), bp("|", a1p, a2p, a3p)),
                      ck(a1, a1p, Disj(a2, a3), Disj(a2p, a3p)),
                      _v(Id(Conj(a1, a1p)), ck(a2, a2p, a3, a3p)))
        return lhs, rhs
    add(Schema("intermutation-assoc/or", ("A1", "A1'", "A2", "A2'", "A3", "A3'"),
               ck_assoc_or, "intermutation"))

    def ck_assoc_and(a1, a1p, a2, a2p, a3, a3p):
        lhs = compose(bm("&", Disj(a1, a1p), Disj(a2, a2p), Disj(a3, a3p)),
                      _h(ck(a1, a2, a1p, a2p), Id(Disj(a3, a3p))),
                      ck(Conj(a1, a2), a3, Conj(a1p, a2p), a3p))
        rhs = compose(_h(Id(Disj(a1, a1p)), ck(a2, a3, a2p, a3p)),
                      ck(a1, Conj(a2, a3), a1p, Conj(a2p, a3p)),
                      _v(bm("&", a1, a2, a3), bm("&", a1p, a2p, a3p)))
        return lhs, rhs
    add(Schema("intermutation-assoc/and", ("A1", "A1'", "A2", "A2'", "A3", "A3'"),
               ck_assoc_and, "intermutation"))

    add(Schema("intermutation-unit/or-right", ("A", "A'"), lambda a, a2: (
        dp("|", Conj(a, a2)),
        compose(_h(dp("|", a), dp("|", a2)), ck(a, a2, BOT, BOT), _v(Id(Conj(a, a2)), HWB))),
        "intermutation-units"))
    add(Schema("intermutation-unit/or-left", ("A", "A'"), lambda a, a2: (
        sp("|", Conj(a, a2)),
        compose(_h(sp("|", a), sp("|", a2)), ck(BOT, BOT, a, a2), _v(HWB, Id(Conj(a, a2))))),
        "intermutation-units"))
    add(Schema("intermutation-unit/and-right", ("A", "A'"), lambda a, a2: (
        dm("&", Disj(a, a2)),
        compose(_h(Id(Disj(a, a2)), VWT), ck(a, TOP, a2, TOP), _v(dm("&", a), dm("&", a2)))),
        "intermutation-units"))
    add(Schema("intermutation-unit/and-left", ("A", "A'"), lambda a, a2: (
        sm("&", Disj(a, a2)),
        compose(_h(VWT, Id(Disj(a, a2))), ck(TOP, a, TOP, a2), _v(sm("&", a), sm("&", a2)))),
        "intermutation-units"))

    add(Schema("unit-merge-assoc/or", (), lambda: (
        compose(VWT, _v(VWT, Id(TOP)), bp("|", TOP, TOP, TOP)),
        compose(VWT, _v(Id(TOP), VWT))), "units"))
    add(Schema("unit-merge-assoc/and", (), lambda: (
        compose(bm("&", BOT, BOT, BOT), _h(HWB, Id(BOT)), HWB),
        compose(_h(Id(BOT), HWB), HWB)), "units"))

    add(Schema("kappa-unit/or-right", (), lambda: (
        dp("|", TOP), compose(VWT, _v(Id(TOP), KAPPA))), "kappa"))
    add(Schema("kappa-unit/or-left", (), lambda: (
        sp("|", TOP), compose(VWT, _v(KAPPA, Id(TOP)))), "kappa"))
    add(Schema("kappa-unit/and-right", (), lambda: (
        dm("&", BOT), compose(_h(Id(BOT), KAPPA), HWB)), "kappa"))
    add(Schema("kappa-unit/and-left", (), lambda: (
        sm("&", BOT), compose(_h(KAPPA, Id(BOT)), HWB)), "kappa"))
    add(Schema("kappa-intermutation/1", (), lambda: (
        compose(dp("&", TOP), _h(dp("|", TOP), sp("|", TOP)), ck(TOP, BOT, BOT, TOP)),
        compose(KAPPA, dp("|", BOT), _v(sp("&", BOT), dp("&", BOT)))), "kappa"))
    add(Schema("kappa-intermutation/2", (), lambda: (
        compose(dp("&", TOP), _h(sp("|", TOP), dp("|", TOP)), ck(BOT, TOP, TOP, BOT)),
        compose(KAPPA, dp("|", BOT), _v(dp("&", BOT), sp("&", BOT)))), "kappa"))
    add(Schema("kappa-naturality/1", (), lambda: (
        _h(KAPPA, Id(TOP)), compose(dm("&", TOP), KAPPA, dp("&", BOT))), "kappa"))
    add(Schema("kappa-naturality/2", (), lambda: (
        _h(Id(TOP), KAPPA), compose(sm("&", TOP), KAPPA, sp("&", BOT))), "kappa"))
    add(Schema("kappa-naturality/3", (), lambda: (
        _v(KAPPA, Id(BOT)), compose(dm("|", TOP), KAPPA, dp("|", BOT))), "kappa"))
    add(Schema("kappa-naturality/4", (), lambda: (
        _v(Id(BOT), KAPPA), compose(sm("|", TOP), KAPPA, sp("|", BOT))), "kappa"))

    add(Schema("intermutation-symmetry/or", ("A1", "A1'", "A2", "A2'"), lambda a1, a1p, a2, a2p: (
        compose(ck(a2, a2p, a1, a1p), cc("|", Conj(a1, a1p), Conj(a2, a2p))),
        compose(_h(cc("|", a1, a2), cc("|", a1p, a2p)), ck(a1, a1p, a2, a2p))),
        "intermutation"))
    add(Schema("intermutation-symmetry/and", ("A1", "A1'", "A2", "A2'"), lambda a1, a1p, a2, a2p: (
        compose(cc("&", Disj(a1, a1p), Disj(a2, a2p)), ck(a1, a2, a1p, a2p)),
        compose(ck(a2, a1, a2p, a1p), _v(cc("&", a1, a2), cc("&", a1p, a2p)))),
        "intermutation"))

    m8 = ("A1", "A2", "A3", "A4", "A1'", "A2'", "A3'", "A4'")

    def ck_mid_or(a1, a2, a3, a4, b1, b2, b3, b4):
        lhs = compose(ck(Disj(a1, a3), Disj(b1, b3), Disj(a2, a4), Disj(b2, b4)),
                      _v(ck(a1, b1, a3, b3), ck(a2, b2, a4, b4)),
                      middle_four("|", Conj(a1, b1), Conj(a2, b2), Conj(a3, b3), Conj(a4, b4)))
        rhs = compose(_h(middle_four("|", a1, a2, a3, a4), middle_four("|", b1, b2, b3, b4)),
                      ck(Disj(a1, a2), Disj(b1, b2), Disj(a3, a4), Disj(b3, b4)),
                      _v(ck(a1, b1, a2, b2), ck(a3, b3, a4, b4)))
        return lhs, rhs
    add(Schema("intermutation-middle-four/or", m8, ck_mid_or, "intermutation"))

    def ck_mid_and(a1, a2, a3, a4, b1, b2, b3, b4):
        lhs = compose(middle_four("&", Disj(a1, a3), Disj(b1, b3), Disj(a2, a4), Disj(b2, b4)),
                      _h(ck(a1, b1, a3, b3), ck(a2, b2, a4, b4)),
                      ck(Conj(a1, b1), Conj(a2, b2), Conj(a3, b3), Conj(a4, b4)))
        rhs = compose(_h(ck(a1, a2, a3, a4), ck(b1, b2, b3, b4)),
                      ck(Conj(a1, a2), Conj(b1, b2), Conj(a3, a4), Conj(b3, b4)),
                      _v(middle_four("&", a1, b1, a2, b2), middle_four("&", a3, b3, a4, b4)))
        return lhs, rhs
    add(Schema("intermutation-middle-four/and", m8, ck_mid_and, "intermutation"))

    add(Schema("unit-merge-symmetry/or", (), lambda: (
        compose(VWT, cc("|", TOP, TOP)), VWT), "units"))
    add(Schema("unit-merge-symmetry/and", (), lambda: (
        compose(cc("&", BOT, BOT), HWB), HWB), "units"))
    add(Schema("unit-symmetry/or", (), lambda: (cc("|", TOP, TOP), Id(Disj(TOP, TOP))), "units"))
    add(Schema("unit-symmetry/and", (), lambda: (cc("&", BOT, BOT), Id(Conj(BOT, BOT))), "units"))

    out.extend(_lattice())
    return out


def hw(a):
    return prim("hw", a)


def hk1(a, b):
    return prim("hk1", a, b)


def hk2(a, b):
    return prim("hk2", a, b)


def vw(a):
    return prim("vw", a)


def vk1(a, b):
    return prim("vk1", a, b)


def vk2(a, b):
    return prim("vk2", a, b)


def _lattice():
    out = []
    ext = out.extend
    ext(_both("lattice-assoc", ("A", "B", "C"), lambda a, b, c: (
        bp("&", a, b, c),
        compose(_h(_h(Id(a), hk1(b, c)), compose(hk2(b, c), hk2(a, Conj(b, c)))),
                hw(Conj(a, Conj(b, c))))), "lattice"))
    ext(_both("lattice-assoc-inverse", ("A", "B", "C"), lambda a, b, c: (
        bm("&", a, b, c),
        compose(_h(compose(hk1(a, b), hk1(Conj(a, b), c)), _h(hk2(a, b), Id(c))),
                hw(Conj(Conj(a, b), c)))), "lattice"))
    ext(_both("lattice-symmetry", ("A", "B"), lambda a, b: (
        cc("&", a, b), compose(_h(hk2(a, b), hk1(a, b)), hw(Conj(a, b)))), "lattice"))
    out.append(Schema("lattice-intermutation/and", ("A", "B", "C", "D"), lambda a, b, c, d: (
        ck(a, b, c, d),
        compose(_h(_v(hk1(a, b), hk1(c, d)), _v(hk2(a, b), hk2(c, d))),
                hw(Disj(Conj(a, b), Conj(c, d))))), "lattice"))
    out.append(Schema("lattice-intermutation/or", ("A", "B", "C", "D"), lambda a, b, c, d: (
        ck(a, b, c, d),
        compose(vw(Conj(Disj(a, c), Disj(b, d))),
                _v(_h(vk1(a, c), vk1(b, d)), _h(vk2(a, c), vk2(b, d))))), "lattice"))

    ext(_both("diagonal-conj", ("A", "B"), lambda a, b: (
        hw(Conj(a, b)), compose(middle_four("&", a, a, b, b), _h(hw(a), hw(b)))), "lattice"))
    ext(_both("diagonal-disj", ("A", "B"), lambda a, b: (
        hw(Disj(a, b)), compose(ck(a, a, b, b), _v(hw(a), hw(b)))), "lattice"))
    ext(_both("projection-reshape-1", ("A", "B", "C"), lambda a, b, c: (
        hk1(c, Conj(a, b)), compose(hk1(c, a), _h(Id(c), hk1(a, b)))), "lattice"))
    ext(_both("projection-reshape-2", ("A", "B", "C"), lambda a, b, c: (
        hk2(Conj(a, b), c), compose(hk2(b, c), _h(hk2(a, b), Id(c)))), "lattice"))
    ext(_both("projection-assoc-1", ("A", "D", "C"), lambda a, d, c: (
        compose(_h(hk1(a, d), Id(c)), bp("&", a, d, c)), _h(Id(a), hk2(d, c))), "lattice"))
    ext(_both("projection-assoc-2", ("A", "B", "D"), lambda a, b, d: (
        compose(hk1(Conj(a, b), d), bp("&", a, b, d)), _h(Id(a), hk1(b, d))), "lattice"))
    ext(_both("projection-assoc-3", ("D", "B", "C"), lambda d, b, c: (
        compose(_h(hk2(d, b), Id(c)), bp("&", d, b, c)), hk2(d, Conj(b, c))), "lattice"))
    ext(_both("projection-assoc-inverse-1", ("A", "B", "C"), lambda a, b, c: (
        compose(hk1(a, Conj(b, c)), bm("&", a, b, c)), compose(hk1(a, b), hk1(Conj(a, b), c))),
        "lattice"))
    ext(_both("projection-assoc-inverse-2", ("A", "B", "C"), lambda a, b, c: (
        compose(hk2(a, Conj(b, c)), bm("&", a, b, c)), _h(hk2(a, b), Id(c))), "lattice"))
    ext(_both("projection-assoc-inverse-3", ("A", "B", "C"), lambda a, b, c: (
        compose(_h(Id(a), hk1(b, c)), bm("&", a, b, c)), hk1(Conj(a, b), c)), "lattice"))
    ext(_both("projection-assoc-inverse-4", ("A", "B", "C"), lambda a, b, c: (
        compose(_h(Id(a), hk2(b, c)), bm("&", a, b, c)), _h(hk1(a, b), Id(c))), "lattice"))
    ext(_both("projection-symmetry-1", ("A", "D"), lambda a, d: (
        compose(hk1(a, d), cc("&", d, a)), hk2(d, a)), "lattice"))
    ext(_both("projection-symmetry-2", ("A", "D"), lambda a, d: (
        compose(hk2(d, a), cc("&", a, d)), hk1(a, d)), "lattice"))
    ext(_both("projection-intermutation-1", ("A", "B", "D1", "D2"), lambda a, b, d1, d2: (
        compose(hk1(Disj(a, b), Disj(d1, d2)), ck(a, d1, b, d2)), _v(hk1(a, d1), hk1(b, d2))),
        "lattice"))
    ext(_both("projection-intermutation-2", ("A", "B", "D1", "D2"), lambda a, b, d1, d2: (
        compose(hk2(Disj(d1, d2), Disj(a, b)), ck(d1, a, d2, b)), _v(hk2(d1, a), hk2(d2, b))),
        "lattice"))
    ext(_both("projection-diagonal-1", ("A",), lambda a: (compose(hk1(a, a), hw(a)), Id(a)),
              "lattice"))
    ext(_both("projection-diagonal-2", ("A",), lambda a: (compose(hk2(a, a), hw(a)), Id(a)),
              "lattice"))
    return out


CATALOGUE = _catalogue()
BY_NAME = {s.name: s for s in CATALOGUE}


def random_formula(rng: random.Random, depth: int = 2, letters="pqrstu", units: bool = False):
    """A small random formula for instantiating schemas."""
    if depth == 0 or rng.random() < 0.45:
        if units and rng.random() < 0.15:
            return rng.choice((TOP, BOT))
        return fm.Letter(rng.choice(letters))
    left = random_formula(rng, depth - 1, letters, units)
    right = random_formula(rng, depth - 1, letters, units)
    return Conj(left, right) if rng.random() < 0.5 else Disj(left, right)


def random_instance(schema: Schema, rng: random.Random, units: bool = False):
    env = {p: random_formula(rng, units=units) for p in schema.params}
    return env, schema.instantiate(env)


def schemas_for(theory) -> list:
    th = tm.get_theory(theory)
    return [s for s in CATALOGUE if s.kinds() <= th.kinds]
