import pytest

import oracle
from intermute import formulae as fm
from intermute import legitimacy as lg
from intermute import semantics as se
from intermute import strict as st
from intermute import terms as tm
from intermute.strict import parse_sequence as S

CK_SRC, CK_TGT = S("(p & q) | (r & s)"), S("(p | r) & (q | s)")
THREE_SRC = S("(p & q) | (r & s) | (t & u)")
THREE_TGT = S("(p | r | t) & (q | s | u)")


def oracle_exists(x, y):
    return oracle.from_seq(y) in oracle.reach(oracle.from_seq(x))


class TestCheck:
    def test_intermutation_pair(self):
        w = lg.check_legitimate(CK_SRC, CK_TGT)
        assert w is not None
        assert set(w.merge.values()) == set(st.occurrences(CK_TGT, "&"))
        assert len(w.merge) == 2
        assert set(w.split.values()) == set(st.occurrences(CK_SRC, "|"))
        assert len(w.split) == 2

    def test_reverse_pair(self):
        assert lg.check_legitimate(CK_TGT, CK_SRC) is None
        assert not oracle_exists(CK_TGT, CK_SRC)

    def test_no_conjunction_in_target(self):
        w, reason = lg.legitimacy_report(S("p & q"), S("p | q"))
        assert w is None and reason

    def test_letters_must_match(self):
        w, reason = lg.legitimacy_report(S("p & q"), S("p & r"))
        assert w is None and "letter" in reason

    def test_identity(self):
        assert lg.is_legitimate(THREE_SRC, THREE_SRC)

    def test_not_diversified(self):
        with pytest.raises(st.NotDiversified):
            lg.check_legitimate(S("p & p"), S("p & p"))
        with pytest.raises(st.NotDiversified):
            lg.exists_bfs(S("p & p"), S("p & p"))


class TestInterpolation:
    def test_or(self):
        z1, z2 = lg.interpolate_or(S("p & q"), S("r & s"), CK_TGT)
        assert (z1, z2) == (S("p & q"), S("r & s"))

    def test_three_disjuncts(self):
        x1, x2 = S("(p & q) | (r & s)"), S("t & u")
        z1, z2 = lg.interpolate_or(x1, x2, THREE_TGT)
        assert z1 == S("(p | r) & (q | s)") and z2 == x2
        for a, b in [(x1, z1), (x2, z2), (st.node("|", (z1, z2)), THREE_TGT)]:
            assert lg.is_legitimate(a, b)
            assert oracle_exists(a, b)

    def test_and(self):
        y1, y2 = S("p | r"), S("q | s")
        z1, z2 = lg.interpolate_and(CK_SRC, y1, y2)
        assert (z1, z2) == (S("p | r"), S("q | s"))

    def test_rejects_illegitimate(self):
        with pytest.raises(lg.NotLegitimate):
            lg.interpolate_or(S("p | r"), S("q | s"), CK_SRC)


class TestSynthesis:
    def test_intermutation(self):
        assert lg.synthesize(CK_SRC, CK_TGT) == tm.prim("ck", *(st.to_formula(S(n)) for n in "pqrs"))

    def test_identity(self):
        assert lg.synthesize(THREE_SRC, THREE_SRC) == tm.Id(st.to_formula(THREE_SRC))

    def test_three_disjuncts(self):
        t = lg.synthesize(THREE_SRC, THREE_TGT)
        assert tm.count_kind(t, "ck") == 2
        ty = tm.type_of(t, tm.ASSOC)
        assert st.strictify(ty.source) == THREE_SRC
        assert st.strictify(ty.target) == THREE_TGT
        assert tm.validate_in_theory(t, "ACk")

    def test_rejects(self):
        with pytest.raises(lg.NotLegitimate):
            lg.synthesize(CK_TGT, CK_SRC)


class TestSearch:
    def test_one_step(self):
        assert lg.exists_bfs(CK_SRC, CK_TGT)
        assert [n for n, _ in lg.ck_steps(CK_SRC)] == [CK_TGT]

    def test_reverse(self):
        assert not lg.exists_bfs(CK_TGT, CK_SRC)

    def test_reflexive(self):
        assert lg.exists_bfs(THREE_SRC, THREE_SRC)

    def test_steps_agree_with_oracle(self):
        x = S("((p & q) | (r & s & t)) & ((u & v) | w)")
        got = {oracle.from_seq(n) for n, _ in lg.ck_steps(x)}
        assert got == set(oracle.successors(oracle.from_seq(x)))

    def test_step_factors_type(self):
        for x in (THREE_SRC, S("(p & q & r) | (s & t)")):
            for nxt, factor in lg.ck_steps(x):
                ty = tm.type_of(factor, tm.ASSOC)
                assert st.strictify(ty.source) == x and st.strictify(ty.target) == nxt

    def test_all_paths_six_letters(self):
        # two orders of intermutation reach the same target here
        paths = list(lg.all_paths(THREE_SRC, THREE_TGT))
        assert len(paths) == oracle.count_paths(oracle.from_seq(THREE_SRC),
                                                oracle.from_seq(THREE_TGT)) == 2
        rels = {se.eval_rel(p, tm.ASSOC) for p in paths}
        assert len(rels) == 1


class TestConsequences:
    """Consequences of legitimacy checked on a handful of pairs."""

    PAIRS = [
        (CK_SRC, CK_TGT),
        (THREE_SRC, THREE_TGT),
        (S("(p & q & r) | (s & t & u)"), S("(p | s) & (q | t) & (r | u)")),
        (S("((p & q) | (r & s)) & t"), S("(p | r) & (q | s) & t")),
    ]

    @pytest.mark.parametrize("x,y", PAIRS)
    def test_relations_shrink(self, x, y):
        assert lg.is_legitimate(x, y)
        assert st.above_below(y)[1] <= st.above_below(x)[1]
        assert st.beside_closure(x)[1] <= st.beside_closure(y)[1]

    @pytest.mark.parametrize("x,y", PAIRS)
    def test_borders_coincide(self, x, y):
        assert st.borders(x) == st.borders(y)

    @pytest.mark.parametrize("x,y", PAIRS)
    def test_transversals_map_to_transversals(self, x, y):
        w = lg.check_legitimate(x, y)
        back = {}
        for yocc, xocc in w.split.items():
            back.setdefault(xocc, []).append(yocc)
        ty = {frozenset(t) for t in st.transversals(y)}
        for t in st.transversals(x):
            image = frozenset(o for xo in t for o in back[xo])
            assert image in ty


def _shape_key(x):
    """The form sequence with letters renamed in order of appearance."""
    names = {n: f"v{i}" for i, n in enumerate(st.seq_letters(x))}
    return st.strictify(fm.rename(st.to_formula(x), names))


def test_legitimate_targets_unique_up_to_renaming():
    ys = st.enumerate_sequences("abcd")
    for x in ys:
        seen = {}
        for y in ys:
            if lg.is_legitimate(x, y):
                key = _shape_key(y)
                assert seen.setdefault(key, y) == y
