import random

from hypothesis import given, settings, strategies as hs

from intermute import formulae as fm
from intermute import generate as gen
from intermute import semantics as se
from intermute import splitting as sp
from intermute import strict as st
from intermute import terms as tm
from intermute.formulae import BOT, TOP, Conj, Disj, Letter

NAMES = [f"x{i}" for i in range(8)]


def trees(leaves):
    """Binary trees over the given leaf strategy."""
    return hs.recursive(leaves, lambda kids: hs.builds(Conj, kids, kids) | hs.builds(Disj, kids, kids),
                        max_leaves=8)


formulas = trees(hs.sampled_from(NAMES[:4]).map(Letter) | hs.sampled_from([TOP, BOT]))
constant_free = trees(hs.sampled_from(NAMES[:4]).map(Letter))


@hs.composite
def diversified(draw, max_letters=7):
    """A constant-free formula with distinct letters."""
    n = draw(hs.integers(1, max_letters))
    names = draw(hs.permutations(NAMES[:n]))
    return _tree(draw, [Letter(x) for x in names])


def _tree(draw, items):
    if len(items) == 1:
        return items[0]
    k = draw(hs.integers(1, len(items) - 1))
    conn = draw(hs.sampled_from("&|"))
    return fm.make(conn, _tree(draw, items[:k]), _tree(draw, items[k:]))


def rebracket(draw, a):
    """The same formula as a form sequence, with different brackets."""
    x = st.strictify(a)
    return _rebuild(draw, x)


def _rebuild(draw, x):
    if isinstance(x, st.Leaf):
        return Letter(x.name)
    kids = [_rebuild(draw, c) for c in x.children]
    while len(kids) > 1:
        i = draw(hs.integers(0, len(kids) - 2))
        kids[i:i + 2] = [fm.make(x.conn, kids[i], kids[i + 1])]
    return kids[0]


def cancellable(a):
    if isinstance(a, Conj):
        return TOP in (a.left, a.right) or cancellable(a.left) or cancellable(a.right)
    if isinstance(a, Disj):
        return BOT in (a.left, a.right) or cancellable(a.left) or cancellable(a.right)
    return False


class TestFormulae:
    @given(formulas)
    def test_normal_form(self, a):
        n = fm.normal_form(a)
        assert fm.normal_form(n) == n
        assert fm.letter_multiset(n) == fm.letter_multiset(a)
        if not fm.is_letterless(a):
            assert not cancellable(n)
        else:
            assert n in (TOP, BOT)

    @given(formulas)
    def test_print_parse(self, a):
        assert fm.parse_formula(fm.to_str(a)) == a

    @given(formulas)
    def test_diversify_inverse(self, a):
        out, back = fm.diversify(a)
        assert fm.is_diversified(out)
        assert fm.rename(out, back) == a
        assert fm.size(out) == fm.size(a)

    @given(formulas)
    def test_dual_involutive(self, a):
        assert fm.dual(fm.dual(a)) == a


class TestStrict:
    @given(hs.data())
    def test_strictify_ignores_brackets(self, data):
        a = data.draw(diversified())
        b = rebracket(data.draw, a)
        assert st.strictify(a) == st.strictify(b)

    @given(diversified(4), diversified(3))
    def test_tblr_laws(self, a, b):
        b = fm.rename(b, {n: n + "b" for n in fm.letters(b)})
        ta, ba, la, ra = st.tblr(st.strictify(a))
        tb, bb, lb, rb = st.tblr(st.strictify(b))
        assert st.tblr(st.strictify(Conj(a, b))) == (ta + tb, ba + bb, la, rb)
        assert st.tblr(st.strictify(Disj(a, b))) == (ta, bb, la + lb, ra + rb)

    @given(diversified())
    def test_flanks_disjoint(self, a):
        x = st.strictify(a)
        for conn in "&|":
            fl = [f for _, f in st.flanks(x, conn)]
            assert len(fl) == st.binary_count(x, conn)
            for i, f in enumerate(fl):
                assert f[0] and f[1] and not set(f[0]) & set(f[1])
                for g in fl[i + 1:]:
                    assert not set(f[0]) & set(g[0])
                    assert not set(f[1]) & set(g[1])

    @given(diversified())
    def test_grid_counts(self, a):
        x = st.strictify(a)
        g = st.grid(x)
        assert len(g.cells) == len(st.seq_letters(x))
        assert len(g.segments) == st.binary_count(x, "&") + st.binary_count(x, "|")

    @given(diversified())
    def test_borders_are_tblr_ends(self, a):
        x = st.strictify(a)
        b = st.borders(x)
        t, bo, l, r = st.tblr(x)
        assert (b["top"], b["bottom"], b["left"], b["right"]) == (t, bo, l, r)


@hs.composite
def shapes(draw, conn, unit, max_holes=4):
    """A shape string with at least one box."""
    n = draw(hs.integers(1, max_holes))
    items = ["[]"] * n + [unit] * draw(hs.integers(0, 2))
    items = draw(hs.permutations(items))
    return _shape(draw, list(items), conn)


def _shape(draw, items, conn):
    if len(items) == 1:
        return items[0]
    k = draw(hs.integers(1, len(items) - 1))
    return f"({_shape(draw, items[:k], conn)} {conn} {_shape(draw, items[k:], conn)})"


class TestShapes:
    @given(shapes("|", "F"))
    def test_psi_type(self, text):
        m = tm.parse_shape(text)
        n = tm.holes(m)
        a = [Letter(f"a{i}") for i in range(n)]
        b = [Letter(f"b{i}") for i in range(n)]
        ty = tm.type_of(tm.derive_psi(m, a, b))
        assert ty.source == tm.shape_apply(m, [Conj(x, y) for x, y in zip(a, b)])
        assert ty.target == Conj(tm.shape_apply(m, a), tm.shape_apply(m, b))

    @given(shapes("&", "T"))
    def test_psibar_type(self, text):
        m = tm.parse_shape(text)
        n = tm.holes(m)
        a = [Letter(f"a{i}") for i in range(n)]
        b = [Letter(f"b{i}") for i in range(n)]
        ty = tm.type_of(tm.derive_psibar(m, a, b))
        assert ty.source == Disj(tm.shape_apply(m, a), tm.shape_apply(m, b))
        assert ty.target == tm.shape_apply(m, [Disj(x, y) for x, y in zip(a, b)])

    @given(shapes("|", "F"))
    def test_pi_top_type(self, text):
        m = tm.parse_shape(text)
        ty = tm.type_of(tm.derive_pi_top(m))
        assert ty.source == tm.shape_apply(m, [TOP] * tm.holes(m)) and ty.target == TOP

    @given(shapes("&", "T"))
    def test_pi_bot_type(self, text):
        m = tm.parse_shape(text)
        ty = tm.type_of(tm.derive_pi_bot(m))
        assert ty.source == BOT and ty.target == tm.shape_apply(m, [BOT] * tm.holes(m))


seeds = hs.integers(0, 2 ** 32 - 1)


class TestTerms:
    @settings(max_examples=60)
    @given(seeds, hs.sampled_from(["SCk", "ACkU", "L"]))
    def test_develop_preserves_type_and_matrix(self, seed, theory):
        rng = random.Random(seed)
        f = gen.random_term(rng, theory, n_letters=4, steps=5,
                            units=0.3 if theory == "ACkU" else 0.0)
        dev = tm.develop(f)
        assert all(tm.is_beta_term(x) for x in dev.factors)
        assert tm.type_of(dev.term()) == tm.type_of(f)
        assert se.eval_mat(dev.term()) == se.eval_mat(f)

    @settings(max_examples=60)
    @given(seeds)
    def test_print_parse(self, seed):
        f = gen.random_term(random.Random(seed), "SCkU", n_letters=3, steps=4, units=0.2)
        assert tm.parse_arrow(tm.to_str(f)) == f

    @settings(max_examples=60)
    @given(seeds)
    def test_dual_swaps_connectives(self, seed):
        f = gen.random_term(random.Random(seed), "SCk", n_letters=4, steps=4)
        ty, td = tm.type_of(f), tm.type_of(tm.dual(f))
        assert (td.source, td.target) == (fm.dual(ty.target), fm.dual(ty.source))

    @settings(max_examples=60)
    @given(seeds)
    def test_restriction_type(self, seed):
        rng = random.Random(seed)
        src, f = gen.random_strict_sck(rng, n_letters=rng.randint(3, 8), steps=4)
        p = st.letter_set(rng.choice(src.children))
        g = sp.restrict_arrow(f, p)
        ty, tg = tm.type_of(f, tm.SYM), tm.type_of(g, tm.SYM)
        assert st.canonical_set(st.strictify(tg.source)) == st.delete_letters(src, p, canonical=True)
        want = st.delete_letters(st.canonical_set(st.strictify(ty.target)), p, canonical=True)
        assert st.canonical_set(st.strictify(tg.target)) == want
