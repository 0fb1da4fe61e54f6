import random

import pytest

import oracle
from intermute import formulae as fm
from intermute import generate as gen
from intermute import semantics as se
from intermute import terms as tm
from intermute.equations import BY_NAME, CATALOGUE, random_instance
from intermute.formulae import parse_formula as P
from intermute.terms import parse_arrow as A


class TestGenerators:
    def test_ck_relation(self):
        assert se.eval_rel(A("ck{p,q,r,s}")).pairs == {(0, 0), (1, 2), (2, 1), (3, 3)}

    def test_ck_matrix(self):
        m = se.eval_mat(A("ck{p,q,r,s}"))
        assert m.entries == oracle.CK_MATRIX
        assert str(m) == "1000\n0010\n0100\n0001"

    def test_identity(self):
        assert se.eval_rel(A("id{p & q}")).pairs == {(0, 0), (1, 1)}

    def test_diagonal(self):
        assert se.eval_rel(A("hw{p}")).pairs == {(0, 0), (0, 1)}
        assert se.eval_mat(A("hw{p & q}")).entries == ((1, 0), (0, 1), (1, 0), (0, 1))
        assert se.eval_mat(A("vw{p}")).entries == ((1, 1),)

    def test_projections_and_injections(self):
        assert se.eval_mat(A("hk1{p,q}")).entries == ((1, 0),)
        assert se.eval_mat(A("hk2{p,q}")).entries == ((0, 1),)
        assert se.eval_mat(A("vk1{p,q}")).entries == ((1,), (0,))
        assert se.eval_mat(A("vk2{p,q}")).entries == ((0,), (1,))

    def test_codiagonal_after_injection(self):
        assert se.eval_mat(A("vw{p} . vk1{p,p}")).entries == ((1,),)

    def test_matrix_product_counts_lines(self):
        join = se.IntMatrix(1, 2, ((1, 1),))
        split = se.IntMatrix(2, 1, ((1,), (1,)))
        assert join.compose(split).entries == ((2,),)
        assert str(se.IntMatrix(1, 1, ((12,),))) == "12"

    def test_units_carry_nothing(self):
        r = se.eval_rel(A("kappa"))
        assert (r.source_size, r.target_size, r.pairs) == (0, 0, frozenset())
        m = se.eval_mat(A("hd+{p}"))
        assert m.entries == ((1,),)

    def test_ill_typed(self):
        with pytest.raises(tm.IllTyped):
            se.eval_rel(tm.Comp(A("hd+{p}"), A("ck{p,q,r,s}")))

    def test_json(self):
        assert se.eval_rel(A("hc{p,q}")).to_json() == {"source": 2, "target": 2,
                                                       "pairs": [[0, 1], [1, 0]]}


class TestFunctoriality:
    @pytest.mark.parametrize("theory", ["SCk", "L", "ACkU"])
    def test_composition_and_products(self, theory):
        rng = random.Random(7)
        for _ in range(40):
            f = gen.random_term(rng, theory, n_letters=3, steps=3,
                                units=0.3 if theory == "ACkU" else 0.0)
            target = tm.type_of(f).target
            g = gen.random_walk(rng, target, tm.get_theory(theory).kinds, 3)
            comp = tm.Comp(g, f)
            assert se.eval_mat(comp) == se.eval_mat(g).compose(se.eval_mat(f))
            assert se.eval_rel(comp) == se.eval_rel(g).compose(se.eval_rel(f))
            both = tm.ConjPar(f, g)
            assert se.eval_mat(both) == se.eval_mat(f).beside(se.eval_mat(g))
            assert se.eval_rel(both) == se.eval_rel(f).beside(se.eval_rel(g))

    def test_relation_is_support_on_sck(self):
        rng = random.Random(8)
        for _ in range(60):
            f = gen.random_term(rng, "SCk", n_letters=5, steps=5)
            m = se.eval_mat(f)
            assert all(v <= 1 for row in m.entries for v in row)
            assert m.support() == se.eval_rel(f).pairs

    def test_diversified_relation_joins_names(self):
        rng = random.Random(9)
        for _ in range(60):
            f = gen.random_term(rng, "SCk", n_letters=5, steps=6)
            ty = tm.type_of(f)
            want = oracle.name_relation(fm.letter_list(ty.source), fm.letter_list(ty.target))
            assert se.eval_rel(f).pairs == want


class TestCheckEquation:
    def test_pentagon(self):
        assert se.check_equation("pentagon/and", {"A": "p", "B": "q", "C": "r", "D": "s"})

    def test_intermutation_associativity_at_six_letters(self):
        assert se.check_equation("intermutation-assoc/or", [P(n) for n in "pqrstu"])

    def test_unknown(self):
        with pytest.raises(se.UnknownSchema):
            se.check_equation("no-such-schema", {})

    def test_arity(self):
        with pytest.raises(tm.ArityMismatch):
            se.check_equation("pentagon/and", [P("p")])
        with pytest.raises(tm.ArityMismatch):
            se.check_equation("pentagon/and", {"A": "p"})

    @pytest.mark.parametrize("name,swap", [
        ("pentagon/and", ("B", "C")),
        ("hexagon/or", ("A", "B")),
        ("intermutation-assoc/or", ("A2", "A2'")),
        ("intermutation-symmetry/and", ("A1", "A2")),
    ])
    def test_mutation_is_caught(self, name, swap):
        schema = BY_NAME[name]
        env = {k: fm.Letter(f"x{i}") for i, k in enumerate(schema.params)}
        lhs, _ = schema.instantiate(env)
        bad = dict(env)
        bad[swap[0]], bad[swap[1]] = env[swap[1]], env[swap[0]]
        _, rhs = schema.instantiate(bad)
        assert not se.same_image(lhs, rhs)

    def test_catalogue_size(self):
        assert len(CATALOGUE) == 93
        assert len({s.name for s in CATALOGUE}) == 93

    def test_every_schema_once(self):
        rng = random.Random(1)
        for schema in CATALOGUE:
            _, (lhs, rhs) = random_instance(schema, rng)
            assert se.same_image(lhs, rhs), schema.name


class TestLatticeReduce:
    def test_definitional_intermutation(self):
        lhs, rhs = BY_NAME["lattice-intermutation/and"].build(*(P(n) for n in "pqrs"))
        out = se.lattice_reduce(rhs)
        assert out is not None
        assert not tm.generator_kinds(out) & tm.LATTICE_KINDS
        assert se.eval_mat(out) == se.eval_mat(lhs)
        assert tm.type_of(out) == tm.type_of(rhs)

    def test_projection_is_not_bijective(self):
        assert se.lattice_reduce(A("hk1{p,q}")) is None

    def test_identity(self):
        assert se.lattice_reduce(A("id{p}")) == A("id{p}")

    def test_wrong_theory(self):
        with pytest.raises(tm.GeneratorNotInTheory):
            se.lattice_reduce(A("kappa"))
