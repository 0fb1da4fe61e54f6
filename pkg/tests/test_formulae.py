from collections import Counter

import pytest

from intermute import formulae as fm
from intermute.formulae import BOT, TOP, Conj, Disj, Letter, parse_formula as P


p, q, r, s = (Letter(n) for n in "pqrs")


class TestParsing:
    def test_precedence_and_associativity(self):
        assert P("p & q | r") == Disj(Conj(p, q), r)
        assert P("p | q | r") == Disj(Disj(p, q), r)
        assert P("p & q & r") == Conj(Conj(p, q), r)
        assert P("p & (q | r)") == Conj(p, Disj(q, r))

    def test_units(self):
        assert P("T") == TOP
        assert P("F & p") == Conj(BOT, p)

    @pytest.mark.parametrize("text", ["p & (q | r)", "(p | q) & r", "p & (q & r)",
                                      "(p | q) | r", "p | q & r", "T | F"])
    def test_round_trip(self, text):
        a = P(text)
        assert P(fm.to_str(a)) == a

    def test_right_nesting_keeps_parentheses(self):
        assert fm.to_str(Conj(p, Conj(q, r))) == "p & (q & r)"
        assert fm.to_str(Conj(Conj(p, q), r)) == "p & q & r"

    @pytest.mark.parametrize("text,pos", [("p &", 3), ("p && q", 3), ("(p | q", 6), ("p q", 2)])
    def test_errors_carry_position(self, text, pos):
        with pytest.raises(fm.ParseError) as info:
            P(text)
        assert info.value.pos == pos
        assert "^" in str(info.value)


class TestLetters:
    def test_multiset(self):
        assert fm.letter_multiset(P("p & (q | p)")) == Counter({"p": 2, "q": 1})
        assert fm.letter_multiset(P("T | F")) == Counter()
        assert fm.letter_multiset(P("p & q | r & s")) == Counter("pqrs")

    def test_diversified(self):
        assert fm.is_diversified(P("p & q | r & s"))
        assert not fm.is_diversified(P("p & p"))
        assert fm.is_diversified(TOP)

    def test_diversify(self):
        out, back = fm.diversify(P("p & p"))
        assert out == P("p_1 & p_2")
        assert back == {"p_1": "p", "p_2": "p"}
        out, back = fm.diversify(P("(p | q) & p"))
        assert out == P("(p_1 | q) & p_2")
        assert fm.rename(out, back) == P("(p | q) & p")

    def test_diversify_identity_on_diversified(self):
        a = P("p & q | r")
        out, back = fm.diversify(a)
        assert out == a
        assert all(k == v for k, v in back.items())

    def test_diversify_avoids_clashes(self):
        out, back = fm.diversify(P("p & p & p_1"))
        assert fm.is_diversified(out)
        assert fm.rename(out, back) == P("p & p & p_1")


class TestNormalForm:
    @pytest.mark.parametrize("text,want", [
        ("p & T", "p"),
        ("F & F", "F"),
        ("p & F", "p & F"),
        ("(p | F) & (T & q)", "p & q"),
        ("T | T", "T"),
        ("T & T", "T"),
        ("F | F", "F"),
        ("T | F", "T"),
        ("F & T", "F"),
        ("(T | T) & p", "p"),
    ])
    def test_examples(self, text, want):
        assert fm.normal_form(P(text)) == P(want)

    def test_letterless_collapses(self):
        assert fm.normal_form(P("(T & F) | (F & T)")) in (TOP, BOT)

    def test_purity(self):
        assert fm.is_pure(P("p & (q | F)"))
        assert not fm.is_zeta_pure(P("p & F"), BOT)
        assert fm.is_zeta_pure(P("p & F"), TOP)
        assert not fm.is_zeta_pure(TOP, TOP)
        assert fm.is_zeta_pure(TOP, BOT)


class TestTreeHelpers:
    def test_subformula_and_replace(self):
        a = P("(p & q) | r")
        assert fm.subformula(a, ("L", "R")) == q
        assert fm.replace_at(a, ("L", "R"), s) == P("(p & s) | r")

    def test_dual(self):
        assert fm.dual(P("p & T | F")) == P("(p | F) & T")

    def test_fold_is_left_nested(self):
        assert fm.fold("&", [p, q, r]) == P("p & q & r")
