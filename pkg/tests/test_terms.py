import pytest

from fuzzylp import (
    Atom,
    Compound,
    ConnApp,
    ConnectiveRef,
    FreshCounter,
    Rule,
    Substitution,
    Symbol,
    TruthLit,
    Var,
    format_value,
    rename_apart,
    variables,
)


def c(name):
    return Compound(Symbol(name, 0))


def f(name, *args):
    return Compound(Symbol(name, len(args)), tuple(args))


class TestFormatValue:
    def test_plain(self):
        assert format_value(0.4) == "0.4"
        assert format_value(0.0) == "0"
        assert format_value(1.0) == "1"

    def test_float_noise_rounds_away(self):
        assert format_value(0.4 * 0.4) == "0.16"
        assert format_value((0.6 + 0.4 * 0.4) / 2) == "0.38"

    def test_close_values_stay_apart(self):
        assert format_value(0.05) == "0.05"
        assert format_value(0.123456789) == "0.123456789"

    def test_element_names_pass_through(self):
        assert format_value("high") == "high"


class TestConstruction:
    def test_compound_arity_checked(self):
        with pytest.raises(ValueError):
            Compound(Symbol("f", 2), (c("a"),))

    def test_atom_arity_checked(self):
        with pytest.raises(ValueError):
            Atom(Symbol("p", 1), ())

    def test_negative_arity_rejected(self):
        with pytest.raises(ValueError):
            Symbol("f", -1)

    def test_printing(self):
        expr = ConnApp(
            ConnectiveRef("agr", "aver"),
            (Atom(Symbol("elegant", 1), (Var("X"),)), TruthLit(0.3)),
        )
        assert str(expr) == "@aver(elegant(X), 0.3)"
        assert str(f("close", c("a"), Var("Y"))) == "close(a, Y)"


class TestSubstitution:
    def test_apply_example(self):
        sub = Substitution({"X": c("taxi")})
        atom = Atom(Symbol("elegant", 1), (Var("X"),))
        assert sub.apply(atom) == Atom(Symbol("elegant", 1), (c("taxi"),))

    def test_identity_apply(self):
        t = f("g", Var("X"), c("a"))
        assert Substitution.identity().apply(t) is t

    def test_simultaneous(self):
        sub = Substitution({"X": f("f", Var("Y"))})
        t = f("g", Var("X"), Var("X"))
        assert sub.apply(t) == f("g", f("f", Var("Y")), f("f", Var("Y")))

    def test_compose_example(self):
        s1 = Substitution({"X1": Var("X")})
        s2 = Substitution({"X": c("ritz")})
        composed = s1.compose(s2)
        assert composed == Substitution({"X1": c("ritz"), "X": c("ritz")})
        assert str(composed) == "{X1/ritz, X/ritz}"

    def test_compose_identity(self):
        s = Substitution({"X": c("a")})
        assert Substitution.identity().compose(s) == s
        assert s.compose(Substitution.identity()) == s

    def test_compose_chain(self):
        s1 = Substitution({"X": Var("Y")})
        s2 = Substitution({"Y": c("a")})
        assert s1.compose(s2) == Substitution({"X": c("a"), "Y": c("a")})

    def test_restrict(self):
        s = Substitution({"X1": c("ritz"), "X": c("ritz")})
        assert s.restrict({"X"}) == Substitution({"X": c("ritz")})
        assert Substitution.identity().restrict({"X"}) == Substitution.identity()
        assert s.restrict(set()) == Substitution.identity()

    def test_idempotence_flag(self):
        assert Substitution({"X": f("f", Var("Y"))}).is_idempotent()
        assert not Substitution({"X": f("f", Var("X"))}).is_idempotent()


class TestRenameApart:
    def rule(self):
        head = Atom(Symbol("p", 1), (Var("X"),))
        body = Atom(Symbol("q", 2), (Var("X"), Var("Y")))
        return Rule(1, head, body)

    def test_first_rename_appends_one(self):
        fresh = rename_apart(self.rule(), FreshCounter())
        assert fresh.head == Atom(Symbol("p", 1), (Var("X1"),))
        assert fresh.body == Atom(Symbol("q", 2), (Var("X1"), Var("Y1")))

    def test_ground_rule_unchanged(self):
        ground = Rule(2, Atom(Symbol("p", 0)), TruthLit(1.0))
        counter = FreshCounter()
        assert rename_apart(ground, counter) is ground
        # and no index was consumed
        assert rename_apart(self.rule(), counter).head.args[0] == Var("X1")

    def test_repeated_renames_are_disjoint(self):
        counter = FreshCounter()
        a = rename_apart(self.rule(), counter)
        b = rename_apart(self.rule(), counter)
        assert set(variables(a.body)).isdisjoint(variables(b.body))

    def test_reserved_names_skipped(self):
        counter = FreshCounter(reserved=["X1"])
        fresh = rename_apart(self.rule(), counter)
        assert "X1" not in variables(fresh.body)


def test_variables_order():
    expr = ConnApp(
        ConnectiveRef("agr", "aver"),
        (
            Atom(Symbol("p", 2), (Var("B"), Var("A"))),
            Atom(Symbol("q", 1), (Var("B"),)),
        ),
    )
    assert variables(expr) == ["B", "A"]
