from pathlib import Path

import pytest

from fuzzylp import (
    Connective,
    EvalError,
    Lattice,
    LatticeError,
    UnitInterval,
    builtin_unit_interval,
    check_axioms,
    parse_lattice,
)

DATA = Path(__file__).parent / "data"


class TestBuiltin:
    def test_structure(self, unit):
        assert unit.bot == 0.0
        assert unit.top == 1.0
        assert not unit.is_finite

    @pytest.mark.parametrize(
        "kind,label,args,expected",
        [
            ("and", "godel", (0.9, 0.6), 0.6),
            ("and", "prod", (0.5, 0.5), 0.25),
            ("and", "luka", (0.7, 0.4), pytest.approx(0.1)),
            ("or", "godel", (0.3, 0.8), 0.8),
            ("or", "prod", (0.5, 0.5), 0.75),
            ("or", "luka", (0.7, 0.4), 1.0),
            ("agr", "very", (0.4,), pytest.approx(0.16)),
            ("agr", "aver", (0.8, 0.0), 0.4),
            ("agr", "aver", (0.6, 0.16), 0.38),
        ],
    )
    def test_connective_values(self, unit, kind, label, args, expected):
        assert unit.eval((kind, label), list(args)) == expected

    def test_luka_identity_element(self, unit):
        for x in (0.0, 0.25, 0.5, 1.0):
            assert unit.eval(("and", "luka"), [x, 1.0]) == pytest.approx(x)

    def test_or_prod_identity_bottom(self, unit):
        for x in (0.0, 0.3, 1.0):
            assert unit.eval(("or", "prod"), [0.0, x]) == pytest.approx(x)

    def test_leq(self, unit):
        assert unit.leq(0.38, 0.4)
        assert unit.leq(unit.bot, unit.top)
        assert not unit.leq(0.5, 0.4)

    def test_leq_rejects_non_members(self, unit):
        with pytest.raises(LatticeError):
            unit.leq(1.5, 0.5)


class TestEvalErrors:
    def test_unknown_connective(self, unit):
        with pytest.raises(EvalError, match="and_bogus"):
            unit.eval(("and", "bogus"), [0.1, 0.2])

    def test_arity_mismatch(self, unit):
        with pytest.raises(EvalError, match="agr_very expects 1"):
            unit.eval(("agr", "very"), [0.1, 0.2])

    def test_non_member_argument(self, unit):
        with pytest.raises(EvalError, match="and_godel"):
            unit.eval(("and", "godel"), [2.0, 0.2])


class TestLatticeFiles:
    def test_unit_file_matches_builtin(self, unit):
        loaded = parse_lattice((DATA / "unit.lat").read_text())
        assert loaded.bot == unit.bot and loaded.top == unit.top
        assert set(loaded.connectives) == set(unit.connectives)
        cases = [
            (("and", "godel"), [0.9, 0.6]),
            (("and", "prod"), [0.5, 0.5]),
            (("and", "luka"), [0.7, 0.4]),
            (("or", "godel"), [0.3, 0.8]),
            (("or", "prod"), [0.5, 0.5]),
            (("or", "luka"), [0.7, 0.4]),
            (("agr", "aver"), [0.8, 0.0]),
            (("agr", "very"), [0.4]),
        ]
        for ref, args in cases:
            assert loaded.eval(ref, args) == pytest.approx(unit.eval(ref, args))
        for a, b in [(0.0, 1.0), (0.4, 0.38), (0.5, 0.5)]:
            assert loaded.leq(a, b) == unit.leq(a, b)

    def test_boolean_table(self):
        lat = parse_lattice((DATA / "bool.lat").read_text())
        assert lat.eval(("and", "godel"), ["true", "false"]) == "false"
        assert lat.eval(("and", "godel"), ["true", "true"]) == "true"
        assert lat.eval(("or", "godel"), ["true", "false"]) == "true"
        assert lat.leq("false", "true")
        assert not lat.leq("true", "false")

    def test_chain_min_is_order_meet(self):
        lat = parse_lattice((DATA / "chain3.lat").read_text())
        # brute-force minimum over the declared order
        def oracle_min(a, b):
            return a if lat.leq(a, b) else b

        for a in lat.element_names():
            for b in lat.element_names():
                assert lat.eval(("and", "godel"), [a, b]) == oracle_min(a, b)
        assert lat.eval(("and", "godel"), ["mid", "high"]) == "mid"

    def test_diamond_meet_join(self):
        lat = parse_lattice((DATA / "diamond.lat").read_text())
        assert lat.meet("a", "b") == "n"
        assert lat.join("a", "b") == "t"
        assert lat.eval(("and", "godel"), ["a", "b"]) == "n"


class TestLatticeFileErrors:
    def test_missing_members(self):
        with pytest.raises(LatticeError, match="members"):
            parse_lattice("bot: 0\ntop: 1\nleq(x,y): x <= y")

    def test_missing_bot(self):
        with pytest.raises(LatticeError, match="bot"):
            parse_lattice("members: real in [0,1]\ntop: 1\nleq(x,y): x <= y")

    def test_missing_leq(self):
        with pytest.raises(LatticeError, match="leq"):
            parse_lattice("members: a, b\nbot: a\ntop: b")

    def test_bot_not_member(self):
        with pytest.raises(LatticeError, match="not a member"):
            parse_lattice("members: a, b\nbot: c\ntop: b\nleq: a < b")

    def test_top_outside_interval(self):
        with pytest.raises(LatticeError, match="not a member"):
            parse_lattice("members: real in [0,1]\nbot: 0\ntop: 2\nleq(x,y): x <= y")

    def test_unknown_operator_in_expression(self):
        text = (
            "members: real in [0,1]\nbot: 0\ntop: 1\nleq(x,y): x <= y\n"
            "and bad(x, y): frob(x, y)\n"
        )
        with pytest.raises(LatticeError, match="unknown operator"):
            parse_lattice(text)

    def test_table_with_missing_entries(self):
        text = (
            "members: a, b\nbot: a\ntop: b\nleq: a < b\n"
            "and godel/2: table\n  a a -> a\n  b b -> b\n"
        )
        with pytest.raises(LatticeError, match="2 of 4 entries"):
            parse_lattice(text)

    def test_arithmetic_rejected_on_finite(self):
        text = "members: a, b\nbot: a\ntop: b\nleq: a < b\nand bad(x, y): x + y\n"
        with pytest.raises(LatticeError, match="finite"):
            parse_lattice(text)

    def test_unparseable_line(self):
        with pytest.raises(LatticeError, match="cannot parse"):
            parse_lattice("members: real in [0,1]\nwhat is this\n")


class TestCheckAxioms:
    def test_builtin_is_clean(self, unit):
        report = check_axioms(unit, samples=300)
        assert report.ok, str(report)

    def test_finite_lattices_are_clean(self):
        for name in ("bool.lat", "chain3.lat", "diamond.lat"):
            lat = parse_lattice((DATA / name).read_text())
            report = check_axioms(lat)
            assert report.ok, f"{name}: {report}"

    def test_broken_identity_is_caught(self):
        bad = Lattice(
            "bad",
            UnitInterval(),
            0.0,
            1.0,
            [Connective("and", "broken", 2, lambda x, y: 0.0 if x == 1.0 else min(x, y))],
        )
        report = check_axioms(bad, samples=50)
        violations = [v for v in report.violations if v.axiom == "identity element fails"]
        assert violations
        assert violations[0].connective == "and_broken"
        # the witness is the x with and(x, 1) != x
        assert all(v.witness for v in violations)

    def test_very_is_monotone_on_samples(self, unit):
        report = check_axioms(unit, samples=1000)
        assert not [v for v in report.violations if v.connective == "agr_very"]

    def test_non_lattice_order_reported(self):
        # two incomparable maximal elements: no join, and no top bound
        with pytest.raises(LatticeError):
            Lattice(
                "broken",
                parse_lattice(
                    "members: a, b, c\nbot: a\ntop: b\nleq: a < b\nleq: a < c"
                ).carrier,
                "a",
                "d",
            )

    def test_missing_bounds_detected(self):
        lat = parse_lattice("members: a, b, c\nbot: a\ntop: b\nleq: a < b\nleq: a < c")
        report = check_axioms(lat)
        assert not report.ok
        axioms = {v.axiom for v in report.violations}
        assert "top not an upper bound" in axioms
