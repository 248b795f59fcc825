import pytest

from stablemodels import (
    GraphKind,
    NotAPartitionError,
    check_split,
    choice_augment,
    parse_formula,
    stable_models,
)
from conftest import mset


class TestChoiceAugment:
    def test_single_choice(self):
        f = parse_formula("p -> q")
        assert choice_augment(f, {"p"}) == parse_formula(
            "(p -> q) & (p | not p)"
        )

    def test_empty_is_identity(self):
        f = parse_formula("p -> q")
        assert choice_augment(f, set()) is f

    def test_choice_makes_atom_free(self):
        # Brute force: a choice atom may be in or out of a stable model.
        f = choice_augment(parse_formula("bot -> bot"), {"p"})
        assert stable_models((f,)) == [frozenset(), mset("p")]

    def test_choices_in_atom_order(self):
        f = parse_formula("q")
        assert choice_augment(f, {"b", "a"}) == parse_formula(
            "q & (a | not a) & (b | not b)"
        )


F3 = "p -> q"
G3 = "((q -> p) -> p) -> p"


class TestCheckSplit:
    def test_counterexample_under_sp(self):
        # Conditions pass, but {p, q} is stable for both parts and not
        # for the whole conjunction.
        report = check_split(
            parse_formula(F3), parse_formula(G3), {"q"}, {"p"}, GraphKind.SP
        )
        assert report.conditions_pass
        assert not report.equivalence_holds
        assert report.stable_whole == [frozenset()]
        assert mset("p", "q") in report.stable_part_f
        assert mset("p", "q") in report.stable_part_g

    def test_counterexample_under_pnn_fails_cond_iii(self):
        report = check_split(
            parse_formula(F3), parse_formula(G3), {"q"}, {"p"}, GraphKind.PNN
        )
        assert report.cond_i and report.cond_ii
        assert not report.cond_iii
        assert report.cond_iii_offender == mset("p", "q")

    def test_sound_split(self):
        # Brute-force enumeration of the whole and both augmented parts.
        report = check_split(
            parse_formula("p"),
            parse_formula("p -> q"),
            {"p"},
            {"q"},
            GraphKind.PNN,
        )
        assert report.conditions_pass
        assert report.equivalence_holds
        assert report.stable_whole == [mset("p", "q")]

    def test_symmetry(self):
        f, g = parse_formula("p"), parse_formula("p -> q")
        a = check_split(f, g, {"p"}, {"q"}, GraphKind.PNN)
        b = check_split(g, f, {"q"}, {"p"}, GraphKind.PNN)
        assert a.cond_i == b.cond_ii
        assert a.cond_ii == b.cond_i
        assert a.cond_iii == b.cond_iii
        assert a.equivalence_holds == b.equivalence_holds
        assert a.stable_whole == b.stable_whole

    def test_condition_offenders_reported(self):
        report = check_split(
            parse_formula("p"), parse_formula("q"), {"q"}, {"p"}, GraphKind.PNN
        )
        assert not report.cond_i
        assert report.cond_i_offenders == mset("p")
        assert not report.cond_ii
        assert report.cond_ii_offenders == mset("q")

    def test_rejects_non_partition(self):
        with pytest.raises(NotAPartitionError):
            check_split(
                parse_formula("p"),
                parse_formula("q"),
                {"p", "q"},
                {"q"},
                GraphKind.PNN,
            )
        with pytest.raises(NotAPartitionError):
            check_split(
                parse_formula("p"),
                parse_formula("q"),
                {"p"},
                set(),
                GraphKind.PNN,
            )
