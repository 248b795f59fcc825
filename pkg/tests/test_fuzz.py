import random
import re

import pytest

from stablemodels import (
    GraphKind,
    atoms,
    is_nondisjunctive_theory,
    is_stable,
    parse_formula,
    stable_via_loops,
    theory_atoms,
)
from stablemodels.fuzz import (
    ATOM_POOL,
    PROPERTIES,
    random_formula,
    random_nondisjunctive_theory,
    random_theory,
    run_fuzz,
)


class TestGenerator:
    def test_deterministic_from_seed(self):
        a = random_theory(random.Random(7), ATOM_POOL, 4)
        b = random_theory(random.Random(7), ATOM_POOL, 4)
        assert a == b

    def test_respects_atom_pool(self):
        pool = ATOM_POOL[:2]
        rng = random.Random(3)
        for _ in range(50):
            assert atoms(random_formula(rng, pool, 4)) <= set(pool)

    def test_nondisjunctive_generator(self):
        rng = random.Random(5)
        for _ in range(50):
            t = random_nondisjunctive_theory(rng, ATOM_POOL, 3)
            assert is_nondisjunctive_theory(t)


class TestRunFuzz:
    @pytest.mark.parametrize(
        "prop",
        [
            "theorem1",
            "theorem2",
            "loop-oracle",
            "reduct-lemma",
            "lemma1",
            "sp-subgraph",
            "chain",
        ],
    )
    def test_properties_hold(self, prop):
        result = run_fuzz(prop, seed=11, count=200)
        assert result.ok, result.violations[:1]

    def test_splitting_holds(self):
        result = run_fuzz("splitting", seed=11, count=100)
        assert result.ok, result.violations[:1]

    def test_unknown_property(self):
        with pytest.raises(ValueError):
            run_fuzz("no-such-property", seed=0, count=1)

    def test_limits_enforced(self):
        with pytest.raises(ValueError):
            run_fuzz("chain", seed=0, count=1, max_atoms=9)
        with pytest.raises(ValueError):
            run_fuzz("chain", seed=0, count=1, max_depth=9)

    def test_deterministic_results(self):
        a = run_fuzz("loop-oracle-sp", seed=1, count=100)
        b = run_fuzz("loop-oracle-sp", seed=1, count=100)
        assert a.violations == b.violations


class TestNegativeControl:
    def test_sp_loop_oracle_is_refuted(self):
        result = run_fuzz("loop-oracle-sp", seed=1, count=200)
        assert not result.ok

    def test_counterexample_reproduces(self):
        result = run_fuzz("loop-oracle-sp", seed=1, count=200)
        message = result.violations[0]
        # The report embeds the theory text and interpretation verbatim.
        text = re.search(r"theory:\n(.+)\.\n", message).group(1)
        interp = re.search(r"interpretation: \{(.*)\}", message).group(1)
        f = parse_formula(text)
        i = frozenset(interp.split())
        assert stable_via_loops(i, f, GraphKind.SP) != is_stable(i, (f,))
