"""Seeded random generator and refutation-seeking property checks.

The generator is deliberately simple and fully documented so runs are
reproducible: it draws from ``random.Random(seed)`` (Mersenne Twister,
portable across platforms), chooses connectives uniformly, takes atoms
from the pool a, b, c, d truncated to ``max_atoms``, and bounds the
tree depth by ``max_depth``.  Leaves are an atom (uniform over the
pool) or, with probability 1/(pool size + 1), bottom.

Each property check returns None on success or a violation message; the
counterexample always includes the generated theory text verbatim, so
it can be fed back through the matching CLI subcommand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .depgraph import GraphKind, g_pnn, g_sp, graph_of, has_cycle, subgraph_of
from .formula import (
    And,
    AtomRef,
    BOT,
    Formula,
    Implies,
    Or,
    Theory,
    atoms,
    conj,
    is_nondisjunctive_theory,
    print_formula,
    print_theory,
    spos,
    theory_atoms,
)
from .loopformulas import stable_via_all_sets, stable_via_loops
from .semantics import (
    classical_models,
    completion,
    interpretations_of,
    is_stable,
    pointwise_stable_models,
    reduct,
    satisfies,
    stable_models,
    supported_models,
)
from .splitting import check_split

ATOM_POOL = ("a", "b", "c", "d")

MAX_FUZZ_ATOMS = 4
MAX_FUZZ_DEPTH = 4


def random_formula(rng: random.Random, pool: tuple[str, ...], depth: int) -> Formula:
    if depth <= 0:
        leaves = list(pool) + ["bot"]
        pick = rng.choice(leaves)
        return BOT if pick == "bot" else AtomRef(pick)
    node = rng.choice(("atom", "bot", "not", "and", "or", "implies"))
    if node == "atom":
        return AtomRef(rng.choice(pool))
    if node == "bot":
        return BOT
    if node == "not":
        return Implies(random_formula(rng, pool, depth - 1), BOT)
    left = random_formula(rng, pool, depth - 1)
    right = random_formula(rng, pool, depth - 1)
    if node == "and":
        return And(left, right)
    if node == "or":
        return Or(left, right)
    return Implies(left, right)


def random_theory(
    rng: random.Random, pool: tuple[str, ...], depth: int
) -> Theory:
    return tuple(
        random_formula(rng, pool, depth)
        for _ in range(rng.randint(1, 3))
    )


def random_nondisjunctive_theory(
    rng: random.Random, pool: tuple[str, ...], depth: int
) -> Theory:
    return tuple(
        Implies(random_formula(rng, pool, depth - 1), AtomRef(rng.choice(pool)))
        for _ in range(rng.randint(1, 3))
    )


def _sample_until(rng, make, accept, limit: int = 10000):
    for _ in range(limit):
        candidate = make(rng)
        if accept(candidate):
            return candidate
    raise RuntimeError("rejection sampling failed to find an acceptable case")


@dataclass
class FuzzResult:
    property_name: str
    seed: int
    checked: int
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def _fmt_models(models) -> str:
    return ", ".join(
        "{" + " ".join(sorted(m)) + "}" if m else "{}" for m in models
    ) or "(none)"


def _check_theorem1(rng: random.Random, pool, depth) -> Optional[str]:
    t = _sample_until(
        rng,
        lambda r: random_nondisjunctive_theory(r, pool, depth),
        lambda t: not has_cycle(g_sp(t)),
    )
    sup = supported_models(t)
    st = stable_models(t)
    if sup != st:
        return (
            "supported and stable models differ for a nondisjunctive theory "
            f"with acyclic sp graph\ntheory:\n{print_theory(t)}\n"
            f"supported: {_fmt_models(sup)}\nstable: {_fmt_models(st)}"
        )
    return None


def _check_theorem2(rng: random.Random, pool, depth) -> Optional[str]:
    t = _sample_until(
        rng,
        lambda r: random_theory(r, pool, depth),
        lambda t: not has_cycle(g_sp(t)),
    )
    pw = pointwise_stable_models(t)
    st = stable_models(t)
    if pw != st:
        return (
            "pointwise stable and stable models differ for a theory with "
            f"acyclic sp graph\ntheory:\n{print_theory(t)}\n"
            f"pointwise stable: {_fmt_models(pw)}\nstable: {_fmt_models(st)}"
        )
    return None


def _adversarial_loop_formula(rng: random.Random, pool) -> Formula:
    # The (x -> y) & (((y -> x) -> x) -> x) shape: its sp graph misses
    # the (x, y) edge, so sp-based loop checking wrongly accepts {x, y}.
    x = rng.choice(pool)
    y = rng.choice([a for a in pool if a != x] or [x])
    xr, yr = AtomRef(x), AtomRef(y)
    return And(Implies(xr, yr), Implies(Implies(Implies(yr, xr), xr), xr))


def _check_loop_oracle(kind: GraphKind):
    def check(rng: random.Random, pool, depth) -> Optional[str]:
        # One case in eight uses the adversarial template so the sp
        # negative control reliably trips; the pnn oracle must survive it.
        if len(pool) >= 2 and rng.random() < 0.125:
            f = _adversarial_loop_formula(rng, pool)
        else:
            f = random_formula(rng, pool, depth)
        for i in interpretations_of(atoms(f)):
            brute = is_stable(i, (f,))
            all_sets = stable_via_all_sets(i, f)
            loops = stable_via_loops(i, f, kind)
            if not (brute == all_sets == loops):
                return (
                    f"loop oracle ({kind.value}) disagrees with brute force\n"
                    f"theory:\n{print_formula(f)}.\n"
                    f"interpretation: {_fmt_models([i])}\n"
                    f"brute-force stable: {brute}, all-sets: {all_sets}, "
                    f"{kind.value}-loops: {loops}"
                )
        return None

    return check


def _check_splitting(rng: random.Random, pool, depth) -> Optional[str]:
    def make(r: random.Random):
        f = random_formula(r, pool, depth)
        g = random_formula(r, pool, depth)
        universe = sorted(atoms(And(f, g)))
        ps = frozenset(a for a in universe if r.random() < 0.5)
        qs = frozenset(universe) - ps
        return f, g, ps, qs

    def accept(case) -> bool:
        f, g, ps, qs = case
        if not (ps | qs):
            return False
        report = check_split(f, g, ps, qs, GraphKind.PNN)
        return report.conditions_pass

    f, g, ps, qs = _sample_until(rng, make, accept)
    report = check_split(f, g, ps, qs, GraphKind.PNN)
    if not report.equivalence_holds:
        return (
            "splitting equivalence failed although pnn conditions pass\n"
            f"theory:\n{print_formula(And(f, g))}.\n"
            f"f: {print_formula(f)}\ng: {print_formula(g)}\n"
            f"P: {sorted(ps)}  Q: {sorted(qs)}\n"
            f"stable whole: {_fmt_models(report.stable_whole)}"
        )
    return None


def _check_reduct_lemma(rng: random.Random, pool, depth) -> Optional[str]:
    f = random_formula(rng, pool, depth)
    for i in interpretations_of(atoms(f)):
        red = reduct(f, i)
        if satisfies(i, red) != satisfies(i, f):
            return (
                "reduct lemma violated\ntheory:\n"
                f"{print_formula(f)}.\ninterpretation: {_fmt_models([i])}"
            )
        if not atoms(red) <= i:
            return (
                "reduct mentions atoms outside the interpretation\n"
                f"theory:\n{print_formula(f)}.\n"
                f"interpretation: {_fmt_models([i])}\n"
                f"reduct: {print_formula(red)}"
            )
    return None


def _check_lemma1(rng: random.Random, pool, depth) -> Optional[str]:
    f = random_formula(rng, pool, depth)
    universe = atoms(f)
    for i in interpretations_of(universe):
        if not satisfies(i, f):
            continue
        red = reduct(f, i)
        base = spos(red)
        for j in interpretations_of(universe):
            if base <= j and not satisfies(j, red):
                return (
                    "supersets of the strictly positive atoms of the reduct "
                    "must satisfy it\ntheory:\n"
                    f"{print_formula(f)}.\n"
                    f"I: {_fmt_models([i])}  J: {_fmt_models([j])}\n"
                    f"reduct: {print_formula(red)}"
                )
    return None


def _check_sp_subgraph(rng: random.Random, pool, depth) -> Optional[str]:
    t = random_theory(rng, pool, depth)
    if not subgraph_of(g_sp(t), g_pnn(t)):
        return (
            "sp graph is not a subgraph of the pnn graph\ntheory:\n"
            f"{print_theory(t)}"
        )
    return None


def _check_chain(rng: random.Random, pool, depth) -> Optional[str]:
    t = random_theory(rng, pool, depth)
    text = print_theory(t)
    cls = set(map(frozenset, classical_models(t)))
    st = set(map(frozenset, stable_models(t)))
    pw = set(map(frozenset, pointwise_stable_models(t)))
    if not st <= pw:
        return f"a stable model is not pointwise stable\ntheory:\n{text}"
    if not pw <= cls:
        return f"a pointwise stable model is not classical\ntheory:\n{text}"
    if is_nondisjunctive_theory(t):
        sup = set(map(frozenset, supported_models(t)))
        if not st <= sup:
            return f"a stable model is not supported\ntheory:\n{text}"
        comp = set(
            map(frozenset, classical_models(completion(t), theory_atoms(t)))
        )
        if comp != sup:
            return (
                "completion models differ from supported models\ntheory:\n"
                f"{text}"
            )
    return None


Check = Callable[[random.Random, tuple[str, ...], int], Optional[str]]

PROPERTIES: dict[str, Check] = {
    "theorem1": _check_theorem1,
    "theorem2": _check_theorem2,
    "loop-oracle": _check_loop_oracle(GraphKind.PNN),
    # Intentionally unsound negative control: loops taken from the sp
    # graph miss counterexamples of the (p -> q) & (((q -> p) -> p) -> p)
    # shape, so this property is expected to report violations.
    "loop-oracle-sp": _check_loop_oracle(GraphKind.SP),
    "splitting": _check_splitting,
    "reduct-lemma": _check_reduct_lemma,
    "lemma1": _check_lemma1,
    "sp-subgraph": _check_sp_subgraph,
    "chain": _check_chain,
}


def run_fuzz(
    property_name: str,
    seed: int,
    count: int,
    max_atoms: int = MAX_FUZZ_ATOMS,
    max_depth: int = MAX_FUZZ_DEPTH,
) -> FuzzResult:
    if property_name not in PROPERTIES:
        known = ", ".join(sorted(PROPERTIES))
        raise ValueError(f"unknown property {property_name!r}; known: {known}")
    if not 1 <= max_atoms <= MAX_FUZZ_ATOMS:
        raise ValueError(f"max_atoms must be between 1 and {MAX_FUZZ_ATOMS}")
    if not 1 <= max_depth <= MAX_FUZZ_DEPTH:
        raise ValueError(f"max_depth must be between 1 and {MAX_FUZZ_DEPTH}")
    check = PROPERTIES[property_name]
    pool = ATOM_POOL[:max_atoms]
    rng = random.Random(seed)
    violations: list[str] = []
    for case in range(count):
        message = check(rng, pool, max_depth)
        if message is not None:
            violations.append(f"case {case}: {message}")
    return FuzzResult(property_name, seed, count, violations)
