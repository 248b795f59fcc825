"""Negated-external-support formulas, loop formulas, and loop oracles.

The loop-based stability checks here serve as independent oracles
against brute-force stability.  The "pnn" variant is sound and
complete; the "sp" variant is exposed deliberately because it is
unsound, and the workbench reproduces its failure mode.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .depgraph import GraphKind, graph_of, strongly_connected_subsets
from .errors import AtomsOutsideFormulaError, CapExceededError
from .formula import (
    BOT,
    And,
    Atom,
    AtomRef,
    Bottom,
    Formula,
    Implies,
    Or,
    atoms,
    conj,
    neg,
)
from .semantics import (
    DEFAULT_CAP,
    Interpretation,
    check_cap,
    interpretations_of,
    satisfies,
)


def _check_atoms(f: Formula, y: Iterable[Atom]) -> frozenset[Atom]:
    ys = frozenset(y)
    extra = ys - atoms(f)
    if extra:
        raise AtomsOutsideFormulaError(extra)
    return ys


def nes(f: Formula, y: Iterable[Atom]) -> Formula:
    """Negated external support of the atom set ``y`` in ``f``.

    Recursion: an atom becomes bottom when it is in ``y`` and stays
    itself otherwise; bottom stays bottom; conjunction and disjunction
    distribute; an implication F -> G becomes
    (NES(F) -> NES(G)) & (F -> G).
    """
    ys = _check_atoms(f, y)

    def build(g: Formula) -> Formula:
        if isinstance(g, AtomRef):
            return BOT if g.name in ys else g
        if isinstance(g, Bottom):
            return BOT
        if isinstance(g, And):
            return And(build(g.left), build(g.right))
        if isinstance(g, Or):
            return Or(build(g.left), build(g.right))
        assert isinstance(g, Implies)
        return And(
            Implies(build(g.antecedent), build(g.consequent)),
            Implies(g.antecedent, g.consequent),
        )

    return build(f)


def loop_formula(f: Formula, y: Iterable[Atom]) -> Formula:
    """Conjunction over A in ``y`` of A -> not NES(f, y), in atom order."""
    ys = _check_atoms(f, y)
    if not ys:
        raise ValueError("loop formula requires a nonempty atom set")
    support = neg(nes(f, ys))
    return conj(Implies(AtomRef(a), support) for a in sorted(ys))


def _nonempty_subsets(atoms_: frozenset[Atom]) -> Iterable[frozenset[Atom]]:
    ordered = sorted(atoms_)
    for k in range(1, len(ordered) + 1):
        for combo in itertools.combinations(ordered, k):
            yield frozenset(combo)


def stable_via_all_sets(
    i: Interpretation, f: Formula, cap: int = DEFAULT_CAP
) -> bool:
    """Stability via loop formulas for every nonempty atom subset of ``f``."""
    universe = atoms(f)
    _check_atoms(f, i)
    check_cap(len(universe), cap, "loop-formula enumeration")
    if not satisfies(i, f):
        return False
    return all(
        satisfies(i, loop_formula(f, ys))
        for ys in _nonempty_subsets(universe)
    )


def stable_via_loops(
    i: Interpretation,
    f: Formula,
    kind: GraphKind = GraphKind.PNN,
    cap: int = DEFAULT_CAP,
) -> bool:
    """Stability via loop formulas for the loops of the chosen graph only.

    Sound and complete for GraphKind.PNN.  For GraphKind.SP it is an
    intentionally unsound check, kept to exhibit the counterexample
    separating the two graphs.
    """
    _check_atoms(f, i)
    check_cap(len(atoms(f)), cap, "loop-formula enumeration")
    if not satisfies(i, f):
        return False
    loops = strongly_connected_subsets(graph_of((f,), kind))
    return all(satisfies(i, loop_formula(f, ys)) for ys in loops)


def is_tautology(f: Formula) -> bool:
    """Truth-table check over the atoms of ``f``."""
    return all(satisfies(i, f) for i in interpretations_of(atoms(f)))


def semantically_equivalent(f: Formula, g: Formula) -> bool:
    """Truth-table comparison over the union of both atom sets."""
    universe = atoms(f) | atoms(g)
    return all(
        satisfies(i, f) == satisfies(i, g)
        for i in interpretations_of(universe)
    )
