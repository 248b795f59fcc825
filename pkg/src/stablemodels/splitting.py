"""Splitting a conjunction into choice-augmented parts.

For a partition {P, Q} of the atoms of F & G, three conditions are
checked: strictly positive atoms of F lie in P, strictly positive atoms
of G lie in Q, and no strongly connected component of the dependency
graph of F & G straddles the partition.  Under the pnn graph the
conditions guarantee that the stable models of F & G are exactly the
interpretations stable for both augmented parts; under the sp graph
they do not, and the report exposes that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .depgraph import DepGraph, GraphKind, graph_of, sccs
from .errors import NotAPartitionError
from .formula import (
    And,
    Atom,
    AtomRef,
    Formula,
    Or,
    atoms,
    neg,
    spos,
)
from .semantics import (
    DEFAULT_CAP,
    Interpretation,
    check_cap,
    interpretations_of,
    is_stable,
)


def choice_augment(f: Formula, xs: Iterable[Atom]) -> Formula:
    """Conjoin ``f`` with a choice A | not A for each atom, in atom order."""
    out = f
    for a in sorted(frozenset(xs)):
        ref = AtomRef(a)
        out = And(out, Or(ref, neg(ref)))
    return out


@dataclass(frozen=True)
class SplitReport:
    kind: GraphKind
    cond_i: bool
    cond_i_offenders: frozenset[Atom]
    cond_ii: bool
    cond_ii_offenders: frozenset[Atom]
    cond_iii: bool
    cond_iii_offender: Optional[frozenset[Atom]]
    equivalence_holds: bool
    stable_whole: list[Interpretation]
    stable_part_f: list[Interpretation]
    stable_part_g: list[Interpretation]

    @property
    def conditions_pass(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii


def check_split(
    f: Formula,
    g: Formula,
    p: Iterable[Atom],
    q: Iterable[Atom],
    kind: GraphKind = GraphKind.PNN,
    cap: int = DEFAULT_CAP,
) -> SplitReport:
    """Evaluate the three splitting conditions and the stable-model equivalence.

    All three enumerations run over the full atom universe of F & G, so
    part models are comparable as sets.
    """
    ps = frozenset(p)
    qs = frozenset(q)
    whole = And(f, g)
    universe = atoms(whole)
    if ps | qs != universe or ps & qs:
        raise NotAPartitionError(
            "the two atom sets must partition the atoms of the conjunction"
        )
    check_cap(len(universe), cap)

    i_off = spos(f) - ps
    ii_off = spos(g) - qs
    iii_off = None
    for comp in sccs(graph_of((whole,), kind)):
        if not (comp <= ps or comp <= qs):
            iii_off = comp
            break

    part_f = choice_augment(f, qs)
    part_g = choice_augment(g, ps)
    stable_whole = []
    stable_both = []
    stable_part_f = []
    stable_part_g = []
    for i in interpretations_of(universe):
        in_f = is_stable(i, (part_f,))
        in_g = is_stable(i, (part_g,))
        if in_f:
            stable_part_f.append(i)
        if in_g:
            stable_part_g.append(i)
        if in_f and in_g:
            stable_both.append(i)
        if is_stable(i, (whole,)):
            stable_whole.append(i)

    return SplitReport(
        kind=kind,
        cond_i=not i_off,
        cond_i_offenders=i_off,
        cond_ii=not ii_off,
        cond_ii_offenders=ii_off,
        cond_iii=iii_off is None,
        cond_iii_offender=iii_off,
        equivalence_holds=stable_whole == stable_both,
        stable_whole=stable_whole,
        stable_part_f=stable_part_f,
        stable_part_g=stable_part_g,
    )
