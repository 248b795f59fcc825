"""Formula AST and syntactic occurrence analysis.

Formulas are built from atoms and bottom with the binary connectives
``&``, ``|`` and ``->``.  Negation and the biconditional are surface
sugar only: ``not F`` is stored as ``F -> bot`` and ``F <-> G`` as the
conjunction of both implications.  All analysis below runs on the
desugared tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

Atom = str
Path = tuple[int, ...]


class Formula:
    """Base class for AST nodes; all nodes are immutable and hashable."""

    __slots__ = ()


@dataclass(frozen=True)
class Bottom(Formula):
    __slots__ = ()


@dataclass(frozen=True)
class AtomRef(Formula):
    __slots__ = ("name",)
    name: Atom


@dataclass(frozen=True)
class And(Formula):
    __slots__ = ("left", "right")
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    __slots__ = ("left", "right")
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    __slots__ = ("antecedent", "consequent")
    antecedent: Formula
    consequent: Formula


BOT = Bottom()
#: Tautological body used when a bare atom is normalized to a rule.
TOP = Implies(BOT, BOT)

Theory = tuple[Formula, ...]


def neg(f: Formula) -> Formula:
    return Implies(f, BOT)


def conj(parts: Iterable[Formula]) -> Formula:
    """Left-associated conjunction; empty input yields the tautology."""
    parts = list(parts)
    if not parts:
        return TOP
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts: Iterable[Formula]) -> Formula:
    """Left-associated disjunction; empty input yields bottom."""
    parts = list(parts)
    if not parts:
        return BOT
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


@dataclass(frozen=True)
class OccurrenceContext:
    """Polarity data for one atom occurrence inside a host formula.

    ``antecedent_count`` is the number of implications whose antecedent
    contains the occurrence; ``negated`` is true when at least one of
    those implications has bottom as its consequent.
    """

    path: Path
    antecedent_count: int
    negated: bool

    @property
    def strictly_positive(self) -> bool:
        return self.antecedent_count == 0

    @property
    def positive(self) -> bool:
        return self.antecedent_count % 2 == 0

    @property
    def nonnegated(self) -> bool:
        return not self.negated


@dataclass(frozen=True)
class RuleOccurrence:
    """A strictly positive implication occurrence: Body -> Head."""

    body: Formula
    head: Formula
    path: Path


def subformula_at(f: Formula, path: Path) -> Formula:
    for idx in path:
        if isinstance(f, (And, Or)):
            f = f.left if idx == 0 else f.right
        elif isinstance(f, Implies):
            f = f.antecedent if idx == 0 else f.consequent
        else:
            raise IndexError(f"no child {idx} at leaf node")
    return f


def classify_occurrences(f: Formula) -> list[tuple[Atom, OccurrenceContext]]:
    """All atom occurrences of ``f`` in preorder, with their polarity."""
    out: list[tuple[Atom, OccurrenceContext]] = []

    def walk(g: Formula, path: Path, count: int, negated: bool) -> None:
        if isinstance(g, AtomRef):
            out.append((g.name, OccurrenceContext(path, count, negated)))
        elif isinstance(g, (And, Or)):
            walk(g.left, path + (0,), count, negated)
            walk(g.right, path + (1,), count, negated)
        elif isinstance(g, Implies):
            in_neg = negated or g.consequent == BOT
            walk(g.antecedent, path + (0,), count + 1, in_neg)
            walk(g.consequent, path + (1,), count, negated)

    walk(f, (), 0, False)
    return out


def atoms(f: Formula) -> frozenset[Atom]:
    """Atoms with at least one occurrence in ``f``."""
    if isinstance(f, AtomRef):
        return frozenset((f.name,))
    if isinstance(f, (And, Or)):
        return atoms(f.left) | atoms(f.right)
    if isinstance(f, Implies):
        return atoms(f.antecedent) | atoms(f.consequent)
    return frozenset()


def theory_atoms(t: Iterable[Formula]) -> frozenset[Atom]:
    out: frozenset[Atom] = frozenset()
    for f in t:
        out |= atoms(f)
    return out


def spos(f: Formula) -> frozenset[Atom]:
    """Atoms with at least one strictly positive occurrence in ``f``."""
    if isinstance(f, AtomRef):
        return frozenset((f.name,))
    if isinstance(f, (And, Or)):
        return spos(f.left) | spos(f.right)
    if isinstance(f, Implies):
        return spos(f.consequent)
    return frozenset()


def positive_nonnegated_atoms(f: Formula) -> frozenset[Atom]:
    """Atoms with at least one positive nonnegated occurrence in ``f``."""
    return frozenset(
        a
        for a, ctx in classify_occurrences(f)
        if ctx.positive and ctx.nonnegated
    )


def rules_of(f: Formula) -> list[RuleOccurrence]:
    """Strictly positive implication occurrences of ``f``, in preorder.

    The consequent of a strictly positive implication is itself strictly
    positive, so rules nested on the consequent side are included.
    """
    out: list[RuleOccurrence] = []

    def walk(g: Formula, path: Path) -> None:
        if isinstance(g, (And, Or)):
            walk(g.left, path + (0,))
            walk(g.right, path + (1,))
        elif isinstance(g, Implies):
            out.append(RuleOccurrence(g.antecedent, g.consequent, path))
            walk(g.consequent, path + (1,))

    walk(f, ())
    return out


def is_nondisjunctive_rule(f: Formula) -> bool:
    """True for ``Body -> atom`` and for bare atoms (facts)."""
    if isinstance(f, AtomRef):
        return True
    return isinstance(f, Implies) and isinstance(f.consequent, AtomRef)


def as_rule(f: Formula) -> Optional[tuple[Formula, Atom]]:
    """Normalize a nondisjunctive rule to (body, head atom).

    A bare atom gets the tautological body ``bot -> bot``.  Returns None
    for formulas that are not nondisjunctive rules.
    """
    if isinstance(f, AtomRef):
        return (TOP, f.name)
    if isinstance(f, Implies) and isinstance(f.consequent, AtomRef):
        return (f.antecedent, f.consequent.name)
    return None


def is_nondisjunctive_theory(t: Iterable[Formula]) -> bool:
    return all(is_nondisjunctive_rule(f) for f in t)


# ---------------------------------------------------------------------------
# Printing.  Precedence levels, tightest first: atoms/bot, unary negation,
# &, |, ->.  Implies(x, bot) is re-sugared to "not x".

_LV_IMPL = 0
_LV_OR = 1
_LV_AND = 2
_LV_NOT = 3
_LV_ATOM = 4


def _level(f: Formula) -> int:
    if isinstance(f, (AtomRef, Bottom)):
        return _LV_ATOM
    if isinstance(f, Implies):
        return _LV_NOT if f.consequent == BOT else _LV_IMPL
    if isinstance(f, And):
        return _LV_AND
    return _LV_OR


def _pp(f: Formula, min_level: int) -> str:
    if _level(f) < min_level:
        return "(" + _pp(f, _LV_IMPL) + ")"
    if isinstance(f, Bottom):
        return "bot"
    if isinstance(f, AtomRef):
        return f.name
    if isinstance(f, And):
        return _pp(f.left, _LV_AND) + " & " + _pp(f.right, _LV_AND + 1)
    if isinstance(f, Or):
        return _pp(f.left, _LV_OR) + " | " + _pp(f.right, _LV_OR + 1)
    assert isinstance(f, Implies)
    if f.consequent == BOT:
        return "not " + _pp(f.antecedent, _LV_NOT)
    return _pp(f.antecedent, _LV_OR) + " -> " + _pp(f.consequent, _LV_IMPL)


def print_formula(f: Formula) -> str:
    """Canonical text form; reparsing it yields a structurally equal AST."""
    return _pp(f, _LV_IMPL)


def print_theory(t: Iterable[Formula]) -> str:
    return "\n".join(print_formula(f) + "." for f in t)
