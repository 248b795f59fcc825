import pytest

from stablemodels import parse_formula, parse_theory

# Running examples used throughout the suite.
P1_TEXT = "p -> q. q & not r -> p."
P2_TEXT = "p -> q. ((q -> r) -> r) -> p."
P3_TEXT = "(p -> q) & (((q -> p) -> p) -> p)"
NESTED_TEXT = "((p -> q) -> r) -> s"


def mset(*names):
    return frozenset(names)


@pytest.fixture
def p1():
    return parse_theory(P1_TEXT)


@pytest.fixture
def p2():
    return parse_theory(P2_TEXT)


@pytest.fixture
def p3():
    return parse_formula(P3_TEXT)


@pytest.fixture
def nested():
    return parse_formula(NESTED_TEXT)
