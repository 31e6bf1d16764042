"""Shared fixtures for the hopfcyclic test suite."""

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hopfcyclic.config import EngineConfig
from hopfcyclic.exactlin import QQ, FinSpace, LinMap
from hopfcyclic.fixtures import builtin, make_coefficient, make_datum


@pytest.fixture(scope="session")
def kc2():
    return builtin("kc2")


@pytest.fixture(scope="session")
def kc3():
    return builtin("kc3")


@pytest.fixture(scope="session")
def h4():
    return builtin("h4")


@pytest.fixture(scope="session")
def le_diag2():
    return builtin("le-diag2")


@pytest.fixture
def config():
    return EngineConfig()


@pytest.fixture(scope="session")
def kc2_a1(kc2):
    """Adjoint module algebra and trivial left comodule over kC2."""
    return (make_datum(kc2, "module-algebra-left", "adjoint"),
            make_coefficient(kc2, "comodule-left", "trivial"))


@pytest.fixture(scope="session")
def h4_a1(h4):
    return (make_datum(h4, "module-algebra-left", "adjoint"),
            make_coefficient(h4, "comodule-left", "trivial"))


# Kinds a family's default datum and coefficient are built with on a group algebra.
DEFAULT_CONSTRUCTIONS = {
    "module-algebra-left": "adjoint",
    "comodule-algebra-right": "regular",
    "module-coring-right": "regular",
    "comodule-coring-left": "adjoint",
}


def family_inputs(H, spec, coefficient="trivial"):
    datum = make_datum(H, spec.datum_kind, DEFAULT_CONSTRUCTIONS[spec.datum_kind])
    return datum, make_coefficient(H, spec.coefficient_kind, coefficient)


def failed(records):
    return [r for r in records if not r.passed]


# Hypothesis strategies

scalars = st.fractions(min_value=-5, max_value=5, max_denominator=4).map(
    lambda f: f.numerator if f.denominator == 1 else Fraction(f))


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=4):
    m = draw(st.integers(1, max_dim)) if rows is None else rows
    n = draw(st.integers(1, max_dim)) if cols is None else cols
    dense = [[draw(scalars) for _ in range(n)] for _ in range(m)]
    return LinMap.from_dense(FinSpace.named("x", n), FinSpace.named("y", m), QQ, dense)
