from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import matrices
from hopfcyclic.exactlin import (
    GROUND,
    QQ,
    Field,
    FinSpace,
    LinMap,
    at_slot,
    cokernel,
    flat_index,
    invert,
    kernel,
    kron,
    permutation_map,
    split_index,
)
from hopfcyclic.exceptions import FieldMismatch, ParseError, SingularMap

pytestmark = pytest.mark.unit


class TestField:
    def test_rational_parse_and_format(self):
        assert QQ.parse("1/2") == Fraction(1, 2)
        assert QQ.parse("-3/4") == Fraction(-3, 4)
        assert QQ.parse("-1") == -1
        assert QQ.parse(" 7 ") == 7
        assert QQ.format(Fraction(-2, 3)) == "-2/3"
        assert QQ.format(5) == "5"

    def test_prime_field_arithmetic(self):
        f7 = Field.gf(7)
        assert f7.parse("6") == 6
        assert f7.parse("0") == 0
        assert f7.reduce(-1) == 6
        assert f7.inv(3) == 5
        assert f7.describe() == "gf(7)"

    @pytest.mark.parametrize("raw", ["0.5", "1e3", "2/4", "4/2", "1/0", "1/-2", "+1", "0.5x", "", "one"])
    def test_inexact_rational_strings(self, raw):
        with pytest.raises(ParseError) as info:
            QQ.parse(raw)
        assert info.value.token == raw

    @pytest.mark.parametrize("raw", ["9", "7", "-1", "1/2"])
    def test_residues_out_of_range(self, raw):
        with pytest.raises(ParseError):
            Field.gf(7).parse(raw)

    @given(st.fractions(max_denominator=50))
    def test_format_parses_back(self, value):
        assert QQ.parse(QQ.format(value)) == QQ.reduce(value)

    def test_gf_needs_prime(self):
        with pytest.raises(ValueError):
            Field.gf(6)


class TestFinSpace:
    def test_tensor_is_row_major(self):
        a = FinSpace(("1", "g"))
        b = FinSpace(("u", "v", "w"))
        ab = FinSpace.tensor(a, b)
        assert ab.dim == 6
        assert ab.labels[:3] == ("1|u", "1|v", "1|w")
        assert ab.index("g|v") == 4

    def test_empty_tensor_is_ground(self):
        assert FinSpace.tensor() == GROUND

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            FinSpace(("a", "a"))

    def test_index_helpers(self):
        dims = [2, 3, 4]
        for flat in range(24):
            assert flat_index(split_index(flat, dims), dims) == flat


class TestLinMap:
    def test_compose_and_identity(self):
        X = FinSpace.named("x", 2)
        f = LinMap.from_dense(X, X, QQ, [[1, 2], [0, 1]])
        assert (f @ LinMap.identity(X, QQ)) == f
        assert (f @ f).to_dense() == [[1, 4], [0, 1]]

    def test_field_mismatch(self):
        X = FinSpace.named("x", 1)
        with pytest.raises(FieldMismatch):
            LinMap.identity(X, QQ) @ LinMap.identity(X, Field.gf(3))

    def test_first_difference_names_column(self):
        X = FinSpace(("a", "b"))
        f = LinMap.identity(X, QQ)
        g = LinMap.from_dense(X, X, QQ, [[1, 0], [0, 2]])
        assert f.first_difference(g) == "b"
        assert f.first_difference(f) is None

    def test_negative_power_inverts(self):
        X = FinSpace.named("x", 2)
        f = LinMap.from_dense(X, X, QQ, [[0, 1], [1, 1]])
        assert (f.power(3) @ f.power(-3)).is_identity()

    def test_singular_inverse(self):
        X = FinSpace.named("x", 2)
        with pytest.raises(SingularMap) as info:
            invert(LinMap.from_dense(X, X, QQ, [[1, 2], [2, 4]]))
        assert info.value.rank == 1

    def test_kron_left_factor_slowest(self):
        X = FinSpace(("a", "b"))
        swap = LinMap.from_dense(X, X, QQ, [[0, 1], [1, 0]])
        k = kron(swap, LinMap.identity(X, QQ))
        assert k.domain.labels == ("a|a", "a|b", "b|a", "b|b")
        assert k.apply({0: 1}) == {2: 1}

    def test_permutation_and_slot(self):
        A, B = FinSpace(("a0", "a1")), FinSpace(("b0", "b1", "b2"))
        flip = permutation_map([A, B], [1, 0], QQ)
        assert flip.codomain.labels[1] == "b0|a1"
        back = permutation_map([B, A], [1, 0], QQ)
        assert (back @ flip).is_identity()
        scale = LinMap.identity(B, QQ).scale(2)
        lifted = at_slot([A, B], 1, scale)
        assert lifted == kron(LinMap.identity(A, QQ), scale)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rank_nullity(f):
    space, inclusion = kernel(f)
    assert space.dim + f.rank() == f.domain.dim
    assert (f @ inclusion).is_zero()


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_cokernel_projection_kills_image(f):
    space, projection, section = cokernel(f)
    assert space.dim == f.codomain.dim - f.rank()
    assert (projection @ f).is_zero()
    assert (projection @ section).is_identity()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: matrices(rows=n, cols=n)))
def test_inverse_is_two_sided(f):
    try:
        g = invert(f)
    except SingularMap:
        assert f.rank() < f.domain.dim
        return
    assert (g @ f).is_identity()
    assert (f @ g).is_identity()


@settings(max_examples=30, deadline=None)
@given(matrices(max_dim=3), matrices(max_dim=3))
def test_kron_is_multiplicative(f, g):
    ft = f.transpose()
    gt = g.transpose()
    assert kron(ft, gt) @ kron(f, g) == kron(ft @ f, gt @ g)
