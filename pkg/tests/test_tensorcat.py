import pytest

from conftest import failed
from hopfcyclic.exactlin import GROUND, QQ, FinSpace, LinMap, invert
from hopfcyclic.exceptions import DoesNotDescend, HopfCyclicError
from hopfcyclic.tensorcat import (
    BaseAlgebra,
    Bimodule,
    QuotientSpace,
    SubSpace,
    associator,
    chain_tensor,
    curry,
    cut_comparison,
    cyclic_tensor,
    hom_space,
    induced_map,
    tensor_over_L,
    unit_isomorphisms,
)

pytestmark = pytest.mark.unit


@pytest.fixture(scope="module")
def diag2():
    return BaseAlgebra.diagonal(2)


@pytest.fixture(scope="module")
def m2():
    return BaseAlgebra.matrix(2)


class TestBaseAlgebra:
    @pytest.mark.parametrize("make", [
        BaseAlgebra.ground,
        lambda: BaseAlgebra.diagonal(3),
        lambda: BaseAlgebra.matrix(2),
        BaseAlgebra.upper_triangular,
        lambda: BaseAlgebra.diagonal(2).enveloping(),
        lambda: BaseAlgebra.upper_triangular().opposite(),
    ])
    def test_shipped_algebras_are_associative_and_unital(self, make):
        assert failed(make().validate()) == []

    def test_matrix_units_multiply(self, m2):
        # e01 * e10 = e00
        assert m2.multiply({1: 1}, {2: 1}) == {0: 1}
        assert m2.multiply({2: 1}, {2: 1}) == {}

    def test_enveloping_dimension(self, diag2):
        assert diag2.enveloping().dim == 4


class TestBimodule:
    def test_regular_bimodule_validates(self, m2):
        assert failed(Bimodule.regular(m2).validate()) == []

    def test_plain_needs_ground_base(self, diag2):
        with pytest.raises(HopfCyclicError):
            Bimodule.plain(diag2, FinSpace.named("v", 2))

    def test_plain_over_ground(self):
        M = Bimodule.plain(BaseAlgebra.ground(), FinSpace.named("v", 3), "V")
        assert failed(M.validate()) == []


class TestTensorOverL:
    def test_chain_tensor_over_ground_is_plain_tensor(self):
        k = BaseAlgebra.ground()
        M = Bimodule.plain(k, FinSpace.named("v", 2))
        N = Bimodule.plain(k, FinSpace.named("w", 3))
        assert chain_tensor([M, N]).space.dim == 6

    def test_regular_tensor_regular_is_regular(self, diag2, m2):
        for L in (diag2, m2):
            R = Bimodule.regular(L)
            product, quotient = tensor_over_L(R, R)
            assert product.dim == L.dim
            assert failed(product.validate()) == []
            assert quotient.ambient.dim == L.dim ** 2

    def test_unit_isomorphisms_are_inverse(self, m2):
        act_left, from_left, act_right, from_right = unit_isomorphisms(Bimodule.regular(m2))
        assert (act_left @ from_left).is_identity()
        assert (from_left @ act_left).is_identity()
        assert (act_right @ from_right).is_identity()
        assert (from_right @ act_right).is_identity()

    def test_associator_is_invertible(self, diag2):
        R = Bimodule.regular(diag2)
        a = associator(R, R, R)
        assert a.domain.dim == a.codomain.dim == diag2.dim
        invert(a)

    def test_empty_chain_is_rejected(self):
        with pytest.raises(ValueError):
            chain_tensor([])


class TestCyclicTensor:
    def test_empty_cyclic_tensor_is_commutator_quotient(self, diag2, m2):
        assert cyclic_tensor([], base=diag2).space.dim == 2
        assert cyclic_tensor([], base=m2).space.dim == 1
        assert cyclic_tensor([], base=BaseAlgebra.ground()).space.dim == 1

    def test_empty_cyclic_tensor_needs_base(self):
        with pytest.raises(ValueError):
            cyclic_tensor([])

    def test_single_regular_factor(self, m2):
        assert cyclic_tensor([Bimodule.regular(m2)]).space.dim == 1

    def test_cuts_are_isomorphic(self, m2):
        R = Bimodule.regular(m2)
        comparison = cut_comparison([R, R, R], 0, 1)
        assert comparison.domain.dim == comparison.codomain.dim


class TestInducedMap:
    def setup_method(self):
        self.X = FinSpace(("a", "b"))
        relation = LinMap.from_columns(GROUND, self.X, QQ, [{0: 1, 1: -1}])
        self.quotient = QuotientSpace.of_relations(relation)

    def test_descending_map(self):
        total = LinMap.from_dense(self.X, GROUND, QQ, [[1, 1]])
        lowered = induced_map(total, source=self.quotient)
        assert lowered.to_dense() == [[1]]

    def test_non_descending_map_names_witness(self):
        first = LinMap.from_dense(self.X, GROUND, QQ, [[1, 0]])
        with pytest.raises(DoesNotDescend) as info:
            induced_map(first, source=self.quotient)
        assert info.value.witness in self.X.labels

    def test_restriction_to_subspace(self):
        # the subspace a + b = 0
        sub = SubSpace.kernel_of(LinMap.from_dense(self.X, GROUND, QQ, [[1, 1]]))
        negate = LinMap.identity(self.X, QQ).scale(-1)
        assert induced_map(negate, source=sub, target=sub).to_dense() == [[-1]]
        swap_first = LinMap.from_dense(self.X, self.X, QQ, [[1, 0], [0, 0]])
        with pytest.raises(DoesNotDescend):
            induced_map(swap_first, source=sub, target=sub)


class TestHomSpace:
    def test_right_linear_endomorphisms_of_regular(self, diag2, m2):
        for L in (diag2, m2):
            R = Bimodule.regular(L)
            hom = hom_space(R, R, "right")
            assert hom.space.dim == L.dim
            assert failed(hom.as_bimodule().validate()) == []

    def test_unknown_side(self, diag2):
        R = Bimodule.regular(diag2)
        with pytest.raises(ValueError):
            hom_space(R, R, "middle")

    @pytest.mark.parametrize("side", ["right", "left"])
    def test_curry_round_trip(self, diag2, side):
        R = Bimodule.regular(diag2)
        to_outer, to_flat = curry(R, R, R, side)
        assert (to_flat @ to_outer).is_identity()
        assert (to_outer @ to_flat).is_identity()
