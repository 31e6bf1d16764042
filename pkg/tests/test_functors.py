import pytest

from conftest import DEFAULT_CONSTRUCTIONS, failed
from hopfcyclic.exactlin import QQ, FinSpace, LinMap, kron, permutation_map
from hopfcyclic.exceptions import PrerequisiteMissing
from hopfcyclic.families import FAMILIES, build_family, family_spec
from hopfcyclic.fixtures import make_coefficient, make_datum
from hopfcyclic.functors import (
    DistributedMonads,
    Obj,
    build_generic,
    compare_with_formulas,
    iterate,
    opposite,
    realize,
    tensor_monad,
    twisting_law,
    validate_composite_morphism,
    validate_laws,
)
from hopfcyclic.paracyc import check_laws, transposed


def regular_inputs(H, family):
    spec = family_spec(family)
    datum = make_datum(H, spec.datum_kind, DEFAULT_CONSTRUCTIONS[spec.datum_kind])
    kind = spec.coefficient_kind
    construction = "dual-regular" if kind.startswith("contramodule") else "regular"
    return datum, make_coefficient(H, kind, construction)


@pytest.mark.integration
@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_realization_laws_hold(kc2, family):
    real = realize(family, kc2, *regular_inputs(kc2, family))
    report = validate_laws(real, composite=True)
    assert report.ok, [r.name for r in report.failures()]


@pytest.mark.integration
@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_tower_agrees_with_formulas(kc2, family):
    datum, coefficient = regular_inputs(kc2, family)
    real = realize(family, kc2, datum, coefficient)
    formulas = build_family(family, kc2, datum, coefficient, top=2)
    assert failed(compare_with_formulas(real, formulas)) == []


@pytest.mark.integration
@pytest.mark.parametrize("family", ["A1", "B5"])
def test_tower_agrees_with_formulas_degree_three(kc2, family):
    datum, coefficient = regular_inputs(kc2, family)
    real = realize(family, kc2, datum, coefficient)
    formulas = build_family(family, kc2, datum, coefficient, top=3)
    assert failed(compare_with_formulas(real, formulas)) == []


@pytest.mark.unit
class TestRealization:
    def test_generic_complex_satisfies_relations(self, kc2, kc2_a1):
        real = realize("A1", kc2, *kc2_a1)
        assert failed(check_laws(build_generic(real, 2))) == []

    def test_law_power_recursions_agree(self, kc2):
        real = realize("A1", kc2, *regular_inputs(kc2, "A1"))
        power = iterate(real, 2, real.coefficient)
        assert power.record.passed
        assert power.obj.dim == 2 ** 2 * real.coefficient.dim

    def test_law_power_zero_is_identity(self, kc2, kc2_a1):
        real = realize("A1", kc2, *kc2_a1)
        assert iterate(real, 0, real.coefficient).law.is_identity()
        with pytest.raises(ValueError):
            iterate(real, -1, real.coefficient)

    @pytest.mark.parametrize("family", ["A5", "A6", "B7", "B8"])
    def test_coring_families_over_convolution_algebra(self, kc2, family):
        datum, coefficient = regular_inputs(kc2, family)
        real = realize(family, kc2, datum, coefficient)
        assert real.algebra.name.endswith("*")
        formulas = build_family(family, kc2, datum, coefficient, top=2)
        assert failed(compare_with_formulas(real, formulas)) == []

    @pytest.mark.parametrize("family", ["A1", "B1", "B5"])
    def test_opposite_builds_transposed_complex(self, kc2, family):
        real = realize(family, kc2, *regular_inputs(kc2, family))
        op = opposite(real)
        assert op.variance != real.variance
        assert op.family == f"op({family})"
        assert build_generic(op, 2).equals(transposed(build_generic(real, 2)))
        report = validate_laws(op)
        assert report.ok, [r.name for r in report.failures()]

    def test_needs_ground_base(self, le_diag2):
        datum = make_datum(le_diag2, "module-algebra-left", "base")
        coefficient = make_coefficient(le_diag2, "comodule-left", "regular")
        with pytest.raises(PrerequisiteMissing):
            realize("A1", le_diag2, datum, coefficient)

    def test_negative_top(self, kc2, kc2_a1):
        with pytest.raises(ValueError):
            build_generic(realize("A1", kc2, *kc2_a1), -1)


@pytest.mark.unit
class TestCompositeMorphisms:
    @pytest.fixture
    def tensor_pair(self, kc3):
        A = kc3.algebra
        left, right = tensor_monad(A, "left"), tensor_monad(A, "left")
        swap = permutation_map([A.space, A.space], [1, 0], QQ)
        return A, DistributedMonads(left, right, twisting_law(left, right, swap))

    def test_identity_morphisms(self, tensor_pair):
        A, monads = tensor_pair

        def ident(X):
            return LinMap.identity(FinSpace.tensor(A.space, X.space), QQ)

        X = Obj(FinSpace.named("x", 2), QQ, name="X")
        report = validate_composite_morphism(monads, monads, ident, ident, [X])
        assert report.ok
        assert report.metadata == {"compatible": True, "morphism": True}

    def test_algebra_automorphism(self, tensor_pair):
        A, monads = tensor_pair
        # g -> g^2 on kC3
        sigma = LinMap.from_columns(A.space, A.space, QQ, [{0: 1}, {2: 1}, {1: 1}])

        def ident(X):
            return LinMap.identity(FinSpace.tensor(A.space, X.space), QQ)

        def twist(X):
            return kron(sigma, LinMap.identity(X.space, QQ))

        X = Obj(FinSpace.named("x", 1), QQ, name="X")
        report = validate_composite_morphism(monads, monads, ident, twist, [X])
        assert report.metadata["compatible"] is True
        assert report.metadata["morphism"] is True
        (verdict,) = report.find("compatibility verdict matches morphism verdict")
        assert verdict.passed
