import pytest

from conftest import DEFAULT_CONSTRUCTIONS, failed
from hopfcyclic.config import EngineConfig
from hopfcyclic.exactlin import LinMap
from hopfcyclic.exceptions import DimensionGuard, KindMismatch
from hopfcyclic.families import FAMILIES, build_family, family_spec
from hopfcyclic.fixtures import builtin, make_coefficient, make_datum
from hopfcyclic.paracyc import check_laws, is_strictly_cyclic, t_order_probe


def coefficient_for(H, kind):
    construction = "dual-regular" if kind.startswith("contramodule") else "regular"
    return make_coefficient(H, kind, construction)


def regular_inputs(H, family):
    spec = family_spec(family)
    datum = make_datum(H, spec.datum_kind, DEFAULT_CONSTRUCTIONS[spec.datum_kind])
    return datum, coefficient_for(H, spec.coefficient_kind)


@pytest.mark.integration
@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_every_family_satisfies_its_relations_over_kc2(kc2, family):
    datum, coefficient = regular_inputs(kc2, family)
    complex_ = build_family(family, kc2, datum, coefficient, top=3)
    assert complex_.variance == FAMILIES[family].variance
    assert complex_.dims == [2 ** (n + 1) * 2 for n in range(4)]
    assert failed(check_laws(complex_)) == []


@pytest.mark.integration
@pytest.mark.parametrize("family", ["A1", "A2", "B5", "B6"])
def test_sweedler_families(h4, family):
    datum, coefficient = regular_inputs(h4, family)
    complex_ = build_family(family, h4, datum, coefficient, top=2)
    assert failed(check_laws(complex_)) == []


@pytest.mark.slow
@pytest.mark.parametrize("family", ["A1", "B5"])
def test_sweedler_families_degree_three(h4, family):
    datum, coefficient = regular_inputs(h4, family)
    complex_ = build_family(family, h4, datum, coefficient, top=3)
    assert complex_.dims[3] == 4 ** 4 * 4
    assert failed(check_laws(complex_)) == []


@pytest.mark.integration
def test_a1_over_enveloping_bialgebroid(le_diag2):
    datum = make_datum(le_diag2, "module-algebra-left", "base")
    coefficient = make_coefficient(le_diag2, "comodule-left", "regular")
    complex_ = build_family("A1", le_diag2, datum, coefficient, top=2)
    assert failed(check_laws(complex_)) == []


@pytest.mark.slow
def test_a1_over_enveloping_bialgebroid_degree_three(le_diag2):
    datum = make_datum(le_diag2, "module-algebra-left", "base")
    coefficient = make_coefficient(le_diag2, "comodule-left", "regular")
    complex_ = build_family("A1", le_diag2, datum, coefficient, top=3)
    assert complex_.top == 3
    assert failed(check_laws(complex_)) == []


@pytest.mark.unit
class TestClosedFormulas:
    def test_a1_with_trivial_action_rotates(self, kc2):
        datum = make_datum(kc2, "module-algebra-left", "trivial")
        coefficient = make_coefficient(kc2, "comodule-left", "regular")
        complex_ = build_family("A1", kc2, datum, coefficient, top=2)
        t = complex_.t(2)
        space = complex_.spaces[2]

        def rotate(j):
            *a, m = space.labels[j].split("|")
            yield space.index("|".join(a[1:] + a[:1] + [m])), 1

        assert t == LinMap.from_rule(space, space, kc2.field, rotate)

    def test_trivial_data_gives_identities(self):
        k = builtin("trivial")
        datum = make_datum(k, "module-algebra-left", "ground")
        coefficient = make_coefficient(k, "comodule-left", "trivial")
        complex_ = build_family("A1", k, datum, coefficient, top=2)
        assert complex_.dims == [1, 1, 1]
        assert all(op.is_identity() for op in complex_.operators())

    def test_a1_order_over_kc2(self, kc2):
        datum, coefficient = regular_inputs(kc2, "A1")
        orders = t_order_probe(build_family("A1", kc2, datum, coefficient, top=1))
        assert orders[1] is not None and 4 % orders[1] == 0

    def test_sweedler_is_para_not_cyclic(self, h4):
        datum, coefficient = regular_inputs(h4, "A1")
        complex_ = build_family("A1", h4, datum, coefficient, top=1)
        assert failed(check_laws(complex_)) == []
        assert not is_strictly_cyclic(complex_)


@pytest.mark.unit
class TestInputChecks:
    def test_unknown_family(self):
        with pytest.raises(KindMismatch):
            family_spec("C1")

    def test_wrong_coefficient_kind(self, kc2):
        datum = make_datum(kc2, "module-coring-right", "regular")
        coefficient = make_coefficient(kc2, "comodule-left", "regular")
        with pytest.raises(KindMismatch) as info:
            build_family("A3", kc2, datum, coefficient, top=1)
        assert info.value.expected == "contramodule-left"

    def test_kinds_checked_over_nontrivial_base(self, le_diag2):
        datum = make_datum(le_diag2, "module-algebra-left", "base")
        coefficient = make_coefficient(le_diag2, "comodule-left", "regular")
        with pytest.raises(KindMismatch):
            build_family("B5", le_diag2, datum, coefficient, top=1)

    def test_dimension_guard(self, kc2):
        datum, coefficient = regular_inputs(kc2, "A1")
        with pytest.raises(DimensionGuard):
            build_family("A1", kc2, datum, coefficient, top=2, config=EngineConfig(dimension_guard=10))

    def test_negative_degree(self, kc2):
        datum, coefficient = regular_inputs(kc2, "A1")
        with pytest.raises(ValueError):
            build_family("A1", kc2, datum, coefficient, top=-1)
