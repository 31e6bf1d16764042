from dataclasses import replace

import pytest

from conftest import failed
from hopfcyclic.exceptions import KindMismatch, MissingInverse, PrerequisiteMissing
from hopfcyclic.fixtures import BUILTINS, builtin, make_coefficient, make_datum, mutate, mutate_coefficient
from hopfcyclic.hopfdata import (
    antipode_order,
    apply_I,
    validate,
    validate_coefficient,
    validate_datum,
    validate_takeuchi,
)

pytestmark = pytest.mark.unit


def find(records, suffix):
    return [r for r in records if r.name.endswith(suffix)]


@pytest.mark.parametrize("name", sorted(set(BUILTINS) - {"le-t2-flipped"}))
def test_shipped_presentations_validate(name):
    assert failed(validate(builtin(name))) == []


def test_flipped_comultiplication_leaves_takeuchi_product():
    H = builtin("le-t2-flipped")
    takeuchi = validate_takeuchi(H.left)
    assert [r.passed for r in takeuchi] == [False]


def test_takeuchi_over_commutative_base(le_diag2):
    assert all(r.passed for r in validate_takeuchi(le_diag2.left))


def test_takeuchi_vacuous_over_ground(kc2):
    (record,) = validate_takeuchi(kc2.left)
    assert record.passed and "vacuous" in record.detail


def test_bialgebroid_presentation_agrees_with_bialgebra_checks(kc2):
    records = validate(kc2.left)
    assert failed(records) == []
    assert find(records, "coassociativity")


class TestMutations:
    def test_coassociativity_witness(self, kc2):
        records = validate(mutate(kc2, "coassociativity"))
        (record,) = find(records, ": coassociativity")
        assert not record.passed
        assert record.witness == "g"

    def test_antipode(self, h4):
        bad = failed(validate(mutate(h4, "antipode")))
        assert {r.name.split(": ")[-1] for r in bad} >= {"antipode left", "antipode right"}

    def test_counit(self, kc3):
        bad = failed(validate(mutate(kc3, "counit")))
        assert find(bad, "left counit")

    def test_inverse(self, h4):
        bad = failed(validate(mutate(h4, "inverse")))
        assert {r.name.split(": ")[-1] for r in bad} == {"S S^-1 = id", "S^-1 S = id"}

    def test_multiplicativity_keeps_coalgebra(self, kc2):
        records = validate(mutate(kc2, "multiplicativity"))
        bad = {r.name.split(": ")[-1] for r in failed(records)}
        assert "comultiplication is multiplicative" in bad
        assert {"coassociativity", "left counit", "right counit"}.isdisjoint(bad)

    def test_comultiplication_unit(self, kc3):
        bad = {r.name.split(": ")[-1] for r in failed(validate(mutate(kc3, "comultiplication-unit")))}
        assert "comultiplication is unital" in bad

    def test_source_and_target_no_longer_commute(self):
        bad = {r.name.split(": ")[-1] for r in failed(validate(mutate(builtin("le-t2"), "source-target")))}
        assert "source and target commute" in bad

    def test_source_target_needs_base(self, kc2):
        with pytest.raises(PrerequisiteMissing):
            mutate(kc2, "source-target")

    def test_unknown_mutation(self, kc2):
        with pytest.raises(KindMismatch):
            mutate(kc2, "unit")


class TestAntipodeOrder:
    def test_abelian_group_squares_to_identity(self, kc2, kc3):
        assert antipode_order(kc2) == 1
        assert antipode_order(kc3) == 2
        assert (kc3.antipode @ kc3.antipode).is_identity()

    def test_sweedler_has_order_four(self, h4):
        assert not (h4.antipode @ h4.antipode).is_identity()
        assert h4.antipode.power(4).is_identity()
        assert antipode_order(h4) == 4

    def test_cap(self, h4):
        assert antipode_order(h4, cap=3) is None


class TestCoefficients:
    @pytest.mark.parametrize("kind, construction", [
        ("module-left", "trivial"),
        ("module-right", "trivial"),
        ("module-left", "regular"),
        ("module-right", "regular"),
        ("comodule-left", "trivial"),
        ("comodule-left", "regular"),
        ("comodule-right", "regular"),
        ("contramodule-left", "trivial"),
        ("contramodule-right", "dual-regular"),
        ("contramodule-left", "dual-regular"),
    ])
    def test_constructions_validate(self, h4, kind, construction):
        c = make_coefficient(h4, kind, construction)
        assert c.kind == kind
        assert failed(validate_coefficient(c, h4)) == []

    def test_regular_comodule_over_enveloping(self, le_diag2):
        c = make_coefficient(le_diag2, "comodule-left", "regular")
        assert failed(validate_coefficient(c, le_diag2)) == []

    def test_unsupported_kind_over_enveloping(self, le_diag2, kc2):
        c = make_coefficient(kc2, "module-right", "trivial")
        with pytest.raises(PrerequisiteMissing):
            validate_coefficient(c, le_diag2)

    def test_dropped_action_breaks_associativity(self, kc2):
        c = mutate_coefficient(make_coefficient(kc2, "module-left", "trivial"), "drop")
        bad = {r.name.split(": ")[-1] for r in failed(validate_coefficient(c, kc2))}
        assert bad == {"action associative"}

    def test_scaled_action_breaks_unit(self, kc2):
        c = mutate_coefficient(make_coefficient(kc2, "module-right", "regular"), "scale")
        bad = {r.name.split(": ")[-1] for r in failed(validate_coefficient(c, kc2))}
        assert "action unital" in bad

    def test_dropped_coaction_breaks_counit(self, kc2):
        c = mutate_coefficient(make_coefficient(kc2, "comodule-left", "regular"), "drop")
        bad = {r.name.split(": ")[-1] for r in failed(validate_coefficient(c, kc2))}
        assert bad == {"coaction counital"}

    def test_scaled_coaction_breaks_coassociativity(self, kc2):
        c = mutate_coefficient(make_coefficient(kc2, "comodule-right", "regular"), "scale")
        bad = {r.name.split(": ")[-1] for r in failed(validate_coefficient(c, kc2))}
        assert bad == {"coaction coassociative", "coaction counital"}

    @pytest.mark.parametrize("kind", ["contramodule-left", "contramodule-right"])
    def test_scaled_contramodule(self, h4, kind):
        c = mutate_coefficient(make_coefficient(h4, kind, "dual-regular"), "scale")
        bad = {r.name.split(": ")[-1] for r in failed(validate_coefficient(c, h4))}
        assert bad == {"contra-associative", "contra-unital"}

    def test_contramodule_has_no_drop(self, h4):
        with pytest.raises(KindMismatch):
            mutate_coefficient(make_coefficient(h4, "contramodule-left", "trivial"), "drop")

    def test_unknown_construction(self, kc2):
        with pytest.raises(KindMismatch):
            make_coefficient(kc2, "module-left", "dual-regular")


class TestDatums:
    @pytest.mark.parametrize("kind, construction", [
        ("module-algebra-left", "adjoint"),
        ("module-algebra-left", "trivial"),
        ("module-algebra-left", "ground"),
        ("comodule-algebra-right", "regular"),
        ("comodule-algebra-right", "ground"),
        ("module-coring-right", "regular"),
        ("module-coring-right", "trivial"),
        ("comodule-coring-left", "adjoint"),
        ("comodule-coring-left", "trivial"),
    ])
    @pytest.mark.parametrize("name", ["kc3", "h4"])
    def test_constructions_validate(self, name, kind, construction):
        H = builtin(name)
        d = make_datum(H, kind, construction)
        assert d.kind == kind
        assert failed(validate_datum(d, H)) == []

    def test_base_module_algebra_over_enveloping(self, le_diag2):
        d = make_datum(le_diag2, "module-algebra-left", "base")
        assert failed(validate_datum(d, le_diag2)) == []

    def test_adjoint_needs_ground_base(self, le_diag2):
        with pytest.raises(KindMismatch):
            make_datum(le_diag2, "module-algebra-left", "adjoint")


class TestConverters:
    def test_group_algebra_module_keeps_action(self, kc2):
        c = make_coefficient(kc2, "module-left", "regular")
        right = apply_I("I_S", c, kc2)
        assert right.kind == "module-right"
        assert failed(validate_coefficient(right, kc2)) == []

    @pytest.mark.parametrize("there, back, kind", [
        ("I_S", "I_S^-1", "module-left"),
        ("I_Sinv", "I_Sinv^-1", "module-left"),
        ("I_S", "I_S^-1", "comodule-left"),
        ("I_Sinv", "I_Sinv^-1", "comodule-left"),
    ])
    def test_round_trip_is_identity(self, h4, there, back, kind):
        c = make_coefficient(h4, kind, "regular")
        moved = apply_I(there, c, h4)
        assert failed(validate_coefficient(moved, h4)) == []
        returned = apply_I(back, moved, h4)
        assert returned.kind == c.kind
        assert returned.structure == c.structure

    def test_wrong_side(self, h4):
        c = make_coefficient(h4, "module-right", "regular")
        with pytest.raises(KindMismatch):
            apply_I("I_S", c, h4)

    def test_unknown_converter(self, h4):
        with pytest.raises(KindMismatch):
            apply_I("I_T", make_coefficient(h4, "module-left", "trivial"), h4)

    def test_missing_inverse(self, h4):
        no_inverse = replace(h4, antipode_inverse=None)
        with pytest.raises(MissingInverse):
            apply_I("I_S", make_coefficient(h4, "module-left", "regular"), no_inverse)
