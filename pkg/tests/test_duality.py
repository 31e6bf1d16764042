import pytest

from conftest import DEFAULT_CONSTRUCTIONS, failed
from hopfcyclic.exceptions import KindMismatch
from hopfcyclic.duality import (
    PAIRINGS,
    closed_form_w_inverse,
    lift_realization,
    connes_hat,
    mirror,
    pairing,
    pairing_check,
    tau_compare,
    triangle,
    validate_triangle,
)
from hopfcyclic.exactlin import invert
from hopfcyclic.families import StructureTable, build_family, family_spec
from hopfcyclic.fixtures import builtin, make_coefficient, make_datum
from hopfcyclic.functors import realize
from hopfcyclic.paracyc import check_laws


def regular_inputs(H, family):
    spec = family_spec(family)
    datum = make_datum(H, spec.datum_kind, DEFAULT_CONSTRUCTIONS[spec.datum_kind])
    kind = spec.coefficient_kind
    construction = "dual-regular" if kind.startswith("contramodule") else "regular"
    return datum, make_coefficient(H, kind, construction)


def pairing_inputs(H, name):
    return regular_inputs(H, pairing(name).source)


@pytest.fixture(scope="module")
def a1(kc2):
    datum = make_datum(kc2, "module-algebra-left", "adjoint")
    coefficient = make_coefficient(kc2, "comodule-left", "regular")
    return build_family("A1", kc2, datum, coefficient, top=3)


@pytest.mark.unit
class TestConnesHat:
    def test_dual_satisfies_cyclic_relations(self, a1):
        dual = connes_hat(a1)
        assert dual.variance == "cyclic"
        assert dual.dims == a1.dims
        assert failed(check_laws(dual)) == []

    def test_round_trip(self, a1):
        assert connes_hat(connes_hat(a1)).equals(a1)

    def test_cyclic_round_trip(self, kc2):
        datum = make_datum(kc2, "module-algebra-left", "adjoint")
        coefficient = make_coefficient(kc2, "comodule-right", "regular")
        b5 = build_family("B5", kc2, datum, coefficient, top=2)
        dual = connes_hat(b5)
        assert dual.variance == "cocyclic"
        assert failed(check_laws(dual)) == []
        assert connes_hat(dual).equals(b5)

    def test_trivial_complex(self):
        k = builtin("trivial")
        c = build_family("A1", k, make_datum(k, "module-algebra-left", "ground"),
                         make_coefficient(k, "comodule-left", "trivial"), top=2)
        dual = connes_hat(c)
        assert dual.variance == "cyclic"
        assert all(op.is_identity() for op in dual.operators())

    def test_mirror_needs_cyclic(self, a1):
        with pytest.raises(KindMismatch):
            mirror(a1)


@pytest.mark.integration
class TestTriangle:
    def test_triangle_over_kc2(self, kc2, kc2_a1):
        tri = triangle(realize("A1", kc2, *kc2_a1))
        assert failed(validate_triangle(tri)) == []

    @pytest.mark.parametrize("family", ["B1", "B5"])
    def test_cyclic_realization_lifted_through_transpose(self, kc2, family):
        tri = triangle(realize(family, kc2, *regular_inputs(kc2, family)))
        assert tri.base.variance == "cocyclic"
        assert tri.family == f"triangle(op({family}))"
        assert failed(validate_triangle(tri)) == []

    def test_lifted_cyclic_family_is_cocyclic(self, kc2):
        lifted = lift_realization(realize("B1", kc2, *regular_inputs(kc2, "B1")), 2)
        assert lifted.lifted.variance == "cocyclic"
        assert lifted.dual.variance == "cocyclic"
        assert failed(lifted.records()) == []
        assert failed(check_laws(lifted.lifted)) == []

    def test_tau_compare_kc2(self, kc2):
        datum = make_datum(kc2, "module-algebra-left", "adjoint")
        coefficient = make_coefficient(kc2, "comodule-left", "regular")
        report = tau_compare("A1", kc2, datum, coefficient, top=2)
        assert report.ok, [r.name for r in report.failures()]
        assert report.find("tau")
        assert report.metadata["dims"] == [4, 8, 16]

    @pytest.mark.slow
    def test_tau_compare_sweedler(self, h4, h4_a1):
        report = tau_compare("A1", h4, *h4_a1, top=2)
        assert report.ok, [r.name for r in report.failures()]

    def test_tau_compare_cyclic_family(self, kc2):
        report = tau_compare("B1", kc2, *regular_inputs(kc2, "B1"), top=2)
        assert report.ok, [r.name for r in report.failures()]
        assert report.find("tau")
        (matched,) = report.find("triangle isomorphic to A5")
        assert matched.passed

    def test_tau_compare_formula_built_family(self, kc2):
        report = tau_compare("B5", kc2, *regular_inputs(kc2, "B5"), top=1)
        assert report.ok, [r.name for r in report.failures()]
        assert not report.find("triangle isomorphic to")


@pytest.mark.unit
class TestPairings:
    def test_unknown_pairing(self):
        with pytest.raises(KindMismatch):
            pairing("ex9")

    @pytest.mark.parametrize("name", sorted(PAIRINGS))
    def test_closed_form_inverse_over_kc2(self, kc2, name):
        datum, coefficient = pairing_inputs(kc2, name)
        real = realize(pairing(name).source, kc2, datum, coefficient)
        table = StructureTable(kc2.space.dim, datum, coefficient)
        closed = closed_form_w_inverse(name, table, kc2.antipode_inverse)
        assert closed == invert(real.bottom.structure)

    def test_closed_form_inverse_over_sweedler(self, h4):
        datum, coefficient = pairing_inputs(h4, "ex1")
        real = realize("A1", h4, datum, coefficient)
        table = StructureTable(h4.space.dim, datum, coefficient)
        assert closed_form_w_inverse("ex1", table, h4.antipode_inverse) == invert(real.bottom.structure)


@pytest.mark.integration
class TestPairingCheck:
    @pytest.mark.parametrize("name", sorted(PAIRINGS))
    def test_isomorphism_over_kc2(self, kc2, name):
        report = pairing_check(name, kc2, *pairing_inputs(kc2, name), top=2)
        assert report.ok, [r.name for r in report.failures()]
        assert report.metadata["power"] is not None
        assert report.find("tau")
        (iso,) = report.find("degreewise isomorphism")
        assert iso.detail.endswith("o tau")

    def test_runs_through_triangle(self, kc2, monkeypatch):
        def refuse(real):
            raise RuntimeError(f"triangle of {real.family}")

        monkeypatch.setattr("hopfcyclic.duality.triangle", refuse)
        with pytest.raises(RuntimeError, match="triangle of A1"):
            pairing_check("ex1", kc2, *pairing_inputs(kc2, "ex1"), top=1)

    def test_broken_tau_fails_isomorphism(self, kc2, monkeypatch):
        def scaled(real, top):
            lifted = lift_realization(real, top)
            lifted.taus = [tau.scale(2) if n == top else tau for n, tau in enumerate(lifted.taus)]
            return lifted

        monkeypatch.setattr("hopfcyclic.duality.lift_realization", scaled)
        report = pairing_check("ex1", kc2, *pairing_inputs(kc2, "ex1"), top=1)
        assert not report.ok
        (iso,) = report.find("degreewise isomorphism")
        assert not iso.passed
        assert report.metadata["power"] is None

    @pytest.mark.slow
    def test_ex1_over_sweedler(self, h4):
        report = pairing_check("ex1", h4, *pairing_inputs(h4, "ex1"), top=2)
        assert report.ok, [r.name for r in report.failures()]

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["ex2", "ex6"])
    def test_sweedler_antipode_of_order_four(self, h4, name):
        report = pairing_check(name, h4, *pairing_inputs(h4, name), top=2)
        assert report.ok, [r.name for r in report.failures()]
