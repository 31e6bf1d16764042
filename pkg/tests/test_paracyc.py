from dataclasses import replace

import pytest

from conftest import failed
from hopfcyclic.exactlin import QQ, FinSpace, LinMap, permutation_map
from hopfcyclic.exceptions import KindMismatch, SingularMap
from hopfcyclic.families import build_family
from hopfcyclic.fixtures import make_coefficient, make_datum
from hopfcyclic.paracyc import (
    ParaComplex,
    assemble,
    check_laws,
    complexes_isomorphic,
    conjugate,
    invertible_cyclic,
    is_strictly_cyclic,
    t_order_probe,
    transposed,
)

pytestmark = pytest.mark.unit


def trivial_complex(variance, top=2):
    k = FinSpace(("*",))
    one = LinMap.identity(k, QQ)
    faces = [[one] * (n + 1) for n in range(1, top + 1)]
    degeneracies = [[one] * (n + 1) for n in range(top)]
    return assemble(variance, [k] * (top + 1), faces, degeneracies, [one] * (top + 1), QQ, "trivial")


@pytest.fixture(scope="module")
def a1(kc2):
    datum = make_datum(kc2, "module-algebra-left", "adjoint")
    coefficient = make_coefficient(kc2, "comodule-left", "regular")
    return build_family("A1", kc2, datum, coefficient, top=3)


@pytest.fixture(scope="module")
def b5(kc2):
    datum = make_datum(kc2, "module-algebra-left", "adjoint")
    coefficient = make_coefficient(kc2, "comodule-right", "regular")
    return build_family("B5", kc2, datum, coefficient, top=3)


class TestStructure:
    def test_unknown_variance(self):
        k = FinSpace(("*",))
        with pytest.raises(KindMismatch):
            ParaComplex("bicyclic", (k,), ((),), (), (LinMap.identity(k, QQ),), QQ)

    def test_operator_counts_checked(self):
        k = FinSpace(("*",))
        one = LinMap.identity(k, QQ)
        with pytest.raises(ValueError):
            assemble("cocyclic", [k, k], [[one]], [[one]], [one, one], QQ)

    def test_truncate(self, a1):
        low = a1.truncate(1)
        assert low.top == 1
        assert low.dims == a1.dims[:2]
        assert failed(check_laws(low)) == []

    def test_equals(self, a1):
        assert a1.equals(a1)
        assert not a1.equals(a1.truncate(2))


class TestRelations:
    @pytest.mark.parametrize("variance", ["cocyclic", "cyclic"])
    def test_trivial_complex(self, variance):
        c = trivial_complex(variance)
        records = check_laws(c)
        assert records and failed(records) == []
        assert t_order_probe(c) == {0: 1, 1: 1, 2: 1}
        assert is_strictly_cyclic(c)

    def test_a1_over_kc2_degree_three(self, a1):
        assert failed(check_laws(a1)) == []

    def test_scaled_cyclic_operator_breaks_only_t_relations(self, a1):
        broken = a1.with_cyclic(1, a1.t(1).scale(2))
        bad = failed(check_laws(broken))
        assert bad
        assert all(r.name.startswith("t^") for r in bad)
        assert {r.degree for r in bad} == {0, 1, 2}

    def test_scaled_face_breaks_face_relations(self, a1):
        faces = [list(ops) for ops in a1.faces]
        faces[2][0] = faces[2][0].scale(2)
        broken = replace(a1, faces=tuple(tuple(ops) for ops in faces))
        bad = {r.name for r in failed(check_laws(broken))}
        assert "d^j d^i = d^i d^(j-1)" in bad
        assert "t^n d^0 = d^n" in bad

    def test_scaled_degeneracy_breaks_degeneracy_relations(self, a1):
        degeneracies = [list(ops) for ops in a1.degeneracies]
        degeneracies[1][0] = degeneracies[1][0].scale(2)
        broken = replace(a1, degeneracies=tuple(tuple(ops) for ops in degeneracies))
        bad = {r.name for r in failed(check_laws(broken))}
        assert "s^j s^i = s^i s^(j+1)" in bad
        assert "s^j d^i = id" in bad
        assert not any(name.startswith("d^j d^i") for name in bad)

    def test_transposed_flips_variance(self, a1):
        dual = transposed(a1)
        assert dual.variance == "cyclic"
        assert dual.dims == a1.dims
        assert dual.face(2, 1) == a1.face(2, 1).transpose()
        assert failed(check_laws(dual)) == []
        assert transposed(dual).equals(a1)

    def test_degree_filter(self, a1):
        records = check_laws(a1, degrees=[2])
        assert {r.degree for r in records} == {2}


class TestInverses:
    def test_invertible_cyclic(self, b5):
        inverses = invertible_cyclic(b5)
        assert all((s @ t).is_identity() for s, t in zip(inverses, b5.cyclic))

    def test_singular_cyclic_names_degree(self, a1):
        zero = LinMap.zero(a1.spaces[2], a1.spaces[2], QQ)
        with pytest.raises(SingularMap) as info:
            invertible_cyclic(a1.with_cyclic(2, zero))
        assert info.value.degree == 2


class TestComparison:
    def test_identity_maps(self, a1):
        maps = [LinMap.identity(s, QQ) for s in a1.spaces]
        assert failed(complexes_isomorphic(a1, a1, maps)) == []

    def test_conjugation_by_permutation(self, a1, kc2):
        H = kc2.space
        maps = []
        for n, space in enumerate(a1.spaces):
            flip = permutation_map([H] * (n + 2), list(range(n + 2))[::-1], QQ)
            maps.append(flip.relabel(space, space))
        moved = conjugate(a1, maps)
        assert failed(check_laws(moved)) == []
        assert failed(complexes_isomorphic(a1, moved, maps)) == []

    def test_variances_differ(self, a1, b5):
        maps = [LinMap.identity(s, QQ) for s in a1.spaces]
        (record,) = complexes_isomorphic(a1, b5, maps)
        assert record.name == "same variance" and not record.passed

    def test_non_invertible_comparison(self, a1):
        maps = [LinMap.zero(s, s, QQ) for s in a1.spaces]
        records = complexes_isomorphic(a1, a1, maps)
        assert all(r.name == "comparison invertible" for r in records)
        assert not any(r.passed for r in records)
