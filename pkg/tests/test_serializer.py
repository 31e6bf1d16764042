import copy
import json
from pathlib import Path

import pytest

from conftest import failed
from hopfcyclic.exceptions import KindMismatch, ParseError
from hopfcyclic.families import build_family
from hopfcyclic.fixtures import builtin, make_coefficient, make_datum
from hopfcyclic.hopfdata import validate, validate_coefficient, validate_datum
from hopfcyclic.serializer import (
    dump_complex,
    format_document,
    load_complex,
    load_presentation,
    parse_presentation,
    read_complex,
    read_document,
    save_complex,
    shipped_files,
)

EXAMPLES = Path(__file__).parent.parent / "example"

KC2 = {
    "name": "kC2",
    "kind": "hopf-algebra",
    "field": {"kind": "rational"},
    "spaces": {"H": ["1", "g"]},
    "maps": {
        "mu": {"domain": "H (x) H", "codomain": "H",
               "entries": [["1", "1|1", "1"], ["g", "1|g", "1"], ["g", "g|1", "1"], ["1", "g|g", "1"]]},
        "eta": {"domain": "k", "codomain": "H", "entries": [["1", "1", "1"]]},
        "delta": {"domain": "H", "codomain": "H (x) H", "entries": [["1|1", "1", "1"], ["g|g", "g", "1"]]},
        "eps": {"domain": "H", "codomain": "k", "entries": [["1", "1", "1"], ["1", "g", "1"]]},
        "S": {"domain": "H", "codomain": "H", "entries": [["1", "1", "1"], ["g", "g", "1"]]},
    },
    "roles": {"mult": "mu", "unit": "eta", "comult": "delta", "counit": "eps",
              "antipode": "S", "antipode_inverse": "S"},
}


def document(**changes):
    doc = copy.deepcopy(KC2)
    doc.update(changes)
    return doc


@pytest.mark.unit
class TestShippedFiles:
    @pytest.mark.parametrize("path", shipped_files(), ids=lambda p: p.stem)
    def test_shipped_presentation_validates(self, path):
        loaded = load_presentation(f"data:{path.stem}")
        assert failed(validate(loaded.presentation)) == []
        for datum in loaded.datums.values():
            assert failed(validate_datum(datum, loaded.presentation)) == []
        for coefficient in loaded.coefficients.values():
            assert failed(validate_coefficient(coefficient, loaded.presentation)) == []

    def test_file_matches_builtin(self):
        parsed = load_presentation("data:kc2").hopf
        fixture = builtin("kc2")
        assert parsed.algebra.mult == fixture.algebra.mult
        assert parsed.left.comult == fixture.left.comult
        assert parsed.antipode == fixture.antipode

    def test_declared_entries_keep_their_kind(self):
        loaded = load_presentation("data:kc2")
        assert loaded.datum("adjoint", "module-algebra-left").kind == "module-algebra-left"
        assert loaded.coefficient("sign", "module-left").kind == "module-left"
        with pytest.raises(KindMismatch):
            loaded.coefficient("sign", "comodule-left")

    def test_undeclared_reference_is_a_construction(self):
        loaded = load_presentation("data:kc2")
        coefficient = loaded.coefficient(None, "comodule-right")
        assert coefficient.kind == "comodule-right"
        assert failed(validate_coefficient(coefficient, loaded.presentation)) == []

    def test_enveloping_file_defaults(self):
        loaded = load_presentation("data:le_kxk")
        datum = loaded.datum(None, "module-algebra-left")
        assert failed(validate_datum(datum, loaded.presentation)) == []

    def test_builtin_prefix(self):
        loaded = load_presentation("builtin:h4")
        assert loaded.hopf.space.dim == 4

    def test_unknown_shipped_file(self):
        with pytest.raises(KindMismatch):
            load_presentation("data:nonexistent")

    @pytest.mark.parametrize("path", sorted(EXAMPLES.glob("*.yaml")), ids=lambda p: p.stem)
    def test_example_presentation_validates(self, path):
        loaded = load_presentation(path)
        assert failed(validate(loaded.presentation)) == []
        for coefficient in loaded.coefficients.values():
            assert failed(validate_coefficient(coefficient, loaded.presentation)) == []


@pytest.mark.unit
class TestPresentationErrors:
    def test_in_memory_document(self):
        loaded = parse_presentation(document())
        assert failed(validate(loaded.presentation)) == []

    def test_unknown_label(self):
        doc = document()
        doc["maps"]["S"]["entries"].append(["h", "g", "1"])
        with pytest.raises(ParseError) as info:
            parse_presentation(doc)
        assert info.value.token == "h"
        assert info.value.field == "maps.S"

    def test_unknown_space(self):
        doc = document()
        doc["maps"]["mu"]["domain"] = "H (x) V"
        with pytest.raises(ParseError) as info:
            parse_presentation(doc)
        assert info.value.token == "V"

    def test_bad_scalar(self):
        doc = document()
        doc["maps"]["S"]["entries"][0][2] = "one"
        with pytest.raises(ParseError) as info:
            parse_presentation(doc, "kc2.json")
        assert info.value.source_file == "kc2.json"

    def test_unbound_role(self):
        doc = document()
        doc["roles"] = {k: v for k, v in doc["roles"].items() if k != "antipode"}
        with pytest.raises(ParseError) as info:
            parse_presentation(doc)
        assert info.value.field == "roles.antipode"

    def test_unknown_kind(self):
        with pytest.raises(ParseError):
            parse_presentation(document(kind="quantum-group"))

    def test_bad_base_construction(self):
        doc = {"name": "x", "kind": "enveloping", "base": {"construction": "diagonal:two"}}
        with pytest.raises(ParseError) as info:
            parse_presentation(doc)
        assert info.value.field == "base.construction"

    def test_bialgebra_has_no_antipode(self):
        doc = document(kind="bialgebra")
        loaded = parse_presentation(doc)
        assert failed(validate(loaded.presentation)) == []
        with pytest.raises(KindMismatch):
            loaded.hopf

    def test_yaml_document(self, tmp_path):
        path = tmp_path / "kc2.yaml"
        path.write_text(format_document(KC2, "yaml"))
        loaded = load_presentation(path)
        assert loaded.hopf.algebra.mult == builtin("kc2").algebra.mult

    def test_invalid_json_reports_line(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{\n  "name": "x",\n  oops\n}\n')
        with pytest.raises(ParseError) as info:
            read_document(path)
        assert info.value.line == 3

    def test_top_level_must_be_object(self, tmp_path):
        path = tmp_path / "list.json"
        path.write_text(json.dumps([1, 2]))
        with pytest.raises(ParseError):
            read_document(path)

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            format_document({}, "toml")


@pytest.fixture(scope="module")
def a1(kc2):
    datum = make_datum(kc2, "module-algebra-left", "adjoint")
    coefficient = make_coefficient(kc2, "comodule-left", "regular")
    return build_family("A1", kc2, datum, coefficient, top=2)


@pytest.mark.unit
class TestComplexDumps:
    def test_round_trip_in_memory(self, a1):
        assert load_complex(dump_complex(a1)).equals(a1)

    @pytest.mark.parametrize("suffix", [".json", ".yaml"])
    def test_round_trip_through_file(self, a1, tmp_path, suffix):
        path = tmp_path / f"a1{suffix}"
        save_complex(a1, path)
        loaded = read_complex(path)
        assert loaded.equals(a1)
        assert loaded.provenance == a1.provenance

    def test_dump_is_deterministic(self, a1):
        first = format_document(dump_complex(a1).model_dump(mode="json"))
        second = format_document(dump_complex(a1).model_dump(mode="json"))
        assert first == second

    @pytest.mark.parametrize("suffix", [".json", ".yaml"])
    def test_saved_files_are_byte_identical(self, kc2, tmp_path, suffix):
        datum = make_datum(kc2, "module-algebra-left", "adjoint")
        coefficient = make_coefficient(kc2, "comodule-left", "regular")
        paths = [tmp_path / f"run{k}{suffix}" for k in range(2)]
        for path in paths:
            save_complex(build_family("A1", kc2, datum, coefficient, top=2), path)
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_shape_mismatch(self, a1):
        data = dump_complex(a1).model_dump(mode="json")
        data["cyclic"][1]["rows"] += 1
        with pytest.raises(ParseError) as info:
            load_complex(data)
        assert info.value.field == "cyclic[1]"

    def test_invalid_dump(self):
        with pytest.raises(ParseError):
            load_complex({"variance": "cocyclic"})
