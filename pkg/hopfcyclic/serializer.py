"""
hopfcyclic Serializer
Reads presentation files (JSON or YAML) into presentations, family data and
coefficients, and writes complexes in the same text format.
"""

import json
import logging
from dataclasses import dataclass, field
from io import StringIO
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import ValidationError
from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

from .exactlin import GROUND, Field, FinSpace, LinMap
from .exceptions import HopfCyclicError, KindMismatch, ParseError
from .fixtures import builtin, enveloping, make_coefficient, make_datum
from .hopfdata import (
    BialgebroidPresentation,
    Coefficient,
    CoringOverL,
    HopfAlgebroidPresentation,
    HopfDatum,
    RingOverL,
)
from .models import ComplexDump, FieldSpec, MapDump, PresentationFile
from .paracyc import ParaComplex, assemble
from .tensorcat import BaseAlgebra, Bimodule

logger = logging.getLogger(__name__)

BUILTIN_PREFIX = "builtin:"
DATA_PREFIX = "data:"
DATA_DIR = Path(__file__).parent / "data"
TENSOR_WORD = "(x)"

# Construction used when a command names only the kind.
DEFAULT_DATUM = {
    "module-algebra-left": "adjoint",
    "comodule-algebra-right": "regular",
    "module-coring-right": "regular",
    "comodule-coring-left": "adjoint",
}

Presentation = Union[HopfAlgebroidPresentation, BialgebroidPresentation]


@dataclass
class LoadedPresentation:
    """A presentation together with the family data and coefficients its file declares."""

    presentation: Presentation
    source: str
    datums: Dict[str, HopfDatum] = field(default_factory=dict)
    coefficients: Dict[str, Coefficient] = field(default_factory=dict)

    @property
    def hopf(self) -> HopfAlgebroidPresentation:
        if not isinstance(self.presentation, HopfAlgebroidPresentation):
            raise KindMismatch(f"{self.source} declares no antipode", expected="hopf-algebra",
                               actual="bialgebra")
        return self.presentation

    def datum(self, ref: Optional[str], kind: str) -> HopfDatum:
        """Declared datum ``ref``, or the construction ``ref`` of the given kind.

        Without ``ref`` the default construction of the kind is used (the base
        algebra over an enveloping presentation).
        """
        if ref and ref in self.datums:
            found = self.datums[ref]
            if found.kind != kind:
                raise KindMismatch(f"Datum {ref} has the wrong kind", expected=kind, actual=found.kind)
            return found
        H = self.hopf
        construction = ref or (DEFAULT_DATUM.get(kind, "trivial") if H.is_hopf_algebra else "base")
        return make_datum(H, kind, construction)

    def coefficient(self, ref: Optional[str], kind: str) -> Coefficient:
        """Declared coefficient ``ref``, or the construction ``ref`` of the given kind (``trivial`` by default)."""
        if ref and ref in self.coefficients:
            found = self.coefficients[ref]
            if found.kind != kind:
                raise KindMismatch(f"Coefficient {ref} has the wrong kind", expected=kind, actual=found.kind)
            return found
        H = self.hopf
        construction = ref or ("trivial" if H.is_hopf_algebra else "regular")
        return make_coefficient(H, kind, construction)


# Text formats


def _yaml() -> YAML:
    yaml_obj = YAML(typ="safe")
    yaml_obj.default_flow_style = False
    return yaml_obj


def read_document(path: Path) -> Dict[str, Any]:
    """Parse a JSON or YAML file (by suffix) into plain data."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read file: {e}", source_file=str(path)) from e
    try:
        if path.suffix.lower() in (".yaml", ".yml"):
            data = _yaml().load(text)
        else:
            data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e.msg}", source_file=str(path), line=e.lineno) from e
    except YAMLError as e:
        raise ParseError(f"Invalid YAML: {e}", source_file=str(path)) from e
    if not isinstance(data, dict):
        raise ParseError("Top level must be an object", source_file=str(path))
    return data


def write_document(data: Dict[str, Any], path: Path, output_format: str = "json") -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_document(data, output_format), encoding="utf-8")
    logger.info("Wrote %s", path)


def format_document(data: Dict[str, Any], output_format: str = "json") -> str:
    if output_format == "yaml":
        out = StringIO()
        _yaml().dump(data, out)
        return out.getvalue()
    if output_format == "json":
        return json.dumps(data, ensure_ascii=False, indent=2)
    raise ValueError(f"Unsupported output format: {output_format}")


def _first_error(e: ValidationError) -> str:
    err = e.errors()[0]
    return ".".join(str(p) for p in err.get("loc", ())) or "<root>"


# Presentations


def to_field(spec: FieldSpec) -> Field:
    try:
        return Field.rational() if spec.kind == "rational" else Field.gf(spec.p)
    except ValueError as e:
        raise ParseError(str(e), field="field") from e


class _PresentationReader:
    """Turns a validated ``PresentationFile`` into engine objects."""

    def __init__(self, doc: PresentationFile, source: str):
        self.doc = doc
        self.source = source
        self.fld = to_field(doc.field)
        self.spaces: Dict[str, FinSpace] = {}
        for name, labels in doc.spaces.items():
            try:
                self.spaces[name] = FinSpace(tuple(labels))
            except ValueError as e:
                raise ParseError(str(e), source_file=source, field=f"spaces.{name}") from e
        self._maps: Dict[str, LinMap] = {}

    def space(self, expr: str) -> FinSpace:
        """Space expression: a declared name, ``k``, or names joined by ``(x)``."""
        parts = [p.strip() for p in expr.split(TENSOR_WORD)]
        factors = []
        for part in parts:
            if part == "k":
                factors.append(GROUND)
            elif part in self.spaces:
                factors.append(self.spaces[part])
            else:
                raise ParseError(f"Unknown space: {part}", source_file=self.source, token=part)
        return factors[0] if len(factors) == 1 else FinSpace.tensor(*factors)

    def map(self, name: str) -> LinMap:
        if name in self._maps:
            return self._maps[name]
        spec = self.doc.maps.get(name)
        if spec is None:
            raise ParseError(f"Unknown map: {name}", source_file=self.source, token=name)
        domain, codomain = self.space(spec.domain), self.space(spec.codomain)
        triples = []
        for row, col, value in spec.entries:
            scalar = self.fld.parse(value)
            if row not in codomain or col not in domain:
                bad = row if row not in codomain else col
                raise ParseError(f"Unknown basis label in map {name}", source_file=self.source,
                                 field=f"maps.{name}", token=bad)
            triples.append((row, col, scalar))
        self._maps[name] = LinMap.from_triples(domain, codomain, self.fld, triples)
        return self._maps[name]

    def role(self, role: str, required: bool = True) -> Optional[LinMap]:
        name = getattr(self.doc.roles, role)
        if name is None:
            if required:
                raise ParseError(f"Role {role} is not bound", source_file=self.source, field=f"roles.{role}")
            return None
        return self.map(name)

    def presentation(self) -> Presentation:
        doc = self.doc
        if doc.kind == "enveloping":
            if doc.base is None:
                raise ParseError("Enveloping presentation needs a base", source_file=self.source, field="base")
            return enveloping(self.base_algebra(doc.base.construction))
        mult = self.role("mult")
        unit = self.role("unit")
        space = mult.codomain
        algebra = BaseAlgebra(space, mult, unit, doc.name)
        comult = self.role("comult")
        counit = self.role("counit")
        if doc.kind == "bialgebra":
            return BialgebroidPresentation.bialgebra(algebra, comult, counit, doc.name)
        antipode = self.role("antipode")
        return HopfAlgebroidPresentation.hopf_algebra(algebra, comult, counit, antipode,
                                                      self.role("antipode_inverse", required=False), doc.name)

    def base_algebra(self, construction: str) -> BaseAlgebra:
        if construction == "ground":
            return BaseAlgebra.ground(self.fld)
        if construction == "upper-triangular":
            return BaseAlgebra.upper_triangular(self.fld)
        if construction.startswith("diagonal:"):
            try:
                return BaseAlgebra.diagonal(int(construction.split(":", 1)[1]), self.fld)
            except ValueError as e:
                raise ParseError(f"Bad diagonal size: {construction}", source_file=self.source,
                                 field="base.construction", token=construction) from e
        raise ParseError(f"Unknown base construction: {construction}", source_file=self.source,
                         field="base.construction", token=construction)

    def datums(self, H: Presentation) -> Dict[str, HopfDatum]:
        out: Dict[str, HopfDatum] = {}
        for spec in self.doc.datums:
            if spec.construction:
                out[spec.name] = make_datum(H, spec.kind, spec.construction)
                continue
            if spec.space is None or "structure" not in spec.maps:
                raise ParseError(f"Datum {spec.name} needs a construction or a space with a structure map",
                                 source_file=self.source, field=f"datums.{spec.name}")
            space = self.space(spec.space)
            structure = self.map(spec.maps["structure"])
            try:
                if spec.kind.startswith("module-algebra") or spec.kind.startswith("comodule-algebra"):
                    ring_alg = BaseAlgebra(space, self.map(spec.maps["mult"]), self.map(spec.maps["unit"]), spec.name)
                    out[spec.name] = HopfDatum(spec.name, spec.kind, structure, ring=RingOverL.from_algebra(ring_alg))
                else:
                    coring = CoringOverL.from_coalgebra(space, self.map(spec.maps["comult"]),
                                                        self.map(spec.maps["counit"]), spec.name)
                    out[spec.name] = HopfDatum(spec.name, spec.kind, structure, coring=coring)
            except KeyError as e:
                raise ParseError(f"Datum {spec.name} misses the map for role {e.args[0]}",
                                 source_file=self.source, field=f"datums.{spec.name}.maps") from None
        return out

    def coefficients(self, H: Presentation) -> Dict[str, Coefficient]:
        out: Dict[str, Coefficient] = {}
        for spec in self.doc.coefficients:
            if spec.construction:
                out[spec.name] = make_coefficient(H, spec.kind, spec.construction)
                continue
            if spec.space is None or spec.structure is None:
                raise ParseError(f"Coefficient {spec.name} needs a construction or a space with a structure map",
                                 source_file=self.source, field=f"coefficients.{spec.name}")
            carrier = Bimodule.plain(BaseAlgebra.ground(self.fld), self.space(spec.space), spec.name)
            out[spec.name] = Coefficient(spec.name, spec.kind, carrier, self.map(spec.structure))
        return out


def parse_presentation(data: Dict[str, Any], source: str = "<memory>") -> LoadedPresentation:
    """Build a presentation and its declared data from a parsed document."""
    try:
        doc = PresentationFile.model_validate(data)
    except ValidationError as e:
        raise ParseError(f"Invalid presentation: {e.errors()[0]['msg']}", source_file=source,
                         field=_first_error(e)) from e
    reader = _PresentationReader(doc, source)
    try:
        H = reader.presentation()
        datums = reader.datums(H)
        coefficients = reader.coefficients(H)
    except HopfCyclicError as e:
        if not e.source_file:
            e.source_file = source
        raise
    except Exception as e:
        raise ParseError(f"Failed to load presentation: {e}", source_file=source) from e
    logger.info("Loaded %s from %s: %d datums, %d coefficients", doc.name, source, len(datums), len(coefficients))
    return LoadedPresentation(H, source, datums, coefficients)


def shipped_files() -> List[Path]:
    return sorted(DATA_DIR.glob("*.json"))


def load_presentation(ref: Union[str, Path]) -> LoadedPresentation:
    """Load ``builtin:<name>``, a shipped file ``data:<name>`` or a presentation file."""
    text = str(ref)
    if text.startswith(BUILTIN_PREFIX):
        name = text[len(BUILTIN_PREFIX):]
        return LoadedPresentation(builtin(name), text)
    if text.startswith(DATA_PREFIX):
        path = DATA_DIR / f"{text[len(DATA_PREFIX):]}.json"
        if not path.exists():
            names = ", ".join(p.stem for p in shipped_files())
            raise KindMismatch(f"Unknown shipped file: {text}", expected=names, actual=text)
    else:
        path = Path(ref)
    return parse_presentation(read_document(path), str(path))


# Complexes


def dump_map(f: LinMap) -> MapDump:
    entries = [(r, j, f.field.format(v)) for j, col in enumerate(f.cols) for r, v in sorted(col.items())]
    return MapDump(rows=f.codomain.dim, cols=f.domain.dim, entries=entries)


def dump_complex(c: ParaComplex) -> ComplexDump:
    """Operator matrices of ``c`` with exact scalar strings, ordered by degree then index."""
    fld = c.field
    spec = FieldSpec(kind="rational") if fld.p is None else FieldSpec(kind="gf", p=fld.p)
    return ComplexDump(
        variance=c.variance,
        field=spec,
        provenance=c.provenance,
        spaces=[list(s.labels) for s in c.spaces],
        faces=[[dump_map(f) for f in ops] for ops in c.faces],
        degeneracies=[[dump_map(s) for s in ops] for ops in c.degeneracies],
        cyclic=[dump_map(t) for t in c.cyclic],
    )


def _load_map(d: MapDump, domain: FinSpace, codomain: FinSpace, fld: Field, where: str) -> LinMap:
    if d.rows != codomain.dim or d.cols != domain.dim:
        raise ParseError(f"Shape {d.rows}x{d.cols} does not fit {codomain.dim}x{domain.dim}", field=where)
    try:
        return LinMap.from_entries(domain, codomain, fld, ((r, j, fld.parse(v)) for r, j, v in d.entries))
    except (ValueError, IndexError) as e:
        raise ParseError(f"Bad entries: {e}", field=where) from e


def load_complex(dump: Union[ComplexDump, Dict[str, Any]]) -> ParaComplex:
    """Inverse of ``dump_complex``."""
    if not isinstance(dump, ComplexDump):
        try:
            dump = ComplexDump.model_validate(dump)
        except ValidationError as e:
            raise ParseError(f"Invalid complex dump: {e.errors()[0]['msg']}", field=_first_error(e)) from e
    fld = to_field(dump.field)
    spaces = [FinSpace(tuple(labels)) for labels in dump.spaces]
    cocyclic = dump.variance == "cocyclic"
    top = len(spaces) - 1
    faces: List[List[LinMap]] = [[]]
    for n in range(1, top + 1):
        src, tgt = (n - 1, n) if cocyclic else (n, n - 1)
        faces.append([_load_map(d, spaces[src], spaces[tgt], fld, f"faces[{n}][{i}]")
                      for i, d in enumerate(dump.faces[n])])
    degeneracies: List[List[LinMap]] = []
    for n in range(top):
        src, tgt = (n + 1, n) if cocyclic else (n, n + 1)
        degeneracies.append([_load_map(d, spaces[src], spaces[tgt], fld, f"degeneracies[{n}][{j}]")
                             for j, d in enumerate(dump.degeneracies[n])])
    cyclic = [_load_map(d, spaces[n], spaces[n], fld, f"cyclic[{n}]") for n, d in enumerate(dump.cyclic)]
    return assemble(dump.variance, spaces, faces, degeneracies, cyclic, fld, dump.provenance)


def save_complex(c: ParaComplex, path: Path, output_format: Optional[str] = None) -> None:
    fmt = output_format or ("yaml" if path.suffix.lower() in (".yaml", ".yml") else "json")
    write_document(dump_complex(c).model_dump(mode="json"), path, fmt)


def read_complex(path: Path) -> ParaComplex:
    try:
        return load_complex(read_document(path))
    except ParseError as e:
        e.source_file = e.source_file or str(path)
        raise
