"""
hopfcyclic Data Models
Check records, reports, presentation files and complex dumps.
"""

from io import StringIO
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field
from ruamel.yaml import YAML


class CheckRecord(BaseModel):
    """One verified identity"""
    name: str = Field(description="Identity or axiom name")
    degree: Optional[int] = Field(default=None, description="Degree the identity was checked at")
    passed: bool = Field(description="Whether both sides agree exactly")
    witness: Optional[str] = Field(default=None, description="Basis label where the two sides first differ")
    detail: Optional[str] = Field(default=None, description="Extra information")

    class Config:
        json_schema_extra = {
            "example": {
                "name": "t^n d^0 = d^n",
                "degree": 2,
                "passed": False,
                "witness": "g|1|x|g",
            }
        }


def compare_maps(name: str, lhs: Any, rhs: Any, degree: Optional[int] = None,
                 detail: Optional[str] = None) -> CheckRecord:
    """Record ``lhs == rhs`` for two linear maps, with the first differing column as witness."""
    witness = lhs.first_difference(rhs)
    if witness is None and lhs.field != rhs.field:
        witness = "<field>"
    return CheckRecord(name=name, degree=degree, passed=witness is None, witness=witness, detail=detail)


class ReportSummary(BaseModel):
    """Pass/fail counts"""
    total: int = Field(default=0, description="Number of checks")
    passed: int = Field(default=0, description="Number of passing checks")
    failed: int = Field(default=0, description="Number of failing checks")


class Report(BaseModel):
    """Verification report of one command"""
    command: str = Field(description="Command echo")
    checks: List[CheckRecord] = Field(default_factory=list, description="Check records in check order")
    summary: ReportSummary = Field(default_factory=ReportSummary, description="Summary counts")
    timing_seconds: float = Field(default=0.0, description="Wall-clock time")
    metadata: Dict[str, Any] = Field(default_factory=dict, description="Metadata")

    def add(self, record: CheckRecord) -> None:
        self.checks.append(record)
        self._recount()

    def extend(self, records: List[CheckRecord], prefix: Optional[str] = None) -> None:
        for record in records:
            if prefix:
                record = record.model_copy(update={"name": f"{prefix}: {record.name}"})
            self.checks.append(record)
        self._recount()

    def _recount(self) -> None:
        failed = sum(1 for c in self.checks if not c.passed)
        self.summary = ReportSummary(total=len(self.checks), passed=len(self.checks) - failed, failed=failed)

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0

    def failures(self) -> List[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def find(self, name: str) -> List[CheckRecord]:
        """Records whose name contains ``name``"""
        return [c for c in self.checks if name in c.name]

    def to_yaml(self) -> str:
        """Convert to YAML format"""
        yaml_obj = YAML()
        yaml_obj.default_flow_style = False
        output = StringIO()
        yaml_obj.dump(self.model_dump(exclude_none=True), output)
        return output.getvalue()


# Presentation files


class FieldSpec(BaseModel):
    """Ground field declaration"""
    kind: Literal["rational", "gf"] = Field(default="rational", description="Field kind")
    p: Optional[int] = Field(default=None, description="Prime modulus for gf")


class MapSpec(BaseModel):
    """Linear map as sparse (row-label, column-label, scalar-string) triples"""
    domain: str = Field(description="Domain space name")
    codomain: str = Field(description="Codomain space name")
    entries: List[Tuple[str, str, str]] = Field(default_factory=list, description="Nonzero entries")


class RoleBinding(BaseModel):
    """Which declared maps play which structural role"""
    mult: Optional[str] = Field(default=None, description="Multiplication H(x)H -> H")
    unit: Optional[str] = Field(default=None, description="Unit k -> H")
    comult: Optional[str] = Field(default=None, description="Comultiplication H -> H(x)H")
    counit: Optional[str] = Field(default=None, description="Counit H -> k")
    antipode: Optional[str] = Field(default=None, description="Antipode H -> H")
    antipode_inverse: Optional[str] = Field(default=None, description="Inverse antipode H -> H")


class BaseSpec(BaseModel):
    """Base algebra of an enveloping bialgebroid"""
    construction: str = Field(description="diagonal:<n>, upper-triangular or ground")


class DatumSpec(BaseModel):
    """Module algebra, comodule algebra, module coring or comodule coring"""
    name: str = Field(description="Datum name")
    kind: Literal[
        "module-algebra-left", "comodule-algebra-right", "module-coring-right", "comodule-coring-left"
    ] = Field(description="Datum kind")
    construction: Optional[str] = Field(default=None, description="Named construction")
    space: Optional[str] = Field(default=None, description="Carrier space for explicit data")
    maps: Dict[str, str] = Field(default_factory=dict, description="Role -> declared map name")


class CoefficientSpec(BaseModel):
    """Module, comodule or contramodule coefficient"""
    name: str = Field(description="Coefficient name")
    kind: Literal[
        "module-left", "module-right", "comodule-left", "comodule-right",
        "contramodule-left", "contramodule-right",
    ] = Field(description="Coefficient kind")
    construction: Optional[str] = Field(default=None, description="Named construction")
    space: Optional[str] = Field(default=None, description="Carrier space for explicit data")
    structure: Optional[str] = Field(default=None, description="Declared map name of the structure map")


class PresentationFile(BaseModel):
    """Structure-constant file"""
    name: str = Field(description="Presentation name")
    kind: Literal["hopf-algebra", "bialgebra", "enveloping"] = Field(default="hopf-algebra", description="Presentation kind")
    field: FieldSpec = Field(default_factory=FieldSpec, description="Ground field")
    spaces: Dict[str, List[str]] = Field(default_factory=dict, description="Named spaces with basis labels")
    maps: Dict[str, MapSpec] = Field(default_factory=dict, description="Named maps")
    roles: RoleBinding = Field(default_factory=RoleBinding, description="Role bindings")
    base: Optional[BaseSpec] = Field(default=None, description="Base algebra for enveloping presentations")
    datums: List[DatumSpec] = Field(default_factory=list, description="Family data")
    coefficients: List[CoefficientSpec] = Field(default_factory=list, description="Coefficients")

    class Config:
        json_schema_extra = {
            "example": {
                "name": "kc2",
                "field": {"kind": "rational"},
                "spaces": {"H": ["1", "g"]},
                "roles": {"mult": "mu", "unit": "eta", "comult": "delta", "counit": "eps", "antipode": "S"},
            }
        }


# Complex dumps


class MapDump(BaseModel):
    """Operator matrix as (row, column, scalar-string) index triples"""
    rows: int = Field(description="Codomain dimension")
    cols: int = Field(description="Domain dimension")
    entries: List[Tuple[int, int, str]] = Field(default_factory=list, description="Nonzero entries")


class ComplexDump(BaseModel):
    """A para-(co)cyclic complex written to disk"""
    variance: Literal["cocyclic", "cyclic"] = Field(description="Variance")
    field: FieldSpec = Field(description="Ground field")
    provenance: str = Field(default="", description="Family and coefficient")
    spaces: List[List[str]] = Field(description="Basis labels per degree")
    faces: List[List[MapDump]] = Field(description="Face operators per degree")
    degeneracies: List[List[MapDump]] = Field(description="Degeneracy operators per degree")
    cyclic: List[MapDump] = Field(description="Cyclic operator per degree")
