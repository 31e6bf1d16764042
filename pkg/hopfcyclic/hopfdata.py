"""
Hopf Data
Structure-constant presentations of rings and corings over a base algebra,
bialgebroids and Hopf algebroids, together with the coefficient objects
(modules, comodules, contramodules) and the module/comodule algebras and
corings that feed the para-cyclic constructions.

Validators never raise on a failed axiom: they return ``CheckRecord`` lists.
Comultiplications are stored as maps into the ambient ``B (x) B``; every
identity that lives in a balanced tensor product is compared after
projecting to it.
"""

import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Optional

from .exactlin import (
    Column,
    Field,
    FinSpace,
    LinMap,
    invert,
    kron,
    permutation_map,
)
from .exceptions import KindMismatch, MissingInverse, PrerequisiteMissing
from .models import CheckRecord, compare_maps
from .tensorcat import (
    BaseAlgebra,
    Bimodule,
    Gap,
    QuotientSpace,
    balanced_quotient,
    chain_tensor,
)

logger = logging.getLogger(__name__)

CHIRALITIES = ("left", "right")

DATUM_KINDS = (
    "module-algebra-left",
    "comodule-algebra-right",
    "module-coring-right",
    "comodule-coring-left",
)

COEFFICIENT_KINDS = (
    "module-left",
    "module-right",
    "comodule-left",
    "comodule-right",
    "contramodule-left",
    "contramodule-right",
)

CONVERTERS = {
    # name: (source side, target side, antipode power used as sigma)
    "I_S": ("left", "right", -1),
    "I_S^-1": ("right", "left", 1),
    "I_Sinv": ("left", "right", 1),
    "I_Sinv^-1": ("right", "left", -1),
}


def _identity(space: FinSpace, fld: Field) -> LinMap:
    return LinMap.identity(space, fld)


def _swap(x: FinSpace, y: FinSpace, fld: Field) -> LinMap:
    return permutation_map([x, y], [1, 0], fld)


def _times(total: BaseAlgebra, x: Column, on_left: bool) -> LinMap:
    """Multiplication by the fixed element ``x`` from the left or from the right."""
    def rule(j: int):
        prod = total.multiply(x, {j: 1}) if on_left else total.multiply({j: 1}, x)
        return prod.items()

    return LinMap.from_rule(total.space, total.space, total.field, rule)


def premult(total: BaseAlgebra, images: LinMap) -> LinMap:
    """``L (x) B -> B``, ``l (x) b -> f(l) b``."""
    return total.mult @ kron(images, _identity(total.space, total.field))


def postmult(total: BaseAlgebra, images: LinMap) -> LinMap:
    """``B (x) L -> B``, ``b (x) l -> b f(l)``."""
    return total.mult @ kron(_identity(total.space, total.field), images)


def _compare_in(name: str, lhs: LinMap, rhs: LinMap, quotient: Optional[QuotientSpace] = None,
                detail: Optional[str] = None) -> CheckRecord:
    if quotient is not None:
        lhs = quotient.projection @ lhs
        rhs = quotient.projection @ rhs
    return compare_maps(name, lhs, rhs, detail=detail)


def _all_equal(name: str, pairs, quotient: Optional[QuotientSpace] = None) -> CheckRecord:
    """One record for a family of identities indexed by base basis elements."""
    for label, lhs, rhs in pairs:
        record = _compare_in(name, lhs, rhs, quotient)
        if not record.passed:
            return record.model_copy(update={"detail": f"at {label}"})
    return CheckRecord(name=name, passed=True)


@dataclass(frozen=True, eq=False)
class RingOverL:
    """Monoid in L-bimodules: multiplication on the ambient ``A (x) A`` and unit ``L -> A``."""

    base: BaseAlgebra
    carrier: Bimodule
    mult: LinMap
    unit: LinMap
    name: str = ""

    @classmethod
    def from_algebra(cls, algebra: BaseAlgebra, base: Optional[BaseAlgebra] = None) -> "RingOverL":
        base = base or BaseAlgebra.ground(algebra.field)
        return cls(base, Bimodule.plain(base, algebra.space, algebra.name),
                   algebra.mult, algebra.unit, algebra.name)

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def space(self) -> FinSpace:
        return self.carrier.space

    @property
    def algebra(self) -> BaseAlgebra:
        """The underlying k-algebra; its unit is the image of ``1_L``."""
        one = self.unit.apply(self.base.one())
        unit = LinMap.from_columns(FinSpace(("1",)), self.space, self.field, [one])
        return BaseAlgebra(self.space, self.mult, unit, self.name)

    def validate(self) -> List[CheckRecord]:
        fld = self.field
        ida = _identity(self.space, fld)
        tag = self.name or "ring"
        records = [
            compare_maps(f"{tag}: associativity",
                         self.mult @ kron(self.mult, ida), self.mult @ kron(ida, self.mult)),
            compare_maps(f"{tag}: unit acts as the left action",
                         self.mult @ kron(self.unit, ida), self.carrier.left),
            compare_maps(f"{tag}: unit acts as the right action",
                         self.mult @ kron(ida, self.unit), self.carrier.right),
        ]
        return records


@dataclass(frozen=True, eq=False)
class CoringOverL:
    """Comonoid in L-bimodules: comultiplication into the ambient ``C (x) C`` and counit ``C -> L``."""

    base: BaseAlgebra
    carrier: Bimodule
    comult: LinMap
    counit: LinMap
    name: str = ""

    @classmethod
    def from_coalgebra(cls, space: FinSpace, comult: LinMap, counit: LinMap,
                       name: str = "", base: Optional[BaseAlgebra] = None) -> "CoringOverL":
        base = base or BaseAlgebra.ground(comult.field)
        return cls(base, Bimodule.plain(base, space, name), comult, counit, name)

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def space(self) -> FinSpace:
        return self.carrier.space

    def validate(self) -> List[CheckRecord]:
        fld = self.field
        C, L = self.carrier, self.base
        idc = _identity(C.space, fld)
        tag = self.name or "coring"
        pair = chain_tensor([C, C])
        triple = chain_tensor([C, C, C])
        regular = Bimodule.regular(L)
        records = [
            _compare_in(f"{tag}: coassociativity",
                        kron(self.comult, idc) @ self.comult, kron(idc, self.comult) @ self.comult, triple),
            compare_maps(f"{tag}: left counit", C.left @ kron(self.counit, idc) @ self.comult, idc),
            compare_maps(f"{tag}: right counit", C.right @ kron(idc, self.counit) @ self.comult, idc),
        ]
        if not L.is_ground:
            records.append(_all_equal(
                f"{tag}: comultiplication is left linear",
                ((L.space.labels[l], self.comult @ C.left_by(l), kron(C.left_by(l), idc) @ self.comult)
                 for l in range(L.dim)), pair))
            records.append(_all_equal(
                f"{tag}: comultiplication is right linear",
                ((L.space.labels[l], self.comult @ C.right_by(l), kron(idc, C.right_by(l)) @ self.comult)
                 for l in range(L.dim)), pair))
            records.append(_all_equal(
                f"{tag}: counit is bilinear",
                ((L.space.labels[l], self.counit @ C.left_by(l), regular.left_by(l) @ self.counit)
                 for l in range(L.dim))))
        return records


@dataclass(frozen=True, eq=False)
class BialgebroidPresentation:
    """Left or right bialgebroid given by structure constants.

    ``source`` and ``target`` map the base into the total algebra,
    ``comult`` is a lift of the comultiplication to ``B (x) B`` and
    ``counit`` maps ``B`` to the base.
    """

    chirality: str
    base: BaseAlgebra
    total: BaseAlgebra
    source: LinMap
    target: LinMap
    comult: LinMap
    counit: LinMap
    name: str = ""

    def __post_init__(self) -> None:
        if self.chirality not in CHIRALITIES:
            raise ValueError(f"Unknown chirality: {self.chirality}")

    @classmethod
    def bialgebra(cls, algebra: BaseAlgebra, comult: LinMap, counit: LinMap,
                  name: str = "", chirality: str = "left") -> "BialgebroidPresentation":
        """A k-bialgebra viewed as a bialgebroid over the ground field."""
        base = BaseAlgebra.ground(algebra.field)
        return cls(chirality, base, algebra, algebra.unit, algebra.unit, comult, counit, name)

    @property
    def field(self) -> Field:
        return self.total.field

    @property
    def space(self) -> FinSpace:
        return self.total.space

    @property
    def algebra(self) -> BaseAlgebra:
        return self.total

    @property
    def is_over_ground(self) -> bool:
        return self.base.is_ground

    @property
    def bimodule(self) -> Bimodule:
        """``B`` as the base bimodule that the comultiplication's tensor square balances.

        Left: ``l b l' = s(l) t(l') b``. Right: ``r b r' = b s(r') t(r)``.
        """
        B, L, fld = self.total, self.base, self.field
        if self.chirality == "left":
            left = premult(B, self.source)
            right = premult(B, self.target) @ _swap(B.space, L.space, fld)
        else:
            left = postmult(B, self.target) @ _swap(L.space, B.space, fld)
            right = postmult(B, self.source)
        return Bimodule(L, B.space,
                        left.relabel(FinSpace.tensor(L.space, B.space), B.space),
                        right.relabel(FinSpace.tensor(B.space, L.space), B.space),
                        self.name)

    @property
    def coring(self) -> CoringOverL:
        return CoringOverL(self.base, self.bimodule, self.comult, self.counit, self.name)

    def square(self) -> QuotientSpace:
        return chain_tensor([self.bimodule] * 2)


def bialgebra_checks(algebra: BaseAlgebra, comult: LinMap, counit: LinMap,
                     name: str = "") -> List[CheckRecord]:
    """Plain k-bialgebra axioms."""
    fld = algebra.field
    H = algebra.space
    idh = _identity(H, fld)
    tag = name or "bialgebra"
    one = kron(algebra.unit, algebra.unit)
    shuffle = permutation_map([H] * 4, [0, 2, 1, 3], fld)
    k = FinSpace(("1",))
    records = algebra.validate()
    records += [
        compare_maps(f"{tag}: coassociativity", kron(comult, idh) @ comult, kron(idh, comult) @ comult),
        compare_maps(f"{tag}: left counit", kron(counit, idh).relabel(None, H) @ comult, idh),
        compare_maps(f"{tag}: right counit", kron(idh, counit).relabel(None, H) @ comult, idh),
        compare_maps(f"{tag}: comultiplication is multiplicative",
                     comult @ algebra.mult, kron(algebra.mult, algebra.mult) @ shuffle @ kron(comult, comult)),
        compare_maps(f"{tag}: comultiplication is unital", comult @ algebra.unit, one.relabel(k, None)),
        compare_maps(f"{tag}: counit is multiplicative",
                     counit @ algebra.mult, kron(counit, counit).relabel(None, k)),
        compare_maps(f"{tag}: counit is unital", counit @ algebra.unit, _identity(k, fld)),
    ]
    return records


def validate_bialgebroid(B: BialgebroidPresentation) -> List[CheckRecord]:
    """Every bialgebroid axiom of the declared chirality."""
    fld = B.field
    L, T = B.base, B.total
    idb = _identity(T.space, fld)
    tag = B.name or "bialgebroid"
    Bt = B.bimodule
    pair = B.square()
    triple = chain_tensor([Bt] * 3)
    regular = Bimodule.regular(L)
    records = [r.model_copy(update={"name": f"{tag}: {r.name}"}) for r in L.validate() + T.validate()]

    # source and target
    records.append(compare_maps(f"{tag}: source is multiplicative",
                                B.source @ L.mult, T.mult @ kron(B.source, B.source)))
    records.append(compare_maps(f"{tag}: source is unital", B.source @ L.unit, T.unit))
    records.append(compare_maps(
        f"{tag}: target is anti-multiplicative",
        B.target @ L.mult, T.mult @ kron(B.target, B.target) @ _swap(L.space, L.space, fld)))
    records.append(compare_maps(f"{tag}: target is unital", B.target @ L.unit, T.unit))
    records.append(compare_maps(
        f"{tag}: source and target commute",
        T.mult @ kron(B.source, B.target),
        T.mult @ kron(B.target, B.source) @ _swap(L.space, L.space, fld)))

    # coring structure
    records.append(_compare_in(f"{tag}: coassociativity",
                               kron(B.comult, idb) @ B.comult, kron(idb, B.comult) @ B.comult, triple))
    if B.chirality == "left":
        records.append(compare_maps(f"{tag}: left counit", Bt.left @ kron(B.counit, idb) @ B.comult, idb))
        records.append(compare_maps(f"{tag}: right counit", Bt.right @ kron(idb, B.counit) @ B.comult, idb))
    else:
        records.append(compare_maps(f"{tag}: left counit", Bt.right @ kron(idb, B.counit) @ B.comult, idb))
        records.append(compare_maps(f"{tag}: right counit", Bt.left @ kron(B.counit, idb) @ B.comult, idb))
    if not L.is_ground:
        records.append(_all_equal(
            f"{tag}: comultiplication is bilinear",
            [(L.space.labels[l], B.comult @ Bt.left_by(l), kron(Bt.left_by(l), idb) @ B.comult)
             for l in range(L.dim)]
            + [(L.space.labels[l], B.comult @ Bt.right_by(l), kron(idb, Bt.right_by(l)) @ B.comult)
               for l in range(L.dim)], pair))
        records.append(_all_equal(
            f"{tag}: counit is bilinear",
            [(L.space.labels[l], B.counit @ Bt.left_by(l), regular.left_by(l) @ B.counit)
             for l in range(L.dim)]
            + [(L.space.labels[l], B.counit @ Bt.right_by(l), regular.right_by(l) @ B.counit)
               for l in range(L.dim)]))
    records.extend(validate_takeuchi(B))

    # multiplicativity
    shuffle = permutation_map([T.space] * 4, [0, 2, 1, 3], fld)
    records.append(_compare_in(f"{tag}: comultiplication is multiplicative",
                               B.comult @ T.mult,
                               kron(T.mult, T.mult) @ shuffle @ kron(B.comult, B.comult), pair))
    records.append(_compare_in(f"{tag}: comultiplication is unital",
                               B.comult @ T.unit, kron(T.unit, T.unit).relabel(T.unit.domain, None), pair))
    records.append(compare_maps(f"{tag}: counit is unital", B.counit @ T.unit, L.unit))
    s_eps = B.source @ B.counit
    t_eps = B.target @ B.counit
    if B.chirality == "left":
        # eps(b b') = eps(b s(eps(b'))) = eps(b t(eps(b')))
        records.append(compare_maps(f"{tag}: counit through source",
                                    B.counit @ T.mult, B.counit @ T.mult @ kron(idb, s_eps)))
        records.append(compare_maps(f"{tag}: counit through target",
                                    B.counit @ T.mult, B.counit @ T.mult @ kron(idb, t_eps)))
    else:
        # eps(b b') = eps(s(eps(b)) b') = eps(t(eps(b)) b')
        records.append(compare_maps(f"{tag}: counit through source",
                                    B.counit @ T.mult, B.counit @ T.mult @ kron(s_eps, idb)))
        records.append(compare_maps(f"{tag}: counit through target",
                                    B.counit @ T.mult, B.counit @ T.mult @ kron(t_eps, idb)))
    logger.debug("Validated bialgebroid %s: %d checks", tag, len(records))
    return records


def validate_takeuchi(B: BialgebroidPresentation) -> List[CheckRecord]:
    """The comultiplication lands in the Takeuchi product.

    Left: ``b_1 t(l) (x) b_2 = b_1 (x) b_2 s(l)``.
    Right: ``s(r) b_1 (x) b_2 = b_1 (x) t(r) b_2``.
    """
    tag = B.name or "bialgebroid"
    name = f"{tag}: Takeuchi product"
    if B.base.is_ground:
        return [CheckRecord(name=name, passed=True, detail="vacuous over the ground field")]
    T, L, fld = B.total, B.base, B.field
    idb = _identity(T.space, fld)
    pair = B.square()
    pairs = []
    for l in range(L.dim):
        s_l = B.source.cols[l]
        t_l = B.target.cols[l]
        if B.chirality == "left":
            lhs = kron(_times(T, t_l, on_left=False), idb) @ B.comult
            rhs = kron(idb, _times(T, s_l, on_left=False)) @ B.comult
        else:
            lhs = kron(_times(T, s_l, on_left=True), idb) @ B.comult
            rhs = kron(idb, _times(T, t_l, on_left=True)) @ B.comult
        pairs.append((L.space.labels[l], lhs, rhs))
    return [_all_equal(name, pairs, pair)]


@dataclass(frozen=True, eq=False)
class HopfAlgebroidPresentation:
    """Left and right bialgebroid on one total algebra, with antipode."""

    left: BialgebroidPresentation
    right: BialgebroidPresentation
    antipode: LinMap
    antipode_inverse: Optional[LinMap] = None
    name: str = ""

    @classmethod
    def hopf_algebra(cls, algebra: BaseAlgebra, comult: LinMap, counit: LinMap, antipode: LinMap,
                     antipode_inverse: Optional[LinMap] = None, name: str = "") -> "HopfAlgebroidPresentation":
        left = BialgebroidPresentation.bialgebra(algebra, comult, counit, name, "left")
        right = BialgebroidPresentation.bialgebra(algebra, comult, counit, name, "right")
        return cls(left, right, antipode, antipode_inverse, name)

    @property
    def field(self) -> Field:
        return self.left.field

    @property
    def space(self) -> FinSpace:
        return self.left.space

    @property
    def algebra(self) -> BaseAlgebra:
        return self.left.total

    @property
    def comult(self) -> LinMap:
        return self.left.comult

    @property
    def counit(self) -> LinMap:
        return self.left.counit

    @property
    def is_hopf_algebra(self) -> bool:
        return self.left.base.is_ground

    def require_inverse(self) -> LinMap:
        if self.antipode_inverse is None:
            raise MissingInverse(f"{self.name or 'presentation'} declares no inverse antipode",
                                 structure="antipode")
        return self.antipode_inverse

    def with_computed_inverse(self) -> "HopfAlgebroidPresentation":
        """Same presentation with ``S^-1`` obtained by matrix inversion."""
        return replace(self, antipode_inverse=invert(self.antipode))

    def sigma(self, power: int) -> LinMap:
        """``S`` for ``power = 1`` and ``S^-1`` for ``power = -1``."""
        return self.antipode if power == 1 else self.require_inverse()


def validate_hopf_algebroid(H: HopfAlgebroidPresentation) -> List[CheckRecord]:
    """Both constituent bialgebroids plus the Hopf algebroid compatibilities."""
    tag = H.name or "hopf"
    left, right = H.left, H.right
    T, fld = left.total, H.field
    idb = _identity(T.space, fld)
    S = H.antipode
    records: List[CheckRecord] = []
    if H.is_hopf_algebra:
        records += bialgebra_checks(T, left.comult, left.counit, tag)
    else:
        records += validate_bialgebroid(left)
        records += validate_bialgebroid(right)
        records += [
            compare_maps(f"{tag}: s_L eps_L t_R = t_R", left.source @ left.counit @ right.target, right.target),
            compare_maps(f"{tag}: t_L eps_L s_R = s_R", left.target @ left.counit @ right.source, right.source),
            compare_maps(f"{tag}: s_R eps_R t_L = t_L", right.source @ right.counit @ left.target, left.target),
            compare_maps(f"{tag}: t_R eps_R s_L = s_L", right.target @ right.counit @ left.source, left.source),
        ]
        BL, BR = left.bimodule, right.bimodule
        lr = balanced_quotient([T.space] * 3, [Gap(0, left.base, BL.right, BL.left),
                                               Gap(1, right.base, BR.right, BR.left)], fld=fld)
        rl = balanced_quotient([T.space] * 3, [Gap(0, right.base, BR.right, BR.left),
                                               Gap(1, left.base, BL.right, BL.left)], fld=fld)
        records.append(_compare_in(f"{tag}: mixed coassociativity (L then R)",
                                   kron(left.comult, idb) @ right.comult,
                                   kron(idb, right.comult) @ left.comult, lr))
        records.append(_compare_in(f"{tag}: mixed coassociativity (R then L)",
                                   kron(right.comult, idb) @ left.comult,
                                   kron(idb, left.comult) @ right.comult, rl))
        pairs = []
        for l in range(left.base.dim):
            for r in range(right.base.dim):
                lhs = S @ _times(T, left.target.cols[l], on_left=True) @ _times(T, right.target.cols[r], on_left=False)
                rhs = _times(T, right.source.cols[r], on_left=True) @ _times(T, left.source.cols[l], on_left=False) @ S
                pairs.append((f"{left.base.space.labels[l]},{right.base.space.labels[r]}", lhs, rhs))
        records.append(_all_equal(f"{tag}: antipode is twisted linear", pairs))
    records.append(compare_maps(f"{tag}: antipode left",
                                T.mult @ kron(S, idb) @ left.comult, right.source @ right.counit))
    records.append(compare_maps(f"{tag}: antipode right",
                                T.mult @ kron(idb, S) @ right.comult, left.source @ left.counit))
    if H.antipode_inverse is not None:
        records.append(compare_maps(f"{tag}: S S^-1 = id", S @ H.antipode_inverse, idb))
        records.append(compare_maps(f"{tag}: S^-1 S = id", H.antipode_inverse @ S, idb))
    return records


def validate(presentation) -> List[CheckRecord]:
    """Every axiom the presentation's type declares."""
    if isinstance(presentation, HopfAlgebroidPresentation):
        return validate_hopf_algebroid(presentation)
    if isinstance(presentation, BialgebroidPresentation):
        if presentation.is_over_ground:
            return bialgebra_checks(presentation.total, presentation.comult, presentation.counit,
                                    presentation.name) + validate_takeuchi(presentation)
        return validate_bialgebroid(presentation)
    raise KindMismatch("Not a presentation", expected="presentation", actual=type(presentation).__name__)


def antipode_order(H: HopfAlgebroidPresentation, cap: int = 16) -> Optional[int]:
    """Smallest ``k <= cap`` with ``S^k = id``."""
    power = H.antipode
    for k in range(1, cap + 1):
        if power.is_identity():
            return k
        power = H.antipode @ power
    return None


# Coefficients and family data


def _bialgebra_of(over) -> BialgebroidPresentation:
    if isinstance(over, HopfAlgebroidPresentation):
        return over.left
    return over


@dataclass(frozen=True, eq=False)
class Coefficient:
    """Module, comodule or contramodule.

    Shapes of ``structure`` by kind: ``H (x) M -> M`` (module-left),
    ``M (x) H -> M`` (module-right), ``M -> H (x) M`` (comodule-left),
    ``M -> M (x) H`` (comodule-right) and ``H (x) Q -> Q`` for both
    contramodule kinds, where ``delta_h (x) q`` encodes the map
    ``H -> Q`` sending ``e_h`` to ``q``.
    """

    name: str
    kind: str
    carrier: Bimodule
    structure: LinMap

    def __post_init__(self) -> None:
        if self.kind not in COEFFICIENT_KINDS:
            raise KindMismatch(f"Unknown coefficient kind for {self.name}", expected="coefficient kind",
                               actual=self.kind)

    @property
    def space(self) -> FinSpace:
        return self.carrier.space

    @property
    def field(self) -> Field:
        return self.structure.field

    @property
    def side(self) -> str:
        return self.kind.rsplit("-", 1)[1]

    @property
    def flavor(self) -> str:
        return self.kind.rsplit("-", 1)[0]

    def alpha(self, h: int) -> LinMap:
        """Contramodule component ``alpha_h = alpha(delta_h (x) -)``."""
        dq = self.space.dim
        return LinMap(self.space, self.space, self.field,
                      tuple(self.structure.cols[h * dq + q] for q in range(dq)))


@dataclass(frozen=True, eq=False)
class HopfDatum:
    """Module algebra, comodule algebra, module coring or comodule coring.

    ``structure`` is ``H (x) A -> A`` (module-algebra-left),
    ``A -> A (x) H`` (comodule-algebra-right), ``C (x) H -> C``
    (module-coring-right) or ``C -> H (x) C`` (comodule-coring-left).
    """

    name: str
    kind: str
    structure: LinMap
    ring: Optional[RingOverL] = None
    coring: Optional[CoringOverL] = None

    def __post_init__(self) -> None:
        if self.kind not in DATUM_KINDS:
            raise KindMismatch(f"Unknown datum kind for {self.name}", expected="datum kind", actual=self.kind)
        if self.is_algebra and self.ring is None:
            raise KindMismatch(f"Datum {self.name} needs a ring", expected="ring", actual="coring")
        if not self.is_algebra and self.coring is None:
            raise KindMismatch(f"Datum {self.name} needs a coring", expected="coring", actual="ring")

    @property
    def is_algebra(self) -> bool:
        return "algebra" in self.kind

    @property
    def carrier(self) -> Bimodule:
        return self.ring.carrier if self.is_algebra else self.coring.carrier

    @property
    def space(self) -> FinSpace:
        return self.carrier.space

    @property
    def field(self) -> Field:
        return self.structure.field

    @property
    def algebra(self) -> BaseAlgebra:
        return self.ring.algebra


def _require_ground(over, what: str) -> BialgebroidPresentation:
    B = _bialgebra_of(over)
    if not B.is_over_ground:
        raise PrerequisiteMissing(f"{what} over a non-trivial base is not supported",
                                  missing="ground base")
    return B


def validate_coefficient(c: Coefficient, over) -> List[CheckRecord]:
    """Axioms of the coefficient's declared kind."""
    B = _bialgebra_of(over)
    if not B.is_over_ground and c.kind not in ("comodule-left", "module-left"):
        _require_ground(over, f"Coefficient kind {c.kind}")
    fld = B.field
    H = B.space
    M = c.space
    idh, idm = _identity(H, fld), _identity(M, fld)
    T = B.total
    tag = c.name or c.kind
    x = c.structure
    records: List[CheckRecord] = []
    if c.kind == "module-left":
        records.append(compare_maps(f"{tag}: action associative", x @ kron(T.mult, idm), x @ kron(idh, x)))
        records.append(compare_maps(f"{tag}: action unital", x @ kron(T.unit, idm).relabel(M, None), idm))
    elif c.kind == "module-right":
        records.append(compare_maps(f"{tag}: action associative", x @ kron(idm, T.mult), x @ kron(x, idh)))
        records.append(compare_maps(f"{tag}: action unital", x @ kron(idm, T.unit).relabel(M, None), idm))
    elif c.kind == "comodule-left":
        quotient = chain_tensor([B.bimodule, B.bimodule, c.carrier])
        records.append(_compare_in(f"{tag}: coaction coassociative",
                                   kron(B.comult, idm) @ x, kron(idh, x) @ x, quotient))
        lhs = c.carrier.left @ kron(B.counit, idm) @ x
        records.append(compare_maps(f"{tag}: coaction counital", lhs, idm))
    elif c.kind == "comodule-right":
        records.append(compare_maps(f"{tag}: coaction coassociative",
                                    kron(x, idh) @ x, kron(idm, B.comult) @ x))
        records.append(compare_maps(f"{tag}: coaction counital", kron(idm, B.counit).relabel(None, M) @ x, idm))
    else:
        # alpha_b alpha_a (left) or alpha_a alpha_b (right) against sum_h Delta_h^{ab} alpha_h
        nested = x @ kron(idh, x)
        if c.kind == "contramodule-left":
            nested = nested @ permutation_map([H, H, M], [1, 0, 2], fld)
        records.append(compare_maps(f"{tag}: contra-associative", nested, x @ kron(B.comult.transpose(), idm)))
        records.append(compare_maps(f"{tag}: contra-unital",
                                    x @ kron(B.counit.transpose(), idm).relabel(M, None), idm))
    return records


def validate_datum(d: HopfDatum, over) -> List[CheckRecord]:
    """Algebra or coring axioms plus compatibility with the (co)action."""
    B = _bialgebra_of(over)
    if not B.is_over_ground and d.kind != "module-algebra-left":
        _require_ground(over, f"Datum kind {d.kind}")
    fld = B.field
    H, T = B.space, B.total
    idh = _identity(H, fld)
    tag = d.name or d.kind
    x = d.structure
    def middle_swap(*spaces: FinSpace) -> LinMap:
        return permutation_map(list(spaces), [0, 2, 1, 3], fld)

    records: List[CheckRecord] = []
    if d.is_algebra:
        A = d.ring
        ida = _identity(A.space, fld)
        records += A.validate()
        if d.kind == "module-algebra-left":
            records.append(compare_maps(f"{tag}: action associative", x @ kron(T.mult, ida), x @ kron(idh, x)))
            records.append(compare_maps(f"{tag}: action unital",
                                        x @ kron(T.unit, ida).relabel(A.space, None), ida))
            # h (ab) = (h_1 a)(h_2 b)
            lhs = x @ kron(idh, A.mult)
            rhs = A.mult @ kron(x, x) @ middle_swap(H, H, A.space, A.space) @ kron(B.comult, kron(ida, ida))
            records.append(compare_maps(f"{tag}: action multiplicative", lhs, rhs))
            # h 1 = eps(h) 1
            one = A.unit @ B.counit
            records.append(compare_maps(f"{tag}: action unit-preserving",
                                        x @ kron(idh, A.unit @ B.base.unit).relabel(H, None), one))
        else:
            records.append(compare_maps(f"{tag}: coaction coassociative",
                                        kron(x, idh) @ x, kron(ida, B.comult) @ x))
            records.append(compare_maps(f"{tag}: coaction counital",
                                        kron(ida, B.counit).relabel(None, A.space) @ x, ida))
            lhs = x @ A.mult
            rhs = kron(A.mult, T.mult) @ middle_swap(A.space, H, A.space, H) @ kron(x, x)
            records.append(compare_maps(f"{tag}: coaction multiplicative", lhs, rhs))
            records.append(compare_maps(f"{tag}: coaction unit-preserving", x @ A.unit,
                                        kron(A.unit, T.unit).relabel(A.unit.domain, None)))
        return records
    C = d.coring
    idc = _identity(C.space, fld)
    records += C.validate()
    if d.kind == "module-coring-right":
        records.append(compare_maps(f"{tag}: action associative", x @ kron(idc, T.mult), x @ kron(x, idh)))
        records.append(compare_maps(f"{tag}: action unital",
                                    x @ kron(idc, T.unit).relabel(C.space, None), idc))
        # Delta(c h) = c_1 h_1 (x) c_2 h_2
        lhs = C.comult @ x
        rhs = kron(x, x) @ middle_swap(C.space, C.space, H, H) @ kron(C.comult, B.comult)
        records.append(compare_maps(f"{tag}: comultiplication equivariant", lhs, rhs))
        records.append(compare_maps(f"{tag}: counit equivariant",
                                    C.counit @ x, kron(C.counit, B.counit).relabel(None, C.counit.codomain)))
    else:
        records.append(compare_maps(f"{tag}: coaction coassociative",
                                    kron(B.comult, idc) @ x, kron(idh, x) @ x))
        records.append(compare_maps(f"{tag}: coaction counital",
                                    kron(B.counit, idc).relabel(None, C.space) @ x, idc))
        # (c_1)_{-1} (c_2)_{-1} (x) (c_1)_0 (x) (c_2)_0 = c_{-1} (x) Delta(c_0)
        lhs = kron(T.mult, kron(idc, idc)) @ permutation_map([H, C.space, H, C.space], [0, 2, 1, 3], fld) \
            @ kron(x, x) @ C.comult
        rhs = kron(idh, C.comult) @ x
        records.append(compare_maps(f"{tag}: coaction comultiplicative", lhs, rhs))
        records.append(compare_maps(f"{tag}: coaction counit-compatible",
                                    kron(idh, C.counit).relabel(None, H) @ x, T.unit @ C.counit))
    return records


def apply_I(converter: str, c: Coefficient, over: HopfAlgebroidPresentation) -> Coefficient:
    """Transport a coefficient to the other side along the antipode.

    ``I_S`` and ``I_Sinv`` go from left to right objects, ``I_S^-1`` and
    ``I_Sinv^-1`` back. Writing sigma for the antipode power the converter
    uses, modules get ``n h = sigma(h) n`` (or ``h n = n sigma(h)``),
    comodules ``m_0 (x) sigma(m_{-1})`` (or ``sigma(m_1) (x) m_0``) and
    contramodules ``alpha'(f) = alpha(f o sigma)``.
    """
    if converter not in CONVERTERS:
        raise KindMismatch(f"Unknown converter: {converter}", expected=", ".join(CONVERTERS), actual=converter)
    if not isinstance(over, HopfAlgebroidPresentation):
        raise KindMismatch("Converters need a Hopf presentation", expected="hopf", actual=type(over).__name__)
    _require_ground(over, "Antipode converters")
    source_side, target_side, power = CONVERTERS[converter]
    if c.side != source_side:
        raise KindMismatch(f"{converter} converts {source_side} objects", expected=f"{c.flavor}-{source_side}",
                           actual=c.kind)
    sigma = over.sigma(power)
    fld = over.field
    H, M = over.space, c.space
    idm = _identity(M, fld)
    x = c.structure
    if c.flavor == "module":
        if source_side == "left":
            structure = x @ kron(sigma, idm) @ _swap(M, H, fld)
        else:
            structure = x @ kron(idm, sigma) @ _swap(H, M, fld)
    elif c.flavor == "comodule":
        if source_side == "left":
            structure = _swap(H, M, fld) @ kron(sigma, idm) @ x
        else:
            structure = _swap(M, H, fld) @ kron(idm, sigma) @ x
    else:
        structure = x @ kron(sigma.transpose(), idm)
    name = f"{converter}({c.name})"
    logger.debug("Converted %s with %s", c.name, converter)
    return Coefficient(name, f"{c.flavor}-{target_side}", c.carrier, structure)
