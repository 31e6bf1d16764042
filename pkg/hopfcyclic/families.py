"""
Family Instantiators
The sixteen para-(co)cyclic families written out from their closed formulas:
A1..A8 are para-cocyclic, B1..B8 para-cyclic.

Tensor-type families live on ``X (x) ... (x) X (x) M`` with ``n+1`` copies of
the datum ``X`` at degree ``n``. Hom-type families live on
``Hom(X (x) ... (x) X, Q)``, encoded on ``X (x) ... (x) X (x) Q`` where
``delta_x (x) q`` is the map sending ``e_x`` to ``q``. Slot 0 is the leftmost
factor.

Operators are written as rules on basis tuples. A tensor rule receives the
source tuple and yields ``(target tuple, coefficient)``; a Hom rule receives
the argument tuple of the target and yields ``(source arguments,
coefficient, post)``, where ``post`` is a map ``Q -> Q`` applied to the value
(``None`` for the identity).
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .config import EngineConfig
from .exactlin import Column, FinSpace, LinMap, Scalar, flat_index, split_index, tensor_dims
from .exceptions import KindMismatch, PrerequisiteMissing
from .hopfdata import Coefficient, HopfDatum, _bialgebra_of
from .paracyc import ParaComplex, assemble
from .tensorcat import BaseAlgebra, QuotientSpace, cyclic_tensor, induced_map

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]
TensorTerm = Tuple[Index, Scalar]
HomTerm = Tuple[Index, Scalar, Optional[LinMap]]


@dataclass(frozen=True)
class FamilySpec:
    """Datum and coefficient a family needs, and the shape of its spaces."""

    family: str
    variance: str
    shape: str
    datum_kind: str
    coefficient_kind: str
    title: str


FAMILIES: Dict[str, FamilySpec] = {spec.family: spec for spec in (
    FamilySpec("A1", "cocyclic", "tensor", "module-algebra-left", "comodule-left",
               "module algebra, left comodule"),
    FamilySpec("A2", "cocyclic", "tensor", "comodule-algebra-right", "module-right",
               "comodule algebra, right module"),
    FamilySpec("A3", "cocyclic", "hom", "module-coring-right", "contramodule-left",
               "module coring, left contramodule"),
    FamilySpec("A4", "cocyclic", "hom", "comodule-coring-left", "module-right",
               "comodule coring, right module"),
    FamilySpec("A5", "cocyclic", "tensor", "comodule-coring-left", "module-right",
               "comodule coring, right module"),
    FamilySpec("A6", "cocyclic", "tensor", "module-coring-right", "comodule-left",
               "module coring, left comodule"),
    FamilySpec("A7", "cocyclic", "hom", "module-algebra-left", "contramodule-left",
               "module algebra, left contramodule"),
    FamilySpec("A8", "cocyclic", "hom", "comodule-algebra-right", "module-right",
               "comodule algebra, right module"),
    FamilySpec("B1", "cyclic", "tensor", "comodule-coring-left", "module-left",
               "comodule coring, left module"),
    FamilySpec("B2", "cyclic", "tensor", "module-coring-right", "comodule-right",
               "module coring, right comodule"),
    FamilySpec("B3", "cyclic", "hom", "module-algebra-left", "contramodule-right",
               "module algebra, right contramodule"),
    FamilySpec("B4", "cyclic", "hom", "comodule-algebra-right", "module-left",
               "comodule algebra, left module"),
    FamilySpec("B5", "cyclic", "tensor", "module-algebra-left", "comodule-right",
               "module algebra, right comodule"),
    FamilySpec("B6", "cyclic", "tensor", "comodule-algebra-right", "module-left",
               "comodule algebra, left module"),
    FamilySpec("B7", "cyclic", "hom", "module-coring-right", "contramodule-right",
               "module coring, right contramodule"),
    FamilySpec("B8", "cyclic", "hom", "comodule-coring-left", "module-left",
               "comodule coring, left module"),
)}


def family_spec(family: str) -> FamilySpec:
    try:
        return FAMILIES[family]
    except KeyError:
        raise KindMismatch(f"Unknown family: {family}", expected="A1..A8 or B1..B8",
                           actual=family) from None


# Structure constants


class StructureTable:
    """Column-level access to the structure maps of a datum and a coefficient."""

    def __init__(self, hopf_dim: int, datum: HopfDatum, coefficient: Coefficient):
        self.dh = hopf_dim
        self.datum = datum
        self.coefficient = coefficient
        self.dx = datum.space.dim
        self.dm = coefficient.space.dim
        self.field = datum.field
        self._posts: Dict[Tuple[str, int], LinMap] = {}
        self._dual_coaction: Optional[Dict[int, List[Tuple[int, int, Scalar]]]] = None

    # datum

    def one(self) -> Column:
        return self.datum.algebra.one()

    def mult(self, a: int, b: int) -> Column:
        return self.datum.ring.mult.cols[a * self.dx + b]

    def act(self, h: int, a: int) -> Column:
        """``h . a`` for a left module algebra."""
        return self.datum.structure.cols[h * self.dx + a]

    def act_right(self, c: int, h: int) -> Column:
        """``c . h`` for a right module coring."""
        return self.datum.structure.cols[c * self.dh + h]

    def coact_algebra(self, a: int) -> Iterator[Tuple[int, int, Scalar]]:
        """``a^[0] (x) a^[1]`` as ``(a0, h, coefficient)``."""
        for r, v in self.datum.structure.cols[a].items():
            a0, h = divmod(r, self.dh)
            yield a0, h, v

    def coact_coring(self, c: int) -> Iterator[Tuple[int, int, Scalar]]:
        """``c^[-1] (x) c^[0]`` as ``(h, c0, coefficient)``."""
        for r, v in self.datum.structure.cols[c].items():
            h, c0 = divmod(r, self.dx)
            yield h, c0, v

    def comult(self, c: int) -> Iterator[Tuple[int, int, Scalar]]:
        for r, v in self.datum.coring.comult.cols[c].items():
            c1, c2 = divmod(r, self.dx)
            yield c1, c2, v

    def counit(self, c: int) -> Scalar:
        return self.datum.coring.counit.cols[c].get(0, 0)

    def dual_act(self, h: int, y: int) -> Column:
        """``h . e^y`` on the dual of a right module coring, ``(h . f)(c) = f(c . h)``."""
        def make() -> LinMap:
            space = self.datum.space
            return LinMap(space, space, self.field,
                          tuple(self.act_right(x, h) for x in range(self.dx))).transpose()
        return self._post("dual-act", h, make).cols[y]

    def dual_coaction(self, y: int) -> Iterator[Tuple[int, int, Scalar]]:
        """Right coaction on the dual of a left comodule coring, as ``(x, h, coefficient)``."""
        if self._dual_coaction is None:
            table: Dict[int, List[Tuple[int, int, Scalar]]] = {}
            for x in range(self.dx):
                for h, c0, u in self.coact_coring(x):
                    table.setdefault(c0, []).append((x, h, u))
            self._dual_coaction = table
        yield from self._dual_coaction.get(y, ())

    # coefficient

    def module_left(self, h: int, m: int) -> Column:
        return self.coefficient.structure.cols[h * self.dm + m]

    def module_right(self, m: int, h: int) -> Column:
        return self.coefficient.structure.cols[m * self.dh + h]

    def coact_left(self, m: int) -> Iterator[Tuple[int, int, Scalar]]:
        """``m_{-1} (x) m_0`` as ``(h, m0, coefficient)``."""
        for r, v in self.coefficient.structure.cols[m].items():
            h, m0 = divmod(r, self.dm)
            yield h, m0, v

    def coact_right(self, m: int) -> Iterator[Tuple[int, int, Scalar]]:
        """``m_0 (x) m_1`` as ``(m0, h, coefficient)``."""
        for r, v in self.coefficient.structure.cols[m].items():
            m0, h = divmod(r, self.dh)
            yield m0, h, v

    def alpha(self, h: int) -> LinMap:
        return self._post("alpha", h, lambda: self.coefficient.alpha(h))

    def coaction_by(self, h: int) -> LinMap:
        """``m -> sum m_0`` over the terms of ``m_{-1} (x) m_0`` with ``m_{-1} = e_h``."""
        def make() -> LinMap:
            cols = []
            for m in range(self.dm):
                col: Column = {}
                for g, m0, u in self.coact_left(m):
                    if g == h:
                        col[m0] = self.field.reduce(col.get(m0, 0) + u)
                cols.append({r: v for r, v in col.items() if v})
            return LinMap(self.coefficient.space, self.coefficient.space, self.field, tuple(cols))
        return self._post("coaction", h, make)

    def left_by(self, h: int) -> LinMap:
        """``q -> h q`` on a left module."""
        cols = tuple(self.module_left(h, q) for q in range(self.dm))
        return self._post("left", h, lambda: LinMap(self.coefficient.space, self.coefficient.space,
                                                     self.field, cols))

    def right_by(self, h: int) -> LinMap:
        """``q -> q h`` on a right module."""
        cols = tuple(self.module_right(q, h) for q in range(self.dm))
        return self._post("right", h, lambda: LinMap(self.coefficient.space, self.coefficient.space,
                                                      self.field, cols))

    def _post(self, kind: str, h: int, make: Callable[[], LinMap]) -> LinMap:
        key = (kind, h)
        if key not in self._posts:
            self._posts[key] = make()
        return self._posts[key]


# Operator construction


def tensor_operator(source: Sequence[FinSpace], target: Sequence[FinSpace], fld,
                    rule: Callable[[Index], Iterable[TensorTerm]]) -> LinMap:
    """Map between tensor products given by its action on basis tuples."""
    sdims = [s.dim for s in source]
    tdims = [s.dim for s in target]

    def column(j: int) -> Iterator[Tuple[int, Scalar]]:
        for parts, coef in rule(split_index(j, sdims)):
            yield flat_index(parts, tdims), coef

    return LinMap.from_rule(FinSpace.tensor(*source), FinSpace.tensor(*target), fld, column)


def hom_operator(source_args: Sequence[FinSpace], target_args: Sequence[FinSpace], values: FinSpace,
                 fld, rule: Callable[[Index], Iterable[HomTerm]]) -> LinMap:
    """Map between encoded Hom spaces given by ``(T phi)(x) = sum coef * post(phi(y))``."""
    sdims = [s.dim for s in source_args]
    tdims = [s.dim for s in target_args]
    dq = values.dim

    def entries() -> Iterator[Tuple[int, int, Scalar]]:
        for x in range(tensor_dims(tdims)):
            for ys, coef, post in rule(split_index(x, tdims)):
                y = flat_index(ys, sdims)
                for qc in range(dq):
                    image = {qc: 1} if post is None else post.cols[qc]
                    for qr, v in image.items():
                        yield x * dq + qr, y * dq + qc, coef * v

    return LinMap.from_entries(FinSpace.tensor(*source_args, values),
                               FinSpace.tensor(*target_args, values), fld, entries())


class FamilyBuilder:
    """Degreewise spaces and operators of one family.

    Subclasses supply ``face_rule``, ``degeneracy_rule`` and ``cyclic_rule``.
    Over a non-trivial base the ambient operators are pushed down to the
    cyclic tensor products.
    """

    def __init__(self, spec: FamilySpec, table: StructureTable, base: BaseAlgebra):
        self.spec = spec
        self.table = table
        self.base = base
        self.field = table.field
        self.factor = table.datum.space
        self.values = table.coefficient.space
        self._quotients: Dict[int, QuotientSpace] = {}

    @property
    def descends(self) -> bool:
        return not self.base.is_ground

    def ambient_dim(self, n: int) -> int:
        return self.factor.dim ** (n + 1) * self.values.dim

    def quotient(self, n: int) -> QuotientSpace:
        if n not in self._quotients:
            carriers = [self.table.datum.carrier] * (n + 1) + [self.table.coefficient.carrier]
            self._quotients[n] = cyclic_tensor(carriers)
        return self._quotients[n]

    def space(self, n: int) -> FinSpace:
        if self.descends:
            return self.quotient(n).space
        return FinSpace.tensor(*self._factors(n))

    def _factors(self, n: int) -> List[FinSpace]:
        return [self.factor] * (n + 1) + [self.values]

    def _args(self, n: int) -> List[FinSpace]:
        return [self.factor] * (n + 1)

    def _ends(self, kind: str, n: int) -> Tuple[int, int]:
        cocyclic = self.spec.variance == "cocyclic"
        if kind == "face":
            return (n - 1, n) if cocyclic else (n, n - 1)
        return (n + 1, n) if cocyclic else (n, n + 1)

    def _operator(self, src: int, tgt: int, rule) -> LinMap:
        if self.spec.shape == "tensor":
            op = tensor_operator(self._factors(src), self._factors(tgt), self.field, rule)
        else:
            op = hom_operator(self._args(src), self._args(tgt), self.values, self.field, rule)
        if self.descends:
            return induced_map(op, source=self.quotient(src), target=self.quotient(tgt))
        return op

    def face(self, n: int, i: int) -> LinMap:
        src, tgt = self._ends("face", n)
        return self._operator(src, tgt, lambda p: self.face_rule(n, i, p))

    def degeneracy(self, n: int, j: int) -> LinMap:
        src, tgt = self._ends("degeneracy", n)
        return self._operator(src, tgt, lambda p: self.degeneracy_rule(n, j, p))

    def cyclic(self, n: int) -> LinMap:
        return self._operator(n, n, lambda p: self.cyclic_rule(n, p))

    def face_rule(self, n: int, i: int, p: Index) -> Iterable:
        raise NotImplementedError

    def degeneracy_rule(self, n: int, j: int, p: Index) -> Iterable:
        raise NotImplementedError

    def cyclic_rule(self, n: int, p: Index) -> Iterable:
        raise NotImplementedError


# Shared rules


def _insert_one(table: StructureTable, p: Index, slot: int) -> Iterator[TensorTerm]:
    for u, v in table.one().items():
        yield p[:slot] + (u,) + p[slot:], v


def _multiply_at(table: StructureTable, p: Index, slot: int) -> Iterator[TensorTerm]:
    for r, v in table.mult(p[slot], p[slot + 1]).items():
        yield p[:slot] + (r,) + p[slot + 2:], v


def _split_at(table: StructureTable, p: Index, slot: int) -> Iterator[TensorTerm]:
    for c1, c2, v in table.comult(p[slot]):
        yield p[:slot] + (c1, c2) + p[slot + 1:], v


def _count_at(table: StructureTable, p: Index, slot: int) -> Iterator[TensorTerm]:
    e = table.counit(p[slot])
    if e:
        yield p[:slot] + p[slot + 1:], e


def _plain(terms: Iterable[TensorTerm]) -> Iterator[HomTerm]:
    """Pullback along a tensor rule on arguments, with no post map."""
    for parts, coef in terms:
        yield parts, coef, None


# Para-cocyclic families


class _AlgebraCofaces(FamilyBuilder):
    """Cofaces insert the unit, codegeneracies multiply neighbours."""

    def face_rule(self, n, i, p):
        return _insert_one(self.table, p, i)

    def degeneracy_rule(self, n, j, p):
        return _multiply_at(self.table, p, j)


class A1(_AlgebraCofaces):
    """``t^n(a_0, ..., a_n, m) = (a_1, ..., a_n, m_{-1} . a_0, m_0)``."""

    def cyclic_rule(self, n, p):
        tb = self.table
        for h, m0, u in tb.coact_left(p[n + 1]):
            for r, v in tb.act(h, p[0]).items():
                yield p[1:n + 1] + (r, m0), u * v


class A2(_AlgebraCofaces):
    """``t^n(a_0, ..., a_n, m) = (a_1, ..., a_n, a_0^[0], m a_0^[1])``."""

    def cyclic_rule(self, n, p):
        tb = self.table
        for a0, h, u in tb.coact_algebra(p[0]):
            for r, v in tb.module_right(p[n + 1], h).items():
                yield p[1:n + 1] + (a0, r), u * v


class _CoringHomCofaces(FamilyBuilder):
    """Cofaces pull back along the counit, codegeneracies along the comultiplication."""

    def face_rule(self, n, i, x):
        return _plain(_count_at(self.table, x, i))

    def degeneracy_rule(self, n, j, x):
        return _plain(_split_at(self.table, x, j))


class A3(_CoringHomCofaces):
    """``(t^n phi)(c) = sum_h alpha_h phi(c_n h, c_0, ..., c_{n-1})``."""

    def cyclic_rule(self, n, x):
        tb = self.table
        for h in range(tb.dh):
            for r, v in tb.act_right(x[n], h).items():
                yield (r,) + x[:n], v, tb.alpha(h)


class A4(_CoringHomCofaces):
    """``(t^n phi)(c) = phi(c_n^[0], c_0, ..., c_{n-1}) c_n^[-1]``."""

    def cyclic_rule(self, n, x):
        tb = self.table
        for h, c0, u in tb.coact_coring(x[n]):
            yield (c0,) + x[:n], u, tb.right_by(h)


class _CoringCofaces(FamilyBuilder):
    """Inner cofaces comultiply, codegeneracies apply the counit one slot to the right."""

    def face_rule(self, n, i, p):
        if i < n:
            return _split_at(self.table, p, i)
        return self.last_face(n, p)

    def degeneracy_rule(self, n, j, p):
        return _count_at(self.table, p, j + 1)

    def last_face(self, n: int, p: Index) -> Iterator[TensorTerm]:
        raise NotImplementedError


class A5(_CoringCofaces):
    """``t^n(c_0, ..., c_n, m) = (c_1, ..., c_n, c_0^[0], m c_0^[-1])``."""

    def last_face(self, n, p):
        tb = self.table
        for c1, c2, v in tb.comult(p[0]):
            for h, c1_0, u in tb.coact_coring(c1):
                for r, w in tb.module_right(p[n], h).items():
                    yield (c2,) + p[1:n] + (c1_0, r), v * u * w

    def cyclic_rule(self, n, p):
        tb = self.table
        for h, c0, u in tb.coact_coring(p[0]):
            for r, w in tb.module_right(p[n + 1], h).items():
                yield p[1:n + 1] + (c0, r), u * w


class A6(_CoringCofaces):
    """``t^n(c_0, ..., c_n, m) = (c_1, ..., c_n, c_0 m_{-1}, m_0)``."""

    def last_face(self, n, p):
        tb = self.table
        for c1, c2, v in tb.comult(p[0]):
            for h, m0, u in tb.coact_left(p[n]):
                for r, w in tb.act_right(c1, h).items():
                    yield (c2,) + p[1:n] + (r, m0), v * u * w

    def cyclic_rule(self, n, p):
        tb = self.table
        for h, m0, u in tb.coact_left(p[n + 1]):
            for r, w in tb.act_right(p[0], h).items():
                yield p[1:n + 1] + (r, m0), u * w


class _AlgebraHomCofaces(FamilyBuilder):
    """Inner cofaces pull back along multiplication, codegeneracies along the unit one slot to the right."""

    def face_rule(self, n, i, x):
        if i < n:
            return _plain(_multiply_at(self.table, x, i))
        return self.last_face(n, x)

    def degeneracy_rule(self, n, j, x):
        return _plain(_insert_one(self.table, x, j + 1))

    def last_face(self, n: int, x: Index) -> Iterator[HomTerm]:
        raise NotImplementedError


class A7(_AlgebraHomCofaces):
    """``(t^n phi)(a) = sum_h alpha_h phi(h . a_n, a_0, ..., a_{n-1})``."""

    def last_face(self, n, x):
        tb = self.table
        for h in range(tb.dh):
            for b, v in tb.act(h, x[n]).items():
                for r, u in tb.mult(b, x[0]).items():
                    yield (r,) + x[1:n], v * u, tb.alpha(h)

    def cyclic_rule(self, n, x):
        tb = self.table
        for h in range(tb.dh):
            for r, v in tb.act(h, x[n]).items():
                yield (r,) + x[:n], v, tb.alpha(h)


class A8(_AlgebraHomCofaces):
    """``(t^n phi)(a) = phi(a_n^[0], a_0, ..., a_{n-1}) a_n^[1]``."""

    def last_face(self, n, x):
        tb = self.table
        for a0, h, u in tb.coact_algebra(x[n]):
            for r, v in tb.mult(a0, x[0]).items():
                yield (r,) + x[1:n], u * v, tb.right_by(h)

    def cyclic_rule(self, n, x):
        tb = self.table
        for a0, h, u in tb.coact_algebra(x[n]):
            yield (a0,) + x[:n], u, tb.right_by(h)


# Para-cyclic families


class _CoringFaces(FamilyBuilder):
    """Faces apply the counit, degeneracies comultiply."""

    def face_rule(self, n, i, p):
        return _count_at(self.table, p, i)

    def degeneracy_rule(self, n, j, p):
        return _split_at(self.table, p, j)


class B1(_CoringFaces):
    """``t_n(c_0, ..., c_n, m) = (c_n^[0], c_0, ..., c_{n-1}, c_n^[-1] m)``."""

    def cyclic_rule(self, n, p):
        tb = self.table
        for h, c0, u in tb.coact_coring(p[n]):
            for r, v in tb.module_left(h, p[n + 1]).items():
                yield (c0,) + p[:n] + (r,), u * v


class B2(_CoringFaces):
    """``t_n(c_0, ..., c_n, m) = (c_n m_1, c_0, ..., c_{n-1}, m_0)``."""

    def cyclic_rule(self, n, p):
        tb = self.table
        for m0, h, u in tb.coact_right(p[n + 1]):
            for r, v in tb.act_right(p[n], h).items():
                yield (r,) + p[:n] + (m0,), u * v


class _AlgebraHomFaces(FamilyBuilder):
    """Faces pull back along the unit, degeneracies along multiplication."""

    def face_rule(self, n, i, x):
        return _plain(_insert_one(self.table, x, i))

    def degeneracy_rule(self, n, j, x):
        return _plain(_multiply_at(self.table, x, j))


class B3(_AlgebraHomFaces):
    """``(t_n phi)(a) = sum_h alpha_h phi(a_1, ..., a_n, h . a_0)``."""

    def cyclic_rule(self, n, x):
        tb = self.table
        for h in range(tb.dh):
            for r, v in tb.act(h, x[0]).items():
                yield x[1:] + (r,), v, tb.alpha(h)


class B4(_AlgebraHomFaces):
    """``(t_n phi)(a) = a_0^[1] phi(a_1, ..., a_n, a_0^[0])``."""

    def cyclic_rule(self, n, x):
        tb = self.table
        for a0, h, u in tb.coact_algebra(x[0]):
            yield x[1:] + (a0,), u, tb.left_by(h)


class _AlgebraFaces(FamilyBuilder):
    """Inner faces multiply neighbours, degeneracies insert the unit one slot to the right."""

    def face_rule(self, n, i, p):
        if i < n:
            return _multiply_at(self.table, p, i)
        return self.last_face(n, p)

    def degeneracy_rule(self, n, j, p):
        return _insert_one(self.table, p, j + 1)

    def last_face(self, n: int, p: Index) -> Iterator[TensorTerm]:
        raise NotImplementedError


class B5(_AlgebraFaces):
    """``t_n(a_0, ..., a_n, m) = (m_1 . a_n, a_0, ..., a_{n-1}, m_0)``."""

    def last_face(self, n, p):
        tb = self.table
        for m0, h, u in tb.coact_right(p[n + 1]):
            for b, v in tb.act(h, p[n]).items():
                for r, w in tb.mult(b, p[0]).items():
                    yield (r,) + p[1:n] + (m0,), u * v * w

    def cyclic_rule(self, n, p):
        tb = self.table
        for m0, h, u in tb.coact_right(p[n + 1]):
            for r, v in tb.act(h, p[n]).items():
                yield (r,) + p[:n] + (m0,), u * v


class B6(_AlgebraFaces):
    """``t_n(a_0, ..., a_n, m) = (a_n^[0], a_0, ..., a_{n-1}, a_n^[1] m)``."""

    def last_face(self, n, p):
        tb = self.table
        for a0, h, u in tb.coact_algebra(p[n]):
            for r, v in tb.mult(a0, p[0]).items():
                for s, w in tb.module_left(h, p[n + 1]).items():
                    yield (r,) + p[1:n] + (s,), u * v * w

    def cyclic_rule(self, n, p):
        tb = self.table
        for a0, h, u in tb.coact_algebra(p[n]):
            for s, w in tb.module_left(h, p[n + 1]).items():
                yield (a0,) + p[:n] + (s,), u * w


class _CoringHomFaces(FamilyBuilder):
    """Inner faces pull back along the comultiplication, degeneracies along the counit one slot to the right."""

    def face_rule(self, n, i, x):
        if i < n:
            return _plain(_split_at(self.table, x, i))
        return self.last_face(n, x)

    def degeneracy_rule(self, n, j, x):
        return _plain(_count_at(self.table, x, j + 1))

    def last_face(self, n: int, x: Index) -> Iterator[HomTerm]:
        raise NotImplementedError


class B7(_CoringHomFaces):
    """``(t_n phi)(c) = sum_h alpha_h phi(c_1, ..., c_n, c_0 h)``."""

    def last_face(self, n, x):
        tb = self.table
        for c1, c2, v in tb.comult(x[0]):
            for h in range(tb.dh):
                for r, u in tb.act_right(c1, h).items():
                    yield (c2,) + x[1:] + (r,), v * u, tb.alpha(h)

    def cyclic_rule(self, n, x):
        tb = self.table
        for h in range(tb.dh):
            for r, u in tb.act_right(x[0], h).items():
                yield x[1:] + (r,), u, tb.alpha(h)


class B8(_CoringHomFaces):
    """``(t_n phi)(c) = c_0^[-1] phi(c_1, ..., c_n, c_0^[0])``."""

    def last_face(self, n, x):
        tb = self.table
        for c1, c2, v in tb.comult(x[0]):
            for h, c1_0, u in tb.coact_coring(c1):
                yield (c2,) + x[1:] + (c1_0,), v * u, tb.left_by(h)

    def cyclic_rule(self, n, x):
        tb = self.table
        for h, c0, u in tb.coact_coring(x[0]):
            yield x[1:] + (c0,), u, tb.left_by(h)


BUILDERS = {cls.__name__: cls for cls in (A1, A2, A3, A4, A5, A6, A7, A8,
                                          B1, B2, B3, B4, B5, B6, B7, B8)}


def check_inputs(family: str, datum: HopfDatum, coefficient: Coefficient) -> FamilySpec:
    """Family spec, after checking the datum and coefficient kinds."""
    spec = family_spec(family)
    if datum.kind != spec.datum_kind:
        raise KindMismatch(f"Family {family} needs a {spec.datum_kind} datum",
                           expected=spec.datum_kind, actual=datum.kind)
    if coefficient.kind != spec.coefficient_kind:
        raise KindMismatch(f"Family {family} needs a {spec.coefficient_kind} coefficient",
                           expected=spec.coefficient_kind, actual=coefficient.kind)
    return spec


def family_builder(family: str, over, datum: HopfDatum, coefficient: Coefficient) -> FamilyBuilder:
    spec = check_inputs(family, datum, coefficient)
    B = _bialgebra_of(over)
    if not B.is_over_ground and family != "A1":
        raise PrerequisiteMissing(f"Family {family} is only built over the ground field",
                                  family=family, missing="ground base")
    table = StructureTable(B.space.dim, datum, coefficient)
    return BUILDERS[family](spec, table, B.base)


def build_family(family: str, over, datum: HopfDatum, coefficient: Coefficient,
                 top: Optional[int] = None, config: Optional[EngineConfig] = None) -> ParaComplex:
    """Para-(co)cyclic complex of ``family`` up to degree ``top``."""
    config = config or EngineConfig.from_env()
    top = config.max_degree if top is None else top
    if top < 0:
        raise ValueError(f"top degree must be non-negative, got {top}")
    builder = family_builder(family, over, datum, coefficient)
    for n in range(top + 1):
        config.guard(builder.ambient_dim(n), f"{family} degree {n}")
    provenance = f"{family}: {datum.name} / {coefficient.name}"
    logger.info("Building %s up to degree %d", provenance, top)
    spaces = []
    for n in range(top + 1):
        spaces.append(builder.space(n))
        logger.debug("%s degree %d: dimension %d", family, n, spaces[-1].dim)
    faces = [[builder.face(n, i) for i in range(n + 1)] for n in range(1, top + 1)]
    degeneracies = [[builder.degeneracy(n, j) for j in range(n + 1)] for n in range(top)]
    cyclic = [builder.cyclic(n) for n in range(top + 1)]
    complex_ = assemble(builder.spec.variance, spaces, faces, degeneracies, cyclic,
                        builder.field, provenance)
    logger.info("Built %s: dimensions %s", provenance, complex_.dims)
    return complex_
