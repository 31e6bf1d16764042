"""
Para-(co)cyclic Complexes
Containers for para-cocyclic and para-cyclic objects in vector spaces, the
relation checker, the order probe for the cyclic operators and degreewise
comparison of two complexes.

Index conventions, for a complex built up to degree ``N``:

* cocyclic: ``faces[n][i] = d^i : Z^{n-1} -> Z^n`` for ``1 <= n <= N``,
  ``degeneracies[n][j] = s^j : Z^{n+1} -> Z^n`` for ``0 <= n < N``;
* cyclic: ``faces[n][i] = d_i : Z_n -> Z_{n-1}``,
  ``degeneracies[n][j] = s_j : Z_n -> Z_{n+1}``;
* ``cyclic[n] = t_n : Z_n -> Z_n`` in both variances.

The cyclic relation list is the formal dual of the cocyclic one:

    d_i d_j = d_{j-1} d_i                 (i < j)
    s_i s_j = s_{j+1} s_i                 (i <= j)
    d_i s_j = s_{j-1} d_i                 (i < j)
    d_j s_j = d_{j+1} s_j = id
    d_i s_j = s_j d_{i-1}                 (i > j + 1)
    d_0 t_n = d_n
    d_k t_n = t_{n-1} d_{k-1}             (1 <= k <= n)
    s_0 t_n = t_{n+1}^2 s_n
    s_k t_n = t_{n+1} s_{k-1}             (1 <= k <= n)
"""

import logging
from dataclasses import dataclass, replace
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .exactlin import Field, FinSpace, LinMap, invert
from .exceptions import KindMismatch, SingularMap
from .models import CheckRecord, compare_maps

logger = logging.getLogger(__name__)

VARIANCES = ("cocyclic", "cyclic")


@dataclass(frozen=True, eq=False)
class ParaComplex:
    """Para-cocyclic or para-cyclic object, truncated at degree ``top``."""

    variance: str
    spaces: Tuple[FinSpace, ...]
    faces: Tuple[Tuple[LinMap, ...], ...]
    degeneracies: Tuple[Tuple[LinMap, ...], ...]
    cyclic: Tuple[LinMap, ...]
    field: Field
    provenance: str = ""

    def __post_init__(self) -> None:
        if self.variance not in VARIANCES:
            raise KindMismatch("Unknown variance", expected="cocyclic or cyclic", actual=self.variance)
        n = len(self.spaces)
        if len(self.faces) != n or len(self.cyclic) != n or len(self.degeneracies) != max(n - 1, 0):
            raise ValueError("Operator lists do not match the number of degrees")
        for k, ops in enumerate(self.faces):
            if len(ops) != (k + 1 if k else 0):
                raise ValueError(f"Degree {k} needs {k + 1 if k else 0} faces, got {len(ops)}")
        for k, ops in enumerate(self.degeneracies):
            if len(ops) != k + 1:
                raise ValueError(f"Degree {k} needs {k + 1} degeneracies, got {len(ops)}")
        for m in self.operators():
            if m.field != self.field:
                raise ValueError("All operators must live over the complex's field")

    @property
    def top(self) -> int:
        return len(self.spaces) - 1

    @property
    def dims(self) -> List[int]:
        return [s.dim for s in self.spaces]

    def face(self, n: int, i: int) -> LinMap:
        return self.faces[n][i]

    def degeneracy(self, n: int, j: int) -> LinMap:
        return self.degeneracies[n][j]

    def t(self, n: int) -> LinMap:
        return self.cyclic[n]

    def face_ends(self, n: int) -> Tuple[int, int]:
        """Source and target degree of the faces indexed by ``n``."""
        return (n - 1, n) if self.variance == "cocyclic" else (n, n - 1)

    def degeneracy_ends(self, n: int) -> Tuple[int, int]:
        return (n + 1, n) if self.variance == "cocyclic" else (n, n + 1)

    def operators(self) -> Iterator[LinMap]:
        for ops in self.faces:
            yield from ops
        for ops in self.degeneracies:
            yield from ops
        yield from self.cyclic

    def truncate(self, top: int) -> "ParaComplex":
        top = min(top, self.top)
        return replace(self, spaces=self.spaces[: top + 1], faces=self.faces[: top + 1],
                       degeneracies=self.degeneracies[:top], cyclic=self.cyclic[: top + 1])

    def with_cyclic(self, n: int, t: LinMap) -> "ParaComplex":
        """Copy with the cyclic operator at degree ``n`` replaced."""
        cyclic = list(self.cyclic)
        cyclic[n] = t
        return replace(self, cyclic=tuple(cyclic))

    def equals(self, other: "ParaComplex") -> bool:
        """Entrywise equality of every operator."""
        if self.variance != other.variance or self.dims != other.dims or self.field != other.field:
            return False
        return all(a == b for a, b in zip(self.operators(), other.operators()))


def assemble(variance: str, spaces: Sequence[FinSpace], faces: Sequence[Sequence[LinMap]],
             degeneracies: Sequence[Sequence[LinMap]], cyclic: Sequence[LinMap], fld: Field,
             provenance: str = "") -> ParaComplex:
    """Freeze operator lists into a ``ParaComplex``; ``faces[0]`` may be omitted."""
    faces = list(faces)
    if len(faces) == len(spaces) - 1:
        faces = [()] + faces
    complex_ = ParaComplex(
        variance,
        tuple(spaces),
        tuple(tuple(ops) for ops in faces),
        tuple(tuple(ops) for ops in degeneracies),
        tuple(cyclic),
        fld,
        provenance,
    )
    logger.debug("Assembled %s complex %s with dims %s", variance, provenance, complex_.dims)
    return complex_


# Relations


def _rec(name: str, lhs: LinMap, rhs: LinMap, degree: int, **indices) -> CheckRecord:
    detail = ", ".join(f"{k}={v}" for k, v in indices.items()) or None
    return compare_maps(name, lhs, rhs, degree=degree, detail=detail)


def _identity(c: ParaComplex, n: int) -> LinMap:
    return LinMap.identity(c.spaces[n], c.field)


def _cocyclic_laws(c: ParaComplex, degrees: Sequence[int]) -> Iterator[CheckRecord]:
    N = c.top
    d, s, t = c.face, c.degeneracy, c.t
    for n in degrees:
        # d^j d^i = d^i d^(j-1) : Z^{n-1} -> Z^{n+1}
        if 1 <= n and n + 1 <= N:
            for j in range(n + 2):
                for i in range(j):
                    yield _rec("d^j d^i = d^i d^(j-1)", d(n + 1, j) @ d(n, i), d(n + 1, i) @ d(n, j - 1), n, i=i, j=j)
        # s^j s^i = s^i s^(j+1) : Z^{n+2} -> Z^n
        if n + 2 <= N:
            for j in range(n + 1):
                for i in range(j + 1):
                    yield _rec("s^j s^i = s^i s^(j+1)", s(n, j) @ s(n + 1, i), s(n, i) @ s(n + 1, j + 1), n, i=i, j=j)
        # s^j d^i : Z^n -> Z^n
        if n + 1 <= N:
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = s(n, j) @ d(n + 1, i)
                    if i < j:
                        if n >= 1:
                            yield _rec("s^j d^i = d^i s^(j-1)", lhs, d(n, i) @ s(n - 1, j - 1), n, i=i, j=j)
                    elif i in (j, j + 1):
                        yield _rec("s^j d^i = id", lhs, _identity(c, n), n, i=i, j=j)
                    elif n >= 1:
                        yield _rec("s^j d^i = d^(i-1) s^j", lhs, d(n, i - 1) @ s(n - 1, j), n, i=i, j=j)
        if n >= 1:
            yield _rec("t^n d^0 = d^n", t(n) @ d(n, 0), d(n, n), n)
            for k in range(1, n + 1):
                yield _rec("t^n d^k = d^(k-1) t^(n-1)", t(n) @ d(n, k), d(n, k - 1) @ t(n - 1), n, k=k)
        if n + 1 <= N:
            yield _rec("t^n s^0 = s^n t^(n+1) t^(n+1)", t(n) @ s(n, 0), s(n, n) @ t(n + 1) @ t(n + 1), n)
            for k in range(1, n + 1):
                yield _rec("t^n s^k = s^(k-1) t^(n+1)", t(n) @ s(n, k), s(n, k - 1) @ t(n + 1), n, k=k)


def _cyclic_laws(c: ParaComplex, degrees: Sequence[int]) -> Iterator[CheckRecord]:
    N = c.top
    d, s, t = c.face, c.degeneracy, c.t
    for n in degrees:
        # d_i d_j = d_{j-1} d_i : Z_{n+1} -> Z_{n-1}
        if 1 <= n and n + 1 <= N:
            for j in range(n + 2):
                for i in range(j):
                    yield _rec("d_i d_j = d_(j-1) d_i", d(n, i) @ d(n + 1, j), d(n, j - 1) @ d(n + 1, i), n, i=i, j=j)
        # s_i s_j = s_{j+1} s_i : Z_n -> Z_{n+2}
        if n + 2 <= N:
            for j in range(n + 1):
                for i in range(j + 1):
                    yield _rec("s_i s_j = s_(j+1) s_i", s(n + 1, i) @ s(n, j), s(n + 1, j + 1) @ s(n, i), n, i=i, j=j)
        # d_i s_j : Z_n -> Z_n
        if n + 1 <= N:
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = d(n + 1, i) @ s(n, j)
                    if i < j:
                        if n >= 1:
                            yield _rec("d_i s_j = s_(j-1) d_i", lhs, s(n - 1, j - 1) @ d(n, i), n, i=i, j=j)
                    elif i in (j, j + 1):
                        yield _rec("d_i s_j = id", lhs, _identity(c, n), n, i=i, j=j)
                    elif n >= 1:
                        yield _rec("d_i s_j = s_j d_(i-1)", lhs, s(n - 1, j) @ d(n, i - 1), n, i=i, j=j)
        if n >= 1:
            yield _rec("d_0 t_n = d_n", d(n, 0) @ t(n), d(n, n), n)
            for k in range(1, n + 1):
                yield _rec("d_k t_n = t_(n-1) d_(k-1)", d(n, k) @ t(n), t(n - 1) @ d(n, k - 1), n, k=k)
        if n + 1 <= N:
            yield _rec("s_0 t_n = t_(n+1) t_(n+1) s_n", s(n, 0) @ t(n), t(n + 1) @ t(n + 1) @ s(n, n), n)
            for k in range(1, n + 1):
                yield _rec("s_k t_n = t_(n+1) s_(k-1)", s(n, k) @ t(n), t(n + 1) @ s(n, k - 1), n, k=k)


def check_laws(c: ParaComplex, degrees: Optional[Sequence[int]] = None) -> List[CheckRecord]:
    """Every (co)simplicial and para-(co)cyclic relation that fits below ``c.top``.

    A relation is listed under the lowest degree it touches.
    """
    degrees = list(range(c.top + 1)) if degrees is None else list(degrees)
    laws = _cocyclic_laws if c.variance == "cocyclic" else _cyclic_laws
    records = list(laws(c, degrees))
    failed = sum(1 for r in records if not r.passed)
    logger.debug("Checked %d relations on %s (%d failed)", len(records), c.provenance or c.variance, failed)
    return records


def t_order_probe(c: ParaComplex, cap: int = 24, degrees: Optional[Sequence[int]] = None) -> Dict[int, Optional[int]]:
    """Smallest ``k <= cap`` with ``t_n^k = id`` per degree, ``None`` when there is none."""
    degrees = range(c.top + 1) if degrees is None else degrees
    orders: Dict[int, Optional[int]] = {}
    for n in degrees:
        t = c.t(n)
        power = t
        orders[n] = None
        for k in range(1, cap + 1):
            if power.is_identity():
                orders[n] = k
                break
            power = t @ power
    return orders


def is_strictly_cyclic(c: ParaComplex) -> bool:
    """Whether ``t_n^{n+1} = id`` at every degree."""
    return all(c.t(n).power(n + 1).is_identity() for n in range(c.top + 1))


def invertible_cyclic(c: ParaComplex) -> List[LinMap]:
    """Inverses of the cyclic operators; ``SingularMap`` names the first bad degree."""
    out = []
    for n, t in enumerate(c.cyclic):
        try:
            out.append(invert(t))
        except SingularMap as e:
            raise SingularMap(f"Cyclic operator is not invertible at degree {n}", degree=n,
                              rank=e.rank, dimension=e.dimension) from e
    return out


# Comparison


def complexes_isomorphic(x: ParaComplex, y: ParaComplex, maps: Sequence[LinMap]) -> List[CheckRecord]:
    """Degreewise ``maps[n] : X_n -> Y_n`` are invertible and intertwine all operators."""
    if x.variance != y.variance:
        return [CheckRecord(name="same variance", passed=False, detail=f"{x.variance} vs {y.variance}")]
    if x.field != y.field:
        return [CheckRecord(name="same field", passed=False,
                            detail=f"{x.field.describe()} vs {y.field.describe()}")]
    top = min(x.top, y.top, len(maps) - 1)
    records: List[CheckRecord] = []
    for n in range(top + 1):
        f = maps[n]
        square = f.domain.dim == f.codomain.dim
        full = square and f.rank() == f.domain.dim
        records.append(CheckRecord(name="comparison invertible", degree=n, passed=full,
                                   detail=None if full else f"{f.codomain.dim}x{f.domain.dim}"))
    if not all(r.passed for r in records):
        return records
    for n in range(top + 1):
        records.append(compare_maps("commutes with t", maps[n] @ x.t(n), y.t(n) @ maps[n], degree=n))
        if n >= 1:
            src, tgt = x.face_ends(n)
            if src <= top and tgt <= top:
                for i in range(n + 1):
                    records.append(_rec("commutes with faces", maps[tgt] @ x.face(n, i),
                                        y.face(n, i) @ maps[src], n, i=i))
        if n < top:
            src, tgt = x.degeneracy_ends(n)
            for j in range(n + 1):
                records.append(_rec("commutes with degeneracies", maps[tgt] @ x.degeneracy(n, j),
                                    y.degeneracy(n, j) @ maps[src], n, j=j))
    return records


def conjugate(c: ParaComplex, maps: Sequence[LinMap]) -> ParaComplex:
    """Transport every operator along invertible ``maps[n] : Z_n -> Y_n``."""
    inverses = [invert(m) for m in maps]

    def move(op: LinMap, src: int, tgt: int) -> LinMap:
        return maps[tgt] @ op @ inverses[src]

    faces = [()] + [tuple(move(op, *c.face_ends(n)) for op in c.faces[n]) for n in range(1, c.top + 1)]
    degeneracies = [tuple(move(op, *c.degeneracy_ends(n)) for op in c.degeneracies[n]) for n in range(c.top)]
    cyclic = [move(c.t(n), n, n) for n in range(c.top + 1)]
    spaces = [m.codomain for m in maps]
    return assemble(c.variance, spaces, faces, degeneracies, cyclic, c.field, c.provenance)


def transposed(c: ParaComplex) -> ParaComplex:
    """Linear dual in the dual bases: every operator transposed, variance flipped, indices kept."""
    variance = "cyclic" if c.variance == "cocyclic" else "cocyclic"
    return replace(
        c,
        variance=variance,
        faces=tuple(tuple(op.transpose() for op in ops) for ops in c.faces),
        degeneracies=tuple(tuple(op.transpose() for op in ops) for ops in c.degeneracies),
        cyclic=tuple(t.transpose() for t in c.cyclic),
        provenance=f"dual({c.provenance})",
    )
