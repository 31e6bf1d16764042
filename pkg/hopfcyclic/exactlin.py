"""
Exact Linear Algebra
Fields, basis-labelled spaces, linear maps, reduced echelon forms, kernels,
cokernels, Kronecker products and inverses.

Every matrix is exact: rationals are ``fractions.Fraction`` (ints where the
denominator is one) and prime-field elements are residues in ``[0, p)``.
A ``LinMap`` has dense matrix semantics; only its nonzero entries are kept,
column by column, so that maps between tensor powers stay cheap to compose.
Tensor indices follow one convention everywhere: the left factor varies
slowest.
"""

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import gcd
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .exceptions import FieldMismatch, ParseError, SingularMap

Scalar = Union[int, Fraction]
Column = Dict[int, Scalar]

TENSOR_SEP = "|"

_SCALAR = re.compile(r"(?P<num>-?\d+)(?:/(?P<den>\d+))?")


@dataclass(frozen=True)
class Field:
    """Ground field: ``rational`` or ``gf`` with a prime ``p``."""

    kind: str = "rational"
    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == "gf":
            if self.p is None or self.p < 2 or not _is_prime(self.p):
                raise ValueError(f"gf needs a prime modulus, got {self.p}")
        else:
            raise ValueError(f"Unknown field kind: {self.kind}")

    @classmethod
    def rational(cls) -> "Field":
        return cls("rational")

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls("gf", p)

    def reduce(self, value: Scalar) -> Scalar:
        """Bring an accumulated value to canonical form."""
        if self.p is not None:
            if isinstance(value, Fraction):
                return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
            return value % self.p
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        return value

    def inv(self, value: Scalar) -> Scalar:
        if value == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is not None:
            return pow(int(value), self.p - 2, self.p)
        return self.reduce(Fraction(1) / value)

    def parse(self, text: str) -> Scalar:
        """Parse an exact scalar string.

        Rationals are ``"n"`` or ``"n/d"`` with ``d > 0`` and the fraction in
        lowest terms; prime-field elements are residues ``"r"`` with ``0 <= r < p``.
        """
        raw = str(text).strip()
        match = _SCALAR.fullmatch(raw)
        if match is None:
            raise ParseError(f"Not an exact scalar: {raw!r}", token=raw)
        numerator, denominator = int(match["num"]), match["den"]
        if self.p is not None:
            if denominator is not None or not 0 <= numerator < self.p:
                raise ParseError(f"Not a residue in [0, {self.p}): {raw!r}", token=raw)
            return numerator
        if denominator is None:
            return numerator
        d = int(denominator)
        if d == 0 or gcd(numerator, d) != 1:
            raise ParseError(f"Fraction not in lowest terms: {raw!r}", token=raw)
        return self.reduce(Fraction(numerator, d))

    def format(self, value: Scalar) -> str:
        value = self.reduce(value)
        if isinstance(value, Fraction):
            return f"{value.numerator}/{value.denominator}"
        return str(value)

    def describe(self) -> str:
        return "rational" if self.p is None else f"gf({self.p})"


QQ = Field.rational()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FinSpace:
    """Finite-dimensional space given by an ordered tuple of distinct basis labels."""

    labels: Tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        if len(set(self.labels)) != len(self.labels):
            seen: set = set()
            dup = next(x for x in self.labels if x in seen or seen.add(x))
            raise ValueError(f"Duplicate basis label: {dup}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @cached_property
    def _positions(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise KeyError(f"Unknown basis label: {label}") from None

    def __contains__(self, label: object) -> bool:
        return label in self._positions

    def __len__(self) -> int:
        return len(self.labels)

    @classmethod
    def named(cls, prefix: str, n: int) -> "FinSpace":
        return cls(tuple(f"{prefix}{i}" for i in range(n)))

    @classmethod
    def tensor(cls, *spaces: "FinSpace") -> "FinSpace":
        """Row-major tensor product, labels joined by ``|``."""
        if not spaces:
            return GROUND
        labels = [TENSOR_SEP.join(parts) for parts in product(*(s.labels for s in spaces))]
        return cls(tuple(labels))


GROUND = FinSpace(("1",))


def tensor_dims(dims: Sequence[int]) -> int:
    total = 1
    for d in dims:
        total *= d
    return total


def split_index(flat: int, dims: Sequence[int]) -> Tuple[int, ...]:
    """Inverse of ``flat_index`` for row-major ordering."""
    out = [0] * len(dims)
    for pos in range(len(dims) - 1, -1, -1):
        flat, out[pos] = divmod(flat, dims[pos])
    return tuple(out)


def flat_index(parts: Sequence[int], dims: Sequence[int]) -> int:
    flat = 0
    for i, d in zip(parts, dims):
        flat = flat * d + i
    return flat


def _clean(column: Column, fld: Field) -> Column:
    out: Column = {}
    for r, v in column.items():
        v = fld.reduce(v)
        if v != 0:
            out[r] = v
    return out


def _axpy(target: Column, coef: Scalar, source: Column, fld: Field) -> None:
    """target += coef * source, in place, dropping zeros."""
    for r, v in source.items():
        new = fld.reduce(target.get(r, 0) + coef * v)
        if new == 0:
            target.pop(r, None)
        else:
            target[r] = new


@dataclass(frozen=True, eq=False)
class LinMap:
    """Linear map ``domain -> codomain`` with exact entries."""

    domain: FinSpace
    codomain: FinSpace
    field: Field
    cols: Tuple[Column, ...] = dc_field(repr=False)

    def __post_init__(self) -> None:
        if len(self.cols) != self.domain.dim:
            raise ValueError(
                f"Map has {len(self.cols)} columns for a domain of dimension {self.domain.dim}"
            )

    # construction

    @classmethod
    def from_columns(
        cls, domain: FinSpace, codomain: FinSpace, fld: Field, cols: Iterable[Column]
    ) -> "LinMap":
        cleaned = []
        n = codomain.dim
        for col in cols:
            c = _clean(col, fld)
            if c and (min(c) < 0 or max(c) >= n):
                raise ValueError("Row index outside codomain")
            cleaned.append(c)
        return cls(domain, codomain, fld, tuple(cleaned))

    @classmethod
    def from_rule(
        cls,
        domain: FinSpace,
        codomain: FinSpace,
        fld: Field,
        rule: Callable[[int], Iterable[Tuple[int, Scalar]]],
    ) -> "LinMap":
        """Build column ``j`` by accumulating the ``(row, coefficient)`` pairs of ``rule(j)``."""
        cols = []
        for j in range(domain.dim):
            col: Column = {}
            for r, v in rule(j):
                col[r] = col.get(r, 0) + v
            cols.append(col)
        return cls.from_columns(domain, codomain, fld, cols)

    @classmethod
    def from_dense(
        cls, domain: FinSpace, codomain: FinSpace, fld: Field, rows: Sequence[Sequence[Scalar]]
    ) -> "LinMap":
        if len(rows) != codomain.dim or any(len(r) != domain.dim for r in rows):
            raise ValueError("Dense matrix shape does not match the spaces")
        cols = [{i: rows[i][j] for i in range(codomain.dim)} for j in range(domain.dim)]
        return cls.from_columns(domain, codomain, fld, cols)

    @classmethod
    def from_triples(
        cls,
        domain: FinSpace,
        codomain: FinSpace,
        fld: Field,
        triples: Iterable[Tuple[str, str, Scalar]],
    ) -> "LinMap":
        """Entries given as (row-label, column-label, value)."""
        cols: List[Column] = [{} for _ in range(domain.dim)]
        for row, col, value in triples:
            c = cols[domain.index(col)]
            r = codomain.index(row)
            c[r] = c.get(r, 0) + value
        return cls.from_columns(domain, codomain, fld, cols)

    @classmethod
    def from_entries(
        cls,
        domain: FinSpace,
        codomain: FinSpace,
        fld: Field,
        entries: Iterable[Tuple[int, int, Scalar]],
    ) -> "LinMap":
        """Entries given as (row, column, value) index triples; repeats accumulate."""
        cols: List[Column] = [{} for _ in range(domain.dim)]
        for r, j, value in entries:
            c = cols[j]
            c[r] = c.get(r, 0) + value
        return cls.from_columns(domain, codomain, fld, cols)

    @classmethod
    def identity(cls, space: FinSpace, fld: Field) -> "LinMap":
        return cls(space, space, fld, tuple({j: 1} for j in range(space.dim)))

    @classmethod
    def zero(cls, domain: FinSpace, codomain: FinSpace, fld: Field) -> "LinMap":
        return cls(domain, codomain, fld, tuple({} for _ in range(domain.dim)))

    # access

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.codomain.dim, self.domain.dim)

    def entry(self, i: int, j: int) -> Scalar:
        return self.cols[j].get(i, 0)

    def column(self, j: int) -> Column:
        return dict(self.cols[j])

    def to_dense(self) -> List[List[Scalar]]:
        rows = [[0] * self.domain.dim for _ in range(self.codomain.dim)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def rows(self) -> List[Column]:
        out: List[Column] = [{} for _ in range(self.codomain.dim)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def nonzero(self) -> Iterator[Tuple[int, int, Scalar]]:
        for j, col in enumerate(self.cols):
            for i in sorted(col):
                yield i, j, col[i]

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def apply(self, vector: Column) -> Column:
        out: Column = {}
        for j, coef in vector.items():
            if coef:
                _axpy(out, coef, self.cols[j], self.field)
        return out

    # algebra

    def _check_field(self, other: "LinMap") -> None:
        if self.field != other.field:
            raise FieldMismatch(
                "Maps live over different fields",
                left=self.field.describe(),
                right=other.field.describe(),
            )

    def compose(self, other: "LinMap") -> "LinMap":
        """``self o other``."""
        self._check_field(other)
        if other.codomain.dim != self.domain.dim:
            raise ValueError(
                f"Cannot compose: {other.codomain.dim}-dim codomain into {self.domain.dim}-dim domain"
            )
        return LinMap(
            other.domain, self.codomain, self.field, tuple(self.apply(c) for c in other.cols)
        )

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return self.compose(other)

    def __add__(self, other: "LinMap") -> "LinMap":
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError(f"Cannot add maps of shapes {self.shape} and {other.shape}")
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            _axpy(c, 1, b, self.field)
            cols.append(c)
        return LinMap(self.domain, self.codomain, self.field, tuple(cols))

    def __neg__(self) -> "LinMap":
        return self.scale(-1)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + (-other)

    def scale(self, c: Scalar) -> "LinMap":
        return LinMap.from_columns(
            self.domain, self.codomain, self.field, ({i: c * v for i, v in col.items()} for col in self.cols)
        )

    def transpose(self) -> "LinMap":
        rows = self.rows()
        return LinMap(self.codomain, self.domain, self.field, tuple(rows))

    def relabel(self, domain: Optional[FinSpace] = None, codomain: Optional[FinSpace] = None) -> "LinMap":
        """Same matrix on equally sized spaces with other labels."""
        dom = domain or self.domain
        cod = codomain or self.codomain
        if dom.dim != self.domain.dim or cod.dim != self.codomain.dim:
            raise ValueError("Relabelling must keep dimensions")
        return LinMap(dom, cod, self.field, self.cols)

    def power(self, k: int) -> "LinMap":
        if self.domain.dim != self.codomain.dim:
            raise ValueError("Only square maps have powers")
        base = self if k >= 0 else invert(self)
        result = LinMap.identity(self.domain, self.field)
        for _ in range(abs(k)):
            result = base.compose(result)
        return result

    # comparison

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self.cols == other.cols
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.nnz))

    def first_difference(self, other: "LinMap") -> Optional[str]:
        """Domain label of the first column where two equally shaped maps differ."""
        if self.shape != other.shape:
            return "<shape>"
        for j, (a, b) in enumerate(zip(self.cols, other.cols)):
            if a != b:
                return self.domain.labels[j]
        return None

    def is_identity(self) -> bool:
        return self.domain.dim == self.codomain.dim and all(
            col == {j: 1} for j, col in enumerate(self.cols)
        )

    def is_zero(self) -> bool:
        return not any(self.cols)

    def rank(self) -> int:
        return len(row_reduce(self.rows(), self.field)[1])

    def __repr__(self) -> str:
        return f"LinMap({self.codomain.dim}x{self.domain.dim}, {self.field.describe()}, nnz={self.nnz})"


def row_reduce(rows: Iterable[Column], fld: Field) -> Tuple[List[Column], List[int]]:
    """Reduced row echelon form of the given rows.

    Returns the nonzero reduced rows ordered by pivot column and the pivot
    columns. The result is the unique RREF of the row space, so it does not
    depend on the order of ``rows``.
    """
    pivots: Dict[int, Column] = {}
    for raw in rows:
        r = _clean(raw, fld)
        hits = [c for c in r if c in pivots]
        for c in sorted(hits):
            coef = r.get(c, 0)
            if coef:
                _axpy(r, -coef, pivots[c], fld)
        if not r:
            continue
        lead = min(r)
        inv = fld.inv(r[lead])
        r = {c: fld.reduce(v * inv) for c, v in r.items()}
        for other in pivots.values():
            coef = other.get(lead, 0)
            if coef:
                _axpy(other, -coef, r, fld)
        pivots[lead] = r
    order = sorted(pivots)
    return [pivots[c] for c in order], order


def rank(f: LinMap) -> int:
    return f.rank()


def kernel(f: LinMap) -> Tuple[FinSpace, LinMap]:
    """Kernel of ``f`` with its inclusion.

    The basis vector for a free column ``j`` of the reduced echelon form is
    ``e_j - sum_r R[r][j] e_pivot(r)``; it is labelled by the domain label of ``j``.
    """
    reduced, piv = row_reduce(f.rows(), f.field)
    pivot_set = set(piv)
    free = [j for j in range(f.domain.dim) if j not in pivot_set]
    cols: List[Column] = []
    for j in free:
        col: Column = {j: 1}
        for p, row in zip(piv, reduced):
            v = row.get(j, 0)
            if v:
                col[p] = -v
        cols.append(col)
    space = FinSpace(tuple(f.domain.labels[j] for j in free))
    return space, LinMap.from_columns(space, f.domain, f.field, cols)


def cokernel(f: LinMap) -> Tuple[FinSpace, LinMap, LinMap]:
    """Cokernel of ``f`` with projection and section.

    The basis is indexed by the non-pivot coordinates of the reduced echelon
    form of the image; a pivot coordinate ``p`` projects to
    ``-sum_{j free} R_p[j] e_j``.
    """
    reduced, piv = row_reduce(f.cols, f.field)
    pivot_set = set(piv)
    free = [i for i in range(f.codomain.dim) if i not in pivot_set]
    position = {i: k for k, i in enumerate(free)}
    space = FinSpace(tuple(f.codomain.labels[i] for i in free))
    pivot_row = dict(zip(piv, reduced))
    proj_cols: List[Column] = []
    for i in range(f.codomain.dim):
        if i in position:
            proj_cols.append({position[i]: 1})
        else:
            row = pivot_row[i]
            proj_cols.append({position[j]: -v for j, v in row.items() if j != i})
    projection = LinMap.from_columns(f.codomain, space, f.field, proj_cols)
    section = LinMap(space, f.codomain, f.field, tuple({i: 1} for i in free))
    return space, projection, section


def kron(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product, left factor slowest on both sides."""
    f._check_field(g)
    fld = f.field
    gdim = g.codomain.dim
    cols: List[Column] = []
    for fc in f.cols:
        for gc in g.cols:
            col: Column = {}
            for r, a in fc.items():
                base = r * gdim
                for s, b in gc.items():
                    col[base + s] = a * b
            cols.append(_clean(col, fld))
    return LinMap(
        FinSpace.tensor(f.domain, g.domain),
        FinSpace.tensor(f.codomain, g.codomain),
        fld,
        tuple(cols),
    )


def invert(f: LinMap) -> LinMap:
    """Two-sided inverse; ``SingularMap`` unless ``f`` is square of full rank."""
    n = f.domain.dim
    if f.codomain.dim != n:
        raise SingularMap("Only square maps are invertible", rank=None, dimension=n)
    augmented = [dict(row) for row in f.rows()]
    for i, row in enumerate(augmented):
        row[n + i] = 1
    reduced, piv = row_reduce(augmented, f.field)
    full = [p for p in piv if p < n]
    if len(full) < n:
        raise SingularMap("Map is not invertible", rank=len(full), dimension=n)
    cols: List[Column] = [{} for _ in range(n)]
    for i, row in zip(piv, reduced):
        if i >= n:
            break
        for c, v in row.items():
            if c >= n:
                cols[c - n][i] = v
    return LinMap(f.codomain, f.domain, f.field, tuple(cols))


def hstack(maps: Sequence[LinMap], domain: Optional[FinSpace] = None) -> LinMap:
    """Map out of a direct sum: columns of all maps side by side."""
    if not maps:
        raise ValueError("hstack needs at least one map")
    cod = maps[0].codomain
    for m in maps[1:]:
        maps[0]._check_field(m)
        if m.codomain.dim != cod.dim:
            raise ValueError("hstack needs a shared codomain")
    cols = tuple(c for m in maps for c in m.cols)
    if domain is None:
        domain = FinSpace.named("r", len(cols))
    return LinMap(domain, cod, maps[0].field, cols)


def permutation_map(spaces: Sequence[FinSpace], order: Sequence[int], fld: Field) -> LinMap:
    """``X_0 (x) ... (x) X_{m-1} -> X_{order[0]} (x) ... (x) X_{order[m-1]}``."""
    if sorted(order) != list(range(len(spaces))):
        raise ValueError(f"Not a permutation: {order}")
    dims = [s.dim for s in spaces]
    out_dims = [dims[k] for k in order]
    source = FinSpace.tensor(*spaces)
    target = FinSpace.tensor(*(spaces[k] for k in order))

    def rule(j: int) -> Iterator[Tuple[int, Scalar]]:
        parts = split_index(j, dims)
        yield flat_index([parts[k] for k in order], out_dims), 1

    return LinMap.from_rule(source, target, fld, rule)


def at_slot(spaces: Sequence[FinSpace], slot: int, f: LinMap, width: int = 1) -> LinMap:
    """``id (x) f (x) id`` where ``f`` eats ``width`` consecutive factors starting at ``slot``."""
    before = list(spaces[:slot])
    after = list(spaces[slot + width:])
    core = f
    if before:
        core = kron(LinMap.identity(FinSpace.tensor(*before), f.field), core)
    if after:
        core = kron(core, LinMap.identity(FinSpace.tensor(*after), f.field))
    return core.relabel(FinSpace.tensor(*spaces), FinSpace.tensor(*before, f.codomain, *after))
