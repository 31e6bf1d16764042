"""
Base Algebras and Bimodules
Finite-dimensional base algebras L, L-bimodules, and the computed functors
built on them: tensor over L, cyclic tensor over L and one-sided Hom spaces.

Every computed space remembers how it sits in its ambient k-space. A quotient
carries a projection and a section, a subspace an inclusion and a retraction,
so a map written on ambient tensor powers is pushed down with
``induced_map``, which checks descent instead of assuming it.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .exactlin import (
    GROUND,
    Column,
    Field,
    FinSpace,
    LinMap,
    QQ,
    Scalar,
    at_slot,
    cokernel,
    hstack,
    invert,
    kernel,
    kron,
    permutation_map,
    split_index,
)
from .exceptions import DoesNotDescend, HopfCyclicError
from .models import CheckRecord, compare_maps

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BaseAlgebra:
    """Finite-dimensional k-algebra given by structure constants."""

    space: FinSpace
    mult: LinMap
    unit: LinMap
    name: str = ""

    @property
    def field(self) -> Field:
        return self.mult.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def is_ground(self) -> bool:
        return self.space.dim == 1

    def one(self) -> Column:
        return dict(self.unit.cols[0])

    def product(self, i: int, j: int) -> Column:
        return self.mult.cols[i * self.dim + j]

    def multiply(self, x: Column, y: Column) -> Column:
        """Product of two vectors."""
        out: Column = {}
        fld = self.field
        for i, a in x.items():
            for j, b in y.items():
                for r, c in self.product(i, j).items():
                    out[r] = fld.reduce(out.get(r, 0) + a * b * c)
        return {r: v for r, v in out.items() if v != 0}

    @classmethod
    def from_products(cls, labels: Sequence[str], products: dict, one: Column,
                      fld: Field = QQ, name: str = "") -> "BaseAlgebra":
        """Build from ``{(i, j): column}`` basis products; missing pairs multiply to zero."""
        space = FinSpace(tuple(labels))
        n = space.dim
        mult = LinMap.from_columns(
            FinSpace.tensor(space, space), space, fld,
            (products.get(divmod(j, n), {}) for j in range(n * n)),
        )
        unit = LinMap.from_columns(GROUND, space, fld, [one])
        return cls(space, mult, unit, name)

    @classmethod
    def ground(cls, fld: Field = QQ) -> "BaseAlgebra":
        return cls.from_products(["1"], {(0, 0): {0: 1}}, {0: 1}, fld, "k")

    @classmethod
    def diagonal(cls, n: int, fld: Field = QQ) -> "BaseAlgebra":
        """k x ... x k with orthogonal idempotents e0..e{n-1}."""
        labels = [f"e{i}" for i in range(n)]
        products = {(i, i): {i: 1} for i in range(n)}
        return cls.from_products(labels, products, {i: 1 for i in range(n)}, fld, f"k^{n}")

    @classmethod
    def matrix(cls, n: int, fld: Field = QQ) -> "BaseAlgebra":
        """Full matrix algebra with matrix units e{i}{j}."""
        labels = [f"e{i}{j}" for i in range(n) for j in range(n)]
        products = {}
        for i in range(n):
            for j in range(n):
                for l in range(n):
                    products[(i * n + j, j * n + l)] = {i * n + l: 1}
        return cls.from_products(labels, products, {i * n + i: 1 for i in range(n)}, fld, f"M{n}")

    @classmethod
    def upper_triangular(cls, fld: Field = QQ) -> "BaseAlgebra":
        """Upper triangular 2x2 matrices: e11, e12, e22."""
        products = {
            (0, 0): {0: 1},
            (0, 1): {1: 1},
            (1, 2): {1: 1},
            (2, 2): {2: 1},
        }
        return cls.from_products(["e11", "e12", "e22"], products, {0: 1, 2: 1}, fld, "T2")

    def opposite(self) -> "BaseAlgebra":
        swap = permutation_map([self.space, self.space], [1, 0], self.field)
        return BaseAlgebra(self.space, self.mult @ swap, self.unit, f"{self.name}^op")

    def enveloping(self) -> "BaseAlgebra":
        """L (x) L^op with (x (x) y)(x' (x) y') = xx' (x) y'y."""
        fld = self.field
        op = self.opposite()
        space = FinSpace.tensor(self.space, self.space)
        # (x, y, x', y') -> (x, x', y, y') then mult (x) op-mult
        shuffle = permutation_map([self.space] * 4, [0, 2, 1, 3], fld)
        mult = kron(self.mult, op.mult) @ shuffle
        unit = kron(self.unit, self.unit).relabel(GROUND, space)
        return BaseAlgebra(space, mult.relabel(FinSpace.tensor(space, space), space), unit,
                           f"{self.name}^e")

    def validate(self) -> List[CheckRecord]:
        fld = self.field
        idn = LinMap.identity(self.space, fld)
        left_unit = self.mult @ kron(self.unit, idn).relabel(self.space, None)
        right_unit = self.mult @ kron(idn, self.unit).relabel(self.space, None)
        return [
            compare_maps(
                f"{self.name or 'algebra'}: associativity",
                self.mult @ kron(self.mult, idn),
                self.mult @ kron(idn, self.mult),
            ),
            compare_maps(f"{self.name or 'algebra'}: left unit", left_unit, idn),
            compare_maps(f"{self.name or 'algebra'}: right unit", right_unit, idn),
        ]


@dataclass(frozen=True, eq=False)
class Bimodule:
    """L-bimodule with both actions as k-linear maps."""

    base: BaseAlgebra
    space: FinSpace
    left: LinMap   # L (x) M -> M
    right: LinMap  # M (x) L -> M
    name: str = ""

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @classmethod
    def plain(cls, base: BaseAlgebra, space: FinSpace, name: str = "") -> "Bimodule":
        """A k-space over the ground base algebra."""
        if not base.is_ground:
            raise HopfCyclicError(f"Plain bimodule {name!r} needs a ground base, got {base.name}")
        fld = base.field
        act = LinMap.identity(space, fld)
        return cls(base, space, act.relabel(FinSpace.tensor(base.space, space), space),
                   act.relabel(FinSpace.tensor(space, base.space), space), name)

    @classmethod
    def regular(cls, base: BaseAlgebra) -> "Bimodule":
        return cls(base, base.space, base.mult, base.mult, base.name)

    @classmethod
    def from_rules(cls, base: BaseAlgebra, space: FinSpace, left_by, right_by,
                   name: str = "") -> "Bimodule":
        """Actions given per basis element: ``left_by(l, m)`` and ``right_by(m, l)`` return columns."""
        fld = base.field
        dl, dm = base.dim, space.dim
        left = LinMap.from_columns(
            FinSpace.tensor(base.space, space), space, fld,
            (left_by(*divmod(j, dm)) for j in range(dl * dm)),
        )
        right = LinMap.from_columns(
            FinSpace.tensor(space, base.space), space, fld,
            (right_by(*divmod(j, dl)) for j in range(dm * dl)),
        )
        return cls(base, space, left, right, name)

    def left_by(self, l: int) -> LinMap:
        """Action of the basis element ``l`` from the left, as an endomorphism."""
        return LinMap(self.space, self.space, self.field,
                      tuple(self.left.cols[l * self.dim + j] for j in range(self.dim)))

    def right_by(self, l: int) -> LinMap:
        dl = self.base.dim
        return LinMap(self.space, self.space, self.field,
                      tuple(self.right.cols[j * dl + l] for j in range(self.dim)))

    def validate(self) -> List[CheckRecord]:
        fld = self.field
        L = self.base
        idm = LinMap.identity(self.space, fld)
        idl = LinMap.identity(L.space, fld)
        tag = self.name or "bimodule"
        return [
            compare_maps(f"{tag}: left action associative",
                         self.left @ kron(L.mult, idm), self.left @ kron(idl, self.left)),
            compare_maps(f"{tag}: left action unital",
                         self.left @ kron(L.unit, idm).relabel(self.space, None), idm),
            compare_maps(f"{tag}: right action associative",
                         self.right @ kron(idm, L.mult), self.right @ kron(self.right, idl)),
            compare_maps(f"{tag}: right action unital",
                         self.right @ kron(idm, L.unit).relabel(self.space, None), idm),
            compare_maps(f"{tag}: actions commute",
                         self.right @ kron(self.left, idl), self.left @ kron(idl, self.right)),
        ]


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    """Quotient of an ambient space with projection and section."""

    ambient: FinSpace
    quotient: FinSpace
    projection: LinMap
    section: LinMap

    kind = "quotient"

    @property
    def space(self) -> FinSpace:
        return self.quotient

    @property
    def lift(self) -> LinMap:
        return self.section

    @property
    def lower(self) -> LinMap:
        return self.projection

    @property
    def is_trivial(self) -> bool:
        return self.quotient.dim == self.ambient.dim

    @classmethod
    def identity(cls, space: FinSpace, fld: Field) -> "QuotientSpace":
        idn = LinMap.identity(space, fld)
        return cls(space, space, idn, idn)

    @classmethod
    def of_relations(cls, relations: LinMap) -> "QuotientSpace":
        """Cokernel of the map whose image spans the relations."""
        space, proj, sect = cokernel(relations)
        return cls(relations.codomain, space, proj, sect)


@dataclass(frozen=True, eq=False)
class SubSpace:
    """Subspace of an ambient space with inclusion and coordinate retraction."""

    ambient: FinSpace
    sub: FinSpace
    inclusion: LinMap
    retraction: LinMap

    kind = "sub"

    @property
    def space(self) -> FinSpace:
        return self.sub

    @property
    def lift(self) -> LinMap:
        return self.inclusion

    @property
    def lower(self) -> LinMap:
        return self.retraction

    @property
    def is_trivial(self) -> bool:
        return self.sub.dim == self.ambient.dim

    @classmethod
    def identity(cls, space: FinSpace, fld: Field) -> "SubSpace":
        idn = LinMap.identity(space, fld)
        return cls(space, space, idn, idn)

    @classmethod
    def kernel_of(cls, constraints: LinMap) -> "SubSpace":
        """Solution space of ``constraints = 0``.

        Kernel vectors are labelled by free columns, and each has coordinate
        one at its own free column and zero at the others, so reading off
        the free coordinates is a retraction.
        """
        space, incl = kernel(constraints)
        ambient = constraints.domain
        position = {ambient.index(label): k for k, label in enumerate(space.labels)}
        cols = [({position[j]: 1} if j in position else {}) for j in range(ambient.dim)]
        retraction = LinMap(ambient, space, constraints.field, tuple(cols))
        return cls(ambient, space, incl, retraction)


Reduction = Union[QuotientSpace, SubSpace]


def induced_map(f: LinMap, source=None, target=None) -> LinMap:
    """Push an ambient map down to quotients or restrict it to subspaces.

    ``source`` and ``target`` are a ``QuotientSpace``, a ``SubSpace``, a
    ``HomSpace`` or ``None`` (the ambient space itself). Raises
    ``DoesNotDescend`` with the first offending ambient basis label when
    relations are not mapped to relations, or when constraints are not
    preserved.
    """
    src = _carrier(source)
    tgt = _carrier(target)
    g = f if src is None else f @ src.lift
    if src is not None and src.kind == "quotient" and not src.is_trivial:
        residue = f - f @ src.lift @ src.lower
        if tgt is not None and tgt.kind == "quotient":
            residue = tgt.lower @ residue
        if not residue.is_zero():
            j = next(i for i, col in enumerate(residue.cols) if col)
            raise DoesNotDescend("Map does not descend to the quotient", witness=src.ambient.labels[j])
    if tgt is None:
        return g
    lowered = tgt.lower @ g
    if tgt.kind == "sub" and not tgt.is_trivial:
        back = tgt.lift @ lowered
        witness = back.first_difference(g)
        if witness is not None:
            raise DoesNotDescend("Map does not restrict to the subspace", witness=witness)
    return lowered


def _carrier(x) -> Optional[Reduction]:
    if x is None:
        return None
    if isinstance(x, HomSpace):
        return x.carrier
    return x


# Balanced tensor products


@dataclass(frozen=True)
class Gap:
    """A balancing relation between factor ``position`` and the next one.

    ``right`` acts on factor ``position`` (X (x) L -> X) and ``left`` on the
    following factor (L (x) Y -> Y), both over ``base``.
    """

    position: int
    base: BaseAlgebra
    right: LinMap
    left: LinMap


def balanced_quotient(spaces: Sequence[FinSpace], gaps: Sequence[Gap],
                      wrap: Optional[Gap] = None, fld: Field = QQ) -> QuotientSpace:
    """Quotient of ``X_0 (x) ... (x) X_{r-1}`` by balancing relations.

    Each gap identifies ``x_i l (x) x_{i+1}`` with ``x_i (x) l x_{i+1}``. The
    optional wrap gap (``position`` = r-1, ``left`` acting on X_0) identifies
    ``l x_0 (x) ... (x) x_{r-1}`` with ``x_0 (x) ... (x) x_{r-1} l``.
    """
    spaces = list(spaces)
    ambient = FinSpace.tensor(*spaces)
    relations: List[LinMap] = []
    for gap in gaps:
        if gap.base.is_ground:
            continue
        i = gap.position
        X, Y = spaces[i], spaces[i + 1]
        idx = LinMap.identity(X, fld)
        idy = LinMap.identity(Y, fld)
        local = kron(gap.right, idy) - kron(idx, gap.left)  # X (x) L (x) Y -> X (x) Y
        ins = spaces[: i + 1] + [gap.base.space] + spaces[i + 1:]
        relations.append(at_slot(ins, i, local, width=3))
    if wrap is not None and not wrap.base.is_ground:
        L = wrap.base.space
        r = len(spaces)
        with_front = [L] + spaces
        front = at_slot(with_front, 0, wrap.left, width=2)
        move = permutation_map(with_front, list(range(1, r + 1)) + [0], fld)
        back = at_slot(spaces + [L], r - 1, wrap.right, width=2) @ move
        relations.append(front - back.relabel(front.domain, front.codomain))
    if not relations:
        return QuotientSpace.identity(ambient, fld)
    rel = hstack([m.relabel(None, ambient) for m in relations])
    quotient = QuotientSpace.of_relations(rel)
    logger.debug("Balanced quotient: %d -> %d", ambient.dim, quotient.space.dim)
    return quotient


def _check_bases(*modules: Bimodule) -> BaseAlgebra:
    base = modules[0].base
    for m in modules[1:]:
        if m.base is not base and (m.base.space != base.space or m.base.mult != base.mult):
            raise HopfCyclicError(
                f"Bimodules over different base algebras: {base.name} and {m.base.name}"
            )
    return base


def chain_tensor(factors: Sequence[Bimodule]) -> QuotientSpace:
    """``M_1 (x)_L ... (x)_L M_r`` inside ``M_1 (x) ... (x) M_r``."""
    if not factors:
        raise ValueError("chain_tensor needs at least one factor")
    base = _check_bases(*factors)
    spaces = [m.space for m in factors]
    if base.is_ground:
        return QuotientSpace.identity(FinSpace.tensor(*spaces), base.field)
    gaps = [Gap(i, base, factors[i].right, factors[i + 1].left) for i in range(len(factors) - 1)]
    return balanced_quotient(spaces, gaps, fld=base.field)


def tensor_over_L(M: Bimodule, N: Bimodule) -> Tuple[Bimodule, QuotientSpace]:
    """``M (x)_L N`` with its outer bimodule structure."""
    base = _check_bases(M, N)
    fld = base.field
    quotient = chain_tensor([M, N])
    idl = LinMap.identity(base.space, fld)
    left_amb = kron(M.left, LinMap.identity(N.space, fld))            # L (x) M (x) N
    right_amb = kron(LinMap.identity(M.space, fld), N.right)          # M (x) N (x) L
    left = quotient.projection @ left_amb @ kron(idl, quotient.section).relabel(
        FinSpace.tensor(base.space, quotient.space), None)
    right = quotient.projection @ right_amb @ kron(quotient.section, idl).relabel(
        FinSpace.tensor(quotient.space, base.space), None)
    name = f"{M.name}(x){N.name}"
    result = Bimodule(
        base, quotient.space,
        left.relabel(FinSpace.tensor(base.space, quotient.space), quotient.space),
        right.relabel(FinSpace.tensor(quotient.space, base.space), quotient.space),
        name,
    )
    return result, quotient


def cyclic_tensor(factors: Sequence[Bimodule], base: Optional[BaseAlgebra] = None,
                  cut: int = 0) -> QuotientSpace:
    """Cyclic tensor product of the factors, read starting at factor ``cut``.

    The empty product is ``L / [L, L]``.
    """
    if not factors:
        if base is None:
            raise ValueError("The empty cyclic tensor product needs its base algebra")
        fld = base.field
        swap = permutation_map([base.space, base.space], [1, 0], fld)
        if base.is_ground:
            return QuotientSpace.identity(base.space, fld)
        return QuotientSpace.of_relations(base.mult - base.mult @ swap)
    base = _check_bases(*factors)
    order = list(factors[cut:]) + list(factors[:cut])
    spaces = [m.space for m in order]
    if base.is_ground:
        return QuotientSpace.identity(FinSpace.tensor(*spaces), base.field)
    r = len(order)
    gaps = [Gap(i, base, order[i].right, order[i + 1].left) for i in range(r - 1)]
    wrap = Gap(r - 1, base, order[-1].right, order[0].left)
    return balanced_quotient(spaces, gaps, wrap, fld=base.field)


def cut_comparison(factors: Sequence[Bimodule], first: int, second: int) -> LinMap:
    """Invertible comparison between the cyclic tensor products cut at two factors."""
    source = cyclic_tensor(factors, cut=first)
    target = cyclic_tensor(factors, cut=second)
    r = len(factors)
    spaces = [factors[(first + i) % r].space for i in range(r)]
    shift = (second - first) % r
    order = [(shift + i) % r for i in range(r)]
    rotate = permutation_map(spaces, order, factors[0].field)
    comparison = induced_map(rotate, source=source, target=target)
    invert(comparison)
    return comparison


def unit_isomorphisms(M: Bimodule) -> Tuple[LinMap, LinMap, LinMap, LinMap]:
    """``L (x)_L M -> M``, its inverse, ``M (x)_L L -> M`` and its inverse."""
    L = Bimodule.regular(M.base)
    fld = M.field
    _, left_q = tensor_over_L(L, M)
    _, right_q = tensor_over_L(M, L)
    act_left = induced_map(M.left, source=left_q)
    act_right = induced_map(M.right, source=right_q)
    one = kron(M.base.unit, LinMap.identity(M.space, fld)).relabel(M.space, None)
    one_r = kron(LinMap.identity(M.space, fld), M.base.unit).relabel(M.space, None)
    return act_left, left_q.projection @ one, act_right, right_q.projection @ one_r


def associator(M: Bimodule, N: Bimodule, P: Bimodule) -> LinMap:
    """Canonical ``(M (x)_L N) (x)_L P -> M (x)_L (N (x)_L P)``."""
    fld = M.field
    MN, q_mn = tensor_over_L(M, N)
    NP, q_np = tensor_over_L(N, P)
    _, q_left = tensor_over_L(MN, P)
    _, q_right = tensor_over_L(M, NP)
    # ambient: (MN)(x)P -> M(x)N(x)P -> M(x)(NP)
    up = kron(q_mn.section, LinMap.identity(P.space, fld))
    down = kron(LinMap.identity(M.space, fld), q_np.projection)
    ambient = (down @ up.relabel(None, FinSpace.tensor(M.space, N.space, P.space)).relabel(
        None, down.domain))
    return induced_map(ambient.relabel(q_left.ambient, q_right.ambient), source=q_left, target=q_right)


# Hom spaces


@dataclass(frozen=True, eq=False)
class HomSpace:
    """One-sided L-linear maps ``C -> P`` as a subspace of ``Hom_k(C, P)``.

    A map is encoded on ``C (x) P`` labels: the basis vector ``c|p`` is the
    map sending ``e_c`` to ``e_p`` and the other basis vectors to zero.
    ``side`` is ``right`` for ``f(c l) = f(c) l`` and ``left`` for
    ``f(l c) = l f(c)``.
    """

    source: Bimodule
    target: Bimodule
    side: str
    carrier: SubSpace
    evaluate: LinMap

    @property
    def space(self) -> FinSpace:
        return self.carrier.space

    @property
    def ambient(self) -> FinSpace:
        return self.carrier.ambient

    def as_bimodule(self) -> Bimodule:
        """Induced actions: ``(l f l')(c) = l f(l' c)`` on right-linear maps,
        ``(l f l')(c) = f(c l) l'`` on left-linear maps."""
        C, P = self.source, self.target
        L = C.base
        fld = C.field
        dl, dc, dp = L.dim, C.dim, P.dim
        amb = self.ambient
        if self.side == "right":
            left_amb = LinMap.from_entries(
                FinSpace.tensor(L.space, amb), amb, fld,
                _hom_post_entries(P.left, dl, dc, dp, left=True),
            )
            right_amb = LinMap.from_entries(
                FinSpace.tensor(amb, L.space), amb, fld,
                _hom_pre_entries(C.left, dl, dc, dp, left=True),
            )
        else:
            left_amb = LinMap.from_entries(
                FinSpace.tensor(L.space, amb), amb, fld,
                _hom_pre_entries(C.right, dl, dc, dp, left=False),
            )
            right_amb = LinMap.from_entries(
                FinSpace.tensor(amb, L.space), amb, fld,
                _hom_post_entries(P.right, dl, dc, dp, left=False),
            )
        incl = self.carrier.inclusion
        idl = LinMap.identity(L.space, fld)
        left = induced_map(left_amb @ kron(idl, incl).relabel(None, left_amb.domain), target=self.carrier)
        right = induced_map(right_amb @ kron(incl, idl).relabel(None, right_amb.domain), target=self.carrier)
        return Bimodule(
            L, self.space,
            left.relabel(FinSpace.tensor(L.space, self.space), self.space),
            right.relabel(FinSpace.tensor(self.space, L.space), self.space),
            f"Hom({C.name},{P.name})",
        )


def _hom_post_entries(action: LinMap, dl: int, dc: int, dp: int, left: bool) -> Iterator[Tuple[int, int, Scalar]]:
    """Entries of ``f -> l f`` (left) or ``f -> f l`` (right) acting on values."""
    for x in range(dc):
        for p in range(dp):
            f = x * dp + p
            for l in range(dl):
                if left:
                    col = l * (dc * dp) + f
                    image = action.cols[l * dp + p]
                else:
                    col = f * dl + l
                    image = action.cols[p * dl + l]
                for q, v in image.items():
                    yield x * dp + q, col, v


def _hom_pre_entries(action: LinMap, dl: int, dc: int, dp: int, left: bool) -> Iterator[Tuple[int, int, Scalar]]:
    """Entries of precomposition with an action on arguments.

    ``left=True`` builds ``(f l)(c) = f(l c)`` from the left action on C,
    ``left=False`` builds ``(l f)(c) = f(c l)`` from the right action on C.
    """
    for x in range(dc):
        for p in range(dp):
            f = x * dp + p
            for l in range(dl):
                col = f * dl + l if left else l * (dc * dp) + f
                for c in range(dc):
                    image = action.cols[l * dc + c] if left else action.cols[c * dl + l]
                    v = image.get(x, 0)
                    if v:
                        yield c * dp + p, col, v


def hom_space(C: Bimodule, P: Bimodule, side: str = "right") -> HomSpace:
    """One-sided Hom space with its evaluation map."""
    if side not in ("right", "left"):
        raise ValueError(f"Unknown hom side: {side}")
    base = _check_bases(C, P)
    fld = base.field
    dl, dc, dp = base.dim, C.dim, P.dim
    ambient = FinSpace.tensor(C.space, P.space)
    if base.is_ground:
        carrier = SubSpace.identity(ambient, fld)
    else:
        if side == "right":
            # (Kf)(c (x) l) = f(c l) - f(c) l
            args = FinSpace.tensor(C.space, base.space)

            def arg_at(c: int, l: int) -> int:
                return c * dl + l

            def on_arg(c: int, l: int) -> Column:
                return C.right.cols[c * dl + l]

            def on_value(p: int, l: int) -> Column:
                return P.right.cols[p * dl + l]
        else:
            # (Kf)(l (x) c) = f(l c) - l f(c)
            args = FinSpace.tensor(base.space, C.space)

            def arg_at(c: int, l: int) -> int:
                return l * dc + c

            def on_arg(c: int, l: int) -> Column:
                return C.left.cols[l * dc + c]

            def on_value(p: int, l: int) -> Column:
                return P.left.cols[l * dp + p]

        def entries() -> Iterator[Tuple[int, int, Scalar]]:
            for c in range(dc):
                for l in range(dl):
                    row = arg_at(c, l)
                    for x, v in on_arg(c, l).items():
                        for p in range(dp):
                            yield row * dp + p, x * dp + p, v
                    for p in range(dp):
                        for q, v in on_value(p, l).items():
                            yield row * dp + q, c * dp + p, -v

        constraints = LinMap.from_entries(ambient, FinSpace.tensor(args, P.space), fld, entries())
        carrier = SubSpace.kernel_of(constraints)
    evaluation = LinMap.from_rule(
        FinSpace.tensor(ambient, C.space), P.space, fld,
        lambda j: _evaluate_rule(j, dc, dp),
    )
    evaluate = evaluation @ kron(carrier.inclusion, LinMap.identity(C.space, fld))
    logger.debug("Hom space %s -> %s (%s): %d of %d", C.name, P.name, side, carrier.space.dim, ambient.dim)
    return HomSpace(C, P, side, carrier, evaluate)


def _evaluate_rule(j: int, dc: int, dp: int) -> Iterator[Tuple[int, Scalar]]:
    x, p, c = split_index(j, (dc, dp, dc))
    if x == c:
        yield p, 1


def curry(C: Bimodule, D: Bimodule, Q: Bimodule, side: str = "right") -> Tuple[LinMap, LinMap]:
    """Currying isomorphisms between maps out of a balanced tensor product and iterated Hom.

    ``side="right"``: ``Hom_{-,L}(C (x)_L D, Q) -> Hom_{-,L}(C, Hom_{-,L}(D, Q))``
    with ``F(c)(d) = f(c (x) d)``.
    ``side="left"``: ``Hom_{L,-}(D (x)_L C, Q) -> Hom_{L,-}(C, Hom_{L,-}(D, Q))``
    with ``F(c)(d) = f(d (x) c)``.
    Returns ``(curry, uncurry)``; each is built independently.
    """
    fld = C.field
    inner = hom_space(D, Q, side)
    inner_bim = inner.as_bimodule()
    outer = hom_space(C, inner_bim, side)
    pair = (C, D) if side == "right" else (D, C)
    pair_bim, pair_q = tensor_over_L(*pair)
    flat = hom_space(pair_bim, Q, side)
    idq = LinMap.identity(Q.space, fld)
    idc = LinMap.identity(C.space, fld)
    # precomposition with the projection, then regroup (x, y, q) as (c, d, q)
    pre_proj = kron(pair_q.projection.transpose(), idq)
    pre_sect = kron(pair_q.section.transpose(), idq)
    if side == "right":
        regroup = LinMap.identity(pre_proj.codomain, fld)
    else:
        regroup = permutation_map([D.space, C.space, Q.space], [1, 0, 2], fld)
    to_outer = kron(idc, inner.carrier.retraction).relabel(
        FinSpace.tensor(C.space, D.space, Q.space), None)
    from_outer = kron(idc, inner.carrier.inclusion).relabel(
        None, FinSpace.tensor(C.space, D.space, Q.space))
    curry_amb = to_outer @ regroup.relabel(None, to_outer.domain) @ pre_proj.relabel(None, regroup.domain)
    curry_map = induced_map(curry_amb.relabel(flat.ambient, outer.ambient), source=flat, target=outer)
    back = invert(regroup) if side == "left" else regroup
    uncurry_amb = pre_sect @ back.relabel(None, pre_sect.domain) @ from_outer.relabel(None, back.domain)
    uncurry_map = induced_map(uncurry_amb.relabel(outer.ambient, flat.ambient), source=outer, target=flat)
    return curry_map, uncurry_map
