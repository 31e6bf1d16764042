"""
Built-in Presentations
Group algebras, Taft algebras, enveloping Hopf algebroids of base algebras,
the standard family data and coefficients over them, and deliberately
broken variants used to exercise the validators.
"""

import logging
from dataclasses import replace
from itertools import permutations
from typing import Callable, Dict, List, Sequence, Tuple

from .exactlin import GROUND, QQ, Column, Field, FinSpace, LinMap, invert, kron, permutation_map
from .exceptions import KindMismatch, PrerequisiteMissing
from .hopfdata import (
    BialgebroidPresentation,
    Coefficient,
    CoringOverL,
    HopfAlgebroidPresentation,
    HopfDatum,
    RingOverL,
)
from .tensorcat import BaseAlgebra, Bimodule

logger = logging.getLogger(__name__)


def tensor_algebra(A: BaseAlgebra, B: BaseAlgebra) -> BaseAlgebra:
    """``A (x) B`` with the factorwise product."""
    fld = A.field
    shuffle = permutation_map([A.space, B.space, A.space, B.space], [0, 2, 1, 3], fld)
    space = FinSpace.tensor(A.space, B.space)
    mult = (kron(A.mult, B.mult) @ shuffle).relabel(FinSpace.tensor(space, space), space)
    unit = kron(A.unit, B.unit).relabel(GROUND, space)
    return BaseAlgebra(space, mult, unit, f"{A.name}(x){B.name}")


def _power(alg: BaseAlgebra, x: Column, k: int) -> Column:
    out = alg.one()
    for _ in range(k):
        out = alg.multiply(out, x)
    return out


def _scaled(x: Column, c, fld: Field) -> Column:
    return {i: fld.reduce(c * v) for i, v in x.items()}


def _sum(x: Column, y: Column, fld: Field) -> Column:
    out = dict(x)
    for i, v in y.items():
        out[i] = fld.reduce(out.get(i, 0) + v)
    return {i: v for i, v in out.items() if v != 0}


# Hopf algebras


def group_algebra(name: str, labels: Sequence[str], product: Callable[[int, int], int],
                  inverse: Callable[[int], int], fld: Field = QQ) -> HopfAlgebroidPresentation:
    """``k[G]`` with ``Delta(g) = g (x) g``, ``eps(g) = 1`` and ``S(g) = g^-1``.

    Element 0 must be the identity.
    """
    n = len(labels)
    alg = BaseAlgebra.from_products(
        labels, {(i, j): {product(i, j): 1} for i in range(n) for j in range(n)}, {0: 1}, fld, name)
    H = alg.space
    comult = LinMap.from_columns(H, FinSpace.tensor(H, H), fld, ({i * n + i: 1} for i in range(n)))
    counit = LinMap.from_columns(H, GROUND, fld, ({0: 1} for _ in range(n)))
    antipode = LinMap.from_columns(H, H, fld, ({inverse(i): 1} for i in range(n)))
    inverse_antipode = antipode
    return HopfAlgebroidPresentation.hopf_algebra(alg, comult, counit, antipode, inverse_antipode, name)


def cyclic_group_algebra(n: int, fld: Field = QQ) -> HopfAlgebroidPresentation:
    labels = ["1", "g"] + [f"g{i}" for i in range(2, n)]
    return group_algebra(f"kC{n}", labels[:n], lambda i, j: (i + j) % n, lambda i: (-i) % n, fld)


def symmetric_group_algebra(fld: Field = QQ) -> HopfAlgebroidPresentation:
    """``k[S_3]``, elements written in cycle notation."""
    names = {
        (0, 1, 2): "e", (1, 0, 2): "(12)", (2, 1, 0): "(13)", (0, 2, 1): "(23)",
        (1, 2, 0): "(123)", (2, 0, 1): "(132)",
    }
    perms: List[Tuple[int, ...]] = sorted(permutations(range(3)), key=lambda p: list(names).index(p))
    index = {p: i for i, p in enumerate(perms)}

    def product(i: int, j: int) -> int:
        p, q = perms[i], perms[j]
        return index[tuple(p[q[k]] for k in range(3))]

    def inverse(i: int) -> int:
        p = perms[i]
        inv = [0, 0, 0]
        for k, v in enumerate(p):
            inv[v] = k
        return index[tuple(inv)]

    return group_algebra("kS3", [names[p] for p in perms], product, inverse, fld)


def _taft_label(i: int, j: int) -> str:
    g = "" if i == 0 else ("g" if i == 1 else f"g{i}")
    x = "" if j == 0 else ("x" if j == 1 else f"x{j}")
    return (g + x) or "1"


def taft(n: int, omega: int, fld: Field = QQ, name: str = "") -> HopfAlgebroidPresentation:
    """Taft algebra of order ``n^2``: ``g^n = 1``, ``x^n = 0``, ``xg = omega gx``.

    ``Delta(g) = g (x) g``, ``Delta(x) = x (x) 1 + g (x) x``, ``eps(x) = 0``,
    ``S(g) = g^-1``, ``S(x) = -g^-1 x``. The comultiplication and antipode on
    the basis ``g^i x^j`` are generated multiplicatively from the generators.
    """
    fld_omega = fld.reduce(omega)
    if _power_scalar(fld_omega, n, fld) != 1:
        raise ValueError(f"{omega} is not an n-th root of unity for n={n}")
    labels = [_taft_label(i, j) for i in range(n) for j in range(n)]
    products: Dict[Tuple[int, int], Column] = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j + l < n:
                        coef = _power_scalar(fld_omega, j * k, fld)
                        products[(i * n + j, k * n + l)] = {((i + k) % n) * n + j + l: coef}
    alg = BaseAlgebra.from_products(labels, products, {0: 1}, fld, name or f"Taft{n}")
    H = alg.space
    g, x = {1 * n: 1}, {1: 1}
    g_inv = _power(alg, g, n - 1)

    pair = tensor_algebra(alg, alg)
    dg = {n * n * n + n: 1}              # g (x) g
    dx = {1 * n * n + 0: 1, n * n * n + 1: 1}  # x (x) 1 + g (x) x
    comult_cols = [pair.multiply(_power(pair, dg, i), _power(pair, dx, j)) for i in range(n) for j in range(n)]
    comult = LinMap.from_columns(H, pair.space, fld, comult_cols).relabel(None, FinSpace.tensor(H, H))

    counit = LinMap.from_columns(H, GROUND, fld, ({0: 1} if j == 0 else {} for i in range(n) for j in range(n)))

    s_x = _scaled(alg.multiply(g_inv, x), -1, fld)
    antipode_cols = [alg.multiply(_power(alg, s_x, j), _power(alg, g_inv, i)) for i in range(n) for j in range(n)]
    antipode = LinMap.from_columns(H, H, fld, antipode_cols)
    return HopfAlgebroidPresentation.hopf_algebra(alg, comult, counit, antipode, None, alg.name)


def _power_scalar(value, k: int, fld: Field):
    out = 1
    for _ in range(k):
        out = fld.reduce(out * value)
    return out


def sweedler(fld: Field = QQ) -> HopfAlgebroidPresentation:
    """Four-dimensional Sweedler algebra, with its inverse antipode computed."""
    return taft(2, -1, fld, "H4").with_computed_inverse()


def taft9() -> HopfAlgebroidPresentation:
    """Nine-dimensional Taft algebra over gf(7), with omega = 2."""
    return taft(3, 2, Field.gf(7), "Taft3").with_computed_inverse()


def trivial(fld: Field = QQ) -> HopfAlgebroidPresentation:
    alg = BaseAlgebra.ground(fld)
    idn = LinMap.identity(alg.space, fld)
    comult = idn.relabel(None, FinSpace.tensor(alg.space, alg.space))
    return HopfAlgebroidPresentation.hopf_algebra(alg, comult, idn, idn, idn, "k")


# Enveloping Hopf algebroids


def enveloping(L: BaseAlgebra, flipped: bool = False) -> HopfAlgebroidPresentation:
    """Hopf algebroid ``L^e = L (x) L^op`` over ``L``.

    Left part: ``s(l) = l (x) 1``, ``t(l) = 1 (x) l``,
    ``Delta(x (x) y) = (x (x) 1) (x)_L (1 (x) y)``, ``eps(x (x) y) = xy``.
    Right part over ``L^op``: ``s(r) = 1 (x) r``, ``t(r) = r (x) 1``, the
    same comultiplication, ``eps(x (x) y) = yx``. Antipode ``x (x) y -> y (x) x``.
    With ``flipped`` the left comultiplication becomes
    ``(1 (x) y) (x)_L (x (x) 1)``, which leaves the Takeuchi product as
    soon as ``L`` is not commutative.
    """
    fld = L.field
    d = L.dim
    B = L.enveloping()
    R = L.opposite()
    one = L.one()
    db = B.dim
    BB = FinSpace.tensor(B.space, B.space)

    def pure(x: int, y: int) -> int:
        return x * d + y

    left_emb = LinMap.from_columns(L.space, B.space, fld,
                                   ({pure(l, y): v for y, v in one.items()} for l in range(d)))
    right_emb = LinMap.from_columns(L.space, B.space, fld,
                                    ({pure(x, l): v for x, v in one.items()} for l in range(d)))

    def comult(flip: bool) -> LinMap:
        cols = []
        for j in range(db):
            x, y = divmod(j, d)
            col: Column = {}
            for a, va in one.items():
                for b, vb in one.items():
                    if flip:
                        row = pure(a, y) * db + pure(x, b)
                    else:
                        row = pure(x, a) * db + pure(b, y)
                    col[row] = fld.reduce(col.get(row, 0) + va * vb)
            cols.append(col)
        return LinMap.from_columns(B.space, BB, fld, cols)

    counit_left = LinMap.from_columns(B.space, L.space, fld, (L.product(*divmod(j, d)) for j in range(db)))
    counit_right = LinMap.from_columns(B.space, R.space, fld,
                                       (L.product(*reversed(divmod(j, d))) for j in range(db)))
    antipode = LinMap.from_columns(B.space, B.space, fld,
                                   ({pure(*reversed(divmod(j, d))): 1} for j in range(db)))
    name = f"{L.name}^e" + (" (flipped)" if flipped else "")
    left = BialgebroidPresentation("left", L, B, left_emb, right_emb, comult(flipped), counit_left, name)
    right = BialgebroidPresentation("right", R, B, right_emb, left_emb, comult(False), counit_right, name)
    return HopfAlgebroidPresentation(left, right, antipode, antipode, name)


# Family data


def base_module_algebra(over: BialgebroidPresentation) -> HopfDatum:
    """The base ``L`` as a left module algebra: ``b . l = eps(b s(l))``."""
    L, T = over.base, over.total
    idb = LinMap.identity(T.space, T.field)
    action = over.counit @ T.mult @ kron(idb, over.source)
    ring = RingOverL(L, Bimodule.regular(L), L.mult, LinMap.identity(L.space, L.field), L.name)
    return HopfDatum(f"{L.name} (base)", "module-algebra-left", action, ring=ring)


def matrix_module_algebra(over: BialgebroidPresentation) -> HopfDatum:
    """``M_n`` over the enveloping bialgebroid of ``k^n``: ``(x (x) y) . a = x a y``.

    ``k^n`` sits in ``M_n`` as the diagonal.
    """
    L, T = over.base, over.total
    n = L.dim
    fld = L.field
    M = BaseAlgebra.matrix(n, fld)
    diag = LinMap.from_columns(L.space, M.space, fld, ({i * n + i: 1} for i in range(n)))
    if L.mult != BaseAlgebra.diagonal(n, fld).mult:
        raise PrerequisiteMissing("The matrix algebra needs the enveloping bialgebroid of k^n",
                                  missing="diagonal base")

    def left_by(l: int, m: int) -> Column:
        return M.product(l * n + l, m)

    def right_by(m: int, l: int) -> Column:
        return M.product(m, l * n + l)

    carrier = Bimodule.from_rules(L, M.space, left_by, right_by, f"M{n}")
    ring = RingOverL(L, carrier, M.mult, diag, f"M{n}")

    def rule(j: int):
        b, a = divmod(j, M.dim)
        x, y = divmod(b, n)
        prod = M.multiply(M.product(x * n + x, a), {y * n + y: 1})
        return prod.items()

    action = LinMap.from_rule(FinSpace.tensor(T.space, M.space), M.space, fld, rule)
    return HopfDatum(f"M{n}", "module-algebra-left", action, ring=ring)


def _ground_coalgebra(fld: Field) -> CoringOverL:
    one = LinMap.identity(GROUND, fld)
    return CoringOverL.from_coalgebra(GROUND, one.relabel(None, FinSpace.tensor(GROUND, GROUND)), one, "k")


def _hopf_pieces(H: HopfAlgebroidPresentation):
    alg = H.algebra
    fld = H.field
    return alg, alg.space, fld, LinMap.identity(alg.space, fld)


def make_datum(H: HopfAlgebroidPresentation, kind: str, construction: str) -> HopfDatum:
    """Named family data over a Hopf algebra.

    Constructions: ``adjoint`` (module algebra ``h . a = h_1 a S(h_2)``,
    comodule coring ``c -> c_1 S(c_3) (x) c_2``), ``regular`` (comodule
    algebra with ``Delta``, module coring with right multiplication),
    ``trivial`` (``H`` with the counit action or trivial coaction) and
    ``ground`` (the one-dimensional datum). Over an enveloping
    bialgebroid, ``base`` and ``matrix`` build module algebras.
    """
    if not H.is_hopf_algebra:
        if kind == "module-algebra-left" and construction == "base":
            return base_module_algebra(H.left)
        if kind == "module-algebra-left" and construction == "matrix":
            return matrix_module_algebra(H.left)
        raise KindMismatch(f"No construction {construction!r} for {kind} over a non-trivial base",
                           expected="base or matrix", actual=construction)
    alg, Hs, fld, idh = _hopf_pieces(H)
    k = BaseAlgebra.ground(fld)
    name = f"{construction} {kind}"
    if kind == "module-algebra-left":
        if construction == "adjoint":
            spread = permutation_map([Hs, Hs, Hs], [0, 2, 1], fld) @ kron(H.comult, idh)
            action = alg.mult @ kron(alg.mult, H.antipode) @ spread
            return HopfDatum(name, kind, action, ring=RingOverL.from_algebra(alg))
        if construction == "trivial":
            action = kron(H.counit, idh).relabel(None, Hs)
            return HopfDatum(name, kind, action, ring=RingOverL.from_algebra(alg))
        if construction == "ground":
            action = H.counit.relabel(FinSpace.tensor(Hs, GROUND), GROUND)
            return HopfDatum(name, kind, action, ring=RingOverL.from_algebra(k))
    elif kind == "comodule-algebra-right":
        if construction == "regular":
            return HopfDatum(name, kind, H.comult, ring=RingOverL.from_algebra(alg))
        if construction == "trivial":
            coaction = kron(idh, alg.unit).relabel(Hs, None)
            return HopfDatum(name, kind, coaction, ring=RingOverL.from_algebra(alg))
        if construction == "ground":
            coaction = alg.unit.relabel(None, FinSpace.tensor(GROUND, Hs))
            return HopfDatum(name, kind, coaction, ring=RingOverL.from_algebra(k))
    elif kind == "module-coring-right":
        coalgebra = CoringOverL.from_coalgebra(Hs, H.comult, H.counit, alg.name)
        if construction == "regular":
            return HopfDatum(name, kind, alg.mult, coring=coalgebra)
        if construction == "trivial":
            action = kron(idh, H.counit).relabel(None, Hs)
            return HopfDatum(name, kind, action, coring=coalgebra)
        if construction == "ground":
            action = H.counit.relabel(FinSpace.tensor(GROUND, Hs), GROUND)
            return HopfDatum(name, kind, action, coring=_ground_coalgebra(fld))
    elif kind == "comodule-coring-left":
        coalgebra = CoringOverL.from_coalgebra(Hs, H.comult, H.counit, alg.name)
        if construction == "adjoint":
            triple = kron(H.comult, idh) @ H.comult
            spread = permutation_map([Hs, Hs, Hs], [0, 2, 1], fld)
            coaction = kron(alg.mult @ kron(idh, H.antipode), idh) @ spread @ triple
            return HopfDatum(name, kind, coaction, coring=coalgebra)
        if construction == "trivial":
            coaction = kron(alg.unit, idh).relabel(Hs, None)
            return HopfDatum(name, kind, coaction, coring=coalgebra)
        if construction == "ground":
            coaction = alg.unit.relabel(None, FinSpace.tensor(Hs, GROUND))
            return HopfDatum(name, kind, coaction, coring=_ground_coalgebra(fld))
    else:
        raise KindMismatch(f"Unknown datum kind: {kind}", expected="datum kind", actual=kind)
    raise KindMismatch(f"No construction {construction!r} for {kind}", actual=construction)


def dual_space(space: FinSpace) -> FinSpace:
    return FinSpace(tuple(f"{label}*" for label in space.labels))


def make_coefficient(H: HopfAlgebroidPresentation, kind: str, construction: str) -> Coefficient:
    """Named coefficients over a Hopf algebra.

    ``trivial`` is the ground field (counit action, unit coaction,
    ``alpha(f) = f(1)``), ``regular`` is ``H`` with multiplication or
    comultiplication and ``dual-regular`` is the contramodule dual to the
    regular comodule of the opposite side. Over an enveloping bialgebroid
    only the ``regular`` left comodule is available.
    """
    if not H.is_hopf_algebra:
        if kind == "comodule-left" and construction == "regular":
            B = H.left
            return Coefficient(f"{B.name} (regular)", kind, B.bimodule, B.comult)
        raise KindMismatch(f"No construction {construction!r} for {kind} over a non-trivial base",
                           expected="regular comodule-left", actual=construction)
    alg, Hs, fld, idh = _hopf_pieces(H)
    k = BaseAlgebra.ground(fld)
    n = Hs.dim
    name = f"{construction} {kind}"
    plain = Bimodule.plain(k, Hs, alg.name)
    unit_line = Bimodule.plain(k, GROUND, "k")
    if construction == "trivial":
        if kind == "module-left":
            return Coefficient(name, kind, unit_line, H.counit.relabel(FinSpace.tensor(Hs, GROUND), GROUND))
        if kind == "module-right":
            return Coefficient(name, kind, unit_line, H.counit.relabel(FinSpace.tensor(GROUND, Hs), GROUND))
        if kind == "comodule-left":
            return Coefficient(name, kind, unit_line, alg.unit.relabel(None, FinSpace.tensor(Hs, GROUND)))
        if kind == "comodule-right":
            return Coefficient(name, kind, unit_line, alg.unit.relabel(None, FinSpace.tensor(GROUND, Hs)))
        if kind in ("contramodule-left", "contramodule-right"):
            alpha = alg.unit.transpose().relabel(FinSpace.tensor(Hs, GROUND), GROUND)
            return Coefficient(name, kind, unit_line, alpha)
    elif construction == "regular":
        if kind in ("module-left", "module-right"):
            return Coefficient(name, kind, plain, alg.mult)
        if kind in ("comodule-left", "comodule-right"):
            return Coefficient(name, kind, plain, H.comult)
    elif construction == "dual-regular" and kind in ("contramodule-left", "contramodule-right"):
        Q = dual_space(Hs)
        delta = H.comult
        entries = []
        for h in range(n):
            for j in range(n):
                pos = j * n + h if kind == "contramodule-left" else h * n + j
                for m in range(n):
                    v = delta.entry(pos, m)
                    if v:
                        entries.append((m, h * n + j, v))
        alpha = LinMap.from_entries(FinSpace.tensor(Hs, Q), Q, fld, entries)
        return Coefficient(name, kind, Bimodule.plain(k, Q, f"{alg.name}*"), alpha)
    raise KindMismatch(f"No construction {construction!r} for {kind}", actual=construction)


# Broken variants


def mutate(H: HopfAlgebroidPresentation, what: str) -> HopfAlgebroidPresentation:
    """Copy of a presentation with one structure map damaged.

    ``coassociativity`` adds ``1 (x) 1`` to the comultiplication of the
    last basis element, ``antipode`` doubles the antipode, ``counit``
    doubles the counit and ``inverse`` replaces the inverse antipode by
    the identity. ``multiplicativity`` transports the coalgebra along
    ``x_last -> x_last + 1``, which keeps it coassociative and counital
    but no longer multiplicative, and ``comultiplication-unit`` doubles
    ``Delta(1)``. Over a non-trivial base ``source-target`` replaces the
    left target map by the source.
    """
    fld = H.field
    Hs = H.space
    if what == "coassociativity":
        last = Hs.dim - 1
        one = H.algebra.one()
        extra = {a * Hs.dim + b: fld.reduce(va * vb) for a, va in one.items() for b, vb in one.items()}
        cols = list(H.comult.cols)
        cols[last] = _sum(cols[last], extra, fld)
        comult = LinMap.from_columns(Hs, H.comult.codomain, fld, cols)
        return _rebuild(H, comult=comult)
    if what == "antipode":
        return replace(H, antipode=H.antipode.scale(2))
    if what == "counit":
        return _rebuild(H, counit=H.counit.scale(2))
    if what == "inverse":
        return replace(H, antipode_inverse=LinMap.identity(Hs, fld))
    if what == "multiplicativity":
        if not H.is_hopf_algebra:
            raise PrerequisiteMissing("Mutation needs a Hopf algebra", missing="ground base")
        cols = [{i: 1} for i in range(Hs.dim)]
        cols[-1] = _sum(cols[-1], H.algebra.one(), fld)
        phi = LinMap.from_columns(Hs, Hs, fld, cols)
        back = invert(phi)
        return _rebuild(H, comult=kron(phi, phi) @ H.comult @ back, counit=H.counit @ back)
    if what == "comultiplication-unit":
        cols = [{i: 1} for i in range(Hs.dim)]
        for i in H.algebra.one():
            cols[i] = {i: fld.reduce(2)}
        return _rebuild(H, comult=H.comult @ LinMap.from_columns(Hs, Hs, fld, cols))
    if what == "source-target":
        if H.is_hopf_algebra:
            raise PrerequisiteMissing("Mutation needs a non-trivial base", missing="base algebra")
        return replace(H, left=replace(H.left, target=H.left.source), name=f"{H.name} (mutated)")
    raise KindMismatch(f"Unknown mutation: {what}",
                       expected=", ".join(MUTATIONS), actual=what)


MUTATIONS = ("coassociativity", "antipode", "counit", "inverse", "multiplicativity",
             "comultiplication-unit", "source-target")


def mutate_coefficient(c: Coefficient, what: str) -> Coefficient:
    """Copy of a coefficient with its structure map damaged.

    ``scale`` doubles the structure map. ``drop`` removes every term that
    involves the last basis element of ``H``, for module and comodule kinds.
    """
    x = c.structure
    if what == "scale":
        structure = x.scale(2)
    elif what == "drop" and c.flavor in ("module", "comodule"):
        dm = c.space.dim
        dh = x.domain.dim // dm if c.flavor == "module" else x.codomain.dim // dm
        last = dh - 1
        first = c.side == "left"

        def hits(index: int) -> bool:
            return (index // dm if first else index % dh) == last

        if c.flavor == "module":
            cols = [{} if hits(j) else col for j, col in enumerate(x.cols)]
        else:
            cols = [{i: v for i, v in col.items() if not hits(i)} for col in x.cols]
        structure = LinMap.from_columns(x.domain, x.codomain, x.field, cols)
    else:
        raise KindMismatch(f"Unknown coefficient mutation for {c.kind}: {what}",
                           expected="scale or drop", actual=what)
    return replace(c, name=f"{c.name} (mutated)", structure=structure)


def _rebuild(H: HopfAlgebroidPresentation, **changes) -> HopfAlgebroidPresentation:
    return replace(H, left=replace(H.left, **changes), right=replace(H.right, **changes),
                   name=f"{H.name} (mutated)")


BUILTINS: Dict[str, Callable[[], HopfAlgebroidPresentation]] = {
    "trivial": trivial,
    "kc2": lambda: cyclic_group_algebra(2),
    "kc3": lambda: cyclic_group_algebra(3),
    "ks3": symmetric_group_algebra,
    "h4": sweedler,
    "taft9": taft9,
    "le-diag2": lambda: enveloping(BaseAlgebra.diagonal(2)),
    "le-t2": lambda: enveloping(BaseAlgebra.upper_triangular()),
    "le-t2-flipped": lambda: enveloping(BaseAlgebra.upper_triangular(), flipped=True),
}


def builtin(name: str) -> HopfAlgebroidPresentation:
    """Built-in presentation by name."""
    try:
        builder = BUILTINS[name]
    except KeyError:
        raise KindMismatch(f"Unknown built-in presentation: {name}",
                           expected=", ".join(sorted(BUILTINS)), actual=name) from None
    logger.debug("Building presentation %s", name)
    return builder()
