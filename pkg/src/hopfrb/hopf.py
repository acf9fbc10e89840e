"""Finite-dimensional Hopf algebras given by structure constants.

Every identity checked in this package is multilinear in its free variables, so
checking it on all tuples of basis vectors checks it on all elements.  The
verifiers below loop over basis tuples and nothing else.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Sequence

from .groups import FiniteGroup, InvalidGroupError
from .report import VerificationReport, run_check
from .scalars import QQ
from .tensor import Legs, LinearOperator, SparseTensor, kron

log = logging.getLogger(__name__)

GROUPLIKE_SEARCH_LIMIT = 8


class HopfAxiomError(ValueError):
    """Raised when an operation needs a verified Hopf algebra and did not get one."""

    def __init__(self, message: str, report: VerificationReport | None = None):
        super().__init__(message)
        self.report = report


def _scalar(c) -> SparseTensor:
    return SparseTensor((1,), {(0,): c})


@dataclass(frozen=True, eq=False)
class FiniteHopfAlgebra:
    """Structure constants ``m(i,j;k)``, ``1``, ``Δ(i;j,k)``, ``ε``, ``S`` on a labelled basis."""

    basis: tuple
    mult: SparseTensor
    unit: SparseTensor
    comult: SparseTensor
    counit: SparseTensor
    antipode: LinearOperator
    field: object = QQ
    name: str = ""
    group: FiniteGroup | None = None
    construction: str = ""
    provenance: dict = dc_field(default_factory=dict)
    is_commutative: bool = dc_field(init=False)
    is_cocommutative: bool = dc_field(init=False)

    def __post_init__(self):
        n = len(self.basis)
        object.__setattr__(self, "basis", tuple(str(b) for b in self.basis))
        if len(set(self.basis)) != n:
            raise ValueError("basis labels must be distinct")
        checks = [
            ("mult", self.mult, (n, n, n)),
            ("unit", self.unit, (n,)),
            ("comult", self.comult, (n, n, n)),
            ("counit", self.counit, (n,)),
            ("antipode", self.antipode.matrix, (n, n)),
        ]
        for label, t, dims in checks:
            if t.dims != dims:
                raise ValueError(f"{label} has dims {t.dims}, expected {dims}")
        coerce = self.field
        object.__setattr__(self, "mult", self.mult.map_values(coerce))
        object.__setattr__(self, "unit", self.unit.map_values(coerce))
        object.__setattr__(self, "comult", self.comult.map_values(coerce))
        object.__setattr__(self, "counit", self.counit.map_values(coerce))
        object.__setattr__(self, "antipode", LinearOperator(n, self.antipode.matrix.map_values(coerce)))
        object.__setattr__(self, "is_commutative", self.mult == self.mult.transpose((1, 0, 2)))
        object.__setattr__(self, "is_cocommutative", self.comult == self.comult.transpose((0, 2, 1)))

    # -- elements -----------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    def e(self, i: int) -> SparseTensor:
        return SparseTensor.basis(self.dim, i, self.field.one)

    def index(self, label: str) -> int:
        return self.basis.index(label)

    def vector(self, coeffs: dict) -> SparseTensor:
        """Vector from ``{label_or_index: coefficient}``."""
        entries = {}
        for k, c in coeffs.items():
            i = k if isinstance(k, int) else self.index(k)
            entries[(i,)] = self.field(c)
        return SparseTensor((self.dim,), entries)

    @property
    def one(self) -> SparseTensor:
        return self.unit

    def mul(self, x: SparseTensor, y: SparseTensor) -> SparseTensor:
        return Legs(("x", "y"), x.outer(y)).fuse("x", "y", self.mult, "xy").result("xy")

    def delta(self, x: SparseTensor) -> SparseTensor:
        return Legs.of("x", x).split("x", self.comult, "x1", "x2").result("x1", "x2")

    def eps(self, x: SparseTensor):
        total = self.field.zero
        for (i,), c in x.items():
            total = total + c * self.counit[i]
        return total

    def S(self, x: SparseTensor) -> SparseTensor:
        return self.antipode.apply(x)

    def counit_projection(self) -> LinearOperator:
        """``x ↦ ε(x) 1``."""
        entries = {}
        for (j,), c in self.counit.items():
            for (i,), u in self.unit.items():
                entries[(i, j)] = c * u
        return LinearOperator(self.dim, entries)

    def identity_map(self) -> LinearOperator:
        return LinearOperator.identity(self.dim, self.field.one)

    def format_vector(self, v: SparseTensor) -> str:
        if v.is_zero():
            return "0"
        out = ""
        for (i,), c in sorted(v.items()):
            text = self.field.format(c)
            sign = "-" if text.startswith("-") else "+"
            text = text.lstrip("-")
            term = self.basis[i] if text == "1" else f"{text}*{self.basis[i]}"
            out += (f" {sign} " if out else ("-" if sign == "-" else "")) + term
        return out

    def same_structure(self, other: "FiniteHopfAlgebra") -> bool:
        return (
            self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    def with_antipode(self, antipode: LinearOperator) -> "FiniteHopfAlgebra":
        return FiniteHopfAlgebra(
            self.basis, self.mult, self.unit, self.comult, self.counit, antipode,
            field=self.field, name=self.name + "'",
        )

    def over(self, fld) -> "FiniteHopfAlgebra":
        """The same structure constants read in another field."""
        return FiniteHopfAlgebra(
            self.basis, self.mult, self.unit, self.comult, self.counit, self.antipode,
            field=fld, name=self.name, group=self.group, construction=self.construction,
            provenance=dict(self.provenance),
        )

    def __repr__(self):
        return f"FiniteHopfAlgebra({self.name or '?'}, dim={self.dim}, field={self.field!r})"


# -- builders -----------------------------------------------------------------

def build_group_algebra(G: FiniteGroup, field=QQ, name: str | None = None, prefix: str = "e") -> FiniteHopfAlgebra:
    if not isinstance(G, FiniteGroup):
        raise InvalidGroupError("build_group_algebra needs a FiniteGroup")
    n, one = G.order, field.one
    mult = {(a, b, G.mul(a, b)): one for a in range(n) for b in range(n)}
    comult = {(a, a, a): one for a in range(n)}
    return FiniteHopfAlgebra(
        basis=tuple(f"{prefix}_{x}" for x in G.labels),
        mult=SparseTensor((n, n, n), mult),
        unit=SparseTensor.basis(n, G.identity, one),
        comult=SparseTensor((n, n, n), comult),
        counit=SparseTensor((n,), {(a,): one for a in range(n)}),
        antipode=LinearOperator.from_function_map(G.inverse, one),
        field=field,
        name=name or f"k[{G.name or f'G{n}'}]",
        group=G,
        construction="group_algebra",
    )


def build_dual_group_algebra(G: FiniteGroup, field=QQ, name: str | None = None, prefix: str = "p") -> FiniteHopfAlgebra:
    if not isinstance(G, FiniteGroup):
        raise InvalidGroupError("build_dual_group_algebra needs a FiniteGroup")
    n, one = G.order, field.one
    mult = {(a, a, a): one for a in range(n)}
    comult = {(G.mul(x, y), x, y): one for x in range(n) for y in range(n)}
    return FiniteHopfAlgebra(
        basis=tuple(f"{prefix}_{x}" for x in G.labels),
        mult=SparseTensor((n, n, n), mult),
        unit=SparseTensor((n,), {(a,): one for a in range(n)}),
        comult=SparseTensor((n, n, n), comult),
        counit=SparseTensor.basis(n, G.identity, one),
        antipode=LinearOperator.from_function_map(G.inverse, one),
        field=field,
        name=name or f"k^{G.name or f'G{n}'}",
        group=G,
        construction="dual_group_algebra",
    )


def linear_dual(H: FiniteHopfAlgebra, verified: bool = False) -> FiniteHopfAlgebra:
    """Transpose every structure tensor; the basis becomes the dual basis."""
    if not verified:
        rep = verify_hopf(H)
        if not rep.passed:
            raise HopfAxiomError(f"{H.name} fails {rep.failed_labels()}; refusing to dualize", rep)
    construction = {"group_algebra": "dual_group_algebra", "dual_group_algebra": "group_algebra"}.get(
        H.construction, "linear_dual"
    )
    return FiniteHopfAlgebra(
        basis=tuple(f"{b}*" for b in H.basis) if not H.basis[0].endswith("*") else tuple(b[:-1] for b in H.basis),
        mult=H.comult.transpose((1, 2, 0)),
        unit=H.counit,
        comult=H.mult.transpose((2, 0, 1)),
        counit=H.unit,
        antipode=H.antipode.transpose(),
        field=H.field,
        name=f"dual({H.name})" if not H.name.startswith("dual(") else H.name[5:-1],
        group=H.group,
        construction=construction,
    )


def tensor_product_hopf(A: FiniteHopfAlgebra, H: FiniteHopfAlgebra, name: str | None = None) -> FiniteHopfAlgebra:
    """``A ⊗ H`` with factorwise structure, row-major basis ``(a, h) ↦ a * dim H + h``."""
    m, n = A.dim, H.dim
    N = m * n

    def pair(a, h):
        return a * n + h

    mult = {}
    for (a, b, c), x in A.mult.items():
        for (h, g, k), y in H.mult.items():
            mult[(pair(a, h), pair(b, g), pair(c, k))] = x * y
    comult = {}
    for (a, b, c), x in A.comult.items():
        for (h, g, k), y in H.comult.items():
            comult[(pair(a, h), pair(b, g), pair(c, k))] = x * y
    unit = {(pair(a, h),): x * y for (a,), x in A.unit.items() for (h,), y in H.unit.items()}
    counit = {(pair(a, h),): x * y for (a,), x in A.counit.items() for (h,), y in H.counit.items()}
    return FiniteHopfAlgebra(
        basis=tuple(f"{a}⊗{h}" for a in A.basis for h in H.basis),
        mult=SparseTensor((N, N, N), mult),
        unit=SparseTensor((N,), unit),
        comult=SparseTensor((N, N, N), comult),
        counit=SparseTensor((N,), counit),
        antipode=kron(A.antipode, H.antipode),
        field=A.field,
        name=name or f"{A.name}⊗{H.name}",
    )


# -- verification -------------------------------------------------------------

def _prod2(H: FiniteHopfAlgebra, X: SparseTensor, Y: SparseTensor) -> SparseTensor:
    """Componentwise product in ``H ⊗ H``."""
    return (
        Legs(("a1", "a2"), X).join(Legs(("b1", "b2"), Y))
        .fuse("a1", "b1", H.mult, "c1")
        .fuse("a2", "b2", H.mult, "c2")
        .result("c1", "c2")
    )


def verify_hopf(H: FiniteHopfAlgebra) -> VerificationReport:
    """One report entry per Hopf algebra axiom, each quantified over all basis tuples."""
    n = H.dim
    rep = VerificationReport(f"hopf:{H.name}")
    E = [H.e(i) for i in range(n)]
    one = H.one

    def assoc():
        for i, j, k in product(range(n), repeat=3):
            yield (i, j, k), H.mul(H.mul(E[i], E[j]), E[k]), H.mul(E[i], H.mul(E[j], E[k]))

    def unit():
        for i in range(n):
            yield (i,), H.mul(E[i], one), E[i]
            yield (i,), H.mul(one, E[i]), E[i]

    def coassoc():
        for i in range(n):
            L = Legs.of("x", E[i]).split("x", H.comult, "x1", "x2")
            left = L.split("x1", H.comult, "a", "b").result("a", "b", "x2")
            right = L.split("x2", H.comult, "b", "c").result("x1", "b", "c")
            yield (i,), left, right

    def counit():
        for i in range(n):
            L = Legs.of("x", E[i]).split("x", H.comult, "x1", "x2")
            yield (i,), L.drop("x1", H.counit).result("x2"), E[i]
            yield (i,), L.drop("x2", H.counit).result("x1"), E[i]

    def bialgebra():
        for i, j in product(range(n), repeat=2):
            yield (i, j), H.delta(H.mul(E[i], E[j])), _prod2(H, H.delta(E[i]), H.delta(E[j]))
            yield (i, j), _scalar(H.eps(H.mul(E[i], E[j]))), _scalar(H.eps(E[i]) * H.eps(E[j]))
        yield (), H.delta(one), one.outer(one)
        yield (), _scalar(H.eps(one)), _scalar(H.field.one)

    def antipode():
        for i in range(n):
            L = Legs.of("x", E[i]).split("x", H.comult, "x1", "x2")
            rhs = one.scale(H.eps(E[i]))
            yield (i,), L.apply("x1", H.antipode).fuse("x1", "x2", H.mult, "y").result("y"), rhs
            yield (i,), L.apply("x2", H.antipode).fuse("x1", "x2", H.mult, "y").result("y"), rhs

    rep.add(run_check("associativity", assoc(), "(xy)z = x(yz)"))
    rep.add(run_check("unit", unit(), "x1 = 1x = x"))
    rep.add(run_check("coassociativity", coassoc(), "(Δ⊗id)Δ = (id⊗Δ)Δ"))
    rep.add(run_check("counit", counit(), "(ε⊗id)Δ = id = (id⊗ε)Δ"))
    rep.add(run_check("bialgebra", bialgebra(), "Δ(xy) = Δ(x)Δ(y), ε(xy) = ε(x)ε(y), Δ(1) = 1⊗1, ε(1) = 1"))
    rep.add(run_check("antipode", antipode(), "m(S⊗id)Δ = 1ε = m(id⊗S)Δ"))
    return rep


def require_hopf(H: FiniteHopfAlgebra) -> None:
    rep = verify_hopf(H)
    if not rep.passed:
        raise HopfAxiomError(f"{H.name} is not a Hopf algebra: {rep.failed_labels()}", rep)


def iterated_comult(H: FiniteHopfAlgebra, x: SparseTensor, n: int, lean: str = "left") -> SparseTensor:
    """``x₁ ⊗ ... ⊗ xₙ`` by repeatedly splitting the first leg (or the last, for ``lean="right"``)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    names = ["x0"]
    L = Legs.of("x0", x)
    for k in range(1, n):
        target = names[0] if lean == "left" else names[-1]
        a, b = f"x{k}a", f"x{k}b"
        L = L.split(target, H.comult, a, b)
        pos = names.index(target)
        names[pos:pos + 1] = [a, b]
    return L.result(*names)


def _check_dims(H, K, f: LinearOperator):
    if not (H.dim == K.dim == f.dim):
        raise ValueError(f"dimension mismatch: {H.dim}, {K.dim}, map {f.dim}")


def is_algebra_map(H: FiniteHopfAlgebra, K: FiniteHopfAlgebra, f: LinearOperator) -> VerificationReport:
    _check_dims(H, K, f)
    rep = VerificationReport("algebra-map")
    n = H.dim
    F = [f.column(i) for i in range(n)]

    def mult():
        for i, j in product(range(n), repeat=2):
            yield (i, j), f.apply(H.mul(H.e(i), H.e(j))), K.mul(F[i], F[j])

    rep.add(run_check("multiplicative", mult(), "f(xy) = f(x)f(y)"))
    rep.add(run_check("unital", [((), f.apply(H.one), K.one)], "f(1) = 1"))
    return rep


def is_coalgebra_map(H: FiniteHopfAlgebra, K: FiniteHopfAlgebra, f: LinearOperator) -> VerificationReport:
    _check_dims(H, K, f)
    rep = VerificationReport("coalgebra-map")
    n = H.dim

    def comult():
        for i in range(n):
            lhs = K.delta(f.column(i))
            rhs = (
                Legs.of("x", H.e(i)).split("x", H.comult, "x1", "x2")
                .apply("x1", f).apply("x2", f).result("x1", "x2")
            )
            yield (i,), lhs, rhs

    def counit():
        for i in range(n):
            yield (i,), _scalar(K.eps(f.column(i))), _scalar(H.counit[i])

    rep.add(run_check("comultiplicative", comult(), "Δf = (f⊗f)Δ"))
    rep.add(run_check("counital", counit(), "εf = ε"))
    return rep


# -- grouplikes ----------------------------------------------------------------

def _is_grouplike(H: FiniteHopfAlgebra, x: SparseTensor) -> bool:
    return H.eps(x) == 1 and H.delta(x) == x.outer(x)


def basis_restricted(H: FiniteHopfAlgebra) -> bool:
    """True when :func:`grouplikes` only inspects basis vectors."""
    return H.dim > GROUPLIKE_SEARCH_LIMIT


def grouplikes(H: FiniteHopfAlgebra) -> list[SparseTensor]:
    """Grouplike elements with coefficients in ``{-1, 0, 1}``.

    Exhaustive over those coefficient patterns for ``dim <= 8``; beyond that only
    basis vectors are tried (see :func:`basis_restricted`).
    """
    n = H.dim
    if basis_restricted(H):
        log.warning("%s has dim %d > %d: grouplike search is basis-restricted", H.name, n, GROUPLIKE_SEARCH_LIMIT)
        return [H.e(i) for i in range(n) if _is_grouplike(H, H.e(i))]
    found = []
    one = H.field.one
    counit = [H.counit[i] for i in range(n)]
    for coeffs in product((0, 1, -1), repeat=n):
        if not any(coeffs):
            continue
        if sum(c * e for c, e in zip(coeffs, counit)) != 1:
            continue
        x = SparseTensor((n,), {(i,): c * one for i, c in enumerate(coeffs) if c})
        if _is_grouplike(H, x):
            found.append((sum(1 for c in coeffs if c), tuple(_PATTERN_ORDER[c] for c in coeffs), x))
    # basis vectors first, then by coefficient pattern (1 before -1 before 0)
    found.sort(key=lambda t: t[:2])
    return [x for _, _, x in found]


_PATTERN_ORDER = {1: 0, -1: 1, 0: 2}


def grouplike_group_structure(H: FiniteHopfAlgebra, elements: Sequence[SparseTensor] | None = None) -> FiniteGroup:
    """Multiplication table of the grouplike elements of ``H``."""
    gs = list(elements) if elements is not None else grouplikes(H)
    if not gs:
        raise InvalidGroupError(f"{H.name} has no grouplikes in the searched range")
    index = {g: k for k, g in enumerate(gs)}
    table = []
    for a in gs:
        row = []
        for b in gs:
            ab = H.mul(a, b)
            if ab not in index:
                raise InvalidGroupError(f"grouplikes of {H.name} are not closed under multiplication")
            row.append(index[ab])
        table.append(tuple(row))
    labels = tuple(H.format_vector(g) for g in gs)
    return FiniteGroup(labels, tuple(table))
