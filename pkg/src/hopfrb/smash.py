"""L-R smash products ``A ⋊ H`` and L-R smash coproducts ``C ⋉ H``.

Both live on the row-major tensor space: basis element ``(x, h)`` has index
``x * dim H + h`` with the A (resp. C) index major.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .actions import (
    BicomoduleCoaction,
    BimoduleAction,
    verify_antipode_bicolinear,
    verify_antipode_bilinear,
    verify_bicomodule_bialgebra,
    verify_bimodule_bialgebra,
)
from .hopf import FiniteHopfAlgebra, iterated_comult, verify_hopf
from .report import VerificationReport, flag_check, run_check
from .tensor import Legs, LinearOperator, SparseTensor


class PreconditionError(ValueError):
    """A construction's hypotheses do not hold; ``report`` says which."""

    def __init__(self, message: str, report: VerificationReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True, eq=False)
class SmashProductAlgebra:
    hopf: FiniteHopfAlgebra
    A: FiniteHopfAlgebra
    H: FiniteHopfAlgebra
    action: BimoduleAction

    def pair(self, a: int, h: int) -> int:
        return a * self.H.dim + h

    def unpair(self, k: int) -> tuple[int, int]:
        return divmod(k, self.H.dim)

    def element(self, a: SparseTensor, h: SparseTensor) -> SparseTensor:
        return a.outer(h).flatten()


@dataclass(frozen=True, eq=False)
class SmashCoproductAlgebra:
    hopf: FiniteHopfAlgebra
    C: FiniteHopfAlgebra
    H: FiniteHopfAlgebra
    coaction: BicomoduleCoaction

    def pair(self, c: int, h: int) -> int:
        return c * self.H.dim + h

    def unpair(self, k: int) -> tuple[int, int]:
        return divmod(k, self.H.dim)

    def element(self, c: SparseTensor, h: SparseTensor) -> SparseTensor:
        return c.outer(h).flatten()


def _pairs(X: FiniteHopfAlgebra, H: FiniteHopfAlgebra):
    return product(range(X.dim), range(H.dim))


def _assemble(dims_in: int, N: int, images: dict, out_arity: int) -> SparseTensor:
    """Stack flattened per-input images ``{in_key: SparseTensor}`` into one structure tensor."""
    entries = {}
    for key, t in images.items():
        for out, c in t.items():
            entries[key + out] = c
    return SparseTensor((N,) * (dims_in + out_arity), entries)


def _flat_pair(t: SparseTensor, m: int, n: int) -> SparseTensor:
    """``(x1, h1, x2, h2)`` legs → ``(x1⊗h1, x2⊗h2)`` flattened indices."""
    entries = {(a * n + h, b * n + g): c for (a, h, b, g), c in t.items()}
    return SparseTensor((m * n, m * n), entries)


# -- conditions ------------------------------------------------------------------

def check_conditions_1ab(act: BimoduleAction) -> VerificationReport:
    """``h₁▷a ⊗ h₂ = h₂▷a ⊗ h₁`` and ``a◁h₁ ⊗ h₂ = a◁h₂ ⊗ h₁`` on all basis pairs."""
    H, A = act.H, act.A
    rep = VerificationReport(f"conditions-1ab:{act.name or '?'}")
    ca, cb = [], []
    for h, a in product(range(H.dim), range(A.dim)):
        L = Legs.of("h", H.e(h)).split("h", H.comult, "h1", "h2").attach("a", A.e(a))
        ca.append(((h, a),
                   L.fuse("h1", "a", act.left, "x").result("x", "h2"),
                   L.fuse("h2", "a", act.left, "x").result("x", "h1")))
        cb.append(((a, h),
                   L.fuse("a", "h1", act.right, "x").result("x", "h2"),
                   L.fuse("a", "h2", act.right, "x").result("x", "h1")))
    rep.add(run_check("1a", ca, "h₁▷a ⊗ h₂ = h₂▷a ⊗ h₁"))
    rep.add(run_check("1b", cb, "a◁h₁ ⊗ h₂ = a◁h₂ ⊗ h₁"))
    return rep


def check_conditions_1cd(coact: BicomoduleCoaction) -> VerificationReport:
    """``c₍₋₁₎h ⊗ c₍₀₎ = hc₍₋₁₎ ⊗ c₍₀₎`` and ``c₍₀₎' ⊗ c₍₁₎h = c₍₀₎' ⊗ hc₍₁₎``."""
    H, C = coact.H, coact.C
    rep = VerificationReport(f"conditions-1cd:{coact.name or '?'}")
    cc, cd = [], []
    for c, h in product(range(C.dim), range(H.dim)):
        L = Legs.of("c", C.e(c)).split("c", coact.left, "m", "c0").attach("h", H.e(h))
        cc.append(((c, h),
                   L.fuse("m", "h", H.mult, "k").result("k", "c0"),
                   L.fuse("h", "m", H.mult, "k").result("k", "c0")))
        R = Legs.of("c", C.e(c)).split("c", coact.right, "c0", "m").attach("h", H.e(h))
        cd.append(((c, h),
                   R.fuse("m", "h", H.mult, "k").result("c0", "k"),
                   R.fuse("h", "m", H.mult, "k").result("c0", "k")))
    rep.add(run_check("1c", cc, "c₍₋₁₎h ⊗ c₍₀₎ = hc₍₋₁₎ ⊗ c₍₀₎"))
    rep.add(run_check("1d", cd, "c₍₀₎' ⊗ c₍₁₎h = c₍₀₎' ⊗ hc₍₁₎"))
    return rep


# -- smash product ---------------------------------------------------------------

def smash_product_preconditions(act: BimoduleAction) -> VerificationReport:
    A, H = act.A, act.H
    rep = VerificationReport(f"smash-preconditions:{act.name or '?'}")
    rep.extend(verify_hopf(A), prefix="A:")
    rep.extend(verify_hopf(H), prefix="H:")
    rep.extend(verify_bimodule_bialgebra(act))
    rep.extend(verify_antipode_bilinear(act))
    rep.extend(check_conditions_1ab(act))
    rep.add(flag_check("A-cocommutative", A.is_cocommutative, "" if A.is_cocommutative else f"{A.name} is not cocommutative"))
    return rep


def smash_multiplication(act: BimoduleAction) -> SparseTensor:
    """``(a⊗h)(b⊗g) = (a◁g₂)(h₁▷b) ⊗ h₂g₁`` as a structure tensor."""
    A, H = act.A, act.H
    m, n = A.dim, H.dim
    images = {}
    for (a, h), (b, g) in product(_pairs(A, H), _pairs(A, H)):
        t = (
            Legs(("a", "h", "b", "g"), A.e(a).outer(H.e(h)).outer(A.e(b)).outer(H.e(g)))
            .split("h", H.comult, "h1", "h2").split("g", H.comult, "g1", "g2")
            .fuse("a", "g2", act.right, "x").fuse("h1", "b", act.left, "y")
            .fuse("x", "y", A.mult, "u").fuse("h2", "g1", H.mult, "k")
            .result("u", "k")
        )
        images[(a * n + h, b * n + g)] = t.flatten()
    return _assemble(2, m * n, images, 1)


def lr_smash_product(act: BimoduleAction, check: bool = True) -> SmashProductAlgebra:
    """Build ``A ⋊ H``; refuses (with the failing report) if the hypotheses do not hold."""
    A, H = act.A, act.H
    if check:
        pre = smash_product_preconditions(act)
        if not pre.passed:
            raise PreconditionError(f"L-R smash product preconditions fail: {pre.failed_labels()}", pre)
    m, n = A.dim, H.dim
    N = m * n
    comult_images, antipode_cols = {}, []
    for a, h in _pairs(A, H):
        L = Legs(("a", "h"), A.e(a).outer(H.e(h)))
        d = L.split("a", A.comult, "a1", "a2").split("h", H.comult, "h1", "h2").result("a1", "h1", "a2", "h2")
        comult_images[(a * n + h,)] = _flat_pair(d, m, n)
        s = (
            Legs(("a",), A.S(A.e(a)))
            .join(Legs(("h1", "h2", "h3"), iterated_comult(H, H.e(h), 3)))
            .apply("h1", H.antipode).apply("h2", H.antipode).apply("h3", H.antipode)
            .fuse("h3", "a", act.left, "x").fuse("x", "h2", act.right, "y")
            .result("y", "h1")
        )
        antipode_cols.append(s.flatten())

    hopf = FiniteHopfAlgebra(
        basis=tuple(f"{x}⊗{y}" for x in A.basis for y in H.basis),
        mult=smash_multiplication(act),
        unit=A.one.outer(H.one).flatten(),
        comult=_assemble(1, N, comult_images, 2),
        counit=A.counit.outer(H.counit).flatten(),
        antipode=LinearOperator.from_columns(antipode_cols),
        field=A.field,
        name=f"{A.name}⋊{H.name}",
        provenance={"construction": "lr_smash_product", "A": A.name, "H": H.name, "action": act.name},
    )
    if check:
        rep = verify_hopf(hopf)
        if not rep.passed:
            raise PreconditionError(f"constructed smash product fails {rep.failed_labels()}", rep)
    return SmashProductAlgebra(hopf, A, H, act)


def classical_smash_multiplication(A: FiniteHopfAlgebra, H: FiniteHopfAlgebra, left: SparseTensor) -> SparseTensor:
    """The ordinary smash product ``(a⊗h)(b⊗g) = a(h₁▷b) ⊗ h₂g`` (no right action at all)."""
    m, n = A.dim, H.dim
    images = {}
    for (a, h), (b, g) in product(_pairs(A, H), _pairs(A, H)):
        t = (
            Legs(("a", "h", "b", "g"), A.e(a).outer(H.e(h)).outer(A.e(b)).outer(H.e(g)))
            .split("h", H.comult, "h1", "h2")
            .fuse("h1", "b", left, "y").fuse("a", "y", A.mult, "u")
            .fuse("h2", "g", H.mult, "k").result("u", "k")
        )
        images[(a * n + h, b * n + g)] = t.flatten()
    return _assemble(2, m * n, images, 1)


# -- smash coproduct -------------------------------------------------------------

def smash_coproduct_preconditions(coact: BicomoduleCoaction) -> VerificationReport:
    C, H = coact.C, coact.H
    rep = VerificationReport(f"cosmash-preconditions:{coact.name or '?'}")
    rep.extend(verify_hopf(C), prefix="C:")
    rep.extend(verify_hopf(H), prefix="H:")
    rep.extend(verify_bicomodule_bialgebra(coact))
    rep.extend(verify_antipode_bicolinear(coact))
    rep.extend(check_conditions_1cd(coact))
    rep.add(flag_check("C-commutative", C.is_commutative, "" if C.is_commutative else f"{C.name} is not commutative"))
    return rep


def smash_comultiplication(coact: BicomoduleCoaction) -> SparseTensor:
    """``Δ(c⊗h) = (c₁₍₀₎'⊗c₂₍₋₁₎h₁) ⊗ (c₂₍₀₎⊗h₂c₁₍₁₎)`` as a structure tensor."""
    C, H = coact.C, coact.H
    m, n = C.dim, H.dim
    images = {}
    for c, h in _pairs(C, H):
        t = (
            Legs(("c", "h"), C.e(c).outer(H.e(h)))
            .split("c", C.comult, "c1", "c2")
            .split("c1", coact.right, "c1r0", "c1r1")
            .split("c2", coact.left, "c2l", "c2l0")
            .split("h", H.comult, "h1", "h2")
            .fuse("c2l", "h1", H.mult, "y1")
            .fuse("h2", "c1r1", H.mult, "y2")
            .result("c1r0", "y1", "c2l0", "y2")
        )
        images[(c * n + h,)] = _flat_pair(t, m, n)
    return _assemble(1, m * n, images, 2)


def lr_smash_coproduct(coact: BicomoduleCoaction, check: bool = True) -> SmashCoproductAlgebra:
    """Build ``C ⋉ H``; refuses (with the failing report) if the hypotheses do not hold."""
    C, H = coact.C, coact.H
    if check:
        pre = smash_coproduct_preconditions(coact)
        if not pre.passed:
            raise PreconditionError(f"L-R smash coproduct preconditions fail: {pre.failed_labels()}", pre)
    m, n = C.dim, H.dim
    N = m * n
    mult = {}
    for (a, b, c), x in C.mult.items():
        for (h, g, k), y in H.mult.items():
            mult[(a * n + h, b * n + g, c * n + k)] = x * y
    antipode_cols = []
    for c, h in _pairs(C, H):
        s = (
            Legs(("c", "h"), C.e(c).outer(H.e(h)))
            .split("c", coact.left, "l", "c0")
            .split("c0", coact.right, "c00", "r")
            .apply("c00", C.antipode)
            .fuse("l", "r", H.mult, "k").fuse("k", "h", H.mult, "k2")
            .apply("k2", H.antipode)
            .result("c00", "k2")
        )
        antipode_cols.append(s.flatten())

    hopf = FiniteHopfAlgebra(
        basis=tuple(f"{x}⊗{y}" for x in C.basis for y in H.basis),
        mult=SparseTensor((N, N, N), mult),
        unit=C.one.outer(H.one).flatten(),
        comult=smash_comultiplication(coact),
        counit=C.counit.outer(H.counit).flatten(),
        antipode=LinearOperator.from_columns(antipode_cols),
        field=C.field,
        name=f"{C.name}⋉{H.name}",
        provenance={"construction": "lr_smash_coproduct", "C": C.name, "H": H.name, "coaction": coact.name},
    )
    if check:
        rep = verify_hopf(hopf)
        if not rep.passed:
            raise PreconditionError(f"constructed smash coproduct fails {rep.failed_labels()}", rep)
    return SmashCoproductAlgebra(hopf, C, H, coact)
