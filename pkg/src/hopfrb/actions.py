"""Bimodule actions ``▷, ◁`` of H on A and bicomodule coactions ``ρˡ, ρʳ`` of H on C.

Tensor layouts (inputs first, output last):

* left action   ``▷``:  ``(h, a; a')``
* right action  ``◁``:  ``(a, h; a')``
* left coaction ``ρˡ``: ``(c; h, c')``  for ``c ↦ c₍₋₁₎ ⊗ c₍₀₎``
* right coaction ``ρʳ``: ``(c; c', h)`` for ``c ↦ c₍₀₎' ⊗ c₍₁₎``
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .hopf import FiniteHopfAlgebra, HopfAxiomError, linear_dual, verify_hopf
from .report import VerificationReport, run_check
from .tensor import Legs, SparseTensor


class ActionError(ValueError):
    def __init__(self, message: str, report: VerificationReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True, eq=False)
class BimoduleAction:
    H: FiniteHopfAlgebra
    A: FiniteHopfAlgebra
    left: SparseTensor
    right: SparseTensor
    name: str = ""

    def __post_init__(self):
        h, a = self.H.dim, self.A.dim
        if self.left.dims != (h, a, a):
            raise ValueError(f"left action has dims {self.left.dims}, expected {(h, a, a)}")
        if self.right.dims != (a, h, a):
            raise ValueError(f"right action has dims {self.right.dims}, expected {(a, h, a)}")
        object.__setattr__(self, "left", self.left.map_values(self.A.field))
        object.__setattr__(self, "right", self.right.map_values(self.A.field))

    def act_left(self, h: SparseTensor, a: SparseTensor) -> SparseTensor:
        return Legs(("h", "a"), h.outer(a)).fuse("h", "a", self.left, "r").result("r")

    def act_right(self, a: SparseTensor, h: SparseTensor) -> SparseTensor:
        return Legs(("a", "h"), a.outer(h)).fuse("a", "h", self.right, "r").result("r")

    def is_right_trivial(self) -> bool:
        return self.right == trivial_action(self.H, self.A).right

    def is_left_trivial(self) -> bool:
        return self.left == trivial_action(self.H, self.A).left


@dataclass(frozen=True, eq=False)
class BicomoduleCoaction:
    H: FiniteHopfAlgebra
    C: FiniteHopfAlgebra
    left: SparseTensor
    right: SparseTensor
    name: str = ""

    def __post_init__(self):
        h, c = self.H.dim, self.C.dim
        if self.left.dims != (c, h, c):
            raise ValueError(f"left coaction has dims {self.left.dims}, expected {(c, h, c)}")
        if self.right.dims != (c, c, h):
            raise ValueError(f"right coaction has dims {self.right.dims}, expected {(c, c, h)}")
        object.__setattr__(self, "left", self.left.map_values(self.C.field))
        object.__setattr__(self, "right", self.right.map_values(self.C.field))

    def coact_left(self, c: SparseTensor) -> SparseTensor:
        return Legs.of("c", c).split("c", self.left, "h", "c0").result("h", "c0")

    def coact_right(self, c: SparseTensor) -> SparseTensor:
        return Legs.of("c", c).split("c", self.right, "c0", "h").result("c0", "h")

    def is_right_trivial(self) -> bool:
        return self.right == trivial_coaction(self.H, self.C).right

    def is_left_trivial(self) -> bool:
        return self.left == trivial_coaction(self.H, self.C).left


# -- builders -------------------------------------------------------------------

def trivial_action(H: FiniteHopfAlgebra, A: FiniteHopfAlgebra) -> BimoduleAction:
    """``h ▷ a = ε(h) a`` and ``a ◁ h = ε(h) a``."""
    a = A.dim
    left = {(h, i, i): c for (h,), c in H.counit.items() for i in range(a)}
    right = {(i, h, i): c for (h,), c in H.counit.items() for i in range(a)}
    return BimoduleAction(H, A, SparseTensor((H.dim, a, a), left), SparseTensor((a, H.dim, a), right), "trivial")


def trivial_coaction(H: FiniteHopfAlgebra, C: FiniteHopfAlgebra) -> BicomoduleCoaction:
    """``ρˡ(c) = 1 ⊗ c`` and ``ρʳ(c) = c ⊗ 1``."""
    c = C.dim
    left = {(i, h, i): u for (h,), u in H.unit.items() for i in range(c)}
    right = {(i, i, h): u for (h,), u in H.unit.items() for i in range(c)}
    return BicomoduleCoaction(H, C, SparseTensor((c, H.dim, c), left), SparseTensor((c, c, H.dim), right), "trivial")


def permutation_action(
    H: FiniteHopfAlgebra,
    A: FiniteHopfAlgebra,
    left: Sequence[Sequence[int]] | None,
    right: Sequence[Sequence[int]] | None,
    name: str = "",
) -> BimoduleAction:
    """Action of a group algebra on a group algebra by permutations of basis elements.

    ``left[h][a]`` is the index of ``h ▷ e_a`` and ``right[h][a]`` that of
    ``e_a ◁ h``; ``None`` means the trivial action on that side.
    """
    one = A.field.one
    triv = trivial_action(H, A)
    lt = triv.left if left is None else SparseTensor(
        (H.dim, A.dim, A.dim), {(h, a, left[h][a]): one for h in range(H.dim) for a in range(A.dim)}
    )
    rt = triv.right if right is None else SparseTensor(
        (A.dim, H.dim, A.dim), {(a, h, right[h][a]): one for h in range(H.dim) for a in range(A.dim)}
    )
    return BimoduleAction(H, A, lt, rt, name)


# -- verification -----------------------------------------------------------------

def verify_bimodule_bialgebra(act: BimoduleAction) -> VerificationReport:
    """Module, bimodule, measuring and coalgebra-compatibility axioms on all basis tuples."""
    H, A = act.H, act.A
    L, R = act.left, act.right
    rep = VerificationReport(f"bimodule-bialgebra:{act.name or '?'}")
    hs, as_ = range(H.dim), range(A.dim)
    eH = [H.e(i) for i in hs]
    eA = [A.e(i) for i in as_]

    def lassoc():
        for g, h, a in product(hs, hs, as_):
            lhs = act.act_left(H.mul(eH[g], eH[h]), eA[a])
            rhs = act.act_left(eH[g], act.act_left(eH[h], eA[a]))
            yield (g, h, a), lhs, rhs

    def lunit():
        for a in as_:
            yield (a,), act.act_left(H.one, eA[a]), eA[a]

    def rassoc():
        for a, g, h in product(as_, hs, hs):
            lhs = act.act_right(eA[a], H.mul(eH[g], eH[h]))
            rhs = act.act_right(act.act_right(eA[a], eH[g]), eH[h])
            yield (a, g, h), lhs, rhs

    def runit():
        for a in as_:
            yield (a,), act.act_right(eA[a], H.one), eA[a]

    def compat():
        for h, a, g in product(hs, as_, hs):
            lhs = act.act_right(act.act_left(eH[h], eA[a]), eH[g])
            rhs = act.act_left(eH[h], act.act_right(eA[a], eH[g]))
            yield (h, a, g), lhs, rhs

    def lmeasure():
        for h, a, b in product(hs, as_, as_):
            lhs = act.act_left(eH[h], A.mul(eA[a], eA[b]))
            rhs = (
                Legs.of("h", eH[h]).split("h", H.comult, "h1", "h2")
                .attach("a", eA[a]).attach("b", eA[b])
                .fuse("h1", "a", L, "x").fuse("h2", "b", L, "y")
                .fuse("x", "y", A.mult, "r").result("r")
            )
            yield (h, a, b), lhs, rhs

    def lunitfix():
        for h in hs:
            yield (h,), act.act_left(eH[h], A.one), A.one.scale(H.counit[h])

    def rmeasure():
        for a, b, h in product(as_, as_, hs):
            lhs = act.act_right(A.mul(eA[a], eA[b]), eH[h])
            rhs = (
                Legs.of("h", eH[h]).split("h", H.comult, "h1", "h2")
                .attach("a", eA[a]).attach("b", eA[b])
                .fuse("a", "h1", R, "x").fuse("b", "h2", R, "y")
                .fuse("x", "y", A.mult, "r").result("r")
            )
            yield (a, b, h), lhs, rhs

    def runitfix():
        for h in hs:
            yield (h,), act.act_right(A.one, eH[h]), A.one.scale(H.counit[h])

    def lcomult():
        for h, a in product(hs, as_):
            lhs = A.delta(act.act_left(eH[h], eA[a]))
            rhs = (
                Legs.of("h", eH[h]).split("h", H.comult, "h1", "h2")
                .attach("a", eA[a]).split("a", A.comult, "a1", "a2")
                .fuse("h1", "a1", L, "x").fuse("h2", "a2", L, "y").result("x", "y")
            )
            yield (h, a), lhs, rhs

    def rcomult():
        for a, h in product(as_, hs):
            lhs = A.delta(act.act_right(eA[a], eH[h]))
            rhs = (
                Legs.of("a", eA[a]).split("a", A.comult, "a1", "a2")
                .attach("h", eH[h]).split("h", H.comult, "h1", "h2")
                .fuse("a1", "h1", R, "x").fuse("a2", "h2", R, "y").result("x", "y")
            )
            yield (a, h), lhs, rhs

    def counits():
        for h, a in product(hs, as_):
            target = SparseTensor((1,), {(0,): A.counit[a] * H.counit[h]})
            yield (h, a), SparseTensor((1,), {(0,): A.eps(act.act_left(eH[h], eA[a]))}), target
            yield (h, a), SparseTensor((1,), {(0,): A.eps(act.act_right(eA[a], eH[h]))}), target

    rep.add(run_check("left-module", lassoc(), "(gh)▷a = g▷(h▷a)"))
    rep.add(run_check("left-unit", lunit(), "1▷a = a"))
    rep.add(run_check("right-module", rassoc(), "a◁(gh) = (a◁g)◁h"))
    rep.add(run_check("right-unit", runit(), "a◁1 = a"))
    rep.add(run_check("bimodule", compat(), "(h▷a)◁g = h▷(a◁g)"))
    rep.add(run_check("left-measuring", lmeasure(), "h▷(ab) = (h₁▷a)(h₂▷b)"))
    rep.add(run_check("left-unit-fixed", lunitfix(), "h▷1 = ε(h)1"))
    rep.add(run_check("right-measuring", rmeasure(), "(ab)◁h = (a◁h₁)(b◁h₂)"))
    rep.add(run_check("right-unit-fixed", runitfix(), "1◁h = ε(h)1"))
    rep.add(run_check("left-comult", lcomult(), "Δ(h▷a) = h₁▷a₁ ⊗ h₂▷a₂"))
    rep.add(run_check("right-comult", rcomult(), "Δ(a◁h) = a₁◁h₁ ⊗ a₂◁h₂"))
    rep.add(run_check("counit", counits(), "ε(h▷a) = ε(a◁h) = ε(a)ε(h)"))
    return rep


def verify_antipode_bilinear(act: BimoduleAction) -> VerificationReport:
    H, A = act.H, act.A
    rep = VerificationReport(f"antipode-bilinear:{act.name or '?'}")
    cases_l, cases_r = [], []
    for h, a in product(range(H.dim), range(A.dim)):
        eh, ea = H.e(h), A.e(a)
        cases_l.append(((h, a), A.S(act.act_left(eh, ea)), act.act_left(eh, A.S(ea))))
        cases_r.append(((a, h), A.S(act.act_right(ea, eh)), act.act_right(A.S(ea), eh)))
    rep.add(run_check("antipode-left-linear", cases_l, "S_A(h▷a) = h▷S_A(a)"))
    rep.add(run_check("antipode-right-linear", cases_r, "S_A(a◁h) = S_A(a)◁h"))
    return rep


def verify_bicomodule_bialgebra(coact: BicomoduleCoaction) -> VerificationReport:
    """Comodule, bicomodule, comodule-algebra and comodule-coalgebra axioms on all basis tuples."""
    H, C = coact.H, coact.C
    Lc, Rc = coact.left, coact.right
    rep = VerificationReport(f"bicomodule-bialgebra:{coact.name or '?'}")
    cs = range(C.dim)
    eC = [C.e(i) for i in cs]

    def lcoassoc():
        for c in cs:
            L = Legs.of("c", eC[c]).split("c", Lc, "m", "c0")
            lhs = L.split("m", H.comult, "m1", "m2").result("m1", "m2", "c0")
            rhs = L.split("c0", Lc, "n", "c00").result("m", "n", "c00")
            yield (c,), lhs, rhs

    def lcounit():
        for c in cs:
            yield (c,), Legs.of("c", eC[c]).split("c", Lc, "m", "c0").drop("m", H.counit).result("c0"), eC[c]

    def rcoassoc():
        for c in cs:
            L = Legs.of("c", eC[c]).split("c", Rc, "c0", "m")
            lhs = L.split("m", H.comult, "m1", "m2").result("c0", "m1", "m2")
            rhs = L.split("c0", Rc, "c00", "n").result("c00", "n", "m")
            yield (c,), lhs, rhs

    def rcounit():
        for c in cs:
            yield (c,), Legs.of("c", eC[c]).split("c", Rc, "c0", "m").drop("m", H.counit).result("c0"), eC[c]

    def compat():
        for c in cs:
            lhs = (
                Legs.of("c", eC[c]).split("c", Rc, "c0", "r")
                .split("c0", Lc, "l", "c00").result("l", "c00", "r")
            )
            rhs = (
                Legs.of("c", eC[c]).split("c", Lc, "l", "c0")
                .split("c0", Rc, "c00", "r").result("l", "c00", "r")
            )
            yield (c,), lhs, rhs

    def lalg():
        for a, b in product(cs, cs):
            lhs = coact.coact_left(C.mul(eC[a], eC[b]))
            rhs = (
                Legs(("am", "a0"), coact.coact_left(eC[a])).join(Legs(("bm", "b0"), coact.coact_left(eC[b])))
                .fuse("am", "bm", H.mult, "m").fuse("a0", "b0", C.mult, "x").result("m", "x")
            )
            yield (a, b), lhs, rhs
        yield (), coact.coact_left(C.one), H.one.outer(C.one)

    def ralg():
        for a, b in product(cs, cs):
            lhs = coact.coact_right(C.mul(eC[a], eC[b]))
            rhs = (
                Legs(("a0", "am"), coact.coact_right(eC[a])).join(Legs(("b0", "bm"), coact.coact_right(eC[b])))
                .fuse("a0", "b0", C.mult, "x").fuse("am", "bm", H.mult, "m").result("x", "m")
            )
            yield (a, b), lhs, rhs
        yield (), coact.coact_right(C.one), C.one.outer(H.one)

    def lcoalg():
        for c in cs:
            lhs = (
                Legs.of("c", eC[c]).split("c", Lc, "m", "c0")
                .split("c0", C.comult, "x", "y").result("m", "x", "y")
            )
            rhs = (
                Legs.of("c", eC[c]).split("c", C.comult, "c1", "c2")
                .split("c1", Lc, "m1", "x").split("c2", Lc, "m2", "y")
                .fuse("m1", "m2", H.mult, "m").result("m", "x", "y")
            )
            yield (c,), lhs, rhs

    def rcoalg():
        for c in cs:
            lhs = (
                Legs.of("c", eC[c]).split("c", Rc, "c0", "m")
                .split("c0", C.comult, "x", "y").result("x", "y", "m")
            )
            rhs = (
                Legs.of("c", eC[c]).split("c", C.comult, "c1", "c2")
                .split("c1", Rc, "x", "m1").split("c2", Rc, "y", "m2")
                .fuse("m1", "m2", H.mult, "m").result("x", "y", "m")
            )
            yield (c,), lhs, rhs

    def counits():
        for c in cs:
            target = H.one.scale(C.counit[c])
            yield (c,), Legs.of("c", eC[c]).split("c", Lc, "m", "c0").drop("c0", C.counit).result("m"), target
            yield (c,), Legs.of("c", eC[c]).split("c", Rc, "c0", "m").drop("c0", C.counit).result("m"), target

    rep.add(run_check("left-comodule", lcoassoc(), "(Δ⊗id)ρˡ = (id⊗ρˡ)ρˡ"))
    rep.add(run_check("left-counit", lcounit(), "(ε⊗id)ρˡ = id"))
    rep.add(run_check("right-comodule", rcoassoc(), "(id⊗Δ)ρʳ = (ρʳ⊗id)ρʳ"))
    rep.add(run_check("right-counit", rcounit(), "(id⊗ε)ρʳ = id"))
    rep.add(run_check("bicomodule", compat(), "(ρˡ⊗id)ρʳ = (id⊗ρʳ)ρˡ"))
    rep.add(run_check("left-comodule-algebra", lalg(), "(ab)₍₋₁₎⊗(ab)₍₀₎ = a₍₋₁₎b₍₋₁₎⊗a₍₀₎b₍₀₎, ρˡ(1) = 1⊗1"))
    rep.add(run_check("right-comodule-algebra", ralg(), "(ab)₍₀₎'⊗(ab)₍₁₎ = a₍₀₎'b₍₀₎'⊗a₍₁₎b₍₁₎, ρʳ(1) = 1⊗1"))
    rep.add(run_check("left-comodule-coalgebra", lcoalg(), "c₍₋₁₎⊗c₍₀₎₁⊗c₍₀₎₂ = c₁₍₋₁₎c₂₍₋₁₎⊗c₁₍₀₎⊗c₂₍₀₎"))
    rep.add(run_check("right-comodule-coalgebra", rcoalg(), "c₍₀₎'₁⊗c₍₀₎'₂⊗c₍₁₎ = c₁₍₀₎'⊗c₂₍₀₎'⊗c₁₍₁₎c₂₍₁₎"))
    rep.add(run_check("counit", counits(), "ε(c₍₀₎)c₍₋₁₎ = ε(c₍₀₎')c₍₁₎ = ε(c)1"))
    return rep


def verify_antipode_bicolinear(coact: BicomoduleCoaction) -> VerificationReport:
    C = coact.C
    rep = VerificationReport(f"antipode-bicolinear:{coact.name or '?'}")
    cases_l, cases_r = [], []
    for c in range(C.dim):
        ec = C.e(c)
        cases_l.append(((c,), coact.coact_left(C.S(ec)),
                        Legs(("m", "c0"), coact.coact_left(ec)).apply("c0", C.antipode).result("m", "c0")))
        cases_r.append(((c,), coact.coact_right(C.S(ec)),
                        Legs(("c0", "m"), coact.coact_right(ec)).apply("c0", C.antipode).result("c0", "m")))
    rep.add(run_check("antipode-left-colinear", cases_l, "ρˡ∘S_C = (id⊗S_C)∘ρˡ"))
    rep.add(run_check("antipode-right-colinear", cases_r, "ρʳ∘S_C = (S_C⊗id)∘ρʳ"))
    return rep


def require_action(act: BimoduleAction, antipode: bool = True) -> None:
    rep = verify_bimodule_bialgebra(act)
    if antipode:
        rep.extend(verify_antipode_bilinear(act))
    if not rep.passed:
        raise ActionError(f"action {act.name or '?'} fails {rep.failed_labels()}", rep)


def require_coaction(coact: BicomoduleCoaction, antipode: bool = True) -> None:
    rep = verify_bicomodule_bialgebra(coact)
    if antipode:
        rep.extend(verify_antipode_bicolinear(coact))
    if not rep.passed:
        raise ActionError(f"coaction {coact.name or '?'} fails {rep.failed_labels()}", rep)


# -- duality ---------------------------------------------------------------------

def dualize_action(act: BimoduleAction, H_dual: FiniteHopfAlgebra | None = None,
                   A_dual: FiniteHopfAlgebra | None = None) -> BicomoduleCoaction:
    """Transpose ``▷, ◁`` into coactions of ``H*`` on ``A*``.

    ``⟨ρˡ(c), h ⊗ a⟩ = ⟨c, h ▷ a⟩`` and ``⟨ρʳ(c), a ⊗ h⟩ = ⟨c, a ◁ h⟩``.
    """
    for alg in (act.H, act.A):
        rep = verify_hopf(alg)
        if not rep.passed:
            raise HopfAxiomError(f"{alg.name} fails {rep.failed_labels()}", rep)
    require_action(act, antipode=False)
    H_dual = H_dual or linear_dual(act.H, verified=True)
    A_dual = A_dual or linear_dual(act.A, verified=True)
    return BicomoduleCoaction(
        H_dual, A_dual, act.left.transpose((2, 0, 1)), act.right.transpose((2, 0, 1)),
        name=f"dual({act.name})" if act.name else "dual",
    )


def dualize_coaction(coact: BicomoduleCoaction, H_dual: FiniteHopfAlgebra | None = None,
                     C_dual: FiniteHopfAlgebra | None = None) -> BimoduleAction:
    """Inverse of :func:`dualize_action`."""
    for alg in (coact.H, coact.C):
        rep = verify_hopf(alg)
        if not rep.passed:
            raise HopfAxiomError(f"{alg.name} fails {rep.failed_labels()}", rep)
    require_coaction(coact, antipode=False)
    H_dual = H_dual or linear_dual(coact.H, verified=True)
    C_dual = C_dual or linear_dual(coact.C, verified=True)
    name = coact.name[5:-1] if coact.name.startswith("dual(") else f"dual({coact.name})"
    return BimoduleAction(
        H_dual, C_dual, coact.left.transpose((1, 2, 0)), coact.right.transpose((1, 2, 0)), name=name,
    )
