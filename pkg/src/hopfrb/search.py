"""Brute-force oracles: group-level Rota-Baxter maps, pointed coalgebra
endomorphisms, transpose duality, and exhaustive checks that the lift
characterisations agree with direct verification."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .actions import BicomoduleCoaction, BimoduleAction
from .groups import FiniteGroup
from .hopf import FiniteHopfAlgebra, build_dual_group_algebra, build_group_algebra
from .report import VerificationReport
from .rota_baxter import (
    RBOperatorCandidate,
    _as_candidate,
    _require_cosmash,
    _require_rb,
    _require_smash,
    check_thm22_conditions,
    check_thm33_conditions,
    is_rb_co_operator,
    is_rb_operator,
    lift_rb_co_operator,
    lift_rb_operator,
)
from .smash import lr_smash_coproduct, lr_smash_product
from .tensor import LinearOperator

DEFAULT_GROUP_BOUND = 8
DEFAULT_ENDO_BOUND = 6


class SearchBoundError(ValueError):
    pass


@dataclass(frozen=True)
class GroupRBMap:
    G: FiniteGroup
    images: tuple[int, ...]

    def is_valid(self) -> bool:
        G, B = self.G, self.images
        for g in range(G.order):
            bg, bgi = B[g], G.inv(B[g])
            for h in range(G.order):
                t = G.mul(G.mul(G.mul(g, bg), h), bgi)
                if G.mul(bg, B[h]) != B[t]:
                    return False
        return True

    def to_dict(self) -> dict:
        return {
            "group": self.G.name,
            "images": list(self.images),
            "map": {self.G.labels[i]: self.G.labels[j] for i, j in enumerate(self.images)},
        }


# -- group level ----------------------------------------------------------------------

def _rb_extensions(G: FiniteGroup, prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Depth-first completion of a partial map, pruning on every fully determined pair."""
    n = G.order
    mul, inv = G.table, G.inverse
    out: list[tuple[int, ...]] = []
    B = list(prefix) + [-1] * (n - len(prefix))

    def consistent(k: int) -> bool:
        # pairs whose three B-values became known when index k was assigned
        for g in range(k + 1):
            bg = B[g]
            conj = mul[g][bg]
            bgi = inv[bg]
            for h in range(k + 1):
                if g != k and h != k:
                    t = mul[mul[conj][h]][bgi]
                    if t != k:
                        continue
                else:
                    t = mul[mul[conj][h]][bgi]
                    if t > k:
                        continue
                if mul[bg][B[h]] != B[t]:
                    return False
        return True

    def extend(k: int):
        if k == n:
            out.append(tuple(B))
            return
        for v in range(n):
            B[k] = v
            if consistent(k):
                extend(k + 1)
        B[k] = -1

    for k in range(len(prefix)):
        if not consistent(k):
            return out
    extend(len(prefix))
    return out


def enumerate_group_rb(G: FiniteGroup, bound: int = DEFAULT_GROUP_BOUND, jobs: int = 1) -> list[GroupRBMap]:
    """All set maps ``B`` with ``B(g)B(h) = B(gB(g)hB(g)⁻¹)``, in lexicographic order of images."""
    if G.order > bound:
        raise SearchBoundError(f"|G| = {G.order} exceeds the search bound {bound}")
    if jobs > 1 and G.order > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_rb_extensions, [G] * G.order, [(v,) for v in range(G.order)]))
        found = [m for part in parts for m in part]
    else:
        found = _rb_extensions(G, ())
    return [GroupRBMap(G, m) for m in found]


def enumerate_group_rb_naive(G: FiniteGroup) -> list[GroupRBMap]:
    """Unpruned reference enumeration over all ``|G|^|G|`` set maps."""
    maps = (GroupRBMap(G, imgs) for imgs in product(range(G.order), repeat=G.order))
    return [m for m in maps if m.is_valid()]


def enumerate_group_endomorphisms(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Multiplicative set maps ``f(gh) = f(g)f(h)`` (which forces ``f(1) = 1``)."""
    n = G.order
    return [
        f for f in product(range(n), repeat=n)
        if all(f[G.mul(a, b)] == G.mul(f[a], f[b]) for a in range(n) for b in range(n))
    ]


def linearize_group_rb(m: GroupRBMap, H: FiniteHopfAlgebra | None = None) -> RBOperatorCandidate:
    H = H or build_group_algebra(m.G)
    return RBOperatorCandidate(H, LinearOperator.from_function_map(m.images, H.field.one), "operator",
                               name=f"B{list(m.images)}")


# -- coalgebra endomorphisms ------------------------------------------------------------

def _set_maps(n: int, bound: int) -> list[tuple[int, ...]]:
    if n > bound:
        raise SearchBoundError(f"{n}^{n} set maps exceed the bound (dimension {bound})")
    return list(product(range(n), repeat=n))


def enumerate_coalgebra_endos_pointed(H: FiniteHopfAlgebra, bound: int = DEFAULT_ENDO_BOUND) -> list[LinearOperator]:
    """Linear extensions of every set map on the grouplike basis of ``k[G]``."""
    if H.construction != "group_algebra":
        raise ValueError(f"{H.name} is not a group algebra")
    one = H.field.one
    return [LinearOperator.from_function_map(f, one) for f in _set_maps(H.dim, bound)]


def enumerate_transposed_endos(C: FiniteHopfAlgebra, bound: int = DEFAULT_ENDO_BOUND) -> list[LinearOperator]:
    """Transposes of the pointed coalgebra endomorphisms of ``k[G]``, acting on ``k^G``."""
    if C.construction != "dual_group_algebra":
        raise ValueError(f"{C.name} is not a dual group algebra")
    one = C.field.one
    return [LinearOperator.from_function_map(f, one).transpose() for f in _set_maps(C.dim, bound)]


def candidate_maps(X: FiniteHopfAlgebra, bound: int = DEFAULT_ENDO_BOUND) -> list[tuple[tuple[int, ...], LinearOperator]]:
    """``(set map, operator)`` pairs appropriate to the carrier's construction."""
    maps = _set_maps(X.dim, bound)
    one = X.field.one
    if X.construction == "group_algebra":
        return [(f, LinearOperator.from_function_map(f, one)) for f in maps]
    if X.construction == "dual_group_algebra":
        return [(f, LinearOperator.from_function_map(f, one).transpose()) for f in maps]
    raise ValueError(f"no candidate family for {X.name} (construction {X.construction!r})")


# -- transpose duality -----------------------------------------------------------------

def transpose_duality_check(B: RBOperatorCandidate, dual: FiniteHopfAlgebra | None = None) -> VerificationReport:
    """Does the transpose of an operator on ``k[G]`` act as a co-operator on ``k^G``?"""
    H = B.carrier
    G = H.group
    if G is None or H.construction != "group_algebra":
        raise ValueError("transpose duality needs a group algebra carrier")
    if not G.is_abelian():
        raise ValueError(f"{G.name} is not abelian; the transpose test is restricted to abelian groups")
    dual = dual or build_dual_group_algebra(G, H.field)
    rep = VerificationReport(f"transpose-duality:{B.name or G.name}")
    rep.extend(is_rb_co_operator(RBOperatorCandidate(dual, B.map.transpose(), "co-operator")), prefix="transpose:")
    return rep


def transpose_duality_sweep(groups: list[FiniteGroup]) -> list[dict]:
    """Verdict for every group-level RB map on each abelian group."""
    rows = []
    for G in groups:
        H, dual = build_group_algebra(G), build_dual_group_algebra(G)
        for m in enumerate_group_rb(G):
            rep = transpose_duality_check(linearize_group_rb(m, H), dual)
            rows.append({"group": G.name, "images": list(m.images), "co-operator": rep.passed})
    return rows


# -- iff harnesses ------------------------------------------------------------------------

@dataclass
class HarnessReport:
    subject: str
    rows: list = field(default_factory=list)

    @property
    def equivalent(self) -> bool:
        return all(r["conditions"] == r["lift"] for r in self.rows)

    @property
    def exceptions(self) -> list[dict]:
        return [r for r in self.rows if r["conditions"] != r["lift"]]

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "candidates": len(self.rows),
            "equivalent": self.equivalent,
            "exceptions": len(self.exceptions),
            "rows": self.rows,
        }


def _row(index, images, cond: VerificationReport, lift_ok: bool) -> dict:
    return {
        "index": index,
        "images": list(images),
        "conditions": cond.passed,
        "failed": cond.failed_labels(),
        "lift": lift_ok,
    }


def _thm22_one(args):
    index, images, R, Bm, act, carrier = args
    cond = check_thm22_conditions(R, Bm, act)
    lift = lift_rb_operator(R, Bm, act, check=False)
    ok = is_rb_operator(RBOperatorCandidate(carrier, lift, "operator")).passed
    return _row(index, images, cond, ok)


def _thm33_one(args):
    index, images, R, Bm, coact, carrier = args
    cond = check_thm33_conditions(R, Bm, coact)
    lift = lift_rb_co_operator(R, Bm, coact, check=False)
    ok = is_rb_co_operator(RBOperatorCandidate(carrier, lift, "co-operator")).passed
    return _row(index, images, cond, ok)


def _run(worker, tasks, jobs: int) -> list[dict]:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [worker(t) for t in tasks]


def iff_harness_thm22(act: BimoduleAction, B, candidates=None, jobs: int = 1) -> HarnessReport:
    """Conditions versus direct verification of the lift, for every candidate ``R`` on ``A``."""
    cand = _as_candidate(B, act.H, "operator")
    _require_smash(act)
    _require_rb(cand, co=False)
    carrier = lr_smash_product(act, check=False).hopf
    cands = candidates if candidates is not None else candidate_maps(act.A)
    tasks = [(i, imgs, R, cand.map, act, carrier) for i, (imgs, R) in enumerate(cands)]
    return HarnessReport(f"iff-smash-product:{act.name or '?'}", _run(_thm22_one, tasks, jobs))


def iff_harness_thm33(coact: BicomoduleCoaction, B, candidates=None, jobs: int = 1) -> HarnessReport:
    """Mirror of :func:`iff_harness_thm22` for the smash coproduct."""
    cand = _as_candidate(B, coact.H, "co-operator")
    _require_cosmash(coact)
    _require_rb(cand, co=True)
    carrier = lr_smash_coproduct(coact, check=False).hopf
    cands = candidates if candidates is not None else candidate_maps(coact.C)
    tasks = [(i, imgs, R, cand.map, coact, carrier) for i, (imgs, R) in enumerate(cands)]
    return HarnessReport(f"iff-smash-coproduct:{coact.name or '?'}", _run(_thm33_one, tasks, jobs))
