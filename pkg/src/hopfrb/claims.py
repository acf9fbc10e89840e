"""Stated values versus computed values.

A claim names a structure (action or coaction file), the maps involved and
what is asserted about the result. Evaluating a claim never raises on
disagreement: it records both sides so discrepancies are visible in a report.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fixtures
from .actions import BimoduleAction
from .formats import FormatError, load_map, load_structure
from .groups import find_isomorphism, named_group
from .hopf import grouplike_group_structure
from .rota_baxter import (
    RBOperatorCandidate,
    check_cor24_conditions,
    check_internal_2c2d,
    is_rb_co_operator,
    is_rb_operator,
    lift_rb_co_operator,
    lift_rb_operator,
)
from .smash import lr_smash_coproduct, lr_smash_product

CLAIM_KINDS = ("values", "identity", "rota-baxter", "cocommutative", "group-isomorphic", "conditions")


@dataclass
class ClaimOutcome:
    id: str
    kind: str
    description: str
    agrees: bool
    claimed: object
    computed: object

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "description": self.description,
            "agrees": self.agrees,
            "claimed": self.claimed,
            "computed": self.computed,
        }


@dataclass
class DiscrepancyReport:
    outcomes: list = field(default_factory=list)

    @property
    def discrepancies(self) -> list[ClaimOutcome]:
        return [o for o in self.outcomes if not o.agrees]

    def __getitem__(self, claim_id: str) -> ClaimOutcome:
        for o in self.outcomes:
            if o.id == claim_id:
                return o
        raise KeyError(claim_id)

    def to_dict(self) -> dict:
        return {
            "claims": len(self.outcomes),
            "agreements": [o.id for o in self.outcomes if o.agrees],
            "discrepancies": [o.id for o in self.discrepancies],
            "outcomes": [o.to_dict() for o in self.outcomes],
        }


class _Context:
    """Lazily built structure, carrier and lift for one claim."""

    def __init__(self, rec: dict):
        self.rec = rec
        self.structure = load_structure(fixtures.resolve(rec["structure"]))
        self.is_action = isinstance(self.structure, BimoduleAction)

    @property
    def carrier(self):
        if self.is_action:
            return lr_smash_product(self.structure).hopf
        return lr_smash_coproduct(self.structure).hopf

    def maps(self):
        R = load_map(fixtures.resolve(self.rec["R"]))[0]
        B = load_map(fixtures.resolve(self.rec["B"]))[0] if "B" in self.rec else None
        return R, B

    def lift(self):
        R, B = self.maps()
        s = self.structure
        if self.is_action:
            B = B if B is not None else s.H.antipode
            return lift_rb_operator(R, RBOperatorCandidate(s.H, B, "operator"), s)
        B = B if B is not None else s.H.antipode
        return lift_rb_co_operator(R, RBOperatorCandidate(s.H, B, "co-operator"), s)


def evaluate_claim(rec: dict) -> ClaimOutcome:
    kind = rec.get("kind")
    if kind not in CLAIM_KINDS:
        raise FormatError(f"claim {rec.get('id')!r}: unknown kind {kind!r}")
    ctx = _Context(rec)
    desc = rec.get("description", "")

    if kind == "values":
        K = ctx.carrier
        L = ctx.lift()
        claimed, computed, ok = {}, {}, True
        for item in rec["values"]:
            x = K.vector({item["input"]: "1"})
            want = K.vector(item["claimed"])
            got = L.apply(x)
            claimed[item["input"]] = K.format_vector(want)
            computed[item["input"]] = K.format_vector(got)
            ok &= want == got
        return ClaimOutcome(rec["id"], kind, desc, ok, claimed, computed)

    if kind == "identity":
        K = ctx.carrier
        L = ctx.lift()
        moved = {K.basis[j]: K.format_vector(L.column(j)) for j in range(K.dim) if L.column(j) != K.e(j)}
        return ClaimOutcome(rec["id"], kind, desc, not moved, "identity map", moved or "identity map")

    if kind == "rota-baxter":
        K = ctx.carrier
        L = ctx.lift()
        if ctx.is_action:
            rep = is_rb_operator(RBOperatorCandidate(K, L, "operator"))
        else:
            rep = is_rb_co_operator(RBOperatorCandidate(K, L, "co-operator"))
        return ClaimOutcome(rec["id"], kind, desc, rep.passed, True, rep.passed)

    if kind == "cocommutative":
        K = ctx.carrier
        return ClaimOutcome(rec["id"], kind, desc, K.is_cocommutative, True, K.is_cocommutative)

    if kind == "group-isomorphic":
        G = grouplike_group_structure(ctx.carrier)
        target = named_group(rec["group"])
        iso = find_isomorphism(G, target)
        computed = {"order": G.order, "abelian": G.is_abelian(), "isomorphic": iso is not None}
        return ClaimOutcome(rec["id"], kind, desc, iso is not None, rec["group"], computed)

    # conditions: named checks from the smash product condition reports
    R, B = ctx.maps()
    s = ctx.structure
    B = B if B is not None else s.H.antipode
    rep = check_cor24_conditions(R, s)
    rep.extend(check_internal_2c2d(R, B, s))
    wanted = rec["checks"]
    computed = {label: rep[label].passed for label in wanted}
    return ClaimOutcome(rec["id"], kind, desc, all(computed.values()), {label: True for label in wanted}, computed)


def evaluate_claims(records: list[dict] | None = None) -> DiscrepancyReport:
    records = records if records is not None else fixtures.claims()
    return DiscrepancyReport([evaluate_claim(r) for r in records])
