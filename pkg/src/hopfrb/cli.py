"""Command-line interface.

Exit codes: 0 all checks pass, 1 a check fails, 2 malformed input,
3 a precondition of the requested operation does not hold.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .actions import ActionError, BimoduleAction, dualize_action, dualize_coaction
from .claims import evaluate_claims
from .formats import (
    FormatError,
    action_from_dict,
    action_to_dict,
    algebra_to_dict,
    coaction_from_dict,
    coaction_to_dict,
    dumps,
    load_algebra,
    load_map,
    load_structure,
    map_to_dict,
    parse_field,
    read_json,
)
from .groups import InvalidGroupError, named_group
from .hopf import HopfAxiomError, verify_hopf
from .report import VerificationReport
from .rota_baxter import (
    RBKindError,
    RBOperatorCandidate,
    check_cor24_conditions,
    check_cor25_conditions,
    check_cor34_conditions,
    check_cor35_conditions,
    check_cor36_conditions,
    check_internal_2c2d,
    check_internal_3b,
    check_thm22_conditions,
    check_thm33_conditions,
    is_rb_co_operator,
    is_rb_operator,
    lift_rb_co_operator,
    lift_rb_operator,
)
from .search import (
    SearchBoundError,
    enumerate_group_rb,
    iff_harness_thm22,
    iff_harness_thm33,
    linearize_group_rb,
    transpose_duality_check,
)
from .smash import (
    PreconditionError,
    lr_smash_coproduct,
    lr_smash_product,
    smash_coproduct_preconditions,
    smash_product_preconditions,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3

WHICH = ("2a2b", "cor24", "cor25", "3c3d", "cor34", "cor35", "cor36", "internal")


def _emit(obj, out: str | None = None) -> None:
    text = dumps(obj)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    sys.stdout.write(text)


def _line(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n")


def _report(rep: VerificationReport, out: str | None) -> int:
    _emit(rep.to_dict(), out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _field(args):
    return parse_field(args.field, "--field") if getattr(args, "field", None) else None


def _path(ref: str) -> Path:
    return fixtures.resolve(ref)


def _structure(ref: str, fld, kind: str | None = None):
    s = load_structure(_path(ref), fld)
    if kind == "action" and not isinstance(s, BimoduleAction):
        raise FormatError(f"{ref}: expected an action file")
    if kind == "coaction" and isinstance(s, BimoduleAction):
        raise FormatError(f"{ref}: expected a coaction file")
    return s


def _structure_with(args, kind: str, keys: tuple[str, str]):
    """One path (the structure file) or three (first algebra, Hopf algebra, structure)."""
    paths = args.paths
    if len(paths) == 1:
        return _structure(paths[0], _field(args), kind)
    if len(paths) != 3:
        raise FormatError(f"expected 1 or 3 paths, got {len(paths)}")
    x_ref, h_ref, s_ref = paths
    sp = _path(s_ref)
    d = read_json(sp)
    d[keys[0]] = str(_path(x_ref).resolve())
    d[keys[1]] = str(_path(h_ref).resolve())
    build = action_from_dict if kind == "action" else coaction_from_dict
    return build(d, sp.parent, _field(args), str(sp))


def _map(ref: str, fld):
    return load_map(_path(ref), fld)


def _operator(ref: str, carrier, fld, kind: str) -> RBOperatorCandidate:
    op, _, _ = _map(ref, fld)
    if op.dim != carrier.dim:
        raise FormatError(f"{ref}: map dimension {op.dim} does not match {carrier.name} (dimension {carrier.dim})")
    return RBOperatorCandidate(carrier, op, kind)


# -- commands ---------------------------------------------------------------------

def cmd_check_hopf(args) -> int:
    H = load_algebra(_path(args.algebra), field=_field(args))
    return _report(verify_hopf(H), args.out)


def cmd_check_action(args) -> int:
    return _report(smash_product_preconditions(_structure(args.action, _field(args), "action")), args.out)


def cmd_check_coaction(args) -> int:
    return _report(smash_coproduct_preconditions(_structure(args.coaction, _field(args), "coaction")), args.out)


def cmd_smash(args) -> int:
    act = _structure_with(args, "action", ("A", "H"))
    _emit(algebra_to_dict(lr_smash_product(act).hopf), args.out)
    return EXIT_OK


def cmd_cosmash(args) -> int:
    coact = _structure_with(args, "coaction", ("C", "H"))
    _emit(algebra_to_dict(lr_smash_coproduct(coact).hopf), args.out)
    return EXIT_OK


def _map_and_carrier(args):
    fld = _field(args)
    if len(args.paths) == 2:
        H = load_algebra(_path(args.paths[0]), field=fld)
        op, _, _ = _map(args.paths[1], fld)
    elif len(args.paths) == 1:
        op, _, H = _map(args.paths[0], fld)
        if H is None:
            raise FormatError(f"{args.paths[0]}: no embedded algebra; pass the algebra path first")
    else:
        raise FormatError(f"expected 1 or 2 paths, got {len(args.paths)}")
    if op.dim != H.dim:
        raise FormatError(f"map dimension {op.dim} does not match {H.name} (dimension {H.dim})")
    return op, H


def cmd_check_rb(args) -> int:
    op, H = _map_and_carrier(args)
    return _report(is_rb_operator(RBOperatorCandidate(H, op, "operator")), args.out)


def cmd_check_corb(args) -> int:
    op, H = _map_and_carrier(args)
    return _report(is_rb_co_operator(RBOperatorCandidate(H, op, "co-operator")), args.out)


def cmd_lift(args) -> int:
    fld = _field(args)
    act = _structure(args.action, fld, "action")
    R, _, _ = _map(args.r, fld)
    B = _operator(args.b, act.H, fld, "operator")
    K = lr_smash_product(act).hopf
    L = lift_rb_operator(R, B, act)
    _emit(map_to_dict(L, "operator", K.field, algebra=K, name="lift"), args.out)
    return EXIT_OK


def cmd_colift(args) -> int:
    fld = _field(args)
    coact = _structure(args.coaction, fld, "coaction")
    R, _, _ = _map(args.r, fld)
    B = _operator(args.b, coact.H, fld, "co-operator")
    K = lr_smash_coproduct(coact).hopf
    L = lift_rb_co_operator(R, B, coact)
    _emit(map_to_dict(L, "co-operator", K.field, algebra=K, name="colift"), args.out)
    return EXIT_OK


def cmd_check_conditions(args) -> int:
    fld = _field(args)
    s = _structure(args.structure, fld)
    is_action = isinstance(s, BimoduleAction)
    which = args.which
    smash_side = which in ("2a2b", "cor24", "cor25") or (which == "internal" and is_action)
    if smash_side != is_action:
        raise FormatError(f"--which {which} needs an {'action' if smash_side else 'coaction'} file")
    needs = {
        "2a2b": "RB", "cor24": "R", "cor25": "B", "3c3d": "RB",
        "cor34": "RB", "cor35": "B", "cor36": "R", "internal": "RB",
    }[which]
    if "R" in needs and not args.r:
        raise FormatError(f"--which {which} needs --r")
    if "B" in needs and not args.b:
        raise FormatError(f"--which {which} needs --b")
    R = _map(args.r, fld)[0] if "R" in needs else None
    kind = "operator" if is_action else "co-operator"
    B = _operator(args.b, s.H, fld, kind) if "B" in needs else None
    if R is not None:
        X = s.A if is_action else s.C
        if R.dim != X.dim:
            raise FormatError(f"{args.r}: map dimension {R.dim} does not match {X.name}")
    run = {
        "2a2b": lambda: check_thm22_conditions(R, B, s),
        "cor24": lambda: check_cor24_conditions(R, s),
        "cor25": lambda: check_cor25_conditions(B, s),
        "3c3d": lambda: check_thm33_conditions(R, B, s),
        "cor34": lambda: check_cor34_conditions(R, B, s),
        "cor35": lambda: check_cor35_conditions(B, s),
        "cor36": lambda: check_cor36_conditions(R, s),
        "internal": lambda: check_internal_2c2d(R, B, s) if is_action else check_internal_3b(R, B, s),
    }[which]
    return _report(run(), args.out)


def cmd_enumerate(args) -> int:
    try:
        G = named_group(args.group)
    except (InvalidGroupError, ValueError) as exc:
        raise FormatError(f"--group: {exc}") from exc
    maps = enumerate_group_rb(G, bound=args.bound, jobs=args.jobs)
    duality = args.duality and G.is_abelian()
    for m in maps:
        row = m.to_dict()
        if duality:
            row["transpose-co-operator"] = transpose_duality_check(linearize_group_rb(m)).passed
        _line(row)
    return EXIT_OK


def cmd_dualize(args) -> int:
    s = _structure(args.structure, _field(args))
    if isinstance(s, BimoduleAction):
        _emit(coaction_to_dict(dualize_action(s)), args.out)
    else:
        _emit(action_to_dict(dualize_coaction(s)), args.out)
    return EXIT_OK


def cmd_harness(args) -> int:
    fld = _field(args)
    if args.which == "thm22":
        act = _structure(args.structure, fld, "action")
        rep = iff_harness_thm22(act, _operator(args.b, act.H, fld, "operator"), jobs=args.jobs)
    else:
        coact = _structure(args.structure, fld, "coaction")
        rep = iff_harness_thm33(coact, _operator(args.b, coact.H, fld, "co-operator"), jobs=args.jobs)
    for row in rep.rows:
        _line(row)
    summary = {k: v for k, v in rep.to_dict().items() if k != "rows"}
    _line({"summary": summary})
    if args.out:
        Path(args.out).write_text(dumps(rep.to_dict()), encoding="utf-8")
    return EXIT_OK if rep.equivalent else EXIT_FAIL


def cmd_claims(args) -> int:
    _emit(evaluate_claims().to_dict(), args.out)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    for name in fixtures.list_fixtures():
        print(name)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="also write the JSON result to PATH")
    common.add_argument("--field", metavar="DESC", help="override the coefficient field, e.g. gf:7")

    p = argparse.ArgumentParser(prog="hopfrb", description="Exact verification of Hopf algebra constructions and Rota-Baxter operators.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("check-hopf", cmd_check_hopf, "verify the Hopf algebra axioms").add_argument("algebra")
    add("check-action", cmd_check_action, "verify a bimodule action and the smash product hypotheses").add_argument("action")
    add("check-coaction", cmd_check_coaction, "verify a bicomodule coaction and the smash coproduct hypotheses").add_argument("coaction")
    add("smash", cmd_smash, "build the L-R smash product: ACTION or A H ACTION").add_argument("paths", nargs="+")
    add("cosmash", cmd_cosmash, "build the L-R smash coproduct: COACTION or C H COACTION").add_argument("paths", nargs="+")
    add("check-rb", cmd_check_rb, "check a Rota-Baxter operator: [ALGEBRA] MAP").add_argument("paths", nargs="+")
    add("check-corb", cmd_check_corb, "check a Rota-Baxter co-operator: [ALGEBRA] MAP").add_argument("paths", nargs="+")
    for name, func, target in (("lift", cmd_lift, "action"), ("colift", cmd_colift, "coaction")):
        sp = add(name, func, f"lift R and B to the smash {'product' if name == 'lift' else 'coproduct'}")
        sp.add_argument("r", metavar="R_MAP")
        sp.add_argument("b", metavar="B_MAP")
        sp.add_argument(target)
    sp = add("check-conditions", cmd_check_conditions, "check the lift characterisation conditions")
    sp.add_argument("--which", required=True, choices=WHICH)
    sp.add_argument("--r", metavar="MAP")
    sp.add_argument("--b", metavar="MAP")
    sp.add_argument("structure")
    sp = add("enumerate", cmd_enumerate, "enumerate group-level Rota-Baxter maps (JSON lines)")
    sp.add_argument("--group", required=True)
    sp.add_argument("--bound", type=int, default=8)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--duality", action="store_true", help="add the transpose co-operator verdict (abelian groups)")
    add("dualize", cmd_dualize, "transpose an action into a coaction or back").add_argument("structure")
    sp = add("harness", cmd_harness, "exhaustive conditions-versus-lift comparison (JSON lines)")
    sp.add_argument("--which", required=True, choices=("thm22", "thm33"))
    sp.add_argument("--b", required=True, metavar="MAP")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("structure")
    add("claims", cmd_claims, "compare stated example values with computed ones")
    add("fixtures", cmd_fixtures, "list the shipped data files")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, SearchBoundError) as exc:
        _emit({"error": "input", "message": str(exc)})
        return EXIT_INPUT
    except (PreconditionError, ActionError, HopfAxiomError, RBKindError) as exc:
        out = {"error": "precondition", "message": str(exc)}
        report = getattr(exc, "report", None)
        if report is not None:
            out["report"] = report.to_dict()
        _emit(out)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
