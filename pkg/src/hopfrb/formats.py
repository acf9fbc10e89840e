"""JSON schemas for algebras, (co)actions and linear maps.

Coefficients travel as exact ``"num/den"`` strings. Output is canonical:
sorted keys, sorted index triples, reduced fractions, so serializing a parsed
canonical file reproduces it byte for byte.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .actions import BicomoduleCoaction, BimoduleAction
from .groups import FiniteGroup, InvalidGroupError, group_from_dict, named_group
from .hopf import FiniteHopfAlgebra, build_dual_group_algebra, build_group_algebra
from .scalars import QQ, field_from_descriptor
from .tensor import LinearOperator, SparseTensor

TENSOR_KEYS = ("i", "j", "k")
MAP_KINDS = ("operator", "co-operator", "plain")


class FormatError(ValueError):
    """Malformed input; the message names the offending field."""


def _fail(where: str, msg: str):
    raise FormatError(f"{where}: {msg}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(obj, path: str | os.PathLike | None) -> str:
    text = dumps(obj)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_json(path: str | os.PathLike) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        _fail(str(path), "file not found")
    except json.JSONDecodeError as exc:
        _fail(str(path), f"invalid JSON ({exc})")


# -- coefficients and tensors --------------------------------------------------------

def _coef(fld, text, where: str):
    if isinstance(text, int) and not isinstance(text, bool):
        return fld(text)
    if not isinstance(text, str):
        _fail(where, f"coefficient must be a \"num/den\" string, got {text!r}")
    try:
        return fld.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        _fail(where, f"bad coefficient {text!r} ({exc})")


def _index(value, bound: int, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < bound:
        _fail(where, f"index {value!r} out of range [0, {bound})")
    return value


def parse_triples(items, dims: tuple[int, int, int], fld, where: str, keys=TENSOR_KEYS) -> SparseTensor:
    if not isinstance(items, list):
        _fail(where, "expected a list of {" + ",".join(keys) + ",c} entries")
    entries = {}
    for n, item in enumerate(items):
        w = f"{where}[{n}]"
        if not isinstance(item, dict):
            _fail(w, "expected an object")
        missing = [k for k in (*keys, "c") if k not in item]
        if missing:
            _fail(w, f"missing {', '.join(missing)}")
        key = tuple(_index(item[k], d, f"{w}.{k}") for k, d in zip(keys, dims))
        if key in entries:
            _fail(w, f"duplicate index {list(key)}")
        entries[key] = _coef(fld, item["c"], f"{w}.c")
    return SparseTensor(dims, entries)


def dump_triples(t: SparseTensor, fld, keys=TENSOR_KEYS) -> list[dict]:
    return [dict(zip(keys, key), c=fld.format(c)) for key, c in sorted(t.items())]


def _vector(obj, basis: tuple[str, ...], fld, where: str) -> SparseTensor:
    if not isinstance(obj, dict):
        _fail(where, "expected a {basis label: coefficient} map")
    entries = {}
    for label, c in obj.items():
        if label not in basis:
            _fail(where, f"unknown basis label {label!r}")
        entries[(basis.index(label),)] = _coef(fld, c, f"{where}.{label}")
    return SparseTensor((len(basis),), entries)


def _dump_vector(v: SparseTensor, basis, fld) -> dict:
    return {basis[i]: fld.format(c) for (i,), c in sorted(v.items())}


def parse_field(obj, where: str = "field"):
    try:
        return field_from_descriptor(obj if obj is not None else {"kind": "rational"})
    except (ValueError, KeyError, TypeError) as exc:
        _fail(where, str(exc))


# -- algebras -------------------------------------------------------------------------------

def _group(obj, where: str) -> FiniteGroup:
    try:
        if isinstance(obj, str):
            return named_group(obj)
        if isinstance(obj, dict):
            return group_from_dict(obj)
    except (InvalidGroupError, ValueError, KeyError, TypeError) as exc:
        _fail(where, str(exc))
    _fail(where, "expected a group name or {elements, table}")


def algebra_from_dict(d: dict, field=None, where: str = "algebra") -> FiniteHopfAlgebra:
    if not isinstance(d, dict):
        _fail(where, "expected an object")
    fld = field or parse_field(d.get("field"), f"{where}.field")
    explicit = [k for k in ("basis", "mult", "comult", "unit", "counit", "antipode") if k in d]
    if "group" in d:
        if explicit:
            _fail(where, f"group shorthand cannot be combined with explicit {', '.join(explicit)}")
        G = _group(d["group"], f"{where}.group")
        build = d.get("build", "group_algebra")
        kwargs = {"name": d.get("name") or None}
        if "prefix" in d:
            kwargs["prefix"] = d["prefix"]
        if build == "group_algebra":
            return build_group_algebra(G, fld, **kwargs)
        if build == "dual_group_algebra":
            return build_dual_group_algebra(G, fld, **kwargs)
        _fail(f"{where}.build", f"unknown build {build!r}")
    for k in ("basis", "mult", "comult", "unit", "counit", "antipode"):
        if k not in d:
            _fail(where, f"missing field {k!r}")
    basis = d["basis"]
    if not isinstance(basis, list) or not basis or not all(isinstance(b, str) for b in basis):
        _fail(f"{where}.basis", "expected a non-empty list of labels")
    if len(set(basis)) != len(basis):
        _fail(f"{where}.basis", "duplicate labels")
    basis = tuple(basis)
    n = len(basis)
    antipode = parse_triples(d["antipode"], (n, n), fld, f"{where}.antipode", keys=("j", "i"))
    prov = d.get("provenance") or {}
    group = None
    if "group_table" in d:
        gt = d["group_table"]
        group = _group(gt, f"{where}.group_table")
    return FiniteHopfAlgebra(
        basis=basis,
        mult=parse_triples(d["mult"], (n, n, n), fld, f"{where}.mult"),
        unit=_vector(d["unit"], basis, fld, f"{where}.unit"),
        comult=parse_triples(d["comult"], (n, n, n), fld, f"{where}.comult"),
        counit=_vector(d["counit"], basis, fld, f"{where}.counit"),
        antipode=LinearOperator(n, {(i, j): c for (j, i), c in antipode.items()}),
        field=fld,
        name=d.get("name", ""),
        group=group,
        construction=d.get("construction", ""),
        provenance=prov,
    )


def algebra_to_dict(H: FiniteHopfAlgebra) -> dict:
    fld = H.field
    antipode = SparseTensor((H.dim, H.dim), {(j, i): c for (i, j), c in H.antipode.matrix.items()})
    out = {
        "name": H.name,
        "field": fld.descriptor(),
        "basis": list(H.basis),
        "unit": _dump_vector(H.unit, H.basis, fld),
        "counit": _dump_vector(H.counit, H.basis, fld),
        "mult": dump_triples(H.mult, fld),
        "comult": dump_triples(H.comult, fld),
        "antipode": dump_triples(antipode, fld, keys=("j", "i")),
    }
    if H.construction:
        out["construction"] = H.construction
    if H.group is not None:
        out["group_table"] = H.group.to_dict()
    if H.provenance:
        out["provenance"] = H.provenance
    return out


def load_algebra(ref, base: Path | None = None, field=None) -> FiniteHopfAlgebra:
    """``ref`` is a path (relative to ``base``) or an inline algebra object."""
    if isinstance(ref, dict):
        return algebra_from_dict(ref, field)
    if not isinstance(ref, (str, os.PathLike)):
        _fail("algebra", f"expected a path or an inline object, got {ref!r}")
    path = Path(ref)
    if base is not None and not path.is_absolute():
        path = base / path
    return algebra_from_dict(read_json(path), field, where=str(path))


# -- actions and coactions ---------------------------------------------------------------------

def _side(obj, dims, fld, where, keys):
    if obj is None or obj == "trivial":
        return None
    return parse_triples(obj, dims, fld, where, keys)


def action_from_dict(d: dict, base: Path | None = None, field=None, where: str = "action") -> BimoduleAction:
    if not isinstance(d, dict) or d.get("type", "action") != "action":
        _fail(where, "expected an action object")
    for k in ("H", "A"):
        if k not in d:
            _fail(where, f"missing field {k!r}")
    H = load_algebra(d["H"], base, field)
    A = load_algebra(d["A"], base, field)
    if H.field != A.field:
        _fail(where, "H and A are over different fields")
    fld = H.field
    n, m = H.dim, A.dim
    # left: (h, a; a')   right: (a, h; a')
    left = _side(d.get("left"), (n, m, m), fld, f"{where}.left", ("h", "a", "k"))
    right = _side(d.get("right"), (m, n, m), fld, f"{where}.right", ("a", "h", "k"))
    from .actions import trivial_action

    triv = trivial_action(H, A)
    return BimoduleAction(H, A, left if left is not None else triv.left,
                          right if right is not None else triv.right, name=d.get("name", ""))


def coaction_from_dict(d: dict, base: Path | None = None, field=None, where: str = "coaction") -> BicomoduleCoaction:
    if not isinstance(d, dict) or d.get("type", "coaction") != "coaction":
        _fail(where, "expected a coaction object")
    for k in ("H", "C"):
        if k not in d:
            _fail(where, f"missing field {k!r}")
    H = load_algebra(d["H"], base, field)
    C = load_algebra(d["C"], base, field)
    if H.field != C.field:
        _fail(where, "H and C are over different fields")
    fld = H.field
    n, m = H.dim, C.dim
    # left: (c; h, c')   right: (c; c', h)
    left = _side(d.get("left"), (m, n, m), fld, f"{where}.left", ("x", "h", "y"))
    right = _side(d.get("right"), (m, m, n), fld, f"{where}.right", ("x", "y", "h"))
    from .actions import trivial_coaction

    triv = trivial_coaction(H, C)
    return BicomoduleCoaction(H, C, left if left is not None else triv.left,
                              right if right is not None else triv.right, name=d.get("name", ""))


def action_to_dict(act: BimoduleAction, inline: bool = True) -> dict:
    fld = act.H.field
    return {
        "type": "action",
        "name": act.name,
        "H": algebra_to_dict(act.H),
        "A": algebra_to_dict(act.A),
        "left": dump_triples(act.left, fld, ("h", "a", "k")),
        "right": dump_triples(act.right, fld, ("a", "h", "k")),
    }


def coaction_to_dict(coact: BicomoduleCoaction) -> dict:
    fld = coact.H.field
    return {
        "type": "coaction",
        "name": coact.name,
        "H": algebra_to_dict(coact.H),
        "C": algebra_to_dict(coact.C),
        "left": dump_triples(coact.left, fld, ("x", "h", "y")),
        "right": dump_triples(coact.right, fld, ("x", "y", "h")),
    }


def load_structure(path, field=None):
    """Load an action or coaction file, dispatching on its ``type`` field."""
    path = Path(path)
    d = read_json(path)
    kind = d.get("type") if isinstance(d, dict) else None
    if kind == "action":
        return action_from_dict(d, path.parent, field, str(path))
    if kind == "coaction":
        return coaction_from_dict(d, path.parent, field, str(path))
    _fail(f"{path}.type", f"expected \"action\" or \"coaction\", got {kind!r}")


def load_action(path, field=None) -> BimoduleAction:
    path = Path(path)
    return action_from_dict(read_json(path), path.parent, field, str(path))


def load_coaction(path, field=None) -> BicomoduleCoaction:
    path = Path(path)
    return coaction_from_dict(read_json(path), path.parent, field, str(path))


# -- maps -------------------------------------------------------------------------------------

def map_from_dict(d: dict, field=None, base: Path | None = None, where: str = "map") -> tuple[LinearOperator, str, FiniteHopfAlgebra | None]:
    """Returns ``(operator, kind, embedded algebra or None)``.

    ``matrix[i][j]`` is the coefficient of ``e_i`` in the image of ``e_j``.
    ``images`` is a shorthand listing the basis index each basis element maps to.
    """
    if not isinstance(d, dict):
        _fail(where, "expected an object")
    kind = d.get("kind", "plain")
    if kind not in MAP_KINDS:
        _fail(f"{where}.kind", f"expected one of {MAP_KINDS}, got {kind!r}")
    alg = load_algebra(d["algebra"], base, field) if "algebra" in d else None
    fld = field or (alg.field if alg is not None else parse_field(d.get("field"), f"{where}.field"))
    if ("matrix" in d) == ("images" in d):
        _fail(where, "exactly one of 'matrix' or 'images' is required")
    if "images" in d:
        imgs = d["images"]
        if not isinstance(imgs, list) or not imgs:
            _fail(f"{where}.images", "expected a non-empty list of indices")
        n = len(imgs)
        op = LinearOperator.from_function_map([_index(v, n, f"{where}.images[{j}]") for j, v in enumerate(imgs)], fld.one)
    else:
        rows = d["matrix"]
        if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
            _fail(f"{where}.matrix", "expected a list of rows")
        n = len(rows)
        if any(len(r) != n for r in rows):
            _fail(f"{where}.matrix", f"not square ({n} rows)")
        entries = {}
        for i, row in enumerate(rows):
            for j, c in enumerate(row):
                v = _coef(fld, c, f"{where}.matrix[{i}][{j}]")
                if v:
                    entries[(i, j)] = v
        op = LinearOperator(n, entries)
    if alg is not None and alg.dim != op.dim:
        _fail(where, f"map dimension {op.dim} does not match algebra dimension {alg.dim}")
    return op, kind, alg


def map_to_dict(op: LinearOperator, kind: str = "plain", fld=QQ, algebra: FiniteHopfAlgebra | None = None,
                name: str = "") -> dict:
    out = {
        "kind": kind,
        "field": fld.descriptor(),
        "matrix": [[fld.format(fld(op.matrix[(i, j)])) for j in range(op.dim)] for i in range(op.dim)],
    }
    if name:
        out["name"] = name
    if algebra is not None:
        out["algebra"] = algebra_to_dict(algebra)
    return out


def load_map(path, field=None) -> tuple[LinearOperator, str, FiniteHopfAlgebra | None]:
    path = Path(path)
    return map_from_dict(read_json(path), field, path.parent, str(path))
