"""Access to the shipped data files (algebras, actions, coactions, maps, claims).

Set ``HOPFRB_FIXTURES`` to point at a different directory with the same layout.
"""

from __future__ import annotations

import os
from pathlib import Path

from .formats import FormatError, load_action, load_algebra, load_coaction, load_map, read_json

ENV_VAR = "HOPFRB_FIXTURES"


def fixture_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    return Path(override) if override else Path(__file__).parent / "data"


def fixture_path(name: str) -> Path:
    path = fixture_dir() / name
    if not path.exists():
        raise FormatError(f"{name}: no such fixture in {fixture_dir()}")
    return path


def resolve(ref: str) -> Path:
    """A path if it exists, otherwise the shipped fixture of that name."""
    p = Path(ref)
    return p if p.exists() else fixture_path(ref)


def list_fixtures() -> list[str]:
    return sorted(p.name for p in fixture_dir().glob("*.json"))


def algebra(name: str, field=None):
    return load_algebra(fixture_path(name), field=field)


def action(name: str, field=None):
    return load_action(fixture_path(name), field)


def coaction(name: str, field=None):
    return load_coaction(fixture_path(name), field)


def linear_map(name: str, field=None):
    """``(operator, kind, algebra)`` from a map file."""
    return load_map(fixture_path(name), field)


def claims() -> list[dict]:
    return read_json(fixture_path("claims.json"))["claims"]
