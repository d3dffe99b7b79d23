"""Size guards. Defaults may be overridden by environment variables or CLI flags."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, replace

ENV_PREFIX = "RELCHAR_"


@dataclass(frozen=True)
class Guards:
    enumeration: int = 100_000
    character_table: int = 5_000
    subgroup_enumeration: int = 300

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(ENV_PREFIX + name.upper())
    if raw is None or raw == "":
        return default
    return int(raw)


def guards_from_env(base: Guards | None = None) -> Guards:
    base = base or Guards()
    return Guards(
        enumeration=_env_int("enumeration_guard", base.enumeration),
        character_table=_env_int("table_guard", base.character_table),
        subgroup_enumeration=_env_int("subgroup_guard", base.subgroup_enumeration),
    )


_current = guards_from_env()


def current() -> Guards:
    return _current


def set_guards(guards: Guards | None = None, **changes: int) -> Guards:
    """Install new process-wide guards; returns the previous value."""
    global _current
    previous = _current
    _current = replace(guards or _current, **changes)
    return previous
