"""Reading and writing the JSON group file format.

A group file looks like::

    {
      "name": "S3",
      "degree": 3,
      "generators": [[2, 3, 1], [2, 1, 3]],
      "normal_subgroups": [
        {"name": "a3", "generators": [[2, 3, 1]]},
        {"name": "also_a3", "generators": [{"word": "g1*g1"}]}
      ]
    }

Images are 1-based.  A normal subgroup generator is an image array or a
word in the group generators: either the string ``"g1*g2"`` or
``{"word": w}`` where ``w`` is such a string or a list of 1-based
generator indices like ``[1, 2]``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from ..errors import GroupFormatError
from .permgroup import PermGroup
from .permutation import Permutation

_WORD = re.compile(r"^g(\d+)$")


def _word_indices(word: Any, ngens: int) -> list[int]:
    if isinstance(word, str):
        if word.strip() in ("", "1"):
            return []
        out = []
        for part in word.split("*"):
            m = _WORD.match(part.strip())
            if not m:
                raise GroupFormatError(f"bad word letter {part!r}")
            out.append(int(m.group(1)))
    elif isinstance(word, list) and all(isinstance(i, int) for i in word):
        out = list(word)
    else:
        raise GroupFormatError(f"bad word {word!r}")
    for i in out:
        if not 1 <= i <= ngens:
            raise GroupFormatError(f"word refers to generator {i}, but there are {ngens}")
    return out


def _perm(raw: Any, degree: int, row: int) -> Permutation:
    if not isinstance(raw, list) or not all(isinstance(i, int) for i in raw):
        raise GroupFormatError(f"generator row {row} is not an integer array")
    if len(raw) != degree:
        raise GroupFormatError(f"generator row {row} has length {len(raw)}, expected degree {degree}")
    return Permutation(raw, row=row)


def parse_group(doc: dict[str, Any] | str) -> PermGroup:
    """Build a group from a parsed document or its JSON text."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise GroupFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GroupFormatError("group document must be an object")
    degree = doc.get("degree")
    if not isinstance(degree, int) or degree < 1:
        raise GroupFormatError("degree must be a positive integer")
    raw_gens = doc.get("generators", [])
    if not isinstance(raw_gens, list):
        raise GroupFormatError("generators must be a list")
    gens = [_perm(g, degree, i) for i, g in enumerate(raw_gens)]
    normals: dict[str, list[Permutation]] = {}
    for j, entry in enumerate(doc.get("normal_subgroups", []) or []):
        if not isinstance(entry, dict) or "generators" not in entry:
            raise GroupFormatError(f"normal subgroup {j} needs a generators list")
        name = str(entry.get("name", f"n{j}"))
        if name in normals:
            raise GroupFormatError(f"duplicate normal subgroup name {name!r}")
        items = []
        for g in entry["generators"]:
            if isinstance(g, str) or (isinstance(g, dict) and "word" in g):
                p = Permutation.identity(degree)
                for i in _word_indices(g if isinstance(g, str) else g["word"], len(gens)):
                    p = p * gens[i - 1]
                items.append(p)
            else:
                items.append(_perm(g, degree, j))
        normals[name] = items
    name = doc.get("name")
    return PermGroup(degree, gens, name=str(name) if name is not None else None, tagged_normals=normals)


def load_group(path: str | Path) -> PermGroup:
    return parse_group(Path(path).read_text())


def emit(G: PermGroup) -> dict[str, Any]:
    """The document for ``G``; tagged subgroups are written as image arrays."""
    doc: dict[str, Any] = {
        "name": G.name,
        "degree": G.degree,
        "generators": [list(g.images) for g in G.generators],
    }
    if G.tagged_normals:
        doc["normal_subgroups"] = [
            {"name": k, "generators": [list(g.images) for g in v]} for k, v in G.tagged_normals.items()
        ]
    return doc


def dumps(G: PermGroup) -> str:
    return json.dumps(emit(G), indent=2)


__all__ = ["dumps", "emit", "load_group", "parse_group"]
