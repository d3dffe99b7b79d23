"""Running the theorem checkers over a corpus, and the bound-hunting mode."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Any

from .. import config
from ..corpus import CorpusEntry, tagged_normals
from ..errors import GuardExceeded, RelcharError
from ..group_core.permgroup import PermGroup
from ..reldeg import relative_degrees
from ..structure.lattice import is_p_solvable, normal_subgroups
from ..structure.series import derived_length, fitting_height, is_solvable
from ..structure.subgroup import SubgroupHandle
from ..structure.sylow import prime_factors
from .checks import THEOREM_IDS, PairContext, check_theorem
from .outcome import Status, SuiteReport, TheoremOutcome

CorpusItem = CorpusEntry | PermGroup


def _label(item: CorpusItem) -> str:
    return item.key if isinstance(item, CorpusEntry) else (item.name or "G")


def _build(item: CorpusItem) -> PermGroup:
    return item.build() if isinstance(item, CorpusEntry) else item


def normal_pairs(G: PermGroup, tagged_only: bool = False) -> list[tuple[SubgroupHandle, dict[str, Any]]]:
    """Normal subgroups of ``G`` with their report descriptors, in canonical order."""
    tags = tagged_normals(G)
    names: dict = {}
    for tag, N in tags.items():
        names.setdefault(N.key, tag)
    out = []
    for i, N in enumerate(normal_subgroups(G)):
        name = names.get(N.key)
        if tagged_only and name is None:
            continue
        desc = {
            "name": name or f"n{i}",
            "index": i,
            "order": N.order,
            "generators": [G.word(g) for g in N.generators],
        }
        out.append((N, desc))
    return out


def _skipped(group: str, ids: Sequence[str], reason: str) -> list[TheoremOutcome]:
    return [TheoremOutcome(t, group, None, Status.SKIPPED, {}, reason) for t in ids]


def _run_entry(item: CorpusItem, ids: Sequence[str], tagged_only: bool) -> tuple[list[TheoremOutcome], dict]:
    label = _label(item)
    try:
        G = _build(item)
        pairs = normal_pairs(G, tagged_only)
    except (GuardExceeded, RelcharError) as exc:
        return _skipped(label, ids, str(exc)), {}
    out = []
    for N, desc in pairs:
        ctx = PairContext(G, N)
        for t in ids:
            try:
                o = check_theorem(t, G, N, context=ctx)
            except RelcharError as exc:
                o = TheoremOutcome(t, label, None, Status.SKIPPED, {}, str(exc))
            o.group = label
            o.normal = desc
            out.append(o)
    info = {}
    table = G.peek("character_table")
    if table is not None:
        info = {"order": G.order, "dixon_prime": table.dixon_prime, "exponent": table.exponent}
    return out, info


def run_suite(
    corpus: Iterable[CorpusItem],
    ids: Sequence[str] | None = None,
    *,
    tagged_only: bool = False,
    max_order: int | None = None,
    workers: int = 1,
) -> SuiteReport:
    """Evaluate every requested theorem on every normal subgroup of every corpus group.

    Entries are independent, so ``workers > 1`` spreads them over threads;
    the report is assembled in corpus order either way.
    """
    ids = list(THEOREM_IDS if ids is None else ids)
    for t in ids:
        if t not in THEOREM_IDS:
            raise KeyError(f"unknown theorem id {t!r}")
    items = list(corpus)
    excluded = []
    if max_order is not None:
        kept = []
        for it in items:
            (kept if it.order <= max_order else excluded).append(it)
        items = kept
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda it: _run_entry(it, ids, tagged_only), items))
    else:
        results = [_run_entry(it, ids, tagged_only) for it in items]
    outcomes = [o for res, _ in results for o in res]
    env = {
        "guards": config.current().as_dict(),
        "theorems": ids,
        "tagged_only": tagged_only,
        "max_order": max_order,
        "groups": {_label(it): info for it, (_, info) in zip(items, results)},
        "excluded": [_label(it) for it in excluded],
    }
    return SuiteReport(outcomes, env)


# -- hunt mode ----------------------------------------------------------------------


def hunt(corpus: Iterable[CorpusItem], *, max_order: int | None = None) -> list[dict[str, Any]]:
    """``(n, dl N, h N)`` for every solvable pair, with the proved bounds evaluated.

    Two further columns only collect data: whether ``dl N <= n`` (asked in
    the closing remarks for solvable N in general) and whether the
    p-solvability hypothesis of the three-degree theorem holds.
    """
    records = []
    for item in corpus:
        if max_order is not None and item.order > max_order:
            continue
        label = _label(item)
        try:
            G = _build(item)
            pairs = normal_pairs(G)
        except RelcharError:
            continue
        G_solvable = is_solvable(G)
        for N, desc in pairs:
            if not is_solvable(N):
                continue
            n = len(relative_degrees(G, N))
            dl = derived_length(N)
            h = fitting_height(N)
            p_solvable = all(is_p_solvable(G, p) for p in prime_factors(N.order))
            records.append(
                {
                    "group": label,
                    "normal": desc,
                    "n": n,
                    "dl": dl,
                    "h": h,
                    "h_le_n": h <= n,
                    "dl_le_quadratic": dl <= n * (n + 1) // 2,
                    "dl_le_3n": (dl <= 3 * n) if G_solvable else None,
                    "dl_le_n": dl <= n,
                    "G_p_solvable_for_N": p_solvable,
                }
            )
    return records


def hunt_violations(records: Iterable[dict[str, Any]]) -> list[dict[str, Any]]:
    """Records where a proved bound fails (always a defect)."""
    return [
        r for r in records if not r["h_le_n"] or not r["dl_le_quadratic"] or r["dl_le_3n"] is False
    ]


__all__ = ["hunt", "hunt_violations", "normal_pairs", "run_suite"]
