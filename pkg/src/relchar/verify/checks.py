"""One executable predicate per theorem, corollary and lemma.

Each checker gets a :class:`PairContext` for a pair ``(G, N)`` with ``N``
normal in ``G`` and returns ``(status, witness)``.  A checker answers
Inapplicable when no instance satisfies the hypothesis, Pass when every
instance satisfies the conclusion, and Fail with the offending instance
otherwise.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from functools import cached_property
from typing import Any

import numpy as np

from ..characters.dixon import character_table
from ..characters.ops import det_order, is_invariant, kernel_of, restrict, table_of, vanishing_off
from ..characters.table import CharacterTable, inner_products
from ..errors import GuardExceeded, ImplementationDefect
from ..group_core.permgroup import PermGroup
from ..reldeg import RelativeDegreeData, cd_rel_mod, irr_rel, reducing_sections
from ..structure.lattice import (
    chief_factor_pairs,
    enumerate_subgroups,
    is_chief_factor_abelian,
    is_p_solvable,
    normal_subgroups,
)
from ..structure.series import (
    NONSOLVABLE,
    commutator_subgroup,
    derived_length,
    derived_subgroup,
    fitting_height,
    fitting_subgroup,
    is_nilpotent,
    is_solvable,
    nilpotent_residual,
)
from ..structure.subgroup import SubgroupHandle, intersection, trivial_subgroup, whole_group
from ..structure.sylow import has_normal_p_complement, is_p_group, is_p_power, o_p, o_p_residual, p_part, prime_factors
from .outcome import Status, TheoremOutcome

THEOREM_IDS = (
    "T3.1",
    "C3.2",
    "C3.3",
    "T4.1",
    "L4.2",
    "C4.3",
    "C4.4",
    "T4.5",
    "L4.6",
    "L5.1",
    "L5.2",
    "T5.3",
    "TB",
    "TC",
    "TD",
    "T6.1",
    "T6.2",
    "C6.3",
)

Result = tuple[Status, dict[str, Any]]


class PairContext:
    """Lazily computed facts about one pair ``(G, N)``."""

    def __init__(self, G: PermGroup, N: SubgroupHandle):
        self.G = G
        self.N = N

    @cached_property
    def table(self) -> CharacterTable:
        return character_table(self.G)

    @cached_property
    def rel(self) -> RelativeDegreeData:
        return irr_rel(self.table, self.N)

    @property
    def cd(self) -> tuple[int, ...]:
        return self.rel.degrees

    @property
    def n(self) -> int:
        return len(self.rel.degrees)

    @cached_property
    def dl(self):
        return derived_length(self.N)

    @cached_property
    def N_solvable(self) -> bool:
        return is_solvable(self.N)

    @cached_property
    def G_solvable(self) -> bool:
        return is_solvable(whole_group(self.G))

    @cached_property
    def N_prime(self) -> SubgroupHandle:
        return derived_subgroup(self.N)

    def cd_of(self, M: SubgroupHandle) -> tuple[int, ...]:
        return irr_rel(self.table, M).degrees

    def p_solvable(self, p: int) -> bool:
        return is_p_solvable(self.G, p)


def _sub(H: SubgroupHandle) -> dict[str, Any]:
    return {"order": H.order}


def _rows(chis) -> list[int]:
    return [c.index for c in chis]


# -- section 3 -------------------------------------------------------------------


def check_T3_1(ctx: PairContext) -> Result:
    G, N = ctx.G, ctx.N
    if N.order == 1:
        return Status.INAPPLICABLE, {"reason": "N = 1"}
    applicable = []
    for p in prime_factors(G.order):
        ok, K = has_normal_p_complement(N, p)
        if not ok or not K.is_abelian():
            continue
        chars = ctx.rel.characters
        best = min(p_part(c.degree, p) for c in chars)
        minimisers = [c for c in chars if p_part(c.degree, p) == best]
        bad = [c for c in minimisers if not ctx.N_prime <= kernel_of(c)]
        if bad:
            return Status.FAIL, {"prime": p, "rows": _rows(bad), "degrees": [c.degree for c in bad]}
        applicable.append(p)
    if not applicable:
        return Status.INAPPLICABLE, {"reason": "N has no abelian normal p-complement"}
    lower = ctx.cd_of(ctx.N_prime)
    if not (set(lower) < set(ctx.cd)):
        return Status.FAIL, {"primes": applicable, "cd_N": list(ctx.cd), "cd_N_prime": list(lower)}
    return Status.PASS, {"primes": applicable, "cd_N": list(ctx.cd), "cd_N_prime": list(lower)}


def check_C3_2(ctx: PairContext) -> Result:
    if ctx.n > 1:
        return Status.INAPPLICABLE, {"n": ctx.n}
    w = {"n": ctx.n, "dl": ctx.dl}
    if ctx.dl == NONSOLVABLE or ctx.dl > ctx.n:
        return Status.FAIL, w
    return Status.PASS, w


def check_C3_3(ctx: PairContext) -> Result:
    if not is_nilpotent(ctx.N):
        return Status.INAPPLICABLE, {"reason": "N is not nilpotent"}
    w = {"n": ctx.n, "dl": ctx.dl}
    return (Status.PASS if ctx.dl <= ctx.n else Status.FAIL), w


# -- section 4 -------------------------------------------------------------------


def check_T4_1(ctx: PairContext) -> Result:
    G, N = ctx.G, ctx.N
    if ctx.rel.max is None:
        return Status.INAPPLICABLE, {"reason": "N = 1"}
    pairs = chief_factor_pairs(G)
    checked = 0
    for chi in ctx.rel.of_degree(ctx.rel.max):
        NK = intersection(N, kernel_of(chi))
        if not is_nilpotent(NK):
            return Status.FAIL, {"row": chi.index, "N_cap_ker": _sub(NK), "claim": "nilpotent"}
        for M, K in pairs:
            if M <= NK and is_chief_factor_abelian(K, M):
                checked += 1
                if not is_nilpotent(K):
                    return Status.FAIL, {"row": chi.index, "K": _sub(K), "M": _sub(M)}
    return Status.PASS, {"max": ctx.rel.max, "chief_factors_checked": checked}


def check_L4_2(ctx: PairContext) -> Result:
    """Every normal ``K <= N`` with ``K cap V(chi) <= ker chi`` lies in ``ker chi``."""
    G, N = ctx.G, ctx.N
    normals = normal_subgroups(G, N)
    hits = 0
    for chi in ctx.table.rows:
        ker = kernel_of(chi)
        V = vanishing_off(chi)
        for K in normals:
            if intersection(K, V) <= ker:
                hits += 1
                if not K <= ker:
                    return Status.FAIL, {"row": chi.index, "K": _sub(K), "V": _sub(V), "ker": _sub(ker)}
    return Status.PASS, {"instances": hits}


def check_C4_3(ctx: PairContext) -> Result:
    N = ctx.N
    if N.order == 1 or not ctx.N_solvable:
        return Status.INAPPLICABLE, {"reason": "needs 1 < N solvable"}
    F = fitting_subgroup(N)
    mod = cd_rel_mod(ctx.table, N, F)
    w = {"max": ctx.rel.max, "F": _sub(F), "cd_mod_F": list(mod)}
    return (Status.FAIL if ctx.rel.max in mod else Status.PASS), w


def check_C4_4(ctx: PairContext) -> Result:
    if not ctx.N_solvable:
        return Status.INAPPLICABLE, {"reason": "N is not solvable"}
    n, dl = ctx.n, ctx.dl
    h = fitting_height(ctx.N)
    w = {"n": n, "dl": dl, "h": h, "h_slack": n - h, "dl_slack": n * (n + 1) // 2 - dl}
    ok = h <= n and dl <= n * (n + 1) // 2
    return (Status.PASS if ok else Status.FAIL), w


def check_T4_5(ctx: PairContext) -> Result:
    if not ctx.G_solvable:
        return Status.INAPPLICABLE, {"reason": "G is not solvable"}
    w = {"n": ctx.n, "dl": ctx.dl, "slack": 3 * ctx.n - ctx.dl}
    return (Status.PASS if ctx.dl <= 3 * ctx.n else Status.FAIL), w


def check_L4_6(ctx: PairContext) -> Result:
    G, N = ctx.G, ctx.N
    m = ctx.rel.max
    if m is None:
        return Status.INAPPLICABLE, {"reason": "N = 1"}
    instances = 0
    for M in normal_subgroups(G, N):
        if M.order == 1:
            continue
        F = fitting_subgroup(M)
        primes = prime_factors(F.order) if F.order > 1 else prime_factors(G.order)
        if len(primes) != 1 and F.order > 1:
            continue
        Md = derived_subgroup(M)
        if m not in cd_rel_mod(ctx.table, N, Md):
            continue
        for p in primes:
            instances += 1
            if not is_p_group(M, p):
                return Status.FAIL, {"M": _sub(M), "prime": p, "max": m}
    if instances == 0:
        return Status.INAPPLICABLE, {"reason": "no M satisfies the hypothesis"}
    return Status.PASS, {"instances": instances}


# -- section 5 -------------------------------------------------------------------


def check_L5_1(ctx: PairContext) -> Result:
    G, N = ctx.G, ctx.N
    a = ctx.rel.min
    if a is None:
        return Status.INAPPLICABLE, {"reason": "N = 1"}
    subgroups = enumerate_subgroups(G)  # may raise GuardExceeded
    checked = 0
    for H in subgroups:
        index = G.order // H.order
        if index > a:
            continue
        checked += 1
        if not N <= H:
            return Status.FAIL, {"H": _sub(H), "index": index, "a": a, "claim": "N <= H"}
        if index < a and not N <= derived_subgroup(H):
            return Status.FAIL, {"H": _sub(H), "index": index, "a": a, "claim": "N <= H'"}
    return Status.PASS, {"a": a, "subgroups_checked": checked, "subgroups_total": len(subgroups)}


def _lying_over(ctx: PairContext) -> np.ndarray:
    """``over[chi, alpha]`` is True when ``alpha`` is a constituent of ``chi_N``."""
    G, N = ctx.G, ctx.N

    def build() -> np.ndarray:
        Nt = table_of(N)
        res = [restrict(chi, N) for chi in ctx.table.rows]
        mults = inner_products(res, list(Nt.rows))
        return np.array([[m != 0 for m in row] for row in mults], dtype=bool)

    return G.cached(("lying_over", N.key), build)


def check_L5_2(ctx: PairContext) -> Result:
    G, N = ctx.G, ctx.N
    if N.order == 1:
        return Status.INAPPLICABLE, {"reason": "N = 1"}
    Nt = table_of(N)
    over = _lying_over(ctx)
    degrees = np.array(ctx.table.degrees())
    instances = 0
    for alpha in Nt.rows[1:]:
        if not is_invariant(G, N, alpha):
            continue
        _, o = det_order(alpha)
        for p in prime_factors(G.order):
            if (o * alpha.degree) % p == 0:
                continue
            instances += 1
            above = degrees[over[:, alpha.index]]
            if not np.any(above % p != 0):
                return Status.FAIL, {"alpha": alpha.index, "prime": p, "degrees_above": sorted(set(above.tolist()))}
    if instances == 0:
        return Status.INAPPLICABLE, {"reason": "no invariant nonprincipal alpha with p not dividing o(alpha)alpha(1)"}
    return Status.PASS, {"instances": instances}


def check_T5_3(ctx: PairContext) -> Result:
    if ctx.n != 2 or not ctx.N_solvable:
        return Status.INAPPLICABLE, {"n": ctx.n, "solvable": ctx.N_solvable}
    w = {"n": 2, "dl": ctx.dl}
    return (Status.PASS if ctx.dl <= 2 else Status.FAIL), w


def check_TB(ctx: PairContext) -> Result:
    if ctx.n > 2:
        return Status.INAPPLICABLE, {"n": ctx.n}
    w = {"n": ctx.n, "dl": ctx.dl}
    if ctx.dl == NONSOLVABLE or ctx.dl > ctx.n:
        return Status.FAIL, w
    return Status.PASS, w


def check_TC(ctx: PairContext) -> Result:
    if ctx.n != 3:
        return Status.INAPPLICABLE, {"n": ctx.n}
    primes = prime_factors(ctx.N.order)
    if not all(ctx.p_solvable(p) for p in primes):
        return Status.INAPPLICABLE, {"reason": "G is not p-solvable for some p dividing |N|"}
    w = {"n": 3, "dl": ctx.dl}
    if ctx.dl == NONSOLVABLE or ctx.dl > 3:
        return Status.FAIL, w
    return Status.PASS, w


def check_thm_D(ctx: PairContext) -> Result:
    G, N = ctx.G, ctx.N
    lower = ctx.cd_of(ctx.N_prime)
    primes = []
    for p in prime_factors(G.order):
        if all(d % p == 0 for d in lower):
            ok, _ = has_normal_p_complement(N, p)
            if not ok:
                return Status.FAIL, {"prime": p, "cd_N_prime": list(lower)}
            primes.append(p)
    if not primes:
        return Status.INAPPLICABLE, {"cd_N_prime": list(lower)}
    return Status.PASS, {"primes": primes, "cd_N_prime": list(lower)}


# -- section 6 -------------------------------------------------------------------


def _two_powers_and_odd(degrees: tuple[int, ...]) -> bool:
    if len(degrees) != 3:
        return False
    for i in range(3):
        rest = [d for j, d in enumerate(degrees) if j != i]
        if degrees[i] % 2 == 1 and all(is_p_power(d, 2) for d in rest):
            return True
    return False


def check_thm_6_1(ctx: PairContext) -> Result:
    G, N = ctx.G, ctx.N
    a = ctx.rel.min
    if a is None:
        return Status.INAPPLICABLE, {"reason": "N = 1"}
    found = []
    for chi in ctx.rel.of_degree(a):
        if chi.degree == 1:
            continue  # linear characters restrict to linear constituents: nothing reduces
        for s in reducing_sections(ctx.table, N, chi):
            if not s.exceptional or not ctx.p_solvable(s.p):
                continue
            item = {"row": chi.index, "degree": chi.degree, "section": s.to_json()}
            checks = {
                "a_p_is_2": s.p == 2,
                "b_degree_even": chi.degree % 2 == 0,
                "c_at_least_three_degrees": ctx.n >= 3,
            }
            if ctx.n == 3:
                checks["d_two_powers_of_2_and_odd"] = _two_powers_and_odd(ctx.cd)
                checks["d_N_mod_X_abelian"] = ctx.N_prime <= s.X
            item["checks"] = checks
            if not all(checks.values()):
                return Status.FAIL, item
            found.append(item)
    if not found:
        return Status.INAPPLICABLE, {"reason": "no exceptional reducing section for a minimal-degree character"}
    return Status.PASS, {"cd": list(ctx.cd), "exceptional": found}


def check_T6_2(ctx: PairContext) -> Result:
    G, N = ctx.G, ctx.N
    if ctx.n != 3:
        return Status.INAPPLICABLE, {"n": ctx.n}
    a = ctx.rel.min
    instances = []
    for K in normal_subgroups(G, N):
        for p in prime_factors(K.order):
            E = o_p(K, p)
            if E.order != p_part(K.order, p):
                continue
            if o_p_residual(K, p).order != K.order:
                continue
            if not ctx.p_solvable(p):
                continue
            if a not in ctx.cd_of(E):
                continue
            Ed = derived_subgroup(E)
            ok_abelian = ctx.N_prime <= E
            ok_center = commutator_subgroup(Ed, K).order == 1
            inst = {"K": _sub(K), "prime": p, "E": _sub(E)}
            if not (ok_abelian and ok_center):
                inst.update({"N_mod_E_abelian": ok_abelian, "E_prime_central_in_K": ok_center})
                return Status.FAIL, inst
            instances.append(inst)
    if not instances:
        return Status.INAPPLICABLE, {"reason": "no K satisfies the hypotheses"}
    return Status.PASS, {"instances": instances}


def check_C6_3(ctx: PairContext) -> Result:
    N = ctx.N
    a = ctx.rel.min
    if a is None or not ctx.G_solvable:
        return Status.INAPPLICABLE, {"reason": "needs G solvable and N > 1"}
    if a % 2 == 0 and N.order % 2 == 0:
        return Status.INAPPLICABLE, {"reason": "a and |N| both even"}
    M = nilpotent_residual(N)
    cdM = ctx.cd_of(M)
    w = {"a": a, "M": _sub(M), "cd_M": list(cdM)}
    return (Status.FAIL if a in cdM else Status.PASS), w


CHECKERS: dict[str, Callable[[PairContext], Result]] = {
    "T3.1": check_T3_1,
    "C3.2": check_C3_2,
    "C3.3": check_C3_3,
    "T4.1": check_T4_1,
    "L4.2": check_L4_2,
    "C4.3": check_C4_3,
    "C4.4": check_C4_4,
    "T4.5": check_T4_5,
    "L4.6": check_L4_6,
    "L5.1": check_L5_1,
    "L5.2": check_L5_2,
    "T5.3": check_T5_3,
    "TB": check_TB,
    "TC": check_TC,
    "TD": check_thm_D,
    "T6.1": check_thm_6_1,
    "T6.2": check_T6_2,
    "C6.3": check_C6_3,
}


def describe_normal(G: PermGroup, N: SubgroupHandle, name: str | None = None) -> dict[str, Any]:
    return {
        "name": name,
        "order": N.order,
        "generators": [G.word(g) for g in N.generators],
    }


def check_theorem(
    theorem: str,
    G: PermGroup,
    N: SubgroupHandle,
    *,
    name: str | None = None,
    context: PairContext | None = None,
) -> TheoremOutcome:
    """Evaluate one theorem on ``(G, N)``; guard trips become Skipped."""
    if theorem not in CHECKERS:
        raise KeyError(f"unknown theorem id {theorem!r}")
    ctx = context or PairContext(G, N)
    start = time.perf_counter()
    reason = None
    try:
        if not N.is_normal():
            raise ValueError("N is not normal in G")
        status, witness = CHECKERS[theorem](ctx)
    except GuardExceeded as exc:
        status, witness, reason = Status.SKIPPED, {}, str(exc)
    except ImplementationDefect as exc:
        status, witness = Status.FAIL, {"defect": str(exc)}
    millis = (time.perf_counter() - start) * 1000
    return TheoremOutcome(
        theorem=theorem,
        group=G.name or "G",
        normal=describe_normal(G, N, name),
        status=status,
        witness=witness,
        reason=reason,
        millis=millis,
    )


def check_thm_D_outcome(G: PermGroup, N: SubgroupHandle) -> TheoremOutcome:
    return check_theorem("TD", G, N)


def check_thm_6_1_outcome(G: PermGroup, N: SubgroupHandle) -> TheoremOutcome:
    return check_theorem("T6.1", G, N)
