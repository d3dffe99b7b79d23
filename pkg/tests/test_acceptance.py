"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Each criterion builds its groups from scratch so timings include table
construction.  Run ``python tests/test_acceptance.py`` for the lines alone.
"""

import io
import json
import subprocess
import sys
import time

import pytest

from relchar.characters.dixon import character_table
from relchar.characters.ops import induce, kernel_of, table_of
from relchar.cli import main
from relchar.corpus import builtin_corpus, corpus_entry, tagged_normals
from relchar.reldeg import cd_rel_mod, cd_rel_quotient, irr_rel, reducing_sections
from relchar.structure.lattice import normal_subgroups
from relchar.structure.series import derived_subgroup
from relchar.structure.sylow import prime_factors, sylow_subgroup
from relchar.verify.checks import check_theorem
from relchar.verify.outcome import Status
from relchar.verify.suite import hunt

EXPECTED_PASS = ["T3.1", "C3.2", "C3.3", "T4.1", "L4.2", "C4.3", "C4.4", "T4.5", "L4.6", "L5.2", "T5.3", "TB", "TC", "TD", "T6.1", "C6.3"]

RESULTS: dict[int, bool] = {}


def _line(n: int, title: str, ok: bool, detail: str, capsys=None) -> None:
    RESULTS[n] = ok
    text = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title} ({detail})"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + text)
    else:
        print(text)


def _cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_1_gl23_relative_degrees(capsys):
    t0 = time.perf_counter()
    code, out = _cli("reldeg", "--builtin", "gl23", "--normal", "sl23", "--structured")
    dt = time.perf_counter() - t0
    cd = json.loads(out)["normals"][0]["cd"] if code == 0 else None
    ok = code == 0 and cd == [2, 3, 4] and dt < 1.0
    _line(1, "cd(GL(2,3) | SL(2,3)) = {2, 3, 4}", ok, f"got {cd}, {dt:.3f}s", capsys)
    assert ok


def test_2_exceptional_case(capsys):
    t0 = time.perf_counter()
    G = corpus_entry("gl23").build()
    N = tagged_normals(G)["sl23"]
    T = character_table(G)
    faithful = [c for c in T.rows if c.degree == 2 and kernel_of(c).order == 1]
    sections = [s for chi in faithful for s in reducing_sections(T, N, chi) if s.exceptional]
    found = bool(faithful) and all(
        any(s.X.order == 8 and s.Y.order == 2 and s.p == 2 for s in reducing_sections(T, N, chi) if s.exceptional)
        for chi in faithful
    )
    o = check_theorem("T6.1", G, N)
    checks = [c for item in o.witness.get("exceptional", []) for c in item["checks"].items()]
    names = {k for k, _ in checks}
    full = names == {"a_p_is_2", "b_degree_even", "c_at_least_three_degrees", "d_two_powers_of_2_and_odd", "d_N_mod_X_abelian"}
    dt = time.perf_counter() - t0
    ok = found and o.status is Status.PASS and full and all(v for _, v in checks) and dt < 1.0
    _line(2, "exceptional reducing 2-section Q8/Z and Theorem 6.1 (a)-(d)", ok,
          f"{len(sections)} exceptional sections, T6.1 {o.status.value}, {dt:.3f}s", capsys)
    assert ok


def test_3_berger_contrast(capsys):
    t0 = time.perf_counter()
    G = corpus_entry("berger216").build()
    N = tagged_normals(G)["n27"]
    T = character_table(G)
    rel = irr_rel(T, N)
    Nd = derived_subgroup(N)
    escaping = [c.index for c in T.rows if c.degree == 3 and not Nd <= kernel_of(c)]
    dt = time.perf_counter() - t0
    ok = N.order == 27 and rel.min == 3 and len(escaping) > 0 and dt < 5.0
    _line(3, "berger216: min cd(G|N) = 3 and a degree-3 row misses N'", ok,
          f"cd = {list(rel.degrees)}, {len(escaping)} such rows, {dt:.3f}s", capsys)
    assert ok


def test_4_exactness(capsys):
    t0 = time.perf_counter()
    bad = []
    for e in builtin_corpus():
        G = e.build()
        T = character_table(G)
        if not (T.sum_of_squares_ok() and len(T.rows) == len(T.class_data)
                and T.first_orthogonality() and T.second_orthogonality()):
            bad.append(e.key)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 180
    _line(4, "exact orthogonality on every corpus table", ok, f"{len(builtin_corpus())} groups, bad {bad}, {dt:.1f}s", capsys)
    assert ok


def test_5_theorem_oracle(capsys):
    t0 = time.perf_counter()
    code, out = _cli("verify", "--builtin", "all", "--theorems", "all", "--structured")
    dt = time.perf_counter() - t0
    doc = json.loads(out)
    orders = {e.key: e.order for e in builtin_corpus()}
    fails = [o for o in doc["outcomes"] if o["status"] == "Fail"]
    passed = {o["theorem"] for o in doc["outcomes"] if o["status"] == "Pass"}
    missing = [t for t in EXPECTED_PASS if t not in passed]
    l51_small = [o for o in doc["outcomes"] if o["theorem"] == "L5.1" and orders[o["group"]] <= 300]
    l51_bad = [o for o in l51_small if o["status"] not in ("Pass", "Inapplicable")]
    skipped_other = [o for o in doc["outcomes"] if o["status"] == "Skipped" and o["theorem"] != "L5.1"]
    ok = code == 0 and not fails and not missing and not l51_bad and not skipped_other and dt < 600
    _line(5, "zero Fail over every (G, N) pair and theorem", ok,
          f"{doc['aggregate']}, missing Pass {missing}, {dt:.1f}s", capsys)
    assert ok


def test_6_hunt_bounds(capsys):
    t0 = time.perf_counter()
    records = hunt(builtin_corpus())
    ok_bounds = all(r["h"] <= r["n"] and r["dl"] <= r["n"] * (r["n"] + 1) // 2 for r in records)
    ok_3n = all(r["dl_le_3n"] is not False for r in records)
    (gl,) = [r for r in records if r["group"] == "gl23" and r["normal"]["name"] == "sl23"]
    example = (gl["n"], gl["dl"], gl["h"]) == (3, 3, 2)
    dt = time.perf_counter() - t0
    ok = ok_bounds and ok_3n and example and len(records) > 0
    _line(6, "h <= n, dl <= n(n+1)/2, dl <= 3n on every solvable pair", ok,
          f"{len(records)} pairs, gl23/sl23 -> {(gl['n'], gl['dl'], gl['h'])}, {dt:.1f}s", capsys)
    assert ok


def test_7_oracle_cross_checks(capsys):
    t0 = time.perf_counter()
    n_ind = n_mod = 0
    mismatches = []
    for e in builtin_corpus():
        if e.order > 500:
            continue
        G = e.build()
        T = character_table(G)
        normals = normal_subgroups(G)
        subs = {H.key: H for H in normals}
        for p in prime_factors(G.order):
            P = sylow_subgroup(G, p)
            subs.setdefault(P.key, P)
        for H in subs.values():
            for theta in table_of(H).rows:
                n_ind += 1
                if induce(theta, G, method="brute") != induce(theta, G, method="fusion"):
                    mismatches.append((e.key, "induce", H.order, theta.index))
        for N in normals:
            for M in normals:
                if M <= N:
                    n_mod += 1
                    if cd_rel_mod(T, N, M) != cd_rel_quotient(G, N, M):
                        mismatches.append((e.key, "cd_rel_mod", N.order, M.order))
    dt = time.perf_counter() - t0
    ok = not mismatches
    _line(7, "brute vs fusion induction and cd_rel_mod vs quotient tables", ok,
          f"{n_ind} inductions, {n_mod} (N, M) pairs, mismatches {mismatches[:3]}, {dt:.1f}s", capsys)
    assert ok


@pytest.mark.slow
def test_8_determinism(capsys):
    t0 = time.perf_counter()
    cmd = [sys.executable, "-m", "relchar", "verify", "--builtin", "all", "--structured"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    dt = time.perf_counter() - t0
    ok = a.returncode == b.returncode == 0 and a.stdout == b.stdout and len(a.stdout) > 0
    _line(8, "two verify runs give byte-identical reports", ok, f"{len(a.stdout)} bytes each, {dt:.1f}s", capsys)
    assert ok


if __name__ == "__main__":
    tests = [test_1_gl23_relative_degrees, test_2_exceptional_case, test_3_berger_contrast, test_4_exactness,
             test_5_theorem_oracle, test_6_hunt_bounds, test_7_oracle_cross_checks, test_8_determinism]
    for t in tests:
        try:
            t(None)
        except AssertionError:
            pass
    sys.exit(0 if all(RESULTS.values()) else 1)
