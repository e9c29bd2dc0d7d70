"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed even under
output capture) or directly with ``python3 tests/test_acceptance.py``.
"""

import json
import subprocess
import sys
import time
from math import comb

import pytest

from subchains.audit import run_audit, sn_bound_tables
from subchains.chains import (
    FactoredInteger,
    chain_counts,
    g_cyclic_multinomial,
    h_by_inclusion_exclusion,
    h_dihedral_prime_power,
    lower_bound_h_sn,
    naive_chain_oracle,
)
from subchains.classify import label
from subchains.group import named_group, parse_group_spec
from subchains.lattice import brute_force_subgroups, enumerate_subgroups

ZOO = ["trivial", "C2", "C3", "C4", "V4", "S3", "C6", "D8", "C8", "D10", "A4", "D12",
       "C12", "D14", "D16", "D18", "F20", "D20", "C20", "S4", "D22", "C24", "D24"]


def lattice(spec):
    if spec == "F20":
        return enumerate_subgroups(parse_group_spec(None, degree=5, gens="(1,2,3,4,5);(2,3,5,4)"))
    return enumerate_subgroups(parse_group_spec(spec))


def report(number, title, ok, detail="", capsys=None):
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (f": {detail}" if detail else "")
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def check_anchors():
    t0 = time.perf_counter()
    fails = []

    def want(name, got, expected):
        if got != expected:
            fails.append(f"{name}={got} (want {expected})")

    s3, s4 = chain_counts(lattice("S3")), chain_counts(lattice("S4"))
    want("g(S3)", s3.g, 4)
    want("h(S3)", s3.h, 10)
    want("g(S4)", s4.g, 44)
    want("h(S4)", s4.h, 232)
    want("g(A4)", chain_counts(lattice("A4")).g, 7)
    # D_2n has order 2n
    for spec, h in [("D4", 8), ("D6", 10), ("D8", 32), ("D20", 100), ("C3", 2)]:
        want(f"h({spec})", chain_counts(lattice(spec)).h, h)
    s5 = lattice("S5")
    census = s5.order_histogram(s5.lower_covers[s5.top])
    want("S5 maximal census", census, {12: 10, 20: 6, 24: 5, 60: 1})
    elapsed = time.perf_counter() - t0
    if elapsed >= 30:
        fails.append(f"runtime {elapsed:.1f}s >= 30s")
    return not fails, "; ".join(fails) or f"all anchors exact in {elapsed:.2f}s"


def check_structure():
    fails = []
    for spec, n in [("S3", 6), ("S4", 30), ("S5", 156)]:
        table = named_group("symmetric", int(spec[1:]))
        fwd = enumerate_subgroups(table, seed_order="forward")
        rev = enumerate_subgroups(table, seed_order="reverse")
        if set(fwd.masks) != set(rev.masks) or len(fwd) != n:
            fails.append(f"{spec}: {len(fwd)}/{len(rev)} (want {n})")
        if table.order <= 24 and brute_force_subgroups(table) != set(fwd.masks):
            fails.append(f"{spec}: exhaustive oracle disagrees")
    return not fails, "; ".join(fails) or "S3=6, S4=30, S5=156; seeds agree; subset oracle agrees"


def check_methods():
    fails = []
    for spec in ZOO:
        lat = lattice(spec)
        cc = chain_counts(lat)
        if naive_chain_oracle(lat) != (cc.g, cc.h):
            fails.append(f"naive != DP on {spec}")
    for spec in ["S3", "S4", "A4", "D12", "A5"]:
        lat = lattice(spec)
        if h_by_inclusion_exclusion(lat)[0] != chain_counts(lat).h:
            fails.append(f"IE != DP on {spec}")
    t0 = time.perf_counter()
    s5 = enumerate_subgroups(named_group("symmetric", 5))
    dp = chain_counts(s5).h
    ie, breakdown = h_by_inclusion_exclusion(s5, tail_shortcut=True)
    elapsed = time.perf_counter() - t0
    if ie != dp:
        fails.append(f"IE {ie} != DP {dp} on S5")
    if elapsed >= 60:
        fails.append(f"S5 pipeline {elapsed:.1f}s >= 60s")
    return not fails, "; ".join(fails) or (
        f"{len(ZOO)} zoo groups DP=naive; IE=DP on 6 groups; S5 pipeline {elapsed:.2f}s")


def check_formulas():
    fails = []
    for n in range(1, 201):
        dp = chain_counts(enumerate_subgroups(named_group("cyclic", n))).g
        if g_cyclic_multinomial(FactoredInteger.of(n)) != dp:
            fails.append(f"cyclic n={n}")
    for p, m in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)]:
        dp = chain_counts(enumerate_subgroups(named_group("dihedral", 2 * p**m))).h
        if h_dihedral_prime_power(p, m) != dp:
            fails.append(f"dihedral n={p**m}")
    for q in range(2, 65):
        f = FactoredInteger.of(q).factors
        if len(f) == 1:
            ((_, m),) = f
            if chain_counts(enumerate_subgroups(named_group("cyclic", q))).h != 2**m:
                fails.append(f"h(C{q})")
    _, b = h_by_inclusion_exclusion(enumerate_subgroups(named_group("symmetric", 5)))
    for r in range(8, b.k + 1):
        if b.c[r - 1] != (-1) ** (r - 1) * comb(b.k, r):
            fails.append(f"S5 c_{r}")
    return not fails, "; ".join(fails) or (
        "cyclic n<=200, dihedral n in {2,3,4,8,9}, h(C_p^m)=2^m for p^m<=64, S5 c_r binomial for r>=8")


REQUIRED = {
    "g_A5": 123, "g_S5": 551, "h_S5": 4154, "h_A5": 402, "h_D10": 68, "h_C4": 8,
    "g_D10": 8, "g_D12": 10, "g_D20": 18, "c_1": 2842, "c_22": -1,
}


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "subchains", *args],
                          capture_output=True, text=True, check=False)


def check_audit():
    proc = _cli("audit", "--format", "json")
    fails = []
    if proc.returncode != 0:
        return False, f"exit code {proc.returncode}"
    doc = json.loads(proc.stdout)
    entries = {e["claim_id"]: e for e in doc["entries"]}
    expected_ids = [e.claim_id for e in run_audit().entries]
    if list(entries) != expected_ids or len(entries) < 25:
        fails.append("catalog differs from the versioned list")
    for cid, published in REQUIRED.items():
        e = entries.get(cid)
        if e is None or e["paper_value"] != published:
            fails.append(f"{cid} missing or wrong published value")
    for cid in [f"c_{r}" for r in range(1, 23)] + ["bound_S5_floor"]:
        if cid not in entries:
            fails.append(f"{cid} missing")
    for e in entries.values():
        if e["status"] not in {"MATCH", "MISMATCH", "NOT_COMPARABLE"} or "computed_value" not in e:
            fails.append(f"{e['claim_id']} incomplete")
    mism = sum(e["status"] == "MISMATCH" for e in entries.values())
    return not fails, "; ".join(fails) or (
        f"catalog v{doc['catalog_version']}: {len(entries)} entries, {mism} MISMATCH, report still emitted")


def check_bound():
    s5 = chain_counts(enumerate_subgroups(named_group("symmetric", 5))).h
    alt, sym = sn_bound_tables(5)
    bound = lower_bound_h_sn(5, alt, sym)
    ok = s5 >= bound and s5 > 1942
    return ok, f"h(S5)={s5} >= bound {bound}; h(S5) > 1942"


def check_determinism():
    fails = []
    for args in [("lattice", "--group", "S4"), ("lattice", "--group", "S5"),
                 ("audit", "--format", "json")]:
        a, b = _cli(*args), _cli(*args)
        if a.returncode or a.stdout != b.stdout:
            fails.append(" ".join(args))
    return not fails, "; ".join(fails) or "lattice S4/S5 and audit JSON byte-identical across runs"


CRITERIA = [
    (1, "anchor reproduction", check_anchors),
    (2, "structural subgroup counts", check_structure),
    (3, "method agreement and S5 pipeline time", check_methods),
    (4, "formula cross-checks", check_formulas),
    (5, "audit completeness", check_audit),
    (6, "S5 lower bound", check_bound),
    (7, "determinism", check_determinism),
]


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, capsys):
    ok, detail = check()
    report(number, title, ok, detail, capsys)
    assert ok, detail


if __name__ == "__main__":
    results = [report(n, t, *check()) for n, t, check in CRITERIA]
    sys.exit(0 if all(results) else 1)
