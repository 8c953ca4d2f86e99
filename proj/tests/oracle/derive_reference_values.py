#!/usr/bin/env python3
"""One-off reference derivation for the frozen values used by the C++ tests.

Works straight from coordinates: explicit root lists, half-sums, and
inequality checks on |lambda_i|. Shares no code with the library.
"""
import json
import subprocess
import sys
from fractions import Fraction as F
from itertools import combinations, product


def roots(n):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for a, b in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                v = [0] * n
                v[i], v[j] = a, b
                out.append(tuple(v))
        for a in (2, -2):
            v = [0] * n
            v[i] = a
            out.append(tuple(v))
    return out


def std_positive(n):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for b in (1, -1):
                v = [0] * n
                v[i], v[j] = 1, b
                out.append(tuple(v))
        v = [0] * n
        v[i] = 2
        out.append(tuple(v))
    return out


def ip(a, b):
    return sum(F(x) * y for x, y in zip(a, b))


def half_sum(vs, n):
    return tuple(sum(F(v[k]) for v in vs) / 2 for k in range(n))


def compact(v):
    return sorted(v) == sorted([1, -1] + [0] * (len(v) - 2)) if len(v) > 1 else False


def chamber(eps, n):
    return [tuple(e * x for e, x in zip(eps, r)) for r in std_positive(n)]


def worked_instance(quiet=False):
    n, eps, a0, lam = 2, (1, -1), (1, 1), (3, -2)
    pos = chamber(eps, n)
    rho = half_sum(pos, n)
    rho_c = half_sum([r for r in pos if compact(r)], n)
    rho_n = half_sum([r for r in pos if not compact(r)], n)
    bp = tuple(l - c + m for l, c, m in zip(lam, rho_c, rho_n))
    bm = tuple(b - 2 * a for b, a in zip(bp, a0))
    j = tuple(b - a for b, a in zip(bp, a0))
    e = tuple(l - r for l, r in zip(lam, rho))
    pair_sum = sum(2 * ip(b, a0) / ip(a0, a0) for b in roots(n) if ip(b, a0) > 0)
    noncompact = [r for r in roots(n) if not compact(r)]
    d = len(noncompact) // 2
    s0 = 1 / pair_sum
    if not quiet:
        print("rho", rho, "rho_c", rho_c, "rho_n", rho_n)
        print("blattner_plus", bp, "blattner_minus", bm, "j", j, "e", e)
        print("s0", s0, "d", d, "gl_weight", 2 * abs(lam[1]) + 1)
    return {"blattner_plus": bp, "blattner_minus": bm, "j_lowest_ktype": j,
            "e_highest_weight": e, "s0": s0, "d": d, "gl_weight": 2 * abs(lam[1]) + 1}


def naive_enumerate(n, bound):
    found = []
    for eps in product((1, -1), repeat=n):
        cands = [(('P2', i), eps[i]) for i in range(n - 1) if eps[i] != eps[i + 1]]
        cands.append((('P1', n - 1), None))
        for lam in product(range(-bound, bound + 1), repeat=n):
            mags = [e * l for e, l in zip(eps, lam)]
            if not all(m > 0 for m in mags):
                continue
            if not all(mags[k] > mags[k + 1] for k in range(n - 1)):
                continue
            for (kind, i), _ in cands:
                if kind == 'P2' and abs(lam[i]) - abs(lam[i + 1]) == 1:
                    found.append((eps, kind, i, lam))
                if kind == 'P1' and mags[n - 1] == 1:
                    found.append((eps, kind, i, lam))
    return found


def wedge_placement():
    n = 2
    nc = [r for r in roots(n) if not compact(r)]
    targets = {(3, -1): set(), (2, -2): set(), (1, -3): set()}
    for q in range(len(nc) + 1):
        for sub in combinations(nc, q):
            s = tuple(sum(v[k] for v in sub) for k in range(n))
            if s in targets:
                targets[s].add(q)
    print("wedge degrees", {k: sorted(v) for k, v in targets.items()})


def fmt(q):
    q = F(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def root_text(kind, i, eps, n):
    if kind == "P1":
        return ("" if eps[n - 1] > 0 else "-") + f"2e{n}"
    sign = "" if eps[i] > 0 else "-"
    return f"{sign}e{i + 1}{'+' if eps[i] > 0 else '-'}e{i + 2}"


def check_cli(cli):
    """Compare the CLI against the coordinate oracle; exit nonzero on mismatch."""
    failures = []
    ref = worked_instance(quiet=True)
    out = subprocess.run([cli, "package", "--rank", "2", "--chamber", "+-", "--alpha0", "e1+e2",
                          "--lambda", "3,-2"], capture_output=True, text=True, check=True).stdout
    doc = json.loads(out)
    for key in ("blattner_plus", "blattner_minus", "j_lowest_ktype", "e_highest_weight"):
        if doc["package"][key] != [fmt(x) for x in ref[key]]:
            failures.append(f"{key}: cli {doc['package'][key]} oracle {ref[key]}")
    if doc["package"]["s0"] != fmt(ref["s0"]) or doc["package"]["d"] != ref["d"]:
        failures.append("s0/d mismatch")
    if doc["levi"]["gl_weight"] != ref["gl_weight"]:
        failures.append("gl_weight mismatch")
    for n, b in ((1, 1), (2, 3), (3, 4)):
        tsv = subprocess.run([cli, "enumerate", "--rank", str(n), "--weight-bound", str(b), "--format", "tsv"],
                             capture_output=True, text=True, check=True).stdout
        rows = {tuple(line.split("\t")[:3]) for line in tsv.splitlines()[1:]}
        naive = {("".join("+" if e > 0 else "-" for e in eps), root_text(kind, i, eps, n),
                  ",".join(str(x) for x in lam)) for eps, kind, i, lam in naive_enumerate(n, b)}
        if rows != naive:
            failures.append(f"enumeration rank {n} bound {b}: {sorted(rows ^ naive)}")
    for f in failures:
        print("MISMATCH", f)
    print("oracle cross-check:", "ok" if not failures else f"{len(failures)} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    if len(sys.argv) > 1:
        sys.exit(check_cli(sys.argv[1]))
    worked_instance()
    for n, b in ((1, 1), (2, 3), (3, 4), (4, 5)):
        print("enumerate", n, b, len(naive_enumerate(n, b)))
    wedge_placement()
