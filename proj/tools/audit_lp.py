# Copyright 2026 The adlp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent feasibility audit of an exported LP file.

Parses the LP text with its own reader and hands the system to HiGHS through
scipy. Prints one verdict line; exit code 0 for Feasible, 2 for Infeasible,
3 for anything the solver could not decide.
"""

import sys

import numpy as np
from scipy.optimize import linprog

INF = float("inf")
RELS = ("=", "<=", ">=")


def tokenize(path):
    tokens = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            cut = line.find("\\")
            if cut >= 0:
                line = line[:cut]
            tokens.extend(line.split())
    return tokens


def to_number(tok):
    if tok in ("inf", "+inf"):
        return INF
    if tok == "-inf":
        return -INF
    try:
        return float(tok)
    except ValueError:
        return None


def parse(path):
    tokens = tokenize(path)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else ""

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of file")
        pos += 1
        return tokens[pos - 1]

    head = take().lower()
    if head not in ("minimize", "maximize"):
        raise ValueError("expected an objective section")
    while pos < len(tokens):
        low = peek().lower()
        if low == "subject":
            take()
            if peek().lower() == "to":
                take()
            break
        if low in ("st", "s.t."):
            take()
            break
        take()

    rows = []  # (name, {var: coeff}, rel, rhs)
    while pos < len(tokens) and peek().lower() not in ("bounds", "end"):
        name = take()
        if name.endswith(":"):
            name = name[:-1]
        elif peek() == ":":
            take()
        else:
            raise ValueError(f"row {name} lacks a colon")
        terms = {}
        sign = 1.0
        while True:
            tok = take()
            if tok in RELS:
                rhs = to_number(take())
                if rhs is None:
                    raise ValueError(f"bad right-hand side in {name}")
                rows.append((name, terms, tok, rhs))
                break
            if tok in ("+", "-"):
                sign = -sign if tok == "-" else sign
                continue
            coeff = to_number(tok)
            if coeff is not None:
                tok = take()
                if tok in RELS or tok in ("+", "-"):
                    raise ValueError(f"dangling coefficient in {name}")
            else:
                coeff = 1.0
            terms[tok] = terms.get(tok, 0.0) + sign * coeff
            sign = 1.0

    bounds = {}  # var -> [lo, hi]
    if peek().lower() == "bounds":
        take()
        while pos < len(tokens) and peek().lower() != "end":
            tok = take()
            num = to_number(tok)
            if num is not None:
                if take() != "<=":
                    raise ValueError("expected <= after a bound value")
                var = take()
                if take() != "<=":
                    raise ValueError("expected <= after a bounded variable")
                hi = to_number(take())
                bounds[var] = [num, hi]
                continue
            var = tok
            op = take().lower()
            if op == "free":
                bounds[var] = [-INF, INF]
            elif op == "=":
                v = to_number(take())
                bounds[var] = [v, v]
            elif op == ">=":
                bounds.setdefault(var, [0.0, INF])[0] = to_number(take())
            elif op == "<=":
                bounds.setdefault(var, [0.0, INF])[1] = to_number(take())
            else:
                raise ValueError(f"unrecognized bound form near {var}")
    if peek().lower() != "end":
        raise ValueError("missing End marker")
    return rows, bounds


def main():
    if len(sys.argv) != 2:
        print("usage: audit_lp.py <file.lp>", file=sys.stderr)
        return 3
    rows, bounds = parse(sys.argv[1])

    order = {}
    for _, terms, _, _ in rows:
        for var in terms:
            order.setdefault(var, len(order))
    for var in bounds:
        order.setdefault(var, len(order))
    nv = len(order)

    a_eq, b_eq, a_ub, b_ub = [], [], [], []
    for _, terms, rel, rhs in rows:
        row = np.zeros(nv)
        for var, coeff in terms.items():
            row[order[var]] = coeff
        if rel == "=":
            a_eq.append(row)
            b_eq.append(rhs)
        elif rel == "<=":
            a_ub.append(row)
            b_ub.append(rhs)
        else:
            a_ub.append(-row)
            b_ub.append(-rhs)

    box = [(0.0, None)] * nv  # LP-format default
    for var, (lo, hi) in bounds.items():
        box[order[var]] = (None if lo == -INF else lo, None if hi == INF else hi)

    res = linprog(
        c=np.zeros(nv),
        A_ub=np.array(a_ub) if a_ub else None,
        b_ub=np.array(b_ub) if b_ub else None,
        A_eq=np.array(a_eq) if a_eq else None,
        b_eq=np.array(b_eq) if b_eq else None,
        bounds=box,
        method="highs",
    )
    if res.status == 0:
        print(f"Feasible ({nv} variables, {len(rows)} rows)")
        return 0
    if res.status == 2:
        print(f"Infeasible ({nv} variables, {len(rows)} rows)")
        return 2
    print(f"Undecided: solver status {res.status}: {res.message}")
    return 3


if __name__ == "__main__":
    sys.exit(main())
