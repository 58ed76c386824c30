#!/usr/bin/env python3
"""Exact values of the relaxed MDP M_n under a bit policy.

Built directly from the node/edge tables and solved with Fraction
Gauss-Jordan elimination; shares no code with the C++ library.
usage: mdp_values_oracle.py [n] [policy: paper|terminal]
"""
import json
import sys
from fractions import Fraction


def layout(n):
    A = lambda i: "t" if i == n + 1 else f"a_{i}"
    B = lambda i: "g_1" if i == 1 else f"b_{i}"
    C = lambda i: "g_1" if i == 1 else f"c_{i}"
    out = []
    out += [(f"a_{i}", A(i + 1), f"g_{i}") for i in range(2, n + 1)]
    out += [(f"b_{i}", B(i - 1), f"g_{i}") for i in range(2, n)]
    out += [(f"c_{i}", C(i - 1), f"g_{i}") for i in range(2, n + 1)]
    out += [(f"d_{i}", B(i - 1), f"F_{i}") for i in range(2, n + 1)]
    out += [(f"e_{i}", "s", f"F_{i}") for i in range(1, n + 1)]
    return out


def policy_bits(n, which):
    bits = {}
    for lab, _, _ in layout(n):
        k = lab[0]
        if which == "paper":
            bits[lab] = 1 if k == "d" or lab == "e_1" else 0
        else:
            bits[lab] = 0 if k in "bc" else 1
    return bits


def values(n, bits, N=None, eps=None):
    N = N if N is not None else 2 * n + 1
    eps = eps if eps is not None else Fraction(1, N ** (2 * n + 10))
    reward = lambda p: Fraction((-N) ** p)
    rnd = {}  # randomizer -> [(prob, reward, target)]
    for i in range(1, n + 1):
        if i == 1:
            rnd["F_1"] = [(eps, 0, "h_1"), (1 - eps, 0, "e_1")]
        else:
            q = (1 - eps) / 2
            rnd[f"F_{i}"] = [(eps, 0, f"h_{i}"), (q, 0, f"d_{i}"), (q, 0, f"e_{i}")]
        rnd[f"g_{i}"] = [(Fraction(1), reward(2 * i - 1), f"F_{i}")]
        rnd[f"h_{i}"] = [(Fraction(1), reward(2 * i), "t" if i == n else f"a_{i + 1}")]
    rnd["s"] = [(Fraction(1), Fraction(1), f"c_{n}")]
    ctrl = {lab: (s1 if bits[lab] else s0) for lab, s0, s1 in layout(n)}
    names = list(ctrl) + list(rnd)
    idx = {v: k for k, v in enumerate(names)}
    m = len(names)
    M = [[Fraction(0)] * (m + 1) for _ in range(m)]
    for v in names:
        r = idx[v]
        M[r][r] += 1
        if v in ctrl:
            if ctrl[v] != "t":
                M[r][idx[ctrl[v]]] -= 1
        else:
            for p, w, to in rnd[v]:
                M[r][m] += p * w
                if to != "t":
                    M[r][idx[to]] -= p
    for col in range(m):
        piv = next(r for r in range(col, m) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(m):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    vals = {v: M[idx[v]][m] for v in names}
    vals["t"] = Fraction(0)
    return vals


def fmt(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    which = sys.argv[2] if len(sys.argv) > 2 else "paper"
    vals = values(n, policy_bits(n, which))
    ctrl_sum = sum(vals[lab] for lab, _, _ in layout(n))
    out = {"n": n, "policy": which, "values": {k: fmt(v) for k, v in sorted(vals.items())},
           "controller_sum": fmt(ctrl_sum)}
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
