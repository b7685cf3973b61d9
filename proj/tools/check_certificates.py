#!/usr/bin/env python3
"""Re-verify certificates printed by `biexact decide --json` with sympy.

usage: check_certificates.py BIEXACT CORPUS
For every corpus record whose decision is exact, recompose f from (g, h)
independently of the C++ code. Exit 1 on any failure.
"""
import json
import subprocess
import sys

import sympy as sp

x, y, q = sp.symbols("x y q")


def q_value(mode):
    if mode == "none" or mode == "symbolic":
        return None
    if mode.startswith("rational:"):
        return sp.Rational(mode.split(":", 1)[1])
    m = int(mode.split(":", 1)[1])
    return sp.cyclotomic_poly(m, q)


def recompose(pair, g, h):
    gx = g.subs(x, x + 1) - g if pair == "dx-dy" else g.subs(x, q * x) - g
    hy = sp.diff(h, y) if pair in ("dx-dy", "dqx-dy") else h.subs(y, y + 1) - h
    return gx + hy


def vanishes(expr, mode):
    num = sp.numer(sp.together(expr))
    qv = q_value(mode)
    if qv is None:
        return sp.expand(num) == 0
    if isinstance(qv, sp.Rational):
        return sp.expand(num.subs(q, qv)) == 0
    # reduce modulo the cyclotomic polynomial in q
    p = sp.Poly(sp.expand(num), q)
    return sp.rem(p, sp.Poly(qv, q)).is_zero


def flags(mode):
    if mode == "none":
        return []
    if mode == "symbolic":
        return ["--q-symbolic"]
    if mode.startswith("rational:"):
        return ["--q", mode.split(":", 1)[1]]
    return ["--root-of-unity", mode.split(":", 1)[1]]


def main():
    exe, corpus = sys.argv[1], sys.argv[2]
    checked = failed = 0
    for line in open(corpus, encoding="utf-8"):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [s.strip() for s in line.split("|")]
        pair, mode, expr, expected = fields[:4]
        if expected != "exact":
            continue
        out = subprocess.run([exe, "decide", "--pair", pair, "--expr", expr, "--json"] + flags(mode),
                             capture_output=True, text=True, check=True).stdout
        res = json.loads(out)
        f = sp.sympify(expr.replace("^", "**"))
        if not res["exact"]:
            print("not exact:", pair, mode, expr)
            failed += 1
            continue
        g = sp.sympify(res["g"].replace("^", "**"))
        h = sp.sympify(res["h"].replace("^", "**"))
        checked += 1
        if not vanishes(recompose(pair, g, h) - f, mode):
            print("FAIL", pair, mode, expr, res["g"], res["h"])
            failed += 1
    print(f"{checked} certificates checked, {failed} failures")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
