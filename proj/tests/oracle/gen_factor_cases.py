#!/usr/bin/env python3
"""Freeze factorizations over Q computed by sympy.

Each output line: polynomial | factor^mult ; factor^mult ...
Factors are primitive with positive leading term; the constant unit is dropped.
"""
import random
import sys

import sympy as sp

x, y = sp.symbols("x y")


def rand_poly(rng, deg):
    while True:
        p = sum(rng.randint(-9, 9) * x**i * y**j for i in range(deg + 1) for j in range(deg + 1 - i))
        if sp.Poly(p, x, y).total_degree() >= 1:
            return sp.expand(p)


def rand_irreducible(rng, deg):
    while True:
        p = rand_poly(rng, rng.randint(1, deg))
        _, fl = sp.factor_list(p)
        if len(fl) == 1 and fl[0][1] == 1:
            return fl[0][0]


def fmt(e):
    return str(sp.expand(e)).replace("**", "^").replace(" ", "")


def line(p):
    _, fl = sp.factor_list(p)
    parts = [f"({fmt(f)})^{m}" for f, m in fl]
    return f"{fmt(p)} | {' ; '.join(parts)}"


def main():
    rng = random.Random(int(sys.argv[1]) if len(sys.argv) > 1 else 2026)
    print("# products of up to three random irreducibles, some squared, of total degree <= 3")
    for _ in range(100):
        k = rng.randint(1, 3)
        p = sp.Integer(rng.choice([1, -2, 3]))
        for _ in range(k):
            f = rand_irreducible(rng, 3)
            p *= f**2 if rng.random() < 0.25 else f
        print(line(sp.expand(p)))
    print("# random polynomials of total degree <= 4")
    for _ in range(100):
        print(line(rand_poly(rng, rng.randint(1, 4))))


if __name__ == "__main__":
    main()
