#!/usr/bin/env python3
"""Derive and validate the fixed-coefficient tables in gamma_kernel.cpp.

Two tables live there:

  * the Lanczos approximation of Gamma (g = 7, 9 terms),
  * the Bernoulli coefficients B_2n/(2n) of the digamma asymptotic series.

The Lanczos form is

  Gamma(x+1) = sqrt(2 pi) t^(x+1/2) e^(-t) [ c0 + sum_k c_k/(x+k) ],
  t = x + g + 1/2,

with a fixed g and n coefficients.  For given (g, n) a working coefficient
vector follows from collocation: at the integer nodes x = 0..n-1 the left
side is exactly x!, which pins an n x n linear system for c.  Solving it
at 50-digit precision reproduces the canonical g=7 table to ~1e-10 (the
difference is absorbed in the ~1e-15 structural error of the
approximation itself).  The script prints both vectors, then sweeps
(0, 10] measuring the worst relative error of the double-precision
evaluation scheme and asserts the 1e-13 contract.

Usage: python3 scripts/gen_gamma_coeffs.py
"""

import math

import mpmath as mp

mp.mp.dps = 50

G = 7
N = 9

# Table pinned in src/gamma_kernel.cpp.
CANONICAL = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
]


def derive_by_collocation(g, n):
    rows = []
    rhs = []
    for x in range(n):
        t = mp.mpf(x) + g + mp.mpf(1) / 2
        scale = mp.sqrt(2 * mp.pi) * mp.power(t, x + mp.mpf(1) / 2) * mp.exp(-t)
        rows.append([mp.mpf(1)] + [mp.mpf(1) / (x + k) for k in range(1, n)])
        rhs.append(mp.factorial(x) / scale)
    return mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))


def lanczos_gamma(x, coeffs):
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * lanczos_gamma(1.0 - x, coeffs))
    x -= 1.0
    s = coeffs[0]
    for i in range(1, N):
        s += coeffs[i] / (x + i)
    t = x + G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (x + 0.5) * math.exp(-t) * s


def sweep(coeffs):
    worst = mp.mpf(0)
    warg = 0.0
    for i in range(1, 20001):
        x = 10.0 * i / 20000.0
        err = abs(lanczos_gamma(x, coeffs) - mp.gamma(x)) / mp.gamma(x)
        if err > worst:
            worst, warg = err, x
    return worst, warg


def main():
    print("digamma asymptotic coefficients B_2n/(2n), n = 1..8:")
    for n in range(1, 9):
        print(f"    {mp.nstr(mp.bernoulli(2 * n) / (2 * n), 20)}")

    derived = [float(c) for c in derive_by_collocation(G, N)]
    print("\ncollocation-derived coefficients (g=7, n=9):")
    for c in derived:
        print(f"    {c!r}")
    print("\ncanonical table pinned in the source:")
    for c, d in zip(CANONICAL, derived):
        print(f"    {c!r}   (deviation {abs(c - d):.3e})")

    for name, coeffs in (("derived", derived), ("canonical", CANONICAL)):
        worst, warg = sweep(coeffs)
        print(f"\n{name}: worst relative error on (0,10] = "
              f"{mp.nstr(worst, 3)} at x = {warg}")
        assert worst < 1e-13, f"{name} set out of contract"
    print("both coefficient sets meet the 1e-13 contract")


if __name__ == "__main__":
    main()
