#!/usr/bin/env python3
"""Generate data/airy_reference.csv from an arbitrary-precision Maclaurin series.

The table (x, Ai(x), Ai'(x); 1001 rows over [-30, 8]) is the regression
reference for the C++ Airy implementation.  Values are computed at 60
decimal digits from the two-series representation

    Ai(x)  = c1*f(x) - c2*g(x)
    f(x)   = sum_k 3^k (1/3)_k x^(3k) / (3k)!
    g(x)   = sum_k 3^k (2/3)_k x^(3k+1) / (3k+1)!
    c1     = 3^(-2/3) / Gamma(2/3),   c2 = 3^(-1/3) / Gamma(1/3)

and cross-checked against mpmath.airyai as an independent route.  Also
prints a handful of frozen constants used by the unit tests.
"""

import csv
import math
import sys
from mpmath import mp, mpf, gamma, power, airyai, findroot

mp.dps = 60


def airy_series(x):
    """Ai(x), Ai'(x) by direct Maclaurin summation in mp arithmetic.

    The partial sums cancel down from ~exp((2/3)|x|^{3/2}), so the working
    precision is raised accordingly before summing.
    """
    cancel_digits = int((2.0 / 3.0) * abs(float(x)) ** 1.5 / math.log(10)) + 20
    mp.dps = 60 + cancel_digits
    c1 = power(3, mpf(-2) / 3) / gamma(mpf(2) / 3)
    c2 = power(3, mpf(-1) / 3) / gamma(mpf(1) / 3)
    x = mpf(x)
    x3 = x * x * x
    # f, g and their derivatives, term by term
    tf = mpf(1)            # x^(3k) term of f
    tg = x                 # x^(3k+1) term of g
    f, fp = tf, mpf(0)
    g, gp = tg, mpf(1)     # d/dx of the k=0 term of g is 1
    k = 0
    while True:
        # derivative terms for the *current* k (before advancing)
        k += 1
        tf = tf * x3 / ((3 * k - 1) * (3 * k))
        tg = tg * x3 / ((3 * k) * (3 * k + 1))
        f += tf
        g += tg
        if x != 0:
            fp += tf * (3 * k) / x
        gp += tg * (3 * k + 1) / x if x != 0 else mpf(0)
        if abs(tf) < mpf(10) ** (-mp.dps - 10) * (abs(f) + 1) and \
           abs(tg) < mpf(10) ** (-mp.dps - 10) * (abs(g) + 1) and k > 4:
            break
        if k > 4000:
            raise RuntimeError("series did not converge at x=%s" % x)
    ai = c1 * f - c2 * g
    aip = c1 * fp - c2 * gp
    mp.dps = 60
    return +ai, +aip


def check_cross(x):
    ai, _ = airy_series(x)
    ref = airyai(mpf(x))
    err = abs(ai - ref)
    scale = max(abs(ref), mpf(10) ** -30)
    assert err / scale < mpf(10) ** -40, (x, err)


def fmt(v):
    return mp.nstr(v, 17, strip_zeros=False)


def main(out_path):
    for probe in (-30, -17.25, -4.5, -1, 0, 1, 4.5, 8):
        check_cross(probe)

    lo, hi, n = mpf(-30), mpf(8), 1001
    with open(out_path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "ai", "ai_prime"])
        for i in range(n):
            x = lo + (hi - lo) * i / (n - 1)
            ai, aip = airy_series(x)
            w.writerow([fmt(x), fmt(ai), fmt(aip)])

    ai0, aip0 = airy_series(0)
    ai1, _ = airy_series(1)
    zero1 = findroot(lambda t: airy_series(t)[0], mpf("-2.338"))
    peak = findroot(lambda t: airy_series(t)[1], mpf("-1.019"))
    print("Ai(0)        =", fmt(ai0))
    print("Ai'(0)       =", fmt(aip0))
    print("Ai(1)        =", fmt(ai1))
    print("first zero   =", fmt(zero1))
    print("argmax of Ai =", fmt(peak))
    print("Ai(argmax)   =", fmt(airy_series(peak)[0]))
    print("Ai(-2)       =", fmt(airy_series(-2)[0]))
    print("Ai'(-2)      =", fmt(airy_series(-2)[1]))
    print("Ai(5)        =", fmt(airy_series(5)[0]))
    print("Ai'(5)       =", fmt(airy_series(5)[1]))
    print("Ai(-12.5)    =", fmt(airy_series(mpf("-12.5"))[0]))
    print("Ai'(-12.5)   =", fmt(airy_series(mpf("-12.5"))[1]))
    print("Ai(7.5)      =", fmt(airy_series(mpf("7.5"))[0]))
    print("Ai(10)       =", fmt(airyai(10)))
    print("Ai(-30)      =", fmt(airy_series(-30)[0]))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/airy_reference.csv")
