"""Independent reference computations used to check the library.

Nothing here imports the code paths it checks: complex numbers are plain
(re, im) Fraction pairs and the lattice scans are exhaustive.
"""

from fractions import Fraction
from itertools import product


def cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def cconj(a):
    return (a[0], -a[1])


def cabs2(a):
    return a[0] * a[0] + a[1] * a[1]


def cpow(a, e):
    out = (Fraction(1), Fraction(0))
    for _ in range(e):
        out = cmul(out, a)
    return out


def brute_degree_bound(values):
    """Largest d with |lambda_1|^d >= |lambda_m|, by counting up."""
    top, low = cabs2(values[0]), cabs2(values[-1])
    d = 1
    while top ** (d + 1) >= low:
        d += 1
    return d


def brute_resonances(values, nu, extended):
    """Scan every exponent vector with total degree in [2, bound]."""
    m = len(values)
    bound = brute_degree_bound(values)
    target = values[nu - 1]
    slots = 2 * m if extended else m
    found = set()
    for exps in product(range(bound + 1), repeat=slots):
        total = sum(exps)
        if total < 2 or total > bound:
            continue
        val = (Fraction(1), Fraction(0))
        for j in range(m):
            val = cmul(val, cpow(values[j], exps[j]))
            if extended:
                val = cmul(val, cpow(cconj(values[j]), exps[m + j]))
        if val == target:
            I = tuple(exps[:m])
            Ip = tuple(exps[m:]) if extended else None
            found.add((I, Ip) if extended else I)
    return found


def brute_power_resonances(exponents, nu, extended, max_degree):
    """Weighted-sum scan for real-base power spectra."""
    m = len(exponents)
    slots = 2 * m if extended else m
    goal = exponents[nu - 1]
    found = set()
    for exps in product(range(max_degree + 1), repeat=slots):
        if sum(exps) < 2:
            continue
        if sum(exponents[j % m] * e for j, e in enumerate(exps)) == goal:
            found.add((tuple(exps[:m]), tuple(exps[m:])) if extended else tuple(exps))
    return found
