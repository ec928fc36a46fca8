"""Independent brute-force ground truth.

Deliberately naive and deliberately self-contained: nothing in this module
imports from the rest of the package, membership is exhaustive search over
coefficient tuples (no DP tables, no caching), and classification is redone
from scratch. Slow is the point; this is the oracle the fast path is checked
against.
"""

from __future__ import annotations

import math
from itertools import combinations


def oracle_membership(gens, value: int) -> bool:
    """Exhaustive search for non-negative coefficients summing to value."""
    if value < 0:
        raise ValueError("membership query must be non-negative")
    gens = sorted(set(gens), reverse=True)

    def search(idx, remaining):
        if remaining == 0:
            return True
        if idx == len(gens):
            return False
        g = gens[idx]
        if idx == len(gens) - 1:
            return remaining % g == 0
        c = remaining // g
        while c >= 0:
            if search(idx + 1, remaining - c * g):
                return True
            c -= 1
        return False

    return search(0, value)


def oracle_frobenius(gens) -> int:
    """Largest non-member, by scanning until multiplicity-many members in a row."""
    if math.gcd(*gens) != 1:
        raise ValueError("frobenius needs coprime generators")
    m = min(gens)
    if m == 1:
        return -1
    last_gap = -1
    run = 0
    z = 0
    while run < m:
        if oracle_membership(gens, z):
            run += 1
        else:
            last_gap = z
            run = 0
        z += 1
    return last_gap


def oracle_symmetric(gens) -> bool:
    """Pairing test: z is a gap exactly when F - z is a member, over 0..F."""
    frob = oracle_frobenius(gens)
    for z in range(frob + 1):
        if oracle_membership(gens, z) == oracle_membership(gens, frob - z):
            return False
    return True


def oracle_r(gens, i: int) -> int:
    """Least r >= 1 with r * gens[i] in the semigroup of the rest (i 0-based)."""
    others = tuple(gens[:i]) + tuple(gens[i + 1:])
    k = 1
    while not oracle_membership(others, k * gens[i]):
        k += 1
    return k


def _gcd_of(part) -> int:
    g = 0
    for v in part:
        g = math.gcd(g, v)
    return g


def oracle_is_complete_intersection(gens) -> bool:
    """Gluing recursion done over index subsets, membership by oracle search."""
    gens = tuple(gens)
    if len(gens) == 1:
        return True
    idx = range(len(gens))
    for size in range(1, len(gens)):
        for part in combinations(idx, size):
            if 0 not in part:
                continue  # unordered split: keep the first generator on side A
            side_a = [gens[i] for i in part]
            side_b = [gens[i] for i in idx if i not in part]
            da, db = _gcd_of(side_a), _gcd_of(side_b)
            if math.gcd(da, db) != 1:
                continue
            norm_a = tuple(v // da for v in side_a)
            norm_b = tuple(v // db for v in side_b)
            if not oracle_membership(norm_b, da):
                continue
            if not oracle_membership(norm_a, db):
                continue
            if oracle_is_complete_intersection(norm_a) and oracle_is_complete_intersection(norm_b):
                return True
    return False


def oracle_classify(gens) -> str:
    """Three-way classification from the symmetry and gluing tests alone."""
    if oracle_is_complete_intersection(gens):
        return "CompleteIntersection"
    if oracle_symmetric(gens):
        return "GorensteinNonCI"
    return "NonGorenstein"
