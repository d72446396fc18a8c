"""Slow, independent reference computations used only by the tests."""

import itertools
import math

from reslab.algebra import FieldSpec, Fq, Poly


def leibniz_det(F: FieldSpec, rows):
    """Determinant by the permutation expansion; fine up to 7x7."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i, j in enumerate(perm):
            term = F.mul(term, rows[i][j])
            if not term:
                break
        if term:
            total = F.add(total, F.neg(term) if inversions % 2 else term)
    return total


def poly_from_roots(F: FieldSpec, roots, lead=1) -> Poly:
    g = Poly(F, (lead,))
    for r in roots:
        g = g * Poly(F, (F.neg(r), 1))
    return g


def split_resultant(f: Poly, roots, lead=1) -> int:
    """lc(g)^deg f * prod f(beta) for g = lead * prod (z - beta)."""
    F = f.field
    v = F.pow(lead, f.degree)
    for r in roots:
        v = F.mul(v, f(r).value)
    return v


def unit_tuples(parts, x: Fq) -> int:
    F = x.field
    count = 0
    for us in itertools.product(range(1, F.q), repeat=len(parts)):
        v = 1
        for u, k in zip(us, parts):
            v = F.mul(v, F.pow(u, k))
        count += v == x.value
    return count


def all_compositions(n):
    """Every composition of n, via cut points."""
    out = []
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, cur = [], 1
        for c in cuts:
            if c:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        parts.append(cur)
        out.append(tuple(parts))
    return out


def fixed_points(n, a, q):
    return sum(1 for m in range(1, n + 1) if math.gcd(m, n) == a and (q * m - m) % n == 0)
