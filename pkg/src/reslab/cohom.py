"""Betti ranks, weights and Frobenius traces of Res_n as finite combinatorial data.

The degree-2i piece is indexed by a = n - i, a divisor of n, and is spanned by
the residues O_a = {1 <= m <= n : gcd(m, n) = a}.  Frobenius permutes O_a by
m -> q m mod n and scales by q^i, so eigenvalue data is kept as a weight plus
a cycle type instead of complex numbers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .count import divisors, totient


def orbit_set(n: int, a: int) -> tuple[int, ...]:
    """O_a = {1 <= m <= n : gcd(m, n) = a}."""
    return tuple(m for m in range(a, n + 1, a) if math.gcd(m, n) == a)


@dataclass(frozen=True)
class CohomRow:
    n: int
    degree: int
    a: int
    rank: int
    weight: int
    tate_modulus: int

    @property
    def orbit(self) -> tuple[int, ...]:
        return orbit_set(self.n, self.a)


@dataclass(frozen=True)
class CohomTable:
    n: int
    rows: tuple[CohomRow, ...]

    @property
    def total_rank(self) -> int:
        return sum(r.rank for r in self.rows)

    def rank(self, degree: int) -> int:
        for r in self.rows:
            if r.degree == degree:
                return r.rank
        return 0


def betti_table(n: int) -> CohomTable:
    """Rows for every divisor a of n: degree 2(n-a), rank phi(n/a), weight n-a."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    for a in sorted(divisors(n), reverse=True):
        i = n - a
        rows.append(CohomRow(n, 2 * i, a, totient(n // a), i, n // a))
    return CohomTable(n, tuple(rows))


@dataclass(frozen=True)
class FrobPermutation:
    n: int
    a: int
    q: int
    elements: tuple[int, ...]
    mapping: dict

    @property
    def fixed_count(self) -> int:
        return sum(1 for m in self.elements if self.mapping[m] == m)

    @property
    def cycle_type(self) -> tuple[int, ...]:
        seen, lengths = set(), []
        for m in self.elements:
            if m in seen:
                continue
            k, cur = 0, m
            while cur not in seen:
                seen.add(cur)
                cur = self.mapping[cur]
                k += 1
            lengths.append(k)
        return tuple(sorted(lengths, reverse=True))

    @property
    def is_identity(self) -> bool:
        return all(self.mapping[m] == m for m in self.elements)


def _residue(m: int, n: int) -> int:
    # O_n holds n itself, standing for the class of 0
    r = m % n
    return r if r else n


def frobenius_action(n: int, a: int, q: int) -> FrobPermutation:
    """m -> q m mod n on O_a."""
    if n % a:
        raise ValueError(f"{a} does not divide {n}")
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd(q, n) = {math.gcd(q, n)}: multiplication by q is not a bijection mod n")
    elems = orbit_set(n, a)
    return FrobPermutation(n, a, q, elems, {m: _residue(q * m, n) for m in elems})


def is_tate(n: int, degree: int, q: int) -> bool:
    """H^degree is of Tate type iff it is zero or q = 1 mod n/(n-i), degree = 2i."""
    if degree % 2:
        return True
    i = degree // 2
    if i == 0:
        return True
    if i >= n or n % (n - i):
        return True
    return (q - 1) % (n // (n - i)) == 0


@dataclass(frozen=True)
class TraceRow:
    row: CohomRow
    fixed: int
    trace: int
    lefschetz_term: int
    tate: bool
    cycle_type: tuple[int, ...]


def trace_rows(n: int, q: int) -> list[TraceRow]:
    """Per-row Frobenius trace q^i * fixed and its point-count contribution."""
    out = []
    for row in betti_table(n).rows:
        perm = frobenius_action(n, row.a, q)
        fixed = perm.fixed_count
        out.append(
            TraceRow(
                row,
                fixed,
                q**row.weight * fixed,
                # Poincare dual weighting on a smooth variety of dimension 2n-1
                q ** (2 * n - 1 - row.weight) * fixed,
                perm.is_identity,
                perm.cycle_type,
            )
        )
    return out


def lefschetz_count(n: int, q: int) -> int:
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd(q, n) = {math.gcd(q, n)}: trace formula needs coprime q and n")
    return sum(t.lefschetz_term for t in trace_rows(n, q))


@dataclass(frozen=True)
class IsotypicEntry:
    degree: int
    frobenius_stable: bool


def isotypic_table(n: int, q: int | None = None) -> dict[int, IsotypicEntry]:
    """m in 0..n-1 -> degree 2(n - gcd(m, n)) (degree 0 for m = 0).

    ``frobenius_stable`` records whether Frobenius maps the m-component to
    itself (q m = m mod n); all entries are stable when q = 1 mod n.
    """
    out = {}
    for m in range(n):
        degree = 0 if m == 0 else 2 * (n - math.gcd(m, n))
        stable = True if q is None else (q * m - m) % n == 0
        out[m] = IsotypicEntry(degree, stable)
    return out


# --- rendering ---------------------------------------------------------------------

def table_dict(n: int, q: int | None = None) -> dict:
    rows = []
    if q is None:
        for r in betti_table(n).rows:
            rows.append({"degree": r.degree, "a": r.a, "rank": r.rank, "weight": r.weight})
    else:
        for t in trace_rows(n, q):
            rows.append(
                {
                    "degree": t.row.degree,
                    "a": t.row.a,
                    "rank": t.row.rank,
                    "weight": t.row.weight,
                    "fixed": t.fixed,
                    "trace": str(t.trace),
                    "trace_contribution": str(t.lefschetz_term),
                    "tate": t.tate,
                }
            )
    out = {"n": n, "q": q, "rows": rows}
    if q is not None:
        out["lefschetz"] = str(lefschetz_count(n, q))
    return out


def table_json(n: int, q: int | None = None) -> str:
    return json.dumps(table_dict(n, q))


def table_text(n: int, q: int | None = None) -> str:
    data = table_dict(n, q)
    cols = ["degree", "a", "rank", "weight"]
    if q is not None:
        cols += ["fixed", "trace_contribution", "tate"]
    cells = [cols] + [[str(r[c]) for c in cols] for r in data["rows"]]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
    lines = [f"H*(Res_{n})" + (f" over F_{q}" if q is not None else "")]
    for row in cells:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    if q is not None:
        lines.append(f"lefschetz = {data['lefschetz']}")
    return "\n".join(lines)
