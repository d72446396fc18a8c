"""Addition law on pointed rational functions and continued-fraction decompositions.

A reduced pointed map A/B of degree n carries the 2x2 matrix
``[[A, -V], [B, U]]`` of determinant 1, where (U, V) is its Bezout normal form.
The sum of two maps is read off the product of their matrices; iterated
division recovers the unique decomposition into polynomial summands P_i / a_i.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .algebra import FieldSpec, Fq, PointedMap, Poly, enumerate_monic, parse_poly, poly_divrem, poly_extended_gcd


class NotReducedError(ValueError):
    pass


@dataclass(frozen=True)
class BezoutForm:
    U: Poly
    V: Poly


def bezout_normal_form(f: PointedMap) -> BezoutForm:
    """The unique (U, V) with AU + BV = 1, deg U <= n-2, deg V <= n-1."""
    A, B = f.A, f.B
    if B.is_zero:
        if A.degree == 0:
            return BezoutForm(Poly(A.field, (1,)), Poly(A.field, ()))
        raise NotReducedError("A/0 is not reduced")
    g, _, v = poly_extended_gcd(A, B)
    if g.degree != 0:
        raise NotReducedError(f"gcd(A, B) = {g} is not 1")
    V = v % A if A.degree > 0 else Poly(A.field, ())
    U, rem = poly_divrem(Poly(A.field, (1,)) - B * V, A)
    assert rem.is_zero
    return BezoutForm(U, V)


@dataclass(frozen=True)
class Matrix2:
    """[[a, b], [c, d]] over GF(q)[z]."""

    a: Poly
    b: Poly
    c: Poly
    d: Poly

    def __matmul__(self, o: Matrix2) -> Matrix2:
        return Matrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> Poly:
        return self.a * self.d - self.b * self.c

    @property
    def pointed(self) -> PointedMap:
        return PointedMap(self.a, self.c)


def bezout_matrix(f: PointedMap) -> Matrix2:
    bz = bezout_normal_form(f)
    return Matrix2(f.A, -bz.V, f.B, bz.U)


def identity_map(F: FieldSpec) -> PointedMap:
    """The degree-0 map 1/0, neutral for the addition law."""
    return PointedMap(Poly(F, (1,)), Poly(F, ()))


def oplus(x: PointedMap, y: PointedMap) -> PointedMap:
    """x (+) y: the (A3, B3) column of the product of the two Bezout matrices."""
    return (bezout_matrix(x) @ bezout_matrix(y)).pointed


class Part(NamedTuple):
    poly: Poly
    unit: Fq

    @property
    def pointed(self) -> PointedMap:
        return PointedMap(self.poly, Poly.constant(self.poly.field, self.unit))


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[Part, ...]

    @property
    def composition(self) -> tuple[int, ...]:
        return tuple(p.poly.degree for p in self.parts)

    @property
    def n(self) -> int:
        return sum(self.composition)

    @property
    def epsilon(self) -> int:
        return epsilon_sign(self.composition)

    def to_json(self) -> str:
        return json.dumps(
            {
                "parts": [{"poly": p.poly.literal(), "unit": str(p.unit)} for p in self.parts],
                "epsilon": self.epsilon,
            }
        )

    @classmethod
    def from_json(cls, F: FieldSpec, text: str) -> Decomposition:
        data = json.loads(text)
        return cls(tuple(Part(parse_poly(F, p["poly"]), F.parse_element(p["unit"])) for p in data["parts"]))


def cf_decompose(f: PointedMap) -> Decomposition:
    """Write A/B as P_1/a_1 (+) ... (+) P_r/a_r.

    Inverting one step of the law: with a = lc(B) and A' = B/a,
    A = P A' + R by division and the tail is A'/(-a R).
    """
    if not f.is_reduced or f.n < 1:
        raise NotReducedError("cf_decompose needs a reduced map of degree >= 1")
    F = f.field
    A, B = f.A, f.B
    parts = []
    while True:
        a = B.lc
        A_next = B.scale(F.inv(a))
        P, R = poly_divrem(A, A_next)
        parts.append(Part(P, Fq(F, a)))
        if A_next.degree == 0:
            break
        A, B = A_next, R.scale(F.neg(a))
    return Decomposition(tuple(parts))


def recompose(d: Decomposition, F: FieldSpec | None = None) -> PointedMap:
    """Left-to-right fold of the addition law over the parts."""
    if not d.parts:
        if F is None:
            raise ValueError("field required for the empty decomposition")
        return identity_map(F)
    m = bezout_matrix(d.parts[0].pointed)
    for part in d.parts[1:]:
        m = m @ bezout_matrix(part.pointed)
    return m.pointed


def epsilon_sign(composition: Sequence[int]) -> int:
    """(-1)**(sum_{i<j} n_i n_j)."""
    total = sum(composition)
    # sum_{i<j} n_i n_j = (total^2 - sum n_i^2) / 2
    e = (total * total - sum(k * k for k in composition)) // 2
    return -1 if e & 1 else 1


def epsilon_by_recursion(composition: Sequence[int]) -> int:
    """Fold R(P/a (+) f) = (-1)**(deg f * deg P) a**deg P R(f) from the right."""
    sign, tail = 1, 0
    for d in reversed(composition):
        if (d * tail) & 1:
            sign = -sign
        tail += d
    return sign


def resultant_from_decomposition(d: Decomposition) -> Fq:
    """epsilon(n) * prod a_i**n_i."""
    F = d.parts[0].unit.field
    v = 1
    for part in d.parts:
        v = F.mul(v, F.pow(part.unit.value, part.poly.degree))
    if d.epsilon == -1:
        v = F.neg(v)
    return Fq(F, v)


def compositions(n: int, r: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of n (optionally into exactly r parts), lexicographic."""
    if n == 0:
        if r in (None, 0):
            yield ()
        return
    if r == 0:
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first, None if r is None else r - 1):
            yield (first,) + rest


def enumerate_decompositions(n: int, F: FieldSpec) -> Iterator[Decomposition]:
    """Every decomposition shape of total degree n with all monic P_i and units a_i."""
    units = list(F.units())
    for comp in compositions(n):
        polys = [list(enumerate_monic(k, F)) for k in comp]
        for ps in itertools.product(*polys):
            for us in itertools.product(units, repeat=len(comp)):
                yield Decomposition(tuple(Part(p, u) for p, u in zip(ps, us)))
