"""Resultants, the mu_n action on Res_n, and the Y_{n,a} splitting.

Convention: ``resultant(f, g) = lc(g)**deg(f) * prod(f(beta) for beta root of g)``.
For monic (phi, psi) of equal degree this is the determinant of the ascending
Sylvester matrix with the phi rows on top (for n = 1 it is a0 - b0).  For a
pointed map A/B the value R(A, B) = prod B(alpha) over roots of A is
``resultant(B, A)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    FieldError,
    FieldSpec,
    Fq,
    MonicPair,
    PointedMap,
    Poly,
    prime_factors,
)

DEGREE_BOUND = 512


@dataclass(frozen=True)
class SylvesterMatrix:
    """Square matrix of field encodings.

    For f of degree m and g of degree n the first n rows hold the ascending
    coefficients of f, each shifted one column right, followed by m rows of g.
    """

    field: FieldSpec
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, f: Poly, g: Poly) -> SylvesterMatrix:
        m, n = f.degree, g.degree
        size = m + n
        rows = []
        for i in range(n):
            row = [0] * size
            row[i : i + m + 1] = f.coeffs
            rows.append(tuple(row))
        for i in range(m):
            row = [0] * size
            row[i : i + n + 1] = g.coeffs
            rows.append(tuple(row))
        return cls(f.field, tuple(rows))

    def determinant(self) -> int:
        """Gaussian elimination over GF(q)."""
        F = self.field
        a = [list(r) for r in self.entries]
        size = len(a)
        det = 1
        add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
        for col in range(size):
            piv = next((r for r in range(col, size) if a[r][col]), None)
            if piv is None:
                return 0
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = neg(det)
            pv = a[col][col]
            det = mul(det, pv)
            pinv = inv(pv)
            prow = a[col]
            for r in range(col + 1, size):
                row = a[r]
                if row[col]:
                    c = neg(mul(row[col], pinv))
                    for k in range(col, size):
                        if prow[k]:
                            row[k] = add(row[k], mul(c, prow[k]))
        return det


def _check_inputs(f: Poly, g: Poly) -> None:
    f._same(g)
    if f.is_zero and g.is_zero:
        raise ValueError("resultant of two zero polynomials is undefined")
    for h in (f, g):
        if not h.is_zero and h.degree > DEGREE_BOUND:
            raise ValueError(f"degree {h.degree} exceeds bound {DEGREE_BOUND}")


def _zero_case(f: Poly, g: Poly) -> int:
    # A zero argument shares every root of the other unless that one is a unit.
    other = g if f.is_zero else f
    return 1 if other.degree == 0 else 0


def _resultant_sylvester(f: Poly, g: Poly) -> int:
    if f.is_zero or g.is_zero:
        return _zero_case(f, g)
    if f.degree == 0 and g.degree == 0:
        return 1
    return SylvesterMatrix.build(f, g).determinant()


def _res_lc_product(a: list[int], b: list[int], F: FieldSpec) -> int:
    """lc(a)**deg(b) * prod(b(alpha) for alpha root of a), a nonzero.

    Remainder sequence: b = Q a + r gives prod b(alpha) = prod r(alpha), and
    swapping the roles of a and r costs (-1)**(deg a * deg r).
    """
    add, mul, neg, inv, pw = F.add, F.mul, F.neg, F.inv, F.pow
    acc = 1
    while True:
        da = len(a) - 1
        if da == 0:
            return mul(acc, pw(a[0], max(len(b) - 1, 0)))
        if not b:
            return 0
        db = len(b) - 1
        if db == 0:
            return mul(acc, pw(b[0], da))
        # r = b mod a
        r = list(b)
        ia = inv(a[-1])
        for i in range(db - da, -1, -1):
            c = r[i + da]
            if c:
                c = neg(mul(c, ia))
                for j in range(da):
                    if a[j]:
                        r[i + j] = add(r[i + j], mul(c, a[j]))
                r[i + da] = 0
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return 0
        dr = len(r) - 1
        acc = mul(acc, pw(a[-1], db - dr))
        if (da * dr) & 1:
            acc = neg(acc)
        a, b = r, a


def _resultant_euclid(f: Poly, g: Poly) -> int:
    if f.is_zero or g.is_zero:
        return _zero_case(f, g)
    return _res_lc_product(list(g.coeffs), list(f.coeffs), f.field)


def resultant(f: Poly, g: Poly, method: str = "euclid") -> Fq:
    """Resultant of f and g: ``lc(g)**deg f * prod f(beta)`` over roots beta of g.

    ``method`` is ``"euclid"`` (remainder sequence) or ``"sylvester"``
    (determinant of :class:`SylvesterMatrix`).  Zero exactly when f and g share
    a root over the algebraic closure.
    """
    _check_inputs(f, g)
    if method == "euclid":
        v = _resultant_euclid(f, g)
    elif method == "sylvester":
        v = _resultant_sylvester(f, g)
    else:
        raise ValueError(f"unknown resultant method {method!r}")
    return Fq(f.field, v)


def pair_resultant(x: MonicPair, method: str = "euclid") -> Fq:
    return resultant(x.phi, x.psi, method)


def pointed_resultant(f: PointedMap, method: str = "euclid") -> Fq:
    """R(A, B) = prod B(alpha) over roots alpha of A."""
    return resultant(f.B, f.A, method)


def mu_n_action(lam: Fq, x: MonicPair) -> MonicPair:
    """lam . (phi, psi) = (psi + lam (phi - psi), psi), for lam**n == 1."""
    if lam.field != x.field:
        raise FieldError("root of unity and pair live in different fields")
    if (lam ** x.n).value != 1:
        raise ValueError(f"{lam} is not an {x.n}-th root of unity")
    return MonicPair(x.psi + (x.phi - x.psi).scale(lam.value), x.psi)


# --- monic roots and the Y_{n,a} strata ---------------------------------------

def _prime_root(psi: Poly, ell: int) -> Poly | None:
    F = psi.field
    n = psi.degree
    if n % ell:
        return None
    a = n // ell
    if ell == F.p:
        # chi**p has coefficient c**p at z**(i p) and nothing elsewhere
        cs = psi.coeffs
        if any(cs[i] for i in range(n + 1) if i % ell):
            return None
        frob_inv = F.q // F.p  # x -> x**(q/p) inverts x -> x**p
        return Poly(F, [F.pow(cs[i * ell], frob_inv) for i in range(a + 1)])
    # chi**ell: coefficient at z**(n-j) is ell*c_(a-j) + (terms in higher c's)
    ell_inv = F.inv(ell % F.p)
    chi = [0] * a + [1]
    for j in range(1, a + 1):
        top = (Poly(F, chi) ** ell).coefficient(n - j).value
        chi[a - j] = F.mul(F.sub(psi.coeffs[n - j], top), ell_inv)
    root = Poly(F, chi)
    return root if root**ell == psi else None


def monic_root(psi: Poly, k: int) -> Poly | None:
    """The monic chi with chi**k == psi, or None when psi is not a k-th power."""
    if not psi.is_monic or k < 1:
        return None
    root = psi
    for ell in prime_factors(k):
        e = k
        while e % ell == 0:
            root = _prime_root(root, ell)
            if root is None:
                return None
            e //= ell
    return root


@dataclass(frozen=True)
class YSplit:
    chi: Poly
    phi1: Poly
    phi0: Poly

    def key(self) -> tuple:
        """(chi, phi_1, non-leading coefficients of phi_0): the injective image."""
        a = self.chi.degree
        low = self.phi0.coeffs[:-1]
        n_minus_a = self.phi0.degree
        low = low + (0,) * (n_minus_a - len(low))
        return (self.chi.coeffs, self.phi1.coeffs, low, a)


def y_split(x: MonicPair, a: int, check_resultant: bool = True) -> YSplit:
    """Split a point of Y_{n,a}: psi = chi**(n/a), phi = phi0*chi + phi1.

    phi0 is monic of degree n - a and deg phi1 < a.  For a == n this is
    (psi, phi - psi, 1), i.e. the pair itself.
    """
    n = x.n
    if a < 1 or n % a:
        raise ValueError(f"{a} does not divide {n}")
    if check_resultant and pair_resultant(x).value != 1:
        raise ValueError("pair is not on Res_n (resultant != 1)")
    chi = monic_root(x.psi, n // a)
    if chi is None:
        raise ValueError(f"psi is not an {n // a}-th power of a degree-{a} monic polynomial")
    phi0, phi1 = divmod(x.phi, chi)
    return YSplit(chi, phi1, phi0)


def in_stratum(x: MonicPair, a: int) -> bool:
    return x.n % a == 0 and monic_root(x.psi, x.n // a) is not None
