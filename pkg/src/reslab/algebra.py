"""Finite fields GF(p^d), polynomials over them, and the two rational-function models.

Field elements are encoded as integers ``sum(c_i * p**i)`` where ``c_i`` are the
coefficients of the residue class in GF(p)[x]/(modulus).  Encodings double as the
canonical enumeration order.  Polynomials store tuples of encodings in ascending
degree; :class:`Fq` wraps a single encoding together with its field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

FIELD_BOUND = 1 << 16
ENUMERATION_BOUND = 10**8

# Witness set that makes Miller-Rabin deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class FieldError(ValueError):
    pass


class BoundExceeded(ValueError):
    """Raised when an enumeration or construction would exceed its configured bound."""

    def __init__(self, what: str, required: int, bound: int):
        super().__init__(f"{what}: requires {required}, bound is {bound}")
        self.required = required
        self.bound = bound


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, d)`` with ``q == p**d``; raise if q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            d = 0
            while q % p == 0:
                q //= p
                d += 1
            if q != 1 or not is_prime(p):
                raise FieldError("not a prime power")
            return p, d
    return q, 1


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- dense polynomials over GF(p), used only to find the modulus ---------------

def _gfp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv % p
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % p
    return _gfp_trim(q), _gfp_trim(a[: len(b) - 1])


def _gfp_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _gfp_divmod(_gfp_trim(out), m, p)[1]


def _gfp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _gfp_trim(list(a)), _gfp_trim(list(b))
    while b:
        a, b = b, _gfp_divmod(a, b, p)[1]
    return a


def _gfp_x_power(e: int, m: list[int], p: int) -> list[int]:
    """x**e mod m over GF(p) by square-and-multiply."""
    result, base = [1], _gfp_divmod([0, 1], m, p)[1]
    while e:
        if e & 1:
            result = _gfp_mulmod(result, base, m, p)
        base = _gfp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _gfp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _gfp_trim([(x - y) % p for x, y in zip(a, b)])


def irreducible_rabin(f: Sequence[int], p: int) -> bool:
    """Rabin's test: f monic of degree d is irreducible over GF(p) iff
    x^(p^d) = x mod f and gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d."""
    f = list(f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if _gfp_sub(_gfp_x_power(p**d, f, p), [0, 1], p):
        return False
    for r in prime_factors(d):
        h = _gfp_sub(_gfp_x_power(p ** (d // r), f, p), [0, 1], p)
        if len(_gfp_gcd(f, h, p)) > 1:
            return False
    return True


def irreducible_trial_division(f: Sequence[int], p: int) -> bool:
    f = list(f)
    d = len(f) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for code in range(p**k):
            g = [(code // p**i) % p for i in range(k)] + [1]
            if not _gfp_divmod(f, g, p)[1]:
                return False
    return True


def _canonical_modulus(p: int, d: int) -> tuple[int, ...]:
    # Trial division is cheap while there are few candidate factors.
    test = irreducible_trial_division if p ** (d // 2) <= 256 else irreducible_rabin
    for code in range(p**d):
        f = [(code // p**i) % p for i in range(d)] + [1]
        if test(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# --- fields -------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """GF(q), q = p**d, defined by a canonical monic irreducible modulus.

    ``modulus`` lists the modulus coefficients in ascending degree, leading 1
    included; it is empty for prime fields.  Construct through :func:`make_field`.
    """

    p: int
    d: int
    modulus: tuple[int, ...]
    _exp: tuple[int, ...] = field(default=(), repr=False, compare=False)
    _log: tuple[int, ...] = field(default=(), repr=False, compare=False)
    _add: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.d

    def __str__(self) -> str:
        return f"GF({self.q})"

    # encodings <-> digit vectors
    def digits(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.d):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def from_digits(self, ds: Sequence[int]) -> int:
        if len(ds) > self.d or any(not 0 <= c < self.p for c in ds):
            raise FieldError(f"invalid digits {tuple(ds)} for {self}")
        v = 0
        for c in reversed(ds):
            v = v * self.p + c
        return v

    # int-level arithmetic on encodings
    def add(self, a: int, b: int) -> int:
        if self.d == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        return self._digit_add(a, b)

    def _digit_add(self, a: int, b: int) -> int:
        p, v, m = self.p, 0, 1
        for _ in range(self.d):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            v += ((ra + rb) % p) * m
            m *= p
        return v

    def neg(self, a: int) -> int:
        if self.d == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_digits([-c % self.p for c in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.d == 1:
            return a * b % self.p
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        if self.d == 1:
            return pow(a, -1, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        """a**e by square-and-multiply; e may be any (big) integer, negative e inverts."""
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.d == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def element(self, value: int) -> Fq:
        if not 0 <= value < self.q:
            raise FieldError(f"encoding {value} out of range for {self}")
        return Fq(self, value)

    def elements(self) -> Iterator[Fq]:
        return (Fq(self, v) for v in range(self.q))

    def units(self) -> Iterator[Fq]:
        return (Fq(self, v) for v in range(1, self.q))

    @property
    def zero(self) -> Fq:
        return Fq(self, 0)

    @property
    def one(self) -> Fq:
        return Fq(self, 1)

    def parse_element(self, text: str) -> Fq:
        """Parse ``"c0:c1:..."`` (base-p digits, least significant first)."""
        try:
            ds = [int(t) for t in text.strip().split(":")]
        except ValueError:
            raise FieldError(f"malformed element literal {text!r}") from None
        return Fq(self, self.from_digits(ds))

    def format_element(self, a: int) -> str:
        if self.d == 1:
            return str(a)
        return ":".join(str(c) for c in self.digits(a))

    def _poly_mulmod(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        p, m = self.p, list(self.modulus)
        prod = _gfp_mulmod(list(a), list(b), m, p)
        return tuple(prod) + (0,) * (self.d - len(prod))


@lru_cache(maxsize=None)
def make_field(p: int, d: int = 1, bound: int = FIELD_BOUND) -> FieldSpec:
    """Build GF(p**d) with the canonical modulus.

    The modulus is the monic irreducible polynomial of degree d whose lower
    coefficients have the smallest encoding ``sum(c_i p**i)``.  Results are cached,
    so repeated calls return the same object.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if d < 1:
        raise FieldError("extension degree must be >= 1")
    q = p**d
    if q > bound:
        raise BoundExceeded("field construction", q, bound)
    if d == 1:
        return FieldSpec(p, 1, ())
    modulus = _canonical_modulus(p, d)
    spec = FieldSpec(p, d, modulus)
    # exp/log tables from the first primitive element in encoding order
    order = q - 1
    factors = prime_factors(order)
    for g in range(2, q):
        gd = spec.digits(g)
        if all(_vec_pow(spec, gd, order // r) != _ONE_VEC(d) for r in factors):
            break
    exp = [0] * (2 * order)
    cur = (1,) + (0,) * (d - 1)
    gd = spec.digits(g)
    for i in range(order):
        exp[i] = exp[i + order] = spec.from_digits(cur)
        cur = spec._poly_mulmod(cur, gd)
    log = [0] * q
    for i in range(order):
        log[exp[i]] = i
    add = None
    if p > 2 and q <= 1024:
        add = tuple(tuple(spec._digit_add(a, b) for b in range(q)) for a in range(q))
    return FieldSpec(p, d, modulus, tuple(exp), tuple(log), add)


def _ONE_VEC(d: int) -> tuple[int, ...]:
    return (1,) + (0,) * (d - 1)


def _vec_pow(spec: FieldSpec, a: tuple[int, ...], e: int) -> tuple[int, ...]:
    result, base = _ONE_VEC(spec.d), a
    while e:
        if e & 1:
            result = spec._poly_mulmod(result, base)
        base = spec._poly_mulmod(base, base)
        e >>= 1
    return result


def field_of_order(q: int) -> FieldSpec:
    return make_field(*factor_prime_power(q))


def prime_powers(lo: int, hi: int) -> list[int]:
    out = []
    for q in range(max(lo, 2), hi + 1):
        try:
            factor_prime_power(q)
        except FieldError:
            continue
        out.append(q)
    return out


@dataclass(frozen=True)
class Fq:
    """An element of a finite field, stored by its integer encoding."""

    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.digits(self.value)

    def _check(self, other) -> int:
        if isinstance(other, int):
            # integers act through the prime subfield
            return other % self.field.p
        if not isinstance(other, Fq):
            return NotImplemented
        if other.field != self.field:
            raise FieldError(f"mixed-field operands {self.field} and {other.field}")
        return other.value

    def __add__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return Fq(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return Fq(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Fq(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return Fq(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return Fq(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __pow__(self, e: int):
        return Fq(self.field, self.field.pow(self.value, e))

    def inverse(self) -> Fq:
        return Fq(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.format_element(self.value)

    def __repr__(self) -> str:
        return f"Fq({self}, {self.field})"


def field_arithmetic(op: str, *operands: Fq | int) -> Fq:
    """Dispatch ``add``, ``mul``, ``neg``, ``inv`` or ``pow`` on field elements.

    For ``pow`` the second operand is an integer exponent.
    """
    if op == "pow":
        x, e = operands
        return x**e
    fields = {x.field for x in operands}
    if len(fields) != 1:
        raise FieldError("mixed-field operands")
    if op == "add":
        x, y = operands
        return x + y
    if op == "mul":
        x, y = operands
        return x * y
    if op == "neg":
        (x,) = operands
        return -x
    if op == "inv":
        (x,) = operands
        return x.inverse()
    raise ValueError(f"unknown operation {op!r}")


def multiplicative_order(x: Fq) -> int:
    """Smallest t >= 1 with x**t == 1."""
    if x.value == 0:
        raise ZeroDivisionError("zero has no multiplicative order")
    F = x.field
    t = F.q - 1
    for r in prime_factors(t):
        while t % r == 0 and F.pow(x.value, t // r) == 1:
            t //= r
    return t


def roots_of_unity(n: int, F: FieldSpec) -> frozenset[Fq]:
    """mu_n(F): the gcd(n, q-1) elements with x**n == 1."""
    k = math.gcd(n, F.q - 1)
    # any element of order exactly k generates the subgroup
    for v in range(1, F.q):
        if multiplicative_order(Fq(F, v)) == k:
            g = v
            break
    out, cur = set(), 1
    for _ in range(k):
        out.add(Fq(F, cur))
        cur = F.mul(cur, g)
    return frozenset(out)


# --- polynomials --------------------------------------------------------------

def _normalize(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class Poly:
    """Polynomial over GF(q) with coefficient encodings in ascending degree.

    The zero polynomial has ``coeffs == ()`` and ``degree is None``; callers
    must branch on :attr:`is_zero` rather than do arithmetic with its degree.
    """

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(tuple(self.coeffs)))

    @classmethod
    def from_elements(cls, F: FieldSpec, elems: Sequence[Fq | int]) -> Poly:
        return cls(F, tuple(e.value if isinstance(e, Fq) else e for e in elems))

    @classmethod
    def constant(cls, F: FieldSpec, c: Fq | int) -> Poly:
        return cls(F, (c.value if isinstance(c, Fq) else c,))

    @classmethod
    def monomial(cls, F: FieldSpec, k: int, c: int = 1) -> Poly:
        return cls(F, (0,) * k + (c,))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int) -> Fq:
        return Fq(self.field, self.coeffs[i] if i < len(self.coeffs) else 0)

    def _same(self, other: Poly) -> None:
        if other.field != self.field:
            raise FieldError(f"mixed-field polynomials {self.field} and {other.field}")

    def __add__(self, other: Poly) -> Poly:
        self._same(other)
        F, a, b = self.field, self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self) -> Poly:
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | Fq) -> Poly:
        F = self.field
        if isinstance(other, Fq):
            return self.scale(other.value)
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, ())
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(F, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> Poly:
        F = self.field
        return Poly(F, [F.mul(c, x) for x in self.coeffs])

    def __pow__(self, e: int) -> Poly:
        result, base = Poly(self.field, (1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self) -> Poly:
        if self.is_zero:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self.scale(self.field.inv(self.lc))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return poly_divrem(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divrem(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divrem(self, other)[1]

    def __call__(self, x: Fq | int) -> Fq:
        F = self.field
        v = x.value if isinstance(x, Fq) else x
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, v), c)
        return Fq(F, acc)

    def literal(self) -> str:
        if self.is_zero:
            return "0"
        return ",".join(self.field.format_element(c) for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        F, terms = self.field, []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = F.format_element(c)
            if F.d > 1:
                cs = f"({cs})"
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self}, {self.field})"


def parse_poly(F: FieldSpec, text: str) -> Poly:
    """Parse comma-separated element literals, ascending degree (``"1,0,1"`` is z^2+1)."""
    text = text.strip()
    if not text:
        raise FieldError("empty polynomial literal")
    return Poly(F, [F.parse_element(t).value for t in text.split(",")])


def poly_divrem(A: Poly, B: Poly) -> tuple[Poly, Poly]:
    """Return ``(Q, R)`` with ``A = Q*B + R`` and ``deg R < deg B``."""
    A._same(B)
    if B.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    F = A.field
    a, b = list(A.coeffs), B.coeffs
    db = len(b) - 1
    if len(a) <= db:
        return Poly(F, ()), A
    inv = F.inv(b[-1])
    add, mul, neg = F.add, F.mul, F.neg
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = mul(a[i + db], inv)
        q[i] = c
        if c:
            nc = neg(c)
            for j in range(db):
                if b[j]:
                    a[i + j] = add(a[i + j], mul(nc, b[j]))
        a[i + db] = 0
    return Poly(F, q), Poly(F, a[:db])


def poly_extended_gcd(A: Poly, B: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``A*u + B*v == g`` and g the monic gcd."""
    A._same(B)
    F = A.field
    if A.is_zero and B.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    zero, one = Poly(F, ()), Poly(F, (1,))
    r0, r1, u0, u1, v0, v1 = A, B, one, zero, zero, one
    while not r1.is_zero:
        quo, rem = poly_divrem(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - quo * u1
        v0, v1 = v1, v0 - quo * v1
    s = F.inv(r0.lc)
    return r0.scale(s), u0.scale(s), v0.scale(s)


def poly_gcd(A: Poly, B: Poly) -> Poly:
    return poly_extended_gcd(A, B)[0]


def _check_bound(what: str, required: int, bound: int | None) -> None:
    bound = ENUMERATION_BOUND if bound is None else bound
    if required > bound:
        raise BoundExceeded(what, required, bound)


def enumerate_polys(n: int, F: FieldSpec, bound: int | None = None) -> Iterator[Poly]:
    """All q**n polynomials of degree < n (zero included), in encoding order."""
    q = F.q
    _check_bound("polynomial enumeration", q**n, bound)
    for code in range(q**n):
        cs = []
        for _ in range(n):
            code, r = divmod(code, q)
            cs.append(r)
        yield Poly(F, cs)


def enumerate_monic(n: int, F: FieldSpec, bound: int | None = None) -> Iterator[Poly]:
    """All q**n monic polynomials of degree n.

    Ordered by the integer ``sum(enc(c_i) * q**i)`` of the lower coefficients,
    so the stream starts with ``z**n``.
    """
    one = (1,)
    for low in enumerate_polys(n, F, bound):
        yield Poly(F, low.coeffs + (0,) * (n - len(low.coeffs)) + one)


# --- the two rational-function models ----------------------------------------

@dataclass(frozen=True)
class MonicPair:
    """(phi, psi), both monic of the same degree n >= 1."""

    phi: Poly
    psi: Poly

    def __post_init__(self):
        self.phi._same(self.psi)
        if not (self.phi.is_monic and self.psi.is_monic):
            raise ValueError("MonicPair entries must be monic")
        if self.phi.degree != self.psi.degree or self.phi.degree < 1:
            raise ValueError("MonicPair entries must share a degree n >= 1")

    @property
    def n(self) -> int:
        return self.phi.degree

    @property
    def field(self) -> FieldSpec:
        return self.phi.field


@dataclass(frozen=True)
class PointedMap:
    """A/B with A monic of degree n and deg B < n."""

    A: Poly
    B: Poly

    def __post_init__(self):
        self.A._same(self.B)
        if not self.A.is_monic:
            raise ValueError("numerator A must be monic")
        if not self.B.is_zero and self.B.degree >= self.A.degree:
            raise ValueError("deg B must be < deg A")

    @property
    def n(self) -> int:
        return self.A.degree

    @property
    def field(self) -> FieldSpec:
        return self.A.field

    @property
    def is_reduced(self) -> bool:
        if self.B.is_zero:
            return self.n == 0
        return poly_gcd(self.A, self.B).degree == 0


def to_pointed(x: MonicPair) -> PointedMap:
    """(phi, psi) -> (psi, phi - psi)."""
    return PointedMap(x.psi, x.phi - x.psi)


def to_pair(f: PointedMap) -> MonicPair:
    """Inverse of :func:`to_pointed`: (A, B) -> (A + B, A)."""
    return MonicPair(f.A + f.B, f.A)


def convert_conventions(x: MonicPair | PointedMap) -> PointedMap | MonicPair:
    if isinstance(x, MonicPair):
        return to_pointed(x)
    return to_pair(x)
