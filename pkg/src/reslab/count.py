"""Point counts of Res_n, M_n, X_n and F_n over GF(q), plus the enumeration oracle.

Every closed form returns an exact Python int.  :func:`brute_force_count`
enumerates the variety directly and is the ground truth the closed forms are
checked against.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Callable, Sequence, Union

from .algebra import (
    BoundExceeded,
    FieldSpec,
    Fq,
    Poly,
    enumerate_monic,
    enumerate_polys,
    factor_prime_power,
    field_of_order,
    multiplicative_order,
)
from .calculus import compositions, epsilon_sign
from .resultant import resultant

SIEVE_BOUND = 10**7
DEFAULT_BUDGET = 10**7
VARIETIES = ("res", "mn", "xn", "fn")


# --- multiplicative number theory ---------------------------------------------

@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return tuple(small + large[::-1])


def _factorize(n: int) -> dict[int, int]:
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    fs = _factorize(n)
    if any(e > 1 for e in fs.values()):
        return 0
    return -1 if len(fs) % 2 else 1


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    if n < 1:
        raise ValueError("totient is defined for n >= 1")
    out = n
    for p in _factorize(n):
        out -= out // p
    return out


def _check_sieve(N: int) -> None:
    if N < 1:
        raise ValueError("sieve bound must be >= 1")
    if N > SIEVE_BOUND:
        raise BoundExceeded("sieve", N, SIEVE_BOUND)


def mobius_sieve(N: int) -> list[int]:
    """mu(0..N); index 0 is unused and set to 0."""
    _check_sieve(N)
    mu = [1] * (N + 1)
    mu[0] = 0
    is_comp = bytearray(N + 1)
    for p in range(2, N + 1):
        if not is_comp[p]:
            for k in range(p, N + 1, p):
                if k > p:
                    is_comp[k] = 1
                mu[k] = -mu[k]
            for k in range(p * p, N + 1, p * p):
                mu[k] = 0
    return mu


def totient_sieve(N: int) -> list[int]:
    _check_sieve(N)
    phi = list(range(N + 1))
    for p in range(2, N + 1):
        if phi[p] == p:
            for k in range(p, N + 1, p):
                phi[k] -= phi[k] // p
    return phi


ArithFn = Callable[[int], int]


def dirichlet_convolve(f: ArithFn, g: ArithFn, N: int) -> list[int]:
    """(f * g)(n) = sum_{d | n} f(d) g(n/d) for n = 1..N (index 0 is 0)."""
    _check_sieve(N)
    fv = [0] + [f(k) for k in range(1, N + 1)]
    gv = [0] + [g(k) for k in range(1, N + 1)]
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        if fv[d]:
            for k in range(d, N + 1, d):
                out[k] += fv[d] * gv[k // d]
    return out


def gcd_with(m: int) -> ArithFn:
    return lambda k: math.gcd(k, m)


def divides_indicator(m: int) -> ArithFn:
    """n -> 1 if n | m else 0."""
    return lambda k: 1 if m % k == 0 else 0


def arithmetic_functions(kind: str, *args):
    """Entry point for ``mobius``, ``totient``, ``dirichlet_convolve``, ``gcd_with``."""
    if kind == "mobius":
        return mobius(*args)
    if kind == "totient":
        return totient(*args)
    if kind == "dirichlet_convolve":
        return dirichlet_convolve(*args)
    if kind == "gcd_with":
        return gcd_with(*args)
    raise ValueError(f"unknown arithmetic function {kind!r}")


# --- closed forms ---------------------------------------------------------------

def divisor_form_hypothesis(n: int, q: int) -> bool:
    """True when gcd(p, n) = 1, the coprimality hypothesis of the divisor-sum count."""
    p, _ = factor_prime_power(q)
    return n % p != 0


def count_divisor_form(n: int, q: int) -> int:
    """q^(2n-1) * sum_{a | n, q = 1 mod n/a} phi(n/a) q^(a-n)."""
    factor_prime_power(q)
    return sum(totient(n // a) * q ** (n - 1 + a) for a in divisors(n) if (q - 1) % (n // a) == 0)


def count_convolution_form(n: int, q: int) -> int:
    """q^n * sum_{abc = n} mu(a) q^(b-1) gcd(c, q-1); valid for every n and q."""
    return _triple_sum(n, q, lambda c: math.gcd(c, q - 1))


def _triple_sum(n: int, q: int, g: ArithFn) -> int:
    factor_prime_power(q)
    total = 0
    for a in divisors(n):
        mu = mobius(a)
        if not mu:
            continue
        m = n // a
        for b in divisors(m):
            total += mu * q ** (b - 1) * g(m // b)
    return q**n * total


def count_value_x(n: int, x: Fq) -> int:
    """Number of pointed degree-n maps A/B over GF(q) with R(A, B) = x.

    g(c) = gcd(c, q-1) when that gcd divides (q-1)/ord(x), else 0.
    """
    if x.value == 0:
        raise ValueError("target value must be a unit")
    q = x.field.q
    o = multiplicative_order(x)

    def g(c: int) -> int:
        h = math.gcd(c, q - 1)
        return h if ((q - 1) // o) % h == 0 else 0

    return _triple_sum(n, q, g)


def count_Mn(n: int, q: int) -> int:
    """Pairs of monic degree-n polynomials with nonzero resultant."""
    factor_prime_power(q)
    return q ** (2 * n) - q ** (2 * n - 1)


def count_Xn(n: int, q: int) -> int:
    """|X_n(F_q)| = |Res_n(F_q)| / q, defined when gcd(q, n) = 1."""
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd(q, n) = {math.gcd(q, n)}: X_n count requires coprime q and n")
    total = count_convolution_form(n, q)
    quo, rem = divmod(total, q)
    if rem:
        raise ArithmeticError(f"|Res_{n}(F_{q})| = {total} is not divisible by q")
    return quo


def _unit_count(parts_gcd: int, r: int, order: int, q: int) -> int:
    # Units form a cyclic group of order q-1; the image of (a_i) -> prod a_i^n_i
    # is the subgroup of g-th powers, g = gcd(q-1, n_1..n_r), of index g.
    g = math.gcd(q - 1, parts_gcd)
    if ((q - 1) // order) % g:
        return 0
    return (q - 1) ** (r - 1) * g


def unit_solution_count(parts: Sequence[int], x: Fq) -> int:
    """#{(a_1..a_r) in units^r : prod a_i^n_i = x}."""
    if x.value == 0:
        raise ValueError("target must be a unit")
    if not parts or any(k < 1 for k in parts):
        raise ValueError("parts must be positive")
    return _unit_count(math.gcd(*parts), len(parts), multiplicative_order(x), x.field.q)


def pi_r(n: int, r: int) -> int:
    """Number of compositions of n into r parts."""
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    return math.comb(n - 1, r - 1)


@lru_cache(maxsize=None)
def pi_r_gcd(n: int, r: int, d: int) -> int:
    """Compositions of n into r parts with gcd exactly d (Mobius inversion of pi_r)."""
    if r < 1 or n < 1:
        raise ValueError("need n, r >= 1")
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    m = n // d
    return sum(mobius(e) * math.comb(m // e - 1, r - 1) for e in divisors(m))


def composition_counts(kind: str, n: int, r: int, d: int | None = None) -> int:
    if kind == "pi_r":
        return pi_r(n, r)
    if kind == "pi_r_gcd_d":
        if d is None:
            raise ValueError("pi_r_gcd_d needs d")
        return pi_r_gcd(n, r, d)
    raise ValueError(f"unknown composition count {kind!r}")


@lru_cache(maxsize=None)
def _composition_classes(n: int) -> tuple[tuple[int, int, int, int], ...]:
    # (gcd d, length r, class size, sign of the representative), independent of q
    out = []
    for d in divisors(n):
        m = n // d
        for r in range(1, m + 1):
            size = pi_r_gcd(n, r, d)
            if size:
                rep = (d,) * (r - 1) + (d * (m - r + 1),)
                out.append((d, r, size, epsilon_sign(rep)))
    return tuple(out)


def structured_count(n: int, q: int) -> int:
    """sum over compositions of n of q^n C(comp, eps(comp)).

    Compositions are grouped by (length r, gcd d).  Within a group C(comp,
    eps(comp)) is constant: an odd gcd forces an odd part, making C(., 1) and
    C(., -1) equal, and an even gcd forces eps = 1.  Each group is evaluated at
    the representative d * (1, ..., 1, n/d - r + 1) and weighted by its size.
    """
    F = field_of_order(q)
    orders = {1: 1, -1: multiplicative_order(-F.one)}
    total = 0
    for d, r, size, eps in _composition_classes(n):
        total += size * _unit_count(d, r, orders[eps], q)
    return q**n * total


def structured_count_enumerated(n: int, q: int) -> int:
    """Same sum as :func:`structured_count`, one composition at a time."""
    F = field_of_order(q)
    signs = {1: F.one, -1: -F.one}
    return q**n * sum(unit_solution_count(c, signs[epsilon_sign(c)]) for c in compositions(n))


# --- brute force ------------------------------------------------------------------

Target = Union[str, Fq]


@dataclass(frozen=True)
class CountQuery:
    """What to count: ``variety`` in res/mn/xn/fn over ``field`` at degree n.

    ``target`` is ``"one"``, ``"nonzero"`` or a unit Fq.  M_n always counts the
    nonzero-resultant locus.
    """

    n: int
    field: FieldSpec
    variety: str = "res"
    target: Target = "one"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.variety not in VARIETIES:
            raise ValueError(f"unknown variety {self.variety!r}")
        if isinstance(self.target, Fq):
            if self.target.field != self.field:
                raise ValueError("target lives in a different field")
            if self.target.value == 0:
                raise ValueError("target must be a unit")
        elif self.target not in ("one", "nonzero"):
            raise ValueError(f"unknown target {self.target!r}")

    @property
    def enumeration_size(self) -> int:
        q, n = self.field.q, self.n
        return q ** (2 * n - 1) if self.variety == "xn" else q ** (2 * n)


def default_budget() -> int:
    env = os.environ.get("RESLAB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _outer_size(n: int, q: int, centered: bool) -> int:
    return q ** (n - 1 if centered else n)


def _slices(total: int, workers: int) -> list[tuple[int, int]]:
    k = max(1, min(total, 4 * workers))
    edges = [total * i // k for i in range(k + 1)]
    return [(edges[i], edges[i + 1]) for i in range(k) if edges[i] < edges[i + 1]]


def _python_slice(n: int, F: FieldSpec, start: int, stop: int, *, centered: bool, b_monic: bool) -> list[int]:
    hist = [0] * F.q
    q = F.q
    inner = list(enumerate_monic(n, F, bound=None) if b_monic else enumerate_polys(n, F, bound=None))
    for t in range(start, stop):
        cs = []
        for _ in range(n - 1 if centered else n):
            t, r = divmod(t, q)
            cs.append(r)
        cs += [0] * (n - len(cs)) + [1]
        a = Poly(F, cs)
        for b in inner:
            if b.is_zero:
                hist[0] += 1
            else:
                hist[resultant(b, a).value] += 1
    return hist


def _gf2_slice(n, start, stop, *, centered, b_monic):
    from ._kernel import gf2_histogram_slice

    return list(gf2_histogram_slice(n, start, stop, centered, b_monic))


def _compiled_slice(n, q, tables, start, stop, *, centered, b_monic):
    from ._kernel import histogram_slice

    return list(histogram_slice(n, q, start, stop, centered, b_monic, *tables))


def resultant_histogram(
    n: int,
    F: FieldSpec,
    variety: str = "res",
    *,
    budget: int | None = None,
    workers: int = 1,
    engine: str = "compiled",
) -> list[int]:
    """hist[v] = number of points of the ambient space with resultant encoding v.

    The ambient space is: monic pairs (res, mn); pointed maps A/B with deg B < n
    (fn); centered monic psi with deg phi < n (xn).  The outer denominator
    stream is cut into contiguous slices and tallies are summed, so the result
    does not depend on ``workers``.
    """
    query = CountQuery(n, F, variety)
    budget = default_budget() if budget is None else budget
    if query.enumeration_size > budget:
        raise BoundExceeded(f"brute force {variety} n={n} q={F.q}", query.enumeration_size, budget)
    centered = variety == "xn"
    b_monic = variety in ("res", "mn")
    total = _outer_size(n, F.q, centered)
    slices = _slices(total, workers)
    if engine == "python":
        run = partial(_python_slice, n, F, centered=centered, b_monic=b_monic)
    elif engine == "compiled":
        from . import _kernel

        if n > 64:
            raise ValueError("compiled engine supports n <= 64")

        if F.q == 2 and n <= 60:
            run = partial(_gf2_slice, n, centered=centered, b_monic=b_monic)
        else:
            run = partial(_compiled_slice, n, F.q, _kernel.field_tables(F), centered=centered, b_monic=b_monic)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda s: run(*s), slices))
    else:
        parts = [run(*s) for s in slices]
    return [int(sum(col)) for col in zip(*parts)]


def brute_force_count(
    query: CountQuery,
    *,
    budget: int | None = None,
    workers: int = 1,
    engine: str = "compiled",
) -> int:
    hist = resultant_histogram(query.n, query.field, query.variety, budget=budget, workers=workers, engine=engine)
    if query.variety == "mn" or query.target == "nonzero":
        return sum(hist[1:])
    if query.target == "one":
        return hist[1]
    return hist[query.target.value]


# --- verification report -------------------------------------------------------------

def verify_point(
    n: int,
    q: int,
    *,
    budget: int | None = None,
    workers: int = 1,
    engine: str = "compiled",
) -> dict:
    """One verification record: every closed form, the oracle when affordable."""
    from .cohom import lefschetz_count

    methods = {
        "divisor": count_divisor_form(n, q),
        "convolution": count_convolution_form(n, q),
        "structured": structured_count(n, q),
    }
    notes = []
    if math.gcd(q, n) == 1:
        methods["lefschetz"] = lefschetz_count(n, q)
    if not divisor_form_hypothesis(n, q):
        notes.append("p divides n: divisor form outside its stated hypothesis")
    budget = default_budget() if budget is None else budget
    if q ** (2 * n) <= budget:
        methods["brute"] = brute_force_count(CountQuery(n, field_of_order(q)), budget=budget, workers=workers, engine=engine)
    else:
        notes.append(f"brute force skipped: needs {q ** (2 * n)} > budget {budget}")
    agree = len(set(methods.values())) == 1
    if not agree:
        notes.append("DISAGREEMENT")
    return {
        "n": n,
        "q": q,
        "methods": {k: str(v) for k, v in methods.items()},
        "agree": agree,
        "notes": "; ".join(notes),
    }
