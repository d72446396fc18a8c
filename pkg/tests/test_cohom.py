import json
import math

import pytest

from oracles import fixed_points
from reslab.cohom import (
    betti_table,
    frobenius_action,
    is_tate,
    isotypic_table,
    lefschetz_count,
    orbit_set,
    table_dict,
    table_json,
    table_text,
    trace_rows,
)
from reslab.count import count_convolution_form, count_divisor_form, totient


class TestBetti:
    def test_n_one(self):
        t = betti_table(1)
        assert [(r.degree, r.rank) for r in t.rows] == [(0, 1)]

    @pytest.mark.parametrize("n", [2, 3, 5, 7, 11, 13])
    def test_prime(self, n):
        assert [(r.degree, r.rank) for r in betti_table(n).rows] == [(0, 1), (2 * n - 2, n - 1)]

    def test_six(self):
        t = betti_table(6)
        assert [(r.degree, r.rank) for r in t.rows] == [(0, 1), (6, 1), (8, 2), (10, 2)]
        assert t.total_rank == 6
        assert t.rank(7) == 0 and t.rank(8) == 2

    @pytest.mark.parametrize("n", range(1, 61))
    def test_rows_and_orbits(self, n):
        t = betti_table(n)
        # nonzero exactly for i = 0 and for i < n with (n - i) | n
        expected = {0} | {2 * i for i in range(1, n) if n % (n - i) == 0}
        assert {r.degree for r in t.rows} == expected
        assert all(r.degree % 2 == 0 and r.weight == r.degree // 2 for r in t.rows)
        assert all(t.rank(d) == 0 for d in range(1, 2 * n, 2))
        covered = []
        for r in t.rows:
            assert len(r.orbit) == r.rank == totient(n // r.a)
            assert all(math.gcd(m, n) == r.a for m in r.orbit)
            covered += r.orbit
        assert sorted(covered) == list(range(1, n + 1))

    def test_bad_n(self):
        with pytest.raises(ValueError):
            betti_table(0)


class TestFrobenius:
    def test_examples(self):
        p = frobenius_action(6, 2, 5)
        assert p.elements == (2, 4) and p.mapping == {2: 4, 4: 2} and p.fixed_count == 0
        assert p.cycle_type == (2,)
        p = frobenius_action(6, 3, 5)
        assert p.elements == (3,) and p.fixed_count == 1
        rows = {t.row.a: t for t in trace_rows(6, 5)}
        assert rows[3].trace == 125 and rows[2].trace == 0

    @pytest.mark.parametrize("n", [3, 4, 6, 10, 12])
    def test_q_one_mod_n_is_identity(self, n):
        q = next(q for q in range(n + 1, 10 * n) if q % n == 1)
        for t in trace_rows(n, q):
            assert t.tate and t.trace == q**t.row.weight * t.row.rank

    def test_errors(self):
        with pytest.raises(ValueError):
            frobenius_action(6, 2, 4)
        with pytest.raises(ValueError):
            frobenius_action(6, 4, 5)

    @pytest.mark.parametrize("n", range(1, 31))
    def test_dichotomy_and_tate(self, n):
        for q in range(2, 200):
            if math.gcd(q, n) != 1:
                continue
            for a in (d for d in range(1, n + 1) if n % d == 0):
                perm = frobenius_action(n, a, q)
                assert sorted(perm.mapping.values()) == list(perm.elements)
                expected = totient(n // a) if (q - 1) % (n // a) == 0 else 0
                assert perm.fixed_count == fixed_points(n, a, q) == expected
                assert sum(perm.cycle_type) == len(perm.elements)
                assert perm.is_identity == is_tate(n, 2 * (n - a), q)


class TestIsotypic:
    def test_examples(self):
        t = isotypic_table(4)
        assert t[0].degree == 0 and t[2].degree == 4 and t[1].degree == t[3].degree == 6
        for n in (5, 9, 12):
            assert all(isotypic_table(n)[m].degree == 2 * n - 2 for m in range(1, n) if math.gcd(m, n) == 1)

    def test_stability(self):
        assert all(e.frobenius_stable for e in isotypic_table(6, 7).values())
        t = isotypic_table(6, 5)
        assert t[3].frobenius_stable and not t[2].frobenius_stable


class TestLefschetz:
    def test_examples(self):
        assert lefschetz_count(6, 5) == 5**11 + 5**8 == 49218750
        for q in (2, 3, 4, 5, 7):
            assert lefschetz_count(1, q) == q
        for n, q in [(3, 7), (5, 11), (7, 29)]:
            assert lefschetz_count(n, q) == q ** (2 * n - 1) + (n - 1) * q**n

    def test_refuses(self):
        with pytest.raises(ValueError):
            lefschetz_count(4, 2)

    @pytest.mark.parametrize("n", range(1, 25))
    def test_matches_closed_forms(self, n):
        for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49):
            if math.gcd(q, n) == 1:
                assert lefschetz_count(n, q) == count_divisor_form(n, q) == count_convolution_form(n, q)


class TestRendering:
    def test_json_shape(self):
        data = json.loads(table_json(6, 5))
        assert data["lefschetz"] == "49218750"
        contribs = {r["degree"]: r["trace_contribution"] for r in data["rows"]}
        assert contribs[0] == str(5**11) and contribs[6] == str(5**8)
        assert contribs[8] == contribs[10] == "0"
        assert json.dumps(json.loads(table_json(6, 5))) == table_json(6, 5)

    def test_without_q(self):
        d = table_dict(4)
        assert d["q"] is None and "lefschetz" not in d
        assert [r["rank"] for r in d["rows"]] == [1, 1, 2]

    def test_text(self):
        text = table_text(6, 5)
        assert "lefschetz = 49218750" in text and text.startswith("H*(Res_6) over F_5")

    def test_orbit_set(self):
        assert orbit_set(6, 2) == (2, 4) and orbit_set(6, 6) == (6,)
