import itertools
from collections import Counter

import pytest

from oracles import all_compositions, leibniz_det
from reslab.algebra import PointedMap, Poly, enumerate_monic, enumerate_polys, field_of_order, parse_poly, poly_gcd
from reslab.calculus import (
    Decomposition,
    NotReducedError,
    Part,
    bezout_matrix,
    bezout_normal_form,
    cf_decompose,
    compositions,
    enumerate_decompositions,
    epsilon_by_recursion,
    epsilon_sign,
    identity_map,
    oplus,
    recompose,
    resultant_from_decomposition,
)
from reslab.resultant import SylvesterMatrix, pointed_resultant


def P(F, text):
    return parse_poly(F, text)


def reduced_maps(n, F):
    for A in enumerate_monic(n, F):
        for B in enumerate_polys(n, F):
            if not B.is_zero and poly_gcd(A, B).degree == 0:
                yield PointedMap(A, B)


class TestBezout:
    def test_examples(self, gf3):
        bz = bezout_normal_form(PointedMap(P(gf3, "0,0,0,1"), P(gf3, "1")))
        assert bz.U.is_zero and bz.V == P(gf3, "1")
        bz = bezout_normal_form(PointedMap(P(gf3, "0,0,1"), P(gf3, "1,1")))
        assert (bz.U, bz.V) == (P(gf3, "1"), P(gf3, "1,2"))
        bz = bezout_normal_form(PointedMap(P(gf3, "0,1"), P(gf3, "2")))
        assert bz.U.is_zero and bz.V == P(gf3, "2")

    def test_not_reduced(self, gf3):
        with pytest.raises(NotReducedError):
            bezout_normal_form(PointedMap(P(gf3, "0,0,1"), P(gf3, "0,1")))

    @pytest.mark.parametrize("q,n", [(2, 3), (3, 2), (3, 3), (4, 2), (5, 2)])
    def test_window_and_uniqueness(self, q, n):
        F = field_of_order(q)
        one = Poly(F, (1,))
        for f in reduced_maps(n, F):
            bz = bezout_normal_form(f)
            assert f.A * bz.U + f.B * bz.V == one
            assert bz.U.is_zero or bz.U.degree <= n - 2
            assert bz.V.is_zero or bz.V.degree <= n - 1
        # uniqueness: brute-force every V in the window for one map
        f = next(reduced_maps(n, F))
        hits = [V for V in enumerate_polys(n, F) if ((one - f.B * V) % f.A).is_zero]
        assert hits == [bezout_normal_form(f).V]


class TestOplus:
    def test_gf3_example(self, gf3):
        z = PointedMap(P(gf3, "0,1"), P(gf3, "1"))
        assert oplus(z, z) == PointedMap(P(gf3, "2,0,1"), P(gf3, "0,1"))

    def test_identity(self, gf3):
        f = PointedMap(P(gf3, "1,0,1"), P(gf3, "2,1"))
        e = identity_map(gf3)
        assert oplus(e, f) == f == oplus(f, e)

    def test_lemma_recursion(self, gf3):
        # R(P/a (+) A/B) = (-1)^(n d) a^d R(A, B)
        F = gf3
        for d, n in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)]:
            for Pp in enumerate_monic(d, F):
                for a in (1, 2):
                    head = PointedMap(Pp, Poly(F, (a,)))
                    for f in itertools.islice(reduced_maps(n, F), 12):
                        lhs = pointed_resultant(oplus(head, f)).value
                        rhs = F.mul(F.pow(a, d), pointed_resultant(f).value)
                        if (n * d) % 2:
                            rhs = F.neg(rhs)
                        assert lhs == rhs

    @pytest.mark.parametrize("q", [2, 3])
    def test_det_one_and_associativity(self, q):
        F = field_of_order(q)
        one = Poly(F, (1,))
        maps = [f for n in (1, 2) for f in reduced_maps(n, F)]
        for f in maps:
            assert bezout_matrix(f).det() == one
        for x, y in itertools.product(maps[:10], repeat=2):
            xy = oplus(x, y)
            assert xy.is_reduced and xy.n == x.n + y.n
            assert bezout_matrix(xy).det() == one
            for z in maps[:6]:
                assert oplus(xy, z) == oplus(x, oplus(y, z))


class TestDecompose:
    def test_polynomial_input(self, gf3):
        f = PointedMap(P(gf3, "1,2,1"), P(gf3, "2"))
        d = cf_decompose(f)
        assert d.parts == (Part(P(gf3, "1,2,1"), gf3.element(2)),)
        assert resultant_from_decomposition(d).value == gf3.pow(2, 2)

    def test_gf3_example(self, gf3):
        f = PointedMap(P(gf3, "2,0,1"), P(gf3, "0,1"))
        d = cf_decompose(f)
        assert d.parts == (Part(P(gf3, "0,1"), gf3.one), Part(P(gf3, "0,1"), gf3.one))
        assert d.epsilon == -1
        assert resultant_from_decomposition(d).value == 2
        assert leibniz_det(gf3, SylvesterMatrix.build(f.B, f.A).entries) == 2

    def test_not_reduced(self, gf3):
        with pytest.raises(NotReducedError):
            cf_decompose(PointedMap(P(gf3, "0,0,1"), P(gf3, "0,1")))

    @pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (4, 2), (5, 2)])
    def test_round_trip_and_resultant(self, q, n):
        F = field_of_order(q)
        for f in reduced_maps(n, F):
            d = cf_decompose(f)
            assert d.n == n and all(p.poly.is_monic for p in d.parts)
            assert recompose(d) == f
            assert resultant_from_decomposition(d) == pointed_resultant(f, "sylvester")

    @pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2), (4, 2)])
    def test_uniqueness(self, q, n):
        F = field_of_order(q)
        hits = Counter(recompose(d) for d in enumerate_decompositions(n, F))
        reduced = set(reduced_maps(n, F))
        assert set(hits) == reduced
        assert set(hits.values()) == {1}
        # bijection count: sum over compositions of q^n (q-1)^r
        assert len(reduced) == sum(q**n * (q - 1) ** len(c) for c in all_compositions(n))

    def test_json_round_trip(self, gf4):
        f = PointedMap(parse_poly(gf4, "1,0:1,1"), parse_poly(gf4, "1:1,1"))
        d = cf_decompose(f)
        text = d.to_json()
        again = Decomposition.from_json(gf4, text)
        assert again == d and again.to_json() == text


class TestEpsilon:
    def test_examples(self):
        assert epsilon_sign((5,)) == 1
        assert epsilon_sign((2, 4, 2)) == 1
        assert epsilon_sign((1, 1)) == -1
        assert epsilon_sign(()) == 1

    @pytest.mark.parametrize("n", range(1, 11))
    def test_closed_form_matches_recursion(self, n):
        for comp in all_compositions(n):
            brute = (-1) ** sum(a * b for a, b in itertools.combinations(comp, 2))
            assert epsilon_sign(comp) == epsilon_by_recursion(comp) == brute

    def test_compositions(self):
        assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
        for n in range(1, 9):
            assert sorted(compositions(n)) == sorted(all_compositions(n))
            assert list(compositions(n, 2)) == [(k, n - k) for k in range(1, n)]
