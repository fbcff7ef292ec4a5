import random

import pytest
import sympy

from gonalift import upoly
from gonalift.ff import FqField

F7 = FqField(7)
F9 = FqField(3, 2)


def poly(field, ints):
    return upoly.trim([field.element(c) for c in ints])


def rand_poly(field, rng, deg):
    return upoly.trim([field.random_element(rng) for _ in range(deg + 1)])


def test_divmod_roundtrip():
    rng = random.Random(1)
    for field in (F7, F9):
        for _ in range(50):
            a = rand_poly(field, rng, rng.randrange(0, 8))
            b = rand_poly(field, rng, rng.randrange(0, 5))
            if upoly.is_zero(b):
                continue
            q, r = upoly.divmod_(field, a, b)
            assert upoly.degree(r) < upoly.degree(b)
            back = upoly.add(field, upoly.mul(field, q, b), r)
            assert back == upoly.trim(a)


def test_gcd_agrees_with_sympy():
    rng = random.Random(2)
    x = sympy.Symbol("x")
    for _ in range(40):
        a = [rng.randrange(7) for _ in range(rng.randrange(1, 8))]
        b = [rng.randrange(7) for _ in range(rng.randrange(1, 8))]
        pa, pb = poly(F7, a), poly(F7, b)
        if upoly.is_zero(pa) or upoly.is_zero(pb):
            continue
        g = upoly.gcd(F7, pa, pb)
        sa = sympy.Poly(list(reversed(a)), x, modulus=7)
        sb = sympy.Poly(list(reversed(b)), x, modulus=7)
        sg = sa.gcd(sb)
        got = [int(c) % 7 for c in reversed(sg.all_coeffs())]
        assert [c.coeffs[0] for c in g] == got


def test_xgcd_bezout():
    rng = random.Random(3)
    for field in (F7, F9):
        for _ in range(30):
            a = rand_poly(field, rng, rng.randrange(1, 7))
            b = rand_poly(field, rng, rng.randrange(1, 7))
            g, u, v = upoly.xgcd(field, a, b)
            lhs = upoly.add(field, upoly.mul(field, u, a), upoly.mul(field, v, b))
            assert lhs == g


def sylvester_det_mod(a, b, p):
    """Independent oracle: explicit Sylvester determinant over the integers."""
    a = list(a)
    b = list(b)
    while a and a[-1] % p == 0:
        a.pop()
    while b and b[-1] % p == 0:
        b.pop()
    m, n = len(a) - 1, len(b) - 1
    rows = []
    for i in range(n):
        row = [0] * (m + n)
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * (m + n)
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return int(sympy.Matrix(rows).det()) % p


def test_resultant_matches_sylvester_determinant():
    rng = random.Random(4)
    for _ in range(60):
        a = [rng.randrange(7) for _ in range(rng.randrange(2, 7))]
        b = [rng.randrange(7) for _ in range(rng.randrange(2, 7))]
        pa, pb = poly(F7, a), poly(F7, b)
        if upoly.degree(pa) < 1 or upoly.degree(pb) < 1:
            continue
        expected = sylvester_det_mod(a, b, 7)
        got = upoly.resultant(F7, pa, pb)
        assert got.coeffs[0] == expected


def test_eval_and_interpolate_roundtrip():
    rng = random.Random(5)
    field = FqField(101)
    for _ in range(20):
        a = rand_poly(field, rng, rng.randrange(0, 9))
        pts = [(field.element_at(i), upoly.eval_at(field, a, field.element_at(i)))
               for i in range(10)]
        back = upoly.interpolate(field, pts)
        assert back == upoly.trim(a)


def test_roots_and_count_roots():
    rng = random.Random(6)
    for field in (F7, F9, FqField(101), FqField(1009)):
        for _ in range(12):
            root_set = {field.random_element(rng) for _ in range(rng.randrange(1, 5))}
            a = [field.one]
            for r in root_set:
                a = upoly.mul(field, a, [-r, field.one])
            # multiply by an irreducible quadratic to add root-free content
            nonsq = None
            for i in range(1, field.q):
                if field.chi2(field.element_at(i)) == -1:
                    nonsq = field.element_at(i)
                    break
            a = upoly.mul(field, a, [-nonsq, field.zero, field.one])
            assert upoly.count_roots(field, a) == len(root_set)
            assert set(upoly.roots(field, a)) == root_set


def test_roots_sorted_canonically():
    field = FqField(13)
    a = poly(field, [0, 1])          # x
    a = upoly.mul(field, a, poly(field, [-5, 1]))
    a = upoly.mul(field, a, poly(field, [-2, 1]))
    rs = upoly.roots(field, a)
    assert [field.index_of(r) for r in rs] == [0, 2, 5]


def test_is_irreducible_matches_factorability():
    # degree 2: irreducible iff no roots; exhaustive over F_7
    count = 0
    for i in range(7):
        for j in range(7):
            a = [F7.element_at(i), F7.element_at(j), F7.one]
            irr = upoly.is_irreducible(F7, a)
            has_root = upoly.count_roots(F7, a) > 0
            assert irr == (not has_root)
            count += irr
    # number of monic irreducible quadratics over F_q is (q^2-q)/2
    assert count == (7 ** 2 - 7) // 2
    rng = random.Random(77)
    for _ in range(120):
        a = [F9.random_element(rng), F9.random_element(rng), F9.one]
        assert upoly.is_irreducible(F9, a) == (upoly.count_roots(F9, a) == 0)


def test_is_irreducible_agrees_with_sympy():
    rng = random.Random(8)
    x = sympy.Symbol("x")
    for _ in range(40):
        deg = rng.randrange(2, 7)
        a = [rng.randrange(7) for _ in range(deg)] + [1]
        pa = poly(F7, a)
        sa = sympy.Poly(list(reversed(a)), x, modulus=7)
        assert upoly.is_irreducible(F7, pa) == sa.is_irreducible


def test_factor_reassembles():
    rng = random.Random(9)
    for field in (F7, F9, FqField(43)):
        for _ in range(15):
            a = rand_poly(field, rng, rng.randrange(1, 9))
            if upoly.degree(a) < 1:
                continue
            unit, pieces = upoly.factor(field, a)
            prod = [unit]
            for g, m in pieces:
                assert upoly.is_irreducible(field, g)
                assert g[-1] == field.one
                for _ in range(m):
                    prod = upoly.mul(field, prod, g)
            assert prod == upoly.trim(a)


def test_factor_with_pth_powers():
    field = F7
    # (x+1)^7 * (x^2+x+3)
    a = [field.one]
    for _ in range(7):
        a = upoly.mul(field, a, poly(field, [1, 1]))
    quad = poly(field, [3, 1, 1])
    assert upoly.is_irreducible(field, quad)
    a = upoly.mul(field, a, quad)
    unit, pieces = upoly.factor(field, a)
    as_set = {(tuple(c.coeffs[0] for c in g), m) for g, m in pieces}
    assert as_set == {((1, 1), 7), ((3, 1, 1), 1)}


def test_squarefree_decomposition():
    field = F7
    a = upoly.mul(field, poly(field, [1, 1]), poly(field, [1, 1]))
    a = upoly.mul(field, a, poly(field, [2, 1]))
    dec = upoly.squarefree_decomposition(field, a)
    as_set = {(tuple(c.coeffs[0] for c in g), m) for g, m in dec}
    assert as_set == {((1, 1), 2), ((2, 1), 1)}
    assert not upoly.is_squarefree(field, a)
    assert upoly.is_squarefree(field, poly(field, [1, 0, 1]))


def test_large_field_roots_use_splitting():
    field = FqField(1009)
    a = poly(field, [1])
    for r in (3, 700, 900, 1001):
        a = upoly.mul(field, a, poly(field, [-r, 1]))
    rs = upoly.roots(field, a)
    assert sorted(field.index_of(r) for r in rs) == [3, 700, 900, 1001]


def test_pow_mod_fermat():
    # x^(q^2) = x mod m for squarefree m whose roots lie in F_{q^2}
    for field, m_ints in ((F7, [1, 0, 1]), (F9, [2, 1, 1])):
        m = poly(field, m_ints)
        x = upoly.x_poly(field)
        big = upoly.pow_mod(field, x, field.q ** 2, m)
        assert big == x
