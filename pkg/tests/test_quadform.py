import random
from math import gcd, isqrt

import pytest

from theta_parity.numth import is_prime, jacobi, primes_in_class, vp
from theta_parity.quadform import (SolutionPair, constrained_count,
                                   find_weber_prime, lemma32_residue,
                                   lemma34_check, lemma34_pairs,
                                   lemma34_solutions, repcount, weber_reject)
from theta_parity.theta import theta_series


def brute_repcount(b, c, k):
    """Oracle: scan every split i + j = k and test both squares directly."""
    count = 0
    for i in range(k + 1):
        ri = isqrt(b * i + 1)
        if ri * ri != b * i + 1:
            continue
        j = k - i
        rj = isqrt(c * j + 1)
        if rj * rj == c * j + 1:
            count += 1
    return count


def test_repcount_examples():
    assert repcount(6, 12, 0) == 1   # only (0,0)
    assert repcount(6, 12, 2) == 1   # only (0,2)
    assert repcount(6, 12, 4) == 2   # (0,4) and (4,0), parity 0


def test_repcount_matches_brute_scan():
    rng = random.Random(3)
    for _ in range(300):
        b, c = rng.randrange(1, 60), rng.randrange(1, 60)
        k = rng.randrange(0, 400)
        assert repcount(b, c, k) == brute_repcount(b, c, k)


def test_repcount_parity_is_product_coefficient():
    rng = random.Random(5)
    n = 1001
    for _ in range(30):
        b, c = rng.randrange(1, 101), rng.randrange(1, 101)
        prod = theta_series(b, n).mul(theta_series(c, n))
        for _ in range(8):
            k = rng.randrange(0, n)
            assert repcount(b, c, k) % 2 == prod.coeff(k), (b, c, k)


def test_repcount_parity_full_range_single_pairs():
    # every coefficient up to 10^4 for a couple of pairs
    n = 10 ** 4 + 1
    for b, c in ((6, 12), (24, 72), (17, 31)):
        prod = theta_series(b, n).mul(theta_series(c, n))
        odd = {k for k in range(n) if repcount(b, c, k) % 2}
        assert odd == set(prod.support), (b, c)


def test_repcount_change_of_variables():
    # every counted split (i, j) has roots satisfying c*y^2 + b*z^2 = bck+b+c
    for b, c, k in ((6, 12, 4), (8, 24, 10), (5, 9, 33), (24, 72, 1)):
        for i in range(k + 1):
            y, z = isqrt(b * i + 1), isqrt(c * (k - i) + 1)
            if y * y == b * i + 1 and z * z == c * (k - i) + 1:
                assert c * y * y + b * z * z == b * c * k + b + c


def test_lemma34_solutions_examples():
    assert lemma34_solutions(1, 2, 33) == [SolutionPair(2, 5), SolutionPair(4, 1)]
    assert lemma34_solutions(1, 1, 10) == [SolutionPair(1, 3), SolutionPair(3, 1)]
    # boundary: y = 0 passes gcd(0, 1) = 1 and is reported
    assert lemma34_solutions(1, 2, 1) == [SolutionPair(0, 1)]


def test_lemma34_solutions_validation():
    with pytest.raises(ValueError):
        lemma34_solutions(2, 4, 10)   # not coprime
    with pytest.raises(ValueError):
        lemma34_solutions(1, 2, 0)


def test_lemma34_check_examples():
    assert lemma34_check(1, 2, 3, 1)   # p = 11, pairs (2,5), (4,1)
    assert lemma34_check(1, 1, 2, 1)   # p = 5, pairs (1,3), (3,1)
    assert lemma34_check(2, 3, 1, 1)   # p = 7, pairs (1,4), (3,2)
    with pytest.raises(ValueError):
        lemma34_check(1, 2, 4, 1)      # 16 + 2 = 18 is not prime


def test_lemma34_two_pair_prediction_has_square_ratio_exception():
    # (b'+c')/b' a perfect square admits a third solution (2b'v, 2u):
    # 3y^2 + z^2 = 4*19 also has (2, 8) beyond the predicted pairs.
    sols = set(lemma34_solutions(1, 3, 4 * 19))
    assert sols == {SolutionPair(2, 8), SolutionPair(3, 7), SolutionPair(5, 1)}
    assert set(lemma34_pairs(1, 3, 4, 1)) < sols
    assert not lemma34_check(1, 3, 4, 1)


def coprime_shapes(limit=10):
    """Coprime (b', c') <= limit where the two-pair dichotomy is valid,
    i.e. neither (b'+c')/b' nor (b'+c')/c' is a perfect square."""
    shapes = []
    for bp in range(1, limit + 1):
        for cp in range(1, limit + 1):
            if gcd(bp, cp) != 1:
                continue
            s = bp + cp
            bad = False
            for side in (bp, cp):
                if s % side == 0:
                    r = isqrt(s // side)
                    bad = bad or r * r * side == s
            if not bad:
                shapes.append((bp, cp))
    return shapes


def lemma34_instances(count, seed=17, p_max=10 ** 6):
    rng = random.Random(seed)
    shapes = coprime_shapes()
    out = []
    while len(out) < count:
        bp, cp = rng.choice(shapes)
        u = rng.randrange(1, 200)
        v = rng.randrange(1, 200)
        if gcd(u, bp * cp) != 1:
            continue
        p = u * u + bp * cp * v * v
        if p > p_max or not is_prime(p):
            continue
        out.append((bp, cp, u, v))
    return out


def test_lemma34_check_random_instances():
    for bp, cp, u, v in lemma34_instances(40):
        assert lemma34_check(bp, cp, u, v), (bp, cp, u, v)


def test_excluded_shapes_are_exactly_the_square_ratio_ones():
    all_coprime = {(bp, cp) for bp in range(1, 11) for cp in range(1, 11)
                   if gcd(bp, cp) == 1}
    assert all_coprime - set(coprime_shapes()) == {(1, 3), (3, 1), (1, 8), (8, 1)}


def test_lemma32_examples():
    cls = lemma32_residue(8, 3)
    assert (cls.q, cls.Q) == (5, 24)
    cls = lemma32_residue(1, 1)
    assert (cls.q, cls.Q) == (3, 8)
    cls = lemma32_residue(3, 2)
    assert (cls.q, cls.Q) == (5, 24)


def test_lemma32_prime_soundness():
    for u, v in ((8, 3), (1, 1), (3, 2), (12, 5), (5, 6), (16, 7)):
        cls = lemma32_residue(u, v)
        for p in primes_in_class(cls, 10):
            assert (p * p - 1) % u == 0
            assert jacobi(-v, p) == -1


def test_lemma32_strict_mode():
    for u, v in ((8, 3), (16, 3), (24, 7), (48, 15), (8, 21)):
        cls = lemma32_residue(u, v, strict=True)
        v2Q = vp(cls.Q, 2)
        for p in primes_in_class(cls, 10):
            assert (p * p - 1) % u == 0
            assert jacobi(-v, p) == -1
            assert vp(p * p - 1, 2) == v2Q


def test_lemma32_validation():
    with pytest.raises(ValueError):
        lemma32_residue(8, 12)          # v not squarefree
    with pytest.raises(ValueError):
        lemma32_residue(4, 3, strict=True)   # 8 does not divide u
    with pytest.raises(ValueError):
        lemma32_residue(8, 5, strict=True)   # no prime divisor 3 mod 4


def test_find_weber_prime_examples():
    wp = find_weber_prime(2, 0, 0, 1, 10)
    assert (wp.p, wp.u, wp.v) == (3, 1, 1)
    wp = find_weber_prime(6, 0, 0, 1, 10)
    assert (wp.p, wp.u, wp.v) == (7, 1, 1)
    wp = find_weber_prime(3, 5, 4, 18, 100)
    assert (wp.p, wp.u, wp.v) == (73, 5, 4)


def test_find_weber_prime_empty_region():
    # u = v = 2 mod 4 makes u^2 + 4v^2 even, never an odd prime
    assert find_weber_prime(4, 2, 2, 4, 30) is None


def test_weber_reject_certificate_for_failing_pair():
    cert = weber_reject(24, 72, 100)
    assert cert is not None
    assert (cert.prime.p, cert.prime.u, cert.prime.v, cert.prime.D) == (73, 5, 4, 3)
    assert cert.passing_pair == SolutionPair(1, 17)
    assert cert.failing_pair == SolutionPair(9, 7)
    # index is the refuted coefficient: a*k + 1 = p with a = 18
    assert 18 * cert.index + 1 == 73
    # independent confirmation by exhaustive scan
    assert constrained_count(24, 72, 73) == 1


def test_weber_reject_empty_on_true_identities():
    assert weber_reject(6, 12, 100) is None    # (4,6,12) is an identity
    assert weber_reject(8, 8, 100) is None     # family triple (4,8,8)


def test_weber_reject_validation():
    with pytest.raises(ValueError):
        weber_reject(5, 7, 10)   # no integer a
