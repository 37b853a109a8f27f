import random

import pytest

from amicable import arith

from oracles import esym_subsets, phi_count, sigma_enum, sigma_table_enum


def test_factorize_known_values():
    assert arith.factorize(220).factors == ((2, 2), (5, 1), (11, 1))
    assert arith.factorize(1).factors == ()
    assert arith.factorize(26989290624832).factors == (
        (2, 6),
        (487, 1),
        (1021, 1),
        (848119, 1),
    )


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        arith.factorize(0)
    with pytest.raises(ValueError):
        arith.sigma(0)
    with pytest.raises(ValueError):
        arith.phi(0)


def test_factorize_roundtrip_and_idempotence():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randrange(1, 10**9)
        f = arith.factorize(n)
        assert f.value == n
        assert f.product() == n
        assert list(f.primes) == sorted(f.primes)
        assert all(e >= 1 for _, e in f.factors)
        assert all(arith.is_prime(p) for p in f.primes)
        assert arith.factorize(f.product()) == f
    assert arith.factorize(1).value == 1


def test_factorize_semiprime_beyond_trial_bound():
    p, q = 1000003, 1000033
    f = arith.factorize(p * q)
    assert f.factors == ((p, 1), (q, 1))


def test_is_prime_known_values():
    assert arith.is_prime(2)
    assert arith.is_prime(16600783)
    assert not arith.is_prime(287)  # 7 * 41
    assert not arith.is_prime(1)


def test_is_prime_small_range_against_trial_division():
    def trial(n):
        if n < 2:
            return False
        d = 2
        while d * d <= n:
            if n % d == 0:
                return False
            d += 1
        return True

    for n in range(1, 5000):
        assert arith.is_prime(n) == trial(n), n


def test_primality_flags():
    below, above = arith.primality(2**61 - 1), arith.primality(2**89 - 1)
    assert below == (True, True)
    assert above.is_prime and not above.proven
    # composite beyond 2^64 still gets a certain verdict
    assert arith.primality((2**89 - 1) * (2**61 - 1)) == (False, True)


def test_sigma_aliquot_known_values():
    assert arith.sigma(220) == 504
    assert arith.sigma(1) == 1
    assert arith.sigma(2620) == 5544
    assert arith.aliquot(220) == 284
    assert arith.aliquot(1) == 0
    assert arith.aliquot(12) == 16


def test_phi_known_values():
    assert arith.phi(2620) == 1040
    assert arith.phi(2924) == 1344
    assert arith.phi(2620) + arith.phi(2924) == 2384
    assert arith.phi(1) == 1
    assert arith.phi(26989290624832) == 13453729758720


def test_sigma_matches_enumeration_up_to_1e5():
    table = sigma_table_enum(10**5)
    for n in range(1, 10**5 + 1):
        s = arith.sigma(n)
        assert s == table[n]
        assert s == n + arith.aliquot(n)


def test_sigma_matches_paired_enumeration_spot():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randrange(1, 10**7)
        assert arith.sigma(n) == sigma_enum(n)


def test_phi_matches_coprime_count_up_to_2000():
    for n in range(1, 2001):
        assert arith.phi(n) == phi_count(n)


def test_sigma_phi_multiplicative_on_coprime_pairs():
    from math import gcd

    rng = random.Random(11)
    done = 0
    while done < 500:
        a = rng.randrange(2, 1000)
        b = rng.randrange(2, 1000)
        if gcd(a, b) != 1 or a * b > 10**6:
            continue
        assert arith.sigma(a * b) == arith.sigma(a) * arith.sigma(b)
        assert arith.phi(a * b) == arith.phi(a) * arith.phi(b)
        done += 1


def test_elementary_symmetric_known_values():
    assert arith.elementary_symmetric([17, 29, 47], 2) == 2655
    assert arith.elementary_symmetric([139, 181, 16600783], 2) == 5312275719
    a, b, c = 3, 11, 19
    assert arith.elementary_symmetric([a, b, c], 1) == a + b + c
    assert arith.elementary_symmetric([4, 5], 0) == 1
    assert arith.elementary_symmetric([], 0) == 1


def test_elementary_symmetric_rejects_bad_index():
    with pytest.raises(ValueError):
        arith.elementary_symmetric([2, 3], 3)
    with pytest.raises(ValueError):
        arith.elementary_symmetric([2, 3], -1)


def test_elementary_symmetric_against_subset_enumeration():
    rng = random.Random(3)
    for _ in range(200):
        vals = [rng.randrange(1, 500) for _ in range(rng.randrange(0, 7))]
        for k in range(len(vals) + 1):
            assert arith.elementary_symmetric(vals, k) == esym_subsets(vals, k)


def test_elementary_symmetric_newton_identities():
    # k*e_k = sum_{i=1..k} (-1)^(i-1) * e_(k-i) * p_i with p_i the power sums
    rng = random.Random(5)
    for _ in range(100):
        vals = [rng.randrange(1, 200) for _ in range(rng.randrange(1, 7))]
        power = [sum(v**i for v in vals) for i in range(len(vals) + 1)]
        for k in range(1, len(vals) + 1):
            acc = sum(
                (-1) ** (i - 1) * arith.elementary_symmetric(vals, k - i) * power[i]
                for i in range(1, k + 1)
            )
            assert k * arith.elementary_symmetric(vals, k) == acc


def test_two_adic_split():
    assert arith.two_adic_split(2620) == (2, 655)
    assert arith.two_adic_split(7) == (0, 7)
    assert arith.two_adic_split(185368) == (3, 23171)
    with pytest.raises(ValueError):
        arith.two_adic_split(0)
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randrange(1, 10**12)
        v, odd = arith.two_adic_split(n)
        assert odd % 2 == 1 and n == (1 << v) * odd
