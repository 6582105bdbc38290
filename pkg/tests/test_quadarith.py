"""Quadratic field arithmetic: symbols, p-adic roots, ideal factorization,
splitting in the biquadratic extension, and the norm-counting function."""

import random
from fractions import Fraction

import pytest

from cmfactor.quadarith import (jacobi, kronecker, valuation, factorize,
                                is_fundamental_discriminant, padic_sqrt,
                                RealQuadElem, PrimeOfF, primes_of_F_above,
                                splitting_in_E_over_F, factor_principal_ideal,
                                rho, diff_set, PrimeLog)

PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_kronecker_odd_primes_euler_criterion():
    for p in PRIMES:
        for a in range(-2 * p, 2 * p):
            euler = pow(a, (p - 1) // 2, p)
            want = 0 if a % p == 0 else (1 if euler == 1 else -1)
            assert kronecker(a, p) == want, (a, p)


def test_kronecker_at_two_mod_8_rule():
    for a in range(-40, 40):
        if a % 2 == 0:
            assert kronecker(a, 2) == 0
        elif a % 8 in (1, 7):
            assert kronecker(a, 2) == 1
        else:
            assert kronecker(a, 2) == -1


def test_kronecker_multiplicative():
    random.seed(3)
    for _ in range(200):
        a, b = random.randint(-50, 50), random.randint(-50, 50)
        n = random.randint(1, 60)
        assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)


def test_jacobi_rejects_even_modulus():
    with pytest.raises(ValueError):
        jacobi(3, 10)


def test_fundamental_discriminants():
    assert [d for d in range(-24, 0) if is_fundamental_discriminant(d)] == \
        [-24, -23, -20, -19, -15, -11, -8, -7, -4, -3]


def test_padic_sqrt_example_and_canonical_branch():
    assert padic_sqrt(489, 2, 6) == 45
    for p in (3, 7, 11, 13):
        squares = sorted({x * x % p for x in range(1, p)})
        a = squares[len(squares) // 2]
        s = padic_sqrt(a, p, 5)
        assert s * s % p ** 5 == a % p ** 5
        r = min(x for x in range(1, p) if x * x % p == a % p)
        assert s % p == r


def test_padic_sqrt_stability():
    for a, p in [(489, 2), (17, 2), (105, 2), (7, 3), (13, 3), (6, 5)]:
        if kronecker(a, p) != 1 and p != 2:
            continue
        if p == 2 and a % 8 != 1:
            continue
        for k in range(2, 8):
            assert padic_sqrt(a, p, k + 1) % p ** k == padic_sqrt(a, p, k)


def test_padic_sqrt_exhaustive_oracle():
    p, k, a = 7, 3, 2  # 2 = 3^2 mod 7
    roots = [x for x in range(p ** k) if x * x % p ** k == a]
    assert padic_sqrt(a, p, k) in roots


def test_padic_sqrt_domain_errors():
    with pytest.raises(ValueError):
        padic_sqrt(3, 2, 4)   # 3 != 1 mod 8
    with pytest.raises(ValueError):
        padic_sqrt(3, 5, 4)   # non-residue


def test_primes_of_F_above_kinds():
    D = 489  # = (-3)(-163), 489 = 1 mod 8
    (p1, p2) = primes_of_F_above(2, D)
    assert {p1.kind, p2.kind} == {"split"} and {p1.branch, p2.branch} == {1, -1}
    (q,) = primes_of_F_above(3, D)
    assert q.kind == "ramified"
    assert primes_of_F_above(7, D)[0].kind == ("split" if kronecker(489, 7) == 1
                                               else "inert")


def frobenius_splitting_oracle(p, d1, d2):
    """Decomposition-subgroup computation in Gal(E/Q) = (Z/2)^2, valid for
    p not dividing d1 d2: the prime of F is split in E iff the residue
    degree over F, |<Frob> meet Gal(E/F)|, is 1."""
    frob = (kronecker(d1, p), kronecker(d2, p))
    dec = {(1, 1), frob}
    gal_EF = {(1, 1), (-1, -1)}
    return "split" if len(dec & gal_EF) == 1 else "inert"


def test_splitting_in_E_over_F_against_frobenius_oracle():
    pairs = [(-3, -163), (-4, -163), (-7, -15), (-15, -23), (-7, -31),
             (-8, -31), (-11, -56)]
    for d1, d2 in pairs:
        D = d1 * d2
        for p in PRIMES + [61, 67, 71, 73]:
            if D % p == 0:
                continue
            for P in primes_of_F_above(p, D):
                assert splitting_in_E_over_F(P, d1, d2) == \
                    frobenius_splitting_oracle(p, d1, d2), (d1, d2, p)


def test_splitting_at_ramified_primes_from_anchor_data():
    # (-4, -163): 2 ramifies in Q(i); kronecker(-163, 2) = -1 so inert in E/F
    (P2,) = primes_of_F_above(2, -4 * -163)
    assert P2.kind == "ramified"
    assert splitting_in_E_over_F(P2, -4, -163) == "inert"
    # 163 ramified; kronecker(-4, 163) = -1 since 163 = 3 mod 4
    (P163,) = primes_of_F_above(163, -4 * -163)
    assert splitting_in_E_over_F(P163, -4, -163) == "inert"
    # (-3, -163): 3 ramified, kronecker(-163, 3) = kronecker(2, 3) = -1
    (P3,) = primes_of_F_above(3, -3 * -163)
    assert splitting_in_E_over_F(P3, -3, -163) == "inert"


def test_factor_principal_ideal_example():
    d1, d2 = -3, -163
    t = RealQuadElem(21, 489)  # norm (441 - 489)/4 = -12
    fact = factor_principal_ideal(t, d1, d2)
    by_p = {(P.p, P.kind): e for P, e in fact.items()}
    assert by_p == {(2, "split"): 2, (3, "ramified"): 1}


def test_factor_norm_consistency_and_conjugation():
    random.seed(11)
    for d1, d2 in [(-3, -163), (-7, -15), (-4, -43), (-8, -23)]:
        D = d1 * d2
        for _ in range(25):
            m = random.randrange(-40, 40)
            if (m - D) % 2:
                m += 1
            t = RealQuadElem(m, D)
            if t.norm() == 0:
                continue
            fact = factor_principal_ideal(t, d1, d2)
            n = 1
            for P, e in fact.items():
                n *= P.ideal_norm() ** e
            assert n == abs(t.norm())
            conj = factor_principal_ideal(t.conj(), d1, d2)
            for P, e in fact.items():
                mirror = (PrimeOfF(P.p, P.kind, -P.branch)
                          if P.kind == "split" else P)
                assert conj.get(mirror, 0) == e


def count_ideals_oracle(fact, d1, d2):
    """Enumerate exponent vectors of the primes of E above each prime of F
    and count those whose relative norm matches; the splitting data comes
    from the Frobenius oracle where applicable."""
    total = 1
    for P, e in fact.items():
        if e < 0:
            return 0
        if P.p * P.p > abs(d1 * d2) or (d1 * d2) % P.p != 0:
            kind = (frobenius_splitting_oracle(P.p, d1, d2)
                    if (d1 * d2) % P.p else splitting_in_E_over_F(P, d1, d2))
        else:
            kind = splitting_in_E_over_F(P, d1, d2)
        if kind == "split":
            ways = len([(x, y) for x in range(e + 1) for y in range(e + 1)
                        if x + y == e])
        else:
            ways = len([x for x in range(e + 1) if 2 * x == e])
        total *= ways
    return total


def test_rho_against_enumeration_oracle():
    for d1, d2 in [(-3, -163), (-7, -15), (-7, -23), (-4, -43)]:
        D = d1 * d2
        for m in range(-44, 45):
            if (m - D) % 2:
                continue
            t = RealQuadElem(m, D)
            if t.norm() == 0 or abs(t.norm()) > 500:
                continue
            fact = factor_principal_ideal(t, d1, d2)
            assert rho(fact, d1, d2) == count_ideals_oracle(fact, d1, d2)


def test_rho_multiplicative_rules():
    d1, d2 = -7, -15
    P5 = primes_of_F_above(5, 105)[0]      # ramified, split in E/F? chi(-7,5)=-1
    assert splitting_in_E_over_F(P5, d1, d2) == "inert"
    P2 = primes_of_F_above(2, 105)[0]
    assert splitting_in_E_over_F(P2, d1, d2) == "split"
    assert rho({P5: 2, P2: 3}, d1, d2) == 4
    assert rho({P5: 1}, d1, d2) == 0
    assert rho({P2: -1}, d1, d2) == 0
    assert rho({}, d1, d2) == 1


@pytest.mark.parametrize("d1,d2", [(-3, -7), (-7, -15), (-7, -23),
                                   (-3, -163), (-7, -163)])
def test_diff_set_has_odd_size(d1, d2):
    D = d1 * d2
    assert D in (21, 105, 161, 489, 1141)
    from math import isqrt
    for m in range(-isqrt(D - 1), isqrt(D - 1) + 1):
        if (m - D) % 2:
            continue
        t = RealQuadElem(m, D)
        assert len(diff_set(t, d1, d2)) % 2 == 1, (D, m)


def test_primelog_algebra():
    a = PrimeLog({2: 3, 3: Fraction(1, 2)})
    b = PrimeLog({3: Fraction(-1, 2), 5: 1})
    s = a + b
    assert s.exponents() == {2: 3, 5: 1}
    assert s.scale(2).exponents() == {2: 6, 5: 2}
    assert s.max_prime() == 5
    import mpmath
    with mpmath.workprec(80):
        want = 3 * mpmath.log(2) + mpmath.log(5)
        assert abs(s.value(80) - want) < mpmath.mpf(2) ** -70
