"""The arithmetic (prime factorization) sides of the CM value formulas.

Both formulas are finite double sums over totally-indefinite trace elements
t = (m + sqrt(D))/2 of F = Q(sqrt(d1 d2)) with |m| < sqrt(D), and over primes
of F inert in E = Q(sqrt(d1), sqrt(d2)); each term contributes a rational
multiple of log N(p), collected here into exact PrimeLog sums.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .quadarith import (RealQuadElem, PrimeLog, factor_principal_ideal,
                        primes_of_F_above, splitting_in_E_over_F, rho,
                        is_fundamental_discriminant, kronecker)
from math import gcd


def check_gz_hypotheses(d1, d2):
    for d in (d1, d2):
        if d >= 0 or not is_fundamental_discriminant(d):
            raise ValueError(f"{d} is not a negative fundamental discriminant")
    if gcd(d1, d2) != 1:
        raise ValueError("discriminants must be coprime")


def check_yz_hypotheses(d1, d2):
    check_gz_hypotheses(d1, d2)
    if d1 % 8 != 1 or d2 % 8 != 1:
        raise ValueError("both discriminants must be 1 mod 8")
    if d1 == d2:
        raise ValueError("discriminants must be distinct")


@dataclass(frozen=True)
class WhittakerValue:
    """Normalized local Whittaker datum at s=0: the value, and the
    derivative coefficient as a multiple of log N(p)."""
    value: Fraction
    deriv_coeff: Fraction
    s_form: str


def whittaker_good(kind, e):
    """Normalized Whittaker value/derivative at a prime of F unramified in
    E/F ('split' or 'inert' in E/F) with ord_p(t O_F) = e >= 0."""
    if e < 0:
        raise ValueError("ord must be nonnegative")
    if kind == "split":
        return WhittakerValue(value=Fraction(1 + e), deriv_coeff=Fraction(0),
                              s_form=f"sum_{{n=0}}^{{{e}}} X^n at X=1")
    if kind == "inert":
        value = Fraction(1 + (-1) ** e, 2)
        deriv = Fraction(1 + e, 2) if e % 2 else Fraction(0)
        return WhittakerValue(value=value, deriv_coeff=deriv,
                              s_form=f"sum_{{n=0}}^{{{e}}} (-X)^n at X=1")
    raise ValueError("kind must be 'split' or 'inert'")


def whittaker2_Ma(a, o, s):
    """Value at s of the normalized 2-adic Whittaker function attached to
    the parity-a section, for ord_2(t) = o (o < 0 means t not integral,
    value 0).  Exact, so s must make 2^-s rational (an integer s)."""
    if a not in (0, 1):
        raise ValueError("a must be 0 or 1")
    s = Fraction(s)
    if s.denominator != 1:
        raise ValueError("exact evaluation needs an integer s")
    x = Fraction(2) ** (-int(s))
    if o < 0:
        return Fraction(0)
    if a == 0:
        if o == 0:
            return Fraction(1, 2)
        return Fraction(1, 2) - x + (1 - x / 2) * sum(x ** n for n in range(1, o + 1))
    if o == 0:
        return (1 - x) / 2
    return (1 + x) / 2


def whittaker2_shifted(a, t):
    """Value of the shifted-section 2-adic Whittaker function: 1/2 when
    t - (1+2a)/4 is a 2-adic integer, else 0 (constant in s)."""
    if a not in (0, 1):
        raise ValueError("a must be 0 or 1")
    shift = Fraction(t) - Fraction(1 + 2 * a, 4)
    return Fraction(1, 2) if shift.denominator % 2 == 1 else Fraction(0)


def t_range(d1, d2):
    """The elements t = (m + sqrt(D))/2 with |m| < sqrt(D), m = D mod 2."""
    D = d1 * d2
    bound = isqrt(D - 1)
    out = []
    for m in range(-bound, bound + 1):
        if (m - D) % 2 == 0:
            out.append(RealQuadElem(m, D))
    return out


def _diff_primes(fact, d1, d2):
    return [(P, e) for P, e in fact.items()
            if e % 2 == 1 and splitting_in_E_over_F(P, d1, d2) == "inert"]


def gz_rhs(d1, d2):
    """Arithmetic side of the singular moduli factorization: the exact
    PrimeLog equal to sum over classes of log |j(tau1) - j(tau2)|^(8/(w1 w2)).
    """
    check_gz_hypotheses(d1, d2)
    total = PrimeLog()
    for t in t_range(d1, d2):
        fact = factor_principal_ideal(t, d1, d2)
        diff = _diff_primes(fact, d1, d2)
        if len(diff) != 1:
            continue
        P, e = diff[0]
        red = dict(fact)
        red[P] = e - 1
        r = rho(red, d1, d2)
        if r:
            total.add(P.p, Fraction(1 + e, 2) * r * P.residue_degree())
    return total


def p_t_of(t, d1, d2):
    """The unique prime of F above 2 at which t has positive valuation,
    together with that valuation.  Needs d1 = d2 = 1 mod 8 and 2 | N(t)."""
    D = d1 * d2
    if D % 8 != 1:
        raise ValueError("2 must split in F")
    fact = factor_principal_ideal(t, d1, d2)
    above2 = [(P, e) for P, e in fact.items() if P.p == 2 and e > 0]
    if len(above2) != 1:
        raise ArithmeticError("expected exactly one prime above 2 dividing t")
    return above2[0]


def yz_rhs(d1, d2):
    """Arithmetic side of the level-2 Hauptmodul factorization: the exact
    PrimeLog equal to sum over classes of log |omega2(tau1) - omega2(tau2)|^2.
    """
    check_yz_hypotheses(d1, d2)
    D = d1 * d2
    total = PrimeLog()
    for t in t_range(d1, d2):
        if t.m % 2 == 0 or (t.m * t.m - D) % 16 != 0:
            continue
        fact = factor_principal_ideal(t, d1, d2)
        Pt, _ = p_t_of(t, d1, d2)
        diff = _diff_primes(fact, d1, d2)
        if len(diff) != 1:
            continue
        P, e = diff[0]
        red = dict(fact)
        red[P] = e - 1
        red[Pt] = red.get(Pt, 0) - 2
        r = rho(red, d1, d2)
        if r:
            total.add(P.p, Fraction(1 + e, 2) * r * P.residue_degree())
    return total


def yz_rhs_whittaker(d1, d2):
    """Independent route to yz_rhs through the 2-adic Whittaker values:
    each term is (1 + ord)/2 * rho-away-from-2 * 4 W(phi_0) W(phi_0),
    with the parity-1 channel vanishing identically."""
    check_yz_hypotheses(d1, d2)
    total = PrimeLog()
    for t in t_range(d1, d2):
        if t.m % 2 == 0:
            continue
        fact = factor_principal_ideal(t, d1, d2)
        diff = _diff_primes(fact, d1, d2)
        if len(diff) != 1:
            continue
        P, e = diff[0]
        if P.p == 2:
            raise ArithmeticError("primes above 2 split in E/F here")
        ords2 = {1: 0, -1: 0}
        for Q, eq in fact.items():
            if Q.p == 2:
                ords2[Q.branch] = eq
        # L(1, chi) = 2 at each place above 2 turns W into W*, hence the 4
        w2 = 4 * whittaker2_Ma(0, ords2[1], 0) * whittaker2_Ma(0, ords2[-1], 0)
        w2_odd = 4 * whittaker2_Ma(1, ords2[1], 0) * whittaker2_Ma(1, ords2[-1], 0)
        if w2_odd != 0:
            raise ArithmeticError("parity-1 channel should vanish")
        red = {Q: eq for Q, eq in fact.items() if Q.p != 2}
        red[P] = e - 1
        r = rho(red, d1, d2)
        contrib = Fraction(1 + e, 2) * r * w2 * P.residue_degree()
        if contrib:
            total.add(P.p, contrib)
    return total


def chi_log_identity(t, d1, d2):
    """Both sides of the divisor-sum identity
    sum_{a | t O_F} chi_{E/F}(a) log N(a)
      = - sum_{p inert in E/F} (1 + ord_p(t))/2 rho(t p^-1) log N(p),
    as a pair of PrimeLogs."""
    fact = factor_principal_ideal(t, d1, d2)
    chi = {P: (1 if splitting_in_E_over_F(P, d1, d2) == "split" else -1)
           for P in fact}
    lhs = PrimeLog()
    for P, e in fact.items():
        # sum over divisors factors: sum_a chi(a) a_P = S1(P) prod_{Q!=P} S0(Q)
        s1 = sum(chi[P] ** a * a for a in range(e + 1))
        other = 1
        for Q, eq in fact.items():
            if Q is P or Q == P:
                continue
            other *= sum(chi[Q] ** a for a in range(eq + 1))
        lhs.add(P.p, Fraction(s1 * other * P.residue_degree()))
    rhs = PrimeLog()
    for P, e in fact.items():
        if chi[P] != -1:
            continue
        red = dict(fact)
        red[P] = e - 1
        r = rho(red, d1, d2)
        if r:
            rhs.add(P.p, -Fraction(1 + e, 2) * r * P.residue_degree())
    return lhs, rhs
