"""Arithmetic of the real quadratic field F = Q(sqrt(d1 d2)) and of the
biquadratic extension E = Q(sqrt(d1), sqrt(d2)), at the level needed for
counting ideals: Kronecker symbols, p-adic square roots, factorization of the
principal ideals (m + sqrt(D))/2, and the relative-norm counting function rho.

d1 and d2 are coprime fundamental discriminants of imaginary quadratic fields,
so D = d1 d2 is a fundamental discriminant of F and E/F is unramified.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import mpmath


def jacobi(a, n):
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a, n):
    """Kronecker symbol (a/n) for arbitrary integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    return result * jacobi(a, n)


def valuation(n, p):
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def factorize(n):
    """Trial-division factorization of |n| as a dict prime -> exponent."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out = {}
    for p in range(2, isqrt(n) + 1):
        if n % p == 0:
            v = 0
            while n % p == 0:
                n //= p
                v += 1
            out[p] = v
    if n > 1:
        out[n] = 1
    return out


def is_fundamental_discriminant(d):
    if d == 1 or d == 0:
        return False
    if d % 4 == 1:
        return _squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def _squarefree(n):
    n = abs(n)
    for p, e in factorize(n).items():
        if e > 1:
            return False
    return True


def tonelli(a, p):
    """A square root of a mod an odd prime p, or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, tmp = 0, t
        while tmp != 1:
            tmp = tmp * tmp % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r


def padic_sqrt(a, p, k):
    """The canonical square root of a modulo p^k.

    For odd p the branch is pinned by s = s0 (mod p) where s0 is the smaller
    of the two square roots mod p.  For p = 2 (which requires a = 1 mod 8)
    the branch is pinned by s = 1 (mod 4); the root is computed one bit past
    k so that the returned value is stable: padic_sqrt(a, p, k+1) reduces to
    padic_sqrt(a, p, k) modulo p^k.
    """
    if k < 1:
        raise ValueError("precision k must be >= 1")
    if p == 2:
        if a % 8 != 1:
            raise ValueError("2-adic square root needs a = 1 mod 8")
        s = 1
        for j in range(3, k + 2):
            if (s * s - a) % (1 << (j + 1)) != 0:
                s += 1 << (j - 1)
        return s % (1 << k)
    if a % p == 0:
        raise ValueError("a must be a unit mod p")
    r = tonelli(a, p)
    if r is None:
        raise ValueError(f"{a} is not a square mod {p}")
    s = min(r, p - r)
    pj = p
    while pj < p ** k:
        pj = pj * pj
        s = (s - (s * s - a) * pow(2 * s, -1, pj)) % pj
    return s % p ** k


@dataclass(frozen=True)
class RealQuadElem:
    """The element t = (m + sqrt(D))/2 of F = Q(sqrt(D))."""
    m: int
    D: int

    def __post_init__(self):
        if (self.m - self.D) % 2 != 0:
            raise ValueError("need m = D mod 2 for (m + sqrt(D))/2 integral")

    def norm(self):
        return (self.m * self.m - self.D) // 4

    def conj(self):
        return RealQuadElem(-self.m, self.D)


@dataclass(frozen=True, order=True)
class PrimeOfF:
    """A prime ideal of F above p.

    kind is 'split', 'inert' or 'ramified'; for split primes branch = +1 / -1
    selects the embedding in which sqrt(D) maps to the canonical p-adic root
    (resp. its negative).
    """
    p: int
    kind: str
    branch: int = 0

    def residue_degree(self):
        return 2 if self.kind == "inert" else 1

    def ideal_norm(self):
        return self.p ** self.residue_degree()

    def root(self, D, k):
        if self.kind != "split":
            raise ValueError("root branch only meaningful for split primes")
        s = padic_sqrt(D, self.p, k)
        return s if self.branch == 1 else (self.p ** k - s) % self.p ** k


def primes_of_F_above(p, D):
    """The primes of F = Q(sqrt(D)) above the rational prime p."""
    chi = kronecker(D, p)
    if chi == 1:
        return (PrimeOfF(p, "split", 1), PrimeOfF(p, "split", -1))
    if chi == -1:
        return (PrimeOfF(p, "inert"),)
    return (PrimeOfF(p, "ramified"),)


def splitting_in_E_over_F(P, d1, d2):
    """'split' or 'inert': behaviour of the prime P of F in E = F(sqrt(d1)).

    E/F is unramified since gcd(d1, d2) = 1, so these are the only cases.
    """
    p = P.p
    chi1, chi2 = kronecker(d1, p), kronecker(d2, p)
    if chi1 == 0:
        return "split" if chi2 == 1 else "inert"
    if chi2 == 0:
        return "split" if chi1 == 1 else "inert"
    if chi1 == 1 and chi2 == 1:
        return "split"
    if chi1 == -1 and chi2 == -1:
        return "inert"
    # mixed characters: p is inert in F and its prime splits in E
    return "split"


def chi_EF(P, d1, d2):
    """Value of the quadratic character of E/F at an (unramified) prime P."""
    return 1 if splitting_in_E_over_F(P, d1, d2) == "split" else -1


def factor_principal_ideal(t, d1, d2):
    """Factor the principal ideal t O_F as a dict PrimeOfF -> exponent.

    t must have nonzero norm.  For split p the valuations at the two branches
    are separated with the canonical p-adic root of D; exponents at primes
    not dividing t O_F are omitted.
    """
    D = d1 * d2
    if t.D != D:
        raise ValueError("element lives in a different field")
    n = t.norm()
    if n == 0:
        raise ValueError("t must have nonzero norm")
    fact = {}
    for p, v in factorize(n).items():
        primes = primes_of_F_above(p, D)
        if len(primes) == 1 and primes[0].kind == "inert":
            if v % 2 != 0:
                raise ArithmeticError("odd valuation at an inert prime")
            fact[primes[0]] = v // 2
        elif len(primes) == 1:
            fact[primes[0]] = v
        else:
            k = v + 2
            s = padic_sqrt(D, p, k)
            pk = p ** k
            # ord at the branch where sqrt(D) -> s is v_p((m + s)/2); the /2
            # costs one bit of certainty when p = 2
            cap = k - 1 if p == 2 else k
            vals = []
            for root in (s, pk - s):
                num = (t.m + root) % pk
                w = k if num == 0 else valuation(num, p)
                if p == 2:
                    w -= 1
                vals.append(w)
            vp, vm = vals
            if vp >= cap and vm >= cap:
                raise ArithmeticError("p-adic precision loss")
            if vp >= cap:
                vp = v - vm
            elif vm >= cap:
                vm = v - vp
            if vp + vm != v:
                raise ArithmeticError("split valuations do not add up")
            if vp:
                fact[PrimeOfF(p, "split", 1)] = vp
            if vm:
                fact[PrimeOfF(p, "split", -1)] = vm
    return fact


def rho(fact, d1, d2):
    """Number of integral ideals of E whose relative norm to F is the ideal
    with factorization `fact` (a dict PrimeOfF -> exponent, possibly with
    negative entries meaning the ideal is not integral, hence count 0)."""
    count = 1
    for P, e in fact.items():
        if e < 0:
            return 0
        if e == 0:
            continue
        if splitting_in_E_over_F(P, d1, d2) == "split":
            count *= e + 1
        else:
            if e % 2 != 0:
                return 0
    return count


def diff_set(t, d1, d2):
    """Primes of F inert in E/F at which t O_F has odd valuation."""
    fact = factor_principal_ideal(t, d1, d2)
    out = [P for P, e in fact.items()
           if e % 2 == 1 and splitting_in_E_over_F(P, d1, d2) == "inert"]
    return sorted(out)


class PrimeLog:
    """A finite formal sum of terms e_p * log(p) with exact rational e_p."""

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for p, e in terms.items():
                self.add(p, e)

    def add(self, p, e):
        e = Fraction(e)
        cur = self.terms.get(p, Fraction(0)) + e
        if cur == 0:
            self.terms.pop(p, None)
        else:
            self.terms[p] = cur

    def __add__(self, other):
        out = PrimeLog(self.terms)
        for p, e in other.terms.items():
            out.add(p, e)
        return out

    def scale(self, c):
        c = Fraction(c)
        return PrimeLog({p: e * c for p, e in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PrimeLog) and self.terms == other.terms

    def exponents(self):
        return dict(sorted(self.terms.items()))

    def max_prime(self):
        return max(self.terms) if self.terms else None

    def value(self, prec):
        with mpmath.workprec(prec):
            total = mpmath.mpf(0)
            for p, e in self.terms.items():
                total += mpmath.mpf(e.numerator) / e.denominator * mpmath.log(p)
            return +total

    def __repr__(self):
        body = " + ".join(f"{e}*log({p})" for p, e in sorted(self.terms.items()))
        return f"PrimeLog({body or '0'})"
