"""Exact q-expansions with rational exponents and rational coefficients.

A FracQSeries is a truncated series sum c_e q^e where the exponents e are
rationals with a common denominator `den` and every coefficient with e < cutoff
is stored exactly.  Exponents may be negative (principal parts).
"""

from fractions import Fraction


class FracQSeries:

    def __init__(self, den, coeffs, cutoff):
        # coeffs maps integer numerators k to the coefficient of q^(k/den)
        if den <= 0:
            raise ValueError("den must be positive")
        self.den = den
        self.cutoff = Fraction(cutoff)
        self.coeffs = {}
        for k, c in coeffs.items():
            c = Fraction(c)
            if c != 0:
                if Fraction(k, den) >= self.cutoff:
                    continue
                self.coeffs[k] = c
        self._reduce_den()

    def _reduce_den(self):
        if self.den == 1:
            return
        from math import gcd
        g = self.den
        for k in self.coeffs:
            g = gcd(g, k)
            if g == 1:
                return
        if g > 1:
            self.coeffs = {k // g: c for k, c in self.coeffs.items()}
            self.den //= g

    @classmethod
    def zero(cls, cutoff):
        return cls(1, {}, cutoff)

    @classmethod
    def monomial(cls, e, c, cutoff):
        e = Fraction(e)
        return cls(e.denominator, {e.numerator: Fraction(c)}, cutoff)

    @classmethod
    def constant(cls, c, cutoff):
        return cls(1, {0: Fraction(c)}, cutoff)

    def lo(self):
        """Smallest exponent with a nonzero stored coefficient.

        For an identically-zero truncation this returns the cutoff, which is
        a valid lower bound for any terms the series may have.
        """
        if not self.coeffs:
            return self.cutoff
        return Fraction(min(self.coeffs), self.den)

    def coeff(self, e):
        e = Fraction(e)
        if e >= self.cutoff:
            raise ValueError(f"coefficient of q^{e} beyond cutoff {self.cutoff}")
        if self.den % e.denominator != 0:
            return Fraction(0)
        num = e.numerator * (self.den // e.denominator)
        return self.coeffs.get(num, Fraction(0))

    def terms(self):
        """Sorted list of (exponent, coefficient) pairs."""
        return [(Fraction(k, self.den), c) for k, c in sorted(self.coeffs.items())]

    def truncate(self, cutoff):
        cutoff = Fraction(cutoff)
        if cutoff > self.cutoff:
            raise ValueError("cannot extend a truncated series")
        return FracQSeries(self.den,
                           {k: c for k, c in self.coeffs.items()
                            if Fraction(k, self.den) < cutoff},
                           cutoff)

    def _common_den(self, other):
        from math import gcd
        den = self.den * other.den // gcd(self.den, other.den)
        a = {k * (den // self.den): c for k, c in self.coeffs.items()}
        b = {k * (den // other.den): c for k, c in other.coeffs.items()}
        return den, a, b

    def __add__(self, other):
        if not isinstance(other, FracQSeries):
            other = FracQSeries.constant(other, self.cutoff)
        den, a, b = self._common_den(other)
        for k, c in b.items():
            a[k] = a.get(k, Fraction(0)) + c
        return FracQSeries(den, a, min(self.cutoff, other.cutoff))

    __radd__ = __add__

    def __neg__(self):
        return FracQSeries(self.den, {k: -c for k, c in self.coeffs.items()},
                           self.cutoff)

    def __sub__(self, other):
        if not isinstance(other, FracQSeries):
            other = FracQSeries.constant(other, self.cutoff)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FracQSeries):
            c = Fraction(other)
            return FracQSeries(self.den, {k: c * v for k, v in self.coeffs.items()},
                               self.cutoff)
        den, a, b = self._common_den(other)
        lo_a = min(a) if a else self.cutoff * den
        lo_b = min(b) if b else other.cutoff * den
        cutoff = min(self.cutoff + Fraction(lo_b, den),
                     other.cutoff + Fraction(lo_a, den))
        bound = cutoff * den
        prod = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                if k >= bound:
                    continue
                prod[k] = prod.get(k, Fraction(0)) + ca * cb
        return FracQSeries(den, prod, cutoff)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        # binary powering; cutoff bookkeeping is handled by __mul__
        base = self
        result = None
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        if result is None:
            return FracQSeries.constant(1, self.cutoff)
        return result

    def inverse(self):
        """Multiplicative inverse, valid where enough terms are known."""
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero series")
        from math import ceil
        den = self.den
        lo_num = min(self.coeffs)
        nterms = ceil(self.cutoff * den) - lo_num
        # dense unit part a[0] + a[1] x + ... with x = q^(1/den)
        a = [Fraction(0)] * nterms
        for k, c in self.coeffs.items():
            a[k - lo_num] = c
        if a[0] == 0:
            raise ZeroDivisionError("leading coefficient vanished")
        inv0 = 1 / a[0]
        b = [Fraction(0)] * nterms
        b[0] = inv0
        for k in range(1, nterms):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if a[j] != 0 and b[k - j] != 0:
                    acc += a[j] * b[k - j]
            if acc != 0:
                b[k] = -inv0 * acc
        cutoff = Fraction(nterms - lo_num, den)
        return FracQSeries(den, {k - lo_num: b[k] for k in range(nterms) if b[k]},
                           cutoff)

    def subst_power(self, r):
        """Substitute q -> q^r for a positive integer r."""
        return FracQSeries(self.den, {k * r: c for k, c in self.coeffs.items()},
                           self.cutoff * r)

    def __eq__(self, other):
        if not isinstance(other, FracQSeries):
            return NotImplemented
        cutoff = min(self.cutoff, other.cutoff)
        den, a, b = self._common_den(other)
        bound = cutoff * den
        keys = {k for k in a if k < bound} | {k for k in b if k < bound}
        return all(a.get(k, 0) == b.get(k, 0) for k in keys)

    def __repr__(self):
        shown = self.terms()[:6]
        body = " + ".join(f"{c}*q^{e}" for e, c in shown)
        return f"FracQSeries({body or '0'} + O(q^{self.cutoff}))"


def euler_product(order):
    """prod_{n>=1} (1 - q^n) through q^order, by the pentagonal number sums."""
    coeffs = {0: Fraction(1)}
    k = 1
    while True:
        done = True
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if e <= order:
                coeffs[e] = Fraction(-1 if k % 2 else 1)
                done = False
        if done:
            break
        k += 1
    return FracQSeries(1, coeffs, order + 1)


def prod_one_plus(order, step=1):
    """prod_{n>=1} (1 + q^(n*step)) through q^order."""
    coeffs = {0: Fraction(1)}
    m = step
    while m <= order:
        for k in sorted(coeffs, reverse=True):
            t = k + m
            if t <= order:
                coeffs[t] = coeffs.get(t, Fraction(0)) + coeffs[k]
        m += step
    return FracQSeries(1, coeffs, order + 1)


def _divisor_power_sums(k, order):
    sums = [0] * (order + 1)
    for d in range(1, order + 1):
        dk = d ** k
        for n in range(d, order + 1, d):
            sums[n] += dk
    return sums


def e2_series(order):
    """Quasimodular Eisenstein series E2 = 1 - 24 sum sigma_1(n) q^n."""
    s = _divisor_power_sums(1, order)
    coeffs = {0: Fraction(1)}
    for n in range(1, order + 1):
        coeffs[n] = Fraction(-24 * s[n])
    return FracQSeries(1, coeffs, order + 1)


def e4_series(order):
    """Eisenstein series E4 = 1 + 240 sum sigma_3(n) q^n."""
    s = _divisor_power_sums(3, order)
    coeffs = {0: Fraction(1)}
    for n in range(1, order + 1):
        coeffs[n] = Fraction(240 * s[n])
    return FracQSeries(1, coeffs, order + 1)


def eta_series(order):
    """q^(1/24) prod (1 - q^n), keeping pentagonal terms q^(n + 1/24), n <= order."""
    p = euler_product(order)
    return FracQSeries(24, {24 * k + 1: c for k, c in p.coeffs.items()},
                       Fraction(24 * order + 2, 24))


def delta_series(order):
    """Discriminant form Delta = q prod (1 - q^n)^24 through q^order."""
    p = euler_product(order) ** 24
    return FracQSeries(1, {k + 1: c for k, c in p.coeffs.items() if k + 1 <= order},
                       order + 1)


def j_series(order):
    """The j-function q-expansion q^-1 + 744 + 196884 q + ... through q^order."""
    e4 = e4_series(order + 1)
    disc_over_q = euler_product(order + 1) ** 24
    jq = (e4 ** 3) * disc_over_q.inverse()
    return FracQSeries(1, {k - 1: c for k, c in jq.coeffs.items()}, order + 1)


def omega2_series(order):
    """The Hauptmodul 2^12 Delta(2z)/Delta(z) = 2^12 q prod (1 + q^n)^24."""
    p = prod_one_plus(order - 1) ** 24
    return FracQSeries(1, {k + 1: 4096 * c for k, c in p.coeffs.items()},
                       order + 1)


def eta_quotient_2_series(order):
    """eta(2z)/eta(z) = q^(1/24) prod (1 + q^n), through q^(order + 1/24)."""
    p = prod_one_plus(order)
    return FracQSeries(24, {24 * k + 1: c for k, c in p.coeffs.items()},
                       Fraction(24 * order + 2, 24))
