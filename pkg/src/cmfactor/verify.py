"""End-to-end verification: evaluate both sides of each CM value formula at
working precision, recognize the analytic side as an integer, factor it, and
compare exponent-by-exponent with the arithmetic side; plus exact checks of
the underlying Borcherds product identities.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, log, pi

import mpmath

from . import numeric
from .classgroup import (reduced_forms, heegner_point, units_w,
                         odd_norm_representative)
from .quadarith import PrimeLog, valuation
from .arithside import (gz_rhs, yz_rhs, check_gz_hypotheses,
                        check_yz_hypotheses)

MAX_RETRIES = 3


@dataclass
class VerificationReport:
    kind: str
    d1: int
    d2: int
    prec: int
    status: str                  # ok | mismatch | precision
    lhs_log: object = None       # mpf
    rhs_log: object = None       # mpf
    residual: object = None      # mpf
    product_integer: object = None
    factorization: dict = field(default_factory=dict)
    rhs_exponents: dict = field(default_factory=dict)
    factor_match: bool = False
    resultant_match: bool = None
    notes: list = field(default_factory=list)

    def ok(self):
        return self.status == "ok"


def auto_prec(d1, d2):
    """Default working precision in bits, scaled by the number of class
    pairs and the largest CM point height."""
    h1 = len(reduced_forms(d1))
    h2 = len(reduced_forms(d2))
    per_pair = pi * max(abs(d1), abs(d2)) ** 0.5 / log(2)
    return 64 + ceil(1.2 * h1 * h2 * per_pair)


def _trial_factor(n, bound):
    """Factor |n| by primes <= bound; returns (exponents, leftover)."""
    n = abs(n)
    out = {}
    for p in range(2, bound + 1):
        if n == 1:
            break
        if n % p == 0:
            v = 0
            while n % p == 0:
                n //= p
                v += 1
            out[p] = v
    return out, n


def _sylvester_resultant(f, g):
    """Exact resultant of integer polynomials (leading coefficient first),
    via fraction-free Gaussian elimination of the Sylvester matrix."""
    m, n = len(f) - 1, len(g) - 1
    if m == 0 and n == 0:
        return 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(f) + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g) + [0] * (m - 1 - i))
    rows = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor == 0:
                continue
            for c in range(col, size):
                rows[r][c] -= factor * rows[col][c]
    assert det.denominator == 1
    return det.numerator


def gz_verify(d1, d2, prec=None):
    """Verify the singular moduli factorization for coprime fundamental
    discriminants d1, d2."""
    check_gz_hypotheses(d1, d2)
    if prec is None:
        prec = auto_prec(d1, d2)
    D = d1 * d2
    rhs = gz_rhs(d1, d2)
    scale = Fraction(8, units_w(d1) * units_w(d2))
    report = VerificationReport(kind="gz", d1=d1, d2=d2, prec=prec,
                                status="precision",
                                rhs_exponents=rhs.exponents())

    for attempt in range(MAX_RETRIES + 1):
        with mpmath.workprec(prec + 32):
            js1 = [numeric.eval_j(heegner_point(f, d1), prec)
                   for f in reduced_forms(d1)]
            js2 = [numeric.eval_j(heegner_point(f, d2), prec)
                   for f in reduced_forms(d2)]
            product = mpmath.mpc(1)
            logsum = mpmath.mpf(0)
            for j2 in js2:
                for j1 in js1:
                    diff = j2 - j1
                    product *= diff
                    logsum += mpmath.log(abs(diff))
            rec = numeric.recognize_integer(product)
        if rec is not None:
            break
        prec *= 2
        report.notes.append(f"retry at {prec} bits")
    else:
        report.prec = prec
        return report

    n, _ = rec
    report.prec = prec
    report.product_integer = n
    bound = max(D // 4, 3)
    fact, leftover = _trial_factor(n, bound)
    report.factorization = fact
    if leftover != 1:
        report.notes.append(f"prime {leftover} beyond bound {bound}")
    report.factor_match = (leftover == 1 and
                           {p: Fraction(e) * scale for p, e in fact.items()}
                           == rhs.exponents())

    h1, h2 = len(js1), len(js2)
    res = _sylvester_resultant(numeric.class_polynomial(d1),
                               numeric.class_polynomial(d2))
    report.resultant_match = (res == (-1) ** (h1 * h2) * n)

    with mpmath.workprec(prec + 32):
        lhs_log = mpmath.mpf(scale.numerator) / scale.denominator * logsum
        rhs_log = rhs.value(prec + 32)
        residual = abs(lhs_log - rhs_log)
    report.lhs_log = lhs_log
    report.rhs_log = rhs_log
    report.residual = residual
    tight = residual < mpmath.mpf(2) ** (-(prec // 4))
    report.status = ("ok" if report.factor_match and report.resultant_match
                     and tight else "mismatch")
    return report


def yz_verify(d1, d2, prec=None):
    """Verify the level-2 Hauptmodul factorization for distinct coprime
    fundamental discriminants d1 = d2 = 1 mod 8."""
    check_yz_hypotheses(d1, d2)
    if prec is None:
        prec = auto_prec(d1, d2)
    D = d1 * d2
    rhs = yz_rhs(d1, d2)
    report = VerificationReport(kind="yz", d1=d1, d2=d2, prec=prec,
                                status="precision",
                                rhs_exponents=rhs.exponents())

    def points(d):
        return [odd_norm_representative(f, d)[0] for f in reduced_forms(d)]

    for attempt in range(MAX_RETRIES + 1):
        with mpmath.workprec(prec + 32):
            ws1 = [numeric.eval_omega2(heegner_point(f, d1), prec)
                   for f in points(d1)]
            ws2 = [numeric.eval_omega2(heegner_point(f, d2), prec)
                   for f in points(d2)]
            product = mpmath.mpc(1)
            logsum = mpmath.mpf(0)
            for w2 in ws2:
                for w1 in ws1:
                    diff = w2 - w1
                    product *= diff
                    logsum += mpmath.log(abs(diff))
            rec = numeric.recognize_integer(product)
        if rec is not None:
            break
        prec *= 2
        report.notes.append(f"retry at {prec} bits")
    else:
        report.prec = prec
        return report

    n, _ = rec
    report.prec = prec
    report.product_integer = n
    bound = max(D // 16, 3)
    fact, leftover = _trial_factor(n, bound)
    report.factorization = fact
    if leftover != 1:
        report.notes.append(f"prime {leftover} beyond bound {bound}")
    # the formula computes log |prod|^2, so doubled exponents must agree
    report.factor_match = (leftover == 1 and
                           {p: Fraction(2 * e) for p, e in fact.items()}
                           == rhs.exponents())
    with mpmath.workprec(prec + 32):
        lhs_log = 2 * logsum
        rhs_log = rhs.value(prec + 32)
        residual = abs(lhs_log - rhs_log)
    report.lhs_log = lhs_log
    report.rhs_log = rhs_log
    report.residual = residual
    tight = residual < mpmath.mpf(2) ** (-(prec // 4))
    report.status = "ok" if report.factor_match and tight else "mismatch"
    return report


def borcherds_verify(case, n1=8, n2=8):
    """Exact series verification of a Borcherds product identity through the
    box q1^n1 q2^n2.  Cases: weber, j, eta1, eta2, f2.  Returns (ok, detail).
    """
    from .series import (j_series, omega2_series, eta_series,
                         eta_quotient_2_series)
    from .discform import build_weber_f, constant_vvform
    from .borcherds import (product_expansion_level2, product_expansion_j,
                            bi_difference, bi_product)

    if case == "weber":
        order = (n1 + 1) * (n1 + n2 + 2) + 1
        f = build_weber_f(order)
        prod = product_expansion_level2(f, -2 ** 12, n1, n2)
        return prod.compare(bi_difference(omega2_series(max(n1, n2) + 1), n1, n2))
    if case == "j":
        order = (n1 + 2) * (n1 + n2 + 3) + 1
        prod = product_expansion_j(j_series(order) - 744, n1, n2)
        return prod.compare(bi_difference(j_series(max(n1, n2) + 1), n1, n2))
    if case == "eta1":
        f = constant_vvform({"mu0": 1, "mu1": 1}, cutoff=(n1 + 1) * (n1 + n2 + 2) + 1)
        prod = product_expansion_level2(f, 1, n1, n2)
        e = eta_series(max(n1, n2) + 1)
        return prod.compare(bi_product(e, e, n1, n2))
    if case == "eta2":
        # the Borcherds constant is sqrt(2); both sides are compared with it
        # divided out, which leaves exact rational series
        f = constant_vvform({"mu0": 1, "mu2": 1}, cutoff=(n1 + 1) * (n1 + n2 + 2) + 1)
        prod = product_expansion_level2(f, 1, n1, n2)
        e2 = eta_series(2 * max(n1, n2) + 2).subst_power(2)
        return prod.compare(bi_product(e2, e2, n1, n2))
    if case == "f2":
        # identity: sqrt(2) * product = (1/sqrt(2)) f2(z1) f2(z2), i.e.
        # product = (eta(2 z1)/eta(z1)) (eta(2 z2)/eta(z2))
        f = constant_vvform({"mu1": -1, "mu2": 1}, cutoff=(n1 + 1) * (n1 + n2 + 2) + 1)
        prod = product_expansion_level2(f, 1, n1, n2)
        eq = eta_quotient_2_series(max(n1, n2) + 1)
        return prod.compare(bi_product(eq, eq, n1, n2))
    raise ValueError(f"unknown case {case!r}")
