"""Arbitrary-precision evaluation of eta, j, and the level-2 Hauptmodul.

All evaluators take a point in the upper half plane and a working precision in
bits, and are accurate to roughly that precision relative to the natural scale
of the function (guard bits are added internally).
"""

from functools import lru_cache
from math import ceil, log

import mpmath

GUARD_BITS = 64


def _to_mpc(tau):
    tau = mpmath.mpmathify(tau)
    if mpmath.im(tau) <= 0:
        raise ValueError("tau must lie in the upper half plane")
    return tau


def _series_order(tau, prec):
    """Number of q-powers needed so the tail is below 2^-(prec+16)."""
    y = float(mpmath.im(tau))
    return max(8, ceil((prec + 16) * log(2) / (2 * 3.14159265 * y)) + 8)


@lru_cache(maxsize=None)
def _sigma3_table(order):
    sums = [0] * (order + 1)
    for d in range(1, order + 1):
        dk = d ** 3
        for n in range(d, order + 1, d):
            sums[n] += dk
    return tuple(sums)


def _eta_raw(tau, order):
    """eta(tau) via the pentagonal number expansion, at current precision."""
    q = mpmath.expjpi(2 * tau)
    total = mpmath.mpc(1)
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 > order:
            break
        sign = -1 if k % 2 else 1
        term = q ** e1
        if e2 <= order:
            term = term + q ** e2
        total += sign * term
        k += 1
    return mpmath.expjpi(tau / 12) * total


def eval_eta(tau, prec):
    tau = _to_mpc(tau)
    with mpmath.workprec(prec + GUARD_BITS):
        val = _eta_raw(tau, _series_order(tau, prec))
        return +mpmath.mpc(val)


def eval_j(tau, prec):
    """Klein j-invariant via E4^3 / Delta."""
    tau = _to_mpc(tau)
    with mpmath.workprec(prec + GUARD_BITS):
        order = _series_order(tau, prec)
        q = mpmath.expjpi(2 * tau)
        sig = _sigma3_table(order)
        qp = mpmath.mpc(1)
        e4 = mpmath.mpc(1)
        for n in range(1, order + 1):
            qp *= q
            e4 += 240 * sig[n] * qp
        delta = _eta_raw(tau, order) ** 24
        return +(e4 ** 3 / delta)


def eval_omega2(tau, prec):
    """Level-2 Hauptmodul 2^12 Delta(2 tau)/Delta(tau)."""
    tau = _to_mpc(tau)
    with mpmath.workprec(prec + GUARD_BITS):
        order = _series_order(tau, prec)
        ratio = _eta_raw(2 * tau, order) / _eta_raw(tau, order)
        return +(4096 * ratio ** 24)


def eval_f2(tau, prec):
    """Weber function f2 = sqrt(2) eta(2 tau)/eta(tau); f2^24 = omega2."""
    tau = _to_mpc(tau)
    with mpmath.workprec(prec + GUARD_BITS):
        order = _series_order(tau, prec)
        ratio = _eta_raw(2 * tau, order) / _eta_raw(tau, order)
        return +(mpmath.sqrt(2) * ratio)


def recognize_integer(x, tol_bits=32):
    """Round a complex value to the nearest integer.

    Returns (n, residual) where residual = |x - n|, or None when the residual
    is not below 2^-tol_bits.
    """
    x = mpmath.mpmathify(x)
    n = int(mpmath.nint(mpmath.re(x)))
    residual = abs(x - n)
    if residual >= mpmath.mpf(2) ** (-tol_bits):
        return None
    return n, residual


def class_polynomial(d, prec=None):
    """Hilbert class polynomial of the imaginary quadratic order of
    discriminant d, as a list of integer coefficients, leading first.

    Evaluates j at each reduced-form CM point and expands prod (X - j); the
    precision is doubled (up to three times) until every coefficient rounds
    to an integer with residual below 2^-32.
    """
    from .classgroup import reduced_forms, heegner_point

    forms = reduced_forms(d)
    if prec is None:
        # |j| at the CM point of (a, b, c) is about exp(pi sqrt|d| / a)
        bits = sum(3.1415927 * abs(d) ** 0.5 / (f[0] * log(2)) for f in forms)
        prec = 64 + ceil(1.2 * bits)
    for _ in range(4):
        with mpmath.workprec(prec + GUARD_BITS):
            roots = [eval_j(heegner_point(f, d), prec) for f in forms]
            poly = [mpmath.mpc(1)]
            for r in roots:
                nxt = [mpmath.mpc(0)] * (len(poly) + 1)
                for i, c in enumerate(poly):
                    nxt[i] += c
                    nxt[i + 1] -= c * r
                poly = nxt
            ints = []
            ok = True
            for c in poly:
                rec = recognize_integer(c)
                if rec is None:
                    ok = False
                    break
                ints.append(rec[0])
            if ok:
                return ints
        prec *= 2
    raise ArithmeticError(f"class polynomial for d={d} did not stabilize")
