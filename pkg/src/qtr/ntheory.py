"""Exact integer primitives: primality, factorization, residue symbols, two squares.

Everything here is plain arbitrary-precision integer arithmetic; nothing ever
wraps around or goes through floats.
"""

from __future__ import annotations

import functools
from math import gcd, isqrt
from typing import NamedTuple

from .errors import NotQuadraticResidue, NotSquarefree

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Strong-pseudoprime witness set proven adequate for every n below
# 3_317_044_064_679_887_385_961_981 (Sorenson & Webster), so the test is
# unconditional well past 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981

_TRIAL_LIMIT = 1 << 16


def is_prime(m: int) -> bool:
    """Deterministic primality test.

    Unconditional for m < 3.3e24 (covers 2**64); above that the same fixed
    witness set is used, which is still deterministic but relies on no
    counterexample being known.
    """
    if m < 2:
        return False
    for p in _SMALL_PRIMES:
        if m % p == 0:
            return m == p
    if m < 41 * 41:
        return True
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Nontrivial factor of an odd composite n with no factor <= _TRIAL_LIMIT.

    Brent's cycle variant with a fixed seed schedule, so repeated runs agree.
    """
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def _factor_into(n: int, acc: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        acc[n] = acc.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, acc)
    _factor_into(n // d, acc)


def factorize(n: int) -> list[tuple[int, int]]:
    """Full factorization of n >= 1 as an ascending list of (prime, exponent)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    acc: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            acc[p] = acc.get(p, 0) + 1
            n //= p
    d = 5
    while d <= _TRIAL_LIMIT and d * d <= n:
        for q in (d, d + 2):  # 6k-1, 6k+1
            while n % q == 0:
                acc[q] = acc.get(q, 0) + 1
                n //= q
        d += 6
    _factor_into(n, acc)
    return sorted(acc.items())


def factor_squarefree(n: int) -> list[int]:
    """Ascending prime factors of a squarefree n; raises NotSquarefree otherwise."""
    out = []
    for p, e in factorize(n):
        if e > 1:
            raise NotSquarefree(f"{p}^{e} divides {n}")
        out.append(p)
    return out


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    assert t == 1 or t == p - 1, (a, p)
    return 1 if t == 1 else -1


def quartic_symbol(a: int, p: int) -> int:
    """Rational quartic residue symbol (a/p)_4 in {-1, +1}.

    Defined only when (a/p) = +1.  For p = 1 (mod 4) this is a^((p-1)/4)
    read as a sign.  For p = 3 (mod 4) the squares mod p form a group of odd
    order (p-1)/2, so every square is a fourth power and the symbol is +1.
    """
    if legendre(a, p) != 1:
        raise NotQuadraticResidue(f"({a}/{p}) != +1, quartic symbol undefined")
    if p % 4 == 3:
        return 1
    t = pow(a % p, (p - 1) // 4, p)
    assert t == 1 or t == p - 1, (a, p)
    return 1 if t == 1 else -1


class TwoSquares(NamedTuple):
    b: int  # even leg; b = 2 (mod 4) when ell = 5 (mod 8)
    c: int  # odd leg


@functools.lru_cache(maxsize=None)
def two_squares(ell: int) -> TwoSquares:
    """The decomposition ell = b^2 + c^2 of a prime ell = 1 (mod 4), b even.

    Cornacchia: seed the Euclidean remainder sequence with a square root of
    -1 mod ell and stop at the first remainder below sqrt(ell).
    """
    assert ell % 4 == 1 and is_prime(ell), ell
    if ell % 8 == 5:
        x = pow(2, (ell - 1) // 4, ell)  # 2 is a non-residue here
    else:
        d = 3
        while legendre(d, ell) != -1:
            d += 2
        x = pow(d, (ell - 1) // 4, ell)
    assert x * x % ell == ell - 1, ell
    a, b = ell, x
    limit = isqrt(ell)
    while b > limit:
        a, b = b, a % b
    c2 = ell - b * b
    c = isqrt(c2)
    assert c * c == c2, ell
    even, odd = (b, c) if b % 2 == 0 else (c, b)
    return TwoSquares(even, odd)
