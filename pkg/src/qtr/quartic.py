"""Descriptors of the quartic field K = Q(sqrt(n*eps0*sqrt(ell))).

Validation of (ell, n), conversion to and from the canonical presentation
K = Q(sqrt(a*(ell + b*sqrt(ell)))), the conductor, and the defining
polynomial.  The radicand itself is never materialized; the pair (ell, n)
carries everything.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EllNotFiveMod8,
    EllNotPrime,
    NNotPositive,
    NotCoprime,
)
from .ntheory import factor_squarefree, is_prime, two_squares
from .quad import fundamental_unit


@dataclass(frozen=True)
class FieldInput:
    """Validated (ell, n): ell prime = 5 (mod 8), n squarefree, coprime to ell."""

    ell: int
    n: int


@dataclass(frozen=True)
class WilliamsForm:
    """Parameters of K = Q(sqrt(a*(ell + b*sqrt(ell)))), ell = b^2 + c^2.

    a is odd, squarefree and prime to ell; exactly one of b, c is odd.
    """

    a: int
    b: int
    c: int


@dataclass(frozen=True)
class Conductor:
    e: int  # one of 0, 2, 3
    f: int  # 2^e * a * ell


def validate_ell(ell: int) -> int:
    if not is_prime(ell):
        raise EllNotPrime(f"ell = {ell} is not prime")
    if ell % 8 != 5:
        raise EllNotFiveMod8(f"ell = {ell} is not 5 (mod 8)")
    return ell


def validate(ell: int, n: int) -> FieldInput:
    """Gatekeeper: check every hypothesis on (ell, n) or raise the named error."""
    validate_ell(ell)
    if n < 1:
        raise NNotPositive(f"n = {n} is not a positive integer")
    factor_squarefree(n)  # raises NotSquarefree
    if n % ell == 0:
        raise NotCoprime(f"gcd(n, ell) = {ell} > 1")
    return FieldInput(ell, n)


def to_williams(field: FieldInput) -> WilliamsForm:
    """Canonical (a, b, c) for the field of (ell, n).

    n odd means the radicand carries no factor 2, so a = n and b is the even
    leg of ell = b^2 + c^2; n even means n = 2a with the odd leg in the b slot.
    """
    sq = two_squares(field.ell)
    if field.n % 2 == 1:
        return WilliamsForm(field.n, sq.b, sq.c)
    return WilliamsForm(field.n // 2, sq.c, sq.b)


def from_williams(w: WilliamsForm, ell: int) -> int:
    """Inverse of to_williams: n = 2a when b is odd, else n = a."""
    assert w.b * w.b + w.c * w.c == ell, (w, ell)
    return 2 * w.a if w.b % 2 == 1 else w.a


def zink_reduce(a: int, b: int, c: int, ell: int, doubled: bool) -> WilliamsForm:
    """Absorb a factor 2 in the radicand: 2a*(ell + b*sqrt) and a*(ell + c*sqrt)
    generate the same field, so a doubled form is rewritten by swapping b and c.
    """
    assert b * b + c * c == ell and a % 2 == 1 and c % 2 == 1, (a, b, c, ell)
    if doubled:
        return WilliamsForm(a, c, b)
    return WilliamsForm(a, b, c)


def conductor(w: WilliamsForm, ell: int) -> Conductor:
    """Conductor f = 2^e * a * ell of the field with canonical form w.

    Only the ell = 1 (mod 4) branches apply here (ell = 5 mod 8):
    e = 3 when b is odd, else 2 or 0 according to a + b mod 4.
    """
    if w.b % 2 == 1:
        e = 3
    elif (w.a + w.b) % 4 == 3:
        e = 2
    else:
        e = 0
    return Conductor(e, (1 << e) * w.a * ell)


@dataclass(frozen=True)
class DefiningPolynomial:
    """x^4 + c2*x^2 + c0, the minimal polynomial of sqrt(n*eps0*sqrt(ell)).

    c2 = -n*v*ell and c0 = n^2*ell, so the polynomial is Eisenstein at ell,
    and n^4*ell^2*u^2 = (n^2*ell*u)^2 certifies a cyclic quartic splitting.
    """

    c2: int
    c0: int

    @property
    def coefficients(self) -> tuple[int, int, int, int, int]:
        return (1, 0, self.c2, 0, self.c0)

    def __str__(self) -> str:
        sign2 = "-" if self.c2 < 0 else "+"
        return f"x^4 {sign2} {abs(self.c2)}*x^2 + {self.c0}"


def defining_polynomial(field: FieldInput) -> DefiningPolynomial:
    v = fundamental_unit(field.ell).v
    return DefiningPolynomial(-field.n * v * field.ell, field.n * field.n * field.ell)
