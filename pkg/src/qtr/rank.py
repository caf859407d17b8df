"""The 2-rank of the class group of K, computed along two independent paths.

Path one ("closed"): dispatch on the factorization shape of n and apply the
matching closed-form rank expression directly.

Path two ("unified"): build the table of norm-residue characters of the units
-1, eps, -eps at every prime of k = Q(sqrt(ell)) that ramifies in K, read off
which units are norms, and evaluate rank = mu + r* - 3.  Here mu counts the
ramified primes of k (the real places never ramify: K is totally real), and
k has one fundamental unit and contains -1, which fixes the constant 3.

The two paths share only the shape extraction; their agreement everywhere is
the central correctness check of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InternalCheckError
from .ntheory import factor_squarefree, quartic_symbol
from .quad import SplittingType, splitting_type
from .quartic import FieldInput

UNIT_LABELS = ("-1", "eps", "-eps")


@dataclass(frozen=True)
class NShape:
    """n = delta * (primes = 1 mod 4) * (primes = 3 mod 4), each tagged by its
    behavior in k.  delta is 2 exactly when n is even."""

    delta: int
    plist: tuple[tuple[int, SplittingType], ...]  # p = 1 (mod 4), ascending
    qlist: tuple[tuple[int, SplittingType], ...]  # q = 3 (mod 4), ascending

    @property
    def t(self) -> int:
        return len(self.plist)

    @property
    def s(self) -> int:
        return len(self.qlist)

    @property
    def t1(self) -> int:
        return sum(1 for _, tag in self.plist if tag is SplittingType.INERT)

    @property
    def t2(self) -> int:
        return sum(1 for _, tag in self.plist if tag is SplittingType.SPLIT)

    @property
    def s1(self) -> int:
        return sum(1 for _, tag in self.qlist if tag is SplittingType.INERT)

    @property
    def s2(self) -> int:
        return sum(1 for _, tag in self.qlist if tag is SplittingType.SPLIT)

    @property
    def h(self) -> int:
        """Primes of k above the p-part: inert contribute 1, split 2."""
        return self.t1 + 2 * self.t2

    @property
    def w(self) -> int:
        """Primes of k above the q-part."""
        return self.s1 + 2 * self.s2

    @property
    def dyadic_ramifies(self) -> bool:
        """The prime of k above 2 ramifies in K unless n is odd with an odd
        number of factors = 3 (mod 4) (equivalently: conductor exponent 0)."""
        return not (self.delta == 1 and self.s % 2 == 1)


@dataclass(frozen=True)
class Column:
    """One ramified prime of k: the kind determines its character entries."""

    kind: str  # sqrt_ell | inert_p | split_p | inert_q | split_q | dyadic
    prime: Optional[int] = None
    conjugate: bool = False

    def label(self, ell: int) -> str:
        if self.kind == "sqrt_ell":
            return f"sqrt({ell})"
        if self.kind == "dyadic":
            return "2"
        return f"{self.prime}'" if self.conjugate else f"{self.prime}"


@dataclass(frozen=True)
class RamProfile:
    columns: tuple[Column, ...]
    mu: int
    h: int
    w: int
    ram2: bool


@dataclass(frozen=True)
class CharacterTable:
    """3 x mu matrix of +-1: rows -1, eps, -eps; one column per ramified prime."""

    ell: int
    columns: tuple[Column, ...]
    entries: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def row_products(self) -> tuple[int, int, int]:
        out = []
        for row in self.entries:
            prod = 1
            for x in row:
                prod *= x
            out.append(prod)
        return tuple(out)

    def column_labels(self) -> list[str]:
        return [col.label(self.ell) for col in self.columns]

    def to_text(self) -> str:
        labels = self.column_labels()
        head = "unit \\ chi"
        unit_w = max(len(head), max(len(u) for u in UNIT_LABELS))
        widths = [max(len(lab), 1) for lab in labels]
        lines = [
            "  ".join([head.ljust(unit_w)] + [lab.rjust(w) for lab, w in zip(labels, widths)])
        ]
        for unit, row in zip(UNIT_LABELS, self.entries):
            marks = ["+" if x == 1 else "-" for x in row]
            lines.append(
                "  ".join([unit.ljust(unit_w)] + [m.rjust(w) for m, w in zip(marks, widths)])
            )
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "columns": self.column_labels(),
            "units": list(UNIT_LABELS),
            "entries": [list(row) for row in self.entries],
        }


@dataclass(frozen=True)
class RankResult:
    mu: int
    r_star: int
    rank: int
    case_tag: str

    def __post_init__(self) -> None:
        if self.rank != self.mu + self.r_star - 3 or self.rank < 0:
            raise InternalCheckError(
                f"inconsistent rank result: mu={self.mu} r*={self.r_star} "
                f"rank={self.rank} case={self.case_tag}"
            )


def n_shape(field: FieldInput) -> NShape:
    delta = 2 if field.n % 2 == 0 else 1
    ps, qs = [], []
    for p in factor_squarefree(field.n):
        if p == 2:
            continue
        tagged = (p, splitting_type(p, field.ell))
        (ps if p % 4 == 1 else qs).append(tagged)
    return NShape(delta, tuple(ps), tuple(qs))


def ram_profile(shape: NShape) -> RamProfile:
    """Ramified primes of k in K, in fixed output order: sqrt(ell) first, odd
    primes ascending with split pairs adjacent (unbarred first), dyadic last."""
    cols = [Column("sqrt_ell")]
    for prime, tag in sorted(shape.plist + shape.qlist):
        kind = "p" if prime % 4 == 1 else "q"
        if tag is SplittingType.SPLIT:
            cols.append(Column(f"split_{kind}", prime, conjugate=False))
            cols.append(Column(f"split_{kind}", prime, conjugate=True))
        else:
            cols.append(Column(f"inert_{kind}", prime))
    if shape.dyadic_ramifies:
        cols.append(Column("dyadic", 2))
    mu = len(cols)
    assert mu == 1 + shape.h + shape.w + (1 if shape.dyadic_ramifies else 0)
    return RamProfile(tuple(cols), mu, shape.h, shape.w, shape.dyadic_ramifies)


def character_table(shape: NShape, ell: int) -> CharacterTable:
    """Norm-residue characters of -1 and eps at each ramified prime.

    Entry rules per column kind (eps = (u + v*sqrt(ell))/2, norm -1):
      sqrt(ell): (+, -) -- eps reduces to a non-residue mod sqrt(ell).
      inert p = 1 (mod 4): (+, +); inert q = 3 (mod 4): (+, -) -- the eps
        character at an inert prime r is (-1/r) because eps^(r+1) = -1 there.
      split p = 1 (mod 4): (+, sigma) in both conjugate columns, where
        sigma = (p/ell)_4 * (ell/p)_4.
      split q = 3 (mod 4): -1 entries for the unit -1, and tau, -tau for eps
        in the two conjugate columns, tau = (q/ell)_4 * (ell/q)_4.
      dyadic: (+, (-1)^(s+1)) with s the number of q-factors.
    The -eps row is the entrywise product of the other two.
    """
    profile = ram_profile(shape)
    row_m1, row_eps = [], []
    for col in profile.columns:
        if col.kind == "sqrt_ell":
            m1, eps = 1, -1
        elif col.kind == "dyadic":
            m1, eps = 1, (-1) ** (shape.s + 1)
        elif col.kind == "inert_p":
            m1, eps = 1, 1
        elif col.kind == "inert_q":
            m1, eps = 1, -1
        elif col.kind == "split_p":
            sigma = quartic_symbol(col.prime, ell) * quartic_symbol(ell, col.prime)
            m1, eps = 1, sigma
        elif col.kind == "split_q":
            tau = quartic_symbol(col.prime, ell) * quartic_symbol(ell, col.prime)
            m1, eps = -1, (-tau if col.conjugate else tau)
        else:
            raise InternalCheckError(f"unknown column kind {col.kind}")
        row_m1.append(m1)
        row_eps.append(eps)
    row_meps = [a * b for a, b in zip(row_m1, row_eps)]
    return CharacterTable(ell, profile.columns, (tuple(row_m1), tuple(row_eps), tuple(row_meps)))


def r_star(table: CharacterTable) -> int:
    """Index exponent of norm units: a unit is a norm from K exactly when its
    character row is all +1.  The all-plus rows generate a subgroup of
    {+-1, +-eps} modulo squares; r* is its 2-log (0, 1 or 2)."""
    vectors = ((1, 0), (0, 1), (1, 1))  # -1, eps, -eps over F_2 x F_2
    span: set[tuple[int, int]] = {(0, 0)}
    for vec, row in zip(vectors, table.entries):
        if all(x == 1 for x in row) and vec not in span:
            span = {(a ^ vec[0], b ^ vec[1]) for a, b in span} | span
    return {1: 0, 2: 1, 4: 2}[len(span)]


def _case_tag(shape: NShape) -> str:
    """Which shape family (and q-tag subcase) the field falls in.

    Families split by which odd primes occur and whether the dyadic prime
    ramifies ("with2"/"no2"); subcases by the split/inert mix.
    """
    two = "with2" if shape.dyadic_ramifies else "no2"
    if shape.t == 0 and shape.s == 0:
        return "trivial"
    if shape.s == 0:
        sub = "inert" if shape.t2 == 0 else ("split" if shape.t1 == 0 else "both")
        return f"p-only:{sub}"
    sub = "inert" if shape.s2 == 0 else ("split" if shape.s1 == 0 else "both")
    if shape.t == 0:
        return f"q-{two}:{sub}"
    return f"pq-{two}:q-{sub}"


def _closed_rank(shape: NShape) -> int:
    """Rank by the closed-form case expressions over the shape counts.

    The q-cases hinge on whether any q splits: with no split q the unit -1
    stays a norm, which raises the rank by one relative to the generic
    expression, hence the s2 == 0 branches.
    """
    t, s = shape.t, shape.s
    t1, t2 = shape.t1, shape.t2
    s1, s2 = shape.s1, shape.s2
    h = shape.h
    if t == 0 and s == 0:
        return 0
    if s == 0:
        if t2 == 0:
            return t
        if t1 == 0:
            return 2 * t
        return t1 + 2 * t2
    if t == 0 and not shape.dyadic_ramifies:
        if s2 == 0:
            return s - 1
        if s1 == 0:
            return 2 * s - 2
        return s1 + 2 * s2 - 2
    if t == 0:
        if s2 == 0:
            return s
        if s1 == 0:
            return 2 * s - 1
        return s1 + 2 * s2 - 1
    if not shape.dyadic_ramifies:
        if s2 == 0:
            return h + s - 1
        if s1 == 0:
            return h + 2 * s - 2
        return h + s1 + 2 * s2 - 2
    if s2 == 0:
        return h + s
    if s1 == 0:
        return h + 2 * s - 1
    return h + s1 + 2 * s2 - 1


def rank_closed(field: FieldInput) -> RankResult:
    """2-rank via the closed-form case dispatch; never builds a table."""
    shape = n_shape(field)
    rank = _closed_rank(shape)
    mu = 1 + shape.h + shape.w + (1 if shape.dyadic_ramifies else 0)
    rs = 1 if shape.s2 == 0 else 0
    return RankResult(mu, rs, rank, _case_tag(shape))


def rank_unified(field: FieldInput) -> RankResult:
    """2-rank via mu + r* - 3 with r* read off the explicit character table."""
    shape = n_shape(field)
    profile = ram_profile(shape)
    table = character_table(shape, field.ell)
    rs = r_star(table)
    rs_shortcut = 1 if shape.s2 == 0 else 0
    if rs != rs_shortcut:
        raise InternalCheckError(
            f"r* from table = {rs} but shape shortcut gives {rs_shortcut} "
            f"(ell={field.ell}, n={field.n})"
        )
    if profile.mu != len(table.columns):
        raise InternalCheckError(f"mu mismatch (ell={field.ell}, n={field.n})")
    return RankResult(profile.mu, rs, profile.mu + rs - 3, _case_tag(shape))
