"""Exact weight-enumerator vectors and their polynomial transforms.

An :class:`Enumerator` holds the n+1 rational coefficients of a
homogeneous polynomial ``sum_d c_d x^{n-d} y^d``.  The module provides
the dual (MacWilliams) transform ``B(x,y) = A((x+3y)/2, (x-y)/2)``, the
shadow transform ``S(x,y) = A((x+3y)/2, (y-x)/2)``, and the coefficient
-level Krawtchouk forms

    B_i = 2^{-n} sum_r P_i(r,n) A_r
    S_i = 2^{-n} sum_r (-1)^r P_i(r,n) A_r

with P_i(x,n) = sum_s (-1)^s 3^{i-s} C(x,s) C(n-x,i-s).

Each transform is implemented twice, once through the Krawtchouk sum
and once through direct polynomial substitution, so the two routes can
be compared exactly in tests.  All arithmetic is over ``Fraction``;
nothing here ever rounds.

Also included: the even-subcode coefficient relations, the length
extension for self-dual codes, and the closed-form distance ceilings
(including the ``floor((n+1)/6)`` correctable-error cap).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence, Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Enumerator:
    """Coefficient vector of a homogeneous length-n enumerator polynomial.

    ``coeffs[d]`` multiplies ``x^{n-d} y^d``; all entries are exact
    Fractions.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1:
            raise ValueError("enumerator needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, *values: Rational) -> "Enumerator":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def evaluate(self, x: Rational, y: Rational) -> Fraction:
        """Evaluate the polynomial at rational (x, y)."""
        x, y = Fraction(x), Fraction(y)
        n = self.n
        return sum(
            (c * x ** (n - d) * y ** d for d, c in enumerate(self.coeffs)),
            Fraction(0),
        )

    def to_json(self) -> list[str]:
        """Exact string form, one ``p/q`` (or plain integer) per coefficient."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items: Sequence[str]) -> "Enumerator":
        return cls(tuple(Fraction(s) for s in items))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"


def krawtchouk(i: int, x: int, n: int) -> int:
    """The quaternary Krawtchouk value P_i(x, n), an exact integer."""
    if not (0 <= i <= n and 0 <= x <= n):
        raise ValueError(f"indices out of range: i={i}, x={x}, n={n}")
    return sum(
        (-1) ** s * 3 ** (i - s) * comb(x, s) * comb(n - x, i - s)
        for s in range(0, i + 1)
    )


@lru_cache(maxsize=None)
def krawtchouk_table(n: int) -> tuple[tuple[int, ...], ...]:
    """All values P_i(r, n) as ``table[i][r]``, cached per n."""
    return tuple(
        tuple(krawtchouk(i, r, n) for r in range(n + 1)) for i in range(n + 1)
    )


def macwilliams(a: Enumerator) -> Enumerator:
    """Dual enumerator via the Krawtchouk sum B_i = 2^{-n} sum_r P_i(r,n) A_r."""
    return _krawtchouk_apply(a, signed=False)


def shadow_transform(a: Enumerator) -> Enumerator:
    """Shadow enumerator via S_i = 2^{-n} sum_r (-1)^r P_i(r,n) A_r."""
    return _krawtchouk_apply(a, signed=True)


def _krawtchouk_apply(a: Enumerator, signed: bool) -> Enumerator:
    n = a.n
    table = krawtchouk_table(n)
    scale = Fraction(1, 2 ** n)
    out = []
    for i in range(n + 1):
        acc = Fraction(0)
        for r, coeff in enumerate(a.coeffs):
            term = table[i][r] * coeff
            acc += -term if (signed and r % 2) else term
        out.append(acc * scale)
    return Enumerator(tuple(out))


@lru_cache(maxsize=None)
def _substitution_matrix(n: int, shadow: bool) -> tuple[tuple[int, ...], ...]:
    """Integer matrix M with M[i][r] = [y^i] (x+3y)^{n-r} * (x -+ y)^r at x=1.

    Dividing by 2^n gives the substitution (x,y) -> ((x+3y)/2, (x-y)/2)
    (or (y-x)/2 for the shadow variant) applied to a degree-n enumerator.
    """
    rows: list[list[int]] = [[0] * (n + 1) for _ in range(n + 1)]
    for r in range(n + 1):
        p1 = [comb(n - r, j) * 3 ** j for j in range(n - r + 1)]
        if shadow:
            p2 = [comb(r, j) * (-1) ** (r - j) for j in range(r + 1)]
        else:
            p2 = [comb(r, j) * (-1) ** j for j in range(r + 1)]
        for j1, c1 in enumerate(p1):
            for j2, c2 in enumerate(p2):
                rows[j1 + j2][r] += c1 * c2
    return tuple(tuple(row) for row in rows)


def macwilliams_by_substitution(a: Enumerator) -> Enumerator:
    """Dual enumerator by expanding A((x+3y)/2, (x-y)/2) symbolically."""
    return _substitute(a, shadow=False)


def shadow_transform_by_substitution(a: Enumerator) -> Enumerator:
    """Shadow enumerator by expanding A((x+3y)/2, (y-x)/2) symbolically."""
    return _substitute(a, shadow=True)


def _substitute(a: Enumerator, shadow: bool) -> Enumerator:
    n = a.n
    mat = _substitution_matrix(n, shadow)
    scale = Fraction(1, 2 ** n)
    return Enumerator(tuple(
        sum((m * c for m, c in zip(row, a.coeffs)), Fraction(0)) * scale
        for row in mat
    ))


def even_subcode_enumerators(
    a: Enumerator, b: Enumerator, s: Enumerator
) -> tuple[Enumerator, Enumerator]:
    """Enumerators of the even subcode P + ~P of an odd code.

    Requires S_0 = 0 (the oddness criterion Tr(P ~P) = 0); the even
    subcode doubles the rank, quadrupling A on even weights and killing
    odd ones, while B picks up the shadow: B0_d = 2(B_d + S_d).
    """
    if not (a.n == b.n == s.n):
        raise ValueError("enumerator lengths differ")
    if s[0] != 0:
        raise ValueError(f"code is not odd: S_0 = {s[0]} != 0")
    a0 = tuple(4 * c if d % 2 == 0 else Fraction(0) for d, c in enumerate(a))
    b0 = tuple(2 * (b[d] + s[d]) for d in range(b.n + 1))
    return Enumerator(a0), Enumerator(b0)


def extend_self_dual(a0: Enumerator, b0: Enumerator) -> Enumerator:
    """Length-(n+1) self-dual enumerator built from even-subcode data.

    A'_i = (A0_i - A0_{i-1})/4 + B0_{i-1}/2, with index -1 read as 0.
    """
    if a0.n != b0.n:
        raise ValueError("enumerator lengths differ")
    n = a0.n

    def at(e: Enumerator, i: int) -> Fraction:
        return e[i] if 0 <= i <= n else Fraction(0)

    return Enumerator(tuple(
        Fraction(1, 4) * (at(a0, i) - at(a0, i - 1)) + Fraction(1, 2) * at(b0, i - 1)
        for i in range(n + 2)
    ))


def analytic_distance_bound(n: int, k_dim: Rational) -> int:
    """Closed-form distance ceiling for an ((n, K, d)).

    K = 1 codes obey d <= 2m+2 for n = 6m+l with l < 5 and d <= 2m+3 at
    l = 5.  K > 1 codes obey d <= 2m+1 / 2m+2 for n = 6m-1+l.  The
    ceiling can exceed the trivial d <= n at very small n; callers that
    care clamp it themselves.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k_dim < 1:
        raise ValueError(f"K must be >= 1, got {k_dim}")
    if k_dim == 1:
        m, l = divmod(n, 6)
        return 2 * m + (3 if l == 5 else 2)
    m, l = divmod(n + 1, 6)
    return 2 * m + (2 if l == 5 else 1)


def max_correctable(n: int) -> int:
    """Most errors any length-n code can correct: floor((n+1)/6)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (n + 1) // 6
