"""Additive (stabilizer) codes as weakly self-dual subspaces of F_2^{2n}.

An :class:`AdditiveCode` is a set of sign-carrying commuting Pauli
generators.  The spanned group C has 2^dim elements with signs s(E)
propagated by multiplication; the associated projection (built in
:mod:`qshadow.oracle`) has rank K = 2^{n-dim}.

The combinatorial enumerators are scaled element counts:

    A_d = 2^{2(n-dim)} * #{E in C    : wt(E) = d}
    B_d = 2^{n-dim}    * #{E in Cperp: wt(E) = d}
    S_d = 2^{n-dim}    * #{E in S(C) : wt(E) = d}

where the shadow S(C) collects the errors E with <E, E'> = wt(E') mod 2
for every E' in C.  B and S are obtained from A through the transforms
in :mod:`qshadow.enumerators`; direct membership scans are kept as
cross-checks at small n.

File format: one generator per line (``+XZZXI``), ``#`` starts a
comment, blank lines are skipped, and an optional ``n=<int>`` header
pins the qubit count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence

from .enumerators import Enumerator, macwilliams, shadow_transform
from .paulis import (
    PauliElement,
    PhasedPauli,
    multiply,
    parse_pauli,
    symplectic_product,
    weight,
)

DIM_CAP = 24
_DIRECT_SCAN_MAX_N = 6


@dataclass(frozen=True)
class WeightDistribution:
    """Element counts by weight, counts[d] = number of elements of weight d."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, d: int) -> int:
        return self.counts[d]

    def __iter__(self):
        return iter(self.counts)


@dataclass(frozen=True)
class AdditiveCode:
    """A validated stabilizer group: independent, commuting, sign-consistent.

    Build through :meth:`from_generators`; the constructor arguments are
    assumed already reduced.
    """

    n: int
    generators: tuple[PhasedPauli, ...]
    dim: int

    @classmethod
    def from_generators(
        cls, generators: Iterable[PhasedPauli | str], n: Optional[int] = None
    ) -> "AdditiveCode":
        """Validate and reduce a generator list.

        Raises ValueError for mixed qubit counts, non-real signs,
        anticommuting pairs (naming the pair), or a redundant generator
        whose sign contradicts the group (which would put -1 in the
        group).  Redundant generators with consistent signs are dropped.
        """
        gens = [parse_pauli(g) if isinstance(g, str) else g for g in generators]
        if n is None:
            if not gens:
                raise ValueError("empty generator list needs an explicit n")
            n = gens[0].n
        for g in gens:
            if g.n != n:
                raise ValueError(f"generator {g} has {g.n} qubits, expected {n}")
            if not g.is_hermitian():
                raise ValueError(f"generator {g} has non-real phase")
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if symplectic_product(gens[i].element, gens[j].element):
                    raise ValueError(
                        f"generators anticommute: {gens[i]} and {gens[j]}"
                    )

        kept: list[PhasedPauli] = []
        pivots: list[tuple[int, PhasedPauli]] = []  # (leading bit, reduced row)
        for g in gens:
            cur = g
            for bit, row in pivots:
                if _key(cur.element) & bit:
                    cur = multiply(cur, row)
            if cur.element.is_identity():
                if cur.phase == 1:
                    continue  # redundant but consistent
                raise ValueError(
                    f"inconsistent signs: generator {g} forces "
                    f"{cur.phase:+.0f} * identity into the group"
                )
            pivots.append((_leading_bit(_key(cur.element)), cur))
            kept.append(g)
        return cls(n=n, generators=tuple(kept), dim=len(kept))

    @property
    def k_dim(self) -> int:
        """Dimension K = 2^{n-dim} of the stabilized subspace."""
        return 2 ** (self.n - self.dim)

    def __str__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"AdditiveCode(n={self.n}, dim={self.dim}, [{gens}])"


def _key(e: PauliElement) -> int:
    return (e.x_bits << e.n) | e.z_bits


def _leading_bit(key: int) -> int:
    return 1 << (key.bit_length() - 1)


def _check_cap(code: AdditiveCode) -> None:
    if code.dim > DIM_CAP:
        raise ValueError(f"group enumeration capped at dim {DIM_CAP}, got {code.dim}")


def enumerate_group(code: AdditiveCode) -> list[PhasedPauli]:
    """All 2^dim signed elements of the stabilizer group."""
    _check_cap(code)
    elems = [PhasedPauli.identity(code.n)]
    for g in code.generators:
        elems += [multiply(g, e) for e in elems]
    for e in elems:
        if not e.is_hermitian():  # cannot happen for a valid code
            raise ValueError(f"group element {e} acquired a non-real phase")
    return elems


def weight_distribution(code: AdditiveCode) -> WeightDistribution:
    """Weights of the 2^dim elements of C."""
    counts = [0] * (code.n + 1)
    for e in enumerate_group(code):
        counts[weight(e.element)] += 1
    return WeightDistribution(tuple(counts))


def dual_distribution(code: AdditiveCode) -> WeightDistribution:
    """Weights of the 2^{2n-dim} elements of Cperp, via the dual transform."""
    a, b, _ = code_enumerators(code)
    scale = Fraction(2 ** (code.n - code.dim))
    counts = []
    for d in range(code.n + 1):
        c = b[d] / scale
        if c.denominator != 1:
            raise AssertionError(f"non-integer dual count at weight {d}: {c}")
        counts.append(int(c))
    return WeightDistribution(tuple(counts))


def shadow_membership(e: PauliElement, code: AdditiveCode) -> bool:
    """True iff e lies in the shadow S(C).

    Testing generators suffices: both sides of the defining congruence
    are additive over a weakly self-dual group.
    """
    if e.n != code.n:
        raise ValueError(f"element has {e.n} qubits, code has {code.n}")
    return all(
        symplectic_product(e, g.element) == weight(g.element) % 2
        for g in code.generators
    )


def shadow_distribution(code: AdditiveCode) -> WeightDistribution:
    """Weights of the elements of S(C).

    Computed from the shadow transform of A; for small n the result is
    cross-checked against a direct membership scan over all of
    F_2^{2n}, and the two must agree exactly.
    """
    _, _, s = code_enumerators(code)
    scale = Fraction(2 ** (code.n - code.dim))
    counts = []
    for d in range(code.n + 1):
        c = s[d] / scale
        if c.denominator != 1 or c < 0:
            raise AssertionError(f"invalid shadow count at weight {d}: {c}")
        counts.append(int(c))
    dist = WeightDistribution(tuple(counts))
    if code.n <= _DIRECT_SCAN_MAX_N:
        direct = shadow_distribution_direct(code)
        if direct.counts != dist.counts:
            raise AssertionError(
                f"shadow transform {dist.counts} disagrees with "
                f"direct scan {direct.counts}"
            )
    return dist


def shadow_distribution_direct(code: AdditiveCode) -> WeightDistribution:
    """Shadow weights by brute membership scan over all 4^n elements."""
    n = code.n
    if n > 10:
        raise ValueError(f"direct shadow scan is exponential; n={n} too large")
    counts = [0] * (n + 1)
    for x in range(1 << n):
        for z in range(1 << n):
            e = PauliElement(n, x, z)
            if shadow_membership(e, code):
                counts[weight(e)] += 1
    return WeightDistribution(tuple(counts))


def code_enumerators(code: AdditiveCode) -> tuple[Enumerator, Enumerator, Enumerator]:
    """The exact (A, B, S) enumerators of the code.

    A comes from the group's weight counts scaled by 2^{2(n-dim)}; B and
    S follow by the dual and shadow transforms.
    """
    dist = weight_distribution(code)
    scale = Fraction(2 ** (2 * (code.n - code.dim)))
    a = Enumerator(tuple(scale * c for c in dist.counts))
    return a, macwilliams(a), shadow_transform(a)


def classify_parity(code: AdditiveCode) -> Literal["even", "odd"]:
    """'even' when C has no odd-weight element, 'odd' otherwise.

    Weight parity is a character on a weakly self-dual group (the
    product identity wt(E1 E2) = wt(E1) + wt(E2) + <E1,E2> mod 2 loses
    its twist when all products commute), so the generators decide it.
    In operator terms: even means P = ~P, odd means Tr(P ~P) = 0, and
    for additive codes of any rank these two cases are exhaustive.
    """
    if all(weight(g.element) % 2 == 0 for g in code.generators):
        return "even"
    return "odd"


def is_real(code: AdditiveCode) -> bool:
    """True iff the projection has real entries: sigma_y^{x n} in S(C)."""
    return shadow_membership(PauliElement.sigma_y_all(code.n), code)


def observed_distance(
    a: Enumerator, b: Enumerator, k_dim: int
) -> tuple[Optional[int], bool]:
    """(distance witness, purity flag) read off the enumerator pair.

    For K > 1, the witness is the first weight where K B_d exceeds A_d;
    for K = 1 (where A = B identically) it is the first nonzero weight
    of A.  The code is pure when A_d vanishes strictly below the
    witness.
    """
    n = a.n
    if k_dim == 1:
        d = next((i for i in range(1, n + 1) if a[i] != 0), None)
    else:
        d = next((i for i in range(1, n + 1) if k_dim * b[i] > a[i]), None)
    if d is None:
        return None, True
    return d, all(a[i] == 0 for i in range(1, d))


def parse_code_file(text: str) -> AdditiveCode:
    """Parse the stabilizer file format; errors carry line numbers."""
    n: Optional[int] = None
    gens: list[PhasedPauli] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("n="):
            try:
                declared = int(line[2:].strip())
            except ValueError:
                raise ValueError(f"line {lineno}: bad header {line!r}") from None
            if gens:
                raise ValueError(f"line {lineno}: n= header must precede generators")
            n = declared
            continue
        try:
            g = parse_pauli(line)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if not g.is_hermitian():
            raise ValueError(f"line {lineno}: generator sign must be + or -")
        if n is not None and g.n != n:
            raise ValueError(
                f"line {lineno}: generator has {g.n} qubits, header says n={n}"
            )
        gens.append(g)
    if n is None and not gens:
        raise ValueError("no generators and no n= header")
    return AdditiveCode.from_generators(gens, n=n)


def load_code(path: str) -> AdditiveCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code_file(fh.read())


def five_qubit_code() -> AdditiveCode:
    """The ((5,2,3)) code: XZZXI and its cyclic shifts."""
    return AdditiveCode.from_generators(["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])


def five_qubit_state() -> AdditiveCode:
    """A ((5,1,3)) self-dual code: the five-qubit code plus logical ZZZZZ."""
    return AdditiveCode.from_generators(
        ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "ZZZZZ"]
    )


def random_additive_code(
    n: int, dim: int, rng: random.Random | int | None = None
) -> AdditiveCode:
    """A random weakly self-dual code with the requested dimension.

    Generators are drawn by rejection sampling (commuting with and
    independent of those already chosen) with uniform random signs.
    """
    if not 0 <= dim <= n:
        raise ValueError(f"need 0 <= dim <= n, got dim={dim}, n={n}")
    if not isinstance(rng, random.Random):
        if not isinstance(rng, (int, type(None))):
            raise TypeError(f"rng must be random.Random, int, or None, got {type(rng)}")
        rng = random.Random(rng)
    gens: list[PhasedPauli] = []
    pivots: list[tuple[int, PhasedPauli]] = []
    while len(gens) < dim:
        e = PauliElement(n, rng.getrandbits(n), rng.getrandbits(n))
        if e.is_identity():
            continue
        if any(symplectic_product(e, g.element) for g in gens):
            continue
        cand = PhasedPauli(e, -1 + 0j if rng.random() < 0.5 else 1 + 0j)
        cur = cand
        for bit, row in pivots:
            if _key(cur.element) & bit:
                cur = multiply(cur, row)
        if cur.element.is_identity():
            continue  # dependent
        pivots.append((_leading_bit(_key(cur.element)), cur))
        gens.append(cand)
    return AdditiveCode.from_generators(gens, n=n)
