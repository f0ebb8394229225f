"""Bit-packed n-qubit Pauli operators with symplectic structure.

A Pauli operator (modulo phase) is a pair of n-bit integers ``(x_bits,
z_bits)``: qubit ``i`` carries X if only bit ``i`` of ``x_bits`` is set,
Z if only bit ``i`` of ``z_bits`` is set, and Y if both are set.  These
pairs form the vector space F_2^{2n} under XOR, equipped with the
symplectic form that records commutation: two Paulis commute exactly
when their form vanishes.

:class:`PhasedPauli` adds a quartic phase (one of +1, -1, +i, -i) so
that products agree with the actual matrix algebra, e.g.
``sigma_x . sigma_z = -i sigma_y``.

Text notation: an optional sign prefix (``+``, ``-``, ``+i``, ``-i``)
followed by one character per qubit from ``IXYZ``; the first character
is qubit 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_QUBITS = 63

# i**k for k = 0..3; complex units multiply exactly in binary floating point.
_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)

_PHASE_LABELS = {(1 + 0j): "+", (-1 + 0j): "-", 1j: "+i", -1j: "-i"}
_LABEL_PHASES = {"+": 1 + 0j, "-": -1 + 0j, "": 1 + 0j,
                 "+i": 1j, "-i": -1j, "i": 1j}

_CHAR_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_CHAR = {v: k for k, v in _CHAR_BITS.items()}


def _popcount(v: int) -> int:
    return v.bit_count()


@dataclass(frozen=True, order=True)
class PauliElement:
    """A point of F_2^{2n}: an n-qubit Pauli operator modulo phase.

    Deliberately phase-free so it can serve as a dict/set key for
    F_2^{2n} arithmetic.
    """

    n: int
    x_bits: int
    z_bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        mask = (1 << self.n) - 1
        if not 0 <= self.x_bits <= mask or not 0 <= self.z_bits <= mask:
            raise ValueError(f"bit vectors out of range for n={self.n}")

    @classmethod
    def identity(cls, n: int) -> "PauliElement":
        return cls(n, 0, 0)

    @classmethod
    def sigma_y_all(cls, n: int) -> "PauliElement":
        """The n-fold tensor power of sigma_y."""
        mask = (1 << n) - 1
        return cls(n, mask, mask)

    @classmethod
    def from_label(cls, label: str) -> "PauliElement":
        """Parse an unsigned label such as ``XYIZ``."""
        p = parse_pauli(label)
        if p.phase != 1 + 0j:
            raise ValueError(f"sign prefix not allowed here: {label!r}")
        return p.element

    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0

    def __xor__(self, other: "PauliElement") -> "PauliElement":
        """Product modulo phase (XOR of bit vectors)."""
        _check_same_n(self, other)
        return PauliElement(self.n, self.x_bits ^ other.x_bits,
                            self.z_bits ^ other.z_bits)

    def label(self) -> str:
        return "".join(
            _BITS_CHAR[(self.x_bits >> i) & 1, (self.z_bits >> i) & 1]
            for i in range(self.n)
        )

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class PhasedPauli:
    """A Pauli element together with a quartic phase.

    ``phase`` must be one of +1, -1, +i, -i; the represented operator is
    ``phase`` times the Hermitian matrix of ``element``.
    """

    element: PauliElement
    phase: complex = field(default=1 + 0j)

    def __post_init__(self) -> None:
        if self.phase not in _PHASE_LABELS:
            raise ValueError(f"phase must be a fourth root of unity, got {self.phase!r}")

    @classmethod
    def identity(cls, n: int) -> "PhasedPauli":
        return cls(PauliElement.identity(n))

    @property
    def n(self) -> int:
        return self.element.n

    def is_hermitian(self) -> bool:
        """The represented matrix is Hermitian iff the phase is real."""
        return self.phase in (1 + 0j, -1 + 0j)

    @property
    def sign(self) -> int:
        """+1 or -1 for Hermitian elements; raises otherwise."""
        if self.phase == 1 + 0j:
            return 1
        if self.phase == -1 + 0j:
            return -1
        raise ValueError(f"non-real phase {self.phase!r} has no sign")

    def __mul__(self, other: "PhasedPauli") -> "PhasedPauli":
        return multiply(self, other)

    def __neg__(self) -> "PhasedPauli":
        return PhasedPauli(self.element, -self.phase)

    def label(self) -> str:
        return _PHASE_LABELS[self.phase] + self.element.label()

    def __str__(self) -> str:
        return self.label()


def _check_same_n(a, b) -> None:
    if a.n != b.n:
        raise ValueError(f"qubit counts differ: {a.n} != {b.n}")


def weight(e: PauliElement) -> int:
    """Number of qubits acted on non-trivially."""
    return _popcount(e.x_bits | e.z_bits)


def weight_y(e: PauliElement) -> int:
    """Number of qubits carrying sigma_y (both bits set)."""
    return _popcount(e.x_bits & e.z_bits)


def symplectic_product(e1: PauliElement, e2: PauliElement) -> int:
    """Symplectic form <e1, e2> = x1.z2 + x2.z1 over F_2.

    Returns 0 when the operators commute and 1 when they anticommute.
    """
    _check_same_n(e1, e2)
    return (_popcount(e1.x_bits & e2.z_bits) ^ _popcount(e2.x_bits & e1.z_bits)) & 1


def multiply(a: PhasedPauli, b: PhasedPauli) -> PhasedPauli:
    """Matrix product of two phased Paulis.

    The element bits XOR; the phase follows from writing each element as
    i^{wt_y} X^x Z^z and commuting Z^{z1} past X^{x2}, which costs
    (-1)^{z1.x2}.
    """
    _check_same_n(a, b)
    e1, e2 = a.element, b.element
    e3 = e1 ^ e2
    k = (weight_y(e1) + weight_y(e2) - weight_y(e3)
         + 2 * _popcount(e1.z_bits & e2.x_bits)) % 4
    return PhasedPauli(e3, a.phase * b.phase * _I_POW[k])


def parse_pauli(text: str) -> PhasedPauli:
    """Parse text notation like ``-XYIZ`` or ``+iZZ`` into a PhasedPauli."""
    s = text.strip()
    prefix = ""
    body = s
    for cand in ("+i", "-i", "i", "+", "-"):
        if s.startswith(cand):
            prefix, body = cand, s[len(cand):]
            break
    if not body:
        raise ValueError(f"empty Pauli string: {text!r}")
    x = z = 0
    for i, ch in enumerate(body):
        try:
            xb, zb = _CHAR_BITS[ch.upper()]
        except KeyError:
            raise ValueError(
                f"invalid Pauli character {ch!r} at position {i} in {text!r}"
            ) from None
        x |= xb << i
        z |= zb << i
    return PhasedPauli(PauliElement(len(body), x, z), _LABEL_PHASES[prefix])


def format_pauli(p: PhasedPauli) -> str:
    """Inverse of :func:`parse_pauli` (always emits an explicit sign)."""
    return p.label()
