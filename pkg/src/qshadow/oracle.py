"""Brute-force reference computations on explicit 2^n x 2^n matrices.

Everything the exact modules compute combinatorially is recomputed here
by summing traces over all 4^n Pauli errors, capped at n = 6.  The
oracle is floating point by design; it exists to cross-check the exact
code, so tolerances rather than exactness apply (construction checks at
1e-12/1e-10, derived identities at 1e-8).

Traces against a Pauli never materialize the Pauli matrix: writing
E = i^{wt_y} X^x Z^z gives

    Tr(E M)     = i^{wt_y} sum_b (-1)^{z.b} M[b, b^x]
    Tr(E M E N) = (-1)^{wt_y} sum_{j,k} (-1)^{z.(j^k)} M[j, k^x] N[k, j^x]

so a full enumerator costs O(8^n) work, vectorized over a
Walsh-Hadamard matrix for the z-sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .codes import AdditiveCode, enumerate_group
from .paulis import PauliElement, PhasedPauli

N_CAP = 6
HERMITIAN_TOL = 1e-12
PROJECTION_TOL = 1e-10
TRACE_INT_TOL = 1e-9
IMAG_TOL = 1e-9


@dataclass(frozen=True)
class DenseOperator:
    """An explicit operator on n qubits (n <= 6); n is read off the shape."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"matrix must be square, got shape {m.shape}")
        n = m.shape[0].bit_length() - 1
        if m.shape[0] != 2 ** n or n < 1:
            raise ValueError(f"matrix size must be a power of two >= 2, got {m.shape[0]}")
        if n > N_CAP:
            raise ValueError(f"dense oracle capped at n = {N_CAP}, got {n}")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return self.matrix.shape[0].bit_length() - 1

    @classmethod
    def identity(cls, n: int) -> "DenseOperator":
        return cls(np.eye(2 ** n))

    def is_hermitian(self, tol: float = HERMITIAN_TOL) -> bool:
        return bool(np.max(np.abs(self.matrix - self.matrix.conj().T)) <= tol)

    def is_projection(self, tol: float = PROJECTION_TOL) -> bool:
        m = self.matrix
        if not self.is_hermitian():
            return False
        if np.max(np.abs(m @ m - m)) > tol:
            return False
        tr = m.trace()
        return abs(tr.imag) <= TRACE_INT_TOL and abs(tr.real - round(tr.real)) <= TRACE_INT_TOL


def _require_hermitian(op: DenseOperator, name: str) -> None:
    if not op.is_hermitian():
        raise ValueError(f"{name} is not Hermitian within {HERMITIAN_TOL}")


@lru_cache(maxsize=None)
def _tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(index vector, popcount table, Walsh matrix H[z,b] = (-1)^{z.b})."""
    idx = np.arange(1 << n)
    pop = np.bitwise_count(idx).astype(np.int64)
    overlaps = np.bitwise_count(idx[:, None] & idx[None, :]).astype(np.int64)
    walsh = (1 - 2 * (overlaps & 1)).astype(np.float64)
    return idx, pop, walsh


def _rev(bits: int, n: int) -> int:
    """Qubit i lives in bit i, but basis index bit n-1-i (kron order)."""
    out = 0
    for i in range(n):
        out |= ((bits >> i) & 1) << (n - 1 - i)
    return out


def pauli_matrix(p: PhasedPauli | PauliElement) -> DenseOperator:
    """Dense matrix of a (phased) Pauli, via entry structure of X^x Z^z."""
    if isinstance(p, PauliElement):
        p = PhasedPauli(p)
    n = p.n
    if n > N_CAP:
        raise ValueError(f"dense oracle capped at n = {N_CAP}, got {n}")
    idx, pop, _ = _tables(n)
    e = p.element
    xr, zr = _rev(e.x_bits, n), _rev(e.z_bits, n)
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=np.complex128)
    signs = 1 - 2 * (pop[idx & zr] & 1)
    phase = p.phase * 1j ** int(pop[e.x_bits & e.z_bits])
    m[idx ^ xr, idx] = phase * signs
    return DenseOperator(m)


def trace_pauli_product(e: PauliElement, op: DenseOperator) -> complex:
    """Tr(E M) for the Hermitian Pauli E, as a signed entry sum of M."""
    if e.n != op.n:
        raise ValueError(f"qubit counts differ: {e.n} != {op.n}")
    idx, pop, _ = _tables(op.n)
    xr, zr = _rev(e.x_bits, op.n), _rev(e.z_bits, op.n)
    signs = 1 - 2 * (pop[idx & zr] & 1)
    total = np.sum(signs * op.matrix[idx, idx ^ xr])
    return complex(1j ** int(pop[e.x_bits & e.z_bits]) * total)


def pauli_expansion_coeff(op: DenseOperator, e: PauliElement) -> float:
    """Coefficient c_E in M = sum_E c_E E; real for Hermitian M."""
    c = trace_pauli_product(e, op) / 2 ** op.n
    return c.real if abs(c.imag) <= IMAG_TOL else c  # type: ignore[return-value]


def _finalize(acc: np.ndarray, what: str) -> np.ndarray:
    worst = float(np.max(np.abs(acc.imag)))
    if worst > IMAG_TOL:
        raise ArithmeticError(f"{what} has imaginary residue {worst:.3e}")
    return acc.real.copy()


def enum_a(m1: DenseOperator, m2: DenseOperator | None = None) -> np.ndarray:
    """A_d(M1, M2) = sum over weight-d errors of Tr(E M1) Tr(E M2)."""
    m2 = m1 if m2 is None else m2
    _check_pair(m1, m2)
    n = m1.n
    idx, pop, walsh = _tables(n)
    acc = np.zeros(n + 1, dtype=np.complex128)
    for x in range(1 << n):
        v1 = m1.matrix[idx, idx ^ x]
        v2 = m2.matrix[idx, idx ^ x] if m2 is not m1 else v1
        t1 = walsh @ v1
        t2 = walsh @ v2 if m2 is not m1 else t1
        ysigns = 1 - 2 * (pop[idx & x] & 1)  # (-1)^{wt_y} over all z
        weights = pop[idx | x]
        np.add.at(acc, weights, ysigns * t1 * t2)
    return _finalize(acc, "enum_a")


def enum_b(m1: DenseOperator, m2: DenseOperator | None = None) -> np.ndarray:
    """B_d(M1, M2) = sum over weight-d errors of Tr(E M1 E M2)."""
    m2 = m1 if m2 is None else m2
    _check_pair(m1, m2)
    n = m1.n
    idx, pop, walsh = _tables(n)
    jj = idx[:, None]
    mm = idx[None, :]
    acc = np.zeros(n + 1, dtype=np.complex128)
    for x in range(1 << n):
        w = m1.matrix[jj, jj ^ mm ^ x] * m2.matrix[jj ^ mm, jj ^ x]
        g = w.sum(axis=0)  # g[m] = sum_j M1[j, j^m^x] M2[j^m, j^x]
        traces = walsh @ g
        ysigns = 1 - 2 * (pop[idx & x] & 1)
        weights = pop[idx | x]
        np.add.at(acc, weights, ysigns * traces)
    return _finalize(acc, "enum_b")


def _check_pair(m1: DenseOperator, m2: DenseOperator) -> None:
    if m1.n != m2.n:
        raise ValueError(f"operand sizes differ: n={m1.n} vs n={m2.n}")
    _require_hermitian(m1, "M1")
    _require_hermitian(m2, "M2")


def tilde(op: DenseOperator) -> DenseOperator:
    """The weight-sign twist ~M = sigma_y^{x n} conj(M) sigma_y^{x n}."""
    yn = pauli_matrix(PauliElement.sigma_y_all(op.n)).matrix
    return DenseOperator(yn @ op.matrix.conj() @ yn)


def enum_s(m: DenseOperator, n_op: DenseOperator | None = None) -> np.ndarray:
    """Shadow coefficients S_d(M, N) = B_d(M, ~N)."""
    n_op = m if n_op is None else n_op
    return enum_b(m, tilde(n_op))


def projection_from_additive(code: AdditiveCode) -> DenseOperator:
    """The projection 2^{-dim} sum_E s(E) E of a stabilizer group."""
    if code.n > N_CAP:
        raise ValueError(f"dense oracle capped at n = {N_CAP}, got n={code.n}")
    dim = 1 << code.n
    total = np.zeros((dim, dim), dtype=np.complex128)
    for e in enumerate_group(code):
        total += pauli_matrix(e).matrix
    p = DenseOperator(total / 2 ** code.dim)
    k = 2 ** (code.n - code.dim)
    tr = p.matrix.trace()
    if abs(tr - k) > TRACE_INT_TOL:
        raise ValueError(f"inconsistent signs: projection trace {tr:.6g} != {k}")
    if np.max(np.abs(p.matrix @ p.matrix - p.matrix)) > PROJECTION_TOL:
        raise ValueError("stabilizer sum is not a projection")
    return p


def random_projection(n: int, k: int, seed: int) -> DenseOperator:
    """Rank-k orthogonal projection from QR of a seeded complex Gaussian."""
    if not 1 <= k <= 2 ** n:
        raise ValueError(f"need 1 <= K <= 2^n, got K={k}, n={n}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((2 ** n, k)) + 1j * rng.standard_normal((2 ** n, k))
    q, _ = np.linalg.qr(g)
    return DenseOperator(q @ q.conj().T)


def random_hermitian(n: int, seed: int) -> DenseOperator:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((2 ** n, 2 ** n)) + 1j * rng.standard_normal((2 ** n, 2 ** n))
    return DenseOperator((g + g.conj().T) / 2)


def random_psd(n: int, seed: int) -> DenseOperator:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((2 ** n, 2 ** n)) + 1j * rng.standard_normal((2 ** n, 2 ** n))
    return DenseOperator(g @ g.conj().T / 2 ** n)
