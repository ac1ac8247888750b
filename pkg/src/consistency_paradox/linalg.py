"""Small dense complex linear algebra (dimension <= 4).

Vectors and matrices are plain ``numpy`` arrays of dtype ``complex128``.
The eigensolver is a cyclic complex Jacobi iteration, which is more than
fast enough at this size and easy to reason about.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

MAX_DIM = 4
HERMITIAN_TOL = 1e-12
DEGENERACY_GAP = 1e-9


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending eigenvalues with eigenvectors stored as matrix columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def vector(self, k: int) -> np.ndarray:
        return self.eigenvectors[:, k]

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_vector(u, dim: int | None = None) -> np.ndarray:
    arr = np.asarray(u, dtype=complex)
    if arr.ndim != 1 or not 1 <= arr.size <= MAX_DIM:
        raise ValueError(f"expected a vector of length 1..{MAX_DIM}, got shape {arr.shape}")
    if dim is not None and arr.size != dim:
        raise ValueError(f"expected dimension {dim}, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector has non-finite entries")
    return arr


def as_matrix(m) -> np.ndarray:
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or not 1 <= arr.shape[0] <= MAX_DIM:
        raise ValueError(f"expected a square matrix of size 1..{MAX_DIM}, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def inner(u, v) -> complex:
    """Return <u|v>, conjugate-linear in the first argument."""
    u = as_vector(u)
    v = as_vector(v)
    if u.size != v.size:
        raise ValueError(f"dimension mismatch: {u.size} vs {v.size}")
    return complex(np.vdot(u, v))


def norm(u) -> float:
    return float(np.sqrt(inner(u, u).real))


def kron(u, v) -> np.ndarray:
    """Two-qubit product vector in the ordering (0,0), (0,1), (1,0), (1,1)."""
    u = as_vector(u, 2)
    v = as_vector(v, 2)
    return np.array([u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]])


def outer(u, v=None) -> np.ndarray:
    """|u><v| (or the projector |u><u| when ``v`` is omitted)."""
    u = as_vector(u)
    v = u if v is None else as_vector(v, u.size)
    return np.outer(u, v.conj())


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    m = as_matrix(m)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def _off_norm(a: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.abs(a - np.diag(np.diag(a))) ** 2)))


def _rotation(a: np.ndarray, p: int, q: int) -> np.ndarray:
    """Unitary that zeroes a[p, q] under a -> U^H a U."""
    n = a.shape[0]
    b = a[p, q]
    mag = abs(b)
    u = np.eye(n, dtype=complex)
    if mag == 0.0:
        return u
    phase = b / mag
    tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
    c = 1.0 / np.hypot(1.0, t)
    s = t * c
    # diag(1, conj(phase)) makes the (p, q) entry real, then a real rotation
    u[p, p] = c
    u[p, q] = s
    u[q, p] = -s * phase.conjugate()
    u[q, q] = c * phase.conjugate()
    return u


def _orthonormalize_clusters(values: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    vectors = vectors.copy()
    start = 0
    n = len(values)
    while start < n:
        stop = start + 1
        while stop < n and values[stop] - values[stop - 1] < DEGENERACY_GAP:
            stop += 1
        block = vectors[:, start:stop]
        # modified Gram-Schmidt inside the cluster
        for j in range(block.shape[1]):
            for k in range(j):
                block[:, j] -= np.vdot(block[:, k], block[:, j]) * block[:, k]
            block[:, j] /= np.linalg.norm(block[:, j])
        vectors[:, start:stop] = block
        start = stop
    return vectors


def _fix_phase(vectors: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rotate each column so its first non-negligible entry is real positive."""
    vectors = vectors.copy()
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        idx = int(np.argmax(np.abs(col) > tol))
        z = col[idx]
        if abs(z) > 0:
            vectors[:, k] = col * (abs(z) / z)
    return vectors


def hermitian_eigen(m, tol: float = 1e-15, max_sweeps: int = 60) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Eigenvalues come back in ascending order. Vectors inside a degenerate
    cluster (gap below ``DEGENERACY_GAP``) are an arbitrary orthonormal basis
    of that eigenspace.
    """
    a = as_matrix(m)
    if not is_hermitian(a):
        raise ValueError("matrix is not Hermitian within 1e-12")
    n = a.shape[0]
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    scale = max(float(np.linalg.norm(a)), 1.0)
    for _ in range(max_sweeps):
        if _off_norm(a) <= tol * scale:
            break
        for p, q in combinations(range(n), 2):
            if abs(a[p, q]) <= 1e-300:
                continue
            u = _rotation(a, p, q)
            a = u.conj().T @ a @ u
            a[p, q] = a[q, p] = 0.0
            v = v @ u
    else:
        raise RuntimeError("Jacobi iteration did not converge")

    values = np.diag(a).real.copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = _orthonormalize_clusters(values, v[:, order])
    return SpectralDecomposition(values, _fix_phase(vectors))
