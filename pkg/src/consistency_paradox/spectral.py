"""The probability-sum operator and its eigenbasis.

``Pi_S = |a,0><a,0| + |0,a><0,a| + |1,1><1,1|`` has the non-degenerate
spectrum 0, 1/2, 1, 3/2 with eigenvectors

    phi0 = (|0,0> + |0,1> + |1,0>)/sqrt(3)
    nu1  = (|0,1> - |1,0>)/sqrt(2)
    nu2  = |1,1>
    nu3  = (2|0,0> - |0,1> - |1,0>)/sqrt(6)

The basis is hard-coded; :func:`~consistency_paradox.linalg.hermitian_eigen`
is only used to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .hilbert import StateVector, as_state, outcome_states, phi0
from .linalg import outer

NU_EIGENVALUES = (0.0, 0.5, 1.0, 1.5)

# |a,a> expanded in (phi0, nu1, nu2, nu3)
AA_COEFFICIENTS = (-1.0 / (2.0 * np.sqrt(3.0)), 0.0, 0.5, np.sqrt(2.0 / 3.0))


@dataclass(frozen=True)
class NuCoefficients:
    """Amplitudes of a state on (phi0, nu1, nu2, nu3)."""

    c0: complex
    c1: complex
    c2: complex
    c3: complex

    @classmethod
    def from_array(cls, c) -> NuCoefficients:
        c = np.asarray(c, dtype=complex)
        if c.shape != (4,):
            raise ValueError(f"expected 4 coefficients, got shape {c.shape}")
        return cls(*(complex(z) for z in c))

    def as_array(self) -> np.ndarray:
        return np.array([self.c0, self.c1, self.c2, self.c3], dtype=complex)

    def magnitudes(self) -> tuple[float, float, float, float]:
        return tuple(float(abs(z)) for z in self.as_array())

    @property
    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.as_array()) ** 2))

    def to_state(self, label: str | None = None) -> StateVector:
        return from_nu(self, label)


@lru_cache(maxsize=None)
def build_pi_s() -> np.ndarray:
    out = outcome_states()
    m = sum(outer(out[k].amplitudes) for k in ("WF", "FW", "FF"))
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def nu_basis() -> tuple[StateVector, StateVector, StateVector, StateVector]:
    nu1 = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2.0)
    nu2 = np.array([0, 0, 0, 1], dtype=complex)
    nu3 = np.array([2, -1, -1, 0], dtype=complex) / np.sqrt(6.0)
    return (
        phi0(),
        StateVector(nu1, label="nu1"),
        StateVector(nu2, label="nu2"),
        StateVector(nu3, label="nu3"),
    )


@lru_cache(maxsize=None)
def _nu_matrix() -> np.ndarray:
    """Columns are the nu-basis vectors."""
    m = np.column_stack([s.amplitudes for s in nu_basis()])
    m.setflags(write=False)
    return m


def to_nu(psi) -> NuCoefficients:
    psi = as_state(psi)
    return NuCoefficients.from_array(_nu_matrix().conj().T @ psi.amplitudes)


def from_nu(c: NuCoefficients, label: str | None = None) -> StateVector:
    return StateVector(_nu_matrix() @ c.as_array(), label=label)


def expectation(m, psi) -> float:
    psi = as_state(psi)
    a = psi.amplitudes
    return float(np.vdot(a, np.asarray(m) @ a).real)


def _coefficients(c) -> np.ndarray:
    return c.as_array() if isinstance(c, NuCoefficients) else np.asarray(c, dtype=complex)


def p_sum_from_nu(c) -> float:
    """P_S = |c1|^2/2 + |c2|^2 + 3|c3|^2/2."""
    w = np.abs(_coefficients(c)) ** 2
    return float(0.5 * w[1] + w[2] + 1.5 * w[3])


def p_ww_from_nu(c) -> float:
    """P_WW(a,a) = |c0/(2 sqrt 3) - c2/2 - sqrt(2/3) c3|^2."""
    z = _coefficients(c)
    amp = z[0] / (2.0 * np.sqrt(3.0)) - 0.5 * z[2] - np.sqrt(2.0 / 3.0) * z[3]
    return float(abs(amp) ** 2)
