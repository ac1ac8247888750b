"""Named states of the two-system paradox and their Born probabilities.

Each system has an F basis {|0>, |1>} and a W basis {|a>, |b>} related by

    |a> = (|0> - |1>)/sqrt(2),   |b> = (|0> + |1>)/sqrt(2).

Two-system vectors live in the (F1, F2) product basis ordered
(0,0), (0,1), (1,0), (1,1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .linalg import as_vector, inner, kron

NORM_TOL = 1e-9
SQRT2 = np.sqrt(2.0)

_SINGLE = {
    "zero": np.array([1.0, 0.0], dtype=complex),
    "one": np.array([0.0, 1.0], dtype=complex),
    "a": np.array([1.0, -1.0], dtype=complex) / SQRT2,
    "b": np.array([1.0, 1.0], dtype=complex) / SQRT2,
}
_ALIASES = {"0": "zero", "1": "one"}


def basis_state(which: str) -> np.ndarray:
    """Single-system basis vector: ``"zero"``/``"0"``, ``"one"``/``"1"``, ``"a"`` or ``"b"``."""
    key = _ALIASES.get(str(which), str(which))
    try:
        return _SINGLE[key].copy()
    except KeyError:
        raise ValueError(f"unknown basis state {which!r}") from None


@dataclass(frozen=True)
class StateVector:
    """Unit-norm pure state of the two systems.

    Inputs whose norm is off by less than ``NORM_TOL`` are renormalized
    silently; anything worse is rejected. Use :meth:`normalized` to build a
    state from arbitrary (non-zero) amplitudes.
    """

    amplitudes: np.ndarray
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        amps = as_vector(self.amplitudes, 4).copy()
        n = float(np.linalg.norm(amps))
        if abs(n - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (norm {n:.12g})")
        amps /= n
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def normalized(cls, amplitudes, label: str | None = None) -> StateVector:
        amps = as_vector(amplitudes, 4)
        n = float(np.linalg.norm(amps))
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(amps / n, label)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amplitudes, dtype=dtype)

    def __repr__(self) -> str:
        name = f"{self.label}: " if self.label else ""
        return f"StateVector({name}{np.array2string(self.amplitudes, precision=6)})"


def as_state(psi) -> StateVector:
    return psi if isinstance(psi, StateVector) else StateVector(psi)


def product_state(x: str, y: str) -> StateVector:
    """|x, y> with x, y in {0, 1, a, b}."""
    return StateVector(kron(basis_state(x), basis_state(y)), label=f"|{x},{y}>")


@lru_cache(maxsize=None)
def phi0() -> StateVector:
    """The only state orthogonal to |a,0>, |0,a> and |1,1>."""
    return StateVector(np.array([1, 1, 1, 0], dtype=complex) / np.sqrt(3.0), label="phi0")


@lru_cache(maxsize=None)
def outcome_states() -> dict[str, StateVector]:
    """Outcome vectors keyed by context: WF -> |a,0>, FW -> |0,a>, FF -> |1,1>, WW -> |a,a>."""
    return {
        "WF": product_state("a", "0"),
        "FW": product_state("0", "a"),
        "FF": product_state("1", "1"),
        "WW": product_state("a", "a"),
    }


def born_probability(psi, outcome) -> float:
    """|<outcome|psi>|^2 for two normalized states."""
    psi = as_state(psi)
    outcome = as_state(outcome)
    p = abs(inner(outcome.amplitudes, psi.amplitudes)) ** 2
    return min(max(p, 0.0), 1.0)


@dataclass(frozen=True)
class ContextProbabilities:
    p_wf_a0: float
    p_fw_0a: float
    p_ff_11: float
    p_ww_aa: float

    @property
    def p_sum(self) -> float:
        """Total probability of the three "error" outcomes."""
        return self.p_wf_a0 + self.p_fw_0a + self.p_ff_11

    @property
    def slack(self) -> float:
        return self.p_ww_aa - self.p_sum

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p_wf_a0, self.p_fw_0a, self.p_ff_11, self.p_ww_aa)


def context_probabilities(psi) -> ContextProbabilities:
    psi = as_state(psi)
    out = outcome_states()
    return ContextProbabilities(
        p_wf_a0=born_probability(psi, out["WF"]),
        p_fw_0a=born_probability(psi, out["FW"]),
        p_ff_11=born_probability(psi, out["FF"]),
        p_ww_aa=born_probability(psi, out["WW"]),
    )


def noncontextual_slack(psi) -> float:
    """P_WW(a,a) - P_S.

    Non-contextual assignments of outcomes require this to be <= 0, so a
    strictly positive value certifies a violation.
    """
    return context_probabilities(psi).slack


def constraint_matrix() -> np.ndarray:
    """Rows <a,0|, <0,a|, <1,1|; their common null space is spanned by phi0."""
    out = outcome_states()
    return np.array([out[k].amplitudes.conj() for k in ("WF", "FW", "FF")])
