"""Shot sampling of the four measurement contexts.

Each context is a product measurement (W or F on system 1, W or F on
system 2) and is sampled on its own fresh preparations; no joint
distribution over all four contexts is ever assumed. Per-context streams
use PCG64 seeded with ``seed + context.index``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, TextIO

import numpy as np

from .hilbert import ContextProbabilities, as_state, product_state


class Context(enum.Enum):
    WW = ("W", "W")
    WF = ("W", "F")
    FW = ("F", "W")
    FF = ("F", "F")

    @property
    def index(self) -> int:
        return list(Context).index(self)

    def outcomes(self) -> list[tuple[str, str]]:
        """The four outcome label pairs in sampling (inverse-CDF) order."""
        labels = {"W": ("a", "b"), "F": ("0", "1")}
        first, second = (labels[m] for m in self.value)
        return [(x, y) for x in first for y in second]

    @classmethod
    def parse(cls, name) -> Context:
        if isinstance(name, Context):
            return name
        try:
            return cls[str(name).upper()]
        except KeyError:
            raise ValueError(f"unknown context {name!r}") from None


# outcome whose frequency enters the inequality, per context
TARGET_OUTCOME = {
    Context.WW: ("a", "a"),
    Context.WF: ("a", "0"),
    Context.FW: ("0", "a"),
    Context.FF: ("1", "1"),
}


@dataclass(frozen=True)
class ShotRecord:
    context: Context
    outcome1: str
    outcome2: str

    def __post_init__(self):
        allowed = {"W": ("a", "b"), "F": ("0", "1")}
        m1, m2 = self.context.value
        if self.outcome1 not in allowed[m1] or self.outcome2 not in allowed[m2]:
            raise ValueError(f"outcome ({self.outcome1},{self.outcome2}) impossible in context {self.context.name}")

    def to_line(self) -> str:
        return f"{self.context.name},{self.outcome1},{self.outcome2}"

    @classmethod
    def from_line(cls, line: str) -> ShotRecord:
        parts = line.strip().split(",")
        if len(parts) != 3:
            raise ValueError(f"malformed shot record {line!r}")
        return cls(Context.parse(parts[0]), parts[1], parts[2])


class ShotSamples:
    """Outcomes of ``n`` shots in one context, stored as indices 0..3.

    Behaves as a read-only sequence of :class:`ShotRecord`.
    """

    def __init__(self, context: Context, indices: np.ndarray):
        self.context = context
        self.indices = np.asarray(indices, dtype=np.uint8)
        self.indices.setflags(write=False)
        self._labels = context.outcomes()

    def __len__(self) -> int:
        return len(self.indices)

    def __getitem__(self, i: int) -> ShotRecord:
        x, y = self._labels[int(self.indices[i])]
        return ShotRecord(self.context, x, y)

    def __iter__(self) -> Iterator[ShotRecord]:
        for k in self.indices:
            x, y = self._labels[int(k)]
            yield ShotRecord(self.context, x, y)

    def counts(self) -> np.ndarray:
        return np.bincount(self.indices, minlength=4)

    def frequencies(self) -> np.ndarray:
        return self.counts() / len(self)

    def frequency(self, outcome: tuple[str, str]) -> float:
        return float(self.frequencies()[self._labels.index(tuple(outcome))])

    def lines(self) -> list[str]:
        table = [f"{self.context.name},{x},{y}" for x, y in self._labels]
        return [table[k] for k in self.indices]


def context_distribution(psi, context) -> np.ndarray:
    """Born probabilities of the context's four outcomes, in sampling order."""
    psi = as_state(psi)
    context = Context.parse(context)
    amps = np.array([np.vdot(product_state(x, y).amplitudes, psi.amplitudes)
                     for x, y in context.outcomes()])
    p = np.abs(amps) ** 2
    return p / p.sum()


def sample_context(psi, context, n: int, seed: int) -> ShotSamples:
    """``n`` i.i.d. shots by inverse-CDF lookup on the four outcome probabilities."""
    if n < 1:
        raise ValueError("need at least one shot")
    context = Context.parse(context)
    cdf = np.cumsum(context_distribution(psi, context))
    cdf[-1] = 1.0
    rng = np.random.Generator(np.random.PCG64(seed))
    u = rng.random(n)
    idx = np.searchsorted(cdf, u, side="right")
    return ShotSamples(context, idx)


@dataclass(frozen=True)
class EstimateReport:
    shots_per_context: int
    estimates: ContextProbabilities
    std_errors: tuple[float, float, float, float]
    slack_estimate: float
    slack_z: float

    def format(self) -> str:
        e = self.estimates
        se = self.std_errors
        rows = [
            ("P_WF(a,0)", e.p_wf_a0, se[0]),
            ("P_FW(0,a)", e.p_fw_0a, se[1]),
            ("P_FF(1,1)", e.p_ff_11, se[2]),
            ("P_WW(a,a)", e.p_ww_aa, se[3]),
        ]
        lines = [f"shots per context = {self.shots_per_context}"]
        lines += [f"{name} = {p:.4f} +/- {s:.4f}" for name, p, s in rows]
        lines.append(f"P_S = {e.p_sum:.4f}")
        lines.append(f"slack P_WW(a,a) - P_S = {self.slack_estimate:+.6f}")
        lines.append(f"slack z-score = {self.slack_z:+.2f}")
        verdict = "violated" if self.slack_z > 5 else "not certified violated"
        lines.append(f"non-contextual inequality: {verdict} (z > 5 required)")
        return "\n".join(lines)


def binomial_std_error(p_hat: float, n: int) -> float:
    return math.sqrt(p_hat * (1.0 - p_hat) / n)


def estimate_from_samples(samples: dict[Context, ShotSamples]) -> EstimateReport:
    n = len(samples[Context.WW])
    if any(len(s) != n for s in samples.values()):
        raise ValueError("contexts must have equal shot counts")
    order = (Context.WF, Context.FW, Context.FF, Context.WW)
    p_hat = [samples[c].frequency(TARGET_OUTCOME[c]) for c in order]
    se = tuple(binomial_std_error(p, n) for p in p_hat)
    est = ContextProbabilities(*p_hat)
    slack = est.slack
    slack_se = math.sqrt(sum(s * s for s in se))
    # all-degenerate frequencies give zero variance; floor at one shot's worth
    slack_z = slack / max(slack_se, 1.0 / n)
    return EstimateReport(n, est, se, slack, slack_z)


def estimate(psi, n_per_context: int, seed: int) -> EstimateReport:
    if n_per_context < 100:
        raise ValueError("need at least 100 shots per context")
    psi = as_state(psi)
    samples = {c: sample_context(psi, c, n_per_context, seed + c.index) for c in Context}
    return estimate_from_samples(samples)


def write_records(samples: Iterable[ShotSamples], out: str | Path | TextIO) -> None:
    """Export one ``context,outcome1,outcome2`` line per shot."""
    text = "".join(line + "\n" for s in samples for line in s.lines())
    if hasattr(out, "write"):
        out.write(text)
    else:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def read_records(path: str | Path) -> list[ShotRecord]:
    with open(path, encoding="ascii") as fh:
        return [ShotRecord.from_line(line) for line in fh if line.strip()]
