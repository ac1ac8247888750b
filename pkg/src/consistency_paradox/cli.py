"""Command-line front end (``ctx``).

Exit codes: 0 success, 1 verification failure, 2 I/O failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import bounds, optimizer
from .hilbert import StateVector, born_probability, context_probabilities, phi0
from .linalg import hermitian_eigen, inner
from .montecarlo import Context, estimate_from_samples, sample_context, write_records
from .spectral import AA_COEFFICIENTS, NU_EIGENVALUES, build_pi_s, nu_basis, to_nu

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_IO = 2
EXIT_USAGE = 64

CSV_HEADER = "p_s,frontier,bound_eq19,bound_eq24"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


# -- verify -------------------------------------------------------------------

def _verify_checks(perturb: float = 0.0) -> list[tuple[bool, str]]:
    state = phi0()
    if perturb:
        state = StateVector.normalized(state.amplitudes + perturb * np.array([0, 0, 0, 1]), "phi0")
    probs = context_probabilities(state)
    checks = [
        (probs.p_wf_a0 <= 1e-14, f"P_WF(a,0) = {probs.p_wf_a0:.3g} (expected 0)"),
        (probs.p_fw_0a <= 1e-14, f"P_FW(0,a) = {probs.p_fw_0a:.3g} (expected 0)"),
        (probs.p_ff_11 <= 1e-14, f"P_FF(1,1) = {probs.p_ff_11:.3g} (expected 0)"),
        (abs(probs.p_ww_aa - 1 / 12) <= 1e-12, f"P_WW(a,a) = {probs.p_ww_aa:.10f} (expected 1/12)"),
    ]

    dec = hermitian_eigen(build_pi_s())
    spec_ok = bool(np.max(np.abs(dec.eigenvalues - np.array(NU_EIGENVALUES))) <= 1e-12)
    overlaps = [abs(inner(dec.vector(k), v.amplitudes)) for k, v in enumerate(nu_basis())]
    vec_ok = all(o >= 1 - 1e-10 for o in overlaps)
    vals = ", ".join(f"{x:.6f}" for x in dec.eigenvalues)
    checks.append((spec_ok, f"Pi_S eigenvalues = ({vals}) (expected 0, 1/2, 1, 3/2)"))
    checks.append((vec_ok, f"Pi_S eigenvectors match (phi0, nu1, nu2, nu3): min |overlap| = {min(overlaps):.12f}"))

    c = to_nu(StateVector(np.array([1, -1, -1, 1]) / 2.0))
    coef_err = float(np.max(np.abs(c.as_array() - np.array(AA_COEFFICIENTS))))
    coefs = ", ".join(f"{z.real:+.6f}" for z in c.as_array())
    checks.append((coef_err <= 1e-12, f"|a,a> in nu basis = ({coefs}) (expected -1/(2 sqrt 3), 0, 1/2, sqrt(2/3))"))

    p_cr = bounds.critical_p_s()
    order_ok = (float(bounds.PS_EQ19_LIMIT) < bounds.PS_TIGHT < bounds.PS_FRONTIER_ZERO
                and bounds.P_CR < float(bounds.PS_EQ19_LIMIT) and p_cr < float(bounds.PS_EQ19_LIMIT))
    checks.append((order_ok, "constants ordered: P_cr < 3/28 < 1/(5+sqrt(17)) < 0.109612"))
    return checks


def cmd_verify(args) -> int:
    checks = _verify_checks(args.perturb)
    for ok, text in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {text}")
    failed = sum(not ok for ok, _ in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


# -- curve --------------------------------------------------------------------

def curve_rows(ps_min: float, ps_max: float, points: int, mode: str,
               cfg: optimizer.OptimizerConfig = optimizer.OptimizerConfig()) -> list[str]:
    grid = np.linspace(ps_min, ps_max, points)
    frontier = optimizer.frontier_sweep(grid, cfg) if mode in ("frontier", "both") else None
    rows = [CSV_HEADER]
    for i, p in enumerate(grid):
        f = _fmt(frontier[i].p_ww_min) if frontier else ""
        if mode in ("bounds", "both"):
            b19 = _fmt(bounds.bound_eq19(p, clamp=True))
            b24 = _fmt(bounds.bound_eq24(p, clamp=True))
        else:
            b19 = b24 = ""
        rows.append(f"{_fmt(p)},{f},{b19},{b24}")
    return rows


def cmd_curve(args) -> int:
    if not (0.0 <= args.ps_min < args.ps_max <= optimizer.PS_MAX):
        raise UsageError(f"need 0 <= --ps-min < --ps-max <= {optimizer.PS_MAX}")
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    text = "\n".join(curve_rows(args.ps_min, args.ps_max, args.points, args.mode)) + "\n"
    try:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"ctx curve: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.points} rows to {args.out}")
    return EXIT_OK


# -- critical -----------------------------------------------------------------

def cmd_critical(args) -> int:
    cfg = optimizer.OptimizerConfig()
    p_bound = bounds.critical_p_s()
    p_num = optimizer.critical_p_s_numeric(cfg)
    zero = optimizer.frontier_zero(cfg)
    print(f"P_cr (bound) = {p_bound:.6f} (reference {bounds.P_CR} ± 5e-4)")
    print(f"P_cr (frontier) = {p_num:.6f} (reference {bounds.P_CR} ± 5e-4)")
    print(f"frontier zero = {zero:.6f} (reference 0.1096 ± 1e-4)")
    print(f"1/(5+sqrt(17)) = {bounds.PS_TIGHT:.6f} (reference {bounds.PS_FRONTIER_ZERO})")
    print(f"bound_eq24 validity limit = {bounds.PS_EQ24_LIMIT} (bound there {bounds.bound_eq24(bounds.PS_EQ24_LIMIT):.3g})")
    return EXIT_OK


# -- optimize -----------------------------------------------------------------

def cmd_optimize(args) -> int:
    if not 0.0 <= args.p_s <= optimizer.PS_MAX:
        raise UsageError(f"--p-s must lie in [0, {optimizer.PS_MAX}]")
    cfg = optimizer.OptimizerConfig(restarts=args.restarts, seed=args.seed)
    if args.full_space:
        pt = optimizer.frontier_full_space(args.p_s, cfg)
    else:
        pt = optimizer.frontier_theta_family(args.p_s, cfg)
    c = pt.argmin.as_array()
    print(f"mode = {'full-space' if args.full_space else 'theta-family'}")
    print(f"p_s = {_fmt(pt.p_s)}")
    print(f"min P_WW(a,a) = {_fmt(pt.p_ww_min)}")
    print(f"theta = {pt.theta_opt:.10f} (sin theta = {math.sin(pt.theta_opt):.6f})")
    for k, z in enumerate(c):
        print(f"c{k} = {z.real:+.10f} {z.imag:+.10f}i")
    print(f"converged = {pt.converged}")
    return EXIT_OK


# -- simulate -----------------------------------------------------------------

def parse_amplitude(text: str) -> complex:
    s = text.strip().replace(" ", "").replace("i", "j")
    if not s or s.count("j") > 1:
        raise UsageError(f"malformed amplitude {text!r}")
    try:
        return complex(s)
    except ValueError:
        raise UsageError(f"malformed amplitude {text!r}") from None


def _simulation_state(args) -> StateVector:
    if args.state != "custom":
        if args.amplitudes:
            raise UsageError("--amplitudes only applies to --state custom")
        return {"phi0": phi0(), **{f"nu{k}": nu_basis()[k] for k in (1, 2, 3)}}[args.state]
    if not args.amplitudes or len(args.amplitudes) != 4:
        raise UsageError("--state custom needs four --amplitudes")
    amps = np.array([parse_amplitude(a) for a in args.amplitudes])
    n = float(np.linalg.norm(amps))
    if not math.isfinite(n) or n == 0.0:
        raise UsageError("amplitudes cannot be normalized")
    if abs(n - 1.0) > 1e-9:
        print(f"warning: amplitudes renormalized (norm was {n:.12g})", file=sys.stderr)
    return StateVector.normalized(amps, "custom")


def cmd_simulate(args) -> int:
    if args.shots < 100:
        raise UsageError("--shots must be at least 100")
    psi = _simulation_state(args)
    samples = {c: sample_context(psi, c, args.shots, args.seed + c.index) for c in Context}
    report = estimate_from_samples(samples)
    amps = " ".join(f"{z.real:+.6f}{z.imag:+.6f}i" for z in psi.amplitudes)
    print(f"state = {args.state}")
    print(f"amplitudes (00,01,10,11) = {amps}")
    print(f"seed = {args.seed}")
    exact = context_probabilities(psi)
    print(f"exact P_WW(a,a) = {exact.p_ww_aa:.6f}, exact P_S = {exact.p_sum:.6f}")
    print(report.format())
    if args.export:
        try:
            write_records(samples.values(), args.export)
        except OSError as exc:
            print(f"ctx simulate: cannot write {args.export}: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ctx", description="Consistency-paradox bounds and checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="check the exact paradox relations")
    p.add_argument("--perturb", type=float, default=0.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curve", help="export bound/frontier curves as CSV")
    p.add_argument("--ps-min", type=float, default=0.0)
    p.add_argument("--ps-max", type=float, default=0.12)
    p.add_argument("--points", type=int, default=121)
    p.add_argument("--out", required=True)
    p.add_argument("--mode", choices=("bounds", "frontier", "both"), default="both")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("critical", help="report the critical probability sums")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("optimize", help="minimize P_WW(a,a) at fixed P_S")
    p.add_argument("--p-s", type=float, required=True)
    p.add_argument("--full-space", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=32)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("simulate", help="Monte Carlo estimate of the four contexts")
    p.add_argument("--state", choices=("phi0", "nu1", "nu2", "nu3", "custom"), default="phi0")
    p.add_argument("--amplitudes", nargs=4, metavar="A")
    p.add_argument("--shots", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--export")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ctx {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"ctx {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
