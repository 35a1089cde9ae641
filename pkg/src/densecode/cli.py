"""Command-line entry point: ``densecode {alphabet,capacity,sweep,derive}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .alphabets import make_alphabet, overlap_matrix
from .capacity import (
    depolarizing_capacity_grid,
    noisy_capacity_uniform,
    optimize_prior,
    xpauli_difference_grid,
)
from .channels import NOISELESS, PauliChannelParams, apply_pauli_channel, depolarizing, x_pauli
from .errors import DenseCodeError
from .search import search_min_max_overlap
from .states import SchmidtState

FIG1_COLUMNS = ("q", "alpha_sq", "capacity")
FIG2_COLUMNS = ("px", "alpha_sq", "c_standard", "c_equally_distant", "difference")


@dataclass(frozen=True)
class Range:
    start: float
    stop: float
    step: float

    def __post_init__(self):
        if not self.step > 0:
            raise DenseCodeError(f"step must be positive, got {self.step!r}")
        if self.start > self.stop:
            raise DenseCodeError(f"start {self.start!r} exceeds stop {self.stop!r}")

    def values(self) -> np.ndarray:
        count = int(round((self.stop - self.start) / self.step)) + 1
        return np.linspace(self.start, self.start + (count - 1) * self.step, count)


def fmt(x: float) -> str:
    """Six decimals, dot separator, no negative zero."""
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise DenseCodeError(f"cannot write {out}: {exc.strerror}") from exc


def _table(columns, rows, fmt_kind: str) -> str:
    if fmt_kind == "json":
        return json.dumps([dict(zip(columns, (float(v) for v in r))) for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt(v) for v in r])
    return buf.getvalue()


def _schmidt(alpha_sq: float) -> SchmidtState:
    if not 0.0 <= alpha_sq <= 1.0:
        raise DenseCodeError(f"--alpha-sq={alpha_sq!r} must lie in [0, 1]")
    return SchmidtState.from_alpha_sq(alpha_sq)


def cmd_alphabet(args) -> int:
    alphabet = make_alphabet(args.kind, _schmidt(args.alpha_sq))
    overlaps = overlap_matrix(alphabet)
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "alpha_sq": args.alpha_sq,
            "basis": ["00", "10", "01", "11"],
            "letters": [[[float(z.real), float(z.imag)] for z in v] for v in alphabet.letters],
            "overlaps": overlaps.tolist(),
        }
        _write(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    lines = [f"# {args.kind} alphabet, |alpha|^2 = {fmt(args.alpha_sq)}, basis |00>,|10>,|01>,|11>"]
    for k, v in enumerate(alphabet.letters, start=1):
        amps = "  ".join(f"({fmt(z.real)}, {fmt(z.imag)})" for z in v)
        lines.append(f"psi_{k}: {amps}")
    lines.append("# overlaps |<psi_k|psi_l>|^2")
    lines.extend("  ".join(fmt(x) for x in row) for row in overlaps)
    _write("\n".join(lines) + "\n", args.out)
    return 0


def _channel_params(args) -> PauliChannelParams:
    if args.channel == "ideal":
        return NOISELESS
    if args.channel == "depolarizing":
        if args.q is None:
            raise DenseCodeError("--q is required for the depolarizing channel")
        return depolarizing(args.q)
    if args.channel == "xpauli":
        if args.px is None:
            raise DenseCodeError("--px is required for the xpauli channel")
        return x_pauli(args.px)
    return PauliChannelParams(args.px or 0.0, args.py or 0.0, args.pz or 0.0)


def cmd_capacity(args) -> int:
    alphabet = make_alphabet(args.kind, _schmidt(args.alpha_sq))
    params = _channel_params(args)
    if args.prior == "optimize":
        report = optimize_prior(apply_pauli_channel(params, alphabet.densities()))
    else:
        report = noisy_capacity_uniform(alphabet, params)
    payload = {
        "kind": args.kind,
        "alpha_sq": args.alpha_sq,
        "channel": args.channel,
        "channel_params": {"px": params.px, "py": params.py, "pz": params.pz},
        "prior_mode": args.prior,
        **report.to_dict(),
    }
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _verify_fig1(qs, alpha_sqs, cap) -> list[str]:
    failures = []
    steps = np.diff(cap, axis=0)
    if np.any(steps > 1e-9):
        i, j = np.unravel_index(np.argmax(steps), steps.shape)
        failures.append(
            f"capacity increases in q at alpha_sq={alpha_sqs[j]:.6f}: "
            f"q={qs[i]:.6f} -> {qs[i + 1]:.6f} by {steps[i, j]:.3e}"
        )
    peak = cap.max(axis=1)
    half = np.flatnonzero(np.isclose(alpha_sqs, 0.5))
    if half.size and np.any(cap[:, half[0]] < peak - 1e-9):
        failures.append("capacity at alpha_sq=0.5 is not maximal for some q")
    if qs[0] == 0.0 and half.size and abs(cap[0, half[0]] - 2.0) > 1e-9:
        failures.append("capacity at (q=0, alpha_sq=0.5) is not 2")
    return failures


def _verify_fig2(pxs, alpha_sqs, diff) -> list[str]:
    failures = []
    if diff.max() > 1e-12:
        failures.append(f"standard alphabet beats equally-distant by {diff.max():.3e}")
    for j in np.flatnonzero(np.isclose(alpha_sqs, 0.5)):
        if np.max(np.abs(diff[:, j])) > 1e-12:
            failures.append("difference is non-zero along alpha_sq=0.5")
    for i in np.flatnonzero(np.isclose(pxs, 0.0) | np.isclose(pxs, 1.0)):
        if np.max(np.abs(diff[i])) > 1e-12:
            failures.append(f"difference is non-zero along px={pxs[i]:.6f}")
    return failures


def cmd_sweep(args) -> int:
    alpha_sqs = Range(*args.alpha_sq_range).values()
    if args.figure == "fig1":
        qs = Range(*args.q_range).values()
        if qs[0] < 0 or qs[-1] > 1 / 3 + 1e-12:
            raise DenseCodeError("--q-range must stay within [0, 1/3]")
        qs = np.clip(qs, 0.0, 1.0 / 3.0)
        cap = depolarizing_capacity_grid(qs, alpha_sqs)
        rows = [(q, a, cap[i, j]) for i, q in enumerate(qs) for j, a in enumerate(alpha_sqs)]
        _write(_table(FIG1_COLUMNS, rows, args.format), args.out)
        failures = _verify_fig1(qs, alpha_sqs, cap) if args.verify else []
    else:
        pxs = Range(*args.px_range).values()
        if pxs[0] < 0 or pxs[-1] > 1 + 1e-12:
            raise DenseCodeError("--px-range must stay within [0, 1]")
        pxs = np.clip(pxs, 0.0, 1.0)
        c_std, c_ed, diff = xpauli_difference_grid(pxs, alpha_sqs)
        rows = [
            (p, a, c_std[i, j], c_ed[i, j], diff[i, j])
            for i, p in enumerate(pxs)
            for j, a in enumerate(alpha_sqs)
        ]
        _write(_table(FIG2_COLUMNS, rows, args.format), args.out)
        failures = _verify_fig2(pxs, alpha_sqs, diff) if args.verify else []
    for msg in failures:
        print(f"verify: FAIL {msg}", file=sys.stderr)
    if args.verify and not failures:
        print("verify: all checks passed", file=sys.stderr)
    return 1 if failures else 0


def cmd_derive(args) -> int:
    result = search_min_max_overlap(args.delta_sq, restarts=args.restarts, seed=args.seed)
    _write(json.dumps(result.to_dict(), indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="densecode", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    kinds = ("standard", "equally-distant")

    p = sub.add_parser("alphabet", help="print letter amplitudes and the overlap matrix")
    p.add_argument("--kind", choices=kinds, default="equally-distant")
    p.add_argument("--alpha-sq", type=float, default=0.5)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_alphabet)

    p = sub.add_parser("capacity", help="Holevo capacity of an alphabet through a channel")
    p.add_argument("--kind", choices=kinds, default="equally-distant")
    p.add_argument("--alpha-sq", type=float, default=0.5)
    p.add_argument("--channel", choices=("ideal", "depolarizing", "xpauli", "pauli"), default="ideal")
    p.add_argument("--q", type=float)
    p.add_argument("--px", type=float)
    p.add_argument("--py", type=float)
    p.add_argument("--pz", type=float)
    p.add_argument("--prior", choices=("uniform", "optimize"), default="uniform")
    p.add_argument("--out")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("sweep", help="grid data for the capacity figures")
    p.add_argument("figure", choices=("fig1", "fig2"))
    p.add_argument("--q-range", nargs=3, type=float, metavar=("START", "STOP", "STEP"), default=(0.0, 1 / 3, 1 / 60))
    p.add_argument("--px-range", nargs=3, type=float, metavar=("START", "STOP", "STEP"), default=(0.0, 1.0, 0.02))
    p.add_argument(
        "--alpha-sq-range", nargs=3, type=float, metavar=("START", "STOP", "STEP"), default=(0.0, 1.0, 0.02)
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.add_argument("--verify", action="store_true", help="check the qualitative shape of the sweep")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("derive", help="re-derive the equally-distant generators numerically")
    p.add_argument("--delta-sq", type=float, default=0.25)
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_derive)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DenseCodeError as exc:
        print(f"densecode {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
