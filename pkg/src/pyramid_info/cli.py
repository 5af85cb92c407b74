"""Command-line front end: preset figure sweep, custom sweeps, point inspection, oracle check.

Exit statuses: 0 success, 1 usage/IO error, 2 verification finding.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .ensemble import gamma_bounds, holevo_chi, make_ensemble
from .errors import DomainError
from .information import adjusted_success_probability, channel
from .measurements import edge_cosine, symmetric_povm
from .optimize import (
    CLAMP_MARGIN,
    GridSpec,
    SweepRecord,
    accessible_info_oracle,
    max_success_oracle,
    optimize_ims,
    sweep,
)

FIGURE1_DIMS = (3, 4, 5, 6, 7, 8, 9, 10, 20, 100, 500)
FIGURE1_GRID = GridSpec(gamma_min=-0.3, gamma_max=0.99, gamma_steps=200)

CSV_HEADER = "N,gamma,I_srm,I_ims,delta_I,s_opt,lambda_opt,P_srm,P_ims"

VERIFY_DIM_GUARD = 6
INFO_AGREEMENT_TOL = 1e-3
SUCCESS_AGREEMENT_TOL = 1e-3


@dataclass(frozen=True)
class RunConfig:
    command: str
    dims: tuple[int, ...]
    gamma_min: float
    gamma_max: float
    gamma_steps: int
    seed: int
    restarts: int
    output_path: str
    format: str


def _fmt(x: float) -> str:
    # 12 significant digits; +0.0 normalizes negative zero
    return f"{x + 0.0:.12g}"


def _record_row(r: SweepRecord) -> str:
    return ",".join(
        [str(r.dim)]
        + [_fmt(v) for v in (r.gamma, r.i_srm, r.i_ims, r.delta_i, r.s_opt, r.lambda_opt, r.p_srm, r.p_ims)]
    )


def _record_dict(r: SweepRecord) -> dict:
    return {
        "dim": r.dim,
        "gamma": r.gamma,
        "i_srm": r.i_srm,
        "i_ims": r.i_ims,
        "delta_i": r.delta_i,
        "s_opt": r.s_opt,
        "lambda_opt": r.lambda_opt,
        "p_srm": r.p_srm,
        "p_ims": r.p_ims,
    }


def _clamp_notes(dims, grid: GridSpec) -> list[dict]:
    notes = []
    for dim in sorted(dims):
        lo, hi = gamma_bounds(dim)
        lo_eff = lo + CLAMP_MARGIN
        hi_eff = hi - CLAMP_MARGIN
        if grid.gamma_min < lo_eff or grid.gamma_max > hi_eff:
            notes.append(
                {
                    "dim": dim,
                    "gamma_lo": max(grid.gamma_min, lo_eff),
                    "gamma_hi": min(grid.gamma_max, hi_eff),
                }
            )
    return notes


def _write_sweep(records, dims, grid: GridSpec, path: str, fmt: str) -> None:
    notes = _clamp_notes(dims, grid)
    if fmt == "csv":
        lines = [CSV_HEADER] + [_record_row(r) for r in records]
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
        # the CSV body stays exactly header+rows; clamping is reported out of band
        for note in notes:
            print(
                f"note: dim={note['dim']} gamma grid clamped to "
                f"[{_fmt(note['gamma_lo'])}, {_fmt(note['gamma_hi'])}]",
                file=sys.stderr,
            )
    else:
        payload = {
            "metadata": {
                "dims": sorted(dims),
                "gamma_min": grid.gamma_min,
                "gamma_max": grid.gamma_max,
                "gamma_steps": grid.gamma_steps,
                "clamped": notes,
            },
            "records": [_record_dict(r) for r in records],
        }
        with open(path, "w", encoding="utf-8", newline="") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")


def validate_config(cfg: RunConfig) -> None:
    if not cfg.dims:
        raise DomainError("dims: at least one dimension is required")
    if any(d < 2 for d in cfg.dims):
        raise DomainError(f"dims: every dimension must be >= 2, got {list(cfg.dims)}")
    if cfg.gamma_min > cfg.gamma_max:
        raise DomainError(
            f"gamma_min: must not exceed gamma_max ({cfg.gamma_min:g} > {cfg.gamma_max:g})"
        )
    if cfg.gamma_steps < 1:
        raise DomainError(f"gamma_steps: must be >= 1, got {cfg.gamma_steps}")
    if cfg.format not in ("csv", "json"):
        raise DomainError(f"format: must be csv or json, got {cfg.format}")


def cmd_figure1(output_path: str) -> int:
    records = sweep(FIGURE1_DIMS, FIGURE1_GRID)
    _write_sweep(records, FIGURE1_DIMS, FIGURE1_GRID, output_path, "csv")
    return 0


def cmd_sweep(cfg: RunConfig) -> int:
    validate_config(cfg)
    grid = GridSpec(cfg.gamma_min, cfg.gamma_max, cfg.gamma_steps)
    records = sweep(cfg.dims, grid)
    _write_sweep(records, cfg.dims, grid, cfg.output_path, cfg.format)
    return 0


def cmd_info(dim: int, gamma: float) -> int:
    ens = make_ensemble(dim, gamma)
    ims = optimize_ims(ens)
    ch_opt = channel(ens, symmetric_povm(dim, ims.s_opt))
    payload = {
        "dim": dim,
        "gamma": gamma,
        "c": ens.comp_edge,
        "d": ens.comp_flat,
        "holevo_chi": holevo_chi(ens),
        "i_srm": ims.i_srm,
        "i_ims": ims.i_ims,
        "delta_i": ims.delta_i,
        "s_opt": ims.s_opt,
        "lambda_opt": ims.lambda_opt,
        "edge_cosine": edge_cosine(symmetric_povm(dim, ims.s_opt)),
        "p_srm": (ens.comp_edge + ens.comp_flat) ** 2,
        "p_ims": ch_opt.p_hit,
        "p_ims_adjusted": adjusted_success_probability(ch_opt),
    }
    print(json.dumps(payload, indent=2))
    return 0


def cmd_verify(dim: int, gamma: float, restarts: int, seed: int, force: bool = False) -> int:
    if dim > VERIFY_DIM_GUARD and not force:
        print(
            f"error: verify is limited to dim <= {VERIFY_DIM_GUARD} "
            "(oracle cost grows quickly); pass --force to override",
            file=sys.stderr,
        )
        return 1
    ens = make_ensemble(dim, gamma)
    ims = optimize_ims(ens)
    oracle = accessible_info_oracle(ens, restarts=restarts, seed=seed)
    p_oracle = max_success_oracle(ens, restarts=restarts, seed=seed)
    p_srm = (ens.comp_edge + ens.comp_flat) ** 2

    info_gap = oracle.i_best - ims.i_ims
    success_gap = p_oracle - p_srm
    ok = abs(info_gap) <= INFO_AGREEMENT_TOL and success_gap <= SUCCESS_AGREEMENT_TOL

    print(f"point              N={dim} gamma={_fmt(gamma)}")
    print(f"I_srm (family)     {_fmt(ims.i_srm)}")
    print(f"I_ims (family)     {_fmt(ims.i_ims)}  at s_opt={_fmt(ims.s_opt)} lambda={_fmt(ims.lambda_opt)}")
    print(f"delta_I            {_fmt(ims.delta_i)}")
    print(
        f"I oracle           {_fmt(oracle.i_best)}  "
        f"(n_outcomes={oracle.n_outcomes} restarts={oracle.restarts} "
        f"seed={oracle.seed} converged={oracle.converged_runs})"
    )
    print(f"I oracle - I_ims   {_fmt(info_gap)}")
    print(f"P_srm (closed)     {_fmt(p_srm)}")
    print(f"P oracle           {_fmt(p_oracle)}")
    print(f"P oracle - P_srm   {_fmt(success_gap)}")
    if ok:
        print("verdict            OK: family matches the unconstrained search")
        return 0
    print("verdict            FINDING: unconstrained search disagrees with the family")
    if info_gap > INFO_AGREEMENT_TOL:
        print(f"finding            oracle information exceeds the family by {_fmt(info_gap)}")
    if -info_gap > INFO_AGREEMENT_TOL:
        print(f"finding            oracle fell short of the family by {_fmt(-info_gap)}")
    if success_gap > SUCCESS_AGREEMENT_TOL:
        print(f"finding            oracle guessing rate exceeds the SRM value by {_fmt(success_gap)}")
    return 2


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"dims must be comma-separated integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pyramid-info",
        description="Compare square-root and information-maximizing measurements on pyramid ensembles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fig = sub.add_parser("figure1", help="preset delta-I sweep over the standard dimension list")
    p_fig.add_argument("--out", required=True, help="output CSV path")

    p_sweep = sub.add_parser("sweep", help="custom (dims x gamma) comparison sweep")
    p_sweep.add_argument("--dims", type=_parse_dims, required=True, help="comma-separated dimensions")
    p_sweep.add_argument("--gamma-min", type=float, required=True)
    p_sweep.add_argument("--gamma-max", type=float, required=True)
    p_sweep.add_argument("--gamma-steps", type=int, required=True)
    p_sweep.add_argument("--out", required=True, help="output path")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")

    p_info = sub.add_parser("info", help="closed-form and optimized quantities at one point")
    p_info.add_argument("--dim", type=int, required=True)
    p_info.add_argument("--gamma", type=float, required=True)

    p_verify = sub.add_parser("verify", help="check the family optimum against brute-force oracles")
    p_verify.add_argument("--dim", type=int, required=True)
    p_verify.add_argument("--gamma", type=float, required=True)
    p_verify.add_argument("--restarts", type=int, default=50)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--force", action="store_true", help="override the dim <= 6 cost guard")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for verification findings
        return 0 if exc.code in (0, None) else 1
    try:
        if args.command == "figure1":
            return cmd_figure1(args.out)
        if args.command == "sweep":
            cfg = RunConfig(
                command="sweep",
                dims=args.dims,
                gamma_min=args.gamma_min,
                gamma_max=args.gamma_max,
                gamma_steps=args.gamma_steps,
                seed=0,
                restarts=0,
                output_path=args.out,
                format=args.format,
            )
            return cmd_sweep(cfg)
        if args.command == "info":
            return cmd_info(args.dim, args.gamma)
        if args.command == "verify":
            return cmd_verify(args.dim, args.gamma, args.restarts, args.seed, args.force)
        raise AssertionError(f"unhandled command {args.command!r}")
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
