"""Command-line interface: ``gpsrad {solve,scan,density,expect}``.

Exit codes: 0 success, 2 usage or configuration error, 3 numerical failure,
4 I/O failure. Results are computed in full before anything is written, so a
failed run leaves no output file behind.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError, ExpressionError, PotentialEvaluationError
from .observables import expectation_rk, interpolate_u
from .operator import UnitConvention
from .potentials import Logarithmic, PotentialSpec, PowerLaw, potential_from_string
from .spectrum import DEFAULT_ALPHA, DEFAULT_N, DEFAULT_RMAX, solve

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4
SIG_DIGITS = 12


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    potential: str
    ell_list: list[int] = field(default_factory=lambda: [0])
    states_per_ell: int = 1
    N: int = DEFAULT_N
    r_max: float = DEFAULT_RMAX
    alpha: float = DEFAULT_ALPHA
    convention: str = "auto"
    output: str | None = None
    format: str = "csv"

    def validate(self) -> None:
        if self.N < 4:
            raise ConfigError(f"grid order must be at least 4, got {self.N}")
        if self.states_per_ell < 1:
            raise ConfigError("--states must be at least 1")
        if not (self.r_max > 0 and self.alpha > 0):
            raise ConfigError("--rmax and --alpha must be positive")
        if self.convention not in ("auto", "au", "hbar2m1"):
            raise ConfigError(f"unknown convention {self.convention!r}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")
        if not self.ell_list or min(self.ell_list) < 0:
            raise ConfigError("--ell must list non-negative integers")


def default_convention(spec: PotentialSpec) -> UnitConvention:
    """hbar = 2m = 1 for power-law and log potentials, atomic units otherwise."""
    if isinstance(spec, (PowerLaw, Logarithmic)):
        return UnitConvention.HBAR2M1
    return UnitConvention.AU


def resolve(config: RunConfig) -> tuple[PotentialSpec, UnitConvention]:
    config.validate()
    try:
        spec = potential_from_string(config.potential)
    except (ExpressionError, DomainError) as exc:
        raise ConfigError(f"bad potential {config.potential!r}: {exc}") from exc
    if config.convention == "auto":
        conv = default_convention(spec)
    else:
        conv = UnitConvention(config.convention)
    return spec, conv


def fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.{SIG_DIGITS}g}"


def _jsonable(value):
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(fmt(value))
    return value


def render(records: list[dict], fmt_name: str, config: dict) -> str:
    if fmt_name == "json":
        doc = {
            "config": config,
            "records": [{k: _jsonable(v) for k, v in rec.items()} for rec in records],
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    if records:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(records[0].keys())
        for rec in records:
            writer.writerow([v if isinstance(v, str) else fmt(v) for v in rec.values()])
    return buf.getvalue()


def emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    with open(output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def stable_digits(values, max_digits: int = 15) -> int:
    """Largest number of significant digits on which all values agree after rounding."""
    best = 0
    for k in range(1, max_digits + 1):
        if len({f"{v:.{k - 1}e}" for v in values}) == 1:
            best = k
    return best


def _solve_all(config: RunConfig, spec, conv, states: int | None = None):
    return [
        solve(
            spec, ell, states or config.states_per_ell,
            N=config.N, r_max=config.r_max, alpha=config.alpha, convention=conv,
        )
        for ell in sorted(config.ell_list)
    ]


def cmd_solve(config: RunConfig) -> list[dict]:
    spec, conv = resolve(config)
    records = []
    for res in _solve_all(config, spec, conv):
        for s in res.states:
            records.append(
                {"ell": s.ell, "n": s.n, "energy": s.energy,
                 "norm_residual": s.residual, "node_count": s.node_count}
            )
    return records


def cmd_scan(config: RunConfig, n_list, rmax_list, alpha_list, state: int = 0) -> list[dict]:
    spec, conv = resolve(config)
    if not n_list or not rmax_list or not alpha_list:
        raise ConfigError("scan parameter lists must be non-empty")
    ell = config.ell_list[0]
    rows = []
    for n, rmax, alpha in itertools.product(n_list, rmax_list, alpha_list):
        sub = RunConfig(**{**asdict(config), "N": n, "r_max": rmax, "alpha": alpha})
        sub.validate()
        res = solve(spec, ell, state + 1, N=n, r_max=rmax, alpha=alpha, convention=conv)
        if len(res.states) <= state:
            raise ConfigError(f"state {state} of l={ell} is not bound at N={n}, r_max={rmax}")
        rows.append({"ell": ell, "n": state, "N": n, "r_max": rmax, "alpha": alpha,
                     "energy": res.states[state].energy})
    digits = stable_digits([r["energy"] for r in rows])
    for r in rows:
        r["stable_digits"] = digits
    return rows


def _select_state(config: RunConfig, spec, conv, ell: int, n: int):
    if n < 0:
        raise ConfigError(f"state index must be non-negative, got {n}")
    res = solve(spec, ell, n + 1, N=config.N, r_max=config.r_max,
                alpha=config.alpha, convention=conv)
    if len(res.states) <= n:
        raise ConfigError(f"only {len(res.states)} bound states available for l={ell}")
    return res.states[n]


def cmd_density(config: RunConfig, n: int, resample: int = 0) -> list[dict]:
    spec, conv = resolve(config)
    state = _select_state(config, spec, conv, config.ell_list[0], n)
    records = [{"kind": "node", "r": r, "density": u * u} for r, u in zip(state.r, state.u)]
    if resample < 0:
        raise ConfigError("--resample must be non-negative")
    if resample:
        rs = np.linspace(0.0, state.map.r_max, resample)
        us = np.atleast_1d(interpolate_u(state, rs))
        records += [{"kind": "resampled", "r": r, "density": u * u} for r, u in zip(rs, us)]
    return records


def cmd_expect(config: RunConfig, k_list) -> list[dict]:
    spec, conv = resolve(config)
    if not k_list:
        raise ConfigError("--k must list at least one power")
    if min(k_list) < -1:
        raise ConfigError("<r^k> requires k >= -1")
    records = []
    for res in _solve_all(config, spec, conv):
        for s in res.states:
            for k in k_list:
                records.append({"ell": s.ell, "n": s.n, "k": k, "value": expectation_rk(s, k)})
    return records


def _int_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _float_list(text: str) -> list[float]:
    return [float(p) for p in text.split(",") if p.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpsrad", description="Bound states of central potentials on a mapped LGL grid."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--potential", required=True,
                        help="name:key=val,... (powerlaw, coulomb, harmonic, log, morse, aho) "
                             "or expr:<V(r)>")
    common.add_argument("--ell", default="0", help="angular momenta, e.g. 0,2 or 0..5")
    common.add_argument("--states", type=int, default=1, help="states per l")
    common.add_argument("--grid-n", type=int, default=DEFAULT_N)
    common.add_argument("--rmax", type=float, default=DEFAULT_RMAX)
    common.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    common.add_argument("--convention", default="auto", choices=["auto", "au", "hbar2m1"])
    common.add_argument("--format", default="csv", choices=["csv", "json"])
    common.add_argument("--out", default=None, help="output file (default: stdout)")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="eigenvalues per l")
    scan = sub.add_parser("scan", parents=[common], help="convergence scan of one state")
    scan.add_argument("--state", type=int, default=0, help="radial index n to track")
    scan.add_argument("--grid-n-list", default=None)
    scan.add_argument("--rmax-list", default=None)
    scan.add_argument("--alpha-list", default=None)
    dens = sub.add_parser("density", parents=[common], help="radial density u^2 of one state")
    dens.add_argument("--state", type=int, default=0)
    dens.add_argument("--resample", type=int, default=0,
                      help="extra equally spaced samples on [0, r_max]")
    exp = sub.add_parser("expect", parents=[common], help="<r^k> table")
    exp.add_argument("--k", default="-1,1", help="powers, e.g. --k=-1,0,1")
    return parser


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        potential=args.potential, ell_list=_int_list(args.ell), states_per_ell=args.states,
        N=args.grid_n, r_max=args.rmax, alpha=args.alpha, convention=args.convention,
        output=args.out, format=args.format,
    )


def run(args) -> tuple[list[dict], RunConfig]:
    try:
        config = _config_from_args(args)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if args.command == "solve":
        return cmd_solve(config), config
    if args.command == "scan":
        try:
            n_list = [args.grid_n] if args.grid_n_list is None else _int_list(args.grid_n_list)
            r_list = [args.rmax] if args.rmax_list is None else _float_list(args.rmax_list)
            a_list = [args.alpha] if args.alpha_list is None else _float_list(args.alpha_list)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        return cmd_scan(config, n_list, r_list, a_list, args.state), config
    if args.command == "density":
        return cmd_density(config, args.state, args.resample), config
    try:
        k_list = _int_list(args.k)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return cmd_expect(config, k_list), config


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        records, config = run(args)
        _, conv = resolve(config)
        meta = {"command": args.command, **asdict(config), "resolved_convention": conv.value}
        text = render(records, config.format, meta)
    except (ConfigError, DomainError, ExpressionError) as exc:
        print(f"gpsrad: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConvergenceError, PotentialEvaluationError, ArithmeticError) as exc:
        print(f"gpsrad: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    try:
        emit(text, config.output)
    except OSError as exc:
        print(f"gpsrad: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
