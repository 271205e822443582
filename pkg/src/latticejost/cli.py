"""Command-line front end: analyze, sweep, design, oracle."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time

from .core import NumericConfig, Potential, lambda_to_z, load_potential
from .design import (
    alternating_potential,
    amplify_to_full_bound,
    choose_epsilon,
    inverse_b2,
    inverse_b3,
    shrink_to_no_bound,
)
from .errors import LatticeJostError
from .jost import rouche_margin
from .oracle import match_energies, oracle_bound_states
from .report import analyze
from .spectrum import bound_state_scan

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERDICT = 3

SWEEP_HEADER = ["b", "N", "min_edge_distance", "precision", "ms"]


def _add_numeric_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol-real", type=float, default=None)
    sub.add_argument("--tol-cluster", type=float, default=None)
    sub.add_argument("--tol-edge", type=float, default=None)
    sub.add_argument("--precision", choices=("std", "ext"), default=None)
    sub.add_argument("--out", type=str, default=None)
    sub.add_argument("--quiet", action="store_true")


def _config_from(args: argparse.Namespace) -> NumericConfig:
    precision = args.precision or os.environ.get("LATTICEJOST_PRECISION", "std")
    base = NumericConfig.extended() if precision == "ext" else NumericConfig()
    overrides = {}
    if args.tol_real is not None:
        overrides["tau_real"] = args.tol_real
    if args.tol_cluster is not None:
        overrides["tau_cluster"] = args.tol_cluster
    if args.tol_edge is not None:
        overrides["tau_edge"] = args.tol_edge
    if overrides:
        base = NumericConfig(
            tau_real=overrides.get("tau_real", base.tau_real),
            tau_cluster=overrides.get("tau_cluster", base.tau_cluster),
            tau_edge=overrides.get("tau_edge", base.tau_edge),
            precision_mode=base.precision_mode,
        )
    return base


def _emit(text: str, args: argparse.Namespace) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    elif not args.quiet:
        print(text)


def _parse_roots(raw: str) -> list[complex]:
    return [complex(tok.strip().replace("i", "j")) for tok in raw.split(",") if tok.strip()]


def cmd_analyze(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    try:
        pot = load_potential(args.potential)
    except (LatticeJostError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        rep = analyze(pot, cfg)
    except LatticeJostError as exc:
        print(f"numerical diagnostic: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    _emit(rep.to_json(include_timing=not args.no_timing), args)
    return EXIT_OK if rep.verdicts.all_theorems_hold else EXIT_VERDICT


def _sweep_row(b: int, amplitude: float, cfg: NumericConfig, edge_floor: float):
    t0 = time.perf_counter()
    pot = alternating_potential(b, amplitude)
    roots = bound_state_scan(pot, cfg)
    precision = cfg.precision_mode
    dist = min((min(abs(r - 1), abs(r + 1)) for r in roots), default=math.nan)
    if not cfg.is_extended and (len(roots) != b or float(dist) < edge_floor):
        # near-edge roots (or a missed pair) need the high-precision path
        cfg = NumericConfig.extended()
        roots = bound_state_scan(pot, cfg)
        precision = cfg.precision_mode
        dist = min((min(abs(r - 1), abs(r + 1)) for r in roots), default=math.nan)
    ms = (time.perf_counter() - t0) * 1e3
    return len(roots), float(dist), precision, ms


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.family != "alternating":
        print(f"unknown family {args.family!r}", file=sys.stderr)
        return EXIT_INPUT
    if args.bmax < 1:
        print("--bmax must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    cfg = _config_from(args)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(SWEEP_HEADER)
    failures = 0
    for b in range(1, args.bmax + 1):
        try:
            n, dist, precision, ms = _sweep_row(b, args.amplitude, cfg, args.edge_floor)
        except LatticeJostError as exc:
            writer.writerow([b, -1, "nan", cfg.precision_mode, f"{0.0:.3f}"])
            print(f"row b={b} failed: {exc}", file=sys.stderr)
            failures += 1
            continue
        if n != b:
            failures += 1
        writer.writerow([b, n, f"{dist:.12g}", precision, f"{ms:.3f}"])
    _emit(buf.getvalue().rstrip("\n"), args)
    return EXIT_VERDICT if failures else EXIT_OK


def cmd_design(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    try:
        if args.mode == "b2":
            roots = _parse_roots(args.roots)
            res = inverse_b2(roots)
            doc = {
                "V1": res.V1,
                "V2": res.V2,
                "consistency_residual": res.consistency_residual,
            }
        elif args.mode == "b3":
            roots = _parse_roots(args.roots)
            guess = [float(x) for x in args.guess.split(",")]
            res = inverse_b3(roots, guess)
            doc = {
                "V1": res.V1,
                "V2": res.V2,
                "V3": res.V3,
                "alpha5": res.alpha5,
                "residuals": list(res.residuals),
            }
        elif args.mode == "shrink":
            pot = load_potential(args.potential)
            t, scaled = shrink_to_no_bound(pot)
            rep = analyze(scaled, cfg)
            doc = {
                "t": t,
                "potential": list(scaled.values),
                "N": rep.ledger.N,
                "small_coeff_certificate": rep.verdicts.small_coeff_certificate,
            }
        elif args.mode == "amplify":
            signs = [1 if s.strip() in ("+", "+1", "1") else -1 for s in args.signs.split(",")]
            A, pot = amplify_to_full_bound(signs)
            rep = analyze(pot, cfg)
            doc = {
                "A": A,
                "potential": list(pot.values),
                "N": rep.ledger.N,
                "rouche_margin": rouche_margin(pot),
            }
        elif args.mode == "extend":
            pot = load_potential(args.potential)
            if args.epsilon is not None:
                from .design import extend_with_epsilon

                ext = extend_with_epsilon(pot, args.b, args.epsilon)
                eps = args.epsilon
            else:
                eps, ext = choose_epsilon(pot, args.b, cfg)
            rep = analyze(ext, cfg)
            doc = {
                "epsilon": eps,
                "potential": list(ext.values),
                "N": rep.ledger.N,
            }
        else:  # pragma: no cover - argparse restricts choices
            return EXIT_INPUT
    except (LatticeJostError, ValueError, OSError) as exc:
        print(f"design error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(json.dumps(doc, indent=2), args)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    cfg = _config_from(args)
    try:
        pot = load_potential(args.potential)
    except (LatticeJostError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        rep = analyze(pot, cfg)
        filtered = [
            bs for bs in rep.bound_states if abs(bs.alpha) < args.alpha_filter
        ]
        # apply the same alpha cut to the oracle side, else a near-edge
        # bound state excluded from one list still shows up in the other
        oracle = [
            lam
            for lam in oracle_bound_states(pot, M=args.size, margin=args.margin)
            if abs(lambda_to_z(lam)) < args.alpha_filter
        ]
        rows = match_energies([bs.lam for bs in filtered], oracle)
    except (LatticeJostError, ValueError) as exc:
        print(f"oracle error: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    lines = ["root_lambda,oracle_lambda,delta"]
    deltas = []
    for lam, other, delta in rows:
        lines.append(f"{lam:.15g},{other:.15g},{delta:.6g}")
        if not math.isnan(delta):
            deltas.append(delta)
    max_delta = max(deltas) if deltas else 0.0
    lines.append(f"# max_delta={max_delta:.6g}")
    _emit("\n".join(lines), args)
    if len(filtered) != len(oracle):
        print(
            f"count mismatch: roots give {len(filtered)}, oracle gives {len(oracle)}",
            file=sys.stderr,
        )
        return EXIT_VERDICT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="latticejost",
        description="Spectral analysis of the half-line lattice operator "
        "with compactly supported potential",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full pipeline report for one potential")
    p_an.add_argument("potential", help="potential file (JSON array or one value per line) or inline JSON")
    p_an.add_argument("--no-timing", action="store_true", help="omit timing for byte-identical comparison")
    _add_numeric_flags(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_sw = sub.add_parser("sweep", help="bound-state count sweep over a potential family")
    p_sw.add_argument("--family", default="alternating")
    p_sw.add_argument("--amplitude", type=float, default=2.0)
    p_sw.add_argument("--bmax", type=int, required=True)
    p_sw.add_argument("--edge-floor", type=float, default=1e-6,
                      help="min root distance to +-1 below which extended precision engages")
    _add_numeric_flags(p_sw)
    p_sw.set_defaults(func=cmd_sweep)

    p_de = sub.add_parser("design", help="constructive families and inverse problems")
    de_sub = p_de.add_subparsers(dest="mode", required=True)
    de_b2 = de_sub.add_parser("b2")
    de_b2.add_argument("--roots", required=True, help="three comma-separated roots")
    _add_numeric_flags(de_b2)
    de_b3 = de_sub.add_parser("b3")
    de_b3.add_argument("--roots", required=True, help="four comma-separated roots")
    de_b3.add_argument("--guess", required=True, help="V1,V2,V3,alpha5 starting point")
    _add_numeric_flags(de_b3)
    de_sh = de_sub.add_parser("shrink")
    de_sh.add_argument("--potential", required=True)
    _add_numeric_flags(de_sh)
    de_am = de_sub.add_parser("amplify")
    de_am.add_argument("--signs", required=True, help="comma-separated +/- pattern")
    _add_numeric_flags(de_am)
    de_ex = de_sub.add_parser("extend")
    de_ex.add_argument("--potential", required=True)
    de_ex.add_argument("--b", type=int, required=True)
    de_ex.add_argument("--epsilon", type=float, default=None)
    _add_numeric_flags(de_ex)
    p_de.set_defaults(func=cmd_design)

    p_or = sub.add_parser("oracle", help="matrix-eigenvalue cross-check")
    p_or.add_argument("potential")
    p_or.add_argument("--size", type=int, default=800)
    p_or.add_argument("--margin", type=float, default=1e-6)
    p_or.add_argument("--alpha-filter", type=float, default=0.95,
                      help="exclude bound roots with |alpha| at or above this from comparison")
    _add_numeric_flags(p_or)
    p_or.set_defaults(func=cmd_oracle)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
