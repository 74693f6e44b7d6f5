"""Command-line front end: run a zero chain and emit CSV or JSON."""
from __future__ import annotations

import argparse
import json
import sys
import time

from .chain import run_chain, verify_zeros
from .config import ChainConfig
from .errors import ConvergenceError, HermiteParameterError, PcfZerosError

CSV_HEADER = "index,re,im,est_rel_error,iterations"


class _Parser(argparse.ArgumentParser):
    # argument errors must map to exit code 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pcfzeros",
                description="Complex zeros of the parabolic cylinder "
                            "function U(a,z) in the second quadrant.")
    p.add_argument("--a", type=float, help="parameter a (real)")
    p.add_argument("--L", type=float, help="domain size L")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--verify", action="store_true",
                   help="fill est_rel_error by independent evaluation")
    p.add_argument("--delta", type=float, default=1e-4)
    p.add_argument("--eps", type=float, default=1e-14)
    p.add_argument("--taylor-order", type=int, default=30)
    p.add_argument("--lg-order", type=int, default=12)
    p.add_argument("--out", type=str, default=None,
                   help="output path (default: stdout)")
    p.add_argument("--table", type=str, default=None,
                   help="batch mode: file of 'a L' lines, one count row each")
    return p


def _make_config(args) -> ChainConfig:
    return ChainConfig(eps=args.eps, delta=args.delta,
                       taylor_order=args.taylor_order,
                       lg_order=args.lg_order)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _csv_report(zeros) -> str:
    lines = [CSV_HEADER]
    for r in zeros:
        lines.append(",".join([
            str(r.index), _fmt(r.z.real), _fmt(r.z.imag),
            _fmt(r.est_rel_error), str(r.inner_iterations)]))
    return "\n".join(lines) + "\n"


def _json_report(a, L, cfg, zeros) -> str:
    doc = {
        "a": a,
        "L": L,
        "config": {
            "eps": cfg.eps, "delta": cfg.delta,
            "taylor_order": cfg.taylor_order, "lg_order": cfg.lg_order,
        },
        "zeros": [
            {"index": r.index,
             "re": float(_fmt(r.z.real)), "im": float(_fmt(r.z.imag)),
             "est_rel_error": None if r.est_rel_error != r.est_rel_error
             else float(_fmt(r.est_rel_error)),
             "iterations": r.inner_iterations}
            for r in zeros
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def table_mode(path: str, cfg: ChainConfig, out_path: str | None) -> int:
    try:
        with open(path) as fh:
            raw = fh.readlines()
    except OSError as exc:
        print(f"pcfzeros: cannot read table file: {exc}", file=sys.stderr)
        return 1
    rows = []
    for lineno, line in enumerate(raw, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        try:
            if len(parts) != 2:
                raise ValueError("expected two fields 'a L'")
            a, L = float(parts[0]), float(parts[1])
        except ValueError as exc:
            print(f"pcfzeros: {path}:{lineno}: {exc}", file=sys.stderr)
            return 1
        rows.append((a, L))
    lines = ["a,L,n_zeros,wall_time_seconds"]
    for a, L in rows:
        t0 = time.perf_counter()
        try:
            zeros = run_chain(a, L, cfg)
        except (HermiteParameterError, ValueError) as exc:
            print(f"pcfzeros: {exc}", file=sys.stderr)
            return 1
        except (ConvergenceError, PcfZerosError) as exc:
            print(f"pcfzeros: {exc}", file=sys.stderr)
            return 2
        wall = time.perf_counter() - t0
        lines.append(f"{_fmt(a)},{_fmt(L)},{len(zeros)},{wall:.6f}")
    _emit("\n".join(lines) + "\n", out_path)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1

    try:
        cfg = _make_config(args)
    except ValueError as exc:
        print(f"pcfzeros: invalid configuration: {exc}", file=sys.stderr)
        return 1

    if args.table is not None:
        return table_mode(args.table, cfg, args.out)

    if args.a is None or args.L is None:
        print("pcfzeros: --a and --L are required", file=sys.stderr)
        return 1

    try:
        zeros = run_chain(args.a, args.L, cfg)
        if args.verify:
            zeros = verify_zeros(args.a, zeros, cfg)
    except (HermiteParameterError, ValueError) as exc:
        print(f"pcfzeros: {exc}", file=sys.stderr)
        return 1
    except (ConvergenceError, PcfZerosError) as exc:
        print(f"pcfzeros: {exc}", file=sys.stderr)
        return 2

    if args.format == "csv":
        _emit(_csv_report(zeros), args.out)
    else:
        _emit(_json_report(args.a, args.L, cfg, zeros), args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
