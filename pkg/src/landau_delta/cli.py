"""Command-line front end emitting plot-ready CSV and flat JSON summaries.

Exit codes: 0 success, 1 computation or validity failure, 2 usage error.
Settings are resolved as command-line flags > config file > defaults; the
config file (plain ``key = value`` lines, keys spelled like the long flags)
is given with ``--config`` or the ``LANDAU_DELTA_CONFIG`` environment variable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import boundstate, oracle, spectrum2d, spectrum3d, tunneling
from .errors import BracketError, InvalidParameterError, ValidityError
from .params import COUPLING_SCALE

CONFIG_ENV = "LANDAU_DELTA_CONFIG"


class UsageError(Exception):
    pass


# output helpers ------------------------------------------------------------

def _fmt(value, precision):
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), f".{precision}g")


def _round(value, precision):
    if isinstance(value, (bool, np.bool_)) or value is None:
        return value if value is None else bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return float(format(v, f".{precision}g")) if math.isfinite(v) else None
    if isinstance(value, (list, tuple)):
        return [_round(v, precision) for v in value]
    return value


def write_csv(stream, header, rows, precision):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v, precision) for v in row])


def write_json(stream, record, precision):
    json.dump({k: _round(v, precision) for k, v in record.items()}, stream)
    stream.write("\n")


def _emit(args, header=None, rows=None, record=None):
    buf = io.StringIO()
    if args.format == "json" or rows is None:
        if record is None:
            record = {h: [r[i] for r in rows] for i, h in enumerate(header)}
        if args.format == "csv":
            write_csv(buf, list(record), [list(record.values())], args.precision)
        else:
            write_json(buf, record, args.precision)
    else:
        write_csv(buf, header, rows, args.precision)
    text = buf.getvalue()
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# subcommands ---------------------------------------------------------------

def _coupling(args):
    if args.g is not None and args.lambda_over_a is not None:
        raise UsageError("give either --g or --lambda-over-a, not both")
    if args.g is not None:
        g = args.g
    elif args.lambda_over_a is not None:
        if not args.lambda_over_a > 0:
            raise UsageError("--lambda-over-a must be positive")
        g = args.lambda_over_a / COUPLING_SCALE
    else:
        raise UsageError("one of --g or --lambda-over-a is required")
    if not (math.isfinite(g) and g > 0):
        raise UsageError("coupling must be positive")
    return g


def _cutoff(args, required=True):
    if args.cutoff is None:
        if required:
            raise UsageError("--cutoff is required")
        return None
    if args.cutoff < 1:
        raise UsageError("--cutoff must be >= 1")
    return args.cutoff


def cmd_spectrum3d(args):
    g = _coupling(args)
    N = _cutoff(args)
    if args.levels < 0 or args.levels > N:
        raise UsageError("--levels must be in [0, cutoff]")
    sf = spectrum3d.SpectralFunction(N=N, window=args.window, tail_mode=args.tail, guard=args.guard)
    result = spectrum3d.solve_spectrum(g, sf, args.levels, rtol=args.tolerance)
    rows = result.as_rows()
    if args.format == "csv":
        _emit(args, ["n", "x", "residual", "bracket_lo", "bracket_hi"], rows)
        if args.summary:
            with open(args.summary, "w", encoding="utf-8") as fh:
                write_json(fh, _spectrum_summary(result, g, N, args), args.precision)
    else:
        _emit(args, record=_spectrum_summary(result, g, N, args))


def _spectrum_summary(result, g, N, args):
    try:
        resummed = spectrum3d.tail_corrected_shift(g, N)
    except InvalidParameterError:
        resummed = None
    return {
        "g": g,
        "lambda_over_a": g * COUPLING_SCALE,
        "cutoff": N,
        "levels": args.levels,
        "tolerance": args.tolerance,
        "tail_mode": args.tail,
        "ground_x": result.ground.x0,
        "roots_x": [r.x for r in result.roots],
        "max_residual": max(r[2] for r in result.as_rows()),
        "perturbative_shift": spectrum3d.perturbative_shift(g),
        "printed_shift": spectrum3d.printed_shift(g),
        "tail_corrected_shift": resummed,
    }


def cmd_spectrum2d(args):
    if args.lam2 is None:
        raise UsageError("--lam2 is required")
    N = _cutoff(args)
    setup = spectrum2d.TwoDSetup(lam2=args.lam2, N=N)
    b_star, b_est, gap = spectrum2d.relative_gap(setup)
    _emit(args, record={"lam2": args.lam2, "cutoff": N, "b_solved": b_star,
                        "b_estimate": b_est, "relative_gap": gap})


def _bound_state(args):
    if args.x0 is not None:
        if not args.x0 < 0:
            raise UsageError("--x0 must be negative")
        return boundstate.BoundState.from_root(args.x0)
    if not args.l_over_a > 0:
        raise UsageError("--l-over-a must be positive")
    return boundstate.BoundState(a=1.0, l=args.l_over_a)


def _grid(extent, points):
    if points < 1 or not extent >= 0:
        raise UsageError("grid extent must be >= 0 and points >= 1")
    return np.linspace(-extent, extent, points) if points > 1 else np.zeros(1)


def _field_rows(bs, xs, ys, zs, with_density, charge=None):
    X, Y, Z = np.meshgrid(xs, ys, zs, indexing="ij")
    X, Y, Z = X.ravel(), Y.ravel(), Z.ravel()
    J = boundstate.current((X, Y, Z), bs, gauge="analytic").J
    cols = [X, Y, Z, *J]
    if with_density:
        cols.append(boundstate.density((X, Y, Z), bs))
    if charge is not None:
        cols += [charge * c for c in J]
    return list(zip(*cols))


def cmd_field(args):
    bs = _bound_state(args)
    xs = _grid(args.extent, args.points)
    zs = _grid(args.z_extent, args.z_points)
    header = ["x", "y", "z", "Jx", "Jy", "Jz", "density"]
    charge = None
    if args.charge is not None:
        charge = -abs(args.charge)
        header += ["eJx", "eJy", "eJz"]
    _emit(args, header, _field_rows(bs, xs, xs, zs, True, charge))


def cmd_tunnel(args):
    if args.eps_ratio is None:
        raise UsageError("--eps-ratio is required")
    if not args.eps_ratio > 0:
        raise UsageError("--eps-ratio must be positive")
    inp = tunneling.TunnelingInput(eps_ratio=args.eps_ratio, a_over_l=args.a_over_l)
    res = tunneling.decay_rate(inp)
    _emit(args, record={"eps_ratio": res.eps_ratio, "a_over_l": inp.a_over_l, "w": res.w,
                        "exponent": res.exponent, "prefactor": res.prefactor})


def _unit_interval_offsets(guard, per_side):
    return np.geomspace(guard, 0.5, per_side)


def figure_rows(args):
    fig = args.figure
    if fig in ("f1", "f2"):
        N = _cutoff(args, required=False) or 10**6
        sf = spectrum3d.SpectralFunction(N=N, tail_mode=spectrum3d.CORRECTED, window=args.window)
        rows = []
        if fig == "f1":
            offsets = _unit_interval_offsets(args.fig_guard, max(2, args.samples // 2))
            for k in range(12):
                left = [(k + d, sf.evaluate_anchored(k, d)[0]) for d in offsets]
                right = [(k + 1 - d, sf.evaluate_anchored(k + 1, -d)[0]) for d in offsets[::-1]]
                if right and left and right[0][0] <= left[-1][0]:
                    right = right[1:]
                rows += left + right
        else:
            coarse = np.linspace(-2.0, -0.01, args.samples, endpoint=False)
            fine = -np.geomspace(0.01, args.fig_guard, max(2, args.samples // 4))
            xs = np.concatenate([coarse, fine])
            rows = [(x, sf.evaluate_anchored(0, x)[0]) for x in xs]
        return ["x", "f"], rows
    bs = _bound_state(args)
    if fig == "f3":
        xs = _grid(args.extent, args.points)
        zs = _grid(args.z_extent, args.z_points)
        return ["x", "y", "z", "Jx", "Jy", "Jz"], _field_rows(bs, xs, xs, zs, False)
    xs = _grid(args.extent, args.points)
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    X, Y = X.ravel(), Y.ravel()
    J = boundstate.current((X, Y, np.zeros_like(X)), bs, gauge="analytic").J
    # peak of |j| on the plane is at rho = a
    peak = bs.current_amplitude * bs.a * math.exp(-0.5)
    return ["x", "y", "jx", "jy"], list(zip(X, Y, J[0] / peak, J[1] / peak))


def cmd_figdata(args):
    header, rows = figure_rows(args)
    _emit(args, header, rows)


def _flatten(report):
    flat = {}
    for key, value in report.items():
        if isinstance(value, dict):
            for k, v in value.items():
                flat[f"arg_{k}"] = v
        elif isinstance(value, complex):
            flat[f"{key}_re"] = value.real
            flat[f"{key}_im"] = value.imag
        else:
            flat[key] = value
    return flat


def cmd_verify(args):
    reports = [_flatten(r) for r in oracle.run_verification_suite()]
    buf = io.StringIO()
    if args.format == "csv":
        keys = []
        for r in reports:
            keys += [k for k in r if k not in keys]
        write_csv(buf, keys, [[r.get(k) for k in keys] for r in reports], args.precision)
    else:
        for r in reports:
            write_json(buf, r, args.precision)
    text = buf.getvalue()
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    for r in reports:
        if r.get("missing_pi_flag"):
            print(f"note: printed closed form of {r['identity']} lacks a factor pi "
                  f"(ratio {r['ratio_to_printed']:.12g})", file=sys.stderr)
    return 0 if all(r["passed"] for r in reports) else 1


# parser --------------------------------------------------------------------

def _common(p, fmt="csv"):
    p.add_argument("-o", "--output", default="-", help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default=fmt)
    p.add_argument("--precision", type=int, default=12, help="significant digits, 6..17")
    p.add_argument("--config", help=f"key=value config file (also ${CONFIG_ENV})")


def _state_options(p):
    p.add_argument("--l-over-a", type=float, default=1.0, help="decay length l in units of a")
    p.add_argument("--x0", type=float, help="reduced ground energy; overrides --l-over-a")
    p.add_argument("--extent", type=float, default=3.0)
    p.add_argument("--points", type=int, default=13)
    p.add_argument("--z-extent", type=float, default=1.5)
    p.add_argument("--z-points", type=int, default=7)


def build_parser():
    parser = argparse.ArgumentParser(prog="landau-delta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum3d", help="solve the 3D spectral equation")
    _common(p)
    p.add_argument("--lambda-over-a", type=float)
    p.add_argument("--g", type=float, help="reduced coupling lambda/(8 sqrt2 pi a)")
    p.add_argument("--cutoff", type=int)
    p.add_argument("--levels", type=int, default=10)
    p.add_argument("--tail", choices=(spectrum3d.EXACT, spectrum3d.CORRECTED), default=spectrum3d.CORRECTED)
    p.add_argument("--window", type=int, default=1000)
    p.add_argument("--guard", type=float, default=1e-12)
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.add_argument("--summary", help="also write the JSON summary here (csv format)")
    p.set_defaults(func=cmd_spectrum3d)

    p = sub.add_parser("spectrum2d", help="planar ground state and transmutation estimate")
    _common(p, fmt="json")
    p.add_argument("--lam2", type=float)
    p.add_argument("--cutoff", type=int)
    p.set_defaults(func=cmd_spectrum2d)

    p = sub.add_parser("field", help="probability current and density on a grid")
    _common(p)
    _state_options(p)
    p.add_argument("--charge", type=float, help="also emit the electric current e*J (e = -|charge|)")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("tunnel", help="weak-field ionisation rate")
    _common(p, fmt="json")
    p.add_argument("--eps-ratio", type=float)
    p.add_argument("--a-over-l", type=float, default=1.0)
    p.set_defaults(func=cmd_tunnel)

    p = sub.add_parser("figdata", help="data behind the figures f1..f4")
    _common(p)
    p.add_argument("figure", choices=("f1", "f2", "f3", "f4"))
    p.add_argument("--cutoff", type=int)
    p.add_argument("--window", type=int, default=1000)
    p.add_argument("--samples", type=int, default=100, help="samples per unit interval (f1) / coarse samples (f2)")
    p.add_argument("--fig-guard", type=float, default=1e-6, help="closest approach to a pole")
    _state_options(p)
    p.set_defaults(func=cmd_figdata)

    p = sub.add_parser("verify", help="run the oracle suite")
    _common(p, fmt="json")
    p.set_defaults(func=cmd_verify)
    return parser


def _read_config(path):
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            values[key.lstrip("-").replace("-", "_")] = value
    return values


def _apply_config(parser, argv):
    args = parser.parse_args(argv)
    path = args.config or os.environ.get(CONFIG_ENV)
    if not path:
        return args
    try:
        values = _read_config(path)
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    subparser = parser._subparsers._group_actions[0].choices[args.command]
    actions = {a.dest: a for a in subparser._actions}
    defaults = {}
    for key, raw in values.items():
        if key not in actions or key in ("figure", "config"):
            raise UsageError(f"unknown config key {key!r} for {args.command}")
        action = actions[key]
        try:
            value = action.type(raw) if action.type else raw
        except ValueError as exc:
            raise UsageError(f"bad value for {key}: {raw!r}") from exc
        if action.choices and value not in action.choices:
            raise UsageError(f"bad value for {key}: {raw!r}")
        defaults[key] = value
    subparser.set_defaults(**defaults)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = _apply_config(parser, argv)
        if not 6 <= args.precision <= 17:
            raise UsageError("--precision must be between 6 and 17")
        status = args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (UsageError, InvalidParameterError) as exc:
        parser.print_usage(sys.stderr)
        print(f"landau-delta: error: {exc}", file=sys.stderr)
        return 2
    except BracketError as exc:
        print(f"landau-delta: solver failure: {exc}", file=sys.stderr)
        print(f"  bracket endpoints: lo={exc.lo!r} hi={exc.hi!r} "
              f"residuals: {exc.f_lo!r}, {exc.f_hi!r}", file=sys.stderr)
        return 1
    except ValidityError as exc:
        print(f"landau-delta: validity error: {exc}", file=sys.stderr)
        return 1
    except (RuntimeError, ArithmeticError) as exc:
        print(f"landau-delta: computation failed: {exc}", file=sys.stderr)
        return 1
    return int(status or 0)


if __name__ == "__main__":
    sys.exit(main())
