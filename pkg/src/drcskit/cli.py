"""Command-line interface.

Exit codes: 0 success, 2 validation failure, 3 parse error,
4 parameter/precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__, presets
from .ambiguity import af_grid, af_grid_naive, zone_metrics
from .bounds import (
    bound_c5,
    bound_lev,
    bound_shen,
    bound_sin,
    bound_thm2,
    bound_thm3,
    bound_truncated,
    bound_uniform_full,
    rho,
    weights_uniform_full,
    weights_uniform_truncated,
)
from .butson import bh_dft, bh_kronecker, bh_seed, bh_to_text, bh_validate, bh_walsh, load_bh
from .errors import DrcsError, ParameterError, ParseError
from .fileio import atomic_write_text, run_manifest, write_manifest_sidecar
from .finite_field import alpha_order, ff_init, psi
from .rectangles import (
    build_florentine_circulant,
    build_quasi_florentine,
    check_collisions,
    extend_quasi_florentine,
    load_rect,
    rect_to_text,
    validate_c1,
    validate_c2,
)
from .repro import (
    FIG_RHO_COLUMNS,
    SMALL_ALPHABET_COLUMNS,
    fig_rho_rows,
    repro_example1,
    repro_example2,
    rows_to_csv,
    small_alphabet_rows,
)
from .sequences import Zone, construct_drcs, drcs_load, drcs_to_text, format_paper_layout


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text, out=None):
    if out is None or str(out) == "-":
        sys.stdout.write(text)
    else:
        atomic_write_text(out, text)


def _emit_csv(text, out, args, inputs=()):
    _emit(text, out)
    if out is not None and str(out) != "-":
        write_manifest_sidecar(out, run_manifest(args.command_name, vars(args), inputs))


def _emit_json(payload, args, inputs=(), out=None):
    payload = dict(payload)
    payload["manifest"] = run_manifest(args.command_name, vars(args), inputs)
    _emit(json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n", out)


# -- field --------------------------------------------------------------------


def cmd_field_check(args):
    ctx = ff_init(args.p, args.n, args.poly)
    lines = [
        f"GF({args.p}^{args.n}) modulus {list(ctx.modulus_poly)} (low degree first)",
        f"order of alpha: {alpha_order(args.p, args.n, ctx.modulus_poly)}",
        "j coeffs psi",
    ]
    for j, e in enumerate(ctx.alpha_powers):
        lines.append(f"{j} {','.join(map(str, e))} {psi(ctx, e)}")
    _emit("\n".join(lines) + "\n")
    return 0


# -- rect ---------------------------------------------------------------------


def cmd_rect_build_qf(args):
    ctx = ff_init(args.p, args.n, args.poly)
    r = build_quasi_florentine(ctx)
    if args.extend:
        r = extend_quasi_florentine(r, ctx.size, side=args.side)
    _emit(rect_to_text(r), args.output)
    return 0


def cmd_rect_build_florentine(args):
    _emit(rect_to_text(build_florentine_circulant(args.q)), args.output)
    return 0


def cmd_rect_validate(args):
    r = load_rect(args.file)
    reports = [validate_c1(r), validate_c2(r), check_collisions(r)]
    for rep in reports:
        print(rep)
    return 0 if all(reports) else 2


# -- bh -----------------------------------------------------------------------


def cmd_bh_build(args):
    a = args.args
    try:
        if args.kind == "dft":
            B = bh_dft(int(a[0]))
        elif args.kind == "walsh":
            B = bh_walsh(int(a[0]))
        elif args.kind == "seed":
            B = bh_seed(a[0])
        else:
            B = load_bh(a[0])
            for path in a[1:]:
                B = bh_kronecker(B, load_bh(path))
            if len(a) < 2:
                raise ParameterError("kron needs at least two matrix files")
    except IndexError:
        raise ParameterError(f"--kind {args.kind} needs an argument") from None
    except ValueError as exc:
        if isinstance(exc, DrcsError):
            raise
        raise ParameterError(str(exc)) from None
    _emit(bh_to_text(B), args.output)
    return 0


def cmd_bh_validate(args):
    rep = bh_validate(load_bh(args.file))
    print(rep)
    return 0 if rep else 2


# -- drcs ---------------------------------------------------------------------


def cmd_drcs_construct(args):
    s = construct_drcs(load_rect(args.rect), load_bh(args.bh))
    _emit(drcs_to_text(s), args.output)
    if args.paper_layout:
        sys.stdout.write(format_paper_layout(s, orientation=args.paper_layout))
    return 0


# -- af -----------------------------------------------------------------------


def cmd_af_grid(args):
    s = drcs_load(args.drcs)
    zone = Zone(args.zx, args.zy)
    grid = (af_grid_naive if args.naive else af_grid)(s, args.k1, args.k2, zone)
    lines = ["tau,v,re,im,mag"]
    for tau, v, z in grid.cells():
        lines.append(f"{tau},{v},{z.real:.6g},{z.imag:.6g},{abs(z):.6g}")
    _emit_csv("\n".join(lines) + "\n", args.output, args, [args.drcs])
    return 0


def cmd_af_metrics(args):
    s = drcs_load(args.drcs)
    m = zone_metrics(s, Zone(args.zx, args.zy), threads=args.threads)
    _emit_json(m.as_dict(), args, [args.drcs])
    return 0


# -- bounds -------------------------------------------------------------------


def _load_weights(path):
    try:
        return np.array([float(x) for x in Path(path).read_text().split()])
    except ValueError as exc:
        raise ParseError(f"bad weight value: {exc}", path=path) from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ParameterError(f"--which {args.which} needs " + ", ".join("--" + n for n in missing))


def cmd_bounds_eval(args):
    K, M, N, zx, zy = args.K, args.M, args.N, args.zx, args.zy
    w = _load_weights(args.weights) if args.weights else None
    which = args.which
    _need(args, "K", "M", "N", "zy")
    if which == "shen":
        _need(args, "zx")
        rep = bound_shen(K, M, N, zx, zy)
    elif which == "thm2":
        rep = bound_thm2(K, M, N, zy, weights_uniform_full(N) if w is None else w)
    elif which == "thm3":
        _need(args, "zx")
        if w is None:
            _need(args, "m")
            w = weights_uniform_truncated(args.m, zx)
        rep = bound_thm3(K, M, N, zx, zy, w)
    elif which == "uniform":
        rep = bound_uniform_full(K, M, N, zy)
    elif which == "trunc":
        _need(args, "zx", "m")
        rep = bound_truncated(K, M, N, zx, zy, args.m)
    elif which == "lev":
        rep = bound_lev(K, M, N, zy, zx=zx)
    elif which == "sin":
        _need(args, "m")
        rep = bound_sin(K, M, N, zy, args.m, zx=zx)
    else:
        rep = bound_c5(K, M, N, zy, zx=zx)
    payload = rep.as_dict()
    if args.theta is not None:
        payload["theta_max"] = args.theta
        payload["rho"] = rho(args.theta, rep)
    _emit_json(payload, args, [args.weights] if args.weights else [])
    return 0


def cmd_bounds_table(args):
    if args.family != "p2":
        raise ParameterError(f"unknown family {args.family!r}")
    _emit_csv(rows_to_csv(fig_rho_rows(args.pmax), FIG_RHO_COLUMNS), args.output, args)
    return 0


def cmd_bounds_small_alphabet(args):
    _emit_csv(rows_to_csv(small_alphabet_rows(), SMALL_ALPHABET_COLUMNS), args.output, args)
    return 0


# -- repro --------------------------------------------------------------------


def _repro(fn, args):
    result = fn(args.output, threads=args.threads)
    verdict = result["verdict"]
    if args.output is None:
        sys.stdout.write(result["files"]["paper_layout.txt"])
    status = "PASS" if verdict["passed"] else "FAIL"
    m = verdict["measured"]
    print(
        f"{status}: K={m['K']} M={m['M']} L={m['L']} r={m['r']} "
        f"theta_a={m['theta_a']:.3g} theta_c={m['theta_c']:.6g} theta_max={m['theta_max']:.6g}",
        file=sys.stderr,
    )
    return 0 if verdict["passed"] else 2


def cmd_repro_example1(args):
    return _repro(repro_example1, args)


def cmd_repro_example2(args):
    return _repro(repro_example2, args)


def cmd_repro_fig_rho(args):
    _emit_csv(rows_to_csv(fig_rho_rows(args.pmax), FIG_RHO_COLUMNS), args.output, args)
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drcskit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--threads", type=int, default=None, help="worker threads (0 = auto; default: $DRCS_THREADS or 1)")
    top = parser.add_subparsers(dest="group", required=True)

    def add(group_parsers, name, func, help_):
        p = group_parsers.add_parser(name, help=help_)
        p.set_defaults(func=func, command_name=p.prog.split(maxsplit=1)[1])
        return p

    def out_opt(p, required=False):
        p.add_argument("-o", "--output", default=None, required=required, help="output file (default stdout)")

    g = top.add_parser("field", help="finite-field utilities").add_subparsers(dest="cmd", required=True)
    p = add(g, "check", cmd_field_check, "validate a primitive polynomial and print the psi table")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", type=_int_list, required=True, help="c0,c1,...,cn (low degree first)")

    g = top.add_parser("rect", help="quasi-Florentine / Florentine rectangles").add_subparsers(dest="cmd", required=True)
    p = add(g, "build-qf", cmd_rect_build_qf, "finite-field quasi-Florentine rectangle")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", type=_int_list, required=True)
    p.add_argument("--extend", action="store_true", help="append the constant column p^n")
    p.add_argument("--side", choices=("left", "right"), default="right")
    out_opt(p)
    p = add(g, "build-florentine", cmd_rect_build_florentine, "circulant Florentine rectangle for prime q")
    p.add_argument("--q", type=int, required=True)
    out_opt(p)
    p = add(g, "validate", cmd_rect_validate, "check C1, C2 and the collision property")
    p.add_argument("file")

    g = top.add_parser("bh", help="Butson-type Hadamard matrices").add_subparsers(dest="cmd", required=True)
    p = add(g, "build", cmd_bh_build, "build a Butson matrix")
    p.add_argument("--kind", choices=("dft", "walsh", "seed", "kron"), required=True)
    p.add_argument("--args", nargs="+", required=True, help="dft: N; walsh: m; seed: NAME; kron: FILE FILE...")
    out_opt(p)
    p = add(g, "validate", cmd_bh_validate, "check B B^H = N I")
    p.add_argument("file")

    g = top.add_parser("drcs", help="DRCS assembly").add_subparsers(dest="cmd", required=True)
    p = add(g, "construct", cmd_drcs_construct, "assemble a DRCS set from a rectangle and a Butson matrix")
    p.add_argument("--rect", required=True)
    p.add_argument("--bh", required=True)
    out_opt(p, required=True)
    p.add_argument(
        "--paper-layout",
        nargs="?",
        const="positions",
        choices=("positions", "sequences"),
        default=None,
        help="also print the sets to stdout, one line per position (default) or per sequence",
    )

    g = top.add_parser("af", help="ambiguity functions").add_subparsers(dest="cmd", required=True)
    p = add(g, "grid", cmd_af_grid, "AF grid of one ordered pair as CSV")
    p.add_argument("--drcs", required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--zx", type=int, required=True)
    p.add_argument("--zy", type=int, required=True)
    p.add_argument("--naive", action="store_true", help="use the direct per-cell summation")
    out_opt(p)
    p = add(g, "metrics", cmd_af_metrics, "theta_a, theta_c, theta_max over a zone as JSON")
    p.add_argument("--drcs", required=True)
    p.add_argument("--zx", type=int, required=True)
    p.add_argument("--zy", type=int, required=True)

    g = top.add_parser("bounds", help="AF lower bounds").add_subparsers(dest="cmd", required=True)
    p = add(g, "eval", cmd_bounds_eval, "evaluate one bound as JSON")
    p.add_argument("--which", choices=("shen", "thm2", "thm3", "uniform", "trunc", "lev", "sin", "c5"), required=True)
    for name in ("K", "M", "N"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--zx", type=int, default=None)
    p.add_argument("--zy", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--weights", default=None, help="file of whitespace-separated weights")
    p.add_argument("--theta", type=float, default=None, help="achieved theta_max; adds rho to the report")
    p = add(g, "table", cmd_bounds_table, "optimality factors of a construction family as CSV")
    p.add_argument("--family", default="p2", choices=("p2",))
    p.add_argument("--pmax", type=int, default=23)
    out_opt(p)
    p = add(g, "small-alphabet-table", cmd_bounds_small_alphabet, "optimality factors of the small-alphabet table")
    out_opt(p)

    g = top.add_parser("repro", help="reproduce worked examples and figure data").add_subparsers(dest="cmd", required=True)
    p = add(g, "example1", cmd_repro_example1, "GF(9) rectangle + BH(10,5) seed")
    p.add_argument("-o", "--output", default=None, help="bundle directory")
    p = add(g, "example2", cmd_repro_example2, "q=17 circulant + Walsh BH(16,2)")
    p.add_argument("-o", "--output", default=None, help="bundle directory")
    p = add(g, "fig-rho", cmd_repro_fig_rho, "rho_shen / rho_new per prime p as CSV")
    p.add_argument("--pmax", type=int, default=119)
    out_opt(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DrcsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ParseError.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
