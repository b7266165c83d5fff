"""Command-line entry point wiring the library into batch workflows.

Subcommands emit CSV tables or JSON records with fixed 17-significant-digit
float formatting, so identical invocations are byte identical and outputs
can feed external plotters directly.  When a CSV subcommand writes to a
file (--out), a PNG figure of the same stem is rendered next to it unless
--no-plot is given.  Exit codes: 0 success, 1 domain errors (bad shapes,
poles on the grid, no detectable peaks, unreadable inputs), 2 usage errors
(malformed flags, invariant violations), with the synopsis on stderr.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .analytic import asymptotic_eigenpairs
from .errors import NPSpecError
from .geometry import AlgebraicDomain, discretize
from .gpt import gpt_direct, m11_asymptotic, m22cc_asymptotic
from .material import DrudeModel, SyntheticContrast, parse_material_config
from .nystrom import discretize_np, discretize_single_layer, numeric_spectrum
from .scan import (
    ResonanceScan,
    detect_peaks,
    forward_scan,
    reconstruct_gap_from_scan,
    reconstruct_shape_from_scan,
)
from .twodisks import (
    MINUS,
    PLUS,
    TwoDiskConfig,
    eigenvalue,
    gap_field,
    m11_eps,
    resonance_conductivity,
    resonant_gap_estimate,
)
from . import plotting, validate

FMT = "%.17g"


@dataclass(frozen=True)
class RunConfig:
    """One validated invocation: target, grid, discretization, output.

    Exactly one target kind is enforced by the flag parser; construction
    enforces the numeric invariants (any grid has at least 16 points and
    runs forward, the node count is a power of two in [64, 4096]).
    """

    subcommand: str
    target: object = None
    grid_min: float = 0.0
    grid_max: float = 1.0
    grid_count: int = 16
    im: float = 0.0
    n_nodes: int = 256
    oracle: bool = False
    out: str = None
    plot: bool = False

    def __post_init__(self):
        if self.grid_count < 16:
            raise ValueError("grid count must be at least 16, got %d" % self.grid_count)
        if self.grid_max <= self.grid_min:
            raise ValueError(
                "grid end %g must exceed grid start %g" % (self.grid_max, self.grid_min)
            )
        n = self.n_nodes
        if not (64 <= n <= 4096 and n & (n - 1) == 0):
            raise ValueError("N must be a power of two in [64, 4096], got %d" % n)


# ------------------------------------------------------------ small helpers


def _parse_kv(tokens, spec, parser, what):
    """Parse k=v tokens against a {name: converter} spec; usage-error otherwise."""
    out = {}
    for tok in tokens:
        if "=" not in tok:
            parser.error("%s: expected key=value, got %r" % (what, tok))
        key, _, val = tok.partition("=")
        if key not in spec:
            parser.error(
                "%s: unknown key %r (expect %s)" % (what, key, ", ".join(sorted(spec)))
            )
        try:
            out[key] = spec[key](val)
        except ValueError:
            parser.error("%s: bad value for %s: %r" % (what, key, val))
    return out


def _target(args, parser):
    """Build the one target the invocation names, or usage-error."""
    if (args.algebraic is None) == (args.twodisks is None):
        parser.error("exactly one of --algebraic / --twodisks is required")
    if args.algebraic is not None:
        kv = _parse_kv(
            args.algebraic,
            {"rho0": float, "m": int, "delta": float},
            parser,
            "--algebraic",
        )
        if "m" not in kv:
            parser.error("--algebraic: m=<int> is required")
        return AlgebraicDomain(kv.get("rho0", 0.0), kv["m"], kv.get("delta", 0.0))
    kv = _parse_kv(args.twodisks, {"r": float, "eps": float}, parser, "--twodisks")
    if "eps" not in kv:
        parser.error("--twodisks: eps=<gap> is required")
    return TwoDiskConfig(kv.get("r", 1.0), kv["eps"])


def _target_record(target):
    if isinstance(target, AlgebraicDomain):
        return {
            "kind": "algebraic",
            "rho0": target.rho0,
            "m": target.m,
            "delta": target.delta,
        }
    return {"kind": "twodisks", "r": target.r, "eps": target.eps}


def _run_config(args, parser, target=None, grid=None, im=0.0, default_nodes=256):
    """Assemble the validated RunConfig for this invocation.

    grid is (min, max, count) when the subcommand sweeps one; the node
    count comes from a bare N=... token.  Invariant violations become
    usage errors (synopsis on stderr, exit 2).
    """
    kv = _parse_kv(getattr(args, "params", []) or [], {"N": int}, parser, "N")
    gmin, gmax, count = grid if grid is not None else (0.0, 1.0, 16)
    try:
        return RunConfig(
            subcommand=args.subcommand,
            target=target,
            grid_min=gmin,
            grid_max=gmax,
            grid_count=count,
            im=im,
            n_nodes=kv.get("N", default_nodes),
            oracle=getattr(args, "oracle", False),
            out=args.out,
            plot=args.out is not None and not getattr(args, "no_plot", True),
        )
    except ValueError as exc:
        parser.error(str(exc))


def _curves_of(target, n_nodes):
    if isinstance(target, AlgebraicDomain):
        return [discretize(target, n_nodes)]
    return list(target.curves(n_nodes))


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _figure_path(out_path):
    return os.path.splitext(out_path)[0] + ".png"


def _json_text(obj, indent=0):
    """Render JSON with %.17g floats so identical runs are byte identical."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = [
            "%s  %s: %s" % (pad, json.dumps(str(k)), _json_text(v, indent + 1))
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(rows) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not len(obj):
            return "[]"
        rows = ["%s  %s" % (pad, _json_text(v, indent + 1)) for v in obj]
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return "%d" % obj
    if isinstance(obj, (float, np.floating)):
        return "null" if np.isnan(obj) else FMT % obj
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def _peak_table(peaks):
    return [
        {
            "trace": p.trace,
            "wavelength_nm": p.wavelength,
            "lambda_re": p.lambda_at_peak.real,
            "lambda_im": p.lambda_at_peak.imag,
            "height": p.height,
        }
        for p in peaks
    ]


# -------------------------------------------------------------- subcommands


def _cmd_emit_boundary(args, parser):
    cfg = _run_config(args, parser, target=_target(args, parser))
    curves = _curves_of(cfg.target, cfg.n_nodes)
    buf = io.StringIO()
    for i, cur in enumerate(curves):
        cur.write_csv(buf, header=(i == 0))
    _emit(buf.getvalue(), cfg.out)
    if cfg.plot:
        plotting.save_boundary_plot(curves, _figure_path(cfg.out))
    return 0


def _analytic_eigenvalues(target, n_pairs):
    if isinstance(target, AlgebraicDomain):
        return [p.eigenvalue for p in asymptotic_eigenpairs(target)]
    vals = [eigenvalue(target, n, PLUS) for n in range(1, n_pairs + 1)]
    vals += [eigenvalue(target, n, MINUS) for n in range(1, n_pairs + 1)]
    return sorted(vals, reverse=True)


def _cmd_spectrum(args, parser):
    cfg = _run_config(args, parser, target=_target(args, parser), default_nodes=512)
    if not (args.analytic or args.numeric):
        parser.error("need --analytic, --numeric, or both")
    target = cfg.target
    record = {"target": _target_record(target)}
    analytic = _analytic_eigenvalues(target, args.pairs) if args.analytic else None
    numeric = None
    if args.numeric:
        curves = _curves_of(target, cfg.n_nodes)
        dec = numeric_spectrum(discretize_np(curves), discretize_single_layer(curves))
        record["n_nodes"] = cfg.n_nodes
        numeric = dec.eigenvalues
    if analytic is not None:
        record["analytic"] = list(analytic)
    if analytic is not None and numeric is not None:
        # pair each closed-form eigenvalue with its nearest quadrature value
        paired = [float(numeric[np.argmin(np.abs(numeric - a))]) for a in analytic]
        record["numeric"] = paired
        record["max_pairing_distance"] = float(
            max(abs(a - b) for a, b in zip(analytic, paired))
        )
    elif numeric is not None:
        record["numeric"] = [float(v) for v in numeric]
    _emit(_json_text(record) + "\n", cfg.out)
    return 0


def _cmd_gpt(args, parser):
    cfg = _run_config(
        args,
        parser,
        target=_target(args, parser),
        grid=(args.re_min, args.re_max, args.count),
        im=args.im,
    )
    target = cfg.target
    count = cfg.grid_count
    lams = np.linspace(cfg.grid_min, cfg.grid_max, count) + 1j * cfg.im
    if isinstance(target, AlgebraicDomain):
        if cfg.oracle:
            op = discretize_np(discretize(target, cfg.n_nodes))
            m11 = np.array([gpt_direct(op, l, 1, 1, "cc") for l in lams])
            m22 = (
                np.array([gpt_direct(op, l, 2, 2, "cc") for l in lams])
                if target.m >= 2
                else None
            )
        else:
            m11 = np.array([m11_asymptotic(target, l, allow_even=True) for l in lams])
            m22 = (
                np.array([m22cc_asymptotic(target, l, allow_even=True) for l in lams])
                if target.m >= 2
                else None
            )
    else:
        if cfg.oracle:
            op = discretize_np(target.curves(cfg.n_nodes))
            m11 = np.array([gpt_direct(op, l, 1, 1, "cc") for l in lams])
        else:
            m11 = np.array([m11_eps(target, l) for l in lams])
        m22 = None
    buf = io.StringIO()
    buf.write("lambda_re,lambda_im,m11_re,m11_im,m22cc_re,m22cc_im\n")
    for i in range(count):
        v22 = m22[i] if m22 is not None else complex(np.nan, np.nan)
        buf.write(
            "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n"
            % (lams[i].real, lams[i].imag, m11[i].real, m11[i].imag, v22.real, v22.imag)
        )
    _emit(buf.getvalue(), cfg.out)
    if cfg.plot:
        traces = {"|m11|": m11}
        if m22 is not None:
            traces["|m22cc|"] = m22
        plotting.save_moment_plot(lams.real, traces, _figure_path(cfg.out))
    return 0


def _material_model(args, parser):
    picked = [
        name
        for name, val in (
            ("--drude", args.drude),
            ("--material-config", args.material_config),
            ("--synthetic", args.synthetic),
        )
        if val is not None
    ]
    if len(picked) != 1:
        parser.error("exactly one of --drude / --material-config / --synthetic")
    if args.material_config is not None:
        return parse_material_config(args.material_config)
    if args.drude is not None:
        kv = _parse_kv(
            args.drude,
            {"omega_p": float, "inv_tau": float, "eps_bg": float},
            parser,
            "--drude",
        )
        base = DrudeModel.gold_like()
        return DrudeModel(
            omega_p=kv.get("omega_p", base.omega_p),
            inv_tau=kv.get("inv_tau", base.inv_tau),
            eps_bg=kv.get("eps_bg", base.eps_bg),
            wl_min=args.wl_min,
            wl_max=args.wl_max,
        )
    kv = _parse_kv(
        args.synthetic,
        {"re_start": float, "re_stop": float, "im": float},
        parser,
        "--synthetic",
    )
    if "re_start" not in kv or "re_stop" not in kv:
        parser.error("--synthetic: re_start= and re_stop= are required")
    return SyntheticContrast(
        args.wl_min, args.wl_max, kv["re_start"], kv["re_stop"], im=kv.get("im", 1e-3)
    )


def _cmd_scan(args, parser):
    if args.wl_min <= 0:
        parser.error("need 0 < --wl-min < --wl-max")
    cfg = _run_config(
        args,
        parser,
        target=_target(args, parser),
        grid=(args.wl_min, args.wl_max, args.count),
    )
    model = _material_model(args, parser)
    wl = np.linspace(cfg.grid_min, cfg.grid_max, cfg.grid_count)
    scan = forward_scan(cfg.target, model, wl, oracle=cfg.oracle, n_nodes=cfg.n_nodes)
    buf = io.StringIO()
    scan.write_csv(buf)
    _emit(buf.getvalue(), cfg.out)
    if cfg.plot:
        plotting.save_scan_plot(scan, _figure_path(cfg.out))
    return 0


def _cmd_reconstruct_shape(args, parser):
    scan = ResonanceScan.read_csv(args.scan)
    rec = reconstruct_shape_from_scan(scan, prominence=args.prominence)
    record = {
        "m": rec.m,
        "delta": rec.delta,
        "rho0": rec.rho0,
        "m_real": rec.m_real,
        "residual": rec.residual,
        "peaks": _peak_table(rec.peaks),
    }
    _emit(_json_text(record) + "\n", args.out)
    return 0


def _cmd_reconstruct_gap(args, parser):
    if args.r <= 0:
        parser.error("--r must be positive")
    scan = ResonanceScan.read_csv(args.scan)
    eps = reconstruct_gap_from_scan(scan, args.r)
    record = {
        "eps": eps,
        "r": args.r,
        "peaks": _peak_table(detect_peaks(scan)),
    }
    _emit(_json_text(record) + "\n", args.out)
    return 0


def _cmd_twodisks_spectrum(args, parser):
    pair = TwoDiskConfig(args.r, args.eps)
    cfg = _run_config(args, parser, target=pair)
    if args.pairs < 1:
        parser.error("--pairs must be at least 1")
    buf = io.StringIO()
    buf.write("n,lambda_plus,lambda_minus\n")
    plus, minus = [], []
    for n in range(1, args.pairs + 1):
        plus.append(eigenvalue(pair, n, PLUS))
        minus.append(eigenvalue(pair, n, MINUS))
        buf.write("%d,%.17g,%.17g\n" % (n, plus[-1], minus[-1]))
    _emit(buf.getvalue(), cfg.out)
    if cfg.plot:
        plotting.save_spectrum_plot(plus + minus, None, _figure_path(cfg.out))
    return 0


def _cmd_twodisks_m11(args, parser):
    pair = TwoDiskConfig(args.r, args.eps)
    cfg = _run_config(
        args, parser, target=pair, grid=(args.re_min, args.re_max, args.count),
        im=args.im,
    )
    lams = np.linspace(cfg.grid_min, cfg.grid_max, cfg.grid_count) + 1j * cfg.im
    vals = np.array([m11_eps(pair, l) for l in lams])
    buf = io.StringIO()
    buf.write("lambda_re,lambda_im,m11_re,m11_im\n")
    for i in range(cfg.grid_count):
        buf.write(
            "%.17g,%.17g,%.17g,%.17g\n"
            % (lams[i].real, lams[i].imag, vals[i].real, vals[i].imag)
        )
    _emit(buf.getvalue(), cfg.out)
    if cfg.plot:
        plotting.save_moment_plot(lams.real, {"|m11|": vals}, _figure_path(cfg.out))
    return 0


def _cmd_twodisks_gapfield(args, parser):
    pair = TwoDiskConfig(args.r, args.eps)
    if args.mode < 1:
        parser.error("--mode must be a positive mode order")
    if args.loss_min <= 0:
        parser.error("need 0 < --loss-min < --loss-max")
    cfg = _run_config(
        args, parser, target=pair, grid=(args.loss_min, args.loss_max, args.count)
    )
    offsets = np.geomspace(cfg.grid_min, cfg.grid_max, cfg.grid_count)
    k_res = resonance_conductivity(pair, args.mode)
    fields = np.array([gap_field(pair, k_res + 1j * d, args.e0)[0] for d in offsets])
    estimates = np.array(
        [args.e0 + resonant_gap_estimate(pair, args.mode, d, args.e0) for d in offsets]
    )
    buf = io.StringIO()
    buf.write("im_offset,re_field,im_field,abs_field,abs_estimate\n")
    for i in range(cfg.grid_count):
        buf.write(
            "%.17g,%.17g,%.17g,%.17g,%.17g\n"
            % (
                offsets[i],
                fields[i].real,
                fields[i].imag,
                abs(fields[i]),
                abs(estimates[i]),
            )
        )
    _emit(buf.getvalue(), cfg.out)
    if cfg.plot:
        plotting.save_gapfield_plot(offsets, fields, estimates, _figure_path(cfg.out))
    return 0


def _cmd_validate(args, parser):
    only = None
    if args.only:
        only = [tok for part in args.only for tok in part.split(",") if tok]
        bad = [n for n in only if n not in validate.CHECK_NAMES]
        if bad:
            parser.error(
                "unknown check(s): %s (known: %s)"
                % (", ".join(bad), ", ".join(validate.CHECK_NAMES))
            )
    results = validate.run_all(only)
    print(validate.format_report(results))
    return 0 if all(r.passed for r in results) else 1


# ------------------------------------------------------------------ parser


def _add_target_flags(sub):
    sub.add_argument(
        "--algebraic",
        nargs="+",
        metavar="K=V",
        help="algebraic shape target: rho0=<f> m=<int> delta=<f>",
    )
    sub.add_argument(
        "--twodisks",
        nargs="+",
        metavar="K=V",
        help="disk-pair target: r=<radius> eps=<gap>",
    )


def _add_out_flags(sub, plot=True):
    sub.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    if plot:
        sub.add_argument(
            "--no-plot",
            action="store_true",
            help="skip the PNG figure rendered next to --out",
        )


def _add_params(sub):
    sub.add_argument(
        "params",
        nargs="*",
        metavar="N=...",
        help="extra settings: N=<power of two in [64,4096]> quadrature nodes per curve",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="npspec",
        description="Boundary-flux spectra, polarization moments, resonance "
        "scans, and shape/gap reconstruction for algebraic domains and disk pairs.",
    )
    subs = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")

    sub = subs.add_parser(
        "emit-boundary", help="sample a target boundary to CSV (theta,x,y,...)"
    )
    _add_target_flags(sub)
    _add_out_flags(sub)
    _add_params(sub)
    sub.set_defaults(handler=_cmd_emit_boundary)

    sub = subs.add_parser(
        "spectrum", help="closed-form and/or quadrature eigenvalues as JSON"
    )
    _add_target_flags(sub)
    sub.add_argument("--analytic", action="store_true", help="closed-form eigenvalues")
    sub.add_argument(
        "--numeric", action="store_true", help="dense quadrature eigenvalues"
    )
    sub.add_argument(
        "--pairs",
        type=int,
        default=3,
        help="disk-pair mode orders to list per branch (default 3)",
    )
    _add_out_flags(sub, plot=False)
    _add_params(sub)
    sub.set_defaults(handler=_cmd_spectrum)

    sub = subs.add_parser(
        "gpt", help="first and second polarization moments over a contrast grid"
    )
    _add_target_flags(sub)
    sub.add_argument("--re-min", type=float, default=-0.45, help="grid start (Re lambda)")
    sub.add_argument("--re-max", type=float, default=0.45, help="grid end (Re lambda)")
    sub.add_argument("--count", type=int, default=181, help="grid points (>= 16)")
    sub.add_argument("--im", type=float, default=1e-3, help="constant Im lambda")
    sub.add_argument(
        "--oracle",
        action="store_true",
        help="solve the discretized resolvent instead of the pole formulas",
    )
    _add_out_flags(sub)
    _add_params(sub)
    sub.set_defaults(handler=_cmd_gpt)

    sub = subs.add_parser(
        "scan", help="resonance scan of a target over a wavelength window"
    )
    _add_target_flags(sub)
    sub.add_argument("--wl-min", type=float, default=450.0, help="window start (nm)")
    sub.add_argument("--wl-max", type=float, default=750.0, help="window end (nm)")
    sub.add_argument("--count", type=int, default=601, help="wavelengths (>= 16)")
    sub.add_argument(
        "--drude",
        nargs="*",
        metavar="K=V",
        help="free-electron contrast model: omega_p= inv_tau= eps_bg= "
        "(defaults to the indicative metal)",
    )
    sub.add_argument(
        "--material-config", metavar="PATH", help="contrast model from a config file"
    )
    sub.add_argument(
        "--synthetic",
        nargs="+",
        metavar="K=V",
        help="linear contrast sweep: re_start= re_stop= im=",
    )
    sub.add_argument(
        "--oracle",
        action="store_true",
        help="solve the discretized resolvent per wavelength",
    )
    _add_out_flags(sub)
    _add_params(sub)
    sub.set_defaults(handler=_cmd_scan)

    sub = subs.add_parser(
        "reconstruct-shape", help="recover (m, delta, rho0) from a scan CSV"
    )
    sub.add_argument("--scan", required=True, metavar="CSV", help="scan file to read")
    sub.add_argument(
        "--prominence", type=float, default=None, help="peak prominence override"
    )
    _add_out_flags(sub, plot=False)
    sub.set_defaults(handler=_cmd_reconstruct_shape)

    sub = subs.add_parser(
        "reconstruct-gap", help="recover the disk-pair gap from a scan CSV"
    )
    sub.add_argument("--r", type=float, required=True, help="known disk radius")
    sub.add_argument("--scan", required=True, metavar="CSV", help="scan file to read")
    _add_out_flags(sub, plot=False)
    sub.set_defaults(handler=_cmd_reconstruct_gap)

    sub = subs.add_parser("twodisks", help="disk-pair closed-form tables")
    twosubs = sub.add_subparsers(dest="twodisks_cmd", metavar="TABLE")

    tsub = twosubs.add_parser("spectrum", help="exact eigenvalue pairs as CSV")
    tsub.add_argument("--r", type=float, default=1.0, help="disk radius")
    tsub.add_argument("--eps", type=float, required=True, help="gap width")
    tsub.add_argument("--pairs", type=int, default=5, help="mode orders per branch")
    _add_out_flags(tsub)
    tsub.set_defaults(handler=_cmd_twodisks_spectrum)

    tsub = twosubs.add_parser("m11", help="exact-series first moment over a grid")
    tsub.add_argument("--r", type=float, default=1.0, help="disk radius")
    tsub.add_argument("--eps", type=float, required=True, help="gap width")
    tsub.add_argument("--re-min", type=float, default=-0.45, help="grid start")
    tsub.add_argument("--re-max", type=float, default=0.45, help="grid end")
    tsub.add_argument("--count", type=int, default=181, help="grid points (>= 16)")
    tsub.add_argument("--im", type=float, default=1e-3, help="constant Im lambda")
    _add_out_flags(tsub)
    tsub.set_defaults(handler=_cmd_twodisks_m11)

    tsub = twosubs.add_parser(
        "gapfield", help="gap-midpoint field vs loss offset at resonance"
    )
    tsub.add_argument("--r", type=float, default=1.0, help="disk radius")
    tsub.add_argument("--eps", type=float, required=True, help="gap width")
    tsub.add_argument("--mode", type=int, default=1, help="resonant mode order")
    tsub.add_argument("--e0", type=float, default=1.0, help="incident field strength")
    tsub.add_argument("--loss-min", type=float, default=1e-4, help="smallest offset")
    tsub.add_argument("--loss-max", type=float, default=1e-1, help="largest offset")
    tsub.add_argument("--count", type=int, default=49, help="grid points (>= 16)")
    _add_out_flags(tsub)
    tsub.set_defaults(handler=_cmd_twodisks_gapfield)

    sub = subs.add_parser(
        "validate", help="run the end-to-end check suite and print a table"
    )
    sub.add_argument(
        "--only",
        action="append",
        metavar="NAME[,NAME...]",
        help="restrict to named checks: %s" % ", ".join(validate.CHECK_NAMES),
    )
    sub.set_defaults(handler=_cmd_validate)

    return parser


def run(argv=None) -> int:
    """Parse argv, dispatch, and map failures to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "subcommand", None) == "twodisks" and not getattr(
            args, "twodisks_cmd", None
        ):
            parser.error("twodisks needs one of: spectrum, m11, gapfield")
        if getattr(args, "handler", None) is None:
            parser.error("a subcommand is required")
        return args.handler(args, parser)
    except SystemExit as exc:
        # argparse/--help and parser.error() exits carry their own code
        return int(exc.code or 0)
    except (NPSpecError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def main():
    sys.exit(run())
